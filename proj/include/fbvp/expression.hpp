#pragma once

#include "fbvp/errors.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

namespace fbvp {

/// Raised by parse_expression; position() is the 0-based character offset.
class ExpressionSyntaxError : public ValidationError {
public:
    ExpressionSyntaxError(const std::string& message, std::size_t position);
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// An identifier other than t, pi, e or a supported function name.
class UnknownIdentifierError : public ExpressionSyntaxError {
public:
    using ExpressionSyntaxError::ExpressionSyntaxError;
};

/// Raised by Expression::evaluate for division by zero, log of a non-positive
/// value, sqrt of a negative value, or any other non-finite result.
class EvaluationError : public Error {
public:
    using Error::Error;
};

namespace detail {
struct ExprNode;
}

/// Immutable arithmetic expression in the single variable t.
///
/// Grammar (lowest to highest precedence):
///   sum     := product (('+' | '-') product)*
///   product := unary (('*' | '/') unary)*
///   unary   := ('-' | '+') unary | power
///   power   := primary ('^' unary)?          right associative
///   primary := number | 't' | 'pi' | 'e' | func '(' sum ')' | '(' sum ')'
///   func    := sin | cos | exp | log | sqrt
///
/// so "-2^2" is -(2^2) and "2^3^2" is 2^(3^2).
class Expression {
public:
    /// The constant 0.
    Expression();

    static Expression constant(double value);

    double evaluate(double t) const;

    /// Canonical text form; parsing it yields an equivalent expression.
    std::string to_string() const;

    bool is_constant() const;

private:
    friend Expression parse_expression(std::string_view);
    explicit Expression(std::shared_ptr<const detail::ExprNode> root);

    std::shared_ptr<const detail::ExprNode> root_;
};

Expression parse_expression(std::string_view text);

}  // namespace fbvp
