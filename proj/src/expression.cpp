#include "fbvp/expression.hpp"

#include <charconv>
#include <cctype>
#include <cmath>
#include <numbers>
#include <utility>

namespace fbvp {

namespace detail {

enum class NodeKind { Number, Variable, Pi, Euler, Negate, Add, Sub, Mul, Div, Pow, Call };
enum class Function { Sin, Cos, Exp, Log, Sqrt };

struct ExprNode {
    NodeKind kind = NodeKind::Number;
    double value = 0.0;
    Function function = Function::Sin;
    std::shared_ptr<const ExprNode> lhs;
    std::shared_ptr<const ExprNode> rhs;
};

}  // namespace detail

namespace {

using detail::ExprNode;
using detail::Function;
using detail::NodeKind;
using NodePtr = std::shared_ptr<const ExprNode>;

NodePtr make_leaf(NodeKind kind, double value = 0.0) {
    auto n = std::make_shared<ExprNode>();
    n->kind = kind;
    n->value = value;
    return n;
}

NodePtr make_node(NodeKind kind, NodePtr lhs, NodePtr rhs = nullptr) {
    auto n = std::make_shared<ExprNode>();
    n->kind = kind;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

NodePtr make_call(Function f, NodePtr arg) {
    auto n = std::make_shared<ExprNode>();
    n->kind = NodeKind::Call;
    n->function = f;
    n->lhs = std::move(arg);
    return n;
}

const char* function_name(Function f) {
    switch (f) {
        case Function::Sin: return "sin";
        case Function::Cos: return "cos";
        case Function::Exp: return "exp";
        case Function::Log: return "log";
        case Function::Sqrt: return "sqrt";
    }
    return "?";
}

// ---------------------------------------------------------------- printing

enum Precedence { kSum = 1, kProduct = 2, kUnary = 3, kPower = 4, kAtom = 5 };

std::string format_number(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

std::pair<std::string, int> print(const ExprNode& n);

std::string wrap(const ExprNode& n, int min_precedence) {
    auto [text, prec] = print(n);
    return prec < min_precedence ? "(" + text + ")" : text;
}

std::pair<std::string, int> print(const ExprNode& n) {
    switch (n.kind) {
        case NodeKind::Number:
            return {format_number(n.value), n.value < 0 || std::signbit(n.value) ? kUnary : kAtom};
        case NodeKind::Variable: return {"t", kAtom};
        case NodeKind::Pi: return {"pi", kAtom};
        case NodeKind::Euler: return {"e", kAtom};
        case NodeKind::Negate: return {"-" + wrap(*n.lhs, kUnary), kUnary};
        case NodeKind::Add: return {wrap(*n.lhs, kSum) + " + " + wrap(*n.rhs, kSum + 1), kSum};
        case NodeKind::Sub: return {wrap(*n.lhs, kSum) + " - " + wrap(*n.rhs, kSum + 1), kSum};
        case NodeKind::Mul:
            return {wrap(*n.lhs, kProduct) + "*" + wrap(*n.rhs, kProduct + 1), kProduct};
        case NodeKind::Div:
            return {wrap(*n.lhs, kProduct) + "/" + wrap(*n.rhs, kProduct + 1), kProduct};
        case NodeKind::Pow: return {wrap(*n.lhs, kAtom) + "^" + wrap(*n.rhs, kUnary), kPower};
        case NodeKind::Call:
            return {std::string(function_name(n.function)) + "(" + print(*n.lhs).first + ")", kAtom};
    }
    return {"?", kAtom};
}

// ---------------------------------------------------------------- evaluation

double checked(double result, const ExprNode& n, double t, const char* what = nullptr) {
    if (!std::isfinite(result) || what != nullptr) {
        std::string message = what ? what : "non-finite result";
        throw EvaluationError(message + " in '" + print(n).first + "' at t = " + format_number(t));
    }
    return result;
}

double eval(const ExprNode& n, double t) {
    switch (n.kind) {
        case NodeKind::Number: return n.value;
        case NodeKind::Variable: return t;
        case NodeKind::Pi: return std::numbers::pi;
        case NodeKind::Euler: return std::numbers::e;
        case NodeKind::Negate: return -eval(*n.lhs, t);
        case NodeKind::Add: return checked(eval(*n.lhs, t) + eval(*n.rhs, t), n, t);
        case NodeKind::Sub: return checked(eval(*n.lhs, t) - eval(*n.rhs, t), n, t);
        case NodeKind::Mul: return checked(eval(*n.lhs, t) * eval(*n.rhs, t), n, t);
        case NodeKind::Div: {
            const double num = eval(*n.lhs, t);
            const double den = eval(*n.rhs, t);
            if (den == 0.0) return checked(0.0, n, t, "division by zero");
            return checked(num / den, n, t);
        }
        case NodeKind::Pow: return checked(std::pow(eval(*n.lhs, t), eval(*n.rhs, t)), n, t);
        case NodeKind::Call: {
            const double x = eval(*n.lhs, t);
            switch (n.function) {
                case Function::Sin: return std::sin(x);
                case Function::Cos: return std::cos(x);
                case Function::Exp: return checked(std::exp(x), n, t);
                case Function::Log:
                    if (x <= 0.0) return checked(0.0, n, t, "log of non-positive value");
                    return std::log(x);
                case Function::Sqrt:
                    if (x < 0.0) return checked(0.0, n, t, "sqrt of negative value");
                    return std::sqrt(x);
            }
        }
    }
    return 0.0;
}

// ---------------------------------------------------------------- parsing

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    NodePtr parse() {
        skip_space();
        if (at_end()) fail("empty expression");
        auto root = sum();
        skip_space();
        if (!at_end()) fail(std::string("unexpected character '") + text_[pos_] + "'");
        return root;
    }

private:
    [[noreturn]] void fail(const std::string& message) const {
        throw ExpressionSyntaxError(message + " at position " + std::to_string(pos_), pos_);
    }

    bool at_end() const { return pos_ >= text_.size(); }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (!at_end() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    NodePtr sum() {
        auto lhs = product();
        for (;;) {
            if (accept('+')) {
                lhs = make_node(NodeKind::Add, lhs, product());
            } else if (accept('-')) {
                lhs = make_node(NodeKind::Sub, lhs, product());
            } else {
                return lhs;
            }
        }
    }

    NodePtr product() {
        auto lhs = unary();
        for (;;) {
            if (accept('*')) {
                lhs = make_node(NodeKind::Mul, lhs, unary());
            } else if (accept('/')) {
                lhs = make_node(NodeKind::Div, lhs, unary());
            } else {
                return lhs;
            }
        }
    }

    NodePtr unary() {
        if (accept('-')) return make_node(NodeKind::Negate, unary());
        if (accept('+')) return unary();
        return power();
    }

    NodePtr power() {
        auto base = primary();
        if (accept('^')) return make_node(NodeKind::Pow, base, unary());
        return base;
    }

    NodePtr primary() {
        skip_space();
        if (at_end()) fail("unexpected end of expression");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        if (accept('(')) {
            auto inner = sum();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    NodePtr number() {
        const std::size_t start = pos_;
        auto digits = [&] {
            const std::size_t from = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return pos_ > from;
        };
        bool any = digits();
        if (!at_end() && text_[pos_] == '.') {
            ++pos_;
            any = digits() || any;
        }
        if (!any) {
            pos_ = start;
            fail("malformed number");
        }
        // An exponent is only consumed when digits follow, so "2*e" and "2e3" both work.
        if (!at_end() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t look = pos_ + 1;
            if (look < text_.size() && (text_[look] == '+' || text_[look] == '-')) ++look;
            if (look < text_.size() && std::isdigit(static_cast<unsigned char>(text_[look]))) {
                pos_ = look;
                digits();
            }
        }
        double value = 0.0;
        const char* first = text_.data() + start;
        const char* last = text_.data() + pos_;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
            pos_ = start;
            fail("malformed number");
        }
        return make_leaf(NodeKind::Number, value);
    }

    NodePtr identifier() {
        const std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
        }
        const std::string_view name = text_.substr(start, pos_ - start);
        if (name == "t") return make_leaf(NodeKind::Variable);
        if (name == "pi") return make_leaf(NodeKind::Pi);
        if (name == "e") return make_leaf(NodeKind::Euler);

        Function f;
        if (name == "sin") {
            f = Function::Sin;
        } else if (name == "cos") {
            f = Function::Cos;
        } else if (name == "exp") {
            f = Function::Exp;
        } else if (name == "log") {
            f = Function::Log;
        } else if (name == "sqrt") {
            f = Function::Sqrt;
        } else {
            throw UnknownIdentifierError("unknown identifier '" + std::string(name) +
                                             "' at position " + std::to_string(start),
                                         start);
        }
        if (!accept('(')) fail("expected '(' after function name '" + std::string(name) + "'");
        auto arg = sum();
        if (!accept(')')) fail("expected ')'");
        return make_call(f, std::move(arg));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

ExpressionSyntaxError::ExpressionSyntaxError(const std::string& message, std::size_t position)
    : ValidationError(message), position_(position) {}

Expression::Expression() : root_(make_leaf(NodeKind::Number, 0.0)) {}

Expression::Expression(std::shared_ptr<const detail::ExprNode> root) : root_(std::move(root)) {}

Expression Expression::constant(double value) {
    if (!std::isfinite(value)) throw ValidationError("expression constant must be finite");
    return Expression(make_leaf(NodeKind::Number, value));
}

double Expression::evaluate(double t) const { return eval(*root_, t); }

std::string Expression::to_string() const { return print(*root_).first; }

bool Expression::is_constant() const {
    auto has_variable = [](auto& self, const ExprNode& n) -> bool {
        if (n.kind == NodeKind::Variable) return true;
        return (n.lhs && self(self, *n.lhs)) || (n.rhs && self(self, *n.rhs));
    };
    return !has_variable(has_variable, *root_);
}

Expression parse_expression(std::string_view text) { return Expression(Parser(text).parse()); }

}  // namespace fbvp
