#include "fbvp/problem_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace fbvp {

namespace {

// Integral values print without a fractional part.
Json number_json(double v) {
    if (v == std::trunc(v) && std::abs(v) < 1e15) return static_cast<long long>(v);
    return v;
}

Json rounded(double v) { return std::strtod(format_number(v).c_str(), nullptr); }

const Json& field(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object()) throw SchemaError(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(path + "." + key, "missing required field");
    return *it;
}

double number_at(const Json& j, const char* key, const std::string& path) {
    const Json& v = field(j, key, path);
    if (!v.is_number()) throw SchemaError(path + "." + key, "expected a number");
    return v.get<double>();
}

std::vector<double> numbers_at(const Json& j, const char* key, const std::string& path) {
    const Json& v = field(j, key, path);
    const std::string here = path + "." + key;
    if (!v.is_array()) throw SchemaError(here, "expected an array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_number()) throw SchemaError(here + "[" + std::to_string(i) + "]", "expected a number");
        out.push_back(v[i].get<double>());
    }
    return out;
}

Expression expression_at(const Json& v, const std::string& path) {
    if (!v.is_string()) throw SchemaError(path, "expected an expression string");
    try {
        return parse_expression(v.get<std::string>());
    } catch (const UnknownIdentifierError& e) {
        throw UnknownIdentifierError(path + ": " + e.what(), e.position());
    } catch (const ExpressionSyntaxError& e) {
        throw ExpressionSyntaxError(path + ": " + e.what(), e.position());
    }
}

Json grid_json(const TimeGrid& grid) {
    return {{"t0", rounded(grid.t0())}, {"T", rounded(grid.t_end())}, {"points", grid.num_points()}};
}

}  // namespace

SchemaError::SchemaError(const std::string& path, const std::string& message)
    : ValidationError(path + ": " + message), path_(path) {}

std::string format_number(double value) {
    if (value == 0.0) value = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

Json fuzzy_to_json(const FuzzyNumber& u) {
    if (const auto* tri = std::get_if<TriangularFuzzyNumber>(&u)) {
        return {{"type", "triangular"},
                {"l", number_json(tri->left())},
                {"m", number_json(tri->peak())},
                {"r", number_json(tri->right())}};
    }
    const auto& p = std::get<ParametricFuzzyNumber>(u);
    Json alphas = Json::array(), lower = Json::array(), upper = Json::array();
    for (double a : p.alphas()) alphas.push_back(number_json(a));
    for (double v : p.lower()) lower.push_back(number_json(v));
    for (double v : p.upper()) upper.push_back(number_json(v));
    return {{"type", "parametric"}, {"alphas", alphas}, {"lower", lower}, {"upper", upper}};
}

FuzzyNumber fuzzy_from_json(const Json& j, const std::string& path) {
    const Json& type = field(j, "type", path);
    if (!type.is_string()) throw SchemaError(path + ".type", "expected a string");
    const auto kind = type.get<std::string>();
    try {
        if (kind == "triangular") {
            return TriangularFuzzyNumber(number_at(j, "l", path), number_at(j, "m", path),
                                         number_at(j, "r", path));
        }
        if (kind == "parametric") {
            return ParametricFuzzyNumber(numbers_at(j, "alphas", path), numbers_at(j, "lower", path),
                                         numbers_at(j, "upper", path));
        }
    } catch (const FuzzyNumberError& e) {
        throw SchemaError(path, e.what());
    }
    throw SchemaError(path + ".type", "unknown fuzzy number type '" + kind + "'");
}

ProblemFile problem_from_json(const Json& j, std::size_t steps) {
    const Json& eq = field(j, "equation", "$");
    const Json& order_json = field(eq, "order", "$.equation");
    if (!order_json.is_number_integer() || order_json.get<long long>() < 1) {
        throw SchemaError("$.equation.order", "expected a positive integer");
    }
    const auto order = order_json.get<long long>();
    const Json& coeffs_json = field(eq, "coeffs", "$.equation");
    if (!coeffs_json.is_array() || static_cast<long long>(coeffs_json.size()) != order) {
        throw SchemaError("$.equation.coeffs",
                          "expected an array of " + std::to_string(order) + " expression strings");
    }
    std::vector<Expression> coeffs;
    for (std::size_t i = 0; i < coeffs_json.size(); ++i) {
        coeffs.push_back(expression_at(coeffs_json[i], "$.equation.coeffs[" + std::to_string(i) + "]"));
    }
    Expression forcing = expression_at(field(eq, "forcing", "$.equation"), "$.equation.forcing");

    const Json& interval = field(j, "interval", "$");
    const double t0 = number_at(interval, "t0", "$.interval");
    const double t_end = number_at(interval, "T", "$.interval");
    if (!(t_end > t0)) throw SchemaError("$.interval", "requires t0 < T");
    if (steps < 1) throw ValidationError("integration needs at least one step");

    const Json& conds = field(j, "conditions", "$");
    if (!conds.is_array()) throw SchemaError("$.conditions", "expected an array");
    if (static_cast<long long>(conds.size()) != order) {
        throw SchemaError("$.conditions", "expected " + std::to_string(order) +
                                              " conditions for an order-" + std::to_string(order) +
                                              " equation, got " + std::to_string(conds.size()));
    }
    std::vector<BoundaryCondition> conditions;
    for (std::size_t i = 0; i < conds.size(); ++i) {
        const std::string path = "$.conditions[" + std::to_string(i) + "]";
        if (conds[i].is_object() && conds[i].contains("derivative") && conds[i]["derivative"] != 0) {
            throw SchemaError(path + ".derivative", "only value conditions x(t) = value are supported");
        }
        const double t = number_at(conds[i], "t", path);
        conditions.push_back({t, fuzzy_from_json(field(conds[i], "value", path), path + ".value")});
    }

    ProblemFile file{FuzzyBvp{LinearOde(std::move(coeffs), std::move(forcing)), std::move(conditions),
                              TimeGrid(t0, t_end, steps + 1)},
                     {}};
    try {
        file.problem.validate();
    } catch (const SchemaError&) {
        throw;
    } catch (const ValidationError& e) {
        throw SchemaError("$.conditions", e.what());
    }

    if (auto it = j.find("output"); it != j.end()) {
        if (it->contains("points")) {
            const Json& p = (*it)["points"];
            if (!p.is_number_integer() || p.get<long long>() < 2) {
                throw SchemaError("$.output.points", "expected an integer >= 2");
            }
            file.output.points = p.get<std::size_t>();
        }
        if (it->contains("alphas")) {
            try {
                file.output.alphas = normalize_alphas(numbers_at(*it, "alphas", "$.output"));
            } catch (const DomainError& e) {
                throw SchemaError("$.output.alphas", e.what());
            }
        }
    }
    return file;
}

Json problem_to_json(const ProblemFile& file) {
    const auto& p = file.problem;
    Json coeffs = Json::array();
    for (const auto& c : p.ode.coeffs) coeffs.push_back(c.to_string());
    Json conditions = Json::array();
    for (const auto& c : p.conditions) {
        conditions.push_back({{"t", number_json(c.t)}, {"value", fuzzy_to_json(c.value)}});
    }
    Json alphas = Json::array();
    for (double a : file.output.alphas) alphas.push_back(number_json(a));
    return {{"equation",
             {{"order", p.ode.order()}, {"coeffs", coeffs}, {"forcing", p.ode.forcing.to_string()}}},
            {"interval", {{"t0", number_json(p.grid.t0())}, {"T", number_json(p.grid.t_end())}}},
            {"conditions", conditions},
            {"output", {{"points", file.output.points}, {"alphas", alphas}}}};
}

ProblemFile load_problem(const std::string& path, std::size_t steps) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open problem file '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw SchemaError("$", std::string("invalid JSON: ") + e.what());
    }
    return problem_from_json(j, steps);
}

ProblemFile builtin_example(int which) {
    auto expr = [](const char* s) { return parse_expression(s); };
    switch (which) {
        case 1:
            return {FuzzyBvp{LinearOde({expr("-3"), expr("2")}, expr("4*t - 6")),
                             {{0.0, TriangularFuzzyNumber(1.5, 2.0, 3.0)},
                              {1.0, TriangularFuzzyNumber(2.0, 3.0, 4.0)}},
                             TimeGrid(0.0, 1.0, kDefaultSteps + 1)},
                    {101, {0.0, 0.5, 1.0}}};
        case 2:
            return {FuzzyBvp{LinearOde({expr("0"), expr("16")}, expr("47 - 8*t^2")),
                             {{0.0, TriangularFuzzyNumber(2.0, 3.0, 3.5)},
                              {2.0, TriangularFuzzyNumber(0.5, 1.0, 1.5)}},
                             TimeGrid(0.0, 2.0, kDefaultSteps + 1)},
                    {201, {0.0, 0.6, 1.0}}};
        default:
            throw DomainError("unknown example " + std::to_string(which) + " (expected 1 or 2)");
    }
}

std::string dump_problem(const ProblemFile& file) { return problem_to_json(file).dump(2) + "\n"; }

void write_band_csv(std::ostream& out, const SolutionBand& band) {
    const auto& alphas = band.alphas();
    out << "t";
    for (double a : alphas) out << ",lower_" << format_number(a) << ",upper_" << format_number(a);
    out << "\n";
    for (std::size_t i = 0; i < band.grid().num_points(); ++i) {
        out << format_number(band.grid().node(i));
        for (std::size_t k = 0; k < alphas.size(); ++k) {
            const Interval& cut = band.at(i, k);
            out << ',' << format_number(cut.lo()) << ',' << format_number(cut.hi());
        }
        out << "\n";
    }
}

Json band_to_json(const SolutionBand& band) {
    Json alphas = Json::array();
    for (double a : band.alphas()) alphas.push_back(rounded(a));
    Json nodes = Json::array();
    for (std::size_t i = 0; i < band.grid().num_points(); ++i) {
        Json lower = Json::array(), upper = Json::array();
        for (std::size_t k = 0; k < band.alphas().size(); ++k) {
            lower.push_back(rounded(band.at(i, k).lo()));
            upper.push_back(rounded(band.at(i, k).hi()));
        }
        nodes.push_back({{"t", rounded(band.grid().node(i))}, {"lower", lower}, {"upper", upper}});
    }
    return {{"grid", grid_json(band.grid())}, {"alphas", alphas}, {"nodes", nodes}};
}

Json report_to_json(const oracle::EnvelopeReport& report, double tolerance, int samples, int mesh) {
    Json nodes = Json::array();
    for (const auto& n : report.nodes) {
        nodes.push_back({{"t", rounded(n.t)},
                         {"formula", {rounded(n.formula.lo()), rounded(n.formula.hi())}},
                         {"oracle", {rounded(n.oracle.lo()), rounded(n.oracle.hi())}},
                         {"lower_deviation", rounded(n.lower_deviation)},
                         {"upper_deviation", rounded(n.upper_deviation)}});
    }
    return {{"alpha", rounded(report.alpha)},
            {"samples_per_axis", samples},
            {"mesh_interior_nodes", mesh},
            {"tolerance", rounded(tolerance)},
            {"max_deviation", rounded(report.max_deviation)},
            {"passed", report.max_deviation <= tolerance},
            {"nodes", nodes}};
}

}  // namespace fbvp
