#include "fbvp/fuzzy_solution.hpp"

#include "closed_forms.hpp"

#include <doctest.h>

#include <cmath>

using namespace fbvp;
using doctest::Approx;

namespace {

LinearOde ode(std::vector<const char*> coeffs, const char* forcing) {
    std::vector<Expression> parsed;
    for (const char* c : coeffs) parsed.push_back(parse_expression(c));
    return {std::move(parsed), parse_expression(forcing)};
}

FuzzyBvp example1() {
    return {ode({"-3", "2"}, "4*t - 6"),
            {{0, TriangularFuzzyNumber(1.5, 2, 3)}, {1, TriangularFuzzyNumber(2, 3, 4)}},
            TimeGrid(0, 1, kDefaultSteps + 1)};
}

FuzzyBvp example2() {
    return {ode({"0", "16"}, "47 - 8*t^2"),
            {{0, TriangularFuzzyNumber(2, 3, 3.5)}, {2, TriangularFuzzyNumber(0.5, 1, 1.5)}},
            TimeGrid(0, 2, kDefaultSteps + 1)};
}

// Third-order problem with three interior/end conditions, one of them parametric.
FuzzyBvp three_point() {
    return {ode({"0.5", "-t", "1"}, "cos(t)"),
            {{0, TriangularFuzzyNumber(-1, 0, 0.5)},
             {0.4, ParametricFuzzyNumber::from_branches([](double r) { return 1 - 0.3 * (1 - r * r); },
                                                        [](double r) { return 1 + 0.2 * (1 - r); }, 11)},
             {1.5, TriangularFuzzyNumber(2, 2.5, 2.6)}},
            TimeGrid(0, 1.5, kDefaultSteps + 1)};
}

// x~(t) in closed form for the two examples, evaluated with triangular
// arithmetic (scale then add) on the printed weights.
Interval example1_closed(double t, double alpha) {
    const auto w = closed_form::ex1::weights(t);
    const auto x = add(TriangularFuzzyNumber::crisp(2 * t),
                       add(scale(w[0], TriangularFuzzyNumber(1.5, 2, 3)), scale(w[1], TriangularFuzzyNumber(0, 1, 2))));
    return alpha_cut(x, alpha);
}

Interval example2_closed(double t, double alpha) {
    const auto w = closed_form::ex2::weights(t);
    const auto x = add(TriangularFuzzyNumber::crisp(closed_form::ex2::crisp(t)),
                       add(scale(w[0], TriangularFuzzyNumber(-1, 0, 0.5)), scale(w[1], TriangularFuzzyNumber(-0.5, 0, 0.5))));
    return alpha_cut(x, alpha);
}

std::vector<double> levels(int count) {
    std::vector<double> out;
    for (int k = 0; k < count; ++k) out.push_back(static_cast<double>(k) / (count - 1));
    return out;
}

}  // namespace

TEST_CASE("decompose") {
    const auto d1 = decompose(example1());
    CHECK(d1.crisp_values == std::vector<double>{2, 3});
    CHECK(std::get<TriangularFuzzyNumber>(d1.uncertain[0]) == TriangularFuzzyNumber(-0.5, 0, 1));
    CHECK(std::get<TriangularFuzzyNumber>(d1.uncertain[1]) == TriangularFuzzyNumber(-1, 0, 1));

    const auto d2 = decompose(example2());
    CHECK(d2.crisp_values == std::vector<double>{3, 1});
    CHECK(std::get<TriangularFuzzyNumber>(d2.uncertain[0]) == TriangularFuzzyNumber(-1, 0, 0.5));
    CHECK(std::get<TriangularFuzzyNumber>(d2.uncertain[1]) == TriangularFuzzyNumber(-0.5, 0, 0.5));

    auto crisp = example1();
    crisp.conditions = {{0, TriangularFuzzyNumber::crisp(5)}, {1, TriangularFuzzyNumber::crisp(7)}};
    const auto d3 = decompose(crisp);
    CHECK(d3.crisp_values == std::vector<double>{5, 7});
    CHECK(std::get<TriangularFuzzyNumber>(d3.uncertain[1]) == TriangularFuzzyNumber(0, 0, 0));
}

TEST_CASE("problem validation") {
    auto p = example1();
    p.conditions.pop_back();
    CHECK_THROWS_AS(solve(p), ValidationError);
    p = example1();
    p.conditions[1].t = 0;
    CHECK_THROWS_AS(solve(p), ValidationError);
    p = example1();
    p.conditions[1].t = 1.5;
    CHECK_THROWS_AS(solve(p), ValidationError);
}

TEST_CASE("assemble") {
    SUBCASE("example 1 matches the closed display form") {
        const auto sol = solve(example1());
        for (double t : {0.0, 0.1, 0.37, 0.5, 0.9, 1.0}) {
            for (double a : {0.0, 0.5, 1.0}) {
                const auto got = sol.value_at(t, a);
                const auto want = example1_closed(t, a);
                CHECK(std::abs(got.lo() - want.lo()) <= 1e-8);
                CHECK(std::abs(got.hi() - want.hi()) <= 1e-8);
            }
        }
    }
    SUBCASE("example 2 matches the closed display form") {
        const auto sol = solve(example2());
        for (double t : {0.0, 0.3, 1.0, 1.41, 1.9, 2.0}) {
            for (double a : {0.0, 0.6, 1.0}) {
                const auto got = sol.value_at(t, a);
                const auto want = example2_closed(t, a);
                CHECK(std::abs(got.lo() - want.lo()) <= 1e-8);
                CHECK(std::abs(got.hi() - want.hi()) <= 1e-8);
            }
        }
    }
    SUBCASE("zero uncertain parts degenerate to the crisp trajectory") {
        auto p = example1();
        p.conditions = {{0, TriangularFuzzyNumber::crisp(2)}, {1, TriangularFuzzyNumber::crisp(3)}};
        const auto sol = solve(p);
        for (std::size_t i = 0; i < sol.grid().num_points(); i += 50) {
            for (double a : {0.0, 0.3, 1.0}) {
                const auto cut = sol.value_at_node(i, a);
                CHECK(cut.lo() == sol.crisp().value(i));
                CHECK(cut.hi() == sol.crisp().value(i));
            }
        }
    }
    SUBCASE("grid mismatch") {
        const auto p = example1();
        const auto parts = decompose(p);
        auto weights = make_weight_basis(p.ode, p.condition_points(), p.grid);
        const TimeGrid other(0, 1, 11);
        const std::vector<double> pts{0, 1};
        auto crisp = solve_crisp_bvp(p.ode, pts, parts.crisp_values, other);
        CHECK_THROWS_AS(assemble(std::move(crisp), std::move(weights), parts), GridMismatch);
    }
}

TEST_CASE("value_at") {
    const auto sol1 = solve(example1());
    CHECK(sol1.value_at(0, 0) == Interval(1.5, 3));

    const auto sol2 = solve(example2());
    // w1(1) = w2(1) = sin 4 / sin 8 < 0, so the lower end takes the upper boundary limits.
    const auto w = closed_form::ex2::weights(1.0);
    const double lo = 2.5 + 0.5 * w[0] + 0.5 * w[1];
    const double hi = 2.5 - 1.0 * w[0] - 0.5 * w[1];
    const auto cut = sol2.value_at(1.0, 0.0);
    CHECK(std::abs(cut.lo() - lo) <= 1e-8);
    CHECK(std::abs(cut.hi() - hi) <= 1e-8);
    CHECK(cut.lo() == Approx(1.735057).epsilon(1e-6));
    CHECK(cut.hi() == Approx(3.647414).epsilon(1e-6));

    for (double t : {0.0, 0.77, 2.0}) {
        const auto vertex_cut = sol2.value_at(t, 1.0);
        CHECK(vertex_cut.lo() == sol2.crisp().value_at(t));
        CHECK(vertex_cut.hi() == sol2.crisp().value_at(t));
    }
    CHECK_THROWS_AS(sol2.value_at(2.5, 0.0), DomainError);
    CHECK_THROWS_AS(sol2.value_at(1.0, 1.5), DomainError);
}

TEST_CASE("band") {
    SUBCASE("example 1 borders are the extreme crisp solutions") {
        const auto p = example1();
        const auto sol = solve(p);
        const std::vector<double> alphas{0.0};
        const auto b = band(sol, alphas);
        const auto pts = p.condition_points();
        const std::vector<double> upper_values{3, 4}, lower_values{1.5, 2};
        const auto upper = solve_crisp_bvp(p.ode, pts, upper_values, p.grid);
        const auto lower = solve_crisp_bvp(p.ode, pts, lower_values, p.grid);
        for (std::size_t i = 0; i < p.grid.num_points(); ++i) {
            CHECK(std::abs(b.at(i, 0).hi() - upper.value(i)) <= 1e-9);
            CHECK(std::abs(b.at(i, 0).lo() - lower.value(i)) <= 1e-9);
        }
    }
    SUBCASE("example 1 half-level band is half as wide") {
        const auto sol = solve(example1());
        const std::vector<double> alphas{0.5, 0.0, 0.5};
        const auto b = band(sol, alphas);
        REQUIRE(b.alphas() == std::vector<double>{0.0, 0.5});
        for (std::size_t i = 0; i < b.grid().num_points(); ++i) {
            CHECK(b.at(i, 1).width() == Approx(0.5 * b.at(i, 0).width()).epsilon(1e-9));
        }
    }
    SUBCASE("example 2 endpoints trade roles where w1 changes sign") {
        const auto sol = solve(example2());
        const std::vector<double> alphas{0.0};
        const auto b = band(sol, alphas);
        bool saw_positive = false, saw_negative = false;
        for (std::size_t i = 1; i + 1 < b.grid().num_points(); ++i) {
            const auto w = sol.weights().at_node(i);
            const double x = sol.crisp().value(i);
            // Upper end uses a_hi = 0.5 where w1 > 0 and a_lo = -1 where w1 < 0.
            const double a_up = w[0] > 0 ? 0.5 : -1.0;
            const double b_up = w[1] > 0 ? 0.5 : -0.5;
            CHECK(b.at(i, 0).hi() == Approx(x + a_up * w[0] + b_up * w[1]).epsilon(1e-12));
            saw_positive |= w[0] > 0;
            saw_negative |= w[0] < 0;
        }
        CHECK(saw_positive);
        CHECK(saw_negative);
    }
    SUBCASE("off-grid output") {
        const auto sol = solve(example1());
        const std::vector<double> alphas{0.0, 1.0};
        const auto b = band(sol, alphas, TimeGrid(0, 1, 37));
        for (std::size_t i = 0; i < 37; ++i) {
            const auto want = example1_closed(b.grid().node(i), 0.0);
            CHECK(std::abs(b.at(i, 0).lo() - want.lo()) <= 1e-8);
            CHECK(std::abs(b.at(i, 0).hi() - want.hi()) <= 1e-8);
        }
        CHECK_THROWS_AS(band(sol, alphas, TimeGrid(0, 2, 11)), GridMismatch);
        const std::vector<double> bad{-0.5};
        CHECK_THROWS_AS(band(sol, bad), DomainError);
    }
}

TEST_CASE("membership_of") {
    const auto sol = solve(example1());
    const std::vector<double> vertices{2, 3}, half{2.5, 3.5}, outside{1.0, 3};
    CHECK(membership_of(sol, vertices) == 1.0);
    CHECK(std::abs(membership_of(sol, half) - 0.5) <= 1e-12);
    CHECK(membership_of(sol, outside) == 0.0);
    const std::vector<double> mixed{1.75, 3.8};  // memberships 0.5 and 0.2
    CHECK(std::abs(membership_of(sol, mixed) - 0.2) <= 1e-12);
    const std::vector<double> wrong_size{2};
    CHECK_THROWS_AS(membership_of(sol, wrong_size), ValidationError);
}

TEST_CASE("properties on examples and a three-point problem") {
    const std::vector<FuzzyBvp> problems{example1(), example2(), three_point()};
    const auto alphas = levels(11);
    for (const auto& p : problems) {
        const auto sol = solve(p);
        const auto b = band(sol, alphas);
        const std::size_t n = p.conditions.size();

        // Boundary reproduction.
        for (const auto& c : p.conditions) {
            for (double a : alphas) {
                const auto got = sol.value_at(c.t, a);
                const auto want = alpha_cut(c.value, a);
                CHECK(std::abs(got.lo() - want.lo()) <= 1e-9);
                CHECK(std::abs(got.hi() - want.hi()) <= 1e-9);
            }
        }

        for (std::size_t i = 0; i < p.grid.num_points(); i += 7) {
            const auto w = sol.weights().at_node(i);
            const double x = sol.crisp().value(i);
            for (std::size_t k = 0; k < alphas.size(); ++k) {
                const Interval& cut = b.at(i, k);

                // Extension principle: scale/add in fuzzy arithmetic, then cut.
                FuzzyNumber sum = TriangularFuzzyNumber::crisp(x);
                for (std::size_t j = 0; j < n; ++j) sum = add(sum, scale(w[j], sol.uncertain()[j]));
                const auto ext = alpha_cut(sum, alphas[k]);
                CHECK(std::abs(cut.lo() - ext.lo()) <= 1e-12 * std::max(1.0, std::abs(x)));
                CHECK(std::abs(cut.hi() - ext.hi()) <= 1e-12 * std::max(1.0, std::abs(x)));

                // Vertex attainment over the 2^n corners of the cut rectangle.
                double lo = INFINITY, hi = -INFINITY;
                for (unsigned mask = 0; mask < (1u << n); ++mask) {
                    double v = x;
                    for (std::size_t j = 0; j < n; ++j) {
                        const auto cj = alpha_cut(sol.uncertain()[j], alphas[k]);
                        v += w[j] * ((mask >> j) & 1u ? cj.hi() : cj.lo());
                    }
                    lo = std::min(lo, v);
                    hi = std::max(hi, v);
                }
                CHECK(cut.lo() == Approx(lo).epsilon(1e-12));
                CHECK(cut.hi() == Approx(hi).epsilon(1e-12));

                // Nesting.
                if (k > 0) {
                    CHECK(b.at(i, k - 1).lo() <= cut.lo() + 1e-15);
                    CHECK(cut.hi() <= b.at(i, k - 1).hi() + 1e-15);
                }
            }
        }
    }
}

TEST_CASE("triangular similarity of the uncertain part") {
    for (const auto& p : {example1(), example2()}) {
        const auto sol = solve(p);
        for (std::size_t i = 0; i < p.grid.num_points(); i += 25) {
            const auto base = sol.uncertain_at_node(i, 0.0);
            for (double a : {0.1, 0.3, 0.5, 0.7, 0.9}) {
                const auto cut = sol.uncertain_at_node(i, a);
                CHECK(cut.lo() == Approx((1 - a) * base.lo()).epsilon(1e-12));
                CHECK(cut.hi() == Approx((1 - a) * base.hi()).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("corner crisp solves bound the band for a three-point problem") {
    // The band endpoints are attained by crisp solves with corner boundary values.
    const auto p = three_point();
    const auto sol = solve(p);
    const double alpha = 0.3;
    const auto pts = p.condition_points();
    std::vector<Trajectory> corners;
    for (unsigned mask = 0; mask < 8; ++mask) {
        std::vector<double> values;
        for (std::size_t j = 0; j < 3; ++j) {
            const auto cut = alpha_cut(p.conditions[j].value, alpha);
            values.push_back((mask >> j) & 1u ? cut.hi() : cut.lo());
        }
        corners.push_back(solve_crisp_bvp(p.ode, pts, values, p.grid));
    }
    for (std::size_t i = 0; i < p.grid.num_points(); i += 10) {
        double lo = INFINITY, hi = -INFINITY;
        for (const auto& c : corners) {
            lo = std::min(lo, c.value(i));
            hi = std::max(hi, c.value(i));
        }
        const auto cut = sol.value_at_node(i, alpha);
        CHECK(std::abs(cut.lo() - lo) <= 1e-9);
        CHECK(std::abs(cut.hi() - hi) <= 1e-9);
    }
}
