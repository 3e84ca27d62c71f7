// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "brute_index.hpp"
#include "cli_schema.hpp"
#include "commands.hpp"
#include "generators.hpp"
#include "quadruples.hpp"
#include "windnum/cauchy_index.hpp"
#include "windnum/error.hpp"
#include "windnum/isolation.hpp"
#include "windnum/oracle.hpp"
#include "windnum/product_formula.hpp"
#include "windnum/root_count.hpp"
#include "windnum/winding.hpp"

using namespace windnum;

namespace {

const ComplexPoly Z = ComplexPoly::variable();
const RealPoly X = RealPoly::variable();
const Rectangle UNIT = testing::unit_square();

/// Outcome of one criterion: failures collected as human-readable notes.
struct Verdict {
    std::vector<std::string> failures;
    std::string summary;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

QuarterInt q(long num, long den) { return QuarterInt(Rational(num, den)); }

bool even_vertices(const RationalFunction& f, const Rectangle& rect) {
    for (const auto& v : vertex_valuations(f, rect)) {
        if (!v.is_even()) return false;
    }
    return true;
}

RationalFunction scaled_specs(testing::Rng& rng, const std::vector<oracle::RootSpec>& specs) {
    return oracle::build_function(specs).scaled(
        GaussianRational(testing::uniform(rng, 1, 4), testing::uniform(rng, -3, 3)));
}

Verdict worked_examples() {
    Verdict v;
    v.expect(wind_w(RationalFunction(Z), UNIT) == q(1, 4), "w(Z) != 1/4");
    const RationalFunction tilted(Z * GaussianRational(2, 1));
    v.expect(wind_w(tilted, UNIT) == q(0, 1), "w((2+i)Z) != 0");
    v.expect(wind_W(tilted, UNIT) == q(1, 4), "W((2+i)Z) != 1/4");

    const std::vector<std::pair<GaussianRational, long>> table{
        {GaussianRational(Rational(1, 2), Rational(1, 2)), 4},  // interior
        {GaussianRational(Rational(1, 2)), 2},                  // edge
        {GaussianRational(1, 1), 1},                            // vertex
        {GaussianRational(5, 5), 0},                            // exterior
    };
    for (const auto& [z0, quarters] : table) {
        const RationalFunction f(ComplexPoly::linear_factor(z0));
        v.expect(wind_w(f, UNIT) == q(quarters, 4), "w(Z - " + z0.to_string() + ")");
        v.expect(wind_w(f.reciprocal(), UNIT) == q(-quarters, 4), "w(1/(Z - " + z0.to_string() + "))");
    }

    const RealPoly p(1), qq = X, r = X - RealPoly(1), s = X;
    v.expect(ind_interval({p, qq}, 0, 1) == HalfInt(Rational(1, 2)), "Ind(P, Q)");
    v.expect(ind_interval({r, s}, 0, 1) == HalfInt(Rational(-1, 2)), "Ind(R, S)");
    const HalfInt lhs = ind_interval({p * r - qq * s, p * s + qq * r}, 0, 1);
    v.expect(lhs == HalfInt(Rational(-1, 2)), "Ind(PR - QS, PS + QR)");
    const HalfInt var = var_ab({p * s + qq * r, qq * s}, 0, 1);
    v.expect(var == HalfInt(0), "Var(PS + QR, QS)");
    const HalfInt plain = ind_interval({p, qq}, 0, 1) + ind_interval({r, s}, 0, 1) - var;
    v.expect(plain != lhs, "uncorrected identity should fail on the worked quadruple");
    const auto sides = aux_product_sides(p, qq, r, s, 0, 1);
    v.expect(sides.variant == ProductVariant::ABad && sides.lhs == sides.rhs, "a-bad variant should hold");
    v.summary = "worked examples, linear table, worked quadruple";
    return v;
}

testing::Factored random_factored(testing::Rng& rng, const Rational& a, const Rational& b, int max_roots) {
    testing::Factored f{Rational(testing::uniform(rng, 1, 3)) * (testing::coin(rng) ? 1 : -1), {}};
    const long n = testing::uniform(rng, 0, max_roots);
    for (long k = 0; k < n; ++k) {
        switch (testing::uniform(rng, 0, 3)) {
            case 0: f.roots.push_back(a); break;
            case 1: f.roots.push_back(b); break;
            default: f.roots.push_back(Rational(testing::uniform(rng, -8, 8), 3));
        }
    }
    return f;
}

Verdict inversion() {
    Verdict v;
    testing::Rng rng(1001);
    const auto start = std::chrono::steady_clock::now();
    for (int k = 0; k < 500; ++k) {
        const auto [a, b] = testing::random_interval(rng);
        PolyPair pq;
        if (k % 2 == 0) {
            // rational roots at and between the endpoints, with a shared part
            auto shared = random_factored(rng, a, b, 2);
            auto fp = random_factored(rng, a, b, 6);
            auto fq = random_factored(rng, a, b, 6);
            pq.p = testing::from_roots(fp.lead, fp.roots) * testing::from_roots(1, shared.roots);
            pq.q = testing::from_roots(fq.lead, fq.roots) * testing::from_roots(1, shared.roots);
        } else {
            const RealPoly common = testing::random_real_poly(rng, 2);
            pq.p = testing::random_real_poly(rng, 6) * (common.is_zero() ? RealPoly(1) : common);
            pq.q = testing::random_real_poly(rng, 6) * (common.is_zero() ? RealPoly(1) : common);
        }
        if (pq.p.is_zero()) pq.p = X;
        if (pq.q.is_zero()) pq.q = RealPoly(1);
        const HalfInt res = inversion_residual(pq, a, b);
        v.expect(res == HalfInt(0), "residual " + res.to_string() + " for P=" + pq.p.to_string() +
                                        " Q=" + pq.q.to_string());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    v.expect(secs < 30, "took " + std::to_string(secs) + " s");
    v.summary = "500 pairs in " + std::to_string(secs).substr(0, 5) + " s";
    return v;
}

Verdict product_formula() {
    Verdict v;
    testing::Rng rng(1002);
    std::set<ProductVariant> seen;
    const auto start = std::chrono::steady_clock::now();
    for (int k = 0; k < 500; ++k) {
        const auto t = testing::targeted_quadruple(rng, k);
        const auto out = aux_product_sides(t.p, t.q, t.r, t.s, t.a, t.b);
        seen.insert(out.variant);
        v.expect(out.lhs == out.rhs, std::string(variant_tag(out.variant)) + " P=" + t.p.to_string() +
                                         " Q=" + t.q.to_string() + " R=" + t.r.to_string() +
                                         " S=" + t.s.to_string());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    v.expect(seen.size() == 4, "only " + std::to_string(seen.size()) + " variants exercised");
    v.expect(secs < 60, "took " + std::to_string(secs) + " s");
    v.summary = "500 quadruples, " + std::to_string(seen.size()) + " variants, " + std::to_string(secs).substr(0, 5) + " s";
    return v;
}

Verdict additivity() {
    Verdict v;
    testing::Rng rng(1003);
    for (int k = 0; k < 200; ++k) {
        const Rectangle rect = testing::random_rectangle(rng);
        const RationalFunction f = scaled_specs(rng, testing::random_specs(rng, rect, 4));
        const RationalFunction h = scaled_specs(rng, testing::random_specs(rng, rect, 4));
        v.expect(wind_W(f * h, rect) == wind_W(f, rect) + wind_W(h, rect),
                 "W(f h) for f=" + f.to_string() + " h=" + h.to_string());
    }
    int even = 0;
    for (int k = 0; even < 100 && k < 10000; ++k) {
        const Rectangle rect = testing::random_rectangle(rng);
        auto specs_f = testing::random_specs(rng, rect, 4);
        auto specs_h = testing::random_specs(rng, rect, 4);
        // even multiplicities keep vertex valuations even wherever the points land
        for (auto* specs : {&specs_f, &specs_h}) {
            for (auto& s : *specs) {
                if (classify_point(s.location, rect) == PointClass::Vertex) s.multiplicity = 2;
            }
        }
        const RationalFunction f = scaled_specs(rng, specs_f);
        const RationalFunction h = scaled_specs(rng, specs_h);
        if (!even_vertices(f, rect) || !even_vertices(h, rect)) continue;
        ++even;
        v.expect(wind_w(f * h, rect) == wind_w(f, rect) + wind_w(h, rect),
                 "w(f h) for f=" + f.to_string() + " h=" + h.to_string());
    }
    v.expect(even == 100, "only " + std::to_string(even) + " even-valuation pairs");
    v.summary = "200 W pairs, " + std::to_string(even) + " even-valuation w pairs";
    return v;
}

Verdict weighted_count_oracle() {
    Verdict v;
    testing::Rng rng(1004);
    int refused = 0;
    for (int k = 0; k < 200; ++k) {
        const Rectangle rect = testing::random_rectangle(rng);
        const auto specs = testing::random_specs(rng, rect, 8, 4);
        const RationalFunction f = scaled_specs(rng, specs);
        const QuarterInt expected = oracle::expected_weighted_count(specs, rect);
        const WeightedCount got = count_weighted(f, rect);
        v.expect(got.value == expected, f.to_string() + " on " + rect.to_string() + ": " + got.value.to_string() +
                                            " vs " + expected.to_string());
        const bool even = even_vertices(f, rect);
        try {
            const WeightedCount w = count_weighted_even(f, rect);
            v.expect(even && w == got, "count_weighted_even mismatch on " + f.to_string());
        } catch (const OddVertexValuation&) {
            ++refused;
            v.expect(!even, "count_weighted_even refused an even-valuation input");
        }
    }
    v.summary = "200 constructed functions, " + std::to_string(refused) + " refused by the w route";
    return v;
}

Verdict numeric() {
    Verdict v;
    testing::Rng rng(1005);
    double worst = 0;
    for (int k = 0; k < 100; ++k) {
        const Rectangle rect = testing::random_rectangle(rng);
        const auto specs = testing::random_specs(rng, rect, 8, 4, false);
        const RationalFunction f = scaled_specs(rng, specs);
        const QuarterInt exact = count_weighted(f, rect).value;
        const double num = oracle::numeric_winding(f, rect);
        const double err = std::abs(num - exact.value().to_double());
        worst = std::max(worst, err);
        v.expect(exact.is_integer() && std::lround(num) == exact.value().numerator().get_si(),
                 "rounding mismatch on " + f.to_string());
        v.expect(err < 1e-3, "error " + std::to_string(err) + " on " + f.to_string());
    }
    std::ostringstream s;
    s << "100 functions, max error " << worst;
    v.summary = s.str();
    return v;
}

Verdict isolation() {
    Verdict v;
    testing::Rng rng(1006);
    const Rational eps(1, 64);
    const auto start = std::chrono::steady_clock::now();
    auto inside = [](const Rectangle& r, const GaussianRational& z) {
        return r.x0() < z.re() && z.re() < r.x1() && r.y0() < z.im() && z.im() < r.y1();
    };
    for (int k = 0; k < 50; ++k) {
        std::vector<GaussianRational> roots;
        ComplexPoly f(GaussianRational(testing::uniform(rng, 1, 3), testing::uniform(rng, -2, 2)));
        const long n = testing::uniform(rng, 1, 6);
        for (long j = 0; j < n; ++j) {
            const GaussianRational z = testing::small_gaussian(rng, 4, 3);
            roots.push_back(z);
            f = f * ComplexPoly::linear_factor(z);
        }
        const auto boxes = isolate(f, eps);
        long total = 0;
        for (std::size_t i = 0; i < boxes.size(); ++i) {
            const auto& b = boxes[i].box;
            total += boxes[i].count;
            v.expect(b.width() < eps && b.height() < eps, "box too large: " + b.to_string());
            long claimed = 0;
            for (const auto& z : roots) claimed += inside(b, z) ? 1 : 0;
            v.expect(claimed == boxes[i].count, "box " + b.to_string() + " holds " + std::to_string(claimed) +
                                                     " prescribed roots, claims " + std::to_string(boxes[i].count));
            for (std::size_t j = 0; j < i; ++j) {
                const auto& o = boxes[j].box;
                const bool apart = o.x1() < b.x0() || b.x1() < o.x0() || o.y1() < b.y0() || b.y1() < o.y0();
                v.expect(apart, "boxes overlap: " + o.to_string() + " and " + b.to_string());
            }
        }
        v.expect(total == f.degree(), "counts sum to " + std::to_string(total) + " for " + f.to_string());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    v.expect(secs < 60, "took " + std::to_string(secs) + " s");
    v.summary = "50 polynomials, eps 1/64, " + std::to_string(secs).substr(0, 5) + " s";
    return v;
}

Verdict cli_contract() {
    Verdict v;
    auto call = [](std::vector<std::string> args, std::string& out) {
        std::ostringstream o, e;
        const int code = cli::run(args, o, e);
        out = o.str();
        return code;
    };
    std::string out;
    v.expect(call({"count", "--rect", "0,1,0,1", "--method", "W", "Z"}, out) == 0 && out == "1/4\n",
             "count W Z -> " + out);
    v.expect(call({"count", "--rect", "0,1,0,1", "--method", "w", "(2+i)*Z"}, out) == 2, "count w (2+i)Z exit");
    v.expect(call({"cauchy", "--interval", "0,1", "1", "X"}, out) == 0 && out == "1/2\n", "cauchy 1 X -> " + out);

    const std::vector<std::vector<std::string>> json_runs{
        {"--json", "count", "--rect", "0,1,0,1", "--method", "W", "Z"},
        {"--json", "cauchy", "--interval", "0,1", "1", "X"},
        {"--json", "wind-w", "--rect", "0,1,0,1", "--edges", "Z"},
        {"--json", "wind-W", "--rect", "0,1,0,1", "--edges", "(2+i)*Z"},
        {"--json", "aux-check", "--interval", "0,1", "1", "X", "X-1", "X"},
        {"--json", "isolate", "--eps", "1/8", "Z^3 - Z"},
        {"--json", "check", "--rect", "0,1,0,1", "Z - 1/2 - 1/2*i"},
    };
    for (const auto& args : json_runs) {
        const int code = call(args, out);
        std::string problem;
        try {
            problem = testing::schema_problem(nlohmann::json::parse(out));
        } catch (const nlohmann::json::exception& e) {
            problem = e.what();
        }
        v.expect(code == 0 && problem.empty(), args[1] + ": " + problem);
    }
    call({"--json", "count", "--rect", "0,1,0,1", "--method", "W", "Z"}, out);
    v.expect(nlohmann::json::parse(out)["result"]["value"] == "1/4", "json count value");
    v.summary = "3 examples, " + std::to_string(json_runs.size()) + " JSON documents";
    return v;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"1 worked-example regression", worked_examples},
        {"2 inversion formula", inversion},
        {"3 auxiliary product formula", product_formula},
        {"4 W- and w-additivity", additivity},
        {"5 weighted count oracle equivalence", weighted_count_oracle},
        {"6 numeric cross-check", numeric},
        {"7 isolation end-to-end", isolation},
        {"8 CLI contract", cli_contract},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Verdict v;
        try {
            v = run();
        } catch (const std::exception& e) {
            v.failures.push_back(std::string("exception: ") + e.what());
        }
        const bool ok = v.failures.empty();
        failed += ok ? 0 : 1;
        std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << name << " -- " << v.summary << '\n';
        for (std::size_t k = 0; k < v.failures.size() && k < 5; ++k) std::cout << "      " << v.failures[k] << '\n';
        if (v.failures.size() > 5) std::cout << "      ... " << v.failures.size() - 5 << " more\n";
        std::cout.flush();
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
    return failed == 0 ? 0 : 1;
}
