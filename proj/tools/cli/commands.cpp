#include "commands.hpp"

#include <cmath>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "expression.hpp"
#include "windnum/cauchy_index.hpp"
#include "windnum/isolation.hpp"
#include "windnum/oracle.hpp"
#include "windnum/product_formula.hpp"
#include "windnum/root_count.hpp"
#include "windnum/winding.hpp"

namespace windnum::cli {

namespace {

using nlohmann::json;

class UsageError : public Error {
public:
    using Error::Error;
};

std::vector<Rational> parse_list(const std::string& text, std::size_t expected, const char* what) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(Rational::parse(item));
        } catch (const Error& e) {
            throw UsageError(std::string(what) + ": " + e.what());
        }
    }
    if (out.size() != expected) {
        throw UsageError(std::string(what) + ": expected " + std::to_string(expected) +
                         " comma-separated rationals, got '" + text + "'");
    }
    return out;
}

Rectangle parse_rect(const std::string& text) {
    auto v = parse_list(text, 4, "--rect");
    try {
        return {v[0], v[1], v[2], v[3]};
    } catch (const PreconditionViolated& e) {
        throw UsageError(std::string("--rect: ") + e.what());
    }
}

std::string frac(const Rational& r) { return r.to_fraction_string(); }

json rect_json(const Rectangle& r) {
    return {{"x0", frac(r.x0())}, {"x1", frac(r.x1())}, {"y0", frac(r.y0())}, {"y1", frac(r.y1())}};
}

json edges_json(const EdgeIndices& e) {
    json j;
    for (int k = 0; k < 4; ++k) j[edge_label(static_cast<EdgeName>(k))] = frac(e.edge[k].value());
    return j;
}

void print_edges(std::ostream& out, const EdgeIndices& e, const std::string& indent) {
    for (int k = 0; k < 4; ++k) {
        out << indent << edge_label(static_cast<EdgeName>(k)) << ": " << e.edge[k] << '\n';
    }
}

RationalFunction parse_function(const std::string& text) {
    try {
        return lower(*parse_expr(text, 'Z'));
    } catch (const ZeroDenominator& e) {
        throw UsageError(e.what());
    }
}

RealPoly parse_real(const std::string& text) {
    try {
        return lower_real(*parse_expr(text, 'X'));
    } catch (const SyntaxError&) {
        throw;
    } catch (const Error& e) {
        throw UsageError(std::string("'") + text + "': " + e.what());
    }
}

struct Options {
    bool json = false;
    std::string rect;
    std::string method = "W";
    std::string interval;
    std::string eps;
    bool edges = false;
    int samples = 256;
    std::vector<std::string> exprs;
};

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

int cmd_count(const Options& o, std::ostream& out) {
    const Rectangle rect = parse_rect(o.rect);
    const RationalFunction f = parse_function(o.exprs.at(0));
    const WeightedCount c = o.method == "w" ? count_weighted_even(f, rect) : count_weighted(f, rect);
    if (o.json) {
        emit(out, {{"command", "count"},
                   {"input", {{"rect", rect_json(rect)}, {"method", o.method}, {"expr", o.exprs[0]}}},
                   {"result", {{"value", frac(c.value.value())}}}});
    } else {
        out << c.value << '\n';
    }
    return kExitOk;
}

int cmd_wind_small(const Options& o, std::ostream& out) {
    const Rectangle rect = parse_rect(o.rect);
    const RationalFunction f = parse_function(o.exprs.at(0));
    const EdgeIndices e = wind_w_raw_sum(f, rect);
    if (o.json) {
        json doc{{"command", "wind-w"},
                 {"input", {{"rect", rect_json(rect)}, {"expr", o.exprs[0]}}},
                 {"result", {{"value", frac(e.total.value())}}}};
        if (o.edges) doc["details"] = {{"edges", edges_json(e)}};
        emit(out, doc);
    } else {
        out << e.total << '\n';
        if (o.edges) print_edges(out, e, "");
    }
    return kExitOk;
}

int cmd_wind_big(const Options& o, std::ostream& out) {
    const Rectangle rect = parse_rect(o.rect);
    const RationalFunction f = parse_function(o.exprs.at(0));
    const QuarterInt big = wind_W(f, rect);
    const EdgeIndices plain = wind_w_raw_sum(f, rect);
    const EdgeIndices rotated = wind_w_raw_sum(f.scaled(GaussianRational::i()), rect);
    if (o.json) {
        json doc{{"command", "wind-W"},
                 {"input", {{"rect", rect_json(rect)}, {"expr", o.exprs[0]}}},
                 {"result", {{"value", frac(big.value())}}}};
        if (o.edges) {
            doc["details"] = {{"w", frac(plain.total.value())},
                              {"edges", edges_json(plain)},
                              {"w_iF", frac(rotated.total.value())},
                              {"edges_iF", edges_json(rotated)}};
        }
        emit(out, doc);
    } else {
        out << big << '\n';
        if (o.edges) {
            out << "w(F): " << plain.total << '\n';
            print_edges(out, plain, "  ");
            out << "w(iF): " << rotated.total << '\n';
            print_edges(out, rotated, "  ");
        }
    }
    return kExitOk;
}

int cmd_cauchy(const Options& o, std::ostream& out) {
    const auto ab = parse_list(o.interval, 2, "--interval");
    const PolyPair pair{parse_real(o.exprs.at(0)), parse_real(o.exprs.at(1))};
    const HalfInt v = ind_interval(pair, ab[0], ab[1]);
    if (o.json) {
        emit(out, {{"command", "cauchy"},
                   {"input", {{"interval", {frac(ab[0]), frac(ab[1])}}, {"P", o.exprs[0]}, {"Q", o.exprs[1]}}},
                   {"result", {{"value", frac(v.value())}}}});
    } else {
        out << v << '\n';
    }
    return kExitOk;
}

int cmd_aux_check(const Options& o, std::ostream& out) {
    const auto ab = parse_list(o.interval, 2, "--interval");
    std::vector<RealPoly> polys;
    for (std::size_t k = 0; k < 4; ++k) polys.push_back(parse_real(o.exprs.at(k)));
    const ProductSides s = aux_product_sides(polys[0], polys[1], polys[2], polys[3], ab[0], ab[1]);
    const bool pass = s.lhs == s.rhs;
    if (o.json) {
        emit(out, {{"command", "aux-check"},
                   {"input",
                    {{"interval", {frac(ab[0]), frac(ab[1])}},
                     {"P", o.exprs[0]},
                     {"Q", o.exprs[1]},
                     {"R", o.exprs[2]},
                     {"S", o.exprs[3]}}},
                   {"result", {{"value", frac(s.lhs.value())}}},
                   {"details",
                    {{"variant", variant_tag(s.variant)},
                     {"lhs", frac(s.lhs.value())},
                     {"rhs", frac(s.rhs.value())},
                     {"pass", pass}}}});
    } else {
        out << "variant: " << variant_tag(s.variant) << '\n'
            << "lhs: " << s.lhs << '\n'
            << "rhs: " << s.rhs << '\n'
            << (pass ? "PASS" : "FAIL") << '\n';
    }
    return kExitOk;
}

int cmd_isolate(const Options& o, std::ostream& out) {
    const auto eps = parse_list(o.eps, 1, "--eps")[0];
    if (eps.sign() <= 0) throw UsageError("--eps must be positive");
    const RationalFunction f = parse_function(o.exprs.at(0));
    if (!f.denominator().is_constant()) throw UsageError("isolate expects a polynomial");
    const ComplexPoly p = f.numerator() * f.denominator().leading().inverse();
    const auto boxes = isolate(p, eps);
    if (o.json) {
        json list = json::array();
        for (const auto& b : boxes) {
            json j = rect_json(b.box);
            j["count"] = b.count;
            list.push_back(j);
        }
        emit(out, {{"command", "isolate"},
                   {"input", {{"eps", frac(eps)}, {"expr", o.exprs[0]}}},
                   {"result", {{"boxes", list}}}});
    } else {
        for (const auto& b : boxes) out << b.box.to_string() << "  count=" << b.count << '\n';
    }
    return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
    const Rectangle rect = parse_rect(o.rect);
    const RationalFunction f = parse_function(o.exprs.at(0));
    const WeightedCount exact = count_weighted(f, rect);
    std::optional<double> numeric;
    try {
        numeric = oracle::numeric_winding(f, rect, std::max(o.samples, 64));
    } catch (const BoundaryZeroDetected&) {
        numeric.reset();
    }
    const bool agree = numeric && exact.value.is_integer() &&
                       std::abs(*numeric - exact.value.value().to_double()) < 1e-3;
    if (o.json) {
        json details{{"agree", agree}};
        details["numeric"] = numeric ? json(*numeric) : json(nullptr);
        emit(out, {{"command", "check"},
                   {"input", {{"rect", rect_json(rect)}, {"expr", o.exprs[0]}}},
                   {"result", {{"value", frac(exact.value.value())}}},
                   {"details", details}});
    } else {
        out << "exact: " << exact.value << '\n';
        if (numeric) {
            out << "numeric: " << std::fixed << std::setprecision(6) << *numeric << '\n';
        } else {
            out << "numeric: unavailable (zero or pole on the boundary)\n";
        }
        out << "verdict: " << (agree ? "agree" : "disagree") << '\n';
    }
    if (!numeric) {
        err << "check: the numeric estimate needs a boundary free of zeros and poles\n";
        return kExitPrecondition;
    }
    return agree ? kExitOk : kExitPrecondition;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact winding numbers and complex root counting on rectangles", "windnum"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json, "Emit JSON instead of text");

    auto* count = app.add_subcommand("count", "Weighted zero-minus-pole count in a rectangle");
    count->add_option("--rect", o.rect, "x0,x1,y0,y1")->required();
    count->add_option("--method", o.method, "W (always valid) or w (even vertex valuations only)")
        ->check(CLI::IsMember({"W", "w"}));
    count->add_option("expr", o.exprs, "Rational function in Z")->required()->expected(1);

    auto* wsmall = app.add_subcommand("wind-w", "Winding number w");
    wsmall->add_option("--rect", o.rect, "x0,x1,y0,y1")->required();
    wsmall->add_flag("--edges", o.edges, "Also print the four edge Cauchy indices");
    wsmall->add_option("expr", o.exprs, "Rational function in Z")->required()->expected(1);

    auto* wbig = app.add_subcommand("wind-W", "Winding number W");
    wbig->add_option("--rect", o.rect, "x0,x1,y0,y1")->required();
    wbig->add_flag("--edges", o.edges, "Also print the edge Cauchy indices of F and iF");
    wbig->add_option("expr", o.exprs, "Rational function in Z")->required()->expected(1);

    auto* cauchy = app.add_subcommand("cauchy", "Cauchy index Ind_a^b(P, Q)");
    cauchy->add_option("--interval", o.interval, "a,b")->required();
    cauchy->add_option("polys", o.exprs, "P Q, polynomials in X")->required()->expected(2);

    auto* aux = app.add_subcommand("aux-check", "Both sides of the product formula");
    aux->add_option("--interval", o.interval, "a,b")->required();
    aux->add_option("polys", o.exprs, "P Q R S, polynomials in X")->required()->expected(4);

    auto* iso = app.add_subcommand("isolate", "Isolate all complex roots of a polynomial");
    iso->add_option("--eps", o.eps, "Maximum box side, a positive rational")->required();
    iso->add_option("expr", o.exprs, "Polynomial in Z")->required()->expected(1);

    auto* check = app.add_subcommand("check", "Compare the exact count with a numeric estimate");
    check->add_option("--rect", o.rect, "x0,x1,y0,y1")->required();
    check->add_option("--samples", o.samples, "Initial samples per edge (>= 64)");
    check->add_option("expr", o.exprs, "Rational function in Z")->required()->expected(1);

    std::vector<std::string> argv_storage{"windnum"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (count->parsed()) return cmd_count(o, out);
        if (wsmall->parsed()) return cmd_wind_small(o, out);
        if (wbig->parsed()) return cmd_wind_big(o, out);
        if (cauchy->parsed()) return cmd_cauchy(o, out);
        if (aux->parsed()) return cmd_aux_check(o, out);
        if (iso->parsed()) return cmd_isolate(o, out);
        if (check->parsed()) return cmd_check(o, out, err);
    } catch (const SyntaxError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitPrecondition;
    }
    return kExitUsage;
}

} // namespace windnum::cli
