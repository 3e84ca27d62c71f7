#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "commands.hpp"
#include "expression.hpp"
#include "cli_schema.hpp"

using namespace windnum;
using namespace windnum::cli;
using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

json call_json(std::vector<std::string> args) {
    args.insert(args.begin(), "--json");
    const Outcome o = call(args);
    REQUIRE(o.code == kExitOk);
    const json doc = json::parse(o.out);
    CHECK(testing::schema_problem(doc) == "");
    return doc;
}

const ComplexPoly Z = ComplexPoly::variable();

} // namespace

TEST_CASE("parsing") {
    CHECK(lower(*parse_expr("Z^2 - 1")) == RationalFunction(Z * Z - ComplexPoly(1)));
    const RationalFunction cubic = lower(*parse_expr("(3/2+1/2*i)*Z^3 - Z + 1"));
    CHECK(cubic.numerator().degree() == 3);
    CHECK(cubic.numerator().leading() == GaussianRational(Rational(3, 2), Rational(1, 2)));
    const GaussianRational i = GaussianRational::i();
    CHECK(lower(*parse_expr("(Z-i)^2/(Z-1)")) ==
          RationalFunction(pow(Z - ComplexPoly(i), 2), Z - ComplexPoly(1)));
    CHECK(lower(*parse_expr("-Z^2")) == RationalFunction(Z * Z));
    CHECK(lower(*parse_expr("0 - Z^2")) == RationalFunction(-(Z * Z)));
    CHECK(lower(*parse_expr("  2 * ( Z + i ) ")) == RationalFunction(Z * GaussianRational(2) + ComplexPoly(GaussianRational(0, 2))));
    CHECK(lower_real(*parse_expr("X^2 - 3/4", 'X')) == RealPoly(std::vector<Rational>{Rational(-3, 4), 0, 1}));
    // a rational literal only binds between two integer literals
    CHECK(lower(*parse_expr("1/2*Z")) == RationalFunction(Z * GaussianRational(Rational(1, 2))));
    CHECK(lower(*parse_expr("Z/2")) == RationalFunction(Z * GaussianRational(Rational(1, 2))));
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_expr("Z +"), SyntaxError);
    CHECK_THROWS_AS(parse_expr("X"), SyntaxError);
    CHECK_THROWS_AS(parse_expr("Z", 'X'), SyntaxError);
    CHECK_THROWS_AS(parse_expr("(Z"), SyntaxError);
    CHECK_THROWS_AS(parse_expr("Z^-1"), SyntaxError);
    CHECK_THROWS_AS(parse_expr("Z^2^3"), SyntaxError);
    CHECK_THROWS_AS(parse_expr("Z $ 1"), SyntaxError);
    CHECK_THROWS_AS(lower(*parse_expr("1/(Z-Z)")), ZeroDenominator);
    CHECK_THROWS_AS(lower_real(*parse_expr("X/(X+1)", 'X')), Error);
    try {
        parse_expr("Z + * 2");
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("print/parse round trip") {
    const std::vector<std::string> corpus{
        "Z^2 - 1", "(3/2+1/2*i)*Z^3 - Z + 1", "(Z-i)^2/(Z-1)", "-Z^2", "-(Z^2)", "Z - (1 - Z)",
        "2/3", "-2/3", "(1/2)*(Z+i)^3", "i*i*i", "((Z))", "Z*Z/(2*Z - 3/4)", "1/(2/3)", "Z^10 - -Z",
"1 - 2 - 3", "Z/(1+i)",
    };
    for (const auto& text : corpus) {
        const ExprPtr tree = parse_expr(text);
        const std::string printed = print_expr(*tree);
        const ExprPtr again = parse_expr(printed);
        CHECK_MESSAGE(same_tree(*tree, *again), text << " printed as " << printed);
    }
}

TEST_CASE("count") {
    Outcome o = call({"count", "--rect", "0,1,0,1", "--method", "W", "Z"});
    CHECK(o.code == kExitOk);
    CHECK(o.out == "1/4\n");
    o = call({"count", "--rect", "0,1,0,1", "--method", "w", "(2+i)*Z"});
    CHECK(o.code == kExitPrecondition);
    CHECK(o.err.find("(0, 0)") != std::string::npos);
    o = call({"count", "--rect", "0,1,0,1", "--method", "w", "Z - 1/2"});
    CHECK(o.code == kExitOk);
    CHECK(o.out == "1/2\n");
    o = call({"count", "--rect", "0,1,0,1", "0"});
    CHECK(o.code == kExitPrecondition);
}

TEST_CASE("usage errors") {
    CHECK(call({}).code == kExitUsage);
    CHECK(call({"frobnicate"}).code == kExitUsage);
    CHECK(call({"count", "--rect", "0,1,0", "Z"}).code == kExitUsage);
    CHECK(call({"count", "--rect", "1,0,0,1", "Z"}).code == kExitUsage);
    CHECK(call({"count", "--rect", "0,1,0,1", "Z +"}).code == kExitUsage);
    CHECK(call({"count", "--rect", "0,1,0,1", "--method", "v", "Z"}).code == kExitUsage);
    CHECK(call({"count", "--rect", "0,1,0,1", "1/(Z-Z)"}).code == kExitUsage);
    CHECK(call({"cauchy", "--interval", "0,1", "1"}).code == kExitUsage);
    CHECK(call({"cauchy", "--interval", "0,1", "1", "Z"}).code == kExitUsage);
    CHECK(call({"--help"}).code == kExitOk);
}

TEST_CASE("cauchy and aux-check") {
    Outcome o = call({"cauchy", "--interval", "0,1", "1", "X"});
    CHECK(o.code == kExitOk);
    CHECK(o.out == "1/2\n");
    o = call({"aux-check", "--interval", "0,1", "1", "X", "X-1", "X"});
    CHECK(o.code == kExitOk);
    CHECK(o.out == "variant: a-bad\nlhs: -1/2\nrhs: -1/2\nPASS\n");
}

TEST_CASE("winding commands") {
    Outcome o = call({"wind-w", "--rect", "0,1,0,1", "(2+i)*Z"});
    CHECK(o.out == "0\n");
    o = call({"wind-W", "--rect", "0,1,0,1", "(2+i)*Z"});
    CHECK(o.out == "1/4\n");
    o = call({"wind-w", "--rect", "0,1,0,1", "--edges", "Z"});
    CHECK(o.out.find("right: 1/2") != std::string::npos);
}

TEST_CASE("isolate and check") {
    Outcome o = call({"isolate", "--eps", "1/4", "Z^2 - 1"});
    CHECK(o.code == kExitOk);
    CHECK(std::count(o.out.begin(), o.out.end(), '\n') == 2);
    CHECK(o.out.find("count=1") != std::string::npos);
    CHECK(call({"isolate", "--eps", "0", "Z"}).code == kExitUsage);
    CHECK(call({"isolate", "--eps", "1", "3"}).code == kExitPrecondition);
    CHECK(call({"isolate", "--eps", "1", "1/Z"}).code == kExitUsage);
    o = call({"check", "--rect", "0,1,0,1", "Z - 1/2 - 1/2*i"});
    CHECK(o.code == kExitOk);
    CHECK(o.out.find("verdict: agree") != std::string::npos);
    CHECK(call({"check", "--rect", "0,1,0,1", "Z"}).code == kExitPrecondition);
}

TEST_CASE("json documents") {
    json doc = call_json({"count", "--rect", "0,1,0,1", "--method", "W", "Z"});
    CHECK(doc["command"] == "count");
    CHECK(doc["result"]["value"] == "1/4");
    doc = call_json({"cauchy", "--interval", "0,1", "1", "X"});
    CHECK(doc["result"]["value"] == "1/2");
    doc = call_json({"wind-W", "--rect", "0,1,0,1", "--edges", "Z"});
    CHECK(doc["result"]["value"] == "1/4");
    CHECK(doc.contains("details"));
    doc = call_json({"wind-w", "--rect", "0,1,0,1", "Z - 5"});
    CHECK(doc["result"]["value"] == "0/1");
    doc = call_json({"aux-check", "--interval", "0,1", "1", "X", "X-1", "X"});
    CHECK(doc["details"]["variant"] == "a-bad");
    doc = call_json({"isolate", "--eps", "1/4", "Z^2 + 1"});
    CHECK(doc["result"]["boxes"].size() == 2);
    doc = call_json({"check", "--rect", "0,1,0,1", "Z - 1/2 - 1/2*i"});
    CHECK(doc["result"]["value"] == "1/1");

    CHECK(testing::schema_problem(json{{"command", "x"}, {"input", json::object()}, {"result", {{"value", 0.25}}}}) != "");
}
