#include <doctest.h>

#include <sstream>

#include "seqalg/cli.hpp"
#include "seqalg/eval.hpp"
#include "seqalg/registry.hpp"

using namespace seqalg;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("parser shapes and precedence") {
    // ^ binds tighter than o, o tighter than * /, * / tighter than + -
    CHECK(render(*parse("1/(1-x-x^2)")) == "1/(1-x-x^2)");
    CHECK(render(*parse("starx o (u+z)")) == "starx o (u+z)");
    CHECK(expr_equal(*parse("a o b^2"), *parse("a o (b^2)")));
    CHECK(expr_equal(*parse("a o b*c"), *parse("(a o b)*c")));
    CHECK(expr_equal(*parse("a*b o c"), *parse("a*(b o c)")));
    CHECK(expr_equal(*parse("a+b o c"), *parse("a+(b o c)")));
    CHECK(expr_equal(*parse("-a*b"), *parse("(-a)*b")));
    CHECK(expr_equal(*parse("a-b-c"), *parse("(a-b)-c")));
    CHECK(expr_equal(*parse("a^b^c"), *parse("a^(b^c)")));
    CHECK(expr_equal(*parse("x^-2"), *parse("x^(-2)")));
    CHECK_FALSE(expr_equal(*parse("a o b*c"), *parse("a o (b*c)")));
    // 'o' is an operator only at word boundaries; names may contain it
    CHECK(render(*parse("ordPair + x")) == "ordPair+x");
}

TEST_CASE("syntax errors carry byte offsets") {
    try {
        parse("1+*x");
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.offset() == 2);
    }
    CHECK_THROWS_AS(parse("(1+x"), SyntaxError);
    CHECK_THROWS_AS(parse("f(1,"), SyntaxError);
    CHECK_THROWS_AS(parse("1 2"), SyntaxError);
}

TEST_CASE("rendering an expression reparses to an equal tree") {
    for (const auto& [name, def] : registry_names()) {
        CAPTURE(name);
        ExprPtr e = parse(def);
        ExprPtr back = parse(render(*e));
        CHECK(expr_equal(*e, *back));
    }
}

TEST_CASE("every registry definition names a resolvable sequence") {
    for (const auto& [name, def] : registry_names()) {
        CAPTURE(name);
        CHECK(lookup_bivariate(name).has_value());
    }
}

TEST_CASE("evaluation modes") {
    CHECK(seq_to_string(eval_rational(*parse("x")), 3) == "[0,1,0]");
    CHECK(seq_to_string(eval_gaussian(*parse("i*i")), 1) == "[-1]");
    Biv p = eval_bivariate(*parse("starx o (u+z)"));
    CHECK(seq_to_string(p.nth(2), 3) == "[1,2,1]");
    try {
        eval_rational(*parse("u"));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownName);
    }
    try {
        eval_rational(*parse("i"));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownName);
    }
    try {
        eval_rational(*parse("unDiag(x)"));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Domain);
    }
    try {
        eval_rational(*parse("deriv(x, x)"));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Domain);
    }
}

TEST_CASE("terms command") {
    auto r = cli({"terms", "-n", "8", "catalan"});
    CHECK(r.code == 0);
    CHECK(r.out == "[1,1,2,5,14,42,132,429]\n");
    r = cli({"terms", "-n", "4", "lgnx"});
    CHECK(r.out == "[0,1,-1/2,1/3]\n");
    r = cli({"terms", "-n", "6", "--whole", "facs"});
    CHECK(r.out == "[1,1,2,6,24,120]\n");
    r = cli({"terms", "-n", "4", "--field", "gaussian", "expx o (i*x)"});
    CHECK(r.code == 0);
    CHECK(r.out == "[1,0+1i,-1/2,0-1/6i]\n");
}

TEST_CASE("triangle command") {
    auto r = cli({"triangle", "--spec", "1..3", "schroeder"});
    CHECK(r.code == 0);
    CHECK(r.out == "[0]\n[1,0]\n[0,1,0]\n");
    r = cli({"triangle", "--e2o", "--spec", "1..3", "ebinom"});
    CHECK(r.out == "[1]\n[1,1]\n[1,2,1]\n");
    r = cli({"triangle", "--spec", "1..3", "unDiagE2o(ebinom)"});
    CHECK(r.out == "[1]\n[1,1]\n[1,2,1]\n");
    r = cli({"triangle", "--diag", "--spec", "1..3", "pascal"});
    CHECK(r.out == "[1]\n[1,1]\n[1,2,1]\n");
    r = cli({"triangle", "--spec", "2..4", "--e2o", "powerSums"});
    CHECK(r.out == "[0,1]\n[0,-1/2,1/2]\n[0,1/6,-1/2,1/3]\n");
}

TEST_CASE("names and check commands") {
    auto r = cli({"names"});
    CHECK(r.code == 0);
    CHECK(r.out.find("derangement = set o nonLoopCycle") != std::string::npos);
    CHECK(r.out.find("bernoulli = x/(expx - 1)") != std::string::npos);
    r = cli({"check", "errors"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    r = cli({"check", "nosuch"});
    CHECK(r.code == 1);
    CHECK(r.err.find("unknown suite") != std::string::npos);
}

TEST_CASE("documented exit codes") {
    CHECK(cli({"terms", "1/(x-x)"}).code == 1);
    CHECK(cli({"terms", "-n", "3", "--whole", "lgnx"}).code == 1);
    CHECK(cli({"terms", "1+*x"}).code == 2);
    CHECK(cli({"terms", "(1+x"}).code == 2);
    CHECK(cli({"nosuchcmd"}).code == 1);
}
