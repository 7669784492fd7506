#include "doctest.h"

#include <random>

#include "k3atlas/exactpoly.hpp"
#include <filesystem>
#include <fstream>

#include "k3atlas/polydata.hpp"

using namespace k3atlas;
using namespace k3atlas::xp;

namespace {

MPoly random_poly(const VarContextPtr& ctx, std::mt19937_64& rng, int nterms, int maxdeg) {
    MPoly p(ctx);
    for (int i = 0; i < nterms; ++i) {
        Exp e;
        for (std::size_t v = 0; v < ctx->size(); ++v)
            e.e[v] = static_cast<std::uint16_t>(rng() % (maxdeg + 1));
        p.add_term(e, Rat(static_cast<long>(rng() % 19) - 9));
    }
    return p;
}

} // namespace

TEST_CASE("parse examples") {
    auto ctx = make_context({"a", "b", "c", "d"});
    auto p2 = parse_poly("a^2+b^2+c^2+d^2", ctx);
    CHECK(p2.term_count() == 4);
    CHECK(parse_poly("0", ctx).is_zero());
    CHECK(parse_poly("2*a - a - a", ctx).is_zero());
    CHECK(parse_poly("-3*a^2*b + 3*b*a^2", ctx).is_zero());
    CHECK_THROWS_AS(parse_poly("a^2 +", ctx), ParseError);
    CHECK_THROWS_AS(parse_poly("q + 1", ctx), ParseError);
    CHECK_THROWS_AS(parse_poly("", ctx), ParseError);
    CHECK_THROWS_AS(parse_poly("a^b", ctx), ParseError);
}

TEST_CASE("print/parse round trip") {
    auto ctx = make_context({"x", "y", "z"});
    std::mt19937_64 rng(3);
    for (int k = 0; k < 50; ++k) {
        MPoly p = random_poly(ctx, rng, 12, 5);
        MPoly q = parse_poly(p.str(), ctx);
        CHECK(p == q);
    }
}

TEST_CASE("ring axioms on random polynomials") {
    auto ctx = make_context({"x", "y"});
    std::mt19937_64 rng(17);
    for (int k = 0; k < 40; ++k) {
        MPoly a = random_poly(ctx, rng, 6, 4);
        MPoly b = random_poly(ctx, rng, 6, 4);
        MPoly c = random_poly(ctx, rng, 6, 4);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("pow and binomial") {
    auto ctx = make_context({"a", "b"});
    auto ab = parse_poly("a+b", ctx);
    CHECK(ab.pow(2) == parse_poly("a^2+2*a*b+b^2", ctx));
    CHECK(ab.pow(0) == MPoly::constant(ctx, 1));
    auto z = MPoly::zero(ctx);
    CHECK((ab * z).is_zero());
}

TEST_CASE("substitution and evaluation") {
    auto ctx = make_context({"a", "b", "c", "d"});
    auto p2 = parse_poly("a^2+b^2+c^2+d^2", ctx);
    CHECK(p2.eval_exact({Rat(1), Rat(1), Rat(1), Rat(1)}) == 4);

    // composition: a -> a+b leaves context intact
    std::vector<std::optional<MPoly>> bind(4);
    bind[0] = parse_poly("a+b", ctx);
    auto q = p2.substitute(bind, ctx);
    CHECK(q == parse_poly("a^2+2*a*b+2*b^2+c^2+d^2", ctx));

    // numeric eval requires every variable bound
    std::vector<std::optional<Complex>> vals(4);
    vals[0] = Complex(1, 0);
    vals[1] = Complex(2, 0);
    vals[2] = Complex(0, 1);
    CHECK_THROWS_AS(p2.eval(vals), MissingBinding);
    vals[3] = Complex(0, 0);
    CHECK(std::abs(p2.eval(vals) - Complex(4, 0)) < 1e-14);
}

TEST_CASE("substitution numeric agreement") {
    auto ctx = make_context({"x", "y", "z"});
    std::mt19937_64 rng(23);
    for (int k = 0; k < 20; ++k) {
        MPoly p = random_poly(ctx, rng, 10, 4);
        std::vector<std::optional<Complex>> vals(3);
        vals[0] = Complex(0.3, -0.2);
        vals[1] = Complex(-1.1, 0.4);
        vals[2] = Complex(0.9, 0.1);
        Complex direct = p.eval(vals);
        Complex acc(0, 0);
        for (const auto& [e, c] : p.terms()) {
            Complex t(c.get_d(), 0.0);
            for (int i = 0; i < 3; ++i)
                for (unsigned j = 0; j < e.e[i]; ++j) t *= *vals[i];
            acc += t;
        }
        CHECK(std::abs(direct - acc) <= 1e-10 * (1.0 + std::abs(acc)));
    }
}

TEST_CASE("exact division") {
    auto ctx = make_context({"x", "y"});
    auto f = parse_poly("x^2-y^2", ctx);
    auto g = parse_poly("x-y", ctx);
    auto q = f.divide_exact(g);
    REQUIRE(q.has_value());
    CHECK(*q == parse_poly("x+y", ctx));
    CHECK_FALSE(parse_poly("x^2+y", ctx).divide_exact(g).has_value());
    std::mt19937_64 rng(5);
    for (int k = 0; k < 20; ++k) {
        MPoly a = random_poly(ctx, rng, 5, 3);
        MPoly b = random_poly(ctx, rng, 5, 3);
        if (b.is_zero()) continue;
        auto quot = (a * b).divide_exact(b);
        REQUIRE(quot.has_value());
        CHECK(*quot == a);
    }
}

TEST_CASE("identity_check reports witnesses") {
    auto ctx = make_context({"a", "b", "c", "d"});
    const auto& tab = data_table();
    auto rep = identity_check("p2 vs p8", tab.at("P2"), tab.at("P8"));
    CHECK_FALSE(rep.pass);
    CHECK(rep.offending_terms > 0);
    CHECK_FALSE(rep.witness.empty());
    auto ok = identity_check("p2 vs p2", tab.at("P2"), tab.at("P2"));
    CHECK(ok.pass);
}

TEST_CASE("data table degree and homogeneity audit") {
    const auto& tab = data_table();
    struct Want {
        const char* name;
        int deg;
    };
    const Want wants[] = {{"P2", 2},  {"P8", 8},   {"P12", 12}, {"P20", 20},
                          {"P24", 24}, {"Q20", 20}, {"Q24", 24}};
    for (const auto& w : wants) {
        int deg = -1;
        CHECK(tab.at(w.name).is_homogeneous(&deg));
        CHECK(deg == w.deg);
    }
    // every quintic coefficient is homogeneous of degree 16 (zeros allowed)
    const char* knames[] = {"k500", "k050", "k005", "k410", "k401", "k140", "k041",
                            "k104", "k014", "k320", "k302", "k230", "k032", "k203",
                            "k023", "k311", "k131", "k113", "k122", "k212", "k221"};
    int nonzero = 0;
    for (const char* k : knames) {
        const auto& p = tab.at(k);
        int deg = -1;
        CHECK(p.is_homogeneous(&deg));
        if (!p.is_zero()) {
            ++nonzero;
            CHECK(deg == 16);
        }
    }
    CHECK(nonzero == 17);
    // appendix evaluation anchors
    CHECK(tab.at("P8").eval_exact({Rat(1), Rat(0), Rat(0), Rat(0)}) == 1);
    CHECK(tab.at("P12").eval_exact({Rat(1), Rat(1), Rat(1), Rat(1)}) == 4096);
}

TEST_CASE("print/parse identity on every shipped constant") {
    const auto& tab = data_table();
    for (const auto& name : tab.names()) {
        const auto& p = tab.at(name);
        CHECK(parse_poly(p.str(), p.context()) == p);
    }
}

TEST_CASE("P12(1,1,1,1) independent accumulation oracle") {
    // independent of eval_exact: plain sum over the stored coefficient list
    const auto& p12 = data_table().at("P12");
    Rat acc(0);
    for (const auto& [e, c] : p12.terms()) acc += c;
    CHECK(acc == 4096);
}

TEST_CASE("data loader error paths") {
    CHECK_THROWS_AS(PolyTable::load_file("/nonexistent/path.poly"), InputError);
    CHECK_THROWS_AS(data_table().at("no_such_constant"), InputError);

    const std::string dir = "/tmp/k3atlas_loader_test";
    std::filesystem::create_directories(dir);
    {
        std::ofstream f(dir + "/bad.poly");
        f << "P: vars = a b\n a^2 + \n"; // dangling operator
    }
    CHECK_THROWS_AS(PolyTable::load_directory(dir), ParseError);
    {
        std::ofstream f(dir + "/bad.poly");
        f << "P: vars = a b\na^2\n\nP: vars = a b\nb\n"; // duplicate stanza
    }
    CHECK_THROWS_AS(PolyTable::load_directory(dir), InputError);
    std::filesystem::remove_all(dir);
}

TEST_CASE("arity errors") {
    auto ctx1 = make_context({"a", "b"});
    auto ctx2 = make_context({"a", "c"});
    auto p = parse_poly("a+b", ctx1);
    auto q = parse_poly("a+c", ctx2);
    CHECK_THROWS_AS(p + q, ArityError);
    CHECK_THROWS_AS(p * q, ArityError);
}
