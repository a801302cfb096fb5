#include <doctest.h>

#include <random>

#include "characters.hpp"

using namespace llc;

namespace {

// smallest n > 0 with c^n trivial, by repeated multiplication
long order_by_powers(const SmoothChar& c, long cap = 200) {
    SmoothChar p = c;
    for (long n = 1; n <= cap; ++n) {
        if (p.is_trivial()) return n;
        p = p * c;
    }
    return 0;
}

}  // namespace

TEST_CASE("square-class characters") {
    auto e2 = SmoothChar::named("eta2"), e2p = SmoothChar::named("eta2'"), eta = SmoothChar::named("eta");
    CHECK((e2 * e2).is_trivial());
    CHECK(e2 * e2p == eta);
    CHECK(SmoothChar::nu(mpq_class(1, 2)) * e2 != SmoothChar::nu(mpq_class(1, 2)) * e2p);
    CHECK(e2.order() == 2);
    CHECK(SmoothChar().order() == 1);
    CHECK(eta.is_unramified());
    CHECK_FALSE(e2.is_unramified());
}

TEST_CASE("inverse and real exponent") {
    CHECK(SmoothChar::nu(1).inv() == SmoothChar::nu(-1));
    CHECK(e_of(SmoothChar::parse("nu^{1/2}*eta2")) == mpq_class(1, 2));
    CHECK(e_of(SmoothChar::named("eta")) == 0);
    CHECK(e_of(SmoothChar::parse("nu^{-3/2}")) == mpq_class(-3, 2));
    CHECK(SmoothChar::parse("nu^{1/2}*eta2").unitary_part() == SmoothChar::named("eta2"));
}

TEST_CASE("declared generic labels") {
    auto g = declare_label_group({{"zeta", 6, false}, {"x", 0, false}});
    auto z = SmoothChar::named("zeta", g);
    CHECK(order_of(z) == 6);
    CHECK(order_by_powers(z) == 6);
    CHECK(z.pow(6).is_trivial());
    CHECK(z.pow(3).order() == order_by_powers(z.pow(3)));
    CHECK(z.pow(2).order() == 3);
    auto x = SmoothChar::named("x", g);
    CHECK(x.order() == 0);
    CHECK(order_by_powers(x) == 0);
    CHECK((x * SmoothChar::named("eta2", g)).order() == 0);
    CHECK_FALSE((x * x.inv()) != SmoothChar(g));
}

TEST_CASE("errors") {
    try {
        SmoothChar::parse("zz");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NeedsDeclaration);
    }
    auto g = declare_label_group({{"zeta", 6, false}});
    try {
        auto bad = SmoothChar::named("eta2") * SmoothChar::named("zeta", g);
        (void)bad;
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::LabelGroupMismatch);
    }
    CHECK_THROWS_AS(SmoothChar::parse("nu^{1/0}"), Error);
}

TEST_CASE("char_op") {
    auto a = SmoothChar::named("eta2"), b = SmoothChar::named("eta2'");
    CHECK(char_op(a, b, CharOp::Mul).chr == SmoothChar::named("eta"));
    CHECK(char_op(a, a, CharOp::Eq).is_bool);
    CHECK(char_op(a, a, CharOp::Eq).value);
    CHECK(char_op(SmoothChar::nu(2), a, CharOp::Inv).chr == SmoothChar::nu(-2));
}

TEST_CASE("values on square classes") {
    auto eta = SmoothChar::named("eta");
    CHECK(eta.value_on_square_class("1") == 1);
    CHECK(eta.value_on_square_class("eps") == 1);
    CHECK(eta.value_on_square_class("varpi") == -1);
    auto e2 = SmoothChar::named("eta2"), e2p = SmoothChar::named("eta2'");
    for (auto cls : {"1", "eps", "varpi", "eps*varpi"})
        CHECK(e2.value_on_square_class(cls) * e2p.value_on_square_class(cls) == eta.value_on_square_class(cls));
    auto g = declare_label_group({{"zeta", 2, false}});
    CHECK_THROWS_AS(SmoothChar::named("zeta", g).value_on_square_class("eps"), Error);
}

TEST_CASE("group axioms on random characters") {
    auto g = declare_label_group({{"x", 0, false}, {"y", 4, true}});
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> ex(-6, 6), k(-3, 3);
    auto rnd = [&] {
        SmoothChar c = SmoothChar::nu(mpq_class(ex(rng), 2), g);
        c = c * SmoothChar::named("x", g).pow(k(rng)) * SmoothChar::named("y", g).pow(k(rng));
        if (rng() % 2) c = c * SmoothChar::named("eta2", g);
        if (rng() % 2) c = c * SmoothChar::named("eta2'", g);
        return c;
    };
    for (int i = 0; i < 500; ++i) {
        auto a = rnd(), b = rnd(), c = rnd();
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a * a.inv()).is_trivial());
        CHECK(SmoothChar::parse(a.str(), g) == a);
        CHECK(e_of(a * b) == e_of(a) + e_of(b));
        long o = a.order();
        CHECK(o == order_by_powers(a));
    }
}
