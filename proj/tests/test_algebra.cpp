#include <doctest.h>

#include <vector>

#include "oracles.hpp"
#include "rba/algebra.hpp"

using namespace rba;
using oracle::A;
using oracle::B;
using oracle::W;

namespace {
const Rbw one;
const Rbw xw = W({A("x")});
const Rbw yw = W({A("y")});
const Rbw p1 = W({B(one)});
const Rbw pp1 = W({B(p1)});
const std::vector<Letter> ax = {Letter("x")};
const std::vector<Letter> axy = {Letter("x"), Letter("y")};
const WeightMode sym = WeightMode::symbolic();
const WeightMode zero = WeightMode::numeric(0);
} // namespace

TEST_CASE("linear combinations store canceled terms nowhere") {
    LinComb a = LinComb::term(xw, Coeff(1));
    LinComb b = LinComb::term(xw, Coeff(-1));
    CHECK((a + b).is_zero());
    CHECK(LinComb::term(xw, Coeff(0)).is_zero());
    LinComb c = LinComb::term(xw, Coeff(2)) + LinComb::term(yw, Coeff::lambda());
    CHECK(c.size() == 2);
    CHECK(c.coefficient(xw) == Coeff(2));
    CHECK(c.coefficient(yw) == Coeff::lambda());
    CHECK(c.coefficient(one).is_zero());
    c.add_term(yw, -Coeff::lambda());
    CHECK(c.size() == 1);
}

TEST_CASE("scale and specialize are linear") {
    LinComb c = LinComb::term(xw, Coeff(2) + Coeff::lambda()) + LinComb::basis(p1);
    CHECK(scale(Coeff(0), c).is_zero());
    CHECK(scale(Coeff(1), c) == c);
    LinComb at0 = specialize(c, zero);
    CHECK(at0.coefficient(xw) == Coeff(2));
    CHECK(at0.coefficient(p1) == Coeff(1));
    LinComb wiped = specialize(LinComb::term(xw, Coeff::lambda()), zero);
    CHECK(wiped.is_zero());
}

TEST_CASE("the operator P wraps each basis word") {
    CHECK(rb_operator(LinComb::unit()) == LinComb::basis(p1));
    CHECK(rb_operator(LinComb::basis(p1)) == LinComb::basis(pp1));
    LinComb c = LinComb::term(xw, Coeff(3));
    CHECK(rb_operator(c) == LinComb::term(W({B(xw)}), Coeff(3)));
    CHECK(rb_operator(LinComb::zero()).is_zero());
    // P is injective on the enumerated basis
    for (const auto& w : enumerate_words(axy, 3))
        CHECK(total_degree(W({B(w)})) == total_degree(w) + 1);
}

TEST_CASE("diamond across a letter boundary is concatenation") {
    CHECK(diamond_basis(xw, yw, sym) == LinComb::basis(W({A("x"), A("y")})));
    CHECK(diamond_basis(xw, p1, sym) == LinComb::basis(W({A("x"), B(one)})));
    CHECK(diamond_basis(p1, xw, sym) == LinComb::basis(W({B(one), A("x")})));
    CHECK(diamond_basis(one, p1, sym) == LinComb::basis(p1));
    CHECK(diamond_basis(p1, one, sym) == LinComb::basis(p1));
}

TEST_CASE("diamond across a bracket boundary expands by the three-term rule") {
    // P(1) <> P(1) = 2 P(P(1)) + lambda P(1)
    LinComb got = diamond_basis(p1, p1, sym);
    LinComb expected = LinComb::term(pp1, Coeff(2)) + LinComb::term(p1, Coeff::lambda());
    CHECK(got == expected);

    // at weight 0 the lambda term disappears
    CHECK(diamond_basis(p1, p1, zero) == LinComb::term(pp1, Coeff(2)));

    // P(x) <> P(y) = P(x P(y)) + P(P(x) y) + lambda P(x y)
    const Rbw px = W({B(xw)});
    const Rbw py = W({B(yw)});
    LinComb pxy = diamond_basis(px, py, sym);
    LinComb want = LinComb::basis(W({B(W({A("x"), B(yw)}))})) +
                   LinComb::basis(W({B(W({B(xw), A("y")}))})) +
                   LinComb::term(W({B(W({A("x"), A("y")}))}), Coeff::lambda());
    CHECK(pxy == want);
}

TEST_CASE("diamond splices the expansion between outer factors") {
    // (x P(1)) <> (P(1) y) = x (P(1) <> P(1)) y
    const Rbw u = W({A("x"), B(one)});
    const Rbw v = W({B(one), A("y")});
    LinComb got = diamond_basis(u, v, sym);
    LinComb expected =
        LinComb::term(W({A("x"), B(p1), A("y")}), Coeff(2)) +
        LinComb::term(W({A("x"), B(one), A("y")}), Coeff::lambda());
    CHECK(got == expected);
}

TEST_CASE("diamond is bilinear with unit 1") {
    const LinComb a = LinComb::term(xw, Coeff(2)) + LinComb::term(p1, Coeff::lambda());
    const LinComb b = LinComb::basis(yw) - LinComb::basis(one);
    CHECK(diamond(LinComb::unit(), a, sym) == a);
    CHECK(diamond(a, LinComb::unit(), sym) == a);
    CHECK(diamond(LinComb::zero(), a, sym).is_zero());
    LinComb lhs = diamond(a, b, sym);
    LinComb rhs = diamond(a, LinComb::basis(yw), sym) - diamond(a, LinComb::basis(one), sym);
    CHECK(lhs == rhs);
}

TEST_CASE("diamond results stay inside the span of valid words") {
    const auto words = enumerate_words(axy, 3);
    for (const auto& u : words) {
        for (const auto& v : words) {
            if (total_degree(u) + total_degree(v) > 3) continue;
            const LinComb product = diamond_basis(u, v, sym);
            for (const auto& [w, c] : product.terms()) {
                CHECK(oracle::valid_alternation(w));
                CHECK_FALSE(c.is_zero());
            }
        }
    }
}

TEST_CASE("specialization commutes with the product") {
    const std::vector<WeightMode> modes = {zero, WeightMode::numeric(2),
                                           WeightMode::numeric(Rational(-1, 2))};
    const auto words = enumerate_words(axy, 3);
    for (const auto& u : words) {
        for (const auto& v : words) {
            if (total_degree(u) + total_degree(v) > 3) continue;
            const LinComb symbolic_product = diamond_basis(u, v, sym);
            for (const auto& m : modes)
                CHECK(specialize(symbolic_product, m) == diamond_basis(u, v, m));
        }
    }
}

TEST_CASE("the Rota-Baxter identity holds on basis pairs up to degree 3") {
    std::size_t pairs = 0;
    const auto words = enumerate_words(axy, 3);
    for (const auto& u : words) {
        for (const auto& v : words) {
            if (total_degree(u) + total_degree(v) > 3) continue;
            ++pairs;
            CHECK(check_rota_baxter(LinComb::basis(u), LinComb::basis(v), sym));
        }
    }
    CHECK(pairs > 0);
    // and on a couple of genuine linear combinations
    const LinComb a = LinComb::term(xw, Coeff(2)) - LinComb::basis(p1);
    const LinComb b = LinComb::basis(yw) + LinComb::term(one, Coeff::lambda());
    CHECK(check_rota_baxter(a, b, sym));
    CHECK(check_rota_baxter(a, b, zero));
    CHECK(check_rota_baxter(LinComb::zero(), b, sym));
}

TEST_CASE("the product is associative and unital up to degree 3") {
    const auto words = enumerate_words(axy, 3);
    for (const auto& u : words) {
        CHECK(diamond_basis(one, u, sym) == LinComb::basis(u));
        CHECK(diamond_basis(u, one, sym) == LinComb::basis(u));
        for (const auto& v : words) {
            const std::size_t duv = total_degree(u) + total_degree(v);
            if (duv > 3) continue;
            for (const auto& w : words) {
                if (duv + total_degree(w) > 3) continue;
                LinComb left = diamond(diamond_basis(u, v, sym), LinComb::basis(w), sym);
                LinComb right = diamond(LinComb::basis(u), diamond_basis(v, w, sym), sym);
                CHECK(left == right);
            }
        }
    }
}

TEST_CASE("degree is additive at weight zero but not symbolically") {
    // every term of u<>v at weight 0 has degree deg u + deg v
    const auto words = enumerate_words(ax, 3);
    for (const auto& u : words) {
        for (const auto& v : words) {
            if (total_degree(u) + total_degree(v) > 4) continue;
            const std::size_t expect = total_degree(u) + total_degree(v);
            const LinComb product = diamond_basis(u, v, zero);
            for (const auto& [w, c] : product.terms()) {
                CHECK(total_degree(w) == expect);
                CHECK_FALSE(c.is_zero());
            }
        }
    }
    // symbolically P(1)<>P(1) mixes degrees 1 and 2
    LinComb mixed = diamond_basis(p1, p1, sym);
    CHECK(mixed.coefficient(p1) == Coeff::lambda());
    CHECK(mixed.coefficient(pp1) == Coeff(2));
}
