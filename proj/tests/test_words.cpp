#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rba/algebra.hpp"
#include "rba/words.hpp"

using namespace rba;
using oracle::A;
using oracle::B;
using oracle::W;

namespace {
const Rbw one;                                  // the empty word
const Rbw p1 = W({B(one)});                     // P(1)
const std::vector<Letter> ax = {Letter("x")};
const std::vector<Letter> axy = {Letter("x"), Letter("y")};
const std::vector<std::string> rawx = {"x"};
const std::vector<std::string> rawxy = {"x", "y"};
} // namespace

TEST_CASE("letter names are validated") {
    CHECK_NOTHROW(Letter("x"));
    CHECK_NOTHROW(Letter("x1"));
    CHECK_NOTHROW(Letter("alpha_2"));
    CHECK_THROWS_AS(Letter(""), Error);
    CHECK_THROWS_AS(Letter("1x"), Error);
    CHECK_THROWS_AS(Letter("a-b"), Error);
    CHECK(is_valid_letter_name("x"));
    CHECK_FALSE(is_valid_letter_name("2y"));
}

TEST_CASE("the empty word and simple words render canonically") {
    CHECK(one.empty());
    CHECK(to_string(one) == "1");
    CHECK(to_string(W({A("x")})) == "x");
    CHECK(to_string(p1) == "P(1)");
    CHECK(to_string(W({A("x"), B(W({A("y")})), A("z")})) == "x*P(y)*z");
    CHECK(to_string(W({B(W({B(one)}))})) == "P(P(1))");
}

TEST_CASE("adjacent brackets are rejected with the offending position") {
    try {
        Rbw::make({B(one), B(one)});
        FAIL("expected AdjacentBracketsError");
    } catch (const AdjacentBracketsError& e) {
        CHECK(e.position == 0);
    }
    try {
        Rbw::make({A("x"), B(one), B(p1)});
        FAIL("expected AdjacentBracketsError");
    } catch (const AdjacentBracketsError& e) {
        CHECK(e.position == 1);
    }
    // a nested violation is caught when the inner word is constructed
    CHECK_THROWS_AS(Rbw::make({B(one), B(one)}), AdjacentBracketsError);
}

TEST_CASE("depth counts maximal bracket nesting") {
    CHECK(depth(one) == 0);
    CHECK(depth(W({A("x")})) == 0);
    CHECK(depth(p1) == 1);
    CHECK(depth(W({B(W({B(one)}))})) == 2);
    CHECK(depth(W({A("x"), B(W({A("y"), B(one)}))})) == 2);
}

TEST_CASE("degree counts brackets and letters") {
    Degree d = degree(W({B(one), A("x"), B(one)}));
    CHECK(d.deg_p == 2);
    CHECK(d.deg_x == 1);
    CHECK(d.total == 3);
    CHECK(total_degree(one) == 0);
    Degree dd = degree(W({B(W({B(one)}))}));
    CHECK(dd.deg_p == 2);
    CHECK(dd.deg_x == 0);
    CHECK(dd.total == 2);
}

TEST_CASE("bracketing increments depth and total degree") {
    for (const auto& w : enumerate_words(axy, 3)) {
        const Rbw bw = W({B(w)});
        CHECK(depth(bw) == depth(w) + 1);
        CHECK(total_degree(bw) == total_degree(w) + 1);
    }
}

TEST_CASE("standard decomposition groups maximal letter runs") {
    // x1 x2 is a single block of two letters
    const Rbw x12 = W({A("x1"), A("x2")});
    auto blocks = standard_decomposition(x12);
    REQUIRE(blocks.size() == 1);
    REQUIRE(blocks[0].is_letter_run());
    CHECK(blocks[0].letters().size() == 2);
    CHECK(breadth(x12) == 1);
    CHECK(x12.width() == 2);

    // x P(y) z has three blocks
    const Rbw w = W({A("x"), B(W({A("y")})), A("z")});
    auto b3 = standard_decomposition(w);
    REQUIRE(b3.size() == 3);
    REQUIRE(b3[0].is_letter_run());
    CHECK(b3[0].letters().size() == 1);
    CHECK(b3[1].is_bracket());
    CHECK(b3[1].inner() == W({A("y")}));
    REQUIRE(b3[2].is_letter_run());
    CHECK(b3[2].letters().size() == 1);
    CHECK(breadth(w) == 3);
    CHECK(w.width() == 3);

    CHECK(breadth(p1) == 1);
    CHECK_THROWS_AS(standard_decomposition(one), EmptyWordError);
    CHECK_THROWS_AS(breadth(one), EmptyWordError);
}

TEST_CASE("width is at least breadth") {
    for (const auto& w : enumerate_words(axy, 4)) {
        if (w.empty()) continue;
        CHECK(w.width() >= breadth(w));
    }
}

TEST_CASE("product factorization is the item sequence and round-trips") {
    const Rbw x12 = W({A("x1"), A("x2")});
    CHECK(diamond_factorization(x12).size() == 2);
    CHECK(x12.width() == 2);
    CHECK(diamond_factorization(one).empty());
    for (const auto& w : enumerate_words(axy, 4)) {
        auto factors = diamond_factorization(w);
        CHECK(w.width() == factors.size());
        std::vector<RbwItem> items;
        for (const auto& f : factors) items.push_back(f);
        CHECK(compare(Rbw::make(items), w) == 0);
    }
}

TEST_CASE("folding the factors with the product recovers the word exactly") {
    const WeightMode sym = WeightMode::symbolic();
    for (const auto& w : enumerate_words(axy, 5)) {
        LinComb acc = LinComb::unit();
        for (const auto& item : diamond_factorization(w))
            acc = diamond(acc, LinComb::basis(Rbw::make({item})), sym);
        CHECK(acc == LinComb::basis(w));
    }
}

TEST_CASE("factorization is unique across all structurally distinct words") {
    // generate every valid sequence independently; distinct sequences give
    // distinct words, and each word factors back into exactly its sequence
    std::set<std::string> seen;
    std::size_t count = 0;
    for (std::size_t d = 0; d <= 4; ++d) {
        for (const auto& w : oracle::brute_words_of_degree(rawxy, d)) {
            ++count;
            CHECK(seen.insert(to_string(w)).second);
            auto factors = diamond_factorization(w);
            std::vector<RbwItem> items;
            for (const auto& f : factors) items.push_back(f);
            CHECK(compare(Rbw::make(items), w) == 0);
        }
    }
    CHECK(count == seen.size());
}

TEST_CASE("degree is additive over valid concatenation") {
    const auto words = enumerate_words(axy, 3);
    for (const auto& u : words) {
        for (const auto& v : words) {
            if (total_degree(u) + total_degree(v) > 4) continue;
            if (!u.empty() && !v.empty() && u.items().back().is_bracket() &&
                v.items().front().is_bracket())
                continue; // concatenation would not be a single word
            std::vector<RbwItem> items = u.items();
            items.insert(items.end(), v.items().begin(), v.items().end());
            const Rbw uv = Rbw::make(items);
            CHECK(total_degree(uv) == total_degree(u) + total_degree(v));
        }
    }
}

TEST_CASE("enumeration matches an independent brute-force generator") {
    SUBCASE("one letter, degrees 0..4") {
        const std::vector<std::size_t> expected = {1, 2, 5, 14, 42};
        std::size_t running = 0;
        for (std::size_t d = 0; d <= 4; ++d) {
            auto brute = oracle::brute_words_of_degree(rawx, d);
            CHECK(brute.size() == expected[d]);
            std::set<std::string> brute_set;
            for (const auto& w : brute) brute_set.insert(to_string(w));
            CHECK(brute_set.size() == brute.size());

            auto enumerated = enumerate_words(ax, d);
            CHECK(enumerated.size() == running + expected[d]);
            running = enumerated.size();
            std::set<std::string> enum_set;
            for (const auto& w : enumerated)
                if (total_degree(w) == d) enum_set.insert(to_string(w));
            CHECK(enum_set == brute_set);
        }
    }
    SUBCASE("two letters, degrees 0..3") {
        const std::vector<std::size_t> expected = {1, 3, 11, 45};
        auto enumerated = enumerate_words(axy, 3);
        CHECK(enumerated.size() == 1 + 3 + 11 + 45);
        for (std::size_t d = 0; d <= 3; ++d) {
            auto brute = oracle::brute_words_of_degree(rawxy, d);
            CHECK(brute.size() == expected[d]);
            std::set<std::string> brute_set, enum_set;
            for (const auto& w : brute) brute_set.insert(to_string(w));
            for (const auto& w : enumerated)
                if (total_degree(w) == d) enum_set.insert(to_string(w));
            CHECK(enum_set == brute_set);
        }
    }
}

TEST_CASE("enumeration of low degrees lists the expected words") {
    auto d0 = enumerate_words(ax, 0);
    REQUIRE(d0.size() == 1);
    CHECK(d0[0].empty());

    auto d1 = enumerate_words(ax, 1);
    REQUIRE(d1.size() == 3);
    std::set<std::string> names;
    for (const auto& w : d1) names.insert(to_string(w));
    CHECK(names == std::set<std::string>{"1", "P(1)", "x"});

    auto d2 = enumerate_words(ax, 2);
    CHECK(d2.size() == 8);
    std::set<std::string> deg2;
    for (const auto& w : d2)
        if (total_degree(w) == 2) deg2.insert(to_string(w));
    CHECK(deg2 == std::set<std::string>{"P(P(1))", "P(1)*x", "P(x)", "x*P(1)", "x*x"});
}

TEST_CASE("enumeration is ordered by degree, then by rendering") {
    auto words = enumerate_words(axy, 3);
    for (std::size_t i = 0; i + 1 < words.size(); ++i) {
        const std::size_t da = total_degree(words[i]);
        const std::size_t db = total_degree(words[i + 1]);
        CHECK(da <= db);
        if (da == db) CHECK(to_string(words[i]) < to_string(words[i + 1]));
    }
}

TEST_CASE("every enumerated word satisfies the alternation invariant") {
    for (const auto& w : enumerate_words(axy, 4)) CHECK(oracle::valid_alternation(w));
}

TEST_CASE("word comparison is a strict total order") {
    auto words = enumerate_words(axy, 3);
    for (const auto& u : words) {
        CHECK(compare(u, u) == 0);
        for (const auto& v : words) {
            const int ab = compare(u, v);
            const int ba = compare(v, u);
            CHECK(ab == -ba);
            if (ab == 0) CHECK(to_string(u) == to_string(v));
        }
    }
}
