#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rba/errors.hpp"

namespace rba {

/// True iff `name` matches the identifier grammar: [A-Za-z][A-Za-z0-9_]*.
bool is_valid_letter_name(std::string_view name);

/// An alphabet symbol.
struct Letter {
    std::string name;

    explicit Letter(std::string n);
    friend bool operator==(const Letter& a, const Letter& b) { return a.name == b.name; }
    friend bool operator<(const Letter& a, const Letter& b) { return a.name < b.name; }
};

class RbwItem;

/// A Rota-Baxter bracketed word: an alternating sequence of letters and
/// bracketed subwords, with no two brackets adjacent at any nesting level.
/// The empty sequence is the word 1, the algebra unit. Immutable value type;
/// copies share storage.
class Rbw {
public:
    Rbw() = default; // the word 1

    /// Validating constructor; throws AdjacentBracketsError on a violation.
    static Rbw make(std::vector<RbwItem> items);

    const std::vector<RbwItem>& items() const;
    bool empty() const { return !items_ || itemsEmpty(); }

    /// Width: length of the diamond factorization (number of items).
    std::size_t width() const;

private:
    explicit Rbw(std::shared_ptr<const std::vector<RbwItem>> p) : items_(std::move(p)) {}
    bool itemsEmpty() const;

    std::shared_ptr<const std::vector<RbwItem>> items_; // null means empty
};

/// One factor of a word: a single letter or a bracketed subword.
class RbwItem {
public:
    explicit RbwItem(Letter l) : node_(std::move(l)) {}
    explicit RbwItem(Rbw inner) : node_(std::move(inner)) {}

    static RbwItem atom(std::string name) { return RbwItem(Letter(std::move(name))); }
    static RbwItem bracket(Rbw inner) { return RbwItem(std::move(inner)); }

    bool is_atom() const { return std::holds_alternative<Letter>(node_); }
    bool is_bracket() const { return !is_atom(); }
    const Letter& letter() const { return std::get<Letter>(node_); }
    const Rbw& inner() const { return std::get<Rbw>(node_); }

private:
    std::variant<Letter, Rbw> node_;
};

/// A block of the standard decomposition: a maximal run of letters or a
/// single bracket. Blocks strictly alternate between the two kinds.
class StdBlock {
public:
    explicit StdBlock(std::vector<Letter> run) : node_(std::move(run)) {}
    explicit StdBlock(Rbw inner) : node_(std::move(inner)) {}

    bool is_letter_run() const { return std::holds_alternative<std::vector<Letter>>(node_); }
    bool is_bracket() const { return !is_letter_run(); }
    const std::vector<Letter>& letters() const { return std::get<std::vector<Letter>>(node_); }
    const Rbw& inner() const { return std::get<Rbw>(node_); }

private:
    std::variant<std::vector<Letter>, Rbw> node_;
};

/// Structural statistics of a word: bracket count, letter count, their sum.
struct Degree {
    std::size_t deg_p = 0;
    std::size_t deg_x = 0;
    std::size_t total = 0;
};

int compare(const Rbw& a, const Rbw& b);
int compare(const RbwItem& a, const RbwItem& b);

inline bool operator==(const Rbw& a, const Rbw& b) { return compare(a, b) == 0; }
inline bool operator!=(const Rbw& a, const Rbw& b) { return compare(a, b) != 0; }
inline bool operator==(const RbwItem& a, const RbwItem& b) { return compare(a, b) == 0; }

/// Strict weak order for associative containers keyed on words.
struct RbwOrder {
    bool operator()(const Rbw& a, const Rbw& b) const { return compare(a, b) < 0; }
};

/// Validating constructor (same as Rbw::make).
Rbw make_word(std::vector<RbwItem> items);

/// Maximal bracket-nesting level.
std::size_t depth(const Rbw& w);

Degree degree(const Rbw& w);
std::size_t total_degree(const Rbw& w);

/// Unique alternation of maximal letter runs and single brackets.
/// Throws EmptyWordError on the word 1.
std::vector<StdBlock> standard_decomposition(const Rbw& w);

/// Number of blocks of the standard decomposition. Undefined (throws) on 1.
std::size_t breadth(const Rbw& w);

/// The unique alternating factor sequence of w under the diamond product;
/// empty for the word 1. Equal to the item sequence.
std::vector<RbwItem> diamond_factorization(const Rbw& w);

/// Canonical rendering: items joined with '*', brackets as "P(...)", the
/// empty word as "1".
std::string to_string(const Rbw& w);

/// All valid words of total degree <= max_total_degree, each exactly once,
/// sorted by (total degree, canonical rendering). Deterministic.
std::vector<Rbw> enumerate_words(const std::vector<Letter>& alphabet,
                                 std::size_t max_total_degree);

} // namespace rba
