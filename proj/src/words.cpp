#include "rba/words.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace rba {

bool is_valid_letter_name(std::string_view name) {
    if (name.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

Letter::Letter(std::string n) : name(std::move(n)) {
    if (!is_valid_letter_name(name)) throw Error("invalid letter name '" + name + "'");
}

namespace {
const std::vector<RbwItem>& empty_items() {
    static const std::vector<RbwItem> e;
    return e;
}
} // namespace

const std::vector<RbwItem>& Rbw::items() const { return items_ ? *items_ : empty_items(); }
bool Rbw::itemsEmpty() const { return items_->empty(); }
std::size_t Rbw::width() const { return items().size(); }

Rbw Rbw::make(std::vector<RbwItem> items) {
    for (std::size_t i = 0; i + 1 < items.size(); ++i)
        if (items[i].is_bracket() && items[i + 1].is_bracket()) throw AdjacentBracketsError(i);
    if (items.empty()) return Rbw{};
    return Rbw(std::make_shared<const std::vector<RbwItem>>(std::move(items)));
}

Rbw make_word(std::vector<RbwItem> items) { return Rbw::make(std::move(items)); }

int compare(const RbwItem& a, const RbwItem& b) {
    if (a.is_atom() != b.is_atom()) return a.is_atom() ? -1 : 1;
    if (a.is_atom()) return a.letter().name.compare(b.letter().name);
    return compare(a.inner(), b.inner());
}

int compare(const Rbw& a, const Rbw& b) {
    const auto& x = a.items();
    const auto& y = b.items();
    const std::size_t n = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i)
        if (int c = compare(x[i], y[i]); c != 0) return c;
    return x.size() < y.size() ? -1 : (x.size() > y.size() ? 1 : 0);
}

std::size_t depth(const Rbw& w) {
    std::size_t d = 0;
    for (const auto& it : w.items())
        if (it.is_bracket()) d = std::max(d, depth(it.inner()) + 1);
    return d;
}

Degree degree(const Rbw& w) {
    Degree d;
    for (const auto& it : w.items()) {
        if (it.is_atom()) {
            ++d.deg_x;
        } else {
            Degree inner = degree(it.inner());
            d.deg_p += inner.deg_p + 1;
            d.deg_x += inner.deg_x;
        }
    }
    d.total = d.deg_p + d.deg_x;
    return d;
}

std::size_t total_degree(const Rbw& w) { return degree(w).total; }

std::vector<StdBlock> standard_decomposition(const Rbw& w) {
    if (w.empty()) throw EmptyWordError("standard decomposition is undefined for the empty word");
    std::vector<StdBlock> blocks;
    std::vector<Letter> run;
    for (const auto& it : w.items()) {
        if (it.is_atom()) {
            run.push_back(it.letter());
        } else {
            if (!run.empty()) {
                blocks.emplace_back(std::move(run));
                run.clear();
            }
            blocks.emplace_back(it.inner());
        }
    }
    if (!run.empty()) blocks.emplace_back(std::move(run));
    return blocks;
}

std::size_t breadth(const Rbw& w) { return standard_decomposition(w).size(); }

std::vector<RbwItem> diamond_factorization(const Rbw& w) { return w.items(); }

std::string to_string(const Rbw& w) {
    if (w.empty()) return "1";
    std::string out;
    bool first = true;
    for (const auto& it : w.items()) {
        if (!first) out += '*';
        first = false;
        if (it.is_atom())
            out += it.letter().name;
        else
            out += "P(" + to_string(it.inner()) + ")";
    }
    return out;
}

std::vector<Rbw> enumerate_words(const std::vector<Letter>& alphabet,
                                 std::size_t max_total_degree) {
    if (alphabet.empty()) throw Error("enumerate_words: empty alphabet");
    std::set<Letter> letters(alphabet.begin(), alphabet.end());

    // by_degree[d] holds every valid word of total degree exactly d.
    std::vector<std::vector<Rbw>> by_degree(max_total_degree + 1);
    by_degree[0].push_back(Rbw{});
    for (std::size_t d = 1; d <= max_total_degree; ++d) {
        auto& out = by_degree[d];
        for (const Letter& a : letters) {
            for (const Rbw& rest : by_degree[d - 1]) {
                std::vector<RbwItem> items;
                items.reserve(rest.width() + 1);
                items.emplace_back(a);
                items.insert(items.end(), rest.items().begin(), rest.items().end());
                out.push_back(Rbw::make(std::move(items)));
            }
        }
        for (std::size_t k = 0; k < d; ++k) {
            for (const Rbw& inner : by_degree[k]) {
                for (const Rbw& rest : by_degree[d - 1 - k]) {
                    if (!rest.empty() && rest.items().front().is_bracket()) continue;
                    std::vector<RbwItem> items;
                    items.reserve(rest.width() + 1);
                    items.push_back(RbwItem::bracket(inner));
                    items.insert(items.end(), rest.items().begin(), rest.items().end());
                    out.push_back(Rbw::make(std::move(items)));
                }
            }
        }
    }

    std::vector<Rbw> result;
    for (auto& slice : by_degree) {
        std::sort(slice.begin(), slice.end(),
                  [](const Rbw& a, const Rbw& b) { return to_string(a) < to_string(b); });
        result.insert(result.end(), slice.begin(), slice.end());
    }
    return result;
}

} // namespace rba
