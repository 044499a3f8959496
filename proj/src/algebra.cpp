#include "rba/algebra.hpp"

namespace rba {

LinComb LinComb::term(Rbw w, Coeff c) {
    LinComb out;
    if (!c.is_zero()) out.terms_.emplace(std::move(w), std::move(c));
    return out;
}

Coeff LinComb::coefficient(const Rbw& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Coeff{} : it->second;
}

LinComb& LinComb::add_term(const Rbw& w, const Coeff& c) {
    if (c.is_zero()) return *this;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

LinComb& LinComb::operator+=(const LinComb& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

LinComb& LinComb::operator-=(const LinComb& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

LinComb scale(const Coeff& c, const LinComb& a) {
    LinComb out;
    if (c.is_zero()) return out;
    for (const auto& [w, cw] : a.terms()) out.add_term(w, c * cw);
    return out;
}

LinComb specialize(const LinComb& a, const WeightMode& mode) {
    if (mode.is_symbolic()) return a;
    LinComb out;
    for (const auto& [w, c] : a.terms()) out.add_term(w, specialize(c, mode));
    return out;
}

LinComb rb_operator(const LinComb& a) {
    LinComb out;
    for (const auto& [w, c] : a.terms())
        out.add_term(Rbw::make({RbwItem::bracket(w)}), c);
    return out;
}

LinComb diamond_basis(const Rbw& w, const Rbw& v, const WeightMode& mode) {
    if (w.empty()) return LinComb::basis(v);
    if (v.empty()) return LinComb::basis(w);
    const auto& wi = w.items();
    const auto& vi = v.items();
    const RbwItem& left = wi.back();
    const RbwItem& right = vi.front();

    if (left.is_atom() || right.is_atom()) {
        // plain concatenation; the boundary is not bracket-bracket
        std::vector<RbwItem> items;
        items.reserve(wi.size() + vi.size());
        items.insert(items.end(), wi.begin(), wi.end());
        items.insert(items.end(), vi.begin(), vi.end());
        return LinComb::basis(Rbw::make(std::move(items)));
    }

    // bracket-bracket boundary: P(a)<>P(b) = P(a<>P(b)) + P(P(a)<>b) + lambda P(a<>b)
    const Rbw& a = left.inner();
    const Rbw& b = right.inner();
    const Rbw pa = Rbw::make({left});
    const Rbw pb = Rbw::make({right});
    LinComb boundary = rb_operator(diamond_basis(a, pb, mode));
    boundary += rb_operator(diamond_basis(pa, b, mode));
    boundary += scale(mode.weight(), rb_operator(diamond_basis(a, b, mode)));

    // splice each bracketed boundary term back between the outer factors
    LinComb out;
    for (const auto& [mid, c] : boundary.terms()) {
        std::vector<RbwItem> items;
        items.reserve(wi.size() + vi.size() - 1);
        items.insert(items.end(), wi.begin(), wi.end() - 1);
        items.insert(items.end(), mid.items().begin(), mid.items().end());
        items.insert(items.end(), vi.begin() + 1, vi.end());
        out.add_term(Rbw::make(std::move(items)), c);
    }
    return out;
}

LinComb diamond(const LinComb& a, const LinComb& b, const WeightMode& mode) {
    LinComb out;
    for (const auto& [w, cw] : a.terms())
        for (const auto& [v, cv] : b.terms())
            out += scale(specialize(cw * cv, mode), diamond_basis(w, v, mode));
    return out;
}

bool check_rota_baxter(const LinComb& u, const LinComb& v, const WeightMode& mode) {
    const LinComb pu = rb_operator(u);
    const LinComb pv = rb_operator(v);
    const LinComb lhs = diamond(pu, pv, mode);
    LinComb rhs = rb_operator(diamond(u, pv, mode));
    rhs += rb_operator(diamond(pu, v, mode));
    rhs += scale(mode.weight(), rb_operator(diamond(u, v, mode)));
    return lhs == specialize(rhs, mode);
}

} // namespace rba
