#include "rba/coalgebra.hpp"

#include "rba/errors.hpp"

namespace rba {

Tensor2 Tensor2::term(Rbw left, Rbw right, Coeff c) {
    Tensor2 out;
    if (!c.is_zero()) out.terms_.emplace(std::pair{std::move(left), std::move(right)}, std::move(c));
    return out;
}

Coeff Tensor2::coefficient(const Rbw& left, const Rbw& right) const {
    auto it = terms_.find({left, right});
    return it == terms_.end() ? Coeff{} : it->second;
}

Tensor2& Tensor2::add_term(const Rbw& left, const Rbw& right, const Coeff& c) {
    if (c.is_zero()) return *this;
    auto [it, inserted] = terms_.try_emplace({left, right}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

Tensor2& Tensor2::operator+=(const Tensor2& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

Tensor3& Tensor3::add_term(const Rbw& a, const Rbw& b, const Rbw& c, const Coeff& coeff) {
    if (coeff.is_zero()) return *this;
    auto [it, inserted] = terms_.try_emplace({a, b, c}, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

Tensor2 scale(const Coeff& c, const Tensor2& t) {
    Tensor2 out;
    if (c.is_zero()) return out;
    for (const auto& [k, ct] : t.terms()) out.add_term(k.first, k.second, c * ct);
    return out;
}

Tensor2 specialize(const Tensor2& t, const WeightMode& mode) {
    if (mode.is_symbolic()) return t;
    Tensor2 out;
    for (const auto& [k, c] : t.terms()) out.add_term(k.first, k.second, specialize(c, mode));
    return out;
}

Tensor2 tensor2_diamond(const Tensor2& s, const Tensor2& t, const WeightMode& mode) {
    Tensor2 out;
    for (const auto& [ks, cs] : s.terms())
        for (const auto& [kt, ct] : t.terms()) {
            const Coeff c = specialize(cs * ct, mode);
            const LinComb left = diamond_basis(ks.first, kt.first, mode);
            const LinComb right = diamond_basis(ks.second, kt.second, mode);
            for (const auto& [lw, lc] : left.terms())
                for (const auto& [rw, rc] : right.terms())
                    out.add_term(lw, rw, c * lc * rc);
        }
    return out;
}

namespace {

// The coproduct of a single factorization item (a letter or a bracket).
Tensor2 item_coproduct(const RbwItem& item, const WeightMode& mode) {
    const Rbw one;
    if (item.is_atom()) {
        const Rbw w = Rbw::make({item});
        Tensor2 out = Tensor2::term(w, one, Coeff(1));
        out.add_term(one, w, Coeff(1));
        return out;
    }
    // cop(P(w)) = P(w) (x) 1 + (id (x) P) cop(w)
    Tensor2 out = Tensor2::term(Rbw::make({item}), one, Coeff(1));
    const Tensor2 inner = coproduct_basis(item.inner(), mode);
    for (const auto& [k, c] : inner.terms())
        out.add_term(k.first, Rbw::make({RbwItem::bracket(k.second)}), c);
    return out;
}

} // namespace

Tensor2 coproduct_basis(const Rbw& w, const WeightMode& mode) {
    if (w.empty()) return Tensor2::term(Rbw{}, Rbw{}, Coeff(1));
    const auto& items = w.items();
    Tensor2 out = item_coproduct(items.front(), mode);
    for (std::size_t i = 1; i < items.size(); ++i)
        out = tensor2_diamond(out, item_coproduct(items[i], mode), mode);
    return out;
}

Tensor2 coproduct(const LinComb& a, const WeightMode& mode) {
    Tensor2 out;
    for (const auto& [w, c] : a.terms())
        out += scale(specialize(c, mode), coproduct_basis(w, mode));
    return out;
}

Coeff counit(const LinComb& a) { return a.coefficient(Rbw{}); }

Tensor2 reduced_coproduct(const Rbw& w, const WeightMode& mode) {
    if (w.empty()) throw EmptyWordError("reduced coproduct is undefined on the empty word");
    Tensor2 out = coproduct_basis(w, mode);
    const Rbw one;
    out.add_term(w, one, Coeff(-1));
    out.add_term(one, w, Coeff(-1));
    return out;
}

Tensor3 iterated_coproduct_left(const Rbw& w, const WeightMode& mode) {
    Tensor3 out;
    const Tensor2 cop = coproduct_basis(w, mode);
    for (const auto& [k, c] : cop.terms()) {
        const Tensor2 left = coproduct_basis(k.first, mode);
        for (const auto& [kk, cc] : left.terms())
            out.add_term(kk.first, kk.second, k.second, c * cc);
    }
    return out;
}

Tensor3 iterated_coproduct_right(const Rbw& w, const WeightMode& mode) {
    Tensor3 out;
    const Tensor2 cop = coproduct_basis(w, mode);
    for (const auto& [k, c] : cop.terms()) {
        const Tensor2 right = coproduct_basis(k.second, mode);
        for (const auto& [kk, cc] : right.terms())
            out.add_term(k.first, kk.first, kk.second, c * cc);
    }
    return out;
}

bool check_coassociativity(const Rbw& w, const WeightMode& mode) {
    return iterated_coproduct_left(w, mode) == iterated_coproduct_right(w, mode);
}

bool check_counit_laws(const Rbw& w, const WeightMode& mode) {
    const Tensor2 cop = coproduct_basis(w, mode);
    LinComb left_collapsed;   // (eps (x) id) cop(w)
    LinComb right_collapsed;  // (id (x) eps) cop(w)
    for (const auto& [k, c] : cop.terms()) {
        if (k.first.empty()) left_collapsed.add_term(k.second, c);
        if (k.second.empty()) right_collapsed.add_term(k.first, c);
    }
    const LinComb expected = specialize(LinComb::basis(w), mode);
    return left_collapsed == expected && right_collapsed == expected;
}

bool check_bialgebra_compat(const Rbw& u, const Rbw& v, const WeightMode& mode) {
    const LinComb uv = diamond_basis(u, v, mode);
    if (coproduct(uv, mode) !=
        tensor2_diamond(coproduct_basis(u, mode), coproduct_basis(v, mode), mode))
        return false;
    const Coeff eps_uv = counit(uv);
    const Coeff eps_u = counit(LinComb::basis(u));
    const Coeff eps_v = counit(LinComb::basis(v));
    return eps_uv == specialize(eps_u * eps_v, mode);
}

} // namespace rba
