#pragma once

#include <map>

#include "rba/coeffs.hpp"
#include "rba/words.hpp"

namespace rba {

/// An element of the free Rota-Baxter algebra: a finite linear combination
/// of words with Coeff scalars. Zero coefficients are never stored.
class LinComb {
public:
    LinComb() = default; // zero

    static LinComb zero() { return LinComb{}; }
    static LinComb unit() { return basis(Rbw{}); }
    static LinComb basis(Rbw w) { return term(std::move(w), Coeff(1)); }
    static LinComb term(Rbw w, Coeff c);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<Rbw, Coeff, RbwOrder>& terms() const { return terms_; }
    Coeff coefficient(const Rbw& w) const;

    /// Accumulate c onto the coefficient of w, pruning on cancellation.
    LinComb& add_term(const Rbw& w, const Coeff& c);

    LinComb& operator+=(const LinComb& o);
    LinComb& operator-=(const LinComb& o);
    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }

    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LinComb& a, const LinComb& b) { return !(a == b); }

private:
    std::map<Rbw, Coeff, RbwOrder> terms_;
};

inline LinComb add(const LinComb& a, const LinComb& b) { return a + b; }
LinComb scale(const Coeff& c, const LinComb& a);
LinComb specialize(const LinComb& a, const WeightMode& mode);

/// The Rota-Baxter operator P: the linear extension of w -> P(w).
LinComb rb_operator(const LinComb& a);

/// Diamond product of two basis words: concatenation across a letter
/// boundary, the three-term Rota-Baxter expansion across a bracket-bracket
/// boundary, spliced back between the untouched outer factors.
LinComb diamond_basis(const Rbw& w, const Rbw& v, const WeightMode& mode);

/// Bilinear extension of diamond_basis.
LinComb diamond(const LinComb& a, const LinComb& b, const WeightMode& mode);

/// Whether P(u)<>P(v) = P(u<>P(v)) + P(P(u)<>v) + lambda P(u<>v) holds exactly.
bool check_rota_baxter(const LinComb& u, const LinComb& v, const WeightMode& mode);

} // namespace rba
