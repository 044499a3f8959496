#pragma once

#include <array>
#include <map>
#include <utility>

#include "rba/algebra.hpp"

namespace rba {

struct RbwPairOrder {
    bool operator()(const std::pair<Rbw, Rbw>& a, const std::pair<Rbw, Rbw>& b) const {
        if (int c = compare(a.first, b.first); c != 0) return c < 0;
        return compare(a.second, b.second) < 0;
    }
};

struct RbwTripleOrder {
    bool operator()(const std::array<Rbw, 3>& a, const std::array<Rbw, 3>& b) const {
        for (int i = 0; i < 3; ++i)
            if (int c = compare(a[i], b[i]); c != 0) return c < 0;
        return false;
    }
};

// An element of the tensor square: a finite sum of coefficiented word pairs.
class Tensor2 {
public:
    using Terms = std::map<std::pair<Rbw, Rbw>, Coeff, RbwPairOrder>;

    Tensor2() = default;

    static Tensor2 zero() { return {}; }
    static Tensor2 term(Rbw left, Rbw right, Coeff c);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }
    Coeff coefficient(const Rbw& left, const Rbw& right) const;

    Tensor2& add_term(const Rbw& left, const Rbw& right, const Coeff& c);
    Tensor2& operator+=(const Tensor2& o);
    Tensor2& operator-=(const Tensor2& o);

    friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
    friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
    friend bool operator==(const Tensor2& a, const Tensor2& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Tensor2& a, const Tensor2& b) { return !(a == b); }

private:
    Terms terms_;
};

// An element of the tensor cube, used only to state coassociativity.
class Tensor3 {
public:
    using Terms = std::map<std::array<Rbw, 3>, Coeff, RbwTripleOrder>;

    Tensor3() = default;

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    Tensor3& add_term(const Rbw& a, const Rbw& b, const Rbw& c, const Coeff& coeff);

    friend bool operator==(const Tensor3& a, const Tensor3& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Tensor3& a, const Tensor3& b) { return !(a == b); }

private:
    Terms terms_;
};

Tensor2 scale(const Coeff& c, const Tensor2& t);
Tensor2 specialize(const Tensor2& t, const WeightMode& mode);

// Componentwise product on the tensor square:
// (a (x) b) <> (c (x) d) = (a <> c) (x) (b <> d), extended bilinearly.
Tensor2 tensor2_diamond(const Tensor2& s, const Tensor2& t, const WeightMode& mode);

// The coproduct on a basis word: unit and letters as primitives, brackets via
// cop(P(w)) = P(w) (x) 1 + (id (x) P) cop(w), and multiplicativity across the
// diamond factorization.
Tensor2 coproduct_basis(const Rbw& w, const WeightMode& mode);

// Linear extension of coproduct_basis.
Tensor2 coproduct(const LinComb& a, const WeightMode& mode);

// The counit: the coefficient of the empty word.
Coeff counit(const LinComb& a);

// cop(w) - w (x) 1 - 1 (x) w for w != 1.
Tensor2 reduced_coproduct(const Rbw& w, const WeightMode& mode);

// (cop (x) id) cop(w) and (id (x) cop) cop(w).
Tensor3 iterated_coproduct_left(const Rbw& w, const WeightMode& mode);
Tensor3 iterated_coproduct_right(const Rbw& w, const WeightMode& mode);

bool check_coassociativity(const Rbw& w, const WeightMode& mode);
bool check_counit_laws(const Rbw& w, const WeightMode& mode);
bool check_bialgebra_compat(const Rbw& u, const Rbw& v, const WeightMode& mode);

} // namespace rba
