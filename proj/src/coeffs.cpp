#include "rba/coeffs.hpp"

namespace rba {

Coeff::Coeff(Rational v) {
    if (v != 0) terms_.emplace(0u, std::move(v));
}

Coeff Coeff::lambda(unsigned power) { return monomial(Rational(1), power); }

Coeff Coeff::monomial(Rational c, unsigned power) {
    Coeff out;
    if (c != 0) out.terms_.emplace(power, std::move(c));
    return out;
}

bool Coeff::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

Rational Coeff::at(unsigned power) const {
    auto it = terms_.find(power);
    return it == terms_.end() ? Rational(0) : it->second;
}

Coeff& Coeff::operator+=(const Coeff& o) {
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Coeff& Coeff::operator-=(const Coeff& o) { return *this += -o; }

Coeff Coeff::operator-() const {
    Coeff out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Coeff operator*(const Coeff& a, const Coeff& b) {
    Coeff out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            auto [it, inserted] = out.terms_.try_emplace(ea + eb, Rational(ca * cb));
            if (!inserted) {
                it->second += ca * cb;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    return out;
}

Coeff& Coeff::operator*=(const Coeff& o) { return *this = *this * o; }

Coeff WeightMode::weight() const {
    return is_symbolic() ? Coeff::lambda() : Coeff(*value_);
}

Coeff specialize(const Coeff& a, const WeightMode& mode) {
    if (mode.is_symbolic()) return a;
    Rational acc(0);
    Rational pw(1);
    unsigned reached = 0;
    for (const auto& [e, c] : a.terms()) {
        for (; reached < e; ++reached) pw *= mode.value();
        acc += c * pw;
    }
    return Coeff(acc);
}

} // namespace rba
