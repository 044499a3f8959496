#include "rba/hopf.hpp"

#include <mutex>

#include "rba/errors.hpp"

namespace rba {

LinearMap LinearMap::identity() {
    return LinearMap([](const Rbw& w) { return LinComb::basis(w); });
}

LinearMap LinearMap::unit_counit() {
    return LinearMap([](const Rbw& w) {
        return w.empty() ? LinComb::unit() : LinComb::zero();
    });
}

LinearMap LinearMap::rb() {
    return LinearMap([](const Rbw& w) { return rb_operator(LinComb::basis(w)); });
}

LinComb LinearMap::operator()(const LinComb& a) const {
    LinComb out;
    for (const auto& [w, c] : a.terms()) out += scale(c, rule_(w));
    return out;
}

LinearMap convolution(const LinearMap& f, const LinearMap& g, const WeightMode& mode) {
    return LinearMap([f, g, mode](const Rbw& w) {
        LinComb out;
        const Tensor2 cop = coproduct_basis(w, mode);
        for (const auto& [k, c] : cop.terms())
            out += scale(c, diamond(f.apply_basis(k.first), g.apply_basis(k.second), mode));
        return out;
    });
}

LinComb graded_component(const LinComb& a, std::size_t n) {
    LinComb out;
    for (const auto& [w, c] : a.terms())
        if (total_degree(w) == n) out.add_term(w, c);
    return out;
}

std::optional<std::size_t> is_homogeneous(const LinComb& a) {
    if (a.is_zero()) return std::nullopt;
    std::optional<std::size_t> deg;
    for (const auto& [w, c] : a.terms()) {
        const std::size_t d = total_degree(w);
        if (!deg) {
            deg = d;
        } else if (*deg != d) {
            return std::nullopt;
        }
    }
    return deg;
}

namespace {

void require_weight_zero(const WeightMode& mode, const char* op) {
    if (!mode.is_zero())
        throw WeightNotZeroError(std::string(op) +
                                 " requires weight 0: the grading is connected only there, "
                                 "and no antipode is established at other weights");
}

LinComb antipode_basis(const Rbw& w, const WeightMode& mode) {
    if (w.empty()) return LinComb::unit();

    static std::map<Rbw, LinComb, RbwOrder> memo;
    static std::mutex memo_mutex;
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(w);
        if (it != memo.end()) return it->second;
    }

    // S(w) = -w - sum S(a) <> b over the reduced coproduct; each left slot a
    // has degree strictly below deg(w), so the recursion terminates.
    LinComb s = LinComb::term(w, Coeff(-1));
    const Tensor2 red = reduced_coproduct(w, mode);
    for (const auto& [k, c] : red.terms())
        s -= scale(c, diamond(antipode_basis(k.first, mode), LinComb::basis(k.second), mode));

    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(w, s);
    return s;
}

} // namespace

LinComb antipode(const Rbw& w, const WeightMode& mode) {
    require_weight_zero(mode, "antipode");
    return antipode_basis(w, mode);
}

LinComb antipode_lin(const LinComb& a, const WeightMode& mode) {
    require_weight_zero(mode, "antipode");
    LinComb out;
    for (const auto& [w, c] : a.terms()) out += scale(c, antipode_basis(w, mode));
    return out;
}

bool check_antipode(const Rbw& w, const WeightMode& mode) {
    require_weight_zero(mode, "check_antipode");
    const LinearMap s([mode](const Rbw& v) { return antipode_basis(v, mode); });
    const LinearMap id = LinearMap::identity();
    const LinComb expected = scale(counit(LinComb::basis(w)), LinComb::unit());
    return convolution(s, id, mode).apply_basis(w) == expected &&
           convolution(id, s, mode).apply_basis(w) == expected;
}

bool check_graded_product(const Rbw& u, const Rbw& v, const WeightMode& mode) {
    require_weight_zero(mode, "check_graded_product");
    const LinComb prod = diamond_basis(u, v, mode);
    if (prod.is_zero()) return true;
    return is_homogeneous(prod) == std::optional{total_degree(u) + total_degree(v)};
}

bool check_graded_coproduct(const Rbw& w, const WeightMode& mode) {
    require_weight_zero(mode, "check_graded_coproduct");
    const std::size_t d = total_degree(w);
    const Tensor2 cop = coproduct_basis(w, mode);
    for (const auto& [k, c] : cop.terms())
        if (total_degree(k.first) + total_degree(k.second) != d) return false;
    return true;
}

CounterexampleReport counterexample_weight_nonzero(const WeightMode& mode) {
    CounterexampleReport rep;
    rep.mode = mode;

    const Rbw one;
    const Rbw p1 = Rbw::make({RbwItem::bracket(one)});
    const Rbw pp1 = Rbw::make({RbwItem::bracket(p1)});

    rep.product = diamond_basis(p1, p1, mode);
    LinComb expected = LinComb::term(pp1, Coeff(2));
    expected.add_term(p1, Coeff::lambda());
    rep.product_expected = specialize(expected, mode);
    rep.product_matches_expected = rep.product == rep.product_expected;
    rep.product_expected_degree = 2 * total_degree(p1);
    for (const auto& [w, c] : rep.product.terms()) {
        const std::size_t d = total_degree(w);
        rep.product_degrees.insert(d);
        if (d != rep.product_expected_degree)
            rep.product_violations.push_back({w, c, d, rep.product_expected_degree});
    }

    rep.sandwich = Rbw::make({RbwItem::bracket(one), RbwItem::atom("x"), RbwItem::bracket(one)});
    rep.sandwich_coproduct = coproduct_basis(rep.sandwich, mode);
    rep.coproduct_expected_degree = total_degree(rep.sandwich);
    for (const auto& [k, c] : rep.sandwich_coproduct.terms()) {
        const std::size_t d = total_degree(k.first) + total_degree(k.second);
        if (d != rep.coproduct_expected_degree)
            rep.coproduct_violations.push_back({k.first, k.second, c, d,
                                                rep.coproduct_expected_degree});
    }
    return rep;
}

} // namespace rba
