#pragma once

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "rba/coalgebra.hpp"

namespace rba {

// A scalar-linear endomorphism specified on basis words and extended linearly.
class LinearMap {
public:
    using Rule = std::function<LinComb(const Rbw&)>;

    explicit LinearMap(Rule rule) : rule_(std::move(rule)) {}

    static LinearMap identity();
    /// u. eps: w -> counit(w) * 1, the convolution unit.
    static LinearMap unit_counit();
    /// w -> P(w).
    static LinearMap rb();

    LinComb apply_basis(const Rbw& w) const { return rule_(w); }
    LinComb operator()(const LinComb& a) const;

private:
    Rule rule_;
};

// f * g = mu (f (x) g) cop, evaluated lazily per basis word.
LinearMap convolution(const LinearMap& f, const LinearMap& g, const WeightMode& mode);

// Restriction of a to basis words of total degree n.
LinComb graded_component(const LinComb& a, std::size_t n);

// The common degree of all support words, or nullopt if mixed or zero.
std::optional<std::size_t> is_homogeneous(const LinComb& a);

// The antipode S at weight zero, by strong induction on degree:
// S(1) = 1, S(w) = -w - sum S(a) <> b over the reduced coproduct of w.
// Memoized per basis word; thread-safe. Throws WeightNotZeroError unless
// mode is Numeric(0).
LinComb antipode(const Rbw& w, const WeightMode& mode);

// Linear extension of the antipode.
LinComb antipode_lin(const LinComb& a, const WeightMode& mode);

// Verifies mu(S (x) id) cop(w) = mu(id (x) S) cop(w) = counit(w) * 1.
bool check_antipode(const Rbw& w, const WeightMode& mode);

// At weight zero: u <> v is homogeneous of degree deg(u) + deg(v).
bool check_graded_product(const Rbw& u, const Rbw& v, const WeightMode& mode);

// At weight zero: every support pair of cop(w) has slot degrees summing to deg(w).
bool check_graded_coproduct(const Rbw& w, const WeightMode& mode);

// A support word of a product whose degree differs from the graded prediction.
struct ProductGradingViolation {
    Rbw word;
    Coeff coeff;
    std::size_t degree = 0;
    std::size_t expected = 0;
};

// A coproduct support pair whose slot degrees do not sum to the word's degree.
struct CoproductGradingViolation {
    Rbw left;
    Rbw right;
    Coeff coeff;
    std::size_t degree_sum = 0;
    std::size_t expected = 0;
};

// The two grading failures exhibited by P(1) <> P(1) and cop(P(1)*x*P(1)):
// both sets of violations are non-empty at symbolic weight and empty at
// weight zero.
struct CounterexampleReport {
    WeightMode mode = WeightMode::symbolic();

    LinComb product;                  // P(1) <> P(1)
    LinComb product_expected;         // 2*P(P(1)) + lambda*P(1), under mode
    bool product_matches_expected = false;
    std::set<std::size_t> product_degrees;       // degrees present in the product
    std::size_t product_expected_degree = 2;     // deg P(1) + deg P(1)
    std::vector<ProductGradingViolation> product_violations;

    Rbw sandwich;                     // P(1)*x*P(1)
    Tensor2 sandwich_coproduct;       // cop of the above, under mode
    std::size_t coproduct_expected_degree = 3;   // deg of the sandwich
    std::vector<CoproductGradingViolation> coproduct_violations;

    bool has_violations() const {
        return !product_violations.empty() || !coproduct_violations.empty();
    }
};

CounterexampleReport counterexample_weight_nonzero(
    const WeightMode& mode = WeightMode::symbolic());

} // namespace rba
