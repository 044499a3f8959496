#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "rba/hopf.hpp"

namespace rba {

using Json = nlohmann::ordered_json;

// Abstract syntax of input expressions.
struct Expr {
    enum class Kind {
        Number,     // rational literal (also the scalar/word 1)
        Lambda,     // the formal weight
        Letter,     // an alphabet symbol
        Neg,        // unary minus
        Sum,        // a + b
        Diff,       // a - b
        Prod,       // juxtaposition or '*': the diamond product
        Bracket,    // P(e) or [e]
        Antipode,   // S(e)
        Coproduct,  // cop(e)
        Counit,     // eps(e)
    };

    Kind kind;
    std::size_t offset = 0;          // source position, for diagnostics
    Rational number;                 // Kind::Number value, or Kind::Lambda exponent
    std::string name;                // Kind::Letter
    std::vector<std::shared_ptr<const Expr>> children;
};

using ExprPtr = std::shared_ptr<const Expr>;

// Recursive-descent parse of the expression grammar:
//   expr     := ["-"] term (("+"|"-") term)*
//   term     := factor ("*"? factor)*
//   factor   := rational | "lambda" ("^" integer)? | letter
//             | "P" "(" expr ")" | "[" expr "]"
//             | "S" "(" expr ")" | "cop" "(" expr ")" | "eps" "(" expr ")"
//             | "(" expr ")"
//   rational := integer ("/" positive-integer)?
// "lambda", "P", "S", "cop", "eps" are reserved. Whitespace is insignificant.
// Throws ParseError with the byte offset of the problem.
ExprPtr parse(std::string_view text);

// True iff the tree contains a node of any of the given kinds.
bool expr_contains(const Expr& e, std::initializer_list<Expr::Kind> kinds);

// A computed value: an algebra element or a tensor-square element.
class Value {
public:
    Value(LinComb a) : v_(std::move(a)) {}
    Value(Tensor2 t) : v_(std::move(t)) {}

    bool is_lincomb() const { return std::holds_alternative<LinComb>(v_); }
    bool is_tensor() const { return std::holds_alternative<Tensor2>(v_); }
    const LinComb& lincomb() const { return std::get<LinComb>(v_); }
    const Tensor2& tensor() const { return std::get<Tensor2>(v_); }

private:
    std::variant<LinComb, Tensor2> v_;
};

struct EvalOptions {
    WeightMode mode = WeightMode::symbolic();
    // When set, letters outside this alphabet are rejected.
    std::optional<std::set<std::string>> alphabet;
};

// Evaluates the tree under the weight mode. Throws ParseError for letters
// outside a declared alphabet, Error for type mismatches (e.g. adding a word
// value to a tensor value), WeightNotZeroError for S(...) away from weight 0.
Value evaluate(const Expr& e, const EvalOptions& opts);

std::string print_rational(const Rational& q);
std::string print_coeff(const Coeff& c);

// Canonical deterministic rendering. Terms are sorted by (total degree,
// rendered word); for tensors by (slot degree sum, left rendered descending,
// right rendered ascending). parse(print_lincomb(a)) evaluates back to a.
std::string print_lincomb(const LinComb& a);
std::string print_tensor2(const Tensor2& t);
std::string print_report(const CounterexampleReport& rep);

// Structured (JSON) export/import. Words are arrays of {"atom": name} /
// {"bracket": [...]} items; coefficients are exponent -> [numerator,
// denominator] maps (integers when they fit in 64 bits, decimal strings
// otherwise).
Json export_word(const Rbw& w);
Json export_lincomb(const LinComb& a);
Json export_tensor2(const Tensor2& t);
Json export_report(const CounterexampleReport& rep);
std::string export_structured(const LinComb& a);
std::string export_structured(const Tensor2& t);
std::string export_structured(const CounterexampleReport& rep);

// Inverses of the exports above; throw FormatError on malformed input.
// The string overloads exist so that plain strings pick the text path
// instead of converting implicitly to Json.
LinComb import_lincomb(const Json& j);
Tensor2 import_tensor2(const Json& j);
LinComb import_lincomb(std::string_view json_text);
Tensor2 import_tensor2(std::string_view json_text);
inline LinComb import_lincomb(const std::string& s) {
    return import_lincomb(std::string_view(s));
}
inline Tensor2 import_tensor2(const std::string& s) {
    return import_tensor2(std::string_view(s));
}
inline LinComb import_lincomb(const char* s) { return import_lincomb(std::string_view(s)); }
inline Tensor2 import_tensor2(const char* s) { return import_tensor2(std::string_view(s)); }

} // namespace rba
