#include "rba/textio.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>

namespace rba {

namespace {

// ---------------------------------------------------------------- tokenizer

struct Token {
    enum class Type {
        Number, Ident, Plus, Minus, Star, Slash, Caret,
        LParen, RParen, LBracket, RBracket, End,
    };
    Type type;
    std::string text;
    std::size_t offset;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({Token::Type::Number, std::string(text.substr(i, j - i)), i});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < n &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            out.push_back({Token::Type::Ident, std::string(text.substr(i, j - i)), i});
            i = j;
            continue;
        }
        Token::Type t;
        switch (c) {
            case '+': t = Token::Type::Plus; break;
            case '-': t = Token::Type::Minus; break;
            case '*': t = Token::Type::Star; break;
            case '/': t = Token::Type::Slash; break;
            case '^': t = Token::Type::Caret; break;
            case '(': t = Token::Type::LParen; break;
            case ')': t = Token::Type::RParen; break;
            case '[': t = Token::Type::LBracket; break;
            case ']': t = Token::Type::RBracket; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
        out.push_back({t, std::string(1, c), i});
        ++i;
    }
    out.push_back({Token::Type::End, "", n});
    return out;
}

// ------------------------------------------------------------------- parser

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

    ExprPtr parse_all() {
        ExprPtr e = parse_expr();
        if (peek().type != Token::Type::End)
            throw ParseError("unexpected trailing input", peek().offset);
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    bool accept(Token::Type t) {
        if (peek().type != t) return false;
        ++pos_;
        return true;
    }
    void expect(Token::Type t, const char* what) {
        if (!accept(t)) throw ParseError(std::string("expected ") + what, peek().offset);
    }

    static ExprPtr node(Expr::Kind kind, std::size_t offset,
                        std::vector<ExprPtr> children = {}) {
        auto e = std::make_shared<Expr>();
        e->kind = kind;
        e->offset = offset;
        e->children = std::move(children);
        return e;
    }

    bool starts_factor(Token::Type t) const {
        return t == Token::Type::Number || t == Token::Type::Ident ||
               t == Token::Type::LParen || t == Token::Type::LBracket;
    }

    ExprPtr parse_expr() {
        const std::size_t off = peek().offset;
        const bool neg = accept(Token::Type::Minus);
        ExprPtr lhs = parse_term();
        if (neg) lhs = node(Expr::Kind::Neg, off, {lhs});
        for (;;) {
            const std::size_t op_off = peek().offset;
            if (accept(Token::Type::Plus)) {
                lhs = node(Expr::Kind::Sum, op_off, {lhs, parse_term()});
            } else if (accept(Token::Type::Minus)) {
                lhs = node(Expr::Kind::Diff, op_off, {lhs, parse_term()});
            } else {
                return lhs;
            }
        }
    }

    ExprPtr parse_term() {
        ExprPtr lhs = parse_factor();
        for (;;) {
            const std::size_t op_off = peek().offset;
            if (accept(Token::Type::Star)) {
                lhs = node(Expr::Kind::Prod, op_off, {lhs, parse_factor()});
            } else if (starts_factor(peek().type)) {
                lhs = node(Expr::Kind::Prod, op_off, {lhs, parse_factor()});
            } else {
                return lhs;
            }
        }
    }

    ExprPtr parse_call(Expr::Kind kind, std::size_t off) {
        expect(Token::Type::LParen, "'('");
        ExprPtr inner = parse_expr();
        expect(Token::Type::RParen, "')'");
        return node(kind, off, {inner});
    }

    ExprPtr parse_factor() {
        const Token& tok = peek();
        if (tok.type == Token::Type::Number) {
            ++pos_;
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Number;
            e->offset = tok.offset;
            boost::multiprecision::cpp_int num(tok.text);
            boost::multiprecision::cpp_int den(1);
            if (accept(Token::Type::Slash)) {
                const Token& d = peek();
                expect(Token::Type::Number, "a positive integer denominator");
                den = boost::multiprecision::cpp_int(d.text);
                if (den == 0) throw ParseError("zero denominator", d.offset);
            }
            e->number = Rational(num, den);
            return e;
        }
        if (tok.type == Token::Type::Ident) {
            ++pos_;
            if (tok.text == "lambda") {
                auto e = std::make_shared<Expr>();
                e->kind = Expr::Kind::Lambda;
                e->offset = tok.offset;
                e->number = 1; // exponent
                if (accept(Token::Type::Caret)) {
                    const Token& p = peek();
                    expect(Token::Type::Number, "a non-negative integer exponent");
                    if (p.text.size() > 9)
                        throw ParseError("lambda exponent too large", p.offset);
                    e->number = Rational(boost::multiprecision::cpp_int(p.text));
                }
                return e;
            }
            if (tok.text == "P") return parse_call(Expr::Kind::Bracket, tok.offset);
            if (tok.text == "S") return parse_call(Expr::Kind::Antipode, tok.offset);
            if (tok.text == "cop") return parse_call(Expr::Kind::Coproduct, tok.offset);
            if (tok.text == "eps") return parse_call(Expr::Kind::Counit, tok.offset);
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Letter;
            e->offset = tok.offset;
            e->name = tok.text;
            return e;
        }
        if (accept(Token::Type::LParen)) {
            ExprPtr inner = parse_expr();
            expect(Token::Type::RParen, "')'");
            return inner;
        }
        if (tok.type == Token::Type::LBracket) {
            ++pos_;
            ExprPtr inner = parse_expr();
            expect(Token::Type::RBracket, "']'");
            return node(Expr::Kind::Bracket, tok.offset, {inner});
        }
        throw ParseError("expected a number, letter, 'lambda', 'P(', '[', or '('",
                         tok.offset);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

} // namespace

ExprPtr parse(std::string_view text) { return Parser(text).parse_all(); }

bool expr_contains(const Expr& e, std::initializer_list<Expr::Kind> kinds) {
    for (Expr::Kind k : kinds)
        if (e.kind == k) return true;
    for (const auto& c : e.children)
        if (expr_contains(*c, kinds)) return true;
    return false;
}

// ---------------------------------------------------------------- evaluator

namespace {

const LinComb& as_lincomb(const Value& v, const Expr& e, const char* what) {
    if (!v.is_lincomb())
        throw ParseError(std::string(what) + " expects a word value, got a tensor",
                         e.offset);
    return v.lincomb();
}

// A scalar is a multiple of the empty word.
bool is_scalar(const LinComb& a) {
    return a.is_zero() || (a.size() == 1 && a.terms().begin()->first.empty());
}

} // namespace

Value evaluate(const Expr& e, const EvalOptions& opts) {
    switch (e.kind) {
        case Expr::Kind::Number:
            return Value(LinComb::term(Rbw{}, Coeff(e.number)));
        case Expr::Kind::Lambda: {
            const unsigned power = e.number.convert_to<unsigned>();
            return Value(LinComb::term(Rbw{}, specialize(Coeff::lambda(power), opts.mode)));
        }
        case Expr::Kind::Letter: {
            if (opts.alphabet && opts.alphabet->count(e.name) == 0)
                throw ParseError("letter '" + e.name + "' is not in the declared alphabet",
                                 e.offset);
            return Value(LinComb::basis(Rbw::make({RbwItem::atom(e.name)})));
        }
        case Expr::Kind::Neg: {
            Value v = evaluate(*e.children[0], opts);
            if (v.is_lincomb()) return Value(scale(Coeff(-1), v.lincomb()));
            return Value(scale(Coeff(-1), v.tensor()));
        }
        case Expr::Kind::Sum:
        case Expr::Kind::Diff: {
            Value l = evaluate(*e.children[0], opts);
            Value r = evaluate(*e.children[1], opts);
            const bool diff = e.kind == Expr::Kind::Diff;
            if (l.is_lincomb() && r.is_lincomb())
                return Value(diff ? l.lincomb() - r.lincomb() : l.lincomb() + r.lincomb());
            if (l.is_tensor() && r.is_tensor())
                return Value(diff ? l.tensor() - r.tensor() : l.tensor() + r.tensor());
            throw ParseError("cannot add a word value and a tensor value", e.offset);
        }
        case Expr::Kind::Prod: {
            Value l = evaluate(*e.children[0], opts);
            Value r = evaluate(*e.children[1], opts);
            if (l.is_lincomb() && r.is_lincomb())
                return Value(diamond(l.lincomb(), r.lincomb(), opts.mode));
            if (l.is_tensor() && r.is_tensor())
                return Value(tensor2_diamond(l.tensor(), r.tensor(), opts.mode));
            // a scalar may multiply a tensor; a general word value may not
            const LinComb& lc = l.is_lincomb() ? l.lincomb() : r.lincomb();
            const Tensor2& t = l.is_tensor() ? l.tensor() : r.tensor();
            if (!is_scalar(lc))
                throw ParseError("cannot multiply a word value with a tensor value",
                                 e.offset);
            return Value(scale(lc.coefficient(Rbw{}), t));
        }
        case Expr::Kind::Bracket:
            return Value(rb_operator(
                as_lincomb(evaluate(*e.children[0], opts), e, "P(...)")));
        case Expr::Kind::Antipode:
            return Value(antipode_lin(
                as_lincomb(evaluate(*e.children[0], opts), e, "S(...)"), opts.mode));
        case Expr::Kind::Coproduct:
            return Value(coproduct(
                as_lincomb(evaluate(*e.children[0], opts), e, "cop(...)"), opts.mode));
        case Expr::Kind::Counit:
            return Value(LinComb::term(
                Rbw{},
                counit(as_lincomb(evaluate(*e.children[0], opts), e, "eps(...)"))));
    }
    throw Error("unreachable expression kind");
}

// ----------------------------------------------------------------- printers

std::string print_rational(const Rational& q) {
    const auto num = boost::multiprecision::numerator(q);
    const auto den = boost::multiprecision::denominator(q);
    std::string s = num.str();
    if (den != 1) s += "/" + den.str();
    return s;
}

namespace {

std::string lambda_power(unsigned e) {
    return e == 1 ? "lambda" : "lambda^" + std::to_string(e);
}

// One signed monomial, e.g. "5", "-1/3", "lambda", "-2*lambda^3".
std::string monomial_string(const Rational& q, unsigned e) {
    if (e == 0) return print_rational(q);
    if (q == 1) return lambda_power(e);
    if (q == -1) return "-" + lambda_power(e);
    return print_rational(q) + "*" + lambda_power(e);
}

// Renders coefficient-times-symbol. With bare_scalar (the empty word as a
// standalone term) the coefficient is printed alone.
std::string term_string(const Coeff& c, const std::string& symbol, bool bare_scalar) {
    if (bare_scalar) return print_coeff(c);
    if (c.terms().size() == 1) {
        const auto& [e, q] = *c.terms().begin();
        const bool negative = q < 0;
        const Rational mag = negative ? Rational(-q) : q;
        std::string coeffpart;
        if (e == 0)
            coeffpart = (mag == 1) ? std::string{} : print_rational(mag);
        else if (mag == 1)
            coeffpart = lambda_power(e);
        else
            coeffpart = print_rational(mag) + "*" + lambda_power(e);
        std::string s = coeffpart.empty() ? symbol : coeffpart + "*" + symbol;
        return negative ? "-" + s : s;
    }
    return "(" + print_coeff(c) + ")*" + symbol;
}

std::string join_terms(const std::vector<std::string>& terms) {
    std::string out;
    bool first = true;
    for (const auto& t : terms) {
        if (first) {
            out = t;
            first = false;
        } else if (!t.empty() && t[0] == '-') {
            out += " - " + t.substr(1);
        } else {
            out += " + " + t;
        }
    }
    return out;
}

} // namespace

std::string print_coeff(const Coeff& c) {
    if (c.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, q] : c.terms()) {
        if (first) {
            out = monomial_string(q, e);
            first = false;
        } else if (q < 0) {
            out += " - " + monomial_string(Rational(-q), e);
        } else {
            out += " + " + monomial_string(q, e);
        }
    }
    return out;
}

namespace {

struct LinRow {
    std::size_t deg;
    std::string word;
    const Rbw* w;
    const Coeff* c;
};

std::vector<LinRow> canonical_rows(const LinComb& a) {
    std::vector<LinRow> rows;
    rows.reserve(a.size());
    for (const auto& [w, c] : a.terms())
        rows.push_back({total_degree(w), to_string(w), &w, &c});
    std::sort(rows.begin(), rows.end(), [](const LinRow& x, const LinRow& y) {
        if (x.deg != y.deg) return x.deg < y.deg;
        return x.word < y.word;
    });
    return rows;
}

struct TenRow {
    std::size_t degsum;
    std::string left;
    std::string right;
    const Rbw* lw;
    const Rbw* rw;
    const Coeff* c;
};

std::vector<TenRow> canonical_rows(const Tensor2& t) {
    std::vector<TenRow> rows;
    rows.reserve(t.size());
    for (const auto& [k, c] : t.terms())
        rows.push_back({total_degree(k.first) + total_degree(k.second),
                        to_string(k.first), to_string(k.second), &k.first, &k.second, &c});
    std::sort(rows.begin(), rows.end(), [](const TenRow& x, const TenRow& y) {
        if (x.degsum != y.degsum) return x.degsum < y.degsum;
        if (x.left != y.left) return x.left > y.left; // left slot descending
        return x.right < y.right;
    });
    return rows;
}

} // namespace

std::string print_lincomb(const LinComb& a) {
    if (a.is_zero()) return "0";
    std::vector<std::string> terms;
    for (const auto& r : canonical_rows(a))
        terms.push_back(term_string(*r.c, r.word, r.w->empty()));
    return join_terms(terms);
}

std::string print_tensor2(const Tensor2& t) {
    if (t.is_zero()) return "0";
    std::vector<std::string> terms;
    for (const auto& r : canonical_rows(t))
        terms.push_back(term_string(*r.c, r.left + " (x) " + r.right, false));
    return join_terms(terms);
}

std::string print_report(const CounterexampleReport& rep) {
    std::string out;
    out += "weight mode: ";
    out += rep.mode.is_symbolic() ? "symbolic" : "numeric " + print_rational(rep.mode.value());
    out += "\n";

    out += "P(1)*P(1) = " + print_lincomb(rep.product) + "\n";
    out += "  expected " + print_lincomb(rep.product_expected) +
           (rep.product_matches_expected ? "  [matches]" : "  [MISMATCH]") + "\n";
    out += "  support degrees {";
    bool first = true;
    for (std::size_t d : rep.product_degrees) {
        if (!first) out += ", ";
        out += std::to_string(d);
        first = false;
    }
    out += "}; a graded product requires {" +
           std::to_string(rep.product_expected_degree) + "}\n";
    out += "  grading violations: " + std::to_string(rep.product_violations.size()) + "\n";
    for (const auto& v : rep.product_violations)
        out += "    " + term_string(v.coeff, to_string(v.word), false) + ": degree " +
               std::to_string(v.degree) + " != " + std::to_string(v.expected) + "\n";

    out += "cop(" + to_string(rep.sandwich) + ") = " +
           print_tensor2(rep.sandwich_coproduct) + "\n";
    out += "  cograding violations (slot degrees must sum to " +
           std::to_string(rep.coproduct_expected_degree) +
           "): " + std::to_string(rep.coproduct_violations.size()) + "\n";
    for (const auto& v : rep.coproduct_violations)
        out += "    " +
               term_string(v.coeff, to_string(v.left) + " (x) " + to_string(v.right),
                           false) +
               ": slot degrees sum to " + std::to_string(v.degree_sum) + " != " +
               std::to_string(v.expected) + "\n";

    out += rep.has_violations()
               ? "verdict: grading fails at this weight (violations found)\n"
               : "verdict: no grading violations at this weight\n";
    return out;
}

// ------------------------------------------------------------------- export

namespace {

Json export_rational(const Rational& q) {
    const auto num = boost::multiprecision::numerator(q);
    const auto den = boost::multiprecision::denominator(q);
    Json arr = Json::array();
    const auto push = [&arr](const boost::multiprecision::cpp_int& v) {
        if (v >= std::numeric_limits<std::int64_t>::min() &&
            v <= std::numeric_limits<std::int64_t>::max())
            arr.push_back(v.convert_to<std::int64_t>());
        else
            arr.push_back(v.str());
    };
    push(num);
    push(den);
    return arr;
}

Json export_coeff(const Coeff& c) {
    Json obj = Json::object();
    for (const auto& [e, q] : c.terms()) obj[std::to_string(e)] = export_rational(q);
    return obj;
}

} // namespace

Json export_word(const Rbw& w) {
    Json arr = Json::array();
    for (const auto& item : w.items()) {
        if (item.is_atom())
            arr.push_back(Json{{"atom", item.letter().name}});
        else
            arr.push_back(Json{{"bracket", export_word(item.inner())}});
    }
    return arr;
}

Json export_lincomb(const LinComb& a) {
    Json terms = Json::array();
    for (const auto& r : canonical_rows(a))
        terms.push_back(Json{{"word", export_word(*r.w)}, {"coeff", export_coeff(*r.c)}});
    return Json{{"terms", terms}};
}

Json export_tensor2(const Tensor2& t) {
    Json terms = Json::array();
    for (const auto& r : canonical_rows(t))
        terms.push_back(Json{{"left", export_word(*r.lw)},
                             {"right", export_word(*r.rw)},
                             {"coeff", export_coeff(*r.c)}});
    return Json{{"tensor_terms", terms}};
}

Json export_report(const CounterexampleReport& rep) {
    Json j = Json::object();
    if (rep.mode.is_symbolic())
        j["mode"] = "symbolic";
    else
        j["mode"] = Json{{"weight", export_rational(rep.mode.value())}};
    j["product"] = export_lincomb(rep.product);
    j["product_expected"] = export_lincomb(rep.product_expected);
    j["product_matches_expected"] = rep.product_matches_expected;
    Json degs = Json::array();
    for (std::size_t d : rep.product_degrees) degs.push_back(d);
    j["product_degrees"] = degs;
    j["product_expected_degree"] = rep.product_expected_degree;
    Json pv = Json::array();
    for (const auto& v : rep.product_violations)
        pv.push_back(Json{{"word", export_word(v.word)},
                          {"coeff", export_coeff(v.coeff)},
                          {"degree", v.degree},
                          {"expected", v.expected}});
    j["product_violations"] = pv;
    j["sandwich"] = export_word(rep.sandwich);
    j["sandwich_coproduct"] = export_tensor2(rep.sandwich_coproduct);
    j["coproduct_expected_degree"] = rep.coproduct_expected_degree;
    Json cv = Json::array();
    for (const auto& v : rep.coproduct_violations)
        cv.push_back(Json{{"left", export_word(v.left)},
                          {"right", export_word(v.right)},
                          {"coeff", export_coeff(v.coeff)},
                          {"degree_sum", v.degree_sum},
                          {"expected", v.expected}});
    j["coproduct_violations"] = cv;
    j["has_violations"] = rep.has_violations();
    return j;
}

std::string export_structured(const LinComb& a) { return export_lincomb(a).dump(); }
std::string export_structured(const Tensor2& t) { return export_tensor2(t).dump(); }
std::string export_structured(const CounterexampleReport& rep) {
    return export_report(rep).dump();
}

// ------------------------------------------------------------------- import

namespace {

Rational import_rational(const Json& a) {
    if (!a.is_array() || a.size() != 2)
        throw FormatError("a rational must be a [numerator, denominator] pair");
    const auto get = [](const Json& v) -> boost::multiprecision::cpp_int {
        if (v.is_number_integer()) {
            return boost::multiprecision::cpp_int(v.get<std::int64_t>());
        }
        if (v.is_string()) {
            try {
                return boost::multiprecision::cpp_int(v.get<std::string>());
            } catch (const std::exception&) {
                throw FormatError("malformed integer string in rational");
            }
        }
        throw FormatError("rational parts must be integers or decimal strings");
    };
    const auto num = get(a[0]);
    const auto den = get(a[1]);
    if (den == 0) throw FormatError("zero denominator in rational");
    return Rational(num, den);
}

Coeff import_coeff(const Json& o) {
    if (!o.is_object()) throw FormatError("a coefficient must be an object");
    Coeff c;
    for (const auto& [key, val] : o.items()) {
        unsigned e = 0;
        try {
            std::size_t used = 0;
            const unsigned long parsed = std::stoul(key, &used);
            if (used != key.size()) throw std::invalid_argument(key);
            e = static_cast<unsigned>(parsed);
        } catch (const std::exception&) {
            throw FormatError("coefficient exponent '" + key + "' is not a natural number");
        }
        c += Coeff::monomial(import_rational(val), e);
    }
    return c;
}

Rbw import_word(const Json& arr) {
    if (!arr.is_array()) throw FormatError("a word must be an array of items");
    std::vector<RbwItem> items;
    items.reserve(arr.size());
    for (const auto& it : arr) {
        if (!it.is_object() || it.size() != 1)
            throw FormatError("a word item must be a single-key object");
        if (it.contains("atom")) {
            if (!it["atom"].is_string()) throw FormatError("atom name must be a string");
            try {
                items.push_back(RbwItem::atom(it["atom"].get<std::string>()));
            } catch (const Error& err) {
                throw FormatError(err.what());
            }
        } else if (it.contains("bracket")) {
            items.push_back(RbwItem::bracket(import_word(it["bracket"])));
        } else {
            throw FormatError("a word item must have key 'atom' or 'bracket'");
        }
    }
    try {
        return Rbw::make(std::move(items));
    } catch (const Error& err) {
        throw FormatError(err.what());
    }
}

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& err) {
        throw FormatError(std::string("malformed JSON: ") + err.what());
    }
}

} // namespace

LinComb import_lincomb(const Json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw FormatError("expected an object with a 'terms' array");
    LinComb out;
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("word") || !t.contains("coeff"))
            throw FormatError("each term needs 'word' and 'coeff'");
        out.add_term(import_word(t["word"]), import_coeff(t["coeff"]));
    }
    return out;
}

Tensor2 import_tensor2(const Json& j) {
    if (!j.is_object() || !j.contains("tensor_terms") || !j["tensor_terms"].is_array())
        throw FormatError("expected an object with a 'tensor_terms' array");
    Tensor2 out;
    for (const auto& t : j["tensor_terms"]) {
        if (!t.is_object() || !t.contains("left") || !t.contains("right") ||
            !t.contains("coeff"))
            throw FormatError("each tensor term needs 'left', 'right' and 'coeff'");
        out.add_term(import_word(t["left"]), import_word(t["right"]),
                     import_coeff(t["coeff"]));
    }
    return out;
}

LinComb import_lincomb(std::string_view json_text) {
    return import_lincomb(parse_json(json_text));
}

Tensor2 import_tensor2(std::string_view json_text) {
    return import_tensor2(parse_json(json_text));
}

} // namespace rba
