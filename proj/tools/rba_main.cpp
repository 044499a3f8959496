#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rba/textio.hpp"

namespace {

using namespace rba;

struct Config {
    std::string alphabet_csv;
    std::string weight = "symbolic";
    std::size_t max_degree = 3;
    std::string output = "text";

    WeightMode mode() const {
        if (weight == "symbolic") return WeightMode::symbolic();
        try {
            return WeightMode::numeric(Rational(weight));
        } catch (const std::exception&) {
            throw Error("invalid --weight '" + weight +
                        "': expected 'symbolic' or a rational such as 0, 2, -3/4");
        }
    }

    std::vector<Letter> letters() const {
        std::vector<Letter> out;
        std::size_t start = 0;
        while (start <= alphabet_csv.size() && !alphabet_csv.empty()) {
            std::size_t comma = alphabet_csv.find(',', start);
            if (comma == std::string::npos) comma = alphabet_csv.size();
            std::string name = alphabet_csv.substr(start, comma - start);
            const auto l = name.find_first_not_of(" \t");
            const auto r = name.find_last_not_of(" \t");
            name = (l == std::string::npos) ? std::string{} : name.substr(l, r - l + 1);
            if (name.empty()) throw Error("empty letter in --alphabet");
            out.emplace_back(std::move(name));
            start = comma + 1;
            if (comma == alphabet_csv.size()) break;
        }
        return out;
    }

    EvalOptions eval_options() const {
        EvalOptions opts;
        opts.mode = mode();
        if (!alphabet_csv.empty()) {
            std::set<std::string> names;
            for (const auto& l : letters()) names.insert(l.name);
            opts.alphabet = std::move(names);
        }
        return opts;
    }

    bool json() const { return output == "json"; }
};

void add_common_flags(CLI::App* cmd, Config& cfg, bool with_degree = true) {
    cmd->add_option("--alphabet", cfg.alphabet_csv,
                    "Comma-separated alphabet letters, e.g. x,y");
    cmd->add_option("--weight", cfg.weight,
                    "Weight: 'symbolic' (default) or a rational such as 0, 2, -3/4");
    if (with_degree)
        cmd->add_option("--max-degree", cfg.max_degree,
                        "Maximum total degree for enumeration/suites (default 3)");
    cmd->add_option("--output", cfg.output, "Output format: text (default) or json")
        ->check(CLI::IsMember({"text", "json"}));
}

LinComb eval_lincomb(const std::string& expr_text, const Config& cfg) {
    const ExprPtr e = parse(expr_text);
    const Value v = evaluate(*e, cfg.eval_options());
    if (!v.is_lincomb())
        throw Error("the expression evaluates to a tensor, not an algebra element");
    return v.lincomb();
}

int cmd_eval(const std::string& expr_text, const Config& cfg) {
    const ExprPtr e = parse(expr_text);
    if (expr_contains(*e, {Expr::Kind::Antipode, Expr::Kind::Coproduct, Expr::Kind::Counit}))
        throw Error("eval does not accept S(...), cop(...) or eps(...); "
                    "use the S and cop commands");
    const Value v = evaluate(*e, cfg.eval_options());
    std::cout << (cfg.json() ? export_structured(v.lincomb()) : print_lincomb(v.lincomb()))
              << "\n";
    return 0;
}

int cmd_coproduct(const std::string& expr_text, const Config& cfg) {
    const Tensor2 t = coproduct(eval_lincomb(expr_text, cfg), cfg.mode());
    std::cout << (cfg.json() ? export_structured(t) : print_tensor2(t)) << "\n";
    return 0;
}

int cmd_antipode(const std::string& expr_text, const Config& cfg) {
    if (!cfg.mode().is_zero())
        throw WeightNotZeroError(
            "the antipode requires --weight 0: the grading is connected only at weight "
            "zero, and whether the algebra is a Hopf algebra at other weights is open");
    const LinComb s = antipode_lin(eval_lincomb(expr_text, cfg), cfg.mode());
    std::cout << (cfg.json() ? export_structured(s) : print_lincomb(s)) << "\n";
    return 0;
}

int cmd_enumerate(const Config& cfg, bool count_only) {
    const auto letters = cfg.letters();
    if (letters.empty()) throw Error("enum requires --alphabet");
    const auto words = enumerate_words(letters, cfg.max_degree);
    if (count_only) {
        std::vector<std::size_t> counts(cfg.max_degree + 1, 0);
        for (const auto& w : words) ++counts[total_degree(w)];
        if (cfg.json()) {
            Json j = Json::object();
            for (std::size_t d = 0; d < counts.size(); ++d)
                j[std::to_string(d)] = counts[d];
            std::cout << Json{{"counts", j}}.dump() << "\n";
        } else {
            for (std::size_t d = 0; d < counts.size(); ++d)
                std::cout << (d ? " " : "") << d << ":" << counts[d];
            std::cout << "\n";
        }
        return 0;
    }
    if (cfg.json()) {
        Json arr = Json::array();
        for (const auto& w : words) arr.push_back(export_word(w));
        std::cout << Json{{"words", arr}}.dump() << "\n";
        return 0;
    }
    for (const auto& w : words) std::cout << to_string(w) << "\n";
    return 0;
}

struct SuiteResult {
    std::string law;
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::string first_failure;

    void record(bool ok, const std::string& describe) {
        ++checked;
        if (!ok) {
            if (failures == 0) first_failure = describe;
            ++failures;
        }
    }
};

int report_suite(const SuiteResult& r, const Config& cfg) {
    if (cfg.json()) {
        Json j{{"law", r.law}, {"checked", r.checked}, {"failures", r.failures}};
        if (r.failures > 0) j["first_failure"] = r.first_failure;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "law: " << r.law << "\n"
                  << "checked: " << r.checked << "\n"
                  << "failures: " << r.failures << "\n";
        if (r.failures > 0) std::cout << "first failure: " << r.first_failure << "\n";
    }
    return r.failures == 0 ? 0 : 1;
}

int run_counterexample(const Config& cfg) {
    const CounterexampleReport sym = counterexample_weight_nonzero(WeightMode::symbolic());
    const CounterexampleReport zero =
        counterexample_weight_nonzero(WeightMode::numeric(0));

    const Rbw one;
    const Rbw x = Rbw::make({RbwItem::atom("x")});
    const Rbw p1 = Rbw::make({RbwItem::bracket(one)});
    bool sym_ok = sym.product_matches_expected && sym.has_violations() &&
                  sym.product_degrees == std::set<std::size_t>{1, 2} &&
                  sym.product_violations.size() == 1 &&
                  sym.coproduct_violations.size() == 2;
    if (sym_ok) {
        sym_ok = sym.product_violations[0].word == p1 &&
                 sym.product_violations[0].coeff == Coeff::lambda();
        bool saw_xp = false;
        bool saw_px = false;
        for (const auto& v : sym.coproduct_violations) {
            if (v.left == x && v.right == p1 && v.coeff == Coeff::lambda()) saw_xp = true;
            if (v.left == p1 && v.right == x && v.coeff == Coeff::lambda()) saw_px = true;
        }
        sym_ok = sym_ok && saw_xp && saw_px;
    }
    const bool zero_ok = zero.product_matches_expected && !zero.has_violations();
    const bool pass = sym_ok && zero_ok;

    if (cfg.json()) {
        Json j{{"law", "counterexample"},
               {"symbolic", export_report(sym)},
               {"weight_zero", export_report(zero)},
               {"pass", pass}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "law: counterexample\n--- symbolic weight ---\n"
                  << print_report(sym) << "--- weight 0 ---\n"
                  << print_report(zero)
                  << (pass ? "counterexample reproduced: violations present at "
                             "symbolic weight, absent at weight 0\n"
                           : "counterexample NOT reproduced\n");
    }
    return pass ? 0 : 1;
}

int cmd_check(const std::string& law, const Config& cfg) {
    if (law == "counterexample") return run_counterexample(cfg);

    const auto letters = cfg.letters();
    if (letters.empty()) throw Error("check --law " + law + " requires --alphabet");
    const WeightMode mode = cfg.mode();
    if ((law == "antipode" || law == "grading") && !mode.is_zero())
        throw WeightNotZeroError("check --law " + law + " requires --weight 0");

    const auto words = enumerate_words(letters, cfg.max_degree);
    SuiteResult r;
    r.law = law;

    const auto pair_desc = [](const Rbw& u, const Rbw& v) {
        return "u = " + to_string(u) + ", v = " + to_string(v);
    };

    if (law == "rb") {
        for (const auto& u : words)
            for (const auto& v : words) {
                if (total_degree(u) + total_degree(v) > cfg.max_degree) continue;
                r.record(check_rota_baxter(LinComb::basis(u), LinComb::basis(v), mode),
                         pair_desc(u, v));
            }
    } else if (law == "assoc") {
        for (const auto& u : words)
            for (const auto& v : words) {
                const std::size_t duv = total_degree(u) + total_degree(v);
                if (duv > cfg.max_degree) continue;
                for (const auto& w : words) {
                    if (duv + total_degree(w) > cfg.max_degree) continue;
                    const LinComb lhs =
                        diamond(diamond_basis(u, v, mode), LinComb::basis(w), mode);
                    const LinComb rhs =
                        diamond(LinComb::basis(u), diamond_basis(v, w, mode), mode);
                    r.record(lhs == rhs, pair_desc(u, v) + ", w = " + to_string(w));
                }
            }
    } else if (law == "unit") {
        const Rbw one;
        for (const auto& w : words) {
            const LinComb expected = LinComb::basis(w);
            r.record(diamond_basis(one, w, mode) == expected &&
                         diamond_basis(w, one, mode) == expected,
                     "w = " + to_string(w));
        }
    } else if (law == "coassoc") {
        for (const auto& w : words)
            r.record(check_coassociativity(w, mode), "w = " + to_string(w));
    } else if (law == "counit") {
        for (const auto& w : words)
            r.record(check_counit_laws(w, mode), "w = " + to_string(w));
    } else if (law == "bialgebra") {
        for (const auto& u : words)
            for (const auto& v : words) {
                if (total_degree(u) + total_degree(v) > cfg.max_degree) continue;
                r.record(check_bialgebra_compat(u, v, mode), pair_desc(u, v));
            }
    } else if (law == "antipode") {
        for (const auto& w : words)
            r.record(check_antipode(w, mode), "w = " + to_string(w));
    } else if (law == "grading") {
        std::size_t degree_zero_words = 0;
        for (const auto& w : words)
            if (total_degree(w) == 0) ++degree_zero_words;
        r.record(degree_zero_words == 1, "connectedness: degree-0 word count is " +
                                             std::to_string(degree_zero_words));
        for (const auto& u : words)
            for (const auto& v : words) {
                if (total_degree(u) + total_degree(v) > cfg.max_degree) continue;
                r.record(check_graded_product(u, v, mode), pair_desc(u, v));
            }
        for (const auto& w : words)
            r.record(check_graded_coproduct(w, mode), "w = " + to_string(w));
    } else {
        throw Error("unknown law '" + law + "'");
    }
    return report_suite(r, cfg);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Free Rota-Baxter algebra on bracketed words: diamond product, "
                 "coproduct, weight-zero antipode, and exhaustive law checking"};
    app.require_subcommand(1);

    Config cfg;
    std::string expr_text;
    std::string law;
    bool count_only = false;

    CLI::App* eval = app.add_subcommand("eval", "Evaluate an expression");
    eval->add_option("expr", expr_text,
                     "Expression, e.g. \"P(1)*P(1)\" (put -- before one that "
                     "starts with '-')")
        ->required();
    add_common_flags(eval, cfg, false);

    CLI::App* cop = app.add_subcommand("cop", "Coproduct of an expression");
    cop->add_option("expr", expr_text, "Expression")->required();
    add_common_flags(cop, cfg, false);

    CLI::App* anti = app.add_subcommand("S", "Antipode of an expression (weight 0)");
    anti->add_option("expr", expr_text, "Expression")->required();
    add_common_flags(anti, cfg, false);

    CLI::App* en = app.add_subcommand("enum", "Enumerate basis words by degree");
    en->add_flag("--count", count_only, "Print per-degree counts only");
    add_common_flags(en, cfg);

    CLI::App* check = app.add_subcommand("check", "Run an exhaustive law suite");
    check
        ->add_option("--law", law,
                     "One of: rb, assoc, unit, coassoc, counit, bialgebra, antipode, "
                     "grading, counterexample")
        ->required()
        ->check(CLI::IsMember({"rb", "assoc", "unit", "coassoc", "counit", "bialgebra",
                               "antipode", "grading", "counterexample"}));
    add_common_flags(check, cfg);

    try {
        app.parse(argc, argv);
        if (eval->parsed()) return cmd_eval(expr_text, cfg);
        if (cop->parsed()) return cmd_coproduct(expr_text, cfg);
        if (anti->parsed()) return cmd_antipode(expr_text, cfg);
        if (en->parsed()) return cmd_enumerate(cfg, count_only);
        if (check->parsed()) return cmd_check(law, cfg);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const rba::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
