#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "phecke/center.hpp"
#include "phecke/character.hpp"
#include "phecke/coset.hpp"
#include "phecke/errors.hpp"
#include "phecke/expr.hpp"
#include "phecke/hecke.hpp"
#include "phecke/verify.hpp"

using json = nlohmann::ordered_json;
using namespace phecke;

namespace {

json polyq_json(const PolyQ& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
    return arr;
}

json element_json(const HeckeElement& h) {
    json terms = json::array();
    for (const auto& [m, c] : h.terms()) {
        terms.push_back({{"basis", "monomial"},
                         {"exponents", {m.v, m.x, m.y1, m.y2}},
                         {"coeff", polyq_json(c)}});
    }
    return {{"basis", "monomial"}, {"terms", terms}};
}

json coset_json(const CosetElement& e) {
    json terms = json::array();
    for (const auto& [l, c] : e.terms()) {
        terms.push_back({{"basis", "coset"},
                         {"delta", l.delta},
                         {"triple", {l.a, l.b, l.c}},
                         {"coeff", polyq_json(c)}});
    }
    return {{"basis", "coset"}, {"terms", terms}};
}

json mpoly_json(const MPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back({{"powers", {e[0], e[1], e[2]}}, {"coeff", c.get_str()}});
    return terms;
}

json series_json(const TruncSeries& s) {
    json arr = json::array();
    for (int k = 0; k <= s.order(); ++k) arr.push_back(mpoly_json(s.coeff(k)));
    return arr;
}

void emit_element(const HeckeElement& h, const std::string& basis, bool as_json) {
    if (basis == "coset") {
        const CosetElement e = monomial_to_coset(h);
        if (as_json)
            std::cout << coset_json(e).dump(2) << "\n";
        else
            std::cout << print_coset(e) << "\n";
    } else {
        if (as_json)
            std::cout << element_json(h).dump(2) << "\n";
        else
            std::cout << print_element(h) << "\n";
    }
}

int parse_sign(const std::string& s) {
    if (s == "+1" || s == "1") return 1;
    if (s == "-1") return -1;
    throw CLI::ValidationError("--eps", "expected +1 or -1");
}

std::string center_word(const CenterMonomial& m) {
    std::string s;
    auto part = [&](const char* name, int e) {
        if (e == 0) return;
        if (!s.empty()) s += "*";
        s += name;
        if (e > 1) s += "^" + std::to_string(e);
    };
    part("Z1", m.a);
    part("Z2", m.b);
    part("Z3", m.c);
    return s.empty() ? "1" : s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic in the paramodular Hecke algebra of prime level"};
    app.require_subcommand(1);

    std::string lhs_text, rhs_text, expr_text, to_basis;
    std::string mul_basis = "monomial", tqk_basis = "coset";
    std::string eps_text = "+1", lambda_text = "lambda", mu_text, mu_target = "Y1";
    bool as_json = false;
    int k = 0, char_kind = 1, order = 10, kmax = 10, degree = 0, hilbert_order = 12;

    CLI::App* c_mul = app.add_subcommand("mul", "Multiply two elements");
    c_mul->add_option("lhs", lhs_text, "left factor")->required();
    c_mul->add_option("rhs", rhs_text, "right factor")->required();
    c_mul->add_option("--basis", mul_basis, "output basis: monomial|coset")
        ->check(CLI::IsMember({"monomial", "coset"}));
    c_mul->add_flag("--json", as_json, "structured output");

    CLI::App* c_convert = app.add_subcommand("convert", "Convert an element between bases");
    c_convert->add_option("--to", to_basis, "target basis: monomial|coset")
        ->required()
        ->check(CLI::IsMember({"monomial", "coset"}));
    c_convert->add_option("expr", expr_text, "element expression")->required();
    c_convert->add_flag("--json", as_json, "structured output");

    CLI::App* c_tqk = app.add_subcommand("tqk", "The sum of all degree-k double cosets");
    c_tqk->add_option("k", k, "degree")->required()->check(CLI::NonNegativeNumber);
    c_tqk->add_option("--basis", tqk_basis, "output basis: monomial|coset")
        ->check(CLI::IsMember({"monomial", "coset"}));
    c_tqk->add_flag("--json", as_json, "structured output");

    CLI::App* c_series = app.add_subcommand("series", "Rationality certificate for a character");
    c_series->alias("char-series");
    c_series->add_option("--char-kind", char_kind, "character kind: 1|2")->check(CLI::Range(1, 3));
    c_series->add_option("--eps", eps_text, "chi(V): +1 or -1");
    c_series->add_option("--lambda", lambda_text,
                         "chi(X): a Z[q] polynomial, or 'lambda' for the symbolic value");
    c_series->add_option("--mu", mu_text, "chi value on the mu target (kind 3 only)");
    c_series->add_option("--mu-target", mu_target, "Y1|Y2 (kind 3 only)")
        ->check(CLI::IsMember({"Y1", "Y2"}));
    c_series->add_option("--order", order, "truncation order")->check(CLI::Range(3, 64));
    c_series->add_flag("--json", as_json, "structured output");

    CLI::App* c_table = app.add_subcommand("index-table", "Index character values on T(q^k)");
    c_table->add_option("--kmax", kmax, "largest k")->check(CLI::NonNegativeNumber);
    c_table->add_flag("--json", as_json, "structured output");

    CLI::App* c_cbasis = app.add_subcommand("center-basis", "Center basis in one degree");
    c_cbasis->add_option("--degree", degree, "degree")->required()->check(CLI::NonNegativeNumber);
    c_cbasis->add_flag("--json", as_json, "structured output");

    CLI::App* c_central = app.add_subcommand("is-central", "Test whether an element is central");
    c_central->add_option("expr", expr_text, "element expression")->required();

    CLI::App* c_chilbert = app.add_subcommand("center-hilbert", "Center ranks per degree");
    c_chilbert->add_option("--order", hilbert_order, "largest degree")->check(CLI::NonNegativeNumber);

    CLI::App* c_verify = app.add_subcommand("verify", "Run the full verification suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    CosetEngine engine;
    try {
        if (*c_mul) {
            HeckeElement h = mul(parse_element(lhs_text, engine), parse_element(rhs_text, engine));
            emit_element(h, mul_basis, as_json);
        } else if (*c_convert) {
            emit_element(parse_element(expr_text, engine), to_basis, as_json);
        } else if (*c_tqk) {
            const CosetElement e = t_qk(k);
            if (tqk_basis == "monomial") {
                emit_element(engine.to_monomial(e), "monomial", as_json);
            } else if (as_json) {
                std::cout << coset_json(e).dump(2) << "\n";
            } else {
                std::cout << print_coset(e) << "\n";
            }
        } else if (*c_series) {
            const int eps = parse_sign(eps_text);
            const bool symbolic = (lambda_text == "lambda" || lambda_text == "symbolic");
            const Character chi = [&]() -> Character {
                if (char_kind == 3) {
                    const MPoly lam3 = symbolic
                                           ? MPoly::variable(1, VarSet::QLM)
                                           : MPoly::from_polyq(parse_polyq(lambda_text), VarSet::QLM);
                    const MPoly mu3 = mu_text.empty()
                                          ? MPoly::variable(2, VarSet::QLM)
                                          : MPoly::from_polyq(parse_polyq(mu_text), VarSet::QLM);
                    return Character::kind3(lam3, mu3, mu_target == "Y2" ? Gen::Y2 : Gen::Y1);
                }
                const MPoly lam = symbolic ? Character::symbolic_lambda()
                                           : MPoly::from_polyq(parse_polyq(lambda_text), VarSet::QL);
                return char_kind == 1 ? Character::kind1(eps, lam) : Character::kind2(eps, lam);
            }();
            const SeriesCertificate cert = series_certificate(chi, order, engine);
            if (as_json) {
                json out = {{"kind", char_kind},     {"eps", eps},
                            {"order", order},        {"S", series_json(cert.S)},
                            {"P", series_json(cert.P)}, {"Q", series_json(cert.Q)},
                            {"residual", series_json(cert.residual)}, {"valid", cert.valid()}};
                std::cout << out.dump(2) << "\n";
            } else {
                for (int i = 0; i <= order; ++i)
                    std::cout << "S[" << i << "] = " << cert.S.coeff(i).to_string() << "\n";
                std::cout << "P = " << cert.P.to_string() << "\n";
                std::cout << "Q = " << cert.Q.to_string() << "\n";
                std::cout << "residual = " << cert.residual.to_string() << "\n";
            }
            return cert.valid() ? 0 : 1;
        } else if (*c_table) {
            if (as_json) {
                json rows = json::array();
                for (int i = 0; i <= kmax; ++i) {
                    const PolyQ v = index_closed_form(i);
                    rows.push_back({{"k", i}, {"value", v.to_string()}, {"coeff", polyq_json(v)}});
                }
                std::cout << json{{"rows", rows}}.dump(2) << "\n";
            } else {
                for (int i = 0; i <= kmax; ++i)
                    std::cout << i << ": " << index_closed_form(i).to_string() << "\n";
            }
        } else if (*c_cbasis) {
            const auto words = center_monomials(degree);
            const auto basis_elems = center_basis(degree);
            if (as_json) {
                json elems = json::array();
                for (std::size_t i = 0; i < words.size(); ++i) {
                    elems.push_back({{"word", {words[i].a, words[i].b, words[i].c}},
                                     {"element", element_json(basis_elems[i])}});
                }
                std::cout << json{{"degree", degree}, {"elements", elems}}.dump(2) << "\n";
            } else {
                for (std::size_t i = 0; i < words.size(); ++i)
                    std::cout << center_word(words[i]) << " = " << print_element(basis_elems[i])
                              << "\n";
            }
        } else if (*c_central) {
            std::cout << (is_central(parse_element(expr_text, engine)) ? "true" : "false") << "\n";
        } else if (*c_chilbert) {
            for (int i = 0; i <= hilbert_order; ++i)
                std::cout << i << ": " << center_rank(i) << "\n";
        } else if (*c_verify) {
            return run_verification(std::cout) ? 0 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidTripleError& e) {
        std::cerr << "invalid triple: " << e.what() << "\n";
        return 2;
    } catch (const KindUnsupportedError& e) {
        std::cerr << "unsupported character kind: " << e.what() << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
