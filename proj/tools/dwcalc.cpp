// Command-line front end: invariant computation, verification suites,
// character tables, kappa and Gauss-sum queries.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 resource budget exceeded.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dwcalc/cocycle.hpp"
#include "dwcalc/cyclotomic.hpp"
#include "dwcalc/group.hpp"
#include "dwcalc/homoracle.hpp"
#include "dwcalc/json_io.hpp"
#include "dwcalc/kappa.hpp"
#include "dwcalc/seifert.hpp"
#include "dwcalc/tqd.hpp"
#include "dwcalc/verify.hpp"

namespace {

using namespace dwcalc;

FiniteGroup parse_group_spec(const std::string& spec) {
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon == std::string::npos ? spec.size() : colon);
    std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (kind == "cyclic")
        return FiniteGroup::cyclic(std::stoi(rest));
    if (kind == "abelian") {
        std::vector<int> factors;
        std::size_t pos = 0;
        while (pos < rest.size()) {
            auto comma = rest.find(',', pos);
            if (comma == std::string::npos)
                comma = rest.size();
            factors.push_back(std::stoi(rest.substr(pos, comma - pos)));
            pos = comma + 1;
        }
        return FiniteGroup::abelian_product(factors);
    }
    if (kind == "file") {
        std::ifstream in(rest);
        if (!in)
            throw std::invalid_argument("cannot open group file \"" + rest + "\"");
        nlohmann::json j;
        in >> j;
        return group_from_json(j);
    }
    throw std::invalid_argument("unknown group spec \"" + spec +
                                "\" (expected cyclic:M, abelian:M1,M2,... or file:PATH)");
}

ThreeCocycle resolve_cocycle(const FiniteGroup& g, long level, const std::string& cocycle_file) {
    if (!cocycle_file.empty()) {
        std::ifstream in(cocycle_file);
        if (!in)
            throw std::invalid_argument("cannot open cocycle file \"" + cocycle_file + "\"");
        nlohmann::json j;
        in >> j;
        return cocycle_from_json(g, j);
    }
    if (auto m = g.cyclic_order()) {
        if (level < 0 || level >= *m)
            throw std::invalid_argument("--level out of range for " + g.description());
        return omega_l(*m, level);
    }
    if (level != 0)
        throw std::invalid_argument("--level is only defined for cyclic groups; use --cocycle");
    return ThreeCocycle::trivial(g);
}

std::string format_complex(const std::complex<double>& z) {
    std::ostringstream os;
    os << std::setprecision(12) << z.real() << (z.imag() < 0 ? " - " : " + ")
       << std::abs(z.imag()) << "i";
    return os.str();
}

int run_compute(const std::string& group_spec, long level, const std::string& cocycle_file,
                const std::string& seifert_str, const std::string& method,
                const std::string& format, long long budget) {
    FiniteGroup g = parse_group_spec(group_spec);
    ThreeCocycle w = resolve_cocycle(g, level, cocycle_file);
    SeifertData sf = SeifertData::parse(seifert_str);

    auto formula_supported = [&] {
        if (g.cyclic_order())
            return w.standard_cyclic_level().has_value();
        return g.is_abelian() && g.kind() != FiniteGroup::Kind::CayleyTable && w.is_trivial();
    };
    auto prime_supported = [&] {
        auto m = g.cyclic_order();
        return m && is_odd_prime(*m) && w.standard_cyclic_level().has_value();
    };

    DWResult result;
    if (method == "formula") {
        result = dw_formula(g, w, sf);
    } else if (method == "prime") {
        if (!prime_supported())
            throw std::invalid_argument(
                "--method prime requires cyclic:p with p an odd prime and a standard cocycle");
        result = dw_prime_closed_form(*g.cyclic_order(), *w.standard_cyclic_level(), sf);
    } else if (method == "oracle") {
        if (!w.is_trivial())
            throw std::invalid_argument("--method oracle evaluates the untwisted invariant only");
        result = dw_untwisted(g, sf, budget);
    } else if (method == "auto") {
        if (prime_supported())
            result = dw_prime_closed_form(*g.cyclic_order(), *w.standard_cyclic_level(), sf);
        else if (formula_supported())
            result = dw_formula(g, w, sf);
        else if (w.is_trivial())
            result = dw_untwisted(g, sf, budget);
        else
            throw std::invalid_argument("no evaluation method supports this (group, cocycle)");
    } else {
        throw std::invalid_argument("unknown --method \"" + method + "\"");
    }

    if (format == "json") {
        nlohmann::json j = dw_result_to_json(result);
        j["group"] = g.description();
        j["seifert"] = sf.to_string();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "group   " << g.description() << "\n";
        std::cout << "seifert " << sf.to_string() << "\n";
        std::cout << "method  " << method_name(result.method) << "\n";
        std::cout << "Z       " << result.value.to_string() << "\n";
        std::cout << "approx  " << format_complex(result.approx) << "\n";
    }
    return 0;
}

int run_verify(const std::string& suite, int max_order, const std::string& format,
               long long budget) {
    std::vector<SuiteResult> results;
    auto want = [&](const char* name) { return suite == "all" || suite == name; };
    if (want("cocycle"))
        results.push_back(verify_cocycles(max_order));
    if (want("kappa"))
        results.push_back(verify_kappa(max_order, 8));
    if (want("orthonormality"))
        results.push_back(verify_orthonormality(max_order));
    if (want("fusion"))
        results.push_back(verify_fusion(std::min(max_order, 8)));
    if (want("formula-vs-oracle"))
        results.push_back(verify_formula_vs_oracle(std::min(max_order, 16), 40, budget));
    if (want("prime-vs-formula"))
        results.push_back(verify_prime_vs_formula(10));
    if (want("gauss"))
        results.push_back(verify_gauss(31));
    if (want("gluing"))
        results.push_back(verify_gluing(std::min(max_order, 8), 4));
    if (want("restriction"))
        results.push_back(verify_restriction(max_order, 100, std::min(max_order, 8)));
    if (want("fixed-values"))
        results.push_back(verify_fixed_values(std::min(max_order, 8)));
    if (results.empty())
        throw std::invalid_argument("unknown --suite \"" + suite + "\"");

    std::sort(results.begin(), results.end(),
              [](const SuiteResult& a, const SuiteResult& b) { return a.name < b.name; });

    bool all_pass = true;
    if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : results) {
            j.push_back({{"suite", r.name},
                         {"passed", r.passed},
                         {"cases", r.cases},
                         {"witness", r.witness},
                         {"seconds", r.seconds}});
            all_pass = all_pass && r.passed;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            std::cout << std::left << std::setw(20) << r.name
                      << (r.passed ? "PASS" : "FAIL") << "  " << std::setw(9) << r.cases
                      << " cases  " << std::fixed << std::setprecision(2) << r.seconds
                      << "s\n";
            if (!r.passed)
                std::cout << "    witness: " << r.witness << "\n";
            all_pass = all_pass && r.passed;
        }
    }
    return all_pass ? 0 : 1;
}

int run_characters(const std::string& group_spec, long level, const std::string& format) {
    FiniteGroup g = parse_group_spec(group_spec);
    ThreeCocycle w = resolve_cocycle(g, level, "");
    auto family = character_family(g, w);
    auto pairs = g.commuting_pairs();

    std::vector<std::vector<Cyclotomic>> gram(family.size(),
                                              std::vector<Cyclotomic>(family.size()));
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = 0; j < family.size(); ++j)
            gram[i][j] = inner(family[i].values, family[j].values);

    if (format == "json") {
        nlohmann::json chars = nlohmann::json::array();
        for (const auto& chi : family) {
            nlohmann::json values = nlohmann::json::array();
            for (auto [x, h] : pairs)
                values.push_back({{"x", x}, {"h", h},
                                  {"value", cyclotomic_to_json(chi.values.at(x, h))}});
            chars.push_back({{"label", chi.label()},
                             {"dim", cyclotomic_to_json(chi.dim)},
                             {"values", values}});
        }
        nlohmann::json gj = nlohmann::json::array();
        for (const auto& row : gram) {
            nlohmann::json r = nlohmann::json::array();
            for (const auto& v : row)
                r.push_back(cyclotomic_to_json(v));
            gj.push_back(r);
        }
        std::cout << nlohmann::json{{"group", g.description()},
                                    {"characters", chars},
                                    {"gram", gj}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "group " << g.description() << ", " << family.size() << " characters\n";
        for (const auto& chi : family) {
            std::cout << "chi" << chi.label() << "  dim=" << chi.dim.to_string() << " :";
            for (auto [x, h] : pairs) {
                const auto& v = chi.values.at(x, h);
                if (!v.is_zero())
                    std::cout << "  (" << x << "," << h << ")->" << v.to_string();
            }
            std::cout << "\n";
        }
        std::cout << "gram matrix:\n";
        for (const auto& row : gram) {
            for (const auto& v : row)
                std::cout << std::setw(3) << v.to_string();
            std::cout << "\n";
        }
    }
    return 0;
}

int run_kappa(const std::string& group_spec, long level, const std::string& cocycle_file,
              long a, long b, int z, bool with_oracle, const std::string& format) {
    FiniteGroup g = parse_group_spec(group_spec);
    ThreeCocycle w = resolve_cocycle(g, level, cocycle_file);
    if (z < 0 || z >= g.order())
        throw std::invalid_argument("--z out of range");
    RootOfUnity closed = kappa(w, a, b, z);
    std::optional<RootOfUnity> oracle;
    if (with_oracle)
        oracle = kappa_oracle(w, a, b, z);

    if (format == "json") {
        nlohmann::json j{{"kappa", cyclotomic_to_json(closed.to_cyclotomic())},
                         {"a", a},
                         {"b", b},
                         {"z", z}};
        if (oracle) {
            j["oracle"] = cyclotomic_to_json(oracle->to_cyclotomic());
            j["equal"] = (*oracle == closed);
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "kappa_{" << a << "," << b << "}(z=" << z << ") = " << closed.to_string()
                  << "\n";
        if (oracle) {
            std::cout << "oracle = " << oracle->to_string() << "\n";
            std::cout << "verdict: " << (*oracle == closed ? "equal" : "DIFFER") << "\n";
        }
    }
    if (oracle && *oracle != closed)
        return 1;
    return 0;
}

int run_gauss(long p, long a, const std::string& format) {
    Cyclotomic s = gauss_sum(p, a);
    int leg = legendre(a, p);
    if (format == "json") {
        std::cout << nlohmann::json{{"p", p},
                                    {"a", a},
                                    {"value", cyclotomic_to_json(s)},
                                    {"approx", complex_to_json(s.to_complex())},
                                    {"legendre", leg}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "S_" << p << "(" << a << ") = " << s.to_string() << "\n";
        std::cout << "approx   " << format_complex(s.to_complex()) << "\n";
        std::cout << "legendre " << leg << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Dijkgraaf-Witten invariants of Seifert manifolds over finite groups"};
    app.require_subcommand(1);

    std::string group_spec = "cyclic:2";
    long level = 0;
    std::string cocycle_file;
    std::string seifert_str = "g=0;";
    std::string method = "auto";
    std::string format = "text";
    long long budget = kDefaultHomBudget;
    std::string suite = "all";
    int max_order = 6;
    long a = 1, b = 0, p = 3;
    int z = 0;
    bool with_oracle = false;

    auto add_group_opts = [&](CLI::App* cmd, bool with_cocycle) {
        cmd->add_option("--group", group_spec, "group spec: cyclic:M | abelian:M1,M2,... | file:PATH");
        cmd->add_option("--level", level, "level l of the standard cyclic cocycle omega_l");
        if (with_cocycle)
            cmd->add_option("--cocycle", cocycle_file, "JSON file with an explicit cocycle table");
        cmd->add_option("--format", format, "output format: text | json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* compute = app.add_subcommand("compute", "evaluate Z^omega(M) for a Seifert manifold");
    add_group_opts(compute, true);
    compute->add_option("--seifert", seifert_str, "manifold: \"g=G;(a1,b1),(a2,b2),...\"")
        ->required();
    compute->add_option("--method", method, "auto | formula | prime | oracle")
        ->check(CLI::IsMember({"auto", "formula", "prime", "oracle"}));
    compute->add_option("--budget", budget, "work cap for the hom-counting oracle");

    CLI::App* verify = app.add_subcommand("verify", "run the consistency suites");
    verify->add_option("--suite", suite,
                       "cocycle | kappa | orthonormality | fusion | formula-vs-oracle | "
                       "prime-vs-formula | gauss | gluing | restriction | fixed-values | all");
    verify->add_option("--max-order", max_order, "largest group order the suites sweep");
    verify->add_option("--budget", budget, "work cap for the hom-counting oracle");
    verify->add_option("--format", format, "output format: text | json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* characters = app.add_subcommand("characters", "print the character table and Gram matrix");
    add_group_opts(characters, false);

    CLI::App* kappa_cmd = app.add_subcommand("kappa", "evaluate kappa^omega_{a,b}(z)");
    add_group_opts(kappa_cmd, true);
    kappa_cmd->add_option("--a", a)->required();
    kappa_cmd->add_option("--b", b)->required();
    kappa_cmd->add_option("--z", z)->required();
    kappa_cmd->add_flag("--oracle", with_oracle, "also evaluate the product-formula oracle");

    CLI::App* gauss = app.add_subcommand("gauss", "evaluate the quadratic Gauss sum S_p(a)");
    gauss->add_option("--p", p, "odd prime")->required();
    gauss->add_option("--a", a)->required();
    gauss->add_option("--format", format, "output format: text | json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (compute->parsed())
            return run_compute(group_spec, level, cocycle_file, seifert_str, method, format,
                               budget);
        if (verify->parsed())
            return run_verify(suite, max_order, format, budget);
        if (characters->parsed())
            return run_characters(group_spec, level, format);
        if (kappa_cmd->parsed())
            return run_kappa(group_spec, level, cocycle_file, a, b, z, with_oracle, format);
        if (gauss->parsed())
            return run_gauss(p, a, format);
    } catch (const dwcalc::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
