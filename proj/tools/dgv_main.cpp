#include "dgv/catalog.hpp"
#include "dgv/dec_wbar.hpp"
#include "dgv/dg_homotopy.hpp"
#include "dgv/dg_io.hpp"
#include "dgv/double_nerve.hpp"
#include "dgv/formula.hpp"
#include "dgv/reflection.hpp"
#include "dgv/simplicial_io.hpp"
#include "dgv/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace dgv;

// exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage/schema
constexpr int kMathFail = 1;

std::string read_stream_or_file(const std::string& spec) {
    std::stringstream ss;
    if (spec == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream f(spec);
        if (!f) throw SchemaError("cannot read " + spec);
        ss << f.rdbuf();
    }
    return ss.str();
}

// simplicial inputs: a tabulated JSON file, "-", or "gen:nerve <group>"
std::shared_ptr<SimplicialSetView> load_simplicial(const std::string& spec, int cap) {
    if (spec.rfind("gen:", 0) == 0) {
        std::istringstream is(spec.substr(4));
        std::string head, grp;
        is >> head >> grp;
        if (head != "nerve" || grp.empty())
            throw SchemaError("simplicial builder must be 'gen:nerve <group>'");
        return std::make_shared<NerveView>(group_as_category(parse_group(grp)), cap);
    }
    return simplicial_from_json(read_stream_or_file(spec));
}

// bisimplicial inputs: a tabulated JSON file, "-", "gen:nn <dg builder>",
// or "gen:dec nerve <group>"
std::shared_ptr<BisimplicialSetView> load_bisimplicial(const std::string& spec, int P, int Q) {
    if (spec.rfind("gen:", 0) == 0) {
        std::istringstream is(spec.substr(4));
        std::string head;
        is >> head;
        std::string rest;
        std::getline(is, rest);
        if (head == "nn") return nn(build_catalog(rest), P, Q);
        if (head == "dec") {
            std::istringstream rs(rest);
            std::string kind, grp;
            rs >> kind >> grp;
            if (kind != "nerve" || grp.empty())
                throw SchemaError(
                    "bisimplicial builder must be 'gen:nn <builder>' or 'gen:dec nerve <group>'");
            auto L = std::make_shared<NerveView>(group_as_category(parse_group(grp)), P + Q + 3);
            return std::make_shared<DecView>(L, P, Q);
        }
        throw SchemaError("unknown bisimplicial builder: " + head);
    }
    return bisimplicial_from_json(read_stream_or_file(spec));
}

int find_object(const DoubleGroupoid& g, const std::string& name) {
    for (int i = 0; i < g.n_obj(); ++i)
        if (g.objects[i] == name) return i;
    throw SchemaError("unknown base object: " + name);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "verification engine for finite double groupoids and truncated (bi)simplicial sets"};
    app.require_subcommand(1);

    std::string input, base, only, group_expr;
    std::vector<std::string> gen_words;
    std::string grid_spec = "16,17";
    int dim = 3, levels = 3, tp = 3, tq = 3;
    bool as_json = false;

    auto* c_gen = app.add_subcommand("gen", "emit a catalog structure as JSON");
    c_gen->add_option("words", gen_words, "builder words, e.g. deloop Z3")->required();

    auto* c_val = app.add_subcommand("validate", "check the double groupoid axioms");
    c_val->add_option("input", input, "file, '-', or gen:<builder>")->required();
    c_val->add_flag("--json", as_json);

    auto* c_fil = app.add_subcommand("filling", "check the filling condition and its variants");
    c_fil->add_option("input", input)->required();
    c_fil->add_flag("--json", as_json);

    auto* c_pi = app.add_subcommand("pi", "homotopy groups of a double groupoid");
    c_pi->add_option("input", input)->required();
    c_pi->add_option("--base", base, "base object (default: all)");

    auto* c_nerve = app.add_subcommand("nerve", "tabulated nerve of a group");
    c_nerve->add_option("group", group_expr)->required();
    c_nerve->add_option("--levels", levels, "truncation level")->capture_default_str();

    auto* c_dk = app.add_subcommand("diag-kan", "Kan check of diag NN of a double category");
    c_dk->add_option("input", input)->required();
    c_dk->add_option("--dim", dim, "maximum horn dimension")->capture_default_str();

    auto* c_ext = app.add_subcommand("extension", "bisimplicial extension condition");
    c_ext->add_option("input", input, "file, '-', gen:nn <builder>, gen:dec nerve <group>")
        ->required();
    c_ext->add_option("--p", tp)->capture_default_str();
    c_ext->add_option("--q", tq)->capture_default_str();

    auto* c_dec = app.add_subcommand("dec", "total decalage of a simplicial set");
    c_dec->add_option("input", input, "file, '-', or gen:nerve <group>")->required();
    c_dec->add_option("--p", tp)->capture_default_str();
    c_dec->add_option("--q", tq)->capture_default_str();

    auto* c_wbar = app.add_subcommand("wbar", "codiagonal of a bisimplicial set");
    c_wbar->add_option("input", input)->required();
    c_wbar->add_option("--levels", levels)->capture_default_str();

    auto* c_diag = app.add_subcommand("diag", "diagonal of a bisimplicial set");
    c_diag->add_option("input", input)->required();
    c_diag->add_option("--levels", levels)->capture_default_str();

    auto* c_refl = app.add_subcommand("reflect", "homotopy double groupoid of a certified input");
    c_refl->add_option("input", input)->required();
    c_refl->add_flag("--json", as_json);

    auto* c_ver = app.add_subcommand("verify", "theorem and formula verification suites");
    std::string what;
    c_ver->add_option("what", what, "theorems | formulas")->required();
    c_ver->add_option("--grid", grid_spec, "grid denominators")->capture_default_str();
    c_ver->add_option("--only", only, "restrict formulas to one catalog entry");
    c_ver->add_flag("--json", as_json);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_gen->parsed()) {
            std::string expr;
            for (const auto& w : gen_words) expr += (expr.empty() ? "" : " ") + w;
            std::cout << dg_to_json(build_catalog(expr));
            return 0;
        }
        if (c_val->parsed()) {
            DoubleGroupoid g = load_dg_input(input);
            ValidationReport rep = validate_axioms(g);
            if (as_json) {
                std::cout << "{\"ok\":" << (rep.ok() ? "true" : "false") << ",\"is_groupoid\":"
                          << (rep.is_groupoid ? "true" : "false")
                          << ",\"violations\":" << rep.violations.size() << "}\n";
            } else {
                std::cout << rep.to_text();
            }
            return rep.ok() ? 0 : kMathFail;
        }
        if (c_fil->parsed()) {
            DoubleGroupoid g = load_dg_input(input);
            ValidationReport val = validate_axioms(g);
            if (!val.ok()) {
                std::cout << "structure invalid; run validate first\n" << val.to_text();
                return kMathFail;
            }
            FillingReport rep = check_filling(g);
            bool variants = check_filling_variants(g);
            std::cout << rep.to_text(g);
            std::cout << "variant filling problems (Lemma 3.1): " << (variants ? "hold" : "fail")
                      << (variants == rep.ok ? ", agreeing with the direct check\n"
                                             : ", DISAGREEING with the direct check\n");
            return (rep.ok && variants) ? 0 : kMathFail;
        }
        if (c_pi->parsed()) {
            DoubleGroupoid g = load_dg_input(input);
            if (base.empty()) {
                std::cout << pi_report(g).to_json(g) << "\n";
            } else {
                int a = find_object(g, base);
                std::cout << "{\"pi1\":" << pi1(g, a).table.to_json()
                          << ",\"pi2\":" << pi2(g, a).table.to_json() << "}\n";
            }
            return 0;
        }
        if (c_nerve->parsed()) {
            NerveView view(group_as_category(parse_group(group_expr)), levels + 1);
            std::cout << simplicial_to_json(view, levels);
            return 0;
        }
        if (c_dk->parsed()) {
            DoubleGroupoid g = load_dg_input(input);
            auto K = nn(g, dim + 1, dim + 1);
            DiagView diag(K, dim);
            KanReport rep = kan_check(diag, dim);
            if (rep.kan)
                std::cout << "diag NN is Kan up to n = " << dim << " (" << rep.horns << " horns)\n";
            else
                std::cout << "diag NN fails Kan: " << rep.failure_text << "\n";
            return rep.kan ? 0 : kMathFail;
        }
        if (c_ext->parsed()) {
            auto K = load_bisimplicial(input, tp + 1, tq + 1);
            ExtensionReport rep = extension_check(*K, tp, tq);
            if (rep.ok())
                std::cout << "extension condition holds at (" << tp << "," << tq << "); "
                          << rep.bihorns << " mixed horns filled\n";
            else
                std::cout << "extension condition fails: " << rep.failure << "\n";
            return rep.ok() ? 0 : kMathFail;
        }
        if (c_dec->parsed()) {
            auto L = load_simplicial(input, tp + tq + 3);
            DecView dec(L, tp, tq);
            std::cout << bisimplicial_to_json(dec, tp, tq);
            return 0;
        }
        if (c_wbar->parsed()) {
            auto K = load_bisimplicial(input, levels + 1, levels + 1);
            WbarView wb(K, levels);
            std::cout << simplicial_to_json(wb, levels);
            return 0;
        }
        if (c_diag->parsed()) {
            auto K = load_bisimplicial(input, levels + 1, levels + 1);
            DiagView diag(K, levels);
            std::cout << simplicial_to_json(diag, levels);
            return 0;
        }
        if (c_refl->parsed()) {
            auto K = load_bisimplicial(input, 4, 4);
            Certification cert = certify(K, 3, 3);
            if (!cert.valid()) {
                std::cerr << "input not certifiable: " << cert.describe() << "\n";
                return kMathFail;
            }
            PPResult r = pp(cert);
            auto nnpp = nn(r.g, 3, 3);
            std::string eps_report;
            bool eps_ok = true;
            try {
                check_epsilon_bisimplicial(*K, r, *nnpp, 2, 2);
                eps_report = "epsilon is a bisimplicial map on all cells up to (2,2)";
            } catch (const std::exception& e) {
                eps_ok = false;
                eps_report = e.what();
            }
            if (as_json) {
                std::cout << "{\"double_groupoid\":" << dg_to_json(r.g)
                          << ",\"epsilon\":{\"ok\":" << (eps_ok ? "true" : "false")
                          << ",\"report\":\"" << eps_report << "\"}}\n";
            } else {
                std::cout << dg_to_json(r.g);
                std::cerr << eps_report << "\n";
            }
            return eps_ok ? 0 : kMathFail;
        }
        if (c_ver->parsed()) {
            if (what == "theorems") {
                TheoremsRun run = verify_theorems();
                std::cout << (as_json ? run.to_json() + "\n" : run.to_text());
                return run.ok() ? 0 : kMathFail;
            }
            if (what == "formulas") {
                std::vector<int> grids;
                std::stringstream gs(grid_spec);
                std::string tok;
                while (std::getline(gs, tok, ',')) grids.push_back(std::stoi(tok));
                bool all = true;
                bool matched = false;
                std::ostringstream js;
                js << "[";
                bool first = true;
                for (const auto& entry : formula_catalog()) {
                    if (!only.empty() && entry.name != only) continue;
                    matched = true;
                    AuditReport rep = audit_entry(entry, grids);
                    if (!rep.ok()) all = false;
                    if (as_json) {
                        js << (first ? "" : ",") << rep.to_json();
                        first = false;
                    } else {
                        std::cout << rep.to_text();
                    }
                }
                if (!matched) throw SchemaError("no catalog entry named '" + only + "'");
                if (as_json) std::cout << js.str() << "]\n";
                return all ? 0 : kMathFail;
            }
            throw SchemaError("verify expects 'theorems' or 'formulas'");
        }
    } catch (const SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
