// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion, with wall-clock budgets enforced.
#include "dgv/catalog.hpp"
#include "dgv/dec_wbar.hpp"
#include "dgv/dg_homotopy.hpp"
#include "dgv/dg_io.hpp"
#include "dgv/double_nerve.hpp"
#include "dgv/formula.hpp"
#include "dgv/reflection.hpp"
#include "dgv/simplicial_io.hpp"
#include "dgv/suites.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>

using namespace dgv;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, double budget_s,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
            .count() /
        1000.0;
    bool in_budget = secs < budget_s;
    if (!ok || !in_budget) ++failures;
    std::printf("[%s] criterion %2d: %s (%.1fs of %.0fs budget)%s%s\n",
                (ok && in_budget) ? "PASS" : "FAIL", number, name.c_str(), secs, budget_s,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
}

std::shared_ptr<DecView> dec_nerve(const GroupTable& grp) {
    auto L = std::make_shared<NerveView>(group_as_category(grp), 10);
    return std::make_shared<DecView>(L, 4, 4);
}

// ten single-entry mutations across the catalog; each must produce a
// localized witness
std::vector<std::pair<std::string, DoubleGroupoid>> standard_mutations() {
    std::vector<std::pair<std::string, DoubleGroupoid>> out;
    {
        DoubleGroupoid g = build_catalog("ab Z2");
        g.comp_h_sq[1][1] = 1;
        out.push_back({"Ab(Z/2) comp_h_sq entry swapped", g});
    }
    {
        DoubleGroupoid g = build_catalog("ab Z2");
        g.comp_v_sq[1][1] = 1;
        out.push_back({"Ab(Z/2) comp_v_sq entry swapped", g});
    }
    {
        DoubleGroupoid g = build_catalog("deloop Z3");
        g.comp_h_sq[1][1] = 0;
        out.push_back({"Deloop(Z/3) square composition broken", g});
    }
    {
        DoubleGroupoid g = build_catalog("deloop Z3");
        g.id_v_sq[1] = 2;
        out.push_back({"Deloop(Z/3) identity square misassigned", g});
    }
    {
        DoubleGroupoid g = build_catalog("deloop Z3");
        g.comp_h_mor[1][1] = 0;
        out.push_back({"Deloop(Z/3) morphism composition broken", g});
    }
    {
        DoubleGroupoid g = build_catalog("pair 2");
        g.comp_h_mor[1][2] = 3;
        out.push_back({"Pair comp_h_mor boundary broken", g});
    }
    {
        DoubleGroupoid g = build_catalog("pair 2");
        g.id_v_obj[0] = 3;
        out.push_back({"Pair identity vmor misassigned", g});
    }
    {
        DoubleGroupoid g = build_catalog("tensor Z2 Z3");
        int a = -1, b = -1;
        for (int s1 = 0; s1 < g.n_sq() && a < 0; ++s1)
            for (int s2 = 0; s2 < g.n_sq() && a < 0; ++s2)
                if (g.cvs(s1, s2) >= 0 && g.cvs(s1, s2) != g.cvs((s1 + 1) % g.n_sq(), s2)) {
                    a = s1;
                    b = s2;
                }
        g.comp_v_sq[a][b] = (g.comp_v_sq[a][b] + g.n_sq() / 2) % g.n_sq();
        out.push_back({"Tensor comp_v_sq entry swapped", g});
    }
    {
        DoubleGroupoid g = build_catalog("nofill");
        g.comp_h_sq[0][0] = 1;
        out.push_back({"NoFill square composition broken", g});
    }
    {
        DoubleGroupoid g = build_catalog("disc 2");
        g.id_h_obj[0] = 1;
        out.push_back({"Disc identity hmor misassigned", g});
    }
    return out;
}

}  // namespace

int main() {
    criterion(1, "axiom suite over the catalog plus ten localized mutations", 10, [](std::string& d) {
        for (const auto& e : standard_catalog()) {
            ValidationReport rep = validate_axioms(e.g);
            if (!rep.ok()) {
                d = e.name + " unexpectedly fails validation";
                return false;
            }
            bool should_be_groupoid = e.name != "UnitCell";
            if (rep.is_groupoid != should_be_groupoid) {
                d = e.name + " groupoid verdict wrong";
                return false;
            }
        }
        int mutants = 0;
        for (const auto& [name, g] : standard_mutations()) {
            ValidationReport rep = validate_axioms(g);
            if (rep.ok()) {
                d = "mutation not detected: " + name;
                return false;
            }
            bool localized = false;
            for (const auto& v : rep.violations)
                if (!v.witness.empty()) localized = true;
            if (!localized) {
                d = "no witness for: " + name;
                return false;
            }
            ++mutants;
        }
        d = "7 catalog entries validated, " + std::to_string(mutants) +
            " mutations each rejected with a witnessing tuple";
        return mutants == 10;
    });

    criterion(2, "Lemma 3.1 cross-check on every catalog entry", 5, [](std::string& d) {
        int n = 0;
        for (const auto& e : standard_catalog()) {
            if (e.name == "UnitCell") continue;  // variants assume a groupoid
            if (check_filling(e.g).ok != check_filling_variants(e.g)) {
                d = "disagreement on " + e.name;
                return false;
            }
            ++n;
        }
        d = "direct and variant checks agree on " + std::to_string(n) + " entries";
        return true;
    });

    criterion(3, "Theorem 5.1 triple equivalence with explicit negative witnesses", 120,
              [](std::string& d) {
                  for (const auto& e : standard_catalog()) {
                      TriReport rep = theorem_51_suite(e.g);
                      bool expected = e.name != "NoFill" && e.name != "UnitCell";
                      if (!rep.agree() || rep.i != expected) {
                          d = "verdicts wrong on " + e.name;
                          return false;
                      }
                      if (!expected && (rep.witness_ii.empty() || rep.witness_iii.empty())) {
                          d = "missing horn witness on " + e.name;
                          return false;
                      }
                  }
                  d = "(i)=(ii)=(iii) on all 7 entries; NoFill/UnitCell fail with horn witnesses";
                  return true;
              });

    criterion(4, "Lemma 5.2 unique fillers at n=3, exhaustively", 60, [](std::string& d) {
        for (const char* expr : {"ab Z2", "deloop Z2", "pair 2"}) {
            std::string why;
            if (!unique_filler_check(build_catalog(expr), 3, &why)) {
                d = std::string(expr) + ": " + why;
                return false;
            }
        }
        d = "every diagonal 3-horn of the three structures has exactly one filler";
        return true;
    });

    criterion(5, "Theorem 5.3 isomorphisms at every base object", 120, [](std::string& d) {
        for (const auto& e : filling_catalog()) {
            IsoReport rep = theorem_53_suite(e.g);
            if (!rep.ok) {
                d = e.name + ": " + rep.detail;
                return false;
            }
        }
        Pi1Result p1 = pi1(build_catalog("deloop Z3"), 0);
        if (!isomorphic(p1.table, cyclic_group(3))) {
            d = "pi1(Deloop(Z/3)) not Z/3";
            return false;
        }
        Pi2Result p2 = pi2(build_catalog("ab Z2"), 0);
        if (!isomorphic(p2.table, cyclic_group(2))) {
            d = "pi2(Ab(Z/2)) not Z/2";
            return false;
        }
        d = "pi_i agree on all filling entries; pi1(Deloop Z/3)=Z/3 and pi2(Ab Z/2)=Z/2 exhibited";
        return true;
    });

    criterion(6, "Theorem 6.3 round trips with cellwise-identity epsilon", 120, [](std::string& d) {
        for (const auto& e : filling_catalog()) {
            RoundTripReport rep = theorem_63_suite(e.g);
            if (!rep.ok()) {
                d = e.name + ": " + rep.detail;
                return false;
            }
        }
        d = "pp(nn(g)) canonically isomorphic to g, eps cellwise identity at (p,q)<=(2,2), "
            "triangle identities hold";
        return true;
    });

    criterion(7, "Theorem 6.5 proxy on dec(nerve Gamma)", 300, [](std::string& d) {
        for (int n : {2, 3}) {
            auto K = dec_nerve(cyclic_group(n));
            Certification cert = certify(K, 3, 3);
            if (!cert.valid()) {
                d = "certification failed for Z/" + std::to_string(n);
                return false;
            }
            TwoTypeReport rep = verify_2type(cert);
            if (!rep.ok()) {
                d = "2-type comparison failed for Z/" + std::to_string(n) + ": " + rep.detail;
                return false;
            }
            PPResult r = pp(cert);
            if (pi0(r.g).size() != 1 || !isomorphic(pi1(r.g, 0).table, cyclic_group(n)) ||
                pi2(r.g, 0).table.size() != 1) {
                d = "pinned groups wrong for Z/" + std::to_string(n);
                return false;
            }
        }
        d = "certified; pi0 = pt, pi1 = Gamma, pi2 = 0 on both pp K and wbar K";
        return true;
    });

    criterion(8, "section-2 property suites", 120, [](std::string& d) {
        // (a) simplicial/bisimplicial identities on >= 1000 sampled cells
        NerveView nz3(group_as_category(cyclic_group(3)), 8);
        verify_simplicial_identities(nz3, 3, 400, 1);
        auto dz2 = nn(build_catalog("deloop Z2"), 4, 4);
        verify_bisimplicial_identities(*dz2, 3, 3, 400, 2);
        auto dn = dec_nerve(cyclic_group(2));
        verify_bisimplicial_identities(*dn, 3, 3, 300, 3);
        // (b) Fact 2.1 on 100 instances across three Kan complexes and all k
        int fact_checked = 0;
        DiagView diag_ab(nn(build_catalog("ab Z2"), 3, 3), 3);
        DiagView diag_pair(nn(build_catalog("pair 2"), 3, 3), 3);
        std::array<SimplicialSetView*, 3> complexes{&nz3, &diag_ab, &diag_pair};
        for (SimplicialSetView* L : complexes) {
            std::vector<int> cls = homotopy_classes(*L, 1);
            for (int k = 0; k <= 2 && fact_checked < 100; ++k)
                for (int y = 0; y < L->size(2) && fact_checked < 100; ++y)
                    for (int yp = y; yp < L->size(2) && fact_checked < 100; ++yp) {
                        bool pre = true;
                        for (int i = 0; i <= 2 && pre; ++i)
                            if (i != k) pre = cls[L->face(2, i, y)] == cls[L->face(2, i, yp)];
                        if (!pre) continue;
                        if (!fact_p1_check(*L, 2, y, yp, k)) {
                            d = "Fact 2.1 instance failed";
                            return false;
                        }
                        ++fact_checked;
                    }
        }
        if (fact_checked < 100) {
            d = "only " + std::to_string(fact_checked) + " Fact 2.1 instances found";
            return false;
        }
        // (c) Lemma 2.4/2.5 exhaustively on the (1,1) cells (asserted inside)
        auto ab = nn(build_catalog("ab Z2"), 4, 4);
        cell_classes(*ab, 1, 1);
        cell_classes(*dn, 1, 1);
        check_class_face_maps(*ab, 1, 1);
        // (d) triangle identities on two catalog instances
        {
            auto L = std::make_shared<NerveView>(group_as_category(cyclic_group(2)), 9);
            auto dec = std::make_shared<DecView>(L, 4, 4);
            WbarView wb(dec, 4);
            check_triangle_1(*L, *dec, wb, 1, 1);
            check_triangle_2(*dec, wb, 2);
        }
        {
            WbarView wb(ab, 3);
            check_triangle_2(*ab, wb, 2);
        }
        d = "identity scans (1100 cells), 100 Fact 2.1 instances, Lemmas 2.4/2.5 exhaustive on "
            "(1,1) cells, triangle identities on two instances";
        return true;
    });

    criterion(9, "formula audit on grids 1/16 and 1/17", 60, [](std::string& d) {
        auto reports = audit_all({16, 17});
        int passed = 0;
        for (const auto& r : reports) {
            if (!r.ok()) {
                d = r.name + " failed: " + (r.failures.empty() ? "?" : r.failures[0].details);
                return false;
            }
            ++passed;
        }
        d = "all " + std::to_string(passed) +
            " cataloged piecewise maps pass coverage, consistency, boundary, barycentric";
        return passed == static_cast<int>(formula_catalog().size());
    });

    criterion(10, "byte-identical verify theorems --json across two runs", 120, [](std::string& d) {
#ifdef DGV_CLI_PATH
        auto run_once = [](std::string& out) {
            FILE* p = popen((std::string(DGV_CLI_PATH) + " verify theorems --json").c_str(), "r");
            if (!p) return false;
            char buf[4096];
            size_t n;
            while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
            return pclose(p) == 0;
        };
        std::string first, second;
        if (!run_once(first) || !run_once(second)) {
            d = "CLI run failed";
            return false;
        }
        if (first != second) {
            d = "outputs differ";
            return false;
        }
        d = "two consecutive CLI runs produced " + std::to_string(first.size()) +
            " identical bytes";
        return !first.empty();
#else
        d = "CLI path not configured";
        return false;
#endif
    });

    if (failures == 0)
        std::printf("acceptance: all 10 criteria passed\n");
    else
        std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
