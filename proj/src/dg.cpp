#include "dgv/dg.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dgv {

namespace {

// Generic category view over one of the four structures.
struct CatView {
    std::string name;
    int n_mor, n_obj;
    std::function<int(int)> src, tgt;
    std::function<int(int)> ident;                 // object -> identity morphism
    const std::vector<std::vector<int>>* comp;
    std::function<std::string(int)> mor_id, obj_id;
};

void check_category(const CatView& c, ValidationReport& rep) {
    auto viol = [&](const std::string& law, std::vector<std::string> w, const std::string& d) {
        rep.violations.push_back({c.name + ": " + law, std::move(w), d});
    };
    for (int a = 0; a < c.n_obj; ++a) {
        int i = c.ident(a);
        if (c.src(i) != a || c.tgt(i) != a)
            viol("identity boundary", {c.obj_id(a), c.mor_id(i)}, "identity not an endomorphism of its object");
    }
    for (int f = 0; f < c.n_mor; ++f)
        for (int g = 0; g < c.n_mor; ++g) {
            bool matching = c.src(f) == c.tgt(g);
            int r = (*c.comp)[f][g];
            if (matching && r < 0) {
                viol("partial table incomplete", {c.mor_id(f), c.mor_id(g)}, "matching pair has no composite");
                continue;
            }
            if (!matching && r >= 0) {
                viol("composition defined on non-matching pair", {c.mor_id(f), c.mor_id(g)}, "");
                continue;
            }
            if (r >= 0 && (c.src(r) != c.src(g) || c.tgt(r) != c.tgt(f)))
                viol("composite boundary", {c.mor_id(f), c.mor_id(g), c.mor_id(r)},
                     "src/tgt of composite disagree with factors");
        }
    for (int f = 0; f < c.n_mor; ++f) {
        int l = (*c.comp)[c.ident(c.tgt(f))][f];
        int r = (*c.comp)[f][c.ident(c.src(f))];
        if (l != f || r != f)
            viol("identity not neutral", {c.mor_id(f)}, "");
    }
    for (int f = 0; f < c.n_mor; ++f)
        for (int g = 0; g < c.n_mor; ++g) {
            if (c.src(f) != c.tgt(g)) continue;
            int fg = (*c.comp)[f][g];
            if (fg < 0) continue;
            for (int h = 0; h < c.n_mor; ++h) {
                if (c.src(g) != c.tgt(h)) continue;
                int gh = (*c.comp)[g][h];
                if (gh < 0) continue;
                if ((*c.comp)[fg][h] != (*c.comp)[f][gh])
                    viol("associativity", {c.mor_id(f), c.mor_id(g), c.mor_id(h)}, "");
            }
        }
}

// Two-sided inverses, existence and uniqueness.
bool check_groupoid(const CatView& c, ValidationReport& rep, bool record_violations) {
    bool all = true;
    for (int f = 0; f < c.n_mor; ++f) {
        int found = -1, count = 0;
        for (int g = 0; g < c.n_mor; ++g) {
            if (c.src(g) != c.tgt(f) || c.tgt(g) != c.src(f)) continue;
            if ((*c.comp)[f][g] == c.ident(c.tgt(f)) && (*c.comp)[g][f] == c.ident(c.src(f))) {
                found = g;
                ++count;
            }
        }
        if (found < 0) {
            all = false;
            if (record_violations)
                rep.violations.push_back({c.name + ": no inverse", {c.mor_id(f)}, ""});
        } else if (count > 1 && record_violations) {
            rep.violations.push_back({c.name + ": inverse not unique", {c.mor_id(f)}, ""});
        }
    }
    return all;
}

}  // namespace

int DoubleGroupoid::inv_h_mor(int f) const {
    for (int g = 0; g < n_h(); ++g)
        if (hsrc(g) == htgt(f) && htgt(g) == hsrc(f) &&
            ch(f, g) == id_h_obj[htgt(f)] && ch(g, f) == id_h_obj[hsrc(f)])
            return g;
    return -1;
}

int DoubleGroupoid::inv_v_mor(int u) const {
    for (int w = 0; w < n_v(); ++w)
        if (vsrc(w) == vtgt(u) && vtgt(w) == vsrc(u) &&
            cv(u, w) == id_v_obj[vtgt(u)] && cv(w, u) == id_v_obj[vsrc(u)])
            return w;
    return -1;
}

int DoubleGroupoid::inv_h_sq(int a) const {
    for (int b = 0; b < n_sq(); ++b)
        if (sh(b) == th(a) && th(b) == sh(a) &&
            chs(a, b) == id_h_sq[th(a)] && chs(b, a) == id_h_sq[sh(a)])
            return b;
    return -1;
}

int DoubleGroupoid::inv_v_sq(int a) const {
    for (int b = 0; b < n_sq(); ++b)
        if (sv(b) == tv(a) && tv(b) == sv(a) &&
            cvs(a, b) == id_v_sq[tv(a)] && cvs(b, a) == id_v_sq[sv(a)])
            return b;
    return -1;
}

bool structurally_equal(const DoubleGroupoid& a, const DoubleGroupoid& b) {
    auto edges_eq = [](const std::vector<DoubleGroupoid::Edge>& x,
                       const std::vector<DoubleGroupoid::Edge>& y) {
        if (x.size() != y.size()) return false;
        for (size_t i = 0; i < x.size(); ++i)
            if (x[i].id != y[i].id || x[i].src != y[i].src || x[i].tgt != y[i].tgt) return false;
        return true;
    };
    if (a.objects != b.objects || !edges_eq(a.hmors, b.hmors) || !edges_eq(a.vmors, b.vmors))
        return false;
    if (a.squares.size() != b.squares.size()) return false;
    for (size_t i = 0; i < a.squares.size(); ++i) {
        const auto& s = a.squares[i];
        const auto& t = b.squares[i];
        if (s.id != t.id || s.sh != t.sh || s.th != t.th || s.sv != t.sv || s.tv != t.tv)
            return false;
    }
    return a.comp_h_mor == b.comp_h_mor && a.comp_v_mor == b.comp_v_mor &&
           a.comp_h_sq == b.comp_h_sq && a.comp_v_sq == b.comp_v_sq &&
           a.id_h_obj == b.id_h_obj && a.id_v_obj == b.id_v_obj &&
           a.id_h_sq == b.id_h_sq && a.id_v_sq == b.id_v_sq &&
           a.double_category_ok == b.double_category_ok;
}

std::string ValidationReport::to_text() const {
    std::ostringstream os;
    for (const auto& e : structural_errors) os << "structural error: " << e << "\n";
    for (const auto& v : violations) {
        os << "violation: " << v.law << " [";
        for (size_t i = 0; i < v.witness.size(); ++i) os << (i ? ", " : "") << v.witness[i];
        os << "]";
        if (!v.detail.empty()) os << " " << v.detail;
        os << "\n";
    }
    if (ok()) os << "ok (groupoid " << (is_groupoid ? "yes" : "no") << ")\n";
    return os.str();
}

ValidationReport validate_axioms(const DoubleGroupoid& g) {
    ValidationReport rep;
    rep.groupoid_required = !g.double_category_ok;

    // structural sanity first: unique ids, index bounds, table shapes
    auto struct_err = [&](const std::string& m) { rep.structural_errors.push_back(m); };
    {
        std::set<std::string> seen;
        for (const auto& o : g.objects)
            if (!seen.insert("o:" + o).second) struct_err("duplicate object id " + o);
        for (const auto& e : g.hmors)
            if (!seen.insert("h:" + e.id).second) struct_err("duplicate hmor id " + e.id);
        for (const auto& e : g.vmors)
            if (!seen.insert("v:" + e.id).second) struct_err("duplicate vmor id " + e.id);
        for (const auto& s : g.squares)
            if (!seen.insert("s:" + s.id).second) struct_err("duplicate square id " + s.id);
    }
    auto in = [](int x, int n) { return x >= 0 && x < n; };
    for (const auto& e : g.hmors)
        if (!in(e.src, g.n_obj()) || !in(e.tgt, g.n_obj())) struct_err("dangling object on hmor " + e.id);
    for (const auto& e : g.vmors)
        if (!in(e.src, g.n_obj()) || !in(e.tgt, g.n_obj())) struct_err("dangling object on vmor " + e.id);
    for (const auto& s : g.squares)
        if (!in(s.sh, g.n_v()) || !in(s.th, g.n_v()) || !in(s.sv, g.n_h()) || !in(s.tv, g.n_h()))
            struct_err("dangling edge on square " + s.id);
    auto table_ok = [&](const std::vector<std::vector<int>>& t, int rows, int cols, int range,
                        const std::string& name) {
        if (static_cast<int>(t.size()) != rows) {
            struct_err(name + ": wrong row count");
            return false;
        }
        for (const auto& row : t) {
            if (static_cast<int>(row.size()) != cols) {
                struct_err(name + ": wrong column count");
                return false;
            }
            for (int v : row)
                if (v != -1 && !in(v, range)) {
                    struct_err(name + ": dangling result id");
                    return false;
                }
        }
        return true;
    };
    bool shapes = true;
    shapes &= table_ok(g.comp_h_mor, g.n_h(), g.n_h(), g.n_h(), "comp_h_mor");
    shapes &= table_ok(g.comp_v_mor, g.n_v(), g.n_v(), g.n_v(), "comp_v_mor");
    shapes &= table_ok(g.comp_h_sq, g.n_sq(), g.n_sq(), g.n_sq(), "comp_h_sq");
    shapes &= table_ok(g.comp_v_sq, g.n_sq(), g.n_sq(), g.n_sq(), "comp_v_sq");
    auto map_ok = [&](const std::vector<int>& m, int dom, int range, const std::string& name) {
        if (static_cast<int>(m.size()) != dom) {
            struct_err(name + ": wrong size");
            return false;
        }
        for (int v : m)
            if (!in(v, range)) {
                struct_err(name + ": dangling id");
                return false;
            }
        return true;
    };
    shapes &= map_ok(g.id_h_obj, g.n_obj(), g.n_h(), "id_h_obj");
    shapes &= map_ok(g.id_v_obj, g.n_obj(), g.n_v(), "id_v_obj");
    shapes &= map_ok(g.id_h_sq, g.n_v(), g.n_sq(), "id_h_sq");
    shapes &= map_ok(g.id_v_sq, g.n_h(), g.n_sq(), "id_v_sq");
    if (!rep.structural_errors.empty() || !shapes) return rep;

    auto hid = [&](int f) { return g.hmors[f].id; };
    auto vid = [&](int u) { return g.vmors[u].id; };
    auto sid = [&](int a) { return g.squares[a].id; };
    auto oid = [&](int a) { return g.objects[a]; };

    CatView cat_h{"horizontal morphisms", g.n_h(), g.n_obj(),
                  [&](int f) { return g.hsrc(f); }, [&](int f) { return g.htgt(f); },
                  [&](int a) { return g.id_h_obj[a]; }, &g.comp_h_mor, hid, oid};
    CatView cat_v{"vertical morphisms", g.n_v(), g.n_obj(),
                  [&](int u) { return g.vsrc(u); }, [&](int u) { return g.vtgt(u); },
                  [&](int a) { return g.id_v_obj[a]; }, &g.comp_v_mor, vid, oid};
    CatView cat_hs{"horizontal category of squares", g.n_sq(), g.n_v(),
                   [&](int a) { return g.sh(a); }, [&](int a) { return g.th(a); },
                   [&](int u) { return g.id_h_sq[u]; }, &g.comp_h_sq, sid, vid};
    CatView cat_vs{"vertical category of squares", g.n_sq(), g.n_h(),
                   [&](int a) { return g.sv(a); }, [&](int a) { return g.tv(a); },
                   [&](int f) { return g.id_v_sq[f]; }, &g.comp_v_sq, sid, hid};
    check_category(cat_h, rep);
    check_category(cat_v, rep);
    check_category(cat_hs, rep);
    check_category(cat_vs, rep);

    bool gp = true;
    gp &= check_groupoid(cat_h, rep, rep.groupoid_required);
    gp &= check_groupoid(cat_v, rep, rep.groupoid_required);
    gp &= check_groupoid(cat_hs, rep, rep.groupoid_required);
    gp &= check_groupoid(cat_vs, rep, rep.groupoid_required);
    rep.is_groupoid = gp;

    auto viol = [&](const std::string& law, std::vector<std::string> w) {
        rep.violations.push_back({law, std::move(w), ""});
    };

    // Axiom 1 (i): the four corner identities, per square
    for (int a = 0; a < g.n_sq(); ++a) {
        if (g.hsrc(g.sv(a)) != g.vsrc(g.sh(a))) viol("axiom1(i): sh sv != sv sh", {sid(a)});
        if (g.htgt(g.tv(a)) != g.vtgt(g.th(a))) viol("axiom1(i): th tv != tv th", {sid(a)});
        if (g.hsrc(g.tv(a)) != g.vtgt(g.sh(a))) viol("axiom1(i): sh tv != tv sh", {sid(a)});
        if (g.htgt(g.sv(a)) != g.vsrc(g.th(a))) viol("axiom1(i): sv th != th sv", {sid(a)});
    }
    // Axiom 1 (ii): identity squares have identity side edges
    for (int f = 0; f < g.n_h(); ++f) {
        int a = g.id_v_sq[f];
        if (g.sv(a) != f || g.tv(a) != f) viol("vertical identity square boundary", {hid(f), sid(a)});
        if (g.sh(a) != g.id_v_obj[g.hsrc(f)]) viol("axiom1(ii): sh Iv != Iv sh", {hid(f), sid(a)});
        if (g.th(a) != g.id_v_obj[g.htgt(f)]) viol("axiom1(ii): th Iv != Iv th", {hid(f), sid(a)});
    }
    for (int u = 0; u < g.n_v(); ++u) {
        int a = g.id_h_sq[u];
        if (g.sh(a) != u || g.th(a) != u) viol("horizontal identity square boundary", {vid(u), sid(a)});
        if (g.sv(a) != g.id_h_obj[g.vsrc(u)]) viol("axiom1(ii): sv Ih != Ih sv", {vid(u), sid(a)});
        if (g.tv(a) != g.id_h_obj[g.vtgt(u)]) viol("axiom1(ii): tv Ih != Ih tv", {vid(u), sid(a)});
    }
    // Axiom 1 (iii)
    for (int a = 0; a < g.n_obj(); ++a)
        if (g.id_h_sq[g.id_v_obj[a]] != g.id_v_sq[g.id_h_obj[a]])
            viol("axiom1(iii): Ih Iv != Iv Ih", {oid(a)});

    // Axiom 2 (i)/(ii): boundaries of composites
    for (int a = 0; a < g.n_sq(); ++a)
        for (int b = 0; b < g.n_sq(); ++b) {
            int c = g.chs(a, b);
            if (c >= 0) {
                if (g.ch(g.sv(a), g.sv(b)) != g.sv(c)) viol("axiom2(i): sv of h-composite", {sid(a), sid(b)});
                if (g.ch(g.tv(a), g.tv(b)) != g.tv(c)) viol("axiom2(i): tv of h-composite", {sid(a), sid(b)});
            }
            c = g.cvs(a, b);
            if (c >= 0) {
                if (g.cv(g.sh(a), g.sh(b)) != g.sh(c)) viol("axiom2(ii): sh of v-composite", {sid(a), sid(b)});
                if (g.cv(g.th(a), g.th(b)) != g.th(c)) viol("axiom2(ii): th of v-composite", {sid(a), sid(b)});
            }
        }
    // Axiom 2 (iii): identities of composites
    for (int f = 0; f < g.n_h(); ++f)
        for (int f2 = 0; f2 < g.n_h(); ++f2) {
            int c = g.ch(f, f2);
            if (c < 0) continue;
            if (g.chs(g.id_v_sq[f], g.id_v_sq[f2]) != g.id_v_sq[c])
                viol("axiom2(iii): Iv of h-composite", {hid(f), hid(f2)});
        }
    for (int u = 0; u < g.n_v(); ++u)
        for (int u2 = 0; u2 < g.n_v(); ++u2) {
            int c = g.cv(u, u2);
            if (c < 0) continue;
            if (g.cvs(g.id_h_sq[u], g.id_h_sq[u2]) != g.id_h_sq[c])
                viol("axiom2(iii): Ih of v-composite", {vid(u), vid(u2)});
        }

    // Axiom 3: interchange on every composable 2x2 block
    std::vector<std::vector<int>> by_th(g.n_v()), by_tv(g.n_h());
    for (int a = 0; a < g.n_sq(); ++a) {
        by_th[g.th(a)].push_back(a);
        by_tv[g.tv(a)].push_back(a);
    }
    for (int a = 0; a < g.n_sq(); ++a)
        for (int b : by_th[g.sh(a)])
            for (int c : by_tv[g.sv(a)])
                for (int d : by_th[g.sh(c)]) {
                    if (g.tv(d) != g.sv(b)) continue;
                    int ab = g.chs(a, b), cd = g.chs(c, d);
                    int ac = g.cvs(a, c), bd = g.cvs(b, d);
                    if (ab < 0 || cd < 0 || ac < 0 || bd < 0) continue;  // reported by category checks
                    int lhs = g.cvs(ab, cd), rhs = g.chs(ac, bd);
                    if (lhs < 0 || rhs < 0 || lhs != rhs)
                        viol("axiom3: interchange", {sid(a), sid(b), sid(c), sid(d)});
                }

    return rep;
}

FillingReport check_filling(const DoubleGroupoid& g) {
    FillingReport rep;
    rep.ok = true;
    for (int f = 0; f < g.n_h(); ++f)
        for (int u = 0; u < g.n_v(); ++u) {
            if (g.hsrc(f) != g.vtgt(u)) continue;
            int found = -1;
            for (int a = 0; a < g.n_sq(); ++a)
                if (g.sh(a) == u && g.tv(a) == f) {
                    found = a;
                    break;
                }
            if (found >= 0)
                rep.witnesses.push_back({f, u, found});
            else {
                rep.ok = false;
                rep.counterexamples.push_back({f, u});
            }
        }
    return rep;
}

bool check_filling_variants(const DoubleGroupoid& g) {
    // (w, f) with sv w = th f: want alpha with th = w, sv = f
    for (int w = 0; w < g.n_v(); ++w)
        for (int f = 0; f < g.n_h(); ++f) {
            if (g.vsrc(w) != g.htgt(f)) continue;
            bool found = false;
            for (int a = 0; a < g.n_sq() && !found; ++a) found = g.th(a) == w && g.sv(a) == f;
            if (!found) return false;
        }
    // (f, u) sharing the bottom-right corner: want alpha with sv = f, sh = u
    for (int f = 0; f < g.n_h(); ++f)
        for (int u = 0; u < g.n_v(); ++u) {
            if (g.hsrc(f) != g.vsrc(u)) continue;
            bool found = false;
            for (int a = 0; a < g.n_sq() && !found; ++a) found = g.sv(a) == f && g.sh(a) == u;
            if (!found) return false;
        }
    // (g, w) sharing the top-left corner: want alpha with tv = g, th = w
    for (int f = 0; f < g.n_h(); ++f)
        for (int w = 0; w < g.n_v(); ++w) {
            if (g.htgt(f) != g.vtgt(w)) continue;
            bool found = false;
            for (int a = 0; a < g.n_sq() && !found; ++a) found = g.tv(a) == f && g.th(a) == w;
            if (!found) return false;
        }
    return true;
}

std::string FillingReport::to_text(const DoubleGroupoid& g) const {
    std::ostringstream os;
    if (ok)
        os << "filling condition holds (" << witnesses.size() << " pairs)\n";
    else
        for (const auto& c : counterexamples)
            os << "no filler for (g=" << g.hmors[c[0]].id << ", u=" << g.vmors[c[1]].id << ")\n";
    return os.str();
}

void DoubleFunctor::validate() const {
    if (!src || !tgt) throw std::runtime_error("double functor: missing source/target");
    const auto& a = *src;
    const auto& b = *tgt;
    auto chk = [](bool c, const std::string& m) {
        if (!c) throw std::runtime_error("double functor: " + m);
    };
    chk(static_cast<int>(on_obj.size()) == a.n_obj(), "object map size");
    chk(static_cast<int>(on_h.size()) == a.n_h(), "hmor map size");
    chk(static_cast<int>(on_v.size()) == a.n_v(), "vmor map size");
    chk(static_cast<int>(on_sq.size()) == a.n_sq(), "square map size");
    for (int f = 0; f < a.n_h(); ++f) {
        chk(b.hsrc(on_h[f]) == on_obj[a.hsrc(f)], "hmor source not preserved at " + a.hmors[f].id);
        chk(b.htgt(on_h[f]) == on_obj[a.htgt(f)], "hmor target not preserved at " + a.hmors[f].id);
    }
    for (int u = 0; u < a.n_v(); ++u) {
        chk(b.vsrc(on_v[u]) == on_obj[a.vsrc(u)], "vmor source not preserved at " + a.vmors[u].id);
        chk(b.vtgt(on_v[u]) == on_obj[a.vtgt(u)], "vmor target not preserved at " + a.vmors[u].id);
    }
    for (int s = 0; s < a.n_sq(); ++s) {
        chk(b.sh(on_sq[s]) == on_v[a.sh(s)], "square sh not preserved at " + a.squares[s].id);
        chk(b.th(on_sq[s]) == on_v[a.th(s)], "square th not preserved at " + a.squares[s].id);
        chk(b.sv(on_sq[s]) == on_h[a.sv(s)], "square sv not preserved at " + a.squares[s].id);
        chk(b.tv(on_sq[s]) == on_h[a.tv(s)], "square tv not preserved at " + a.squares[s].id);
    }
    for (int o = 0; o < a.n_obj(); ++o) {
        chk(on_h[a.id_h_obj[o]] == b.id_h_obj[on_obj[o]], "id_h_obj not preserved");
        chk(on_v[a.id_v_obj[o]] == b.id_v_obj[on_obj[o]], "id_v_obj not preserved");
    }
    for (int u = 0; u < a.n_v(); ++u) chk(on_sq[a.id_h_sq[u]] == b.id_h_sq[on_v[u]], "id_h_sq not preserved");
    for (int f = 0; f < a.n_h(); ++f) chk(on_sq[a.id_v_sq[f]] == b.id_v_sq[on_h[f]], "id_v_sq not preserved");
    for (int f = 0; f < a.n_h(); ++f)
        for (int g = 0; g < a.n_h(); ++g)
            if (a.ch(f, g) >= 0)
                chk(b.ch(on_h[f], on_h[g]) == on_h[a.ch(f, g)], "comp_h_mor not preserved");
    for (int u = 0; u < a.n_v(); ++u)
        for (int w = 0; w < a.n_v(); ++w)
            if (a.cv(u, w) >= 0)
                chk(b.cv(on_v[u], on_v[w]) == on_v[a.cv(u, w)], "comp_v_mor not preserved");
    for (int s = 0; s < a.n_sq(); ++s)
        for (int t = 0; t < a.n_sq(); ++t) {
            if (a.chs(s, t) >= 0)
                chk(b.chs(on_sq[s], on_sq[t]) == on_sq[a.chs(s, t)], "comp_h_sq not preserved");
            if (a.cvs(s, t) >= 0)
                chk(b.cvs(on_sq[s], on_sq[t]) == on_sq[a.cvs(s, t)], "comp_v_sq not preserved");
        }
}

DoubleFunctor identity_functor(const DoubleGroupoid& g) {
    DoubleFunctor f;
    f.src = &g;
    f.tgt = &g;
    auto iota = [](int n) {
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i) v[i] = i;
        return v;
    };
    f.on_obj = iota(g.n_obj());
    f.on_h = iota(g.n_h());
    f.on_v = iota(g.n_v());
    f.on_sq = iota(g.n_sq());
    return f;
}

DoubleFunctor compose(const DoubleFunctor& g, const DoubleFunctor& f) {
    if (f.tgt != g.src) throw std::runtime_error("double functor composition: endpoint mismatch");
    DoubleFunctor r;
    r.src = f.src;
    r.tgt = g.tgt;
    auto comp = [](const std::vector<int>& outer, const std::vector<int>& inner) {
        std::vector<int> v(inner.size());
        for (size_t i = 0; i < inner.size(); ++i) v[i] = outer[inner[i]];
        return v;
    };
    r.on_obj = comp(g.on_obj, f.on_obj);
    r.on_h = comp(g.on_h, f.on_h);
    r.on_v = comp(g.on_v, f.on_v);
    r.on_sq = comp(g.on_sq, f.on_sq);
    return r;
}

}  // namespace dgv
