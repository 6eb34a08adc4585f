#include "dgv/dg_homotopy.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dgv {

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) {
        for (int i = 0; i < n; ++i) p[i] = i;
    }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

std::vector<std::vector<int>> classes_of(UnionFind& uf, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> class_ix(n, -1);
    for (int i = 0; i < n; ++i) {
        int r = uf.find(i);
        if (class_ix[r] < 0) {
            class_ix[r] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[class_ix[r]].push_back(i);
    }
    return out;
}

}  // namespace

void require_filling(const DoubleGroupoid& g) {
    ValidationReport rep = validate_axioms(g);
    if (!rep.structural_errors.empty())
        throw std::runtime_error("structure invalid: " + rep.structural_errors.front());
    if (!rep.violations.empty())
        throw std::runtime_error("structure violates axioms: " + rep.violations.front().law);
    if (!rep.is_groupoid)
        throw std::runtime_error("homotopy groups require a double groupoid, not a double category");
    if (!check_filling(g).ok)
        throw std::runtime_error("homotopy groups require the filling condition");
}

std::vector<std::vector<int>> pi0(const DoubleGroupoid& g) {
    require_filling(g);
    int n = g.n_obj();
    auto rel = [&](int a, int b) {  // pair (g, u): hsrc g = vtgt u, htgt g = b, vsrc u = a
        for (int f = 0; f < g.n_h(); ++f) {
            if (g.htgt(f) != b) continue;
            for (int u = 0; u < g.n_v(); ++u)
                if (g.vsrc(u) == a && g.hsrc(f) == g.vtgt(u)) return true;
        }
        return false;
    };
    auto rel_sq = [&](int a, int b) {
        for (int s = 0; s < g.n_sq(); ++s)
            if (g.htgt(g.tv(s)) == b && g.vsrc(g.sh(s)) == a) return true;
        return false;
    };
    auto rel_wf = [&](int a, int b) {  // pair (w, f): vsrc w = htgt f, vtgt w = b, hsrc f = a
        for (int w = 0; w < g.n_v(); ++w) {
            if (g.vtgt(w) != b) continue;
            for (int f = 0; f < g.n_h(); ++f)
                if (g.hsrc(f) == a && g.vsrc(w) == g.htgt(f)) return true;
        }
        return false;
    };
    UnionFind uf(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            bool r = rel(a, b);
            if (r != rel_sq(a, b) || r != rel_wf(a, b))
                throw std::runtime_error("pi0: the three connectedness characterizations disagree");
            if (r) uf.unite(a, b);
        }
    return classes_of(uf, n);
}

int pi0_class_of(const std::vector<std::vector<int>>& classes, int obj) {
    for (size_t c = 0; c < classes.size(); ++c)
        for (int x : classes[c])
            if (x == obj) return static_cast<int>(c);
    return -1;
}

int Pi1Result::class_of(const DoubleGroupoid&, int hm, int vm) const {
    for (size_t c = 0; c < members.size(); ++c)
        for (int e : members[c])
            if (all_elems[e].h == hm && all_elems[e].v == vm) return static_cast<int>(c);
    return -1;
}

Pi1Result pi1(const DoubleGroupoid& g, int base) {
    require_filling(g);
    Pi1Result res;
    // the loop set G(a)
    for (int h = 0; h < g.n_h(); ++h) {
        if (g.htgt(h) != base) continue;
        for (int v = 0; v < g.n_v(); ++v)
            if (g.vsrc(v) == base && g.hsrc(h) == g.vtgt(v)) res.all_elems.push_back({h, v});
    }
    int n = static_cast<int>(res.all_elems.size());

    // boundary signature: the set of (th, sv) over squares with sh = v, tv = h
    std::vector<std::set<std::pair<int, int>>> sig(n);
    for (int i = 0; i < n; ++i)
        for (int s = 0; s < g.n_sq(); ++s)
            if (g.sh(s) == res.all_elems[i].v && g.tv(s) == res.all_elems[i].h)
                sig[i].insert({g.th(s), g.sv(s)});
    auto related = [&](int i, int j) {
        for (const auto& p : sig[i])
            if (sig[j].count(p)) return true;
        return false;
    };
    // ~ must already be an equivalence; checked, not assumed
    for (int i = 0; i < n; ++i)
        if (!related(i, i)) throw std::runtime_error("pi1: relation not reflexive");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (related(i, j) != related(j, i)) throw std::runtime_error("pi1: relation not symmetric");
            if (!related(i, j)) continue;
            for (int k = 0; k < n; ++k)
                if (related(j, k) && !related(i, k))
                    throw std::runtime_error("pi1: relation not transitive");
        }
    UnionFind uf(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (related(i, j)) uf.unite(i, j);
    res.members = classes_of(uf, n);
    int nc = static_cast<int>(res.members.size());
    for (auto& cls : res.members) std::sort(cls.begin(), cls.end());
    // canonical least representative; elements were enumerated in lex (h, v) order
    std::vector<int> rep_of;
    for (const auto& cls : res.members) rep_of.push_back(cls.front());
    std::vector<int> cls_of(n);
    for (int c = 0; c < nc; ++c)
        for (int e : res.members[c]) cls_of[e] = c;

    // product of elements, for one choice of gamma; -2 when no gamma exists
    auto product_with = [&](const Pi1Element& e1, const Pi1Element& e2, int gamma) {
        int gg = g.tv(gamma), uu = g.sh(gamma);
        int ph = g.ch(e1.h, gg);
        int pv = g.cv(uu, e2.v);
        if (ph < 0 || pv < 0) return -2;
        for (int i = 0; i < n; ++i)
            if (res.all_elems[i].h == ph && res.all_elems[i].v == pv) return cls_of[i];
        return -2;
    };
    std::vector<std::vector<int>> op(nc, std::vector<int>(nc, -1));
    for (int c1 = 0; c1 < nc; ++c1)
        for (int c2 = 0; c2 < nc; ++c2) {
            // exhaust every representative pair and every admissible gamma
            for (int e1 : res.members[c1])
                for (int e2 : res.members[c2]) {
                    const auto& a1 = res.all_elems[e1];
                    const auto& a2 = res.all_elems[e2];
                    bool found_gamma = false;
                    for (int s = 0; s < g.n_sq(); ++s) {
                        if (g.sv(s) != a2.h || g.th(s) != a1.v) continue;
                        found_gamma = true;
                        int r = product_with(a1, a2, s);
                        if (r < 0) throw std::runtime_error("pi1: product left the loop set");
                        if (op[c1][c2] < 0)
                            op[c1][c2] = r;
                        else if (op[c1][c2] != r)
                            throw std::runtime_error("pi1: product depends on choices");
                    }
                    if (!found_gamma)
                        throw std::runtime_error("pi1: no connecting square despite filling");
                }
        }

    res.table.op = op;
    for (int c = 0; c < nc; ++c) {
        const auto& e = res.all_elems[rep_of[c]];
        res.table.elements.push_back("[" + g.hmors[e.h].id + "," + g.vmors[e.v].id + "]");
    }
    int ih = g.id_h_obj[base], iv = g.id_v_obj[base];
    res.table.identity = res.class_of(g, ih, iv);
    if (res.table.identity < 0) throw std::runtime_error("pi1: identity loop missing");
    res.table.validate();

    // the paper's inverse recipe must land in the table inverse class
    for (int c = 0; c < nc; ++c) {
        const auto& e = res.all_elems[rep_of[c]];
        int ginv = g.inv_h_mor(e.h), uinv = g.inv_v_mor(e.v);
        bool found = false;
        for (int s = 0; s < g.n_sq(); ++s) {
            if (g.th(s) != uinv || g.sv(s) != ginv) continue;
            found = true;
            int ic = res.class_of(g, g.tv(s), g.sh(s));
            if (ic != res.table.inv[c]) throw std::runtime_error("pi1: inverse recipe disagrees");
        }
        if (!found) throw std::runtime_error("pi1: no inverse square despite filling");
    }
    for (int c = 0; c < nc; ++c) res.reps.push_back(res.all_elems[rep_of[c]]);
    return res;
}

int Pi2Result::class_of(int square) const {
    for (size_t i = 0; i < squares.size(); ++i)
        if (squares[i] == square) return static_cast<int>(i);
    return -1;
}

Pi2Result pi2(const DoubleGroupoid& g, int base) {
    require_filling(g);
    Pi2Result res;
    int iv = g.id_v_obj[base], ih = g.id_h_obj[base];
    for (int s = 0; s < g.n_sq(); ++s)
        if (g.sh(s) == iv && g.th(s) == iv && g.sv(s) == ih && g.tv(s) == ih)
            res.squares.push_back(s);
    int n = static_cast<int>(res.squares.size());
    res.table.op.assign(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i) {
        res.table.elements.push_back(g.squares[res.squares[i]].id);
        for (int j = 0; j < n; ++j) {
            int h = g.chs(res.squares[i], res.squares[j]);
            int v = g.cvs(res.squares[i], res.squares[j]);
            if (h < 0 || v < 0 || h != v)
                throw std::runtime_error("pi2: horizontal and vertical products disagree");
            int c = res.class_of(h);
            if (c < 0) throw std::runtime_error("pi2: product left the identity-boundary set");
            res.table.op[i][j] = c;
        }
    }
    res.table.identity = res.class_of(g.id_h_sq[iv]);
    if (res.table.identity < 0) throw std::runtime_error("pi2: Ia missing");
    res.table.validate();
    if (!res.table.is_abelian()) throw std::runtime_error("pi2: not abelian");
    return res;
}

std::string PiReport::to_json(const DoubleGroupoid& g) const {
    std::ostringstream os;
    os << "{\"pi0\":[";
    for (size_t c = 0; c < pi0_classes.size(); ++c) {
        os << (c ? "," : "") << "[";
        for (size_t i = 0; i < pi0_classes[c].size(); ++i)
            os << (i ? "," : "") << "\"" << g.objects[pi0_classes[c][i]] << "\"";
        os << "]";
    }
    os << "],\"pi1\":{";
    bool first = true;
    for (const auto& [a, t] : pi1_at) {
        os << (first ? "" : ",") << "\"" << g.objects[a] << "\":" << t.to_json();
        first = false;
    }
    os << "},\"pi2\":{";
    first = true;
    for (const auto& [a, t] : pi2_at) {
        os << (first ? "" : ",") << "\"" << g.objects[a] << "\":" << t.to_json();
        first = false;
    }
    os << "},\"pi_higher\":\"trivial\"}";
    return os.str();
}

PiReport pi_report(const DoubleGroupoid& g) {
    PiReport rep;
    rep.pi0_classes = pi0(g);
    for (int a = 0; a < g.n_obj(); ++a) {
        rep.pi1_at.emplace(a, pi1(g, a).table);
        rep.pi2_at.emplace(a, pi2(g, a).table);
    }
    return rep;
}

WeakEqReport weak_equivalence(const DoubleFunctor& f) {
    f.validate();
    const auto& a = *f.src;
    const auto& b = *f.tgt;
    WeakEqReport rep;
    auto p0a = pi0(a), p0b = pi0(b);
    // induced map on components
    std::vector<int> img(p0a.size(), -1);
    for (size_t c = 0; c < p0a.size(); ++c) img[c] = pi0_class_of(p0b, f.on_obj[p0a[c].front()]);
    for (size_t c = 0; c < p0a.size(); ++c)
        for (int x : p0a[c])
            if (pi0_class_of(p0b, f.on_obj[x]) != img[c])
                throw std::runtime_error("weak_equivalence: pi0 map ill-defined");
    std::set<int> image(img.begin(), img.end());
    rep.pi0_bijective = image.size() == p0a.size() && image.size() == p0b.size();

    rep.pi1_iso = true;
    rep.pi2_iso = true;
    std::ostringstream detail;
    for (int obj = 0; obj < a.n_obj(); ++obj) {
        int fobj = f.on_obj[obj];
        auto p1a = pi1(a, obj);
        auto p1b = pi1(b, fobj);
        int na = p1a.table.size(), nb = p1b.table.size();
        std::vector<int> m(na, -1);
        bool hom = true;
        for (int c = 0; c < na; ++c) {
            const auto& e = p1a.reps[c];
            m[c] = p1b.class_of(b, f.on_h[e.h], f.on_v[e.v]);
            if (m[c] < 0) hom = false;
        }
        // well-defined on every member, homomorphism, bijective
        if (hom)
            for (int c = 0; c < na && hom; ++c)
                for (int e : p1a.members[c]) {
                    const auto& el = p1a.all_elems[e];
                    if (p1b.class_of(b, f.on_h[el.h], f.on_v[el.v]) != m[c]) hom = false;
                }
        if (hom)
            for (int c1 = 0; c1 < na && hom; ++c1)
                for (int c2 = 0; c2 < na; ++c2)
                    if (m[p1a.table.op[c1][c2]] != p1b.table.op[m[c1]][m[c2]]) {
                        hom = false;
                        break;
                    }
        std::set<int> im(m.begin(), m.end());
        bool bij = hom && static_cast<int>(im.size()) == na && na == nb && !im.count(-1);
        if (!bij) {
            rep.pi1_iso = false;
            detail << "pi1 not iso at " << a.objects[obj] << "; ";
        }

        auto p2a = pi2(a, obj);
        auto p2b = pi2(b, fobj);
        int n2a = p2a.table.size(), n2b = p2b.table.size();
        std::vector<int> m2(n2a, -1);
        bool hom2 = true;
        for (int c = 0; c < n2a; ++c) {
            m2[c] = p2b.class_of(f.on_sq[p2a.squares[c]]);
            if (m2[c] < 0) hom2 = false;
        }
        if (hom2)
            for (int c1 = 0; c1 < n2a && hom2; ++c1)
                for (int c2 = 0; c2 < n2a; ++c2)
                    if (m2[p2a.table.op[c1][c2]] != p2b.table.op[m2[c1]][m2[c2]]) {
                        hom2 = false;
                        break;
                    }
        std::set<int> im2(m2.begin(), m2.end());
        bool bij2 = hom2 && static_cast<int>(im2.size()) == n2a && n2a == n2b && !im2.count(-1);
        if (!bij2) {
            rep.pi2_iso = false;
            detail << "pi2 not iso at " << a.objects[obj] << "; ";
        }
    }
    if (!rep.pi0_bijective) detail << "pi0 not bijective; ";
    rep.detail = detail.str();
    return rep;
}

}  // namespace dgv
