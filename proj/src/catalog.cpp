#include "dgv/catalog.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace dgv {

namespace {

std::vector<std::string> default_objects(int n, const std::string& stem) {
    std::vector<std::string> v;
    for (int i = 0; i < n; ++i) v.push_back(stem + std::to_string(i));
    return v;
}

void alloc_tables(DoubleGroupoid& g) {
    g.comp_h_mor.assign(g.n_h(), std::vector<int>(g.n_h(), -1));
    g.comp_v_mor.assign(g.n_v(), std::vector<int>(g.n_v(), -1));
    g.comp_h_sq.assign(g.n_sq(), std::vector<int>(g.n_sq(), -1));
    g.comp_v_sq.assign(g.n_sq(), std::vector<int>(g.n_sq(), -1));
}

void fill_mor_comps_from_boundaries(DoubleGroupoid& g,
                                    const std::function<int(int, int)>& hcomp,
                                    const std::function<int(int, int)>& vcomp) {
    for (int f = 0; f < g.n_h(); ++f)
        for (int f2 = 0; f2 < g.n_h(); ++f2)
            if (g.hsrc(f) == g.htgt(f2)) g.comp_h_mor[f][f2] = hcomp(f, f2);
    for (int u = 0; u < g.n_v(); ++u)
        for (int u2 = 0; u2 < g.n_v(); ++u2)
            if (g.vsrc(u) == g.vtgt(u2)) g.comp_v_mor[u][u2] = vcomp(u, u2);
}

}  // namespace

DoubleGroupoid build_disc(const std::vector<std::string>& objects) {
    DoubleGroupoid g;
    g.objects = objects;
    int n = g.n_obj();
    for (int a = 0; a < n; ++a) {
        g.hmors.push_back({"h_id_" + objects[a], a, a});
        g.vmors.push_back({"v_id_" + objects[a], a, a});
        g.squares.push_back({"I_" + objects[a], a, a, a, a});
        g.id_h_obj.push_back(a);
        g.id_v_obj.push_back(a);
        g.id_h_sq.push_back(a);
        g.id_v_sq.push_back(a);
    }
    alloc_tables(g);
    for (int a = 0; a < n; ++a) {
        g.comp_h_mor[a][a] = a;
        g.comp_v_mor[a][a] = a;
        g.comp_h_sq[a][a] = a;
        g.comp_v_sq[a][a] = a;
    }
    return g;
}

DoubleGroupoid build_ab(const GroupTable& a) {
    GroupTable grp = a;
    grp.validate();
    if (!grp.is_abelian()) throw std::runtime_error("build_ab: group is not abelian");
    DoubleGroupoid g;
    g.objects = {"*"};
    g.hmors.push_back({"h_id", 0, 0});
    g.vmors.push_back({"v_id", 0, 0});
    for (int i = 0; i < grp.size(); ++i) g.squares.push_back({"sq_" + grp.elements[i], 0, 0, 0, 0});
    g.id_h_obj = {0};
    g.id_v_obj = {0};
    g.id_h_sq = {grp.identity};
    g.id_v_sq = {grp.identity};
    alloc_tables(g);
    g.comp_h_mor[0][0] = 0;
    g.comp_v_mor[0][0] = 0;
    for (int i = 0; i < grp.size(); ++i)
        for (int j = 0; j < grp.size(); ++j) {
            g.comp_h_sq[i][j] = grp.mul(i, j);
            g.comp_v_sq[i][j] = grp.mul(i, j);
        }
    return g;
}

DoubleGroupoid build_deloop(const GroupTable& grp0) {
    GroupTable grp = grp0;
    grp.validate();
    DoubleGroupoid g;
    g.objects = {"*"};
    for (int i = 0; i < grp.size(); ++i) g.hmors.push_back({"h_" + grp.elements[i], 0, 0});
    g.vmors.push_back({"v_id", 0, 0});
    for (int i = 0; i < grp.size(); ++i) g.squares.push_back({"iv_" + grp.elements[i], 0, 0, i, i});
    g.id_h_obj = {grp.identity};
    g.id_v_obj = {0};
    g.id_h_sq = {grp.identity};  // I^h(v_id) = I* = iv of the group identity
    g.id_v_sq.resize(grp.size());
    for (int i = 0; i < grp.size(); ++i) g.id_v_sq[i] = i;
    alloc_tables(g);
    for (int i = 0; i < grp.size(); ++i)
        for (int j = 0; j < grp.size(); ++j) g.comp_h_mor[i][j] = grp.mul(i, j);
    g.comp_v_mor[0][0] = 0;
    for (int i = 0; i < grp.size(); ++i)
        for (int j = 0; j < grp.size(); ++j) g.comp_h_sq[i][j] = grp.mul(i, j);
    for (int i = 0; i < grp.size(); ++i) g.comp_v_sq[i][i] = i;  // sv = tv forces equality
    return g;
}

DoubleGroupoid build_pair(const std::vector<std::string>& objects) {
    DoubleGroupoid g;
    g.objects = objects;
    int n = g.n_obj();
    auto m = [&](int t, int s) { return t * n + s; };  // morphism s -> t
    for (int t = 0; t < n; ++t)
        for (int s = 0; s < n; ++s) {
            g.hmors.push_back({"h_" + objects[t] + "_" + objects[s], s, t});
            g.vmors.push_back({"v_" + objects[t] + "_" + objects[s], s, t});
        }
    // square indexed by corners (br, tr, bl, tl)
    auto sq = [&](int br, int tr, int bl, int tl) { return ((br * n + tr) * n + bl) * n + tl; };
    for (int br = 0; br < n; ++br)
        for (int tr = 0; tr < n; ++tr)
            for (int bl = 0; bl < n; ++bl)
                for (int tl = 0; tl < n; ++tl)
                    g.squares.push_back({"sq_" + objects[br] + objects[tr] + objects[bl] + objects[tl],
                                         m(tr, br), m(tl, bl), m(bl, br), m(tl, tr)});
    for (int a = 0; a < n; ++a) {
        g.id_h_obj.push_back(m(a, a));
        g.id_v_obj.push_back(m(a, a));
    }
    g.id_h_sq.resize(g.n_v());
    g.id_v_sq.resize(g.n_h());
    for (int t = 0; t < n; ++t)
        for (int s = 0; s < n; ++s) {
            g.id_h_sq[m(t, s)] = sq(s, t, s, t);  // right and left edge both s -> t
            g.id_v_sq[m(t, s)] = sq(s, s, t, t);  // bottom and top both s -> t
        }
    alloc_tables(g);
    fill_mor_comps_from_boundaries(
        g, [&](int f, int f2) { return m(g.htgt(f), g.hsrc(f2)); },
        [&](int u, int u2) { return m(g.vtgt(u), g.vsrc(u2)); });
    for (int a = 0; a < g.n_sq(); ++a)
        for (int b = 0; b < g.n_sq(); ++b) {
            // decode corners
            int tl_a = a % n, bl_a = (a / n) % n, tr_a = (a / (n * n)) % n;
            int bl_b = (b / n) % n, tr_b = (b / (n * n)) % n, br_b = b / (n * n * n);
            if (g.sh(a) == g.th(b)) g.comp_h_sq[a][b] = sq(br_b, tr_b, bl_a, tl_a);
            if (g.sv(a) == g.tv(b)) g.comp_v_sq[a][b] = sq(br_b, tr_a, bl_b, tl_a);
        }
    return g;
}

DoubleGroupoid build_tensor(const FiniteCategory& a, const FiniteCategory& b) {
    a.validate();
    b.validate();
    DoubleGroupoid g;
    int oa = a.n_obj(), ob = b.n_obj(), ma = a.n_mor(), mb = b.n_mor();
    auto obj = [&](int x, int y) { return x * ob + y; };
    auto hm = [&](int f, int y) { return f * ob + y; };
    auto vm = [&](int x, int m) { return x * mb + m; };
    auto sq = [&](int f, int m) { return f * mb + m; };
    for (int x = 0; x < oa; ++x)
        for (int y = 0; y < ob; ++y) g.objects.push_back("(" + a.objects[x] + "," + b.objects[y] + ")");
    for (int f = 0; f < ma; ++f)
        for (int y = 0; y < ob; ++y)
            g.hmors.push_back({"h(" + a.mors[f].name + "." + b.objects[y] + ")",
                               obj(a.src(f), y), obj(a.tgt(f), y)});
    for (int x = 0; x < oa; ++x)
        for (int m = 0; m < mb; ++m)
            g.vmors.push_back({"v(" + a.objects[x] + "." + b.mors[m].name + ")",
                               obj(x, b.src(m)), obj(x, b.tgt(m))});
    for (int f = 0; f < ma; ++f)
        for (int m = 0; m < mb; ++m)
            g.squares.push_back({"sq(" + a.mors[f].name + "." + b.mors[m].name + ")",
                                 vm(a.src(f), m), vm(a.tgt(f), m), hm(f, b.src(m)), hm(f, b.tgt(m))});
    g.id_h_obj.resize(g.n_obj());
    g.id_v_obj.resize(g.n_obj());
    for (int x = 0; x < oa; ++x)
        for (int y = 0; y < ob; ++y) {
            g.id_h_obj[obj(x, y)] = hm(a.id_of_obj[x], y);
            g.id_v_obj[obj(x, y)] = vm(x, b.id_of_obj[y]);
        }
    g.id_h_sq.resize(g.n_v());
    for (int x = 0; x < oa; ++x)
        for (int m = 0; m < mb; ++m) g.id_h_sq[vm(x, m)] = sq(a.id_of_obj[x], m);
    g.id_v_sq.resize(g.n_h());
    for (int f = 0; f < ma; ++f)
        for (int y = 0; y < ob; ++y) g.id_v_sq[hm(f, y)] = sq(f, b.id_of_obj[y]);
    alloc_tables(g);
    for (int f = 0; f < ma; ++f)
        for (int y = 0; y < ob; ++y)
            for (int f2 = 0; f2 < ma; ++f2)
                for (int y2 = 0; y2 < ob; ++y2)
                    if (y == y2 && a.src(f) == a.tgt(f2))
                        g.comp_h_mor[hm(f, y)][hm(f2, y2)] = hm(a.compose(f, f2), y);
    for (int x = 0; x < oa; ++x)
        for (int m = 0; m < mb; ++m)
            for (int x2 = 0; x2 < oa; ++x2)
                for (int m2 = 0; m2 < mb; ++m2)
                    if (x == x2 && b.src(m) == b.tgt(m2))
                        g.comp_v_mor[vm(x, m)][vm(x2, m2)] = vm(x, b.compose(m, m2));
    for (int f = 0; f < ma; ++f)
        for (int m = 0; m < mb; ++m)
            for (int f2 = 0; f2 < ma; ++f2)
                for (int m2 = 0; m2 < mb; ++m2) {
                    if (m == m2 && a.src(f) == a.tgt(f2))
                        g.comp_h_sq[sq(f, m)][sq(f2, m2)] = sq(a.compose(f, f2), m);
                    if (f == f2 && b.src(m) == b.tgt(m2))
                        g.comp_v_sq[sq(f, m)][sq(f2, m2)] = sq(f, b.compose(m, m2));
                }
    return g;
}

DoubleGroupoid build_nofill() {
    DoubleGroupoid g;
    g.objects = {"a", "b"};
    int n = 2;
    auto m = [&](int t, int s) { return t * n + s; };
    for (int t = 0; t < n; ++t)
        for (int s = 0; s < n; ++s) {
            g.hmors.push_back({"h_" + g.objects[t] + "_" + g.objects[s], s, t});
            g.vmors.push_back({"v_" + g.objects[t] + "_" + g.objects[s], s, t});
        }
    // squares: I^v f for every hmor f, plus I^h u for the non-identity vmors
    for (int f = 0; f < g.n_h(); ++f) g.squares.push_back({"iv_" + g.hmors[f].id, -1, -1, f, f});
    std::vector<int> ih_of_v(g.n_v(), -1);
    for (int u = 0; u < g.n_v(); ++u) {
        if (g.vsrc(u) == g.vtgt(u)) continue;
        ih_of_v[u] = g.n_sq();
        g.squares.push_back({"ih_" + g.vmors[u].id, u, u, -1, -1});
    }
    // identity-flavoured edges of the above
    for (int f = 0; f < g.n_h(); ++f) {
        g.squares[f].sh = m(g.hsrc(f), g.hsrc(f));
        g.squares[f].th = m(g.htgt(f), g.htgt(f));
    }
    for (int u = 0; u < g.n_v(); ++u) {
        if (ih_of_v[u] < 0) continue;
        auto& s = g.squares[ih_of_v[u]];
        s.sv = m(g.vsrc(u), g.vsrc(u));
        s.tv = m(g.vtgt(u), g.vtgt(u));
    }
    for (int a = 0; a < n; ++a) {
        g.id_h_obj.push_back(m(a, a));
        g.id_v_obj.push_back(m(a, a));
    }
    // I^h of an identity vmor is I^v of the same identity hmor
    g.id_h_sq.resize(g.n_v());
    for (int u = 0; u < g.n_v(); ++u)
        g.id_h_sq[u] = (ih_of_v[u] >= 0) ? ih_of_v[u] : m(g.vsrc(u), g.vsrc(u));
    g.id_v_sq.resize(g.n_h());
    for (int f = 0; f < g.n_h(); ++f) g.id_v_sq[f] = f;
    alloc_tables(g);
    fill_mor_comps_from_boundaries(
        g, [&](int f, int f2) { return m(g.htgt(f), g.hsrc(f2)); },
        [&](int u, int u2) { return m(g.vtgt(u), g.vsrc(u2)); });
    // iv squares occupy indices 0..n_h-1 (iv_f at index f); ih squares follow
    for (int s1 = 0; s1 < g.n_sq(); ++s1)
        for (int s2 = 0; s2 < g.n_sq(); ++s2) {
            bool s1_ih = s1 >= g.n_h(), s2_ih = s2 >= g.n_h();
            if (g.sh(s1) == g.th(s2)) {
                // iv squares only meet iv squares here (identity side edges)
                if (!s1_ih && !s2_ih)
                    g.comp_h_sq[s1][s2] = g.ch(g.sv(s1), g.sv(s2));
                else
                    g.comp_h_sq[s1][s2] = s1;  // ih squares with the same vmor
            }
            if (g.sv(s1) == g.tv(s2)) {
                if (s1_ih && s2_ih)
                    g.comp_v_sq[s1][s2] = g.id_h_sq[g.cv(g.sh(s1), g.sh(s2))];
                else if (!s1_ih && !s2_ih)
                    g.comp_v_sq[s1][s2] = s1;  // identity at the shared hmor
                else
                    g.comp_v_sq[s1][s2] = s1_ih ? s1 : s2;
            }
        }
    return g;
}

DoubleGroupoid build_unitcell() {
    DoubleGroupoid g = build_tensor(chain_category(1), chain_category(1));
    g.double_category_ok = true;
    return g;
}

DoubleGroupoid build_catalog(const std::string& expr) {
    std::istringstream is(expr);
    std::string word;
    std::vector<std::string> words;
    while (is >> word) words.push_back(word);
    if (words.empty()) throw std::runtime_error("empty builder expression");
    const std::string& name = words[0];
    auto want = [&](size_t n) {
        if (words.size() != n)
            throw std::runtime_error("builder '" + name + "': wrong number of parameters");
    };
    if (name == "disc") {
        want(2);
        return build_disc(default_objects(std::stoi(words[1]), "a"));
    }
    if (name == "ab") {
        want(2);
        return build_ab(parse_group(words[1]));
    }
    if (name == "deloop") {
        want(2);
        return build_deloop(parse_group(words[1]));
    }
    if (name == "pair") {
        want(2);
        return build_pair(default_objects(std::stoi(words[1]), "p"));
    }
    if (name == "tensor") {
        want(3);
        return build_tensor(group_as_category(parse_group(words[1])),
                            group_as_category(parse_group(words[2])));
    }
    if (name == "nofill") {
        want(1);
        return build_nofill();
    }
    if (name == "unitcell") {
        want(1);
        return build_unitcell();
    }
    throw std::runtime_error("unknown builder: " + name);
}

std::vector<CatalogEntry> standard_catalog() {
    std::vector<CatalogEntry> v;
    v.push_back({"Disc({a0,a1})", build_catalog("disc 2")});
    v.push_back({"Ab(Z/2)", build_catalog("ab Z2")});
    v.push_back({"Deloop(Z/3)", build_catalog("deloop Z3")});
    v.push_back({"Pair({p0,p1})", build_catalog("pair 2")});
    v.push_back({"Tensor(Z/2,Z/3)", build_catalog("tensor Z2 Z3")});
    v.push_back({"NoFill", build_catalog("nofill")});
    v.push_back({"UnitCell", build_catalog("unitcell")});
    return v;
}

std::vector<CatalogEntry> filling_catalog() {
    std::vector<CatalogEntry> v;
    for (auto& e : standard_catalog())
        if (e.name != "NoFill" && e.name != "UnitCell") v.push_back(std::move(e));
    return v;
}

}  // namespace dgv
