#include "dgv/reflection.hpp"

#include "dgv/dec_wbar.hpp"
#include "dgv/dg_homotopy.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace dgv {

namespace {

// every cell of K(p,q) whose listed faces match
struct FaceSpec {
    std::vector<std::pair<int, int>> h;  // (index, cell)
    std::vector<std::pair<int, int>> v;
};

std::vector<int> cells_with_faces(BisimplicialSetView& K, int p, int q, const FaceSpec& spec) {
    std::vector<int> out;
    int sz = K.size(p, q);
    for (int x = 0; x < sz; ++x) {
        bool ok = true;
        for (auto [i, c] : spec.h)
            if (K.face_h(p, q, i, x) != c) {
                ok = false;
                break;
            }
        if (ok)
            for (auto [j, c] : spec.v)
                if (K.face_v(p, q, j, x) != c) {
                    ok = false;
                    break;
                }
        if (ok) out.push_back(x);
    }
    return out;
}

// vertical homotopies from a to b in K(0,*): cells of K(0,2) with
// dv0 = sv0 dv0 a, dv1 = a, dv2 = b
std::vector<int> vertical_homotopies(BisimplicialSetView& K, int a, int b) {
    int s0d0 = K.deg_v(0, 0, 0, K.face_v(0, 1, 0, a));
    return cells_with_faces(K, 0, 2, {{}, {{0, s0d0}, {1, a}, {2, b}}});
}

std::vector<int> horizontal_homotopies(BisimplicialSetView& K, int a, int b) {
    int s0d0 = K.deg_h(0, 0, 0, K.face_h(1, 0, 0, a));
    return cells_with_faces(K, 2, 0, {{{0, s0d0}, {1, a}, {2, b}}, {}});
}

// all values of [[x]] o_h [[y]] over the Lemma 6.1 search space
std::set<int> hcomp_values(BisimplicialSetView& K, const std::vector<int>& bicls, int x, int y) {
    std::set<int> out;
    int a = K.face_h(1, 1, 0, x), b = K.face_h(1, 1, 1, y);
    int xdv0s0 = K.deg_v(1, 0, 0, K.face_v(1, 1, 0, x));
    for (int alpha : vertical_homotopies(K, a, b)) {
        // beta solves the Lambda^{1,2}[1,2] problem (alpha, -; x dv0 sv0, x, -)
        for (int beta : cells_with_faces(K, 1, 2, {{{0, alpha}}, {{0, xdv0s0}, {1, x}}})) {
            int xp = K.face_v(1, 2, 2, beta);
            for (int gamma : cells_with_faces(K, 2, 1, {{{0, y}, {2, xp}}, {}}))
                out.insert(bicls[K.face_h(2, 1, 1, gamma)]);
        }
    }
    return out;
}

std::set<int> vcomp_values(BisimplicialSetView& K, const std::vector<int>& bicls, int x, int y) {
    std::set<int> out;
    int a = K.face_v(1, 1, 0, x), b = K.face_v(1, 1, 1, y);
    int xdh0s0 = K.deg_h(0, 1, 0, K.face_h(1, 1, 0, x));
    for (int alpha : horizontal_homotopies(K, a, b)) {
        for (int beta : cells_with_faces(K, 2, 1, {{{0, xdh0s0}, {1, x}}, {{0, alpha}}})) {
            int xp = K.face_h(2, 1, 2, beta);
            for (int gamma : cells_with_faces(K, 1, 2, {{}, {{0, y}, {2, xp}}}))
                out.insert(bicls[K.face_v(1, 2, 1, gamma)]);
        }
    }
    return out;
}

int restrict_h_range(BisimplicialSetView& K, int p, int q, int x, int lo, int hi) {
    for (int m = p; m > hi; --m) x = K.face_h(m, q, m, x);
    for (int t = 0; t < lo; ++t) x = K.face_h(hi - t, q, 0, x);
    return x;
}

int restrict_v_range(BisimplicialSetView& K, int p, int q, int x, int lo, int hi) {
    for (int m = q; m > hi; --m) x = K.face_v(p, m, m, x);
    for (int t = 0; t < lo; ++t) x = K.face_v(p, hi - t, 0, x);
    return x;
}

}  // namespace

std::string Certification::describe() const {
    std::ostringstream os;
    os << "extension " << (extension.ok() ? "ok" : ("FAIL: " + extension.failure))
       << "; pi2(K_{*,0}) " << (pi2_col0_vanish ? "vanishes" : "NONZERO") << "; pi2(K_{0,*}) "
       << (pi2_row0_vanish ? "vanishes" : "NONZERO");
    return os.str();
}

Certification certify(std::shared_ptr<BisimplicialSetView> K, int P, int Q) {
    Certification cert;
    cert.K = K;
    cert.P = P;
    cert.Q = Q;
    cert.extension = extension_check(*K, P, Q);
    if (cert.extension.ok()) {
        ColumnComplex col0(*K, 0, P + 1);
        cert.pi2_col0_vanish = true;
        for (int a = 0; a < col0.size(0); ++a)
            if (pi_n(col0, a, 2).table.size() != 1) cert.pi2_col0_vanish = false;
        RowComplex row0(*K, 0, Q + 1);
        cert.pi2_row0_vanish = true;
        for (int a = 0; a < row0.size(0); ++a)
            if (pi_n(row0, a, 2).table.size() != 1) cert.pi2_row0_vanish = false;
    }
    return cert;
}

PPResult pp(const Certification& input) {
    if (!input.valid())
        throw std::runtime_error("pp refuses uncertified input: " + input.describe());
    BisimplicialSetView& K = *input.K;
    PPResult r;

    ColumnComplex col0(K, 0, 3);
    RowComplex row0(K, 0, 3);
    FundamentalGroupoid fgh = fundamental_groupoid(col0);
    FundamentalGroupoid fgv = fundamental_groupoid(row0);
    CellClasses sq_cls = cell_classes(K, 1, 1);

    int n_obj = K.size(0, 0);
    for (int i = 0; i < n_obj; ++i) {
        r.g.objects.push_back(K.key(0, 0, i));
        r.obj_of_cell.push_back(i);
    }
    r.hmor_of_cell = fgh.class_of_edge;
    r.vmor_of_cell = fgv.class_of_edge;
    r.sq_of_cell = sq_cls.bi;

    int nh = fgh.cat.n_mor(), nv = fgv.cat.n_mor(), ns = sq_cls.n_bi;
    for (int c = 0; c < nh; ++c)
        r.g.hmors.push_back({"f" + std::to_string(c), fgh.cat.src(c), fgh.cat.tgt(c)});
    for (int c = 0; c < nv; ++c)
        r.g.vmors.push_back({"u" + std::to_string(c), fgv.cat.src(c), fgv.cat.tgt(c)});
    r.g.comp_h_mor = fgh.cat.comp;
    r.g.comp_v_mor = fgv.cat.comp;
    r.g.id_h_obj = fgh.cat.id_of_obj;
    r.g.id_v_obj = fgv.cat.id_of_obj;

    // square boundaries via the Lemma 2.6 class maps, representative checked
    std::vector<int> rep(ns, -1);
    std::vector<std::vector<int>> members(ns);
    int n11 = K.size(1, 1);
    for (int x = 0; x < n11; ++x) {
        int c = sq_cls.bi[x];
        if (rep[c] < 0) rep[c] = x;
        members[c].push_back(x);
    }
    auto boundary = [&](int c, auto face, const std::vector<int>& edge_cls, const char* what) {
        int val = -1;
        for (int x : members[c]) {
            int e = edge_cls[face(x)];
            if (val < 0)
                val = e;
            else if (val != e)
                throw std::runtime_error(std::string("pp: ") + what +
                                         " depends on the representative");
        }
        return val;
    };
    for (int c = 0; c < ns; ++c) {
        int sh = boundary(c, [&](int x) { return K.face_h(1, 1, 0, x); }, fgv.class_of_edge, "sh");
        int th = boundary(c, [&](int x) { return K.face_h(1, 1, 1, x); }, fgv.class_of_edge, "th");
        int sv = boundary(c, [&](int x) { return K.face_v(1, 1, 0, x); }, fgh.class_of_edge, "sv");
        int tv = boundary(c, [&](int x) { return K.face_v(1, 1, 1, x); }, fgh.class_of_edge, "tv");
        r.g.squares.push_back({"x" + std::to_string(c), sh, th, sv, tv});
    }

    // identity squares I^h[u] = [[u sh0]], I^v[f] = [[f sv0]]
    r.g.id_h_sq.assign(nv, -1);
    for (int e = 0; e < K.size(0, 1); ++e) {
        int c = fgv.class_of_edge[e];
        int val = sq_cls.bi[K.deg_h(0, 1, 0, e)];
        if (r.g.id_h_sq[c] < 0)
            r.g.id_h_sq[c] = val;
        else if (r.g.id_h_sq[c] != val)
            throw std::runtime_error("pp: I^h depends on the representative");
    }
    r.g.id_v_sq.assign(nh, -1);
    for (int e = 0; e < K.size(1, 0); ++e) {
        int c = fgh.class_of_edge[e];
        int val = sq_cls.bi[K.deg_v(1, 0, 0, e)];
        if (r.g.id_v_sq[c] < 0)
            r.g.id_v_sq[c] = val;
        else if (r.g.id_v_sq[c] != val)
            throw std::runtime_error("pp: I^v depends on the representative");
    }

    // compositions per (comp)/(compv); independent of every admissible choice
    r.g.comp_h_sq.assign(ns, std::vector<int>(ns, -1));
    r.g.comp_v_sq.assign(ns, std::vector<int>(ns, -1));
    for (int a = 0; a < ns; ++a)
        for (int b = 0; b < ns; ++b) {
            if (r.g.squares[a].sh == r.g.squares[b].th) {
                std::set<int> vals;
                for (int x : members[a])
                    for (int y : members[b]) {
                        auto v = hcomp_values(K, sq_cls.bi, x, y);
                        vals.insert(v.begin(), v.end());
                    }
                if (vals.empty())
                    throw std::runtime_error("pp: horizontal composition search failed");
                if (vals.size() > 1)
                    throw std::runtime_error("pp: horizontal composition depends on choices");
                r.g.comp_h_sq[a][b] = *vals.begin();
            }
            if (r.g.squares[a].sv == r.g.squares[b].tv) {
                std::set<int> vals;
                for (int x : members[a])
                    for (int y : members[b]) {
                        auto v = vcomp_values(K, sq_cls.bi, x, y);
                        vals.insert(v.begin(), v.end());
                    }
                if (vals.empty())
                    throw std::runtime_error("pp: vertical composition search failed");
                if (vals.size() > 1)
                    throw std::runtime_error("pp: vertical composition depends on choices");
                r.g.comp_v_sq[a][b] = *vals.begin();
            }
        }

    ValidationReport val = validate_axioms(r.g);
    if (!val.ok())
        throw std::runtime_error("pp output violates the double groupoid axioms: " +
                                 (val.violations.empty() ? val.structural_errors[0]
                                                         : val.violations[0].law));
    if (!check_filling(r.g).ok) throw std::runtime_error("pp output fails the filling condition");
    return r;
}

int epsilon_cell(BisimplicialSetView& K, const PPResult& r, NNView& nnpp, int p, int q, int cell) {
    NNView::CellData d;
    if (p == 0 && q == 0) {
        d.obj = r.obj_of_cell[cell];
    } else if (q == 0) {
        for (int j = 1; j <= p; ++j)
            d.hstring.push_back(r.hmor_of_cell[restrict_h_range(K, p, 0, cell, j - 1, j)]);
    } else if (p == 0) {
        for (int j = 1; j <= q; ++j)
            d.vstring.push_back(r.vmor_of_cell[restrict_v_range(K, 0, q, cell, j - 1, j)]);
    } else {
        for (int row = 1; row <= q; ++row) {
            std::vector<int> grow;
            for (int colm = 1; colm <= p; ++colm) {
                int sub = restrict_h_range(K, p, q, cell, colm - 1, colm);
                sub = restrict_v_range(K, 1, q, sub, row - 1, row);
                grow.push_back(r.sq_of_cell[sub]);
            }
            d.grid.push_back(grow);
        }
    }
    int ix = nnpp.index_of(p, q, nnpp.unparse(p, q, d));
    if (ix < 0) throw std::runtime_error("epsilon: image cell missing from NN PP K");
    return ix;
}

void check_epsilon_bisimplicial(BisimplicialSetView& K, const PPResult& r, NNView& nnpp, int P,
                                int Q) {
    for (int p = 0; p <= P; ++p)
        for (int q = 0; q <= Q; ++q)
            for (int cell = 0; cell < K.size(p, q); ++cell) {
                int img = epsilon_cell(K, r, nnpp, p, q, cell);
                for (int i = 0; i <= p && p >= 1; ++i)
                    if (epsilon_cell(K, r, nnpp, p - 1, q, K.face_h(p, q, i, cell)) !=
                        nnpp.face_h(p, q, i, img))
                        throw std::runtime_error("epsilon does not commute with dh");
                for (int j = 0; j <= q && q >= 1; ++j)
                    if (epsilon_cell(K, r, nnpp, p, q - 1, K.face_v(p, q, j, cell)) !=
                        nnpp.face_v(p, q, j, img))
                        throw std::runtime_error("epsilon does not commute with dv");
                if (p + 1 <= P)
                    for (int i = 0; i <= p; ++i)
                        if (epsilon_cell(K, r, nnpp, p + 1, q, K.deg_h(p, q, i, cell)) !=
                            nnpp.deg_h(p, q, i, img))
                            throw std::runtime_error("epsilon does not commute with sh");
                if (q + 1 <= Q)
                    for (int j = 0; j <= q; ++j)
                        if (epsilon_cell(K, r, nnpp, p, q + 1, K.deg_v(p, q, j, cell)) !=
                            nnpp.deg_v(p, q, j, img))
                            throw std::runtime_error("epsilon does not commute with sv");
            }
}

DoubleFunctor canonical_iso(const DoubleGroupoid& g, BisimplicialSetView& nng, const PPResult& r) {
    auto& view = dynamic_cast<NNView&>(nng);
    DoubleFunctor f;
    f.src = &g;
    f.tgt = &r.g;
    for (int o = 0; o < g.n_obj(); ++o) {
        NNView::CellData d;
        d.obj = o;
        f.on_obj.push_back(r.obj_of_cell[view.index_of(0, 0, view.unparse(0, 0, d))]);
    }
    for (int h = 0; h < g.n_h(); ++h) {
        NNView::CellData d;
        d.hstring = {h};
        f.on_h.push_back(r.hmor_of_cell[view.index_of(1, 0, view.unparse(1, 0, d))]);
    }
    for (int v = 0; v < g.n_v(); ++v) {
        NNView::CellData d;
        d.vstring = {v};
        f.on_v.push_back(r.vmor_of_cell[view.index_of(0, 1, view.unparse(0, 1, d))]);
    }
    for (int s = 0; s < g.n_sq(); ++s) {
        NNView::CellData d;
        d.grid = {{s}};
        f.on_sq.push_back(r.sq_of_cell[view.index_of(1, 1, view.unparse(1, 1, d))]);
    }
    f.validate();
    auto bijective = [](const std::vector<int>& m, int n) {
        std::set<int> im(m.begin(), m.end());
        return static_cast<int>(im.size()) == static_cast<int>(m.size()) &&
               static_cast<int>(m.size()) == n;
    };
    if (!bijective(f.on_obj, r.g.n_obj()) || !bijective(f.on_h, r.g.n_h()) ||
        !bijective(f.on_v, r.g.n_v()) || !bijective(f.on_sq, r.g.n_sq()))
        throw std::runtime_error("canonical map G -> PP NN G is not bijective");
    return f;
}

RoundTripReport theorem_63_suite(const DoubleGroupoid& g) {
    RoundTripReport rep;
    std::ostringstream detail;
    auto K = nn(g, 4, 4);
    Certification cert = certify(K, 3, 3);
    if (!cert.valid())
        throw std::runtime_error("theorem_63_suite: NN G fails certification: " + cert.describe());
    PPResult r = pp(cert);

    DoubleFunctor iso;
    try {
        iso = canonical_iso(g, *K, r);
        rep.iso_ok = true;
    } catch (const std::exception& e) {
        detail << "canonical iso: " << e.what() << "; ";
        rep.detail = detail.str();
        return rep;
    }

    auto nnpp = nn(r.g, 4, 4);
    rep.epsilon_identity = true;
    for (int p = 0; p <= 2 && rep.epsilon_identity; ++p)
        for (int q = 0; q <= 2 && rep.epsilon_identity; ++q)
            for (int cell = 0; cell < K->size(p, q); ++cell) {
                int via_eps = epsilon_cell(*K, r, *nnpp, p, q, cell);
                int via_iso = nn_map_cell(*K, *nnpp, iso, p, q, cell);
                if (via_eps != via_iso) {
                    rep.epsilon_identity = false;
                    detail << "eps(NN G) differs from the relabeling at (" << p << "," << q
                           << ") cell " << K->key(p, q, cell) << "; ";
                    break;
                }
            }
    check_epsilon_bisimplicial(*K, r, *nnpp, 2, 2);

    // PP(eps) = id, through the canonical identification PP NN (PP K) = PP K
    Certification cert2 = certify(nnpp, 3, 3);
    if (!cert2.valid()) throw std::runtime_error("theorem_63_suite: NN PP K fails certification");
    PPResult r2 = pp(cert2);
    DoubleFunctor iso2 = canonical_iso(r.g, *nnpp, r2);
    rep.pp_epsilon_identity = true;
    auto check_sort = [&](int count, auto member_cells, const std::vector<int>& eps_cls,
                          const std::vector<int>& iso_map, int p, int q) {
        for (int c = 0; c < count && rep.pp_epsilon_identity; ++c)
            for (int cell : member_cells(c)) {
                int img = epsilon_cell(*K, r, *nnpp, p, q, cell);
                if (eps_cls[img] != iso_map[c]) {
                    rep.pp_epsilon_identity = false;
                    detail << "PP(eps) moves a class at (" << p << "," << q << "); ";
                    break;
                }
            }
    };
    {
        std::vector<std::vector<int>> by_h(r.g.n_h()), by_v(r.g.n_v()), by_s(r.g.n_sq());
        for (int c = 0; c < K->size(1, 0); ++c) by_h[r.hmor_of_cell[c]].push_back(c);
        for (int c = 0; c < K->size(0, 1); ++c) by_v[r.vmor_of_cell[c]].push_back(c);
        for (int c = 0; c < K->size(1, 1); ++c) by_s[r.sq_of_cell[c]].push_back(c);
        check_sort(r.g.n_obj(), [&](int c) { return std::vector<int>{c}; }, r2.obj_of_cell,
                   iso2.on_obj, 0, 0);
        check_sort(r.g.n_h(), [&](int c) { return by_h[c]; }, r2.hmor_of_cell, iso2.on_h, 1, 0);
        check_sort(r.g.n_v(), [&](int c) { return by_v[c]; }, r2.vmor_of_cell, iso2.on_v, 0, 1);
        check_sort(r.g.n_sq(), [&](int c) { return by_s[c]; }, r2.sq_of_cell, iso2.on_sq, 1, 1);
    }
    rep.detail = detail.str();
    return rep;
}

TwoTypeReport verify_2type(const Certification& input) {
    TwoTypeReport rep;
    std::ostringstream detail;
    rep.certified = input.valid();
    if (!rep.certified) {
        rep.detail = input.describe();
        return rep;
    }
    PPResult r = pp(input);
    WbarView wb(input.K, 4);
    KanReport kr = kan_check(wb, 3);
    rep.wbar_kan = kr.kan;
    if (!kr.kan) detail << "wbar not Kan: " << kr.failure_text << "; ";

    // pi0: identical vertex sets, compare the partitions
    BisimplicialSetView& K = *input.K;
    auto dg0 = pi0(r.g);
    std::vector<int> wb0 = path_components(wb);
    rep.pi0_ok = true;
    std::vector<int> dgc(r.g.n_obj());
    for (size_t c = 0; c < dg0.size(); ++c)
        for (int o : dg0[c]) dgc[o] = static_cast<int>(c);
    for (int a = 0; a < r.g.n_obj(); ++a)
        for (int b = 0; b < r.g.n_obj(); ++b) {
            int wa = wb.index_of(0, K.key(0, 0, a)), wbx = wb.index_of(0, K.key(0, 0, b));
            if ((dgc[a] == dgc[b]) != (wb0[wa] == wb0[wbx])) rep.pi0_ok = false;
        }
    detail << "pi0 classes " << dg0.size() << "; ";

    rep.pi1_ok = rep.pi2_ok = true;
    for (int a = 0; a < r.g.n_obj(); ++a) {
        int wa = wb.index_of(0, K.key(0, 0, a));
        GroupTable p1 = pi1(r.g, a).table;
        GroupTable w1 = pi_n(wb, wa, 1).table;
        if (!isomorphic(p1, w1)) {
            rep.pi1_ok = false;
            detail << "pi1 mismatch at " << r.g.objects[a] << "; ";
        }
        GroupTable p2 = pi2(r.g, a).table;
        GroupTable w2 = pi_n(wb, wa, 2).table;
        if (!isomorphic(p2, w2)) {
            rep.pi2_ok = false;
            detail << "pi2 mismatch at " << r.g.objects[a] << "; ";
        }
        detail << r.g.objects[a] << ": |pi1|=" << p1.size() << " |pi2|=" << p2.size() << "; ";
    }
    rep.detail = detail.str();
    return rep;
}

}  // namespace dgv
