#include "dgv/bisimplicial.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dgv {

BisimplicialSetView::Cell& BisimplicialSetView::cell(int p, int q) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    Cell& c = cells_[{p, q}];
    if (!c.built) {
        auto [mp, mq] = max_bidegree();
        if (p < 0 || q < 0 || p > mp || q > mq)
            throw std::runtime_error("bidegree out of truncation range");
        c.keys = enumerate_cell(p, q);
        std::sort(c.keys.begin(), c.keys.end());
        c.keys.erase(std::unique(c.keys.begin(), c.keys.end()), c.keys.end());
        for (size_t i = 0; i < c.keys.size(); ++i) c.ix[c.keys[i]] = static_cast<int>(i);
        c.fh.assign(p + 1, {});
        c.fv.assign(q + 1, {});
        c.dh.assign(p + 1, {});
        c.dv.assign(q + 1, {});
        c.built = true;
    }
    return c;
}

int BisimplicialSetView::size(int p, int q) { return static_cast<int>(cell(p, q).keys.size()); }

const std::string& BisimplicialSetView::key(int p, int q, int x) { return cell(p, q).keys.at(x); }

int BisimplicialSetView::index_of(int p, int q, const std::string& k) {
    auto& c = cell(p, q);
    auto it = c.ix.find(k);
    return it == c.ix.end() ? -1 : it->second;
}

namespace {
[[noreturn]] void op_escape(const char* op, int i, const std::string& k) {
    throw std::runtime_error(std::string(op) + "_" + std::to_string(i) +
                             " left the enumerated cell at " + k);
}
}  // namespace

int BisimplicialSetView::face_h(int p, int q, int i, int x) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    Cell& c = cell(p, q);
    auto& tab = c.fh.at(i);
    if (tab.empty()) {
        Cell& prev = cell(p - 1, q);
        tab.assign(c.keys.size(), -1);
        for (size_t t = 0; t < c.keys.size(); ++t) {
            auto it = prev.ix.find(face_h_key(p, q, i, c.keys[t]));
            if (it == prev.ix.end()) op_escape("dh", i, c.keys[t]);
            tab[t] = it->second;
        }
    }
    return tab.at(x);
}

int BisimplicialSetView::face_v(int p, int q, int j, int x) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    Cell& c = cell(p, q);
    auto& tab = c.fv.at(j);
    if (tab.empty()) {
        Cell& prev = cell(p, q - 1);
        tab.assign(c.keys.size(), -1);
        for (size_t t = 0; t < c.keys.size(); ++t) {
            auto it = prev.ix.find(face_v_key(p, q, j, c.keys[t]));
            if (it == prev.ix.end()) op_escape("dv", j, c.keys[t]);
            tab[t] = it->second;
        }
    }
    return tab.at(x);
}

int BisimplicialSetView::deg_h(int p, int q, int i, int x) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    Cell& c = cell(p, q);
    auto& tab = c.dh.at(i);
    if (tab.empty()) {
        Cell& next = cell(p + 1, q);
        tab.assign(c.keys.size(), -1);
        for (size_t t = 0; t < c.keys.size(); ++t) {
            auto it = next.ix.find(deg_h_key(p, q, i, c.keys[t]));
            if (it == next.ix.end()) op_escape("sh", i, c.keys[t]);
            tab[t] = it->second;
        }
    }
    return tab.at(x);
}

int BisimplicialSetView::deg_v(int p, int q, int j, int x) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    Cell& c = cell(p, q);
    auto& tab = c.dv.at(j);
    if (tab.empty()) {
        Cell& next = cell(p, q + 1);
        tab.assign(c.keys.size(), -1);
        for (size_t t = 0; t < c.keys.size(); ++t) {
            auto it = next.ix.find(deg_v_key(p, q, j, c.keys[t]));
            if (it == next.ix.end()) op_escape("sv", j, c.keys[t]);
            tab[t] = it->second;
        }
    }
    return tab.at(x);
}

// --------------------------------------------------------------------------
// TensorView

std::pair<std::string, std::string> TensorView::split(const std::string& k) const {
    size_t pos = k.find("(x)");
    if (pos == std::string::npos) throw std::runtime_error("tensor: bad key " + k);
    return {k.substr(0, pos), k.substr(pos + 3)};
}

std::vector<std::string> TensorView::enumerate_cell(int p, int q) {
    std::vector<std::string> out;
    for (int a = 0; a < x_->size(p); ++a)
        for (int b = 0; b < y_->size(q); ++b) out.push_back(x_->key(p, a) + "(x)" + y_->key(q, b));
    return out;
}

std::string TensorView::face_h_key(int p, int q, int i, const std::string& k) {
    (void)q;
    auto [a, b] = split(k);
    return x_->key(p - 1, x_->face(p, i, x_->index_of(p, a))) + "(x)" + b;
}

std::string TensorView::face_v_key(int p, int q, int j, const std::string& k) {
    auto [a, b] = split(k);
    (void)p;
    return a + "(x)" + y_->key(q - 1, y_->face(q, j, y_->index_of(q, b)));
}

std::string TensorView::deg_h_key(int p, int q, int i, const std::string& k) {
    auto [a, b] = split(k);
    (void)q;
    return x_->key(p + 1, x_->degeneracy(p, i, x_->index_of(p, a))) + "(x)" + b;
}

std::string TensorView::deg_v_key(int p, int q, int j, const std::string& k) {
    auto [a, b] = split(k);
    (void)p;
    return a + "(x)" + y_->key(q + 1, y_->degeneracy(q, j, y_->index_of(q, b)));
}

// --------------------------------------------------------------------------
// TabulatedBisView

std::vector<std::string> TabulatedBisView::enumerate_cell(int p, int q) {
    if (p >= static_cast<int>(data_.levels.size())) return {};
    if (q >= static_cast<int>(data_.levels[p].size())) return {};
    return data_.levels[p][q];
}

std::string TabulatedBisView::lookup(
    const std::map<std::string, std::map<std::string, std::string>>& m, int p, int q, int i,
    const std::string& k, const char* what) {
    std::string slot = std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(i);
    auto it = m.find(slot);
    if (it == m.end()) throw std::runtime_error(std::string("tabulated bis: missing ") + what + " " + slot);
    auto jt = it->second.find(k);
    if (jt == it->second.end())
        throw std::runtime_error(std::string("tabulated bis: ") + what + " " + slot + " lacks " + k);
    return jt->second;
}

std::string TabulatedBisView::face_h_key(int p, int q, int i, const std::string& k) {
    return lookup(data_.dh, p, q, i, k, "dh");
}
std::string TabulatedBisView::face_v_key(int p, int q, int j, const std::string& k) {
    return lookup(data_.dv, p, q, j, k, "dv");
}
std::string TabulatedBisView::deg_h_key(int p, int q, int i, const std::string& k) {
    return lookup(data_.sh, p, q, i, k, "sh");
}
std::string TabulatedBisView::deg_v_key(int p, int q, int j, const std::string& k) {
    return lookup(data_.sv, p, q, j, k, "sv");
}

// --------------------------------------------------------------------------
// Row/column complexes

std::vector<std::string> ColumnComplex::enumerate_level(int n) {
    std::vector<std::string> out;
    for (int x = 0; x < k_.size(n, q_); ++x) out.push_back(k_.key(n, q_, x));
    return out;
}
std::string ColumnComplex::face_key(int n, int i, const std::string& k) {
    int x = k_.index_of(n, q_, k);
    return k_.key(n - 1, q_, k_.face_h(n, q_, i, x));
}
std::string ColumnComplex::degeneracy_key(int n, int i, const std::string& k) {
    int x = k_.index_of(n, q_, k);
    return k_.key(n + 1, q_, k_.deg_h(n, q_, i, x));
}

std::vector<std::string> RowComplex::enumerate_level(int n) {
    std::vector<std::string> out;
    for (int x = 0; x < k_.size(p_, n); ++x) out.push_back(k_.key(p_, n, x));
    return out;
}
std::string RowComplex::face_key(int n, int j, const std::string& k) {
    int x = k_.index_of(p_, n, k);
    return k_.key(p_, n - 1, k_.face_v(p_, n, j, x));
}
std::string RowComplex::degeneracy_key(int n, int j, const std::string& k) {
    int x = k_.index_of(p_, n, k);
    return k_.key(p_, n + 1, k_.deg_v(p_, n, j, x));
}

// --------------------------------------------------------------------------
// Bihorns

void for_each_bihorn(BisimplicialSetView& K, int p, int q, int k, int l,
                     const std::function<void(const BiHorn&)>& fn) {
    if (p < 1 || q < 1) throw std::runtime_error("bihorns need p, q >= 1");
    // bucket the h-facet level by dh faces and the v-facet level by dh faces
    std::map<std::pair<int, int>, std::vector<int>> hbucket, vbucket;
    int hsz = K.size(p - 1, q), vsz = K.size(p, q - 1);
    if (p >= 2)
        for (int x = 0; x < hsz; ++x)
            for (int i = 0; i <= p - 1; ++i) hbucket[{i, K.face_h(p - 1, q, i, x)}].push_back(x);
    for (int x = 0; x < vsz; ++x)
        for (int i = 0; i <= p; ++i) vbucket[{i, K.face_h(p, q - 1, i, x)}].push_back(x);

    std::vector<int> hidx, vidx;
    for (int i = 0; i <= p; ++i)
        if (i != k) hidx.push_back(i);
    for (int j = 0; j <= q; ++j)
        if (j != l) vidx.push_back(j);

    BiHorn horn{p, q, k, l, std::vector<int>(p + 1, -1), std::vector<int>(q + 1, -1)};

    std::function<void(size_t)> rec_v = [&](size_t m) {
        if (m == vidx.size()) {
            fn(horn);
            return;
        }
        int j = vidx[m];
        // family-3 constraint against the first h-facet fixes most candidates
        const std::vector<int>* cands = nullptr;
        std::vector<int> all;
        if (!hidx.empty()) {
            int i0 = hidx[0];
            auto it = vbucket.find({i0, K.face_v(p - 1, q, j, horn.hfacets[i0])});
            if (it == vbucket.end()) return;
            cands = &it->second;
        } else {
            all.resize(vsz);
            for (int x = 0; x < vsz; ++x) all[x] = x;
            cands = &all;
        }
        for (int x : *cands) {
            bool ok = true;
            for (size_t t = 1; t < hidx.size() && ok; ++t) {
                int i = hidx[t];
                ok = K.face_h(p, q - 1, i, x) == K.face_v(p - 1, q, j, horn.hfacets[i]);
            }
            for (size_t t = 0; t < m && ok; ++t) {
                int i = vidx[t];
                if (q - 1 >= 1)
                    ok = K.face_v(p, q - 1, i, x) == K.face_v(p, q - 1, j - 1, horn.vfacets[i]);
            }
            if (!ok) continue;
            horn.vfacets[j] = x;
            rec_v(m + 1);
            horn.vfacets[j] = -1;
        }
    };

    std::function<void(size_t)> rec_h = [&](size_t m) {
        if (m == hidx.size()) {
            rec_v(0);
            return;
        }
        int j = hidx[m];
        const std::vector<int>* cands = nullptr;
        std::vector<int> all;
        if (m == 0) {
            all.resize(hsz);
            for (int x = 0; x < hsz; ++x) all[x] = x;
            cands = &all;
        } else {
            int i0 = hidx[0];
            auto it = hbucket.find({i0, K.face_h(p - 1, q, j - 1, horn.hfacets[i0])});
            if (it == hbucket.end()) return;
            cands = &it->second;
        }
        for (int x : *cands) {
            bool ok = true;
            for (size_t t = 1; t < m && ok; ++t) {
                int i = hidx[t];
                ok = K.face_h(p - 1, q, i, x) == K.face_h(p - 1, q, j - 1, horn.hfacets[i]);
            }
            if (!ok) continue;
            horn.hfacets[j] = x;
            rec_h(m + 1);
            horn.hfacets[j] = -1;
        }
    };
    rec_h(0);
}

std::vector<int> bihorn_fillers(BisimplicialSetView& K, const BiHorn& horn) {
    std::vector<int> out;
    int sz = K.size(horn.p, horn.q);
    for (int z = 0; z < sz; ++z) {
        bool ok = true;
        for (int i = 0; i <= horn.p && ok; ++i) {
            if (i == horn.k) continue;
            ok = K.face_h(horn.p, horn.q, i, z) == horn.hfacets[i];
        }
        for (int j = 0; j <= horn.q && ok; ++j) {
            if (j == horn.l) continue;
            ok = K.face_v(horn.p, horn.q, j, z) == horn.vfacets[j];
        }
        if (ok) out.push_back(z);
    }
    return out;
}

ExtensionReport extension_check(BisimplicialSetView& K, int P, int Q) {
    ExtensionReport rep;
    std::ostringstream fail;
    for (int p = 0; p <= P && rep.rows_kan; ++p) {
        RowComplex row(K, p, Q + 1);
        KanReport kr = kan_check(row, Q);
        if (!kr.kan) {
            rep.rows_kan = false;
            fail << "row K_{" << p << ",*}: " << kr.failure_text;
        }
    }
    for (int q = 0; q <= Q && rep.cols_kan; ++q) {
        ColumnComplex col(K, q, P + 1);
        KanReport kr = kan_check(col, P);
        if (!kr.kan) {
            rep.cols_kan = false;
            fail << "column K_{*," << q << "}: " << kr.failure_text;
        }
    }
    for (int p = 1; p <= P && rep.horns_fill; ++p)
        for (int q = 1; q <= Q && rep.horns_fill; ++q) {
            // filler signatures for this bidegree
            for (int k = 0; k <= p && rep.horns_fill; ++k)
                for (int l = 0; l <= q && rep.horns_fill; ++l) {
                    std::map<std::vector<int>, long> filler_count;
                    int sz = K.size(p, q);
                    for (int z = 0; z < sz; ++z) {
                        std::vector<int> sig;
                        for (int i = 0; i <= p; ++i)
                            if (i != k) sig.push_back(K.face_h(p, q, i, z));
                        for (int j = 0; j <= q; ++j)
                            if (j != l) sig.push_back(K.face_v(p, q, j, z));
                        ++filler_count[sig];
                    }
                    long mn = -1, mx = 0;
                    for_each_bihorn(K, p, q, k, l, [&](const BiHorn& h) {
                        if (!rep.horns_fill) return;
                        ++rep.bihorns;
                        std::vector<int> sig;
                        for (int i = 0; i <= p; ++i)
                            if (i != k) sig.push_back(h.hfacets[i]);
                        for (int j = 0; j <= q; ++j)
                            if (j != l) sig.push_back(h.vfacets[j]);
                        auto it = filler_count.find(sig);
                        long c = it == filler_count.end() ? 0 : it->second;
                        if (c == 0) {
                            rep.horns_fill = false;
                            fail << "unfilled bihorn Lambda^{" << k << "," << l << "}[" << p << ","
                                 << q << "] with h-facets (";
                            for (int i = 0; i <= p; ++i) {
                                if (i) fail << ", ";
                                fail << (i == k ? std::string("-") : K.key(p - 1, q, h.hfacets[i]));
                            }
                            fail << ") v-facets (";
                            for (int j = 0; j <= q; ++j) {
                                if (j) fail << ", ";
                                fail << (j == l ? std::string("-") : K.key(p, q - 1, h.vfacets[j]));
                            }
                            fail << ")";
                        }
                        mn = mn < 0 ? c : std::min(mn, c);
                        mx = std::max(mx, c);
                    });
                    if (p == 1 && q == 1 && mn >= 0) rep.multiplicity_11[{k, l}] = {mn, mx};
                }
        }
    rep.failure = fail.str();
    return rep;
}

bool dir_homotopic(BisimplicialSetView& K, int p, int q, int x, int xp, Direction dir) {
    if (dir == Direction::horizontal) {
        ColumnComplex col(K, q, p + 2);
        return homotopic(col, p, x, xp);
    }
    RowComplex row(K, p, q + 2);
    return homotopic(row, q, x, xp);
}

CellClasses cell_classes(BisimplicialSetView& K, int p, int q) {
    CellClasses out;
    {
        ColumnComplex col(K, q, p + 2);
        out.h = homotopy_classes(col, p);
    }
    {
        RowComplex row(K, p, q + 2);
        out.v = homotopy_classes(row, q);
    }
    int sz = K.size(p, q);
    if (static_cast<int>(out.h.size()) != sz || static_cast<int>(out.v.size()) != sz)
        throw std::runtime_error("cell_classes: adapter id mismatch");
    for (int x = 0; x < sz; ++x) {
        out.n_h = std::max(out.n_h, out.h[x] + 1);
        out.n_v = std::max(out.n_v, out.v[x] + 1);
    }
    // relation R(x,x') = exists y with [x]_h = [y]_h and [y]_v = [x']_v
    std::set<std::pair<int, int>> present;  // (hclass, vclass) pairs realized by some y
    for (int y = 0; y < sz; ++y) present.insert({out.h[y], out.v[y]});
    auto rel = [&](int x, int xp) { return present.count({out.h[x], out.v[xp]}) > 0; };
    // Lemma 2.4: (i) <=> (ii), i.e. the relation is symmetric
    for (int x = 0; x < sz; ++x)
        for (int xp = 0; xp < sz; ++xp)
            if (rel(x, xp) != rel(xp, x))
                throw std::runtime_error("bihomotopy: Lemma 2.4 equivalence fails");
    // Lemma 2.5: transitive (reflexivity is witnessed by y = x)
    for (int x = 0; x < sz; ++x)
        for (int y = 0; y < sz; ++y) {
            if (!rel(x, y)) continue;
            for (int z = 0; z < sz; ++z)
                if (rel(y, z) && !rel(x, z))
                    throw std::runtime_error("bihomotopy: not transitive");
        }
    std::vector<int> parent(sz);
    for (int i = 0; i < sz; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
    for (int x = 0; x < sz; ++x)
        for (int xp = x + 1; xp < sz; ++xp)
            if (rel(x, xp)) parent[find(x)] = find(xp);
    out.bi.assign(sz, -1);
    for (int i = 0; i < sz; ++i) {
        int r = find(i);
        if (out.bi[r] < 0) out.bi[r] = out.n_bi++;
        out.bi[i] = out.bi[r];
    }
    return out;
}

bool bihomotopic(BisimplicialSetView& K, int p, int q, int x, int xp) {
    CellClasses cls = cell_classes(K, p, q);
    return cls.bi[x] == cls.bi[xp];
}

void check_class_face_maps(BisimplicialSetView& K, int p, int q) {
    CellClasses cls = cell_classes(K, p, q);
    int sz = K.size(p, q);
    // [[x]] -> [x d^i_h]_v
    if (p >= 1) {
        CellClasses tgt = cell_classes(K, p - 1, q);
        for (int i = 0; i <= p; ++i)
            for (int x = 0; x < sz; ++x)
                for (int y = 0; y < sz; ++y)
                    if (cls.bi[x] == cls.bi[y] &&
                        tgt.v[K.face_h(p, q, i, x)] != tgt.v[K.face_h(p, q, i, y)])
                        throw std::runtime_error("class map [[x]] -> [x dh]_v not well defined");
    }
    // [[x]] -> [x d^j_v]_h
    if (q >= 1) {
        CellClasses tgt = cell_classes(K, p, q - 1);
        for (int j = 0; j <= q; ++j)
            for (int x = 0; x < sz; ++x)
                for (int y = 0; y < sz; ++y)
                    if (cls.bi[x] == cls.bi[y] &&
                        tgt.h[K.face_v(p, q, j, x)] != tgt.h[K.face_v(p, q, j, y)])
                        throw std::runtime_error("class map [[x]] -> [x dv]_h not well defined");
    }
    // [x]_h -> [[x s^j_v]]
    {
        CellClasses tgt = cell_classes(K, p, q + 1);
        for (int j = 0; j <= q; ++j)
            for (int x = 0; x < sz; ++x)
                for (int y = 0; y < sz; ++y)
                    if (cls.h[x] == cls.h[y] &&
                        tgt.bi[K.deg_v(p, q, j, x)] != tgt.bi[K.deg_v(p, q, j, y)])
                        throw std::runtime_error("class map [x]_h -> [[x sv]] not well defined");
    }
    // [x]_v -> [[x s^i_h]]
    {
        CellClasses tgt = cell_classes(K, p + 1, q);
        for (int i = 0; i <= p; ++i)
            for (int x = 0; x < sz; ++x)
                for (int y = 0; y < sz; ++y)
                    if (cls.v[x] == cls.v[y] &&
                        tgt.bi[K.deg_h(p, q, i, x)] != tgt.bi[K.deg_h(p, q, i, y)])
                        throw std::runtime_error("class map [x]_v -> [[x sh]] not well defined");
    }
}

void verify_bisimplicial_identities(BisimplicialSetView& K, int max_p, int max_q, int samples,
                                    uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto fail = [](const std::string& m) {
        throw std::runtime_error("bisimplicial identity violated: " + m);
    };
    for (int s = 0; s < samples; ++s) {
        int p = static_cast<int>(rng() % static_cast<uint64_t>(max_p + 1));
        int q = static_cast<int>(rng() % static_cast<uint64_t>(max_q + 1));
        int sz = K.size(p, q);
        if (sz == 0) continue;
        int x = static_cast<int>(rng() % static_cast<uint64_t>(sz));
        // horizontal simplicial identities (faces only; degeneracies are
        // covered by the simplicial scan on row/column complexes)
        if (p >= 2)
            for (int i = 0; i <= p; ++i)
                for (int j = i + 1; j <= p; ++j)
                    if (K.face_h(p - 1, q, i, K.face_h(p, q, j, x)) !=
                        K.face_h(p - 1, q, j - 1, K.face_h(p, q, i, x)))
                        fail("dh_i dh_j");
        if (q >= 2)
            for (int i = 0; i <= q; ++i)
                for (int j = i + 1; j <= q; ++j)
                    if (K.face_v(p, q - 1, i, K.face_v(p, q, j, x)) !=
                        K.face_v(p, q - 1, j - 1, K.face_v(p, q, i, x)))
                        fail("dv_i dv_j");
        // horizontal and vertical operators commute
        for (int i = 0; i <= p; ++i)
            for (int j = 0; j <= q; ++j) {
                if (p >= 1 && q >= 1 &&
                    K.face_v(p - 1, q, j, K.face_h(p, q, i, x)) !=
                        K.face_h(p, q - 1, i, K.face_v(p, q, j, x)))
                    fail("dh dv commute");
                if (K.deg_v(p + 1, q, j, K.deg_h(p, q, i, x)) !=
                    K.deg_h(p, q + 1, i, K.deg_v(p, q, j, x)))
                    fail("sh sv commute");
                if (p >= 1 &&
                    K.deg_v(p - 1, q, j, K.face_h(p, q, i, x)) !=
                        K.face_h(p, q + 1, i, K.deg_v(p, q, j, x)))
                    fail("dh sv commute");
                if (q >= 1 &&
                    K.deg_h(p, q - 1, i, K.face_v(p, q, j, x)) !=
                        K.face_v(p + 1, q, j, K.deg_h(p, q, i, x)))
                    fail("sh dv commute");
            }
    }
}

}  // namespace dgv
