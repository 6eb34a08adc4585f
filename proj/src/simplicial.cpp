#include "dgv/simplicial.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace dgv {

SimplicialSetView::Level& SimplicialSetView::level(int n) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    Level& lv = levels_[n];
    if (!lv.built) {
        if (n < 0 || n > max_level()) throw std::runtime_error("level out of truncation range");
        lv.keys = enumerate_level(n);
        std::sort(lv.keys.begin(), lv.keys.end());
        lv.keys.erase(std::unique(lv.keys.begin(), lv.keys.end()), lv.keys.end());
        for (size_t i = 0; i < lv.keys.size(); ++i) lv.ix[lv.keys[i]] = static_cast<int>(i);
        lv.faces.assign(n + 1, {});
        lv.degs.assign(n + 1, {});
        lv.built = true;
    }
    return lv;
}

int SimplicialSetView::size(int n) { return static_cast<int>(level(n).keys.size()); }

const std::string& SimplicialSetView::key(int n, int x) { return level(n).keys.at(x); }

int SimplicialSetView::index_of(int n, const std::string& k) {
    auto& lv = level(n);
    auto it = lv.ix.find(k);
    return it == lv.ix.end() ? -1 : it->second;
}

int SimplicialSetView::face(int n, int i, int x) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    Level& lv = level(n);
    if (i < 0 || i > n) throw std::runtime_error("face index out of range");
    auto& tab = lv.faces[i];
    if (tab.empty()) {
        Level& prev = level(n - 1);
        tab.assign(lv.keys.size(), -1);
        for (size_t c = 0; c < lv.keys.size(); ++c) {
            auto it = prev.ix.find(face_key(n, i, lv.keys[c]));
            if (it == prev.ix.end())
                throw std::runtime_error("face left the enumerated level: d_" + std::to_string(i) +
                                         " of " + lv.keys[c]);
            tab[c] = it->second;
        }
    }
    return tab.at(x);
}

int SimplicialSetView::degeneracy(int n, int i, int x) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    Level& lv = level(n);
    if (i < 0 || i > n) throw std::runtime_error("degeneracy index out of range");
    auto& tab = lv.degs[i];
    if (tab.empty()) {
        Level& next = level(n + 1);
        tab.assign(lv.keys.size(), -1);
        for (size_t c = 0; c < lv.keys.size(); ++c) {
            auto it = next.ix.find(degeneracy_key(n, i, lv.keys[c]));
            if (it == next.ix.end())
                throw std::runtime_error("degeneracy left the enumerated level: s_" +
                                         std::to_string(i) + " of " + lv.keys[c]);
            tab[c] = it->second;
        }
    }
    return tab.at(x);
}

// --------------------------------------------------------------------------
// NerveView

std::vector<int> NerveView::decode(const std::string& k) const {
    std::vector<int> spine;
    if (k.empty()) return spine;
    if (mor_ix_.empty())
        for (int m = 0; m < cat_.n_mor(); ++m) mor_ix_[cat_.mors[m].name] = m;
    size_t pos = 0;
    while (pos <= k.size()) {
        size_t next = k.find('|', pos);
        std::string name = k.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        auto it = mor_ix_.find(name);
        if (it == mor_ix_.end()) throw std::runtime_error("nerve: unknown morphism " + name);
        spine.push_back(it->second);
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return spine;
}

std::string NerveView::encode(const std::vector<int>& spine) const {
    std::string k;
    for (size_t i = 0; i < spine.size(); ++i) {
        if (i) k += '|';
        k += cat_.mors[spine[i]].name;
    }
    return k;
}

std::vector<std::string> NerveView::enumerate_level(int n) {
    std::vector<std::string> out;
    if (n == 0) {
        for (const auto& o : cat_.objects) out.push_back(o);
        return out;
    }
    // composable spines, sp[j] with tgt(sp[j]) == src(sp[j-1])
    std::vector<int> spine;
    std::function<void()> rec = [&]() {
        if (static_cast<int>(spine.size()) == n) {
            out.push_back(encode(spine));
            return;
        }
        for (int m = 0; m < cat_.n_mor(); ++m) {
            if (!spine.empty() && cat_.tgt(m) != cat_.src(spine.back())) continue;
            spine.push_back(m);
            rec();
            spine.pop_back();
        }
    };
    rec();
    return out;
}

std::string NerveView::face_key(int n, int i, const std::string& k) {
    if (n == 1) {
        int f = decode(k)[0];
        return i == 0 ? cat_.objects[cat_.src(f)] : cat_.objects[cat_.tgt(f)];
    }
    std::vector<int> sp = decode(k);
    std::vector<int> out;
    if (i == 0) {
        out.assign(sp.begin() + 1, sp.end());
    } else if (i == n) {
        out.assign(sp.begin(), sp.end() - 1);
    } else {
        out = sp;
        out[i - 1] = cat_.compose(sp[i - 1], sp[i]);
        if (out[i - 1] < 0) throw std::runtime_error("nerve: spine not composable");
        out.erase(out.begin() + i);
    }
    return encode(out);
}

std::string NerveView::degeneracy_key(int n, int i, const std::string& k) {
    if (n == 0) {
        int obj = -1;
        for (int o = 0; o < cat_.n_obj(); ++o)
            if (cat_.objects[o] == k) obj = o;
        return encode({cat_.id_of_obj[obj]});
    }
    std::vector<int> sp = decode(k);
    int vertex_obj = i < n ? cat_.tgt(sp[i]) : cat_.src(sp[n - 1]);
    sp.insert(sp.begin() + i, cat_.id_of_obj[vertex_obj]);
    return encode(sp);
}

// --------------------------------------------------------------------------
// TabulatedView

TabulatedView::TabulatedView(Data data) : data_(std::move(data)) {}

std::vector<std::string> TabulatedView::enumerate_level(int n) {
    if (n >= static_cast<int>(data_.levels.size())) return {};
    return data_.levels[n];
}

std::string TabulatedView::face_key(int n, int i, const std::string& k) {
    const auto& m = data_.d.at(n - 1).at(i);
    auto it = m.find(k);
    if (it == m.end()) throw std::runtime_error("tabulated: missing face d_" + std::to_string(i) + " of " + k);
    return it->second;
}

std::string TabulatedView::degeneracy_key(int n, int i, const std::string& k) {
    const auto& m = data_.s.at(n).at(i);
    auto it = m.find(k);
    if (it == m.end())
        throw std::runtime_error("tabulated: missing degeneracy s_" + std::to_string(i) + " of " + k);
    return it->second;
}

// --------------------------------------------------------------------------
// Horns and Kan checks

namespace {

// bucket of level-n simplices by one face value
struct FaceBuckets {
    std::map<std::pair<int, int>, std::vector<int>> b;
    static FaceBuckets build(SimplicialSetView& L, int n) {
        FaceBuckets fb;
        int sz = L.size(n);
        for (int x = 0; x < sz; ++x)
            for (int i = 0; i <= n; ++i) fb.b[{i, L.face(n, i, x)}].push_back(x);
        return fb;
    }
    const std::vector<int>* get(int i, int v) const {
        auto it = b.find({i, v});
        return it == b.end() ? nullptr : &it->second;
    }
};

}  // namespace

void for_each_horn(SimplicialSetView& L, int n, int k,
                   const std::function<void(const Horn&)>& fn) {
    if (n < 1) throw std::runtime_error("horns need n >= 1");
    std::vector<int> idxs;
    for (int i = 0; i <= n; ++i)
        if (i != k) idxs.push_back(i);
    int facet_level = n - 1;
    FaceBuckets fb;  // facets of a 1-horn are vertices and carry no constraints
    if (facet_level >= 1) fb = FaceBuckets::build(L, facet_level);
    int level_size = L.size(facet_level);

    Horn horn{n, k, std::vector<int>(n + 1, -1)};
    std::function<void(size_t)> rec = [&](size_t m) {
        if (m == idxs.size()) {
            fn(horn);
            return;
        }
        int j = idxs[m];
        // candidates constrained by the first already-assigned facet
        const std::vector<int>* cands = nullptr;
        std::vector<int> all;
        if (m == 0) {
            all.resize(level_size);
            for (int x = 0; x < level_size; ++x) all[x] = x;
            cands = &all;
        } else {
            int i0 = idxs[0];
            cands = fb.get(i0, L.face(facet_level, j - 1, horn.facets[i0]));
            if (!cands) return;
        }
        for (int x : *cands) {
            bool ok = true;
            for (size_t t = 1; t < m && ok; ++t) {
                int i = idxs[t];
                ok = L.face(facet_level, i, x) == L.face(facet_level, j - 1, horn.facets[i]);
            }
            if (!ok) continue;
            horn.facets[j] = x;
            rec(m + 1);
            horn.facets[j] = -1;
        }
    };
    rec(0);
}

long count_horns(SimplicialSetView& L, int n, int k) {
    long c = 0;
    for_each_horn(L, n, k, [&](const Horn&) { ++c; });
    return c;
}

std::vector<int> horn_fillers(SimplicialSetView& L, const Horn& horn) {
    int n = horn.n;
    int i0 = horn.k == 0 ? 1 : 0;
    std::vector<int> out;
    int sz = L.size(n);
    for (int y = 0; y < sz; ++y) {
        if (L.face(n, i0, y) != horn.facets[i0]) continue;
        bool ok = true;
        for (int i = 0; i <= n && ok; ++i) {
            if (i == horn.k || i == i0) continue;
            ok = L.face(n, i, y) == horn.facets[i];
        }
        if (ok) out.push_back(y);
    }
    return out;
}

KanReport kan_check(SimplicialSetView& L, int n_max) {
    KanReport rep;
    rep.checked_to = n_max;
    for (int n = 1; n <= n_max && rep.kan; ++n) {
        // filler lookup: level-n simplices hashed by their non-k faces
        for (int k = 0; k <= n && rep.kan; ++k) {
            std::map<std::vector<int>, long> filler_count;
            int sz = L.size(n);
            for (int y = 0; y < sz; ++y) {
                std::vector<int> sig;
                for (int i = 0; i <= n; ++i)
                    if (i != k) sig.push_back(L.face(n, i, y));
                ++filler_count[sig];
            }
            long mn = -1, mx = 0;
            for_each_horn(L, n, k, [&](const Horn& h) {
                if (!rep.kan) return;
                ++rep.horns;
                std::vector<int> sig;
                for (int i = 0; i <= n; ++i)
                    if (i != h.k) sig.push_back(h.facets[i]);
                auto it = filler_count.find(sig);
                long c = it == filler_count.end() ? 0 : it->second;
                if (c == 0) {
                    rep.kan = false;
                    rep.failure = h;
                    std::ostringstream os;
                    os << "unfilled horn Lambda^" << h.k << "[" << h.n << "] with facets (";
                    for (int i = 0; i <= h.n; ++i) {
                        if (i) os << ", ";
                        os << (i == h.k ? std::string("-") : L.key(h.n - 1, h.facets[i]));
                    }
                    os << ")";
                    rep.failure_text = os.str();
                }
                mn = mn < 0 ? c : std::min(mn, c);
                mx = std::max(mx, c);
            });
            if (mn >= 0) rep.multiplicity[{n, k}] = {mn, mx};
        }
    }
    return rep;
}

bool homotopic(SimplicialSetView& L, int n, int x, int xp) {
    for (int i = 0; i <= n; ++i)
        if (L.face(n, i, x) != L.face(n, i, xp))
            throw std::invalid_argument("homotopic: simplices do not share all faces");
    int sz = L.size(n + 1);
    for (int y = 0; y < sz; ++y) {
        if (L.face(n + 1, n, y) != x || L.face(n + 1, n + 1, y) != xp) continue;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            ok = L.face(n + 1, i, y) == L.degeneracy(n - 1, n - 1, L.face(n, i, x));
        if (ok) return true;
    }
    return false;
}

std::vector<int> homotopy_classes(SimplicialSetView& L, int n) {
    int sz = L.size(n);
    // one pass over level n+1 collecting homotopy witnesses
    std::vector<std::pair<int, int>> pairs;
    int up = L.size(n + 1);
    for (int y = 0; y < up; ++y) {
        int x = L.face(n + 1, n, y);
        int xp = L.face(n + 1, n + 1, y);
        bool same_faces = true;
        for (int i = 0; n >= 1 && i <= n && same_faces; ++i)
            same_faces = L.face(n, i, x) == L.face(n, i, xp);
        if (!same_faces) continue;
        bool wit = true;
        for (int i = 0; i < n && wit; ++i)
            wit = L.face(n + 1, i, y) == L.degeneracy(n - 1, n - 1, L.face(n, i, x));
        if (wit) pairs.emplace_back(x, xp);
    }
    // group by face tuple and assert the relation is an equivalence there
    std::map<std::vector<int>, std::vector<int>> groups;
    for (int x = 0; x < sz; ++x) {
        std::vector<int> sig;
        for (int i = 0; n >= 1 && i <= n; ++i) sig.push_back(L.face(n, i, x));
        groups[sig].push_back(x);
    }
    std::map<std::pair<int, int>, bool> rel;
    for (auto [a, b] : pairs) rel[{a, b}] = true;
    auto related = [&](int a, int b) { return rel.count({a, b}) > 0; };
    for (const auto& [sig, g] : groups) {
        for (int a : g)
            if (!related(a, a)) throw std::runtime_error("homotopy relation not reflexive (not Kan?)");
        for (int a : g)
            for (int b : g) {
                if (related(a, b) != related(b, a))
                    throw std::runtime_error("homotopy relation not symmetric (not Kan?)");
                if (!related(a, b)) continue;
                for (int c : g)
                    if (related(b, c) && !related(a, c))
                        throw std::runtime_error("homotopy relation not transitive (not Kan?)");
            }
    }
    std::vector<int> parent(sz);
    for (int i = 0; i < sz; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
    for (auto [a, b] : pairs) parent[find(a)] = find(b);
    std::vector<int> cls(sz, -1);
    int next = 0;
    for (int i = 0; i < sz; ++i) {
        int r = find(i);
        if (cls[r] < 0) cls[r] = next++;
        cls[i] = cls[r];
    }
    return cls;
}

FundamentalGroupoid fundamental_groupoid(SimplicialSetView& L) {
    FundamentalGroupoid fg;
    int nv = L.size(0);
    for (int a = 0; a < nv; ++a) fg.cat.objects.push_back(L.key(0, a));
    fg.class_of_edge = homotopy_classes(L, 1);
    int ne = L.size(1);
    int nc = 0;
    for (int e = 0; e < ne; ++e) nc = std::max(nc, fg.class_of_edge[e] + 1);
    fg.rep_of_class.assign(nc, -1);
    for (int e = 0; e < ne; ++e) {
        int c = fg.class_of_edge[e];
        if (fg.rep_of_class[c] < 0) fg.rep_of_class[c] = e;
    }
    for (int c = 0; c < nc; ++c) {
        int e = fg.rep_of_class[c];
        fg.cat.mors.push_back({"[" + L.key(1, e) + "]", L.face(1, 0, e), L.face(1, 1, e)});
    }
    fg.cat.id_of_obj.resize(nv);
    for (int a = 0; a < nv; ++a) fg.cat.id_of_obj[a] = fg.class_of_edge[L.degeneracy(0, 0, a)];
    fg.cat.comp.assign(nc, std::vector<int>(nc, -1));
    // composition via any 2-simplex y with d2 y = x, d0 y = x'; checked
    // independent of y and of the representatives
    int n2 = L.size(2);
    for (int y = 0; y < n2; ++y) {
        int x = L.face(2, 2, y), xp = L.face(2, 0, y), m = L.face(2, 1, y);
        int c1 = fg.class_of_edge[x], c2 = fg.class_of_edge[xp], cm = fg.class_of_edge[m];
        int& slot = fg.cat.comp[c1][c2];
        if (slot < 0)
            slot = cm;
        else if (slot != cm)
            throw std::runtime_error("fundamental groupoid: composition depends on the 2-simplex");
    }
    for (int c1 = 0; c1 < nc; ++c1)
        for (int c2 = 0; c2 < nc; ++c2)
            if (fg.cat.src(c1) == fg.cat.tgt(c2) && fg.cat.comp[c1][c2] < 0)
                throw std::runtime_error("fundamental groupoid: missing composite (not Kan up to 2?)");
    fg.cat.validate();
    if (!fg.cat.is_groupoid())
        throw std::runtime_error("fundamental groupoid: not a groupoid (not Kan up to 3?)");
    return fg;
}

std::vector<int> path_components(SimplicialSetView& L) {
    int nv = L.size(0);
    std::vector<int> parent(nv);
    for (int i = 0; i < nv; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
    int ne = L.size(1);
    for (int e = 0; e < ne; ++e) parent[find(L.face(1, 0, e))] = find(L.face(1, 1, e));
    std::vector<int> cls(nv, -1);
    int next = 0;
    for (int i = 0; i < nv; ++i) {
        int r = find(i);
        if (cls[r] < 0) cls[r] = next++;
        cls[i] = cls[r];
    }
    return cls;
}

PiNResult pi_n(SimplicialSetView& L, int base_vertex, int n) {
    PiNResult res;
    res.n = n;
    if (n == 0) {
        std::vector<int> cls = path_components(L);
        int nv = L.size(0);
        for (int v = 0; v < nv; ++v) res.elements.push_back(v);
        res.class_of = cls;
        int nc = 0;
        for (int v = 0; v < nv; ++v) nc = std::max(nc, cls[v] + 1);
        res.rep.assign(nc, -1);
        for (int v = 0; v < nv; ++v)
            if (res.rep[cls[v]] < 0) res.rep[cls[v]] = v;
        res.table = trivial_group();
        (void)base_vertex;
        return res;
    }
    // degenerate base simplices a_m
    std::vector<int> base_at(n + 2);
    base_at[0] = base_vertex;
    for (int m = 1; m <= n + 1; ++m) base_at[m] = L.degeneracy(m - 1, 0, base_at[m - 1]);

    int sz = L.size(n);
    std::vector<int> in_e(sz, -1);
    for (int x = 0; x < sz; ++x) {
        bool all = true;
        for (int i = 0; i <= n && all; ++i) all = L.face(n, i, x) == base_at[n - 1];
        if (all) {
            in_e[x] = static_cast<int>(res.elements.size());
            res.elements.push_back(x);
        }
    }
    std::vector<int> cls = homotopy_classes(L, n);
    // re-index classes within the element set
    std::map<int, int> cls_map;
    res.class_of.resize(res.elements.size());
    for (size_t e = 0; e < res.elements.size(); ++e) {
        int c = cls[res.elements[e]];
        auto [it, fresh] = cls_map.emplace(c, static_cast<int>(cls_map.size()));
        res.class_of[e] = it->second;
        if (fresh) res.rep.push_back(res.elements[e]);
    }
    int nc = static_cast<int>(cls_map.size());

    std::vector<std::vector<int>> members(nc);
    for (size_t e = 0; e < res.elements.size(); ++e) members[res.class_of[e]].push_back(res.elements[e]);

    std::vector<std::vector<int>> op(nc, std::vector<int>(nc, -1));
    for (int c1 = 0; c1 < nc; ++c1)
        for (int c2 = 0; c2 < nc; ++c2)
            for (int x : members[c1])
                for (int xp : members[c2]) {
                    Horn horn{n + 1, n, std::vector<int>(n + 2, -1)};
                    for (int i = 0; i <= n - 2; ++i) horn.facets[i] = base_at[n];
                    horn.facets[n - 1] = xp;
                    horn.facets[n + 1] = x;
                    auto fillers = horn_fillers(L, horn);
                    if (fillers.empty())
                        throw std::runtime_error("pi_n: product horn has no filler (not Kan?)");
                    for (int y : fillers) {
                        int d = L.face(n + 1, n, y);
                        if (in_e[d] < 0)
                            throw std::runtime_error("pi_n: product left the base-face set");
                        int r = res.class_of[in_e[d]];
                        if (op[c1][c2] < 0)
                            op[c1][c2] = r;
                        else if (op[c1][c2] != r)
                            throw std::runtime_error("pi_n: product depends on choices");
                    }
                }

    res.table.op = op;
    for (int c = 0; c < nc; ++c) res.table.elements.push_back("[" + L.key(n, res.rep[c]) + "]");
    int base_e = in_e[base_at[n]];
    if (base_e < 0) throw std::runtime_error("pi_n: degenerate base simplex missing");
    res.table.identity = res.class_of[base_e];
    res.table.validate();
    if (n >= 2 && !res.table.is_abelian()) throw std::runtime_error("pi_n: pi_2 not abelian");
    return res;
}

bool fact_p1_check(SimplicialSetView& L, int n_plus_1, int y, int yp, int k) {
    int n = n_plus_1 - 1;
    std::vector<int> cls = homotopy_classes(L, n);
    for (int i = 0; i <= n_plus_1; ++i) {
        if (i == k) continue;
        if (cls[L.face(n_plus_1, i, y)] != cls[L.face(n_plus_1, i, yp)])
            throw std::invalid_argument("fact_p1_check: precondition fails");
    }
    return cls[L.face(n_plus_1, k, y)] == cls[L.face(n_plus_1, k, yp)];
}

void verify_simplicial_identities(SimplicialSetView& L, int max_n, int samples, uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto fail = [](const std::string& m) { throw std::runtime_error("simplicial identity violated: " + m); };
    int cap = L.max_level();
    max_n = std::min(max_n, cap);
    for (int s = 0; s < samples; ++s) {
        int n = 1 + static_cast<int>(rng() % static_cast<uint64_t>(max_n));
        int sz = L.size(n);
        if (sz == 0) continue;
        int x = static_cast<int>(rng() % static_cast<uint64_t>(sz));
        if (n >= 2)
            for (int i = 0; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    if (L.face(n - 1, i, L.face(n, j, x)) != L.face(n - 1, j - 1, L.face(n, i, x)))
                        fail("d_i d_j");
        if (n + 2 <= cap)
            for (int i = 0; i <= n; ++i)
                for (int j = i; j <= n; ++j)
                    if (L.degeneracy(n + 1, j + 1, L.degeneracy(n, i, x)) !=
                        L.degeneracy(n + 1, i, L.degeneracy(n, j, x)))
                        fail("s_i s_j");
        if (n + 1 > cap) continue;
        for (int j = 0; j <= n; ++j) {
            int sx = L.degeneracy(n, j, x);
            for (int i = 0; i <= n + 1; ++i) {
                int lhs = L.face(n + 1, i, sx);
                if (i == j || i == j + 1) {
                    if (lhs != x) fail("d_j s_j = id");
                } else if (i < j) {
                    if (lhs != L.degeneracy(n - 1, j - 1, L.face(n, i, x))) fail("d_i s_j, i<j");
                } else {
                    if (lhs != L.degeneracy(n - 1, j, L.face(n, i - 1, x))) fail("d_i s_j, i>j+1");
                }
            }
        }
    }
}

}  // namespace dgv
