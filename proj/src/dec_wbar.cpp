#include "dgv/dec_wbar.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace dgv {

// --------------------------------------------------------------------------
// DecView

std::vector<std::string> DecView::enumerate_cell(int p, int q) {
    int m = p + 1 + q;
    std::vector<std::string> out;
    for (int x = 0; x < l_->size(m); ++x) out.push_back(l_->key(m, x));
    return out;
}

std::string DecView::face_h_key(int p, int q, int i, const std::string& k) {
    int m = p + 1 + q;
    return l_->key(m - 1, l_->face(m, i, l_->index_of(m, k)));
}

std::string DecView::face_v_key(int p, int q, int j, const std::string& k) {
    int m = p + 1 + q;
    return l_->key(m - 1, l_->face(m, p + 1 + j, l_->index_of(m, k)));
}

std::string DecView::deg_h_key(int p, int q, int i, const std::string& k) {
    int m = p + 1 + q;
    return l_->key(m + 1, l_->degeneracy(m, i, l_->index_of(m, k)));
}

std::string DecView::deg_v_key(int p, int q, int j, const std::string& k) {
    int m = p + 1 + q;
    return l_->key(m + 1, l_->degeneracy(m, p + 1 + j, l_->index_of(m, k)));
}

// --------------------------------------------------------------------------
// DiagView

std::vector<std::string> DiagView::enumerate_level(int n) {
    std::vector<std::string> out;
    for (int x = 0; x < k_->size(n, n); ++x) out.push_back(k_->key(n, n, x));
    return out;
}

std::string DiagView::face_key(int n, int i, const std::string& k) {
    int x = k_->index_of(n, n, k);
    int a = k_->face_h(n, n, i, x);
    return k_->key(n - 1, n - 1, k_->face_v(n - 1, n, i, a));
}

std::string DiagView::degeneracy_key(int n, int i, const std::string& k) {
    int x = k_->index_of(n, n, k);
    int a = k_->deg_h(n, n, i, x);
    return k_->key(n + 1, n + 1, k_->deg_v(n + 1, n, i, a));
}

// --------------------------------------------------------------------------
// WbarView

std::vector<std::string> WbarView::decode(const std::string& k) const {
    std::vector<std::string> out;
    size_t pos = 0;
    while (true) {
        size_t next = k.find(';', pos);
        if (next == std::string::npos) {
            out.push_back(k.substr(pos));
            break;
        }
        out.push_back(k.substr(pos, next - pos));
        pos = next + 1;
    }
    return out;
}

std::vector<int> WbarView::components(int n, int x) {
    std::vector<std::string> keys = decode(key(n, x));
    std::vector<int> out;
    for (int p = 0; p <= n; ++p) out.push_back(k_->index_of(p, n - p, keys[p]));
    return out;
}

int WbarView::assemble(int n, const std::vector<int>& comps) {
    std::string k;
    for (int p = 0; p <= n; ++p) {
        if (p) k += ';';
        k += k_->key(p, n - p, comps[p]);
    }
    return index_of(n, k);
}

std::vector<std::string> WbarView::enumerate_level(int n) {
    std::vector<std::string> out;
    // staircase propagation: bucket K(p+1, n-p-1) by its d^h_{p+1} face
    std::vector<std::map<int, std::vector<int>>> bucket(n);
    for (int p = 0; p + 1 <= n; ++p) {
        int sz = k_->size(p + 1, n - p - 1);
        for (int x = 0; x < sz; ++x) bucket[p][k_->face_h(p + 1, n - p - 1, p + 1, x)].push_back(x);
    }
    std::vector<int> comps;
    std::string acc;
    std::function<void(int)> rec = [&](int p) {
        if (p == n + 1) {
            std::string k;
            for (int r = 0; r <= n; ++r) {
                if (r) k += ';';
                k += k_->key(r, n - r, comps[r]);
            }
            out.push_back(k);
            return;
        }
        if (p == 0) {
            for (int x = 0; x < k_->size(0, n); ++x) {
                comps.push_back(x);
                rec(1);
                comps.pop_back();
            }
            return;
        }
        auto it = bucket[p - 1].find(k_->face_v(p - 1, n - p + 1, 0, comps[p - 1]));
        if (it == bucket[p - 1].end()) return;
        for (int x : it->second) {
            comps.push_back(x);
            rec(p + 1);
            comps.pop_back();
        }
    };
    rec(0);
    return out;
}

std::string WbarView::face_key(int n, int i, const std::string& k) {
    std::vector<std::string> keys = decode(k);
    std::string out;
    for (int j = 0; j <= n - 1; ++j) {
        if (j) out += ';';
        if (j < i) {
            int x = k_->index_of(j, n - j, keys[j]);
            out += k_->key(j, n - 1 - j, k_->face_v(j, n - j, i - j, x));
        } else {
            int x = k_->index_of(j + 1, n - j - 1, keys[j + 1]);
            out += k_->key(j, n - 1 - j, k_->face_h(j + 1, n - j - 1, i, x));
        }
    }
    return out;
}

std::string WbarView::degeneracy_key(int n, int i, const std::string& k) {
    std::vector<std::string> keys = decode(k);
    std::string out;
    for (int j = 0; j <= n + 1; ++j) {
        if (j) out += ';';
        if (j <= i) {
            int x = k_->index_of(j, n - j, keys[j]);
            out += k_->key(j, n + 1 - j, k_->deg_v(j, n - j, i - j, x));
        } else {
            int x = k_->index_of(j - 1, n - j + 1, keys[j - 1]);
            out += k_->key(j, n + 1 - j, k_->deg_h(j - 1, n - j + 1, i, x));
        }
    }
    return out;
}

// --------------------------------------------------------------------------
// Alexander-Whitney comparison and the adjunction

int restrict_h(BisimplicialSetView& K, int p, int q, int x, int new_p) {
    for (int m = p; m > new_p; --m) x = K.face_h(m, q, m, x);
    return x;
}

int restrict_v_low(BisimplicialSetView& K, int p, int q, int x, int drop) {
    for (int t = 0; t < drop; ++t) x = K.face_v(p, q - t, 0, x);
    return x;
}

int phi_star(BisimplicialSetView& K, DiagView& dg, WbarView& wb, int n, int z) {
    int cell = K.index_of(n, n, dg.key(n, z));
    std::vector<int> comps;
    for (int p = 0; p <= n; ++p)
        comps.push_back(restrict_v_low(K, p, n, restrict_h(K, n, n, cell, p), p));
    int w = wb.assemble(n, comps);
    if (w < 0) throw std::runtime_error("phi_star: image tuple violates the staircase condition");
    return w;
}

void check_phi_star_simplicial(BisimplicialSetView& K, DiagView& dg, WbarView& wb, int n_max) {
    for (int n = 1; n <= n_max; ++n)
        for (int z = 0; z < dg.size(n); ++z) {
            int img = phi_star(K, dg, wb, n, z);
            for (int i = 0; i <= n; ++i)
                if (phi_star(K, dg, wb, n - 1, dg.face(n, i, z)) != wb.face(n, i, img))
                    throw std::runtime_error("phi_star does not commute with d_" + std::to_string(i));
        }
    for (int n = 0; n < n_max; ++n)
        for (int z = 0; z < dg.size(n); ++z) {
            int img = phi_star(K, dg, wb, n, z);
            for (int i = 0; i <= n; ++i)
                if (phi_star(K, dg, wb, n + 1, dg.degeneracy(n, i, z)) != wb.degeneracy(n, i, img))
                    throw std::runtime_error("phi_star does not commute with s_" + std::to_string(i));
        }
}

int adjunction_unit(SimplicialSetView& L, DecView& dec, WbarView& wb, int n, int y) {
    std::vector<int> comps;
    for (int p = 0; p <= n; ++p) {
        int sy = L.degeneracy(n, p, y);
        comps.push_back(dec.index_of(p, n - p, L.key(n + 1, sy)));
    }
    int w = wb.assemble(n, comps);
    if (w < 0) throw std::runtime_error("adjunction unit: tuple not a wbar simplex");
    return w;
}

int adjunction_counit(BisimplicialSetView& K, WbarView& wb, int p, int q, int cell) {
    // cell indexes wbar(K) at level p+1+q
    std::vector<int> comps = wb.components(p + 1 + q, cell);
    return K.face_h(p + 1, q, p + 1, comps[p + 1]);
}

void check_adjunction_unit_simplicial(SimplicialSetView& L, DecView& dec, WbarView& wb, int n_max) {
    for (int n = 1; n <= n_max; ++n)
        for (int y = 0; y < L.size(n); ++y) {
            int img = adjunction_unit(L, dec, wb, n, y);
            for (int i = 0; i <= n; ++i)
                if (adjunction_unit(L, dec, wb, n - 1, L.face(n, i, y)) != wb.face(n, i, img))
                    throw std::runtime_error("unit does not commute with d_" + std::to_string(i));
        }
    for (int n = 0; n < n_max; ++n)
        for (int y = 0; y < L.size(n); ++y) {
            int img = adjunction_unit(L, dec, wb, n, y);
            for (int i = 0; i <= n; ++i)
                if (adjunction_unit(L, dec, wb, n + 1, L.degeneracy(n, i, y)) != wb.degeneracy(n, i, img))
                    throw std::runtime_error("unit does not commute with s_" + std::to_string(i));
        }
}

void check_adjunction_counit_bisimplicial(BisimplicialSetView& K, WbarView& wb, int P, int Q) {
    // domain Dec(wbar K) at (p,q) is wbar K at level p+1+q
    auto v = [&](int p, int q, int cell) { return adjunction_counit(K, wb, p, q, cell); };
    for (int p = 0; p <= P; ++p)
        for (int q = 0; q <= Q; ++q) {
            int m = p + 1 + q;
            for (int cell = 0; cell < wb.size(m); ++cell) {
                for (int i = 0; i <= p; ++i) {
                    if (p >= 1 && v(p - 1, q, wb.face(m, i, cell)) != K.face_h(p, q, i, v(p, q, cell)))
                        throw std::runtime_error("counit does not commute with dh");
                    if (v(p + 1, q, wb.degeneracy(m, i, cell)) != K.deg_h(p, q, i, v(p, q, cell)))
                        throw std::runtime_error("counit does not commute with sh");
                }
                for (int j = 0; j <= q; ++j) {
                    if (q >= 1 &&
                        v(p, q - 1, wb.face(m, p + 1 + j, cell)) != K.face_v(p, q, j, v(p, q, cell)))
                        throw std::runtime_error("counit does not commute with dv");
                    if (v(p, q + 1, wb.degeneracy(m, p + 1 + j, cell)) !=
                        K.deg_v(p, q, j, v(p, q, cell)))
                        throw std::runtime_error("counit does not commute with sv");
                }
            }
        }
}

void check_triangle_1(SimplicialSetView& L, DecView& dec, WbarView& wb_dec, int P, int Q) {
    for (int p = 0; p <= P; ++p)
        for (int q = 0; q <= Q; ++q) {
            int m = p + 1 + q;
            for (int y = 0; y < L.size(m); ++y) {
                int img = adjunction_unit(L, dec, wb_dec, m, y);
                int back = adjunction_counit(dec, wb_dec, p, q, img);
                if (back != dec.index_of(p, q, L.key(m, y)))
                    throw std::runtime_error("triangle identity v(Dec u) = id fails");
            }
        }
}

void check_triangle_2(BisimplicialSetView& K, WbarView& wb, int n_max) {
    for (int n = 0; n <= n_max; ++n)
        for (int w = 0; w < wb.size(n); ++w) {
            std::vector<int> orig = wb.components(n, w);
            for (int p = 0; p <= n; ++p) {
                int y = wb.degeneracy(n, p, w);  // u(w)_p = w s^p
                std::vector<int> comps = wb.components(n + 1, y);
                int res = K.face_h(p + 1, n - p, p + 1, comps[p + 1]);
                if (res != orig[p])
                    throw std::runtime_error("triangle identity (wbar v) u = id fails");
            }
        }
}

}  // namespace dgv
