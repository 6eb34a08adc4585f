#include "dgv/double_nerve.hpp"

#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dgv {

namespace {

std::vector<std::string> split_list(const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (true) {
        size_t next = s.find(sep, pos);
        if (next == std::string::npos) {
            out.push_back(s.substr(pos));
            break;
        }
        out.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
    return out;
}

}  // namespace

NNView::NNView(DoubleGroupoid g, int P, int Q) : g_(std::move(g)), P_(P), Q_(Q) {
    auto clean = [](const std::string& id) {
        return id.find(',') == std::string::npos && id.find('|') == std::string::npos;
    };
    for (int i = 0; i < g_.n_obj(); ++i) obj_ix_[g_.objects[i]] = i;
    for (int i = 0; i < g_.n_h(); ++i) {
        if (!clean(g_.hmors[i].id))
            throw std::runtime_error("nn: morphism id may not contain ',' or '|': " + g_.hmors[i].id);
        h_ix_[g_.hmors[i].id] = i;
    }
    for (int i = 0; i < g_.n_v(); ++i) {
        if (!clean(g_.vmors[i].id))
            throw std::runtime_error("nn: morphism id may not contain ',' or '|': " + g_.vmors[i].id);
        v_ix_[g_.vmors[i].id] = i;
    }
    for (int i = 0; i < g_.n_sq(); ++i) {
        if (!clean(g_.squares[i].id))
            throw std::runtime_error("nn: square id may not contain ',' or '|': " + g_.squares[i].id);
        s_ix_[g_.squares[i].id] = i;
    }
}

NNView::CellData NNView::parse(int p, int q, const std::string& k) const {
    CellData d;
    std::string body = k.substr(2);
    if (p == 0 && q == 0) {
        d.obj = obj_ix_.at(body);
    } else if (q == 0) {
        for (const auto& s : split_list(body, ',')) d.hstring.push_back(h_ix_.at(s));
    } else if (p == 0) {
        for (const auto& s : split_list(body, ',')) d.vstring.push_back(v_ix_.at(s));
    } else {
        for (const auto& row : split_list(body, '|')) {
            std::vector<int> r;
            for (const auto& s : split_list(row, ',')) r.push_back(s_ix_.at(s));
            d.grid.push_back(r);
        }
    }
    return d;
}

std::string NNView::unparse(int p, int q, const CellData& d) const {
    std::ostringstream os;
    if (p == 0 && q == 0) {
        os << "o:" << g_.objects[d.obj];
    } else if (q == 0) {
        os << "h:";
        for (size_t i = 0; i < d.hstring.size(); ++i)
            os << (i ? "," : "") << g_.hmors[d.hstring[i]].id;
    } else if (p == 0) {
        os << "v:";
        for (size_t i = 0; i < d.vstring.size(); ++i)
            os << (i ? "," : "") << g_.vmors[d.vstring[i]].id;
    } else {
        os << "g:";
        for (size_t r = 0; r < d.grid.size(); ++r) {
            if (r) os << "|";
            for (size_t c = 0; c < d.grid[r].size(); ++c)
                os << (c ? "," : "") << g_.squares[d.grid[r][c]].id;
        }
    }
    return os.str();
}

int NNView::derived_square(const CellData& d, int i, int j, int r, int s) const {
    if (!(i < j && r < s)) throw std::runtime_error("derived_square expects a proper span");
    int acc = -1;
    for (int t = r + 1; t <= s; ++t) {
        int row = d.grid[t - 1][i];
        for (int c = i + 2; c <= j; ++c) {
            row = g_.chs(row, d.grid[t - 1][c - 1]);
            if (row < 0) throw std::runtime_error("derived_square: row not composable");
        }
        acc = (acc < 0) ? row : g_.cvs(acc, row);
        if (acc < 0) throw std::runtime_error("derived_square: rows not composable");
    }
    return acc;
}

std::vector<std::string> NNView::enumerate_cell(int p, int q) {
    std::vector<std::string> out;
    if (p == 0 && q == 0) {
        for (const auto& o : g_.objects) out.push_back("o:" + o);
        return out;
    }
    if (q == 0) {
        std::vector<int> str;
        std::function<void()> rec = [&]() {
            if (static_cast<int>(str.size()) == p) {
                CellData d;
                d.hstring = str;
                out.push_back(unparse(p, q, d));
                return;
            }
            for (int f = 0; f < g_.n_h(); ++f) {
                if (!str.empty() && g_.hsrc(str.back()) != g_.htgt(f)) continue;
                str.push_back(f);
                rec();
                str.pop_back();
            }
        };
        rec();
        return out;
    }
    if (p == 0) {
        std::vector<int> str;
        std::function<void()> rec = [&]() {
            if (static_cast<int>(str.size()) == q) {
                CellData d;
                d.vstring = str;
                out.push_back(unparse(p, q, d));
                return;
            }
            for (int u = 0; u < g_.n_v(); ++u) {
                if (!str.empty() && g_.vsrc(str.back()) != g_.vtgt(u)) continue;
                str.push_back(u);
                rec();
                str.pop_back();
            }
        };
        rec();
        return out;
    }
    // grid cells, row-major with shared-edge propagation
    std::vector<std::vector<int>> by_th(g_.n_v()), by_tv(g_.n_h());
    std::map<std::pair<int, int>, std::vector<int>> by_both;
    for (int a = 0; a < g_.n_sq(); ++a) {
        by_th[g_.th(a)].push_back(a);
        by_tv[g_.tv(a)].push_back(a);
        by_both[{g_.th(a), g_.tv(a)}].push_back(a);
    }
    std::vector<std::vector<int>> grid(q, std::vector<int>(p, -1));
    std::function<void(int)> rec = [&](int cellno) {
        if (cellno == p * q) {
            CellData d;
            d.grid = grid;
            out.push_back(unparse(p, q, d));
            return;
        }
        int r = cellno / p, c = cellno % p;  // 0-based
        const std::vector<int>* cands;
        std::vector<int> all;
        bool need_h = c > 0, need_v = r > 0;
        if (need_h && need_v) {
            auto it = by_both.find({g_.sh(grid[r][c - 1]), g_.sv(grid[r - 1][c])});
            if (it == by_both.end()) return;
            cands = &it->second;
        } else if (need_h) {
            cands = &by_th[g_.sh(grid[r][c - 1])];
        } else if (need_v) {
            cands = &by_tv[g_.sv(grid[r - 1][c])];
        } else {
            all.resize(g_.n_sq());
            for (int a = 0; a < g_.n_sq(); ++a) all[a] = a;
            cands = &all;
        }
        for (int a : *cands) {
            grid[r][c] = a;
            rec(cellno + 1);
            grid[r][c] = -1;
        }
    };
    rec(0);
    return out;
}

std::string NNView::face_h_key(int p, int q, int i, const std::string& k) {
    CellData d = parse(p, q, k);
    CellData out;
    if (q == 0) {
        if (p == 1) {
            out.obj = i == 0 ? g_.hsrc(d.hstring[0]) : g_.htgt(d.hstring[0]);
            return unparse(0, 0, out);
        }
        if (i == 0)
            out.hstring.assign(d.hstring.begin() + 1, d.hstring.end());
        else if (i == p)
            out.hstring.assign(d.hstring.begin(), d.hstring.end() - 1);
        else {
            out.hstring = d.hstring;
            int c = g_.ch(d.hstring[i - 1], d.hstring[i]);
            if (c < 0) throw std::runtime_error("nn: hstring not composable");
            out.hstring[i - 1] = c;
            out.hstring.erase(out.hstring.begin() + i);
        }
        return unparse(p - 1, 0, out);
    }
    if (p == 1) {
        for (int r = 0; r < q; ++r)
            out.vstring.push_back(i == 0 ? g_.sh(d.grid[r][0]) : g_.th(d.grid[r][0]));
        return unparse(0, q, out);
    }
    out.grid = d.grid;
    for (int r = 0; r < q; ++r) {
        if (i == 0)
            out.grid[r].erase(out.grid[r].begin());
        else if (i == p)
            out.grid[r].pop_back();
        else {
            int c = g_.chs(d.grid[r][i - 1], d.grid[r][i]);
            if (c < 0) throw std::runtime_error("nn: columns not composable");
            out.grid[r][i - 1] = c;
            out.grid[r].erase(out.grid[r].begin() + i);
        }
    }
    return unparse(p - 1, q, out);
}

std::string NNView::face_v_key(int p, int q, int j, const std::string& k) {
    CellData d = parse(p, q, k);
    CellData out;
    if (p == 0) {
        if (q == 1) {
            out.obj = j == 0 ? g_.vsrc(d.vstring[0]) : g_.vtgt(d.vstring[0]);
            return unparse(0, 0, out);
        }
        if (j == 0)
            out.vstring.assign(d.vstring.begin() + 1, d.vstring.end());
        else if (j == q)
            out.vstring.assign(d.vstring.begin(), d.vstring.end() - 1);
        else {
            out.vstring = d.vstring;
            int c = g_.cv(d.vstring[j - 1], d.vstring[j]);
            if (c < 0) throw std::runtime_error("nn: vstring not composable");
            out.vstring[j - 1] = c;
            out.vstring.erase(out.vstring.begin() + j);
        }
        return unparse(0, q - 1, out);
    }
    if (q == 1) {
        for (int c = 0; c < p; ++c)
            out.hstring.push_back(j == 0 ? g_.sv(d.grid[0][c]) : g_.tv(d.grid[0][c]));
        return unparse(p, 0, out);
    }
    out.grid = d.grid;
    if (j == 0)
        out.grid.erase(out.grid.begin());
    else if (j == q)
        out.grid.pop_back();
    else {
        for (int c = 0; c < p; ++c) {
            int m = g_.cvs(d.grid[j - 1][c], d.grid[j][c]);
            if (m < 0) throw std::runtime_error("nn: rows not composable");
            out.grid[j - 1][c] = m;
        }
        out.grid.erase(out.grid.begin() + j);
    }
    return unparse(p, q - 1, out);
}

std::string NNView::deg_h_key(int p, int q, int i, const std::string& k) {
    CellData d = parse(p, q, k);
    CellData out;
    if (p == 0 && q == 0) {
        out.hstring = {g_.id_h_obj[d.obj]};
        return unparse(1, 0, out);
    }
    if (q == 0) {
        int obj = i < p ? g_.htgt(d.hstring[i]) : g_.hsrc(d.hstring[p - 1]);
        out.hstring = d.hstring;
        out.hstring.insert(out.hstring.begin() + i, g_.id_h_obj[obj]);
        return unparse(p + 1, 0, out);
    }
    if (p == 0) {
        out.grid.assign(q, std::vector<int>(1, -1));
        for (int r = 0; r < q; ++r) out.grid[r][0] = g_.id_h_sq[d.vstring[r]];
        return unparse(1, q, out);
    }
    out.grid = d.grid;
    for (int r = 0; r < q; ++r) {
        int edge = i == 0 ? g_.th(d.grid[r][0]) : g_.sh(d.grid[r][i - 1]);
        out.grid[r].insert(out.grid[r].begin() + i, g_.id_h_sq[edge]);
    }
    return unparse(p + 1, q, out);
}

std::string NNView::deg_v_key(int p, int q, int j, const std::string& k) {
    CellData d = parse(p, q, k);
    CellData out;
    if (p == 0 && q == 0) {
        out.vstring = {g_.id_v_obj[d.obj]};
        return unparse(0, 1, out);
    }
    if (p == 0) {
        int obj = j < q ? g_.vtgt(d.vstring[j]) : g_.vsrc(d.vstring[q - 1]);
        out.vstring = d.vstring;
        out.vstring.insert(out.vstring.begin() + j, g_.id_v_obj[obj]);
        return unparse(0, q + 1, out);
    }
    if (q == 0) {
        out.grid.assign(1, std::vector<int>(p, -1));
        for (int c = 0; c < p; ++c) out.grid[0][c] = g_.id_v_sq[d.hstring[c]];
        return unparse(p, 1, out);
    }
    out.grid = d.grid;
    std::vector<int> row(p);
    for (int c = 0; c < p; ++c) {
        int edge = j == 0 ? g_.tv(d.grid[0][c]) : g_.sv(d.grid[j - 1][c]);
        row[c] = g_.id_v_sq[edge];
    }
    out.grid.insert(out.grid.begin() + j, row);
    return unparse(p, q + 1, out);
}

std::shared_ptr<NNView> nn(const DoubleGroupoid& g, int P, int Q) {
    return std::make_shared<NNView>(g, P, Q);
}

int nn_map_cell(NNView& src, NNView& tgt, const DoubleFunctor& f, int p, int q, int cell) {
    NNView::CellData d = src.parse(p, q, src.key(p, q, cell));
    NNView::CellData out;
    if (p == 0 && q == 0) out.obj = f.on_obj[d.obj];
    for (int x : d.hstring) out.hstring.push_back(f.on_h[x]);
    for (int x : d.vstring) out.vstring.push_back(f.on_v[x]);
    for (const auto& row : d.grid) {
        std::vector<int> r;
        for (int x : row) r.push_back(f.on_sq[x]);
        out.grid.push_back(r);
    }
    int ix = tgt.index_of(p, q, tgt.unparse(p, q, out));
    if (ix < 0) throw std::runtime_error("nn_map_cell: image cell missing");
    return ix;
}

// --------------------------------------------------------------------------
// Suites

TriReport theorem_51_suite(const DoubleGroupoid& g) {
    TriReport rep;
    ValidationReport val = validate_axioms(g);
    if (!val.structural_errors.empty())
        throw std::runtime_error("theorem_51_suite: structural error: " + val.structural_errors[0]);
    FillingReport fil = check_filling(g);
    bool axioms_ok = val.violations.empty() || g.double_category_ok;
    rep.i = axioms_ok && val.is_groupoid && fil.ok;
    if (!rep.i) {
        std::ostringstream os;
        if (!val.is_groupoid) os << "not a double groupoid; ";
        if (!fil.ok && !fil.counterexamples.empty())
            os << "unfilled pair (g=" << g.hmors[fil.counterexamples[0][0]].id
               << ", u=" << g.vmors[fil.counterexamples[0][1]].id << ")";
        rep.witness_i = os.str();
    }
    if (g.n_sq() > 128)
        throw std::runtime_error("theorem_51_suite: |C| > 128; diagonal Kan search refused");

    auto K = nn(g, 4, 4);
    ExtensionReport ext = extension_check(*K, 3, 3);
    rep.ii = ext.ok();
    rep.witness_ii = ext.failure;
    rep.horn11_multiplicity = ext.multiplicity_11;

    DiagView diag(K, 3);
    KanReport kr = kan_check(diag, 3);
    rep.iii = kr.kan;
    rep.witness_iii = kr.failure_text;
    return rep;
}

bool unique_filler_check(const DoubleGroupoid& g, int n, std::string* detail) {
    require_filling(g);
    if (n < 3) throw std::runtime_error("unique_filler_check expects n >= 3");
    auto set_detail = [&](const std::string& s) {
        if (detail) *detail = s;
    };
    if (n == 3) {
        auto K = nn(g, 3, 3);
        DiagView diag(K, 3);
        bool ok = true;
        for (int k = 0; k <= 3 && ok; ++k) {
            std::map<std::vector<int>, long> filler_count;
            for (int y = 0; y < diag.size(3); ++y) {
                std::vector<int> sig;
                for (int i = 0; i <= 3; ++i)
                    if (i != k) sig.push_back(diag.face(3, i, y));
                ++filler_count[sig];
            }
            for_each_horn(diag, 3, k, [&](const Horn& h) {
                if (!ok) return;
                std::vector<int> sig;
                for (int i = 0; i <= 3; ++i)
                    if (i != h.k) sig.push_back(h.facets[i]);
                auto it = filler_count.find(sig);
                long c = it == filler_count.end() ? 0 : it->second;
                if (c != 1) {
                    ok = false;
                    set_detail("horn Lambda^" + std::to_string(k) + "[3] has " + std::to_string(c) +
                               " fillers");
                }
            });
        }
        return ok;
    }
    // n == 4: seeded sampling on small structures
    if (g.n_sq() > 4)
        throw std::runtime_error("unique_filler_check at n=4 refused: |C| too large for level 4");
    auto K = nn(g, 4, 4);
    DiagView diag(K, 4);
    int sz = diag.size(4);
    std::mt19937_64 rng(20240101);
    for (int s = 0; s < 20; ++s) {
        int y = static_cast<int>(rng() % static_cast<uint64_t>(sz));
        for (int k = 0; k <= 4; ++k) {
            Horn h{4, k, std::vector<int>(5, -1)};
            for (int i = 0; i <= 4; ++i)
                if (i != k) h.facets[i] = diag.face(4, i, y);
            if (horn_fillers(diag, h).size() != 1) {
                set_detail("sampled horn at n=4 lacks a unique filler");
                return false;
            }
        }
    }
    return true;
}

IsoReport theorem_53_suite(const DoubleGroupoid& g) {
    require_filling(g);
    IsoReport rep;
    std::ostringstream detail;
    auto K = nn(g, 4, 4);
    DiagView diag(K, 3);

    // pi0: same partition of the same vertex set
    auto dg_classes = pi0(g);
    std::vector<int> diag_cls = path_components(diag);
    std::vector<int> dg_cls(g.n_obj());
    for (size_t c = 0; c < dg_classes.size(); ++c)
        for (int o : dg_classes[c]) dg_cls[o] = static_cast<int>(c);
    std::map<int, int> corr;  // dg class -> diag class
    bool pi0_ok = true;
    for (int o = 0; o < g.n_obj(); ++o) {
        int v = diag.index_of(0, "o:" + g.objects[o]);
        if (v < 0) {
            pi0_ok = false;
            break;
        }
        auto [it, fresh] = corr.emplace(dg_cls[o], diag_cls[v]);
        if (!fresh && it->second != diag_cls[v]) pi0_ok = false;
    }
    std::set<int> diag_classes_hit;
    for (auto [a, b] : corr) diag_classes_hit.insert(b);
    int n_diag_classes = 0;
    for (int c : diag_cls) n_diag_classes = std::max(n_diag_classes, c + 1);
    pi0_ok = pi0_ok && corr.size() == dg_classes.size() &&
             static_cast<int>(diag_classes_hit.size()) == n_diag_classes;
    if (!pi0_ok) {
        rep.ok = false;
        detail << "pi0 partitions disagree; ";
    } else {
        detail << "pi0: " << dg_classes.size() << " classes on both sides; ";
    }

    for (int obj = 0; obj < g.n_obj(); ++obj) {
        int base = diag.index_of(0, "o:" + g.objects[obj]);
        Pi1Result dg1 = pi1(g, obj);
        PiNResult s1 = pi_n(diag, base, 1);
        bool iso1 = isomorphic(dg1.table, s1.table);
        // the explicit map Phi [alpha] -> [tv a, sh a]
        std::vector<int> phi_cls(s1.table.size(), -1);
        bool phi_ok = true;
        for (size_t e = 0; e < s1.elements.size(); ++e) {
            const std::string& k = diag.key(1, s1.elements[e]);
            NNView::CellData d = K->parse(1, 1, k);
            int sq = d.grid[0][0];
            int target = dg1.class_of(g, g.tv(sq), g.sh(sq));
            if (target < 0) {
                phi_ok = false;
                break;
            }
            int c = s1.class_of[e];
            if (phi_cls[c] < 0)
                phi_cls[c] = target;
            else if (phi_cls[c] != target)
                phi_ok = false;  // not well defined
        }
        if (phi_ok) {
            std::set<int> image(phi_cls.begin(), phi_cls.end());
            phi_ok = !image.count(-1) && static_cast<int>(image.size()) == dg1.table.size();
            for (int c1 = 0; c1 < s1.table.size() && phi_ok; ++c1)
                for (int c2 = 0; c2 < s1.table.size() && phi_ok; ++c2)
                    phi_ok =
                        phi_cls[s1.table.op[c1][c2]] == dg1.table.op[phi_cls[c1]][phi_cls[c2]];
        }
        Pi2Result dg2 = pi2(g, obj);
        PiNResult s2 = pi_n(diag, base, 2);
        bool iso2 = isomorphic(dg2.table, s2.table);
        if (!(iso1 && iso2 && phi_ok)) rep.ok = false;
        detail << g.objects[obj] << ": pi1 " << dg1.table.size() << (iso1 ? "~" : "!~")
               << s1.table.size() << " phi " << (phi_ok ? "ok" : "FAIL") << ", pi2 "
               << dg2.table.size() << (iso2 ? "~" : "!~") << s2.table.size() << "; ";
    }
    rep.detail = detail.str();
    return rep;
}

}  // namespace dgv
