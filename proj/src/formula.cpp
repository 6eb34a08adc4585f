#include "dgv/formula.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace dgv {

ExprP atom(int square_sym) {
    auto e = std::make_shared<Expr>();
    e->op = Expr::Op::atom_square;
    e->sym = square_sym;
    return e;
}
ExprP hcomp(ExprP left, ExprP right) {
    auto e = std::make_shared<Expr>();
    e->op = Expr::Op::hcomp;
    e->lhs = std::move(left);
    e->rhs = std::move(right);
    return e;
}
ExprP vcomp(ExprP top, ExprP bottom) {
    auto e = std::make_shared<Expr>();
    e->op = Expr::Op::vcomp;
    e->lhs = std::move(top);
    e->rhs = std::move(bottom);
    return e;
}
ExprP eh(PathRef v, PathRef u) {
    auto e = std::make_shared<Expr>();
    e->op = Expr::Op::eh;
    e->pa = std::move(v);
    e->pb = std::move(u);
    return e;
}
ExprP ev(PathRef u2, PathRef u) {
    auto e = std::make_shared<Expr>();
    e->op = Expr::Op::ev;
    e->pa = std::move(u2);
    e->pb = std::move(u);
    return e;
}
ExprP hinv(ExprP sub) {
    auto e = std::make_shared<Expr>();
    e->op = Expr::Op::hinv;
    e->lhs = std::move(sub);
    return e;
}
ExprP vinv(ExprP sub) {
    auto e = std::make_shared<Expr>();
    e->op = Expr::Op::vinv;
    e->lhs = std::move(sub);
    return e;
}
ExprP eta(int bsym, std::vector<int> word) {
    auto e = std::make_shared<Expr>();
    e->op = Expr::Op::eta;
    e->bsym = bsym;
    e->word = std::move(word);
    return e;
}

namespace {

struct Value {
    enum class Kind { square, path, point, simplex, invalid };
    Kind kind = Kind::invalid;
    int sym = -1;
    std::vector<Rat> args;
    std::string err;
    // all rewriting-equivalent (symbol, tuple) forms, for simplex values
    std::vector<std::pair<int, std::vector<Rat>>> closure;
};

// simplex applications are equal when they rewrite to a common form
bool value_eq(const Value& a, const Value& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == Value::Kind::simplex) {
        for (const auto& f : a.closure)
            for (const auto& g : b.closure)
                if (f == g) return true;
        return false;
    }
    return a.sym == b.sym && a.args == b.args;
}

std::string value_str(const Value& v, const AuditEntry& e) {
    std::ostringstream os;
    switch (v.kind) {
        case Value::Kind::square:
            os << e.squares[v.sym].name;
            break;
        case Value::Kind::path:
            os << e.paths[v.sym];
            break;
        case Value::Kind::point:
            os << "endpoint#" << v.sym;
            break;
        case Value::Kind::simplex:
            os << e.bsyms[v.sym].name;
            break;
        case Value::Kind::invalid:
            return "invalid(" + v.err + ")";
    }
    os << "(";
    for (size_t i = 0; i < v.args.size(); ++i) os << (i ? "," : "") << rat_str(v.args[i]);
    os << ")";
    return os.str();
}

struct Engine {
    const AuditEntry& e;
    std::vector<int> ep;  // union-find over endpoint nodes 2*path+end

    explicit Engine(const AuditEntry& entry) : e(entry) {
        ep.resize(2 * e.paths.size());
        for (size_t i = 0; i < ep.size(); ++i) ep[i] = static_cast<int>(i);
        // square boundary corner identities
        for (const auto& s : e.squares) {
            unite(s.bottom, 0, s.left, 0);   // alpha(0,0)
            unite(s.bottom, 1, s.right, 1);  // alpha(1,0)
            unite(s.left, 1, s.top, 1);      // alpha(0,1)
            unite(s.right, 0, s.top, 0);     // alpha(1,1)
        }
        for (const auto& [a, b] : e.endpoint_ids) unite(a.first, a.second, b.first, b.second);
    }
    int find(int n) { return ep[n] == n ? n : ep[n] = find(ep[n]); }
    void unite(int p1, int e1, int p2, int e2) { ep[find(2 * p1 + e1)] = find(2 * p2 + e2); }

    Value invalid(const std::string& msg) {
        Value v;
        v.err = msg;
        return v;
    }

    Value norm_path(int p, const Rat& s) {
        if (s < 0 || s > 1)
            return invalid("path argument out of [0,1]: " + e.paths[p] + "(" + rat_str(s) + ")");
        if (s == 0 || s == 1) {
            Value v;
            v.kind = Value::Kind::point;
            v.sym = find(2 * p + (s == 1 ? 1 : 0));
            return v;
        }
        Value v;
        v.kind = Value::Kind::path;
        v.sym = p;
        v.args = {s};
        return v;
    }

    Value norm_square(int sym, const Rat& x, const Rat& y) {
        if (x < 0 || x > 1 || y < 0 || y > 1)
            return invalid("square argument out of I^2: " + e.squares[sym].name + "(" + rat_str(x) +
                           "," + rat_str(y) + ")");
        const auto& sq = e.squares[sym];
        if (y == 0) return norm_path(sq.bottom, x);
        if (x == 0) return norm_path(sq.left, y);
        if (x == 1) return norm_path(sq.right, 1 - y);
        if (y == 1) return norm_path(sq.top, 1 - x);
        Value v;
        v.kind = Value::Kind::square;
        v.sym = sym;
        v.args = {x, y};
        return v;
    }

    Value norm_bary(int sym, std::vector<Rat> tuple) {
        // closure under the face relations, lexicographically least form
        std::set<std::pair<int, std::vector<Rat>>> seen;
        std::vector<std::pair<int, std::vector<Rat>>> queue{{sym, tuple}};
        seen.insert(queue[0]);
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            auto [s, q] = queue[qi];
            for (const auto& rel : e.brelations) {
                if (rel.sym != s || q[rel.face] != 0) continue;
                std::vector<Rat> rest;
                for (size_t i = 0; i < q.size(); ++i)
                    if (static_cast<int>(i) != rel.face) rest.push_back(q[i]);
                std::vector<Rat> out;
                for (const auto& grp : rel.groups) {
                    Rat acc = 0;
                    for (int gi : grp) acc += rest[gi];
                    out.push_back(acc);
                }
                auto cand = std::make_pair(rel.target, out);
                if (seen.insert(cand).second) queue.push_back(cand);
            }
        }
        // normal form: lexicographically least among the irreducible forms
        std::optional<std::pair<int, std::vector<Rat>>> best;
        for (const auto& cand : seen) {
            bool reducible = false;
            for (const auto& rel : e.brelations)
                if (rel.sym == cand.first && cand.second[rel.face] == 0) reducible = true;
            if (reducible) continue;
            if (!best || cand < *best) best = cand;
        }
        if (!best) best = *seen.begin();
        Value v;
        v.kind = Value::Kind::simplex;
        v.sym = best->first;
        v.args = best->second;
        v.closure.assign(seen.begin(), seen.end());
        return v;
    }

    Value eval_out(const RegionOut& out, const Rat& x, const Rat& y, const Rat& t) {
        std::vector<Rat> args;
        for (const auto& a : out.args) args.push_back(a.eval(x, y, t));
        switch (out.kind) {
            case RegionOut::Kind::square:
                return norm_square(out.sym, args[0], args[1]);
            case RegionOut::Kind::path:
                return norm_path(out.sym, args[0]);
            case RegionOut::Kind::simplex:
                return norm_bary(out.sym, args);
        }
        return invalid("bad region");
    }

    Value eval_pathref(const PathRef& r, const Rat& s) {
        if (r.path >= 0) return norm_path(r.path, s);
        if (s < 0 || s > 1) return invalid("path argument out of [0,1]");
        std::vector<Rat> tuple(e.bsyms[r.bsym].dim + 1, Rat(0));
        Rat in[2] = {1 - s, s};
        for (int i = 0; i < 2; ++i) tuple[r.word[i]] += in[i];
        return norm_bary(r.bsym, tuple);
    }

    // multi-branch evaluation of a prescribed expression at an exact point
    Value eval_expr(const Expr& ex, const Rat& x, const Rat& y) {
        using Op = Expr::Op;
        switch (ex.op) {
            case Op::atom_square:
                return norm_square(ex.sym, x, y);
            case Op::hinv:
                return eval_expr(*ex.lhs, 1 - y, 1 - x);
            case Op::vinv:
                return eval_expr(*ex.lhs, y, x);
            case Op::eh: {
                std::vector<Value> vals;
                if (x <= y) vals.push_back(eval_pathref(ex.pa, y - x));
                if (x >= y) vals.push_back(eval_pathref(ex.pb, x - y));
                return merge(vals, "e^h branches disagree");
            }
            case Op::ev: {
                std::vector<Value> vals;
                if (x + y <= 1) vals.push_back(eval_pathref(ex.pb, x + y));
                if (x + y >= 1) vals.push_back(eval_pathref(ex.pa, 2 - x - y));
                return merge(vals, "e^v branches disagree");
            }
            case Op::hcomp: {
                std::vector<Value> vals;
                if (x <= y && x + y <= 1) vals.push_back(eval_expr(*ex.rhs, 2 * x, x + y));
                if (x >= y && x + y <= 1) vals.push_back(eval_expr(*ex.rhs, x + y, 2 * y));
                if (x <= y && x + y >= 1) vals.push_back(eval_expr(*ex.lhs, x + y - 1, 2 * y - 1));
                if (x >= y && x + y >= 1) vals.push_back(eval_expr(*ex.lhs, 2 * x - 1, x + y - 1));
                return merge(vals, "horizontal composite branches disagree");
            }
            case Op::vcomp: {
                std::vector<Value> vals;
                if (x >= y && x + y >= 1) vals.push_back(eval_expr(*ex.rhs, 2 * x - 1, 1 - x + y));
                if (x >= y && x + y <= 1) vals.push_back(eval_expr(*ex.rhs, x - y, 2 * y));
                if (x <= y && x + y >= 1) vals.push_back(eval_expr(*ex.lhs, 1 + x - y, 2 * y - 1));
                if (x <= y && x + y <= 1) vals.push_back(eval_expr(*ex.lhs, 2 * x, y - x));
                return merge(vals, "vertical composite branches disagree");
            }
            case Op::eta: {
                std::vector<Rat> t4 = {x * y, (1 - x) * (1 - y), (1 - x) * y, x * (1 - y)};
                std::vector<Rat> tuple(e.bsyms[ex.bsym].dim + 1, Rat(0));
                for (int i = 0; i < 4; ++i) tuple[ex.word[i]] += t4[i];
                return norm_bary(ex.bsym, tuple);
            }
        }
        return invalid("bad expression");
    }

    Value merge(const std::vector<Value>& vals, const std::string& msg) {
        for (const auto& v : vals)
            if (v.kind == Value::Kind::invalid) return v;
        for (size_t i = 1; i < vals.size(); ++i)
            if (!value_eq(vals[i], vals[0]))
                return invalid(msg + ": " + value_str(vals[0], e) + " vs " + value_str(vals[i], e));
        return vals.empty() ? invalid("no branch applies") : vals[0];
    }

    bool region_active(const Region& r, const Rat& x, const Rat& y, const Rat& t) {
        for (const auto& p : r.ge0)
            if (p.eval(x, y, t) < 0) return false;
        return true;
    }

    Value eval_pm(const Rat& x, const Rat& y, const Rat& t) {
        std::vector<Value> vals;
        for (size_t i = 0; i < e.regions.size(); ++i) {
            if (!region_active(e.regions[i], x, y, t)) continue;
            vals.push_back(eval_out(e.regions[i].out, x, y, t));
        }
        return merge(vals, "piecewise branches disagree");
    }
};

std::string point_str(const Rat& x, const Rat& y, const Rat& t, int nvars) {
    std::string s = "(" + rat_str(x) + ", " + rat_str(y);
    if (nvars == 3) s += ", " + rat_str(t);
    return s + ")";
}

}  // namespace

std::string AuditReport::to_text() const {
    std::ostringstream os;
    os << name << ": coverage " << (coverage ? "pass" : "FAIL") << ", consistency "
       << (consistency ? "pass" : "FAIL") << ", boundary " << (boundary ? "pass" : "FAIL")
       << ", barycentric " << (barycentric ? "pass" : "FAIL") << " (verified at " << points_checked
       << " sampled points; polynomial identities checked symbolically)";
    if (!note.empty()) os << " [note: " << note << "]";
    os << "\n";
    for (const auto& f : failures)
        os << "  " << f.stage << " failure at " << f.point << " regions " << f.regions << ": "
           << f.details << "\n";
    return os.str();
}

std::string AuditReport::to_json() const {
    std::ostringstream os;
    auto b = [](bool v) { return v ? "true" : "false"; };
    os << "{\"name\":\"" << name << "\",\"coverage\":" << b(coverage)
       << ",\"consistency\":" << b(consistency) << ",\"boundary\":" << b(boundary)
       << ",\"barycentric\":" << b(barycentric) << ",\"points\":" << points_checked
       << ",\"failures\":[";
    for (size_t i = 0; i < failures.size(); ++i) {
        const auto& f = failures[i];
        os << (i ? "," : "") << "{\"stage\":\"" << f.stage << "\",\"point\":\"" << f.point
           << "\",\"regions\":\"" << f.regions << "\",\"details\":\"" << f.details << "\"}";
    }
    os << "]";
    if (!note.empty()) os << ",\"note\":\"" << note << "\"";
    os << "}";
    return os.str();
}

AuditReport audit_entry(const AuditEntry& entry, const std::vector<int>& grids) {
    AuditReport rep;
    rep.name = entry.name;
    rep.note = entry.note;
    Engine eng(entry);
    const int max_failures = 12;
    auto record = [&](bool& flag, const std::string& stage, const std::string& pt,
                      const std::string& regions, const std::string& details) {
        flag = false;
        if (static_cast<int>(rep.failures.size()) < max_failures)
            rep.failures.push_back({stage, pt, regions, details});
    };

    // barycentric sums as polynomial identities (independent of any sampling)
    if (entry.barycentric) {
        for (size_t ri = 0; ri < entry.regions.size(); ++ri) {
            const auto& out = entry.regions[ri].out;
            Poly sum;
            bool poly_ok = true;
            for (const auto& a : out.args) {
                if (!(a.den == Poly::constant(1))) poly_ok = false;
                sum = sum + a.num;
            }
            if (!poly_ok || !(sum == Poly::constant(1)))
                record(rep.barycentric, "barycentric", "-", std::to_string(ri),
                       "argument sum is not identically 1");
        }
    }

    for (int d : grids) {
        std::vector<Rat> ticks;
        for (int i = 0; i <= d; ++i) ticks.emplace_back(i, d);
        std::vector<Rat> tticks = entry.nvars == 3 ? ticks : std::vector<Rat>{Rat(0)};
        for (const Rat& x : ticks)
            for (const Rat& y : ticks)
                for (const Rat& t : tticks) {
                    ++rep.points_checked;
                    std::vector<int> active;
                    std::vector<Value> vals;
                    for (size_t i = 0; i < entry.regions.size(); ++i) {
                        if (!eng.region_active(entry.regions[i], x, y, t)) continue;
                        active.push_back(static_cast<int>(i));
                        vals.push_back(eng.eval_out(entry.regions[i].out, x, y, t));
                    }
                    std::string pt = point_str(x, y, t, entry.nvars);
                    if (active.empty()) {
                        record(rep.coverage, "coverage", pt, "-", "no region covers the point");
                        continue;
                    }
                    std::string regs;
                    for (size_t i = 0; i < active.size(); ++i)
                        regs += (i ? "," : "") + std::to_string(active[i]);
                    for (size_t i = 0; i < vals.size(); ++i)
                        if (vals[i].kind == Value::Kind::invalid)
                            record(rep.consistency, "consistency", pt, std::to_string(active[i]),
                                   vals[i].err);
                    for (size_t i = 1; i < vals.size(); ++i) {
                        if (vals[i].kind == Value::Kind::invalid ||
                            vals[0].kind == Value::Kind::invalid)
                            continue;
                        if (!value_eq(vals[i], vals[0])) {
                            bool comparable = vals[i].kind == vals[0].kind;
                            record(rep.consistency, "consistency", pt, regs,
                                   std::string(comparable ? "branch mismatch: "
                                                          : "unresolved overlap: ") +
                                       value_str(vals[0], entry) + " vs " +
                                       value_str(vals[i], entry));
                        }
                    }
                    if (entry.barycentric)
                        for (size_t i = 0; i < vals.size(); ++i) {
                            if (vals[i].kind != Value::Kind::simplex) continue;
                            for (const auto& c : vals[i].args)
                                if (c < 0)
                                    record(rep.barycentric, "barycentric", pt,
                                           std::to_string(active[i]),
                                           "negative barycentric component " + rat_str(c));
                        }
                }
    }

    // boundary: prescribed slices and side behaviour
    for (int d : grids) {
        std::vector<Rat> ticks;
        for (int i = 0; i <= d; ++i) ticks.emplace_back(i, d);
        if (entry.nvars == 3) {
            for (const Rat& x : ticks)
                for (const Rat& y : ticks) {
                    std::string pt = point_str(x, y, 0, 2);
                    if (entry.boundary.t0) {
                        Value lhs = eng.eval_pm(x, y, 0);
                        Value rhs = eng.eval_expr(*entry.boundary.t0, x, y);
                        if (!value_eq(lhs, rhs))
                            record(rep.boundary, "boundary", pt, "t=0",
                                   value_str(lhs, entry) + " vs expected " + value_str(rhs, entry));
                    }
                    if (entry.boundary.t1) {
                        Value lhs = eng.eval_pm(x, y, 1);
                        Value rhs = eng.eval_expr(*entry.boundary.t1, x, y);
                        if (!value_eq(lhs, rhs))
                            record(rep.boundary, "boundary", pt, "t=1",
                                   value_str(lhs, entry) + " vs expected " + value_str(rhs, entry));
                    }
                }
            for (const Rat& s : ticks)
                for (const Rat& t : ticks) {
                    std::array<std::array<Rat, 2>, 4> side_pts = {
                        {{s, Rat(0)}, {Rat(0), s}, {Rat(1), s}, {s, Rat(1)}}};
                    for (const auto& sp : side_pts) {
                        Value at_t = eng.eval_pm(sp[0], sp[1], t);
                        Value at_0 = eng.eval_pm(sp[0], sp[1], 0);
                        if (!value_eq(at_t, at_0))
                            record(rep.boundary, "boundary", point_str(sp[0], sp[1], t, 3), "side",
                                   "side not constant in t: " + value_str(at_t, entry) + " vs " +
                                       value_str(at_0, entry));
                    }
                }
        }
        for (int side = 0; side < 4; ++side) {
            if (!entry.boundary.sides[side]) continue;
            const PathRef& ref = *entry.boundary.sides[side];
            for (const Rat& s : ticks) {
                Rat px = 0, py = 0, param = 0;
                switch (side) {
                    case 0: px = s; py = 0; param = s; break;
                    case 1: px = 0; py = s; param = s; break;
                    case 2: px = 1; py = s; param = 1 - s; break;
                    default: px = s; py = 1; param = 1 - s; break;
                }
                Value lhs = eng.eval_pm(px, py, 0);
                Value rhs = eng.eval_pathref(ref, param);
                if (!value_eq(lhs, rhs))
                    record(rep.boundary, "boundary", point_str(px, py, 0, entry.nvars),
                           "side " + std::to_string(side),
                           value_str(lhs, entry) + " vs expected " + value_str(rhs, entry));
            }
        }
    }
    return rep;
}

std::vector<AuditReport> audit_all(const std::vector<int>& grids) {
    std::vector<AuditReport> out;
    for (const auto& e : formula_catalog()) out.push_back(audit_entry(e, grids));
    return out;
}

const AuditEntry& catalog_entry(const std::string& name) {
    for (const auto& e : formula_catalog())
        if (e.name == name) return e;
    throw std::runtime_error("unknown formula catalog entry: " + name);
}

}  // namespace dgv
