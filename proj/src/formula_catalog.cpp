#include "dgv/formula.hpp"

namespace dgv {

namespace {

// entry construction helpers; conditions are "polynomial >= 0" strings
struct Build {
    AuditEntry e;

    explicit Build(std::string name, int nvars, bool bary = false) {
        e.name = std::move(name);
        e.nvars = nvars;
        e.barycentric = bary;
    }
    int path(const std::string& n) {
        e.paths.push_back(n);
        return static_cast<int>(e.paths.size()) - 1;
    }
    int square(const std::string& n, int b, int l, int r, int t) {
        e.squares.push_back({n, b, l, r, t});
        return static_cast<int>(e.squares.size()) - 1;
    }
    int bsym(const std::string& n, int dim) {
        e.bsyms.push_back({n, dim});
        return static_cast<int>(e.bsyms.size()) - 1;
    }
    void rel(int sym, int face, int target, std::vector<std::vector<int>> groups) {
        e.brelations.push_back({sym, face, target, std::move(groups)});
    }
    Region& region(RegionOut::Kind kind, int sym, const std::vector<std::string>& conds,
                   const std::vector<std::string>& args) {
        Region r;
        for (const auto& c : conds) r.ge0.push_back(parse_poly(c));
        r.out.kind = kind;
        r.out.sym = sym;
        for (const auto& a : args) r.out.args.push_back(parse_ratfun(a));
        e.regions.push_back(std::move(r));
        return e.regions.back();
    }
    void sq(int sym, const std::vector<std::string>& conds, const std::string& a1,
            const std::string& a2) {
        region(RegionOut::Kind::square, sym, conds, {a1, a2});
    }
    void pa(int sym, const std::vector<std::string>& conds, const std::string& a) {
        region(RegionOut::Kind::path, sym, conds, {a});
    }
    void ba(int sym, const std::vector<std::string>& conds, const std::vector<std::string>& args) {
        region(RegionOut::Kind::simplex, sym, conds, args);
    }
    void sides(int bottom, int left, int right, int top) {
        e.boundary.sides[0] = PathRef{bottom, -1, {}};
        e.boundary.sides[1] = PathRef{left, -1, {}};
        e.boundary.sides[2] = PathRef{right, -1, {}};
        e.boundary.sides[3] = PathRef{top, -1, {}};
    }
};

PathRef pref(int path) { return PathRef{path, -1, {}}; }
PathRef bref(int bsym, std::vector<int> word) { return PathRef{-1, bsym, std::move(word)}; }
const std::vector<std::vector<int>> kId4 = {{0}, {1}, {2}, {3}};

std::vector<AuditEntry> build_catalog_entries() {
    std::vector<AuditEntry> out;

    {  // horizontal composite of squares
        Build b("comp_h", 2);
        int u = b.path("u"), v = b.path("v"), up = b.path("u'"), vp = b.path("v'");
        int up2 = b.path("u''"), vp2 = b.path("v''");
        int al = b.square("alpha", u, v, up, vp);
        int alp = b.square("alpha'", up, vp, up2, vp2);
        b.sq(al, {"y-x", "1-x-y"}, "2x", "x+y");
        b.sq(al, {"x-y", "1-x-y"}, "x+y", "2y");
        b.sq(alp, {"y-x", "x+y-1"}, "x+y-1", "2y-1");
        b.sq(alp, {"x-y", "x+y-1"}, "2x-1", "x+y-1");
        b.sides(u, v, up2, vp2);
        out.push_back(b.e);
    }
    {  // vertical composite of squares
        Build b("comp_v", 2);
        int u = b.path("u"), v = b.path("v"), up = b.path("u'"), vp = b.path("v'");
        int w = b.path("w"), wp = b.path("w'");
        int al = b.square("alpha", u, v, up, vp);
        int be = b.square("beta", v, w, vp, wp);
        b.sq(al, {"x-y", "x+y-1"}, "2x-1", "1-x+y");
        b.sq(al, {"x-y", "1-x-y"}, "x-y", "2y");
        b.sq(be, {"y-x", "x+y-1"}, "1+x-y", "2y-1");
        b.sq(be, {"y-x", "1-x-y"}, "2x", "y-x");
        b.sides(u, w, up, wp);
        out.push_back(b.e);
    }
    {  // e^h, the horizontal identity square on (v, u)
        Build b("e_h", 2);
        int u = b.path("u"), v = b.path("v");
        b.e.endpoint_ids.push_back({{v, 0}, {u, 0}});
        b.pa(v, {"y-x"}, "y-x");
        b.pa(u, {"x-y"}, "x-y");
        b.sides(u, v, u, v);
        out.push_back(b.e);
    }
    {  // e^v, the vertical identity square on (u', u)
        Build b("e_v", 2);
        int u = b.path("u"), u2 = b.path("u'");
        b.e.endpoint_ids.push_back({{u, 1}, {u2, 1}});
        b.pa(u, {"1-x-y"}, "x+y");
        b.pa(u2, {"x+y-1"}, "2-x-y");
        b.sides(u, u, u2, u2);
        out.push_back(b.e);
    }
    {  // horizontal inverse alpha^{-1h}(x,y) = alpha(1-y, 1-x)
        Build b("inv_h", 2);
        int u = b.path("u"), v = b.path("v"), up = b.path("u'"), vp = b.path("v'");
        int al = b.square("alpha", u, v, up, vp);
        b.sq(al, {}, "1-y", "1-x");
        b.sides(up, vp, u, v);
        out.push_back(b.e);
    }
    {  // vertical inverse alpha^{-1v}(x,y) = alpha(y, x)
        Build b("inv_v", 2);
        int u = b.path("u"), v = b.path("v"), up = b.path("u'"), vp = b.path("v'");
        int al = b.square("alpha", u, v, up, vp);
        b.sq(al, {}, "y", "x");
        b.sides(v, u, vp, up);
        out.push_back(b.e);
    }
    {  // associativity homotopy (alpha'' o_h alpha') o_h alpha -> alpha'' o_h (alpha' o_h alpha)
        Build b("assoc_h", 3);
        int u = b.path("u"), v = b.path("v"), up = b.path("u'"), vp = b.path("v'");
        int up2 = b.path("u''"), vp2 = b.path("v''"), up3 = b.path("u'''"), vp3 = b.path("v'''");
        int al = b.square("alpha", u, v, up, vp);
        int alp = b.square("alpha'", up, vp, up2, vp2);
        int alpp = b.square("alpha''", up2, vp2, up3, vp3);
        b.sq(al, {"y-x", "(2-t)(1-y)-(2+t)x"}, "4x/(2-t)", "((2+t)x+(2-t)y)/(2-t)");
        b.sq(al, {"x-y", "(2-t)(1-x)-(2+t)y"}, "((2-t)x+(2+t)y)/(2-t)", "4y/(2-t)");
        b.sq(alp, {"y-x", "(2+t)x-(2-t)(1-y)", "(3-t)(1-y)-(1+t)x"}, "t(1+x-y)+2(x+y-1)",
             "x+3y-2+t(1+x-y)");
        b.sq(alp, {"x-y", "(2+t)y-(2-t)(1-x)", "(3-t)(1-x)-(1+t)y"}, "3x+y-2+t(1-x+y)",
             "t(1-x+y)+2(x+y-1)");
        b.sq(alpp, {"y-x", "(1+t)x-(3-t)(1-y)"}, "(x+3y-3+t(1+x-y))/(1+t)", "(t-3+4y)/(1+t)");
        b.sq(alpp, {"x-y", "(1+t)y-(3-t)(1-x)"}, "(t-3+4x)/(1+t)", "(3x+y-3+t(1-x+y))/(1+t)");
        b.e.boundary.t0 = hcomp(hcomp(atom(alpp), atom(alp)), atom(al));
        b.e.boundary.t1 = hcomp(atom(alpp), hcomp(atom(alp), atom(al)));
        out.push_back(b.e);
    }
    {  // right identity homotopy alpha o_h e^h -> alpha
        Build b("right_identity", 3);
        int u = b.path("u"), v = b.path("v"), up = b.path("u'"), vp = b.path("v'");
        int al = b.square("alpha", u, v, up, vp);
        b.pa(v, {"y-x", "(1-t)(1+x-y)-2x"}, "y-x");
        b.pa(u, {"x-y", "(1-t)(1-x+y)-2y"}, "x-y");
        b.sq(al, {"y-x", "2x-(1-t)(1+x-y)"}, "(x+y-1+t(1+x-y))/(1+t)", "(2y+t-1)/(1+t)");
        b.sq(al, {"x-y", "2y-(1-t)(1-x+y)"}, "(2x+t-1)/(1+t)", "(x+y-1+t(1-x+y))/(1+t)");
        b.e.boundary.t0 = hcomp(atom(al), eh(pref(v), pref(u)));
        b.e.boundary.t1 = atom(al);
        b.e.note =
            "source conditions for the u-region and its alpha partner read (1+x-y)/(1-x-y); the "
            "x<->y mirrors (1-x+y) are required for coverage and consistency";
        out.push_back(b.e);
    }
    {  // inverse homotopy alpha^{-1h} o_h alpha -> e^h
        Build b("inverse_h", 3);
        int u = b.path("u"), v = b.path("v"), up = b.path("u'"), vp = b.path("v'");
        int al = b.square("alpha", u, v, up, vp);
        b.sq(al, {"y-x", "1-x-y"}, "2x(1-t)", "(1-2t)x+y");
        b.sq(al, {"x-y", "1-x-y"}, "x+(1-2t)y", "2y(1-t)");
        b.sq(al, {"y-x", "x+y-1"}, "2(ty-t-y+1)", "2(ty-t+1)-x-y");
        b.sq(al, {"x-y", "x+y-1"}, "(2x-2)t+2-x-y", "(2x-2)t+2-2x");
        b.e.boundary.t0 = hcomp(hinv(atom(al)), atom(al));
        b.e.boundary.t1 = eh(pref(v), pref(u));
        out.push_back(b.e);
    }
    {  // Axiom 1(iii) homotopy e^h(u,u) -> e^v(u,u)
        Build b("axiom1_iii", 3);
        int u = b.path("u");
        b.pa(u, {"y-x", "(1-t)(1-y)-(1+t)x"}, "y-x");
        b.pa(u, {"y-x", "1-x-y", "(1+t)x-(1-t)(1-y)"}, "2y-1+t(1+x-y)");
        b.pa(u, {"x-y", "(1-t)(1-x)-(1+t)y"}, "x-y");
        b.pa(u, {"x-y", "1-x-y", "(1+t)y-(1-t)(1-x)"}, "2x-1+t(1-x+y)");
        b.pa(u, {"y-x", "x+y-1", "(1+t)(1-y)-(1-t)x"}, "1-2x+t(1+x-y)");
        b.pa(u, {"y-x", "x+y-1", "(1-t)x-(1+t)(1-y)"}, "y-x");
        b.pa(u, {"x-y", "x+y-1", "(1+t)(1-x)-(1-t)y"}, "1-2y+t(1-x+y)");
        b.pa(u, {"x-y", "(1-t)y-(1+t)(1-x)"}, "x-y");
        b.e.boundary.t0 = eh(pref(u), pref(u));
        b.e.boundary.t1 = ev(pref(u), pref(u));
        out.push_back(b.e);
    }
    {  // Axiom 2(iii) homotopy e^v(w,v) o_h e^v(v,u) -> e^v(w,u)
        Build b("axiom2_iii", 3);
        int u = b.path("u"), v = b.path("v"), w = b.path("w");
        b.e.endpoint_ids.push_back({{u, 1}, {v, 1}});
        b.e.endpoint_ids.push_back({{v, 1}, {w, 1}});
        b.pa(u, {"y-x", "(1+t)(1-y)-(3-t)x"}, "y-x+4x/(1+t)");
        b.pa(v, {"y-x", "1-x-y", "(3-t)x-(1+t)(1-y)"}, "2-3x-y+t(1+x-y)");
        b.pa(u, {"x-y", "(1+t)(1-x)-(3-t)y"}, "x-y+4y/(1+t)");
        b.pa(v, {"x-y", "1-x-y", "(3-t)y-(1+t)(1-x)"}, "2-x-3y+t(1-x+y)");
        b.pa(v, {"y-x", "x+y-1", "(3-t)(1-y)-(1+t)x"}, "x+3y-2+t(1+x-y)");
        b.pa(w, {"y-x", "(1+t)x-(3-t)(1-y)"}, "y-x+4(1-y)/(1+t)");
        b.pa(v, {"x-y", "x+y-1", "(3-t)(1-x)-(1+t)y"}, "3x+y-2+t(1-x+y)");
        b.pa(w, {"x-y", "(1+t)y-(3-t)(1-x)"}, "x-y+4(1-x)/(1+t)");
        b.e.boundary.t0 = hcomp(ev(pref(w), pref(v)), ev(pref(v), pref(u)));
        b.e.boundary.t1 = ev(pref(w), pref(u));
        b.e.note = "the w-region argument reads 4(y-1)/(1+t) in the source; 4(1-y)/(1+t) is "
                   "required for the shared boundary with the adjacent v-region";
        out.push_back(b.e);
    }
    {  // interchange homotopy, the 20-region map
        Build b("interchange", 3);
        int u = b.path("u"), v = b.path("v"), up = b.path("u'"), vp = b.path("v'");
        int u2 = b.path("u''"), v2 = b.path("v''");
        int w = b.path("w"), wp = b.path("w'"), w2 = b.path("w''");
        int al = b.square("alpha", u, v, up, vp);
        int be = b.square("beta", v, w, vp, wp);
        int ga = b.square("gamma", up, vp, u2, v2);
        int de = b.square("delta", vp, wp, v2, w2);
        b.sq(al, {"1-x+2ty-5y", "x-3y-2ty"}, "x+y-2ty", "4y");
        b.sq(al, {"2+t-t^2-6x+4tx+2y-8ty", "(3+2t)y-x", "x-y"}, "2(x-y)/(1+t)",
             "2(x-tx+y+3ty)/(2+t-t^2)");
        b.sq(al, {"t^2+t(4x-3)-2(x+y-1)", "t^2-2x+6y-t(4x+8y-3)", "t^2+6x+t(8y-4x-1)-2(1+y)"},
             "(t^2-2t+2x-2y+4ty)/(1-2t+2t^2)", "(3t^2-t(1+4x)+2(x+y))/(2-4t+4t^2)");
        b.sq(al, {"1-x-y", "x-1-(2t-5)y", "2x-t^2-6y-t(3-4x-8y)"}, "(t-2(x+y))/(t-2)",
             "(2t(x+3y-1)-8y)/(t^2-t-2)");
        b.pa(vp, {"x-y", "1-x-y", "2(x+y-1)-t^2-t(4x-3)", "3-t-4x", "4x+t-2"}, "3-t-4x");
        b.sq(ga, {"5x+y-5-2t(x-1)", "2t(x-1)+3x-y-2"}, "4x-3", "x+y-1-2t(x-1)");
        b.sq(ga, {"x+y-1", "5+2t(x-1)-5x-y", "9t+6x-4-t^2-8tx-2y-4ty"},
             "(6+t^2-8x+t(6x+2y-7))/(t^2-t-2)", "2(x+y-1)/(2-t)");
        b.sq(ga, {"t+t^2+2(x+y-1)-4ty", "t^2+2(1+x-3y)-t(8x-4y-3)", "4+t^2-6x+2y-t(9-8x-4y)"},
             "(t+t^2-4ty+2(x+y-1))/(2-4t+4t^2)", "(1+t^2+4t(x-1)-2x+2y)/(1-2t+2t^2)");
        b.sq(ga, {"8tx+6y-4ty-2-3t-t^2-2x", "x-y", "2+y-2t(x-1)-3x"},
             "(t^2-2(x+y-1)+t(3-6x+2y))/(t^2-t-2)", "(1+t-2x+2y)/(1+t)");
        b.pa(vp, {"x-y", "x+y-1", "2+4ty-t-t^2-2x-2y", "4y-1-t", "2+t-4y"}, "4y-1-t");
        b.sq(be, {"1+2tx-y-5x", "y-3x-2tx"}, "4x", "x+y-2tx");
        b.sq(be, {"1-x-y", "y+(5-2t)x-1", "2y-t(3-4y-8x)-6x-t^2"}, "(2t(y+3x-1)-8x)/(t^2-t-2)",
             "(t-2(x+y))/(t-2)");
        b.sq(be, {"t^2+t(4y-3)-2(x+y-1)", "t^2+t(3-4y-8x)+6x-2y", "t^2+6y-2(1+x)-t(1+4y-8x)"},
             "(3t^2-t(1+4y)+2(x+y))/(2-4t+4t^2)", "(t^2-2t+2y-2x+4tx)/(1-2t+2t^2)");
        b.sq(be, {"2+t+4ty+2x-t^2-6y-8tx", "(3+2t)x-y", "y-x"}, "2(y-ty+x+3tx)/(2+t-t^2)",
             "2(y-x)/(1+t)");
        b.pa(vp, {"y-x", "1-x-y", "2(x+y-1)-t^2-t(4y-3)", "3-t-4y", "4y+t-2"}, "3-t-4y");
        b.sq(de, {"5y+x-5-2t(y-1)", "2t(y-1)+3y-x-2"}, "2t(1-y)+x+y-1", "4y-3");
        b.sq(de, {"x+y-1", "9t+6y-8ty-2x-4tx-4-t^2", "5+2t(y-1)-5y-x"}, "2(x+y-1)/(2-t)",
             "(6+t^2-8y+t(6y+2x-7))/(t^2-t-2)");
        b.sq(de, {"t+t^2-4tx-2(1-x-y)", "t^2+2(1+y-3x)-t(8y-4x-3)", "4+t^2-6y+2x-t(9-8y-4x)"},
             "(1+t^2+4t(y-1)-2y+2x)/(1-2t+2t^2)", "(t+t^2-4tx+2(x+y-1))/(2-4t+4t^2)");
        b.sq(de, {"8ty+6x-4tx-2-3t-t^2-2y", "y-x", "2-3y+x-2t(y-1)"}, "(1+t-2y+2x)/(1+t)",
             "(t^2-2(x+y-1)+t(3-6y+2x))/(t^2-2-t)");
        b.pa(vp, {"y-x", "x+y-1", "2+4tx-t-t^2-2y-2x", "4x-1-t", "2+t-4x"}, "4x-1-t");
        b.e.boundary.t0 = vcomp(hcomp(atom(de), atom(be)), hcomp(atom(ga), atom(al)));
        b.e.boundary.t1 = hcomp(vcomp(atom(de), atom(ga)), vcomp(atom(be), atom(al)));
        b.e.note = "four source misprints repaired, each pinned by its correctly-printed x<->y "
                   "mirror twin: the final middle-path value 4y-1-t -> 4x-1-t, the sign of "
                   "t(3-4y-8x) in one beta-region condition, t(8x-y-3) -> t(8x-4y-3) in one "
                   "gamma-region condition, t(3-4y) -> t(4y-3) in one middle-path condition; "
                   "the middle-path regions also carry their argument-range bounds, present in "
                   "the source figure but not its inequality lists";
        out.push_back(b.e);
    }

    // ---- barycentric family ----
    {
        Build b("eta", 2, true);
        int al = b.bsym("alpha", 3);
        b.ba(al, {}, {"xy", "(1-x)(1-y)", "(1-x)y", "x(1-y)"});
        b.e.boundary.sides[0] = bref(al, {1, 3});
        b.e.boundary.sides[1] = bref(al, {1, 2});
        b.e.boundary.sides[2] = bref(al, {0, 3});
        b.e.boundary.sides[3] = bref(al, {0, 2});
        out.push_back(b.e);
    }
    {
        Build b("F1", 3, true);
        int be = b.bsym("beta", 4);
        int a1 = b.bsym("alpha1", 3);
        int a = b.bsym("alpha", 3);
        b.rel(be, 0, a1, {{}, {0, 1}, {2}, {3}});  // beta d0 = alpha1 d0 s0
        b.rel(be, 1, a1, kId4);
        b.rel(be, 2, a, kId4);
        b.ba(be, {}, {"xy", "t(1-x)(1-y)", "(1-t)(1-x)(1-y)", "(1-x)y", "x(1-y)"});
        b.e.boundary.t0 = eta(a1, {0, 1, 2, 3});
        b.e.boundary.t1 = eta(a, {0, 1, 2, 3});
        out.push_back(b.e);
    }
    {
        Build b("F2", 3, true);
        int ga = b.bsym("gamma", 4);
        int a2 = b.bsym("alpha2", 3);
        int a = b.bsym("alpha", 3);
        b.rel(ga, 2, a2, {{0}, {1}, {}, {2, 3}});  // gamma d2 = alpha2 d2 s2
        b.rel(ga, 3, a, kId4);
        b.rel(ga, 4, a2, kId4);
        b.ba(ga, {}, {"xy", "(1-x)(1-y)", "(1-x)y", "tx(1-y)", "(1-t)x(1-y)"});
        b.e.boundary.t0 = eta(a, {0, 1, 2, 3});
        b.e.boundary.t1 = eta(a2, {0, 1, 2, 3});
        out.push_back(b.e);
    }
    {
        Build b("H1", 3, true);
        int om = b.bsym("omega", 4);
        b.ba(om, {"1-x-y", "y-x"},
             {"(1-t)xy", "2tx(x+y)", "(1-x)(1-y)+tx(2x-2+y)", "y(1-x)+tx(1-2x-y)",
              "x(1-y)+tx(1-2x-y)"});
        b.ba(om, {"1-x-y", "x-y"},
             {"(1-t)xy", "2ty(x+y)", "(1-x)(1-y)+ty(2y-2+x)", "y(1-x)+ty(1-x-2y)",
              "x(1-y)+ty(1-x-2y)"});
        b.ba(om, {"x+y-1", "y-x"},
             {"xy+t(1-y)(1-x-2y)", "2t(1-y)(2-x-y)", "(1-t)(1-x)(1-y)", "y(1-x)-t(1-y)(2-x-2y)",
              "(1-y)(x-t(2-x-2y))"});
        b.ba(om, {"x+y-1", "x-y"},
             {"xy+t(1-x)(1-2x-y)", "2t(1-x)(2-x-y)", "(1-t)(1-x)(1-y)", "(1-x)(y-t(2-2x-y))",
              "x(1-y)-t(1-x)(2-2x-y)"});
        b.e.boundary.t0 = eta(om, {0, 2, 3, 4});
        b.e.boundary.t1 = hcomp(eta(om, {0, 1, 3, 4}), eta(om, {1, 2, 3, 4}));
        out.push_back(b.e);
    }
    {
        Build b("H2", 3, true);
        int om = b.bsym("omega", 4);
        b.ba(om, {"x+y-1", "x-y"},
             {"t(1-x)(2x-1-y)+xy", "(1-x)(1-y)+t(1-x)(2x-1-y)", "(1-t)(1-x)y", "2t(1-x)(1-x+y)",
              "x(1-y)+t(1-x)(y-2x)"});
        b.ba(om, {"1-x-y", "x-y"},
             {"xy+ty(x-2y)", "(1-x)(1-y)+ty(x-2y)", "(1-t)(1-x)y", "2ty(1-x+y)",
              "x(1-y)+ty(2y-1-x)"});
        b.ba(om, {"x+y-1", "y-x"},
             {"xy+t(1-y)(2y-x-1)", "(1-x)(1-y)+t(1-y)(2y-1-x)", "(1-x)y+t(1-y)(x-2y)",
              "2t(1-y)(1+x-y)", "(1-t)x(1-y)"});
        b.ba(om, {"1-x-y", "y-x"},
             {"xy+tx(y-2x)", "(1-x)(1-y)+tx(y-2x)", "y(1-x)+tx(2x-1-y)", "2tx(1+x-y)",
              "(1-t)x(1-y)"});
        b.e.boundary.t0 = eta(om, {0, 1, 2, 4});
        b.e.boundary.t1 = vcomp(eta(om, {0, 1, 2, 3}), eta(om, {0, 1, 3, 4}));
        out.push_back(b.e);
    }
    {
        Build b("H3", 3, true);
        int g = b.bsym("g", 2);
        b.ba(g, {"1-x-y"}, {"(1-t)xy", "(1-x)(1-y)-txy", "x+y+2xy(t-1)"});
        b.ba(g, {"x+y-1"},
             {"xy+t(x+y-1-xy)", "(1-t)(1-x)(1-y)", "x+y-2xy+2t(1-x)(1-y)"});
        b.e.boundary.t0 = eta(g, {0, 1, 2, 2});
        b.e.boundary.t1 = ev(bref(g, {0, 2}), bref(g, {1, 2}));
        out.push_back(b.e);
    }
    {
        Build b("H4", 3, true);
        int g = b.bsym("g", 2);
        b.ba(g, {"y-x"}, {"1-x-y+2xy+2tx(1-y)", "(1-x)y+tx(y-1)", "(1-t)x(1-y)"});
        b.ba(g, {"x-y"}, {"1-x-y+2xy+2ty(1-x)", "(1-t)(1-x)y", "x(1-y)+ty(x-1)"});
        b.e.boundary.t0 = eta(g, {0, 0, 1, 2});
        b.e.boundary.t1 = eh(bref(g, {0, 1}), bref(g, {0, 2}));
        out.push_back(b.e);
    }
    return out;
}

}  // namespace

const std::vector<AuditEntry>& formula_catalog() {
    static const std::vector<AuditEntry> catalog = build_catalog_entries();
    return catalog;
}

}  // namespace dgv
