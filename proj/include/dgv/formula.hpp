#pragma once

#include "dgv/rational.hpp"

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dgv {

// ---------------------------------------------------------------------------
// Audit data model: piecewise maps over I^2 or I^2 x I with exact rational
// region predicates and argument expressions, plus the boundary rewrite data
// needed to compare branches. Two symbol families:
//   - square family: square symbols alpha: I^2 -> X with four edge paths
//     (bottom u, left v, right u', top v'), rewritten on the boundary of I^2
//     to path values and then to endpoint classes;
//   - barycentric family: simplex symbols applied to barycentric tuples,
//     rewritten along declared face relations (sigma d^i = tau w).

struct RegionOut {
    enum class Kind { square, path, simplex } kind;
    int sym = -1;
    std::vector<RatFun> args;  // 2 args (square), 1 (path), dim+1 (simplex)
};

struct Region {
    std::vector<Poly> ge0;  // conjunction p(x,y,t) >= 0
    RegionOut out;
};

struct SquareSym {
    std::string name;
    int bottom, left, right, top;  // path ids
};

struct BarySym {
    std::string name;
    int dim;
};

// sigma(q) with q[face] == 0 rewrites to target(grouped sums of the remaining
// coordinates); an empty group contributes a zero coordinate.
struct BaryRelation {
    int sym, face, target;
    std::vector<std::vector<int>> groups;
};

// Reference to a path: either a named path symbol or a 1-simplex face of a
// barycentric symbol (value at s is base applied along word at (1-s, s)).
struct PathRef {
    int path = -1;
    int bsym = -1;
    std::vector<int> word;  // monotone vertex images
};

// Expression trees for prescribed boundary values (composites of catalog
// templates over atoms).
struct Expr;
using ExprP = std::shared_ptr<Expr>;
struct Expr {
    enum class Op { atom_square, hcomp, vcomp, eh, ev, hinv, vinv, eta };
    Op op;
    int sym = -1;                // atom_square
    ExprP lhs, rhs;              // hcomp (left, right), vcomp (top, bottom)
    PathRef pa, pb;              // eh (v, u), ev (u', u)
    int bsym = -1;               // eta base
    std::vector<int> word;       // eta face word
};

ExprP atom(int square_sym);
ExprP hcomp(ExprP left, ExprP right);
ExprP vcomp(ExprP top, ExprP bottom);
ExprP eh(PathRef v, PathRef u);
ExprP ev(PathRef u2, PathRef u);
ExprP hinv(ExprP e);
ExprP vinv(ExprP e);
ExprP eta(int bsym, std::vector<int> word);

struct BoundarySpec {
    ExprP t0, t1;                      // 3-var entries
    std::array<std::optional<PathRef>, 4> sides;  // bottom, left, right, top (2- or 3-var)
};

struct AuditEntry {
    std::string name;
    int nvars = 2;       // 2 or 3
    bool barycentric = false;
    std::vector<std::string> paths;
    std::vector<SquareSym> squares;
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> endpoint_ids;
    std::vector<BarySym> bsyms;
    std::vector<BaryRelation> brelations;
    std::vector<Region> regions;
    BoundarySpec boundary;
    std::string note;  // transcription notes (corrections against the source)
};

// The full audit catalog (transcribed formulas as data).
const std::vector<AuditEntry>& formula_catalog();
const AuditEntry& catalog_entry(const std::string& name);

// ---------------------------------------------------------------------------
// Reports

struct AuditFailure {
    std::string stage;  // coverage | consistency | boundary | barycentric
    std::string point;
    std::string regions;
    std::string details;
};

struct AuditReport {
    std::string name;
    bool coverage = true, consistency = true, boundary = true, barycentric = true;
    long points_checked = 0;
    std::vector<AuditFailure> failures;
    std::string note;
    bool ok() const { return coverage && consistency && boundary && barycentric; }
    std::string to_text() const;
    std::string to_json() const;
};

AuditReport audit_entry(const AuditEntry& entry, const std::vector<int>& grids);
std::vector<AuditReport> audit_all(const std::vector<int>& grids);

}  // namespace dgv
