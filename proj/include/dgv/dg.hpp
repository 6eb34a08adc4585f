#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace dgv {

// Tabulated double category / double groupoid. Horizontal morphisms are drawn
// right-to-left, vertical ones bottom-to-top; a square has
//   sh = right edge (vmor), th = left edge (vmor),
//   sv = bottom edge (hmor), tv = top edge (hmor).
// Compositions compose left-of against right-of: comp_h_sq[a][b] is defined
// exactly when sh(a) == th(b), comp_v_sq[a][b] when sv(a) == tv(b) (a on top),
// and likewise for the edge categories.
struct DoubleGroupoid {
    std::vector<std::string> objects;
    struct Edge {
        std::string id;
        int src, tgt;
    };
    std::vector<Edge> hmors, vmors;
    struct Square {
        std::string id;
        int sh, th;  // vmor indices
        int sv, tv;  // hmor indices
    };
    std::vector<Square> squares;

    std::vector<std::vector<int>> comp_h_mor, comp_v_mor;  // -1 = undefined
    std::vector<std::vector<int>> comp_h_sq, comp_v_sq;
    std::vector<int> id_h_obj, id_v_obj;  // object -> hmor / vmor
    std::vector<int> id_h_sq;             // vmor -> square (I^h u)
    std::vector<int> id_v_sq;             // hmor -> square (I^v f)
    bool double_category_ok = false;

    int n_obj() const { return static_cast<int>(objects.size()); }
    int n_h() const { return static_cast<int>(hmors.size()); }
    int n_v() const { return static_cast<int>(vmors.size()); }
    int n_sq() const { return static_cast<int>(squares.size()); }

    int hsrc(int f) const { return hmors[f].src; }
    int htgt(int f) const { return hmors[f].tgt; }
    int vsrc(int u) const { return vmors[u].src; }
    int vtgt(int u) const { return vmors[u].tgt; }
    int sh(int a) const { return squares[a].sh; }
    int th(int a) const { return squares[a].th; }
    int sv(int a) const { return squares[a].sv; }
    int tv(int a) const { return squares[a].tv; }

    int ch(int f, int g) const { return comp_h_mor[f][g]; }
    int cv(int u, int w) const { return comp_v_mor[u][w]; }
    int chs(int a, int b) const { return comp_h_sq[a][b]; }
    int cvs(int a, int b) const { return comp_v_sq[a][b]; }

    int inv_h_mor(int f) const;
    int inv_v_mor(int u) const;
    int inv_h_sq(int a) const;  // inverse in the horizontal category of squares
    int inv_v_sq(int a) const;
};

bool structurally_equal(const DoubleGroupoid& a, const DoubleGroupoid& b);

struct Violation {
    std::string law;
    std::vector<std::string> witness;
    std::string detail;
};

struct ValidationReport {
    std::vector<std::string> structural_errors;
    std::vector<Violation> violations;
    bool groupoid_required = false;  // was the groupoid property part of the check
    bool is_groupoid = false;        // computed either way (when structure is sound)
    bool ok() const { return structural_errors.empty() && violations.empty(); }
    std::string to_text() const;
};

// Checks the four category structures, Axioms 1-3, and (unless the structure
// is flagged double_category_ok) the groupoid property with inverse
// uniqueness. Every violated law is reported with a witnessing tuple.
ValidationReport validate_axioms(const DoubleGroupoid& g);

struct FillingReport {
    bool ok = false;
    // witness square per matching (g, u) pair, in id order
    std::vector<std::array<int, 3>> witnesses;  // {hmor, vmor, square}
    std::vector<std::array<int, 2>> counterexamples;
    std::string to_text(const DoubleGroupoid& g) const;
};

FillingReport check_filling(const DoubleGroupoid& g);
// The three equivalent filling problems; must agree with check_filling.
bool check_filling_variants(const DoubleGroupoid& g);

struct DoubleFunctor {
    const DoubleGroupoid* src = nullptr;
    const DoubleGroupoid* tgt = nullptr;
    std::vector<int> on_obj, on_h, on_v, on_sq;

    // Throws when any structure is not preserved.
    void validate() const;
};

DoubleFunctor identity_functor(const DoubleGroupoid& g);
DoubleFunctor compose(const DoubleFunctor& g, const DoubleFunctor& f);  // g after f

}  // namespace dgv
