#pragma once

#include "dgv/bisimplicial.hpp"
#include "dgv/dec_wbar.hpp"
#include "dgv/dg.hpp"
#include "dgv/dg_homotopy.hpp"

#include <memory>

namespace dgv {

// Double nerve NN(G): a (p,q)-bisimplex is the q x p matrix of unit squares
// of a double functor [p](x)[q] -> G (freeness of [p](x)[q] on its bigraph
// makes the matrix faithful); for p = 0 or q = 0 the cells degenerate to
// morphism strings, and (0,0)-cells are objects. Horizontal operators delete
// or compose grid columns, vertical ones act on rows.
class NNView : public BisimplicialSetView {
public:
    explicit NNView(DoubleGroupoid g, int P = 6, int Q = 6);
    std::pair<int, int> max_bidegree() const override { return {P_, Q_}; }
    const DoubleGroupoid& dg() const { return g_; }

    // Interpret a cell: exactly one of these is used per shape.
    struct CellData {
        int obj = -1;
        std::vector<int> hstring, vstring;
        std::vector<std::vector<int>> grid;  // grid[r][j], 1-based semantics
    };
    CellData parse(int p, int q, const std::string& k) const;
    std::string unparse(int p, int q, const CellData& d) const;

    // Derived square F^{r,s}_{i,j} of the induced double functor, evaluated by
    // composing unit squares (with identity squares on degenerate spans).
    // Requires i < j and r < s; the other derived data are edges/objects.
    int derived_square(const CellData& d, int i, int j, int r, int s) const;

protected:
    std::vector<std::string> enumerate_cell(int p, int q) override;
    std::string face_h_key(int p, int q, int i, const std::string& k) override;
    std::string face_v_key(int p, int q, int j, const std::string& k) override;
    std::string deg_h_key(int p, int q, int i, const std::string& k) override;
    std::string deg_v_key(int p, int q, int j, const std::string& k) override;

private:
    DoubleGroupoid g_;
    int P_, Q_;
    std::unordered_map<std::string, int> obj_ix_, h_ix_, v_ix_, s_ix_;
};

std::shared_ptr<NNView> nn(const DoubleGroupoid& g, int P = 6, int Q = 6);

// Cell map of NN applied to a double functor; checked to be bisimplicial by
// the property tests.
int nn_map_cell(NNView& src, NNView& tgt, const DoubleFunctor& f, int p, int q, int cell);

// Theorem 5.1: (i) double groupoid with filling, (ii) NN G satisfies the
// extension condition at (3,3), (iii) diag NN G is Kan up to n = 3.
struct TriReport {
    bool i = false, ii = false, iii = false;
    bool agree() const { return i == ii && ii == iii; }
    std::string witness_i, witness_ii, witness_iii;
    std::map<std::pair<int, int>, std::pair<long, long>> horn11_multiplicity;
};

TriReport theorem_51_suite(const DoubleGroupoid& g);

// Lemma 5.2: unique horn fillers of diag NN G above dimension 2; exhaustive
// at n = 3, seeded sampling at n = 4 (small structures only).
bool unique_filler_check(const DoubleGroupoid& g, int n, std::string* detail = nullptr);

// Theorem 5.3: pi_i(G, a) vs pi_i(diag NN G, a) for i = 0, 1, 2 at every base
// object, with the explicit comparison map Phi([alpha]) = [tv a, sh a].
struct IsoReport {
    bool ok = true;
    std::string detail;
};

IsoReport theorem_53_suite(const DoubleGroupoid& g);

}  // namespace dgv
