#pragma once

#include "dgv/bisimplicial.hpp"

#include <memory>

namespace dgv {

// Total decalage: Dec L at bidegree (p,q) is L_{p+1+q}; horizontal operators
// act at indices 0..p, vertical ones at p+1..p+1+q.
class DecView : public BisimplicialSetView {
public:
    DecView(std::shared_ptr<SimplicialSetView> l, int P, int Q) : l_(std::move(l)), P_(P), Q_(Q) {}
    std::pair<int, int> max_bidegree() const override { return {P_, Q_}; }
    SimplicialSetView& base() { return *l_; }

protected:
    std::vector<std::string> enumerate_cell(int p, int q) override;
    std::string face_h_key(int p, int q, int i, const std::string& k) override;
    std::string face_v_key(int p, int q, int j, const std::string& k) override;
    std::string deg_h_key(int p, int q, int i, const std::string& k) override;
    std::string deg_v_key(int p, int q, int j, const std::string& k) override;

private:
    std::shared_ptr<SimplicialSetView> l_;
    int P_, Q_;
};

// diag K: level n is K_{n,n}, d_i = d^h_i d^v_i, s_i = s^h_i s^v_i.
class DiagView : public SimplicialSetView {
public:
    DiagView(std::shared_ptr<BisimplicialSetView> k, int cap) : k_(std::move(k)), cap_(cap) {}
    int max_level() const override { return cap_; }
    BisimplicialSetView& base() { return *k_; }

protected:
    std::vector<std::string> enumerate_level(int n) override;
    std::string face_key(int n, int i, const std::string& k) override;
    std::string degeneracy_key(int n, int i, const std::string& k) override;

private:
    std::shared_ptr<BisimplicialSetView> k_;
    int cap_;
};

// Codiagonal W-bar: an n-simplex is a staircase tuple (x_0,...,x_n) with
// x_p of bidegree (p, n-p) and x_p d^0_v = x_{p+1} d^{p+1}_h. The abbreviated
// face/degeneracy displays are interpreted with descending internal indices:
//   (x.) d^i : component j = x_j d^{i-j}_v (j < i), x_{j+1} d^i_h (j >= i)
//   (x.) s^i : component j = x_j s^{i-j}_v (j <= i), x_{j-1} s^i_h (j > i)
// The simplicial identities over this reading are asserted by the test suite.
class WbarView : public SimplicialSetView {
public:
    WbarView(std::shared_ptr<BisimplicialSetView> k, int cap) : k_(std::move(k)), cap_(cap) {}
    int max_level() const override { return cap_; }
    BisimplicialSetView& base() { return *k_; }

    std::vector<int> components(int n, int x);  // cell ids per bidegree (p, n-p)
    int assemble(int n, const std::vector<int>& comps);  // -1 when not a wbar simplex

protected:
    std::vector<std::string> enumerate_level(int n) override;
    std::string face_key(int n, int i, const std::string& k) override;
    std::string degeneracy_key(int n, int i, const std::string& k) override;

private:
    std::vector<std::string> decode(const std::string& k) const;
    std::shared_ptr<BisimplicialSetView> k_;
    int cap_;
};

// Horizontal restriction to the first new_p+1 indices (drops top indices).
int restrict_h(BisimplicialSetView& K, int p, int q, int x, int new_p);
// Vertical restriction to the last q-drop+1 indices (drops lowest indices).
int restrict_v_low(BisimplicialSetView& K, int p, int q, int x, int drop);

// Alexander-Whitney comparison diag K -> wbar K: component p of the image of
// z in K_{n,n} keeps the first p+1 horizontal and last n-p+1 vertical indices.
// Returns the wbar index; throws if the tuple violates the staircase
// compatibility (which would be an implementation error).
int phi_star(BisimplicialSetView& K, DiagView& dg, WbarView& wb, int n, int z);
// Asserts phi_star commutes with faces and degeneracies up to level n_max.
void check_phi_star_simplicial(BisimplicialSetView& K, DiagView& dg, WbarView& wb, int n_max);

// unit u : L -> wbar(dec L), u(y) = (y s^0, ..., y s^n)
int adjunction_unit(SimplicialSetView& L, DecView& dec, WbarView& wb, int n, int y);
// counit v : dec(wbar K) -> K. The staircase algebra forces the component
// formula x_{p+1} d^{p+1}_h (the triangle identities pin it down; asserted in
// the test suite).
int adjunction_counit(BisimplicialSetView& K, WbarView& wb, int p, int q, int cell);

void check_adjunction_unit_simplicial(SimplicialSetView& L, DecView& dec, WbarView& wb, int n_max);
void check_adjunction_counit_bisimplicial(BisimplicialSetView& K, WbarView& wb, int P, int Q);
// Dec L -> Dec wbar Dec L -> Dec L = id on all cells (p,q) <= (P,Q);
// wb_dec is wbar(dec).
void check_triangle_1(SimplicialSetView& L, DecView& dec, WbarView& wb_dec, int P, int Q);
// wbar K -> wbar Dec wbar K -> wbar K = id on all levels <= n_max.
void check_triangle_2(BisimplicialSetView& K, WbarView& wb, int n_max);

}  // namespace dgv
