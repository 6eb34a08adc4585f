#pragma once

#include "dgv/simplicial.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace dgv {

// Bidegree-indexed analog of SimplicialSetView with horizontal and vertical
// operators. Same canonical-key and memoization contract.
class BisimplicialSetView {
public:
    virtual ~BisimplicialSetView() = default;
    virtual std::pair<int, int> max_bidegree() const = 0;

    int size(int p, int q);
    int face_h(int p, int q, int i, int x);
    int face_v(int p, int q, int j, int x);
    int deg_h(int p, int q, int i, int x);
    int deg_v(int p, int q, int j, int x);
    const std::string& key(int p, int q, int x);
    int index_of(int p, int q, const std::string& k);

protected:
    virtual std::vector<std::string> enumerate_cell(int p, int q) = 0;
    virtual std::string face_h_key(int p, int q, int i, const std::string& k) = 0;
    virtual std::string face_v_key(int p, int q, int j, const std::string& k) = 0;
    virtual std::string deg_h_key(int p, int q, int i, const std::string& k) = 0;
    virtual std::string deg_v_key(int p, int q, int j, const std::string& k) = 0;

private:
    struct Cell {
        bool built = false;
        std::vector<std::string> keys;
        std::unordered_map<std::string, int> ix;
        std::vector<std::vector<int>> fh, fv, dh, dv;
    };
    Cell& cell(int p, int q);
    std::recursive_mutex mu_;
    std::map<std::pair<int, int>, Cell> cells_;

    friend class RowComplex;
    friend class ColumnComplex;
};

// (X (x) Y)_{p,q} = X_p x Y_q
class TensorView : public BisimplicialSetView {
public:
    TensorView(std::shared_ptr<SimplicialSetView> x, std::shared_ptr<SimplicialSetView> y)
        : x_(std::move(x)), y_(std::move(y)) {}
    std::pair<int, int> max_bidegree() const override {
        return {x_->max_level(), y_->max_level()};
    }

protected:
    std::vector<std::string> enumerate_cell(int p, int q) override;
    std::string face_h_key(int p, int q, int i, const std::string& k) override;
    std::string face_v_key(int p, int q, int j, const std::string& k) override;
    std::string deg_h_key(int p, int q, int i, const std::string& k) override;
    std::string deg_v_key(int p, int q, int j, const std::string& k) override;

private:
    std::pair<std::string, std::string> split(const std::string& k) const;
    std::shared_ptr<SimplicialSetView> x_, y_;
};

// Fully tabulated truncated bisimplicial set.
class TabulatedBisView : public BisimplicialSetView {
public:
    struct Data {
        // levels[p][q] = cell keys; operator maps keyed like the simplicial format
        std::vector<std::vector<std::vector<std::string>>> levels;
        std::map<std::string, std::map<std::string, std::string>> dh, sh, dv, sv;
        // op maps are keyed "p,q,i" -> {cell -> image}
        int P = 0, Q = 0;
    };
    explicit TabulatedBisView(Data d) : data_(std::move(d)) {}
    std::pair<int, int> max_bidegree() const override { return {data_.P, data_.Q}; }

protected:
    std::vector<std::string> enumerate_cell(int p, int q) override;
    std::string face_h_key(int p, int q, int i, const std::string& k) override;
    std::string face_v_key(int p, int q, int j, const std::string& k) override;
    std::string deg_h_key(int p, int q, int i, const std::string& k) override;
    std::string deg_v_key(int p, int q, int j, const std::string& k) override;

private:
    std::string lookup(const std::map<std::string, std::map<std::string, std::string>>& m,
                       int p, int q, int i, const std::string& k, const char* what);
    Data data_;
};

// K_{*,q} with horizontal operators (the paper's horizontal complexes).
class ColumnComplex : public SimplicialSetView {
public:
    ColumnComplex(BisimplicialSetView& k, int q, int cap) : k_(k), q_(q), cap_(cap) {}
    int max_level() const override { return cap_; }

protected:
    std::vector<std::string> enumerate_level(int n) override;
    std::string face_key(int n, int i, const std::string& k) override;
    std::string degeneracy_key(int n, int i, const std::string& k) override;

private:
    BisimplicialSetView& k_;
    int q_, cap_;
};

// K_{p,*} with vertical operators.
class RowComplex : public SimplicialSetView {
public:
    RowComplex(BisimplicialSetView& k, int p, int cap) : k_(k), p_(p), cap_(cap) {}
    int max_level() const override { return cap_; }

protected:
    std::vector<std::string> enumerate_level(int n) override;
    std::string face_key(int n, int i, const std::string& k) override;
    std::string degeneracy_key(int n, int i, const std::string& k) override;

private:
    BisimplicialSetView& k_;
    int p_, cap_;
};

// ---------------------------------------------------------------------------

struct BiHorn {
    int p, q, k, l;
    std::vector<int> hfacets;  // index i != k, bidegree (p-1, q)
    std::vector<int> vfacets;  // index j != l, bidegree (p, q-1)
};

void for_each_bihorn(BisimplicialSetView& K, int p, int q, int k, int l,
                     const std::function<void(const BiHorn&)>& fn);
std::vector<int> bihorn_fillers(BisimplicialSetView& K, const BiHorn& horn);

struct ExtensionReport {
    bool rows_kan = true, cols_kan = true, horns_fill = true;
    bool ok() const { return rows_kan && cols_kan && horns_fill; }
    std::string failure;                  // localized description
    long bihorns = 0;
    std::map<std::pair<int, int>, std::pair<long, long>> multiplicity_11;  // per (k,l)
};

// Rows/columns Kan up to the truncation plus every mixed bihorn filled.
ExtensionReport extension_check(BisimplicialSetView& K, int P, int Q);

enum class Direction { horizontal, vertical };

bool dir_homotopic(BisimplicialSetView& K, int p, int q, int x, int xp, Direction dir);

// Homotopy class partitions of a full cell, with the bihomotopy relation
// checked to be a symmetric, transitive equivalence (Lemmas 2.4/2.5).
struct CellClasses {
    std::vector<int> h, v, bi;
    int n_h = 0, n_v = 0, n_bi = 0;
};
CellClasses cell_classes(BisimplicialSetView& K, int p, int q);

bool bihomotopic(BisimplicialSetView& K, int p, int q, int x, int xp);

// The four well-defined mappings on classes ([[x]] -> [x d^i_h]_v,
// [[x]] -> [x d^j_v]_h, [x]_h -> [[x s^j_v]], [x]_v -> [[x s^i_h]]);
// throws if any depends on the representative, exhaustively over the cell.
void check_class_face_maps(BisimplicialSetView& K, int p, int q);

void verify_bisimplicial_identities(BisimplicialSetView& K, int max_p, int max_q, int samples,
                                    uint64_t seed);

}  // namespace dgv
