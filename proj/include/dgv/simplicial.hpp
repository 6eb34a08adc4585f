#pragma once

#include "dgv/category.hpp"
#include "dgv/group.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace dgv {

// Dimension-indexed family of simplex sets with face/degeneracy maps.
// Simplices carry canonical string keys; per-level ids are indices into the
// lexicographically sorted key list, so enumeration order is stable.
// Levels are memoized write-once under a lock.
class SimplicialSetView {
public:
    virtual ~SimplicialSetView() = default;
    virtual int max_level() const = 0;

    int size(int n);
    int face(int n, int i, int x);        // d_i : level n -> level n-1
    int degeneracy(int n, int i, int x);  // s_i : level n -> level n+1
    const std::string& key(int n, int x);
    int index_of(int n, const std::string& k);

protected:
    virtual std::vector<std::string> enumerate_level(int n) = 0;
    virtual std::string face_key(int n, int i, const std::string& k) = 0;
    virtual std::string degeneracy_key(int n, int i, const std::string& k) = 0;

private:
    struct Level {
        bool built = false;
        std::vector<std::string> keys;
        std::unordered_map<std::string, int> ix;
        std::vector<std::vector<int>> faces;  // [i][x], built on demand
        std::vector<std::vector<int>> degs;
    };
    Level& level(int n);
    std::recursive_mutex mu_;
    std::map<int, Level> levels_;
};

// ---------------------------------------------------------------------------

// Nerve of a finite category: n-simplices are composable strings, encoded by
// their spine "f1|f2|...|fn".
class NerveView : public SimplicialSetView {
public:
    explicit NerveView(FiniteCategory cat, int cap = 64) : cat_(std::move(cat)), cap_(cap) {}
    int max_level() const override { return cap_; }
    const FiniteCategory& category() const { return cat_; }

protected:
    std::vector<std::string> enumerate_level(int n) override;
    std::string face_key(int n, int i, const std::string& k) override;
    std::string degeneracy_key(int n, int i, const std::string& k) override;

private:
    std::vector<int> decode(const std::string& k) const;  // morphism spine
    std::string encode(const std::vector<int>& spine) const;
    FiniteCategory cat_;
    int cap_;
    mutable std::unordered_map<std::string, int> mor_ix_;
};

// Fully tabulated truncated simplicial set.
class TabulatedView : public SimplicialSetView {
public:
    struct Data {
        std::vector<std::vector<std::string>> levels;
        // d[m][i] : faces of level m+1, s[m][i] : degeneracies of level m
        std::vector<std::vector<std::map<std::string, std::string>>> d, s;
    };
    explicit TabulatedView(Data data);
    int max_level() const override { return static_cast<int>(data_.levels.size()) - 1; }

protected:
    std::vector<std::string> enumerate_level(int n) override;
    std::string face_key(int n, int i, const std::string& k) override;
    std::string degeneracy_key(int n, int i, const std::string& k) override;

private:
    Data data_;
};

inline std::shared_ptr<NerveView> standard_simplex(int n, int cap = 16) {
    return std::make_shared<NerveView>(chain_category(n), cap);
}

// ---------------------------------------------------------------------------

struct Horn {
    int n, k;
    std::vector<int> facets;  // facets[i] for i != k, facets[k] unused (-1)
};

// Streams every compatible facet tuple, built by constraint propagation in
// ascending facet index with shared-face pruning.
void for_each_horn(SimplicialSetView& L, int n, int k,
                   const std::function<void(const Horn&)>& fn);
long count_horns(SimplicialSetView& L, int n, int k);

std::vector<int> horn_fillers(SimplicialSetView& L, const Horn& horn);

struct KanReport {
    bool kan = true;
    int checked_to = 0;
    long horns = 0;
    std::optional<Horn> failure;
    std::string failure_text;
    // min/max filler count per (n, k) among all horns
    std::map<std::pair<int, int>, std::pair<long, long>> multiplicity;
};

KanReport kan_check(SimplicialSetView& L, int n_max);

// Homotopy of n-simplices with equal faces (throws when faces differ).
bool homotopic(SimplicialSetView& L, int n, int x, int y);

// Partition of level n under the homotopy relation; asserts the relation is
// an equivalence among same-face simplices before closing it.
std::vector<int> homotopy_classes(SimplicialSetView& L, int n);

struct FundamentalGroupoid {
    FiniteCategory cat;                 // objects = vertices, morphisms = classes
    std::vector<int> class_of_edge;     // level-1 simplex -> morphism
    std::vector<int> rep_of_class;
};

// Requires L Kan up to level 3 in the relevant range; composition is checked
// independent of the chosen 2-simplex.
FundamentalGroupoid fundamental_groupoid(SimplicialSetView& L);

struct PiNResult {
    int n = 0;
    std::vector<int> elements;   // level-n simplices with all faces at the base
    std::vector<int> class_of;   // per element
    std::vector<int> rep;        // least representative per class
    GroupTable table;            // trivial single-class table for n = 0
};

// Pointed components for n = 0; groups for n = 1, 2. Products are computed by
// horn filling and asserted independent of all filler and representative
// choices.
PiNResult pi_n(SimplicialSetView& L, int base_vertex, int n);

// Partition of vertices into path components.
std::vector<int> path_components(SimplicialSetView& L);

// Fact-style property drivers used by the test suites.
bool fact_p1_check(SimplicialSetView& L, int n_plus_1, int y, int yp, int k);
// d_i d_j = d_{j-1} d_i and friends on randomly sampled cells.
void verify_simplicial_identities(SimplicialSetView& L, int max_n, int samples, uint64_t seed);

}  // namespace dgv
