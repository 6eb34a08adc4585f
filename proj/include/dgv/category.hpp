#pragma once

#include "dgv/group.hpp"

#include <string>
#include <vector>

namespace dgv {

// Finite category with a full (partial) composition table. Composition is
// comp(f, g) = f after g, defined when src(f) == tgt(g).
struct FiniteCategory {
    std::vector<std::string> objects;
    struct Mor {
        std::string name;
        int src, tgt;
    };
    std::vector<Mor> mors;
    std::vector<int> id_of_obj;           // object -> identity morphism
    std::vector<std::vector<int>> comp;   // comp[f][g], -1 when undefined

    int n_obj() const { return static_cast<int>(objects.size()); }
    int n_mor() const { return static_cast<int>(mors.size()); }
    int src(int f) const { return mors[f].src; }
    int tgt(int f) const { return mors[f].tgt; }
    int compose(int f, int g) const { return comp[f][g]; }

    void validate() const;        // category laws
    bool is_groupoid() const;     // every morphism invertible
    int inverse(int f) const;     // -1 when none
};

FiniteCategory discrete_category(const std::vector<std::string>& objects);
FiniteCategory group_as_category(const GroupTable& g);
FiniteCategory pair_groupoid(const std::vector<std::string>& objects);
// The ordinal [n]: one arrow j -> i for each i <= j.
FiniteCategory chain_category(int n);

}  // namespace dgv
