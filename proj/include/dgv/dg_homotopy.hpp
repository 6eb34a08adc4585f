#pragma once

#include "dgv/dg.hpp"
#include "dgv/group.hpp"

#include <map>
#include <string>
#include <vector>

namespace dgv {

// Refuses double categories and structures without the filling condition;
// the homotopy constructions assume both.
void require_filling(const DoubleGroupoid& g);

// Partition of the objects under connectedness. The three equivalent
// characterizations (pair (g,u) / square / pair (w,f)) are asserted to agree.
std::vector<std::vector<int>> pi0(const DoubleGroupoid& g);
int pi0_class_of(const std::vector<std::vector<int>>& classes, int obj);

struct Pi1Element {
    int h, v;  // pair (g, u) with thg = a = svu and shg = tvu
};

struct Pi1Result {
    std::vector<Pi1Element> reps;  // lexicographically least per class
    GroupTable table;
    int class_of(const DoubleGroupoid& g, int hm, int vm) const;
    std::vector<std::vector<int>> members;  // all (h,v) per class, as indices into all_elems
    std::vector<Pi1Element> all_elems;
};

// pi1 at a base object; the product is asserted independent of every
// admissible choice of the connecting square.
Pi1Result pi1(const DoubleGroupoid& g, int base);

struct Pi2Result {
    std::vector<int> squares;  // identity-boundary squares at the base, id order
    GroupTable table;
    int class_of(int square) const;  // classes are singletons
};

Pi2Result pi2(const DoubleGroupoid& g, int base);

struct PiReport {
    std::vector<std::vector<int>> pi0_classes;
    std::map<int, GroupTable> pi1_at;  // per base object
    std::map<int, GroupTable> pi2_at;
    std::string to_json(const DoubleGroupoid& g) const;
};

PiReport pi_report(const DoubleGroupoid& g);

struct WeakEqReport {
    bool pi0_bijective = false;
    bool pi1_iso = false;
    bool pi2_iso = false;
    bool ok() const { return pi0_bijective && pi1_iso && pi2_iso; }
    std::string detail;
};

WeakEqReport weak_equivalence(const DoubleFunctor& f);

}  // namespace dgv
