#pragma once

#include "dgv/category.hpp"
#include "dgv/dg.hpp"
#include "dgv/group.hpp"

#include <string>
#include <vector>

namespace dgv {

DoubleGroupoid build_disc(const std::vector<std::string>& objects);
DoubleGroupoid build_ab(const GroupTable& a);          // abelian group, one object
DoubleGroupoid build_deloop(const GroupTable& g);      // squares are I^v g only
DoubleGroupoid build_pair(const std::vector<std::string>& objects);
DoubleGroupoid build_tensor(const FiniteCategory& a, const FiniteCategory& b);
DoubleGroupoid build_nofill();                         // groupoid, filling fails
DoubleGroupoid build_unitcell();                       // [1] (x) [1], a double category

// Builder expressions: "disc 2", "ab Z2", "deloop Z3", "pair 3",
// "tensor Z2 Z3", "nofill", "unitcell".
DoubleGroupoid build_catalog(const std::string& expr);

struct CatalogEntry {
    std::string name;
    DoubleGroupoid g;
};

// One instance per builder, the parameters used throughout the verification
// suites. NoFill and UnitCell are the deliberate negatives.
std::vector<CatalogEntry> standard_catalog();
// The entries satisfying the filling condition (groupoids only).
std::vector<CatalogEntry> filling_catalog();

}  // namespace dgv
