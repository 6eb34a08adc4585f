#include "dgv/formula.hpp"

#include <doctest.h>

using namespace dgv;

TEST_CASE("catalog is complete") {
    const auto& cat = formula_catalog();
    CHECK(cat.size() == 19);
    for (const char* n :
         {"comp_h", "comp_v", "e_h", "e_v", "inv_h", "inv_v", "assoc_h", "right_identity",
          "inverse_h", "axiom1_iii", "axiom2_iii", "interchange", "eta", "F1", "F2", "H1", "H2",
          "H3", "H4"})
        CHECK_NOTHROW(catalog_entry(n));
}

TEST_CASE("small entries pass on a fast grid") {
    std::vector<int> grids{8};
    for (const char* n : {"e_h", "e_v", "comp_h", "comp_v", "inv_h", "inv_v", "eta", "H3", "H4"}) {
        AuditReport rep = audit_entry(catalog_entry(n), grids);
        CAPTURE(n);
        CAPTURE(rep.to_text());
        CHECK(rep.ok());
    }
}

TEST_CASE("homotopy entries pass on a fast grid") {
    std::vector<int> grids{8};
    for (const char* n : {"right_identity", "inverse_h", "axiom1_iii", "axiom2_iii", "F1", "F2",
                          "H1", "H2"}) {
        AuditReport rep = audit_entry(catalog_entry(n), grids);
        CAPTURE(n);
        CAPTURE(rep.to_text());
        CHECK(rep.ok());
    }
}

TEST_CASE("associativity and interchange on a small grid") {
    std::vector<int> grids{6};
    for (const char* n : {"assoc_h", "interchange"}) {
        AuditReport rep = audit_entry(catalog_entry(n), grids);
        CAPTURE(n);
        CAPTURE(rep.to_text());
        CHECK(rep.ok());
    }
}

TEST_CASE("a broken formula is localized, not silently passed") {
    AuditEntry bad = catalog_entry("e_h");
    bad.regions[0].out.args[0] = parse_ratfun("y-x+1/4");  // typo'd argument
    AuditReport rep = audit_entry(bad, {8});
    CHECK_FALSE(rep.ok());
    REQUIRE_FALSE(rep.failures.empty());
    CHECK(rep.failures[0].point.find("(") == 0);  // point localized
}

TEST_CASE("a coverage gap is reported with the point") {
    AuditEntry bad = catalog_entry("e_v");
    bad.regions[1].ge0[0] = parse_poly("2x+2y-3");  // shrink the second region
    AuditReport rep = audit_entry(bad, {8});
    CHECK_FALSE(rep.coverage);
}

TEST_CASE("barycentric sum identity is symbolic") {
    AuditEntry bad = catalog_entry("eta");
    bad.regions[0].out.args[0] = parse_ratfun("xy+x");  // breaks the sum
    AuditReport rep = audit_entry(bad, {4});
    CHECK_FALSE(rep.barycentric);
}
