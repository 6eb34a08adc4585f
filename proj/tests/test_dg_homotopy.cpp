#include "dgv/catalog.hpp"
#include "dgv/dg_homotopy.hpp"

#include <doctest.h>

using namespace dgv;

TEST_CASE("pi0 class counts") {
    CHECK(pi0(build_catalog("disc 3")).size() == 3);
    CHECK(pi0(build_catalog("pair 3")).size() == 1);
    CHECK(pi0(build_catalog("ab Z2")).size() == 1);
}

TEST_CASE("pi1 of the catalog") {
    DoubleGroupoid d3 = build_catalog("deloop Z3");
    Pi1Result p = pi1(d3, 0);
    CHECK(p.table.size() == 3);
    CHECK(isomorphic(p.table, cyclic_group(3)));

    CHECK(pi1(build_catalog("disc 1"), 0).table.size() == 1);
    CHECK(pi1(build_catalog("pair 2"), 0).table.size() == 1);
}

TEST_CASE("pi1 of a nonabelian deloop") {
    Pi1Result p = pi1(build_catalog("deloop S3"), 0);
    CHECK(p.table.size() == 6);
    CHECK(isomorphic(p.table, symmetric_group_3()));
    CHECK_FALSE(p.table.is_abelian());
}

TEST_CASE("pi2 of the catalog") {
    CHECK(isomorphic(pi2(build_catalog("ab Z2"), 0).table, cyclic_group(2)));
    CHECK(pi2(build_catalog("deloop Z3"), 0).table.size() == 1);
    CHECK(pi2(build_catalog("tensor Z2 Z3"), 0).table.size() == 1);
    CHECK(isomorphic(pi2(build_catalog("ab Z4"), 0).table, cyclic_group(4)));
}

TEST_CASE("homotopy groups refuse double categories and filling failures") {
    CHECK_THROWS(pi0(build_catalog("unitcell")));
    CHECK_THROWS(pi1(build_catalog("nofill"), 0));
}

TEST_CASE("weak equivalence verdicts") {
    DoubleGroupoid ab = build_catalog("ab Z2");
    CHECK(weak_equivalence(identity_functor(ab)).ok());

    // unique functor Ab(Z2) -> Disc({*}) kills pi2
    DoubleGroupoid pt = build_catalog("disc 1");
    DoubleFunctor collapse;
    collapse.src = &ab;
    collapse.tgt = &pt;
    collapse.on_obj = {0};
    collapse.on_h = {0};
    collapse.on_v = {0};
    collapse.on_sq = {0, 0};
    collapse.validate();
    WeakEqReport rep = weak_equivalence(collapse);
    CHECK_FALSE(rep.ok());
    CHECK_FALSE(rep.pi2_iso);
    CHECK(rep.pi0_bijective);

    // inclusion Disc({a0}) -> Pair({p0,p1}) is a weak equivalence
    DoubleGroupoid one = build_catalog("disc 1");
    DoubleGroupoid pr = build_catalog("pair 2");
    DoubleFunctor incl;
    incl.src = &one;
    incl.tgt = &pr;
    incl.on_obj = {0};
    incl.on_h = {pr.id_h_obj[0]};
    incl.on_v = {pr.id_v_obj[0]};
    incl.on_sq = {pr.id_h_sq[pr.id_v_obj[0]]};
    incl.validate();
    CHECK(weak_equivalence(incl).ok());
}

TEST_CASE("two out of three on a catalog composite") {
    DoubleGroupoid one = build_catalog("disc 1");
    DoubleGroupoid pr = build_catalog("pair 2");
    DoubleFunctor incl;
    incl.src = &one;
    incl.tgt = &pr;
    incl.on_obj = {0};
    incl.on_h = {pr.id_h_obj[0]};
    incl.on_v = {pr.id_v_obj[0]};
    incl.on_sq = {pr.id_h_sq[pr.id_v_obj[0]]};
    DoubleFunctor idp = identity_functor(pr);
    DoubleFunctor comp2 = compose(idp, incl);
    CHECK(weak_equivalence(incl).ok());
    CHECK(weak_equivalence(idp).ok());
    CHECK(weak_equivalence(comp2).ok());
}

TEST_CASE("pi report shape") {
    PiReport rep = pi_report(build_catalog("deloop Z2"));
    CHECK(rep.pi0_classes.size() == 1);
    CHECK(rep.pi1_at.at(0).size() == 2);
    CHECK(rep.pi2_at.at(0).size() == 1);
    CHECK(rep.to_json(build_catalog("deloop Z2")).find("pi_higher") != std::string::npos);
}
