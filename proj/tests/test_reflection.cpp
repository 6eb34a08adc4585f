#include "dgv/catalog.hpp"
#include "dgv/dec_wbar.hpp"
#include "dgv/reflection.hpp"

#include <doctest.h>

using namespace dgv;

namespace {
std::shared_ptr<DecView> dec_nerve(const GroupTable& grp) {
    auto L = std::make_shared<NerveView>(group_as_category(grp), 10);
    return std::make_shared<DecView>(L, 4, 4);
}
}  // namespace

TEST_CASE("certification verdicts") {
    Certification c1 = certify(nn(build_catalog("ab Z2"), 4, 4));
    CHECK(c1.valid());
    Certification c2 = certify(dec_nerve(cyclic_group(2)));
    CHECK(c2.valid());
    Certification bad = certify(nn(build_catalog("nofill"), 4, 4));
    CHECK_FALSE(bad.valid());
    CHECK_THROWS(pp(bad));
}

TEST_CASE("pp of the point is the one-object discrete structure") {
    PPResult r = pp(certify(nn(build_catalog("disc 1"), 4, 4)));
    CHECK(r.g.n_obj() == 1);
    CHECK(r.g.n_h() == 1);
    CHECK(r.g.n_v() == 1);
    CHECK(r.g.n_sq() == 1);
}

TEST_CASE("pp(nn(Ab Z2)) round trip") {
    DoubleGroupoid g = build_catalog("ab Z2");
    RoundTripReport rep = theorem_63_suite(g);
    CHECK(rep.iso_ok);
    CHECK(rep.epsilon_identity);
    CHECK(rep.pp_epsilon_identity);
}

TEST_CASE("pp of dec(L): objects are the 1-simplices of L") {
    auto K = dec_nerve(cyclic_group(2));
    PPResult r = pp(certify(K));
    NerveView L(group_as_category(cyclic_group(2)), 4);
    CHECK(r.g.n_obj() == L.size(1));  // Dec L_{0,0} = L_1
    PPResult r2 = pp(certify(dec_nerve(cyclic_group(3))));
    CHECK(r2.g.n_obj() == 3);
}

TEST_CASE("verify_2type on dec(nerve Gamma)") {
    for (int n : {2, 3}) {
        CAPTURE(n);
        TwoTypeReport rep = verify_2type(certify(dec_nerve(cyclic_group(n))));
        CHECK(rep.ok());
        // pi0 a point, pi1 = Gamma, pi2 = 0
        PPResult r = pp(certify(dec_nerve(cyclic_group(n))));
        CHECK(pi0(r.g).size() == 1);
        CHECK(isomorphic(pi1(r.g, 0).table, cyclic_group(n)));
        CHECK(pi2(r.g, 0).table.size() == 1);
    }
}

TEST_CASE("verify_2type on nn(Ab Z2)") {
    TwoTypeReport rep = verify_2type(certify(nn(build_catalog("ab Z2"), 5, 5)));
    CHECK(rep.ok());
    PPResult r = pp(certify(nn(build_catalog("ab Z2"), 5, 5)));
    CHECK(isomorphic(pi2(r.g, 0).table, cyclic_group(2)));
}

TEST_CASE("verify_2type on the point") {
    TwoTypeReport rep = verify_2type(certify(nn(build_catalog("disc 1"), 5, 5)));
    CHECK(rep.ok());
}

TEST_CASE("epsilon commutes on dec(nerve Z2) up to (2,2)") {
    auto K = dec_nerve(cyclic_group(2));
    PPResult r = pp(certify(K));
    auto nnpp = nn(r.g, 4, 4);
    check_epsilon_bisimplicial(*K, r, *nnpp, 2, 2);
}

TEST_CASE("pp functoriality on a certified map") {
    // nn of a double functor induces a functor of reflections
    DoubleGroupoid one = build_catalog("disc 1");
    DoubleGroupoid pr = build_catalog("pair 2");
    DoubleFunctor incl;
    incl.src = &one;
    incl.tgt = &pr;
    incl.on_obj = {0};
    incl.on_h = {pr.id_h_obj[0]};
    incl.on_v = {pr.id_v_obj[0]};
    incl.on_sq = {pr.id_h_sq[pr.id_v_obj[0]]};
    auto src = nn(one, 4, 4);
    auto tgt = nn(pr, 4, 4);
    PPResult rs = pp(certify(src));
    PPResult rt = pp(certify(tgt));
    DoubleFunctor induced;
    induced.src = &rs.g;
    induced.tgt = &rt.g;
    induced.on_obj.assign(rs.g.n_obj(), -1);
    induced.on_h.assign(rs.g.n_h(), -1);
    induced.on_v.assign(rs.g.n_v(), -1);
    induced.on_sq.assign(rs.g.n_sq(), -1);
    auto set_or_check = [](std::vector<int>& m, int at, int val) {
        if (m[at] == -1) m[at] = val;
        REQUIRE(m[at] == val);  // class-level well-definedness
    };
    for (int c = 0; c < src->size(0, 0); ++c)
        set_or_check(induced.on_obj, rs.obj_of_cell[c],
                     rt.obj_of_cell[nn_map_cell(*src, *tgt, incl, 0, 0, c)]);
    for (int c = 0; c < src->size(1, 0); ++c)
        set_or_check(induced.on_h, rs.hmor_of_cell[c],
                     rt.hmor_of_cell[nn_map_cell(*src, *tgt, incl, 1, 0, c)]);
    for (int c = 0; c < src->size(0, 1); ++c)
        set_or_check(induced.on_v, rs.vmor_of_cell[c],
                     rt.vmor_of_cell[nn_map_cell(*src, *tgt, incl, 0, 1, c)]);
    for (int c = 0; c < src->size(1, 1); ++c)
        set_or_check(induced.on_sq, rs.sq_of_cell[c],
                     rt.sq_of_cell[nn_map_cell(*src, *tgt, incl, 1, 1, c)]);
    induced.validate();
}
