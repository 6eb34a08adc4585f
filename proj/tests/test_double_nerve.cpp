#include "dgv/catalog.hpp"
#include "dgv/double_nerve.hpp"

#include <doctest.h>

using namespace dgv;

TEST_CASE("nn cell counts") {
    auto point = nn(build_catalog("disc 1"));
    for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 2; ++q) CHECK(point->size(p, q) == 1);

    auto ab = nn(build_catalog("ab Z2"));
    CHECK(ab->size(1, 1) == 2);
    CHECK(ab->size(2, 2) == 16);  // independent unit squares

    // nn(Tensor(A,B)) = nerve(A) (x) nerve(B) cellwise
    auto tz = nn(build_catalog("tensor Z2 Z3"));
    NerveView na(group_as_category(cyclic_group(2)), 4);
    NerveView nb(group_as_category(cyclic_group(3)), 4);
    for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 2; ++q) CHECK(tz->size(p, q) == na.size(p) * nb.size(q));
}

TEST_CASE("nn operators satisfy the bisimplicial identities") {
    auto dz = nn(build_catalog("deloop Z2"), 4, 4);
    verify_bisimplicial_identities(*dz, 3, 3, 200, 42);
    auto pr = nn(build_catalog("pair 2"), 3, 3);
    verify_bisimplicial_identities(*pr, 2, 2, 150, 43);
}

TEST_CASE("face operators agree with functor restriction") {
    DoubleGroupoid g = build_catalog("pair 2");
    auto K = nn(g, 3, 3);
    // restriction along d^m (x) id at (3,2): every unit square of the face is
    // a derived square of the original functor
    int p = 3, q = 2;
    for (int cell = 0; cell < K->size(p, q); ++cell) {
        NNView::CellData d = K->parse(p, q, K->key(p, q, cell));
        for (int m = 0; m <= p; ++m) {
            int fc = K->face_h(p, q, m, cell);
            NNView::CellData fd = K->parse(p - 1, q, K->key(p - 1, q, fc));
            auto dmap = [&](int v) { return v < m ? v : v + 1; };  // d^m on [p-1]
            for (int jp = 1; jp <= p - 1; ++jp)
                for (int r = 1; r <= q; ++r)
                    CHECK(fd.grid[r - 1][jp - 1] ==
                          K->derived_square(d, dmap(jp - 1), dmap(jp), r - 1, r));
        }
        for (int m = 0; m <= q; ++m) {
            int fc = K->face_v(p, q, m, cell);
            NNView::CellData fd = K->parse(p, q - 1, K->key(p, q - 1, fc));
            auto dmap = [&](int v) { return v < m ? v : v + 1; };
            for (int jp = 1; jp <= p; ++jp)
                for (int r = 1; r <= q - 1; ++r)
                    CHECK(fd.grid[r - 1][jp - 1] ==
                          K->derived_square(d, jp - 1, jp, dmap(r - 1), dmap(r)));
        }
        if (cell > 40) break;  // spot check is plenty at this size
    }
}

TEST_CASE("rows of nn are nerves of the square categories") {
    // nn(g)_{1,*} is the nerve of the vertical category of squares
    DoubleGroupoid g = build_catalog("deloop Z3");
    auto K = nn(g, 3, 4);
    FiniteCategory vc;  // objects = hmors, morphisms = squares, comp = cvs
    for (const auto& h : g.hmors) vc.objects.push_back(h.id);
    for (int s = 0; s < g.n_sq(); ++s) vc.mors.push_back({g.squares[s].id, g.sv(s), g.tv(s)});
    vc.id_of_obj = g.id_v_sq;
    vc.comp = g.comp_v_sq;
    vc.validate();
    NerveView nv(vc, 4);
    RowComplex row(*K, 1, 4);
    for (int n = 0; n <= 3; ++n) CHECK(row.size(n) == nv.size(n));
}

TEST_CASE("nn is functorial") {
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
    auto src = nn(one, 2, 2);
    auto tgt = nn(pr, 2, 2);
    // commutes with all four operators on cells up to (2,2)
    for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 2; ++q)
            for (int c = 0; c < src->size(p, q); ++c) {
                int img = nn_map_cell(*src, *tgt, incl, p, q, c);
                for (int i = 0; i <= p && p >= 1; ++i)
                    CHECK(nn_map_cell(*src, *tgt, incl, p - 1, q, src->face_h(p, q, i, c)) ==
                          tgt->face_h(p, q, i, img));
                for (int j = 0; j <= q && q >= 1; ++j)
                    CHECK(nn_map_cell(*src, *tgt, incl, p, q - 1, src->face_v(p, q, j, c)) ==
                          tgt->face_v(p, q, j, img));
            }
}

TEST_CASE("theorem 5.1 triple equivalence on the catalog") {
    for (const auto& e : standard_catalog()) {
        CAPTURE(e.name);
        TriReport rep = theorem_51_suite(e.g);
        CHECK(rep.agree());
        bool expected = e.name != "NoFill" && e.name != "UnitCell";
        CHECK(rep.i == expected);
        if (!expected) {
            CHECK_FALSE(rep.witness_ii.empty());
            CHECK_FALSE(rep.witness_iii.empty());
        }
    }
}

TEST_CASE("unique fillers at n=3 and sampled n=4") {
    std::string detail;
    CHECK(unique_filler_check(build_catalog("ab Z2"), 3, &detail));
    CHECK(unique_filler_check(build_catalog("deloop Z2"), 3, &detail));
    CHECK(unique_filler_check(build_catalog("pair 2"), 3, &detail));
    CHECK(unique_filler_check(build_catalog("ab Z2"), 4, &detail));
    CHECK(unique_filler_check(build_catalog("deloop Z2"), 4, &detail));
}

TEST_CASE("theorem 5.3 on the small catalog") {
    IsoReport r1 = theorem_53_suite(build_catalog("deloop Z3"));
    CHECK(r1.ok);
    IsoReport r2 = theorem_53_suite(build_catalog("ab Z2"));
    CHECK(r2.ok);
    IsoReport r3 = theorem_53_suite(build_catalog("disc 2"));
    CHECK(r3.ok);
}
