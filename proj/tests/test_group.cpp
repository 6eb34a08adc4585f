#include "dgv/group.hpp"

#include <doctest.h>

using namespace dgv;

TEST_CASE("cyclic groups validate and compare") {
    GroupTable z6 = cyclic_group(6);
    z6.validate();
    CHECK(z6.is_abelian());
    CHECK(isomorphic(z6, cyclic_group(6)));
    CHECK_FALSE(isomorphic(z6, symmetric_group_3()));  // same order, different structure
    CHECK_FALSE(isomorphic(cyclic_group(4), cyclic_group(5)));
}

TEST_CASE("s3 is the nonabelian group of order 6") {
    GroupTable s3 = symmetric_group_3();
    CHECK(s3.size() == 6);
    CHECK_FALSE(s3.is_abelian());
    CHECK(isomorphic(s3, symmetric_group_3()));
}

TEST_CASE("isomorphism search finds an explicit map") {
    GroupTable a = cyclic_group(4);
    GroupTable b = cyclic_group(4);
    // relabel b by the automorphism x -> 3x
    std::vector<int> perm{0, 3, 2, 1};
    GroupTable c = b;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) c.op[perm[i]][perm[j]] = perm[b.op[i][j]];
    c.inv.clear();
    c.validate();
    auto iso = find_isomorphism(a, c);
    REQUIRE(iso.has_value());
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK((*iso)[a.op[i][j]] == c.op[(*iso)[i]][(*iso)[j]]);
}

TEST_CASE("group name parsing") {
    CHECK(parse_group("Z/5").size() == 5);
    CHECK(parse_group("z12").size() == 12);
    CHECK(parse_group("S3").size() == 6);
    CHECK_THROWS(parse_group("Q8"));
}
