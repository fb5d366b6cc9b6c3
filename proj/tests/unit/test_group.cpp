#include <doctest.h>

#include "kerind/group.hpp"

using namespace kerind;

TEST_CASE("basic group structure") {
    Group c6 = Group::cyclic(6);
    CHECK(c6.size() == 6);
    CHECK(c6.order(1) == 6);
    CHECK(c6.order(2) == 3);
    CHECK(c6.inv(2) == 4);
    CHECK(c6.is_cyclic());
    CHECK(c6.generators() == std::vector<GElem>{1});

    Group klein = Group::product({2, 2});
    CHECK(klein.size() == 4);
    CHECK_FALSE(klein.is_cyclic());
    CHECK(klein.generators().size() == 2);

    Group s3 = Group::symmetric(3);
    CHECK(s3.size() == 6);
    CHECK_FALSE(s3.is_cyclic());
    // orders: identity 1, three transpositions 2, two 3-cycles 3
    int ord2 = 0, ord3 = 0;
    for (GElem g = 0; g < 6; ++g) {
        if (s3.order(g) == 2) ++ord2;
        if (s3.order(g) == 3) ++ord3;
    }
    CHECK(ord2 == 3);
    CHECK(ord3 == 2);
}

TEST_CASE("table validation") {
    // a latin square that is not associative must be rejected
    CHECK_THROWS_AS(Group::from_table(5, {0, 1, 2, 3, 4,
                                          1, 0, 3, 4, 2,
                                          2, 4, 0, 1, 3,
                                          3, 2, 4, 0, 1,
                                          4, 3, 1, 2, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Group::from_table(2, {1, 0, 0, 1}), std::invalid_argument);  // 0 not identity
}

TEST_CASE("subgroup lattices") {
    CHECK(Group::cyclic(6).subgroups().size() == 4);
    CHECK(Group::product({2, 2}).subgroups().size() == 5);
    CHECK(Group::symmetric(3).subgroups().size() == 6);
    CHECK(Group::product({2, 2, 2}).subgroups().size() == 16);

    // cyclic subgroups: S_3 has 1 + 3 + 2/2... <(123)> = <(132)>: 1 trivial + 3 + 1 = 5
    CHECK(Group::symmetric(3).cyclic_subgroups().size() == 5);

    // every listed subgroup is closed and contains the identity
    Group s4 = Group::symmetric(4);
    CHECK(s4.subgroups().size() == 30);
    for (const auto& h : s4.subgroups()) {
        CHECK(h[0] == 0);
        for (GElem a : h)
            for (GElem b : h)
                CHECK(std::binary_search(h.begin(), h.end(), s4.op(a, b)));
    }
}

TEST_CASE("normality and quotients") {
    Group s3 = Group::symmetric(3);
    int normal = 0;
    for (const auto& h : s3.subgroups())
        if (s3.is_normal(h)) ++normal;
    CHECK(normal == 3);  // 1, A_3, S_3

    Group c4 = Group::cyclic(4);
    GroupQuotient q = c4.quotient(c4.closure({2}));
    CHECK(q.group.size() == 2);
    CHECK(q.proj[0] == q.proj[2]);
    CHECK(q.proj[1] == q.proj[3]);
    CHECK(q.proj[0] != q.proj[1]);

    CHECK_THROWS_AS(s3.quotient(s3.closure({1})), std::invalid_argument);  // <(12)> not normal
}

TEST_CASE("subgroup as its own group") {
    Group s3 = Group::symmetric(3);
    Subgroup a3;
    for (GElem g = 0; g < 6; ++g)
        if (s3.order(g) != 2) a3.push_back(g);
    std::sort(a3.begin(), a3.end());
    SubgroupEmbedding e = s3.as_group(a3);
    CHECK(e.group.size() == 3);
    CHECK(e.group.is_cyclic());
    for (GElem a = 0; a < 3; ++a)
        for (GElem b = 0; b < 3; ++b)
            CHECK(e.embed[e.group.op(a, b)] == s3.op(e.embed[a], e.embed[b]));
}
