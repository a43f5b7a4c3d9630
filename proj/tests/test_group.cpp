#include "doctest.h"
#include "ringlab/group.hpp"

using namespace ringlab;

TEST_CASE("XOR table is C_2") {
    FiniteGroup g = validate_group({0, 1, 1, 0}, 0);
    CHECK(g.order() == 2);
    CHECK(g.inv(1) == 1);
    CHECK(g.hash() == cyclic_group(2).hash());
}

TEST_CASE("addition mod 3 is C_3") {
    FiniteGroup g = validate_group({0, 1, 2, 1, 2, 0, 2, 0, 1}, 0);
    CHECK(g.order() == 3);
    CHECK(element_order(g, 1) == 3);
}

TEST_CASE("non-associative table is rejected") {
    // identity and inverses hold, but (1*1)*2 != 1*(1*2)
    std::vector<elem_t> t = {0, 1, 2, 1, 2, 0, 2, 0, 0};
    CHECK_THROWS_AS(validate_group(t, 0), GroupAxiomViolation);
    try {
        validate_group(t, 0);
    } catch (const GroupAxiomViolation& e) {
        CHECK(e.kind == "associativity");
    }
}

TEST_CASE("cyclic groups") {
    CHECK(cyclic_group(1).order() == 1);
    CHECK(is_trivial(cyclic_group(1)));
    CHECK(cyclic_group(2).order() == 2);
    CHECK(element_order(cyclic_group(4), 1) == 4);
}

TEST_CASE("products") {
    FiniteGroup klein = group_product(cyclic_group(2), cyclic_group(2));
    for (elem_t x = 0; x < klein.order(); ++x) CHECK(element_order(klein, x) <= 2);

    // C_2 x C_3 matches C_6 element order profile
    FiniteGroup c2c3 = group_product(cyclic_group(2), cyclic_group(3));
    CHECK(order_profile(c2c3) == order_profile(cyclic_group(6)));

    FiniteGroup c1g = group_product(cyclic_group(1), cyclic_group(5));
    CHECK(order_profile(c1g) == order_profile(cyclic_group(5)));

    RingLimits tight;
    tight.max_order = 5;
    CHECK_THROWS_AS(group_product(cyclic_group(2), cyclic_group(3), tight), SizeCapExceeded);
}

TEST_CASE("element orders divide the group order") {
    for (const auto& g : {cyclic_group(12), group_product(cyclic_group(4), cyclic_group(6)),
                          symmetric_group_3()})
        for (elem_t x = 0; x < g.order(); ++x) CHECK(g.order() % element_order(g, x) == 0);
}

TEST_CASE("p-group predicate") {
    CHECK(is_p_group(cyclic_group(4), 2));
    CHECK_FALSE(is_p_group(cyclic_group(6), 2));
    CHECK_FALSE(is_p_group(cyclic_group(6), 3));
    CHECK(is_p_group(cyclic_group(1), 3));
    CHECK_THROWS_AS(is_p_group(cyclic_group(4), 4), NotPrime);
}

TEST_CASE("S_3 preset") {
    FiniteGroup s3 = symmetric_group_3();
    CHECK(s3.order() == 6);
    bool abelian = true;
    for (elem_t a = 0; a < 6 && abelian; ++a)
        for (elem_t b = 0; b < 6; ++b)
            if (s3.op(a, b) != s3.op(b, a)) {
                abelian = false;
                break;
            }
    CHECK_FALSE(abelian);
    // three transpositions of order 2, two 3-cycles
    auto profile = order_profile(s3);
    CHECK(profile == std::vector<std::size_t>{1, 2, 2, 2, 3, 3});
}
