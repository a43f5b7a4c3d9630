#include "doctest.h"
#include "oracles.hpp"
#include "ringlab/radicals.hpp"

using namespace ringlab;

TEST_CASE("unit groups") {
    UnitGroup u9 = units(ring_zn(9));
    CHECK(u9.members.members == std::vector<elem_t>{1, 2, 4, 5, 7, 8});
    CHECK(u9.inverse(2) == 5);

    CHECK(units(matrix_ring(ring_zn(2), 2)).members.size() == 6);

    GroupRing rg = group_ring(ring_zn(2), cyclic_group(2));
    elem_t g = group_ring_encode(ring_zn(2), rg.group, {0, 1});
    UnitGroup u = units(rg.ring);
    CHECK(u.members.members == std::vector<elem_t>{rg.ring.one(), g});

    // one-sided sets always agree with the units on finite rings
    CHECK(u.left_invertible == u.members);
    CHECK(u.right_invertible == u.members);
}

TEST_CASE("element sets") {
    FiniteRing z9 = ring_zn(9);
    ElementSets s9 = element_sets(z9);
    CHECK(s9.nilpotents.members == std::vector<elem_t>{0, 3, 6});
    CHECK(s9.idempotents.members == std::vector<elem_t>{0, 1});

    CHECK(element_sets(ring_zn(6)).idempotents.members == std::vector<elem_t>{0, 1, 3, 4});

    FiniteRing m = matrix_ring(ring_zn(2), 2);
    ElementSets sm = element_sets(m);
    CHECK(sm.center.members == std::vector<elem_t>{m.zero(), m.one()});
    CHECK(sm.nilpotents.size() == 4);
}

TEST_CASE("jacobson radical") {
    FiniteRing z9 = ring_zn(9);
    Ideal j9 = jacobson_radical(z9, units(z9));
    CHECK(j9.members.members == std::vector<elem_t>{0, 3, 6});

    FiniteRing m = matrix_ring(ring_zn(2), 2);
    CHECK(jacobson_radical(m, units(m)).members.members == std::vector<elem_t>{m.zero()});

    FiniteRing t = upper_triangular(ring_zn(2), 2);
    CHECK(jacobson_radical(t, units(t)).size() == 2);
}

TEST_CASE("radical agrees with the maximal-ideal oracle on commutative rings") {
    std::vector<FiniteRing> rings = {ring_zn(4),
                                     ring_zn(6),
                                     ring_zn(9),
                                     ring_zn(12),
                                     ring_gf(3, 2),
                                     trivial_extension(ring_zn(4)),
                                     direct_product({ring_zn(4), ring_zn(9)}).ring,
                                     group_ring(ring_zn(2), cyclic_group(2)).ring};
    for (const auto& r : rings) {
        REQUIRE(is_commutative(r));
        Ideal j = jacobson_radical(r, units(r));
        CHECK(j.members == oracle::jacobson_by_maximal_ideals(r));
    }
}

TEST_CASE("sqrt of the radical") {
    FiniteRing z9 = ring_zn(9);
    Ideal j9 = jacobson_radical(z9, units(z9));
    CHECK(sqrt_jacobson(z9, j9).members == std::vector<elem_t>{0, 3, 6});

    FiniteRing m = matrix_ring(ring_zn(2), 2);
    Ideal jm = jacobson_radical(m, units(m));
    ElemSet sq = sqrt_jacobson(m, jm);
    CHECK(sq.size() == 4);  // exactly the nilpotent matrices when J = 0
    CHECK(sq == element_sets(m).nilpotents);
}

TEST_CASE("sqrt radical contains J and Nil, and the bound |R| is stable") {
    std::vector<FiniteRing> rings = {ring_zn(8), ring_zn(12), upper_triangular(ring_zn(2), 2),
                                     matrix_ring(ring_zn(3), 2),
                                     trivial_extension(ring_zn(6))};
    for (const auto& r : rings) {
        Ideal j = jacobson_radical(r, units(r));
        ElemSet sq = sqrt_jacobson(r, j);
        ElementSets sets = element_sets(r);
        for (elem_t x : j.members.members) CHECK(sq.contains(x));
        for (elem_t x : sets.nilpotents.members) CHECK(sq.contains(x));
        // scanning exponents out to 2|R| finds nothing new
        CHECK(oracle::sqrt_j_scan(r, j.members, 2 * r.order()) == sq);
    }
}

TEST_CASE("commutative rings: sqrtJ = J") {
    for (std::size_t n : {2, 4, 6, 8, 9, 10, 12}) {
        FiniteRing r = ring_zn(n);
        Ideal j = jacobson_radical(r, units(r));
        CHECK(sqrt_jacobson(r, j).members == j.members.members);
    }
}

TEST_CASE("prime radical") {
    FiniteRing z9 = ring_zn(9);
    CHECK(prime_radical(z9).members.members == std::vector<elem_t>{0, 3, 6});

    FiniteRing m = matrix_ring(ring_zn(2), 2);
    CHECK(prime_radical(m).members.members == std::vector<elem_t>{m.zero()});

    FiniteRing t = upper_triangular(ring_zn(2), 2);
    Ideal nil_star = prime_radical(t);
    CHECK(nil_star.members == element_sets(t).nilpotents);  // 2-primal
    CHECK(nil_star.size() == 2);
}

TEST_CASE("prime radical is semiprime and minimal among checked ideals") {
    for (const auto& r : {ring_zn(12), upper_triangular(ring_zn(2), 2)}) {
        Ideal p = prime_radical(r);
        std::vector<char> mask = elem_mask(p.members, r.order());
        for (elem_t a = 0; a < r.order(); ++a) {
            if (mask[a]) continue;
            bool crushed = true;
            for (elem_t x = 0; x < r.order() && crushed; ++x)
                crushed = mask[r.mul(r.mul(a, x), a)];
            CHECK_FALSE(crushed);  // nothing outside should be crushed into it
        }
    }
}

TEST_CASE("idempotent lifting") {
    FiniteRing z9 = ring_zn(9);
    CHECK(idempotents_lift(z9, jacobson_radical(z9, units(z9))));

    FiniteRing z6 = ring_zn(6);
    CHECK(idempotents_lift(z6, ideal_generated(z6, make_elem_set(z6, {}))));

    FiniteRing z4 = ring_zn(4);
    CHECK(idempotents_lift(z4, ideal_generated(z4, make_elem_set(z4, {2}))));
}

TEST_CASE("analysis bundle is coherent") {
    RingAnalysis a = analyze_ring(ring_zn(9));
    CHECK(a.quotient_by_j.order() == 3);
    CHECK(a.quotient_by_j.hash() == ring_zn(3).hash());
    CHECK(a.unit_mask[1]);
    CHECK(a.j_mask[3]);
    CHECK(a.sqrt_mask[6]);
}

TEST_CASE("exploratory: the sqrt radical need not be additively closed") {
    // not an acceptance requirement; records whether the catalog's
    // smallest matrix ring witnesses the failure
    FiniteRing m = matrix_ring(ring_zn(2), 2);
    RingAnalysis a = analyze_ring(m);
    bool closed = true;
    elem_t wx = 0, wy = 0;
    for (elem_t x : a.sqrt_j.members)
        for (elem_t y : a.sqrt_j.members)
            if (!a.sqrt_mask[m.add(x, y)]) {
                closed = false;
                wx = x;
                wy = y;
            }
    if (!closed)
        MESSAGE("sqrtJ not additively closed in M(2,Z(2)): ", wx, " + ", wy);
    CHECK_FALSE(closed);  // e12 + e21 is a unit
}
