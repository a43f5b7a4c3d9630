#include "doctest.h"
#include "oracles.hpp"
#include "ringlab/construct.hpp"
#include "ringlab/radicals.hpp"

using namespace ringlab;

TEST_CASE("Z_n constructors") {
    CHECK(ring_zn(1).order() == 1);
    CHECK(ring_zn(6).label() == "Z(6)");
    CHECK(ring_zn(9).mul(3, 3) == 0);
}

TEST_CASE("finite fields") {
    FiniteRing f4 = ring_gf(2, 2);
    CHECK(f4.order() == 4);
    for (elem_t x = 1; x < 4; ++x) CHECK(power_idx(f4, x, 3) == f4.one());

    FiniteRing f9 = ring_gf(3, 2);
    std::size_t roots = 0;
    for (elem_t x = 0; x < 9; ++x)
        if (f9.mul(x, x) == f9.one()) ++roots;
    CHECK(roots == 2);

    CHECK(ring_gf(2, 1).hash() == ring_zn(2).hash());
    CHECK(ring_gf(2, 3).order() == 8);
    CHECK_THROWS_AS(ring_gf(4, 2), NotPrime);
    CHECK_THROWS_AS(ring_gf(2, 7), NoPolynomialShipped);
    CHECK_THROWS_AS(ring_gf(3, 4), NoPolynomialShipped);

    // every nonzero element of a field is a unit
    for (auto q : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}, std::pair{5, 2}}) {
        FiniteRing f = ring_gf(q.first, q.second);
        CHECK(oracle::unit_scan(f).size() == f.order() - 1);
    }
}

TEST_CASE("direct products") {
    ProductResult pr = direct_product({ring_zn(2), ring_zn(3)});
    CHECK(pr.ring.order() == 6);
    CHECK(oracle::unit_scan(pr.ring).size() == 2);
    CHECK(pr.projections.size() == 2);
    CHECK(pr.projections[0].is_surjective(ring_zn(2)));

    // product of one ring reproduces the tables
    ProductResult single = direct_product({ring_zn(7)});
    CHECK(single.ring.hash() == ring_zn(7).hash());

    // encoding: component 0 is the least significant digit
    std::vector<FiniteRing> fs = {ring_zn(2), ring_zn(3)};
    elem_t x = product_encode(fs, {1, 2});
    CHECK(x == 1 + 2 * 2);
    CHECK(product_decode(fs, x) == std::vector<elem_t>{1, 2});
}

TEST_CASE("matrix rings") {
    FiniteRing z2 = ring_zn(2);
    FiniteRing m = matrix_ring(z2, 2);
    CHECK(m.order() == 16);
    CHECK(oracle::unit_scan(m).size() == 6);

    CHECK(matrix_ring(ring_zn(6), 1).hash() == ring_zn(6).hash());

    RingLimits tight;
    tight.max_order = 100;
    CHECK_THROWS_AS(matrix_ring(ring_zn(4), 2, tight), SizeCapExceeded);
}

TEST_CASE("upper triangular rings") {
    FiniteRing z2 = ring_zn(2);
    FiniteRing t = upper_triangular(z2, 2);
    CHECK(t.order() == 8);

    UnitGroup u = units(t);
    elem_t id = t.one();
    elem_t id_plus_e12 = t.add(id, triangular_encode(z2, 2, {0, 1, 0}));
    CHECK(u.members.members == std::vector<elem_t>{std::min(id, id_plus_e12),
                                                   std::max(id, id_plus_e12)});

    Ideal j = jacobson_radical(t, u);
    elem_t e12 = triangular_encode(z2, 2, {0, 1, 0});
    CHECK(j.members.members == std::vector<elem_t>{std::min(t.zero(), e12),
                                                   std::max(t.zero(), e12)});

    CHECK(upper_triangular(ring_zn(5), 1).hash() == ring_zn(5).hash());
}

TEST_CASE("trivial extensions") {
    FiniteRing e2 = trivial_extension(ring_zn(2));
    CHECK(e2.order() == 4);
    UnitGroup u = units(e2);
    Ideal j = jacobson_radical(e2, u);
    CHECK(j.members.members ==
          std::vector<elem_t>{trivext_encode(ring_zn(2), 0, 0), trivext_encode(ring_zn(2), 0, 1)});

    // (r,m) * (1,0) = (r,m)
    FiniteRing z3 = ring_zn(3);
    FiniteRing e3 = trivial_extension(z3);
    elem_t unit_elem = trivext_encode(z3, 1, 0);
    CHECK(unit_elem == e3.one());
    for (elem_t x = 0; x < e3.order(); ++x) CHECK(e3.mul(x, e3.one()) == x);
}

TEST_CASE("ideal generation") {
    FiniteRing z6 = ring_zn(6);
    Ideal i = ideal_generated(z6, make_elem_set(z6, {2}));
    CHECK(i.members.members == std::vector<elem_t>{0, 2, 4});

    FiniteRing m = matrix_ring(ring_zn(2), 2);
    elem_t e12 = matrix_encode(ring_zn(2), 2, {0, 1, 0, 0});
    CHECK(ideal_generated(m, make_elem_set(m, {e12})).size() == m.order());

    CHECK(ideal_generated(z6, make_elem_set(z6, {})).members.members ==
          std::vector<elem_t>{0});
}

TEST_CASE("quotients") {
    FiniteRing z6 = ring_zn(6);
    QuotientResult q = quotient(z6, ideal_generated(z6, make_elem_set(z6, {2})));
    CHECK(q.ring.order() == 2);
    CHECK(q.ring.hash() == ring_zn(2).hash());
    CHECK(q.projection(5) == q.projection(1));

    FiniteRing z9 = ring_zn(9);
    QuotientResult q9 = quotient(z9, ideal_generated(z9, make_elem_set(z9, {3})));
    CHECK(q9.ring.hash() == ring_zn(3).hash());

    QuotientResult qid = quotient(z9, ideal_generated(z9, make_elem_set(z9, {})));
    CHECK(qid.ring.hash() == z9.hash());

    // |R/I| * |I| = |R|
    FiniteRing z12 = ring_zn(12);
    for (elem_t g = 0; g < 12; ++g) {
        Ideal i = ideal_generated(z12, make_elem_set(z12, {g}));
        CHECK(quotient(z12, i).ring.order() * i.size() == 12);
    }
}

TEST_CASE("corners") {
    FiniteRing z6 = ring_zn(6);
    CHECK(corner(z6, 1).hash() == z6.hash());

    ProductResult pr = direct_product({ring_zn(2), ring_zn(3)});
    elem_t e10 = product_encode({ring_zn(2), ring_zn(3)}, {1, 0});
    FiniteRing c = corner(pr.ring, e10);
    CHECK(c.order() == 2);

    FiniteRing m = matrix_ring(ring_zn(2), 2);
    elem_t e11 = matrix_encode(ring_zn(2), 2, {1, 0, 0, 0});
    CHECK(corner(m, e11).order() == 2);

    CHECK_THROWS_AS(corner(z6, 2), NotIdempotent);
    CHECK_THROWS_AS(corner(z6, 0), ZeroCorner);
}

TEST_CASE("group rings") {
    FiniteRing z2 = ring_zn(2);
    GroupRing rg = group_ring(z2, cyclic_group(2));
    CHECK(rg.ring.order() == 4);
    UnitGroup u = units(rg.ring);
    CHECK(u.members.size() == 2);
    Ideal j = jacobson_radical(rg.ring, u);
    CHECK(j.size() == 2);

    GroupRing big = group_ring(ring_zn(3), cyclic_group(3));
    CHECK(big.ring.order() == 27);
    CHECK(units(big.ring).members.size() == 18);

    GroupRing triv = group_ring(ring_zn(7), cyclic_group(1));
    CHECK(triv.ring.hash() == ring_zn(7).hash());

    RingLimits tight;
    tight.max_order = kDefaultOrderCap;
    CHECK_THROWS_AS(group_ring(ring_zn(4), cyclic_group(8), tight), SizeCapExceeded);
}

TEST_CASE("augmentation") {
    FiniteRing z2 = ring_zn(2);
    GroupRing rg = group_ring(z2, cyclic_group(2));
    AugmentationResult aug = augmentation(rg);
    // 1 + g has coefficient sum 2 = 0
    elem_t one_plus_g = group_ring_encode(z2, rg.group, {1, 1});
    CHECK(aug.hom(one_plus_g) == z2.zero());
    CHECK(aug.kernel.contains(one_plus_g));
    CHECK(aug.kernel.size() == 2);

    GroupRing z3c3 = group_ring(ring_zn(3), cyclic_group(3));
    CHECK(augmentation(z3c3).kernel.size() == 9);

    GroupRing triv = group_ring(ring_zn(5), cyclic_group(1));
    CHECK(augmentation(triv).kernel.size() == 1);

    // the augmentation kernel agrees with J for these local group rings
    Ideal j = jacobson_radical(rg.ring, units(rg.ring));
    CHECK(j.members.members == aug.kernel.members.members);
}

TEST_CASE("homomorphism validation rejects non-homs") {
    FiniteRing z2 = ring_zn(2);
    FiniteRing z4 = ring_zn(4);
    CHECK_THROWS(RingHom::checked(z4, z2, {0, 1, 1, 0}));
    // reduction mod 2 is a genuine hom
    RingHom f = RingHom::checked(z4, z2, {0, 1, 0, 1});
    CHECK(f.is_surjective(z2));
}

TEST_CASE("large constructor outputs withstand full revalidation") {
    // construction above the default full-check order defers the cubic
    // axiom families; revalidate a sample here with the bound lifted
    RingLimits deep;
    deep.full_check_order = kHardOrderCap;
    for (const FiniteRing& r :
         {upper_triangular(ring_zn(12), 2),                      // 1728
          group_ring(ring_zn(6), cyclic_group(4)).ring,          // 1296
          matrix_ring(ring_zn(8), 2)}) {                         // 4096
        std::vector<elem_t> add(r.add_table().begin(), r.add_table().end());
        std::vector<elem_t> mul(r.mul_table().begin(), r.mul_table().end());
        CHECK(validate_ring(r.order(), std::move(add), std::move(mul), r.zero(), r.one(), deep)
                  .hash() == r.hash());
    }
}

TEST_CASE("surjections respect the sqrt-radical") {
    // image of sqrtJ(source) lands inside sqrtJ(target) on a built example
    FiniteRing z4 = ring_zn(4);
    QuotientResult q = quotient(z4, ideal_generated(z4, make_elem_set(z4, {2})));
    RingAnalysis src = analyze_ring(z4);
    RingAnalysis dst = analyze_ring(q.ring);
    for (elem_t x : src.sqrt_j.members) CHECK(dst.sqrt_mask[q.projection(x)]);
}
