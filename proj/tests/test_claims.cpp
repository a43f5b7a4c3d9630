#include <set>

#include "doctest.h"
#include "ringlab/claims.hpp"
#include "ringlab/io.hpp"

using namespace ringlab;

namespace {

// a trimmed catalog keeps the unit suite quick; the acceptance binary
// audits the full default configuration
CatalogConfig small_config() {
    CatalogConfig cfg;
    cfg.max_order = 81;
    cfg.base_zn = {1, 2, 3, 4, 5, 6, 8, 9};
    cfg.base_gf = {{2, 2}, {3, 2}};
    return cfg;
}

struct SharedCatalog {
    Engine engine;
    Catalog catalog;
    SharedCatalog() : engine(), catalog(build_catalog(engine, small_config())) {}
};

SharedCatalog& shared() {
    static SharedCatalog s;
    return s;
}

}  // namespace

TEST_CASE("catalog membership and determinism") {
    Catalog& cat = shared().catalog;
    CHECK(cat.find_expr("Z(9)") != nullptr);
    CHECK(cat.find_expr("M(2,Z(2))") != nullptr);
    CHECK(cat.find_expr("T(2,Z(3))") != nullptr);
    CHECK(cat.find_expr("TrivExt(Z(3))") != nullptr);
    CHECK(cat.find_expr("GR(Z(3),C(3))") != nullptr);

    // no duplicate hashes
    std::set<std::uint64_t> hashes;
    for (const auto& e : cat.entries) CHECK(hashes.insert(e.ring.hash()).second);

    // every entry's expression re-evaluates to its own hash
    Engine fresh;
    for (const auto& e : cat.entries)
        CHECK(eval_ring(fresh, e.expr).hash() == e.ring.hash());

    // deterministic rebuild
    Engine engine2;
    Catalog cat2 = build_catalog(engine2, small_config());
    REQUIRE(cat2.entries.size() == cat.entries.size());
    for (std::size_t i = 0; i < cat.entries.size(); ++i) {
        CHECK(cat2.entries[i].expr == cat.entries[i].expr);
        CHECK(cat2.entries[i].ring.hash() == cat.entries[i].ring.hash());
    }
}

TEST_CASE("size caps prune the catalog without failing") {
    Engine engine;
    CatalogConfig cfg = small_config();
    cfg.max_order = 16;
    Catalog cat = build_catalog(engine, cfg);
    CHECK(cat.find_expr("GR(Z(3),C(3))") == nullptr);  // order 27
    CHECK_FALSE(cat.skipped.empty());
    CHECK(cat.find_expr("Z(9)") != nullptr);
}

TEST_CASE("empty base list gives an empty catalog and a zero-subject suite") {
    Engine engine;
    CatalogConfig cfg;
    cfg.base_zn.clear();
    cfg.base_gf.clear();
    Catalog cat = build_catalog(engine, cfg);
    CHECK(cat.entries.empty());
    Report rep = run_suite(engine, cat);
    for (const auto& c : rep.claims) CHECK(c.subjects == 0);
}

TEST_CASE("surjections are recorded") {
    Catalog& cat = shared().catalog;
    bool has_projection = false, has_quotient = false, has_augmentation = false;
    for (const auto& s : cat.surjections) {
        if (s.kind == "projection") has_projection = true;
        if (s.kind == "quotient") has_quotient = true;
        if (s.kind == "augmentation") has_augmentation = true;
        CHECK(s.hom.is_surjective(s.target));
    }
    CHECK(has_projection);
    CHECK(has_quotient);
    CHECK(has_augmentation);
}

TEST_CASE("unknown claims are rejected") {
    Engine engine;
    CatalogConfig cfg;
    cfg.base_zn = {2};
    cfg.base_gf = {};
    Catalog cat = build_catalog(engine, cfg);
    CHECK_THROWS_AS(check_claim(engine, cat, "BOGUS"), UnknownClaim);
    CHECK_THROWS_AS(run_suite(engine, cat, {"BOGUS"}), UnknownClaim);
    CHECK(is_known_claim("P-matrix"));
    CHECK_FALSE(is_known_claim("P-bogus"));
}

TEST_CASE("claim spot checks") {
    Engine& engine = shared().engine;
    Catalog& cat = shared().catalog;

    SUBCASE("P-matrix passes with the explicit unit pair") {
        for (const auto& o : check_claim(engine, cat, "P-matrix")) {
            if (o.subject == "M(2,Z(2))") {
                CHECK(o.status == ClaimStatus::pass);
                // the unit pair witness rides along on the passing outcome
                REQUIRE(o.witness_elems.size() == 2);
                const RingAnalysis& a = engine.analyze(cat.find_expr("M(2,Z(2))")->ring);
                CHECK(a.unit_mask[o.witness_elems[0]]);
                CHECK(a.unit_mask[o.witness_elems[1]]);
            }
            if (o.subject == "M(2,Z(1))") CHECK(o.status == ClaimStatus::not_applicable);
            CHECK(o.status != ClaimStatus::fail);
        }
        FiniteRing m2 = eval_ring(engine, "M(2,Z(2))");
        CHECK(matrix_witness_is_unit_pair(engine, ring_zn(2), m2));
    }
    SUBCASE("T-m passes on Z(9)") {
        for (const auto& o : check_claim(engine, cat, "T-m"))
            if (o.subject == "Z(9)") CHECK(o.status == ClaimStatus::pass);
    }
    SUBCASE("L-char treats Z(6) as a subject and Z(5) as not applicable") {
        bool saw6 = false, saw5 = false;
        for (const auto& o : check_claim(engine, cat, "L-char")) {
            if (o.subject == "Z(6)") {
                CHECK(o.status == ClaimStatus::pass);
                saw6 = true;
            }
            if (o.subject == "Z(5)") {
                CHECK(o.status == ClaimStatus::not_applicable);
                saw5 = true;
            }
        }
        CHECK(saw6);
        CHECK(saw5);
    }
    SUBCASE("group-ring characterization evaluates the expected spot values") {
        Engine e2;
        auto spot = [&](const std::string& base, const std::string& grp, bool expect) {
            FiniteRing b = eval_ring(e2, base);
            FiniteGroup g = eval_group(e2, grp);
            FiniteRing rg = eval_ring(e2, "GR(" + base + "," + grp + ")");
            GroupRingTheoremEval ev = eval_group_ring_theorem(e2, b, g, rg);
            CHECK(ev.applicable);
            CHECK(ev.lhs == expect);
            CHECK(ev.rhs() == expect);
        };
        spot("Z(2)", "C(2)", true);
        spot("Z(3)", "C(3)", true);
        spot("Z(3)", "C(2)", false);
        spot("Z(4)", "C(3)", false);
    }
}

TEST_CASE("suite reports are deterministic and serializable") {
    Engine engine;
    CatalogConfig cfg;
    cfg.base_zn = {1, 2, 3, 4, 5, 9};
    cfg.base_gf = {{2, 2}};
    cfg.max_order = 81;
    Catalog cat = build_catalog(engine, cfg);

    Report r1 = run_suite(engine, cat);
    Report r2 = run_suite(engine, cat);
    CHECK(report_to_json(r1) == report_to_json(r2));
    CHECK_FALSE(r1.any_fail());

    // a fresh engine (cold caches) produces the identical report
    Engine engine2;
    Catalog cat2 = build_catalog(engine2, cfg);
    Report r3 = run_suite(engine2, cat2);
    CHECK(report_to_json(r1) == report_to_json(r3));

    // the claim rows arrive in registry order
    REQUIRE(r1.claims.size() == claim_registry().size());
    for (std::size_t i = 0; i < r1.claims.size(); ++i)
        CHECK(r1.claims[i].id == claim_registry()[i].id);
}

TEST_CASE("claim filters narrow the report") {
    Engine engine;
    CatalogConfig cfg;
    cfg.base_zn = {2, 3};
    cfg.base_gf = {};
    Catalog cat = build_catalog(engine, cfg);
    // rows always arrive in registry order, independent of the filter order
    Report r = run_suite(engine, cat, {"P-mino", "P-member"});
    CHECK(r.claims.size() == 2);
    CHECK(r.claims[0].id == "P-member");
    CHECK(r.claims[1].id == "P-mino");
}

TEST_CASE("subring helpers") {
    FiniteRing z6 = ring_zn(6);
    auto members = unital_subring_members(z6, {});
    CHECK(members == std::vector<elem_t>{0, 1, 2, 3, 4, 5});  // 1 generates Z_6

    FiniteRing m2 = matrix_ring(ring_zn(2), 2);
    elem_t e11 = matrix_encode(ring_zn(2), 2, {1, 0, 0, 0});
    auto sub = unital_subring_members(m2, {e11});
    FiniteRing s = subring_on(m2, sub);
    CHECK(s.order() == sub.size());
    CHECK(is_commutative(s));  // diagonal matrices
}

TEST_CASE("p_group_prime") {
    CHECK(p_group_prime(cyclic_group(1)) == 0);
    CHECK(p_group_prime(cyclic_group(8)) == 2);
    CHECK(p_group_prime(cyclic_group(9)) == 3);
    CHECK_FALSE(p_group_prime(cyclic_group(6)).has_value());
    CHECK_FALSE(p_group_prime(symmetric_group_3()).has_value());
}
