#include "doctest.h"
#include "ringlab/engine.hpp"
#include "ringlab/expr.hpp"

using namespace ringlab;

namespace {

const ClassificationRecord& rec_of(Engine& engine, const std::string& expr) {
    return engine.classify(eval_ring(engine, expr));
}

}  // namespace

TEST_CASE("unit-class verdicts on the small separating examples") {
    Engine engine;

    const auto& z3 = rec_of(engine, "Z(3)");
    CHECK(is_yes(z3.w_sqrt_ju));
    CHECK(is_no(z3.sqrt_ju));
    CHECK(is_yes(z3.wuu));

    const auto& z4 = rec_of(engine, "Z(4)");
    CHECK(is_yes(z4.sqrt_ju));
    CHECK(is_yes(z4.uu));

    const auto& z5 = rec_of(engine, "Z(5)");
    CHECK(is_no(z5.w_sqrt_ju));

    const auto& z9 = rec_of(engine, "Z(9)");
    CHECK(is_yes(z9.w_sqrt_ju));
    CHECK(is_no(z9.sqrt_ju));

    // the weak decomposition of every unit of Z_9 exists explicitly
    FiniteRing r9 = eval_ring(engine, "Z(9)");
    const RingAnalysis& a9 = engine.analyze(r9);
    for (elem_t u : a9.unit_group.members.members)
        CHECK((a9.sqrt_mask[r9.sub(u, 1)] || a9.sqrt_mask[r9.add(u, 1)]));
}

TEST_CASE("boolean family") {
    Engine engine;
    CHECK(is_yes(rec_of(engine, "Z(2)").boolean_ring));
    CHECK(is_no(rec_of(engine, "Z(3)").boolean_ring));
    CHECK(is_yes(rec_of(engine, "Z(3)").weakly_boolean));
    CHECK(is_yes(rec_of(engine, "Prod(Z(2),Z(3))").weakly_boolean));
    CHECK(is_no(rec_of(engine, "Z(9)").weakly_boolean));
    CHECK(is_yes(rec_of(engine, "Z(9)").semi_weakly_boolean));
}

TEST_CASE("clean family") {
    Engine engine;
    const auto& z9 = rec_of(engine, "Z(9)");
    CHECK(is_yes(z9.clean));
    CHECK(is_yes(z9.exchange));
    CHECK(is_no(z9.j_clean));         // 2 is not idempotent + radical
    CHECK(is_yes(z9.weakly_j_clean)); // but 2 = 3 - 1 works

    const auto& z2 = rec_of(engine, "Z(2)");
    CHECK(is_yes(z2.nil_clean));

    const auto& z3 = rec_of(engine, "Z(3)");
    CHECK(is_yes(z3.weakly_nil_clean));
    CHECK(is_no(z3.nil_clean));
    CHECK(is_yes(z3.strongly_weakly_nil_clean));

    CHECK(is_no(rec_of(engine, "Z(5)").weakly_nil_clean));
}

TEST_CASE("regularity family") {
    Engine engine;
    const auto& f4 = rec_of(engine, "GF(2,2)");
    CHECK(is_yes(f4.regular));
    CHECK(is_yes(f4.strongly_regular));
    CHECK(is_yes(f4.unit_regular));

    const auto& z4 = rec_of(engine, "Z(4)");
    CHECK(is_no(z4.regular));
    CHECK(is_yes(z4.pi_regular));
    CHECK(is_yes(z4.semi_regular));

    const auto& m2 = rec_of(engine, "M(2,Z(2))");
    CHECK(is_yes(m2.regular));
    CHECK(is_no(m2.strongly_regular));
    CHECK(is_yes(m2.unit_regular));
}

TEST_CASE("structural predicates") {
    Engine engine;
    const auto& z9 = rec_of(engine, "Z(9)");
    CHECK(is_yes(z9.local));
    CHECK(is_yes(z9.two_primal));
    CHECK(is_yes(z9.commutative));
    CHECK(is_no(z9.reduced));

    const auto& m2 = rec_of(engine, "M(2,Z(2))");
    CHECK(is_no(m2.two_primal));
    CHECK(is_no(m2.abelian));
    CHECK(is_no(m2.local));
    CHECK(is_yes(m2.dedekind_finite));

    const auto& t2 = rec_of(engine, "T(2,Z(2))");
    CHECK(is_yes(t2.sqrt_ju));
    CHECK(is_yes(t2.w_sqrt_ju));
    CHECK(is_no(t2.local));
    CHECK(is_no(t2.commutative));
    CHECK(is_yes(t2.two_primal));

    // the zero ring: weakly sqrt-unit but not local
    const auto& z1 = rec_of(engine, "Z(1)");
    CHECK(is_yes(z1.w_sqrt_ju));
    CHECK(is_no(z1.local));
    CHECK(is_yes(z1.boolean_ring));
}

TEST_CASE("fields are local, matrix rings are not") {
    Engine engine;
    CHECK(is_yes(rec_of(engine, "GF(2,2)").local));
    CHECK(is_yes(rec_of(engine, "GF(3,2)").local));
    CHECK(is_yes(rec_of(engine, "TrivExt(Z(2))").local));
}

TEST_CASE("trivial extension records") {
    Engine engine;
    const auto& e3 = rec_of(engine, "TrivExt(Z(3))");
    CHECK(is_yes(e3.w_sqrt_ju));
    CHECK(is_no(e3.sqrt_ju));
    CHECK(is_yes(e3.local));
}

TEST_CASE("skipping expensive predicates") {
    EngineOptions opts;
    opts.classify.expensive_order_threshold = 0;  // force skipping
    Engine engine(opts);
    const auto& rec = rec_of(engine, "Z(9)");
    CHECK(is_skipped(rec.exchange));
    CHECK(is_skipped(rec.pi_regular));
    CHECK(is_skipped(rec.unit_regular));
    CHECK(is_yes(rec.w_sqrt_ju));  // cheap predicates still computed
    CHECK(lattice_violations(rec).empty());
}

TEST_CASE("implication lattice holds on a mixed sample") {
    Engine engine;
    for (const char* expr :
         {"Z(1)", "Z(2)", "Z(3)", "Z(4)", "Z(5)", "Z(6)", "Z(8)", "Z(9)", "Z(12)", "GF(2,2)",
          "GF(2,3)", "GF(3,2)", "M(2,Z(2))", "M(2,Z(3))", "T(2,Z(2))", "T(2,Z(3))",
          "TrivExt(Z(2))", "TrivExt(Z(6))", "GR(Z(2),C(2))", "GR(Z(3),C(3))",
          "Prod(Z(2),Z(3))", "Prod(Z(3),Z(3))"}) {
        const auto& rec = rec_of(engine, expr);
        CHECK_MESSAGE(lattice_violations(rec).empty(), expr);
    }
}

TEST_CASE("verdict field table is alphabetical and complete") {
    const auto& fields = verdict_fields();
    CHECK(fields.size() == 29);
    for (std::size_t i = 1; i < fields.size(); ++i)
        CHECK(std::string(fields[i - 1].name) < std::string(fields[i].name));
    CHECK(find_verdict_field("weakly_semi_boolean") == find_verdict_field("weakly_j_clean"));
    CHECK(find_verdict_field("semi_boolean") == find_verdict_field("j_clean"));
    CHECK(find_verdict_field("no_such_class") == nullptr);
}
