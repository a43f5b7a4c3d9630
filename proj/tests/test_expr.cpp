#include <random>

#include "doctest.h"
#include "ringlab/expr.hpp"

using namespace ringlab;

TEST_CASE("parsing the basic shapes") {
    ExprAst gr = parse_expr("GR(Z(3),C(3))");
    CHECK(gr.kind == ExprKind::GR);
    CHECK(gr.children[0].kind == ExprKind::Z);
    CHECK(gr.children[1].kind == ExprKind::C);

    ExprAst m = parse_expr("M(2, Z(2))");
    CHECK(m.kind == ExprKind::M);
    CHECK(m.ints[0] == 2);

    ExprAst q = parse_expr("Quot(Z(6), [2])");
    CHECK(q.kind == ExprKind::Quot);
    CHECK(q.elems == std::vector<elem_t>{2});

    CHECK(parse_expr("S3").kind == ExprKind::S3);
    CHECK(parse_expr("Quot(Z(6),[])").elems.empty());
}

TEST_CASE("names are case-insensitive, whitespace ignored") {
    CHECK(print_expr(parse_expr("gr( z(3) , c(3) )")) == "GR(Z(3),C(3))");
    CHECK(print_expr(parse_expr("TRIVEXT(z(2))")) == "TrivExt(Z(2))");
    CHECK(print_expr(parse_expr("gprod(c(2),C(2))")) == "GProd(C(2),C(2))");
}

TEST_CASE("print and parse round trips") {
    for (const char* t :
         {"Z(9)", "GF(2,2)", "M(2,Z(2))", "T(3,Z(4))", "Prod(Z(2),Z(3),Z(4))",
          "TrivExt(Z(3))", "Quot(Z(6),[2])", "Quot(Z(6),[])", "Corner(M(2,Z(2)),5)",
          "GR(Z(2),GProd(C(2),C(2)))", "C(4)", "S3", "Prod(C(2),C(3))"}) {
        ExprAst ast = parse_expr(t);
        CHECK(print_expr(ast) == t);
        CHECK(parse_expr(print_expr(ast)).structurally_equal(ast));
    }
}

namespace {

ExprAst random_ast(std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 7);
    ExprAst ast;
    switch (pick(rng)) {
        case 0:
            ast.kind = ExprKind::Z;
            ast.ints = {std::uniform_int_distribution<long long>(1, 12)(rng)};
            return ast;
        case 1:
            ast.kind = ExprKind::GF;
            ast.ints = {2, std::uniform_int_distribution<long long>(1, 3)(rng)};
            return ast;
        case 2:
            ast.kind = ExprKind::M;
            ast.ints = {2};
            ast.children = {random_ast(rng, depth - 1)};
            return ast;
        case 3:
            ast.kind = ExprKind::TrivExt;
            ast.children = {random_ast(rng, depth - 1)};
            return ast;
        case 4:
            ast.kind = ExprKind::Prod;
            ast.children = {random_ast(rng, depth - 1), random_ast(rng, depth - 1)};
            return ast;
        case 5:
            ast.kind = ExprKind::Quot;
            ast.children = {random_ast(rng, depth - 1)};
            ast.elems = {static_cast<elem_t>(std::uniform_int_distribution<int>(0, 5)(rng))};
            return ast;
        case 6:
            ast.kind = ExprKind::Corner;
            ast.children = {random_ast(rng, depth - 1)};
            ast.elems = {static_cast<elem_t>(std::uniform_int_distribution<int>(0, 5)(rng))};
            return ast;
        default:
            ast.kind = ExprKind::GR;
            ast.children = {random_ast(rng, depth - 1), ExprAst{}};
            ast.children[1].kind = ExprKind::C;
            ast.children[1].ints = {std::uniform_int_distribution<long long>(1, 4)(rng)};
            return ast;
    }
}

}  // namespace

TEST_CASE("round trip on random trees") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        ExprAst ast = random_ast(rng, 3);
        std::string text = print_expr(ast);
        ExprAst back = parse_expr(text);
        CHECK(back.structurally_equal(ast));
        CHECK(print_expr(back) == text);
    }
}

TEST_CASE("parse errors carry position and expectation") {
    CHECK_THROWS_AS(parse_expr("Z(3"), ParseError);
    CHECK_THROWS_AS(parse_expr("Z()"), ParseError);
    CHECK_THROWS_AS(parse_expr("Z(3))"), ParseError);
    CHECK_THROWS_AS(parse_expr("FOO(3)"), UnknownName);
    CHECK_THROWS_AS(parse_expr("Z(3,4)"), ArityError);
    CHECK_THROWS_AS(parse_expr("S3(1)"), ArityError);
    CHECK_THROWS_AS(parse_expr("Prod(Z(2))"), ArityError);
    CHECK_THROWS_AS(parse_expr("Quot(Z(6),2)"), ArityError);
    try {
        parse_expr("Z(3");
    } catch (const ParseError& e) {
        CHECK(e.position == 3);
        CHECK(e.expected.find(")") != std::string::npos);
    }
    try {
        parse_expr("foo(3)");
    } catch (const UnknownName& e) {
        CHECK(e.name == "foo");
        CHECK(e.position == 0);
    }
}

TEST_CASE("oversized input is rejected") {
    std::string big(5000, 'Z');
    CHECK_THROWS_AS(parse_expr(big), ParseError);
}

TEST_CASE("evaluation") {
    Engine engine;
    CHECK(eval_ring(engine, "Z(9)").hash() == ring_zn(9).hash());

    FiniteRing ext = eval_ring(engine, "TrivExt(Z(3))");
    CHECK(ext.order() == 9);
    CHECK(engine.is_w_sqrt_ju(ext));
    CHECK_FALSE(engine.is_sqrt_ju(ext));

    FiniteRing rg = eval_ring(engine, "GR(Z(2), Prod(C(2),C(2)))");
    CHECK(rg.order() == 16);
    CHECK(engine.group_ring_info(rg) != nullptr);

    // idempotent: same text gives the hash-equal object
    CHECK(eval_ring(engine, "GR(Z(2), Prod(C(2),C(2)))").hash() == rg.hash());

    FiniteGroup klein = eval_group(engine, "GProd(C(2),C(2))");
    CHECK(klein.order() == 4);

    // labels carry the canonical expression text
    CHECK(eval_ring(engine, "m(2, z(2))").label() == "M(2,Z(2))");
}

TEST_CASE("evaluation failures carry the failing span") {
    Engine engine;
    CHECK_THROWS_AS(eval_ring(engine, "Corner(Z(4),3)"), EvalError);  // 3 not idempotent
    CHECK_THROWS_AS(eval_ring(engine, "C(3)"), EvalError);            // group, not ring
    CHECK_THROWS_AS(eval_ring(engine, "Prod(Z(2),C(2))"), EvalError);
    CHECK_THROWS_AS(eval_ring(engine, "GR(C(2),C(2))"), EvalError);
    try {
        eval_ring(engine, "M(2,M(2,M(2,Z(2))))");  // blows the default cap
    } catch (const EvalError& e) {
        CHECK(e.span.end > e.span.begin);
    }
}

TEST_CASE("quotient and corner expressions use child-ring element indices") {
    Engine engine;
    FiniteRing q = eval_ring(engine, "Quot(Z(6),[2])");
    CHECK(q.hash() == ring_zn(2).hash());
    FiniteRing c = eval_ring(engine, "Corner(Prod(Z(2),Z(3)),1)");  // (1,0) encodes as 1
    CHECK(c.order() == 2);
}
