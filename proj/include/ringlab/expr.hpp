#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "ringlab/engine.hpp"

namespace ringlab {

struct SourceSpan {
    std::size_t begin = 0;
    std::size_t end = 0;
};

/// Parse failure with the offending position and what was expected there.
struct ParseError : Error {
    ParseError(std::size_t position_, std::string expected_, const std::string& got);
    std::size_t position;
    std::string expected;
};

struct UnknownName : Error {
    UnknownName(std::string name_, std::size_t position_);
    std::string name;
    std::size_t position;
};

struct ArityError : Error {
    ArityError(std::size_t position_, const std::string& detail);
    std::size_t position;
};

/// A construction error raised while evaluating a sub-expression; carries
/// that sub-expression's source span.
struct EvalError : Error {
    EvalError(SourceSpan span_, const std::string& detail);
    SourceSpan span;
};

enum class ExprKind { Z, GF, M, T, Prod, TrivExt, Quot, Corner, GR, C, GProd, S3 };

const char* expr_kind_name(ExprKind k);

/// Pure expression tree naming a ring or group construction.
/// Arities: Z(n); GF(p,k); M(k,ring); T(k,ring); Prod(x,...) over >= 2 rings
/// or >= 2 groups; TrivExt(ring); Quot(ring,[elems]); Corner(ring,elem);
/// GR(ring,group); C(n); GProd(group,...) >= 2; S3.
struct ExprAst {
    ExprKind kind{};
    std::vector<long long> ints;
    std::vector<ExprAst> children;
    std::vector<elem_t> elems;  // element-index arguments (Quot list, Corner index)
    SourceSpan span{};

    bool structurally_equal(const ExprAst& o) const;
};

/// Recursive-descent parse. Names are case-insensitive, whitespace is
/// insignificant, input is capped at 4096 characters.
ExprAst parse_expr(const std::string& text);

/// Canonical text: upper-camel names, no whitespace. print(parse(t)) is
/// canonical and parse(print(a)) == a.
std::string print_expr(const ExprAst& ast);

using Evaluated = std::variant<FiniteRing, FiniteGroup>;

/// Builds the named object, labelling every sub-result with its canonical
/// expression text. Construction failures are rethrown as EvalError with
/// the offending sub-expression's span. Group rings built here are
/// registered with the engine for later augmentation lookups.
Evaluated eval_expr(Engine& engine, const ExprAst& ast);

/// Shorthand: parse + eval, requiring a ring result.
FiniteRing eval_ring(Engine& engine, const std::string& text);
FiniteGroup eval_group(Engine& engine, const std::string& text);

}  // namespace ringlab
