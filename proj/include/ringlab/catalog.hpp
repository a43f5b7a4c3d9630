#pragma once

#include <string>
#include <vector>

#include "ringlab/expr.hpp"

namespace ringlab {

struct CatalogConfig {
    /// Hard order bound applied to every construction.
    std::size_t max_order = kDefaultOrderCap;
    /// Base rings: Z_n for these n, then the listed prime-power fields.
    std::vector<std::size_t> base_zn = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
    std::vector<std::pair<std::size_t, std::size_t>> base_gf = {
        {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}};
    /// Corners and single-generator quotients are derived from catalog
    /// rings up to this order.
    std::size_t derived_from_order = 64;
    /// Extra expressions appended after the generated entries.
    std::vector<std::string> extra_exprs;
};

struct CatalogEntry {
    std::string expr;  // canonical expression text; re-evaluates to `ring`
    ExprAst ast;
    FiniteRing ring;
};

/// A surjection recorded during catalog construction (product projections,
/// quotient maps, augmentations); kept with its endpoint rings so checks
/// are self-contained.
struct RecordedSurjection {
    std::string kind;  // "projection" | "quotient" | "augmentation"
    RingHom hom;
    FiniteRing source;
    FiniteRing target;
};

struct Catalog {
    CatalogConfig config;
    std::vector<CatalogEntry> entries;  // deterministic order, no duplicate hashes
    std::vector<RecordedSurjection> surjections;
    std::vector<std::string> skipped;  // over-cap constructions, as "expr: reason"

    const CatalogEntry* find_expr(const std::string& expr) const;
    bool contains_hash(std::uint64_t h) const;
};

/// Deterministic construction: base rings, one closure round of products of
/// base pairs / M_2 / T_2, T_3 / trivial extension / group rings over the
/// preset groups, then corners at every idempotent and quotients by every
/// principal ideal for rings up to `derived_from_order`. Oversize
/// constructions are skipped and logged, never fatal.
Catalog build_catalog(Engine& engine, const CatalogConfig& config = {});

}  // namespace ringlab
