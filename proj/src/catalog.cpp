#include "ringlab/catalog.hpp"

#include <algorithm>
#include <unordered_set>

namespace ringlab {

const CatalogEntry* Catalog::find_expr(const std::string& expr) const {
    for (const auto& e : entries)
        if (e.expr == expr) return &e;
    return nullptr;
}

bool Catalog::contains_hash(std::uint64_t h) const {
    for (const auto& e : entries)
        if (e.ring.hash() == h) return true;
    return false;
}

namespace {

class Builder {
public:
    Builder(Engine& engine, const CatalogConfig& config) : engine_(engine) {
        catalog_.config = config;
        limits_ = engine.limits();
    }

    Catalog run() {
        const CatalogConfig& cfg = catalog_.config;
        std::vector<std::string> base;
        for (std::size_t n : cfg.base_zn) base.push_back("Z(" + std::to_string(n) + ")");
        for (auto [p, k] : cfg.base_gf)
            base.push_back("GF(" + std::to_string(p) + "," + std::to_string(k) + ")");

        for (const auto& e : base) try_add(e);

        for (std::size_t i = 0; i < base.size(); ++i)
            for (std::size_t j = i; j < base.size(); ++j)
                try_add("Prod(" + base[i] + "," + base[j] + ")");

        for (const auto& e : base) try_add("M(2," + e + ")");
        for (const auto& e : base) try_add("T(2," + e + ")");
        for (const auto& e : base) try_add("T(3," + e + ")");
        for (const auto& e : base) try_add("TrivExt(" + e + ")");

        const std::vector<std::string> groups = {"C(1)",
                                                 "C(2)",
                                                 "C(3)",
                                                 "C(4)",
                                                 "GProd(C(2),C(2))",
                                                 "GProd(C(2),C(3))",
                                                 "S3"};
        for (const auto& e : base)
            for (const auto& g : groups) try_add("GR(" + e + "," + g + ")");

        // corners at every idempotent and quotients by every principal
        // ideal, for the small entries gathered so far
        const std::size_t upto = cfg.derived_from_order;
        const std::size_t first_round = catalog_.entries.size();
        for (std::size_t i = 0; i < first_round; ++i) {
            // copy: try_add appends to entries and may reallocate
            const FiniteRing ring = catalog_.entries[i].ring;
            const std::string expr = catalog_.entries[i].expr;
            if (ring.order() > upto) continue;
            for (elem_t e = 0; e < ring.order(); ++e)
                if (ring.mul(e, e) == e && e != ring.zero())
                    try_add("Corner(" + expr + "," + std::to_string(e) + ")");
            for (elem_t x = 0; x < ring.order(); ++x)
                try_add("Quot(" + expr + ",[" + std::to_string(x) + "])");
        }

        for (const auto& e : cfg.extra_exprs) try_add(e);
        return std::move(catalog_);
    }

private:
    void try_add(const std::string& text) {
        ExprAst ast;
        try {
            ast = parse_expr(text);
        } catch (const Error& e) {
            catalog_.skipped.push_back(text + ": " + e.what());
            return;
        }
        try {
            Evaluated v = eval_expr(engine_, ast);
            auto* ring = std::get_if<FiniteRing>(&v);
            if (!ring) {
                catalog_.skipped.push_back(text + ": evaluates to a group");
                return;
            }
            if (ring->order() > catalog_.config.max_order) {
                catalog_.skipped.push_back(text + ": exceeds catalog size cap");
                return;
            }
            record_surjections(ast, *ring);
            if (seen_.insert(ring->hash()).second)
                catalog_.entries.push_back({print_expr(ast), ast, *ring});
        } catch (const Error& e) {
            catalog_.skipped.push_back(text + ": " + e.what());
        }
    }

    // products contribute their projections, quotients their canonical map,
    // group rings their augmentation; recorded even when the entry itself
    // is a duplicate, deduplicated by (kind, source, target, table)
    void record_surjections(const ExprAst& ast, const FiniteRing& ring) {
        if (ast.kind == ExprKind::Prod) {
            std::vector<FiniteRing> factors;
            for (const auto& c : ast.children) {
                Evaluated v = eval_expr(engine_, c);
                if (!std::holds_alternative<FiniteRing>(v)) return;
                factors.push_back(std::get<FiniteRing>(v));
            }
            ProductResult pr = direct_product(factors, limits_);
            for (std::size_t i = 0; i < factors.size(); ++i)
                add_surjection({"projection", pr.projections[i], ring, factors[i]});
        } else if (ast.kind == ExprKind::Quot) {
            FiniteRing base = std::get<FiniteRing>(eval_expr(engine_, ast.children[0]));
            Ideal ideal = ideal_generated(base, make_elem_set(base, ast.elems));
            QuotientResult q = quotient(base, ideal, limits_);
            add_surjection({"quotient", q.projection, base, ring});
        } else if (ast.kind == ExprKind::GR) {
            AugmentationResult aug = engine_.augmentation_of(ring);
            FiniteRing base = std::get<FiniteRing>(eval_expr(engine_, ast.children[0]));
            add_surjection({"augmentation", aug.hom, ring, base});
        }
    }

    void add_surjection(RecordedSurjection s) {
        std::uint64_t h = detail::fnv1a_begin();
        detail::fnv1a_absorb(h, s.hom.source_hash);
        detail::fnv1a_absorb(h, s.hom.target_hash);
        for (elem_t v : s.hom.map) detail::fnv1a_absorb(h, v);
        if (seen_surjections_.insert(h).second) catalog_.surjections.push_back(std::move(s));
    }

    Engine& engine_;
    Catalog catalog_;
    RingLimits limits_;
    std::unordered_set<std::uint64_t> seen_;
    std::unordered_set<std::uint64_t> seen_surjections_;
};

}  // namespace

Catalog build_catalog(Engine& engine, const CatalogConfig& config) {
    return Builder(engine, config).run();
}

}  // namespace ringlab
