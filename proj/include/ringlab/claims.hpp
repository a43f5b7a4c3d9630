#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringlab/catalog.hpp"

namespace ringlab {

struct UnknownClaim : Error {
    explicit UnknownClaim(const std::string& id);
};

enum class ClaimStatus { pass, fail, skipped, not_applicable };

const char* claim_status_name(ClaimStatus s);

/// Result of auditing one claim on one subject (ring, hom, or tuple).
struct ClaimOutcome {
    std::string claim_id;
    std::string subject;  // expression text of the subject(s)
    std::vector<std::uint64_t> subject_hashes;
    ClaimStatus status = ClaimStatus::pass;
    std::string witness;  // present exactly when status == fail
    std::vector<elem_t> witness_elems;
};

struct ClaimSummary {
    std::string id;
    std::string anchor;  // one-line statement of what is being checked
    std::size_t subjects = 0;
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t skipped = 0;
    std::size_t not_applicable = 0;
    std::vector<ClaimOutcome> failures;
};

struct Report {
    std::vector<ClaimSummary> claims;
    std::size_t catalog_size = 0;
    CatalogConfig config;

    bool any_fail() const;
    std::size_t total_failures() const;
};

struct ClaimInfo {
    std::string id;
    std::string anchor;
};

/// All claim ids, in the fixed evaluation order.
const std::vector<ClaimInfo>& claim_registry();
bool is_known_claim(const std::string& id);

/// Evaluates one claim over the catalog. Throws UnknownClaim.
std::vector<ClaimOutcome> check_claim(Engine& engine, const Catalog& catalog,
                                      const std::string& id);

/// Evaluates the given claims (all of them when `ids` is empty) and
/// aggregates per-claim counts. Deterministic: same catalog, same report.
Report run_suite(Engine& engine, const Catalog& catalog,
                 const std::vector<std::string>& ids = {});

// --- per-subject helpers, shared with the acceptance suite ---

/// k * 1 as an element index.
elem_t small_int_elem(const FiniteRing& r, unsigned k);

/// The presented ring on a multiplicatively/additively closed unital
/// subset (members must contain 0 and 1 and be closed; revalidated).
FiniteRing subring_on(const FiniteRing& r, const std::vector<elem_t>& members);

/// Closure of {0, 1} + gens under add, neg and mul.
std::vector<elem_t> unital_subring_members(const FiniteRing& r,
                                           const std::vector<elem_t>& gens);

struct GroupRingTheoremEval {
    bool applicable = false;  // G is a p-group (the trivial group counts)
    bool lhs = false;         // RG weakly sqrt-unit
    bool cond_two_group = false;
    bool cond_three_group = false;
    bool cond_split = false;
    bool rhs() const { return cond_two_group || cond_three_group || cond_split; }
};

/// The final group-ring characterization, evaluated on one (R, G, RG)
/// triple: RG has the weak property iff the base is sqrt-unit with a
/// 2-group, or weakly sqrt-unit with 3 in J and a 3-group, or splits as
/// (sqrt-unit) x (weakly sqrt-unit) with a trivial group.
GroupRingTheoremEval eval_group_ring_theorem(Engine& engine, const FiniteRing& base,
                                             const FiniteGroup& group, const FiniteRing& rg);

/// The explicit 2x2 witness [[0,1],[1,1]]: both witness + 1 and
/// witness - 1 must be units of M_2(R).
bool matrix_witness_is_unit_pair(Engine& engine, const FiniteRing& base, const FiniteRing& m2);

/// |G| = p^k for exactly one prime when nontrivial; 0 encodes the trivial
/// group (a p-group for every p); nullopt when not a prime power.
std::optional<std::size_t> p_group_prime(const FiniteGroup& g);

}  // namespace ringlab
