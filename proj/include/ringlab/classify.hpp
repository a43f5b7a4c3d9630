#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ringlab/radicals.hpp"

namespace ringlab {

enum class Verdict : unsigned char { no = 0, yes = 1, skipped = 2 };

inline bool is_yes(Verdict v) { return v == Verdict::yes; }
inline bool is_no(Verdict v) { return v == Verdict::no; }
inline bool is_skipped(Verdict v) { return v == Verdict::skipped; }

struct ClassifyOptions {
    /// Predicates with cubic scans (exchange, pi_regular, unit_regular) are
    /// skipped with verdict `skipped` above this order.
    std::size_t expensive_order_threshold = 1024;
};

/// One boolean verdict per ring class, plus the characteristic.
struct ClassificationRecord {
    std::uint64_t ring_hash = 0;
    std::size_t order = 0;
    std::size_t characteristic = 0;
    std::size_t expensive_order_threshold = 0;

    Verdict uu{}, wuu{}, ju{}, wju{}, sqrt_ju{}, w_sqrt_ju{};
    Verdict boolean_ring{}, weakly_boolean{}, semi_weakly_boolean{};
    Verdict clean{}, strongly_clean{}, j_clean{}, weakly_j_clean{};
    Verdict nil_clean{}, strongly_nil_clean{}, weakly_nil_clean{}, strongly_weakly_nil_clean{};
    Verdict exchange{};
    Verdict regular{}, strongly_regular{}, unit_regular{}, pi_regular{}, semi_regular{};
    Verdict reduced{}, abelian{}, local{}, dedekind_finite{}, two_primal{}, commutative{};
};

/// Field table in alphabetical order of the serialized names; used by
/// census columns, JSON serialization and the lattice check.
struct VerdictField {
    const char* name;
    Verdict ClassificationRecord::*member;
};
const std::vector<VerdictField>& verdict_fields();

/// Resolves a verdict name, accepting the synonyms "weakly_semi_boolean"
/// (= weakly_j_clean) and "semi_boolean" (= j_clean). Returns nullptr when
/// unknown.
const VerdictField* find_verdict_field(const std::string& name);

/// The six unit-decomposition classes: U(R) compared against 1 + S and
/// +-1 + S for S = Nil(R), J(R), sqrt J(R). The containments S + 1 inside
/// U(R) always hold and are asserted; only the reverse inclusion decides.
void unit_class_predicates(const RingAnalysis& a, ClassificationRecord& rec);

/// boolean / weakly boolean / semi weakly boolean.
void boolean_predicates(const RingAnalysis& a, const RingAnalysis& quot,
                        ClassificationRecord& rec);

/// The clean / nil-clean / J-clean family plus exchange.
void clean_predicates(const RingAnalysis& a, const ClassifyOptions& opts,
                      ClassificationRecord& rec);

/// regular / strongly regular / unit-regular / pi-regular / semi-regular.
void regularity_predicates(const RingAnalysis& a, const RingAnalysis& quot,
                           const ClassifyOptions& opts, ClassificationRecord& rec);

/// reduced / abelian / local / Dedekind-finite / 2-primal / commutative.
void structural_predicates(const RingAnalysis& a, ClassificationRecord& rec);

/// Full record. `quot` must be the analysis of a.quotient_by_j. Verifies
/// the definitional implication lattice before returning; a violation is
/// an engine bug and raises InternalInconsistency.
ClassificationRecord classify_ring(const RingAnalysis& a, const RingAnalysis& quot,
                                   const ClassifyOptions& opts = {});

/// Checks every implication of the lattice; returns the names of violated
/// implications (empty when consistent). Implications with a skipped side
/// are not checked.
std::vector<std::string> lattice_violations(const ClassificationRecord& rec);

}  // namespace ringlab
