#pragma once

#include <map>
#include <vector>

#include "ringlab/construct.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// The group of units with the inverse map, plus the one-sided invertible
/// sets (which coincide with the units on finite rings; the computation
/// asserts that instead of assuming it).
struct UnitGroup {
    std::uint64_t ring_hash = 0;
    ElemSet members;
    std::vector<elem_t> inv;  // size |R|; meaningful at unit indices
    ElemSet left_invertible;
    ElemSet right_invertible;

    bool contains(elem_t x) const { return members.contains(x); }
    elem_t inverse(elem_t u) const { return inv[u]; }
};

/// Exhaustive pairing scan for two-sided inverses.
UnitGroup units(const FiniteRing& r);

struct ElementSets {
    ElemSet idempotents;  // e with e^2 = e
    ElemSet nilpotents;   // x with x^k = 0 for some 1 <= k <= |R|
    ElemSet center;       // x commuting with everything
};

ElementSets element_sets(const FiniteRing& r);

/// J(R) = { x : 1 - r*x is a unit for every r }, verified to be a two-sided
/// ideal; also checks 1 + J and -1 + J land in the units.
Ideal jacobson_radical(const FiniteRing& r, const UnitGroup& u);

/// { x : x^k in J for some 1 <= k <= |R| }. The bound |R| is enough since
/// the power sequence of any element repeats within |R| steps.
ElemSet sqrt_jacobson(const FiniteRing& r, const Ideal& jacobson);

/// Smallest semiprime ideal, by ascending fixpoint: repeatedly adjoin every
/// a with a*R*a inside the current ideal and close up. Checked to sit
/// inside the nilpotent elements.
Ideal prime_radical(const FiniteRing& r);

/// True iff every idempotent coset of R/I lifts to an idempotent of R.
bool idempotents_lift(const FiniteRing& r, const Ideal& ideal);

/// Everything the classifier and the claim checkers need about one ring,
/// computed once and cached by the Engine.
struct RingAnalysis {
    FiniteRing ring;
    UnitGroup unit_group;
    ElementSets sets;
    Ideal jacobson;
    ElemSet sqrt_j;
    Ideal lower_radical;       // prime radical
    FiniteRing quotient_by_j;  // R / J(R)
    RingHom quotient_map;

    std::vector<char> unit_mask, j_mask, sqrt_mask, nil_mask, id_mask;

    bool in_units(elem_t x) const { return unit_mask[x] != 0; }
    bool in_j(elem_t x) const { return j_mask[x] != 0; }
    bool in_sqrt_j(elem_t x) const { return sqrt_mask[x] != 0; }
};

RingAnalysis analyze_ring(const FiniteRing& r);

}  // namespace ringlab
