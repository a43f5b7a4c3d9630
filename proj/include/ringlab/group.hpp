#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

struct GroupAxiomViolation : Error {
    GroupAxiomViolation(std::string kind_, std::array<std::size_t, 3> witness_,
                        const std::string& detail);
    std::string kind;
    std::array<std::size_t, 3> witness;
};

struct NotPrime : Error {
    explicit NotPrime(std::size_t p);
};

/// A finite group given by its Cayley table. Immutable after validation.
class FiniteGroup {
public:
    FiniteGroup() = default;

    bool valid() const { return static_cast<bool>(t_); }
    std::size_t order() const { return t_->m; }
    elem_t identity() const { return t_->identity; }
    elem_t op(elem_t a, elem_t b) const { return t_->cayley[a * t_->m + b]; }
    elem_t inv(elem_t a) const { return t_->inv[a]; }
    std::span<const elem_t> cayley_table() const { return t_->cayley; }
    std::uint64_t hash() const { return t_->hash; }

    const std::string& label() const { return label_; }
    FiniteGroup with_label(std::string label) const {
        FiniteGroup g = *this;
        g.label_ = std::move(label);
        return g;
    }

private:
    struct Tables {
        std::size_t m = 0;
        std::vector<elem_t> cayley, inv;
        elem_t identity = 0;
        std::uint64_t hash = 0;
    };
    std::shared_ptr<const Tables> t_;
    std::string label_;

    friend FiniteGroup validate_group(std::vector<elem_t>, elem_t, const RingLimits&,
                                      std::string);
};

/// Validates associativity, the identity law and two-sided inverses, and
/// derives the inverse table. The Cayley table is square row-major.
FiniteGroup validate_group(std::vector<elem_t> cayley, elem_t identity,
                           const RingLimits& limits = {}, std::string label = {});

/// Addition mod m.
FiniteGroup cyclic_group(std::size_t m, const RingLimits& limits = {});

/// Componentwise Cayley table; index = g + |G| * h.
FiniteGroup group_product(const FiniteGroup& g, const FiniteGroup& h,
                          const RingLimits& limits = {});

/// Symmetric group on three letters; permutations numbered in lexicographic
/// one-line order (012, 021, 102, 120, 201, 210), identity = 0.
FiniteGroup symmetric_group_3(const RingLimits& limits = {});

/// Least k >= 1 with g^k = identity.
std::size_t element_order(const FiniteGroup& g, elem_t x);

/// True iff every element order is a power of p. Cross-checked against
/// |G| being a power of p; disagreement raises InternalInconsistency.
bool is_p_group(const FiniteGroup& g, std::size_t p);

bool is_trivial(const FiniteGroup& g);

bool is_prime(std::size_t p);

/// Sorted multiset of element orders (profile used to compare groups).
std::vector<std::size_t> order_profile(const FiniteGroup& g);

}  // namespace ringlab
