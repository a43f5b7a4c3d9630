#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ringlab {

/// Element index into a ring's operation tables.
using elem_t = std::uint16_t;

/// Tables are stored dense, so indices must fit elem_t.
inline constexpr std::size_t kHardOrderCap = 65535;

/// Default size cap for all constructors; overridable per call site.
inline constexpr std::size_t kDefaultOrderCap = 4096;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A ring axiom failed during validation. `kind` names the axiom,
/// `witness` holds the offending element indices (unused slots are 0).
struct AxiomViolation : Error {
    AxiomViolation(std::string kind_, std::array<std::size_t, 3> witness_,
                   const std::string& detail);
    std::string kind;
    std::array<std::size_t, 3> witness;
};

struct SizeCapExceeded : Error {
    SizeCapExceeded(std::size_t requested_, std::size_t cap_);
    std::size_t requested;
    std::size_t cap;
};

/// An element was used with a ring it does not belong to.
struct ForeignElement : Error {
    using Error::Error;
};

/// A computed result failed one of the engine's internal cross-checks.
/// Seeing this means the engine itself is broken, not the input.
struct InternalInconsistency : Error {
    using Error::Error;
};

struct RingLimits {
    std::size_t max_order = kDefaultOrderCap;
    /// Orders above this skip the cubic axiom families at validation time
    /// (constructor outputs are checked by the test suite instead).
    std::size_t full_check_order = 1024;
};

/// A finite unital ring presented by dense addition/multiplication tables
/// over element indices 0..n-1. Immutable after validation; handles are
/// cheap to copy and safe to share. The label carries provenance text and
/// does not participate in the hash.
class FiniteRing {
public:
    FiniteRing() = default;

    bool valid() const { return static_cast<bool>(t_); }
    std::size_t order() const { return t_->n; }
    elem_t zero() const { return t_->zero; }
    elem_t one() const { return t_->one; }
    std::uint64_t hash() const { return t_->hash; }

    elem_t add(elem_t a, elem_t b) const { return t_->add[a * t_->n + b]; }
    elem_t mul(elem_t a, elem_t b) const { return t_->mul[a * t_->n + b]; }
    elem_t neg(elem_t a) const { return t_->neg[a]; }
    elem_t sub(elem_t a, elem_t b) const { return add(a, neg(b)); }

    std::span<const elem_t> add_row(elem_t a) const {
        return {t_->add.data() + a * t_->n, t_->n};
    }
    std::span<const elem_t> mul_row(elem_t a) const {
        return {t_->mul.data() + a * t_->n, t_->n};
    }
    std::span<const elem_t> add_table() const { return t_->add; }
    std::span<const elem_t> mul_table() const { return t_->mul; }

    const std::string& label() const { return label_; }
    FiniteRing with_label(std::string label) const {
        FiniteRing r = *this;
        r.label_ = std::move(label);
        return r;
    }

    /// Same presented tables (distinct handles to one validated ring
    /// compare equal through the hash).
    bool same_ring(const FiniteRing& o) const { return t_ && o.t_ && hash() == o.hash(); }

private:
    struct Tables {
        std::size_t n = 0;
        std::vector<elem_t> add, mul, neg;
        elem_t zero = 0, one = 0;
        std::uint64_t hash = 0;
    };
    std::shared_ptr<const Tables> t_;
    std::string label_;

    friend FiniteRing validate_ring(std::size_t, std::vector<elem_t>, std::vector<elem_t>,
                                    elem_t, elem_t, const RingLimits&, std::string);
};

/// Checks every ring axiom on the given tables and returns the immutable
/// ring with derived negation table and canonical hash. The same tables
/// always produce the same hash. Throws AxiomViolation / SizeCapExceeded.
FiniteRing validate_ring(std::size_t order, std::vector<elem_t> add, std::vector<elem_t> mul,
                         elem_t zero, elem_t one, const RingLimits& limits = {},
                         std::string label = {});

/// An element tagged with its owning ring's hash.
struct RingElement {
    elem_t index = 0;
    std::uint64_t ring_hash = 0;
};

RingElement element(const FiniteRing& r, elem_t index);

enum class ElemOp { add, mul, neg, sub };

/// Table-lookup arithmetic; `b` is ignored for neg. Throws ForeignElement
/// when an operand belongs to a different ring.
RingElement elem_op(const FiniteRing& r, ElemOp op, RingElement a,
                    std::optional<RingElement> b = std::nullopt);

/// a^k by square-and-multiply; a^0 = 1.
RingElement power(const FiniteRing& r, RingElement a, std::uint64_t k);
elem_t power_idx(const FiniteRing& r, elem_t a, std::uint64_t k);

/// Additive order of 1 (the least k >= 1 with k*1 = 0); 1 for the zero ring.
std::size_t characteristic(const FiniteRing& r);

/// True iff the multiplication table is symmetric.
bool is_commutative(const FiniteRing& r);

/// A sorted duplicate-free subset of one ring's elements.
struct ElemSet {
    std::uint64_t ring_hash = 0;
    std::vector<elem_t> members;

    std::size_t size() const { return members.size(); }
    bool contains(elem_t x) const;
    bool operator==(const ElemSet&) const = default;
};

ElemSet make_elem_set(const FiniteRing& r, std::vector<elem_t> members);

/// Dense membership mask for O(1) lookups during scans.
std::vector<char> elem_mask(const ElemSet& s, std::size_t order);

namespace detail {
std::uint64_t fnv1a_begin();
void fnv1a_absorb(std::uint64_t& h, std::uint64_t v);
std::string hash_hex(std::uint64_t h);
}  // namespace detail

}  // namespace ringlab
