#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ringlab/group.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

struct NoPolynomialShipped : Error {
    NoPolynomialShipped(std::size_t p, std::size_t k);
};
struct NotAnIdeal : Error {
    using Error::Error;
};
struct NotIdempotent : Error {
    using Error::Error;
};
struct ZeroCorner : Error {
    using Error::Error;
};
struct NotAGroupRing : Error {
    using Error::Error;
};

/// A two-sided ideal: contains zero, closed under addition and negation,
/// absorbs ring multiplication on both sides. Construct via `checked` (which
/// verifies all of that) or `ideal_generated`.
struct Ideal {
    std::uint64_t ring_hash = 0;
    ElemSet members;

    std::size_t size() const { return members.size(); }
    bool contains(elem_t x) const { return members.contains(x); }

    static Ideal checked(const FiniteRing& r, ElemSet members);
};

/// A unital ring homomorphism given by its value table. `checked` verifies
/// 0/1 preservation, additivity and multiplicativity.
struct RingHom {
    std::uint64_t source_hash = 0;
    std::uint64_t target_hash = 0;
    std::vector<elem_t> map;

    elem_t operator()(elem_t x) const { return map[x]; }

    static RingHom checked(const FiniteRing& source, const FiniteRing& target,
                           std::vector<elem_t> map);
    bool is_surjective(const FiniteRing& target) const;
};

/// Integers mod n.
FiniteRing ring_zn(std::size_t n, const RingLimits& limits = {});

/// The field of order p^k. Elements are polynomials over Z_p of degree < k
/// reduced by a fixed published irreducible polynomial (shipped for
/// p^k <= 64 when k >= 2); index = sum of coefficient c_i * p^i. For k = 1
/// this is Z_p.
FiniteRing ring_gf(std::size_t p, std::size_t k, const RingLimits& limits = {});

struct ProductResult {
    FiniteRing ring;
    std::vector<RingHom> projections;
};

/// Componentwise ring structure; element index is the little-endian
/// mixed-radix encoding of the component indices (component 0 is the least
/// significant digit).
ProductResult direct_product(const std::vector<FiniteRing>& factors,
                             const RingLimits& limits = {});

elem_t product_encode(const std::vector<FiniteRing>& factors, const std::vector<elem_t>& comps);
std::vector<elem_t> product_decode(const std::vector<FiniteRing>& factors, elem_t x);

/// k x k matrices over R; entry (i,j) is mixed-radix digit i*k+j with digit 0
/// least significant.
FiniteRing matrix_ring(const FiniteRing& r, std::size_t k, const RingLimits& limits = {});

elem_t matrix_encode(const FiniteRing& r, std::size_t k, const std::vector<elem_t>& entries);
std::vector<elem_t> matrix_decode(const FiniteRing& r, std::size_t k, elem_t x);

/// Upper triangular k x k matrices; digits enumerate entries (i,j), i <= j,
/// row by row: (0,0),(0,1),...,(0,k-1),(1,1),...,(k-1,k-1).
FiniteRing upper_triangular(const FiniteRing& r, std::size_t k, const RingLimits& limits = {});

elem_t triangular_encode(const FiniteRing& r, std::size_t k, const std::vector<elem_t>& entries);
std::vector<elem_t> triangular_decode(const FiniteRing& r, std::size_t k, elem_t x);

/// Pairs (r, m) with componentwise addition and (r,m)(s,n) = (rs, rn + ms),
/// the bimodule being the ring itself; index = r + |R| * m.
FiniteRing trivial_extension(const FiniteRing& r, const RingLimits& limits = {});

elem_t trivext_encode(const FiniteRing& r, elem_t first, elem_t second);

/// Least subset containing gens that is closed under addition, negation and
/// two-sided multiplication by ring elements (worklist closure).
Ideal ideal_generated(const FiniteRing& r, const ElemSet& gens);

struct QuotientResult {
    FiniteRing ring;
    RingHom projection;
};

/// Cosets represented by their least member index, sorted ascending.
QuotientResult quotient(const FiniteRing& r, const Ideal& ideal, const RingLimits& limits = {});

/// The ring e*R*e with identity e, for an idempotent e != 0. Elements are
/// numbered by ascending source index; tables are revalidated.
FiniteRing corner(const FiniteRing& r, elem_t e, const RingLimits& limits = {});

/// Map from corner element indices back to source-ring element indices.
std::vector<elem_t> corner_members(const FiniteRing& r, elem_t e);

struct GroupRing {
    FiniteRing ring;
    FiniteRing base;
    FiniteGroup group;
};

/// Functions G -> R with pointwise addition and convolution product;
/// index digit g (base |R|, little-endian) is the coefficient of group
/// element g.
GroupRing group_ring(const FiniteRing& r, const FiniteGroup& g, const RingLimits& limits = {});

elem_t group_ring_encode(const FiniteRing& r, const FiniteGroup& g,
                         const std::vector<elem_t>& coeffs);
std::vector<elem_t> group_ring_decode(const FiniteRing& r, const FiniteGroup& g, elem_t x);

struct AugmentationResult {
    RingHom hom;    // coefficient-sum map RG -> R
    Ideal kernel;   // the augmentation ideal
};

/// The coefficient-sum homomorphism and its kernel. |kernel| = |RG| / |R|.
AugmentationResult augmentation(const GroupRing& rg);

}  // namespace ringlab
