#include "ringlab/construct.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ringlab {

NoPolynomialShipped::NoPolynomialShipped(std::size_t p, std::size_t k)
    : Error("no irreducible polynomial shipped for GF(" + std::to_string(p) + "^" +
            std::to_string(k) + ")") {}

namespace {

std::size_t capped(const RingLimits& limits) {
    return std::min(limits.max_order, kHardOrderCap);
}

// |R|^e with overflow guard; anything past cap is reported as cap+1
std::size_t pow_capped(std::size_t base, std::size_t e, std::size_t cap) {
    std::size_t v = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (base != 0 && v > cap / base) return cap + 1;
        v *= base;
    }
    return v;
}

}  // namespace

Ideal Ideal::checked(const FiniteRing& r, ElemSet members) {
    if (members.ring_hash != r.hash()) throw NotAnIdeal("member set belongs to another ring");
    if (!members.contains(r.zero())) throw NotAnIdeal("ideal must contain zero");
    std::vector<char> mask = elem_mask(members, r.order());
    for (elem_t x : members.members) {
        if (!mask[r.neg(x)]) throw NotAnIdeal("ideal not closed under negation");
        for (elem_t y : members.members)
            if (!mask[r.add(x, y)]) throw NotAnIdeal("ideal not closed under addition");
        for (elem_t a = 0; a < r.order(); ++a)
            if (!mask[r.mul(a, x)] || !mask[r.mul(x, a)])
                throw NotAnIdeal("ideal does not absorb multiplication");
    }
    return Ideal{r.hash(), std::move(members)};
}

RingHom RingHom::checked(const FiniteRing& source, const FiniteRing& target,
                         std::vector<elem_t> map) {
    if (map.size() != source.order()) throw Error("homomorphism table has wrong length");
    for (elem_t v : map)
        if (v >= target.order()) throw Error("homomorphism value out of range");
    if (map[source.zero()] != target.zero()) throw Error("homomorphism does not fix zero");
    if (map[source.one()] != target.one()) throw Error("homomorphism does not fix one");
    const std::size_t n = source.order();
    for (elem_t a = 0; a < n; ++a)
        for (elem_t b = 0; b < n; ++b) {
            if (map[source.add(a, b)] != target.add(map[a], map[b]))
                throw Error("homomorphism not additive");
            if (map[source.mul(a, b)] != target.mul(map[a], map[b]))
                throw Error("homomorphism not multiplicative");
        }
    return RingHom{source.hash(), target.hash(), std::move(map)};
}

bool RingHom::is_surjective(const FiniteRing& target) const {
    std::vector<char> hit(target.order(), 0);
    for (elem_t v : map) hit[v] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

FiniteRing ring_zn(std::size_t n, const RingLimits& limits) {
    if (n == 0) throw Error("Z(n) requires n >= 1");
    if (n > capped(limits)) throw SizeCapExceeded(n, capped(limits));
    std::vector<elem_t> add(n * n), mul(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            add[a * n + b] = static_cast<elem_t>((a + b) % n);
            mul[a * n + b] = static_cast<elem_t>((a * b) % n);
        }
    elem_t one = n == 1 ? 0 : 1;
    return validate_ring(n, std::move(add), std::move(mul), 0, one, limits,
                         "Z(" + std::to_string(n) + ")");
}

namespace {

// Published irreducible (Conway) polynomials for p^k <= 64, k >= 2;
// coefficients are ascending, the leading 1 omitted.
struct FieldPoly {
    std::size_t p, k;
    std::vector<elem_t> low;  // c_0..c_{k-1}
};

const std::vector<FieldPoly>& field_polys() {
    static const std::vector<FieldPoly> table = {
        {2, 2, {1, 1}},           // x^2 + x + 1
        {2, 3, {1, 1, 0}},        // x^3 + x + 1
        {2, 4, {1, 1, 0, 0}},     // x^4 + x + 1
        {2, 5, {1, 0, 1, 0, 0}},  // x^5 + x^2 + 1
        {2, 6, {1, 1, 0, 1, 1, 0}},  // x^6 + x^4 + x^3 + x + 1
        {3, 2, {2, 2}},           // x^2 + 2x + 2
        {3, 3, {1, 2, 0}},        // x^3 + 2x + 1
        {5, 2, {2, 4}},           // x^2 + 4x + 2
        {7, 2, {3, 6}},           // x^2 + 6x + 3
    };
    return table;
}

}  // namespace

FiniteRing ring_gf(std::size_t p, std::size_t k, const RingLimits& limits) {
    if (!is_prime(p)) throw NotPrime(p);
    if (k == 0) throw Error("GF(p,k) requires k >= 1");
    std::string label = "GF(" + std::to_string(p) + "," + std::to_string(k) + ")";
    if (k == 1) {
        if (p > capped(limits)) throw SizeCapExceeded(p, capped(limits));
        return ring_zn(p, limits).with_label(label);
    }
    std::size_t q = pow_capped(p, k, capped(limits));
    if (q > capped(limits)) throw SizeCapExceeded(q, capped(limits));
    const FieldPoly* poly = nullptr;
    for (const auto& f : field_polys())
        if (f.p == p && f.k == k) poly = &f;
    if (!poly) throw NoPolynomialShipped(p, k);

    auto decode = [&](std::size_t x) {
        std::vector<std::size_t> c(k);
        for (std::size_t i = 0; i < k; ++i) {
            c[i] = x % p;
            x /= p;
        }
        return c;
    };
    auto encode = [&](const std::vector<std::size_t>& c) {
        std::size_t x = 0;
        for (std::size_t i = k; i-- > 0;) x = x * p + c[i];
        return static_cast<elem_t>(x);
    };

    std::vector<elem_t> add(q * q), mul(q * q);
    for (std::size_t a = 0; a < q; ++a) {
        auto ca = decode(a);
        for (std::size_t b = 0; b < q; ++b) {
            auto cb = decode(b);
            std::vector<std::size_t> s(k);
            for (std::size_t i = 0; i < k; ++i) s[i] = (ca[i] + cb[i]) % p;
            add[a * q + b] = encode(s);

            // schoolbook product, then reduce by the monic modulus
            std::vector<std::size_t> prod(2 * k - 1, 0);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
            for (std::size_t d = 2 * k - 2; d + 1 > k; --d) {
                std::size_t c = prod[d];
                if (c == 0) continue;
                prod[d] = 0;
                for (std::size_t i = 0; i < k; ++i)
                    prod[d - k + i] = (prod[d - k + i] + c * (p - poly->low[i])) % p;
            }
            prod.resize(k);
            mul[a * q + b] = encode(prod);
        }
    }
    return validate_ring(q, std::move(add), std::move(mul), 0, 1, limits, label);
}

elem_t product_encode(const std::vector<FiniteRing>& factors, const std::vector<elem_t>& comps) {
    std::size_t x = 0, radix = 1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        x += comps[i] * radix;
        radix *= factors[i].order();
    }
    return static_cast<elem_t>(x);
}

std::vector<elem_t> product_decode(const std::vector<FiniteRing>& factors, elem_t x) {
    std::vector<elem_t> comps(factors.size());
    std::size_t v = x;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        comps[i] = static_cast<elem_t>(v % factors[i].order());
        v /= factors[i].order();
    }
    return comps;
}

ProductResult direct_product(const std::vector<FiniteRing>& factors, const RingLimits& limits) {
    if (factors.empty()) throw Error("direct product requires at least one factor");
    std::size_t n = 1;
    for (const auto& f : factors) {
        if (f.order() != 0 && n > capped(limits) / f.order())
            throw SizeCapExceeded(capped(limits) + 1, capped(limits));
        n *= f.order();
    }
    if (n > capped(limits)) throw SizeCapExceeded(n, capped(limits));

    const std::size_t m = factors.size();
    std::vector<std::vector<elem_t>> digits(n);
    for (std::size_t x = 0; x < n; ++x) digits[x] = product_decode(factors, static_cast<elem_t>(x));

    std::vector<elem_t> add(n * n), mul(n * n), comps(m);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t i = 0; i < m; ++i) comps[i] = factors[i].add(digits[a][i], digits[b][i]);
            add[a * n + b] = product_encode(factors, comps);
            for (std::size_t i = 0; i < m; ++i) comps[i] = factors[i].mul(digits[a][i], digits[b][i]);
            mul[a * n + b] = product_encode(factors, comps);
        }
    for (std::size_t i = 0; i < m; ++i) comps[i] = factors[i].zero();
    elem_t zero = product_encode(factors, comps);
    for (std::size_t i = 0; i < m; ++i) comps[i] = factors[i].one();
    elem_t one = product_encode(factors, comps);

    std::string label = "Prod(";
    for (std::size_t i = 0; i < m; ++i) label += (i ? "," : "") + factors[i].label();
    label += ")";

    ProductResult out;
    out.ring = validate_ring(n, std::move(add), std::move(mul), zero, one, limits, label);
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<elem_t> proj(n);
        for (std::size_t x = 0; x < n; ++x) proj[x] = digits[x][i];
        out.projections.push_back(RingHom::checked(out.ring, factors[i], std::move(proj)));
    }
    return out;
}

elem_t matrix_encode(const FiniteRing& r, std::size_t k, const std::vector<elem_t>& entries) {
    std::size_t x = 0;
    for (std::size_t d = k * k; d-- > 0;) x = x * r.order() + entries[d];
    return static_cast<elem_t>(x);
}

std::vector<elem_t> matrix_decode(const FiniteRing& r, std::size_t k, elem_t x) {
    std::vector<elem_t> entries(k * k);
    std::size_t v = x;
    for (std::size_t d = 0; d < k * k; ++d) {
        entries[d] = static_cast<elem_t>(v % r.order());
        v /= r.order();
    }
    return entries;
}

FiniteRing matrix_ring(const FiniteRing& r, std::size_t k, const RingLimits& limits) {
    if (k == 0) throw Error("M(k,R) requires k >= 1");
    std::size_t n = pow_capped(r.order(), k * k, capped(limits));
    if (n > capped(limits)) throw SizeCapExceeded(n, capped(limits));

    std::vector<std::vector<elem_t>> ent(n);
    for (std::size_t x = 0; x < n; ++x) ent[x] = matrix_decode(r, k, static_cast<elem_t>(x));

    std::vector<elem_t> add(n * n), mul(n * n), acc(k * k);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t d = 0; d < k * k; ++d) acc[d] = r.add(ent[a][d], ent[b][d]);
            add[a * n + b] = matrix_encode(r, k, acc);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) {
                    elem_t s = r.zero();
                    for (std::size_t l = 0; l < k; ++l)
                        s = r.add(s, r.mul(ent[a][i * k + l], ent[b][l * k + j]));
                    acc[i * k + j] = s;
                }
            mul[a * n + b] = matrix_encode(r, k, acc);
        }
    std::vector<elem_t> z(k * k, r.zero()), id(k * k, r.zero());
    for (std::size_t i = 0; i < k; ++i) id[i * k + i] = r.one();
    return validate_ring(n, std::move(add), std::move(mul), matrix_encode(r, k, z),
                         matrix_encode(r, k, id), limits,
                         "M(" + std::to_string(k) + "," + r.label() + ")");
}

namespace {
// digit position of entry (i,j), i <= j, in the upper-triangular layout
std::size_t tri_pos(std::size_t k, std::size_t i, std::size_t j) {
    std::size_t pos = 0;
    for (std::size_t row = 0; row < i; ++row) pos += k - row;
    return pos + (j - i);
}
}  // namespace

elem_t triangular_encode(const FiniteRing& r, std::size_t k, const std::vector<elem_t>& entries) {
    std::size_t x = 0;
    std::size_t d = k * (k + 1) / 2;
    while (d-- > 0) x = x * r.order() + entries[d];
    return static_cast<elem_t>(x);
}

std::vector<elem_t> triangular_decode(const FiniteRing& r, std::size_t k, elem_t x) {
    std::vector<elem_t> entries(k * (k + 1) / 2);
    std::size_t v = x;
    for (std::size_t d = 0; d < entries.size(); ++d) {
        entries[d] = static_cast<elem_t>(v % r.order());
        v /= r.order();
    }
    return entries;
}

FiniteRing upper_triangular(const FiniteRing& r, std::size_t k, const RingLimits& limits) {
    if (k == 0) throw Error("T(k,R) requires k >= 1");
    const std::size_t digits = k * (k + 1) / 2;
    std::size_t n = pow_capped(r.order(), digits, capped(limits));
    if (n > capped(limits)) throw SizeCapExceeded(n, capped(limits));

    std::vector<std::vector<elem_t>> ent(n);
    for (std::size_t x = 0; x < n; ++x) ent[x] = triangular_decode(r, k, static_cast<elem_t>(x));

    std::vector<elem_t> add(n * n), mul(n * n), acc(digits);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t d = 0; d < digits; ++d) acc[d] = r.add(ent[a][d], ent[b][d]);
            add[a * n + b] = triangular_encode(r, k, acc);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = i; j < k; ++j) {
                    elem_t s = r.zero();
                    for (std::size_t l = i; l <= j; ++l)
                        s = r.add(s, r.mul(ent[a][tri_pos(k, i, l)], ent[b][tri_pos(k, l, j)]));
                    acc[tri_pos(k, i, j)] = s;
                }
            mul[a * n + b] = triangular_encode(r, k, acc);
        }
    std::vector<elem_t> z(digits, r.zero()), id(digits, r.zero());
    for (std::size_t i = 0; i < k; ++i) id[tri_pos(k, i, i)] = r.one();
    return validate_ring(n, std::move(add), std::move(mul), triangular_encode(r, k, z),
                         triangular_encode(r, k, id), limits,
                         "T(" + std::to_string(k) + "," + r.label() + ")");
}

elem_t trivext_encode(const FiniteRing& r, elem_t first, elem_t second) {
    return static_cast<elem_t>(first + r.order() * second);
}

FiniteRing trivial_extension(const FiniteRing& r, const RingLimits& limits) {
    std::size_t n = pow_capped(r.order(), 2, capped(limits));
    if (n > capped(limits)) throw SizeCapExceeded(n, capped(limits));
    const std::size_t m = r.order();
    std::vector<elem_t> add(n * n), mul(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        const elem_t ra = static_cast<elem_t>(a % m), ma = static_cast<elem_t>(a / m);
        for (std::size_t b = 0; b < n; ++b) {
            const elem_t rb = static_cast<elem_t>(b % m), mb = static_cast<elem_t>(b / m);
            add[a * n + b] = trivext_encode(r, r.add(ra, rb), r.add(ma, mb));
            mul[a * n + b] =
                trivext_encode(r, r.mul(ra, rb), r.add(r.mul(ra, mb), r.mul(ma, rb)));
        }
    }
    return validate_ring(n, std::move(add), std::move(mul),
                         trivext_encode(r, r.zero(), r.zero()),
                         trivext_encode(r, r.one(), r.zero()), limits,
                         "TrivExt(" + r.label() + ")");
}

Ideal ideal_generated(const FiniteRing& r, const ElemSet& gens) {
    if (gens.ring_hash != 0 && gens.ring_hash != r.hash())
        throw ForeignElement("generators belong to another ring");
    const std::size_t n = r.order();
    std::vector<char> in(n, 0);
    std::vector<elem_t> members, work;
    auto push = [&](elem_t x) {
        if (!in[x]) {
            in[x] = 1;
            members.push_back(x);
            work.push_back(x);
        }
    };
    push(r.zero());
    for (elem_t g : gens.members) push(g);
    while (!work.empty()) {
        elem_t x = work.back();
        work.pop_back();
        push(r.neg(x));
        for (std::size_t i = 0; i < members.size(); ++i) push(r.add(x, members[i]));
        for (elem_t a = 0; a < n; ++a) {
            push(r.mul(a, x));
            push(r.mul(x, a));
        }
    }
    return Ideal::checked(r, make_elem_set(r, std::move(members)));
}

QuotientResult quotient(const FiniteRing& r, const Ideal& ideal, const RingLimits& limits) {
    if (ideal.ring_hash != r.hash()) throw NotAnIdeal("ideal belongs to another ring");
    const std::size_t n = r.order();

    // coset representative = least member of x + I
    std::vector<elem_t> rep(n);
    for (elem_t x = 0; x < n; ++x) {
        elem_t least = x;
        for (elem_t j : ideal.members.members) least = std::min(least, r.add(x, j));
        rep[x] = least;
    }
    std::vector<elem_t> reps;
    for (elem_t x = 0; x < n; ++x)
        if (rep[x] == x) reps.push_back(x);
    const std::size_t q = reps.size();
    if (q * ideal.size() != n)
        throw InternalInconsistency("|R/I| * |I| != |R| for " + r.label());

    std::vector<elem_t> cls(n);
    for (elem_t x = 0; x < n; ++x)
        cls[x] = static_cast<elem_t>(
            std::lower_bound(reps.begin(), reps.end(), rep[x]) - reps.begin());

    std::vector<elem_t> add(q * q), mul(q * q);
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b) {
            add[a * q + b] = cls[r.add(reps[a], reps[b])];
            mul[a * q + b] = cls[r.mul(reps[a], reps[b])];
        }
    QuotientResult out;
    out.ring = validate_ring(q, std::move(add), std::move(mul), cls[r.zero()], cls[r.one()],
                             limits, "Quot(" + r.label() + ")");
    out.projection = RingHom::checked(r, out.ring, std::move(cls));
    return out;
}

std::vector<elem_t> corner_members(const FiniteRing& r, elem_t e) {
    std::vector<char> seen(r.order(), 0);
    std::vector<elem_t> members;
    for (elem_t x = 0; x < r.order(); ++x) {
        elem_t y = r.mul(r.mul(e, x), e);
        if (!seen[y]) {
            seen[y] = 1;
            members.push_back(y);
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

FiniteRing corner(const FiniteRing& r, elem_t e, const RingLimits& limits) {
    if (e >= r.order()) throw ForeignElement("idempotent index out of range");
    if (r.mul(e, e) != e) throw NotIdempotent("corner requires an idempotent element");
    if (e == r.zero()) throw ZeroCorner("corner at zero is empty");
    std::vector<elem_t> members = corner_members(r, e);
    const std::size_t q = members.size();
    auto pos = [&](elem_t x) {
        return static_cast<elem_t>(std::lower_bound(members.begin(), members.end(), x) -
                                   members.begin());
    };
    std::vector<elem_t> add(q * q), mul(q * q);
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b) {
            add[a * q + b] = pos(r.add(members[a], members[b]));
            mul[a * q + b] = pos(r.mul(members[a], members[b]));
        }
    return validate_ring(q, std::move(add), std::move(mul), pos(r.zero()), pos(e), limits,
                         "Corner(" + r.label() + "," + std::to_string(e) + ")");
}

elem_t group_ring_encode(const FiniteRing& r, const FiniteGroup& g,
                         const std::vector<elem_t>& coeffs) {
    std::size_t x = 0;
    for (std::size_t d = g.order(); d-- > 0;) x = x * r.order() + coeffs[d];
    return static_cast<elem_t>(x);
}

std::vector<elem_t> group_ring_decode(const FiniteRing& r, const FiniteGroup& g, elem_t x) {
    std::vector<elem_t> coeffs(g.order());
    std::size_t v = x;
    for (std::size_t d = 0; d < g.order(); ++d) {
        coeffs[d] = static_cast<elem_t>(v % r.order());
        v /= r.order();
    }
    return coeffs;
}

GroupRing group_ring(const FiniteRing& r, const FiniteGroup& g, const RingLimits& limits) {
    std::size_t n = pow_capped(r.order(), g.order(), capped(limits));
    if (n > capped(limits)) throw SizeCapExceeded(n, capped(limits));
    const std::size_t m = g.order();

    std::vector<std::vector<elem_t>> co(n);
    for (std::size_t x = 0; x < n; ++x) co[x] = group_ring_decode(r, g, static_cast<elem_t>(x));

    std::vector<elem_t> add(n * n), mul(n * n), acc(m);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t d = 0; d < m; ++d) acc[d] = r.add(co[a][d], co[b][d]);
            add[a * n + b] = group_ring_encode(r, g, acc);
            std::fill(acc.begin(), acc.end(), r.zero());
            for (std::size_t s = 0; s < m; ++s) {
                if (co[a][s] == r.zero()) continue;
                for (std::size_t t = 0; t < m; ++t) {
                    elem_t d = g.op(static_cast<elem_t>(s), static_cast<elem_t>(t));
                    acc[d] = r.add(acc[d], r.mul(co[a][s], co[b][t]));
                }
            }
            mul[a * n + b] = group_ring_encode(r, g, acc);
        }
    std::vector<elem_t> z(m, r.zero()), id(m, r.zero());
    id[g.identity()] = r.one();
    GroupRing out;
    out.ring = validate_ring(n, std::move(add), std::move(mul), group_ring_encode(r, g, z),
                             group_ring_encode(r, g, id), limits,
                             "GR(" + r.label() + "," + g.label() + ")");
    out.base = r;
    out.group = g;
    return out;
}

AugmentationResult augmentation(const GroupRing& rg) {
    const FiniteRing& big = rg.ring;
    const FiniteRing& r = rg.base;
    const std::size_t n = big.order();
    std::vector<elem_t> eps(n);
    std::vector<elem_t> kernel;
    for (std::size_t x = 0; x < n; ++x) {
        auto coeffs = group_ring_decode(r, rg.group, static_cast<elem_t>(x));
        elem_t s = r.zero();
        for (elem_t c : coeffs) s = r.add(s, c);
        eps[x] = s;
        if (s == r.zero()) kernel.push_back(static_cast<elem_t>(x));
    }
    AugmentationResult out;
    out.hom = RingHom::checked(big, r, std::move(eps));
    if (!out.hom.is_surjective(r))
        throw InternalInconsistency("augmentation map is not surjective");
    out.kernel = Ideal::checked(big, make_elem_set(big, std::move(kernel)));
    if (out.kernel.size() * r.order() != n)
        throw InternalInconsistency("augmentation kernel has wrong size");
    return out;
}

}  // namespace ringlab
