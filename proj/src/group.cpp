#include "ringlab/group.hpp"

#include <algorithm>

namespace ringlab {

GroupAxiomViolation::GroupAxiomViolation(std::string kind_, std::array<std::size_t, 3> witness_,
                                         const std::string& detail)
    : Error("group axiom violation [" + kind_ + "]: " + detail),
      kind(std::move(kind_)),
      witness(witness_) {}

NotPrime::NotPrime(std::size_t p) : Error(std::to_string(p) + " is not prime") {}

bool is_prime(std::size_t p) {
    if (p < 2) return false;
    for (std::size_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

FiniteGroup validate_group(std::vector<elem_t> cayley, elem_t identity, const RingLimits& limits,
                           std::string label) {
    // groups here stay small (presets and their pairwise products), so the
    // cubic associativity scan is fine
    std::size_t m = 0;
    while (m * m < cayley.size()) ++m;
    if (m == 0 || m * m != cayley.size())
        throw GroupAxiomViolation("table_shape", {cayley.size(), 0, 0},
                                  "Cayley table must be square and non-empty");
    if (m > std::min(limits.max_order, kHardOrderCap))
        throw SizeCapExceeded(m, std::min(limits.max_order, kHardOrderCap));
    for (std::size_t i = 0; i < m * m; ++i)
        if (cayley[i] >= m)
            throw GroupAxiomViolation("entry_range", {i / m, i % m, 0}, "entry out of range");
    if (identity >= m)
        throw GroupAxiomViolation("entry_range", {identity, 0, 0}, "identity out of range");

    auto C = [&](elem_t a, elem_t b) { return cayley[a * m + b]; };
    for (elem_t a = 0; a < m; ++a)
        if (C(identity, a) != a || C(a, identity) != a)
            throw GroupAxiomViolation("identity", {a, identity, 0},
                                      "identity law fails at element " + std::to_string(a));
    std::vector<elem_t> inv(m);
    for (elem_t a = 0; a < m; ++a) {
        bool found = false;
        for (elem_t b = 0; b < m; ++b)
            if (C(a, b) == identity && C(b, a) == identity) {
                inv[a] = b;
                found = true;
                break;
            }
        if (!found)
            throw GroupAxiomViolation("inverse", {a, 0, 0},
                                      "element " + std::to_string(a) + " has no two-sided inverse");
    }
    for (elem_t a = 0; a < m; ++a)
        for (elem_t b = 0; b < m; ++b)
            for (elem_t c = 0; c < m; ++c)
                if (C(C(a, b), c) != C(a, C(b, c)))
                    throw GroupAxiomViolation("associativity", {a, b, c}, "(ab)c != a(bc)");

    std::uint64_t h = detail::fnv1a_begin();
    detail::fnv1a_absorb(h, m);
    detail::fnv1a_absorb(h, identity);
    for (elem_t v : cayley) detail::fnv1a_absorb(h, v);

    FiniteGroup g;
    auto t = std::make_shared<FiniteGroup::Tables>();
    t->m = m;
    t->cayley = std::move(cayley);
    t->inv = std::move(inv);
    t->identity = identity;
    t->hash = h;
    g.t_ = std::move(t);
    g.label_ = std::move(label);
    return g;
}

FiniteGroup cyclic_group(std::size_t m, const RingLimits& limits) {
    if (m == 0) throw GroupAxiomViolation("order", {0, 0, 0}, "order must be positive");
    if (m > std::min(limits.max_order, kHardOrderCap))
        throw SizeCapExceeded(m, std::min(limits.max_order, kHardOrderCap));
    std::vector<elem_t> cayley(m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            cayley[a * m + b] = static_cast<elem_t>((a + b) % m);
    return validate_group(std::move(cayley), 0, limits, "C(" + std::to_string(m) + ")");
}

FiniteGroup group_product(const FiniteGroup& g, const FiniteGroup& h, const RingLimits& limits) {
    const std::size_t mg = g.order(), mh = h.order();
    const std::size_t m = mg * mh;
    if (m > std::min(limits.max_order, kHardOrderCap))
        throw SizeCapExceeded(m, std::min(limits.max_order, kHardOrderCap));
    std::vector<elem_t> cayley(m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            elem_t x = g.op(static_cast<elem_t>(a % mg), static_cast<elem_t>(b % mg));
            elem_t y = h.op(static_cast<elem_t>(a / mg), static_cast<elem_t>(b / mg));
            cayley[a * m + b] = static_cast<elem_t>(x + mg * y);
        }
    elem_t e = static_cast<elem_t>(g.identity() + mg * h.identity());
    return validate_group(std::move(cayley), e, limits,
                          "GProd(" + g.label() + "," + h.label() + ")");
}

FiniteGroup symmetric_group_3(const RingLimits& limits) {
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                    {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto find = [&](const int* p) -> elem_t {
        for (elem_t i = 0; i < 6; ++i)
            if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2]) return i;
        throw InternalInconsistency("permutation lookup failed");
    };
    std::vector<elem_t> cayley(36);
    for (elem_t a = 0; a < 6; ++a)
        for (elem_t b = 0; b < 6; ++b) {
            int comp[3];
            for (int x = 0; x < 3; ++x) comp[x] = perms[a][perms[b][x]];
            cayley[a * 6 + b] = find(comp);
        }
    return validate_group(std::move(cayley), 0, limits, "S3");
}

std::size_t element_order(const FiniteGroup& g, elem_t x) {
    if (x >= g.order()) throw ForeignElement("group element out of range");
    elem_t acc = x;
    std::size_t k = 1;
    while (acc != g.identity()) {
        acc = g.op(acc, x);
        ++k;
        if (k > g.order()) throw InternalInconsistency("element order exceeds group order");
    }
    return k;
}

bool is_p_group(const FiniteGroup& g, std::size_t p) {
    if (!is_prime(p)) throw NotPrime(p);
    bool by_orders = true;
    for (elem_t x = 0; x < g.order(); ++x) {
        std::size_t k = element_order(g, x);
        while (k % p == 0) k /= p;
        if (k != 1) {
            by_orders = false;
            break;
        }
    }
    std::size_t m = g.order();
    while (m % p == 0) m /= p;
    bool by_order = (m == 1);
    if (by_orders != by_order)
        throw InternalInconsistency("p-group checks disagree on " + g.label());
    return by_orders;
}

bool is_trivial(const FiniteGroup& g) { return g.order() == 1; }

std::vector<std::size_t> order_profile(const FiniteGroup& g) {
    std::vector<std::size_t> orders;
    orders.reserve(g.order());
    for (elem_t x = 0; x < g.order(); ++x) orders.push_back(element_order(g, x));
    std::sort(orders.begin(), orders.end());
    return orders;
}

}  // namespace ringlab
