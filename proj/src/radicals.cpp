#include "ringlab/radicals.hpp"

#include <algorithm>

namespace ringlab {

UnitGroup units(const FiniteRing& r) {
    const std::size_t n = r.order();
    std::vector<char> left(n, 0), right(n, 0);
    std::vector<elem_t> inv(n, 0);
    std::vector<char> two_sided(n, 0);
    for (elem_t a = 0; a < n; ++a) {
        auto row = r.mul_row(a);
        for (elem_t b = 0; b < n; ++b) {
            if (row[b] == r.one()) {
                right[a] = 1;
                left[b] = 1;
                if (!two_sided[a] && r.mul(b, a) == r.one()) {
                    two_sided[a] = 1;
                    inv[a] = b;
                }
            }
        }
    }
    std::vector<elem_t> u, l, ri;
    for (elem_t a = 0; a < n; ++a) {
        if (two_sided[a]) u.push_back(a);
        if (left[a]) l.push_back(a);
        if (right[a]) ri.push_back(a);
    }
    // finite rings: one-sided invertible elements are already units
    if (u != l || u != ri)
        throw InternalInconsistency("one-sided and two-sided invertibles differ in " + r.label());
    UnitGroup out;
    out.ring_hash = r.hash();
    out.members = make_elem_set(r, u);
    out.inv = std::move(inv);
    out.left_invertible = make_elem_set(r, std::move(l));
    out.right_invertible = make_elem_set(r, std::move(ri));

    if (!out.members.contains(r.one()))
        throw InternalInconsistency("1 is not a unit in " + r.label());
    for (elem_t v : out.members.members) {
        if (r.mul(v, out.inv[v]) != r.one() || r.mul(out.inv[v], v) != r.one())
            throw InternalInconsistency("bad inverse recorded in " + r.label());
        for (elem_t w : out.members.members)
            if (!out.members.contains(r.mul(v, w)))
                throw InternalInconsistency("units not closed under product in " + r.label());
    }
    return out;
}

ElementSets element_sets(const FiniteRing& r) {
    const std::size_t n = r.order();
    std::vector<elem_t> id, nil, cen;
    for (elem_t x = 0; x < n; ++x) {
        if (r.mul(x, x) == x) id.push_back(x);
        elem_t p = x;
        for (std::size_t k = 1; k <= n; ++k) {
            if (p == r.zero()) {
                nil.push_back(x);
                break;
            }
            p = r.mul(p, x);
        }
        bool central = true;
        for (elem_t y = 0; y < n && central; ++y) central = r.mul(x, y) == r.mul(y, x);
        if (central) cen.push_back(x);
    }
    return {make_elem_set(r, std::move(id)), make_elem_set(r, std::move(nil)),
            make_elem_set(r, std::move(cen))};
}

Ideal jacobson_radical(const FiniteRing& r, const UnitGroup& u) {
    const std::size_t n = r.order();
    std::vector<char> is_unit = elem_mask(u.members, n);
    std::vector<elem_t> members;
    for (elem_t x = 0; x < n; ++x) {
        bool in = true;
        for (elem_t a = 0; a < n; ++a) {
            if (!is_unit[r.sub(r.one(), r.mul(a, x))]) {
                in = false;
                break;
            }
        }
        if (in) members.push_back(x);
    }
    Ideal j = Ideal::checked(r, make_elem_set(r, std::move(members)));
    // the zero ring is the one case where 0 = 1 is a unit lying in J
    if (n > 1) {
        for (elem_t x : j.members.members)
            if (is_unit[x])
                throw InternalInconsistency("unit found inside J(R) in " + r.label());
    }
    elem_t minus_one = r.neg(r.one());
    for (elem_t x : j.members.members) {
        if (!is_unit[r.add(r.one(), x)] || !is_unit[r.add(minus_one, x)])
            throw InternalInconsistency("1 + J not inside units in " + r.label());
    }
    return j;
}

ElemSet sqrt_jacobson(const FiniteRing& r, const Ideal& jacobson) {
    const std::size_t n = r.order();
    std::vector<char> in_j = elem_mask(jacobson.members, n);
    std::vector<elem_t> members;
    for (elem_t x = 0; x < n; ++x) {
        elem_t p = x;
        for (std::size_t k = 1; k <= n; ++k) {
            if (in_j[p]) {
                members.push_back(x);
                break;
            }
            p = r.mul(p, x);
        }
    }
    return make_elem_set(r, std::move(members));
}

Ideal prime_radical(const FiniteRing& r) {
    const std::size_t n = r.order();
    Ideal current = Ideal::checked(r, make_elem_set(r, {r.zero()}));
    for (;;) {
        std::vector<char> mask = elem_mask(current.members, n);
        std::vector<elem_t> grow = current.members.members;
        bool grew = false;
        for (elem_t a = 0; a < n; ++a) {
            if (mask[a]) continue;
            bool crushed = true;
            for (elem_t x = 0; x < n; ++x) {
                if (!mask[r.mul(r.mul(a, x), a)]) {
                    crushed = false;
                    break;
                }
            }
            if (crushed) {
                grow.push_back(a);
                grew = true;
            }
        }
        if (!grew) break;
        current = ideal_generated(r, make_elem_set(r, std::move(grow)));
    }
    // the smallest semiprime ideal consists of nilpotents
    for (elem_t a : current.members.members) {
        elem_t p = a;
        bool nil = false;
        for (std::size_t k = 1; k <= n; ++k) {
            if (p == r.zero()) {
                nil = true;
                break;
            }
            p = r.mul(p, a);
        }
        if (!nil)
            throw InternalInconsistency("prime radical contains a non-nilpotent in " + r.label());
    }
    return current;
}

bool idempotents_lift(const FiniteRing& r, const Ideal& ideal) {
    if (ideal.ring_hash != r.hash()) throw NotAnIdeal("ideal belongs to another ring");
    QuotientResult q = quotient(r, ideal);
    std::vector<char> lifted(q.ring.order(), 0);
    for (elem_t e = 0; e < r.order(); ++e)
        if (r.mul(e, e) == e) lifted[q.projection(e)] = 1;
    for (elem_t c = 0; c < q.ring.order(); ++c)
        if (q.ring.mul(c, c) == c && !lifted[c]) return false;
    return true;
}

RingAnalysis analyze_ring(const FiniteRing& r) {
    RingAnalysis a;
    a.ring = r;
    a.unit_group = units(r);
    a.sets = element_sets(r);
    a.jacobson = jacobson_radical(r, a.unit_group);
    a.sqrt_j = sqrt_jacobson(r, a.jacobson);
    a.lower_radical = prime_radical(r);
    QuotientResult q = quotient(r, a.jacobson);
    a.quotient_by_j = q.ring.with_label(r.label() + "/J");
    a.quotient_map = std::move(q.projection);

    a.unit_mask = elem_mask(a.unit_group.members, r.order());
    a.j_mask = elem_mask(a.jacobson.members, r.order());
    a.sqrt_mask = elem_mask(a.sqrt_j, r.order());
    a.nil_mask = elem_mask(a.sets.nilpotents, r.order());
    a.id_mask = elem_mask(a.sets.idempotents, r.order());
    return a;
}

}  // namespace ringlab
