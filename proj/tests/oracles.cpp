#include "oracles.hpp"

#include <algorithm>
#include <set>

namespace ringlab::oracle {

std::vector<ElemSet> all_ideals(const FiniteRing& r) {
    std::set<std::vector<elem_t>> seen;
    std::vector<ElemSet> out, work;

    auto add = [&](const Ideal& ideal) {
        if (seen.insert(ideal.members.members).second) {
            out.push_back(ideal.members);
            work.push_back(ideal.members);
        }
    };
    add(ideal_generated(r, make_elem_set(r, {})));
    for (elem_t x = 0; x < r.order(); ++x) add(ideal_generated(r, make_elem_set(r, {x})));

    while (!work.empty()) {
        ElemSet base = work.back();
        work.pop_back();
        if (base.size() == r.order()) continue;
        for (elem_t x = 0; x < r.order(); ++x) {
            if (base.contains(x)) continue;
            std::vector<elem_t> gens = base.members;
            gens.push_back(x);
            add(ideal_generated(r, make_elem_set(r, std::move(gens))));
        }
    }
    std::sort(out.begin(), out.end(), [](const ElemSet& a, const ElemSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.members < b.members;
    });
    return out;
}

ElemSet jacobson_by_maximal_ideals(const FiniteRing& r) {
    std::vector<ElemSet> ideals = all_ideals(r);
    std::vector<const ElemSet*> proper;
    for (const auto& i : ideals)
        if (i.size() < r.order()) proper.push_back(&i);

    auto subset = [](const ElemSet& a, const ElemSet& b) {
        return std::includes(b.members.begin(), b.members.end(), a.members.begin(),
                             a.members.end());
    };
    std::vector<const ElemSet*> maximal;
    for (const auto* a : proper) {
        bool is_max = true;
        for (const auto* b : proper)
            if (a != b && subset(*a, *b) && a->members != b->members) {
                is_max = false;
                break;
            }
        if (is_max) maximal.push_back(a);
    }
    std::vector<elem_t> inter;
    if (maximal.empty()) {
        // zero ring: no proper ideals at all, intersection over the empty
        // family is the whole ring
        for (elem_t x = 0; x < r.order(); ++x) inter.push_back(x);
    } else {
        inter = maximal[0]->members;
        for (const auto* m : maximal) {
            std::vector<elem_t> next;
            std::set_intersection(inter.begin(), inter.end(), m->members.begin(),
                                  m->members.end(), std::back_inserter(next));
            inter = std::move(next);
        }
    }
    return make_elem_set(r, std::move(inter));
}

ElemSet sqrt_j_scan(const FiniteRing& r, const ElemSet& jacobson, std::size_t bound) {
    std::vector<char> in_j = elem_mask(jacobson, r.order());
    std::vector<elem_t> members;
    for (elem_t x = 0; x < r.order(); ++x) {
        elem_t p = x;
        for (std::size_t k = 1; k <= bound; ++k) {
            if (in_j[p]) {
                members.push_back(x);
                break;
            }
            p = r.mul(p, x);
        }
    }
    return make_elem_set(r, std::move(members));
}

std::vector<elem_t> unit_scan(const FiniteRing& r) {
    std::vector<elem_t> units;
    for (elem_t a = 0; a < r.order(); ++a)
        for (elem_t b = 0; b < r.order(); ++b)
            if (r.mul(a, b) == r.one() && r.mul(b, a) == r.one()) {
                units.push_back(a);
                break;
            }
    return units;
}

}  // namespace ringlab::oracle
