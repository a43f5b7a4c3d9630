#include "ringlab/classify.hpp"

#include <algorithm>

namespace ringlab {

const std::vector<VerdictField>& verdict_fields() {
    static const std::vector<VerdictField> fields = {
        {"abelian", &ClassificationRecord::abelian},
        {"boolean", &ClassificationRecord::boolean_ring},
        {"clean", &ClassificationRecord::clean},
        {"commutative", &ClassificationRecord::commutative},
        {"dedekind_finite", &ClassificationRecord::dedekind_finite},
        {"exchange", &ClassificationRecord::exchange},
        {"j_clean", &ClassificationRecord::j_clean},
        {"ju", &ClassificationRecord::ju},
        {"local", &ClassificationRecord::local},
        {"nil_clean", &ClassificationRecord::nil_clean},
        {"pi_regular", &ClassificationRecord::pi_regular},
        {"reduced", &ClassificationRecord::reduced},
        {"regular", &ClassificationRecord::regular},
        {"semi_regular", &ClassificationRecord::semi_regular},
        {"semi_weakly_boolean", &ClassificationRecord::semi_weakly_boolean},
        {"sqrt_ju", &ClassificationRecord::sqrt_ju},
        {"strongly_clean", &ClassificationRecord::strongly_clean},
        {"strongly_nil_clean", &ClassificationRecord::strongly_nil_clean},
        {"strongly_regular", &ClassificationRecord::strongly_regular},
        {"strongly_weakly_nil_clean", &ClassificationRecord::strongly_weakly_nil_clean},
        {"two_primal", &ClassificationRecord::two_primal},
        {"unit_regular", &ClassificationRecord::unit_regular},
        {"uu", &ClassificationRecord::uu},
        {"w_sqrt_ju", &ClassificationRecord::w_sqrt_ju},
        {"weakly_boolean", &ClassificationRecord::weakly_boolean},
        {"weakly_j_clean", &ClassificationRecord::weakly_j_clean},
        {"weakly_nil_clean", &ClassificationRecord::weakly_nil_clean},
        {"wju", &ClassificationRecord::wju},
        {"wuu", &ClassificationRecord::wuu},
    };
    return fields;
}

const VerdictField* find_verdict_field(const std::string& name) {
    std::string n = name;
    // accepted synonyms from the literature
    if (n == "weakly_semi_boolean") n = "weakly_j_clean";
    if (n == "semi_boolean") n = "j_clean";
    for (const auto& f : verdict_fields())
        if (n == f.name) return &f;
    return nullptr;
}

namespace {

Verdict as_verdict(bool b) { return b ? Verdict::yes : Verdict::no; }

// every idempotent coset of R/J lifts to an idempotent of R
bool idempotents_lift_mod_j(const RingAnalysis& a, const RingAnalysis& quot) {
    std::vector<char> lifted(quot.ring.order(), 0);
    for (elem_t e : a.sets.idempotents.members) lifted[a.quotient_map(e)] = 1;
    for (elem_t c : quot.sets.idempotents.members)
        if (!lifted[c]) return false;
    return true;
}

bool regular_scan(const FiniteRing& r) {
    const std::size_t n = r.order();
    for (elem_t a = 0; a < n; ++a) {
        bool ok = false;
        for (elem_t x = 0; x < n && !ok; ++x) ok = r.mul(r.mul(a, x), a) == a;
        if (!ok) return false;
    }
    return true;
}

bool weakly_boolean_scan(const RingAnalysis& a) {
    const FiniteRing& r = a.ring;
    for (elem_t x = 0; x < r.order(); ++x)
        if (!a.id_mask[x] && !a.id_mask[r.neg(x)]) return false;
    return true;
}

}  // namespace

void unit_class_predicates(const RingAnalysis& a, ClassificationRecord& rec) {
    const FiniteRing& r = a.ring;
    const elem_t one = r.one(), minus_one = r.neg(r.one());

    // the easy inclusions: +-1 + {Nil, J, sqrt J} always land in the units
    auto assert_contained = [&](const ElemSet& s, const char* what) {
        for (elem_t x : s.members)
            if (!a.in_units(r.add(one, x)) || !a.in_units(r.add(minus_one, x)))
                throw InternalInconsistency(std::string("+-1 + ") + what +
                                            " escapes the units in " + r.label());
    };
    assert_contained(a.sets.nilpotents, "Nil");
    assert_contained(a.jacobson.members, "J");
    assert_contained(a.sqrt_j, "sqrtJ");

    bool uu = true, wuu = true, ju = true, wju = true, sq = true, wsq = true;
    for (elem_t u : a.unit_group.members.members) {
        const elem_t down = r.sub(u, one);    // u = 1 + down
        const elem_t up = r.add(u, one);      // u = -1 + up
        uu &= static_cast<bool>(a.nil_mask[down]);
        wuu &= a.nil_mask[down] || a.nil_mask[up];
        ju &= static_cast<bool>(a.j_mask[down]);
        wju &= a.j_mask[down] || a.j_mask[up];
        sq &= static_cast<bool>(a.sqrt_mask[down]);
        wsq &= a.sqrt_mask[down] || a.sqrt_mask[up];
    }
    rec.uu = as_verdict(uu);
    rec.wuu = as_verdict(wuu);
    rec.ju = as_verdict(ju);
    rec.wju = as_verdict(wju);
    rec.sqrt_ju = as_verdict(sq);
    rec.w_sqrt_ju = as_verdict(wsq);
}

void boolean_predicates(const RingAnalysis& a, const RingAnalysis& quot,
                        ClassificationRecord& rec) {
    rec.boolean_ring = as_verdict(a.sets.idempotents.size() == a.ring.order());
    rec.weakly_boolean = as_verdict(weakly_boolean_scan(a));
    rec.semi_weakly_boolean =
        as_verdict(weakly_boolean_scan(quot) && idempotents_lift_mod_j(a, quot));
}

void clean_predicates(const RingAnalysis& a, const ClassifyOptions& opts,
                      ClassificationRecord& rec) {
    const FiniteRing& r = a.ring;
    const std::size_t n = r.order();
    const auto& idem = a.sets.idempotents.members;

    bool clean = true, strongly = true, jc = true, wjc = true;
    bool nc = true, snc = true, wnc = true, swnc = true;
    for (elem_t x = 0; x < n && (clean || strongly || jc || wjc || nc || snc || wnc || swnc);
         ++x) {
        bool f_clean = false, f_strong = false, f_jc = false, f_wjc = false;
        bool f_nc = false, f_snc = false, f_wnc = false, f_swnc = false;
        for (elem_t e : idem) {
            const elem_t diff = r.sub(x, e);  // x = diff + e
            const elem_t sum = r.add(x, e);   // x = sum - e
            if (a.in_units(diff)) {
                f_clean = true;
                if (r.mul(diff, e) == r.mul(e, diff)) f_strong = true;
            }
            if (a.in_j(diff)) f_jc = true;
            if (a.in_j(diff) || a.in_j(sum)) f_wjc = true;
            if (a.nil_mask[diff]) {
                f_nc = true;
                f_wnc = true;
                if (r.mul(diff, e) == r.mul(e, diff)) {
                    f_snc = true;
                    f_swnc = true;
                }
            }
            if (a.nil_mask[sum]) {
                f_wnc = true;
                if (r.mul(sum, e) == r.mul(e, sum)) f_swnc = true;
            }
        }
        clean &= f_clean;
        strongly &= f_strong;
        jc &= f_jc;
        wjc &= f_wjc;
        nc &= f_nc;
        snc &= f_snc;
        wnc &= f_wnc;
        swnc &= f_swnc;
    }
    rec.clean = as_verdict(clean);
    rec.strongly_clean = as_verdict(strongly);
    rec.j_clean = as_verdict(jc);
    rec.weakly_j_clean = as_verdict(wjc);
    rec.nil_clean = as_verdict(nc);
    rec.strongly_nil_clean = as_verdict(snc);
    rec.weakly_nil_clean = as_verdict(wnc);
    rec.strongly_weakly_nil_clean = as_verdict(swnc);

    if (n > opts.expensive_order_threshold) {
        rec.exchange = Verdict::skipped;
        return;
    }
    bool exchange = true;
    std::vector<char> in_ar(n), in_bar(n);
    for (elem_t x = 0; x < n && exchange; ++x) {
        std::fill(in_ar.begin(), in_ar.end(), 0);
        std::fill(in_bar.begin(), in_bar.end(), 0);
        for (elem_t t : r.mul_row(x)) in_ar[t] = 1;
        for (elem_t t : r.mul_row(r.sub(r.one(), x))) in_bar[t] = 1;
        bool found = false;
        for (elem_t e : idem)
            if (in_ar[e] && in_bar[r.sub(r.one(), e)]) {
                found = true;
                break;
            }
        exchange = found;
    }
    rec.exchange = as_verdict(exchange);
}

void regularity_predicates(const RingAnalysis& a, const RingAnalysis& quot,
                           const ClassifyOptions& opts, ClassificationRecord& rec) {
    const FiniteRing& r = a.ring;
    const std::size_t n = r.order();

    rec.regular = as_verdict(regular_scan(r));

    bool strongly = true;
    for (elem_t x = 0; x < n && strongly; ++x) {
        const elem_t sq = r.mul(x, x);
        bool ok = false;
        for (elem_t t : r.mul_row(sq))
            if (t == x) {
                ok = true;
                break;
            }
        strongly = ok;
    }
    rec.strongly_regular = as_verdict(strongly);

    rec.semi_regular =
        as_verdict(regular_scan(quot.ring) && idempotents_lift_mod_j(a, quot));

    if (n > opts.expensive_order_threshold) {
        rec.unit_regular = Verdict::skipped;
        rec.pi_regular = Verdict::skipped;
        return;
    }
    bool unit_reg = true;
    for (elem_t x = 0; x < n && unit_reg; ++x) {
        bool ok = false;
        for (elem_t u : a.unit_group.members.members)
            if (r.mul(r.mul(x, u), x) == x) {
                ok = true;
                break;
            }
        unit_reg = ok;
    }
    rec.unit_regular = as_verdict(unit_reg);

    bool pi = true;
    for (elem_t x = 0; x < n && pi; ++x) {
        bool ok = false;
        elem_t p = x;
        for (std::size_t k = 1; k <= n && !ok; ++k) {
            for (elem_t t = 0; t < n; ++t)
                if (r.mul(r.mul(p, t), p) == p) {
                    ok = true;
                    break;
                }
            p = r.mul(p, x);
        }
        pi = ok;
    }
    rec.pi_regular = as_verdict(pi);
}

void structural_predicates(const RingAnalysis& a, ClassificationRecord& rec) {
    const FiniteRing& r = a.ring;
    const std::size_t n = r.order();

    rec.reduced = as_verdict(a.sets.nilpotents.members == std::vector<elem_t>{r.zero()});

    std::vector<char> central = elem_mask(a.sets.center, n);
    bool abelian = true;
    for (elem_t e : a.sets.idempotents.members) abelian &= static_cast<bool>(central[e]);
    rec.abelian = as_verdict(abelian);

    // non-units additively closed; the zero ring has no maximal ideal and
    // does not count as local
    bool local = n > 1;
    if (local) {
        std::vector<elem_t> nonunits;
        for (elem_t x = 0; x < n; ++x)
            if (!a.in_units(x)) nonunits.push_back(x);
        for (std::size_t i = 0; i < nonunits.size() && local; ++i)
            for (std::size_t j = i; j < nonunits.size(); ++j)
                if (a.in_units(r.add(nonunits[i], nonunits[j]))) {
                    local = false;
                    break;
                }
    }
    rec.local = as_verdict(local);

    bool dedekind = true;
    for (elem_t x = 0; x < n && dedekind; ++x) {
        auto row = r.mul_row(x);
        for (elem_t y = 0; y < n; ++y)
            if (row[y] == r.one() && r.mul(y, x) != r.one()) {
                dedekind = false;
                break;
            }
    }
    rec.dedekind_finite = as_verdict(dedekind);

    rec.two_primal = as_verdict(a.lower_radical.members.members == a.sets.nilpotents.members);
    rec.commutative = as_verdict(is_commutative(r));
}

std::vector<std::string> lattice_violations(const ClassificationRecord& rec) {
    struct Imp {
        const char* name;
        Verdict lhs, rhs;
    };
    const Imp imps[] = {
        {"uu => wuu", rec.uu, rec.wuu},
        {"wuu => w_sqrt_ju", rec.wuu, rec.w_sqrt_ju},
        {"ju => wju", rec.ju, rec.wju},
        {"wju => w_sqrt_ju", rec.wju, rec.w_sqrt_ju},
        {"uu => sqrt_ju", rec.uu, rec.sqrt_ju},
        {"ju => sqrt_ju", rec.ju, rec.sqrt_ju},
        {"sqrt_ju => w_sqrt_ju", rec.sqrt_ju, rec.w_sqrt_ju},
        {"boolean => weakly_boolean", rec.boolean_ring, rec.weakly_boolean},
        {"j_clean => weakly_j_clean", rec.j_clean, rec.weakly_j_clean},
        {"weakly_j_clean => clean", rec.weakly_j_clean, rec.clean},
        {"clean => exchange", rec.clean, rec.exchange},
        {"strongly_regular => unit_regular", rec.strongly_regular, rec.unit_regular},
        {"strongly_regular => regular", rec.strongly_regular, rec.regular},
        {"regular => pi_regular", rec.regular, rec.pi_regular},
        {"regular => semi_regular", rec.regular, rec.semi_regular},
        {"semi_regular => exchange", rec.semi_regular, rec.exchange},
        {"reduced => abelian", rec.reduced, rec.abelian},
        {"commutative => two_primal", rec.commutative, rec.two_primal},
        {"reduced => two_primal", rec.reduced, rec.two_primal},
        {"w_sqrt_ju => dedekind_finite", rec.w_sqrt_ju, rec.dedekind_finite},
    };
    std::vector<std::string> bad;
    for (const auto& i : imps) {
        if (is_skipped(i.lhs) || is_skipped(i.rhs)) continue;
        if (is_yes(i.lhs) && !is_yes(i.rhs)) bad.emplace_back(i.name);
    }
    return bad;
}

ClassificationRecord classify_ring(const RingAnalysis& a, const RingAnalysis& quot,
                                   const ClassifyOptions& opts) {
    if (quot.ring.hash() != a.quotient_by_j.hash())
        throw InternalInconsistency("classify_ring given a mismatched quotient analysis");
    ClassificationRecord rec;
    rec.ring_hash = a.ring.hash();
    rec.order = a.ring.order();
    rec.characteristic = characteristic(a.ring);
    rec.expensive_order_threshold = opts.expensive_order_threshold;

    unit_class_predicates(a, rec);
    boolean_predicates(a, quot, rec);
    clean_predicates(a, opts, rec);
    regularity_predicates(a, quot, opts, rec);
    structural_predicates(a, rec);

    auto bad = lattice_violations(rec);
    if (!bad.empty()) {
        std::string msg = "implication lattice violated for " + a.ring.label() + ":";
        for (const auto& b : bad) msg += " [" + b + "]";
        throw InternalInconsistency(msg);
    }
    return rec;
}

}  // namespace ringlab
