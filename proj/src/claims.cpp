#include "ringlab/claims.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace ringlab {

UnknownClaim::UnknownClaim(const std::string& id) : Error("unknown claim id '" + id + "'") {}

const char* claim_status_name(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::pass: return "pass";
        case ClaimStatus::fail: return "fail";
        case ClaimStatus::skipped: return "skipped(size)";
        case ClaimStatus::not_applicable: return "not-applicable";
    }
    return "?";
}

bool Report::any_fail() const { return total_failures() > 0; }

std::size_t Report::total_failures() const {
    std::size_t n = 0;
    for (const auto& c : claims) n += c.fail;
    return n;
}

elem_t small_int_elem(const FiniteRing& r, unsigned k) {
    elem_t acc = r.zero();
    for (unsigned i = 0; i < k; ++i) acc = r.add(acc, r.one());
    return acc;
}

std::vector<elem_t> unital_subring_members(const FiniteRing& r, const std::vector<elem_t>& gens) {
    std::vector<char> in(r.order(), 0);
    std::vector<elem_t> members, work;
    auto push = [&](elem_t x) {
        if (!in[x]) {
            in[x] = 1;
            members.push_back(x);
            work.push_back(x);
        }
    };
    push(r.zero());
    push(r.one());
    for (elem_t g : gens) push(g);
    while (!work.empty()) {
        elem_t x = work.back();
        work.pop_back();
        push(r.neg(x));
        for (std::size_t i = 0; i < members.size(); ++i) {
            push(r.add(x, members[i]));
            push(r.mul(x, members[i]));
            push(r.mul(members[i], x));
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

FiniteRing subring_on(const FiniteRing& r, const std::vector<elem_t>& members) {
    const std::size_t q = members.size();
    auto pos = [&](elem_t x) {
        auto it = std::lower_bound(members.begin(), members.end(), x);
        if (it == members.end() || *it != x)
            throw InternalInconsistency("subring members not closed in " + r.label());
        return static_cast<elem_t>(it - members.begin());
    };
    std::vector<elem_t> add(q * q), mul(q * q);
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b) {
            add[a * q + b] = pos(r.add(members[a], members[b]));
            mul[a * q + b] = pos(r.mul(members[a], members[b]));
        }
    return validate_ring(q, std::move(add), std::move(mul), pos(r.zero()), pos(r.one()), {},
                         "Sub(" + r.label() + ")");
}

std::optional<std::size_t> p_group_prime(const FiniteGroup& g) {
    std::size_t m = g.order();
    if (m == 1) return 0;
    for (std::size_t p = 2; p <= m; ++p) {
        if (!is_prime(p) || m % p != 0) continue;
        std::size_t v = m;
        while (v % p == 0) v /= p;
        if (v == 1) return p;
        return std::nullopt;
    }
    return std::nullopt;
}

namespace {

std::string fmt_elems(std::initializer_list<std::size_t> xs) {
    std::string s;
    for (std::size_t x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

ClaimOutcome outcome(const std::string& id, const std::string& subject,
                     std::vector<std::uint64_t> hashes, ClaimStatus st,
                     std::string witness = {}, std::vector<elem_t> welems = {}) {
    ClaimOutcome o;
    o.claim_id = id;
    o.subject = subject;
    o.subject_hashes = std::move(hashes);
    o.status = st;
    o.witness = std::move(witness);
    o.witness_elems = std::move(welems);
    return o;
}

using Outcomes = std::vector<ClaimOutcome>;

// ---- the sqrt-radical lemma family -------------------------------------

Outcomes claim_hom_image(Engine& engine, const Catalog& cat) {
    Outcomes out;
    for (const auto& s : cat.surjections) {
        const RingAnalysis& src = engine.analyze(s.source);
        const RingAnalysis& dst = engine.analyze(s.target);
        std::string subject = s.kind + " " + s.source.label() + " -> " + s.target.label();
        ClaimOutcome o = outcome("L2.1", subject, {s.source.hash(), s.target.hash()},
                                 ClaimStatus::pass);
        for (elem_t x : src.sqrt_j.members) {
            if (!dst.sqrt_mask[s.hom(x)]) {
                o.status = ClaimStatus::fail;
                o.witness = "element " + std::to_string(x) + " maps outside the target radical";
                o.witness_elems = {x, s.hom(x)};
                break;
            }
        }
        out.push_back(std::move(o));
    }
    return out;
}

Outcomes claim_l12(Engine& engine, const Catalog& cat, int item) {
    Outcomes out;
    const std::string id = "L1.2-" + std::to_string(item);
    for (const auto& e : cat.entries) {
        const FiniteRing& r = e.ring;
        const std::size_t n = r.order();
        const RingAnalysis& a = engine.analyze(r);
        ClaimOutcome o = outcome(id, e.expr, {r.hash()}, ClaimStatus::pass);
        auto fail = [&](std::string w, std::vector<elem_t> el) {
            o.status = ClaimStatus::fail;
            o.witness = std::move(w);
            o.witness_elems = std::move(el);
        };
        switch (item) {
            case 1:
                for (elem_t x : a.sqrt_j.members) {
                    for (elem_t b = 0; b < n && o.status == ClaimStatus::pass; ++b) {
                        elem_t xb = r.mul(x, b);
                        if (xb == r.mul(b, x) && !a.sqrt_mask[xb])
                            fail("commuting product escapes: a=" + fmt_elems({x, b}), {x, b});
                    }
                    if (o.status != ClaimStatus::pass) break;
                }
                break;
            case 2:
                for (elem_t x = 0; x < n && o.status == ClaimStatus::pass; ++x) {
                    elem_t p = x;
                    for (std::size_t k = 1; k <= n; ++k) {
                        if (a.sqrt_mask[p] != a.sqrt_mask[x]) {
                            fail("power " + std::to_string(k) + " of " + std::to_string(x) +
                                     " disagrees on membership",
                                 {x, p});
                            break;
                        }
                        p = r.mul(p, x);
                    }
                }
                break;
            case 3:
                for (elem_t x : a.sqrt_j.members)
                    if (!a.unit_mask[r.sub(r.one(), x)]) {
                        fail("1 - a not a unit for a=" + std::to_string(x), {x});
                        break;
                    }
                break;
            case 4: {
                std::vector<char> central = elem_mask(a.sets.center, n);
                for (elem_t x : a.sqrt_j.members)
                    if (central[x] && !a.j_mask[x]) {
                        fail("central element outside J: " + std::to_string(x), {x});
                        break;
                    }
                break;
            }
            case 5: {
                if (n > 64) {
                    o.status = ClaimStatus::skipped;
                    break;
                }
                for (elem_t g : a.jacobson.members.members) {
                    Ideal ideal = ideal_generated(r, make_elem_set(r, {g}));
                    QuotientResult q = quotient(r, ideal);
                    const RingAnalysis& qa = engine.analyze(
                        q.ring.with_label(e.expr + "/(" + std::to_string(g) + ")"));
                    std::vector<char> image(q.ring.order(), 0);
                    for (elem_t x : a.sqrt_j.members) image[q.projection(x)] = 1;
                    for (elem_t c = 0; c < q.ring.order(); ++c)
                        if (image[c] != qa.sqrt_mask[c]) {
                            fail("quotient by (" + std::to_string(g) +
                                     ") disagrees at coset " + std::to_string(c),
                                 {g, c});
                            break;
                        }
                    if (o.status != ClaimStatus::pass) break;
                }
                break;
            }
            case 6: {
                if (e.ast.kind != ExprKind::Prod) {
                    o.status = ClaimStatus::not_applicable;
                    break;
                }
                std::vector<FiniteRing> factors;
                std::vector<const RingAnalysis*> fas;
                for (const auto& c : e.ast.children) {
                    factors.push_back(std::get<FiniteRing>(eval_expr(engine, c)));
                    fas.push_back(&engine.analyze(factors.back()));
                }
                for (elem_t x = 0; x < n && o.status == ClaimStatus::pass; ++x) {
                    auto digits = product_decode(factors, x);
                    bool all = true;
                    for (std::size_t i = 0; i < factors.size(); ++i)
                        all = all && fas[i]->sqrt_mask[digits[i]];
                    if (all != static_cast<bool>(a.sqrt_mask[x]))
                        fail("componentwise membership disagrees at " + std::to_string(x), {x});
                }
                break;
            }
            case 7:
                for (elem_t x = 0; x < n && o.status == ClaimStatus::pass; ++x)
                    for (elem_t y = 0; y < n; ++y)
                        if (a.sqrt_mask[r.mul(x, y)] && !a.sqrt_mask[r.mul(y, x)]) {
                            fail("ab inside, ba outside: " + fmt_elems({x, y}), {x, y});
                            break;
                        }
                break;
            case 8:
                for (elem_t q : a.sets.nilpotents.members) {
                    for (elem_t j : a.jacobson.members.members)
                        if (!a.sqrt_mask[r.add(q, j)]) {
                            fail("nil + radical escapes: " + fmt_elems({q, j}), {q, j});
                            break;
                        }
                    if (o.status != ClaimStatus::pass) break;
                }
                break;
            default: throw UnknownClaim(id);
        }
        out.push_back(std::move(o));
    }
    return out;
}

// ---- transfer along subrings, quotients, products ----------------------

Outcomes claim_sub(Engine& engine, const Catalog& cat) {
    Outcomes out;
    for (const auto& e : cat.entries) {
        const FiniteRing& r = e.ring;
        ClaimOutcome o = outcome("P-sub", e.expr, {r.hash()}, ClaimStatus::pass);
        if (r.order() > 64) {
            o.status = ClaimStatus::skipped;
        } else if (!engine.is_w_sqrt_ju(r)) {
            o.status = ClaimStatus::not_applicable;
        } else {
            std::set<std::vector<elem_t>> seen;
            for (elem_t x = 0; x < r.order() && o.status == ClaimStatus::pass; ++x)
                for (elem_t y = x; y < r.order(); ++y) {
                    std::vector<elem_t> members = unital_subring_members(r, {x, y});
                    if (!seen.insert(members).second) continue;
                    FiniteRing s = subring_on(r, members);
                    if (!engine.is_w_sqrt_ju(s)) {
                        o.status = ClaimStatus::fail;
                        o.witness = "subring generated by {" + fmt_elems({x, y}) +
                                    "} loses the weak property";
                        o.witness_elems = {x, y};
                        break;
                    }
                }
        }
        out.push_back(std::move(o));
    }
    return out;
}

Outcomes claim_quot(Engine& engine, const Catalog& cat) {
    Outcomes out;
    for (const auto& e : cat.entries) {
        const FiniteRing& r = e.ring;
        ClaimOutcome o = outcome("P-quot", e.expr, {r.hash()}, ClaimStatus::pass);
        if (r.order() > 64) {
            o.status = ClaimStatus::skipped;
        } else {
            const RingAnalysis& a = engine.analyze(r);
            const bool w = engine.is_w_sqrt_ju(r);
            for (elem_t g : a.jacobson.members.members) {
                Ideal ideal = ideal_generated(r, make_elem_set(r, {g}));
                QuotientResult q = quotient(r, ideal);
                if (engine.is_w_sqrt_ju(
                        q.ring.with_label(e.expr + "/(" + std::to_string(g) + ")")) != w) {
                    o.status = ClaimStatus::fail;
                    o.witness = "quotient by (" + std::to_string(g) + ") flips the verdict";
                    o.witness_elems = {g};
                    break;
                }
            }
        }
        out.push_back(std::move(o));
    }
    return out;
}

// the fixed factor pool for the product claims, restricted to members the
// catalog actually carries (empty catalog -> no subjects)
std::vector<std::string> product_pool(Engine& engine, const Catalog& cat) {
    static const std::vector<std::string> pool = {"Z(2)", "Z(3)", "Z(4)", "Z(9)", "GF(2,2)"};
    std::vector<std::string> present;
    for (const auto& t : pool) {
        try {
            if (cat.contains_hash(eval_ring(engine, t).hash())) present.push_back(t);
        } catch (const EvalError&) {
        }
    }
    return present;
}

Outcomes claim_prod(Engine& engine, const Catalog& cat) {
    Outcomes out;
    const auto pool = product_pool(engine, cat);
    for (const auto& ta : pool)
        for (const auto& tb : pool) {
            std::string subject = ta + " x " + tb;
            try {
                FiniteRing a = eval_ring(engine, ta);
                FiniteRing b = eval_ring(engine, tb);
                if (!(engine.is_w_sqrt_ju(a) && engine.is_sqrt_ju(b))) {
                    out.push_back(outcome("P-prod", subject, {a.hash(), b.hash()},
                                          ClaimStatus::not_applicable));
                    continue;
                }
                FiniteRing prod = eval_ring(engine, "Prod(" + ta + "," + tb + ")");
                bool ok = engine.is_w_sqrt_ju(prod);
                out.push_back(outcome("P-prod", subject, {a.hash(), b.hash(), prod.hash()},
                                      ok ? ClaimStatus::pass : ClaimStatus::fail,
                                      ok ? "" : "product lost the weak property"));
            } catch (const EvalError&) {
                // the fixed pool can exceed a tight --max-order
                out.push_back(outcome("P-prod", subject, {}, ClaimStatus::skipped));
            }
        }
    return out;
}

Outcomes claim_prodchar(Engine& engine, const Catalog& cat) {
    Outcomes out;
    const auto pool = product_pool(engine, cat);
    auto run_tuple = [&](const std::vector<std::string>& texts) {
        std::vector<FiniteRing> factors;
        std::string expr = "Prod(";
        for (std::size_t i = 0; i < texts.size(); ++i) expr += (i ? "," : "") + texts[i];
        expr += ")";
        FiniteRing prod;
        try {
            for (const auto& t : texts) factors.push_back(eval_ring(engine, t));
            prod = eval_ring(engine, expr);
        } catch (const EvalError&) {
            out.push_back(outcome("P-prodchar", expr, {}, ClaimStatus::skipped));
            return;
        }
        bool all_w = true;
        std::size_t not_sqrt = 0;
        for (const auto& f : factors) {
            all_w = all_w && engine.is_w_sqrt_ju(f);
            if (!engine.is_sqrt_ju(f)) ++not_sqrt;
        }
        bool expected = all_w && not_sqrt <= 1;
        bool got = engine.is_w_sqrt_ju(prod);
        std::vector<std::uint64_t> hashes;
        for (const auto& f : factors) hashes.push_back(f.hash());
        out.push_back(outcome("P-prodchar", expr, hashes,
                              got == expected ? ClaimStatus::pass : ClaimStatus::fail,
                              got == expected
                                  ? ""
                                  : "product verdict " + std::to_string(got) +
                                        " but factor analysis says " + std::to_string(expected)));
    };
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i; j < pool.size(); ++j) run_tuple({pool[i], pool[j]});
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i; j < pool.size(); ++j)
            for (std::size_t k = j; k < pool.size(); ++k) run_tuple({pool[i], pool[j], pool[k]});
    return out;
}

Outcomes claim_power(Engine& engine, const Catalog& cat) {
    Outcomes out;
    for (const auto& t : product_pool(engine, cat)) {
        for (int n = 2; n <= 3; ++n) {
            std::string expr = "Prod(" + t;
            for (int i = 1; i < n; ++i) expr += "," + t;
            expr += ")";
            try {
                FiniteRing r = eval_ring(engine, t);
                FiniteRing rn = eval_ring(engine, expr);
                bool ok = engine.is_w_sqrt_ju(rn) == engine.is_sqrt_ju(rn) &&
                          engine.is_sqrt_ju(rn) == engine.is_sqrt_ju(r);
                out.push_back(outcome("C-power", expr, {r.hash(), rn.hash()},
                                      ok ? ClaimStatus::pass : ClaimStatus::fail,
                                      ok ? "" : "weak/plain verdicts disagree on the power"));
            } catch (const EvalError&) {
                out.push_back(outcome("C-power", expr, {}, ClaimStatus::skipped));
            }
        }
    }
    return out;
}

// ---- matrix rings and Dedekind-finiteness ------------------------------

Outcomes claim_matrix(Engine& engine, const Catalog& cat) {
    Outcomes out;
    for (const auto& e : cat.entries) {
        if (e.ast.kind != ExprKind::M) continue;
        FiniteRing base = std::get<FiniteRing>(eval_expr(engine, e.ast.children[0]));
        ClaimOutcome o = outcome("P-matrix", e.expr, {e.ring.hash()}, ClaimStatus::pass);
        if (base.order() == 1) {
            o.status = ClaimStatus::not_applicable;  // zero base ring
        } else if (engine.is_w_sqrt_ju(e.ring)) {
            o.status = ClaimStatus::fail;
            o.witness = "matrix ring claims the weak property";
        } else if (e.ast.ints[0] == 2) {
            if (!matrix_witness_is_unit_pair(engine, base, e.ring)) {
                o.status = ClaimStatus::fail;
                o.witness = "witness matrix [[0,1],[1,1]] +- identity is not a unit pair";
            } else {
                // record the unit pair that blocks the weak decomposition
                elem_t w = matrix_encode(base, 2, {base.zero(), base.one(), base.one(),
                                                   base.one()});
                o.witness_elems = {e.ring.add(w, e.ring.one()), e.ring.sub(w, e.ring.one())};
            }
        }
        out.push_back(std::move(o));
    }
    return out;
}

Outcomes claim_dedekind(Engine& engine, const Catalog& cat) {
    Outcomes out;
    for (const auto& e : cat.entries) {
        ClaimOutcome o = outcome("P-dedekind", e.expr, {e.ring.hash()}, ClaimStatus::pass);
        if (!engine.is_w_sqrt_ju(e.ring))
            o.status = ClaimStatus::not_applicable;
        else if (!is_yes(engine.classify(e.ring).dedekind_finite)) {
            o.status = ClaimStatus::fail;
            o.witness = "one-sided inverse without a two-sided one";
        }
        out.push_back(std::move(o));
    }
    return out;
}

Outcomes claim_reduced(Engine& engine, const Catalog& cat) {
    Outcomes out;
    for (const auto& e : cat.entries) {
        const FiniteRing& r = e.ring;
        const RingAnalysis& a = engine.analyze(r);
        ClaimOutcome o = outcome("L-reduced", e.expr, {r.hash()}, ClaimStatus::pass);
        bool hyp = engine.is_w_sqrt_ju(r) && a.jacobson.size() == 1;
        if (hyp) {
            for (elem_t x = 0; x < r.order() && hyp; ++x) {
                if (x == r.zero()) continue;
                bool has_idem = false;
                for (elem_t t : r.mul_row(x))
                    if (t != r.zero() && a.id_mask[t]) {
                        has_idem = true;
                        break;
                    }
                hyp = has_idem;
            }
        }
        if (!hyp)
            o.status = ClaimStatus::not_applicable;
        else if (!is_yes(engine.classify(r).reduced)) {
            o.status = ClaimStatus::fail;
            o.witness = "hypotheses hold but a nonzero nilpotent exists";
        }
        out.push_back(std::move(o));
    }
    return out;
}

Outcomes claim_member(Engine& engine, const Catalog& cat) {
    Outcomes out;
    for (const auto& e : cat.entries) {
        const FiniteRing& r = e.ring;
        ClaimOutcome o = outcome("P-member", e.expr, {r.hash()}, ClaimStatus::pass);
        if (!engine.is_w_sqrt_ju(r)) {
            o.status = ClaimStatus::not_applicable;
            out.push_back(std::move(o));
            continue;
        }
        const RingAnalysis& a = engine.analyze(r);
        const elem_t two = small_int_elem(r, 2), three = small_int_elem(r, 3);
        if (a.unit_mask[three] != a.j_mask[two]) {
            o.status = ClaimStatus::fail;
            o.witness = "3 invertible does not match 2 in J";
        } else if (a.unit_mask[two] != a.j_mask[three]) {
            o.status = ClaimStatus::fail;
            o.witness = "2 invertible does not match 3 in J";
        } else if (a.j_mask[three]) {
            std::vector<elem_t> expected = {r.zero(), r.one()};
            std::sort(expected.begin(), expected.end());
            expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
            if (a.sets.idempotents.members != expected) {
                o.status = ClaimStatus::fail;
                o.witness = "3 in J but a nontrivial idempotent exists";
            }
        }
        out.push_back(std::move(o));
    }
    return out;
}

Outcomes claim_mino(Engine& engine, const Catalog& cat) {
    Outcomes out;
    for (const auto& e : cat.entries) {
        const RingAnalysis& a = engine.analyze(e.ring);
        bool two_in_j = a.j_mask[small_int_elem(e.ring, 2)];
        bool lhs = engine.is_sqrt_ju(e.ring);
        bool rhs = engine.is_w_sqrt_ju(e.ring) && two_in_j;
        out.push_back(outcome("P-mino", e.expr, {e.ring.hash()},
                              lhs == rhs ? ClaimStatus::pass : ClaimStatus::fail,
                              lhs == rhs ? "" : "sqrt-unit verdict disagrees with weak + 2 in J"));
    }
    return out;
}

Outcomes claim_char(Engine& engine, const Catalog& cat) {
    Outcomes out;
    for (const auto& e : cat.entries) {
        ClaimOutcome o = outcome("L-char", e.expr, {e.ring.hash()}, ClaimStatus::pass);
        if (!engine.is_w_sqrt_ju(e.ring)) {
            o.status = ClaimStatus::not_applicable;
        } else {
            std::size_t c = characteristic(e.ring);
            while (c % 2 == 0) c /= 2;
            while (c % 3 == 0) c /= 3;
            if (c != 1) {
                o.status = ClaimStatus::fail;
                o.witness = "characteristic " + std::to_string(characteristic(e.ring)) +
                            " has a prime factor other than 2 and 3";
            }
        }
        out.push_back(std::move(o));
    }
    return out;
}

Outcomes claim_corner(Engine& engine, const Catalog& cat) {
    Outcomes out;
    for (const auto& e : cat.entries) {
        const FiniteRing& r = e.ring;
        ClaimOutcome o = outcome("P-corner", e.expr, {r.hash()}, ClaimStatus::pass);
        if (!engine.is_w_sqrt_ju(r)) {
            o.status = ClaimStatus::not_applicable;
        } else if (r.order() > 256) {
            o.status = ClaimStatus::skipped;
        } else {
            const RingAnalysis& a = engine.analyze(r);
            for (elem_t idem : a.sets.idempotents.members) {
                if (idem == r.zero()) continue;
                FiniteRing c = corner(r, idem);
                if (!engine.is_w_sqrt_ju(c)) {
                    o.status = ClaimStatus::fail;
                    o.witness = "corner at " + std::to_string(idem) + " loses the weak property";
                    o.witness_elems = {idem};
                    break;
                }
            }
        }
        out.push_back(std::move(o));
    }
    return out;
}

Outcomes claim_division(Engine& engine, const Catalog& cat) {
    Outcomes out;
    for (const auto& e : cat.entries) {
        const FiniteRing& r = e.ring;
        const RingAnalysis& a = engine.analyze(r);
        ClaimOutcome o = outcome("P-3.26", e.expr, {r.hash()}, ClaimStatus::pass);
        // (1) division rings
        bool division = r.order() >= 2 && a.unit_group.members.size() == r.order() - 1;
        if (division) {
            bool expected = r.order() == 2 || r.order() == 3;
            if (engine.is_w_sqrt_ju(r) != expected) {
                o.status = ClaimStatus::fail;
                o.witness = "division ring of order " + std::to_string(r.order()) +
                            " misclassified";
            }
        }
        // (2) local rings via R/J
        if (o.status == ClaimStatus::pass) {
            const RingAnalysis& qa = engine.analyze(a.quotient_by_j);
            bool rq_field = qa.ring.order() >= 2 &&
                            qa.unit_group.members.size() == qa.ring.order() - 1 &&
                            (qa.ring.order() == 2 || qa.ring.order() == 3);
            bool lhs = is_yes(engine.classify(r).local) && engine.is_w_sqrt_ju(r);
            if (lhs != rq_field) {
                o.status = ClaimStatus::fail;
                o.witness = "local + weak verdict disagrees with |R/J| in {2,3}";
            }
        }
        out.push_back(std::move(o));
    }
    return out;
}

// ---- the regularity equivalence chains ---------------------------------

Outcomes claim_chain_regular(Engine& engine, const Catalog& cat) {
    Outcomes out;
    for (const auto& e : cat.entries) {
        const ClassificationRecord& rec = engine.classify(e.ring);
        ClaimOutcome o = outcome("T-3.13", e.expr, {e.ring.hash()}, ClaimStatus::pass);
        if (is_skipped(rec.pi_regular) || is_skipped(rec.unit_regular)) {
            o.status = ClaimStatus::skipped;
        } else {
            const bool w = is_yes(rec.w_sqrt_ju);
            const bool legs[] = {
                is_yes(rec.regular) && w,
                is_yes(rec.pi_regular) && is_yes(rec.reduced) && w,
                is_yes(rec.weakly_boolean),
                is_yes(rec.strongly_regular) && w,
                is_yes(rec.unit_regular) && w,
            };
            for (bool leg : legs)
                if (leg != legs[0]) {
                    o.status = ClaimStatus::fail;
                    o.witness = "equivalence chain breaks: regular*w=" +
                                std::to_string(legs[0]) + " pi*red*w=" + std::to_string(legs[1]) +
                                " wb=" + std::to_string(legs[2]) + " sreg*w=" +
                                std::to_string(legs[3]) + " ureg*w=" + std::to_string(legs[4]);
                    break;
                }
        }
        out.push_back(std::move(o));
    }
    return out;
}

Outcomes claim_chain_exchange(Engine& engine, const Catalog& cat) {
    Outcomes out;
    for (const auto& e : cat.entries) {
        const ClassificationRecord& rec = engine.classify(e.ring);
        ClaimOutcome o = outcome("T-3.16", e.expr, {e.ring.hash()}, ClaimStatus::pass);
        if (is_skipped(rec.exchange)) {
            o.status = ClaimStatus::skipped;
        } else {
            const bool w = is_yes(rec.w_sqrt_ju);
            const bool legs[] = {
                is_yes(rec.semi_regular) && w,
                is_yes(rec.exchange) && w,
                is_yes(rec.semi_weakly_boolean),
                is_yes(rec.strongly_weakly_nil_clean),
            };
            bool ok = legs[0] == legs[1] && legs[1] == legs[2] && legs[2] == legs[3];
            // on weakly sqrt-unit rings: semi-regular = exchange = clean
            if (ok && w)
                ok = is_yes(rec.semi_regular) == is_yes(rec.exchange) &&
                     is_yes(rec.exchange) == is_yes(rec.clean);
            // on exchange rings: weak sqrt-unit = weak unit-nilpotent
            if (ok && is_yes(rec.exchange)) ok = w == is_yes(rec.wuu);
            if (!ok) {
                o.status = ClaimStatus::fail;
                o.witness = "exchange chain breaks: sreg*w=" + std::to_string(legs[0]) +
                            " exch*w=" + std::to_string(legs[1]) + " swb=" +
                            std::to_string(legs[2]) + " swnc=" + std::to_string(legs[3]);
            }
        }
        out.push_back(std::move(o));
    }
    return out;
}

Outcomes claim_quotient_wuu(Engine& engine, const Catalog& cat) {
    Outcomes out;
    for (const auto& e : cat.entries) {
        const RingAnalysis& a = engine.analyze(e.ring);
        const ClassificationRecord& rec = engine.classify(e.ring);
        const ClassificationRecord& qrec = engine.classify(a.quotient_by_j);
        ClaimOutcome o = outcome("T-m", e.expr, {e.ring.hash()}, ClaimStatus::pass);
        bool w = is_yes(rec.w_sqrt_ju);
        if (w != is_yes(qrec.wuu)) {
            o.status = ClaimStatus::fail;
            o.witness = "verdict differs from the weak unit-nilpotent verdict of R/J";
        } else {
            // corollary instances: J = 0, and J nil (automatic here)
            bool j_zero = a.jacobson.size() == 1;
            bool j_nil = true;
            for (elem_t j : a.jacobson.members.members) j_nil = j_nil && a.nil_mask[j];
            if ((j_zero || j_nil) && w != is_yes(rec.wuu)) {
                o.status = ClaimStatus::fail;
                o.witness = "nil radical but weak verdicts of R and R/J-style corollary differ";
            }
        }
        out.push_back(std::move(o));
    }
    return out;
}

// ---- construction-specific transfers -----------------------------------

Outcomes claim_uper(Engine& engine, const Catalog& cat) {
    Outcomes out;
    for (const auto& e : cat.entries) {
        if (e.ast.kind != ExprKind::T) continue;
        FiniteRing base = std::get<FiniteRing>(eval_expr(engine, e.ast.children[0]));
        ClaimOutcome o = outcome("P-uper", e.expr, {e.ring.hash(), base.hash()},
                                 ClaimStatus::pass);
        if (engine.is_sqrt_ju(e.ring) != engine.is_sqrt_ju(base)) {
            o.status = ClaimStatus::fail;
            o.witness = "sqrt-unit verdict differs between base and triangular ring";
        } else if (e.ast.ints[0] >= 2 && engine.is_w_sqrt_ju(e.ring) &&
                   !engine.is_sqrt_ju(base)) {
            o.status = ClaimStatus::fail;
            o.witness = "triangular ring weakly sqrt-unit but base not sqrt-unit";
        }
        out.push_back(std::move(o));
    }
    return out;
}

Outcomes claim_trivext(Engine& engine, const Catalog& cat) {
    Outcomes out;
    for (const auto& e : cat.entries) {
        if (e.ast.kind != ExprKind::TrivExt) continue;
        FiniteRing base = std::get<FiniteRing>(eval_expr(engine, e.ast.children[0]));
        bool ok = engine.is_w_sqrt_ju(e.ring) == engine.is_w_sqrt_ju(base);
        out.push_back(outcome("P-3.4", e.expr, {e.ring.hash(), base.hash()},
                              ok ? ClaimStatus::pass : ClaimStatus::fail,
                              ok ? "" : "trivial extension disagrees with its base ring"));
    }
    return out;
}

// ---- group rings --------------------------------------------------------

struct GroupRingSubject {
    const CatalogEntry* entry;
    FiniteRing base;
    FiniteGroup group;
};

std::vector<GroupRingSubject> group_ring_subjects(Engine& engine, const Catalog& cat) {
    std::vector<GroupRingSubject> subjects;
    for (const auto& e : cat.entries) {
        if (e.ast.kind != ExprKind::GR) continue;
        GroupRingSubject s;
        s.entry = &e;
        s.base = std::get<FiniteRing>(eval_expr(engine, e.ast.children[0]));
        s.group = std::get<FiniteGroup>(eval_expr(engine, e.ast.children[1]));
        subjects.push_back(std::move(s));
    }
    return subjects;
}

Outcomes claim_g_l1(Engine& engine, const Catalog& cat) {
    Outcomes out;
    for (const auto& s : group_ring_subjects(engine, cat)) {
        ClaimOutcome o = outcome("G-l1", s.entry->expr, {s.entry->ring.hash(), s.base.hash()},
                                 ClaimStatus::pass);
        if (!engine.is_w_sqrt_ju(s.entry->ring))
            o.status = ClaimStatus::not_applicable;
        else if (!engine.is_w_sqrt_ju(s.base)) {
            o.status = ClaimStatus::fail;
            o.witness = "group ring has the weak property but the coefficient ring does not";
        }
        out.push_back(std::move(o));
    }
    return out;
}

Outcomes claim_g_torsion(Engine& engine, const Catalog& cat) {
    Outcomes out;
    for (const auto& s : group_ring_subjects(engine, cat)) {
        // finite groups are torsion; recorded as a trivially satisfied claim
        ClaimOutcome o = outcome("G-torsion", s.entry->expr, {s.entry->ring.hash()},
                                 ClaimStatus::pass);
        for (elem_t g = 0; g < s.group.order(); ++g) {
            if (element_order(s.group, g) > s.group.order()) {
                o.status = ClaimStatus::fail;
                o.witness = "element without finite order bound";
                break;
            }
        }
        out.push_back(std::move(o));
    }
    return out;
}

Outcomes claim_g_2gr(Engine& engine, const Catalog& cat) {
    Outcomes out;
    for (const auto& s : group_ring_subjects(engine, cat)) {
        const RingAnalysis& ba = engine.analyze(s.base);
        ClaimOutcome o = outcome("G-2gr", s.entry->expr, {s.entry->ring.hash(), s.base.hash()},
                                 ClaimStatus::pass);
        bool hyp = engine.is_w_sqrt_ju(s.entry->ring) &&
                   ba.j_mask[small_int_elem(s.base, 2)];
        if (!hyp)
            o.status = ClaimStatus::not_applicable;
        else if (!is_p_group(s.group, 2)) {
            o.status = ClaimStatus::fail;
            o.witness = "hypotheses hold but the group is not a 2-group";
        }
        out.push_back(std::move(o));
    }
    return out;
}

Outcomes claim_g_3gr(Engine& engine, const Catalog& cat) {
    Outcomes out;
    for (const auto& s : group_ring_subjects(engine, cat)) {
        const RingAnalysis& ba = engine.analyze(s.base);
        ClaimOutcome o = outcome("G-3gr", s.entry->expr, {s.entry->ring.hash(), s.base.hash()},
                                 ClaimStatus::pass);
        bool hyp = engine.is_w_sqrt_ju(s.entry->ring) &&
                   ba.j_mask[small_int_elem(s.base, 3)] && p_group_prime(s.group).has_value();
        if (!hyp)
            o.status = ClaimStatus::not_applicable;
        else if (!is_p_group(s.group, 3)) {
            o.status = ClaimStatus::fail;
            o.witness = "hypotheses hold but the group is not a 3-group";
        }
        out.push_back(std::move(o));
    }
    return out;
}

Outcomes claim_groupring_theorem(Engine& engine, const Catalog& cat) {
    Outcomes out;
    for (const auto& s : group_ring_subjects(engine, cat)) {
        GroupRingTheoremEval ev =
            eval_group_ring_theorem(engine, s.base, s.group, s.entry->ring);
        ClaimOutcome o = outcome("T-groupring", s.entry->expr,
                                 {s.entry->ring.hash(), s.base.hash()}, ClaimStatus::pass);
        if (!ev.applicable)
            o.status = ClaimStatus::not_applicable;
        else if (ev.lhs != ev.rhs()) {
            o.status = ClaimStatus::fail;
            o.witness = "characterization mismatch: lhs=" + std::to_string(ev.lhs) +
                        " two-group=" + std::to_string(ev.cond_two_group) +
                        " three-group=" + std::to_string(ev.cond_three_group) +
                        " split=" + std::to_string(ev.cond_split);
        }
        out.push_back(std::move(o));
    }
    return out;
}

}  // namespace

GroupRingTheoremEval eval_group_ring_theorem(Engine& engine, const FiniteRing& base,
                                             const FiniteGroup& group, const FiniteRing& rg) {
    GroupRingTheoremEval ev;
    ev.applicable = p_group_prime(group).has_value();
    if (!ev.applicable) return ev;
    ev.lhs = engine.is_w_sqrt_ju(rg);
    ev.cond_two_group = engine.is_sqrt_ju(base) && is_p_group(group, 2);

    const RingAnalysis& ba = engine.analyze(base);
    ev.cond_three_group = engine.is_w_sqrt_ju(base) &&
                          ba.j_mask[small_int_elem(base, 3)] && is_p_group(group, 3);

    if (is_trivial(group)) {
        std::vector<char> central = elem_mask(ba.sets.center, base.order());
        for (elem_t e : ba.sets.idempotents.members) {
            if (e == base.zero() || e == base.one() || !central[e]) continue;
            FiniteRing left = corner(base, e);
            FiniteRing right = corner(base, base.sub(base.one(), e));
            if (engine.is_sqrt_ju(left) && engine.is_w_sqrt_ju(right)) {
                ev.cond_split = true;
                break;
            }
        }
    }
    return ev;
}

bool matrix_witness_is_unit_pair(Engine& engine, const FiniteRing& base, const FiniteRing& m2) {
    const elem_t z = base.zero(), o = base.one();
    elem_t witness = matrix_encode(base, 2, {z, o, o, o});
    const RingAnalysis& a = engine.analyze(m2);
    elem_t plus = m2.add(witness, m2.one());
    elem_t minus = m2.sub(witness, m2.one());
    return a.unit_mask[plus] && a.unit_mask[minus];
}

const std::vector<ClaimInfo>& claim_registry() {
    static const std::vector<ClaimInfo> reg = {
        {"L2.1", "surjective images of the sqrt-radical land in the target sqrt-radical"},
        {"L1.2-1", "the sqrt-radical absorbs commuting products"},
        {"L1.2-2", "a power lies in the sqrt-radical exactly when the element does"},
        {"L1.2-3", "1 - a is a unit for every a in the sqrt-radical"},
        {"L1.2-4", "central sqrt-radical elements lie in the radical"},
        {"L1.2-5", "the sqrt-radical of R/I is the image of the sqrt-radical, for I inside J"},
        {"L1.2-6", "the sqrt-radical of a product is the product of the sqrt-radicals"},
        {"L1.2-7", "ab in the sqrt-radical forces ba in"},
        {"L1.2-8", "nilpotent + radical element lands in the sqrt-radical"},
        {"P-sub", "unital subrings inherit the weak sqrt-unit property"},
        {"P-quot", "the weak property transfers both ways across quotients by ideals inside J"},
        {"P-prod", "(weak sqrt-unit) x (sqrt-unit) products keep the weak property"},
        {"P-prodchar",
         "a product is weakly sqrt-unit iff every factor is and at most one is not sqrt-unit"},
        {"C-power", "R^n is weakly sqrt-unit iff it is sqrt-unit iff R is sqrt-unit"},
        {"P-matrix", "full 2x2 matrix rings are never weakly sqrt-unit (explicit unit pair)"},
        {"P-dedekind", "weakly sqrt-unit rings are Dedekind-finite"},
        {"L-reduced",
         "weak property + zero radical + idempotents in every nonzero right ideal force "
         "reducedness"},
        {"P-member", "3 invertible iff 2 in J; 2 invertible iff 3 in J; 3 in J kills "
                     "nontrivial idempotents"},
        {"P-mino", "sqrt-unit holds exactly when the weak property holds and 2 lies in J"},
        {"L-char", "weakly sqrt-unit rings have characteristic 2^a * 3^b"},
        {"P-corner", "corners of weakly sqrt-unit rings keep the weak property"},
        {"P-3.26", "division rings have the weak property exactly at orders 2 and 3; "
                   "local rings exactly when |R/J| is 2 or 3"},
        {"T-3.13", "regular + weak = weakly Boolean, with the strongly/unit-regular variants"},
        {"T-3.16", "exchange + weak = semi weakly Boolean = strongly weakly nil-clean"},
        {"T-m", "the weak property holds exactly when R/J is weakly unit-nilpotent"},
        {"P-uper", "triangular rings are sqrt-unit exactly when the base is; weakness at "
                   "size >= 2 forces it"},
        {"P-3.4", "trivial extensions have the weak property exactly when the base does"},
        {"G-l1", "a weakly sqrt-unit group ring forces a weakly sqrt-unit coefficient ring"},
        {"G-torsion", "groups of weakly sqrt-unit group rings are torsion (finite: trivially)"},
        {"G-2gr", "the weak property with 2 in J forces a 2-group"},
        {"G-3gr", "the weak property with 3 in J on a p-group forces a 3-group"},
        {"T-groupring", "group ring weakly sqrt-unit iff one of the three conditions holds"},
    };
    return reg;
}

bool is_known_claim(const std::string& id) {
    for (const auto& c : claim_registry())
        if (c.id == id) return true;
    return false;
}

std::vector<ClaimOutcome> check_claim(Engine& engine, const Catalog& catalog,
                                      const std::string& id) {
    if (id == "L2.1") return claim_hom_image(engine, catalog);
    if (id.rfind("L1.2-", 0) == 0 && id.size() == 6 && id[5] >= '1' && id[5] <= '8')
        return claim_l12(engine, catalog, id[5] - '0');
    if (id == "P-sub") return claim_sub(engine, catalog);
    if (id == "P-quot") return claim_quot(engine, catalog);
    if (id == "P-prod") return claim_prod(engine, catalog);
    if (id == "P-prodchar") return claim_prodchar(engine, catalog);
    if (id == "C-power") return claim_power(engine, catalog);
    if (id == "P-matrix") return claim_matrix(engine, catalog);
    if (id == "P-dedekind") return claim_dedekind(engine, catalog);
    if (id == "L-reduced") return claim_reduced(engine, catalog);
    if (id == "P-member") return claim_member(engine, catalog);
    if (id == "P-mino") return claim_mino(engine, catalog);
    if (id == "L-char") return claim_char(engine, catalog);
    if (id == "P-corner") return claim_corner(engine, catalog);
    if (id == "P-3.26") return claim_division(engine, catalog);
    if (id == "T-3.13") return claim_chain_regular(engine, catalog);
    if (id == "T-3.16") return claim_chain_exchange(engine, catalog);
    if (id == "T-m") return claim_quotient_wuu(engine, catalog);
    if (id == "P-uper") return claim_uper(engine, catalog);
    if (id == "P-3.4") return claim_trivext(engine, catalog);
    if (id == "G-l1") return claim_g_l1(engine, catalog);
    if (id == "G-torsion") return claim_g_torsion(engine, catalog);
    if (id == "G-2gr") return claim_g_2gr(engine, catalog);
    if (id == "G-3gr") return claim_g_3gr(engine, catalog);
    if (id == "T-groupring") return claim_groupring_theorem(engine, catalog);
    throw UnknownClaim(id);
}

Report run_suite(Engine& engine, const Catalog& catalog, const std::vector<std::string>& ids) {
    std::vector<std::string> selected = ids;
    if (selected.empty())
        for (const auto& c : claim_registry()) selected.push_back(c.id);
    for (const auto& id : selected)
        if (!is_known_claim(id)) throw UnknownClaim(id);

    Report report;
    report.catalog_size = catalog.entries.size();
    report.config = catalog.config;
    for (const auto& info : claim_registry()) {
        if (std::find(selected.begin(), selected.end(), info.id) == selected.end()) continue;
        ClaimSummary summary;
        summary.id = info.id;
        summary.anchor = info.anchor;
        for (auto& o : check_claim(engine, catalog, info.id)) {
            ++summary.subjects;
            switch (o.status) {
                case ClaimStatus::pass: ++summary.pass; break;
                case ClaimStatus::fail:
                    ++summary.fail;
                    summary.failures.push_back(std::move(o));
                    break;
                case ClaimStatus::skipped: ++summary.skipped; break;
                case ClaimStatus::not_applicable: ++summary.not_applicable; break;
            }
        }
        report.claims.push_back(std::move(summary));
    }
    return report;
}

}  // namespace ringlab
