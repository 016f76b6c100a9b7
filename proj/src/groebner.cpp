#include "minorkit/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "minorkit/errors.hpp"

namespace minorkit {

IdealPresentation::IdealPresentation(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)) {
    if (!ring_) fail(ErrorKind::internal, "ideal without a ring");
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        check_same_ring(ring_, g.ring());
        gens_.push_back(std::move(g));
    }
}

GroebnerBasis::GroebnerBasis(IdealPresentation source, std::vector<Polynomial> polys)
    : source_(std::move(source)), polys_(std::move(polys)) {}

bool GroebnerBasis::contains_one() const {
    return polys_.size() == 1 && polys_[0].is_constant() && !polys_[0].is_zero();
}

namespace {

struct Reducer {
    Polynomial poly; // monic
    Monomial lm;
    uint64_t mask; // support mask of lm, 0 if > 64 vars
};

Polynomial reduce_full(const Polynomial& f, const std::vector<Reducer>& basis) {
    const RingPtr& ring = f.ring();
    Polynomial work = f;
    std::vector<Term> out;
    while (!work.is_zero()) {
        const Term& lead = work.leading();
        const Reducer* hit = nullptr;
        for (const auto& r : basis) {
            if ((r.mask & ~lead.m.support_mask()) != 0) continue;
            if (r.lm.divides(lead.m)) {
                hit = &r;
                break;
            }
        }
        if (!hit) {
            out.push_back(lead);
            work = work - Polynomial::term(ring, lead.c, lead.m);
        } else {
            Monomial q = lead.m.divide(hit->lm);
            work = work - hit->poly.times_term(lead.c, q);
        }
    }
    return Polynomial::from_terms(ring, std::move(out));
}

Reducer make_reducer(const Polynomial& p) {
    Polynomial m = p.monic();
    Monomial lm = m.lm();
    return Reducer{std::move(m), lm, lm.support_mask()};
}

struct PairKey {
    int deg;
    Monomial lcm;
    size_t i, j;
    MonomialOrder order;

    bool operator<(const PairKey& o) const {
        if (deg != o.deg) return deg < o.deg;
        int c = mono_cmp(lcm, o.lcm, order);
        if (c != 0) return c < 0;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

} // namespace

GroebnerBasis buchberger(const IdealPresentation& ideal, const GBLimits& limits) {
    const RingPtr& ring = ideal.ring();
    MonomialOrder order = ring->order();

    std::vector<Reducer> basis;
    for (const auto& g : ideal.gens()) basis.push_back(make_reducer(g));

    std::set<PairKey> queue;
    std::set<std::pair<size_t, size_t>> pending; // mirrors queue membership
    auto push_pair = [&](size_t i, size_t j) {
        if (basis[i].lm.coprime(basis[j].lm)) return; // product criterion
        Monomial l = Monomial::lcm(basis[i].lm, basis[j].lm);
        queue.insert(PairKey{static_cast<int>(l.degree()), l, i, j, order});
        pending.insert({i, j});
    };
    for (size_t j = 1; j < basis.size(); ++j)
        for (size_t i = 0; i < j; ++i) push_pair(i, j);

    size_t processed = 0;
    while (!queue.empty()) {
        PairKey top = *queue.begin();
        queue.erase(queue.begin());
        pending.erase({top.i, top.j});
        if (++processed > limits.pair_cap)
            fail(ErrorKind::resource_cap,
                 "pair cap exceeded (" + std::to_string(limits.pair_cap) + ")");
        if (top.deg > limits.degree_cap)
            fail(ErrorKind::resource_cap,
                 "degree cap exceeded (" + std::to_string(limits.degree_cap) + ")");

        // chain criterion: some k divides the lcm and both spanned pairs settled
        bool skip = false;
        for (size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == top.i || k == top.j) continue;
            if (!basis[k].lm.divides(top.lcm)) continue;
            auto key = [&](size_t a, size_t b) {
                return std::make_pair(std::min(a, b), std::max(a, b));
            };
            if (!pending.count(key(top.i, k)) && !pending.count(key(top.j, k))) skip = true;
        }
        if (skip) continue;

        const Reducer& f = basis[top.i];
        const Reducer& g = basis[top.j];
        Polynomial s = f.poly.times_term(FieldElem::one(ring->field()), top.lcm.divide(f.lm)) -
                       g.poly.times_term(FieldElem::one(ring->field()), top.lcm.divide(g.lm));
        Polynomial r = reduce_full(s, basis);
        if (r.is_zero()) continue;
        if (r.degree() > limits.degree_cap)
            fail(ErrorKind::resource_cap,
                 "degree cap exceeded (" + std::to_string(limits.degree_cap) + ")");
        basis.push_back(make_reducer(r));
        size_t idx = basis.size() - 1;
        for (size_t i = 0; i < idx; ++i) push_pair(i, idx);
    }

    // inter-reduce to the unique reduced basis
    std::vector<Polynomial> polys;
    for (const auto& r : basis) polys.push_back(r.poly);
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < polys.size(); ++i) {
            std::vector<Reducer> others;
            for (size_t j = 0; j < polys.size(); ++j)
                if (j != i && !polys[j].is_zero()) others.push_back(make_reducer(polys[j]));
            if (polys[i].is_zero()) continue;
            Polynomial r = reduce_full(polys[i], others);
            if (!(r == polys[i])) {
                polys[i] = r;
                changed = true;
            }
        }
    }
    std::vector<Polynomial> reduced;
    for (auto& p : polys)
        if (!p.is_zero()) reduced.push_back(p.monic());
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return mono_cmp(a.lm(), b.lm(), order) > 0;
    });
    return GroebnerBasis(ideal, std::move(reduced));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    check_same_ring(f.ring(), gb.ring());
    std::vector<Reducer> basis;
    for (const auto& p : gb.polys()) basis.push_back(make_reducer(p));
    return reduce_full(f, basis);
}

bool ideal_member(const Polynomial& f, const GroebnerBasis& gb) {
    return normal_form(f, gb).is_zero();
}

bool ideal_member(const Polynomial& f, const IdealPresentation& ideal, const GBLimits& limits) {
    return ideal_member(f, buchberger(ideal, limits));
}

namespace {

std::string fresh_var_name(const RingPtr& ring) {
    std::string name = "t";
    while (ring->var_index(name)) name += "_";
    return name;
}

} // namespace

bool radical_member(const Polynomial& f, const GroebnerBasis& gb, const GBLimits& limits) {
    check_same_ring(f.ring(), gb.ring());
    if (f.is_zero()) return true;
    if (gb.contains_one()) return true;
    if (ideal_member(f, gb)) return true;
    if (f.is_constant()) return false; // nonzero constant vs proper ideal

    const RingPtr& ring = gb.ring();
    RingPtr ext = ring->extended({fresh_var_name(ring)});
    size_t t_index = ext->nvars() - 1;

    std::vector<Polynomial> gens;
    std::vector<size_t> embed(ring->nvars());
    for (size_t i = 0; i < ring->nvars(); ++i) embed[i] = i;
    for (const auto& p : gb.polys()) gens.push_back(p.map_ring(ext, embed));
    Polynomial t = Polynomial::variable(ext, t_index);
    gens.push_back(Polynomial::constant(ext, FieldElem::one(ext->field())) -
                   t * f.map_ring(ext, embed));

    GroebnerBasis extended = buchberger(IdealPresentation(ext, std::move(gens)), limits);
    return extended.contains_one();
}

bool radical_member(const Polynomial& f, const IdealPresentation& ideal, const GBLimits& limits) {
    return radical_member(f, buchberger(ideal, limits), limits);
}

bool equal_radical(const IdealPresentation& lhs, const IdealPresentation& rhs,
                   const GBLimits& limits) {
    check_same_ring(lhs.ring(), rhs.ring());
    GroebnerBasis gl = buchberger(lhs, limits);
    GroebnerBasis gr = buchberger(rhs, limits);
    for (const auto& f : lhs.gens())
        if (!radical_member(f, gr, limits)) return false;
    for (const auto& f : rhs.gens())
        if (!radical_member(f, gl, limits)) return false;
    return true;
}

int ideal_height(const GroebnerBasis& gb) {
    const RingPtr& ring = gb.ring();
    size_t n = ring->nvars();
    if (n > 20) fail(ErrorKind::resource_cap, "height search capped at 20 variables");
    if (gb.contains_one()) fail(ErrorKind::degenerate_input, "height of the improper ideal");

    std::vector<uint64_t> masks;
    for (const auto& p : gb.polys()) masks.push_back(p.lm().support_mask());

    // dim = largest subset S of variables with no leading monomial supported in S
    size_t best = 0;
    uint64_t full = (n == 64) ? ~0ull : ((1ull << n) - 1);
    for (uint64_t s = 0; s <= full; ++s) {
        size_t pop = static_cast<size_t>(__builtin_popcountll(s));
        if (pop <= best) continue;
        bool independent = true;
        for (uint64_t m : masks)
            if ((m & ~s) == 0) {
                independent = false;
                break;
            }
        if (independent) best = pop;
    }
    return static_cast<int>(n - best);
}

int ideal_height(const IdealPresentation& ideal, const GBLimits& limits) {
    return ideal_height(buchberger(ideal, limits));
}

} // namespace minorkit
