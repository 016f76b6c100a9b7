#pragma once

#include <vector>

#include "minorkit/poly.hpp"

namespace minorkit {

// caps for the Buchberger loop; exceeding one raises ErrorKind::resource_cap
struct GBLimits {
    size_t pair_cap = 50000;
    int degree_cap = 40;
};

class IdealPresentation {
public:
    IdealPresentation(RingPtr ring, std::vector<Polynomial> gens);

    const RingPtr& ring() const { return ring_; }
    // zero generators are dropped on construction
    const std::vector<Polynomial>& gens() const { return gens_; }

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
};

class GroebnerBasis {
public:
    GroebnerBasis(IdealPresentation source, std::vector<Polynomial> polys);

    const RingPtr& ring() const { return source_.ring(); }
    MonomialOrder order() const { return source_.ring()->order(); }
    const IdealPresentation& source() const { return source_; }
    // reduced basis: monic, auto-reduced, sorted by decreasing leading monomial
    const std::vector<Polynomial>& polys() const { return polys_; }
    bool contains_one() const;

private:
    IdealPresentation source_;
    std::vector<Polynomial> polys_;
};

GroebnerBasis buchberger(const IdealPresentation& ideal, const GBLimits& limits = {});

// full normal form: no term of the result is divisible by a basis leading term
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

bool ideal_member(const Polynomial& f, const GroebnerBasis& gb);
bool ideal_member(const Polynomial& f, const IdealPresentation& ideal,
                  const GBLimits& limits = {});

// f in sqrt(I), decided by 1 in I + (1 - t f) in the ring extended by t
bool radical_member(const Polynomial& f, const GroebnerBasis& gb, const GBLimits& limits = {});
bool radical_member(const Polynomial& f, const IdealPresentation& ideal,
                    const GBLimits& limits = {});

bool equal_radical(const IdealPresentation& lhs, const IdealPresentation& rhs,
                   const GBLimits& limits = {});

// number of variables minus the combinatorial dimension of the leading term
// ideal; exhaustive over variable subsets, so the ring is capped at 20 variables
int ideal_height(const IdealPresentation& ideal, const GBLimits& limits = {});
int ideal_height(const GroebnerBasis& gb);

} // namespace minorkit
