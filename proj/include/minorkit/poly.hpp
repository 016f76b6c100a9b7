#pragma once

#include <string>
#include <vector>

#include "minorkit/ring.hpp"

namespace minorkit {

struct Term {
    FieldElem c;
    Monomial m;
};

// Sparse polynomial: terms with nonzero coefficients, sorted strictly
// descending in the ring's monomial order. Immutable by convention.
class Polynomial {
  public:
    static Polynomial zero(RingPtr r) { return Polynomial(std::move(r), {}); }
    static Polynomial constant(RingPtr r, FieldElem c);
    static Polynomial variable(RingPtr r, size_t i);
    static Polynomial term(RingPtr r, FieldElem c, Monomial m);
    // Any term list: sorts, merges equal monomials, drops zeros.
    static Polynomial from_terms(RingPtr r, std::vector<Term> ts);

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    size_t nterms() const { return terms_.size(); }
    const Term& term_at(size_t i) const { return terms_[i]; }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading() const;
    const Monomial& lm() const { return leading().m; }
    const FieldElem& lc() const { return leading().c; }

    uint32_t degree() const; // 0 for the zero polynomial
    bool is_constant() const;
    bool is_homogeneous() const;
    // Homogeneous of degree 1, or zero.
    bool is_linear_form() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const FieldElem& c) const;
    Polynomial times_term(const FieldElem& c, const Monomial& m) const;
    Polynomial pow(unsigned e) const;
    Polynomial monic() const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Image in a ring that contains this one; varmap[i] is the index in the
    // target of this ring's variable i.
    Polynomial map_ring(const RingPtr& target, const std::vector<size_t>& varmap) const;
    // Simultaneous substitution var i -> images[i]; images live in any single
    // ring over the same field.
    Polynomial substitute(const std::vector<Polynomial>& images) const;
    // Same, but every image must be a linear form.
    Polynomial substitute_linear(const std::vector<Polynomial>& images) const;
    FieldElem evaluate(const std::vector<FieldElem>& point) const;

    // Coefficient of variable i when this is a linear form.
    FieldElem linear_coeff(size_t i) const;

    std::string str() const;

  private:
    Polynomial(RingPtr r, std::vector<Term> ts) : ring_(std::move(r)), terms_(std::move(ts)) {}
    RingPtr ring_;
    std::vector<Term> terms_;
};

} // namespace minorkit
