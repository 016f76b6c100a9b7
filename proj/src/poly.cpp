#include "minorkit/poly.hpp"

#include <algorithm>

namespace minorkit {

Polynomial Polynomial::constant(RingPtr r, FieldElem c) {
    if (c.is_zero()) return zero(std::move(r));
    Monomial one(r->nvars());
    std::vector<Term> ts;
    ts.push_back(Term{std::move(c), std::move(one)});
    return Polynomial(std::move(r), std::move(ts));
}

Polynomial Polynomial::variable(RingPtr r, size_t i) {
    if (i >= r->nvars()) fail(ErrorKind::internal, "variable index out of range");
    Monomial m = Monomial::variable(r->nvars(), i);
    std::vector<Term> ts;
    ts.push_back(Term{FieldElem::one(r->field()), std::move(m)});
    return Polynomial(std::move(r), std::move(ts));
}

Polynomial Polynomial::term(RingPtr r, FieldElem c, Monomial m) {
    if (c.is_zero()) return zero(std::move(r));
    std::vector<Term> ts;
    ts.push_back(Term{std::move(c), std::move(m)});
    return Polynomial(std::move(r), std::move(ts));
}

Polynomial Polynomial::from_terms(RingPtr r, std::vector<Term> ts) {
    MonomialOrder o = r->order();
    std::sort(ts.begin(), ts.end(),
              [o](const Term& a, const Term& b) { return mono_cmp(a.m, b.m, o) > 0; });
    std::vector<Term> out;
    out.reserve(ts.size());
    for (auto& t : ts) {
        if (t.m.size() != r->nvars()) fail(ErrorKind::internal, "term arity mismatch");
        if (!out.empty() && out.back().m == t.m) {
            out.back().c = out.back().c + t.c;
            if (out.back().c.is_zero()) out.pop_back();
        } else if (!t.c.is_zero()) {
            out.push_back(std::move(t));
        }
    }
    return Polynomial(std::move(r), std::move(out));
}

const Term& Polynomial::leading() const {
    if (terms_.empty()) fail(ErrorKind::internal, "leading term of zero polynomial");
    return terms_.front();
}

uint32_t Polynomial::degree() const {
    uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.m.degree());
    return d;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
}

bool Polynomial::is_homogeneous() const {
    for (const auto& t : terms_)
        if (t.m.degree() != terms_[0].m.degree()) return false;
    return true;
}

bool Polynomial::is_linear_form() const {
    for (const auto& t : terms_)
        if (t.m.degree() != 1) return false;
    return true;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_ring(ring_, o.ring_);
    MonomialOrder ord = ring_->order();
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = mono_cmp(terms_[i].m, o.terms_[j].m, ord);
        if (c > 0) {
            out.push_back(terms_[i++]);
        } else if (c < 0) {
            out.push_back(o.terms_[j++]);
        } else {
            FieldElem s = terms_[i].c + o.terms_[j].c;
            if (!s.is_zero()) out.push_back(Term{std::move(s), terms_[i].m});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-() const {
    std::vector<Term> out = terms_;
    for (auto& t : out) t.c = -t.c;
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::scaled(const FieldElem& c) const {
    if (c.is_zero()) return zero(ring_);
    std::vector<Term> out = terms_;
    for (auto& t : out) t.c = t.c * c;
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::times_term(const FieldElem& c, const Monomial& m) const {
    if (c.is_zero()) return zero(ring_);
    std::vector<Term> out = terms_;
    for (auto& t : out) {
        t.c = t.c * c;
        t.m = t.m * m;
    }
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(ring_, o.ring_);
    if (is_zero() || o.is_zero()) return zero(ring_);
    std::vector<Term> out;
    out.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) out.push_back(Term{a.c * b.c, a.m * b.m});
    return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = constant(ring_, FieldElem::one(ring_->field()));
    Polynomial b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(lc().inv());
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!ring_->same(*o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].c == o.terms_[i].c) || !(terms_[i].m == o.terms_[i].m)) return false;
    return true;
}

Polynomial Polynomial::map_ring(const RingPtr& target, const std::vector<size_t>& varmap) const {
    if (varmap.size() != ring_->nvars()) fail(ErrorKind::internal, "varmap arity mismatch");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m(target->nvars());
        for (size_t i = 0; i < varmap.size(); ++i) {
            for (uint16_t k = 0; k < t.m[i]; ++k) m = m * Monomial::variable(target->nvars(), varmap[i]);
        }
        out.push_back(Term{t.c, std::move(m)});
    }
    return from_terms(target, std::move(out));
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    if (images.size() != ring_->nvars()) fail(ErrorKind::internal, "substitution arity mismatch");
    RingPtr target = images.empty() ? ring_ : images[0].ring();
    for (const auto& g : images) check_same_ring(target, g.ring());
    Polynomial acc = Polynomial::zero(target);
    for (const auto& t : terms_) {
        Polynomial prod = Polynomial::constant(target, t.c);
        for (size_t i = 0; i < images.size(); ++i) {
            if (t.m[i]) prod = prod * images[i].pow(t.m[i]);
        }
        acc = acc + prod;
    }
    return acc;
}

Polynomial Polynomial::substitute_linear(const std::vector<Polynomial>& images) const {
    for (const auto& g : images)
        if (!g.is_linear_form())
            fail(ErrorKind::nonlinear_entry, "substitution image is not a linear form");
    return substitute(images);
}

FieldElem Polynomial::evaluate(const std::vector<FieldElem>& point) const {
    if (point.size() != ring_->nvars()) fail(ErrorKind::internal, "evaluation arity mismatch");
    FieldElem acc = FieldElem::zero(ring_->field());
    for (const auto& t : terms_) {
        FieldElem v = t.c;
        for (size_t i = 0; i < point.size(); ++i)
            if (t.m[i]) v = v * point[i].pow(t.m[i]);
        acc = acc + v;
    }
    return acc;
}

FieldElem Polynomial::linear_coeff(size_t i) const {
    if (!is_linear_form()) fail(ErrorKind::nonlinear_entry, "not a linear form");
    for (const auto& t : terms_)
        if (t.m[i] == 1) return t.c;
    return FieldElem::zero(ring_->field());
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
        std::string c = t.c.str();
        bool neg = !c.empty() && c[0] == '-';
        std::string mag = neg ? c.substr(1) : c;
        if (first) {
            if (neg) s += "-";
            first = false;
        } else {
            s += neg ? " - " : " + ";
        }
        std::string mono;
        for (size_t i = 0; i < t.m.size(); ++i) {
            if (!t.m[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->var(i);
            if (t.m[i] > 1) mono += "^" + std::to_string(t.m[i]);
        }
        if (mono.empty()) {
            s += mag;
        } else {
            if (mag != "1") s += mag + "*";
            s += mono;
        }
    }
    return s;
}

} // namespace minorkit
