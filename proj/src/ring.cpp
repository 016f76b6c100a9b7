#include "minorkit/ring.hpp"

#include <algorithm>
#include <set>

namespace minorkit {

std::string order_name(MonomialOrder o) {
    return o == MonomialOrder::degrevlex ? "degrevlex" : "lex";
}

std::optional<MonomialOrder> order_from_name(const std::string& s) {
    if (s == "degrevlex") return MonomialOrder::degrevlex;
    if (s == "lex") return MonomialOrder::lex;
    return std::nullopt;
}

Ring::Ring(std::vector<std::string> vars, Field f, MonomialOrder o)
    : vars_(std::move(vars)), field_(f), order_(o) {
    for (size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i].empty()) fail(ErrorKind::degenerate_input, "empty variable name");
        if (!index_.emplace(vars_[i], i).second)
            fail(ErrorKind::degenerate_input, "duplicate variable " + vars_[i]);
    }
}

RingPtr Ring::make(std::vector<std::string> vars, Field f, MonomialOrder o) {
    return RingPtr(new Ring(std::move(vars), f, o));
}

std::optional<size_t> Ring::var_index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

RingPtr Ring::with_order(MonomialOrder o) const {
    if (o == order_) return RingPtr(new Ring(*this));
    return make(vars_, field_, o);
}

RingPtr Ring::extended(const std::vector<std::string>& more) const {
    std::vector<std::string> vars = vars_;
    vars.insert(vars.end(), more.begin(), more.end());
    return make(std::move(vars), field_, order_);
}

Monomial Monomial::variable(size_t nvars, size_t i, uint16_t k) {
    Monomial m(nvars);
    m.e_[i] = k;
    m.deg_ = k;
    return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = static_cast<uint16_t>(r.e_[i] + o.e_[i]);
    r.deg_ = deg_ + o.deg_;
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (deg_ > o.deg_) return false;
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::divide(const Monomial& o) const {
    Monomial r = *this;
    for (size_t i = 0; i < e_.size(); ++i) {
        if (o.e_[i] > r.e_[i]) fail(ErrorKind::internal, "monomial division underflow");
        r.e_[i] = static_cast<uint16_t>(r.e_[i] - o.e_[i]);
    }
    r.deg_ = deg_ - o.deg_;
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    r.deg_ = 0;
    for (size_t i = 0; i < r.e_.size(); ++i) {
        r.e_[i] = std::max(a.e_[i], b.e_[i]);
        r.deg_ += r.e_[i];
    }
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] && o.e_[i]) return false;
    return true;
}

uint64_t Monomial::support_mask() const {
    uint64_t m = 0;
    for (size_t i = 0; i < e_.size() && i < 64; ++i)
        if (e_[i]) m |= (1ull << i);
    return m;
}

int mono_cmp(const Monomial& a, const Monomial& b, MonomialOrder o) {
    if (o == MonomialOrder::lex) {
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        }
        return 0;
    }
    // degrevlex: higher total degree wins; ties scan from the last variable,
    // smaller exponent there means larger monomial.
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

} // namespace minorkit
