#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "minorkit/field.hpp"

namespace minorkit {

enum class MonomialOrder { degrevlex, lex };

std::string order_name(MonomialOrder o);
std::optional<MonomialOrder> order_from_name(const std::string& s);

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Immutable: named variables in a fixed order, a base field, a monomial
// order. Polynomials hold a shared pointer; rings compare by content.
class Ring {
  public:
    static RingPtr make(std::vector<std::string> vars, Field f,
                        MonomialOrder o = MonomialOrder::degrevlex);

    size_t nvars() const { return vars_.size(); }
    const std::string& var(size_t i) const { return vars_[i]; }
    const std::vector<std::string>& vars() const { return vars_; }
    std::optional<size_t> var_index(const std::string& name) const;
    const Field& field() const { return field_; }
    MonomialOrder order() const { return order_; }

    bool same(const Ring& o) const {
        return vars_ == o.vars_ && field_ == o.field_ && order_ == o.order_;
    }

    RingPtr with_order(MonomialOrder o) const;
    // Same field and order with extra variables appended.
    RingPtr extended(const std::vector<std::string>& more) const;

  private:
    Ring(std::vector<std::string> vars, Field f, MonomialOrder o);
    std::vector<std::string> vars_;
    Field field_;
    MonomialOrder order_;
    std::map<std::string, size_t> index_;
};

inline void check_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a.get() == b.get()) return;
    if (!a || !b || !a->same(*b)) fail(ErrorKind::ring_mismatch, "operands from different rings");
}

// Exponent vector (one slot per ring variable) with cached total degree.
class Monomial {
  public:
    explicit Monomial(size_t nvars) : e_(nvars, 0), deg_(0) {}
    static Monomial variable(size_t nvars, size_t i, uint16_t k = 1);

    uint32_t degree() const { return deg_; }
    size_t size() const { return e_.size(); }
    uint16_t operator[](size_t i) const { return e_[i]; }
    bool is_one() const { return deg_ == 0; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;      // this | o
    Monomial divide(const Monomial& o) const;   // this / o, o must divide
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime(const Monomial& o) const;
    uint64_t support_mask() const; // nvars <= 64 only where used

    bool operator==(const Monomial&) const = default;

  private:
    std::vector<uint16_t> e_;
    uint32_t deg_;
};

// -1 / 0 / +1 with a < b meaning a is the smaller monomial.
int mono_cmp(const Monomial& a, const Monomial& b, MonomialOrder o);

} // namespace minorkit
