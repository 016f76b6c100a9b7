#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "minorkit/errors.hpp"

namespace minorkit {

// Coefficient domain: the rationals (p == 0) or the prime field Z/p.
struct Field {
    uint64_t p = 0;

    static Field rationals() { return Field{0}; }
    static Field prime(uint64_t p); // validates primality
    bool is_rational() const { return p == 0; }
    long characteristic() const { return static_cast<long>(p); }
    bool operator==(const Field&) const = default;
    std::string str() const { return p == 0 ? "QQ" : "GF(" + std::to_string(p) + ")"; }
};

bool is_prime_u64(uint64_t n);

// One coefficient. Rationals are kept GMP-canonical (reduced, positive
// denominator); residues are kept in [0, p). All arithmetic is exact.
class FieldElem {
  public:
    FieldElem() : p_(0), v_(mpq_class(0)) {}

    static FieldElem zero(const Field& f) { return from_long(f, 0); }
    static FieldElem one(const Field& f) { return from_long(f, 1); }
    static FieldElem from_long(const Field& f, long n);
    static FieldElem from_fraction(const Field& f, const mpz_class& num, const mpz_class& den);
    static FieldElem from_mpq(const Field& f, const mpq_class& q);

    const Field field() const { return Field{p_}; }
    bool is_zero() const;
    bool is_one() const;

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const; // o must be nonzero
    FieldElem operator-() const;
    FieldElem inv() const;
    FieldElem pow(unsigned long e) const;
    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    // Total order used only for deterministic tie-breaking (eigenvalue sort,
    // term printing); not a field notion.
    int cmp(const FieldElem& o) const;

    const mpq_class& rat() const { return std::get<mpq_class>(v_); }
    uint64_t residue() const { return std::get<uint64_t>(v_); }

    std::string str() const;

  private:
    FieldElem(uint64_t p, mpq_class q) : p_(p), v_(std::move(q)) {}
    FieldElem(uint64_t p, uint64_t r) : p_(p), v_(r) {}
    void check_same(const FieldElem& o) const {
        if (p_ != o.p_) fail(ErrorKind::ring_mismatch, "coefficients from different fields");
    }

    uint64_t p_;
    std::variant<mpq_class, uint64_t> v_;
};

} // namespace minorkit
