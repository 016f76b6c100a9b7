#include "minorkit/field.hpp"

namespace minorkit {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

uint64_t invmod(uint64_t a, uint64_t p) {
    // extended euclid; a nonzero mod p, p prime
    int64_t t = 0, nt = 1;
    int64_t r = static_cast<int64_t>(p), nr = static_cast<int64_t>(a % p);
    while (nr != 0) {
        int64_t q = r / nr;
        int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) fail(ErrorKind::degenerate_input, "not invertible mod p");
    if (t < 0) t += static_cast<int64_t>(p);
    return static_cast<uint64_t>(t);
}

uint64_t mod_of_mpz(const mpz_class& z, uint64_t p) {
    mpz_class m = z % static_cast<unsigned long>(p);
    if (m < 0) m += static_cast<unsigned long>(p);
    return m.get_ui();
}

} // namespace

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Field Field::prime(uint64_t p) {
    if (p >= (1ull << 62)) fail(ErrorKind::degenerate_input, "characteristic too large");
    if (!is_prime_u64(p)) fail(ErrorKind::degenerate_input, std::to_string(p) + " is not prime");
    return Field{p};
}

FieldElem FieldElem::from_long(const Field& f, long n) {
    if (f.is_rational()) return FieldElem(0, mpq_class(n));
    int64_t m = n % static_cast<int64_t>(f.p);
    if (m < 0) m += static_cast<int64_t>(f.p);
    return FieldElem(f.p, static_cast<uint64_t>(m));
}

FieldElem FieldElem::from_fraction(const Field& f, const mpz_class& num, const mpz_class& den) {
    if (den == 0) fail(ErrorKind::degenerate_input, "zero denominator");
    if (f.is_rational()) {
        mpq_class q(num, den);
        q.canonicalize();
        return FieldElem(0, std::move(q));
    }
    uint64_t d = mod_of_mpz(den, f.p);
    if (d == 0) fail(ErrorKind::degenerate_input, "denominator vanishes mod p");
    return FieldElem(f.p, mulmod(mod_of_mpz(num, f.p), invmod(d, f.p), f.p));
}

FieldElem FieldElem::from_mpq(const Field& f, const mpq_class& q) {
    return from_fraction(f, q.get_num(), q.get_den());
}

bool FieldElem::is_zero() const {
    return p_ == 0 ? rat() == 0 : residue() == 0;
}

bool FieldElem::is_one() const {
    return p_ == 0 ? rat() == 1 : residue() == 1 % p_;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    check_same(o);
    if (p_ == 0) return FieldElem(0, mpq_class(rat() + o.rat()));
    uint64_t s = residue() + o.residue();
    if (s >= p_) s -= p_;
    return FieldElem(p_, s);
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    check_same(o);
    if (p_ == 0) return FieldElem(0, mpq_class(rat() - o.rat()));
    uint64_t s = residue() + p_ - o.residue();
    if (s >= p_) s -= p_;
    return FieldElem(p_, s);
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    check_same(o);
    if (p_ == 0) return FieldElem(0, mpq_class(rat() * o.rat()));
    return FieldElem(p_, mulmod(residue(), o.residue(), p_));
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inv(); }

FieldElem FieldElem::operator-() const {
    if (p_ == 0) return FieldElem(0, mpq_class(-rat()));
    return FieldElem(p_, residue() == 0 ? 0 : p_ - residue());
}

FieldElem FieldElem::inv() const {
    if (is_zero()) fail(ErrorKind::degenerate_input, "division by zero");
    if (p_ == 0) return FieldElem(0, mpq_class(1 / rat()));
    return FieldElem(p_, invmod(residue(), p_));
}

FieldElem FieldElem::pow(unsigned long e) const {
    if (p_ != 0) return FieldElem(p_, powmod(residue(), e, p_));
    mpq_class r(1);
    mpq_class b = rat();
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return FieldElem(0, std::move(r));
}

bool FieldElem::operator==(const FieldElem& o) const {
    if (p_ != o.p_) return false;
    return p_ == 0 ? rat() == o.rat() : residue() == o.residue();
}

int FieldElem::cmp(const FieldElem& o) const {
    check_same(o);
    if (p_ == 0) return ::cmp(rat(), o.rat());
    return residue() < o.residue() ? -1 : residue() > o.residue() ? 1 : 0;
}

std::string FieldElem::str() const {
    if (p_ == 0) return rat().get_str();
    return std::to_string(residue());
}

} // namespace minorkit
