#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "rilab/util.hpp"

namespace rilab {

// Prime field F_p, p an odd prime < 2^31. Elements are canonical
// representatives 0..p-1 stored in uint32_t.
class Fp {
  public:
    using Elem = uint32_t;
    static constexpr bool is_prime_field = true;

    Fp() : p_(32003) {}
    explicit Fp(int64_t p) : p_(static_cast<uint32_t>(p)) {
        if (p < 2 || p >= (int64_t(1) << 31)) throw InputError("prime out of range: " + std::to_string(p));
        if (!is_prime(p)) throw InputError("modulus is not prime: " + std::to_string(p));
    }

    int64_t characteristic() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }

    Elem from_int(int64_t n) const {
        int64_t r = n % int64_t(p_);
        if (r < 0) r += p_;
        return static_cast<Elem>(r);
    }
    Elem from_mpq(const mpq_class& q) const {
        mpz_class num = q.get_num(), den = q.get_den();
        Elem n = from_mpz(num), d = from_mpz(den);
        if (d == 0) throw DomainError("denominator vanishes in F_" + std::to_string(p_));
        return mul(n, inv(d));
    }

    Elem add(Elem a, Elem b) const {
        uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const { return static_cast<Elem>(uint64_t(a) * b % p_); }
    Elem inv(Elem a) const {
        if (a == 0) throw DomainError("division by zero in F_" + std::to_string(p_));
        // extended Euclid
        int64_t t = 0, nt = 1, r = p_, nr = a;
        while (nr != 0) {
            int64_t q = r / nr;
            t -= q * nt; std::swap(t, nt);
            r -= q * nr; std::swap(r, nr);
        }
        if (t < 0) t += p_;
        return static_cast<Elem>(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem random(Rng& rng) const { return static_cast<Elem>(rng.below(p_)); }
    Elem random_nonzero(Rng& rng) const { return static_cast<Elem>(1 + rng.below(p_ - 1)); }

    std::string to_string(Elem a) const { return std::to_string(a); }
    bool equal(Elem a, Elem b) const { return a == b; }

    bool operator==(const Fp& o) const { return p_ == o.p_; }

  private:
    uint32_t p_;

    Elem from_mpz(const mpz_class& z) const {
        mpz_class r = z % p_;
        if (r < 0) r += p_;
        return static_cast<Elem>(r.get_ui());
    }
    static bool is_prime(int64_t n) {
        if (n < 2) return false;
        for (int64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }
};

// The rationals, exact via GMP. Used for small symbolic identities; the
// randomized experiments run over a large prime field.
class QQ {
  public:
    using Elem = mpq_class;
    static constexpr bool is_prime_field = false;

    int64_t characteristic() const { return 0; }

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    bool is_zero(const Elem& a) const { return a == 0; }

    Elem from_int(int64_t n) const { return Elem(static_cast<long>(n)); }
    Elem from_mpq(const mpq_class& q) const { return q; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw DomainError("division by zero in QQ");
        return Elem(1) / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return a / inv_guard(b); }

    Elem random(Rng& rng) const { return from_int(int64_t(rng.below(2003)) - 1001); }
    Elem random_nonzero(Rng& rng) const {
        Elem e = random(rng);
        return e == 0 ? Elem(1) : e;
    }

    std::string to_string(const Elem& a) const { return a.get_str(); }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }

    bool operator==(const QQ&) const { return true; }

  private:
    Elem inv_guard(const Elem& b) const {
        if (b == 0) throw DomainError("division by zero in QQ");
        return b;
    }
};

}  // namespace rilab
