#ifndef ADMIS_NUMERIC_HPP
#define ADMIS_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace admis {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/* a^e mod m, e >= 0, m >= 2 */
inline Int powmod(const Int& a, const Int& e, const Int& m) {
    Int r;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int int_pow(const Int& a, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

inline Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

inline Int mod_inverse(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        return Int(0); // caller checks; 0 is never a valid inverse
    return r;
}

/* multiplicity of prime p in n (n != 0) */
inline int valuation(Int n, const Int& p) {
    int v = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        n /= p;
        ++v;
    }
    return v;
}

inline long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

inline std::vector<long> divisors_of(long n) {
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

/* order of a in (Z/m)^*, gcd(a, m) = 1 */
inline long multiplicative_order(const Int& a, const Int& m) {
    Int x = mod_floor(a, m);
    Int acc = x;
    long ord = 1;
    while (acc != 1) {
        acc = mod_floor(acc * x, m);
        ++ord;
    }
    return ord;
}

/* deterministic xorshift64*, used where reproducible pseudo-random choices
 * are needed (equal-degree splitting) */
class DetRng {
  public:
    explicit DetRng(std::uint64_t seed) : state_(seed ? seed : 0x9E3779B97F4A7C15ull) {}

    std::uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1Dull;
    }

    /* uniform-ish value in [0, bound), bound >= 1 */
    Int next_below(const Int& bound) {
        Int acc = 0;
        Int b = bound;
        while (b > 0) {
            acc = (acc << 32) + static_cast<unsigned long>(next() & 0xFFFFFFFFull);
            b >>= 32;
        }
        return mod_floor(acc, bound);
    }

  private:
    std::uint64_t state_;
};

} // namespace admis

#endif
