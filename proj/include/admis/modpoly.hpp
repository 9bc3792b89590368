#ifndef ADMIS_MODPOLY_HPP
#define ADMIS_MODPOLY_HPP

#include "admis/poly.hpp"

#include <utility>
#include <vector>

namespace admis {

/* Dense univariate polynomial over Z/m, ascending coefficients reduced to
 * [0, m). Ring arithmetic works for any modulus m >= 2; the factorization
 * entry point requires m prime. */
class ModPoly {
  public:
    ModPoly() : m_(2) {}
    explicit ModPoly(Int modulus) : m_(std::move(modulus)) {}
    ModPoly(std::vector<Int> coeffs, Int modulus);
    ModPoly(const IntPoly& f, Int modulus);

    static ModPoly constant(const Int& v, const Int& m) { return ModPoly({v}, m); }
    static ModPoly x_power(int k, const Int& m);

    const Int& modulus() const { return m_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& lc() const { return c_.back(); }
    Int coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Int(0);
        return c_[static_cast<size_t>(i)];
    }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    bool operator==(const ModPoly& o) const { return m_ == o.m_ && c_ == o.c_; }
    bool operator!=(const ModPoly& o) const { return !(*this == o); }
    bool operator<(const ModPoly& o) const; // canonical order: degree, then coeffs

    ModPoly operator+(const ModPoly& o) const;
    ModPoly operator-(const ModPoly& o) const;
    ModPoly operator*(const ModPoly& o) const;
    ModPoly scaled(const Int& s) const;

    /* requires invertible leading coefficient of the divisor */
    std::pair<ModPoly, ModPoly> divmod(const ModPoly& d) const;
    ModPoly monic() const;
    ModPoly derivative() const;
    Int eval(const Int& x) const;

    /* lift to Z[x] with coefficients in [0, m) */
    IntPoly lift() const;
    /* lift with symmetric representatives in (-m/2, m/2] */
    IntPoly lift_symmetric() const;

  private:
    void reduce();

    Int m_;
    std::vector<Int> c_;
};

ModPoly mod_gcd(const ModPoly& a, const ModPoly& b); // monic gcd, prime modulus
/* base^e mod f (prime or composite modulus; needs monic f) */
ModPoly mod_powmod(const ModPoly& base, const Int& e, const ModPoly& f);

struct ModFactorization {
    Int unit; // scalar in [0, p)
    std::vector<std::pair<ModPoly, int>> factors; // monic irreducible, canonical order
};

/* Complete factorization over F_p: squarefree decomposition, then
 * distinct-degree and equal-degree (Cantor-Zassenhaus) splitting. The
 * equal-degree stage draws trial elements from a generator seeded per call,
 * so identical inputs give identical output order. */
ModFactorization factor_mod_p(const ModPoly& g);

} // namespace admis

#endif
