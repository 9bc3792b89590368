#ifndef ADMIS_POLY_HPP
#define ADMIS_POLY_HPP

#include "admis/errors.hpp"
#include "admis/numeric.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace admis {

/* Dense univariate polynomial with exact coefficients, ascending order.
 * Canonical form: trailing (leading-coefficient) zeros stripped, the zero
 * polynomial is the empty vector. Values are immutable in spirit: every
 * operation returns a fresh polynomial. */
template <class T>
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }
    static Poly x_power(int k, const T& scale = T(1)) {
        std::vector<T> c(static_cast<size_t>(k) + 1, T(0));
        c.back() = scale;
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const std::vector<T>& coeffs() const { return c_; }
    const T& lc() const { return c_.back(); }
    T coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return T(0);
        return c_[static_cast<size_t>(i)];
    }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

    Poly operator-() const {
        std::vector<T> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
        return Poly(std::move(r));
    }

    Poly operator+(const Poly& o) const {
        std::vector<T> r(std::max(c_.size(), o.c_.size()), T(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return Poly(std::move(r));
    }

    Poly operator-(const Poly& o) const {
        std::vector<T> r(std::max(c_.size(), o.c_.size()), T(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
        return Poly(std::move(r));
    }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<T> r(c_.size() + o.c_.size() - 1, T(0));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return Poly(std::move(r));
    }

    Poly scaled(const T& s) const {
        if (s == 0) return Poly();
        std::vector<T> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
        return Poly(std::move(r));
    }

    /* Long division; requires the divisor's leading coefficient to divide
     * exactly at every step (always true over a field, and for monic or
     * unit-leading divisors over Z). */
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw Error(ErrorCode::ZeroDivision, "polynomial division by zero");
        if (degree() < d.degree()) return {Poly(), *this};
        std::vector<T> rem = c_;
        std::vector<T> quot(static_cast<size_t>(degree() - d.degree()) + 1, T(0));
        const T& dl = d.lc();
        for (int i = degree(); i >= d.degree(); --i) {
            T top = rem[static_cast<size_t>(i)];
            if (top == 0) continue;
            T q = exact_quotient(top, dl);
            quot[static_cast<size_t>(i - d.degree())] = q;
            for (int j = 0; j <= d.degree(); ++j)
                rem[static_cast<size_t>(i - d.degree() + j)] -= q * d.c_[static_cast<size_t>(j)];
        }
        return {Poly(std::move(quot)), Poly(std::move(rem))};
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<T> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * T(static_cast<long>(i));
        return Poly(std::move(r));
    }

    T eval(const T& x) const {
        T acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /* this(g(x)), by Horner */
    Poly compose(const Poly& g) const {
        Poly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * g + constant(*it);
        return acc;
    }

    /* x^deg * this(1/x) */
    Poly reversed() const {
        std::vector<T> r(c_.rbegin(), c_.rend());
        return Poly(std::move(r));
    }

    std::string str(const std::string& var = "x") const;

  private:
    static T exact_quotient(const T& a, const T& b);

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<T> c_;
};

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rat>;

template <>
inline Int IntPoly::exact_quotient(const Int& a, const Int& b) {
    if (b == 1) return a;
    if (b == -1) return -a;
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0)
        throw Error(ErrorCode::NotMonic, "integer polynomial division needs a unit leading coefficient");
    return q;
}

template <>
inline Rat RatPoly::exact_quotient(const Rat& a, const Rat& b) {
    return a / b;
}

RatPoly to_rat_poly(const IntPoly& f);
/* clears denominators and strips content; result primitive with positive lc */
IntPoly primitive_part(const RatPoly& f);
IntPoly primitive_part(const IntPoly& f);
Int content(const IntPoly& f);

/* monic gcd over Q */
RatPoly rat_gcd(const RatPoly& a, const RatPoly& b);
/* gcd of integer polynomials up to units: primitive, positive leading coeff */
IntPoly int_gcd_poly(const IntPoly& a, const IntPoly& b);

std::pair<RatPoly, RatPoly> rat_xgcd(const RatPoly& a, const RatPoly& b, RatPoly& g);

Rat resultant(const RatPoly& f, const RatPoly& g);
Int discriminant(const IntPoly& f); // f monic

/* n-th cyclotomic polynomial, n >= 1 (memoized) */
IntPoly cyclotomic_poly(long n);

/* f(x + a) */
IntPoly shift_poly(const IntPoly& f, const Int& a);

std::string int_poly_str(const IntPoly& f, const std::string& var = "x");

} // namespace admis

#endif
