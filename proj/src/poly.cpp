#include "admis/poly.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace admis {

RatPoly to_rat_poly(const IntPoly& f) {
    std::vector<Rat> c(f.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = Rat(f.coeffs()[i]);
    return RatPoly(std::move(c));
}

Int content(const IntPoly& f) {
    Int g(0);
    for (const auto& a : f.coeffs()) g = int_gcd(g, a);
    return g;
}

IntPoly primitive_part(const IntPoly& f) {
    if (f.is_zero()) return f;
    Int g = content(f);
    if (f.lc() < 0) g = -g;
    std::vector<Int> c(f.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = f.coeffs()[i] / g;
    return IntPoly(std::move(c));
}

IntPoly primitive_part(const RatPoly& f) {
    if (f.is_zero()) return IntPoly();
    Int den(1);
    for (const auto& a : f.coeffs()) den = int_lcm(den, a.get_den());
    std::vector<Int> c(f.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) {
        Rat v = f.coeffs()[i] * Rat(den);
        c[i] = v.get_num();
    }
    return primitive_part(IntPoly(std::move(c)));
}

RatPoly rat_gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly f = a, g = b;
    while (!g.is_zero()) {
        RatPoly r = f.divmod(g).second;
        f = g;
        g = r;
    }
    if (f.is_zero()) return f;
    return f.scaled(Rat(1) / f.lc());
}

IntPoly int_gcd_poly(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.is_zero() ? b : primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    RatPoly g = rat_gcd(to_rat_poly(a), to_rat_poly(b));
    IntPoly pp = primitive_part(g);
    // gcd of contents carries over
    Int c = int_gcd(content(a), content(b));
    return pp.scaled(c);
}

/* extended Euclid over Q: returns (s, t) with s*a + t*b = g, g monic gcd */
std::pair<RatPoly, RatPoly> rat_xgcd(const RatPoly& a, const RatPoly& b, RatPoly& g) {
    RatPoly r0 = a, r1 = b;
    RatPoly s0 = RatPoly::constant(Rat(1)), s1;
    RatPoly t0, t1 = RatPoly::constant(Rat(1));
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divmod(r1);
        r0 = r1;
        r1 = r2;
        RatPoly s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
        RatPoly t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    g = r0;
    if (!g.is_zero()) {
        Rat inv = Rat(1) / g.lc();
        g = g.scaled(inv);
        s0 = s0.scaled(inv);
        t0 = t0.scaled(inv);
    }
    return {s0, t0};
}

Rat resultant(const RatPoly& f, const RatPoly& g) {
    if (f.is_zero() || g.is_zero()) return Rat(0);
    if (g.degree() == 0) {
        Rat acc(1);
        for (int i = 0; i < f.degree(); ++i) acc *= g.lc();
        return acc;
    }
    if (f.degree() == 0) {
        Rat acc(1);
        for (int i = 0; i < g.degree(); ++i) acc *= f.lc();
        return acc;
    }
    RatPoly r = f.divmod(g).second;
    if (r.is_zero()) return Rat(0);
    // Res(f, g) = (-1)^{df*dg} lc(g)^{df - dr} Res(g, r)
    Rat acc = resultant(g, r);
    for (int i = 0; i < f.degree() - r.degree(); ++i) acc *= g.lc();
    if ((static_cast<long>(f.degree()) * g.degree()) % 2 != 0) acc = -acc;
    return acc;
}

Int discriminant(const IntPoly& f) {
    if (f.degree() < 1) throw Error(ErrorCode::ZeroDivision, "discriminant needs degree >= 1");
    Rat res = resultant(to_rat_poly(f), to_rat_poly(f.derivative()));
    long n = f.degree();
    if (((n * (n - 1)) / 2) % 2 != 0) res = -res;
    res /= Rat(f.lc());
    return res.get_num(); // denominator is 1 for integer f
}

IntPoly cyclotomic_poly(long n) {
    static std::map<long, IntPoly> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    IntPoly result;
    if (n == 1) {
        result = IntPoly({Int(-1), Int(1)});
    } else {
        // (x^n - 1) / prod_{d | n, d < n} Phi_d
        std::vector<Int> c(static_cast<size_t>(n) + 1, Int(0));
        c[0] = -1;
        c[static_cast<size_t>(n)] = 1;
        IntPoly num{std::move(c)};
        for (long d : divisors_of(n)) {
            if (d == n) continue;
            auto [q, r] = num.divmod(cyclotomic_poly(d));
            if (!r.is_zero()) throw Error(ErrorCode::SelfCheckFailed, "cyclotomic division not exact");
            num = q;
        }
        result = num;
    }
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(n, result);
    return result;
}

IntPoly shift_poly(const IntPoly& f, const Int& a) {
    return f.compose(IntPoly({a, Int(1)}));
}

template <class T>
static std::string generic_poly_str(const Poly<T>& f, const std::string& var) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        T a = f.coeff(i);
        if (a == 0) continue;
        bool neg = a < 0;
        T mag = neg ? T(-a) : a;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (i == 0 || mag != 1) os << mag;
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

template <>
std::string Poly<Int>::str(const std::string& var) const {
    return generic_poly_str(*this, var);
}

template <>
std::string Poly<Rat>::str(const std::string& var) const {
    return generic_poly_str(*this, var);
}

std::string int_poly_str(const IntPoly& f, const std::string& var) { return f.str(var); }

} // namespace admis
