#include "admis/modpoly.hpp"

#include <algorithm>

namespace admis {

ModPoly::ModPoly(std::vector<Int> coeffs, Int modulus) : m_(std::move(modulus)), c_(std::move(coeffs)) {
    if (m_ < 2) throw Error(ErrorCode::CompositeModulus, "modulus must be >= 2");
    reduce();
}

ModPoly::ModPoly(const IntPoly& f, Int modulus) : ModPoly(f.coeffs(), std::move(modulus)) {}

ModPoly ModPoly::x_power(int k, const Int& m) {
    std::vector<Int> c(static_cast<size_t>(k) + 1, Int(0));
    c.back() = 1;
    return ModPoly(std::move(c), m);
}

void ModPoly::reduce() {
    for (auto& a : c_) a = mod_floor(a, m_);
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool ModPoly::operator<(const ModPoly& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    for (int i = degree(); i >= 0; --i) {
        const Int &a = c_[static_cast<size_t>(i)], &b = o.c_[static_cast<size_t>(i)];
        if (a != b) return a < b;
    }
    return false;
}

ModPoly ModPoly::operator+(const ModPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return ModPoly(std::move(r), m_);
}

ModPoly ModPoly::operator-(const ModPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return ModPoly(std::move(r), m_);
}

ModPoly ModPoly::operator*(const ModPoly& o) const {
    if (is_zero() || o.is_zero()) return ModPoly(m_);
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return ModPoly(std::move(r), m_);
}

ModPoly ModPoly::scaled(const Int& s) const {
    std::vector<Int> r(c_);
    for (auto& a : r) a *= s;
    return ModPoly(std::move(r), m_);
}

std::pair<ModPoly, ModPoly> ModPoly::divmod(const ModPoly& d) const {
    if (d.is_zero()) throw Error(ErrorCode::ZeroDivision, "polynomial division by zero");
    if (degree() < d.degree()) return {ModPoly(m_), *this};
    Int linv = mod_inverse(d.lc(), m_);
    if (linv == 0) throw Error(ErrorCode::NotMonic, "divisor leading coefficient not invertible");
    std::vector<Int> rem = c_;
    std::vector<Int> quot(static_cast<size_t>(degree() - d.degree()) + 1, Int(0));
    for (int i = degree(); i >= d.degree(); --i) {
        Int top = mod_floor(rem[static_cast<size_t>(i)], m_);
        if (top == 0) continue;
        Int q = mod_floor(top * linv, m_);
        quot[static_cast<size_t>(i - d.degree())] = q;
        for (int j = 0; j <= d.degree(); ++j)
            rem[static_cast<size_t>(i - d.degree() + j)] -= q * d.c_[static_cast<size_t>(j)];
    }
    return {ModPoly(std::move(quot), m_), ModPoly(std::move(rem), m_)};
}

ModPoly ModPoly::monic() const {
    if (is_zero() || lc() == 1) return *this;
    Int linv = mod_inverse(lc(), m_);
    if (linv == 0) throw Error(ErrorCode::NotMonic, "leading coefficient not invertible");
    return scaled(linv);
}

ModPoly ModPoly::derivative() const {
    if (c_.size() <= 1) return ModPoly(m_);
    std::vector<Int> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return ModPoly(std::move(r), m_);
}

Int ModPoly::eval(const Int& x) const {
    Int acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = mod_floor(acc * x + *it, m_);
    return acc;
}

IntPoly ModPoly::lift() const { return IntPoly(c_); }

IntPoly ModPoly::lift_symmetric() const {
    std::vector<Int> r(c_);
    Int half = m_ / 2;
    for (auto& a : r)
        if (a > half) a -= m_;
    return IntPoly(std::move(r));
}

ModPoly mod_gcd(const ModPoly& a, const ModPoly& b) {
    ModPoly f = a, g = b;
    while (!g.is_zero()) {
        ModPoly r = f.divmod(g.monic()).second;
        f = g;
        g = r;
    }
    return f.is_zero() ? f : f.monic();
}

ModPoly mod_powmod(const ModPoly& base, const Int& e, const ModPoly& f) {
    ModPoly result = ModPoly::constant(1, base.modulus());
    ModPoly b = base.divmod(f).second;
    Int exp = e;
    while (exp > 0) {
        if (mpz_odd_p(exp.get_mpz_t())) result = (result * b).divmod(f).second;
        b = (b * b).divmod(f).second;
        exp >>= 1;
    }
    return result;
}

namespace {

/* toward x^(p^k): repeated Frobenius powering mod u */
ModPoly frobenius_power(const ModPoly& h, const Int& p, const ModPoly& u) {
    return mod_powmod(h, p, u);
}

/* squarefree decomposition over F_p (adapted Yun; handles p-th power parts
 * via the Frobenius a^(1/p) = a on F_p) */
void squarefree_decompose(const ModPoly& g, int mult, std::vector<std::pair<ModPoly, int>>& out) {
    const Int& p = g.modulus();
    ModPoly gp = g.derivative();
    if (gp.is_zero()) {
        // g = v(x^p) = (v affected by Frobenius)(x)^p; over the prime field
        // the coefficients are fixed, so take every p-th coefficient
        long pl = p.get_si();
        std::vector<Int> r;
        for (int i = 0; i <= g.degree(); i += pl) r.push_back(g.coeff(i));
        squarefree_decompose(ModPoly(std::move(r), p), mult * pl, out);
        return;
    }
    ModPoly c = mod_gcd(g, gp);
    ModPoly w = g.divmod(c).first;
    int i = 1;
    while (!w.is_one()) {
        ModPoly y = mod_gcd(w, c);
        ModPoly z = w.divmod(y).first;
        if (z.degree() > 0) out.emplace_back(z.monic(), mult * i);
        w = y;
        c = c.divmod(y).first;
        ++i;
    }
    if (c.degree() > 0) squarefree_decompose(c, mult, out);
}

/* distinct-degree splitting of squarefree monic u: list of (product, degree) */
std::vector<std::pair<ModPoly, int>> distinct_degree_split(ModPoly u) {
    const Int& p = u.modulus();
    std::vector<std::pair<ModPoly, int>> parts;
    ModPoly h = ModPoly::x_power(1, p).divmod(u).second;
    int d = 0;
    while (u.degree() > 0) {
        ++d;
        if (2 * d > u.degree()) {
            parts.emplace_back(u, u.degree());
            break;
        }
        h = frobenius_power(h, p, u);
        ModPoly g = mod_gcd(h - ModPoly::x_power(1, p), u);
        if (g.degree() > 0) {
            parts.emplace_back(g, d);
            u = u.divmod(g).first;
            h = h.divmod(u).second;
        }
    }
    return parts;
}

/* equal-degree splitting (Cantor-Zassenhaus): u = product of distinct monic
 * irreducibles of degree d */
void equal_degree_split(const ModPoly& u, int d, DetRng& rng, std::vector<ModPoly>& out) {
    const Int& p = u.modulus();
    if (u.degree() == d) {
        out.push_back(u.monic());
        return;
    }
    ModPoly splitter(p);
    while (true) {
        // deterministic trial element of degree < deg u
        std::vector<Int> c(static_cast<size_t>(u.degree()), Int(0));
        for (auto& a : c) a = rng.next_below(p);
        ModPoly a(std::move(c), p);
        if (a.degree() < 1) continue;
        ModPoly g = mod_gcd(a, u);
        if (g.degree() > 0 && g.degree() < u.degree()) {
            splitter = g;
            break;
        }
        ModPoly b(p);
        if (p == 2) {
            // trace map over F_{2^d}
            ModPoly t = a;
            b = a;
            for (int i = 1; i < d; ++i) {
                t = (t * t).divmod(u).second;
                b = b + t;
            }
        } else {
            Int e = (int_pow(p, static_cast<unsigned long>(d)) - 1) / 2;
            b = mod_powmod(a, e, u) - ModPoly::constant(1, p);
        }
        g = mod_gcd(b, u);
        if (g.degree() > 0 && g.degree() < u.degree()) {
            splitter = g;
            break;
        }
    }
    equal_degree_split(splitter, d, rng, out);
    equal_degree_split(u.divmod(splitter).first, d, rng, out);
}

} // namespace

ModFactorization factor_mod_p(const ModPoly& g) {
    if (!is_prime(g.modulus()))
        throw Error(ErrorCode::CompositeModulus, "factorization requires a prime modulus");
    if (g.is_zero()) throw Error(ErrorCode::ZeroDivision, "cannot factor the zero polynomial");

    ModFactorization result;
    result.unit = g.lc();
    if (g.degree() == 0) return result;

    DetRng rng(0x9E3779B97F4A7C15ull ^ static_cast<std::uint64_t>(g.degree()));

    std::vector<std::pair<ModPoly, int>> sqfree;
    squarefree_decompose(g.monic(), 1, sqfree);

    for (const auto& [part, mult] : sqfree) {
        for (const auto& [prod, d] : distinct_degree_split(part)) {
            std::vector<ModPoly> irreducibles;
            equal_degree_split(prod, d, rng, irreducibles);
            for (auto& f : irreducibles) result.factors.emplace_back(std::move(f), mult);
        }
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const auto& a, const auto& b) {
                  if (a.first != b.first) return a.first < b.first;
                  return a.second < b.second;
              });

    ModPoly check = ModPoly::constant(result.unit, g.modulus());
    for (const auto& [f, m] : result.factors)
        for (int i = 0; i < m; ++i) check = check * f;
    if (check != g) throw Error(ErrorCode::SelfCheckFailed, "mod-p factorization does not recombine");
    return result;
}

} // namespace admis
