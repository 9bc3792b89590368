#include "admis/factorize.hpp"

#include <algorithm>

namespace admis {

namespace {

constexpr long kSubsetTrialBudget = 1L << 22;

/* exact quotient of integer polynomials (remainder known to vanish) */
IntPoly exact_div(const IntPoly& f, const IntPoly& g) {
    auto [q, r] = to_rat_poly(f).divmod(to_rat_poly(g));
    if (!r.is_zero()) throw Error(ErrorCode::SelfCheckFailed, "expected exact polynomial division");
    std::vector<Int> c(q.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) {
        if (q.coeffs()[i].get_den() != 1)
            throw Error(ErrorCode::SelfCheckFailed, "expected integral quotient");
        c[i] = q.coeffs()[i].get_num();
    }
    return IntPoly(std::move(c));
}

bool canonical_less(const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
}

/* Musser squarefree decomposition of a primitive polynomial over Q */
std::vector<std::pair<IntPoly, int>> squarefree_parts(const IntPoly& f) {
    std::vector<std::pair<IntPoly, int>> out;
    if (f.degree() < 1) return out;
    IntPoly g = int_gcd_poly(f, f.derivative());
    IntPoly w = exact_div(f, g);
    int i = 1;
    while (w.degree() > 0) {
        IntPoly y = int_gcd_poly(w, g);
        IntPoly z = exact_div(w, y);
        if (z.degree() > 0) out.emplace_back(z, i);
        w = y;
        g = exact_div(g, y);
        ++i;
    }
    return out;
}

/* coefficient bound for monic factors (Mignotte-style, deliberately loose) */
Int factor_coeff_bound(const IntPoly& f) {
    Int norm2(0);
    for (const auto& a : f.coeffs()) norm2 += a * a;
    Int root;
    mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
    root += 1;
    return (root << static_cast<unsigned long>(f.degree())) + 1;
}

struct HenselState {
    Int modulus;
    ModPoly g, h, s, t;
};

/* one quadratic Hensel step: from f = g*h, s*g + t*h = 1 (mod m)
 * to the same congruences mod m^2; g, h stay monic */
HenselState hensel_step(const IntPoly& f, const HenselState& st) {
    Int m2 = st.modulus * st.modulus;
    ModPoly F(f, m2);
    ModPoly g(st.g.lift(), m2), h(st.h.lift(), m2);
    ModPoly s(st.s.lift(), m2), t(st.t.lift(), m2);

    ModPoly e = F - g * h;
    auto [q, r] = (s * e).divmod(h);
    ModPoly g1 = g + t * e + q * g;
    ModPoly h1 = h + r;

    ModPoly b = s * g1 + t * h1 - ModPoly::constant(1, m2);
    auto [c, d] = (s * b).divmod(h1);
    ModPoly s1 = s - d;
    ModPoly t1 = t - t * b - c * g1;
    return HenselState{m2, g1, h1, s1, t1};
}

/* lift the monic factorization F = prod(facs) (mod p) to (mod target), where
 * target is a power of p; recursive binary split */
std::vector<IntPoly> hensel_lift(const IntPoly& F, const std::vector<ModPoly>& facs, const Int& p,
                                 const Int& target) {
    if (facs.size() == 1) {
        ModPoly reduced(F, target);
        return {reduced.lift()};
    }
    size_t mid = facs.size() / 2;
    ModPoly g0 = ModPoly::constant(1, p), h0 = ModPoly::constant(1, p);
    for (size_t i = 0; i < mid; ++i) g0 = g0 * facs[i];
    for (size_t i = mid; i < facs.size(); ++i) h0 = h0 * facs[i];
    ModPoly s, t;
    ModPoly g = mod_xgcd(g0, h0, s, t);
    if (!g.is_one())
        throw Error(ErrorCode::SelfCheckFailed, "modular factors not coprime in Hensel lift");

    HenselState st{p, g0, h0, s, t};
    while (st.modulus < target) st = hensel_step(F, st);

    IntPoly G = ModPoly(st.g.lift(), target).lift();
    IntPoly H = ModPoly(st.h.lift(), target).lift();
    std::vector<ModPoly> left(facs.begin(), facs.begin() + static_cast<long>(mid));
    std::vector<ModPoly> right(facs.begin() + static_cast<long>(mid), facs.end());
    std::vector<IntPoly> out = hensel_lift(G, left, p, target);
    std::vector<IntPoly> tail = hensel_lift(H, right, p, target);
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

std::vector<IntPoly> zassenhaus_monic(const IntPoly& F);

/* non-monic squarefree primitive input: factor lc^(n-1) F(x/lc), map back */
std::vector<IntPoly> zassenhaus(const IntPoly& F) {
    if (F.is_monic()) return zassenhaus_monic(F);
    std::vector<IntPoly> monic_factors = zassenhaus_monic(monicize(F));
    std::vector<IntPoly> out;
    for (const auto& G : monic_factors) out.push_back(demonicize_factor(G, F.lc()));
    return out;
}

std::vector<IntPoly> zassenhaus_monic(const IntPoly& F) {
    if (F.degree() <= 1) return {F};

    // prime selection: squarefree reduction, fewest modular factors wins
    struct Candidate {
        Int p;
        std::vector<ModPoly> factors;
    };
    std::vector<Candidate> cands;
    for (Int p(3); cands.size() < 8; mpz_nextprime(p.get_mpz_t(), p.get_mpz_t())) {
        if (p > 10000)
            break; // plenty of squarefree reductions exist below this for our degrees
        ModPoly fp(F, p);
        if (fp.degree() != F.degree()) continue;
        if (mod_gcd(fp, fp.derivative()).degree() != 0) continue;
        ModFactorization mf = factor_mod_p(fp);
        if (mf.factors.size() == 1) return {F}; // irreducible mod p
        Candidate c;
        c.p = p;
        for (auto& [poly, mult] : mf.factors) c.factors.push_back(poly);
        cands.push_back(std::move(c));
    }
    if (cands.empty()) throw Error(ErrorCode::FactorBudgetExceeded, "no usable prime found");
    auto best = std::min_element(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
        if (a.factors.size() != b.factors.size()) return a.factors.size() < b.factors.size();
        return a.p < b.p;
    });

    const Int p = best->p;
    Int bound = factor_coeff_bound(F) * 2 + 1;
    Int target(p);
    while (target < bound) target *= p;

    std::vector<IntPoly> lifted = hensel_lift(F, best->factors, p, target);

    // subset recombination over the lifted factors
    std::vector<IntPoly> out;
    std::vector<size_t> live(lifted.size());
    for (size_t i = 0; i < live.size(); ++i) live[i] = i;
    IntPoly R = F;
    long trials = 0;

    size_t c = 1;
    while (2 * c <= live.size()) {
        std::vector<size_t> pick(c);
        for (size_t i = 0; i < c; ++i) pick[i] = i;
        bool found = false;
        while (true) {
            if (++trials > kSubsetTrialBudget)
                throw Error(ErrorCode::FactorBudgetExceeded, "factor recombination budget exhausted");
            ModPoly prod = ModPoly::constant(1, target);
            for (size_t i : pick) prod = prod * ModPoly(lifted[live[i]], target);
            IntPoly T = prod.lift_symmetric();
            Int t0 = T.coeff(0);
            bool plausible = t0 != 0 && mpz_divisible_p(R.coeff(0).get_mpz_t(), t0.get_mpz_t());
            if (plausible) {
                auto [q, rem] = R.divmod(T);
                if (rem.is_zero()) {
                    out.push_back(T);
                    R = q;
                    std::vector<size_t> next_live;
                    for (size_t i = 0; i < live.size(); ++i)
                        if (std::find(pick.begin(), pick.end(), i) == pick.end())
                            next_live.push_back(live[i]);
                    live = next_live;
                    found = true;
                    break;
                }
            }
            // next c-combination
            long j = static_cast<long>(c) - 1;
            while (j >= 0 && pick[static_cast<size_t>(j)] == live.size() - c + static_cast<size_t>(j)) --j;
            if (j < 0) break;
            ++pick[static_cast<size_t>(j)];
            for (size_t k = static_cast<size_t>(j) + 1; k < c; ++k) pick[k] = pick[k - 1] + 1;
        }
        if (!found) ++c;
    }
    if (R.degree() > 0) out.push_back(R);
    return out;
}

} // namespace

IntPoly QFactorization::product() const {
    RatPoly acc = RatPoly::constant(unit);
    for (const auto& [f, m] : factors) {
        RatPoly rf = to_rat_poly(f);
        for (int i = 0; i < m; ++i) acc = acc * rf;
    }
    std::vector<Int> c(acc.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) {
        if (acc.coeffs()[i].get_den() != 1)
            throw Error(ErrorCode::SelfCheckFailed, "factorization product not integral");
        c[i] = acc.coeffs()[i].get_num();
    }
    return IntPoly(std::move(c));
}

IntPoly monicize(const IntPoly& f) {
    if (f.is_monic()) return f;
    const Int L = f.lc();
    int n = f.degree();
    std::vector<Int> c(static_cast<size_t>(n) + 1);
    c[static_cast<size_t>(n)] = 1;
    Int scale(1); // L^(n-1-i)
    for (int i = n - 1; i >= 0; --i) {
        c[static_cast<size_t>(i)] = f.coeff(i) * scale;
        scale *= L;
    }
    return IntPoly(std::move(c));
}

IntPoly demonicize_factor(const IntPoly& G, const Int& lc) {
    std::vector<Int> gc(G.coeffs().size());
    Int pw(1);
    for (size_t i = 0; i < gc.size(); ++i) {
        gc[i] = G.coeffs()[i] * pw;
        pw *= lc;
    }
    return primitive_part(IntPoly(std::move(gc)));
}

ModPoly mod_xgcd(const ModPoly& a, const ModPoly& b, ModPoly& s, ModPoly& t) {
    const Int& m = a.modulus();
    ModPoly r0 = a, r1 = b;
    ModPoly s0 = ModPoly::constant(1, m), s1(m);
    ModPoly t0(m), t1 = ModPoly::constant(1, m);
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divmod(r1);
        r0 = r1;
        r1 = r2;
        ModPoly s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
        ModPoly t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (!r0.is_zero() && r0.lc() != 1) {
        Int inv = mod_inverse(r0.lc(), m);
        r0 = r0.scaled(inv);
        s0 = s0.scaled(inv);
        t0 = t0.scaled(inv);
    }
    s = s0;
    t = t0;
    return r0;
}

QFactorization factor_over_Q(const IntPoly& g) {
    if (g.is_zero()) throw Error(ErrorCode::ZeroDivision, "cannot factor the zero polynomial");
    QFactorization result;
    Int cont = content(g);
    if (g.lc() < 0) cont = -cont;
    result.unit = Rat(cont);
    if (g.degree() == 0) return result;

    IntPoly f = primitive_part(g);
    // split off x^k
    int k = 0;
    while (f.coeff(k) == 0) ++k;
    if (k > 0) {
        result.factors.emplace_back(IntPoly({Int(0), Int(1)}), k);
        std::vector<Int> c(f.coeffs().begin() + k, f.coeffs().end());
        f = IntPoly(std::move(c));
    }

    for (const auto& [part, mult] : squarefree_parts(f)) {
        for (const auto& irr : zassenhaus(part)) result.factors.emplace_back(irr, mult);
    }

    std::sort(result.factors.begin(), result.factors.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return canonical_less(a.first, b.first);
        return a.second < b.second;
    });

    if (result.product() != g)
        throw Error(ErrorCode::SelfCheckFailed, "rational factorization does not recombine");
    return result;
}

bool is_irreducible_over_Q(const IntPoly& g) {
    if (g.degree() < 1) return false;
    QFactorization f = factor_over_Q(g);
    return f.factors.size() == 1 && f.factors[0].second == 1;
}

} // namespace admis
