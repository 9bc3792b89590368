#include "admis/number_field.hpp"

#include <algorithm>

namespace admis {

struct NumberField::State {
    IntPoly f;
    int degree = 0;
    Int disc;
    std::string label;

    mutable std::mutex mu;
    mutable std::map<Int, PrimeDecomposition> decomp_memo;
    mutable std::optional<bool> galois_memo;
};

NumberField NumberField::make_trusted(const IntPoly& f, std::string label) {
    if (f.degree() < 1)
        throw Error(ErrorCode::NotIrreducible, "defining polynomial must have degree >= 1");
    if (!f.is_monic()) throw Error(ErrorCode::NotMonic, "defining polynomial must be monic");
    auto st = std::make_shared<State>();
    st->f = f;
    st->degree = f.degree();
    st->disc = discriminant(f);
    st->label = std::move(label);
    if (st->disc == 0) throw Error(ErrorCode::NotIrreducible, "defining polynomial is not squarefree");
    return NumberField(std::move(st));
}

NumberField NumberField::make(const IntPoly& f, std::string label) {
    if (f.degree() > 1 && !is_irreducible_over_Q(f))
        throw Error(ErrorCode::NotIrreducible, "defining polynomial is reducible: " + f.str());
    return make_trusted(f, std::move(label));
}

const IntPoly& NumberField::defining_poly() const { return st_->f; }
int NumberField::degree() const { return st_->degree; }
const Int& NumberField::disc_defpoly() const { return st_->disc; }
const std::string& NumberField::label() const { return st_->label; }

/* ---------- prime decomposition (Dedekind's criterion) ---------- */

namespace {

/* Dedekind's test for one generator polynomial h (monic, same field):
 * factor h mod p; with g = product of the distinct irreducible factors and
 * w = h-bar/g, form F = (lift(g)*lift(w) - h)/p. The order Z[x]/(h) is
 * p-maximal iff gcd(F-bar, g, w) = 1, and then the (e_i, f_i) are the
 * multiplicities and degrees of the factors. */
bool dedekind_certifies(const IntPoly& h, const Int& p, std::vector<std::pair<long, long>>& pairs) {
    ModFactorization mf = factor_mod_p(ModPoly(h, p));
    ModPoly g = ModPoly::constant(1, p), w = ModPoly::constant(1, p);
    for (const auto& [fac, mult] : mf.factors) {
        g = g * fac;
        for (int i = 1; i < mult; ++i) w = w * fac;
    }
    IntPoly gh = g.lift() * w.lift() - h;
    std::vector<Int> fc(gh.coeffs().size());
    for (size_t i = 0; i < fc.size(); ++i) {
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), gh.coeffs()[i].get_mpz_t(), p.get_mpz_t());
        if (r != 0) throw Error(ErrorCode::SelfCheckFailed, "Dedekind difference not divisible by p");
        fc[i] = q;
    }
    ModPoly F(IntPoly(std::move(fc)), p);
    if (mod_gcd(mod_gcd(g, w), F).degree() != 0) return false;
    pairs.clear();
    for (const auto& [fac, mult] : mf.factors) pairs.emplace_back(mult, fac.degree());
    std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
        long la = a.first * a.second, lb = b.first * b.second;
        if (la != lb) return la > lb;
        return a.first > b.first;
    });
    return true;
}

/* candidate generators of the same field with monic integral minimal
 * polynomials: theta + a, 1/theta when f(0) is a unit, and (theta + a)/b
 * for small b when the transform stays integral (catches (1+sqrt(d))/2) */
std::vector<IntPoly> generator_candidates(const IntPoly& f) {
    std::vector<IntPoly> out;
    auto push = [&out](const IntPoly& h) {
        if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(h);
    };
    int n = f.degree();
    for (long b : {1L, 2L, 3L}) {
        for (long a = 0; a < (b == 1 ? 11 : b); ++a) {
            IntPoly sub = f.compose(IntPoly({Int(-a), Int(b)}));
            Int scale = int_pow(Int(b), static_cast<unsigned long>(n));
            bool ok = true;
            std::vector<Int> c(sub.coeffs().size());
            for (size_t i = 0; i < c.size() && ok; ++i) {
                Int q, r;
                mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), sub.coeffs()[i].get_mpz_t(),
                            scale.get_mpz_t());
                if (r != 0) ok = false;
                c[i] = q;
            }
            if (ok) push(IntPoly(std::move(c)));
        }
    }
    if (f.coeff(0) == 1 || f.coeff(0) == -1) {
        IntPoly rev = f.reversed();
        push(rev.lc() < 0 ? -rev : rev);
    }
    return out;
}

} // namespace

PrimeDecomposition NumberField::decompose_prime(const Int& p) const {
    if (!is_prime(p)) throw Error(ErrorCode::CompositeModulus, "decompose_prime needs a prime");
    {
        std::lock_guard<std::mutex> lock(st_->mu);
        auto it = st_->decomp_memo.find(p);
        if (it != st_->decomp_memo.end()) return it->second;
    }
    PrimeDecomposition result;
    result.p = p;
    for (const IntPoly& h : generator_candidates(st_->f)) {
        if (dedekind_certifies(h, p, result.pairs)) {
            result.certified = true;
            result.witness_minpoly = h;
            break;
        }
    }
    if (!result.certified)
        throw Error(ErrorCode::IndexObstruction,
                    "Dedekind inconclusive at p=" + p.get_str() + " for " + st_->f.str());
    long total = 0;
    for (auto& [e, fdeg] : result.pairs) total += e * fdeg;
    if (total != st_->degree) throw Error(ErrorCode::SelfCheckFailed, "sum e_i f_i != [K:Q]");
    std::lock_guard<std::mutex> lock(st_->mu);
    return st_->decomp_memo.try_emplace(p, result).first->second;
}

bool NumberField::p_decomposes(const Int& p) const { return decompose_prime(p).pairs.size() >= 2; }

/* ---------- FieldOps ---------- */

FieldOps::FieldOps(const NumberField& K) : K_(K), f_(to_rat_poly(K.defining_poly())) {}

RatPoly FieldOps::reduce(const RatPoly& a) const { return a.divmod(f_).second; }
RatPoly FieldOps::mul(const RatPoly& a, const RatPoly& b) const { return reduce(a * b); }

RatPoly FieldOps::inv(const RatPoly& a) const {
    if (a.is_zero()) throw Error(ErrorCode::ZeroDivision, "inverse of zero field element");
    RatPoly g;
    auto [s, t] = rat_xgcd(a, f_, g);
    if (g.degree() != 0) throw Error(ErrorCode::SelfCheckFailed, "element not invertible in field");
    return reduce(s);
}

KPoly FieldOps::from_int_poly(const IntPoly& g) const {
    KPoly out;
    out.coeffs.reserve(g.coeffs().size());
    for (const auto& c : g.coeffs()) out.coeffs.push_back(RatPoly::constant(Rat(c)));
    return kp_normalize(std::move(out));
}

KPoly FieldOps::kp_normalize(KPoly a) const {
    while (!a.coeffs.empty() && a.coeffs.back().is_zero()) a.coeffs.pop_back();
    return a;
}

bool FieldOps::kp_is_zero(const KPoly& a) const { return a.coeffs.empty(); }

KPoly FieldOps::kp_monic(const KPoly& a) const {
    if (kp_is_zero(a) || a.coeffs.back() == RatPoly::constant(Rat(1))) return a;
    RatPoly linv = inv(a.coeffs.back());
    KPoly out;
    out.coeffs.reserve(a.coeffs.size());
    for (const auto& c : a.coeffs) out.coeffs.push_back(mul(c, linv));
    return out;
}

KPoly FieldOps::kp_mul(const KPoly& a, const KPoly& b) const {
    if (kp_is_zero(a) || kp_is_zero(b)) return KPoly{};
    KPoly out;
    out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, RatPoly());
    for (size_t i = 0; i < a.coeffs.size(); ++i)
        for (size_t j = 0; j < b.coeffs.size(); ++j)
            out.coeffs[i + j] = out.coeffs[i + j] + a.coeffs[i] * b.coeffs[j];
    for (auto& c : out.coeffs) c = reduce(c);
    return kp_normalize(std::move(out));
}

KPoly FieldOps::kp_sub(const KPoly& a, const KPoly& b) const {
    KPoly out;
    out.coeffs.assign(std::max(a.coeffs.size(), b.coeffs.size()), RatPoly());
    for (size_t i = 0; i < a.coeffs.size(); ++i) out.coeffs[i] = out.coeffs[i] + a.coeffs[i];
    for (size_t i = 0; i < b.coeffs.size(); ++i) out.coeffs[i] = out.coeffs[i] - b.coeffs[i];
    return kp_normalize(std::move(out));
}

std::pair<KPoly, KPoly> FieldOps::kp_divmod(const KPoly& a, const KPoly& d) const {
    if (kp_is_zero(d)) throw Error(ErrorCode::ZeroDivision, "K[z] division by zero");
    if (a.degree() < d.degree()) return {KPoly{}, a};
    RatPoly linv = inv(d.coeffs.back());
    KPoly rem = a;
    KPoly quot;
    quot.coeffs.assign(static_cast<size_t>(a.degree() - d.degree()) + 1, RatPoly());
    for (int i = a.degree(); i >= d.degree(); --i) {
        RatPoly top = rem.coeffs[static_cast<size_t>(i)];
        if (top.is_zero()) continue;
        RatPoly q = mul(top, linv);
        quot.coeffs[static_cast<size_t>(i - d.degree())] = q;
        for (int j = 0; j <= d.degree(); ++j) {
            auto& target = rem.coeffs[static_cast<size_t>(i - d.degree() + j)];
            target = reduce(target - q * d.coeffs[static_cast<size_t>(j)]);
        }
    }
    return {kp_normalize(std::move(quot)), kp_normalize(std::move(rem))};
}

KPoly FieldOps::kp_gcd(const KPoly& a, const KPoly& b) const {
    KPoly f = a, g = b;
    while (!kp_is_zero(g)) {
        KPoly r = kp_divmod(f, g).second;
        f = g;
        g = r;
    }
    return kp_is_zero(f) ? f : kp_monic(f);
}

KPoly FieldOps::kp_derivative(const KPoly& a) const {
    if (a.coeffs.size() <= 1) return KPoly{};
    KPoly out;
    out.coeffs.reserve(a.coeffs.size() - 1);
    for (size_t i = 1; i < a.coeffs.size(); ++i)
        out.coeffs.push_back(reduce(a.coeffs[i].scaled(Rat(static_cast<long>(i)))));
    return kp_normalize(std::move(out));
}

KPoly FieldOps::kp_shift(const KPoly& g, const RatPoly& w) const {
    KPoly zw;
    zw.coeffs = {reduce(w), RatPoly::constant(Rat(1))}; // z + w
    KPoly acc;
    for (auto it = g.coeffs.rbegin(); it != g.coeffs.rend(); ++it) {
        acc = kp_mul(acc, zw);
        if (!it->is_zero()) {
            if (acc.coeffs.empty()) acc.coeffs.push_back(RatPoly());
            acc.coeffs[0] = reduce(acc.coeffs[0] + *it);
        }
        acc = kp_normalize(std::move(acc));
    }
    return acc;
}

/* ---------- Trager norms and factorization over K ---------- */

namespace {

/* Newton interpolation through (x_i, v_i), exact rationals */
RatPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& vs) {
    size_t k = xs.size();
    std::vector<Rat> dd = vs;
    for (size_t level = 1; level < k; ++level)
        for (size_t i = k - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
            if (i == level) break;
        }
    RatPoly acc = RatPoly::constant(dd[k - 1]);
    for (size_t i = k - 1; i-- > 0;) {
        RatPoly lin({-xs[i], Rat(1)});
        acc = acc * lin + RatPoly::constant(dd[i]);
    }
    return acc;
}

Rat eval_point(long idx) {
    long v = (idx + 1) / 2;
    return Rat((idx % 2 == 1) ? v : -v); // 0, 1, -1, 2, -2, ...
}

IntPoly to_int_poly_checked(const RatPoly& a) {
    std::vector<Int> c(a.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) {
        if (a.coeffs()[i].get_den() != 1)
            throw Error(ErrorCode::SelfCheckFailed, "expected integral polynomial");
        c[i] = a.coeffs()[i].get_num();
    }
    return IntPoly(std::move(c));
}

/* Interpolated resultant norm N(x) = Res_y(f(y), u_x(y)) for monic G in K[z]:
 *   norm mode:     u = G with z := x - c*y          (minimal poly data of beta + c*theta)
 *   charpoly mode: u = sum_j G_j(y) c^(m-j) (x-y)^j (characteristic poly of theta + c*beta)
 */
IntPoly resultant_norm(const NumberField& K, const KPoly& G, long c, bool theta_plus_cbeta) {
    RatPoly f = to_rat_poly(K.defining_poly());
    int n = K.degree();
    int m = G.degree();
    int target_deg = n * m;
    std::vector<Rat> xs, vs;
    xs.reserve(static_cast<size_t>(target_deg) + 1);
    vs.reserve(static_cast<size_t>(target_deg) + 1);
    for (long idx = 0; idx <= target_deg; ++idx) {
        Rat x0 = eval_point(idx);
        RatPoly base = theta_plus_cbeta ? RatPoly({x0, Rat(-1)}) : RatPoly({x0, Rat(-c)});
        RatPoly u;
        RatPoly power = RatPoly::constant(Rat(1));
        for (int j = 0; j <= m; ++j) {
            const RatPoly& Gj = G.coeffs[static_cast<size_t>(j)];
            if (!Gj.is_zero()) {
                Rat weight(1);
                if (theta_plus_cbeta)
                    for (int t = 0; t < m - j; ++t) weight *= Rat(c);
                u = u + (Gj * power).scaled(weight);
            }
            if (j < m) power = power * base;
        }
        xs.push_back(x0);
        vs.push_back(resultant(f, u));
    }
    RatPoly N = interpolate(xs, vs);
    if (N.degree() != target_deg)
        throw Error(ErrorCode::SelfCheckFailed, "norm polynomial has unexpected degree");
    return to_int_poly_checked(N);
}

bool squarefree_over_Q(const IntPoly& g) { return int_gcd_poly(g, g.derivative()).degree() == 0; }

IntPoly squarefree_part(const IntPoly& g) {
    IntPoly d = int_gcd_poly(g, g.derivative());
    if (d.degree() == 0) return primitive_part(g);
    auto [q, r] = to_rat_poly(g).divmod(to_rat_poly(d));
    return primitive_part(q);
}

/* Trager: pick a shift with squarefree norm, factor the norm over Q, map
 * the factors back through gcds over K. G must be monic and squarefree. */
std::vector<KPoly> factor_over_K_impl(const NumberField& K, const KPoly& G) {
    FieldOps ops(K);
    if (G.degree() == 1) return {G};
    long c = 0;
    IntPoly N;
    while (true) {
        N = resultant_norm(K, G, c, /*theta_plus_cbeta=*/false);
        if (squarefree_over_Q(N)) break;
        if (++c > 64) throw Error(ErrorCode::SelfCheckFailed, "no squarefree Trager shift found");
    }
    QFactorization nf = factor_over_Q(N);
    if (nf.factors.size() == 1) return {G};
    std::vector<KPoly> out;
    RatPoly ctheta({Rat(0), Rat(c)});
    for (const auto& [Ni, mult] : nf.factors) {
        KPoly Gi = ops.kp_gcd(G, ops.kp_shift(ops.from_int_poly(Ni), ctheta));
        if (Gi.degree() >= 1) out.push_back(Gi);
    }
    int total = 0;
    for (const auto& Gi : out) total += Gi.degree();
    if (total != G.degree())
        throw Error(ErrorCode::SelfCheckFailed, "Trager factors do not cover the input");
    return out;
}

} // namespace

std::vector<KPoly> NumberField::factor_over_K(const IntPoly& g) const {
    FieldOps ops(*this);
    KPoly G = ops.kp_monic(ops.from_int_poly(g));
    if (G.degree() < 1) throw Error(ErrorCode::ZeroDivision, "cannot factor a constant over K");
    if (ops.kp_gcd(G, ops.kp_derivative(G)).degree() > 0)
        throw Error(ErrorCode::SelfCheckFailed, "factor_over_K expects a squarefree input");
    return factor_over_K_impl(*this, G);
}

bool NumberField::has_root(const IntPoly& g) const {
    if (g.is_zero()) throw Error(ErrorCode::ZeroDivision, "root test on the zero polynomial");
    if (g.degree() < 1) return false;
    if (g == st_->f) return true;
    QFactorization qf = factor_over_Q(squarefree_part(g));
    for (const auto& [q0, mult] : qf.factors) {
        if (q0.degree() == 1) return true; // rational root, contained in any K
        if (q0.degree() > st_->degree || st_->degree % q0.degree() != 0) continue;
        if (q0 == st_->f) return true;
        // beta is a root of q0 iff lc*beta is a root of the monicization
        IntPoly q = monicize(q0);
        FieldOps ops(*this);
        KPoly G = ops.from_int_poly(q);
        long c = 0;
        IntPoly N;
        while (true) {
            N = resultant_norm(*this, G, c, false);
            if (squarefree_over_Q(N)) break;
            if (++c > 64) throw Error(ErrorCode::SelfCheckFailed, "no squarefree Trager shift");
        }
        for (const auto& [Ni, m] : factor_over_Q(N).factors)
            if (Ni.degree() == st_->degree) return true;
    }
    return false;
}

bool NumberField::is_galois() const {
    {
        std::lock_guard<std::mutex> lock(st_->mu);
        if (st_->galois_memo) return *st_->galois_memo;
    }
    bool result = true;
    if (st_->degree > 1) {
        FieldOps ops(*this);
        KPoly F = ops.from_int_poly(st_->f);
        KPoly lin;
        lin.coeffs = {RatPoly({Rat(0), Rat(-1)}), RatPoly::constant(Rat(1))}; // z - theta
        auto [quot, rem] = ops.kp_divmod(F, lin);
        if (!ops.kp_is_zero(rem))
            throw Error(ErrorCode::SelfCheckFailed, "theta not a root of its own minimal polynomial");
        for (const KPoly& Gi : factor_over_K_impl(*this, quot))
            if (Gi.degree() > 1) result = false;
    }
    std::lock_guard<std::mutex> lock(st_->mu);
    if (!st_->galois_memo) st_->galois_memo = result;
    return *st_->galois_memo;
}

NumberField NumberField::adjoin_root_of_factor(const KPoly& g) const {
    FieldOps ops(*this);
    KPoly G = ops.kp_monic(g);
    int m = G.degree();
    if (m < 1) throw Error(ErrorCode::NotIrreducibleOverK, "cannot adjoin a constant root");
    if (m == 1) return *this; // the root already lies in K
    for (long c = 0; c <= 64; ++c) {
        IntPoly N = resultant_norm(*this, G, c, /*theta_plus_cbeta=*/true);
        if (squarefree_over_Q(N)) return make_trusted(N);
    }
    throw Error(ErrorCode::DegenerateGenerator, "no primitive element of the form theta + c*beta");
}

std::vector<IntPoly> NumberField::adjoin_candidates(const KPoly& g, int count) const {
    FieldOps ops(*this);
    KPoly G = ops.kp_monic(g);
    int m = G.degree();
    if (m < 1) throw Error(ErrorCode::NotIrreducibleOverK, "cannot adjoin a constant root");
    std::vector<IntPoly> out;
    if (m == 1) {
        out.push_back(st_->f);
        return out;
    }
    for (long c = 0; c <= 16 && static_cast<int>(out.size()) < count; ++c) {
        for (bool theta_side : {true, false}) {
            IntPoly N = resultant_norm(*this, G, c, theta_side);
            if (!squarefree_over_Q(N)) continue;
            if (std::find(out.begin(), out.end(), N) == out.end()) out.push_back(N);
            if (static_cast<int>(out.size()) >= count) break;
        }
    }
    if (out.empty())
        throw Error(ErrorCode::DegenerateGenerator, "no squarefree compositum generator found");
    return out;
}

NumberField NumberField::adjoin_root(const IntPoly& g) const {
    if (!g.is_monic()) throw Error(ErrorCode::NotMonic, "adjoin_root needs a monic polynomial");
    if (st_->degree == 1) {
        if (!is_irreducible_over_Q(g))
            throw Error(ErrorCode::NotIrreducibleOverK, "polynomial reducible over Q");
        return make_trusted(g);
    }
    std::vector<KPoly> factors = factor_over_K(g);
    if (factors.size() != 1 || factors[0].degree() != g.degree())
        throw Error(ErrorCode::NotIrreducibleOverK, "polynomial reducible over K: " + g.str());
    return adjoin_root_of_factor(factors[0]);
}

bool fields_isomorphic(const NumberField& a, const NumberField& b) {
    if (a.degree() != b.degree()) return false;
    return a.has_root(b.defining_poly()) && b.has_root(a.defining_poly());
}

} // namespace admis
