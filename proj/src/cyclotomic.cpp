#include "admis/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace admis {

bool is_prime_power(long e, long* prime_out) {
    if (e < 2) return false;
    long p = 2;
    while (p * p <= e && e % p != 0) ++p;
    if (p * p > e) p = e;
    long m = e;
    while (m % p == 0) m /= p;
    if (m != 1) return false;
    if (prime_out) *prime_out = p;
    return true;
}

std::vector<long> unit_group(long e) {
    if (e == 1) return {0};
    std::vector<long> units;
    for (long a = 1; a < e; ++a)
        if (std::gcd(a, e) == 1) units.push_back(a);
    return units;
}

std::vector<long> subgroup_generated(long e, const std::vector<long>& gens) {
    if (e == 1) return {0};
    std::set<long> seen{1};
    std::vector<long> frontier{1};
    while (!frontier.empty()) {
        long a = frontier.back();
        frontier.pop_back();
        for (long g : gens) {
            long b = (a * ((g % e) + e)) % e;
            if (seen.insert(b).second) frontier.push_back(b);
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<std::vector<long>> all_subgroups(long e) {
    std::vector<long> units = unit_group(e);
    std::set<std::vector<long>> seen;
    std::vector<std::vector<long>> queue;
    std::vector<long> trivial = (e == 1) ? std::vector<long>{0} : std::vector<long>{1};
    seen.insert(trivial);
    queue.push_back(trivial);
    while (!queue.empty()) {
        std::vector<long> sub = queue.back();
        queue.pop_back();
        for (long u : units) {
            std::vector<long> gens = sub;
            gens.push_back(u);
            std::vector<long> bigger = subgroup_generated(e, gens);
            if (seen.insert(bigger).second) queue.push_back(bigger);
        }
    }
    return {seen.begin(), seen.end()};
}

namespace {

/* arithmetic in Z[zeta_e] = Z[x]/(Phi_e) */
IntPoly reduce_mod_phi(const IntPoly& a, const IntPoly& phi) { return a.divmod(phi).second; }

IntPoly zeta_power(long k, long e, const IntPoly& phi) {
    long r = ((k % e) + e) % e;
    return reduce_mod_phi(IntPoly::x_power(static_cast<int>(r)), phi);
}

struct PeriodKey {
    long e;
    std::vector<long> H;
    bool operator<(const PeriodKey& o) const {
        if (e != o.e) return e < o.e;
        return H < o.H;
    }
};

} // namespace

IntPoly gaussian_period_min_poly(long e, const std::vector<long>& H_in) {
    long p = 0;
    if (e < 3 || !is_prime_power(e, &p))
        throw Error(ErrorCode::ParseError, "gaussian periods need a prime-power conductor >= 3");

    static std::map<PeriodKey, IntPoly> cache;
    static std::mutex mu;

    std::vector<long> H = H_in;
    for (auto& h : H) h = ((h % e) + e) % e;
    std::sort(H.begin(), H.end());
    H.erase(std::unique(H.begin(), H.end()), H.end());
    if (subgroup_generated(e, H) != H)
        throw Error(ErrorCode::ParseError, "H is not a subgroup of (Z/e)^*");
    PeriodKey key{e, H};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    const IntPoly phi = cyclotomic_poly(e);
    std::vector<long> units = unit_group(e);
    long index = static_cast<long>(units.size() / H.size());

    std::vector<long> reps;
    {
        std::set<long> covered;
        for (long u : units) {
            if (covered.count(u)) continue;
            reps.push_back(u);
            for (long h : H) covered.insert((u * h) % e);
        }
    }

    // Generator u(zeta) is orbit-summed over H. Round 1 perturbs the plain
    // period with t*zeta^{2h}; when both coset sums vanish identically
    // (it happens already for e = 9, H = {1,4,7}) later rounds bring in
    // higher powers t^(j-1) * zeta^{jh}.
    for (long round = 1; round <= 4; ++round) {
        for (long t = (round == 1 ? 0 : 1); t <= 16; ++t) {
        std::vector<IntPoly> etas;
        etas.reserve(reps.size());
        for (long c : reps) {
            IntPoly eta;
            for (long h : H) {
                eta = eta + zeta_power(c * h, e, phi);
                Int weight(1);
                for (long j = 2; t > 0 && j <= round + 1; ++j) {
                    weight *= t;
                    eta = eta + zeta_power(j * c * h, e, phi).scaled(weight);
                }
            }
            etas.push_back(reduce_mod_phi(eta, phi));
        }
        bool distinct = true;
        for (size_t i = 0; i < etas.size() && distinct; ++i)
            for (size_t j = i + 1; j < etas.size(); ++j)
                if (etas[i] == etas[j]) {
                    distinct = false;
                    break;
                }
        if (!distinct) continue;

        // expand prod_c (X - eta_c); the coefficients live in Z[zeta] and
        // collapse to rational integers by Galois stability
        std::vector<IntPoly> coeff(1, IntPoly::constant(Int(1))); // ascending in X
        for (const IntPoly& eta : etas) {
            std::vector<IntPoly> next(coeff.size() + 1);
            for (size_t i = 0; i < coeff.size(); ++i) {
                next[i + 1] = next[i + 1] + coeff[i];
                next[i] = next[i] - reduce_mod_phi(coeff[i] * eta, phi);
            }
            coeff = std::move(next);
        }
        std::vector<Int> out(coeff.size());
        for (size_t i = 0; i < coeff.size(); ++i) {
            if (coeff[i].degree() > 0)
                throw Error(ErrorCode::SelfCheckFailed, "period coefficients not rational");
            out[i] = coeff[i].coeff(0);
        }
        IntPoly result(std::move(out));
        if (result.degree() != index)
            throw Error(ErrorCode::SelfCheckFailed, "period polynomial has wrong degree");
        std::lock_guard<std::mutex> lock(mu);
        return cache.try_emplace(key, result).first->second;
        }
    }
    throw Error(ErrorCode::DegenerateGenerator,
                "no separating period generator found for conductor " + std::to_string(e));
}

SubfieldDescriptor fixed_field_subgroup(const CyclotomicAutomorphism& sigma) {
    long e = sigma.e;
    if (e < 1 || (e >= 3 && !is_prime_power(e, nullptr)))
        throw Error(ErrorCode::ParseError, "conductor must be 1, 2, or a prime power");
    SubfieldDescriptor out;
    out.e = e;
    if (e <= 2) {
        out.subgroup = unit_group(e);
        out.min_poly = IntPoly({Int(-1), Int(1)}); // the field is Q
        return out;
    }
    long q = ((sigma.q % e) + e) % e;
    if (std::gcd(q, e) != 1) throw Error(ErrorCode::ParseError, "q must be a unit mod e");
    out.subgroup = subgroup_generated(e, {q});
    if (out.subgroup.size() == unit_group(e).size())
        out.min_poly = IntPoly({Int(-1), Int(1)}); // fixed field is Q
    else
        out.min_poly = gaussian_period_min_poly(e, out.subgroup);
    return out;
}

bool liedahl_condition(const NumberField& K, long e, long q) {
    if (e < 1) throw Error(ErrorCode::ParseError, "conductor must be positive");
    if (e <= 2) return true; // Q(zeta_e) = Q
    if (!is_prime_power(e, nullptr))
        throw Error(ErrorCode::ParseError, "Liedahl conductors are prime powers");
    q = ((q % e) + e) % e;
    if (std::gcd(q, e) != 1) throw Error(ErrorCode::ParseError, "q must be a unit mod e");
    std::vector<long> M = subgroup_generated(e, {q});
    if (M.size() == 1) return true; // sigma is the identity

    // The condition fails iff some subfield of Q(zeta_e) outside the fixed
    // field of sigma embeds in K. It suffices to test the minimal such
    // subfields: the maximal subgroups H that do not contain <q>.
    std::vector<std::vector<long>> subs = all_subgroups(e);
    auto contains = [](const std::vector<long>& big, const std::vector<long>& small) {
        return std::includes(big.begin(), big.end(), small.begin(), small.end());
    };
    std::vector<std::vector<long>> violators;
    for (const auto& H : subs)
        if (!contains(H, M)) violators.push_back(H);
    for (const auto& H : violators) {
        bool maximal = true;
        for (const auto& H2 : violators)
            if (H2 != H && contains(H2, H)) {
                maximal = false;
                break;
            }
        if (!maximal) continue;
        long deg = static_cast<long>(unit_group(e).size() / H.size());
        if (deg > K.degree() || K.degree() % deg != 0) continue;
        if (K.has_root(gaussian_period_min_poly(e, H))) return false;
    }
    return true;
}

IntPoly alpha_p_min_poly(long p) {
    if (p < 3 || !is_prime(Int(p)))
        throw Error(ErrorCode::ParseError, "alpha_p needs an odd prime");
    long e = p * p;
    // the unique subgroup of order p-1 of the cyclic group (Z/p^2)^*
    std::vector<long> H;
    for (long u : unit_group(e))
        if (powmod(Int(u), Int(p - 1), Int(e)) == 1) H.push_back(u);
    return gaussian_period_min_poly(e, H);
}

int max_root_of_unity_power(const NumberField& K, long p) {
    int n = 0;
    long needed = 1;
    while (true) {
        needed = (n == 0) ? (p - 1) : needed * p; // phi(p^(n+1))
        if (needed > K.degree()) return n;
        long pk = 1;
        for (int i = 0; i <= n; ++i) pk *= p;
        if (!K.has_root(cyclotomic_poly(pk))) return n;
        ++n;
    }
}

} // namespace admis
