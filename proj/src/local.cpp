#include "admis/local.hpp"

#include <map>
#include <mutex>

namespace admis {

const char* unity_method_name(UnityMethod m) {
    switch (m) {
        case UnityMethod::Unramified: return "Unramified";
        case UnityMethod::DegreeObstruction: return "DegreeObstruction";
        case UnityMethod::CompositumTest: return "CompositumTest";
        case UnityMethod::GlobalRoot: return "GlobalRoot";
    }
    return "";
}

std::vector<LocalPlaceProfile> local_degree_profile(const NumberField& K, const Int& p) {
    PrimeDecomposition dec = K.decompose_prime(p);
    std::vector<LocalPlaceProfile> out;
    out.reserve(dec.pairs.size());
    for (const auto& [e, f] : dec.pairs) out.push_back({p, e, f, e * f});
    return out; // pairs already sorted by descending local degree
}

namespace {

long prime_power_long(const Int& p, int s) {
    Int v = int_pow(p, static_cast<unsigned long>(s));
    if (!v.fits_slong_p()) throw Error(ErrorCode::OrderBudgetExceeded, "p^s too large");
    return v.get_si();
}

struct UnityKey {
    std::vector<Int> f;
    Int p;
    int s;
    bool operator<(const UnityKey& o) const {
        if (f != o.f) return f < o.f;
        if (p != o.p) return p < o.p;
        return s < o.s;
    }
};

std::map<UnityKey, bool>& unity_cache() {
    static std::map<UnityKey, bool> cache;
    return cache;
}
std::mutex& unity_mutex() {
    static std::mutex mu;
    return mu;
}

} // namespace

bool zeta_in_completion_compositum(const NumberField& K, const Int& p, int s) {
    long ps = prime_power_long(p, s);
    IntPoly phi = cyclotomic_poly(ps);
    long base_degree = local_degree_profile(K, p).front().local_degree;

    if (K.degree() == 1) {
        NumberField L = NumberField::make_trusted(phi);
        return local_degree_profile(L, p).front().local_degree == base_degree;
    }
    std::vector<KPoly> facs = K.factor_over_K(phi);
    if (facs.front().degree() == 1) return true; // zeta already lies in K
    // different primitive elements give different orders Z[gamma]; scan a few
    // until Dedekind certifies the compositum at p
    std::optional<Error> last;
    for (const IntPoly& N : K.adjoin_candidates(facs.front(), 8)) {
        NumberField L = NumberField::make_trusted(N);
        try {
            long ext_degree = local_degree_profile(L, p).front().local_degree;
            if (ext_degree % base_degree != 0)
                throw Error(ErrorCode::SelfCheckFailed, "compositum local degree not a multiple");
            return ext_degree == base_degree;
        } catch (const Error& err) {
            if (err.code() != ErrorCode::IndexObstruction) throw;
            last = err;
        }
    }
    throw last.value_or(Error(ErrorCode::IndexObstruction, "no certifiable compositum generator"));
}

bool zeta_in_completion(const NumberField& K, const Int& p, int s) {
    if (p == 2 || !is_prime(p)) throw Error(ErrorCode::ParseError, "zeta_in_completion needs an odd prime");
    if (s < 1) throw Error(ErrorCode::ParseError, "s must be positive");
    if (!K.is_galois()) throw Error(ErrorCode::NotGaloisField, "zeta_in_completion needs Galois K");

    UnityKey key{K.defining_poly().coeffs(), p, s};
    {
        std::lock_guard<std::mutex> lock(unity_mutex());
        auto it = unity_cache().find(key);
        if (it != unity_cache().end()) return it->second;
    }
    bool result;
    long ps = prime_power_long(p, s);
    auto profile = local_degree_profile(K, p);
    long needed = prime_power_long(p, s - 1) * (p.get_si() - 1); // [Q_p(zeta_{p^s}) : Q_p]
    if (K.has_root(cyclotomic_poly(ps))) {
        result = true; // GlobalRoot
    } else if (profile.front().e == 1) {
        // Q_p(zeta_p)/Q_p is totally ramified for odd p
        result = false; // Unramified
    } else if (profile.front().local_degree % needed != 0) {
        result = false; // DegreeObstruction
    } else {
        result = zeta_in_completion_compositum(K, p, s);
    }
    std::lock_guard<std::mutex> lock(unity_mutex());
    return unity_cache().try_emplace(key, result).first->second;
}

LocalUnityReport local_unity_report(const NumberField& K, const Int& p) {
    LocalUnityReport report;
    report.p = p;
    auto profile = local_degree_profile(K, p);
    long pl = p.get_si();

    auto method_for = [&](int s) {
        long ps = prime_power_long(p, s);
        if (K.has_root(cyclotomic_poly(ps))) return UnityMethod::GlobalRoot;
        if (profile.front().e == 1) return UnityMethod::Unramified;
        long needed = prime_power_long(p, s - 1) * (pl - 1);
        if (profile.front().local_degree % needed != 0) return UnityMethod::DegreeObstruction;
        return UnityMethod::CompositumTest;
    };

    int s = 1;
    while (true) {
        // degree cap: [Q_p(zeta_{p^s}) : Q_p] = p^(s-1)(p-1) > 2 [K:Q] cannot embed
        Int size = int_pow(p, static_cast<unsigned long>(s - 1)) * (pl - 1);
        if (size > 2 * K.degree()) break;
        if (!zeta_in_completion(K, p, s)) break;
        report.s_max = s;
        ++s;
    }
    report.method = method_for(report.s_max == 0 ? 1 : report.s_max);
    if (report.s_max >= 1 && (pl - 1) != 0) {
        // necessary condition recorded with the report
        if (profile.front().e % (pl - 1) != 0)
            throw Error(ErrorCode::SelfCheckFailed, "(p-1) must divide e when zeta_p is local");
    }
    return report;
}

WildHypotheses wild_hypotheses(const NumberField& K, const Int& p) {
    if (p == 2 || !is_prime(p)) throw Error(ErrorCode::ParseError, "wild_hypotheses needs an odd prime");
    WildHypotheses out;
    auto profile = local_degree_profile(K, p);
    out.decomposes = profile.size() >= 2;
    if (out.decomposes) out.second_local_degree = profile[1].local_degree;

    long pm1 = p.get_si() - 1;
    bool unramified = true;
    for (const auto& pl : profile)
        if (pl.e != 1) unramified = false;
    bool degree_clause = true;
    for (const auto& pl : profile)
        if (pl.local_degree % pm1 == 0) degree_clause = false;

    if (unramified) {
        out.all_completions_zeta_free = TriState::True;
        out.zeta_free_clause = "(i) p unramified in K";
    } else if (degree_clause) {
        out.all_completions_zeta_free = TriState::True;
        out.zeta_free_clause = "(ii) (p-1) divides no local degree";
    } else if (K.is_galois() && K.degree() % pm1 != 0) {
        out.all_completions_zeta_free = TriState::True;
        out.zeta_free_clause = "(iii) K Galois and (p-1) does not divide [K:Q]";
    } else if (K.is_galois()) {
        LocalUnityReport rep = local_unity_report(K, p);
        out.all_completions_zeta_free = (rep.s_max == 0) ? TriState::True : TriState::False;
        out.zeta_free_clause = rep.s_max == 0 ? std::string("zeta_in_completion")
                                              : std::string("");
        out.galois_profile = {profile.front().local_degree, rep.s_max};
        return out;
    } else {
        out.all_completions_zeta_free = TriState::Unknown;
    }
    if (K.is_galois()) out.galois_profile = {profile.front().local_degree, 0};
    return out;
}

} // namespace admis
