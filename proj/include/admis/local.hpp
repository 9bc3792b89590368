#ifndef ADMIS_LOCAL_HPP
#define ADMIS_LOCAL_HPP

#include "admis/cyclotomic.hpp"
#include "admis/number_field.hpp"

#include <optional>
#include <string>
#include <vector>

namespace admis {

struct LocalPlaceProfile {
    Int p;
    long e = 1;
    long f = 1;
    long local_degree = 1; // e * f = [K_p : Q_p]
};

enum class UnityMethod { Unramified, DegreeObstruction, CompositumTest, GlobalRoot };

const char* unity_method_name(UnityMethod m);

/* largest s with zeta_{p^s} in K_p (s_max = 0: not even zeta_p) */
struct LocalUnityReport {
    Int p;
    int s_max = 0;
    UnityMethod method = UnityMethod::Unramified;
};

/* completions of K above p, sorted by descending local degree */
std::vector<LocalPlaceProfile> local_degree_profile(const NumberField& K, const Int& p);

/* zeta_{p^s} in K_p for Galois K and odd p. Fast paths: a global root of
 * Phi_{p^s}, an unramified p, or a local-degree obstruction; otherwise the
 * compositum criterion: the local degree of p in K(zeta_{p^s}) equals the
 * local degree in K iff zeta_{p^s} already lives in K_p. */
bool zeta_in_completion(const NumberField& K, const Int& p, int s);
/* the raw compositum criterion, exposed for cross-checking the fast paths */
bool zeta_in_completion_compositum(const NumberField& K, const Int& p, int s);

LocalUnityReport local_unity_report(const NumberField& K, const Int& p);

enum class TriState { True, False, Unknown };

struct WildHypotheses {
    bool decomposes = false;
    TriState all_completions_zeta_free = TriState::Unknown;
    std::string zeta_free_clause; // which clause settled it, empty if none
    std::optional<long> second_local_degree;
    std::optional<std::pair<long, int>> galois_profile; // (local degree, s_max)
};

/* evaluates, in order: (i) p unramified; (ii) (p-1) divides no local degree;
 * (iii) K Galois and (p-1) does not divide [K:Q]; then, for Galois K,
 * settles the remaining cases through zeta_in_completion */
WildHypotheses wild_hypotheses(const NumberField& K, const Int& p);

} // namespace admis

#endif
