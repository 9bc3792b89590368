#ifndef ADMIS_CYCLOTOMIC_HPP
#define ADMIS_CYCLOTOMIC_HPP

#include "admis/number_field.hpp"
#include "admis/poly.hpp"

#include <vector>

namespace admis {

/* zeta_e -> zeta_e^q on Q(zeta_e) */
struct CyclotomicAutomorphism {
    long e;
    long q; // reduced mod e, coprime to e
};

/* a subfield of Q(zeta_e): the fixed field of the subgroup H of (Z/e)^*,
 * generated by a Gaussian period with the given minimal polynomial */
struct SubfieldDescriptor {
    long e;
    std::vector<long> subgroup; // sorted, contains 1
    IntPoly min_poly;           // monic, irreducible, degree phi(e)/|H|
};

bool is_prime_power(long e, long* prime_out = nullptr);

std::vector<long> unit_group(long e);
std::vector<long> subgroup_generated(long e, const std::vector<long>& gens);
/* every subgroup of (Z/e)^*, canonical order */
std::vector<std::vector<long>> all_subgroups(long e);

/* Minimal polynomial of the Gaussian period sum_{h in H} zeta_e^h computed
 * exactly in Z[x]/(Phi_e); on a degenerate period the generator is perturbed
 * to sum_{h in H} (zeta^h + t zeta^{2h}) for t = 1, 2, ... */
IntPoly gaussian_period_min_poly(long e, const std::vector<long>& H);

SubfieldDescriptor fixed_field_subgroup(const CyclotomicAutomorphism& sigma);

/* K intersect Q(zeta_e) contained in the fixed field of sigma_{e,q};
 * e must be 1 or a prime power */
bool liedahl_condition(const NumberField& K, long e, long q);

/* primitive element of the unique degree-p subfield of Q(zeta_{p^2}), p odd */
IntPoly alpha_p_min_poly(long p);

/* largest n >= 0 with zeta_{p^n} in K (n = 0 when even zeta_p is missing;
 * for p = 2 the answer is always >= 1) */
int max_root_of_unity_power(const NumberField& K, long p);

} // namespace admis

#endif
