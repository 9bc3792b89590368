#ifndef ADMIS_NUMBER_FIELD_HPP
#define ADMIS_NUMBER_FIELD_HPP

#include "admis/factorize.hpp"
#include "admis/poly.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace admis {

/* ramification/residue data of a rational prime in K */
struct PrimeDecomposition {
    Int p;
    /* (e_i, f_i), sorted by descending local degree e*f, ties by descending e */
    std::vector<std::pair<long, long>> pairs;
    bool certified = false;
    /* the Z[x]-generator whose Dedekind test certified the result */
    IntPoly witness_minpoly;
};

/* element of K in the power basis of the defining root: the coefficient
 * vector of the reduced representative in Q[x]/(f) */
using FieldElement = RatPoly;

/* polynomial over K, coefficients as reduced representatives in Q[x]/(f) */
struct KPoly {
    std::vector<RatPoly> coeffs;
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/* A number field Q[x]/(f), f monic irreducible. Copies share state; prime
 * decompositions and the Galois flag are memoized behind a mutex
 * (insert-once semantics). */
class NumberField {
  public:
    /* validates monicity and irreducibility */
    static NumberField make(const IntPoly& f, std::string label = "");
    /* skips the irreducibility check; for internally constructed defining
     * polynomials that are irreducible by construction */
    static NumberField make_trusted(const IntPoly& f, std::string label = "");

    const IntPoly& defining_poly() const;
    int degree() const;
    const Int& disc_defpoly() const;
    const std::string& label() const;

    PrimeDecomposition decompose_prime(const Int& p) const;
    bool p_decomposes(const Int& p) const;

    /* true iff g has a root in K (Trager norm factorization) */
    bool has_root(const IntPoly& g) const;
    bool is_galois() const;

    /* absolute field isomorphic to K(beta) for g(beta) = 0, g monic and
     * irreducible over K; primitive element theta + c*beta */
    NumberField adjoin_root(const IntPoly& g) const;

    /* monic irreducible factors of g over K, canonical order; g squarefree */
    std::vector<KPoly> factor_over_K(const IntPoly& g) const;
    NumberField adjoin_root_of_factor(const KPoly& g) const;
    /* defining polynomials of K(beta) from primitive elements theta + c*beta
     * and beta + c*theta, ascending c; up to `count` distinct candidates */
    std::vector<IntPoly> adjoin_candidates(const KPoly& g, int count) const;

    bool same_state(const NumberField& o) const { return st_ == o.st_; }

  private:
    struct State;
    explicit NumberField(std::shared_ptr<State> st) : st_(std::move(st)) {}
    std::shared_ptr<State> st_;
};

/* explicit two-way isomorphism test; no canonical form is attempted */
bool fields_isomorphic(const NumberField& a, const NumberField& b);

/* arithmetic in K = Q[x]/(f) and K[z]; a thin view over a field */
class FieldOps {
  public:
    explicit FieldOps(const NumberField& K);

    const NumberField& field() const { return K_; }
    RatPoly reduce(const RatPoly& a) const;
    RatPoly mul(const RatPoly& a, const RatPoly& b) const;
    RatPoly inv(const RatPoly& a) const;

    KPoly from_int_poly(const IntPoly& g) const;
    KPoly kp_normalize(KPoly a) const; // strip leading zeros
    bool kp_is_zero(const KPoly& a) const;
    KPoly kp_monic(const KPoly& a) const;
    KPoly kp_mul(const KPoly& a, const KPoly& b) const;
    KPoly kp_sub(const KPoly& a, const KPoly& b) const;
    std::pair<KPoly, KPoly> kp_divmod(const KPoly& a, const KPoly& d) const;
    KPoly kp_gcd(const KPoly& a, const KPoly& b) const;
    KPoly kp_derivative(const KPoly& a) const;
    /* g(z + w) for w in K */
    KPoly kp_shift(const KPoly& g, const RatPoly& w) const;

  private:
    NumberField K_;
    RatPoly f_;
};

} // namespace admis

#endif
