#ifndef ADMIS_GROUP_HPP
#define ADMIS_GROUP_HPP

#include "admis/errors.hpp"
#include "admis/numeric.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace admis {

constexpr long kDefaultOrderBudget = 20000;
constexpr long kDefaultEnumBudget = 4096;
constexpr long kDefaultDemuskinBudget = 2187;

/* <x, y | x^e = 1, y^f = x^i, y x y^-1 = x^q>; consistency demands
 * gcd(q, e) = 1, q^f = 1 (mod e) and i (q - 1) = 0 (mod e), and then the
 * presented group has order exactly e*f */
struct MetacyclicPresentation {
    long e = 1;
    long f = 1;
    long i = 0; // reduced mod e
    long q = 0; // reduced mod e (0 only when e = 1)

    bool operator==(const MetacyclicPresentation&) const = default;
    std::string str() const;
};

void validate_presentation(const MetacyclicPresentation& pres);

struct DemuskinQuery {
    int n = 4;                 // generator count
    std::optional<int> s;      // exponent p^s in the relation; empty = free case
};

enum class GroupSource { MetacyclicParams, PermutationGenerators, DirectProduct, Trivial, Subgroup };

/* A finite group materialized as a Cayley table over element indices.
 * Immutable after validated construction; copies share state. */
class FiniteGroup {
  public:
    static FiniteGroup trivial();
    static FiniteGroup from_metacyclic(const MetacyclicPresentation& pres,
                                       long order_budget = kDefaultOrderBudget);
    /* generators as images of 0..points-1 */
    static FiniteGroup from_permutations(const std::vector<std::vector<int>>& gens,
                                         long order_budget = kDefaultOrderBudget);
    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                                      long order_budget = kDefaultOrderBudget);

    long order() const;
    int identity() const;
    int mul(int a, int b) const;
    int inv(int a) const;
    int conj(int g, int x) const; // g x g^-1
    int commutator(int a, int b) const; // a^-1 b^-1 a b
    int power(int a, long k) const;
    long element_order(int a) const;
    long exponent() const;
    GroupSource source() const;
    const std::vector<int>& generators() const;

    bool is_abelian() const;
    std::optional<long> p_group_prime() const; // p when |G| is a power of p
    bool is_solvable() const;
    bool is_nilpotent() const;

    /* minimum number of generators of a p-group: rank of G / G^p[G,G] */
    long d_of_group() const;

    /* subgroup handling by element-index sets */
    std::vector<int> subgroup_closure(const std::vector<int>& gens) const;
    std::vector<int> derived_subgroup(const std::vector<int>& members) const;
    std::vector<int> frattini_subgroup() const; // p-groups
    std::vector<int> conjugacy_class_reps() const;
    std::vector<long> element_order_histogram() const;

    FiniteGroup subgroup(const std::vector<int>& members) const;
    FiniteGroup sylow_subgroup(const Int& p) const;

    /* image of g in the Frattini quotient G/Phi(G), an F_p vector of
     * dimension d(G); p-groups only */
    std::vector<int> frattini_coordinates(int g) const;

    /* a witness (a, b) in G realizing the presentation, or nothing */
    std::optional<std::pair<int, int>> realizes_presentation(const MetacyclicPresentation& pres) const;

    std::optional<MetacyclicPresentation> is_metacyclic() const;
    /* all presentations of a metacyclic p-group, canonically ordered */
    std::vector<MetacyclicPresentation> enumerate_metacyclic_presentations(
        long order_budget = kDefaultEnumBudget) const;

    /* search for generators x_1..x_n with
     *   x_1^(p^s) [x_1,x_2] [x_3,x_4] ... [x_{n-1},x_n] = 1
     * ([a,b] = a^-1 b^-1 a b); with no s the relation is dropped entirely
     * (free pro-p case) and the test reduces to d(G) <= n */
    std::optional<std::vector<int>> demuskin_quotient_test(const DemuskinQuery& query, const Int& p,
                                                           long order_budget = kDefaultDemuskinBudget,
                                                           long node_budget = 40000000) const;

  private:
    struct State;
    explicit FiniteGroup(std::shared_ptr<State> st) : st_(std::move(st)) {}
    static FiniteGroup from_table(std::vector<int> table, long n, GroupSource source,
                                  std::vector<int> gens);
    std::shared_ptr<State> st_;
};

/* generator-image backtracking with order-profile pruning */
bool isomorphic(const FiniteGroup& a, const FiniteGroup& b);

} // namespace admis

#endif
