#ifndef ADMIS_QUERY_HPP
#define ADMIS_QUERY_HPP

#include "admis/engine.hpp"

#include <string>

namespace admis {

/* A parsed query: field as descending coefficient list, group as a
 * canonical JSON spec (metacyclic / permutations / product), mode. */
struct QuerySpec {
    std::vector<Int> field_coeffs_desc;
    Json group = Json::object();
    DecisionMode mode = DecisionMode::Admissible;

    Json to_json() const;
    static QuerySpec from_json(const Json& j);

    NumberField build_field() const;
    FiniteGroup build_group(long order_budget = kDefaultOrderBudget) const;
};

/* "1,0,1" with descending powers -> x^2 + 1 */
IntPoly parse_poly_desc(const std::string& csv);
std::vector<Int> poly_to_desc(const IntPoly& f);

/* "(1 2 3)(4 5)" -> cycles on 1-based points */
std::vector<std::vector<int>> parse_cycles(const std::string& s);
/* image vector (0-based) for a cycle list on `points` points */
std::vector<int> cycles_to_images(const std::vector<std::vector<int>>& cycles, int points);

Json metacyclic_spec(const std::string& csv);              // "e,f,i,q"
Json permutation_spec(const std::vector<std::string>& gens); // each "(..)(..)"
Json product_spec(const std::string& spec); // "perm:(1 2 3)|(4 5);metacyclic:9,3,0,4"

FiniteGroup group_from_json(const Json& spec, long order_budget = kDefaultOrderBudget);

} // namespace admis

#endif
