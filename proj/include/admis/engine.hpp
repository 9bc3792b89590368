#ifndef ADMIS_ENGINE_HPP
#define ADMIS_ENGINE_HPP

#include "admis/cyclotomic.hpp"
#include "admis/group.hpp"
#include "admis/local.hpp"
#include "admis/number_field.hpp"

#include "json.hpp"

#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace admis {

using Json = nlohmann::ordered_json;

enum class VerdictStatus {
    Admissible,
    NotAdmissible,
    TamelyAdmissible,
    NotTamelyAdmissible,
    Undetermined,
};

enum class DecisionMode { Admissible, Tame };

enum class TheoremTag {
    LIEDAHL_T30,
    NEFTIN_T13,
    MAIN_THM_II,
    MAIN_THM_III,
    WILD_ADM,
    LOCAL_NO_UNITY_I,
    LOCAL_NO_UNITY_II,
    LOCAL_NO_UNITY_III,
    WILD_LOCAL_UNITY,
    QUADRATIC_COR,
    CUBIC_PROP,
    QUARTIC_PROP,
    ODD_DEGREE_THM,
    GALOIS_COR,
    NILPOTENT_REDUCTION,
    SYLOW_META_NECESSITY,
    ROOTS_UNITY_OBSTRUCTION,
    Q16_OBSTRUCTION,
    SD16_OBSTRUCTION,
    DIHEDRAL_GENERAL_OBSTRUCTION,
    SCHACHER_METACYCLIC_NECESSITY,
    PROP_SOLVABLE,
    HALF_DEGREE_PROP,
    TRIVIAL_GROUP,
    UNDETERMINED_SCOPE,
};

const char* status_name(VerdictStatus s);
const char* theorem_tag_name(TheoremTag t);

struct Certificate {
    TheoremTag theorem = TheoremTag::UNDETERMINED_SCOPE;
    Json witnesses = Json::object();
    std::vector<std::pair<std::string, bool>> hypotheses_checked;
};

struct Verdict {
    VerdictStatus status = VerdictStatus::Undetermined;
    Certificate certificate;
};

Json verdict_to_json(const Verdict& v);

struct EngineBudgets {
    long order_budget = kDefaultOrderBudget;
    long enum_budget = kDefaultEnumBudget;
    long demuskin_budget = kDefaultDemuskinBudget;
    long demuskin_nodes = 40000000;
};

/* Decision core: applies the admissibility theorems in precedence order
 * (definite criteria, then obstructions, then sufficiency results) and
 * returns Undetermined with the blocking hypothesis otherwise. */
class Engine {
  public:
    explicit Engine(EngineBudgets budgets = {}) : budgets_(budgets) {}

    Verdict decide(const FiniteGroup& G, const NumberField& K, DecisionMode mode) const;

    Verdict tame_admissible_metacyclic_p(const FiniteGroup& G, const NumberField& K) const;
    Verdict admissible_metacyclic_odd_p(const FiniteGroup& G, const NumberField& K) const;
    Verdict wild_p_group(const FiniteGroup& G, const NumberField& K, const Int& p) const;

    struct MetaTamePredicate {
        bool value = false;
        TheoremTag theorem = TheoremTag::MAIN_THM_III;
        Json witness = Json::object();
    };
    /* every metacyclic p-group is tamely admissible over K? */
    MetaTamePredicate all_metacyclic_tame_predicate(const NumberField& K, const Int& p) const;

    /* the closed-form criteria for quadratic/cubic/quartic/Galois/odd-degree
     * fields, when their hypotheses apply; cross-checked against decide */
    std::optional<Verdict> fast_path_verdict(const FiniteGroup& G, const NumberField& K,
                                             const Int& p) const;

    /* re-verify a verdict: re-derive it and re-check the witness payloads
     * through the lower modules */
    bool replay(const Verdict& v, const FiniteGroup& G, const NumberField& K,
                DecisionMode mode) const;

    const EngineBudgets& budgets() const { return budgets_; }

    bool liedahl_condition_cached(const NumberField& K, long e, long q) const;

  private:
    struct LiedahlSearch {
        std::optional<MetacyclicPresentation> witness;
        std::vector<MetacyclicPresentation> presentations;
    };
    LiedahlSearch liedahl_search(const FiniteGroup& G, const NumberField& K) const;

    Verdict decide_p_group(const FiniteGroup& G, const NumberField& K, const Int& p) const;
    Verdict two_group_route(const FiniteGroup& G, const NumberField& K) const;

    EngineBudgets budgets_;
    mutable std::mutex mu_;
    mutable std::map<std::tuple<std::vector<Int>, long, long>, bool> liedahl_memo_;
};

} // namespace admis

#endif
