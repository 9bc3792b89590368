#include "admis/engine.hpp"

#include <algorithm>

namespace admis {

const char* status_name(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Admissible: return "Admissible";
        case VerdictStatus::NotAdmissible: return "NotAdmissible";
        case VerdictStatus::TamelyAdmissible: return "TamelyAdmissible";
        case VerdictStatus::NotTamelyAdmissible: return "NotTamelyAdmissible";
        case VerdictStatus::Undetermined: return "Undetermined";
    }
    return "";
}

const char* theorem_tag_name(TheoremTag t) {
    switch (t) {
        case TheoremTag::LIEDAHL_T30: return "LIEDAHL_T30";
        case TheoremTag::NEFTIN_T13: return "NEFTIN_T13";
        case TheoremTag::MAIN_THM_II: return "MAIN_THM_II";
        case TheoremTag::MAIN_THM_III: return "MAIN_THM_III";
        case TheoremTag::WILD_ADM: return "WILD_ADM";
        case TheoremTag::LOCAL_NO_UNITY_I: return "LOCAL_NO_UNITY_i";
        case TheoremTag::LOCAL_NO_UNITY_II: return "LOCAL_NO_UNITY_ii";
        case TheoremTag::LOCAL_NO_UNITY_III: return "LOCAL_NO_UNITY_iii";
        case TheoremTag::WILD_LOCAL_UNITY: return "WILD_LOCAL_UNITY";
        case TheoremTag::QUADRATIC_COR: return "QUADRATIC_COR";
        case TheoremTag::CUBIC_PROP: return "CUBIC_PROP";
        case TheoremTag::QUARTIC_PROP: return "QUARTIC_PROP";
        case TheoremTag::ODD_DEGREE_THM: return "ODD_DEGREE_THM";
        case TheoremTag::GALOIS_COR: return "GALOIS_COR";
        case TheoremTag::NILPOTENT_REDUCTION: return "NILPOTENT_REDUCTION";
        case TheoremTag::SYLOW_META_NECESSITY: return "SYLOW_META_NECESSITY";
        case TheoremTag::ROOTS_UNITY_OBSTRUCTION: return "ROOTS_UNITY_OBSTRUCTION";
        case TheoremTag::Q16_OBSTRUCTION: return "Q16_OBSTRUCTION";
        case TheoremTag::SD16_OBSTRUCTION: return "SD16_OBSTRUCTION";
        case TheoremTag::DIHEDRAL_GENERAL_OBSTRUCTION: return "DIHEDRAL_GENERAL_OBSTRUCTION";
        case TheoremTag::SCHACHER_METACYCLIC_NECESSITY: return "SCHACHER_METACYCLIC_NECESSITY";
        case TheoremTag::PROP_SOLVABLE: return "PROP_SOLVABLE";
        case TheoremTag::HALF_DEGREE_PROP: return "HALF_DEGREE_PROP";
        case TheoremTag::TRIVIAL_GROUP: return "TRIVIAL_GROUP";
        case TheoremTag::UNDETERMINED_SCOPE: return "UNDETERMINED_SCOPE";
    }
    return "";
}

namespace {

Json presentation_json(const MetacyclicPresentation& pres) {
    return Json{{"e", pres.e}, {"f", pres.f}, {"i", pres.i}, {"q", pres.q}};
}

Json decomposition_json(const PrimeDecomposition& dec) {
    Json pairs = Json::array();
    for (const auto& [e, f] : dec.pairs) pairs.push_back(Json::array({e, f}));
    return Json{{"p", dec.p.get_str()}, {"pairs", pairs}, {"certified", dec.certified}};
}

std::vector<Int> prime_divisors(long n) {
    std::vector<Int> ps;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            ps.emplace_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) ps.emplace_back(n);
    return ps;
}

Verdict make_verdict(VerdictStatus status, TheoremTag tag, Json witnesses,
                     std::vector<std::pair<std::string, bool>> hyps) {
    Verdict v;
    v.status = status;
    v.certificate.theorem = tag;
    v.certificate.witnesses = std::move(witnesses);
    v.certificate.hypotheses_checked = std::move(hyps);
    return v;
}

Verdict undetermined_from(const Error& err) {
    return make_verdict(VerdictStatus::Undetermined, TheoremTag::UNDETERMINED_SCOPE,
                        Json{{"blocked_by", err.what()}}, {});
}

} // namespace

Json verdict_to_json(const Verdict& v) {
    Json hyps = Json::array();
    for (const auto& [name, val] : v.certificate.hypotheses_checked)
        hyps.push_back(Json::array({name, val}));
    return Json{{"status", status_name(v.status)},
                {"theorem", theorem_tag_name(v.certificate.theorem)},
                {"witnesses", v.certificate.witnesses},
                {"hypotheses_checked", hyps}};
}

bool Engine::liedahl_condition_cached(const NumberField& K, long e, long q) const {
    long qr = e <= 1 ? 0 : ((q % e) + e) % e;
    std::tuple<std::vector<Int>, long, long> key{K.defining_poly().coeffs(), e, qr};
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = liedahl_memo_.find(key);
        if (it != liedahl_memo_.end()) return it->second;
    }
    bool result = liedahl_condition(K, e, qr);
    std::lock_guard<std::mutex> lock(mu_);
    return liedahl_memo_.try_emplace(key, result).first->second;
}

Engine::LiedahlSearch Engine::liedahl_search(const FiniteGroup& G, const NumberField& K) const {
    LiedahlSearch out;
    out.presentations = G.enumerate_metacyclic_presentations(budgets_.enum_budget);
    for (const auto& pres : out.presentations) {
        if (liedahl_condition_cached(K, pres.e, pres.q)) {
            out.witness = pres;
            break;
        }
    }
    return out;
}

Verdict Engine::tame_admissible_metacyclic_p(const FiniteGroup& G, const NumberField& K) const {
    auto p = G.p_group_prime();
    if (!p && G.order() > 1) throw Error(ErrorCode::NotPGroup, "expected a p-group");
    try {
        if (!G.is_metacyclic())
            return make_verdict(VerdictStatus::NotTamelyAdmissible, TheoremTag::SYLOW_META_NECESSITY,
                                Json{{"p", p ? *p : 1}},
                                {{"G metacyclic", false}});
        LiedahlSearch search = liedahl_search(G, K);
        if (search.witness)
            return make_verdict(VerdictStatus::TamelyAdmissible, TheoremTag::NEFTIN_T13,
                                Json{{"presentation", presentation_json(*search.witness)}},
                                {{"G metacyclic", true}, {"Liedahl presentation for K", true}});
        Json exhausted = Json::array();
        for (const auto& pres : search.presentations) exhausted.push_back(presentation_json(pres));
        return make_verdict(VerdictStatus::NotTamelyAdmissible, TheoremTag::NEFTIN_T13,
                            Json{{"exhausted", exhausted}},
                            {{"G metacyclic", true}, {"Liedahl presentation for K", false}});
    } catch (const Error& err) {
        if (err.code() == ErrorCode::OrderBudgetExceeded ||
            err.code() == ErrorCode::SearchBudgetExceeded)
            return undetermined_from(err);
        throw;
    }
}

Verdict Engine::admissible_metacyclic_odd_p(const FiniteGroup& G, const NumberField& K) const {
    auto p = G.p_group_prime();
    if (!p || *p == 2) throw Error(ErrorCode::NotPGroup, "expected an odd p-group");
    auto meta = G.is_metacyclic();
    if (!meta) throw Error(ErrorCode::NotPGroup, "expected a metacyclic group");

    try {
        PrimeDecomposition dec = K.decompose_prime(Int(*p));
        if (dec.pairs.size() >= 2)
            return make_verdict(VerdictStatus::Admissible, TheoremTag::LIEDAHL_T30,
                                Json{{"decomposition", decomposition_json(dec)}},
                                {{"p decomposes in K", true}});

        // named obstructions, checked before the general search
        int nmax = max_root_of_unity_power(K, *p);
        if (nmax >= 1 && !G.is_abelian()) {
            long bound = 1;
            for (int t = 0; t <= nmax; ++t) bound *= *p;
            if (G.order() <= bound)
                return make_verdict(
                    VerdictStatus::NotAdmissible, TheoremTag::ROOTS_UNITY_OBSTRUCTION,
                    Json{{"zeta_power", nmax}, {"order_bound", bound}},
                    {{"zeta_{p^n} in K", true},
                     {"p decomposes in K", false},
                     {"Sylow p-subgroup nonabelian of order <= p^{n+1}", true}});
        }
        if (!G.is_abelian() && G.order() == *p * *p * *p &&
            G.realizes_presentation({*p * *p, *p, 0, 1 + *p}) &&
            K.has_root(alpha_p_min_poly(*p)))
            return make_verdict(VerdictStatus::NotAdmissible,
                                TheoremTag::DIHEDRAL_GENERAL_OBSTRUCTION,
                                Json{{"alpha_p_poly", alpha_p_min_poly(*p).str()}},
                                {{"alpha_p in K", true},
                                 {"p decomposes in K", false},
                                 {"G is the nonabelian Z/p^2 : Z/p", true}});

        LiedahlSearch search = liedahl_search(G, K);
        if (search.witness)
            return make_verdict(VerdictStatus::Admissible, TheoremTag::LIEDAHL_T30,
                                Json{{"presentation", presentation_json(*search.witness)}},
                                {{"p decomposes in K", false},
                                 {"Liedahl presentation for K", true}});
        Json exhausted = Json::array();
        for (const auto& pres : search.presentations) exhausted.push_back(presentation_json(pres));
        return make_verdict(VerdictStatus::NotAdmissible, TheoremTag::LIEDAHL_T30,
                            Json{{"exhausted", exhausted}},
                            {{"p decomposes in K", false},
                             {"Liedahl presentation for K", false}});
    } catch (const Error& err) {
        if (err.code() == ErrorCode::IndexObstruction ||
            err.code() == ErrorCode::OrderBudgetExceeded ||
            err.code() == ErrorCode::SearchBudgetExceeded)
            return undetermined_from(err);
        throw;
    }
}

Engine::MetaTamePredicate Engine::all_metacyclic_tame_predicate(const NumberField& K,
                                                                const Int& p) const {
    MetaTamePredicate out;
    if (p == 2) {
        out.theorem = TheoremTag::MAIN_THM_II;
        const IntPoly sqm1({Int(1), Int(0), Int(1)});
        const IntPoly sq2({Int(-2), Int(0), Int(1)});
        const IntPoly sqm2({Int(2), Int(0), Int(1)});
        Json found = Json::array();
        if (K.has_root(sqm1)) found.push_back("sqrt(-1)");
        if (K.has_root(sq2)) found.push_back("sqrt(2)");
        if (K.has_root(sqm2)) found.push_back("sqrt(-2)");
        out.value = found.empty();
        out.witness = Json{{"intersection", found}};
        return out;
    }
    out.theorem = TheoremTag::MAIN_THM_III;
    IntPoly alpha = alpha_p_min_poly(p.get_si());
    bool contained = K.has_root(alpha);
    out.value = !contained;
    out.witness = Json{{"alpha_p_poly", alpha.str()}, {"alpha_p_in_K", contained}};
    return out;
}

Verdict Engine::wild_p_group(const FiniteGroup& G, const NumberField& K, const Int& p) const {
    if (p == 2) throw Error(ErrorCode::ParseError, "wild_p_group expects an odd prime");
    try {
        auto meta = G.is_metacyclic();

        // the decomposition question comes first: without it the local
        // root-of-unity analysis is irrelevant (and may be obstructed)
        if (!K.p_decomposes(p)) {
            if (!meta)
                return make_verdict(
                    VerdictStatus::NotAdmissible, TheoremTag::SCHACHER_METACYCLIC_NECESSITY,
                    Json{{"decomposition", decomposition_json(K.decompose_prime(p))}},
                    {{"p decomposes in K", false}, {"G metacyclic", false}});
            return admissible_metacyclic_odd_p(G, K);
        }

        // a metacyclic group over a decomposed prime is admissible outright
        if (meta)
            return make_verdict(
                VerdictStatus::Admissible, TheoremTag::LIEDAHL_T30,
                Json{{"decomposition", decomposition_json(K.decompose_prime(p))},
                     {"presentation", presentation_json(*meta)}},
                {{"p decomposes in K", true}, {"G metacyclic", true}});

        WildHypotheses hyp = wild_hypotheses(K, p);
        if (hyp.all_completions_zeta_free == TriState::True) {
            long bound = *hyp.second_local_degree + 1;
            long d = G.d_of_group();
            TheoremTag tag = TheoremTag::WILD_ADM;
            if (hyp.zeta_free_clause.rfind("(i)", 0) == 0) tag = TheoremTag::LOCAL_NO_UNITY_I;
            else if (hyp.zeta_free_clause.rfind("(ii)", 0) == 0) tag = TheoremTag::LOCAL_NO_UNITY_II;
            else if (hyp.zeta_free_clause.rfind("(iii)", 0) == 0) tag = TheoremTag::LOCAL_NO_UNITY_III;
            Json w{{"d", d},
                   {"second_local_degree", *hyp.second_local_degree},
                   {"decomposition", decomposition_json(K.decompose_prime(p))},
                   {"zeta_free_clause", hyp.zeta_free_clause}};
            std::vector<std::pair<std::string, bool>> hyps = {
                {"p decomposes in K", true},
                {"all completions free of zeta_p", true},
                {"d(G) <= [K_p2 : Q_p] + 1", d <= bound}};
            return make_verdict(d <= bound ? VerdictStatus::Admissible : VerdictStatus::NotAdmissible,
                                tag, std::move(w), std::move(hyps));
        }

        if (hyp.all_completions_zeta_free == TriState::False) {
            // zeta_p is in the completions; the theorem needs zeta_p outside K
            long ps = p.get_si();
            if (K.has_root(cyclotomic_poly(ps)))
                return make_verdict(VerdictStatus::Undetermined, TheoremTag::UNDETERMINED_SCOPE,
                                    Json{{"blocked_by", "zeta_p lies in K itself"}},
                                    {{"zeta_p in K", true}});
            long local_degree = hyp.galois_profile->first;
            int s = hyp.galois_profile->second;
            int n = static_cast<int>(local_degree) + 2;
            if (n % 2 != 0)
                throw Error(ErrorCode::SelfCheckFailed, "local degree must be even here");
            auto witness =
                G.demuskin_quotient_test({n, s}, p, budgets_.demuskin_budget, budgets_.demuskin_nodes);
            Json w{{"n", n}, {"s", s}, {"local_degree", local_degree}};
            if (witness) {
                w["tuple"] = Json(*witness);
                return make_verdict(VerdictStatus::Admissible, TheoremTag::WILD_LOCAL_UNITY,
                                    std::move(w),
                                    {{"p decomposes in K", true},
                                     {"zeta_p in K_p but not K", true},
                                     {"one-relator generators found", true}});
            }
            return make_verdict(VerdictStatus::NotAdmissible, TheoremTag::WILD_LOCAL_UNITY,
                                std::move(w),
                                {{"p decomposes in K", true},
                                 {"zeta_p in K_p but not K", true},
                                 {"one-relator generators found", false}});
        }

        return make_verdict(VerdictStatus::Undetermined, TheoremTag::UNDETERMINED_SCOPE,
                            Json{{"blocked_by", "local roots of unity unresolved for non-Galois K"}},
                            {{"K Galois", false}});
    } catch (const Error& err) {
        if (err.code() == ErrorCode::IndexObstruction ||
            err.code() == ErrorCode::SearchBudgetExceeded ||
            err.code() == ErrorCode::OrderBudgetExceeded)
            return undetermined_from(err);
        throw;
    }
}

Verdict Engine::two_group_route(const FiniteGroup& G, const NumberField& K) const {
    const Int two(2);
    try {
        bool decomposes = K.p_decomposes(two);
        auto meta = G.is_metacyclic();

        if (!decomposes) {
            if (!meta)
                return make_verdict(
                    VerdictStatus::NotAdmissible, TheoremTag::SCHACHER_METACYCLIC_NECESSITY,
                    Json{{"decomposition", decomposition_json(K.decompose_prime(two))}},
                    {{"2 decomposes in K", false}, {"G metacyclic", false}});

            int nmax = max_root_of_unity_power(K, 2);
            if (nmax >= 2 && !G.is_abelian() && G.order() <= (1L << (nmax + 1)))
                return make_verdict(
                    VerdictStatus::NotAdmissible, TheoremTag::ROOTS_UNITY_OBSTRUCTION,
                    Json{{"zeta_power", nmax}, {"order_bound", 1L << (nmax + 1)}},
                    {{"zeta_{2^n} in K", true},
                     {"2 decomposes in K", false},
                     {"Sylow 2-subgroup nonabelian of order <= 2^{n+1}", true}});

            const IntPoly sqm1({Int(1), Int(0), Int(1)});
            const IntPoly sq2({Int(-2), Int(0), Int(1)});
            const IntPoly sqm2({Int(2), Int(0), Int(1)});
            if (G.order() == 16 && G.realizes_presentation({8, 2, 4, 7}) &&
                (K.has_root(sqm1) || K.has_root(sqm2)))
                return make_verdict(VerdictStatus::NotAdmissible, TheoremTag::Q16_OBSTRUCTION,
                                    Json{{"group", "Q16"}},
                                    {{"K meets {sqrt(-1), sqrt(-2)}", true},
                                     {"2-adic valuation extends uniquely", true}});
            if (G.order() == 16 && G.realizes_presentation({8, 2, 0, 3}) && K.has_root(sq2))
                return make_verdict(VerdictStatus::NotAdmissible, TheoremTag::SD16_OBSTRUCTION,
                                    Json{{"group", "SD16"}},
                                    {{"sqrt(2) in K", true},
                                     {"2-adic valuation extends uniquely", true}});
        }

        if (meta) {
            LiedahlSearch search = liedahl_search(G, K);
            if (search.witness)
                return make_verdict(VerdictStatus::Admissible, TheoremTag::NEFTIN_T13,
                                    Json{{"presentation", presentation_json(*search.witness)}},
                                    {{"Liedahl presentation for K", true},
                                     {"tame admissibility implies admissibility", true}});
        }
        return make_verdict(
            VerdictStatus::Undetermined, TheoremTag::UNDETERMINED_SCOPE,
            Json{{"blocked_by", decomposes
                                    ? "wild 2-adic analysis is out of scope"
                                    : "no Liedahl presentation and no named obstruction at p = 2"}},
            {});
    } catch (const Error& err) {
        if (err.code() == ErrorCode::IndexObstruction ||
            err.code() == ErrorCode::OrderBudgetExceeded ||
            err.code() == ErrorCode::SearchBudgetExceeded)
            return undetermined_from(err);
        throw;
    }
}

Verdict Engine::decide_p_group(const FiniteGroup& G, const NumberField& K, const Int& p) const {
    Verdict v = (p == 2) ? two_group_route(G, K) : wild_p_group(G, K, p);
    // corollary cross-checks: a disagreement between a definite fast path
    // and the pipeline is a bug, never a verdict
    if (p != 2) {
        std::optional<Verdict> fast;
        try {
            fast = fast_path_verdict(G, K, p);
        } catch (const Error&) {
            fast = std::nullopt;
        }
        if (fast && fast->status != VerdictStatus::Undetermined &&
            v.status != VerdictStatus::Undetermined && fast->status != v.status)
            throw Error(ErrorCode::SelfCheckFailed,
                        std::string("fast path ") + theorem_tag_name(fast->certificate.theorem) +
                            " disagrees with the pipeline");
    }
    return v;
}

std::optional<Verdict> Engine::fast_path_verdict(const FiniteGroup& G, const NumberField& K,
                                                 const Int& p) const {
    if (p == 2 || G.order() == 1) return std::nullopt;
    if (!G.p_group_prime() || Int(*G.p_group_prime()) != p) return std::nullopt;
    long pl = p.get_si();
    long deg = K.degree();

    auto metacyclic_branch = [&](TheoremTag tag) -> Verdict {
        bool meta = G.is_metacyclic().has_value();
        return make_verdict(meta ? VerdictStatus::Admissible : VerdictStatus::NotAdmissible, tag,
                            Json{{"branch", "p does not decompose: admissible iff metacyclic"}},
                            {{"G metacyclic", meta}});
    };
    auto bound_branch = [&](TheoremTag tag, long bound) -> Verdict {
        long d = G.d_of_group();
        return make_verdict(d <= bound ? VerdictStatus::Admissible : VerdictStatus::NotAdmissible,
                            tag, Json{{"branch", "p decomposes"}, {"d", d}, {"bound", bound}},
                            {{"d(G) within bound", d <= bound}});
    };

    try {
        if (deg == 2) {
            // quadratic fields: d <= 2 when p decomposes, metacyclic otherwise
            if (K.p_decomposes(p)) return bound_branch(TheoremTag::QUADRATIC_COR, 2);
            return metacyclic_branch(TheoremTag::QUADRATIC_COR);
        }
        if (deg == 3 && pl >= 5) {
            if (K.p_decomposes(p)) return bound_branch(TheoremTag::CUBIC_PROP, 2);
            return metacyclic_branch(TheoremTag::CUBIC_PROP);
        }
        if (deg == 4 && pl >= 5) {
            if (K.p_decomposes(p)) {
                auto profile = local_degree_profile(K, p);
                long minldeg = profile.back().local_degree;
                return bound_branch(TheoremTag::QUARTIC_PROP, minldeg + 1);
            }
            return metacyclic_branch(TheoremTag::QUARTIC_PROP);
        }
        // Galois fields at primes away from the polynomial discriminant
        if (!mpz_divisible_p(K.disc_defpoly().get_mpz_t(), p.get_mpz_t()) && K.is_galois()) {
            if (K.p_decomposes(p)) {
                auto profile = local_degree_profile(K, p);
                return bound_branch(TheoremTag::GALOIS_COR, profile.front().f + 1);
            }
            return metacyclic_branch(TheoremTag::GALOIS_COR);
        }
        // odd-degree Galois fields, decomposed case
        if (deg % 2 == 1 && K.is_galois() && K.p_decomposes(p)) {
            auto profile = local_degree_profile(K, p);
            return bound_branch(TheoremTag::ODD_DEGREE_THM, profile.front().local_degree + 1);
        }
    } catch (const Error& err) {
        if (err.code() == ErrorCode::IndexObstruction) return std::nullopt;
        throw;
    }
    return std::nullopt;
}

Verdict Engine::decide(const FiniteGroup& G, const NumberField& K, DecisionMode mode) const {
    if (G.order() == 1)
        return make_verdict(mode == DecisionMode::Tame ? VerdictStatus::TamelyAdmissible
                                                       : VerdictStatus::Admissible,
                            TheoremTag::TRIVIAL_GROUP, Json{{"order", 1}}, {});

    std::vector<Int> primes = prime_divisors(G.order());
    bool solvable = G.is_solvable();

    if (mode == DecisionMode::Tame) {
        // necessity first: a tamely admissible group is Sylow-metacyclic
        for (const Int& p : primes) {
            FiniteGroup S = G.sylow_subgroup(p);
            if (!S.is_metacyclic())
                return make_verdict(VerdictStatus::NotTamelyAdmissible,
                                    TheoremTag::SYLOW_META_NECESSITY,
                                    Json{{"p", p.get_str()}},
                                    {{"Sylow subgroups metacyclic", false}});
        }
        if (!solvable)
            return make_verdict(VerdictStatus::Undetermined, TheoremTag::UNDETERMINED_SCOPE,
                                Json{{"blocked_by", "tame sufficiency needs a solvable group"}},
                                {{"G solvable", false}});
        Json per_prime = Json::object();
        for (const Int& p : primes) {
            FiniteGroup S = G.sylow_subgroup(p);
            try {
                LiedahlSearch search = liedahl_search(S, K);
                if (!search.witness) {
                    Json exhausted = Json::array();
                    for (const auto& pres : search.presentations)
                        exhausted.push_back(presentation_json(pres));
                    return make_verdict(VerdictStatus::NotTamelyAdmissible, TheoremTag::NEFTIN_T13,
                                        Json{{"failing_p", p.get_str()}, {"exhausted", exhausted}},
                                        {{"all Sylow subgroups have Liedahl presentations", false}});
                }
                per_prime[p.get_str()] = presentation_json(*search.witness);
            } catch (const Error& err) {
                if (err.code() == ErrorCode::OrderBudgetExceeded) return undetermined_from(err);
                throw;
            }
        }
        return make_verdict(VerdictStatus::TamelyAdmissible, TheoremTag::NEFTIN_T13,
                            Json{{"presentations", per_prime}},
                            {{"G solvable", true},
                             {"all Sylow subgroups have Liedahl presentations", true}});
    }

    // admissible mode
    if (!solvable)
        return make_verdict(VerdictStatus::Undetermined, TheoremTag::UNDETERMINED_SCOPE,
                            Json{{"blocked_by", "admissibility of non-solvable groups is open"}},
                            {{"G solvable", false}});

    if (auto p = G.p_group_prime()) return decide_p_group(G, K, Int(*p));

    if (G.is_nilpotent()) {
        // reduce to the Sylow subgroups
        Json per_prime = Json::object();
        bool any_undetermined = false;
        for (const Int& p : primes) {
            FiniteGroup S = G.sylow_subgroup(p);
            Verdict sub = decide_p_group(S, K, p);
            per_prime[p.get_str()] = verdict_to_json(sub);
            if (sub.status == VerdictStatus::NotAdmissible)
                return make_verdict(VerdictStatus::NotAdmissible, TheoremTag::NILPOTENT_REDUCTION,
                                    Json{{"failing_p", p.get_str()}, {"per_prime", per_prime}},
                                    {{"all Sylow subgroups admissible", false}});
            if (sub.status != VerdictStatus::Admissible) any_undetermined = true;
        }
        if (any_undetermined)
            return make_verdict(VerdictStatus::Undetermined, TheoremTag::NILPOTENT_REDUCTION,
                                Json{{"per_prime", per_prime}}, {});
        return make_verdict(VerdictStatus::Admissible, TheoremTag::NILPOTENT_REDUCTION,
                            Json{{"per_prime", per_prime}},
                            {{"all Sylow subgroups admissible", true}});
    }

    // solvable, not nilpotent
    try {
        // obstructions
        for (const Int& p : primes) {
            if (K.p_decomposes(p)) continue;
            FiniteGroup S = G.sylow_subgroup(p);
            if (!S.is_metacyclic())
                return make_verdict(VerdictStatus::NotAdmissible,
                                    TheoremTag::SCHACHER_METACYCLIC_NECESSITY,
                                    Json{{"p", p.get_str()}},
                                    {{"p decomposes in K", false},
                                     {"Sylow p-subgroup metacyclic", false}});
            int nmax = max_root_of_unity_power(K, p.get_si());
            if (nmax >= 1 && !S.is_abelian()) {
                long bound = 1;
                for (int t = 0; t <= nmax; ++t) bound *= p.get_si();
                if (S.order() <= bound)
                    return make_verdict(VerdictStatus::NotAdmissible,
                                        TheoremTag::ROOTS_UNITY_OBSTRUCTION,
                                        Json{{"p", p.get_str()}, {"zeta_power", nmax}},
                                        {{"zeta_{p^n} in K", true},
                                         {"p decomposes in K", false},
                                         {"Sylow p-subgroup nonabelian of order <= p^{n+1}", true}});
            }
        }

        // sufficiency: the odd-order propositions for Galois K
        if (G.order() % 2 == 1 && K.is_galois()) {
            bool prop_ok = true, half_ok = true;
            Json data = Json::object();
            for (const Int& p : primes) {
                if (!K.p_decomposes(p)) {
                    prop_ok = half_ok = false;
                    break;
                }
                auto profile = local_degree_profile(K, p);
                long ldeg = profile.front().local_degree;
                long d = G.sylow_subgroup(p).d_of_group();
                bool unram_or_deg =
                    profile.front().e == 1 || K.degree() % (p.get_si() - 1) != 0;
                if (!(unram_or_deg && d <= ldeg + 1)) prop_ok = false;
                bool zeta_free_global = !K.has_root(cyclotomic_poly(p.get_si()));
                if (!(zeta_free_global && d <= ldeg / 2 + 1)) half_ok = false;
                data[p.get_str()] = Json{{"d", d}, {"local_degree", ldeg}};
            }
            if (prop_ok)
                return make_verdict(VerdictStatus::Admissible, TheoremTag::PROP_SOLVABLE,
                                    std::move(data),
                                    {{"odd order, Galois K, per-prime bounds", true}});
            if (half_ok)
                return make_verdict(VerdictStatus::Admissible, TheoremTag::HALF_DEGREE_PROP,
                                    std::move(data),
                                    {{"odd order, Galois K, half-degree bounds", true}});
        }

        // tame sufficiency through the Sylow Liedahl searches
        Json per_prime = Json::object();
        bool tame_ok = true;
        for (const Int& p : primes) {
            FiniteGroup S = G.sylow_subgroup(p);
            if (!S.is_metacyclic()) {
                tame_ok = false;
                break;
            }
            LiedahlSearch search = liedahl_search(S, K);
            if (!search.witness) {
                tame_ok = false;
                break;
            }
            per_prime[p.get_str()] = presentation_json(*search.witness);
        }
        if (tame_ok)
            return make_verdict(VerdictStatus::Admissible, TheoremTag::NEFTIN_T13,
                                Json{{"presentations", per_prime}},
                                {{"all Sylow subgroups have Liedahl presentations", true},
                                 {"tame admissibility implies admissibility", true}});

        return make_verdict(VerdictStatus::Undetermined, TheoremTag::UNDETERMINED_SCOPE,
                            Json{{"blocked_by", "no applicable criterion for this solvable group"}},
                            {});
    } catch (const Error& err) {
        if (err.code() == ErrorCode::IndexObstruction ||
            err.code() == ErrorCode::OrderBudgetExceeded ||
            err.code() == ErrorCode::SearchBudgetExceeded)
            return undetermined_from(err);
        throw;
    }
}

bool Engine::replay(const Verdict& v, const FiniteGroup& G, const NumberField& K,
                    DecisionMode mode) const {
    // the engine is deterministic: a replay re-derives the identical verdict
    Verdict again = decide(G, K, mode);
    if (verdict_to_json(again) != verdict_to_json(v)) return false;

    // spot re-verification of directly checkable witnesses
    const Json& w = v.certificate.witnesses;
    switch (v.certificate.theorem) {
        case TheoremTag::NEFTIN_T13:
        case TheoremTag::LIEDAHL_T30: {
            if (w.contains("presentation")) {
                const Json& pj = w["presentation"];
                MetacyclicPresentation pres{pj["e"], pj["f"], pj["i"], pj["q"]};
                if (!liedahl_condition(K, pres.e, pres.q)) return false;
                if (G.p_group_prime() && !G.realizes_presentation(pres)) return false;
            }
            if (w.contains("presentations")) {
                for (const auto& [pstr, pj] : w["presentations"].items()) {
                    MetacyclicPresentation pres{pj["e"], pj["f"], pj["i"], pj["q"]};
                    if (!liedahl_condition(K, pres.e, pres.q)) return false;
                    FiniteGroup S = G.sylow_subgroup(Int(pstr));
                    if (!S.realizes_presentation(pres)) return false;
                }
            }
            return true;
        }
        case TheoremTag::WILD_LOCAL_UNITY: {
            if (!w.contains("tuple")) return true;
            std::vector<int> tuple = w["tuple"].get<std::vector<int>>();
            long p = *G.p_group_prime();
            long ps = 1;
            for (int k = 0; k < w["s"].get<int>(); ++k) ps *= p;
            int acc = G.power(tuple[0], ps);
            for (size_t j = 0; j + 1 < tuple.size(); j += 2)
                acc = G.mul(acc, G.commutator(tuple[j], tuple[j + 1]));
            if (acc != G.identity()) return false;
            return static_cast<long>(G.subgroup_closure(tuple).size()) == G.order();
        }
        default: return true;
    }
}

} // namespace admis
