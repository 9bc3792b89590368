/* Acceptance suite: each criterion prints exactly one pass/fail line and the
 * process exits nonzero when any of them fails. */
#include "admis/corpus.hpp"
#include "admis/engine.hpp"

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <vector>

using namespace admis;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& label, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& ex) {
        note = std::string(" (") + ex.what() + ")";
    }
    std::printf("criterion %2d %s: %s%s\n", number, ok ? "PASS" : "FAIL", label.c_str(),
                note.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

IntPoly mk(std::initializer_list<long> coeffs) {
    std::vector<Int> c;
    for (long v : coeffs) c.emplace_back(v);
    return IntPoly(std::move(c));
}

NumberField QQ() { return NumberField::make(mk({-1, 1})); }
NumberField quad(long d) { return NumberField::make(mk({-d, 0, 1})); }

FiniteGroup cyclic(long n) { return FiniteGroup::from_metacyclic({n, 1, 0, n == 1 ? 0 : 1}); }
FiniteGroup product(const std::vector<FiniteGroup>& parts) {
    FiniteGroup acc = FiniteGroup::trivial();
    for (const auto& g : parts) acc = FiniteGroup::direct_product(acc, g);
    return acc;
}
FiniteGroup elementary(long p, int rank) {
    std::vector<FiniteGroup> parts(static_cast<size_t>(rank), cyclic(p));
    return product(parts);
}
FiniteGroup heisenberg27() {
    // faithful action on F_3^2: x shifts u, y shears by u
    std::vector<int> x(9), y(9);
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v) {
            x[static_cast<size_t>(3 * u + v)] = 3 * ((u + 1) % 3) + v;
            y[static_cast<size_t>(3 * u + v)] = 3 * u + (v + u) % 3;
        }
    return FiniteGroup::from_permutations({x, y});
}

long brute_force_min_gens(const FiniteGroup& G) {
    if (G.order() == 1) return 0;
    for (long k = 1;; ++k) {
        std::vector<int> tuple;
        std::function<bool(int)> rec = [&](int start) -> bool {
            if (static_cast<long>(tuple.size()) == k)
                return static_cast<long>(G.subgroup_closure(tuple).size()) == G.order();
            std::vector<int> cl = G.subgroup_closure(tuple);
            for (int g = start; g < G.order(); ++g) {
                if (std::binary_search(cl.begin(), cl.end(), g)) continue;
                tuple.push_back(g);
                if (rec(g + 1)) return true;
                tuple.pop_back();
            }
            return false;
        };
        if (rec(0)) return k;
    }
}

bool relation_holds(const FiniteGroup& G, const std::vector<int>& w, long p, int s) {
    long ps = 1;
    for (int i = 0; i < s; ++i) ps *= p;
    int acc = G.power(w[0], ps);
    for (size_t j = 0; j + 1 < w.size(); j += 2)
        acc = G.mul(acc, G.commutator(w[j], w[j + 1]));
    if (acc != G.identity()) return false;
    return static_cast<long>(G.subgroup_closure(w).size()) == G.order();
}

std::string run_cli(const std::string& args) {
    const char* cli = std::getenv("ADMIS_CLI");
    if (!cli) return {};
    std::string cmd = std::string(cli) + " " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {};
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
    pclose(pipe);
    return out;
}

} // namespace

int main() {
    Engine engine;

    criterion(1, "D8 over Q(i) and Q in tame mode", [&] {
        FiniteGroup D8 = FiniteGroup::from_metacyclic({4, 2, 0, 3});
        NumberField Qi = NumberField::make(mk({1, 0, 1}));
        return engine.decide(D8, Qi, DecisionMode::Tame).status ==
                   VerdictStatus::NotTamelyAdmissible &&
               engine.decide(D8, QQ(), DecisionMode::Tame).status ==
                   VerdictStatus::TamelyAdmissible;
    });

    criterion(2, "Z/9:Z/3 over Q(zeta9), the cubic field, and Q(sqrt 7)", [&] {
        FiniteGroup G = FiniteGroup::from_metacyclic({9, 3, 0, 4});
        NumberField C9 = NumberField::make(cyclotomic_poly(9));
        NumberField cubic = NumberField::make(mk({1, -3, 0, 1}));
        return engine.decide(G, C9, DecisionMode::Admissible).status ==
                   VerdictStatus::NotAdmissible &&
               engine.decide(G, cubic, DecisionMode::Admissible).status ==
                   VerdictStatus::NotAdmissible &&
               engine.decide(G, quad(7), DecisionMode::Admissible).status ==
                   VerdictStatus::Admissible;
    });

    criterion(3, "Q16 and SD16 obstructions; all tame over Q", [&] {
        FiniteGroup Q16 = FiniteGroup::from_metacyclic({8, 2, 4, 7});
        FiniteGroup SD16 = FiniteGroup::from_metacyclic({8, 2, 0, 3});
        FiniteGroup D8 = FiniteGroup::from_metacyclic({4, 2, 0, 3});
        NumberField Qi = NumberField::make(mk({1, 0, 1}));
        bool obstructions =
            engine.decide(Q16, Qi, DecisionMode::Admissible).status ==
                VerdictStatus::NotAdmissible &&
            engine.decide(Q16, quad(-2), DecisionMode::Admissible).status ==
                VerdictStatus::NotAdmissible &&
            engine.decide(SD16, quad(2), DecisionMode::Admissible).status ==
                VerdictStatus::NotAdmissible;
        bool tame_over_q = true;
        for (const auto& G : {Q16, SD16, D8})
            tame_over_q = tame_over_q && engine.decide(G, QQ(), DecisionMode::Tame).status ==
                                             VerdictStatus::TamelyAdmissible;
        return obstructions && tame_over_q;
    });

    criterion(4, "every-metacyclic-p-group predicate on the named fields", [&] {
        std::vector<NumberField> yes = {QQ(), quad(5), NumberField::make(cyclotomic_poly(5)),
                                        NumberField::make(cyclotomic_poly(6))};
        for (const auto& K : yes)
            for (long p : {2L, 3L})
                if (!engine.all_metacyclic_tame_predicate(K, Int(p)).value) return false;
        if (engine.all_metacyclic_tame_predicate(quad(2), Int(2)).value) return false;
        if (engine.all_metacyclic_tame_predicate(NumberField::make(mk({1, 0, 1})), Int(2)).value)
            return false;
        if (engine.all_metacyclic_tame_predicate(NumberField::make(cyclotomic_poly(9)), Int(3)).value)
            return false;
        if (engine.all_metacyclic_tame_predicate(NumberField::make(mk({1, -3, 0, 1})), Int(3)).value)
            return false;
        return true;
    });

    criterion(5, "quadratic sweep agrees with the closed-form criterion", [&] {
        std::vector<NumberField> fields;
        for (long d : {-1L, 2L, -2L, 3L, -3L, 5L, -5L, 7L, -7L}) fields.push_back(quad(d));

        std::vector<FiniteGroup> groups;
        groups.push_back(cyclic(1));
        groups.push_back(cyclic(3));
        groups.push_back(cyclic(9));
        groups.push_back(cyclic(27));
        groups.push_back(cyclic(81));
        groups.push_back(elementary(3, 2));
        groups.push_back(product({cyclic(9), cyclic(3)}));
        groups.push_back(product({cyclic(27), cyclic(3)}));
        groups.push_back(product({cyclic(9), cyclic(9)}));
        groups.push_back(elementary(3, 3));
        groups.push_back(product({cyclic(9), cyclic(3), cyclic(3)}));
        groups.push_back(FiniteGroup::from_metacyclic({9, 3, 0, 4}));
        groups.push_back(FiniteGroup::from_metacyclic({9, 3, 0, 7}));
        groups.push_back(FiniteGroup::from_metacyclic({9, 3, 3, 4}));
        groups.push_back(FiniteGroup::from_metacyclic({9, 3, 6, 4}));
        groups.push_back(heisenberg27());
        groups.push_back(product({FiniteGroup::from_metacyclic({9, 3, 0, 4}), cyclic(3)}));
        groups.push_back(product({heisenberg27(), cyclic(3)}));
        groups.push_back(FiniteGroup::from_metacyclic({27, 3, 0, 10}));
        groups.push_back(FiniteGroup::from_metacyclic({27, 3, 9, 10}));
        groups.push_back(FiniteGroup::from_metacyclic({27, 3, 18, 10}));
        groups.push_back(FiniteGroup::from_metacyclic({27, 3, 0, 19}));
        groups.push_back(FiniteGroup::from_metacyclic({9, 9, 0, 4}));
        groups.push_back(FiniteGroup::from_metacyclic({9, 9, 3, 4}));
        groups.push_back(FiniteGroup::from_metacyclic({9, 9, 0, 7}));
        groups.push_back(FiniteGroup::from_metacyclic({81, 1, 0, 1}));
        groups.push_back(FiniteGroup::from_metacyclic({3, 27, 0, 1}));
        if (groups.size() != 27) return false;

        const Int three(3);
        for (const auto& K : fields) {
            bool split = K.p_decomposes(three);
            for (const auto& G : groups) {
                Verdict v = engine.decide(G, K, DecisionMode::Admissible);
                if (v.status == VerdictStatus::Undetermined) return false;
                bool formula;
                if (G.order() == 1)
                    formula = true;
                else if (split)
                    formula = G.d_of_group() <= 2;
                else
                    formula = G.is_metacyclic().has_value();
                if ((v.status == VerdictStatus::Admissible) != formula) return false;
            }
        }
        return true;
    });

    criterion(6, "Gaussian periods: the cubic period and alpha_p ramification", [&] {
        if (gaussian_period_min_poly(9, {1, 8}) != mk({1, -3, 0, 1})) return false;
        for (long p : {3L, 5L, 7L}) {
            IntPoly a = alpha_p_min_poly(p);
            if (a.degree() != p) return false;
            if (!is_irreducible_over_Q(a)) return false;
            auto pairs = NumberField::make(a).decompose_prime(Int(p)).pairs;
            if (pairs.size() != 1 || pairs[0] != std::pair<long, long>{p, 1}) return false;
        }
        return true;
    });

    criterion(7, "d(G) equals brute force on the order <= 128 corpus", [&] {
        std::vector<FiniteGroup> corpus;
        for (long n : {2L, 4L, 8L, 16L, 32L, 64L, 128L, 3L, 9L, 27L, 81L, 5L, 25L, 125L})
            corpus.push_back(cyclic(n));
        corpus.push_back(elementary(2, 2));
        corpus.push_back(elementary(2, 3));
        corpus.push_back(elementary(2, 4));
        corpus.push_back(elementary(3, 2));
        corpus.push_back(elementary(3, 3));
        corpus.push_back(elementary(5, 2));
        corpus.push_back(product({cyclic(4), cyclic(2)}));
        corpus.push_back(product({cyclic(8), cyclic(4), cyclic(2)}));
        corpus.push_back(product({cyclic(16), cyclic(8)}));
        corpus.push_back(product({cyclic(9), cyclic(3)}));
        corpus.push_back(product({cyclic(27), cyclic(3)}));
        corpus.push_back(product({cyclic(25), cyclic(5)}));
        for (long m : {4L, 8L, 16L, 32L, 64L})
            corpus.push_back(FiniteGroup::from_metacyclic({m, 2, 0, m - 1})); // dihedral
        corpus.push_back(FiniteGroup::from_metacyclic({4, 2, 2, 3}));   // Q8
        corpus.push_back(FiniteGroup::from_metacyclic({8, 2, 4, 7}));   // Q16
        corpus.push_back(FiniteGroup::from_metacyclic({16, 2, 8, 15})); // Q32
        corpus.push_back(FiniteGroup::from_metacyclic({8, 2, 0, 3}));   // SD16
        corpus.push_back(FiniteGroup::from_metacyclic({16, 2, 0, 7}));  // SD32
        corpus.push_back(FiniteGroup::from_metacyclic({8, 2, 0, 5}));   // M16
        corpus.push_back(FiniteGroup::from_metacyclic({9, 3, 0, 4}));   // Z9:Z3
        corpus.push_back(FiniteGroup::from_metacyclic({25, 5, 0, 6}));  // Z25:Z5
        corpus.push_back(heisenberg27());
        for (const auto& G : corpus) {
            if (G.order() > 128) return false;
            if (G.d_of_group() != brute_force_min_gens(G)) return false;
        }
        return true;
    });

    criterion(8, "free-quotient test equals d(G) <= n for order <= 243, n in {2,4}", [&] {
        std::vector<FiniteGroup> corpus;
        for (long n : {1L, 3L, 9L, 27L, 81L, 243L}) corpus.push_back(cyclic(n));
        for (int r = 2; r <= 5; ++r) corpus.push_back(elementary(3, r));
        corpus.push_back(product({cyclic(9), cyclic(3)}));
        corpus.push_back(product({cyclic(27), cyclic(9)}));
        corpus.push_back(product({cyclic(9), cyclic(9), cyclic(3)}));
        corpus.push_back(product({cyclic(9), cyclic(3), cyclic(3)}));
        corpus.push_back(FiniteGroup::from_metacyclic({9, 3, 0, 4}));
        corpus.push_back(FiniteGroup::from_metacyclic({27, 3, 0, 10}));
        corpus.push_back(FiniteGroup::from_metacyclic({27, 9, 0, 4}));
        corpus.push_back(FiniteGroup::from_metacyclic({9, 9, 0, 4}));
        corpus.push_back(heisenberg27());
        corpus.push_back(product({heisenberg27(), cyclic(3)}));
        corpus.push_back(product({heisenberg27(), cyclic(9)}));
        corpus.push_back(product({heisenberg27(), cyclic(3), cyclic(3)}));
        corpus.push_back(product({FiniteGroup::from_metacyclic({9, 3, 0, 4}), cyclic(3)}));
        for (long n : {2L, 4L, 8L, 16L, 32L, 64L, 128L}) corpus.push_back(cyclic(n));
        corpus.push_back(elementary(2, 4));
        corpus.push_back(elementary(2, 5));
        corpus.push_back(FiniteGroup::from_metacyclic({8, 2, 4, 7}));
        corpus.push_back(FiniteGroup::from_metacyclic({16, 2, 0, 7}));
        for (const auto& G : corpus) {
            if (G.order() > 243) return false;
            long p = G.order() == 1 ? 3 : *G.p_group_prime();
            for (int n : {2, 4}) {
                auto w = G.demuskin_quotient_test({n, std::nullopt}, Int(p));
                bool expect = G.order() == 1 || G.d_of_group() <= n;
                if (w.has_value() != expect) return false;
                if (w && static_cast<long>(G.subgroup_closure(*w).size()) != G.order())
                    return false;
            }
        }
        return true;
    });

    criterion(9, "one-relator positives and negatives", [&] {
        // elementary abelian rank n at (n, s >= 1)
        for (int s : {1, 2}) {
            FiniteGroup G = elementary(3, 4);
            auto w = G.demuskin_quotient_test({4, s}, Int(3));
            if (!w || !relation_holds(G, *w, 3, s)) return false;
        }
        // rank n+1 fails at n
        if (elementary(3, 5).demuskin_quotient_test({4, 1}, Int(3)).has_value()) return false;
        if (elementary(2, 5).demuskin_quotient_test({4, 1}, Int(2)).has_value()) return false;
        // every metacyclic corpus group passes at n = 4, s = 1
        std::vector<FiniteGroup> metas = {
            cyclic(81),
            FiniteGroup::from_metacyclic({9, 3, 0, 4}),
            FiniteGroup::from_metacyclic({27, 3, 0, 10}),
            FiniteGroup::from_metacyclic({9, 9, 0, 4}),
            FiniteGroup::from_metacyclic({4, 2, 0, 3}),
            FiniteGroup::from_metacyclic({8, 2, 4, 7}),
            FiniteGroup::from_metacyclic({8, 2, 0, 3}),
            FiniteGroup::from_metacyclic({16, 2, 0, 7}),
            product({cyclic(9), cyclic(3)}),
        };
        for (const auto& G : metas) {
            long p = *G.p_group_prime();
            auto w = G.demuskin_quotient_test({4, 1}, Int(p));
            if (!w || !relation_holds(G, *w, p, 1)) return false;
        }
        return true;
    });

    criterion(10, "corpus --json output is byte-identical across runs", [&] {
        std::string a = run_cli("corpus --json");
        std::string b = run_cli("corpus --json");
        if (!a.empty() || !b.empty()) {
            if (a != b || a.empty()) return false;
        } else {
            // CLI binary not provided: compare library-level reports
            a = run_corpus(engine, "").report.dump(2);
            b = run_corpus(engine, "").report.dump(2);
            if (a != b) return false;
        }
        // and the corpus itself must pass
        return run_corpus(engine, "").all_pass;
    });

    std::printf("%s: %d criterion failure%s\n", g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
                g_failures, g_failures == 1 ? "" : "s");
    return g_failures == 0 ? 0 : 1;
}
