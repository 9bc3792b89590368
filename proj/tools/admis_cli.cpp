#include "admis/corpus.hpp"
#include "admis/query.hpp"

#include "CLI11.hpp"

#include <iostream>

using namespace admis;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCorpusFailure = 1;
constexpr int kExitParseError = 2;
constexpr int kExitObstruction = 3;
constexpr int kExitStrictUndetermined = 4;

int map_error(const Error& err) {
    switch (err.code()) {
        case ErrorCode::ParseError:
        case ErrorCode::NotMonic:
        case ErrorCode::NotIrreducible:
        case ErrorCode::InconsistentPresentation: return kExitParseError;
        default: return kExitObstruction;
    }
}

struct GroupArgs {
    std::string metacyclic;
    std::vector<std::string> perms;
    std::string product;

    Json to_spec() const {
        int provided = (!metacyclic.empty()) + (!perms.empty()) + (!product.empty());
        if (provided != 1)
            throw Error(ErrorCode::ParseError,
                        "give exactly one of --metacyclic, --perm, --product");
        if (!metacyclic.empty()) return metacyclic_spec(metacyclic);
        if (!perms.empty()) return permutation_spec(perms);
        return product_spec(product);
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"admissibility of finite groups over number fields"};
    app.require_subcommand(1);

    EngineBudgets budgets;

    // field inspect
    auto* field = app.add_subcommand("field", "number field utilities");
    field->require_subcommand(1);
    auto* inspect = field->add_subcommand("inspect", "degree, discriminant, Galois flag, splitting");
    std::string poly_arg;
    std::string primes_arg;
    bool galois_flag = false;
    inspect->add_option("--poly", poly_arg, "defining polynomial, descending coefficients")
        ->required();
    inspect->add_option("--primes", primes_arg, "comma separated primes to decompose");
    inspect->add_flag("--galois", galois_flag, "include the Galois flag (always reported)");

    // decide
    auto* decide = app.add_subcommand("decide", "decide admissibility with a certificate");
    std::string decide_poly;
    GroupArgs group_args;
    std::string mode_arg = "admissible";
    bool strict = false, do_replay = false;
    decide->add_option("--poly", decide_poly, "defining polynomial, descending coefficients")
        ->required();
    decide->add_option("--metacyclic", group_args.metacyclic, "group as e,f,i,q");
    decide->add_option("--perm", group_args.perms, "group generator in cycle notation (repeatable)");
    decide->add_option("--product", group_args.product,
                       "direct product: perm:(..)|(..);metacyclic:e,f,i,q;...");
    decide->add_option("--mode", mode_arg, "admissible or tame")
        ->check(CLI::IsMember({"admissible", "tame"}));
    decide->add_flag("--strict", strict, "exit 4 on Undetermined");
    decide->add_flag("--replay", do_replay, "re-verify every witness before printing");
    decide->add_option("--budget-order", budgets.order_budget, "group order budget");
    decide->add_option("--budget-demuskin", budgets.demuskin_budget, "relation search budget");

    // corpus
    auto* corpus = app.add_subcommand("corpus", "run the bundled regression corpus");
    std::string filter;
    bool corpus_json = false;
    corpus->add_option("--filter", filter, "run only cases whose name contains this");
    corpus->add_flag("--json", corpus_json, "machine readable output");
    corpus->add_option("--budget-order", budgets.order_budget, "group order budget");
    corpus->add_option("--budget-demuskin", budgets.demuskin_budget, "relation search budget");

    CLI11_PARSE(app, argc, argv);

    try {
        if (inspect->parsed()) {
            NumberField K = NumberField::make(parse_poly_desc(poly_arg));
            Json out{{"schema", 1},
                     {"degree", K.degree()},
                     {"disc_defpoly", K.disc_defpoly().get_str()},
                     {"galois", K.is_galois()}};
            (void)galois_flag;
            if (!primes_arg.empty()) {
                Json dec = Json::object();
                std::istringstream in(primes_arg);
                std::string tok;
                while (std::getline(in, tok, ',')) {
                    Int p(tok);
                    PrimeDecomposition d = K.decompose_prime(p);
                    Json pairs = Json::array();
                    for (auto& [e, f] : d.pairs) pairs.push_back(Json::array({e, f}));
                    dec[p.get_str()] = Json{{"pairs", pairs}, {"certified", d.certified}};
                }
                out["decomposition"] = dec;
            }
            std::cout << out.dump(2) << "\n";
            return kExitOk;
        }

        if (decide->parsed()) {
            Engine engine(budgets);
            QuerySpec q;
            q.field_coeffs_desc = poly_to_desc(parse_poly_desc(decide_poly));
            q.group = group_args.to_spec();
            q.mode = mode_arg == "tame" ? DecisionMode::Tame : DecisionMode::Admissible;
            NumberField K = q.build_field();
            FiniteGroup G = q.build_group(budgets.order_budget);
            Verdict v = engine.decide(G, K, q.mode);
            Json out = verdict_to_json(v);
            out["schema"] = 1;
            bool replay_ok = false;
            if (do_replay) {
                replay_ok = engine.replay(v, G, K, q.mode);
                if (!replay_ok) {
                    std::cerr << "certificate replay failed\n";
                    return kExitCorpusFailure;
                }
            }
            out["replay"] = replay_ok;
            std::cout << out.dump(2) << "\n";
            if (strict && v.status == VerdictStatus::Undetermined) return kExitStrictUndetermined;
            return kExitOk;
        }

        if (corpus->parsed()) {
            Engine engine(budgets);
            CorpusOutcome outcome = run_corpus(engine, filter);
            if (corpus_json) {
                std::cout << outcome.report.dump(2) << "\n";
            } else {
                for (const Json& row : outcome.report["results"])
                    std::cout << (row["pass"].get<bool>() ? "pass " : "FAIL ")
                              << row["name"].get<std::string>() << ": expected "
                              << row["expected"].get<std::string>() << ", got "
                              << row["actual"].get<std::string>() << " ["
                              << row["theorem"].get<std::string>() << "]\n";
                std::cout << outcome.report["total"] << " cases, "
                          << outcome.report["failures"] << " failures\n";
            }
            return outcome.all_pass ? kExitOk : kExitCorpusFailure;
        }
    } catch (const Error& err) {
        std::cerr << err.what() << "\n";
        return map_error(err);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitObstruction;
    }
    return kExitOk;
}
