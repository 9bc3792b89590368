#include "admis/corpus.hpp"

namespace admis {

/* Field polynomials are descending-coefficient lists. Decide cases carry an
 * expected status (and usually the applied criterion); meta_tame cases check
 * the every-metacyclic-p-group predicate. */
static const char* kCorpusJson = R"CORPUS(
[
  {"name": "d8-over-Q-tame", "kind": "decide", "mode": "tame",
   "field": [1,-1], "group": {"metacyclic": {"e":4,"f":2,"i":0,"q":3}},
   "expected": "TamelyAdmissible", "theorem": "NEFTIN_T13"},
  {"name": "d8-over-Qi-tame", "kind": "decide", "mode": "tame",
   "field": [1,0,1], "group": {"metacyclic": {"e":4,"f":2,"i":0,"q":3}},
   "expected": "NotTamelyAdmissible", "theorem": "NEFTIN_T13"},
  {"name": "d8-over-Qi-admissible", "kind": "decide", "mode": "admissible",
   "field": [1,0,1], "group": {"metacyclic": {"e":4,"f":2,"i":0,"q":3}},
   "expected": "NotAdmissible", "theorem": "ROOTS_UNITY_OBSTRUCTION"},
  {"name": "d8-over-Q-admissible", "kind": "decide", "mode": "admissible",
   "field": [1,-1], "group": {"metacyclic": {"e":4,"f":2,"i":0,"q":3}},
   "expected": "Admissible", "theorem": "NEFTIN_T13"},
  {"name": "q16-over-Qi", "kind": "decide", "mode": "admissible",
   "field": [1,0,1], "group": {"metacyclic": {"e":8,"f":2,"i":4,"q":7}},
   "expected": "NotAdmissible", "theorem": "Q16_OBSTRUCTION"},
  {"name": "q16-over-Qsqrt-m2", "kind": "decide", "mode": "admissible",
   "field": [1,0,2], "group": {"metacyclic": {"e":8,"f":2,"i":4,"q":7}},
   "expected": "NotAdmissible", "theorem": "Q16_OBSTRUCTION"},
  {"name": "sd16-over-Qsqrt2", "kind": "decide", "mode": "admissible",
   "field": [1,0,-2], "group": {"metacyclic": {"e":8,"f":2,"i":0,"q":3}},
   "expected": "NotAdmissible", "theorem": "SD16_OBSTRUCTION"},
  {"name": "q16-over-Q-tame", "kind": "decide", "mode": "tame",
   "field": [1,-1], "group": {"metacyclic": {"e":8,"f":2,"i":4,"q":7}},
   "expected": "TamelyAdmissible", "theorem": "NEFTIN_T13"},
  {"name": "sd16-over-Q-tame", "kind": "decide", "mode": "tame",
   "field": [1,-1], "group": {"metacyclic": {"e":8,"f":2,"i":0,"q":3}},
   "expected": "TamelyAdmissible", "theorem": "NEFTIN_T13"},
  {"name": "q16-over-Qsqrt5", "kind": "decide", "mode": "admissible",
   "field": [1,0,-5], "group": {"metacyclic": {"e":8,"f":2,"i":4,"q":7}},
   "expected": "Admissible", "theorem": "NEFTIN_T13"},
  {"name": "q16-over-Qzeta5", "kind": "decide", "mode": "admissible",
   "field": [1,1,1,1,1], "group": {"metacyclic": {"e":8,"f":2,"i":4,"q":7}},
   "expected": "Admissible", "theorem": "NEFTIN_T13"},
  {"name": "z9z3-over-Qzeta9", "kind": "decide", "mode": "admissible",
   "field": [1,0,0,1,0,0,1], "group": {"metacyclic": {"e":9,"f":3,"i":0,"q":4}},
   "expected": "NotAdmissible", "theorem": "ROOTS_UNITY_OBSTRUCTION"},
  {"name": "z9z3-over-cubic", "kind": "decide", "mode": "admissible",
   "field": [1,0,-3,1], "group": {"metacyclic": {"e":9,"f":3,"i":0,"q":4}},
   "expected": "NotAdmissible", "theorem": "DIHEDRAL_GENERAL_OBSTRUCTION"},
  {"name": "z9z3-over-cubic-tame", "kind": "decide", "mode": "tame",
   "field": [1,0,-3,1], "group": {"metacyclic": {"e":9,"f":3,"i":0,"q":4}},
   "expected": "NotTamelyAdmissible"},
  {"name": "z9z3-over-Qsqrt7", "kind": "decide", "mode": "admissible",
   "field": [1,0,-7], "group": {"metacyclic": {"e":9,"f":3,"i":0,"q":4}},
   "expected": "Admissible", "theorem": "LIEDAHL_T30"},
  {"name": "z9z3-over-Q-tame", "kind": "decide", "mode": "tame",
   "field": [1,-1], "group": {"metacyclic": {"e":9,"f":3,"i":0,"q":4}},
   "expected": "TamelyAdmissible", "theorem": "NEFTIN_T13"},
  {"name": "z9z3-over-Qsqrt-m3", "kind": "decide", "mode": "admissible",
   "field": [1,0,3], "group": {"metacyclic": {"e":9,"f":3,"i":0,"q":4}},
   "expected": "Admissible", "theorem": "LIEDAHL_T30"},
  {"name": "elem27-over-Qsqrt5", "kind": "decide", "mode": "admissible",
   "field": [1,0,-5],
   "group": {"product": [{"permutations": [[[1,2,3]]]}, {"permutations": [[[1,2,3]]]},
                          {"permutations": [[[1,2,3]]]}]},
   "expected": "NotAdmissible", "theorem": "SCHACHER_METACYCLIC_NECESSITY"},
  {"name": "elem27-over-Qsqrt7", "kind": "decide", "mode": "admissible",
   "field": [1,0,-7],
   "group": {"product": [{"permutations": [[[1,2,3]]]}, {"permutations": [[[1,2,3]]]},
                          {"permutations": [[[1,2,3]]]}]},
   "expected": "NotAdmissible", "theorem": "LOCAL_NO_UNITY_i"},
  {"name": "elem9-over-Qsqrt7", "kind": "decide", "mode": "admissible",
   "field": [1,0,-7],
   "group": {"product": [{"permutations": [[[1,2,3]]]}, {"permutations": [[[1,2,3]]]}]},
   "expected": "Admissible", "theorem": "LIEDAHL_T30"},
  {"name": "z11sq-over-Qi", "kind": "decide", "mode": "admissible",
   "field": [1,0,1], "group": {"metacyclic": {"e":11,"f":11,"i":0,"q":1}},
   "expected": "Admissible", "theorem": "LIEDAHL_T30"},
  {"name": "z11sq-over-Qsqrt5", "kind": "decide", "mode": "admissible",
   "field": [1,0,-5], "group": {"metacyclic": {"e":11,"f":11,"i":0,"q":1}},
   "expected": "Admissible", "theorem": "LIEDAHL_T30"},
  {"name": "c3-over-Qsqrt7", "kind": "decide", "mode": "admissible",
   "field": [1,0,-7], "group": {"metacyclic": {"e":3,"f":1,"i":0,"q":1}},
   "expected": "Admissible"},
  {"name": "c27-over-Qi", "kind": "decide", "mode": "admissible",
   "field": [1,0,1], "group": {"metacyclic": {"e":27,"f":1,"i":0,"q":1}},
   "expected": "Admissible", "theorem": "LIEDAHL_T30"},
  {"name": "c9-over-Qzeta9", "kind": "decide", "mode": "admissible",
   "field": [1,0,0,1,0,0,1], "group": {"metacyclic": {"e":9,"f":1,"i":0,"q":1}},
   "expected": "Admissible", "theorem": "LIEDAHL_T30"},
  {"name": "d8xc3-over-Q-tame", "kind": "decide", "mode": "tame",
   "field": [1,-1],
   "group": {"product": [{"metacyclic": {"e":4,"f":2,"i":0,"q":3}},
                          {"permutations": [[[1,2,3]]]}]},
   "expected": "TamelyAdmissible", "theorem": "NEFTIN_T13"},
  {"name": "d8xc3-over-Q-admissible", "kind": "decide", "mode": "admissible",
   "field": [1,-1],
   "group": {"product": [{"metacyclic": {"e":4,"f":2,"i":0,"q":3}},
                          {"permutations": [[[1,2,3]]]}]},
   "expected": "Admissible", "theorem": "NILPOTENT_REDUCTION"},
  {"name": "d8xc3-over-Qi-admissible", "kind": "decide", "mode": "admissible",
   "field": [1,0,1],
   "group": {"product": [{"metacyclic": {"e":4,"f":2,"i":0,"q":3}},
                          {"permutations": [[[1,2,3]]]}]},
   "expected": "NotAdmissible", "theorem": "NILPOTENT_REDUCTION"},
  {"name": "c6-over-Qi", "kind": "decide", "mode": "admissible",
   "field": [1,0,1],
   "group": {"product": [{"permutations": [[[1,2]]]}, {"permutations": [[[1,2,3]]]}]},
   "expected": "Admissible", "theorem": "NILPOTENT_REDUCTION"},
  {"name": "s3-over-Q-tame", "kind": "decide", "mode": "tame",
   "field": [1,-1], "group": {"permutations": [[[1,2,3]], [[1,2]]]},
   "expected": "TamelyAdmissible", "theorem": "NEFTIN_T13"},
  {"name": "s3-over-Q-admissible", "kind": "decide", "mode": "admissible",
   "field": [1,-1], "group": {"permutations": [[[1,2,3]], [[1,2]]]},
   "expected": "Admissible", "theorem": "NEFTIN_T13"},
  {"name": "s3-over-Qi", "kind": "decide", "mode": "admissible",
   "field": [1,0,1], "group": {"permutations": [[[1,2,3]], [[1,2]]]},
   "expected": "Admissible", "theorem": "NEFTIN_T13"},
  {"name": "s4-over-Q-tame", "kind": "decide", "mode": "tame",
   "field": [1,-1], "group": {"permutations": [[[1,2,3,4]], [[1,2]]]},
   "expected": "TamelyAdmissible", "theorem": "NEFTIN_T13"},
  {"name": "a5-over-Q-tame", "kind": "decide", "mode": "tame",
   "field": [1,-1], "group": {"permutations": [[[1,2,3,4,5]], [[1,2,3]]]},
   "expected": "Undetermined"},
  {"name": "a5-over-Q-admissible", "kind": "decide", "mode": "admissible",
   "field": [1,-1], "group": {"permutations": [[[1,2,3,4,5]], [[1,2,3]]]},
   "expected": "Undetermined"},
  {"name": "elem8-over-Qsqrt-m7", "kind": "decide", "mode": "admissible",
   "field": [1,0,7],
   "group": {"product": [{"permutations": [[[1,2]]]}, {"permutations": [[[1,2]]]},
                          {"permutations": [[[1,2]]]}]},
   "expected": "Undetermined"},
  {"name": "h27-over-Qsqrt7", "kind": "decide", "mode": "admissible",
   "field": [1,0,-7],
   "group": {"permutations": [[[1,4,7],[2,5,8],[3,6,9]], [[4,5,6],[7,9,8]]]},
   "expected": "Admissible", "theorem": "LOCAL_NO_UNITY_i"},
  {"name": "h27-over-Qsqrt-m3", "kind": "decide", "mode": "admissible",
   "field": [1,0,3],
   "group": {"permutations": [[[1,4,7],[2,5,8],[3,6,9]], [[4,5,6],[7,9,8]]]},
   "expected": "NotAdmissible", "theorem": "SCHACHER_METACYCLIC_NECESSITY"},
  {"name": "h27xc3-over-Qsqrt7", "kind": "decide", "mode": "admissible",
   "field": [1,0,-7],
   "group": {"product": [{"permutations": [[[1,4,7],[2,5,8],[3,6,9]], [[4,5,6],[7,9,8]]]},
                          {"permutations": [[[1,2,3]]]}]},
   "expected": "NotAdmissible", "theorem": "LOCAL_NO_UNITY_i"},
  {"name": "meta-tame-Q-p2", "kind": "meta_tame", "field": [1,-1], "p": 2, "expected": "true"},
  {"name": "meta-tame-Q-p3", "kind": "meta_tame", "field": [1,-1], "p": 3, "expected": "true"},
  {"name": "meta-tame-Qsqrt5-p2", "kind": "meta_tame", "field": [1,0,-5], "p": 2, "expected": "true"},
  {"name": "meta-tame-Qsqrt5-p3", "kind": "meta_tame", "field": [1,0,-5], "p": 3, "expected": "true"},
  {"name": "meta-tame-Qzeta5-p2", "kind": "meta_tame", "field": [1,1,1,1,1], "p": 2, "expected": "true"},
  {"name": "meta-tame-Qzeta5-p3", "kind": "meta_tame", "field": [1,1,1,1,1], "p": 3, "expected": "true"},
  {"name": "meta-tame-Qzeta6-p2", "kind": "meta_tame", "field": [1,-1,1], "p": 2, "expected": "true"},
  {"name": "meta-tame-Qzeta6-p3", "kind": "meta_tame", "field": [1,-1,1], "p": 3, "expected": "true"},
  {"name": "meta-tame-Qsqrt2-p2", "kind": "meta_tame", "field": [1,0,-2], "p": 2, "expected": "false"},
  {"name": "meta-tame-Qi-p2", "kind": "meta_tame", "field": [1,0,1], "p": 2, "expected": "false"},
  {"name": "meta-tame-Qzeta9-p3", "kind": "meta_tame", "field": [1,0,0,1,0,0,1], "p": 3, "expected": "false"},
  {"name": "meta-tame-cubic-p3", "kind": "meta_tame", "field": [1,0,-3,1], "p": 3, "expected": "false"}
]
)CORPUS";

const std::string& bundled_corpus_text() {
    static const std::string text(kCorpusJson);
    return text;
}

Json bundled_corpus() { return Json::parse(bundled_corpus_text()); }

CorpusOutcome run_corpus(const Engine& engine, const std::string& filter) {
    Json cases = bundled_corpus();
    Json results = Json::array();
    long total = 0, failures = 0;
    for (const Json& c : cases) {
        std::string name = c.at("name");
        if (!filter.empty() && name.find(filter) == std::string::npos) continue;
        ++total;
        Json row{{"name", name}, {"expected", c.at("expected")}};
        std::string actual;
        std::string theorem;
        try {
            QuerySpec q;
            for (const Json& cf : c.at("field")) q.field_coeffs_desc.emplace_back(cf.get<long>());
            NumberField K = q.build_field();
            if (c.at("kind") == "decide") {
                q.group = c.at("group");
                q.mode = c.at("mode") == "tame" ? DecisionMode::Tame : DecisionMode::Admissible;
                Verdict v = engine.decide(q.build_group(engine.budgets().order_budget), K, q.mode);
                actual = status_name(v.status);
                theorem = theorem_tag_name(v.certificate.theorem);
            } else if (c.at("kind") == "meta_tame") {
                auto pred = engine.all_metacyclic_tame_predicate(K, Int(c.at("p").get<long>()));
                actual = pred.value ? "true" : "false";
                theorem = theorem_tag_name(pred.theorem);
            } else {
                throw Error(ErrorCode::ParseError, "unknown corpus case kind");
            }
        } catch (const Error& err) {
            actual = std::string("error: ") + err.what();
        }
        bool pass = actual == c.at("expected").get<std::string>();
        if (pass && c.contains("theorem")) pass = theorem == c.at("theorem").get<std::string>();
        row["actual"] = actual;
        row["theorem"] = theorem;
        row["pass"] = pass;
        if (!pass) ++failures;
        results.push_back(std::move(row));
    }
    CorpusOutcome out;
    out.report = Json{{"schema", 1},
                      {"total", total},
                      {"failures", failures},
                      {"results", results}};
    out.all_pass = failures == 0 && total > 0;
    return out;
}

} // namespace admis
