#ifndef ADMIS_CORPUS_HPP
#define ADMIS_CORPUS_HPP

#include "admis/query.hpp"

#include <string>

namespace admis {

/* bundled regression cases: the worked examples of the admissibility
 * criteria plus predicate checks; stable order */
const std::string& bundled_corpus_text();
Json bundled_corpus();

struct CorpusOutcome {
    Json report;   // per-case results, deterministic layout
    bool all_pass = false;
};

CorpusOutcome run_corpus(const Engine& engine, const std::string& filter);

} // namespace admis

#endif
