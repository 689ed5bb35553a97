#pragma once

#include <vector>

#include "montee/corpus_io.hpp"
#include "montee/lexicon.hpp"

namespace montee::synthetic {

// Small built-in lexicon covering the common trigger classes; enough to
// exercise every tag category on generated corpora.
TriggerLexicon default_lexicon();

// Deterministic synthetic corpus: same (n_docs, sentences_per_doc, seed)
// always yields the same documents.
std::vector<ParsedDocument> make_corpus(int n_docs, int sentences_per_doc,
                                        unsigned seed);

}  // namespace montee::synthetic
