// Benchmark: serial reference vs OpenMP pipeline on a synthetic corpus.
//
//   montee_bench [n_docs] [sentences_per_doc] [workers]

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "montee/pipeline.hpp"
#include "montee/synthetic.hpp"

int main(int argc, char** argv) {
  const int n_docs = argc > 1 ? std::atoi(argv[1]) : 2000;
  const int sentences = argc > 2 ? std::atoi(argv[2]) : 5;
  const int workers = argc > 3 ? std::atoi(argv[3]) : 4;

  auto lex = montee::synthetic::default_lexicon();
  auto docs = montee::synthetic::make_corpus(n_docs, sentences, /*seed=*/42);

  montee::PipelineOptions opts;
  opts.strip_modifiers = true;
  opts.certainty = true;

  using clock = std::chrono::steady_clock;

  auto t0 = clock::now();
  auto serial = montee::process_corpus_serial(docs, lex, opts);
  auto t1 = clock::now();
  opts.workers = workers;
  auto parallel = montee::process_corpus_parallel(docs, lex, opts);
  auto t2 = clock::now();

  auto ms = [](auto a, auto b) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(b - a).count();
  };
  const long long total_sentences = static_cast<long long>(n_docs) * sentences;
  std::cout << "documents: " << n_docs << ", sentences: " << total_sentences
            << ", relations: " << serial.size() << "\n";
  std::cout << "serial reference: " << ms(t0, t1) << " ms\n";
  std::cout << "parallel (workers=" << workers << "): " << ms(t1, t2) << " ms\n";
  if (serial != parallel) {
    std::cout << "MISMATCH between serial and parallel output\n";
    return 1;
  }
  std::cout << "outputs identical\n";
  return 0;
}
