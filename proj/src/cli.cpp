#include "montee/cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "montee/corpus_io.hpp"
#include "montee/errors.hpp"
#include "montee/evalkit.hpp"
#include "montee/pipeline.hpp"
#include "montee/stats.hpp"

namespace montee::cli {

namespace {

// "-" selects the provided standard stream; anything else opens a file.
class InputStream {
 public:
  InputStream(const std::string& path, std::istream& stdin_stream) {
    if (path == "-") {
      stream_ = &stdin_stream;
    } else {
      file_ = std::make_unique<std::ifstream>(path);
      if (!*file_) throw IoError("cannot open input file: " + path);
      stream_ = file_.get();
    }
  }
  std::istream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ifstream> file_;
  std::istream* stream_ = nullptr;
};

class OutputStream {
 public:
  OutputStream(const std::string& path, std::ostream& stdout_stream) : path_(path) {
    if (path == "-") {
      stream_ = &stdout_stream;
    } else {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw IoError("cannot open output file: " + path);
      stream_ = file_.get();
    }
  }
  std::ostream& get() { return *stream_; }
  void finish() {
    stream_->flush();
    if (!*stream_) throw IoError("failed writing to: " + path_);
  }

 private:
  std::string path_;
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

std::vector<GoldRecord> load_gold(const std::string& path, std::istream& stdin_stream) {
  InputStream in(path, stdin_stream);
  return read_gold_tsv(in.get(), path);
}

int run_extract(const std::string& input, const std::string& output,
                const std::string& lexicon_path, const PipelineOptions& opts,
                std::istream& stdin_stream, std::ostream& stdout_stream,
                std::ostream& err) {
  auto lex = TriggerLexicon::load(lexicon_path);
  InputStream in(input, stdin_stream);
  OutputStream out(output, stdout_stream);

  CorpusReader reader(in.get(), input);
  std::vector<RelationRecord> records;
  std::vector<ParsedDocument> batch;
  constexpr std::size_t kBatchSize = 256;
  std::size_t doc_count = 0;
  auto flush_batch = [&] {
    auto recs = process_corpus_parallel(batch, lex, opts);
    records.insert(records.end(), std::make_move_iterator(recs.begin()),
                   std::make_move_iterator(recs.end()));
    doc_count += batch.size();
    batch.clear();
    err << "\rprocessed " << doc_count << " documents" << std::flush;
  };
  while (auto doc = reader.next()) {
    batch.push_back(std::move(*doc));
    if (batch.size() >= kBatchSize) flush_batch();
  }
  if (!batch.empty()) flush_batch();
  if (doc_count > 0) err << "\n";

  write_relations(std::move(records), out.get());
  out.finish();
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"MoNTEE: modality- and negation-aware event extraction"};
  app.require_subcommand(0, 1);
  app.set_version_flag("--version", std::string("montee ") + kVersion + " (schema " +
                                        std::to_string(kSchemaVersion) + ")");

  // extract
  auto* extract = app.add_subcommand("extract", "Extract and tag event relations");
  std::string ex_input = "-", ex_output = "-", ex_lexicon;
  PipelineOptions pipeline_opts;
  extract->add_option("--input", ex_input, "Parsed documents (JSONL), '-' for stdin");
  extract->add_option("--output", ex_output, "Relation records (JSONL), '-' for stdout");
  extract->add_option("--lexicon", ex_lexicon, "Trigger lexicon (TSV)")->required();
  extract->add_flag("--strip-modifiers", pipeline_opts.strip_modifiers,
                    "Also emit modifier-stripped predicate variants");
  extract->add_flag("--nary", pipeline_opts.nary,
                    "Compose prepositional n-ary relations");
  extract->add_flag("--certainty", pipeline_opts.certainty,
                    "Attach 0/1/2 certainty labels");
  extract->add_option("--workers", pipeline_opts.workers, "Worker count")
      ->check(CLI::PositiveNumber);

  // eval
  auto* eval = app.add_subcommand("eval", "Score predictions against gold labels");
  std::string eval_gold, eval_pred;
  eval->add_option("--gold", eval_gold, "Gold TSV (id<TAB>label)")->required();
  eval->add_option("--pred", eval_pred, "Predicted TSV (id<TAB>label)")->required();

  // kappa
  auto* kappa = app.add_subcommand("kappa", "Inter-annotator agreement");
  std::string kappa_a, kappa_b;
  kappa->add_option("--a", kappa_a, "Annotator A TSV")->required();
  kappa->add_option("--b", kappa_b, "Annotator B TSV")->required();

  // stats
  auto* stats_cmd = app.add_subcommand("stats", "Corpus statistics over relations");
  std::string stats_input = "-";
  int top_triggers = 10;
  stats_cmd->add_option("--input", stats_input, "Relation records (JSONL)");
  stats_cmd->add_option("--top-triggers", top_triggers, "Trigger ranking size");

  // filter-domain
  auto* filter = app.add_subcommand("filter-domain", "Select in-domain documents");
  std::string filter_input = "-";
  std::vector<std::string> filter_types;
  double min_fraction = 0.4;
  int min_count = 0;
  filter->add_option("--input", filter_input, "Parsed documents (JSONL)");
  filter->add_option("--types", filter_types, "FIGER type prefixes")->required();
  filter->add_option("--min-fraction", min_fraction,
                     "In-domain mention fraction must exceed this");
  filter->add_option("--min-count", min_count, "Minimum in-domain mention count");

  // lexicon check
  auto* lexicon_cmd = app.add_subcommand("lexicon", "Lexicon utilities");
  auto* lex_check = lexicon_cmd->add_subcommand("check", "Validate a lexicon file");
  std::string lex_path;
  lex_check->add_option("path", lex_path, "Lexicon TSV")->required();
  lexicon_cmd->require_subcommand(1);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion& e) {
    out << app.version() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (extract->parsed()) {
      return run_extract(ex_input, ex_output, ex_lexicon, pipeline_opts, in, out, err);
    }
    if (eval->parsed()) {
      auto gold = load_gold(eval_gold, in);
      auto pred = load_gold(eval_pred, in);
      out << score(gold, pred).to_string();
      return 0;
    }
    if (kappa->parsed()) {
      auto rec_a = load_gold(kappa_a, in);
      auto rec_b = load_gold(kappa_b, in);
      if (rec_a.size() != rec_b.size()) {
        throw DataError("annotation files differ in length");
      }
      std::vector<int> la, lb;
      for (std::size_t i = 0; i < rec_a.size(); ++i) {
        if (rec_a[i].id != rec_b[i].id) {
          throw DataError("annotation files disagree on id order at line " +
                          std::to_string(i + 1) + ": " + rec_a[i].id + " vs " +
                          rec_b[i].id);
        }
        la.push_back(rec_a[i].label);
        lb.push_back(rec_b[i].label);
      }
      out << "kappa: " << cohens_kappa(la, lb) << "\n";
      out << "disagreements:\n";
      for (std::size_t i = 0; i < la.size(); ++i) {
        if (la[i] != lb[i]) {
          out << "  " << rec_a[i].id << ": " << la[i] << " vs " << lb[i] << "\n";
        }
      }
      return 0;
    }
    if (stats_cmd->parsed()) {
      InputStream input(stats_input, in);
      auto rels = read_relations(input.get(), stats_input);
      out << tag_distribution(rels).to_string();
      out << "Top triggers:\n";
      for (const auto& [phrase, count] : trigger_frequency(rels, top_triggers)) {
        out << "  " << phrase << ": " << count << "\n";
      }
      return 0;
    }
    if (filter->parsed()) {
      DomainFilterConfig cfg;
      cfg.type_prefixes = filter_types;
      cfg.min_fraction = min_fraction;
      cfg.min_count = min_count;
      InputStream input(filter_input, in);
      CorpusReader reader(input.get(), filter_input);
      while (auto doc = reader.next()) {
        if (classify_domain(*doc, cfg)) out << doc->doc_id << "\n";
      }
      return 0;
    }
    if (lex_check->parsed()) {
      auto lex = TriggerLexicon::load(lex_path);
      auto report = lex.validate();
      out << report.to_string();
      return report.ok() ? 0 : kExitValidation;
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const DataError& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }

  err << app.help();
  return kExitUsage;
}

}  // namespace montee::cli
