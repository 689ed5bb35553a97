#include "montee/evalkit.hpp"

#include <algorithm>
#include <iomanip>
#include <istream>
#include <map>
#include <sstream>

#include "montee/errors.hpp"

namespace montee {

namespace {

double safe_div(double num, double den) { return den == 0.0 ? 0.0 : num / den; }

double f1_of(double p, double r) { return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r); }

}  // namespace

ScoreReport score(std::span<const GoldRecord> gold, std::span<const GoldRecord> pred) {
  std::map<std::string, int> gold_by_id;
  for (const auto& g : gold) {
    if (!gold_by_id.emplace(g.id, g.label).second) {
      throw DataError("duplicate gold id: " + g.id);
    }
  }
  std::map<std::string, int> pred_by_id;
  for (const auto& p : pred) {
    if (!pred_by_id.emplace(p.id, p.label).second) {
      throw DataError("duplicate predicted id: " + p.id);
    }
  }
  std::string missing;
  std::string extra;
  for (const auto& [id, label] : gold_by_id) {
    if (!pred_by_id.count(id)) missing += " " + id;
  }
  for (const auto& [id, label] : pred_by_id) {
    if (!gold_by_id.count(id)) extra += " " + id;
  }
  if (!missing.empty() || !extra.empty()) {
    throw DataError("id mismatch between gold and predictions;" +
                    (missing.empty() ? "" : " missing:" + missing) +
                    (extra.empty() ? "" : " extra:" + extra));
  }

  ScoreReport report;
  for (const auto& [id, g] : gold_by_id) {
    int p = pred_by_id.at(id);
    if (g < 0 || g > 2 || p < 0 || p > 2) throw DataError("label out of range for " + id);
    report.matrix[static_cast<std::size_t>(g)][static_cast<std::size_t>(p)]++;
    report.total++;
  }

  long long correct = 0;
  double macro_p = 0.0, macro_r = 0.0, macro_f1 = 0.0;
  for (std::size_t c = 0; c < 3; ++c) {
    long long tp = report.matrix[c][c];
    long long fp = 0, fn = 0;
    for (std::size_t o = 0; o < 3; ++o) {
      if (o == c) continue;
      fp += report.matrix[o][c];
      fn += report.matrix[c][o];
    }
    correct += tp;
    auto& m = report.per_class[c];
    m.precision = safe_div(static_cast<double>(tp), static_cast<double>(tp + fp));
    m.recall = safe_div(static_cast<double>(tp), static_cast<double>(tp + fn));
    m.f1 = f1_of(m.precision, m.recall);
    macro_p += m.precision;
    macro_r += m.recall;
    macro_f1 += m.f1;
  }
  // Single-label multiclass: pooled precision == recall == accuracy.
  double accuracy = safe_div(static_cast<double>(correct), static_cast<double>(report.total));
  report.micro = {accuracy, accuracy, accuracy};
  report.macro = {macro_p / 3.0, macro_r / 3.0, macro_f1 / 3.0};
  return report;
}

double cohens_kappa(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) {
    throw DataError("kappa: sequence lengths differ (" + std::to_string(a.size()) +
                    " vs " + std::to_string(b.size()) + ")");
  }
  if (a.empty()) throw DataError("kappa: empty sequences");
  const double n = static_cast<double>(a.size());
  std::array<double, 3> count_a{}, count_b{};
  double agree = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0 || a[i] > 2 || b[i] < 0 || b[i] > 2) {
      throw DataError("kappa: label out of range at position " + std::to_string(i));
    }
    count_a[static_cast<std::size_t>(a[i])] += 1.0;
    count_b[static_cast<std::size_t>(b[i])] += 1.0;
    if (a[i] == b[i]) agree += 1.0;
  }
  double p_o = agree / n;
  double p_e = 0.0;
  for (std::size_t c = 0; c < 3; ++c) p_e += (count_a[c] / n) * (count_b[c] / n);
  if (1.0 - p_e == 0.0) return p_o == 1.0 ? 1.0 : 0.0;
  return (p_o - p_e) / (1.0 - p_e);
}

std::set<std::string> sample_dense(std::span<const RelationRecord> rels,
                                   double min_tagged_fraction) {
  std::map<std::string, std::pair<long long, long long>> per_doc;  // total, tagged
  for (const auto& r : rels) {
    auto& [total, tagged] = per_doc[r.doc_id];
    total++;
    if (r.tag) tagged++;
  }
  std::set<std::string> out;
  for (const auto& [doc, counts] : per_doc) {
    if (counts.first == 0) continue;
    double fraction = static_cast<double>(counts.second) / static_cast<double>(counts.first);
    if (fraction >= min_tagged_fraction) out.insert(doc);
  }
  return out;
}

std::vector<GoldRecord> read_gold_tsv(std::istream& in, const std::string& source) {
  std::vector<GoldRecord> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw DataError(source + ": expected 'id<TAB>label', line " + std::to_string(line_no));
    }
    GoldRecord rec;
    rec.id = line.substr(0, tab);
    std::string label = line.substr(tab + 1);
    if (label != "0" && label != "1" && label != "2") {
      throw DataError(source + ": label must be 0, 1 or 2, line " + std::to_string(line_no));
    }
    rec.label = label[0] - '0';
    out.push_back(std::move(rec));
  }
  return out;
}

std::string ScoreReport::to_string() const {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  out << "Class          Precision  Recall  F1\n";
  const char* names[3] = {"0 (didn't happen)", "1 (uncertain)", "2 (happened)"};
  for (std::size_t c = 0; c < 3; ++c) {
    out << names[c];
    for (std::size_t pad = std::string(names[c]).size(); pad < 15; ++pad) out << ' ';
    out << "  " << per_class[c].precision << "       " << per_class[c].recall << "    "
        << per_class[c].f1 << "\n";
  }
  out << "Micro-average    " << micro.precision << "       " << micro.recall << "    "
      << micro.f1 << "\n";
  out << "Macro-average    " << macro.precision << "       " << macro.recall << "    "
      << macro.f1 << "\n";
  out << "Scored " << total << " relations\n";
  return out.str();
}

}  // namespace montee
