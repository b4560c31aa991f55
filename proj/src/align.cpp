#include "genderflow/align.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>

#include "genderflow/error.hpp"
#include "genderflow/util.hpp"

namespace genderflow {

double TranslationTable::prob(std::string_view src, std::string_view trg) const {
  const auto row = table_.find(std::string(src));
  if (row == table_.end()) return 0.0;
  const auto cell = row->second.find(std::string(trg));
  return cell == row->second.end() ? 0.0 : cell->second;
}

double TranslationTable::prob_floored(std::string_view src, std::string_view trg) const {
  constexpr double kFloor = 1e-12;
  const auto row = table_.find(std::string(src));
  if (row == table_.end()) return kFloor;
  const auto cell = row->second.find(std::string(trg));
  return cell == row->second.end() ? kFloor : cell->second;
}

void TranslationTable::set(const std::string& src, const std::string& trg, double p) {
  table_[src][trg] = p;
}

void TranslationTable::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write translation table: " + path);
  out << std::setprecision(17);
  for (const auto& [src, row] : table_) {
    for (const auto& [trg, p] : row) out << src << '\t' << trg << '\t' << p << '\n';
  }
}

TranslationTable TranslationTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open translation table: " + path);
  TranslationTable table;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (util::trim(line).empty()) continue;
    const auto cols = util::split(line, '\t');
    if (cols.size() != 3) {
      throw DataError(path + " row " + std::to_string(row) + ": expected 3 columns");
    }
    try {
      table.set(cols[0], cols[1], std::stod(cols[2]));
    } catch (const std::exception&) {
      throw DataError(path + " row " + std::to_string(row) + ": bad probability '" + cols[2] +
                      "'");
    }
  }
  return table;
}

TranslationTable train_model1(const ParallelCorpus& pairs, int iterations, Model1Stats* stats) {
  if (pairs.empty()) throw DataError("train_model1: empty corpus");
  if (iterations < 1) throw DataError("train_model1: iterations must be >= 1");

  const std::string null_token(TranslationTable::kNull);

  TranslationTable table;
  for (const auto& pair : pairs.pairs) {
    for (const auto& f : pair.trg.tokens) {
      table.set(null_token, f, 0.0);
      for (const auto& e : pair.src.tokens) table.set(e, f, 0.0);
    }
  }
  // Uniform over each source token's co-occurring target vocabulary.
  {
    auto& rows = const_cast<std::unordered_map<std::string, std::unordered_map<std::string, double>>&>(
        table.rows());
    for (auto& [e, row] : rows) {
      const double uniform = 1.0 / static_cast<double>(row.size());
      for (auto& [f, p] : row) p = uniform;
    }
  }

  if (stats) stats->log_likelihood.clear();

  for (int iter = 0; iter < iterations; ++iter) {
    std::unordered_map<std::string, std::unordered_map<std::string, double>> counts;
    double log_likelihood = 0.0;

    for (const auto& pair : pairs.pairs) {
      const auto& src = pair.src.tokens;
      const auto& trg = pair.trg.tokens;
      const double n_src = static_cast<double>(src.size()) + 1.0; // incl. NULL
      for (const auto& f : trg) {
        double denom = table.prob(null_token, f);
        for (const auto& e : src) denom += table.prob(e, f);
        if (denom <= 0.0) continue;
        log_likelihood += std::log(denom / n_src);
        const double inv = 1.0 / denom;
        counts[null_token][f] += table.prob(null_token, f) * inv;
        for (const auto& e : src) counts[e][f] += table.prob(e, f) * inv;
      }
    }
    if (stats) stats->log_likelihood.push_back(log_likelihood);

    for (auto& [e, row] : counts) {
      double z = 0.0;
      for (const auto& [f, c] : row) z += c;
      if (z <= 0.0) continue;
      for (auto& [f, c] : row) table.set(e, f, c / z);
    }
  }
  return table;
}

Alignment viterbi_align(const TranslationTable& table, const ParallelPair& pair) {
  const auto& src = pair.src.tokens;
  const auto& trg = pair.trg.tokens;
  Alignment alignment(trg.size(), 0);
  for (std::size_t j = 0; j < trg.size(); ++j) {
    double best_real = -1.0;
    std::size_t best_index = 0;
    for (std::size_t i = 0; i < src.size(); ++i) {
      const double p = table.prob_floored(src[i], trg[j]);
      if (p > best_real) {
        best_real = p;
        best_index = i + 1;
      }
    }
    const double null_p = table.prob_floored(TranslationTable::kNull, trg[j]);
    // NULL wins only with strictly higher probability.
    alignment[j] = (best_index == 0 || null_p > best_real) ? 0 : best_index;
  }
  return alignment;
}

std::string to_pharaoh(const Alignment& alignment) {
  std::string out;
  for (std::size_t j = 0; j < alignment.size(); ++j) {
    if (alignment[j] == 0) continue;
    if (!out.empty()) out += ' ';
    out += std::to_string(alignment[j] - 1);
    out += '-';
    out += std::to_string(j);
  }
  return out;
}

std::vector<std::size_t> project_entity(const TranslationTable& table, const ParallelPair& pair,
                                        std::size_t src_index) {
  if (src_index >= pair.src.tokens.size()) {
    throw DataError("project_entity: source index " + std::to_string(src_index) +
                    " out of range for sentence of " + std::to_string(pair.src.tokens.size()) +
                    " tokens");
  }
  const Alignment alignment = viterbi_align(table, pair);
  std::vector<std::size_t> positions;
  for (std::size_t j = 0; j < alignment.size(); ++j) {
    if (alignment[j] == src_index + 1) positions.push_back(j);
  }
  return positions;
}

} // namespace genderflow
