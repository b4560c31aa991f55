#ifndef GENDERFLOW_ALIGN_HPP
#define GENDERFLOW_ALIGN_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "genderflow/types.hpp"

namespace genderflow {

/// Lexical translation table t(f|e) with a distinguished NULL source token.
/// After training, every source token's distribution sums to 1 within 1e-9.
class TranslationTable {
public:
  static constexpr std::string_view kNull = "<NULL>";

  /// Trained probability, or 0 when the pair never co-occurred.
  double prob(std::string_view src, std::string_view trg) const;

  /// Lookup used at alignment time: unknown pairs get a 1e-12 floor so
  /// viterbi stays total without smoothing the trained table.
  double prob_floored(std::string_view src, std::string_view trg) const;

  void set(const std::string& src, const std::string& trg, double p);
  std::size_t source_vocab_size() const { return table_.size(); }

  const std::unordered_map<std::string, std::unordered_map<std::string, double>>& rows() const {
    return table_;
  }

  /// TSV serialization: `src_token<TAB>tgt_token<TAB>prob`.
  void save(const std::string& path) const;
  static TranslationTable load(const std::string& path);

private:
  std::unordered_map<std::string, std::unordered_map<std::string, double>> table_;
};

/// Per target position j, the aligned source position in {0..|src|} with 0
/// meaning NULL (as in Model 1's a(j)); position i >= 1 refers to source
/// token i-1.
using Alignment = std::vector<std::size_t>;

struct Model1Stats {
  /// Data log-likelihood of the table entering each EM iteration;
  /// non-decreasing by construction of EM.
  std::vector<double> log_likelihood;
};

/// IBM Model 1 expectation-maximization. Initialization is uniform over the
/// target tokens that co-occur with each source token; NULL co-occurs with
/// every target token. Tokenization must already be applied to the corpus.
TranslationTable train_model1(const ParallelCorpus& pairs, int iterations,
                              Model1Stats* stats = nullptr);

/// Best alignment under the table: a(j) = argmax_i t(trg_j | src_i) over all
/// source positions and NULL. Ties break toward the smallest source index;
/// NULL loses ties against real positions.
Alignment viterbi_align(const TranslationTable& table, const ParallelPair& pair);

/// Pharaoh `i-j` pairs (0-based source i, target j), NULL links omitted.
std::string to_pharaoh(const Alignment& alignment);

/// Target positions aligned to the source token at src_index (0-based).
/// Empty result means the aligner considers the token dropped.
std::vector<std::size_t> project_entity(const TranslationTable& table, const ParallelPair& pair,
                                        std::size_t src_index);

} // namespace genderflow

#endif
