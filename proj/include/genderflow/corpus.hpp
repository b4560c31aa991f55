#ifndef GENDERFLOW_CORPUS_HPP
#define GENDERFLOW_CORPUS_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "genderflow/types.hpp"

namespace genderflow {

/// Deterministic tokenizer shared by every filter and metric.
/// Splits on whitespace, then peels leading and trailing punctuation
/// (.,;:!?"()[]) off each chunk as single-character tokens. Apostrophes and
/// hyphens inside a word are preserved ("l'editore" stays one token).
std::vector<std::string> tokenize(std::string_view raw);

Sentence make_sentence(std::string raw, std::size_t line_no = 1);

/// Loads one sentence per nonempty line; blank lines are skipped but still
/// advance line_no.
MonoCorpus load_mono(const std::string& path);

/// Line-aligned bitext. The files must have the same physical line count;
/// a mismatch is reported with both counts. Lines blank on both sides are
/// skipped; a line blank on one side only is kept so that preprocess_bitext
/// can count it under removed_empty.
ParallelCorpus load_parallel(const std::string& src_path, const std::string& trg_path);

struct PreprocessReport {
  std::size_t kept = 0;
  std::size_t removed_length = 0;
  std::size_t removed_ratio = 0;
  std::size_t removed_empty = 0;

  std::size_t total() const { return kept + removed_length + removed_ratio + removed_empty; }
};

/// Length and ratio filter over token counts. A pair is dropped when either
/// side exceeds max_len tokens or when max(|src|/|trg|, |trg|/|src|) exceeds
/// max_ratio. Pairs with a zero-token side are dropped under removed_empty.
ParallelCorpus preprocess_bitext(const ParallelCorpus& corpus, PreprocessReport& report,
                                 std::size_t max_len = 250, double max_ratio = 1.5);

void write_mono(const std::string& path, const MonoCorpus& corpus);
void write_lines(const std::string& path, const std::vector<std::string>& lines);

/// Writes `<prefix>.src.txt`, `<prefix>.trg.txt` and, when with_origins is
/// set, `<prefix>.origins.txt` (one origin tag per line).
void write_parallel(const std::string& prefix, const ParallelCorpus& corpus,
                    bool with_origins = false);

std::vector<std::string> read_lines(const std::string& path);

} // namespace genderflow

#endif
