#ifndef GENDERFLOW_TRANSLATE_HPP
#define GENDERFLOW_TRANSLATE_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "genderflow/types.hpp"

namespace genderflow {

enum class TranslatorKind { HttpService, Subprocess, DictMock };

std::string_view translator_kind_name(TranslatorKind k);
TranslatorKind translator_kind_from_name(std::string_view name);

/// Opaque handle to a batch translation backend.
///
///  - HttpService: POST {endpoint}/translate with
///      {"src_lang": ..., "tgt_lang": ..., "lines": [...]}
///    and expects {"translations": [...]}. Connection failures and non-200
///    responses are retried with exponential backoff up to max_retries, then
///    the run fails.
///  - Subprocess: spawns `command` per batch, writes one line per sentence to
///    its stdin and reads the same number of lines from its stdout.
///  - DictMock: token-level dictionary lookup with copy-through for unknown
///    tokens. Table rows are `src<TAB>tgt[<TAB>opposite_tgt]`; when
///    error_rate > 0, a token with an opposite form is flipped whenever
///    hash_uniform(seed, line_index, token_index) < error_rate, which makes
///    the error pattern reproducible and independent of batching.
struct TranslatorHandle {
  TranslatorKind kind = TranslatorKind::DictMock;
  std::string endpoint;   // HttpService: http://host:port
  std::string command;    // Subprocess: shell command
  std::string table_path; // DictMock: TSV table
  std::string src_lang = "en";
  std::string tgt_lang;
  int batch_size = 64;
  int max_inflight = 1;
  int max_retries = 3;
  int timeout_ms = 30000;
  double error_rate = 0.0; // DictMock gendered-error mode
  uint64_t seed = 0;

  /// Human-readable identity for run manifests.
  std::string identity() const;
};

struct TranslateManifest {
  std::string kind;
  std::string identity;
  std::size_t lines = 0;
  std::size_t batches = 0;
  std::size_t retries = 0;
};

class Translator {
public:
  explicit Translator(TranslatorHandle handle);

  /// One output line per input line, in input order, regardless of batching
  /// and of how many batches are in flight.
  std::vector<std::string> translate_lines(const std::vector<std::string>& lines,
                                           TranslateManifest* manifest = nullptr) const;

  /// Target-side corpus, line-aligned with the input.
  MonoCorpus translate_corpus(const MonoCorpus& corpus,
                              TranslateManifest* manifest = nullptr) const;

  const TranslatorHandle& handle() const { return handle_; }

private:
  std::vector<std::string> run_batch(const std::vector<std::string>& lines,
                                     std::size_t first_line_index, std::size_t batch_index,
                                     std::size_t* retries) const;
  std::vector<std::string> mock_batch(const std::vector<std::string>& lines,
                                      std::size_t first_line_index) const;
  std::vector<std::string> http_batch(const std::vector<std::string>& lines,
                                      std::size_t batch_index, std::size_t* retries) const;
  std::vector<std::string> subprocess_batch(const std::vector<std::string>& lines,
                                            std::size_t batch_index) const;

  TranslatorHandle handle_;
  std::unordered_map<std::string, std::string> table_;
  std::unordered_map<std::string, std::string> opposite_;
};

/// Loads a DictMock table: `src<TAB>tgt[<TAB>opposite_tgt]`.
std::unordered_map<std::string, std::string> load_mock_table(const std::string& path);

} // namespace genderflow

#endif
