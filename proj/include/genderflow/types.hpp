#ifndef GENDERFLOW_TYPES_HPP
#define GENDERFLOW_TYPES_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace genderflow {

/// Binary gender selector used by the filtering pipeline.
enum class Gender { Fem, Msc };

std::string_view gender_name(Gender g);
Gender gender_from_name(std::string_view name);
inline Gender opposite(Gender g) { return g == Gender::Fem ? Gender::Msc : Gender::Fem; }

/// Provenance of a sentence pair in an assembled training corpus.
enum class Origin { Original, PseudoFem, PseudoMsc, PseudoRandom };

std::string_view origin_name(Origin o);
Origin origin_from_name(std::string_view name);

/// One text line with its deterministic tokenization.
/// line_no is the 1-based physical line number in the source file.
struct Sentence {
  std::string raw;
  std::vector<std::string> tokens;
  std::size_t line_no = 1;
};

struct ParallelPair {
  Sentence src;
  Sentence trg;
  Origin origin = Origin::Original;
};

struct MonoCorpus {
  std::vector<Sentence> sentences;
  std::string lang;
  std::string path;

  std::size_t size() const { return sentences.size(); }
  bool empty() const { return sentences.empty(); }
};

struct ParallelCorpus {
  std::vector<ParallelPair> pairs;
  std::string src_lang;
  std::string trg_lang;
  std::string src_path;
  std::string trg_path;

  std::size_t size() const { return pairs.size(); }
  bool empty() const { return pairs.empty(); }
};

} // namespace genderflow

#endif
