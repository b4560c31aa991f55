#ifndef GENDERFLOW_MORPH_HPP
#define GENDERFLOW_MORPH_HPP

#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "genderflow/types.hpp"

namespace genderflow {

enum class MorphGender { Fem, Msc, Neut, NoGender };
enum class TagSource { Dictionary, SuffixRule, Default };

std::string_view morph_gender_name(MorphGender g);
MorphGender morph_gender_from_name(std::string_view name);

struct MorphTag {
  MorphGender gender = MorphGender::NoGender;
  TagSource source = TagSource::Default;
};

/// Declarative target-language gender analyzer: a surface-form dictionary
/// consulted first, then ordered suffix rules (first match wins), then
/// NoGender. Matching is case-insensitive (ASCII folding; store entries in
/// lowercase). Real tagger output can be imported as dictionary rows.
///
/// Spec file format (UTF-8, '#' comments):
///   [meta]
///   lang=de
///   has_neuter=true
///   [dict]
///   surface<TAB>f|m|n[<TAB>pron]
///   [suffix]
///   suffix<TAB>f|m|n
///
/// The optional third dictionary column marks pronoun surfaces, which the
/// back-translation-mode mono filter requires. A surface listed twice with
/// conflicting genders is stored as NoGender (ambiguous evidence is never
/// acted on). Entries tagged `n` are rejected unless has_neuter is true.
class MorphAnalyzer {
public:
  static MorphAnalyzer load(const std::string& path);

  struct DictEntry {
    std::string surface;
    MorphGender gender;
    bool pronoun = false;
  };
  static MorphAnalyzer make(std::string lang, bool has_neuter,
                            const std::vector<DictEntry>& dict,
                            std::vector<std::pair<std::string, MorphGender>> suffix_rules);

  MorphTag analyze(std::string_view token) const;
  std::vector<MorphTag> analyze(const Sentence& s) const;

  /// Multiset of grammatical genders present in the sentence, NoGender
  /// excluded.
  std::vector<MorphGender> sentence_genders(const Sentence& s) const;

  bool is_pronoun(std::string_view token) const;
  bool has_pronoun_entries() const { return !pronouns_.empty(); }
  bool has_neuter() const { return has_neuter_; }
  const std::string& lang() const { return lang_; }

private:
  MorphAnalyzer() = default;
  void add_dict_entry(const std::string& surface, MorphGender gender, bool pronoun);

  std::string lang_;
  bool has_neuter_ = false;
  std::unordered_map<std::string, MorphGender> dict_;
  std::vector<std::pair<std::string, MorphGender>> suffix_rules_;
  std::unordered_set<std::string> pronouns_;
};

} // namespace genderflow

#endif
