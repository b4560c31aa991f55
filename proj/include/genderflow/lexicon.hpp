#ifndef GENDERFLOW_LEXICON_HPP
#define GENDERFLOW_LEXICON_HPP

#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace genderflow {

enum class TokenClass { FemPronoun, MscPronoun, FemWord, MscWord, Neutral };

std::string_view token_class_name(TokenClass c);

/// Gender-specific word resource used by source filtering. Immutable after
/// load; safe to share across workers.
///
/// File formats:
///  - pair list: UTF-8 TSV `fem_word<TAB>msc_word`, '#' comment lines ignored
///  - pronoun list: sections `[fem]` / `[msc]`, one token per line
class GenderLexicon {
public:
  /// Built-in pronoun sets (she/her/hers/herself vs he/him/his/himself) and
  /// a curated word-pair list. Pass a pair file to use a larger list such as
  /// the 104-pair WinoBias swap list.
  static GenderLexicon defaults();

  /// Either path may be empty, which selects the built-in default for that
  /// part. Duplicate rows are deduplicated; a token appearing on both sides
  /// of the pair list rejects the load with its row number.
  static GenderLexicon load(const std::string& pronoun_path, const std::string& pairs_path);

  /// Convenience: loads `pronouns.txt` and `word_pairs.tsv` from a directory,
  /// falling back to the built-in defaults for any missing file.
  static GenderLexicon load_dir(const std::string& dir);

  /// Case-insensitive exact-token classification. Pronoun classes take
  /// precedence over word classes; unknown tokens are Neutral.
  TokenClass classify(std::string_view token) const;

  const std::unordered_set<std::string>& fem_pronouns() const { return fem_pronouns_; }
  const std::unordered_set<std::string>& msc_pronouns() const { return msc_pronouns_; }
  const std::unordered_set<std::string>& fem_words() const { return fem_words_; }
  const std::unordered_set<std::string>& msc_words() const { return msc_words_; }
  const std::vector<std::pair<std::string, std::string>>& word_pairs() const {
    return word_pairs_;
  }

private:
  GenderLexicon() = default;
  void add_pair(const std::string& fem, const std::string& msc, std::size_t row);
  void validate() const;

  std::unordered_set<std::string> fem_pronouns_;
  std::unordered_set<std::string> msc_pronouns_;
  std::unordered_set<std::string> fem_words_;
  std::unordered_set<std::string> msc_words_;
  std::vector<std::pair<std::string, std::string>> word_pairs_;
};

} // namespace genderflow

#endif
