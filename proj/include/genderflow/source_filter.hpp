#ifndef GENDERFLOW_SOURCE_FILTER_HPP
#define GENDERFLOW_SOURCE_FILTER_HPP

#include <cstddef>
#include <string_view>

#include "genderflow/lexicon.hpp"
#include "genderflow/types.hpp"

namespace genderflow {

enum class SourceGenderLabel { Fem, Msc, MixedOrNeutral };

std::string_view source_label_name(SourceGenderLabel label);

/// A sentence is masculine when it has at least one masculine pronoun, no
/// feminine pronouns and no feminine words; feminine mirrors that. The third
/// rule excludes opposite-gender words only: a masculine word inside a
/// masculine sentence is consistent evidence and does not disqualify it.
SourceGenderLabel classify_source(const GenderLexicon& lex, const Sentence& s);

/// Keeps exactly the sentences labelled `gen`, in input order.
MonoCorpus filter_src(const GenderLexicon& lex, const MonoCorpus& corpus, Gender gen,
                      int workers = 1);

struct GenderStats {
  std::size_t total = 0;
  std::size_t fem = 0;
  std::size_t msc = 0;
  std::size_t mixed = 0;        // full MixedOrNeutral bucket
  std::size_t mixed_cue = 0;    // diagnostic split: has some gendered token
  std::size_t no_cue = 0;       // diagnostic split: no gendered token at all

  double fem_pct() const;
  double msc_pct() const;
  double mixed_pct() const;
};

/// Distribution of feminine / masculine / mixed sentences over the corpus.
/// Throws on an empty corpus.
GenderStats corpus_gender_stats(const GenderLexicon& lex, const MonoCorpus& corpus,
                                int workers = 1);

} // namespace genderflow

#endif
