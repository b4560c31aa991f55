#include "genderflow/source_filter.hpp"

#include "genderflow/error.hpp"
#include "genderflow/parallel.hpp"

namespace genderflow {

std::string_view source_label_name(SourceGenderLabel label) {
  switch (label) {
    case SourceGenderLabel::Fem: return "fem";
    case SourceGenderLabel::Msc: return "msc";
    case SourceGenderLabel::MixedOrNeutral: return "mix";
  }
  return "mix";
}

SourceGenderLabel classify_source(const GenderLexicon& lex, const Sentence& s) {
  std::size_t fem_pron = 0, msc_pron = 0, fem_word = 0, msc_word = 0;
  for (const auto& token : s.tokens) {
    switch (lex.classify(token)) {
      case TokenClass::FemPronoun: ++fem_pron; break;
      case TokenClass::MscPronoun: ++msc_pron; break;
      case TokenClass::FemWord: ++fem_word; break;
      case TokenClass::MscWord: ++msc_word; break;
      case TokenClass::Neutral: break;
    }
  }
  if (msc_pron >= 1 && fem_pron == 0 && fem_word == 0) return SourceGenderLabel::Msc;
  if (fem_pron >= 1 && msc_pron == 0 && msc_word == 0) return SourceGenderLabel::Fem;
  return SourceGenderLabel::MixedOrNeutral;
}

MonoCorpus filter_src(const GenderLexicon& lex, const MonoCorpus& corpus, Gender gen,
                      int workers) {
  const SourceGenderLabel wanted =
      gen == Gender::Fem ? SourceGenderLabel::Fem : SourceGenderLabel::Msc;
  std::vector<char> keep(corpus.size(), 0);
  util::parallel_for(corpus.size(), workers, [&](std::size_t i) {
    keep[i] = classify_source(lex, corpus.sentences[i]) == wanted ? 1 : 0;
  });
  MonoCorpus out;
  out.lang = corpus.lang;
  out.path = corpus.path;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (keep[i]) out.sentences.push_back(corpus.sentences[i]);
  }
  return out;
}

namespace {

double pct(std::size_t part, std::size_t total) {
  return total == 0 ? 0.0 : 100.0 * static_cast<double>(part) / static_cast<double>(total);
}

} // namespace

double GenderStats::fem_pct() const { return pct(fem, total); }
double GenderStats::msc_pct() const { return pct(msc, total); }
double GenderStats::mixed_pct() const { return pct(mixed, total); }

GenderStats corpus_gender_stats(const GenderLexicon& lex, const MonoCorpus& corpus, int workers) {
  if (corpus.empty()) throw DataError("corpus_gender_stats: corpus is empty");
  std::vector<unsigned char> label(corpus.size(), 0);
  util::parallel_for(corpus.size(), workers, [&](std::size_t i) {
    const auto& s = corpus.sentences[i];
    const auto cls = classify_source(lex, s);
    if (cls == SourceGenderLabel::Fem) {
      label[i] = 0;
    } else if (cls == SourceGenderLabel::Msc) {
      label[i] = 1;
    } else {
      bool has_cue = false;
      for (const auto& token : s.tokens) {
        if (lex.classify(token) != TokenClass::Neutral) {
          has_cue = true;
          break;
        }
      }
      label[i] = has_cue ? 2 : 3;
    }
  });
  GenderStats stats;
  stats.total = corpus.size();
  for (unsigned char l : label) {
    switch (l) {
      case 0: ++stats.fem; break;
      case 1: ++stats.msc; break;
      case 2: ++stats.mixed_cue; break;
      default: ++stats.no_cue; break;
    }
  }
  stats.mixed = stats.mixed_cue + stats.no_cue;
  return stats;
}

} // namespace genderflow
