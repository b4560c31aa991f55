#include "genderflow/target_filter.hpp"

#include "genderflow/error.hpp"
#include "genderflow/parallel.hpp"

namespace genderflow {

namespace {

MorphGender opposing(Gender gen) {
  return gen == Gender::Fem ? MorphGender::Msc : MorphGender::Fem;
}

MorphGender matching(Gender gen) {
  return gen == Gender::Fem ? MorphGender::Fem : MorphGender::Msc;
}

std::vector<OffendingToken> opposing_tokens(const MorphAnalyzer& analyzer, const Sentence& s,
                                            MorphGender opposite) {
  std::vector<OffendingToken> out;
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    const MorphTag tag = analyzer.analyze(s.tokens[i]);
    if (tag.gender == opposite) {
      out.push_back(OffendingToken{i, s.tokens[i], tag.gender, tag.source});
    }
  }
  return out;
}

} // namespace

TargetFilterResult filter_trg(const MorphAnalyzer& analyzer, const ParallelCorpus& pairs,
                              Gender gen, int workers) {
  const MorphGender opposite = opposing(gen);
  std::vector<std::vector<OffendingToken>> evidence(pairs.size());
  util::parallel_for(pairs.size(), workers, [&](std::size_t i) {
    evidence[i] = opposing_tokens(analyzer, pairs.pairs[i].trg, opposite);
  });

  TargetFilterResult result;
  result.kept.src_lang = pairs.src_lang;
  result.kept.trg_lang = pairs.trg_lang;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (evidence[i].empty()) {
      result.kept.pairs.push_back(pairs.pairs[i]);
      result.kept_indices.push_back(i);
    } else {
      result.removed.push_back(RemovedPair{i, pairs.pairs[i], std::move(evidence[i])});
    }
  }
  return result;
}

MonoCorpus filter_trg_mono(const MorphAnalyzer& analyzer, const MonoCorpus& corpus, Gender gen,
                           int workers) {
  if (!analyzer.has_pronoun_entries()) {
    throw ConfigError("filter_trg_mono: analyzer spec has no pronoun-marked dict entries "
                      "(add a third column 'pron' to pronoun rows)");
  }
  const MorphGender opposite = opposing(gen);
  const MorphGender wanted = matching(gen);
  std::vector<char> keep(corpus.size(), 0);
  util::parallel_for(corpus.size(), workers, [&](std::size_t i) {
    const Sentence& s = corpus.sentences[i];
    bool has_opposite = false;
    bool has_wanted_pronoun = false;
    for (const auto& token : s.tokens) {
      const MorphTag tag = analyzer.analyze(token);
      if (tag.gender == opposite) {
        has_opposite = true;
        break;
      }
      if (tag.gender == wanted && analyzer.is_pronoun(token)) has_wanted_pronoun = true;
    }
    keep[i] = (!has_opposite && has_wanted_pronoun) ? 1 : 0;
  });
  MonoCorpus out;
  out.lang = corpus.lang;
  out.path = corpus.path;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (keep[i]) out.sentences.push_back(corpus.sentences[i]);
  }
  return out;
}

} // namespace genderflow
