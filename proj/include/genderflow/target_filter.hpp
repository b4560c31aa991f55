#ifndef GENDERFLOW_TARGET_FILTER_HPP
#define GENDERFLOW_TARGET_FILTER_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "genderflow/morph.hpp"
#include "genderflow/types.hpp"

namespace genderflow {

struct OffendingToken {
  std::size_t position = 0; // token index within the target sentence
  std::string token;
  MorphGender gender = MorphGender::NoGender;
  TagSource source = TagSource::Default;
};

struct RemovedPair {
  std::size_t input_index = 0; // position of the pair in the filter input
  ParallelPair pair;
  std::vector<OffendingToken> evidence;
};

struct TargetFilterResult {
  ParallelCorpus kept;
  std::vector<std::size_t> kept_indices;
  std::vector<RemovedPair> removed;

  double retention() const {
    const std::size_t n = kept.size() + removed.size();
    return n == 0 ? 0.0 : static_cast<double>(kept.size()) / static_cast<double>(n);
  }
};

/// Removes every pair whose target contains at least one token of the
/// opposite grammatical gender (Fem evidence removes from the Msc set and
/// vice versa). Neuter never triggers removal. Removed pairs are kept with
/// the offending tokens so the filtering can be audited.
TargetFilterResult filter_trg(const MorphAnalyzer& analyzer, const ParallelCorpus& pairs,
                              Gender gen, int workers = 1);

/// Back-translation-mode pre-filter over target-side monolingual data: keeps
/// sentences with no opposite-gender tag and at least one pronoun of the
/// requested gender. The analyzer must carry pronoun-marked dict entries.
MonoCorpus filter_trg_mono(const MorphAnalyzer& analyzer, const MonoCorpus& corpus, Gender gen,
                           int workers = 1);

} // namespace genderflow

#endif
