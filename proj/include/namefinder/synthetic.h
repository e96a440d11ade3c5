#ifndef NAMEFINDER_SYNTHETIC_H_
#define NAMEFINDER_SYNTHETIC_H_

#include <cstdint>
#include <vector>

#include "namefinder/corpus.h"

namespace namefinder {

struct SyntheticOptions {
  std::size_t sentences = 5000;
  std::uint64_t seed = 1;
  // Probability that a cue word (title before a person, suffix closing an
  // organization, preposition before a location/date/amount) is present.
  double cue_probability = 0.85;
  // Size of the generated surname and organization-stem pools; large
  // pools make unseen names common in held-out text.
  std::size_t name_pool = 3000;
};

// Annotated newswire-like sentences with stochastic but strongly cued
// entities of all seven classes. Deterministic for a given option set.
std::vector<AnnotatedSentence> GenerateSyntheticCorpus(const SyntheticOptions& options);

}  // namespace namefinder

#endif  // NAMEFINDER_SYNTHETIC_H_
