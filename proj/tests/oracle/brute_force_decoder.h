// Exhaustive search over every labelled segmentation of a short sentence:
// each token takes one of the eight classes, and between two tokens of
// the same class the region either continues or a new one opens.
#ifndef NAMEFINDER_TESTS_ORACLE_BRUTE_FORCE_DECODER_H_
#define NAMEFINDER_TESTS_ORACLE_BRUTE_FORCE_DECODER_H_

#include <vector>

#include "namefinder/counts.h"
#include "namefinder/corpus.h"

namespace namefinder::testing {

struct BruteForceResult {
  double log_score;
  std::vector<Segment> segments;  // tie-broken argmax
  std::size_t paths;              // number of labellings enumerated
};

BruteForceResult BruteForceDecode(const Sentence& tokens, const TrainedModel& model);

}  // namespace namefinder::testing

#endif  // NAMEFINDER_TESTS_ORACLE_BRUTE_FORCE_DECODER_H_
