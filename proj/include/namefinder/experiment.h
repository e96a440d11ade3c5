#ifndef NAMEFINDER_EXPERIMENT_H_
#define NAMEFINDER_EXPERIMENT_H_

#include <vector>

#include "namefinder/corpus.h"
#include "namefinder/counts.h"
#include "namefinder/decoder.h"
#include "namefinder/scorer.h"

namespace namefinder {

// Decodes the token sequences of `key`, returning a response aligned
// with it sentence for sentence.
std::vector<AnnotatedSentence> DecodeAligned(const Decoder& decoder,
                                             const std::vector<AnnotatedSentence>& key);

struct CurvePoint {
  double fraction = 1.0;
  std::size_t training_sentences = 0;
  std::size_t training_words = 0;
  ScoreReport report;
};

// Trains on the first round_half_up(fraction * n) training sentences for
// every fraction, decodes the test set and scores it.
std::vector<CurvePoint> RunLearningCurve(const std::vector<AnnotatedSentence>& training,
                                         const std::vector<AnnotatedSentence>& test,
                                         const std::vector<double>& fractions,
                                         const FeatureConfig& config, double beta);

std::size_t CountWords(const std::vector<AnnotatedSentence>& sentences);

}  // namespace namefinder

#endif  // NAMEFINDER_EXPERIMENT_H_
