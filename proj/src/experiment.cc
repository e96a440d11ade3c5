#include "namefinder/experiment.h"

#include <stdexcept>
#include <string>

namespace namefinder {

std::vector<AnnotatedSentence> DecodeAligned(const Decoder& decoder,
                                             const std::vector<AnnotatedSentence>& key) {
  std::vector<AnnotatedSentence> response;
  response.reserve(key.size());
  for (const AnnotatedSentence& s : key) {
    if (s.tokens.empty()) {
      response.push_back({});
    } else {
      response.push_back(decoder.DecodeSentence(s.tokens).sentence);
    }
  }
  return response;
}

std::size_t CountWords(const std::vector<AnnotatedSentence>& sentences) {
  std::size_t n = 0;
  for (const AnnotatedSentence& s : sentences) n += s.tokens.size();
  return n;
}

std::vector<CurvePoint> RunLearningCurve(const std::vector<AnnotatedSentence>& training,
                                         const std::vector<AnnotatedSentence>& test,
                                         const std::vector<double>& fractions,
                                         const FeatureConfig& config, double beta) {
  std::vector<CurvePoint> points;
  for (double fraction : fractions) {
    if (!(fraction > 0.0 && fraction <= 1.0)) {
      throw std::invalid_argument("fraction " + std::to_string(fraction) +
                                  " outside (0, 1]");
    }
    const std::size_t n = FractionCount(training.size(), fraction);
    const std::vector<AnnotatedSentence> subset(training.begin(), training.begin() + n);
    const TrainedModel model = Train(subset, config);
    const Decoder decoder(model);
    CurvePoint point;
    point.fraction = fraction;
    point.training_sentences = n;
    point.training_words = CountWords(subset);
    point.report = Score(test, DecodeAligned(decoder, test), beta);
    points.push_back(point);
  }
  return points;
}

}  // namespace namefinder
