#ifndef NAMEFINDER_DECODER_H_
#define NAMEFINDER_DECODER_H_

#include <string_view>
#include <vector>

#include "namefinder/corpus.h"
#include "namefinder/counts.h"
#include "namefinder/estimator.h"

namespace namefinder {

struct DecodeResult {
  AnnotatedSentence sentence;     // tokens plus recovered regions
  std::vector<Segment> segments;  // full labelling, NOT-A-NAME included
  double log_score = 0;           // natural log of Pr(W, NC) on the best path
};

// Exact Viterbi search over class sequences and region boundaries, one
// theory per emitting class per token. Ties go to the earlier class in
// inventory order; continuing a region beats opening a new one at equal
// score.
class Decoder {
 public:
  explicit Decoder(const TrainedModel& model);

  // `tokens` must be non-empty.
  DecodeResult DecodeSentence(const Sentence& tokens) const;

  // Tokenizes then decodes sentence by sentence.
  std::vector<DecodeResult> DecodeDocument(std::string_view text) const;

  // log Pr(W, NC) of an explicit labelling, computed factor by factor.
  double ScoreSegmentation(const Sentence& tokens,
                           const std::vector<Segment>& segments) const;

  const Estimator& estimator() const { return estimator_; }

 private:
  const TrainedModel& model_;
  Estimator estimator_;
};

// Token keys as the model sees them: out-of-vocabulary words become
// <+unk+, f>, features follow the model's configuration.
std::vector<TokenKey> MapTokens(const Sentence& tokens, const TrainedModel& model);

}  // namespace namefinder

#endif  // NAMEFINDER_DECODER_H_
