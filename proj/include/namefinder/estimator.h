#ifndef NAMEFINDER_ESTIMATOR_H_
#define NAMEFINDER_ESTIMATOR_H_

#include <cstdint>
#include <vector>

#include "namefinder/counts.h"

namespace namefinder {

struct LambdaInputs {
  double context_count = 0;      // c(Y) at this level
  double old_context_count = 0;  // c(Y) at the level we backed off from
  double unique_outcomes = 0;    // distinct events seen with Y
};

// Weight of the direct estimate at one back-off level:
//   (1 - old/c) * 1 / (1 + unique/c)
// An unseen context (c = 0) gets weight 0, and so does a level whose
// sample is no larger than the one above it.
double Lambda(const LambdaInputs& in);

// Value assigned to the last, uniform level of the two word chains.
enum class UniformFloor {
  // 1/|V| * 1/14 for both word chains.
  kPrinted,
  // 1/|outcome space|, so the full mixture sums to one. Used by tests.
  kNormalized,
};

// One evaluated level of a back-off chain.
struct BackoffLevel {
  double estimate = 0;        // direct (maximum-likelihood) value
  double lambda = 0;          // weight given to `estimate`
  std::uint64_t context_count = 0;
  std::uint64_t unique_outcomes = 0;
};

struct BackoffTrace {
  std::vector<BackoffLevel> levels;  // most specific first
  double uniform = 0;                // value of the final uniform level
  double probability = 0;
};

// Smoothed probabilities of the three distribution families. All
// mixing happens in linear space. Holds a reference to the model, which
// must outlive the estimator.
class Estimator {
 public:
  explicit Estimator(const TrainedModel& model,
                     UniformFloor floor = UniformFloor::kPrinted);

  // Unknown-word tables when either word of the bigram is out of
  // vocabulary, main tables otherwise. Sentinels count as known.
  const CountTables& SelectTables(WordId word, WordId previous) const;

  // Pr(NC | NC-1, w-1) -> Pr(NC | NC-1) -> Pr(NC) -> 1/9.
  double ClassTransition(NameClass nc, NameClass prev, WordId prev_word,
                         const CountTables& tables) const;

  // Pr(<w,f>_first | NC, NC-1) -> Pr(<w,f> | <+begin+,other>, NC)
  //   -> Pr(<w,f> | NC) -> Pr(w|NC) Pr(f|NC) -> uniform.
  double FirstWord(TokenKey token, NameClass nc, NameClass prev,
                   const CountTables& tables) const;

  // Pr(<w,f> | <w,f>-1, NC) -> Pr(<w,f> | NC) -> Pr(w|NC) Pr(f|NC)
  //   -> uniform. `token` may be <+end+, other>.
  double NextWord(TokenKey token, TokenKey prev, NameClass nc,
                  const CountTables& tables) const;

  BackoffTrace TraceClassTransition(NameClass nc, NameClass prev, WordId prev_word,
                                    const CountTables& tables) const;
  BackoffTrace TraceFirstWord(TokenKey token, NameClass nc, NameClass prev,
                              const CountTables& tables) const;
  BackoffTrace TraceNextWord(TokenKey token, TokenKey prev, NameClass nc,
                             const CountTables& tables) const;

  // Uniform values of the three chains under the configured floor.
  double ClassUniform() const { return 1.0 / kNumTransitionOutcomes; }
  double FirstWordUniform() const { return first_uniform_; }
  double NextWordUniform() const { return next_uniform_; }

  const TrainedModel& model() const { return model_; }

 private:
  const TrainedModel& model_;
  double first_uniform_;
  double next_uniform_;
};

}  // namespace namefinder

#endif  // NAMEFINDER_ESTIMATOR_H_
