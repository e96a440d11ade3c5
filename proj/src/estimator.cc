#include "namefinder/estimator.h"

#include <algorithm>

namespace namefinder {

double Lambda(const LambdaInputs& in) {
  if (in.context_count <= 0) return 0.0;
  const double fresh = 1.0 - in.old_context_count / in.context_count;
  if (fresh <= 0) return 0.0;
  return fresh / (1.0 + in.unique_outcomes / in.context_count);
}

namespace {

// Accumulates sum_k w_k * estimate_k + w_floor * uniform, where
// w_k = lambda_k * prod_{j<k} (1 - lambda_j).
class Chain {
 public:
  explicit Chain(BackoffTrace* trace) : trace_(trace) {}

  void Level(std::uint64_t event_count, ConditionalCounts::ContextStats ctx) {
    const double estimate =
        ctx.total == 0 ? 0.0
                       : static_cast<double>(event_count) / static_cast<double>(ctx.total);
    LevelWithEstimate(estimate, ctx.total, ctx.unique);
  }

  void LevelWithEstimate(double estimate, std::uint64_t total, std::uint64_t unique) {
    const double lambda = Lambda({static_cast<double>(total),
                                  static_cast<double>(old_total_),
                                  static_cast<double>(unique)});
    result_ += remaining_ * lambda * estimate;
    remaining_ *= 1.0 - lambda;
    old_total_ = total;
    if (trace_ != nullptr) {
      trace_->levels.push_back({estimate, lambda, total, unique});
    }
  }

  double Finish(double uniform) {
    result_ += remaining_ * uniform;
    if (trace_ != nullptr) {
      trace_->uniform = uniform;
      trace_->probability = result_;
    }
    return result_;
  }

 private:
  BackoffTrace* trace_;
  double result_ = 0;
  double remaining_ = 1;
  std::uint64_t old_total_ = 0;
};

double ClassTransitionImpl(NameClass nc, NameClass prev, WordId prev_word,
                           const CountTables& t, double uniform,
                           BackoffTrace* trace) {
  Chain chain(trace);
  const auto event = keys::Class(nc);
  const auto ctx0 = keys::ClassWord(prev, prev_word);
  chain.Level(t.transition.Count(ctx0, event), t.transition.Context(ctx0));
  const auto ctx1 = keys::Class(prev);
  chain.Level(t.transition_bigram.Count(ctx1, event), t.transition_bigram.Context(ctx1));
  chain.Level(t.transition_unigram.Count(keys::kEmpty, event),
              t.transition_unigram.Context(keys::kEmpty));
  return chain.Finish(uniform);
}

// Pr(w|NC) * Pr(f|NC) over real emissions of the class.
void ProductLevel(Chain& chain, TokenKey token, NameClass nc, const CountTables& t) {
  const auto ctx = keys::Class(nc);
  const auto words = t.word_only.Context(ctx);
  double estimate = 0;
  if (words.total > 0 && token != kEndToken) {
    const double total = static_cast<double>(words.total);
    estimate = static_cast<double>(t.word_only.Count(ctx, TokenWord(token))) / total *
               static_cast<double>(t.feature_only.Count(
                   ctx, static_cast<std::uint64_t>(TokenFeature(token)))) /
               total;
  }
  chain.LevelWithEstimate(estimate, words.total, words.unique);
}

double FirstWordImpl(TokenKey token, NameClass nc, NameClass prev,
                     const CountTables& t, double uniform, BackoffTrace* trace) {
  Chain chain(trace);
  const auto ctx0 = keys::ClassPair(nc, prev);
  chain.Level(t.first_word.Count(ctx0, token), t.first_word.Context(ctx0));
  const auto ctx1 = keys::Class(nc);
  chain.Level(t.begin_bigram.Count(ctx1, token), t.begin_bigram.Context(ctx1));

  // Pr(<w,f> | NC) restricted to real words: a first word is never +end+.
  const auto all = t.word_unigram.Context(ctx1);
  const std::uint64_t ends = t.word_unigram.Count(ctx1, kEndToken);
  const std::uint64_t total = all.total - ends;
  const std::uint64_t unique = all.unique - (ends > 0 ? 1 : 0);
  const double estimate =
      (total == 0 || token == kEndToken)
          ? 0.0
          : static_cast<double>(t.word_unigram.Count(ctx1, token)) /
                static_cast<double>(total);
  chain.LevelWithEstimate(estimate, total, unique);

  ProductLevel(chain, token, nc, t);
  return chain.Finish(uniform);
}

double NextWordImpl(TokenKey token, TokenKey prev, NameClass nc, const CountTables& t,
                    double uniform, BackoffTrace* trace) {
  Chain chain(trace);
  const auto ctx0 = keys::TokenClass(prev, nc);
  chain.Level(t.word_bigram.Count(ctx0, token), t.word_bigram.Context(ctx0));
  const auto ctx1 = keys::Class(nc);
  chain.Level(t.word_unigram.Count(ctx1, token), t.word_unigram.Context(ctx1));
  ProductLevel(chain, token, nc, t);
  return chain.Finish(uniform);
}

}  // namespace

Estimator::Estimator(const TrainedModel& model, UniformFloor floor) : model_(model) {
  const double vocab = static_cast<double>(std::max<std::size_t>(1, model.vocab.size()));
  if (floor == UniformFloor::kPrinted) {
    first_uniform_ = 1.0 / vocab / kNumWordFeatures;
    next_uniform_ = first_uniform_;
  } else {
    // Real words plus +unk+, times every feature; +end+ adds one outcome
    // to the non-first-word space.
    const double space = (static_cast<double>(model.vocab.size()) + 1) * kNumWordFeatures;
    first_uniform_ = 1.0 / space;
    next_uniform_ = 1.0 / (space + 1);
  }
}

const CountTables& Estimator::SelectTables(WordId word, WordId previous) const {
  return (word == kUnknownWord || previous == kUnknownWord) ? model_.unknown
                                                            : model_.main;
}

double Estimator::ClassTransition(NameClass nc, NameClass prev, WordId prev_word,
                                  const CountTables& tables) const {
  return ClassTransitionImpl(nc, prev, prev_word, tables, ClassUniform(), nullptr);
}

double Estimator::FirstWord(TokenKey token, NameClass nc, NameClass prev,
                            const CountTables& tables) const {
  return FirstWordImpl(token, nc, prev, tables, first_uniform_, nullptr);
}

double Estimator::NextWord(TokenKey token, TokenKey prev, NameClass nc,
                           const CountTables& tables) const {
  return NextWordImpl(token, prev, nc, tables, next_uniform_, nullptr);
}

BackoffTrace Estimator::TraceClassTransition(NameClass nc, NameClass prev,
                                             WordId prev_word,
                                             const CountTables& tables) const {
  BackoffTrace trace;
  ClassTransitionImpl(nc, prev, prev_word, tables, ClassUniform(), &trace);
  return trace;
}

BackoffTrace Estimator::TraceFirstWord(TokenKey token, NameClass nc, NameClass prev,
                                       const CountTables& tables) const {
  BackoffTrace trace;
  FirstWordImpl(token, nc, prev, tables, first_uniform_, &trace);
  return trace;
}

BackoffTrace Estimator::TraceNextWord(TokenKey token, TokenKey prev, NameClass nc,
                                      const CountTables& tables) const {
  BackoffTrace trace;
  NextWordImpl(token, prev, nc, tables, next_uniform_, &trace);
  return trace;
}

}  // namespace namefinder
