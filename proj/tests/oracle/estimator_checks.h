// Whole-model checks shared by the estimator unit tests and the
// acceptance suite.
#ifndef NAMEFINDER_TESTS_ORACLE_ESTIMATOR_CHECKS_H_
#define NAMEFINDER_TESTS_ORACLE_ESTIMATOR_CHECKS_H_

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "namefinder/estimator.h"
#include "oracle/random_corpus.h"
#include "oracle/reference_estimator.h"

namespace namefinder::testing {

// Largest |sum - 1| over every context of every family, both table sets,
// under the normalized uniform floor. Outcome space: (V + unk) x 14
// features, plus <+end+, other> for non-first words.
inline double MaxNormalizationError(const TrainedModel& model) {
  const Estimator est(model, UniformFloor::kNormalized);
  std::vector<WordId> words = {kUnknownWord};
  for (WordId w = kFirstRealWord; w < model.vocab.id_limit(); ++w) words.push_back(w);
  std::vector<TokenKey> tokens;
  for (WordId w : words) {
    for (int f = 0; f < kNumWordFeatures; ++f) {
      tokens.push_back(MakeTokenKey(w, static_cast<WordFeature>(f)));
    }
  }
  std::vector<NameClass> prevs(kEmittingClasses.begin(), kEmittingClasses.end());
  prevs.push_back(NameClass::kStartOfSentence);

  double worst = 0;
  const auto record = [&](double sum) { worst = std::max(worst, std::abs(sum - 1.0)); };
  for (const CountTables* t : {&model.main, &model.unknown}) {
    std::vector<WordId> prev_words = words;
    prev_words.push_back(kEndWord);
    for (NameClass prev : prevs) {
      for (WordId pw : prev_words) {
        double sum = est.ClassTransition(NameClass::kEndOfSentence, prev, pw, *t);
        for (NameClass nc : kEmittingClasses) sum += est.ClassTransition(nc, prev, pw, *t);
        record(sum);
      }
    }
    for (NameClass nc : kEmittingClasses) {
      for (NameClass prev : prevs) {
        double sum = 0;
        for (TokenKey tok : tokens) sum += est.FirstWord(tok, nc, prev, *t);
        record(sum);
      }
    }
    // Every observed bigram context, plus one never-seen context per class.
    std::set<std::uint64_t> contexts;
    t->word_bigram.ForEach([&](std::uint64_t ctx, std::uint64_t, std::uint64_t) {
      contexts.insert(ctx);
    });
    for (NameClass nc : kEmittingClasses) {
      contexts.insert(keys::TokenClass(MakeTokenKey(kUnknownWord, WordFeature::kOther), nc));
    }
    for (std::uint64_t ctx : contexts) {
      const TokenKey prev = ctx >> 4;
      const auto nc = static_cast<NameClass>(ctx & 0xF);
      double sum = est.NextWord(kEndToken, prev, nc, *t);
      for (TokenKey tok : tokens) sum += est.NextWord(tok, prev, nc, *t);
      record(sum);
    }
  }
  return worst;
}

// Random queries of all three families, answered by both the production
// estimator and the reference model. Half of the token queries reuse
// observed events so the specific levels are exercised, not just the floor.
class OracleSampler {
 public:
  OracleSampler(const TrainedModel& model, const ReferenceModel& ref, std::size_t vocab_size)
      : model_(model), ref_(ref), est_(model), vocab_size_(vocab_size) {
    for (const CountTables* t : {&model.main, &model.unknown}) {
      t->word_bigram.ForEach([&](std::uint64_t ctx, std::uint64_t ev, std::uint64_t) {
        bigrams_.push_back({ctx >> 4, ev, static_cast<NameClass>(ctx & 0xF)});
      });
      t->first_word.ForEach([&](std::uint64_t ctx, std::uint64_t ev, std::uint64_t) {
        firsts_.push_back({ev, static_cast<NameClass>(ctx >> 4), static_cast<NameClass>(ctx & 0xF)});
      });
    }
  }

  // |production - reference| for one random query.
  double Query(std::mt19937_64& rng) const {
    switch (rng() % 3) {
      case 0: return Transition(rng);
      case 1: return First(rng);
      default: return Next(rng);
    }
  }

 private:
  struct Observed {
    TokenKey a;
    TokenKey b;
    NameClass nc;
  };
  struct ObservedFirst {
    TokenKey token;
    NameClass nc;
    NameClass prev;
  };

  std::string Word(std::mt19937_64& rng) const {
    if (rng() % 6 == 0) return "Unseen" + std::to_string(rng() % 3);
    return WordPool()[rng() % std::min(vocab_size_, WordPool().size())];
  }
  NameClass Class(std::mt19937_64& rng) const {
    return ClassFromIndex(static_cast<int>(rng() % kNumEmittingClasses));
  }
  static WordFeature Feature(std::mt19937_64& rng) {
    return static_cast<WordFeature>(rng() % kNumWordFeatures);
  }
  RefToken Ref(TokenKey key) const {
    return {model_.vocab.Word(TokenWord(key)), TokenFeature(key)};
  }
  TokenKey Key(const RefToken& t) const {
    return MakeTokenKey(t.word == kEndSpelling ? kEndWord : model_.Lookup(t.word), t.feature);
  }

  double Transition(std::mt19937_64& rng) const {
    const NameClass nc = rng() % 9 == 0 ? NameClass::kEndOfSentence : Class(rng);
    const bool at_start = rng() % 4 == 0;
    const NameClass prev = at_start ? NameClass::kStartOfSentence : Class(rng);
    const std::string pw = at_start ? std::string(kEndSpelling) : Word(rng);
    const std::string next =
        nc == NameClass::kEndOfSentence ? std::string(kEndSpelling) : Word(rng);
    const WordId pid = at_start ? kEndWord : model_.Lookup(pw);
    const WordId nid = nc == NameClass::kEndOfSentence ? kEndWord : model_.Lookup(next);
    const CountTables& t = est_.SelectTables(nid, pid);
    return std::abs(est_.ClassTransition(nc, prev, pid, t) -
                    ref_.ClassTransition(nc, prev, pw, next));
  }

  double First(std::mt19937_64& rng) const {
    RefToken tok{Word(rng), Feature(rng)};
    NameClass nc = Class(rng);
    NameClass prev = rng() % 4 == 0 ? NameClass::kStartOfSentence : Class(rng);
    if (!firsts_.empty() && rng() % 2 == 0) {
      const ObservedFirst& o = firsts_[rng() % firsts_.size()];
      tok = Ref(o.token);
      nc = o.nc;
      prev = o.prev;
    }
    const bool at_start = prev == NameClass::kStartOfSentence;
    const std::string pw = at_start ? std::string(kEndSpelling) : Word(rng);
    const WordId pid = at_start ? kEndWord : model_.Lookup(pw);
    const TokenKey key = Key(tok);
    const CountTables& t = est_.SelectTables(TokenWord(key), pid);
    return std::abs(est_.FirstWord(key, nc, prev, t) - ref_.FirstWord(tok, nc, prev, pw));
  }

  double Next(std::mt19937_64& rng) const {
    RefToken tok = rng() % 4 == 0 ? RefToken{std::string(kEndSpelling), WordFeature::kOther}
                                  : RefToken{Word(rng), Feature(rng)};
    RefToken prev{Word(rng), Feature(rng)};
    NameClass nc = Class(rng);
    if (!bigrams_.empty() && rng() % 2 == 0) {
      const Observed& o = bigrams_[rng() % bigrams_.size()];
      prev = Ref(o.a);
      nc = o.nc;
      if (rng() % 2 == 0) tok = Ref(o.b);
    }
    const TokenKey key = Key(tok), prev_key = Key(prev);
    const CountTables& t = est_.SelectTables(TokenWord(key), TokenWord(prev_key));
    return std::abs(est_.NextWord(key, prev_key, nc, t) - ref_.NextWord(tok, prev, nc));
  }

  const TrainedModel& model_;
  const ReferenceModel& ref_;
  Estimator est_;
  std::size_t vocab_size_;
  std::vector<Observed> bigrams_;
  std::vector<ObservedFirst> firsts_;
};

}  // namespace namefinder::testing

#endif  // NAMEFINDER_TESTS_ORACLE_ESTIMATOR_CHECKS_H_
