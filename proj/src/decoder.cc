#include "namefinder/decoder.h"

#include <array>
#include <cmath>
#include <limits>

namespace namefinder {
namespace {

constexpr int kN = kNumEmittingClasses;

struct Backpointer {
  std::uint8_t prev_class = 0;
  bool boundary = false;
};

std::vector<Segment> Backtrace(const std::vector<std::array<Backpointer, kN>>& bp,
                               int final_class) {
  std::vector<Segment> reversed;
  const std::size_t m = bp.size();
  int c = final_class;
  std::size_t end = m;
  for (std::size_t t = m - 1; t > 0; --t) {
    const Backpointer& b = bp[t][c];
    if (b.boundary) {
      reversed.push_back({t, end, ClassFromIndex(c)});
      end = t;
    }
    c = b.prev_class;
  }
  reversed.push_back({0, end, ClassFromIndex(c)});
  return {reversed.rbegin(), reversed.rend()};
}

}  // namespace

std::vector<TokenKey> MapTokens(const Sentence& tokens, const TrainedModel& model) {
  std::vector<TokenKey> keys;
  keys.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    keys.push_back(MakeTokenKey(model.Lookup(tokens[i]),
                                ComputeFeature(tokens[i], i == 0, model.feature_config)));
  }
  return keys;
}

Decoder::Decoder(const TrainedModel& model) : model_(model), estimator_(model) {}

DecodeResult Decoder::DecodeSentence(const Sentence& tokens) const {
  const std::size_t m = tokens.size();
  const std::vector<TokenKey> keys = MapTokens(tokens, model_);
  const Estimator& est = estimator_;

  std::array<double, kN> score{};
  std::vector<std::array<Backpointer, kN>> bp(m);

  {
    const WordId w0 = TokenWord(keys[0]);
    const CountTables& tables = est.SelectTables(w0, kEndWord);
    for (int c = 0; c < kN; ++c) {
      const NameClass nc = ClassFromIndex(c);
      double s = std::log(est.ClassTransition(nc, NameClass::kStartOfSentence,
                                              kEndWord, tables));
      s += std::log(est.FirstWord(keys[0], nc, NameClass::kStartOfSentence, tables));
      score[c] = s;
    }
  }

  std::array<double, kN> end_of_region{};
  std::array<double, kN> next{};
  for (std::size_t t = 1; t < m; ++t) {
    const TokenKey prev_key = keys[t - 1];
    const WordId w_prev = TokenWord(prev_key);
    const WordId w = TokenWord(keys[t]);
    const CountTables& tables = est.SelectTables(w, w_prev);
    const CountTables& end_tables = est.SelectTables(kEndWord, w_prev);
    for (int c = 0; c < kN; ++c) {
      end_of_region[c] = score[c] + std::log(est.NextWord(
                                        kEndToken, prev_key, ClassFromIndex(c), end_tables));
    }
    for (int c = 0; c < kN; ++c) {
      const NameClass nc = ClassFromIndex(c);
      double best = score[c] + std::log(est.NextWord(keys[t], prev_key, nc, tables));
      Backpointer best_bp{static_cast<std::uint8_t>(c), false};
      for (int p = 0; p < kN; ++p) {
        const NameClass pc = ClassFromIndex(p);
        double s = end_of_region[p];
        s += std::log(est.ClassTransition(nc, pc, w_prev, tables));
        s += std::log(est.FirstWord(keys[t], nc, pc, tables));
        if (s > best) {
          best = s;
          best_bp = {static_cast<std::uint8_t>(p), true};
        }
      }
      next[c] = best;
      bp[t][c] = best_bp;
    }
    score = next;
  }

  const WordId w_last = TokenWord(keys[m - 1]);
  const CountTables& end_tables = est.SelectTables(kEndWord, w_last);
  double best = -std::numeric_limits<double>::infinity();
  int best_class = 0;
  for (int c = 0; c < kN; ++c) {
    const NameClass nc = ClassFromIndex(c);
    double s = score[c] + std::log(est.NextWord(kEndToken, keys[m - 1], nc, end_tables));
    s += std::log(est.ClassTransition(NameClass::kEndOfSentence, nc, w_last, end_tables));
    if (s > best) {
      best = s;
      best_class = c;
    }
  }

  DecodeResult result;
  result.sentence.tokens = tokens;
  result.segments = Backtrace(bp, best_class);
  result.log_score = best;
  for (const Segment& seg : result.segments) {
    if (seg.name_class != NameClass::kNotAName) {
      result.sentence.regions.push_back({seg.start, seg.end, seg.name_class});
    }
  }
  return result;
}

std::vector<DecodeResult> Decoder::DecodeDocument(std::string_view text) const {
  std::vector<DecodeResult> results;
  for (const Sentence& sentence : Tokenize(text)) {
    if (!sentence.empty()) results.push_back(DecodeSentence(sentence));
  }
  return results;
}

double Decoder::ScoreSegmentation(const Sentence& tokens,
                                  const std::vector<Segment>& segments) const {
  const std::vector<TokenKey> keys = MapTokens(tokens, model_);
  const Estimator& est = estimator_;
  double total = 0;
  NameClass prev = NameClass::kStartOfSentence;
  WordId prev_word = kEndWord;
  for (const Segment& seg : segments) {
    const TokenKey first = keys[seg.start];
    const CountTables& tables = est.SelectTables(TokenWord(first), prev_word);
    total += std::log(est.ClassTransition(seg.name_class, prev, prev_word, tables));
    total += std::log(est.FirstWord(first, seg.name_class, prev, tables));
    for (std::size_t i = seg.start + 1; i < seg.end; ++i) {
      const CountTables& t =
          est.SelectTables(TokenWord(keys[i]), TokenWord(keys[i - 1]));
      total += std::log(est.NextWord(keys[i], keys[i - 1], seg.name_class, t));
    }
    const TokenKey last = keys[seg.end - 1];
    const CountTables& end_tables = est.SelectTables(kEndWord, TokenWord(last));
    total += std::log(est.NextWord(kEndToken, last, seg.name_class, end_tables));
    prev = seg.name_class;
    prev_word = TokenWord(last);
  }
  const CountTables& end_tables = est.SelectTables(kEndWord, prev_word);
  total += std::log(est.ClassTransition(NameClass::kEndOfSentence, prev, prev_word,
                                        end_tables));
  return total;
}

}  // namespace namefinder
