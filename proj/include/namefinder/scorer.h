#ifndef NAMEFINDER_SCORER_H_
#define NAMEFINDER_SCORER_H_

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "namefinder/corpus.h"

namespace namefinder {

struct ClassScore {
  std::uint64_t correct = 0;
  std::uint64_t responses = 0;
  std::uint64_t keys = 0;
  double precision = 0;
  double recall = 0;
  double f_measure = 0;
};

// Entity classes only; NOT-A-NAME is never scored.
inline constexpr int kNumScoredClasses = kNumEmittingClasses - 1;

struct ScoreReport {
  double beta = 1.0;
  std::array<ClassScore, kNumScoredClasses> per_class;  // indexed by NameClass
  ClassScore overall;
};

class AlignmentError : public std::runtime_error {
 public:
  AlignmentError(std::size_t sentence, std::size_t token, const std::string& what);
  std::size_t sentence() const { return sentence_; }
  std::size_t token() const { return token_; }

 private:
  std::size_t sentence_;
  std::size_t token_;
};

// Exact-match scoring: a response region is correct iff the key holds a
// region with the same sentence, span and class. Key and response must
// share their tokenization, otherwise AlignmentError names the first
// divergent sentence and token (0-based).
ScoreReport Score(const std::vector<AnnotatedSentence>& key,
                  const std::vector<AnnotatedSentence>& response, double beta = 1.0);

// (beta^2 + 1) R P / (beta^2 R + P), 0 when P and R are both 0.
double FMeasure(double precision, double recall, double beta);

// 100 * (1 - F).
double ErrorRate(const ScoreReport& report);

// Human-readable table with one row per class and an ALL row.
std::string FormatReport(const ScoreReport& report);

// One "CLASS P R F" line per class plus "ALL".
std::string FormatReportRecords(const ScoreReport& report);

}  // namespace namefinder

#endif  // NAMEFINDER_SCORER_H_
