#ifndef NAMEFINDER_CORPUS_H_
#define NAMEFINDER_CORPUS_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "namefinder/name_class.h"

namespace namefinder {

// Half-open token span [start, end) labelled with an entity class.
// NOT-A-NAME is never stored as a region.
struct Region {
  std::size_t start = 0;
  std::size_t end = 0;
  NameClass name_class = NameClass::kNotAName;

  friend bool operator==(const Region&, const Region&) = default;
};

struct AnnotatedSentence {
  std::vector<std::string> tokens;
  std::vector<Region> regions;  // disjoint, sorted by start

  friend bool operator==(const AnnotatedSentence&,
                         const AnnotatedSentence&) = default;
};

using Sentence = std::vector<std::string>;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Inline markup reader. Each line holds one or more sentences; a newline
// always ends a sentence. Recognized tags:
//   <ENAMEX TYPE="PERSON|ORGANIZATION|LOCATION">...</ENAMEX>
//   <TIMEX TYPE="DATE|TIME">...</TIMEX>
//   <NUMEX TYPE="MONEY|PERCENT">...</NUMEX>
// Tags may not nest or span sentences. &amp; &lt; &gt; are unescaped.
// Throws ParseError with a 1-based line/column.
std::vector<AnnotatedSentence> ParseAnnotated(std::string_view document);

// Writes one sentence per line, tokens separated by single spaces.
std::string EmitAnnotated(const std::vector<AnnotatedSentence>& sentences);

// Rule-based tokenizer and sentence splitter for plain text.
std::vector<Sentence> Tokenize(std::string_view text);

// Splits a whitespace-free chunk into tokens (no sentence splitting).
std::vector<std::string> TokenizeChunk(std::string_view chunk);

// Closed abbreviation list; these keep their trailing period and never
// end a sentence. Letter-period sequences such as "J." or "U.S." behave
// the same way.
bool IsAbbreviation(std::string_view token);

// True for tokens after which the sentence splitter breaks.
bool IsSentenceTerminal(std::string_view token);

// Seeded shuffle then cut: part_a receives round_half_up(fraction * n)
// sentences. Both parts keep the input's relative order.
template <typename T>
std::pair<std::vector<T>, std::vector<T>> SplitCorpus(const std::vector<T>& items,
                                                      double fraction,
                                                      std::uint64_t seed);

// Number of items a fraction selects, rounding halves up.
std::size_t FractionCount(std::size_t total, double fraction);

// Indices selected for part_a by SplitCorpus, ascending.
std::vector<std::size_t> SplitIndices(std::size_t total, double fraction,
                                      std::uint64_t seed);

template <typename T>
std::pair<std::vector<T>, std::vector<T>> SplitCorpus(const std::vector<T>& items,
                                                      double fraction,
                                                      std::uint64_t seed) {
  const std::vector<std::size_t> chosen =
      SplitIndices(items.size(), fraction, seed);
  std::vector<bool> in_a(items.size(), false);
  for (std::size_t i : chosen) in_a[i] = true;
  std::pair<std::vector<T>, std::vector<T>> parts;
  for (std::size_t i = 0; i < items.size(); ++i) {
    (in_a[i] ? parts.first : parts.second).push_back(items[i]);
  }
  return parts;
}

}  // namespace namefinder

#endif  // NAMEFINDER_CORPUS_H_
