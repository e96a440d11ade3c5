#ifndef NAMEFINDER_COUNTS_H_
#define NAMEFINDER_COUNTS_H_

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "namefinder/corpus.h"
#include "namefinder/features.h"
#include "namefinder/name_class.h"
#include "namefinder/vocabulary.h"

namespace namefinder {

// Counts c(event, context) for one conditional distribution, with the
// per-context sample size and number of distinct outcomes kept alongside.
class ConditionalCounts {
 public:
  using Key = std::uint64_t;

  struct ContextStats {
    std::uint64_t total = 0;
    std::uint64_t unique = 0;
    friend bool operator==(const ContextStats&, const ContextStats&) = default;
  };

  void Add(Key context, Key event, std::uint64_t n = 1);
  void Merge(const ConditionalCounts& other);

  std::uint64_t Count(Key context, Key event) const;
  ContextStats Context(Key context) const;

  std::size_t num_events() const { return joint_.size(); }
  std::size_t num_contexts() const { return contexts_.size(); }

  // Calls fn(context, event, count) for every nonzero entry, unordered.
  template <typename Fn>
  void ForEach(Fn&& fn) const {
    for (const auto& [key, count] : joint_) fn(key.context, key.event, count);
  }

  bool operator==(const ConditionalCounts& other) const {
    return joint_ == other.joint_ && contexts_ == other.contexts_;
  }

 private:
  struct PairKey {
    Key context;
    Key event;
    friend bool operator==(const PairKey&, const PairKey&) = default;
  };
  struct PairHash {
    std::size_t operator()(const PairKey& k) const {
      std::uint64_t h = k.context * 0x9E3779B97F4A7C15ULL;
      h ^= k.event + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
      h ^= h >> 29;
      return static_cast<std::size_t>(h * 0xBF58476D1CE4E5B9ULL);
    }
  };

  std::unordered_map<PairKey, std::uint64_t, PairHash> joint_;
  std::unordered_map<Key, ContextStats> contexts_;
};

// Context/event key builders shared by counting, estimation and I/O.
namespace keys {
constexpr std::uint64_t Class(NameClass c) { return static_cast<std::uint64_t>(c); }
// (NC-1, w-1); the feature of w-1 is deliberately absent.
constexpr std::uint64_t ClassWord(NameClass c, WordId w) {
  return (static_cast<std::uint64_t>(w) << 4) | Class(c);
}
// (NC, NC-1)
constexpr std::uint64_t ClassPair(NameClass nc, NameClass prev) {
  return (Class(nc) << 4) | Class(prev);
}
// (<w,f>-1, NC)
constexpr std::uint64_t TokenClass(TokenKey token, NameClass nc) {
  return (token << 4) | Class(nc);
}
inline constexpr std::uint64_t kEmpty = 0;
}  // namespace keys

// Every table needed by the three back-off chains.
struct CountTables {
  ConditionalCounts transition;          // NC | NC-1, w-1
  ConditionalCounts transition_bigram;   // NC | NC-1
  ConditionalCounts transition_unigram;  // NC | (empty)
  ConditionalCounts first_word;          // <w,f>_first | NC, NC-1
  ConditionalCounts begin_bigram;        // <w,f>_first | <+begin+,other>, NC
  ConditionalCounts word_bigram;         // <w,f> | <w,f>-1, NC (incl. +end+)
  ConditionalCounts word_unigram;        // <w,f> | NC (all emissions, incl. +end+)
  ConditionalCounts word_only;           // w | NC (real emissions)
  ConditionalCounts feature_only;        // f | NC (real emissions)

  void Merge(const CountTables& other);
  bool operator==(const CountTables& other) const = default;
};

class TrainingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Harvests every event of every sentence. When map_unknown is set, words
// the vocabulary does not recognize are counted as <+unk+, f>; otherwise
// an unrecognized word throws std::invalid_argument.
CountTables CollectCounts(const std::vector<AnnotatedSentence>& sentences,
                          const Vocabulary& vocab, bool map_unknown,
                          const FeatureConfig& config);

struct TrainedModel {
  Vocabulary vocab;
  CountTables main;
  CountTables unknown;
  FeatureConfig feature_config;

  // Word id for decoding: kUnknownWord when out of vocabulary.
  WordId Lookup(std::string_view word) const { return vocab.Lookup(word); }
};

// Main tables over all sentences; unknown-word tables from the two
// held-out passes (second half against the first half's vocabulary, then
// the reverse), added together. Needs at least two sentences.
TrainedModel Train(const std::vector<AnnotatedSentence>& sentences,
                   const FeatureConfig& config = {});

// Builds a frozen vocabulary of every token in the corpus, in first-seen order.
Vocabulary BuildVocabulary(const std::vector<AnnotatedSentence>& sentences);

// Labels every token, NOT-A-NAME stretches included, as maximal segments.
struct Segment {
  std::size_t start = 0;
  std::size_t end = 0;
  NameClass name_class = NameClass::kNotAName;
  friend bool operator==(const Segment&, const Segment&) = default;
};
std::vector<Segment> SegmentsOf(const AnnotatedSentence& sentence);

}  // namespace namefinder

#endif  // NAMEFINDER_COUNTS_H_
