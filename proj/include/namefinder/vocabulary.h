#ifndef NAMEFINDER_VOCABULARY_H_
#define NAMEFINDER_VOCABULARY_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "namefinder/features.h"

namespace namefinder {

using WordId = std::uint32_t;

// Reserved ids. Real words start at kFirstRealWord.
inline constexpr WordId kEndWord = 0;      // "+end+"
inline constexpr WordId kBeginWord = 1;    // "+begin+"
inline constexpr WordId kUnknownWord = 2;  // out-of-vocabulary stand-in
inline constexpr WordId kFirstRealWord = 3;

inline constexpr std::string_view kEndSpelling = "+end+";
inline constexpr std::string_view kBeginSpelling = "+begin+";
inline constexpr std::string_view kUnknownSpelling = "+unk+";

// A word id and its feature packed into one integer; used as the
// event/context key for every token-valued distribution.
using TokenKey = std::uint64_t;

constexpr TokenKey MakeTokenKey(WordId word, WordFeature feature) {
  return (static_cast<TokenKey>(word) << 4) | static_cast<TokenKey>(feature);
}
constexpr WordId TokenWord(TokenKey key) { return static_cast<WordId>(key >> 4); }
constexpr WordFeature TokenFeature(TokenKey key) {
  return static_cast<WordFeature>(key & 0xF);
}

inline constexpr TokenKey kEndToken = MakeTokenKey(kEndWord, WordFeature::kOther);

class Vocabulary {
 public:
  Vocabulary();

  // Assigns the next id to an unseen word. Adding to a frozen vocabulary
  // throws std::logic_error.
  WordId Add(std::string_view word);

  // kUnknownWord for words outside the vocabulary.
  WordId Lookup(std::string_view word) const;
  bool Contains(std::string_view word) const;

  // Spelling of any id, sentinels included.
  const std::string& Word(WordId id) const { return words_[id]; }

  // Distinct real words, sentinels excluded.
  std::size_t size() const { return index_.size(); }

  // One past the largest id in use.
  std::size_t id_limit() const { return words_.size(); }

  void Freeze() { frozen_ = true; }
  bool frozen() const { return frozen_; }

  // Frozen copy that keeps every id but only recognizes the words in
  // `keep`; everything else looks up as kUnknownWord.
  template <typename Range>
  Vocabulary Restrict(const Range& keep) const;

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const {
      return std::hash<std::string_view>{}(s);
    }
  };

  std::vector<std::string> words_;
  std::unordered_map<std::string, WordId, Hash, std::equal_to<>> index_;
  bool frozen_ = false;
};

template <typename Range>
Vocabulary Vocabulary::Restrict(const Range& keep) const {
  Vocabulary out;
  out.words_ = words_;
  for (const auto& word : keep) {
    const WordId id = Lookup(word);
    if (id != kUnknownWord) out.index_.emplace(word, id);
  }
  out.frozen_ = true;
  return out;
}

}  // namespace namefinder

#endif  // NAMEFINDER_VOCABULARY_H_
