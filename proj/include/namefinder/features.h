#ifndef NAMEFINDER_FEATURES_H_
#define NAMEFINDER_FEATURES_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace namefinder {

// Orthographic word classes. Declaration order is the precedence order:
// when several predicates match, the earliest one wins.
enum class WordFeature : std::uint8_t {
  kTwoDigitNum = 0,
  kFourDigitNum,
  kContainsDigitAndAlpha,
  kContainsDigitAndDash,
  kContainsDigitAndSlash,
  kContainsDigitAndComma,
  kContainsDigitAndPeriod,
  kOtherNum,
  kAllCaps,
  kCapPeriod,
  kFirstWord,
  kInitCap,
  kLowerCase,
  kOther,
};

inline constexpr int kNumWordFeatures = 14;

struct FeatureConfig {
  // Spanish-style numerals: comma is the decimal mark and period groups
  // thousands, so the two digit-punctuation features trade characters.
  bool swap_comma_period = false;

  friend bool operator==(const FeatureConfig&, const FeatureConfig&) = default;
};

// Word paired with its feature.
struct Token {
  std::string_view word;
  WordFeature feature;
};

WordFeature ComputeFeature(std::string_view word, bool is_first_word_of_sentence,
                           const FeatureConfig& config = {});

std::string_view FeatureName(WordFeature f);
std::optional<WordFeature> FeatureFromName(std::string_view name);

// Unicode letter case for a single code point. Covers ASCII, Latin-1,
// Latin Extended-A, basic Greek and basic Cyrillic; anything else is
// treated as a non-letter.
bool IsUpperLetter(char32_t c);
bool IsLowerLetter(char32_t c);

// Decodes one UTF-8 code point starting at text[pos] and advances pos.
// Malformed bytes decode as U+FFFD and consume one byte.
char32_t DecodeUtf8(std::string_view text, std::size_t& pos);

}  // namespace namefinder

#endif  // NAMEFINDER_FEATURES_H_
