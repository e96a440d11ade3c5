#include "namefinder/features.h"

#include <vector>

namespace namefinder {
namespace {

constexpr std::array<std::string_view, kNumWordFeatures> kFeatureNames = {
    "twoDigitNum",           "fourDigitNum",
    "containsDigitAndAlpha", "containsDigitAndDash",
    "containsDigitAndSlash", "containsDigitAndComma",
    "containsDigitAndPeriod", "otherNum",
    "allCaps",               "capPeriod",
    "firstWord",             "initCap",
    "lowerCase",             "other"};

bool IsDigit(char32_t c) { return c >= U'0' && c <= U'9'; }

// Latin Extended-A mostly alternates upper (even) / lower (odd), with a
// shifted stretch between U+0139 and U+0148 and again from U+0179.
bool LatinExtendedAUpper(char32_t c) {
  if (c == 0x0138 || c == 0x0149 || c == 0x017F) return false;
  if (c == 0x0178) return true;
  if ((c >= 0x0139 && c <= 0x0148) || (c >= 0x0179 && c <= 0x017E)) {
    return (c % 2) == 1;
  }
  return (c % 2) == 0;
}

}  // namespace

bool IsUpperLetter(char32_t c) {
  if (c >= U'A' && c <= U'Z') return true;
  if (c < 0x80) return false;
  if (c >= 0x00C0 && c <= 0x00DE) return c != 0x00D7;
  if (c >= 0x0100 && c <= 0x017F) return LatinExtendedAUpper(c);
  if (c >= 0x0391 && c <= 0x03A9) return c != 0x03A2;
  if (c >= 0x0400 && c <= 0x042F) return true;
  return false;
}

bool IsLowerLetter(char32_t c) {
  if (c >= U'a' && c <= U'z') return true;
  if (c < 0x80) return false;
  if (c == 0x00AA || c == 0x00B5 || c == 0x00BA) return true;
  if (c >= 0x00DF && c <= 0x00FF) return c != 0x00F7;
  if (c >= 0x0100 && c <= 0x017F) return !LatinExtendedAUpper(c);
  if (c >= 0x03AC && c <= 0x03CE) return true;
  if (c >= 0x0430 && c <= 0x045F) return true;
  return false;
}

char32_t DecodeUtf8(std::string_view text, std::size_t& pos) {
  const auto byte = [&](std::size_t i) {
    return static_cast<unsigned char>(text[i]);
  };
  const unsigned char lead = byte(pos);
  int extra = 0;
  char32_t cp = 0;
  if (lead < 0x80) {
    ++pos;
    return lead;
  } else if ((lead & 0xE0) == 0xC0) {
    extra = 1;
    cp = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    extra = 2;
    cp = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    extra = 3;
    cp = lead & 0x07;
  } else {
    ++pos;
    return 0xFFFD;
  }
  if (pos + extra >= text.size()) {
    ++pos;
    return 0xFFFD;
  }
  for (int i = 1; i <= extra; ++i) {
    const unsigned char b = byte(pos + i);
    if ((b & 0xC0) != 0x80) {
      ++pos;
      return 0xFFFD;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  pos += extra + 1;
  return cp;
}

WordFeature ComputeFeature(std::string_view word, bool is_first_word_of_sentence,
                           const FeatureConfig& config) {
  std::vector<char32_t> chars;
  chars.reserve(word.size());
  for (std::size_t pos = 0; pos < word.size();) {
    chars.push_back(DecodeUtf8(word, pos));
  }
  if (chars.empty()) return WordFeature::kOther;

  // Group separator and decimal mark, as written in this language.
  const char32_t group_mark = config.swap_comma_period ? U'.' : U',';
  const char32_t decimal_mark = config.swap_comma_period ? U',' : U'.';

  int digits = 0, letters = 0, uppers = 0, lowers = 0;
  bool dash = false, slash = false, group = false, decimal = false,
       period = false;
  for (char32_t c : chars) {
    if (IsDigit(c)) ++digits;
    if (IsUpperLetter(c)) ++uppers, ++letters;
    if (IsLowerLetter(c)) ++lowers, ++letters;
    if (c == U'-') dash = true;
    if (c == U'/') slash = true;
    if (c == group_mark) group = true;
    if (c == decimal_mark) decimal = true;
    if (c == U'.') period = true;
  }
  const int n = static_cast<int>(chars.size());
  const bool all_digits = digits == n;

  if (all_digits && n == 2) return WordFeature::kTwoDigitNum;
  if (all_digits && n == 4) return WordFeature::kFourDigitNum;
  if (digits > 0 && letters > 0) return WordFeature::kContainsDigitAndAlpha;
  if (digits > 0 && letters == 0) {
    if (dash) return WordFeature::kContainsDigitAndDash;
    if (slash) return WordFeature::kContainsDigitAndSlash;
    if (group) return WordFeature::kContainsDigitAndComma;
    if (decimal) return WordFeature::kContainsDigitAndPeriod;
  }
  if (all_digits) return WordFeature::kOtherNum;
  if (letters > 0 && lowers == 0 && digits == 0 && !period) {
    return WordFeature::kAllCaps;
  }
  if (n == 2 && IsUpperLetter(chars[0]) && chars[1] == U'.') {
    return WordFeature::kCapPeriod;
  }
  const bool init_cap = IsUpperLetter(chars[0]) && lowers > 0;
  if (init_cap && is_first_word_of_sentence) return WordFeature::kFirstWord;
  if (init_cap) return WordFeature::kInitCap;
  if (IsLowerLetter(chars[0])) return WordFeature::kLowerCase;
  return WordFeature::kOther;
}

std::string_view FeatureName(WordFeature f) {
  return kFeatureNames[static_cast<int>(f)];
}

std::optional<WordFeature> FeatureFromName(std::string_view name) {
  for (int i = 0; i < kNumWordFeatures; ++i) {
    if (kFeatureNames[i] == name) return static_cast<WordFeature>(i);
  }
  return std::nullopt;
}

}  // namespace namefinder
