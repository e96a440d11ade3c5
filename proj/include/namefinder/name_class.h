#ifndef NAMEFINDER_NAME_CLASS_H_
#define NAMEFINDER_NAME_CLASS_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace namefinder {

// The eight emitting classes come first, in tie-break order. The two
// sentence pseudo-classes are transition contexts only and never emit.
enum class NameClass : std::uint8_t {
  kPerson = 0,
  kOrganization,
  kLocation,
  kTime,
  kDate,
  kPercent,
  kMoney,
  kNotAName,
  kStartOfSentence,
  kEndOfSentence,
};

inline constexpr int kNumEmittingClasses = 8;
// Successor outcomes of a class transition: every emitting class plus
// END-OF-SENTENCE.
inline constexpr int kNumTransitionOutcomes = kNumEmittingClasses + 1;
inline constexpr int kNumClassIds = 10;

inline constexpr std::array<NameClass, kNumEmittingClasses> kEmittingClasses = {
    NameClass::kPerson,   NameClass::kOrganization, NameClass::kLocation,
    NameClass::kTime,     NameClass::kDate,         NameClass::kPercent,
    NameClass::kMoney,    NameClass::kNotAName};

constexpr int ClassIndex(NameClass c) { return static_cast<int>(c); }
constexpr NameClass ClassFromIndex(int i) { return static_cast<NameClass>(i); }
constexpr bool IsEmitting(NameClass c) {
  return ClassIndex(c) < kNumEmittingClasses;
}

std::string_view ClassName(NameClass c);
std::optional<NameClass> ClassFromName(std::string_view name);

// Markup tag (ENAMEX/TIMEX/NUMEX) that carries a class in annotated text.
std::string_view ClassTag(NameClass c);

}  // namespace namefinder

#endif  // NAMEFINDER_NAME_CLASS_H_
