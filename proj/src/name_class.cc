#include "namefinder/name_class.h"

namespace namefinder {
namespace {

constexpr std::array<std::string_view, kNumClassIds> kNames = {
    "PERSON", "ORGANIZATION", "LOCATION",          "TIME",
    "DATE",   "PERCENT",      "MONEY",             "NOT-A-NAME",
    "START-OF-SENTENCE",      "END-OF-SENTENCE"};

}  // namespace

std::string_view ClassName(NameClass c) { return kNames[ClassIndex(c)]; }

std::optional<NameClass> ClassFromName(std::string_view name) {
  for (int i = 0; i < kNumClassIds; ++i) {
    if (kNames[i] == name) return ClassFromIndex(i);
  }
  return std::nullopt;
}

std::string_view ClassTag(NameClass c) {
  switch (c) {
    case NameClass::kPerson:
    case NameClass::kOrganization:
    case NameClass::kLocation:
      return "ENAMEX";
    case NameClass::kTime:
    case NameClass::kDate:
      return "TIMEX";
    case NameClass::kPercent:
    case NameClass::kMoney:
      return "NUMEX";
    default:
      return "";
  }
}

}  // namespace namefinder
