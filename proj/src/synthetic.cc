#include "namefinder/synthetic.h"

#include <array>
#include <random>
#include <string>

namespace namefinder {
namespace {

constexpr auto kFirstNames = std::to_array<std::string_view>({
    "John",   "Mary",    "Robert", "Linda",   "James",  "Susan",   "Michael", "Karen",
    "David",  "Nancy",   "Thomas", "Laura",   "Daniel", "Helen",   "Paul",    "Sarah",
    "Mark",   "Anne",    "George", "Carol",   "Peter",  "Ruth",    "Steven",  "Joan",
    "Edward", "Alice",   "Brian",  "Diane",   "Kevin",  "Martha",  "Jorge",   "Lucia",
    "Pedro",  "Ana",     "Miguel", "Elena",   "Luis",   "Carmen",  "Ramon",   "Isabel"});

constexpr auto kTitles = std::to_array<std::string_view>({"Mr.", "Mrs.", "Dr.", "President",
                                                     "Senator", "Judge"});

constexpr auto kOrgSuffixes = std::to_array<std::string_view>({"Inc.", "Corp.", "Co.",
                                                          "Group", "Bank", "Associates"});

constexpr auto kLocations = std::to_array<std::string_view>({
    "Boston",   "Chicago",   "Denver",    "Houston",  "Atlanta",   "Seattle",
    "Miami",    "Dallas",    "Phoenix",   "Detroit",  "London",    "Paris",
    "Madrid",   "Berlin",    "Rome",      "Tokyo",    "Moscow",    "Cairo",
    "Lima",     "Bogota",    "Caracas",   "Quito",    "Havana",    "Toronto",
    "Montreal", "Sydney",    "Dublin",    "Lisbon",   "Vienna",    "Prague",
    "Warsaw",   "Athens",    "Oslo",      "Helsinki", "Brussels",  "Geneva",
    "Mexico",   "Canada",    "Japan",     "Germany",  "France",    "Spain",
    "Italy",    "Brazil",    "Chile",     "Peru",     "Argentina", "Colombia"});

constexpr auto kMonths = std::to_array<std::string_view>({
    "January", "February", "March",     "April",   "May",      "June",
    "July",    "August",   "September", "October", "November", "December"});

constexpr auto kWeekdays = std::to_array<std::string_view>({
    "Monday", "Tuesday", "Wednesday", "Thursday", "Friday", "Saturday", "Sunday"});

constexpr auto kFiller = std::to_array<std::string_view>({
    "the",      "a",        "of",       "and",      "to",        "in",       "said",
    "that",     "for",      "on",       "is",       "was",       "with",     "it",
    "as",       "by",       "at",       "from",     "its",       "has",      "have",
    "will",     "would",    "an",       "be",       "are",       "were",     "which",
    "after",    "about",    "more",     "than",     "year",      "new",      "company",
    "market",   "shares",   "percent",  "stock",    "price",     "sales",    "report",
    "official", "officials","government","group",   "board",     "plan",     "deal",
    "agreement","talks",    "week",     "month",    "last",      "next",     "first",
    "quarter",  "profit",   "loss",     "rose",     "fell",      "announced","expected",
    "could",    "may",      "also",     "only",     "over",      "under",    "into",
    "against",  "during",   "before",   "because",  "while",     "since",    "until",
    "economic", "political","federal",  "local",    "foreign",   "trade",    "bank",
    "rates",    "interest", "bonds",    "investors","analysts",  "industry", "workers",
    "union",    "contract", "court",    "case",     "ruling",    "law",      "tax",
    "budget",   "spending", "growth",   "demand",   "supply",    "oil",      "prices",
    "increase", "decline",  "meeting",  "visit",    "statement", "spokesman","director",
    "chairman", "executive","president","minister", "members",   "leaders",  "people",
    "city",     "country",  "region",   "state",    "program",   "project",  "system",
    "results"});

constexpr auto kOpeners = std::to_array<std::string_view>({
    "The", "Officials", "Analysts", "Yesterday", "However", "Meanwhile",
    "In",  "A",         "Investors", "Critics"});

constexpr auto kSyllables = std::to_array<std::string_view>({
    "ka", "ber", "lo", "min", "tor", "sa", "vel", "dri", "no", "mar", "quen", "li",
    "ros", "tan", "pe", "gor"});

class Generator {
 public:
  explicit Generator(const SyntheticOptions& options)
      : options_(options), rng_(options.seed) {
    for (std::size_t i = 0; i < options.name_pool; ++i) {
      surnames_.push_back(MakeName(2 + Index(2)));
      org_stems_.push_back(MakeName(2 + Index(2)));
    }
  }

  AnnotatedSentence Sentence() {
    AnnotatedSentence s;
    if (Chance(0.4)) Push(s, Pick(kOpeners));
    const std::size_t chunks = 2 + Index(3);
    for (std::size_t i = 0; i < chunks; ++i) {
      if (i > 0 || Chance(0.5)) Filler(s, 1 + Index(4));
      Entity(s);
    }
    Filler(s, Index(3));
    Push(s, ".");
    return s;
  }

 private:
  std::size_t Index(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
  bool Chance(double p) {
    return static_cast<double>(rng_() >> 11) * 0x1.0p-53 < p;
  }
  template <typename Array>
  std::string_view Pick(const Array& a) {
    return a[Index(a.size())];
  }

  std::string MakeName(std::size_t syllables) {
    std::string name;
    for (std::size_t i = 0; i < syllables; ++i) name += kSyllables[Index(kSyllables.size())];
    name[0] = static_cast<char>(name[0] - 'a' + 'A');
    return name;
  }

  std::string_view Surname() {
    // Skewed: the low end of the pool recurs often.
    const std::size_t n = surnames_.size();
    const std::size_t i = Chance(0.5) ? Index(n / 10 + 1) : Index(n);
    return surnames_[i];
  }

  static void Push(AnnotatedSentence& s, std::string_view w) { s.tokens.emplace_back(w); }

  void Region(AnnotatedSentence& s, std::size_t start, NameClass c) {
    s.regions.push_back({start, s.tokens.size(), c});
  }

  void Filler(AnnotatedSentence& s, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      // Zipf-like: favour the head of the list.
      const std::size_t a = Index(kFiller.size());
      const std::size_t b = Index(kFiller.size());
      Push(s, kFiller[std::min(a, b)]);
    }
  }

  std::string Number(std::size_t digits) {
    std::string out;
    out += static_cast<char>('1' + Index(9));
    for (std::size_t i = 1; i < digits; ++i) out += static_cast<char>('0' + Index(10));
    return out;
  }

  void Entity(AnnotatedSentence& s) {
    const double cue = options_.cue_probability;
    switch (Index(7)) {
      case 0: {  // PERSON
        if (Chance(cue)) Push(s, Pick(kTitles));
        const std::size_t start = s.tokens.size();
        if (Chance(0.6)) Push(s, Pick(kFirstNames));
        if (Chance(0.15)) Push(s, std::string(1, static_cast<char>('A' + Index(26))) + ".");
        Push(s, Surname());
        Region(s, start, NameClass::kPerson);
        if (Chance(0.5)) Push(s, "said");
        break;
      }
      case 1: {  // ORGANIZATION
        const std::size_t start = s.tokens.size();
        Push(s, org_stems_[Index(org_stems_.size())]);
        if (Chance(0.4)) Push(s, org_stems_[Index(org_stems_.size())]);
        if (Chance(cue)) {
          Push(s, Pick(kOrgSuffixes));
        } else if (Chance(0.5)) {
          Push(s, std::string(3, static_cast<char>('A' + Index(26))));
        }
        Region(s, start, NameClass::kOrganization);
        break;
      }
      case 2: {  // LOCATION
        if (Chance(cue)) Push(s, Chance(0.5) ? "in" : (Chance(0.5) ? "from" : "near"));
        const std::size_t start = s.tokens.size();
        Push(s, Pick(kLocations));
        Region(s, start, NameClass::kLocation);
        break;
      }
      case 3: {  // TIME
        if (Chance(cue)) Push(s, "at");
        const std::size_t start = s.tokens.size();
        Push(s, std::to_string(1 + Index(12)) + ":" + (Chance(0.5) ? "00" : "30"));
        Push(s, Chance(0.5) ? "a.m." : "p.m.");
        Region(s, start, NameClass::kTime);
        break;
      }
      case 4: {  // DATE
        if (Chance(cue)) Push(s, "on");
        const std::size_t start = s.tokens.size();
        switch (Index(4)) {
          case 0:
            Push(s, std::to_string(1 + Index(12)) + "/" + std::to_string(1 + Index(28)) +
                        "/" + std::to_string(80 + Index(20)));
            break;
          case 1:
            Push(s, Pick(kMonths));
            Push(s, std::to_string(1 + Index(28)));
            break;
          case 2:
            Push(s, std::to_string(1970 + Index(30)));
            break;
          default:
            Push(s, Pick(kWeekdays));
        }
        Region(s, start, NameClass::kDate);
        break;
      }
      case 5: {  // PERCENT
        if (Chance(cue)) Push(s, "by");
        const std::size_t start = s.tokens.size();
        Push(s, Chance(0.5) ? Number(1 + Index(2)) : Number(1) + "." + Number(1));
        Push(s, Chance(0.7) ? "percent" : "%");
        Region(s, start, NameClass::kPercent);
        break;
      }
      default: {  // MONEY
        if (Chance(cue)) Push(s, "for");
        const std::size_t start = s.tokens.size();
        if (Chance(0.5)) {
          Push(s, "$");
          Push(s, Number(1 + Index(3)) + "," + Number(3).replace(0, 1, "0") + ".00");
        } else {
          Push(s, Number(1 + Index(3)) + "." + Number(2));
          Push(s, Chance(0.5) ? "million" : "dollars");
        }
        Region(s, start, NameClass::kMoney);
        break;
      }
    }
  }

  SyntheticOptions options_;
  std::mt19937_64 rng_;
  std::vector<std::string> surnames_;
  std::vector<std::string> org_stems_;
};

}  // namespace

std::vector<AnnotatedSentence> GenerateSyntheticCorpus(const SyntheticOptions& options) {
  Generator gen(options);
  std::vector<AnnotatedSentence> corpus;
  corpus.reserve(options.sentences);
  for (std::size_t i = 0; i < options.sentences; ++i) corpus.push_back(gen.Sentence());
  return corpus;
}

}  // namespace namefinder
