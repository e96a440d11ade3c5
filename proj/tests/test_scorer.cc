#include <algorithm>
#include <optional>
#include <random>

#include "doctest.h"
#include "namefinder/scorer.h"
#include "oracle/random_corpus.h"

using namespace namefinder;

namespace {

constexpr NameClass kPer = NameClass::kPerson;
constexpr NameClass kOrg = NameClass::kOrganization;
constexpr NameClass kLoc = NameClass::kLocation;

// Ten one-token key regions in two sentences; the response keeps six of
// them exactly, gets one span wrong and one class wrong.
std::pair<std::vector<AnnotatedSentence>, std::vector<AnnotatedSentence>> SixEightTen() {
  const Sentence tokens(10, "w");
  AnnotatedSentence key{tokens, {}}, resp{tokens, {}};
  for (std::size_t i = 0; i < 5; ++i) key.regions.push_back({2 * i, 2 * i + 1, kPer});
  std::vector<AnnotatedSentence> keys = {key, key};
  std::vector<AnnotatedSentence> responses = {resp, resp};
  for (std::size_t i = 0; i < 3; ++i) {
    responses[0].regions.push_back({2 * i, 2 * i + 1, kPer});
    responses[1].regions.push_back({2 * i, 2 * i + 1, kPer});
  }
  responses[0].regions.push_back({6, 8, kPer});
  responses[1].regions.push_back({6, 7, kLoc});
  return {keys, responses};
}

}  // namespace

TEST_CASE("identity scores perfectly for any beta") {
  std::mt19937_64 rng(81);
  const auto doc = testing::RandomCorpus(rng, 20, 25);
  for (double beta : {0.5, 1.0, 2.0}) {
    const ScoreReport r = Score(doc, doc, beta);
    CHECK(r.overall.precision == 1.0);
    CHECK(r.overall.recall == 1.0);
    CHECK(r.overall.f_measure == doctest::Approx(1.0));
  }
}

TEST_CASE("six correct, eight responses, ten keys") {
  const auto [key, response] = SixEightTen();
  const ScoreReport r = Score(key, response);
  CHECK(r.overall.correct == 6);
  CHECK(r.overall.responses == 8);
  CHECK(r.overall.keys == 10);
  CHECK(r.overall.precision == doctest::Approx(0.75));
  CHECK(r.overall.recall == doctest::Approx(0.6));
  CHECK(r.overall.f_measure == doctest::Approx(2.0 / 3.0));
  CHECK(ErrorRate(r) == doctest::Approx(100.0 / 3.0));
  const std::string records = FormatReportRecords(r);
  CHECK(records.find("ALL 0.750 0.600 0.667") != std::string::npos);
  CHECK(FormatReport(r).find("ALL") != std::string::npos);
}

TEST_CASE("empty response") {
  const auto [key, response] = SixEightTen();
  std::vector<AnnotatedSentence> empty = key;
  for (auto& s : empty) s.regions.clear();
  const ScoreReport r = Score(key, empty);
  CHECK(r.overall.precision == 0);
  CHECK(r.overall.recall == 0);
  CHECK(r.overall.f_measure == 0);
  const ScoreReport none = Score(empty, empty);
  CHECK(none.overall.f_measure == 0);
}

TEST_CASE("f-measure and error rate") {
  CHECK(FMeasure(0.75, 0.6, 1) == doctest::Approx(2.0 / 3.0));
  CHECK(FMeasure(0, 0, 1) == 0);
  CHECK(FMeasure(1, 0.5, 2) == doctest::Approx(5 * 0.5 / (4 * 0.5 + 1)));
  ScoreReport r;
  r.overall.f_measure = 1.0;
  CHECK(ErrorRate(r) == doctest::Approx(0));
  r.overall.f_measure = 0.93;
  CHECK(ErrorRate(r) == doctest::Approx(7));
  r.overall.f_measure = 0;
  CHECK(ErrorRate(r) == doctest::Approx(100));
}

TEST_CASE("misaligned documents") {
  const std::vector<AnnotatedSentence> key = {{{"a", "b"}, {}}, {{"c", "d"}, {}}};
  auto changed = key;
  changed[1].tokens[1] = "x";
  try {
    Score(key, changed);
    FAIL("expected an alignment error");
  } catch (const AlignmentError& e) {
    CHECK(e.sentence() == 1);
    CHECK(e.token() == 1);
  }
  auto shorter = key;
  shorter[0].tokens.pop_back();
  CHECK_THROWS_AS(Score(key, shorter), AlignmentError);
  CHECK_THROWS_AS(Score(key, {key[0]}), AlignmentError);
}

TEST_CASE("properties over random key/response pairs") {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 300; ++trial) {
    const auto key = testing::RandomCorpus(rng, 1 + rng() % 10, 25);
    auto response = key;
    for (auto& s : response) {
      // Keep the tokens, replace some regions at random.
      if (rng() % 2) {
        s.regions.clear();
        std::size_t pos = 0;
        while (pos < s.tokens.size()) {
          if (rng() % 3 == 0) {
            const std::size_t end = std::min(s.tokens.size(), pos + 1 + rng() % 2);
            s.regions.push_back({pos, end, rng() % 2 ? kPer : kOrg});
            pos = end;
          } else {
            ++pos;
          }
        }
      }
    }
    const ScoreReport forward = Score(key, response);
    const ScoreReport backward = Score(response, key);
    CHECK(forward.overall.precision == doctest::Approx(backward.overall.recall));
    CHECK(forward.overall.recall == doctest::Approx(backward.overall.precision));

    const double p = forward.overall.precision, r = forward.overall.recall;
    const double f = forward.overall.f_measure;
    CHECK(f >= 0);
    CHECK(f <= 1);
    if (p > 0 && r > 0) {
      CHECK(f >= std::min(p, r) - 1e-12);
      CHECK(f <= std::max(p, r) + 1e-12);
    }

    std::uint64_t correct = 0, responses = 0, keys = 0;
    for (const ClassScore& c : forward.per_class) {
      correct += c.correct;
      responses += c.responses;
      keys += c.keys;
    }
    CHECK(correct == forward.overall.correct);
    CHECK(responses == forward.overall.responses);
    CHECK(keys == forward.overall.keys);

    // Adding back a missed key region never lowers F.
    const auto add_one = [&]() -> std::optional<std::vector<AnnotatedSentence>> {
      for (std::size_t si = 0; si < key.size(); ++si) {
        for (const Region& k : key[si].regions) {
          const auto& regions = response[si].regions;
          const bool blocked = std::any_of(regions.begin(), regions.end(), [&](const Region& x) {
            return x.start < k.end && k.start < x.end;
          });
          if (blocked) continue;
          auto better = response;
          better[si].regions.push_back(k);
          std::sort(better[si].regions.begin(), better[si].regions.end(),
                    [](const Region& a, const Region& b) { return a.start < b.start; });
          return better;
        }
      }
      return std::nullopt;
    };
    if (const auto better = add_one()) {
      CHECK(Score(key, *better).overall.f_measure >= f - 1e-12);
    }
  }
}
