#include <cmath>
#include <random>

#include "doctest.h"
#include "namefinder/decoder.h"
#include "oracle/brute_force_decoder.h"
#include "oracle/random_corpus.h"

using namespace namefinder;

namespace {

Sentence RandomSentence(std::mt19937_64& rng, std::size_t len, std::size_t vocab) {
  const auto& pool = testing::WordPool();
  Sentence s;
  for (std::size_t i = 0; i < len; ++i) {
    // Occasionally an out-of-vocabulary word.
    s.push_back(rng() % 7 == 0 ? "Zork" : pool[rng() % std::min(vocab, pool.size())]);
  }
  return s;
}

std::vector<AnnotatedSentence> TitleCorpus() {
  const NameClass per = NameClass::kPerson;
  return {
      {{"Mr.", "Smith", "spoke", "."}, {{1, 2, per}}},
      {{"Mr.", "Jones", "arrived", "."}, {{1, 2, per}}},
      {{"Mr.", "Brown", "left", "."}, {{1, 2, per}}},
      {{"the", "board", "arrived", "."}, {}},
      {{"Mr.", "Jones", "spoke", "."}, {{1, 2, per}}},
      {{"the", "plan", "left", "."}, {}},
  };
}

std::vector<AnnotatedSentence> Results(const std::vector<DecodeResult>& results) {
  std::vector<AnnotatedSentence> out;
  for (const DecodeResult& r : results) out.push_back(r.sentence);
  return out;
}

}  // namespace

TEST_CASE("property: Viterbi equals exhaustive search") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t vocab = 3 + rng() % 8;
    const auto corpus = testing::RandomCorpus(rng, 2 + rng() % 30, vocab);
    const TrainedModel model = Train(corpus);
    const Decoder decoder(model);
    const Sentence s = RandomSentence(rng, 1 + rng() % 5, vocab);
    const DecodeResult got = decoder.DecodeSentence(s);
    const testing::BruteForceResult want = testing::BruteForceDecode(s, model);
    CHECK(std::abs(got.log_score - want.log_score) <= 1e-9 * std::abs(want.log_score));
    CHECK(got.segments == want.segments);
  }
}

TEST_CASE("exhaustive search enumerates every labelling") {
  const TrainedModel model = Train(TitleCorpus());
  std::size_t expected = 8;
  for (std::size_t m = 1; m <= 4; ++m) {
    CHECK(testing::BruteForceDecode(Sentence(m, "Mr."), model).paths == expected);
    expected *= 9;
  }
}

TEST_CASE("single-token sentence") {
  const TrainedModel model = Train(TitleCorpus());
  const Decoder decoder(model);
  const DecodeResult r = decoder.DecodeSentence({"Smith"});
  REQUIRE(r.segments.size() == 1);
  CHECK(r.segments[0].start == 0);
  CHECK(r.segments[0].end == 1);
  CHECK(std::isfinite(r.log_score));
  CHECK(r.log_score == doctest::Approx(testing::BruteForceDecode({"Smith"}, model).log_score));
}

TEST_CASE("a title cues the following name") {
  const TrainedModel model = Train(TitleCorpus());
  const Decoder decoder(model);
  const Sentence s = {"Mr.", "Smith", "arrived"};
  const DecodeResult r = decoder.DecodeSentence(s);
  CHECK(r.sentence.tokens == s);
  CHECK(r.sentence.regions == std::vector<Region>{{1, 2, NameClass::kPerson}});
  CHECK(testing::BruteForceDecode(s, model).segments == r.segments);
}

TEST_CASE("property: the reported score re-scores factor by factor") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 50; ++trial) {
    const auto corpus = testing::RandomCorpus(rng, 2 + rng() % 40, 25);
    const TrainedModel model = Train(corpus);
    const Decoder decoder(model);
    const Sentence s = RandomSentence(rng, 1 + rng() % 30, 25);
    const DecodeResult r = decoder.DecodeSentence(s);
    CHECK(decoder.ScoreSegmentation(s, r.segments) ==
          doctest::Approx(r.log_score).epsilon(1e-9));
    // Segments tile the sentence.
    std::size_t pos = 0;
    for (const Segment& seg : r.segments) {
      CHECK(seg.start == pos);
      CHECK(seg.end > seg.start);
      pos = seg.end;
    }
    CHECK(pos == s.size());
  }
}

TEST_CASE("adjacent same-class regions are distinct labellings") {
  const TrainedModel model = Train(TitleCorpus());
  const Decoder decoder(model);
  const Sentence s = {"Smith", "Jones"};
  const NameClass per = NameClass::kPerson;
  const double merged = decoder.ScoreSegmentation(s, {{0, 2, per}});
  const double split = decoder.ScoreSegmentation(s, {{0, 1, per}, {1, 2, per}});
  CHECK(merged != split);
}

TEST_CASE("document decoding") {
  const TrainedModel model = Train(TitleCorpus());
  const Decoder decoder(model);
  CHECK(decoder.DecodeDocument("").empty());
  CHECK(decoder.DecodeDocument(" \n\n ").empty());

  const auto two = decoder.DecodeDocument("Mr. Smith arrived. The board left.");
  REQUIRE(two.size() == 2);
  CHECK(two[0].sentence == decoder.DecodeSentence({"Mr.", "Smith", "arrived", "."}).sentence);
  CHECK(two[1].sentence == decoder.DecodeSentence({"The", "board", "left", "."}).sentence);
}

TEST_CASE("property: decoding distributes over document concatenation") {
  std::mt19937_64 rng(71);
  const auto corpus = testing::RandomCorpus(rng, 40, 25);
  const TrainedModel model = Train(corpus);
  const Decoder decoder(model);
  const std::vector<std::string> words = {"Mr.", "Smith", "said", ".", "IBM", "sold",
                                          "1990", "23,000.00", "Zork", "in", ","};
  const auto text = [&] {
    std::string t;
    const std::size_t n = 1 + rng() % 20;
    for (std::size_t i = 0; i < n; ++i) t += words[rng() % words.size()] + " ";
    return t;
  };
  for (int trial = 0; trial < 50; ++trial) {
    const std::string a = text(), b = text();
    auto joined = Results(decoder.DecodeDocument(a));
    const auto tail = Results(decoder.DecodeDocument(b));
    joined.insert(joined.end(), tail.begin(), tail.end());
    CHECK(Results(decoder.DecodeDocument(a + "\n" + b)) == joined);
  }
}

TEST_CASE("decoding is deterministic") {
  std::mt19937_64 rng(73);
  const auto corpus = testing::RandomCorpus(rng, 40, 25);
  const TrainedModel a = Train(corpus), b = Train(corpus);
  const Sentence s = RandomSentence(rng, 25, 25);
  const DecodeResult ra = Decoder(a).DecodeSentence(s);
  const DecodeResult rb = Decoder(b).DecodeSentence(s);
  CHECK(ra.segments == rb.segments);
  CHECK(ra.log_score == rb.log_score);
}

TEST_CASE("token mapping") {
  const TrainedModel model = Train(TitleCorpus());
  const auto keys = MapTokens({"Mr.", "Zork", "spoke"}, model);
  REQUIRE(keys.size() == 3);
  CHECK(TokenWord(keys[0]) == model.Lookup("Mr."));
  CHECK(TokenWord(keys[1]) == kUnknownWord);
  CHECK(TokenFeature(keys[1]) == WordFeature::kInitCap);
  CHECK(TokenFeature(keys[2]) == WordFeature::kLowerCase);
}
