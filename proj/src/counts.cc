#include "namefinder/counts.h"

namespace namefinder {

void ConditionalCounts::Add(Key context, Key event, std::uint64_t n) {
  if (n == 0) return;
  std::uint64_t& slot = joint_[PairKey{context, event}];
  ContextStats& stats = contexts_[context];
  if (slot == 0) ++stats.unique;
  slot += n;
  stats.total += n;
}

void ConditionalCounts::Merge(const ConditionalCounts& other) {
  other.ForEach([this](Key context, Key event, std::uint64_t n) {
    Add(context, event, n);
  });
}

std::uint64_t ConditionalCounts::Count(Key context, Key event) const {
  auto it = joint_.find(PairKey{context, event});
  return it == joint_.end() ? 0 : it->second;
}

ConditionalCounts::ContextStats ConditionalCounts::Context(Key context) const {
  auto it = contexts_.find(context);
  return it == contexts_.end() ? ContextStats{} : it->second;
}

void CountTables::Merge(const CountTables& other) {
  transition.Merge(other.transition);
  transition_bigram.Merge(other.transition_bigram);
  transition_unigram.Merge(other.transition_unigram);
  first_word.Merge(other.first_word);
  begin_bigram.Merge(other.begin_bigram);
  word_bigram.Merge(other.word_bigram);
  word_unigram.Merge(other.word_unigram);
  word_only.Merge(other.word_only);
  feature_only.Merge(other.feature_only);
}

std::vector<Segment> SegmentsOf(const AnnotatedSentence& sentence) {
  std::vector<Segment> segments;
  std::size_t pos = 0;
  for (const Region& r : sentence.regions) {
    if (r.start > pos) segments.push_back({pos, r.start, NameClass::kNotAName});
    segments.push_back({r.start, r.end, r.name_class});
    pos = r.end;
  }
  if (pos < sentence.tokens.size()) {
    segments.push_back({pos, sentence.tokens.size(), NameClass::kNotAName});
  }
  return segments;
}

namespace {

void CountTransition(CountTables& t, NameClass nc, NameClass prev, WordId prev_word) {
  t.transition.Add(keys::ClassWord(prev, prev_word), keys::Class(nc));
  t.transition_bigram.Add(keys::Class(prev), keys::Class(nc));
  t.transition_unigram.Add(keys::kEmpty, keys::Class(nc));
}

void CountEmission(CountTables& t, TokenKey token, NameClass nc) {
  t.word_unigram.Add(keys::Class(nc), token);
  t.word_only.Add(keys::Class(nc), TokenWord(token));
  t.feature_only.Add(keys::Class(nc), static_cast<std::uint64_t>(TokenFeature(token)));
}

void CountSentence(CountTables& t, const AnnotatedSentence& sentence,
                   const Vocabulary& vocab, bool map_unknown,
                   const FeatureConfig& config) {
  if (sentence.tokens.empty()) return;
  std::vector<TokenKey> tokens;
  tokens.reserve(sentence.tokens.size());
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    const std::string& word = sentence.tokens[i];
    const WordId id = vocab.Lookup(word);
    if (id == kUnknownWord && !map_unknown) {
      throw std::invalid_argument("word not in vocabulary: " + word);
    }
    tokens.push_back(MakeTokenKey(id, ComputeFeature(word, i == 0, config)));
  }

  NameClass prev = NameClass::kStartOfSentence;
  WordId prev_word = kEndWord;
  for (const Segment& seg : SegmentsOf(sentence)) {
    const NameClass nc = seg.name_class;
    CountTransition(t, nc, prev, prev_word);

    const TokenKey first = tokens[seg.start];
    t.first_word.Add(keys::ClassPair(nc, prev), first);
    t.begin_bigram.Add(keys::Class(nc), first);
    CountEmission(t, first, nc);

    for (std::size_t i = seg.start + 1; i < seg.end; ++i) {
      t.word_bigram.Add(keys::TokenClass(tokens[i - 1], nc), tokens[i]);
      CountEmission(t, tokens[i], nc);
    }
    t.word_bigram.Add(keys::TokenClass(tokens[seg.end - 1], nc), kEndToken);
    t.word_unigram.Add(keys::Class(nc), kEndToken);

    prev = nc;
    prev_word = TokenWord(tokens[seg.end - 1]);
  }
  CountTransition(t, NameClass::kEndOfSentence, prev, prev_word);
}

}  // namespace

CountTables CollectCounts(const std::vector<AnnotatedSentence>& sentences,
                          const Vocabulary& vocab, bool map_unknown,
                          const FeatureConfig& config) {
  CountTables tables;
  for (const AnnotatedSentence& s : sentences) {
    CountSentence(tables, s, vocab, map_unknown, config);
  }
  return tables;
}

Vocabulary BuildVocabulary(const std::vector<AnnotatedSentence>& sentences) {
  Vocabulary vocab;
  for (const AnnotatedSentence& s : sentences) {
    for (const std::string& w : s.tokens) vocab.Add(w);
  }
  vocab.Freeze();
  return vocab;
}

TrainedModel Train(const std::vector<AnnotatedSentence>& sentences,
                   const FeatureConfig& config) {
  if (sentences.size() < 2) {
    throw TrainingError("cannot form held-out halves from fewer than 2 sentences");
  }
  TrainedModel model;
  model.feature_config = config;
  model.vocab = BuildVocabulary(sentences);
  model.main = CollectCounts(sentences, model.vocab, false, config);

  const std::size_t half = FractionCount(sentences.size(), 0.5);
  const std::vector<AnnotatedSentence> first(sentences.begin(),
                                             sentences.begin() + half);
  const std::vector<AnnotatedSentence> second(sentences.begin() + half,
                                              sentences.end());
  const auto words_of = [](const std::vector<AnnotatedSentence>& part) {
    std::vector<std::string_view> words;
    for (const AnnotatedSentence& s : part) {
      words.insert(words.end(), s.tokens.begin(), s.tokens.end());
    }
    return words;
  };
  const Vocabulary first_vocab = model.vocab.Restrict(words_of(first));
  const Vocabulary second_vocab = model.vocab.Restrict(words_of(second));

  model.unknown = CollectCounts(second, first_vocab, true, config);
  model.unknown.Merge(CollectCounts(first, second_vocab, true, config));
  return model;
}

}  // namespace namefinder
