#include "namefinder/model_io.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

namespace namefinder {
namespace {

enum class Atoms {
  kClass,       // NC
  kToken,       // word feature
  kWord,        // word
  kFeature,     // feature
  kEmpty,       // *
  kClassWord,   // NC-1 w-1
  kClassPair,   // NC NC-1
  kBeginClass,  // +begin+ other NC
  kTokenClass,  // word feature NC
};

struct TableSpec {
  std::string_view name;
  ConditionalCounts CountTables::*table;
  Atoms event;
  Atoms context;
};

constexpr std::array<TableSpec, 9> kTables = {{
    {"transition", &CountTables::transition, Atoms::kClass, Atoms::kClassWord},
    {"transition_bigram", &CountTables::transition_bigram, Atoms::kClass, Atoms::kClass},
    {"transition_unigram", &CountTables::transition_unigram, Atoms::kClass, Atoms::kEmpty},
    {"first_word", &CountTables::first_word, Atoms::kToken, Atoms::kClassPair},
    {"begin_bigram", &CountTables::begin_bigram, Atoms::kToken, Atoms::kBeginClass},
    {"word_bigram", &CountTables::word_bigram, Atoms::kToken, Atoms::kTokenClass},
    {"word_unigram", &CountTables::word_unigram, Atoms::kToken, Atoms::kClass},
    {"word_only", &CountTables::word_only, Atoms::kWord, Atoms::kClass},
    {"feature_only", &CountTables::feature_only, Atoms::kFeature, Atoms::kClass},
}};

bool IsSentinelSpelling(std::string_view w) {
  return w == kEndSpelling || w == kBeginSpelling || w == kUnknownSpelling;
}

std::string RenderWord(WordId id, const Vocabulary& vocab) {
  const std::string& w = vocab.Word(id);
  if (id >= kFirstRealWord && (IsSentinelSpelling(w) || (!w.empty() && w[0] == '\\'))) {
    return "\\" + w;
  }
  return w;
}

std::string RenderToken(TokenKey key, const Vocabulary& vocab) {
  std::string out = RenderWord(TokenWord(key), vocab);
  out += ' ';
  out += FeatureName(TokenFeature(key));
  return out;
}

std::string RenderClass(std::uint64_t c) {
  return std::string(ClassName(ClassFromIndex(static_cast<int>(c))));
}

std::string Render(Atoms atoms, std::uint64_t key, const Vocabulary& vocab) {
  switch (atoms) {
    case Atoms::kClass:
      return RenderClass(key);
    case Atoms::kToken:
      return RenderToken(key, vocab);
    case Atoms::kWord:
      return RenderWord(static_cast<WordId>(key), vocab);
    case Atoms::kFeature:
      return std::string(FeatureName(static_cast<WordFeature>(key)));
    case Atoms::kEmpty:
      return "*";
    case Atoms::kClassWord:
      return RenderClass(key & 0xF) + ' ' + RenderWord(static_cast<WordId>(key >> 4), vocab);
    case Atoms::kClassPair:
      return RenderClass(key >> 4) + ' ' + RenderClass(key & 0xF);
    case Atoms::kBeginClass:
      return std::string(kBeginSpelling) + " other " + RenderClass(key);
    case Atoms::kTokenClass:
      return RenderToken(key >> 4, vocab) + ' ' + RenderClass(key & 0xF);
  }
  return {};
}

std::vector<std::string_view> SplitAtoms(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i <= s.size()) {
    std::size_t j = s.find(' ', i);
    if (j == std::string_view::npos) j = s.size();
    out.push_back(s.substr(i, j - i));
    i = j + 1;
  }
  return out;
}

class Reader {
 public:
  explicit Reader(Vocabulary& vocab) : vocab_(vocab) {}

  [[noreturn]] void Fail(const std::string& what) const {
    throw ModelFormatError("model file line " + std::to_string(line_) + ": " + what);
  }

  void set_line(std::size_t line) { line_ = line; }

  std::uint64_t ParseClass(std::string_view s) const {
    auto c = ClassFromName(s);
    if (!c) Fail("unknown class \"" + std::string(s) + "\"");
    return keys::Class(*c);
  }

  WordId ParseWord(std::string_view s, bool define) const {
    if (!s.empty() && s[0] == '\\') {
      s.remove_prefix(1);
    } else if (s == kEndSpelling) {
      return kEndWord;
    } else if (s == kBeginSpelling) {
      return kBeginWord;
    } else if (s == kUnknownSpelling) {
      return kUnknownWord;
    }
    if (s.empty()) Fail("empty word");
    if (define) return vocab_.Add(s);
    const WordId id = vocab_.Lookup(s);
    if (id == kUnknownWord) Fail("word \"" + std::string(s) + "\" missing from vocabulary");
    return id;
  }

  std::uint64_t ParseFeature(std::string_view s) const {
    auto f = FeatureFromName(s);
    if (!f) Fail("unknown word feature \"" + std::string(s) + "\"");
    return static_cast<std::uint64_t>(*f);
  }

  std::uint64_t Parse(Atoms atoms, std::string_view s, bool define) const {
    const std::vector<std::string_view> a = SplitAtoms(s);
    const auto need = [&](std::size_t n) {
      if (a.size() != n) Fail("expected " + std::to_string(n) + " atoms in \"" + std::string(s) + "\"");
    };
    switch (atoms) {
      case Atoms::kClass:
        need(1);
        return ParseClass(a[0]);
      case Atoms::kToken:
        need(2);
        return MakeTokenKey(ParseWord(a[0], false), static_cast<WordFeature>(ParseFeature(a[1])));
      case Atoms::kWord:
        need(1);
        return ParseWord(a[0], define);
      case Atoms::kFeature:
        need(1);
        return ParseFeature(a[0]);
      case Atoms::kEmpty:
        need(1);
        if (a[0] != "*") Fail("expected empty context \"*\"");
        return keys::kEmpty;
      case Atoms::kClassWord:
        need(2);
        return keys::ClassWord(ClassFromIndex(static_cast<int>(ParseClass(a[0]))),
                               ParseWord(a[1], false));
      case Atoms::kClassPair:
        need(2);
        return keys::ClassPair(ClassFromIndex(static_cast<int>(ParseClass(a[0]))),
                               ClassFromIndex(static_cast<int>(ParseClass(a[1]))));
      case Atoms::kBeginClass:
        need(3);
        if (a[0] != kBeginSpelling || a[1] != "other") Fail("malformed begin context");
        return ParseClass(a[2]);
      case Atoms::kTokenClass:
        need(3);
        return keys::TokenClass(
            MakeTokenKey(ParseWord(a[0], false), static_cast<WordFeature>(ParseFeature(a[1]))),
            ClassFromIndex(static_cast<int>(ParseClass(a[2]))));
    }
    return 0;
  }

 private:
  Vocabulary& vocab_;
  std::size_t line_ = 0;
};

std::string ClassInventory() {
  std::string out;
  for (NameClass c : kEmittingClasses) {
    if (!out.empty()) out += ' ';
    out += ClassName(c);
  }
  return out;
}

struct Row {
  std::size_t line;
  std::string event;
  std::string context;
  std::uint64_t count;
};

}  // namespace

void WriteModel(std::ostream& out, const TrainedModel& model) {
  out << "namefinder-model\t" << kModelFormatVersion << '\n';
  out << "swap_comma_period\t" << (model.feature_config.swap_comma_period ? 1 : 0) << '\n';
  out << "classes\t" << ClassInventory() << '\n';
  out << "vocabulary_size\t" << model.vocab.size() << '\n';
  const std::pair<std::string_view, const CountTables*> sets[] = {
      {"main", &model.main}, {"unknown", &model.unknown}};
  for (const auto& [set_name, tables] : sets) {
    for (const TableSpec& spec : kTables) {
      out << '[' << set_name << '.' << spec.name << "]\n";
      std::vector<std::tuple<std::string, std::string, std::uint64_t>> rows;
      (tables->*spec.table).ForEach([&](std::uint64_t ctx, std::uint64_t ev, std::uint64_t n) {
        rows.emplace_back(Render(spec.context, ctx, model.vocab),
                          Render(spec.event, ev, model.vocab), n);
      });
      std::sort(rows.begin(), rows.end());
      for (const auto& [ctx, ev, n] : rows) {
        out << ev << '\t' << ctx << '\t' << n << '\n';
      }
    }
  }
}

std::string SerializeModel(const TrainedModel& model) {
  std::ostringstream out;
  WriteModel(out, model);
  return out.str();
}

TrainedModel ReadModel(std::istream& in) {
  TrainedModel model;
  Reader reader(model.vocab);
  std::string line;
  std::size_t line_number = 0;

  const auto header = [&](std::string_view key) -> std::string {
    ++line_number;
    reader.set_line(line_number);
    if (!std::getline(in, line)) reader.Fail("missing header field " + std::string(key));
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos || std::string_view(line).substr(0, tab) != key) {
      reader.Fail("expected header field " + std::string(key));
    }
    return line.substr(tab + 1);
  };

  const std::string version = header("namefinder-model");
  if (version != std::to_string(kModelFormatVersion)) {
    throw ModelFormatError("model format version mismatch: expected " +
                           std::to_string(kModelFormatVersion) + ", found " + version);
  }
  const std::string swap = header("swap_comma_period");
  if (swap != "0" && swap != "1") reader.Fail("swap_comma_period must be 0 or 1");
  model.feature_config.swap_comma_period = swap == "1";
  if (header("classes") != ClassInventory()) reader.Fail("unexpected class inventory");
  const std::string vocab_size = header("vocabulary_size");

  // Rows are buffered because the vocabulary is defined by main.word_only,
  // which follows sections that already refer to words.
  std::map<std::string, std::vector<Row>> sections;
  std::vector<Row>* current = nullptr;
  while (std::getline(in, line)) {
    ++line_number;
    reader.set_line(line_number);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') reader.Fail("malformed section header");
      current = &sections[line.substr(1, line.size() - 2)];
      continue;
    }
    if (current == nullptr) reader.Fail("row outside of any section");
    const std::size_t t1 = line.find('\t');
    const std::size_t t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos) reader.Fail("expected event<TAB>context<TAB>count");
    std::uint64_t count = 0;
    try {
      std::size_t used = 0;
      count = std::stoull(line.substr(t2 + 1), &used);
      if (used != line.size() - t2 - 1 || count == 0) throw std::invalid_argument("count");
    } catch (const std::exception&) {
      reader.Fail("bad count");
    }
    current->push_back({line_number, line.substr(0, t1), line.substr(t1 + 1, t2 - t1 - 1), count});
  }

  for (const auto& [name, rows] : sections) {
    bool known = false;
    for (std::string_view set : {"main.", "unknown."}) {
      for (const TableSpec& spec : kTables) {
        if (name == std::string(set) + std::string(spec.name)) known = true;
      }
    }
    if (!known) throw ModelFormatError("unknown model section [" + name + "]");
  }

  for (const Row& row : sections["main.word_only"]) {
    reader.set_line(row.line);
    reader.Parse(Atoms::kWord, row.event, true);
  }
  model.vocab.Freeze();
  if (std::to_string(model.vocab.size()) != vocab_size) {
    throw ModelFormatError("vocabulary_size " + vocab_size + " does not match " +
                           std::to_string(model.vocab.size()) + " words in main.word_only");
  }

  for (auto [set_name, tables] : {std::pair<std::string, CountTables*>{"main", &model.main},
                                  std::pair<std::string, CountTables*>{"unknown", &model.unknown}}) {
    for (const TableSpec& spec : kTables) {
      for (const Row& row : sections[set_name + "." + std::string(spec.name)]) {
        reader.set_line(row.line);
        const std::uint64_t ctx = reader.Parse(spec.context, row.context, false);
        const std::uint64_t ev = reader.Parse(spec.event, row.event, false);
        if ((tables->*spec.table).Count(ctx, ev) != 0) reader.Fail("duplicate row");
        (tables->*spec.table).Add(ctx, ev, row.count);
      }
    }
  }
  return model;
}

TrainedModel DeserializeModel(const std::string& text) {
  std::istringstream in(text);
  return ReadModel(in);
}

void SaveModel(const std::string& path, const TrainedModel& model) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot open " + path + " for writing");
  WriteModel(out, model);
  out.flush();
  if (!out) throw std::ios_base::failure("error writing " + path);
}

TrainedModel LoadModel(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  return ReadModel(in);
}

}  // namespace namefinder
