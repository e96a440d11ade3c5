#include "namefinder/corpus.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>

#include "namefinder/features.h"

namespace namefinder {
namespace {

constexpr std::array<std::string_view, 8> kAbbreviations = {
    "Mr.", "Mrs.", "Dr.", "M.", "St.", "Co.", "Inc.", "Corp."};

constexpr std::string_view kLeadingPunct = "\"'([{$`";
constexpr std::string_view kTrailingPunct = ".,;:!?\"')]}%";
constexpr std::string_view kClosingPunct = "\"')]}";

bool IsAsciiSpace(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
         c == '\v';
}

bool IsWordChar(char32_t c) {
  return (c >= U'0' && c <= U'9') || IsUpperLetter(c) || IsLowerLetter(c) ||
         (c >= 0x80 && c != 0xFFFD && c != 0x00A1 && c != 0x00BF &&
          c != 0x00AB && c != 0x00BB);
}

bool HasWordChar(std::string_view s) {
  for (std::size_t pos = 0; pos < s.size();) {
    if (IsWordChar(DecodeUtf8(s, pos))) return true;
  }
  return false;
}

bool IsLetter(char32_t c) { return IsUpperLetter(c) || IsLowerLetter(c); }

// One or more letter+period pairs: "J.", "U.S.", "p.m.".
bool IsLetterPeriodSequence(std::string_view s) {
  if (s.empty()) return false;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (!IsLetter(DecodeUtf8(s, pos))) return false;
    if (pos >= s.size() || s[pos] != '.') return false;
    ++pos;
  }
  return true;
}

bool IsBang(char c) { return c == '!' || c == '?'; }

// Runs of one repeated character, or any mix of '!' and '?', stay together.
std::size_t RunLengthFromEnd(std::string_view s) {
  std::size_t n = 1;
  while (n < s.size() && (s[s.size() - 1 - n] == s.back() ||
                          (IsBang(s.back()) && IsBang(s[s.size() - 1 - n])))) {
    ++n;
  }
  return n;
}

std::size_t RunLengthFromStart(std::string_view s) {
  std::size_t n = 1;
  while (n < s.size() && s[n] == s.front()) ++n;
  return n;
}

std::string Unescape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size();) {
    if (s[i] == '&') {
      if (s.substr(i, 5) == "&amp;") {
        out += '&';
        i += 5;
        continue;
      }
      if (s.substr(i, 4) == "&lt;") {
        out += '<';
        i += 4;
        continue;
      }
      if (s.substr(i, 4) == "&gt;") {
        out += '>';
        i += 4;
        continue;
      }
    }
    out += s[i++];
  }
  return out;
}

void AppendEscaped(std::string& out, std::string_view token) {
  for (char c : token) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      default:
        out += c;
    }
  }
}

// Sentence boundaries for one line of tokens: returns the exclusive end
// index of every sentence.
std::vector<std::size_t> SentenceEnds(const std::vector<std::string>& tokens) {
  std::vector<std::size_t> ends;
  std::size_t i = 0;
  while (i < tokens.size()) {
    if (IsSentenceTerminal(tokens[i])) {
      std::size_t end = i + 1;
      while (end < tokens.size() && tokens[end].size() == 1 &&
             kClosingPunct.find(tokens[end][0]) != std::string_view::npos) {
        ++end;
      }
      ends.push_back(end);
      i = end;
    } else {
      ++i;
    }
  }
  if (ends.empty() || ends.back() != tokens.size()) {
    if (!tokens.empty()) ends.push_back(tokens.size());
  }
  return ends;
}

void TokenizeWhitespaceSeparated(std::string_view text,
                                 std::vector<std::string>& out) {
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsAsciiSpace(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !IsAsciiSpace(text[j])) ++j;
    if (j > i) {
      for (std::string& t : TokenizeChunk(text.substr(i, j - i))) {
        out.push_back(std::move(t));
      }
    }
    i = j;
  }
}

struct ClassType {
  std::string_view tag;
  NameClass name_class;
};

constexpr std::array<ClassType, 7> kTagTypes = {{
    {"ENAMEX", NameClass::kPerson},
    {"ENAMEX", NameClass::kOrganization},
    {"ENAMEX", NameClass::kLocation},
    {"TIMEX", NameClass::kTime},
    {"TIMEX", NameClass::kDate},
    {"NUMEX", NameClass::kPercent},
    {"NUMEX", NameClass::kMoney},
}};

bool IsKnownTag(std::string_view name) {
  return name == "ENAMEX" || name == "TIMEX" || name == "NUMEX";
}

struct LineRegion {
  std::size_t start;
  std::size_t end;
  NameClass name_class;
  std::size_t column;
};

// Parses the inside of an opening tag (between '<' and '>'). Returns the
// tag name and class, or throws.
std::pair<std::string, NameClass> ParseOpenTag(std::string_view body,
                                               std::size_t line,
                                               std::size_t column) {
  std::size_t i = 0;
  while (i < body.size() && !IsAsciiSpace(body[i])) ++i;
  const std::string name(body.substr(0, i));
  if (!IsKnownTag(name)) {
    throw ParseError(line, column, "unknown tag <" + name + ">");
  }
  std::string type;
  bool have_type = false;
  while (i < body.size()) {
    while (i < body.size() && IsAsciiSpace(body[i])) ++i;
    if (i >= body.size()) break;
    const std::size_t key_start = i;
    while (i < body.size() && body[i] != '=' && !IsAsciiSpace(body[i])) ++i;
    const std::string_view key = body.substr(key_start, i - key_start);
    if (i >= body.size() || body[i] != '=' || i + 1 >= body.size() ||
        body[i + 1] != '"') {
      throw ParseError(line, column + 1 + key_start,
                       "malformed attribute in <" + name + ">");
    }
    i += 2;
    const std::size_t value_start = i;
    while (i < body.size() && body[i] != '"') ++i;
    if (i >= body.size()) {
      throw ParseError(line, column + 1 + value_start,
                       "unterminated attribute value in <" + name + ">");
    }
    if (key == "TYPE") {
      type = std::string(body.substr(value_start, i - value_start));
      have_type = true;
    }
    ++i;
  }
  if (!have_type) {
    throw ParseError(line, column, "<" + name + "> without TYPE attribute");
  }
  for (const ClassType& ct : kTagTypes) {
    if (ct.tag == name && ClassName(ct.name_class) == type) {
      return {name, ct.name_class};
    }
  }
  throw ParseError(line, column,
                   "unknown TYPE \"" + type + "\" for <" + name + ">");
}

void ParseLine(std::string_view line, std::size_t line_number,
               std::vector<AnnotatedSentence>& out) {
  std::vector<std::string> tokens;
  std::vector<LineRegion> regions;
  std::string open_tag;
  LineRegion open{};
  bool is_open = false;

  std::size_t text_start = 0;
  std::size_t i = 0;
  const auto flush_text = [&](std::size_t end) {
    if (end > text_start) {
      const std::string text = Unescape(line.substr(text_start, end - text_start));
      TokenizeWhitespaceSeparated(text, tokens);
    }
  };
  while (i < line.size()) {
    if (line[i] == '>') {
      throw ParseError(line_number, i + 1, "stray '>'");
    }
    if (line[i] != '<') {
      ++i;
      continue;
    }
    flush_text(i);
    const std::size_t close = line.find('>', i);
    if (close == std::string_view::npos) {
      throw ParseError(line_number, i + 1, "unterminated tag");
    }
    const std::string_view body = line.substr(i + 1, close - i - 1);
    if (!body.empty() && body[0] == '/') {
      const std::string_view name = body.substr(1);
      if (!is_open) {
        throw ParseError(line_number, i + 1,
                         "closing </" + std::string(name) + "> without opening tag");
      }
      if (name != open_tag) {
        throw ParseError(line_number, i + 1,
                         "</" + std::string(name) + "> does not close <" +
                             open_tag + ">");
      }
      if (tokens.size() == open.start) {
        throw ParseError(line_number, open.column, "empty <" + open_tag + ">");
      }
      open.end = tokens.size();
      regions.push_back(open);
      is_open = false;
    } else {
      auto [name, name_class] = ParseOpenTag(body, line_number, i + 1);
      if (is_open) {
        throw ParseError(line_number, i + 1,
                         "nested <" + name + "> inside <" + open_tag + ">");
      }
      is_open = true;
      open_tag = name;
      open = LineRegion{tokens.size(), tokens.size(), name_class, i + 1};
    }
    i = close + 1;
    text_start = i;
  }
  flush_text(line.size());
  if (is_open) {
    throw ParseError(line_number, open.column,
                     "<" + open_tag + "> not closed before end of line");
  }

  std::size_t begin = 0;
  std::size_t next_region = 0;
  for (std::size_t end : SentenceEnds(tokens)) {
    AnnotatedSentence sentence;
    sentence.tokens.assign(std::make_move_iterator(tokens.begin() + begin),
                           std::make_move_iterator(tokens.begin() + end));
    while (next_region < regions.size() && regions[next_region].start < end) {
      const LineRegion& r = regions[next_region];
      if (r.end > end) {
        throw ParseError(line_number, r.column,
                         "tagged region crosses a sentence boundary");
      }
      sentence.regions.push_back(
          Region{r.start - begin, r.end - begin, r.name_class});
      ++next_region;
    }
    out.push_back(std::move(sentence));
    begin = end;
  }
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column,
                       const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

bool IsAbbreviation(std::string_view token) {
  for (std::string_view a : kAbbreviations) {
    if (token == a) return true;
  }
  return IsLetterPeriodSequence(token);
}

bool IsSentenceTerminal(std::string_view token) {
  if (token == ".") return true;
  if (token.empty()) return false;
  return std::all_of(token.begin(), token.end(),
                     [](char c) { return c == '!' || c == '?'; });
}

std::vector<std::string> TokenizeChunk(std::string_view chunk) {
  if (chunk.empty()) return {};
  if (!HasWordChar(chunk)) return {std::string(chunk)};

  std::vector<std::string> out;
  std::string_view core = chunk;
  while (!core.empty() && kLeadingPunct.find(core.front()) != std::string_view::npos) {
    const std::size_t run = RunLengthFromStart(core);
    if (!HasWordChar(core.substr(run))) break;
    out.emplace_back(core.substr(0, run));
    core.remove_prefix(run);
  }
  std::vector<std::string> trailing;
  while (!core.empty() &&
         kTrailingPunct.find(core.back()) != std::string_view::npos) {
    if (IsAbbreviation(core)) break;
    const std::size_t run = RunLengthFromEnd(core);
    if (!HasWordChar(core.substr(0, core.size() - run))) break;
    trailing.emplace_back(core.substr(core.size() - run));
    core.remove_suffix(run);
  }
  out.emplace_back(core);
  out.insert(out.end(), std::make_move_iterator(trailing.rbegin()),
             std::make_move_iterator(trailing.rend()));
  return out;
}

std::vector<Sentence> Tokenize(std::string_view text) {
  std::vector<Sentence> sentences;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::vector<std::string> tokens;
    TokenizeWhitespaceSeparated(text.substr(line_start, line_end - line_start),
                                tokens);
    std::size_t begin = 0;
    for (std::size_t end : SentenceEnds(tokens)) {
      sentences.emplace_back(std::make_move_iterator(tokens.begin() + begin),
                             std::make_move_iterator(tokens.begin() + end));
      begin = end;
    }
    line_start = line_end + 1;
  }
  return sentences;
}

std::vector<AnnotatedSentence> ParseAnnotated(std::string_view document) {
  std::vector<AnnotatedSentence> sentences;
  std::size_t line_start = 0;
  std::size_t line_number = 1;
  while (line_start <= document.size()) {
    std::size_t line_end = document.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = document.size();
    ParseLine(document.substr(line_start, line_end - line_start), line_number,
              sentences);
    line_start = line_end + 1;
    ++line_number;
  }
  return sentences;
}

std::string EmitAnnotated(const std::vector<AnnotatedSentence>& sentences) {
  std::string out;
  for (const AnnotatedSentence& sentence : sentences) {
    std::size_t r = 0;
    for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
      if (i > 0) out += ' ';
      const bool opens = r < sentence.regions.size() && sentence.regions[r].start == i;
      if (opens) {
        const NameClass c = sentence.regions[r].name_class;
        out += '<';
        out += ClassTag(c);
        out += " TYPE=\"";
        out += ClassName(c);
        out += "\">";
      }
      AppendEscaped(out, sentence.tokens[i]);
      if (r < sentence.regions.size() && sentence.regions[r].end == i + 1) {
        out += "</";
        out += ClassTag(sentence.regions[r].name_class);
        out += '>';
        ++r;
      }
    }
    out += '\n';
  }
  return out;
}

std::size_t FractionCount(std::size_t total, double fraction) {
  return static_cast<std::size_t>(
      std::floor(fraction * static_cast<double>(total) + 0.5));
}

std::vector<std::size_t> SplitIndices(std::size_t total, double fraction,
                                      std::uint64_t seed) {
  if (total == 0) throw std::invalid_argument("cannot split an empty corpus");
  if (!(fraction > 0.0 && fraction < 1.0)) {
    throw std::invalid_argument("split fraction must lie in (0, 1)");
  }
  std::vector<std::size_t> order(total);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  for (std::size_t i = total - 1; i > 0; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
    std::swap(order[i], order[j]);
  }
  order.resize(FractionCount(total, fraction));
  std::sort(order.begin(), order.end());
  return order;
}

}  // namespace namefinder
