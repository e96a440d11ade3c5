#include "namefinder/vocabulary.h"

#include <stdexcept>

namespace namefinder {

Vocabulary::Vocabulary()
    : words_{std::string(kEndSpelling), std::string(kBeginSpelling),
             std::string(kUnknownSpelling)} {}

WordId Vocabulary::Add(std::string_view word) {
  if (auto it = index_.find(word); it != index_.end()) return it->second;
  if (frozen_) throw std::logic_error("vocabulary is frozen");
  const auto id = static_cast<WordId>(words_.size());
  words_.emplace_back(word);
  index_.emplace(std::string(word), id);
  return id;
}

WordId Vocabulary::Lookup(std::string_view word) const {
  auto it = index_.find(word);
  return it == index_.end() ? kUnknownWord : it->second;
}

bool Vocabulary::Contains(std::string_view word) const {
  return index_.find(word) != index_.end();
}

}  // namespace namefinder
