#ifndef NAMEFINDER_MODEL_IO_H_
#define NAMEFINDER_MODEL_IO_H_

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "namefinder/counts.h"

namespace namefinder {

inline constexpr int kModelFormatVersion = 1;

class ModelFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Line-oriented UTF-8 model file:
//
//   namefinder-model<TAB>1
//   swap_comma_period<TAB>0
//   classes<TAB>PERSON ORGANIZATION ... NOT-A-NAME
//   vocabulary_size<TAB>N
//   [main.transition]
//   event<TAB>context<TAB>count
//   ...
//
// Sections follow for every table of the main and unknown-word sets.
// Multi-part events and contexts are space-separated atoms (class
// names, feature names, words). Rows are sorted, so a model serializes
// to the same bytes however it was built. Real words that collide with
// a sentinel spelling or begin with a backslash are written with a
// leading backslash.
void WriteModel(std::ostream& out, const TrainedModel& model);
std::string SerializeModel(const TrainedModel& model);

// Throws ModelFormatError, naming expected and found versions on a
// version mismatch.
TrainedModel ReadModel(std::istream& in);
TrainedModel DeserializeModel(const std::string& text);

void SaveModel(const std::string& path, const TrainedModel& model);
TrainedModel LoadModel(const std::string& path);

}  // namespace namefinder

#endif  // NAMEFINDER_MODEL_IO_H_
