#ifndef NAMEFINDER_TOOLS_CLI_H_
#define NAMEFINDER_TOOLS_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "namefinder/features.h"

namespace namefinder::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kFormat = 2,
  kIo = 3,
};

struct RunConfig {
  FeatureConfig feature_config;
  double beta = 1.0;
  std::uint64_t seed = 0;
  std::vector<double> curve_fractions = {1.0, 0.5, 0.25, 0.125};
};

int CmdTrain(const std::string& corpus_path, const std::string& model_path,
             const RunConfig& config, std::ostream& out, std::ostream& err);

// Empty output_path writes the annotation to `out` and statistics to `err`.
int CmdDecode(const std::string& model_path, const std::string& input_path,
              const std::string& output_path, std::ostream& out, std::ostream& err);

int CmdScore(const std::string& key_path, const std::string& response_path,
             const RunConfig& config, std::ostream& out, std::ostream& err);

int CmdLearningCurve(const std::string& corpus_path, const std::string& test_path,
                     const RunConfig& config, std::ostream& out, std::ostream& err);

// Accepts "1", "0.25" or "1/4"; throws std::invalid_argument otherwise.
double ParseFraction(const std::string& text);

// Full command line: namefinder <subcommand> [args].
int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace namefinder::cli

#endif  // NAMEFINDER_TOOLS_CLI_H_
