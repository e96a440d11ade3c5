#include "cli.h"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "namefinder/corpus.h"
#include "namefinder/counts.h"
#include "namefinder/decoder.h"
#include "namefinder/experiment.h"
#include "namefinder/model_io.h"
#include "namefinder/scorer.h"

namespace namefinder::cli {
namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path);
  return buf.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("error writing " + path);
}

std::vector<AnnotatedSentence> ReadAnnotated(const std::string& path) {
  try {
    return ParseAnnotated(ReadFile(path));
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), path + ": " + e.what());
  }
}

// Maps the error families onto exit codes.
template <typename Fn>
int Guard(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kFormat;
  } catch (const ModelFormatError& e) {
    err << "model error: " << e.what() << '\n';
    return kFormat;
  } catch (const AlignmentError& e) {
    err << "alignment error: " << e.what() << '\n';
    return kFormat;
  } catch (const TrainingError& e) {
    err << "training error: " << e.what() << '\n';
    return kFormat;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace

double ParseFraction(const std::string& text) {
  const auto parse_number = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) {
      throw std::invalid_argument("bad fraction \"" + text + "\"");
    }
    return v;
  };
  const std::size_t slash = text.find('/');
  if (slash == std::string::npos) return parse_number(text);
  const double den = parse_number(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("bad fraction \"" + text + "\"");
  return parse_number(text.substr(0, slash)) / den;
}

int CmdTrain(const std::string& corpus_path, const std::string& model_path,
             const RunConfig& config, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    const std::vector<AnnotatedSentence> corpus = ReadAnnotated(corpus_path);
    const TrainedModel model = Train(corpus, config.feature_config);
    WriteFile(model_path, SerializeModel(model));

    std::array<std::size_t, kNumScoredClasses> regions{};
    for (const AnnotatedSentence& s : corpus) {
      for (const Region& r : s.regions) ++regions[ClassIndex(r.name_class)];
    }
    out << "sentences\t" << corpus.size() << '\n';
    out << "words\t" << CountWords(corpus) << '\n';
    out << "vocabulary\t" << model.vocab.size() << '\n';
    for (int c = 0; c < kNumScoredClasses; ++c) {
      out << ClassName(ClassFromIndex(c)) << '\t' << regions[c] << '\n';
    }
    return int{kOk};
  });
}

int CmdDecode(const std::string& model_path, const std::string& input_path,
              const std::string& output_path, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    const TrainedModel model = LoadModel(model_path);
    const std::string text = ReadFile(input_path);

    const auto start = std::chrono::steady_clock::now();
    const Decoder decoder(model);
    std::vector<AnnotatedSentence> sentences;
    for (DecodeResult& r : decoder.DecodeDocument(text)) {
      sentences.push_back(std::move(r.sentence));
    }
    const std::string annotated = EmitAnnotated(sentences);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::ostream& stats = output_path.empty() ? err : out;
    if (output_path.empty()) {
      out << annotated;
    } else {
      WriteFile(output_path, annotated);
    }
    const double megabytes = static_cast<double>(text.size()) / 1e6;
    const double mb_per_hour = seconds > 0 ? megabytes / seconds * 3600.0 : 0.0;
    char line[160];
    std::snprintf(line, sizeof(line),
                  "decoded %zu sentences, %.3f MB in %.3f s (%.1f MB/hr)\n",
                  sentences.size(), megabytes, seconds, mb_per_hour);
    stats << line;
    return int{kOk};
  });
}

int CmdScore(const std::string& key_path, const std::string& response_path,
             const RunConfig& config, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    if (!(config.beta > 0)) throw std::invalid_argument("beta must be positive");
    const ScoreReport report =
        Score(ReadAnnotated(key_path), ReadAnnotated(response_path), config.beta);
    out << FormatReport(report) << '\n' << FormatReportRecords(report);
    return int{kOk};
  });
}

int CmdLearningCurve(const std::string& corpus_path, const std::string& test_path,
                     const RunConfig& config, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    if (config.curve_fractions.empty()) throw std::invalid_argument("no fractions given");
    for (std::size_t i = 0; i < config.curve_fractions.size(); ++i) {
      const double f = config.curve_fractions[i];
      if (!(f > 0.0 && f <= 1.0)) throw std::invalid_argument("fractions must lie in (0, 1]");
      if (i > 0 && f >= config.curve_fractions[i - 1]) {
        throw std::invalid_argument("fractions must be sorted in descending order");
      }
    }
    const std::vector<AnnotatedSentence> training = ReadAnnotated(corpus_path);
    const std::vector<AnnotatedSentence> test = ReadAnnotated(test_path);
    out << "fraction\twords\tF\n";
    for (double f : config.curve_fractions) {
      std::vector<CurvePoint> point;
      try {
        point = RunLearningCurve(training, test, {f}, config.feature_config, config.beta);
      } catch (const std::exception& e) {
        err << "learning curve failed at fraction " << f << '\n';
        throw;
      }
      char line[128];
      std::snprintf(line, sizeof(line), "%g\t%zu\t%.4f\n", f, point[0].training_words,
                    point[0].report.overall.f_measure);
      out << line;
    }
    return int{kOk};
  });
}

int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Statistical name finder: train, decode, score and learning curves"};
  app.require_subcommand(1);

  RunConfig config;
  std::string model_path, output_path, corpus_path, input_path, test_path, key_path,
      response_path, fractions;

  CLI::App* train = app.add_subcommand("train", "Train a model from an annotated corpus");
  train->add_option("corpus", corpus_path, "Annotated training corpus")->required();
  train->add_option("--model", model_path, "Model file to write")->required();
  train->add_flag("--spanish-numbers", config.feature_config.swap_comma_period,
                  "Comma is the decimal mark, period groups thousands");

  CLI::App* decode = app.add_subcommand("decode", "Annotate plain text");
  decode->add_option("input", input_path, "Plain text input")->required();
  decode->add_option("--model", model_path, "Model file")->required();
  decode->add_option("--output", output_path, "Annotated output (default: stdout)");

  CLI::App* score = app.add_subcommand("score", "Score a response against a key");
  score->add_option("key", key_path, "Annotated key")->required();
  score->add_option("response", response_path, "Annotated response")->required();
  score->add_option("--beta", config.beta, "Relative weight of recall")
      ->check(CLI::PositiveNumber);

  CLI::App* curve =
      app.add_subcommand("learning-curve", "F-measure over shrinking training prefixes");
  curve->add_option("corpus", corpus_path, "Annotated training corpus")->required();
  curve->add_option("test", test_path, "Annotated test corpus")->required();
  curve->add_option("--fractions", fractions,
                    "Comma-separated training fractions, descending (default 1,1/2,1/4,1/8)");
  curve->add_option("--seed", config.seed, "Reserved for randomized subsets");
  curve->add_option("--beta", config.beta, "Relative weight of recall")
      ->check(CLI::PositiveNumber);
  curve->add_flag("--spanish-numbers", config.feature_config.swap_comma_period,
                  "Comma is the decimal mark, period groups thousands");

  try {
    app.parse(argc, argv);
    if (!fractions.empty()) {
      config.curve_fractions.clear();
      std::stringstream ss(fractions);
      std::string item;
      while (std::getline(ss, item, ',')) config.curve_fractions.push_back(ParseFraction(item));
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? int{kOk} : int{kUsage};
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (train->parsed()) return CmdTrain(corpus_path, model_path, config, out, err);
  if (decode->parsed()) return CmdDecode(model_path, input_path, output_path, out, err);
  if (score->parsed()) return CmdScore(key_path, response_path, config, out, err);
  return CmdLearningCurve(corpus_path, test_path, config, out, err);
}

}  // namespace namefinder::cli
