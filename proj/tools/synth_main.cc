// Writes a synthetic annotated corpus, split into training and test files.
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "namefinder/corpus.h"
#include "namefinder/synthetic.h"

int main(int argc, char** argv) {
  CLI::App app{"Generate a synthetic annotated corpus"};
  namefinder::SyntheticOptions options;
  std::size_t test_sentences = 1000;
  std::string train_path, test_path;
  app.add_option("train", train_path, "Training corpus to write")->required();
  app.add_option("test", test_path, "Test corpus to write")->required();
  app.add_option("--sentences", options.sentences, "Total sentences");
  app.add_option("--test-sentences", test_sentences, "Sentences held out for testing");
  app.add_option("--seed", options.seed, "Generator seed");
  app.add_option("--cue-probability", options.cue_probability, "Probability of cue words");
  CLI11_PARSE(app, argc, argv);

  if (test_sentences >= options.sentences) {
    std::cerr << "error: test set must be smaller than the corpus\n";
    return 1;
  }
  const auto corpus = namefinder::GenerateSyntheticCorpus(options);
  const auto split = corpus.end() - static_cast<std::ptrdiff_t>(test_sentences);
  std::ofstream train(train_path), test(test_path);
  if (!train || !test) {
    std::cerr << "error: cannot open output files\n";
    return 3;
  }
  train << namefinder::EmitAnnotated({corpus.begin(), split});
  test << namefinder::EmitAnnotated({split, corpus.end()});
  return 0;
}
