#include "namefinder/scorer.h"

#include <algorithm>
#include <cstdio>

namespace namefinder {
namespace {

void Finalize(ClassScore& s, double beta) {
  s.precision = s.responses == 0 ? 0.0
                                 : static_cast<double>(s.correct) /
                                       static_cast<double>(s.responses);
  s.recall = s.keys == 0 ? 0.0
                         : static_cast<double>(s.correct) / static_cast<double>(s.keys);
  s.f_measure = FMeasure(s.precision, s.recall, beta);
}

std::string Line(const char* fmt, std::string_view name, const ClassScore& s) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), fmt, static_cast<int>(name.size()), name.data(),
                static_cast<unsigned long long>(s.correct),
                static_cast<unsigned long long>(s.responses),
                static_cast<unsigned long long>(s.keys), s.precision, s.recall,
                s.f_measure);
  return buf;
}

}  // namespace

AlignmentError::AlignmentError(std::size_t sentence, std::size_t token,
                               const std::string& what)
    : std::runtime_error(what), sentence_(sentence), token_(token) {}

double FMeasure(double precision, double recall, double beta) {
  if (precision == 0 && recall == 0) return 0.0;
  const double b2 = beta * beta;
  return (b2 + 1) * recall * precision / (b2 * recall + precision);
}

ScoreReport Score(const std::vector<AnnotatedSentence>& key,
                  const std::vector<AnnotatedSentence>& response, double beta) {
  const std::size_t n = std::min(key.size(), response.size());
  for (std::size_t s = 0; s < n; ++s) {
    const auto& kt = key[s].tokens;
    const auto& rt = response[s].tokens;
    const std::size_t m = std::min(kt.size(), rt.size());
    for (std::size_t t = 0; t < m; ++t) {
      if (kt[t] != rt[t]) {
        throw AlignmentError(s, t,
                             "token mismatch at sentence " + std::to_string(s) +
                                 ", token " + std::to_string(t) + ": key \"" + kt[t] +
                                 "\" vs response \"" + rt[t] + "\"");
      }
    }
    if (kt.size() != rt.size()) {
      throw AlignmentError(s, m,
                           "sentence " + std::to_string(s) + " has " +
                               std::to_string(kt.size()) + " key tokens but " +
                               std::to_string(rt.size()) + " response tokens");
    }
  }
  if (key.size() != response.size()) {
    throw AlignmentError(n, 0,
                         "key has " + std::to_string(key.size()) +
                             " sentences but response has " +
                             std::to_string(response.size()));
  }

  ScoreReport report;
  report.beta = beta;
  for (std::size_t s = 0; s < key.size(); ++s) {
    for (const Region& r : key[s].regions) {
      ++report.per_class[ClassIndex(r.name_class)].keys;
    }
    std::vector<bool> used(key[s].regions.size(), false);
    for (const Region& r : response[s].regions) {
      ClassScore& cs = report.per_class[ClassIndex(r.name_class)];
      ++cs.responses;
      for (std::size_t k = 0; k < key[s].regions.size(); ++k) {
        if (!used[k] && key[s].regions[k] == r) {
          used[k] = true;
          ++cs.correct;
          break;
        }
      }
    }
  }
  for (ClassScore& cs : report.per_class) {
    report.overall.correct += cs.correct;
    report.overall.responses += cs.responses;
    report.overall.keys += cs.keys;
    Finalize(cs, beta);
  }
  Finalize(report.overall, beta);
  return report;
}

double ErrorRate(const ScoreReport& report) {
  return 100.0 * (1.0 - report.overall.f_measure);
}

std::string FormatReport(const ScoreReport& report) {
  std::string out;
  char header[160];
  std::snprintf(header, sizeof(header), "%-14s %8s %9s %6s %7s %7s %7s\n", "class",
                "correct", "responses", "keys", "P", "R", "F");
  out += header;
  const char* fmt = "%-14.*s %8llu %9llu %6llu %7.3f %7.3f %7.3f\n";
  for (int c = 0; c < kNumScoredClasses; ++c) {
    out += Line(fmt, ClassName(ClassFromIndex(c)), report.per_class[c]);
  }
  out += Line(fmt, "ALL", report.overall);
  return out;
}

std::string FormatReportRecords(const ScoreReport& report) {
  std::string out;
  const auto record = [&out](std::string_view name, const ClassScore& s) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%.*s %.3f %.3f %.3f\n",
                  static_cast<int>(name.size()), name.data(), s.precision, s.recall,
                  s.f_measure);
    out += buf;
  };
  for (int c = 0; c < kNumScoredClasses; ++c) {
    record(ClassName(ClassFromIndex(c)), report.per_class[c]);
  }
  record("ALL", report.overall);
  return out;
}

}  // namespace namefinder
