#pragma once

#include <optional>
#include <string>
#include <vector>

namespace widthforge {

struct VerifyRow {
  std::string suite;
  std::string graph_id;
  std::string check;
  std::string values;    // "name=value" pairs joined by ';'
  std::string relation;  // the inequality or identity being checked
  std::string result;    // pass, fail, skipped (...), refused (...)
};

struct VerifyReport {
  std::vector<VerifyRow> rows;
  int passed = 0;
  int failed = 0;
  int other = 0;  // skipped or refused rows
  bool ok() const { return failed == 0; }
};

const std::vector<std::string>& verify_suites();
// Corpus used by a suite when none is given.
std::string default_corpus(const std::string& suite);

std::string csv_header();
std::string to_csv(const VerifyReport& report);

// Runs one suite over a corpus (see load_corpus). Graphs are processed in
// parallel; rows come back in corpus order. Throws InvalidArgument for an
// unknown suite.
VerifyReport run_verify(const std::string& suite, const std::optional<std::string>& corpus = std::nullopt,
                        int threads = 0);

}  // namespace widthforge
