#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace ybs {

struct Mismatch {
  std::string relation;
  std::string row;
  std::string col;
  std::string lhs;
  std::string rhs;
};

// Outcome of a verification suite. Only the first kMaxStored mismatches are
// kept verbatim; failures counts all of them.
struct Report {
  static constexpr std::size_t kMaxStored = 64;

  std::string suite;
  std::string model;
  int N = 0;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<Mismatch> mismatches;
  std::vector<std::string> notes;

  Report() = default;
  Report(std::string suite_, std::string model_, int n) : suite(std::move(suite_)), model(std::move(model_)), N(n) {}

  bool passed() const { return failures == 0; }
  void fail(Mismatch m);
  // Records one check; on failure stores the mismatch.
  void expect(bool ok, const std::string& relation, const std::string& row = {},
              const std::string& col = {}, const std::string& lhs = {}, const std::string& rhs = {});
  void absorb(const Report& sub);
  std::string summary() const;
};

}  // namespace ybs
