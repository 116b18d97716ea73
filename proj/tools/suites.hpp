#pragma once

// Fixed registry of verification suites driven by `ybs verify`.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ybs/vertexmodel.hpp"

namespace ybs::cli {

enum class CapClass { Symbolic, Transport, RimHook, None };

struct SuiteContext {
  int N = 3;
  Model model = Model::OSC;
  unsigned long long seed = 1;
  bool perturb = false;
};

struct Suite {
  std::string name;
  std::string group;
  CapClass cap = CapClass::Symbolic;
  bool per_model = false;    // run once per model
  bool perturbable = false;  // has a seeded negative control
  std::function<Report(const SuiteContext&)> run;
};

const std::vector<Suite>& registry();
const Suite* find_suite(const std::string& name);
std::vector<std::string> group_members(const std::string& group);
int default_cap(CapClass c);

struct Job {
  const Suite* suite = nullptr;
  SuiteContext ctx;
};

struct Outcome {
  Report report;
  double elapsed_ms = 0;
};

// Runs every job on a pool of `jobs` threads; results keep the job order.
std::vector<Outcome> run_jobs(const std::vector<Job>& jobs, int threads);

}  // namespace ybs::cli
