#include <set>

#include "doctest.h"
#include "suites.hpp"

using namespace ybs;

TEST_CASE("registry") {
  std::set<std::string> names;
  for (const auto& s : cli::registry()) {
    CHECK(names.insert(s.name).second);
    CHECK(cli::find_suite(s.name) == &s);
  }
  CHECK(cli::find_suite("nosuch") == nullptr);
  CHECK(cli::group_members("all").size() == cli::registry().size());
  CHECK(cli::group_members("quantum").size() == 3);
  CHECK(cli::default_cap(cli::find_suite("match")->cap) == 4);
  CHECK(cli::default_cap(cli::find_suite("rimhook")->cap) == 6);
  CHECK(cli::default_cap(cli::find_suite("sixteen")->cap) == 5);
}

TEST_CASE("every suite passes on two sites") {
  std::vector<cli::Job> jobs;
  for (const auto& s : cli::registry()) jobs.push_back({&s, {2, Model::OSC, 1, false}});
  for (const auto& o : cli::run_jobs(jobs, 4)) {
    INFO(o.report.summary());
    CHECK(o.report.passed());
  }
}

TEST_CASE("perturbed suites fail") {
  std::vector<cli::Job> jobs;
  for (const auto& s : cli::registry())
    if (s.perturbable)
      for (Model m : {Model::OSC, Model::VIC}) jobs.push_back({&s, {3, m, 17, true}});
  CHECK(jobs.size() >= 8);
  for (const auto& o : cli::run_jobs(jobs, 3)) {
    INFO(o.report.suite << " " << o.report.model);
    CHECK_FALSE(o.report.passed());
    CHECK_FALSE(o.report.mismatches.empty());
  }
}

TEST_CASE("pool size does not change results") {
  std::vector<cli::Job> jobs;
  for (const char* n : {"sixteen", "bethe-eigen", "schubert", "match", "coha"})
    jobs.push_back({cli::find_suite(n), {3, Model::VIC, 5, false}});
  const auto a = cli::run_jobs(jobs, 1), b = cli::run_jobs(jobs, 5);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].report.suite == b[i].report.suite);
    CHECK(a[i].report.checks == b[i].report.checks);
    CHECK(a[i].report.failures == b[i].report.failures);
  }
}
