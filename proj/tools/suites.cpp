#include "suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <thread>

#include "ybs/convolution.hpp"
#include "ybs/gkmschubert.hpp"
#include "ybs/quantumcoha.hpp"
#include "ybs/ybops.hpp"

namespace ybs::cli {

namespace {

VertexModel model_of(const SuiteContext& c) {
  return c.perturb ? perturbed_model(c.model, c.seed) : VertexModel::of(c.model);
}

std::vector<Suite> build() {
  using C = SuiteContext;
  std::vector<Suite> s;
  auto add = [&](std::string name, std::string group, CapClass cap, bool per_model, bool perturbable,
                 std::function<Report(const C&)> f) {
    s.push_back({std::move(name), std::move(group), cap, per_model, perturbable, std::move(f)});
  };
  using enum CapClass;

  add("rll", "vertexmodel", None, true, true, [](const C& c) { return check_rll(model_of(c)); });
  add("rmm", "vertexmodel", Symbolic, true, true, [](const C& c) { return check_rmm(model_of(c), c.N); });
  add("sixteen", "vertexmodel", Symbolic, true, true, [](const C& c) { return check_sixteen(model_of(c), c.N); });
  add("sixteen-listed", "vertexmodel", Symbolic, false, true, [](const C& c) {
    return check_sixteen_listed(c.perturb ? perturbed_model(Model::OSC, c.seed) : VertexModel::osc(), c.N);
  });
  add("lattice", "vertexmodel", Symbolic, true, false,
      [](const C& c) { return check_monodromy_lattice(VertexModel::of(c.model), c.N); });
  add("transformation", "vertexmodel", None, false, false, [](const C&) { return check_transformation(); });

  add("bethe-eigen", "ybops", Symbolic, false, false, [](const C& c) { return check_bethe_eigen(c.N); });
  add("hvector", "ybops", Symbolic, false, false, [](const C& c) { return check_hvector(c.N); });
  add("bethe-single", "ybops", Symbolic, false, false, [](const C& c) { return check_bethe_single(c.N); });
  add("bethe-basis", "ybops", Transport, false, false, [](const C& c) { return check_bethe_basis(c.N); });
  add("bethe-permute", "ybops", Symbolic, false, false, [](const C& c) { return check_bethe_permute(c.N); });
  add("bethe-order", "ybops", Symbolic, false, false, [](const C& c) { return check_bethe_order(c.N); });
  add("bethe-primed", "ybops", Symbolic, false, false, [](const C& c) { return check_primed_bethe(c.N); });
  add("lemma-ac", "ybops", Symbolic, false, false, [](const C& c) {
    Report r("lemma-ac", "osc", c.N);
    for (int k = 0; k <= c.N; ++k) r.absorb(check_lemma_ac(c.N, k));
    return r;
  });
  add("commute", "ybops", Symbolic, true, true, [](const C& c) {
    return check_commute(VertexModel::of(c.model), c.N, c.perturb ? SymVariant::NaiveFlip : SymVariant::Standard);
  });
  add("coxeter", "ybops", Symbolic, true, false, [](const C& c) { return check_coxeter(c.model, c.N, c.seed); });

  add("schubert", "gkmschubert", Symbolic, false, false,
      [](const C& c) { return check_schubert(c.N, schubert_twists(c.N, c.seed)); });
  add("demazure", "gkmschubert", Symbolic, false, false, [](const C& c) { return check_demazure_rule(c.N); });
  add("closure", "gkmschubert", Symbolic, false, false,
      [](const C& c) { return check_class_closure(c.N, c.seed); });
  add("uniqueness", "gkmschubert", Symbolic, false, false, [](const C& c) { return check_uniqueness(c.N); });
  add("wallcross", "gkmschubert", Symbolic, false, false, [](const C& c) { return check_wall_cross_all(c.N); });
  add("wallcross-chain", "gkmschubert", Symbolic, false, false,
      [](const C& c) { return check_wall_cross_chain(c.N); });
  add("psi-bethe", "gkmschubert", Transport, false, false, [](const C& c) { return check_psi_bethe(c.N); });
  add("psi-roundtrip", "gkmschubert", Transport, false, false,
      [](const C& c) { return check_psi_roundtrip(c.N, c.seed); });
  add("sym2", "gkmschubert", Symbolic, false, false, [](const C& c) { return check_sym2(c.N); });

  add("bncn", "convolution", Symbolic, false, false, [](const C& c) { return check_bn_cn(c.N); });
  add("proprel", "convolution", Transport, false, false, [](const C& c) { return check_proprel(c.N); });
  add("match", "convolution", Transport, true, false, [](const C& c) { return check_match(c.model, c.N); });
  add("d-reconstruction", "convolution", Transport, false, false,
      [](const C& c) { return check_d_reconstruction(c.N); });
  add("geom-sixteen", "convolution", Transport, true, false,
      [](const C& c) { return check_geom_sixteen(c.N, c.model == Model::VIC); });
  add("chern", "convolution", Transport, false, false, [](const C& c) { return check_chern(c.N); });
  add("explicit", "convolution", Transport, false, false,
      [](const C& c) { return check_explicit_formulas(c.N); });

  add("quantum-commute", "quantum", Transport, true, false,
      [](const C& c) { return check_quantum_commute(c.model, c.N); });
  add("quantum-specialize", "quantum", Transport, true, false,
      [](const C& c) { return check_quantum_specialize(c.model, c.N); });
  add("rimhook", "quantum", RimHook, false, false, [](const C& c) { return check_rimhook(c.N); });
  add("coha", "coha", Transport, false, false, [](const C& c) { return check_coha(c.N, 3); });
  add("current", "current", Transport, false, false, [](const C& c) { return check_current(c.N); });
  return s;
}

}  // namespace

const std::vector<Suite>& registry() {
  static const std::vector<Suite> r = build();
  return r;
}

const Suite* find_suite(const std::string& name) {
  for (const auto& s : registry())
    if (s.name == name) return &s;
  return nullptr;
}

std::vector<std::string> group_members(const std::string& group) {
  std::vector<std::string> r;
  for (const auto& s : registry())
    if (group == "all" || s.group == group) r.push_back(s.name);
  return r;
}

int default_cap(CapClass c) {
  switch (c) {
    case CapClass::Symbolic: return 5;
    case CapClass::Transport: return 4;
    case CapClass::RimHook: return 6;
    case CapClass::None: return kMaxSites;
  }
  return 5;
}

std::vector<Outcome> run_jobs(const std::vector<Job>& jobs, int threads) {
  std::vector<Outcome> out(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      const Job& j = jobs[i];
      const auto t0 = std::chrono::steady_clock::now();
      try {
        out[i].report = j.suite->run(j.ctx);
        out[i].report.suite = j.suite->name;
      } catch (const std::exception& e) {
        Report r(j.suite->name, j.suite->per_model ? to_string(j.ctx.model) : "", j.ctx.N);
        r.expect(false, "exception", "", "", e.what());
        out[i].report = r;
      }
      out[i].elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  const int n = std::max(1, std::min<int>(threads, int(jobs.size())));
  std::vector<std::thread> pool;
  for (int k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace ybs::cli
