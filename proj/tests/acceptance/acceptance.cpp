// Acceptance suite: one line per criterion with its wall time and budget.
// Exit status 0 iff every criterion passes within its budget.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ybs/convolution.hpp"
#include "ybs/gkmschubert.hpp"
#include "ybs/quantumcoha.hpp"
#include "ybs/ybops.hpp"

using namespace ybs;

namespace {

struct Tally {
  std::size_t checks = 0, failed = 0;
  std::vector<std::string> first;

  void add(const Report& r) {
    checks += r.checks ? r.checks : 1;
    if (!r.passed()) {
      ++failed;
      if (first.size() < 3) first.push_back(r.summary());
    }
  }
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failed;
      if (first.size() < 3) first.push_back(what);
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double budget_s;
  std::function<void(Tally&)> run;
};

MultiPoly P(int N, const char* s) { return MultiPoly::parse(VarSet::standard(N), s); }

// b((i1)) = sum_i prod_{j<i} (t_j - t_{i1}) v_{lambda(i)}, lambda(i) = 1..101..1
TensorVector single_index_example(int N, int i1) {
  const auto vs = VarSet::standard(N);
  const SpinWord ones(N, (std::uint32_t(1) << N) - 1);
  TensorVector v(N);
  for (int i = 1; i <= N; ++i) {
    MultiPoly c(vs, 1L);
    for (int j = 1; j < i; ++j) c *= MultiPoly::t(vs, j) - MultiPoly::t(vs, i1);
    v.add(ones.with(i, 0), RatFunc(c));
  }
  return v;
}

struct Exec {
  int code = -1;
  std::string out;
};

Exec run_cli(const std::string& args) {
  Exec e;
  const std::string cmd = std::string(YBS_CLI) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return e;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, p)) e.out.append(buf, n);
  const int st = pclose(p);
  e.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return e;
}

std::vector<Criterion> criteria() {
  const std::vector<Model> models{Model::OSC, Model::VIC};
  return {
      {1, "YBE: rll, both models", 1,
       [=](Tally& t) {
         for (Model m : models) t.add(check_rll(VertexModel::of(m)));
       }},
      {2, "sixteen relations, both models, N = 2..4", 60,
       [=](Tally& t) {
         for (Model m : models)
           for (int N = 2; N <= 4; ++N) t.add(check_sixteen(VertexModel::of(m), N));
       }},
      {3, "monodromy: lattice = composition, both models, N <= 5", 120,
       [=](Tally& t) {
         for (Model m : models)
           for (int N = 1; N <= 5; ++N) t.add(check_monodromy_lattice(VertexModel::of(m), N));
       }},
      {4, "Bethe: eigenvectors N <= 5, basis N <= 4, hvector, single-index expansion", 60,
       [](Tally& t) {
         for (int N = 1; N <= 5; ++N) t.add(check_bethe_eigen(N));
         for (int N = 1; N <= 4; ++N) t.add(check_bethe_basis(N));
         for (int N = 1; N <= 5; ++N)
           for (int n = 0; n <= N; ++n) {
             const SpinWord z = SpinWord::zeta(N, n);
             t.expect(bethe_vector(z, false) == TensorVector::basis(z, VarSet::standard(N)),
                      "b(" + z.str() + ") = v_" + z.str());
           }
         for (int N = 1; N <= 5; ++N)
           for (int i1 = 1; i1 <= N; ++i1) {
             const SpinWord ones(N, (std::uint32_t(1) << N) - 1);
             t.expect(bethe_vector(ones.with(i1, 0), false) == single_index_example(N, i1),
                      "b((" + std::to_string(i1) + ")) at N=" + std::to_string(N));
           }
         const int N = 4;
         t.expect(bethe_vector(SpinWord::parse("0111"), false) ==
                      TensorVector::basis(SpinWord::parse("0111"), VarSet::standard(N)),
                  "b(0,1,...,1) = v_(0,1,...,1)");
       }},
      {5, "S_N: Coxeter relations, commute N <= 4, bethe_permute N <= 5", 60,
       [=](Tally& t) {
         for (Model m : models)
           for (int N = 2; N <= 4; ++N) {
             t.add(check_coxeter(m, N, 20260101ULL + unsigned(N)));
             t.add(check_commute(VertexModel::of(m), N));
           }
         for (int N = 2; N <= 5; ++N) t.add(check_bethe_permute(N));
       }},
      {6, "Schubert: GKM + Stab1-3 N <= 5, P1 table, uniqueness N <= 3", 180,
       [](Tally& t) {
         for (int N = 1; N <= 5; ++N) t.add(check_schubert(N, schubert_twists(N, 1)));
         for (int N = 1; N <= 3; ++N) t.add(check_uniqueness(N));
         const Permutation e = Permutation::identity(2), s1 = Permutation::simple(2, 1);
         const SpinWord w10 = SpinWord::parse("10"), w01 = SpinWord::parse("01");
         struct Row {
           Permutation w;
           SpinWord l;
           const char* at10;
           const char* at01;
         };
         for (const Row& r : {Row{e, w01, "1", "1"}, Row{e, w10, "t1-t2", "0"}, Row{s1, w10, "1", "1"},
                              Row{s1, w01, "0", "t2-t1"}}) {
           const GKMClass c = schubert_class(r.w, r.l);
           t.expect(c.at(w10) == P(2, r.at10) && c.at(w01) == P(2, r.at01),
                    "P1 table S^" + r.w.str() + "_" + r.l.str());
         }
       }},
      {7, "wall-crossing: all (w,i,lambda) N <= 3, chain e -> w0 at N = 4", 120,
       [](Tally& t) {
         for (int N = 2; N <= 3; ++N) t.add(check_wall_cross_all(N));
         t.add(check_wall_cross_chain(4));
       }},
      {8, "geometry = algebra: match 8 tags, Psi(b) = 1, proprel, N <= 4", 300,
       [=](Tally& t) {
         for (int N = 1; N <= 4; ++N) {
           for (Model m : models) t.add(check_match(m, N));
           t.add(check_psi_bethe(N));
           t.add(check_proprel(N));
         }
       }},
      {9, "quantum: T commute (with T') N <= 4, rimhook N <= 6, q = 0", 120,
       [=](Tally& t) {
         for (Model m : models)
           for (int N = 1; N <= 4; ++N) {
             t.add(check_quantum_commute(m, N, true));
             t.add(check_quantum_specialize(m, N));
           }
         for (int N = 1; N <= 6; ++N) t.add(check_rimhook(N));
       }},
      {10, "COHA (j <= 3) and gl2[t] current action, N <= 4", 120,
       [](Tally& t) {
         for (int N = 1; N <= 4; ++N) {
           t.add(check_coha(N, 3));
           t.add(check_current(N));
         }
       }},
      {11, "negative controls: seeded perturbations report mismatches", 30,
       [=](Tally& t) {
         for (unsigned long long seed : {1ULL, 2ULL, 3ULL})
           for (Model m : models) {
             const VertexModel p = perturbed_model(m, seed);
             for (const Report& r : {check_rll(p), check_sixteen(p, 3), check_rmm(p, 3)})
               t.expect(!r.passed() && !r.mismatches.empty(), "perturbed " + r.suite + " " + to_string(m) +
                                                                  " seed " + std::to_string(seed) + " passed");
           }
         for (Model m : models) {
           const Report r = check_commute(VertexModel::of(m), 3, SymVariant::NaiveFlip);
           t.expect(!r.passed() && !r.mismatches.empty(), "naive flip commutes for " + to_string(m));
         }
         for (const char* suite : {"sixteen", "rll", "rmm", "sixteen-listed", "commute"}) {
           const Exec e = run_cli(std::string("verify --suite ") + suite + " --N 3 --perturb --seed 11");
           t.expect(e.code == 1 && e.out.find("mismatch:") != std::string::npos,
                    std::string("ybs verify --suite ") + suite + " --perturb exit " + std::to_string(e.code));
         }
       }},
  };
}

}  // namespace

int main() {
  std::cout << std::unitbuf;
  int failed = 0;
  double total = 0;
  for (const auto& c : criteria()) {
    Tally t;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(t);
    } catch (const std::exception& e) {
      t.expect(false, std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    total += s;
    const bool in_time = s <= c.budget_s;
    const bool ok = t.failed == 0 && in_time;
    failed += !ok;
    std::ostringstream line;
    line << (ok ? "[PASS] " : "[FAIL] ") << std::setw(2) << c.id << "  " << std::left << std::setw(66) << c.title
         << std::right << std::fixed << std::setprecision(2) << std::setw(8) << s << " s (budget " << std::setprecision(0)
         << c.budget_s << " s)  " << t.checks << " checks";
    if (!in_time) line << "  over budget";
    std::cout << line.str() << '\n';
    for (const auto& f : t.first) std::cout << "       " << f << '\n';
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << "(" << failed << " of 11 failed, " << std::fixed
            << std::setprecision(2) << total << " s)\n";
  return failed ? 1 : 0;
}
