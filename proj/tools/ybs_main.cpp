// ybs: run verification suites and export operators, Bethe vectors and
// Schubert tables.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "suites.hpp"
#include "ybs/convolution.hpp"
#include "ybs/gkmschubert.hpp"
#include "ybs/quantumcoha.hpp"
#include "ybs/ybops.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace ybs;

namespace {

constexpr int kExitPass = 0, kExitFail = 1, kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int N = 3;
  std::string model;
  std::vector<std::string> suites;
  std::string format = "text";
  std::string out;
  int jobs = 1;
  unsigned long long seed = 1;
  bool perturb = false;
  std::optional<int> max_n;
  // compute
  std::string what;
  std::string tag;
  std::string basis;
  std::string twist;
  std::vector<int> zeros;
  bool zeros_given = false;
  std::optional<int> weight;
  std::string sign = "plus";
  int j = 0;
  bool normalized = false;
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + o.out);
  f << text;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
  return r + "\"";
}

// ------------------------------------------------------------------ verify

json report_json(const cli::Outcome& o) {
  const Report& r = o.report;
  json j;
  j["suite"] = r.suite;
  j["model"] = r.model;
  j["N"] = r.N;
  j["status"] = r.passed() ? "pass" : "fail";
  j["elapsed_ms"] = std::round(o.elapsed_ms * 1000) / 1000;
  j["checks"] = r.checks;
  j["failures"] = r.failures;
  json ms = json::array();
  for (const auto& m : r.mismatches)
    ms.push_back({{"relation", m.relation}, {"row", m.row}, {"col", m.col}, {"lhs", m.lhs}, {"rhs", m.rhs}});
  j["mismatches"] = ms;
  j["notes"] = r.notes;
  return j;
}

std::string report_text(const cli::Outcome& o) {
  const Report& r = o.report;
  std::ostringstream os;
  os << (r.passed() ? "PASS " : "FAIL ") << std::left << std::setw(20) << r.suite << std::setw(10)
     << (r.model.empty() ? "-" : r.model) << "N=" << r.N << "  checks=" << r.checks << "  failures=" << r.failures
     << "  " << std::fixed << std::setprecision(1) << o.elapsed_ms << " ms\n";
  for (const auto& m : r.mismatches) {
    os << "  mismatch: " << m.relation;
    if (!m.row.empty()) os << "  row " << m.row;
    if (!m.col.empty()) os << "  col " << m.col;
    if (!m.lhs.empty() || !m.rhs.empty()) os << "\n    lhs: " << m.lhs << "\n    rhs: " << m.rhs;
    os << '\n';
  }
  if (r.failures > r.mismatches.size()) os << "  ... " << r.failures - r.mismatches.size() << " more\n";
  for (const auto& n : r.notes) os << "  note: " << n << '\n';
  return os.str();
}

std::string render_reports(const std::vector<cli::Outcome>& outs, const std::string& format) {
  if (format == "json") {
    json arr = json::array();
    for (const auto& o : outs) arr.push_back(report_json(o));
    return arr.dump(2) + "\n";
  }
  std::ostringstream os;
  if (format == "csv") {
    os << "suite,model,N,status,elapsed_ms,checks,failures\n";
    for (const auto& o : outs)
      os << o.report.suite << ',' << o.report.model << ',' << o.report.N << ','
         << (o.report.passed() ? "pass" : "fail") << ',' << std::fixed << std::setprecision(3) << o.elapsed_ms << ','
         << o.report.checks << ',' << o.report.failures << '\n';
    return os.str();
  }
  std::size_t failed = 0;
  for (const auto& o : outs) {
    os << report_text(o);
    failed += !o.report.passed();
  }
  os << outs.size() << " suite(s), " << failed << " failed\n";
  return os.str();
}

std::vector<cli::Job> plan(const Options& o, const std::vector<std::string>& names) {
  if (o.N < 1) throw UsageError("N must be at least 1");
  if (o.jobs < 1) throw UsageError("--jobs must be at least 1");
  std::vector<Model> models;
  if (o.model.empty())
    models = {Model::OSC, Model::VIC};
  else
    models = {parse_model(o.model)};
  std::vector<cli::Job> jobs;
  for (const auto& name : names) {
    const cli::Suite* s = cli::find_suite(name);
    if (!s) throw UsageError("unknown suite '" + name + "'");
    const int cap = o.max_n.value_or(cli::default_cap(s->cap));
    if (s->cap != cli::CapClass::None && o.N > cap)
      throw UsageError("N=" + std::to_string(o.N) + " exceeds the cap " + std::to_string(cap) + " of suite " + name);
    if (o.perturb && !s->perturbable) throw UsageError("suite " + name + " has no perturbation");
    cli::SuiteContext ctx{o.N, Model::OSC, o.seed, o.perturb};
    if (s->per_model) {
      for (Model m : models) {
        ctx.model = m;
        jobs.push_back({s, ctx});
      }
    } else {
      jobs.push_back({s, ctx});
    }
  }
  return jobs;
}

std::vector<std::string> expand(const std::vector<std::string>& sel) {
  std::vector<std::string> r;
  for (const auto& s : sel) {
    auto g = cli::group_members(s);
    if (!g.empty() && !cli::find_suite(s))
      r.insert(r.end(), g.begin(), g.end());
    else
      r.push_back(s);
  }
  return r;
}

int cmd_verify(const Options& o, const std::vector<std::string>& defaults) {
  std::vector<std::string> names = expand(o.suites.empty() ? defaults : o.suites);
  if (o.perturb && o.suites.empty()) {
    std::erase_if(names, [](const std::string& n) { return !cli::find_suite(n)->perturbable; });
  }
  if (names.empty()) throw UsageError("no suite selected");
  const auto jobs = plan(o, names);
  const auto outs = cli::run_jobs(jobs, o.jobs);
  bool ok = true;
  for (const auto& x : outs) ok &= x.report.passed();

  if (!o.out.empty() && fs::is_directory(o.out)) {
    for (std::size_t i = 0; i < outs.size(); ++i) {
      const auto& x = outs[i];
      std::string stem = jobs[i].suite->name;
      if (jobs[i].suite->per_model) stem += "-" + to_string(jobs[i].ctx.model);
      stem += "-N" + std::to_string(jobs[i].ctx.N);
      const std::string ext = o.format == "text" ? "txt" : o.format;
      std::ofstream f(fs::path(o.out) / (stem + "." + ext), std::ios::binary);
      f << render_reports({x}, o.format);
    }
    std::cout << render_reports(outs, "text");
  } else {
    emit(o, render_reports(outs, o.format));
  }
  return ok ? kExitPass : kExitFail;
}

// ----------------------------------------------------------------- compute

struct Entry {
  std::string row, col, value;
};

std::string render_entries(const std::vector<Entry>& es, const std::string& format, const json& header,
                           bool vector) {
  if (format == "json") {
    json j = header;
    json arr = json::array();
    for (const auto& e : es) {
      json x;
      if (vector) {
        x["word"] = e.row;
      } else {
        x["row"] = e.row;
        x["col"] = e.col;
      }
      x["entry"] = e.value;
      arr.push_back(x);
    }
    j["entries"] = arr;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  if (format == "csv") {
    os << (vector ? "word,entry\n" : "row,col,entry\n");
    for (const auto& e : es)
      os << e.row << ',' << (vector ? "" : e.col + ",") << csv_field(e.value) << '\n';
    return os.str();
  }
  for (const auto& [k, v] : header.items()) os << "# " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  for (const auto& e : es) os << (vector ? e.row : "(" + e.row + ", " + e.col + ")") << "  " << e.value << '\n';
  return os.str();
}

std::vector<Entry> entries_of(const SparseOperator& op, std::optional<int> source_weight) {
  std::vector<Entry> es;
  // column-major order: source word, then target word
  std::map<SpinWord, std::map<SpinWord, std::string>> cols;
  op.for_each([&](const SpinWord& r, const SpinWord& c, const RatFunc& v) {
    if (!source_weight || c.weight() == *source_weight) cols[c][r] = v.str();
  });
  for (const auto& [c, rows] : cols)
    for (const auto& [r, v] : rows) es.push_back({r.str(), c.str(), v});
  return es;
}

std::vector<Entry> entries_of(const TensorVector& v) {
  std::vector<Entry> es;
  for (const auto& [w, f] : v.coeffs()) es.push_back({w.str(), "", f.str()});
  return es;
}

Permutation twist_of(const Options& o, const Permutation& fallback) {
  return o.twist.empty() ? fallback : Permutation::parse(o.N, o.twist);
}

void check_size(const Options& o, int cap) {
  if (o.N < 1) throw UsageError("N must be at least 1");
  const int c = o.max_n.value_or(cap);
  if (o.N > c) throw UsageError("N=" + std::to_string(o.N) + " exceeds the cap " + std::to_string(c));
  if (o.weight && (*o.weight < 0 || *o.weight > o.N)) throw UsageError("--n out of range");
}

int compute_operator(const Options& o) {
  if (o.tag.empty()) throw UsageError("compute operator needs --tag");
  bool primed = false;
  Tag tag;
  try {
    tag = parse_tag(o.tag, &primed);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const std::string basis = o.basis.empty() ? "standard" : o.basis;
  check_size(o, basis == "standard" ? 5 : 4);
  if (basis != "schubert" && !o.twist.empty()) throw UsageError("--twist needs --basis schubert");
  SparseOperator op;
  if (basis == "standard")
    op = monodromy(primed ? Model::VIC : Model::OSC, o.N)[tag];
  else if (basis == "fixed")
    op = geom_operator(o.N, tag, primed);
  else
    op = to_schubert_basis(geom_operator(o.N, tag, primed), twist_of(o, Permutation::longest(o.N)));
  json h;
  h["operator"] = to_string(tag) + (primed ? "'" : "");
  h["N"] = o.N;
  h["basis"] = basis;
  if (basis == "schubert") h["twist"] = twist_of(o, Permutation::longest(o.N)).str();
  if (o.weight) h["n"] = *o.weight;
  emit(o, render_entries(entries_of(op, o.weight), o.format, h, false));
  return kExitPass;
}

int compute_bethe(const Options& o) {
  if (!o.tag.empty()) throw UsageError("--tag does not apply to bethe");
  const std::string basis = o.basis.empty() ? "standard" : o.basis;
  check_size(o, basis == "standard" ? 5 : 4);
  if (basis != "schubert" && !o.twist.empty()) throw UsageError("--twist needs --basis schubert");
  std::vector<BetheIndex> idx;
  if (o.zeros_given) {
    BetheIndex b{o.N, o.zeros};
    std::sort(b.removed.begin(), b.removed.end());
    for (std::size_t i = 0; i < b.removed.size(); ++i)
      if (b.removed[i] < 1 || b.removed[i] > o.N || (i && b.removed[i] == b.removed[i - 1]))
        throw UsageError("--zeros must be distinct positions in 1..N");
    idx.push_back(b);
  } else {
    for (const auto& b : BetheIndex::all(o.N))
      if (!o.weight || b.word().weight() == *o.weight) idx.push_back(b);
  }
  std::ostringstream all;
  json arr = json::array();
  for (const auto& b : idx) {
    TensorVector v = bethe_vector(b, o.normalized);
    if (basis != "standard") {
      TensorVector f = psi_operator(o.N).apply(v);
      v = basis == "fixed" ? f : schubert_basis_inverse(twist_of(o, Permutation::longest(o.N))).apply(f);
    }
    json h;
    std::string eta;
    for (int r : b.removed) eta += (eta.empty() ? "" : ",") + std::to_string(r);
    h["eta"] = "(" + eta + ")";
    h["word"] = b.word().str();
    h["N"] = o.N;
    h["basis"] = basis;
    h["normalized"] = o.normalized;
    if (o.format == "json")
      arr.push_back(json::parse(render_entries(entries_of(v), "json", h, true)));
    else if (o.format == "csv")
      all << (all.tellp() == 0 ? "" : "\n") << render_entries(entries_of(v), "csv", h, true);
    else
      all << render_entries(entries_of(v), "text", h, true);
  }
  emit(o, o.format == "json" ? (idx.size() == 1 ? arr[0].dump(2) : arr.dump(2)) + "\n" : all.str());
  return kExitPass;
}

int compute_schubert(const Options& o) {
  if (!o.tag.empty()) throw UsageError("--tag does not apply to schubert");
  if (!o.basis.empty() && o.basis != "fixed") throw UsageError("Schubert tables are given at fixed points");
  check_size(o, 5);
  const Permutation w = twist_of(o, Permutation::identity(o.N));
  std::vector<SpinWord> lambdas = o.weight ? words_of_weight(o.N, *o.weight) : all_words(o.N);
  std::ostringstream os;
  json j;
  j["N"] = o.N;
  j["twist"] = w.str();
  json classes = json::array();
  if (o.format == "csv") os << "lambda,mu,value\n";
  for (const auto& l : lambdas) {
    const GKMClass s = schubert_class(w, l);
    if (o.format == "text") os << "S^" << w.str() << "_" << l.str() << ": " << s.str() << '\n';
    json vals;
    for (const auto& mu : words_of_weight(o.N, l.weight())) {
      const std::string v = s.at(mu).str();
      if (o.format == "csv") os << l.str() << ',' << mu.str() << ',' << csv_field(v) << '\n';
      vals[mu.str()] = v;
    }
    classes.push_back({{"lambda", l.str()}, {"values", vals}});
  }
  j["classes"] = classes;
  emit(o, o.format == "json" ? j.dump(2) + "\n" : os.str());
  return kExitPass;
}

int compute_gamma(const Options& o) {
  if (!o.tag.empty()) throw UsageError("--tag does not apply to gamma");
  if (o.j < 0) throw UsageError("--j must be nonnegative");
  const std::string basis = o.basis.empty() ? "fixed" : o.basis;
  check_size(o, 4);
  if (basis != "schubert" && !o.twist.empty()) throw UsageError("--twist needs --basis schubert");
  const GammaSign s = o.sign == "plus" ? GammaSign::Plus : GammaSign::Minus;
  SparseOperator g = gamma_total(s, o.j, o.N);
  if (basis == "standard")
    g = to_standard_basis(g);
  else if (basis == "schubert")
    g = to_schubert_basis(g, twist_of(o, Permutation::longest(o.N)));
  json h;
  h["operator"] = std::string("gamma_") + std::to_string(o.j) + (s == GammaSign::Plus ? "^+" : "^-");
  h["N"] = o.N;
  h["basis"] = basis;
  if (o.weight) h["n"] = *o.weight;
  emit(o, render_entries(entries_of(g, o.weight), o.format, h, false));
  return kExitPass;
}

int cmd_compute(const Options& o) {
  if (o.what == "operator") return compute_operator(o);
  if (o.what == "bethe") return compute_bethe(o);
  if (o.what == "schubert") return compute_schubert(o);
  return compute_gamma(o);
}

// --------------------------------------------------------------- options

void add_common(CLI::App* c, Options& o) {
  c->add_option("--N", o.N, "number of sites")->check(CLI::PositiveNumber);
  c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  c->add_option("--out", o.out, "output file, or directory for one report per suite");
  c->add_option("--seed", o.seed, "seed for sampled twists, random vectors and perturbations");
  c->add_option("--max-N", o.max_n, "override the per-suite size cap")->check(CLI::PositiveNumber);
}

void add_verify(CLI::App* c, Options& o, bool with_suite) {
  add_common(c, o);
  c->add_option("--model", o.model, "osc or vic (default: both)")->check(CLI::IsMember({"osc", "vic"}));
  if (with_suite) c->add_option("--suite", o.suites, "suite or group names")->delimiter(',');
  c->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  c->add_flag("--perturb", o.perturb, "run the seeded negative control of each suite");
}

void add_compute(CLI::App* c, Options& o) {
  add_common(c, o);
  c->add_option("--tag", o.tag, "A..D, or A'..D' for the primed family");
  c->add_option("--basis", o.basis, "standard, fixed or schubert")
      ->check(CLI::IsMember({"standard", "fixed", "schubert"}));
  c->add_option("--twist", o.twist, "permutation: e, w0, s1s2 or one-line 2,1,3");
  c->add_option("--n", o.weight, "restrict to source weight n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Yang-Baxter algebras and Schubert calculus of Grassmannians"};
  app.require_subcommand(1);
  Options o;

  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_verify(verify, o, true);
  auto* list = app.add_subcommand("list", "list the suite registry");

  auto* compute = app.add_subcommand("compute", "export operators, Bethe vectors, Schubert tables, gamma");
  compute->add_option("what", o.what, "operator, bethe, schubert or gamma")
      ->required()
      ->check(CLI::IsMember({"operator", "bethe", "schubert", "gamma"}));
  add_compute(compute, o);
  auto* zeros = compute->add_option("--zeros", o.zeros, "Bethe index set, e.g. 1,3")->delimiter(',');
  compute->add_flag("--normalized", o.normalized, "normalized Bethe vectors");
  compute->add_option("--sign", o.sign, "gamma sign")->check(CLI::IsMember({"plus", "minus"}));
  compute->add_option("--j", o.j, "gamma degree");

  auto* schubert = app.add_subcommand("schubert", "twisted Schubert class tables");
  add_common(schubert, o);
  schubert->add_option("--twist", o.twist, "permutation: e, w0, s1s2 or one-line 2,1,3");
  schubert->add_option("--n", o.weight, "restrict to weight n");

  auto* quantum = app.add_subcommand("quantum", "quantum deformation T = A + qD and the rim-hook rule");
  add_verify(quantum, o, false);
  auto* coha = app.add_subcommand("coha", "COHA operators gamma_j");
  add_verify(coha, o, false);
  auto* current = app.add_subcommand("current", "gl2[t] current algebra action");
  add_verify(current, o, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  o.zeros_given = zeros->count() > 0;

  try {
    if (*verify) return cmd_verify(o, {"all"});
    if (*quantum) return cmd_verify(o, {"quantum"});
    if (*coha) return cmd_verify(o, {"coha"});
    if (*current) return cmd_verify(o, {"current"});
    if (*compute) return cmd_compute(o);
    if (*schubert) {
      o.what = "schubert";
      return cmd_compute(o);
    }
    if (*list) {
      for (const auto& s : cli::registry())
        std::cout << std::left << std::setw(20) << s.name << std::setw(14) << s.group << "cap "
                  << (s.cap == cli::CapClass::None ? std::string("-") : std::to_string(cli::default_cap(s.cap))) << (s.per_model ? "  per-model" : "")
                  << (s.perturbable ? "  perturbable" : "") << '\n';
      return kExitPass;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ybs::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitPass;
}
