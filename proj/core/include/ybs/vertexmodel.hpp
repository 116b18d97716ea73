#pragma once

// Lax and R-matrices of the osculating (R, L) and vicious (R', L') walker
// models, monodromy matrices, and Yang-Baxter checks.
//
// Index conventions. A 4x4 table T is read in the ordered basis
// v0v0, v0v1, v1v0, v1v1 with T[out][in], so T applied to e_in gives
// sum_out T[out][in] e_out. For a crossing the first label of a pair sits
// on the horizontal line (input left, output right) and the second on the
// vertical line (input top, output bottom). The monodromy
// M = L_{0N} ... L_{01} is the row lattice read left to right; its blocks
// are O_{ab} with a the right (output) and b the left (input) horizontal
// label: A = O_00, B = O_01, C = O_10, D = O_11.

#include <array>
#include <optional>
#include <string>

#include "ybs/report.hpp"
#include "ybs/spinspace.hpp"

namespace ybs {

enum class Model { OSC, VIC };
enum class Role { Lax, Rmat };
enum class Tag { A = 0, B = 1, C = 2, D = 3 };

std::string to_string(Model m);
std::string to_string(Tag t);
Model parse_model(std::string_view s);
// Accepts A..D and the primed forms A'..D'; primed is set when a quote follows.
Tag parse_tag(std::string_view s, bool* primed = nullptr);
// (output, input) horizontal labels of a block.
inline std::pair<int, int> tag_labels(Tag t) { return {int(t) >> 1, int(t) & 1}; }
inline Tag tag_of(int out, int in) { return Tag(2 * out + in); }

using Table = std::array<std::array<MultiPoly, 4>, 4>;

// Local variables of the weight tables: x, y, t.
const VarSetPtr& table_varset();

inline int pair_index(int first, int second) { return 2 * first + second; }

class VertexModel {
 public:
  static VertexModel osc();
  static VertexModel vic();
  static VertexModel of(Model m) { return m == Model::OSC ? osc() : vic(); }

  Model kind() const { return kind_; }
  const std::string& name() const { return name_; }
  bool perturbed() const { return perturbed_; }
  const Table& table(Role r) const { return r == Role::Lax ? lax_ : rmat_; }

  // Replace one weight (given over table_varset()).
  VertexModel with_weight(Role r, int out, int in, const MultiPoly& w) const;

  // Weight of the crossing with input pair `in` and output pair `out`.
  MultiPoly crossing_weight(Role r, std::pair<int, int> in, std::pair<int, int> out) const;

  // Tables with the local variables substituted; the images live in one
  // target varset.
  Table lax_at(const MultiPoly& x, const MultiPoly& t) const;
  Table rmat_at(const MultiPoly& x, const MultiPoly& y) const;

 private:
  Model kind_ = Model::OSC;
  std::string name_;
  bool perturbed_ = false;
  Table lax_, rmat_;
};

// Seeded negative control: the Lax weight of 11 -> 11 replaced by a constant
// drawn from 2..9.
VertexModel perturbed_model(Model m, unsigned long long seed);

// Weight-space-shape six-vertex parameters (w1..w6) of a table.
std::array<MultiPoly, 6> six_vertex_weights(const Table& t);
Table from_six_vertex(const std::array<MultiPoly, 6>& w);
// (w1..w6) -> (w2, w1, w4, w3, w6, w5) and (w3, w4, w1, w2, w6, w5).
Table transform_first(const Table& t);
Table transform_second(const Table& t);
// t -> -t in a table over table_varset(); likewise swap of x and y.
Table negate_t(const Table& t);
Table swap_xy(const Table& t);

struct BaxterDelta {
  enum class Status { Constant, NonConstant, Inapplicable };
  Status status1 = Status::Inapplicable, status2 = Status::Inapplicable;
  Rational delta1, delta2;  // meaningful when the status is Constant
};
// Delta_1 = (w1 w2 + w3 w4 - w5 w6) / (2 w1 w3), Delta_2 = w1 w2 / (w1 w3).
// Inapplicable when w1 w3 vanishes.
BaxterDelta baxter_delta(const std::array<MultiPoly, 6>& w);

// Row lattice: sum over internal horizontal labels of the products of
// crossing weights, column b evaluated at t_b. Entry (out, in) of block tag.
MultiPoly row_lattice_entry(const VertexModel& m, Tag tag, const SpinWord& in, const SpinWord& out,
                            const VarSetPtr& vs);

// Blocks with entries in Q[x, t1..tN] over VarSet::standard(N).
struct Monodromy {
  int N = 0;
  std::array<SparseOperator, 4> block;
  const SparseOperator& operator[](Tag t) const { return block[std::size_t(t)]; }
};

Monodromy monodromy(const VertexModel& m, int N);
Monodromy monodromy_by_lattice(const VertexModel& m, int N);
// Cached for the two unperturbed models.
const Monodromy& monodromy(Model m, int N);
// O(x) = sum O^(i) x^i; cached for the unperturbed models.
const OperatorPoly& block_poly(Model m, int N, Tag tag);
OperatorPoly block_poly(const VertexModel& m, int N, Tag tag);

// Both sides of L23(x2,t) L13(x1,t) R12(x1,x2) = R12 L13 L23, 64 entries.
Report check_rll(const VertexModel& m);
// M2(x2) M1(x1) R12 = R12 M1(x1) M2(x2) on V (x) V (x) V_N.
Report check_rmm(const VertexModel& m, int N);
// The sixteen block relations read off R M1 M2 = M2 M1 R, compared
// coefficient-wise in x1, x2.
Report check_sixteen(const VertexModel& m, int N);
// Same, for any four blocks A, B, C, D (indexed by Tag) against R(x1, x2)
// given over VarSet::standard(N).
Report check_sixteen_blocks(const Table& R, const std::array<OperatorPoly, 4>& O, int N, Report rep);
// The sixteen relations in their usual written form for (R, L), repeats included.
Report check_sixteen_listed(const VertexModel& m, int N);
Report check_monodromy_lattice(const VertexModel& m, int N);
// Second-type transformation of (R', L') with t -> -t against (R, L).
Report check_transformation();

}  // namespace ybs
