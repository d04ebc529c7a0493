#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "horo/dynkin.hpp"
#include "horo/rootsys.hpp"

namespace horo {

// Dimension of the Grassmannian Gr(k, n) of k-planes in C^n.
long long grassmannian_dim(int k, int n);

// Dimension of Gr_q(k, n): k-planes isotropic for a nondegenerate quadratic
// form on C^n, with 2k < n so the variety is irreducible and homogeneous
// under SO(n).
long long isotropic_grassmannian_dim(int k, int n);

// Dimension of one SO(2k)-component of the space of maximal isotropic
// k-planes in C^{2k} (a spinor variety).
long long halfspinor_grassmannian_dim(int k);

// Dimension of Gr_w(k, n): k-planes isotropic for a symplectic form on C^n
// (n even, k <= n/2).
long long symplectic_grassmannian_dim(int k, int n);

// One row of the fiber table: the possible actions of a reductive group G'
// with a dense-orbit pair (X', Q') arising as the generic fiber of the
// normalized blowup morphism.  local_weight_index / local_weight_multiple
// describe the Q'-weight -m * omega_k generating the local algebra;
// splits_at_rank4 marks the rows where G' = SO(4) degenerates to
// SL(2) x SL(2) and the weight spreads over both factors.
struct FiberCase {
  std::string row;
  std::string g_prime;
  std::string h_prime;
  std::string x_prime;
  std::string q_prime;
  int local_weight_index = 0;
  int local_weight_multiple = 1;
  bool splits_at_rank4 = false;
};

const std::vector<FiberCase>& fiber_case_table();

// Tests whether the ordered vertex pair (p_vertex, q_vertex) of the diagram
// of gamma survives the smoothness shape filter: the component of q_vertex
// in the diagram minus p_vertex must be one of
//   B_k (k >= 2) with q_vertex at position 1,
//   D_k (k >= 3) with q_vertex at position 1,
//   C_k (k >= 2) with q_vertex at position 2,
//   B_3 with q_vertex at position 3,
// and the component of p_vertex in the diagram minus q_vertex must be an
// A-component with p_vertex at either end or a C-component with p_vertex at
// position 1.
bool smooth_candidate_filter(const RootSystem& gamma, int p_vertex, int q_vertex);

// A candidate variety presented by its group, the parabolic P (omitting one
// vertex of one simple factor) and the parabolic Q (omitting one or two
// vertices).  For a product group the factors are numbered consecutively,
// so factor k occupies vertices factor_offset(k) .. factor_offset(k)+rank-1.
struct CandidateTriple {
  std::vector<SimpleType> factors;
  int p_vertex = 0;
  std::set<int> q_vertices;
  std::string label;

  RootSystem group() const;
  std::string group_name() const;
  std::string p_name() const;
  std::string q_name() const;
};

// Candidates with simple group surviving the shape filter (one class per
// isomorphism, diagram relabelings folded together), together with the
// candidates whose Q omits two vertices; sorted by label.
std::vector<CandidateTriple> enumerate_simple_triples(int max_rank);

// Candidates whose group is a product G_1 x SL(2): the omitted Q-vertex of
// the simple factor must be attached to the P-vertex alone, so that it forms
// an isolated A_1 component of the P-Levi pairing with the SL(2) factor.
std::vector<CandidateTriple> enumerate_product_triples(int max_rank);

// Levi subdiagram of Q inside the full diagram of the group of t.
Diagram q_levi_diagram(const CandidateTriple& t);

// Tests whether the restriction of w to the components of the Levi diagram
// is the highest weight of an admissible local model: exactly one component
// carries a nonzero restriction, that restriction must be the indicator of
// a single vertex, and the vertex must sit at an end of an A-component or
// at position 1 of a C-component.  Coordinates of w outside the Levi are
// unconstrained.
bool allowed_local_model(const Diagram& levi, const Weight& w);

enum class CaseOutcome { homogeneous, nonhomogeneous, nonsmooth };

// Resolution of one candidate: either it is actually homogeneous (with the
// model variety named and its dimension recorded), or it is one of the two
// smooth non-homogeneous varieties X1 and X2 (with the local weight that
// passes allowed_local_model), or it is not smooth (with the witness weight
// that fails allowed_local_model).
struct CaseVerdict {
  std::string label;
  CaseOutcome outcome = CaseOutcome::nonsmooth;
  std::string target;
  std::optional<long long> target_dim;
  std::optional<Weight> local_weight;
  std::optional<long long> fiber_dim;
  std::string fiber_row;
};

CaseVerdict case_verdict(const CandidateTriple& t);

// For a homogeneous-outcome candidate, checks that the dimension of G/P
// plus the dimension of the generic blowup fiber equals the dimension of
// the named model variety.
bool dim_consistency(const CandidateTriple& t);

// One row of the classification of the pairs (L, V) that can appear as the
// Levi datum of a smooth two-orbits variety with the smaller orbit fixed:
// either the pair is excluded because the variety it builds has a homogeneous
// blowup already accounted for, or it leads to one of the listed varieties.
struct LeviCaseRow {
  std::string tag;
  std::string group;
  std::string parabolic;
  std::string stabilizer;
  bool excluded = false;
  std::string resolution;
};

const std::vector<LeviCaseRow>& levi_case_table();

// Dimension identity behind row (ii): the two-orbits compactification of
// SO(2n+1) x C* described there has the dimension of the flag variety
// SO(2n+2)/(P(omega_1) cap P(omega_{n+1})).
bool levi_case_ii_dim_identity(int n);

// Dimension identity behind row (iv): Gr_q(2,7) has dimension 7, the
// dimension of SO(7)/P(omega_2).
bool levi_case_iv_dim_identity();

}  // namespace horo
