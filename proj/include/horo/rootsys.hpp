#pragma once
// Exact root-system arithmetic for the simple types A..G and products of
// them: Cartan data in Bourbaki numbering, positive roots, Weyl reflections
// on weights and coweights, parabolic longest elements, flag-variety
// dimensions. Everything is integer arithmetic; nothing here is numeric.

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace horo {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct invalid_type_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// One simple factor, vertices numbered 1..rank as in Bourbaki.
// Valid ranks: A >= 1, B >= 2, C >= 2, D >= 3, E in {6,7,8}, F = 4, G = 2.
// The low-rank coincidences B_2 = C_2 and D_3 = A_3 are allowed as distinct
// labels; canonicalization happens in the diagram module.
struct SimpleType {
  Family family;
  int rank;

  bool valid() const;
  void validate() const;  // throws invalid_type_error
  std::string name() const;

  friend bool operator==(const SimpleType&, const SimpleType&) = default;
  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;
};

// Coordinate vectors in the three bases that matter here. A Weight is given
// by its pairings with the simple coroots (fundamental-weight basis), a
// RootVec by simple-root coordinates, a CoweightVec by simple-coroot
// coordinates.
struct Weight {
  std::vector<long long> coords;
  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

struct RootVec {
  std::vector<long long> coords;
  friend bool operator==(const RootVec&, const RootVec&) = default;
  friend auto operator<=>(const RootVec&, const RootVec&) = default;
};

struct CoweightVec {
  std::vector<long long> coords;
  friend bool operator==(const CoweightVec&, const CoweightVec&) = default;
  friend auto operator<=>(const CoweightVec&, const CoweightVec&) = default;
};

Weight operator+(const Weight&, const Weight&);
Weight operator-(const Weight&, const Weight&);
Weight operator-(const Weight&);
CoweightVec operator+(const CoweightVec&, const CoweightVec&);
CoweightVec operator-(const CoweightVec&);

// A word in the simple reflections. Letters are applied first-to-last, so a
// word (l1, ..., lk) acts as the group element s_{lk} ... s_{l1}. Applying a
// word and then its reverse is the identity.
struct WeylWord {
  std::vector<int> letters;
  friend bool operator==(const WeylWord&, const WeylWord&) = default;
};

// Cartan matrix with a[i][j] = <alpha_i, coroot_j> (1-based in the API, so
// row i lists the fundamental-weight coordinates of alpha_i). For B_3 this
// gives a_23 = -2, a_32 = -1: the double edge points at the short root a_3.
std::vector<std::vector<long long>> cartan_matrix(SimpleType t);

// A root system for one simple type or an ordered product of simple types.
// Product vertices are numbered consecutively factor by factor, each factor
// keeping its Bourbaki order; the Cartan matrix is block diagonal.
class RootSystem {
 public:
  explicit RootSystem(SimpleType t);
  explicit RootSystem(std::vector<SimpleType> factors);

  int rank() const { return rank_; }
  const std::vector<SimpleType>& factors() const { return factors_; }
  // First vertex (1-based) of factor k.
  int factor_offset(int k) const;
  long long cartan(int i, int j) const;  // <alpha_i, coroot_j>
  std::set<int> all_vertices() const;

  Weight fundamental(int i) const;
  Weight zero_weight() const;
  RootVec simple_root(int i) const;
  CoweightVec simple_coroot(int i) const;
  Weight root_to_weight(const RootVec& r) const;
  long long root_coroot_pairing(const RootVec& r, int i) const;  // <r, coroot_i>

  // All positive roots, generated by closing the simple roots under root
  // strings: beta + alpha_i is a root iff the alpha_i-string through beta
  // descends strictly further than <beta, coroot_i>. Sorted by (height, lex).
  std::vector<RootVec> positive_roots() const;

  Weight reflect(int i, const Weight& w) const;
  CoweightVec reflect(int i, const CoweightVec& c) const;
  Weight act_on_weight(const WeylWord& word, Weight w) const;
  CoweightVec act_on_coweight(const WeylWord& word, CoweightVec c) const;

  // Reduced word for the longest element of the parabolic subgroup W_I,
  // found by walking rho_I into the I-antidominant chamber, smallest
  // applicable index first. Deterministic; length equals #R_I^+.
  WeylWord longest_element_word(const std::set<int>& I) const;

  bool is_dominant(const Weight& w) const;
  bool is_antidominant(const Weight& w) const;
  bool is_dominant_on(const Weight& w, const std::set<int>& I) const;
  bool is_antidominant_on(const Weight& w, const std::set<int>& I) const;

  // Unique dominant element of the Weyl orbit of w, with a word mapping w to
  // it (letters applied first-to-last).
  std::pair<Weight, WeylWord> dominant_representative(const Weight& w) const;

  // dim G/P_J = #(R^+ \ R_J^+) for the parabolic keeping the vertices of J.
  long long dim_flag_variety(const std::set<int>& J) const;

 private:
  std::vector<SimpleType> factors_;
  std::vector<int> offsets_;
  int rank_ = 0;
  std::vector<std::vector<long long>> cartan_;

  void check_vertex(int i) const;
};

long long pairing(const Weight& w, const CoweightVec& c);

std::string to_string(const Weight& w);

}  // namespace horo
