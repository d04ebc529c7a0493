#pragma once
// Rank-1 horospherical classification pipeline: the special-pair filter and
// its exhaustive enumeration with case labels, the stability pairing, the
// Borel-Weil section modules of the two closed-orbit normal bundles, the
// homogeneity verdict with automorphism descriptors, and dimension identities
// against the named model varieties.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "horo/rootsys.hpp"

namespace horo {

struct classification_gap_error : std::logic_error {
  using std::logic_error::logic_error;
};

// A pair of distinct marked vertices on one connected diagram.
struct HoroPair {
  SimpleType gamma;
  int alpha = 0;
  int beta = 0;
  friend bool operator==(const HoroPair&, const HoroPair&) = default;
};

struct SpecialCase {
  HoroPair pair;
  int case_label = 0;  // 1..8
  friend bool operator==(const SpecialCase&, const SpecialCase&) = default;
};

enum class OrbitSide { Y, Z };  // Y = closed orbit G/P(omega_alpha)

enum class ProjectiveSpaceCase { none, i, ii, iii };

// Which projective-space criterion a complete Picard-1 embedding meets:
// (i) few enough attached colors, (ii) rank at least 2, (iii) rank 1 with
// the two colors in different diagram components.
ProjectiveSpaceCase projective_space_case(int n, int attached_count,
                                          bool two_colors_same_component);

// Both marked subdiagram checks: the component of each marked vertex in the
// diagram with the other one removed must be type A with the vertex at
// either end, or type C with the vertex at the short first position.
bool is_special_pair(const HoroPair& p);

// All special pairs over simple types of rank <= max_rank, one record per
// family instantiation (coincident labelings and diagram-automorphism copies
// fold onto the listed orientation). A special pair matching no family is a
// classification gap and throws.
std::vector<SpecialCase> enumerate_special(int max_rank);

// Label a single special pair the same way; throws classification_gap_error
// if p is not special or matches no family.
SpecialCase classify_special_pair(const HoroPair& p);

// <omega_alpha - omega_beta, w(beta-coroot)> with w the longest element of
// the Weyl subgroup generated by S minus beta.
long long aut_stability_pairing(const HoroPair& p);

// Sections of the normal bundle of the chosen closed orbit: with v the
// side's vertex and u the other, take mu = w0_{S\{v}}(omega_u - omega_v);
// nonzero sections exist iff mu is antidominant, and the module is reported
// by the dominant representative of -mu.
std::optional<Weight> normal_sections_module(const HoroPair& p, OrbitSide side);

struct AutDescriptor {
  std::string reductive;    // e.g. "(SO(9) x C*)"
  Weight unipotent_weight;  // the V(omega) factor, from the Y-side sections
  std::string render() const;
};

struct ClassificationVerdict {
  SpecialCase entry;
  bool special = true;
  bool homogeneous = false;
  std::optional<long long> pairing_value;  // non-homogeneous cases only
  std::optional<Weight> sections_Y;
  std::optional<Weight> sections_Z;
  std::optional<std::string> model;  // named model variety, cases 1,2,5,6
  std::optional<AutDescriptor> aut;  // non-homogeneous cases only
  long long dim = 0;
};

ClassificationVerdict homogeneity_verdict(const HoroPair& p);

// 1 + #(positive roots not supported on S\{alpha, beta}).
long long dim_x1(const HoroPair& p);

// Family parameters of a labeled case: rank m, plus the index i for the
// grassmannian families (case 2: pair (alpha_i, alpha_{i+1}); case 5:
// pair (alpha_{i+1}, alpha_i)).
struct CaseParams {
  int m = 0;
  int i = 0;
};
CaseParams case_params(const SpecialCase& c);

// Closed-form dimension of the named model: case 1 quadric Q^{2m}; case 2
// Gr(i+1, m+2); case 5 odd symplectic Gr_w(i+1, 2m+1); case 6 the spinor
// variety, counted through the flag-variety formula.
long long dim_homogeneous_model(int case_label, int m, int i = 0);

std::string model_name(const SpecialCase& c);

}  // namespace horo
