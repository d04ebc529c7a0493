#pragma once
// Colored-fan combinatorics for rank-1 horospherical embeddings: Picard
// number of a complete fan, the 4-embedding enumeration, and the basis
// criterion for smooth Picard-1 configurations at general rank.

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace horo {

struct not_projective_error : std::logic_error {
  using std::logic_error::logic_error;
};

// Fan on the rank-1 lattice Z. Rays are among {+1, -1}; each color carries
// its image in Z and may be attached to the cone its image lies on.
struct ColoredFanRank1 {
  std::set<int> rays;
  std::vector<std::string> colors;
  std::map<std::string, int> color_image;
  std::set<std::string> attached;
};

// (#rays - 1) + total_colors - #attached. Requires a complete fan (both
// rays), otherwise the embedding is not projective.
int picard_number(const ColoredFanRank1& f, int total_colors);

// The four complete embeddings of the rank-1 space with colors "alpha"
// (image +1) and "beta" (image -1): attach neither, one, the other, or both.
std::vector<ColoredFanRank1> enumerate_rank1_embeddings();

// Complete Picard-1 fan at rank n has rays e_1..e_n and e_{n+1} = -sum e_i.
// Smooth iff the color images are distinct points of that ray set.
bool is_smooth_picard1_config(int n,
                              const std::vector<std::vector<long long>>& color_images);

}  // namespace horo
