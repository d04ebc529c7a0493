#include "horo/horofan.hpp"

#include <algorithm>

namespace horo {

int picard_number(const ColoredFanRank1& f, int total_colors) {
  if (!f.rays.count(1) || !f.rays.count(-1))
    throw not_projective_error("picard_number: fan is not complete");
  for (const std::string& c : f.attached) {
    auto it = f.color_image.find(c);
    if (it == f.color_image.end() || it->second == 0 || !f.rays.count(it->second))
      throw std::invalid_argument("picard_number: attached color off the fan: " + c);
  }
  return (static_cast<int>(f.rays.size()) - 1) + total_colors -
         static_cast<int>(f.attached.size());
}

std::vector<ColoredFanRank1> enumerate_rank1_embeddings() {
  ColoredFanRank1 base;
  base.rays = {1, -1};
  base.colors = {"alpha", "beta"};
  base.color_image = {{"alpha", 1}, {"beta", -1}};
  std::vector<ColoredFanRank1> out;
  for (const auto& attach : std::vector<std::set<std::string>>{
           {}, {"alpha"}, {"beta"}, {"alpha", "beta"}}) {
    ColoredFanRank1 f = base;
    f.attached = attach;
    out.push_back(std::move(f));
  }
  return out;
}

bool is_smooth_picard1_config(int n,
                              const std::vector<std::vector<long long>>& color_images) {
  std::vector<std::vector<long long>> rays;
  for (int i = 0; i < n; ++i) {
    std::vector<long long> e(n, 0);
    e[i] = 1;
    rays.push_back(std::move(e));
  }
  rays.emplace_back(n, -1);
  for (const auto& im : color_images)
    if (std::find(rays.begin(), rays.end(), im) == rays.end()) return false;
  auto sorted = color_images;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

}  // namespace horo
