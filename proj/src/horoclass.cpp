#include "horo/horoclass.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "horo/dynkin.hpp"

namespace horo {

ProjectiveSpaceCase projective_space_case(int n, int attached_count,
                                          bool two_colors_same_component) {
  if (attached_count <= n) return ProjectiveSpaceCase::i;
  if (n >= 2) return ProjectiveSpaceCase::ii;
  if (n == 1 && !two_colors_same_component) return ProjectiveSpaceCase::iii;
  return ProjectiveSpaceCase::none;
}

namespace {

void validate_pair(const HoroPair& p) {
  p.gamma.validate();
  if (p.alpha == p.beta || p.alpha < 1 || p.beta < 1 ||
      p.alpha > p.gamma.rank || p.beta > p.gamma.rank)
    throw std::invalid_argument("marked vertices must be distinct diagram vertices");
}

bool admits_position(const Diagram& comp, int q, SimpleType t,
                     const std::vector<int>& allowed_positions) {
  if (!t.valid()) return false;
  for (const auto& relabel : relabelings_as(comp, t))
    for (int pos : allowed_positions)
      if (relabel.at(q) == pos) return true;
  return false;
}

// After deleting p, the component of q must be type A with q at either end,
// or type C with q at the short first position.
bool half_special(const Diagram& full, int p, int q) {
  std::set<int> keep;
  for (int v : full.vertices)
    if (v != p) keep.insert(v);
  const Diagram sub = full_subdiagram(full, keep);
  for (const Diagram& comp : components(sub)) {
    if (!comp.has_vertex(q)) continue;
    const int k = static_cast<int>(comp.vertices.size());
    return admits_position(comp, q, {Family::A, k}, {1, k}) ||
           admits_position(comp, q, {Family::C, k}, {1});
  }
  return false;
}

// Literal match of an unordered pair against the eight family patterns,
// returning the pattern's own orientation.
std::optional<SpecialCase> literal_match(SimpleType t, int a, int b) {
  const int n = t.rank;
  auto is_pair = [&](int x, int y) {
    return (a == x && b == y) || (a == y && b == x);
  };
  auto made = [&](int label, int alpha, int beta) {
    return SpecialCase{HoroPair{t, alpha, beta}, label};
  };
  switch (t.family) {
    case Family::A:
      if (n >= 2 && is_pair(1, n)) return made(1, 1, n);
      if (n >= 3)
        for (int i = 1; i < n; ++i)
          if (is_pair(i, i + 1)) return made(2, i, i + 1);
      return std::nullopt;
    case Family::B:
      if (n >= 3 && is_pair(n - 1, n)) return made(3, n - 1, n);
      if (n == 3 && is_pair(1, 3)) return made(4, 1, 3);
      return std::nullopt;
    case Family::C:
      for (int i = 1; i < n; ++i)
        if (is_pair(i, i + 1)) return made(5, i + 1, i);
      return std::nullopt;
    case Family::D:
      if (n >= 4 && is_pair(n - 1, n)) return made(6, n - 1, n);
      return std::nullopt;
    case Family::F:
      if (is_pair(2, 3)) return made(7, 2, 3);
      return std::nullopt;
    case Family::G:
      if (is_pair(1, 2)) return made(8, 2, 1);
      return std::nullopt;
    case Family::E:
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<SpecialCase> match_with_automorphisms(SimpleType t, int a, int b) {
  if (auto hit = literal_match(t, a, b)) return hit;
  const Diagram d = bourbaki_diagram(t);
  for (const auto& sigma : relabelings_as(d, t))
    if (auto hit = literal_match(t, sigma.at(a), sigma.at(b))) return hit;
  return std::nullopt;
}

}  // namespace

bool is_special_pair(const HoroPair& p) {
  validate_pair(p);
  const Diagram d = bourbaki_diagram(p.gamma);
  return half_special(d, p.alpha, p.beta) && half_special(d, p.beta, p.alpha);
}

SpecialCase classify_special_pair(const HoroPair& p) {
  if (!is_special_pair(p))
    throw classification_gap_error("pair is not special: " + p.gamma.name());
  if (auto hit = match_with_automorphisms(p.gamma, p.alpha, p.beta)) return *hit;
  throw classification_gap_error(
      "special pair outside the eight families: " + p.gamma.name() + " (" +
      std::to_string(p.alpha) + "," + std::to_string(p.beta) + ")");
}

std::vector<SpecialCase> enumerate_special(int max_rank) {
  // One representative labeling per isomorphism class of simple type, so
  // coincident diagrams (B_2 = C_2, D_3 = A_3) are visited once.
  std::vector<SimpleType> types;
  for (int m = 2; m <= max_rank; ++m) types.push_back({Family::A, m});
  for (int m = 3; m <= max_rank; ++m) types.push_back({Family::B, m});
  for (int m = 2; m <= max_rank; ++m) types.push_back({Family::C, m});
  for (int m = 4; m <= max_rank; ++m) types.push_back({Family::D, m});
  for (int m = 6; m <= 8 && m <= max_rank; ++m) types.push_back({Family::E, m});
  if (max_rank >= 4) types.push_back({Family::F, 4});
  if (max_rank >= 2) types.push_back({Family::G, 2});

  std::vector<SpecialCase> out;
  for (const SimpleType& t : types) {
    std::set<std::pair<int, int>> seen;  // (alpha, beta) already emitted
    for (int a = 1; a <= t.rank; ++a) {
      for (int b = a + 1; b <= t.rank; ++b) {
        const HoroPair p{t, a, b};
        if (!is_special_pair(p)) continue;
        const auto hit = match_with_automorphisms(t, a, b);
        if (!hit)
          throw classification_gap_error(
              "special pair outside the eight families: " + t.name() + " (" +
              std::to_string(a) + "," + std::to_string(b) + ")");
        if (seen.insert({hit->pair.alpha, hit->pair.beta}).second)
          out.push_back(*hit);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const SpecialCase& x, const SpecialCase& y) {
    return std::tuple(static_cast<char>(x.pair.gamma.family), x.pair.gamma.rank,
                      x.case_label, x.pair.alpha, x.pair.beta) <
           std::tuple(static_cast<char>(y.pair.gamma.family), y.pair.gamma.rank,
                      y.case_label, y.pair.alpha, y.pair.beta);
  });
  return out;
}

namespace {

std::set<int> all_but(const RootSystem& rs, int v) {
  std::set<int> I = rs.all_vertices();
  I.erase(v);
  return I;
}

}  // namespace

long long aut_stability_pairing(const HoroPair& p) {
  validate_pair(p);
  const RootSystem rs(p.gamma);
  const WeylWord w = rs.longest_element_word(all_but(rs, p.beta));
  const CoweightVec image = rs.act_on_coweight(w, rs.simple_coroot(p.beta));
  return pairing(rs.fundamental(p.alpha) - rs.fundamental(p.beta), image);
}

std::optional<Weight> normal_sections_module(const HoroPair& p, OrbitSide side) {
  validate_pair(p);
  const RootSystem rs(p.gamma);
  const int v = side == OrbitSide::Y ? p.alpha : p.beta;
  const int u = side == OrbitSide::Y ? p.beta : p.alpha;
  const Weight lambda = rs.fundamental(u) - rs.fundamental(v);
  const Weight mu = rs.act_on_weight(rs.longest_element_word(all_but(rs, v)), lambda);
  if (!rs.is_antidominant(mu)) return std::nullopt;
  return rs.dominant_representative(-mu).first;
}

long long dim_x1(const HoroPair& p) {
  validate_pair(p);
  const RootSystem rs(p.gamma);
  std::set<int> I = rs.all_vertices();
  I.erase(p.alpha);
  I.erase(p.beta);
  return 1 + rs.dim_flag_variety(I);
}

CaseParams case_params(const SpecialCase& c) {
  CaseParams params;
  params.m = c.pair.gamma.rank;
  if (c.case_label == 2) params.i = c.pair.alpha;
  if (c.case_label == 5) params.i = c.pair.beta;
  return params;
}

long long dim_homogeneous_model(int case_label, int m, int i) {
  switch (case_label) {
    case 1:
      return 2LL * m;
    case 2:
      return static_cast<long long>(i + 1) * (m + 1 - i);
    case 5:
      return static_cast<long long>(i + 1) * (2 * m - i) -
             static_cast<long long>(i) * (i + 1) / 2;
    case 6: {
      const RootSystem rs(SimpleType{Family::B, m});
      return rs.dim_flag_variety(all_but(rs, m));
    }
    default:
      throw std::invalid_argument("no model variety for case " +
                                  std::to_string(case_label));
  }
}

std::string model_name(const SpecialCase& c) {
  const auto [m, i] = case_params(c);
  switch (c.case_label) {
    case 1:
      return "quadric Q^" + std::to_string(2 * m);
    case 2:
      return "grassmannian Gr(" + std::to_string(i + 1) + "," +
             std::to_string(m + 2) + ")";
    case 5:
      return "odd symplectic grassmannian Gr_w(" + std::to_string(i + 1) + "," +
             std::to_string(2 * m + 1) + ")";
    case 6:
      return "spinor variety Spin(" + std::to_string(2 * m + 1) + ")/P(omega_" +
             std::to_string(m) + ")";
    default:
      throw std::invalid_argument("no model variety for case " +
                                  std::to_string(c.case_label));
  }
}

namespace {

AutDescriptor make_aut_descriptor(const SpecialCase& c, const Weight& unipotent) {
  const int m = c.pair.gamma.rank;
  AutDescriptor d;
  switch (c.case_label) {
    case 3:
      d.reductive = "(SO(" + std::to_string(2 * m + 1) + ") x C*)";
      break;
    case 4:
      d.reductive = "(SO(7) x C*)";
      break;
    case 5:
      d.reductive = "((Sp(" + std::to_string(2 * m) + ") x C*)/{+-1})";
      break;
    case 7:
      d.reductive = "(F4 x C*)";
      break;
    case 8:
      d.reductive = "(G2 x C*)";
      break;
    default:
      throw std::invalid_argument("homogeneous case has no descriptor");
  }
  d.unipotent_weight = unipotent;
  return d;
}

std::string weight_module_name(const Weight& w) {
  // fundamental weights print as V(omega_k); anything else falls back to
  // coordinates
  int nonzero = 0, index = 0;
  for (size_t k = 0; k < w.coords.size(); ++k) {
    if (w.coords[k] != 0) {
      ++nonzero;
      index = static_cast<int>(k) + 1;
      if (w.coords[k] != 1) nonzero = 2;
    }
  }
  if (nonzero == 1) return "V(omega_" + std::to_string(index) + ")";
  return "V(" + to_string(w) + ")";
}

}  // namespace

std::string AutDescriptor::render() const {
  return reductive + " |x " + weight_module_name(unipotent_weight);
}

ClassificationVerdict homogeneity_verdict(const HoroPair& p) {
  const SpecialCase c = classify_special_pair(p);
  ClassificationVerdict v;
  v.entry = c;
  v.sections_Y = normal_sections_module(c.pair, OrbitSide::Y);
  v.sections_Z = normal_sections_module(c.pair, OrbitSide::Z);
  v.homogeneous = v.sections_Z.has_value();
  v.dim = dim_x1(c.pair);
  if (c.case_label == 1 || c.case_label == 2 || c.case_label == 5 ||
      c.case_label == 6)
    v.model = model_name(c);
  if (!v.homogeneous) {
    v.pairing_value = aut_stability_pairing(c.pair);
    if (!v.sections_Y)
      throw classification_gap_error(
          "non-homogeneous case without Y-side sections: " + p.gamma.name());
    v.aut = make_aut_descriptor(c, *v.sections_Y);
  }
  return v;
}

}  // namespace horo
