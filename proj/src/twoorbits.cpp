#include "horo/twoorbits.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "horo/horoclass.hpp"

namespace horo {

long long grassmannian_dim(int k, int n) {
  if (k < 0 || k > n) throw std::invalid_argument("grassmannian_dim: bad plane size");
  return static_cast<long long>(k) * (n - k);
}

long long isotropic_grassmannian_dim(int k, int n) {
  if (k < 1 || 2 * k >= n)
    throw std::invalid_argument("isotropic_grassmannian_dim: need 2k < n");
  return static_cast<long long>(k) * (n - k) - static_cast<long long>(k) * (k + 1) / 2;
}

long long halfspinor_grassmannian_dim(int k) {
  if (k < 1) throw std::invalid_argument("halfspinor_grassmannian_dim: bad plane size");
  return static_cast<long long>(k) * (k - 1) / 2;
}

long long symplectic_grassmannian_dim(int k, int n) {
  if (n % 2 != 0 || k < 1 || 2 * k > n)
    throw std::invalid_argument("symplectic_grassmannian_dim: need n even, 2k <= n");
  return static_cast<long long>(k) * (n - k) - static_cast<long long>(k) * (k - 1) / 2;
}

const std::vector<FiberCase>& fiber_case_table() {
  static const std::vector<FiberCase> table = {
      {"1a", "SO(n), n >= 4", "SO(n-1)", "Q^{n-1}", "P(omega_1)", 1, 1, true},
      {"1b", "SO(n)/C, n >= 4", "S(O(1) x O(n-1))/C", "P^{n-1}", "P(omega_1)", 1, 2, true},
      {"2", "Sp(2n)/C, n >= 2", "(Sp(2n-2) x Sp(2))/C", "Gr(2,2n)", "P(omega_2)", 2, 1, false},
      {"3a", "Spin(7)", "G2", "Q^7", "P(omega_3)", 3, 1, false},
      {"3b", "SO(7)", "G2", "P^7", "P(omega_3)", 3, 2, false},
  };
  return table;
}

namespace {

bool admits_position(const Diagram& comp, int v, SimpleType t,
                     std::initializer_list<int> positions) {
  if (static_cast<int>(comp.vertices.size()) != t.rank || !t.valid()) return false;
  for (const auto& m : relabelings_as(comp, t)) {
    int pos = m.at(v);
    for (int p : positions)
      if (pos == p) return true;
  }
  return false;
}

// Position of v in the canonical labeling of comp as t, ignoring the
// diagram automorphisms of t itself: a leg of a D_4 component is position
// 1 only when the induced numbering puts it there.
bool canonical_position(const Diagram& comp, int v, SimpleType t, int pos) {
  if (static_cast<int>(comp.vertices.size()) != t.rank || !t.valid()) return false;
  auto maps = relabelings_as(comp, t);
  return !maps.empty() && maps.front().at(v) == pos;
}

Diagram component_of(const Diagram& d, int removed, int v) {
  std::set<int> keep;
  for (int u : d.vertices)
    if (u != removed) keep.insert(u);
  Diagram sub = full_subdiagram(d, keep);
  for (const auto& c : components(sub))
    if (c.has_vertex(v)) return c;
  throw std::logic_error("component_of: vertex missing");
}

bool p_side_shape(const Diagram& comp, int v) {
  int m = static_cast<int>(comp.vertices.size());
  return admits_position(comp, v, {Family::A, m}, {1, m}) ||
         (m >= 2 && admits_position(comp, v, {Family::C, m}, {1}));
}

bool q_side_shape(const Diagram& comp, int v) {
  int k = static_cast<int>(comp.vertices.size());
  return (k >= 2 && canonical_position(comp, v, {Family::B, k}, 1)) ||
         (k >= 3 && canonical_position(comp, v, {Family::D, k}, 1)) ||
         (k >= 2 && canonical_position(comp, v, {Family::C, k}, 2)) ||
         (k == 3 && canonical_position(comp, v, {Family::B, 3}, 3));
}

}  // namespace

bool smooth_candidate_filter(const RootSystem& gamma, int p_vertex, int q_vertex) {
  Diagram d = bourbaki_diagram(gamma);
  if (p_vertex == q_vertex || !d.has_vertex(p_vertex) || !d.has_vertex(q_vertex))
    throw std::invalid_argument("smooth_candidate_filter: bad vertex pair");
  if (!q_side_shape(component_of(d, p_vertex, q_vertex), q_vertex)) return false;
  return p_side_shape(component_of(d, q_vertex, p_vertex), p_vertex);
}

RootSystem CandidateTriple::group() const { return RootSystem(factors); }

std::string CandidateTriple::group_name() const {
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += " x ";
    out += f.name();
  }
  return out;
}

std::string CandidateTriple::p_name() const {
  RootSystem g(factors);
  std::string out;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    int off = g.factor_offset(static_cast<int>(k));
    std::string part = factors[k].name();
    if (p_vertex >= off && p_vertex < off + factors[k].rank)
      part = "P(omega_" + std::to_string(p_vertex - off + 1) + ")";
    if (!out.empty()) out += " x ";
    out += part;
  }
  return out;
}

std::string CandidateTriple::q_name() const {
  RootSystem g(factors);
  std::string out;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    int off = g.factor_offset(static_cast<int>(k));
    std::string part;
    for (int v : q_vertices)
      if (v >= off && v < off + factors[k].rank) {
        if (!part.empty()) part += " & ";
        part += "P(omega_" + std::to_string(v - off + 1) + ")";
      }
    if (part.empty()) part = factors[k].name();
    if (!out.empty()) out += " x ";
    out += part;
  }
  return out;
}

namespace {

struct PairLabel {
  int p = 0;
  int q = 0;
  std::string label;
};

std::optional<PairLabel> literal_simple_label(const SimpleType& t, int i, int j) {
  int n = t.rank;
  switch (t.family) {
    case Family::A:
      if (n == 4 && i == 1 && j == 3) return PairLabel{i, j, "(a)"};
      return std::nullopt;
    case Family::B:
      if (n >= 3 && j == i + 1 && i >= 1 && i <= n - 2) return PairLabel{i, j, "(b)"};
      if (n == 4 && i == 4 && j == 2) return PairLabel{i, j, "(c)"};
      if (n == 4 && i == 1 && j == 4) return PairLabel{i, j, "(d)"};
      return std::nullopt;
    case Family::C:
      if (n >= 3 && i == 1 && j == 3) return PairLabel{i, j, "(f)"};
      return std::nullopt;
    case Family::D:
      if (n >= 4 && j == i + 1 && i >= 1 && i <= n - 3) return PairLabel{i, j, "(b)"};
      return std::nullopt;
    case Family::F:
      if (i == 1 && j == 3) return PairLabel{i, j, "(h)"};
      if (i == 4 && j == 1) return PairLabel{i, j, "(i)"};
      if (i == 4 && j == 3) return PairLabel{i, j, "(j)"};
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

std::optional<PairLabel> simple_label(const SimpleType& t, int i, int j) {
  if (auto r = literal_simple_label(t, i, j)) return r;
  Diagram d = bourbaki_diagram(t);
  for (const auto& sigma : relabelings_as(d, t))
    if (auto r = literal_simple_label(t, sigma.at(i), sigma.at(j))) return r;
  return std::nullopt;
}

std::vector<SimpleType> canonical_classes(int max_rank) {
  std::vector<SimpleType> classes;
  for (int m = 2; m <= max_rank; ++m) classes.push_back({Family::A, m});
  for (int m = 3; m <= max_rank; ++m) classes.push_back({Family::B, m});
  for (int m = 2; m <= max_rank; ++m) classes.push_back({Family::C, m});
  for (int m = 4; m <= max_rank; ++m) classes.push_back({Family::D, m});
  for (int m = 6; m <= std::min(max_rank, 8); ++m) classes.push_back({Family::E, m});
  if (max_rank >= 4) classes.push_back({Family::F, 4});
  if (max_rank >= 2) classes.push_back({Family::G, 2});
  return classes;
}

std::vector<int> sorted_vertices(const std::set<int>& s) {
  return std::vector<int>(s.begin(), s.end());
}

void sort_triples(std::vector<CandidateTriple>& v) {
  std::sort(v.begin(), v.end(), [](const CandidateTriple& x, const CandidateTriple& y) {
    return std::make_tuple(x.label, static_cast<char>(x.factors[0].family),
                           x.factors[0].rank, x.p_vertex, sorted_vertices(x.q_vertices)) <
           std::make_tuple(y.label, static_cast<char>(y.factors[0].family),
                           y.factors[0].rank, y.p_vertex, sorted_vertices(y.q_vertices));
  });
}

}  // namespace

std::vector<CandidateTriple> enumerate_simple_triples(int max_rank) {
  if (max_rank < 1)
    throw std::invalid_argument("enumerate_simple_triples: max_rank must be positive");
  std::vector<CandidateTriple> out;
  std::set<std::tuple<char, int, int, int>> seen;
  for (const auto& t : canonical_classes(max_rank)) {
    RootSystem g(t);
    for (int i = 1; i <= t.rank; ++i)
      for (int j = 1; j <= t.rank; ++j) {
        if (i == j || !smooth_candidate_filter(g, i, j)) continue;
        auto lab = simple_label(t, i, j);
        if (!lab)
          throw classification_gap_error("no case label for smooth candidate (" + t.name() +
                                         ", " + std::to_string(i) + ", " + std::to_string(j) +
                                         ")");
        if (!seen.insert({static_cast<char>(t.family), t.rank, lab->p, lab->q}).second)
          continue;
        out.push_back({{t}, lab->p, {lab->q}, lab->label});
      }
  }
  for (int n = 3; n <= max_rank; ++n)
    out.push_back({{SimpleType{Family::D, n}}, n - 2, {n - 1, n}, "(b)"});
  if (max_rank >= 3) {
    out.push_back({{SimpleType{Family::B, 3}}, 2, {1, 3}, "(e)"});
    out.push_back({{SimpleType{Family::C, 3}}, 2, {1, 3}, "(g)"});
  }
  sort_triples(out);
  return out;
}

namespace {

std::optional<std::string> literal_product_label(const SimpleType& t, int i, int j) {
  int n = t.rank;
  switch (t.family) {
    case Family::A:
      if (n >= 2 && i == 2 && j == 1) return "(a')";
      return std::nullopt;
    case Family::B:
      if (n >= 3 && i == n - 1 && j == n) return "(b')";
      return std::nullopt;
    case Family::C:
      if (n >= 2 && i == n - 1 && j == n) return "(c')";
      if (n >= 2 && i == 2 && j == 1) return "(d')";
      return std::nullopt;
    case Family::G:
      if (i == 1 && j == 2) return "(e')";
      if (i == 2 && j == 1) return "(f')";
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

std::optional<PairLabel> product_label(const SimpleType& t, int i, int j) {
  if (auto l = literal_product_label(t, i, j)) return PairLabel{i, j, *l};
  Diagram d = bourbaki_diagram(t);
  for (const auto& sigma : relabelings_as(d, t))
    if (auto l = literal_product_label(t, sigma.at(i), sigma.at(j)))
      return PairLabel{sigma.at(i), sigma.at(j), *l};
  return std::nullopt;
}

}  // namespace

std::vector<CandidateTriple> enumerate_product_triples(int max_rank) {
  if (max_rank < 1)
    throw std::invalid_argument("enumerate_product_triples: max_rank must be positive");
  std::vector<CandidateTriple> out;
  std::set<std::tuple<char, int, int, int>> seen;
  for (const auto& t : canonical_classes(max_rank)) {
    Diagram d = bourbaki_diagram(t);
    for (int i = 1; i <= t.rank; ++i)
      for (int j = 1; j <= t.rank; ++j) {
        if (i == j) continue;
        auto nb = d.neighbors(j);
        if (nb.size() != 1 || nb.front() != i) continue;
        if (!p_side_shape(component_of(d, j, i), i)) continue;
        auto lab = product_label(t, i, j);
        if (!lab)
          throw classification_gap_error("no case label for product candidate (" + t.name() +
                                         " x A1, " + std::to_string(i) + ", " +
                                         std::to_string(j) + ")");
        if (!seen.insert({static_cast<char>(t.family), t.rank, lab->p, lab->q}).second)
          continue;
        out.push_back({{t, SimpleType{Family::A, 1}},
                       lab->p,
                       {lab->q, t.rank + 1},
                       lab->label});
      }
  }
  sort_triples(out);
  return out;
}

Diagram q_levi_diagram(const CandidateTriple& t) {
  RootSystem g = t.group();
  std::set<int> keep;
  for (int v = 1; v <= g.rank(); ++v)
    if (t.q_vertices.count(v) == 0) keep.insert(v);
  return full_subdiagram(bourbaki_diagram(g), keep);
}

bool allowed_local_model(const Diagram& levi, const Weight& w) {
  const Diagram* live = nullptr;
  auto comps = components(levi);
  for (const auto& c : comps) {
    bool nonzero = false;
    for (int v : c.vertices) {
      if (v < 1 || static_cast<std::size_t>(v) > w.coords.size())
        throw std::out_of_range("allowed_local_model: weight does not cover the diagram");
      if (w.coords[v - 1] != 0) nonzero = true;
    }
    if (!nonzero) continue;
    if (live != nullptr) return false;
    live = &c;
  }
  if (live == nullptr) return false;
  int marked = 0;
  int vertex = 0;
  for (int v : live->vertices) {
    long long c = w.coords[v - 1];
    if (c == 0) continue;
    if (c != 1) return false;
    ++marked;
    vertex = v;
  }
  if (marked != 1) return false;
  return p_side_shape(*live, vertex);
}

namespace {

std::string plane_name(const char* kind, int k, int n) {
  return std::string(kind) + "(" + std::to_string(k) + "," + std::to_string(n) + ")";
}

}  // namespace

CaseVerdict case_verdict(const CandidateTriple& t) {
  const SimpleType& g0 = t.factors.front();
  int n = g0.rank;
  int i = t.p_vertex;
  CaseVerdict v;
  v.label = t.label;
  auto homogeneous = [&v](std::string target, long long dim, std::string row, long long fiber) {
    v.outcome = CaseOutcome::homogeneous;
    v.target = std::move(target);
    v.target_dim = dim;
    v.fiber_row = std::move(row);
    v.fiber_dim = fiber;
  };
  auto nonsmooth = [&v](Weight witness, std::string row) {
    v.outcome = CaseOutcome::nonsmooth;
    v.local_weight = std::move(witness);
    v.fiber_row = std::move(row);
  };
  const std::string& L = t.label;
  if (L == "(a)") {
    homogeneous("P(wedge^2 C^5)", 9, "1b", 5);
  } else if (L == "(b)") {
    if (g0.family == Family::B)
      homogeneous(plane_name("Gr_q", i + 1, 2 * n + 2),
                  isotropic_grassmannian_dim(i + 1, 2 * n + 2), "1a", 2LL * (n - i));
    else if (t.q_vertices.size() == 2)
      homogeneous(plane_name("Gr_q", n - 1, 2 * n + 1),
                  isotropic_grassmannian_dim(n - 1, 2 * n + 1), "1a", 3);
    else
      homogeneous(plane_name("Gr_q", i + 1, 2 * n + 1),
                  isotropic_grassmannian_dim(i + 1, 2 * n + 1), "1a", 2LL * (n - i) - 1);
  } else if (L == "(c)") {
    homogeneous("F4/P(omega_1)", 15, "1a", 5);
  } else if (L == "(d)") {
    homogeneous("Q^14 in P(spinor C^16)", 14, "3a", 7);
  } else if (L == "(e)") {
    nonsmooth(Weight{{-2, 2, -2}}, "1b");
  } else if (L == "(f)") {
    homogeneous(plane_name("Gr", 3, 2 * n), grassmannian_dim(3, 2 * n), "2", 4LL * n - 8);
  } else if (L == "(g)") {
    nonsmooth(Weight{{-2, 3, -2}}, "");
  } else if (L == "(h)") {
    v.outcome = CaseOutcome::nonhomogeneous;
    v.target = "X1";
    v.local_weight = Weight{{1, 0, -1, 0}};
    v.fiber_row = "2";
    v.fiber_dim = 8;
  } else if (L == "(i)") {
    homogeneous("E6/P(omega_2)", 21, "1a", 6);
  } else if (L == "(j)") {
    nonsmooth(Weight{{0, 0, -2, 3}}, "");
  } else if (L == "(a')") {
    homogeneous("P(C^" + std::to_string(n + 1) + " (x) C^2)", 2LL * n + 1, "1b", 3);
  } else if (L == "(b')") {
    homogeneous(plane_name("Gr_q+", n + 2, 2 * n + 4), halfspinor_grassmannian_dim(n + 2),
                "1a", 3);
  } else if (L == "(c')") {
    homogeneous(plane_name("Gr_w", n + 1, 2 * n + 2),
                symplectic_grassmannian_dim(n + 1, 2 * n + 2), "1a", 3);
  } else if (L == "(d')") {
    homogeneous("Q^" + std::to_string(4 * n - 2) + " in P(C^" + std::to_string(2 * n) +
                    " (x) C^2)",
                4LL * n - 2, "1b", 3);
  } else if (L == "(e')") {
    nonsmooth(Weight{{3, -2, -2}}, "");
  } else if (L == "(f')") {
    v.outcome = CaseOutcome::nonhomogeneous;
    v.target = "X2";
    v.local_weight = Weight{{-2, 1, -2}};
    v.fiber_row = "1b";
    v.fiber_dim = 3;
  } else {
    throw std::invalid_argument("case_verdict: unknown label " + L);
  }
  return v;
}

bool dim_consistency(const CandidateTriple& t) {
  CaseVerdict v = case_verdict(t);
  if (v.outcome != CaseOutcome::homogeneous)
    throw std::invalid_argument("dim_consistency: case is not homogeneous");
  RootSystem g = t.group();
  std::set<int> keep;
  for (int u = 1; u <= g.rank(); ++u)
    if (u != t.p_vertex) keep.insert(u);
  return g.dim_flag_variety(keep) + *v.fiber_dim == *v.target_dim;
}

const std::vector<LeviCaseRow>& levi_case_table() {
  static const std::vector<LeviCaseRow> table = {
      {"(i)", "PSL(m+1)", "P(omega_1)", "GL(m)", true, "blowup P^m x (P^m)*"},
      {"(ii)", "SO(2m+1)", "P(omega_m)",
       "stabilizer of an isotropic m-plane E and a non-isotropic vector orthogonal to E",
       false, "blowup SO(2m+2)/(P(omega_1) & P(omega_{m+1}))"},
      {"(iii)", "Sp(2m)/{+-1}", "P(omega_1)",
       "stabilizer of a line and a non-isotropic plane containing it", true,
       "blowup SL(2m)/(P(omega_1) & P(omega_2))"},
      {"(iv)", "G2", "P(omega_1)",
       "stabilizer of a line of the 14-dimensional module with matching torus weight", false,
       "Gr_q(2,7)"},
  };
  return table;
}

bool levi_case_ii_dim_identity(int n) {
  if (n < 2) throw std::invalid_argument("levi_case_ii_dim_identity: need n >= 2");
  RootSystem d(SimpleType{Family::D, n + 1});
  std::set<int> keep_d;
  for (int v = 2; v <= n; ++v) keep_d.insert(v);
  RootSystem b(SimpleType{Family::B, n});
  std::set<int> keep_b;
  for (int v = 1; v < n; ++v) keep_b.insert(v);
  return d.dim_flag_variety(keep_d) == b.dim_flag_variety(keep_b) + n;
}

bool levi_case_iv_dim_identity() {
  RootSystem b3(SimpleType{Family::B, 3});
  return isotropic_grassmannian_dim(2, 7) == b3.dim_flag_variety({1, 3});
}

}  // namespace horo
