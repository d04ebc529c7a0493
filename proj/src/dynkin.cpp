#include "horo/dynkin.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace horo {

bool Diagram::has_vertex(int v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

std::vector<int> Diagram::neighbors(int v) const {
  std::vector<int> out;
  for (const Edge& e : edges) {
    if (e.a == v) out.push_back(e.b);
    if (e.b == v) out.push_back(e.a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

const Edge* Diagram::edge_between(int u, int v) const {
  if (u > v) std::swap(u, v);
  for (const Edge& e : edges)
    if (e.a == u && e.b == v) return &e;
  return nullptr;
}

namespace {

Edge make_edge(int u, int v, int mult, int short_side) {
  Edge e;
  e.a = std::min(u, v);
  e.b = std::max(u, v);
  e.mult = mult;
  e.arrow_to = mult >= 2 ? short_side : 0;
  return e;
}

void sort_diagram(Diagram& d) {
  std::sort(d.vertices.begin(), d.vertices.end());
  std::sort(d.edges.begin(), d.edges.end(),
            [](const Edge& x, const Edge& y) {
              return std::pair(x.a, x.b) < std::pair(y.a, y.b);
            });
}

}  // namespace

Diagram bourbaki_diagram(SimpleType t) {
  t.validate();
  const int n = t.rank;
  Diagram d;
  for (int i = 1; i <= n; ++i) d.vertices.push_back(i);
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) d.edges.push_back(make_edge(i, i + 1, 1, 0));
  };
  switch (t.family) {
    case Family::A:
      chain(1, n);
      break;
    case Family::B:
      chain(1, n - 1);
      d.edges.push_back(make_edge(n - 1, n, 2, n));
      break;
    case Family::C:
      chain(1, n - 1);
      d.edges.push_back(make_edge(n - 1, n, 2, n - 1));
      break;
    case Family::D:
      chain(1, n - 2);
      d.edges.push_back(make_edge(n - 2, n - 1, 1, 0));
      d.edges.push_back(make_edge(n - 2, n, 1, 0));
      break;
    case Family::E:
      d.edges.push_back(make_edge(1, 3, 1, 0));
      d.edges.push_back(make_edge(2, 4, 1, 0));
      chain(3, n);
      break;
    case Family::F:
      d.edges.push_back(make_edge(1, 2, 1, 0));
      d.edges.push_back(make_edge(2, 3, 2, 3));
      d.edges.push_back(make_edge(3, 4, 1, 0));
      break;
    case Family::G:
      d.edges.push_back(make_edge(1, 2, 3, 1));
      break;
  }
  sort_diagram(d);
  return d;
}

Diagram bourbaki_diagram(const RootSystem& rs) {
  Diagram d;
  for (size_t k = 0; k < rs.factors().size(); ++k) {
    const int off = rs.factor_offset(static_cast<int>(k)) - 1;
    Diagram part = bourbaki_diagram(rs.factors()[k]);
    for (int v : part.vertices) d.vertices.push_back(v + off);
    for (Edge e : part.edges) {
      e.a += off;
      e.b += off;
      if (e.arrow_to) e.arrow_to += off;
      d.edges.push_back(e);
    }
  }
  sort_diagram(d);
  return d;
}

Diagram full_subdiagram(const Diagram& d, const std::set<int>& keep) {
  for (int v : keep)
    if (!d.has_vertex(v))
      throw std::out_of_range("full_subdiagram: unknown vertex " + std::to_string(v));
  Diagram out;
  out.vertices.assign(keep.begin(), keep.end());
  for (const Edge& e : d.edges)
    if (keep.count(e.a) && keep.count(e.b)) out.edges.push_back(e);
  sort_diagram(out);
  return out;
}

std::vector<Diagram> components(const Diagram& d) {
  std::map<int, int> comp;
  int next = 0;
  for (int v : d.vertices) {
    if (comp.count(v)) continue;
    const int id = next++;
    std::vector<int> stack{v};
    comp[v] = id;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : d.neighbors(u)) {
        if (!comp.count(w)) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
  }
  std::vector<Diagram> out(next);
  for (int v : d.vertices) out[comp[v]].vertices.push_back(v);
  for (const Edge& e : d.edges) out[comp[e.a]].edges.push_back(e);
  for (Diagram& c : out) sort_diagram(c);
  return out;
}

std::vector<std::map<int, int>> relabelings_as(const Diagram& d, SimpleType t) {
  if (!t.valid() || static_cast<int>(d.vertices.size()) != t.rank) return {};
  const Diagram model = bourbaki_diagram(t);
  const int n = t.rank;

  // Backtracking assignment of Bourbaki positions 1..n to diagram vertices,
  // checked edge-by-edge (multiplicity and arrow orientation both ways).
  std::vector<std::map<int, int>> found;
  std::map<int, int> to_pos;   // diagram vertex -> position
  std::map<int, int> to_vert;  // position -> diagram vertex

  auto compatible = [&](int v, int pos) {
    for (const auto& [u, q] : to_pos) {
      const Edge* de = d.edge_between(u, v);
      const Edge* me = model.edge_between(q, pos);
      if ((de == nullptr) != (me == nullptr)) return false;
      if (de == nullptr) continue;
      if (de->mult != me->mult) return false;
      if (de->mult >= 2) {
        const bool d_short_is_v = de->arrow_to == v;
        const bool m_short_is_pos = me->arrow_to == pos;
        if (d_short_is_v != m_short_is_pos) return false;
      }
    }
    return true;
  };

  std::function<void(int)> extend = [&](int idx) {
    if (idx == n) {
      found.push_back(to_pos);
      return;
    }
    const int v = d.vertices[idx];
    for (int pos = 1; pos <= n; ++pos) {
      if (to_vert.count(pos) || !compatible(v, pos)) continue;
      to_pos[v] = pos;
      to_vert[pos] = v;
      extend(idx + 1);
      to_pos.erase(v);
      to_vert.erase(pos);
    }
  };
  extend(0);
  std::sort(found.begin(), found.end());
  return found;
}

ComponentType classify_component(const Diagram& d) {
  const int n = static_cast<int>(d.vertices.size());
  if (n == 0) throw invalid_type_error("classify_component: empty diagram");
  for (Family f : {Family::A, Family::B, Family::C, Family::D,
                   Family::E, Family::F, Family::G}) {
    const SimpleType t{f, n};
    if (!t.valid()) continue;
    auto maps = relabelings_as(d, t);
    if (!maps.empty()) return ComponentType{t, maps.front()};
  }
  throw invalid_type_error("classify_component: not a connected Dynkin diagram");
}

bool is_simple_end(const Diagram& d, int v) {
  if (!d.has_vertex(v)) throw std::out_of_range("unknown diagram vertex");
  if (d.vertices.size() == 1) return true;
  const auto nb = d.neighbors(v);
  if (nb.size() != 1) return false;
  return d.edge_between(v, nb.front())->mult == 1;
}

}  // namespace horo
