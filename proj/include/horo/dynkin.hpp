#pragma once
// Dynkin diagram combinatorics: induced subdiagrams, connected components,
// recognition of component types with Bourbaki relabelings. Edges carry
// multiplicity and, for multiplicity >= 2, the arrow (stored as the vertex
// the arrow points at, i.e. the short-root side).

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "horo/rootsys.hpp"

namespace horo {

struct Edge {
  int a = 0, b = 0;    // endpoints, a < b
  int mult = 1;        // 1, 2 or 3
  int arrow_to = 0;    // short-side vertex for mult >= 2, else 0
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Diagram {
  std::vector<int> vertices;  // sorted, unique
  std::vector<Edge> edges;    // sorted by (a, b)

  bool has_vertex(int v) const;
  std::vector<int> neighbors(int v) const;
  const Edge* edge_between(int u, int v) const;
};

// The diagram of a simple type on vertices 1..rank, or of a product on the
// product's global vertex numbering.
Diagram bourbaki_diagram(SimpleType t);
Diagram bourbaki_diagram(const RootSystem& rs);

// Induced subdiagram on `keep`; throws std::out_of_range on unknown ids.
Diagram full_subdiagram(const Diagram& d, const std::set<int>& keep);

// Connected components, ordered by smallest vertex id.
std::vector<Diagram> components(const Diagram& d);

// All isomorphisms from the Bourbaki diagram of t onto d, as maps
// (diagram vertex -> Bourbaki position). Empty when d is not of type t.
// Low-rank coincidences fall out structurally: a 2-vertex double edge
// admits both a B_2 and a C_2 relabeling, a 3-vertex path both A_3 and D_3.
std::vector<std::map<int, int>> relabelings_as(const Diagram& d, SimpleType t);

struct ComponentType {
  SimpleType type;
  std::map<int, int> relabel;  // diagram vertex -> Bourbaki position
};

// Canonical type of a connected diagram: families are tried in the order
// A, B, C, D, E, F, G at the component's vertex count, so the coincidences
// canonicalize as A_3 (not D_3) and B_2 (not C_2). Throws invalid_type_error
// when the diagram is not a valid connected Dynkin diagram.
ComponentType classify_component(const Diagram& d);

// True iff v is the only vertex of d, or has exactly one neighbor and the
// incident edge has multiplicity 1.
bool is_simple_end(const Diagram& d, int v);

}  // namespace horo
