#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "horo/dynkin.hpp"
#include "horo/rootsys.hpp"

using namespace horo;

namespace {

std::vector<SimpleType> all_simple_types(int max_rank) {
  std::vector<SimpleType> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back({Family::A, n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({Family::B, n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({Family::C, n});
  for (int n = 3; n <= max_rank; ++n) out.push_back({Family::D, n});
  for (int n = 6; n <= std::min(8, max_rank); ++n) out.push_back({Family::E, n});
  if (max_rank >= 4) out.push_back({Family::F, 4});
  if (max_rank >= 2) out.push_back({Family::G, 2});
  return out;
}

// Checks that m transports every edge of d onto an edge of the model with
// the same multiplicity and arrow, and conversely.
bool is_isomorphism(const Diagram& d, const std::map<int, int>& m, SimpleType t) {
  const Diagram model = bourbaki_diagram(t);
  if (d.vertices.size() != model.vertices.size()) return false;
  if (d.edges.size() != model.edges.size()) return false;
  std::set<int> hit;
  for (int v : d.vertices) {
    if (!m.count(v)) return false;
    hit.insert(m.at(v));
  }
  if (static_cast<int>(hit.size()) != t.rank) return false;
  for (const Edge& e : d.edges) {
    const Edge* me = model.edge_between(m.at(e.a), m.at(e.b));
    if (!me || me->mult != e.mult) return false;
    if (e.mult >= 2 && m.at(e.arrow_to) != me->arrow_to) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("diagram shapes in Bourbaki numbering") {
  for (int n = 1; n <= 8; ++n) {
    const Diagram a = bourbaki_diagram({Family::A, n});
    CHECK(static_cast<int>(a.vertices.size()) == n);
    CHECK(static_cast<int>(a.edges.size()) == n - 1);
    for (const Edge& e : a.edges) {
      CHECK(e.mult == 1);
      CHECK(e.b == e.a + 1);
    }
  }

  const Diagram b4 = bourbaki_diagram({Family::B, 4});
  const Edge* b_end = b4.edge_between(3, 4);
  REQUIRE(b_end != nullptr);
  CHECK(b_end->mult == 2);
  CHECK(b_end->arrow_to == 4);

  const Diagram c4 = bourbaki_diagram({Family::C, 4});
  const Edge* c_end = c4.edge_between(3, 4);
  REQUIRE(c_end != nullptr);
  CHECK(c_end->mult == 2);
  CHECK(c_end->arrow_to == 3);

  const Diagram d5 = bourbaki_diagram({Family::D, 5});
  CHECK(d5.edge_between(3, 4) != nullptr);
  CHECK(d5.edge_between(3, 5) != nullptr);
  CHECK(d5.edge_between(4, 5) == nullptr);
  CHECK(d5.neighbors(3) == std::vector<int>{2, 4, 5});

  const Diagram f4 = bourbaki_diagram({Family::F, 4});
  const Edge* f_mid = f4.edge_between(2, 3);
  REQUIRE(f_mid != nullptr);
  CHECK(f_mid->mult == 2);
  CHECK(f_mid->arrow_to == 3);
  CHECK(f4.edge_between(1, 2)->mult == 1);
  CHECK(f4.edge_between(3, 4)->mult == 1);

  // In Bourbaki G_2 the short root is alpha_1.
  const Diagram g2 = bourbaki_diagram({Family::G, 2});
  REQUIRE(g2.edges.size() == 1);
  CHECK(g2.edges[0].mult == 3);
  CHECK(g2.edges[0].arrow_to == 1);

  const Diagram e6 = bourbaki_diagram({Family::E, 6});
  CHECK(e6.neighbors(4) == std::vector<int>{2, 3, 5});
  CHECK(e6.neighbors(2) == std::vector<int>{4});

  // Product diagram keeps factor blocks disconnected.
  const Diagram prod = bourbaki_diagram(RootSystem({{Family::B, 3}, {Family::A, 2}}));
  CHECK(prod.vertices == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(prod.edge_between(3, 4) == nullptr);
  CHECK(prod.edge_between(4, 5) != nullptr);
}

TEST_CASE("full subdiagrams") {
  const Diagram b3 = bourbaki_diagram({Family::B, 3});

  const Diagram a2 = full_subdiagram(b3, {1, 2});
  CHECK(a2.edges.size() == 1);
  CHECK(a2.edges[0].mult == 1);

  const Diagram b2 = full_subdiagram(b3, {2, 3});
  CHECK(b2.edges.size() == 1);
  CHECK(b2.edges[0].mult == 2);
  CHECK(b2.edges[0].arrow_to == 3);

  CHECK(full_subdiagram(b3, {1, 2, 3}).edges == b3.edges);
  CHECK(full_subdiagram(b3, {1, 3}).edges.empty());
  CHECK_THROWS_AS(full_subdiagram(b3, {1, 9}), std::out_of_range);
}

TEST_CASE("connected components") {
  const Diagram f4 = bourbaki_diagram({Family::F, 4});
  const auto comps = components(full_subdiagram(f4, {1, 3, 4}));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].vertices == std::vector<int>{1});
  CHECK(comps[1].vertices == std::vector<int>{3, 4});

  const Diagram a3 = bourbaki_diagram({Family::A, 3});
  const auto split = components(full_subdiagram(a3, {1, 3}));
  REQUIRE(split.size() == 2);
  CHECK(split[0].vertices == std::vector<int>{1});
  CHECK(split[1].vertices == std::vector<int>{3});

  CHECK(components(a3).size() == 1);

  // Components of an induced subdiagram partition the kept vertices.
  const Diagram e7 = bourbaki_diagram({Family::E, 7});
  const std::set<int> keep{1, 2, 3, 5, 6, 7};
  std::set<int> seen;
  for (const auto& c : components(full_subdiagram(e7, keep)))
    seen.insert(c.vertices.begin(), c.vertices.end());
  CHECK(seen == keep);
}

TEST_CASE("relabeling counts follow the diagram symmetries") {
  auto count = [](SimpleType shape, SimpleType as) {
    return relabelings_as(bourbaki_diagram(shape), as).size();
  };
  CHECK(count({Family::A, 1}, {Family::A, 1}) == 1);
  for (int n = 2; n <= 7; ++n) CHECK(count({Family::A, n}, {Family::A, n}) == 2);
  for (int n = 2; n <= 7; ++n) CHECK(count({Family::B, n}, {Family::B, n}) == 1);
  for (int n = 2; n <= 7; ++n) CHECK(count({Family::C, n}, {Family::C, n}) == 1);
  CHECK(count({Family::D, 4}, {Family::D, 4}) == 6);
  for (int n = 5; n <= 8; ++n) CHECK(count({Family::D, n}, {Family::D, n}) == 2);
  CHECK(count({Family::E, 6}, {Family::E, 6}) == 2);
  CHECK(count({Family::E, 7}, {Family::E, 7}) == 1);
  CHECK(count({Family::E, 8}, {Family::E, 8}) == 1);
  CHECK(count({Family::F, 4}, {Family::F, 4}) == 1);
  CHECK(count({Family::G, 2}, {Family::G, 2}) == 1);

  // Low-rank coincidences: both readings are available.
  CHECK(count({Family::B, 2}, {Family::C, 2}) == 1);
  CHECK(count({Family::C, 2}, {Family::B, 2}) == 1);
  CHECK(count({Family::A, 3}, {Family::D, 3}) == 2);
  CHECK(count({Family::D, 3}, {Family::A, 3}) == 2);

  // Mismatched shapes admit nothing.
  CHECK(count({Family::A, 4}, {Family::D, 4}) == 0);
  CHECK(count({Family::B, 3}, {Family::C, 3}) == 0);
  CHECK(count({Family::A, 2}, {Family::B, 2}) == 0);
}

TEST_CASE("every relabeling is an isomorphism onto the model") {
  for (SimpleType t : all_simple_types(6)) {
    const Diagram d = bourbaki_diagram(t);
    const auto maps = relabelings_as(d, t);
    CHECK(!maps.empty());
    for (const auto& m : maps) CHECK(is_isomorphism(d, m, t));
  }

  // And on shifted vertex ids via an induced subdiagram.
  const Diagram e8 = bourbaki_diagram({Family::E, 8});
  const Diagram fork = full_subdiagram(e8, {2, 3, 4, 5, 6});
  for (const auto& m : relabelings_as(fork, {Family::D, 5}))
    CHECK(is_isomorphism(fork, m, {Family::D, 5}));
  CHECK(relabelings_as(fork, {Family::D, 5}).size() == 2);
}

TEST_CASE("component classification canonicalizes the coincidences") {
  for (SimpleType t : all_simple_types(9)) {
    const ComponentType ct = classify_component(bourbaki_diagram(t));
    SimpleType expected = t;
    if (t.family == Family::C && t.rank == 2) expected = {Family::B, 2};
    if (t.family == Family::D && t.rank == 3) expected = {Family::A, 3};
    CHECK(ct.type == expected);
    CHECK(is_isomorphism(bourbaki_diagram(t), ct.relabel, ct.type));
  }
}

TEST_CASE("invalid connected diagrams are rejected") {
  Diagram triangle;
  triangle.vertices = {1, 2, 3};
  triangle.edges = {{1, 2, 1, 0}, {1, 3, 1, 0}, {2, 3, 1, 0}};
  CHECK_THROWS_AS(classify_component(triangle), invalid_type_error);

  Diagram star4;
  star4.vertices = {1, 2, 3, 4, 5};
  star4.edges = {{1, 5, 1, 0}, {2, 5, 1, 0}, {3, 5, 1, 0}, {4, 5, 1, 0}};
  CHECK_THROWS_AS(classify_component(star4), invalid_type_error);

  Diagram two_doubles;
  two_doubles.vertices = {1, 2, 3};
  two_doubles.edges = {{1, 2, 2, 1}, {2, 3, 2, 3}};
  CHECK_THROWS_AS(classify_component(two_doubles), invalid_type_error);
}

TEST_CASE("simple ends") {
  const Diagram a1 = bourbaki_diagram({Family::A, 1});
  CHECK(is_simple_end(a1, 1));

  const Diagram c4 = bourbaki_diagram({Family::C, 4});
  CHECK(is_simple_end(c4, 1));
  CHECK_FALSE(is_simple_end(c4, 4));
  CHECK_FALSE(is_simple_end(c4, 2));

  const Diagram b2 = bourbaki_diagram({Family::B, 2});
  CHECK_FALSE(is_simple_end(b2, 1));
  CHECK_FALSE(is_simple_end(b2, 2));

  const Diagram d4 = bourbaki_diagram({Family::D, 4});
  CHECK_FALSE(is_simple_end(d4, 2));
  CHECK(is_simple_end(d4, 1));
  CHECK(is_simple_end(d4, 3));
  CHECK(is_simple_end(d4, 4));

  // Vertex 4 of F_4 hangs on a single edge, so it counts as a simple end
  // even though its neighbor carries the double edge.
  const Diagram f4 = bourbaki_diagram({Family::F, 4});
  CHECK(is_simple_end(f4, 1));
  CHECK(is_simple_end(f4, 4));
  CHECK_FALSE(is_simple_end(f4, 2));
  CHECK_FALSE(is_simple_end(f4, 3));
  CHECK_THROWS_AS(is_simple_end(f4, 9), std::out_of_range);
}
