#include <doctest.h>

#include "support.hpp"
#include "widthforge/errors.hpp"
#include "widthforge/generators.hpp"
#include "widthforge/matching.hpp"

using namespace wftest;

TEST_SUITE("generators") {
  TEST_CASE("every family member passes its own recognition") {
    const std::vector<FamilySpec> specs{
        {Family::path, {6}, {}},          {Family::cycle, {7}, {}},
        {Family::complete, {5}, {}},      {Family::biclique, {2, 4}, {}},
        {Family::grid, {3, 4}, {}},       {Family::elementary_wall, {3, 3}, {}},
        {Family::net_wall, {2, 2}, {}},   {Family::rook, {3, 4}, {}},
        {Family::kt_box_kt, {4}, {}},     {Family::kt_box_st, {4}, {}},
        {Family::degeneracy_counterexample, {3}, {}},
        {Family::l_caterpillar, {5}, {}}, {Family::random_chordal, {9}, 4u},
        {Family::star, {4}, {}},
    };
    for (const auto& spec : specs) {
      const Graph g = generate(spec);
      const FamilyReport report = verify_family(g, spec);
      INFO(family_name(spec.family));
      CHECK(report.pass);
    }
  }

  TEST_CASE("recognition rejects a perturbed member") {
    Graph g = generate(Family::grid, {3, 3});
    g.add_edge(0, 8);
    CHECK_FALSE(verify_family(g, {Family::grid, {3, 3}, {}}).pass);
    CHECK_FALSE(verify_family(generate(Family::cycle, {6}), {Family::path, {6}, {}}).pass);
  }

  TEST_CASE("rook graphs have nm(n+m-2)/2 edges") {
    for (int n = 1; n <= 5; ++n)
      for (int m = 1; m <= 5; ++m) CHECK(generate(Family::rook, {n, m}).num_edges() == n * m * (n + m - 2) / 2);
  }

  TEST_CASE("walls are subcubic and net-walls replace degree-3 vertices by triangles") {
    const Graph wall = generate(Family::elementary_wall, {4, 3});
    int cubic = 0;
    for (int v = 0; v < wall.num_vertices(); ++v) {
      CHECK(wall.degree(v) >= 2);
      CHECK(wall.degree(v) <= 3);
      cubic += wall.degree(v) == 3;
    }
    CHECK(bipartition(wall).has_value());
    const Graph net = generate(Family::net_wall, {4, 3});
    CHECK(net.num_vertices() == wall.num_vertices() + 2 * cubic);
    CHECK(net.num_edges() == wall.num_edges() + 3 * cubic);
  }

  TEST_CASE("random chordal graphs are chordal and seeded") {
    for (std::uint32_t seed = 1; seed <= 30; ++seed) {
      const Graph g = generate(Family::random_chordal, {8}, seed);
      CHECK(is_chordal(g));
      CHECK(is_connected(g));
      CHECK(g == generate(Family::random_chordal, {8}, seed));
    }
  }

  TEST_CASE("names round trip and bad parameters are rejected") {
    for (Family f : {Family::path, Family::net_wall, Family::kt_box_st, Family::degeneracy_counterexample})
      CHECK(parse_family(family_name(f)) == f);
    CHECK_FALSE(parse_family("hypercube").has_value());
    CHECK_THROWS_AS(generate(Family::cycle, {2}), InvalidArgument);
    CHECK_THROWS_AS(generate(Family::grid, {3}), InvalidArgument);
    CHECK_THROWS_AS(generate(Family::path, {0}), InvalidArgument);
    CHECK_THROWS_AS(generate(Family::path, {3}, 5u), InvalidArgument);
  }

  TEST_CASE("counterexample graphs") {
    for (int d = 1; d <= 4; ++d) {
      const Graph g = generate(Family::degeneracy_counterexample, {d});
      CHECK(bipartition(g).has_value());
      CHECK(degeneracy(g).value == d);
      CHECK(max_matching_size(g) == 2 * d);
      CHECK(max_induced_matching_size(g) == 1);
    }
  }
}
