#include <doctest.h>

#include <algorithm>
#include <cstring>
#include <random>
#include <stdexcept>

#include "goeritz/complexes.hpp"

using namespace goeritz;

namespace {

NormalForm nf(const std::string& w) { return normal_form(parse_goeritz_word(w)); }

GoeritzWord rand_word(std::mt19937_64& rng, int maxlen, const char* letters = "abBgdD") {
  std::uniform_int_distribution<int> len(0, maxlen);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(std::strlen(letters)) - 1);
  GoeritzWord w;
  int n = len(rng);
  for (int i = 0; i < n; ++i) w.push_back(letters[pick(rng)]);
  return w;
}

}  // namespace

TEST_CASE("translation lengths") {
  CHECK(translation_length_tree(nf("b")) == 0);
  CHECK(translation_length_tree(nf("bd")) == 2);
  CHECK(translation_length_tree(nf("bbddbb")) == 2);
  CHECK(translation_length_tree(nf("bdBd")) == 4);
}

TEST_CASE("translation length is a conjugation invariant") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 1000; ++i) {
    NormalForm g = nf(rand_word(rng, 14));
    NormalForm h = nf(rand_word(rng, 10));
    CHECK(translation_length_tree(g) == translation_length_tree(nf_conj(h, g)));
  }
}

TEST_CASE("tree vertex identification") {
  // same A-coset: differ by right multiplication by <alpha, gamma, beta>
  CHECK(tree_vertex('A', nf("d")) == tree_vertex('A', nf("db")));
  CHECK(tree_vertex('A', nf("d")) == tree_vertex('A', nf("da")));
  CHECK(tree_vertex('A', nf("d")) == tree_vertex('A', nf("dg")));
  CHECK_FALSE(tree_vertex('A', nf("")) == tree_vertex('A', nf("d")));
  // beta fixes the base A-vertex
  CHECK(tree_vertex('A', nf("")) == tree_vertex('A', nf("bbb")));
  // B-cosets absorb delta
  CHECK(tree_vertex('B', nf("")) == tree_vertex('B', nf("d")));
  CHECK(tree_vertex('B', nf("")) == tree_vertex('B', nf("gdd")));
  CHECK_FALSE(tree_vertex('B', nf("")) == tree_vertex('B', nf("b")));
  CHECK_THROWS_AS(tree_vertex('C', nf("")), std::invalid_argument);
}

TEST_CASE("tree distance pins") {
  TreeVertex baseA = tree_vertex('A', nf(""));
  TreeVertex baseB = tree_vertex('B', nf(""));
  CHECK(tree_distance(baseA, baseB) == 1);
  CHECK(tree_distance(baseA, tree_vertex('A', nf("d"))) == 2);
  CHECK(tree_distance(baseA, tree_vertex('A', nf("bd"))) == 2);
  CHECK(tree_distance(baseA, baseA) == 0);
  CHECK(tree_distance(baseB, tree_vertex('A', nf("db"))) == 1);  // beta fixes A-cosets
  CHECK(tree_distance(baseB, tree_vertex('A', nf("bd"))) == 3);
}

TEST_CASE("tree distance is symmetric and vertex-well-defined") {
  std::mt19937_64 rng(67);
  for (int i = 0; i < 400; ++i) {
    char k1 = rng() % 2 ? 'A' : 'B';
    char k2 = rng() % 2 ? 'A' : 'B';
    NormalForm g1 = nf(rand_word(rng, 8));
    NormalForm g2 = nf(rand_word(rng, 8));
    TreeVertex u = tree_vertex(k1, g1), v = tree_vertex(k2, g2);
    CHECK(tree_distance(u, v) == tree_distance(v, u));
    CHECK((tree_distance(u, v) == 0) == (u == v));
    // right-multiplying by the vertex group does not move the vertex
    NormalForm g1b = nf_mul(g1, nf(k1 == 'A' ? "bag" : "dag"));
    CHECK(tree_distance(tree_vertex(k1, g1b), v) == tree_distance(u, v));
  }
}

TEST_CASE("tree four-point condition") {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 300; ++i) {
    TreeVertex w[4];
    for (auto& v : w) v = tree_vertex(rng() % 2 ? 'A' : 'B', nf(rand_word(rng, 6)));
    long long d01 = tree_distance(w[0], w[1]), d23 = tree_distance(w[2], w[3]);
    long long d02 = tree_distance(w[0], w[2]), d13 = tree_distance(w[1], w[3]);
    long long d03 = tree_distance(w[0], w[3]), d12 = tree_distance(w[1], w[2]);
    long long a = d01 + d23, b = d02 + d13, c = d03 + d12;
    long long mx = std::max({a, b, c});
    // the two largest of the three sums agree
    CHECK(((a == mx) + (b == mx) + (c == mx)) >= 2);
  }
}

TEST_CASE("BFS distances on tree balls agree with the formula") {
  TreeVertex base = tree_vertex('A', nf(""));
  Graph ball = tree_ball(base, 6, 3);
  CHECK(ball.truncated);  // A-vertices are infinite valent
  std::mt19937_64 rng(73);
  int checked = 0;
  for (int i = 0; i < 300 && checked < 100; ++i) {
    // sample vertices from words over letters with small beta exponents
    char k1 = rng() % 2 ? 'A' : 'B';
    char k2 = rng() % 2 ? 'A' : 'B';
    TreeVertex u = tree_vertex(k1, nf(rand_word(rng, 4, "bgdD")));
    TreeVertex v = tree_vertex(k2, nf(rand_word(rng, 4, "bgdD")));
    int iu = graph_find_vertex(ball, tree_vertex_label(u));
    int iv = graph_find_vertex(ball, tree_vertex_label(v));
    if (iu < 0 || iv < 0) continue;
    long long du = tree_distance(base, u);
    long long dv = tree_distance(base, v);
    if (du > 5 || dv > 5) continue;  // keep geodesics inside the ball
    ++checked;
    CHECK(graph_bfs_distance(ball, iu, iv) == tree_distance(u, v));
  }
  CHECK(checked >= 50);
}

TEST_CASE("tree ball shape") {
  Graph b0 = tree_ball(tree_vertex('A', nf("")), 0, 2);
  CHECK(b0.labels.size() == 1);
  CHECK_FALSE(b0.truncated);
  // radius 1 about the B-vertex is complete: exactly 3 A-neighbors
  Graph b1 = tree_ball(tree_vertex('B', nf("")), 1, 2);
  CHECK(b1.labels.size() == 4);
  CHECK_FALSE(b1.truncated);
  // radius 1 about the A-vertex is a truncated star
  Graph b2 = tree_ball(tree_vertex('A', nf("")), 1, 2);
  CHECK(b2.labels.size() == 6);  // 2*horizon + 1 coset neighbors
  CHECK(b2.truncated);
}

TEST_CASE("cone distances") {
  ConeDistance same = cone_distance_upper(nf("a"), nf("ab"), 8);
  CHECK(same.half_units == 0);
  CHECK(same.exact);

  // beta lies in the subgroup: same cone point as the identity
  CHECK(cone_distance_upper(nf(""), nf("b"), 8).half_units == 0);

  // distinct cosets meet the parity lower bound through the edge e -- gamma
  ConeDistance eg = cone_distance_upper(nf(""), nf("g"), 8);
  CHECK(eg.half_units == 4);  // 2 in length units
  CHECK(eg.exact);

  ConeDistance ed = cone_distance_upper(nf(""), nf("d"), 8);
  CHECK(ed.half_units == 4);
}

TEST_CASE("cone distance never increases with budget") {
  std::mt19937_64 rng(79);
  for (int i = 0; i < 40; ++i) {
    NormalForm g = nf(rand_word(rng, 4));
    NormalForm h = nf(rand_word(rng, 4));
    ConeDistance lo = cone_distance_upper(g, h, 5);
    ConeDistance hi = cone_distance_upper(g, h, 8);
    if (lo.half_units >= 0) {
      REQUIRE(hi.half_units >= 0);
      CHECK(hi.half_units <= lo.half_units);
    }
  }
}

TEST_CASE("cone distance is symmetric on small exact cases") {
  std::mt19937_64 rng(83);
  for (int i = 0; i < 30; ++i) {
    NormalForm g = nf(rand_word(rng, 3));
    NormalForm h = nf(rand_word(rng, 3));
    ConeDistance ab = cone_distance_upper(g, h, 8);
    ConeDistance ba = cone_distance_upper(h, g, 8);
    if (ab.exact && ba.exact) CHECK(ab.half_units == ba.half_units);
  }
}

TEST_CASE("cone ball radius 1 is the coset") {
  Graph b = cone_ball(nf(""), 1, 5);
  REQUIRE(b.labels.size() >= 2);
  CHECK(b.labels[0] == "cone:eH");
  CHECK(graph_find_vertex(b, "e") > 0);
  CHECK(graph_find_vertex(b, "b") > 0);
  // every edge touches the cone point at radius 1
  for (auto [a, c] : b.edges) CHECK((a == 0 || c == 0));
  CHECK(graph_find_vertex(b, "g") < 0);  // gamma is not in the subgroup
}

TEST_CASE("dot export is well formed") {
  Graph b = tree_ball(tree_vertex('B', nf("")), 1, 2);
  std::string dot = graph_to_dot(b);
  CHECK(dot.find("graph ball {") == 0);
  CHECK(dot.find("--") != std::string::npos);
}
