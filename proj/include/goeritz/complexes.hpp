#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "goeritz/goeritz_group.hpp"

// Computable models of the reducing-sphere complex and the primitive disk
// complex: the Bass-Serre tree of the amalgam (vertices = cosets of the two
// vertex groups, edges = cosets of the edge group) and the Cayley graph of
// the group coned off along cosets of the primitive-disk stabilizer
// <alpha, beta, gamma delta>.
//
// Cone edges have length 1/2, so two cone points over adjacent cosets sit at
// distance 2; all cone distances are reported in half-units (an even number
// of half-units between cone points).

namespace goeritz {

struct TreeVertex {
  char kind = 'A';      // 'A' or 'B'
  NormalForm coset;     // canonical coset representative

  bool operator==(const TreeVertex&) const = default;
  bool operator<(const TreeVertex& o) const;
};

// Canonicalize g * (vertex group) by stripping the trailing syllable of the
// vertex type and minimizing over right multiplication by the edge group.
TreeVertex tree_vertex(char kind, const NormalForm& g);

std::string tree_vertex_label(const TreeVertex& v);

// 0 iff elliptic, else the cyclic syllable length (the displacement of the
// translation axis).
std::size_t translation_length_tree(const NormalForm& g);

// Exact geodesic distance in the bipartite tree.
long long tree_distance(const TreeVertex& u, const TreeVertex& v);

struct Graph {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> edges;
  bool truncated = false;  // some locally infinite vertex was cut at the horizon
};

// Induced graph on the tree ball of given radius. A-type vertices are
// infinite-valent; their beta-coset neighbors are enumerated for exponents
// |n| <= horizon and the result is flagged truncated whenever such a vertex
// was expanded.
Graph tree_ball(const TreeVertex& center, int radius, int horizon);

// Neighbors of a tree vertex under the same horizon convention.
std::vector<TreeVertex> tree_neighbors(const TreeVertex& v, int horizon);

// BFS distance inside a ball; -1 when not connected within it. Test support.
long long graph_bfs_distance(const Graph& g, int from, int to);
int graph_find_vertex(const Graph& g, const std::string& label);

std::string graph_to_dot(const Graph& g);

// --- coned-off Cayley graph -------------------------------------------------------

struct ConeDistance {
  long long half_units = -1;  // distance in half-edges; -1 = not found in budget
  bool exact = false;
};

// Upper bound on the distance between the cone points of g H and h H in
// Cone(Cayley graph, H) for H = <alpha, beta, gamma delta>. horizon bounds
// the letter-length of group elements explored; larger budgets only refine
// the bound downward. Coset identification is exact (membership test).
ConeDistance cone_distance_upper(const NormalForm& g, const NormalForm& h, int horizon);

// Ball around the cone point of g H: the coset elements discovered within
// the horizon at half-distance 1 plus group vertices within the radius.
// radius_half is measured in half-units.
Graph cone_ball(const NormalForm& g, int radius_half, int horizon);

}  // namespace goeritz
