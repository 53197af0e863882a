#include "goeritz/complexes.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

#include "goeritz/nt_classifier.hpp"

namespace goeritz {

bool TreeVertex::operator<(const TreeVertex& o) const {
  if (kind != o.kind) return kind < o.kind;
  return coset < o.coset;
}

namespace {

const std::array<const char*, 4> kEdgeWords = {"", "a", "g", "ag"};

NormalForm right_mul_word(const NormalForm& g, const char* w) {
  NormalForm r = g;
  for (const char* c = w; *c; ++c) r.append_letter(*c);
  return r;
}

}  // namespace

TreeVertex tree_vertex(char kind, const NormalForm& g) {
  if (kind != 'A' && kind != 'B') throw std::invalid_argument("tree vertex kind must be A or B");
  NormalForm base = g;
  char strip = kind == 'A' ? 'b' : 'd';
  if (!base.syllables().empty() && base.syllables().back().gen == strip) {
    const Syllable s = base.syllables().back();
    if (s.gen == 'b')
      base.append_beta(-s.exp);
    else
      base.append_delta(3 - s.exp);
  }
  TreeVertex v{kind, base};
  for (const char* ew : kEdgeWords) {
    NormalForm cand = right_mul_word(base, ew);
    if (cand < v.coset) v.coset = cand;
  }
  return v;
}

std::string tree_vertex_label(const TreeVertex& v) {
  std::string w = v.coset.to_word();
  return std::string(1, v.kind) + ":" + (w.empty() ? "e" : w);
}

std::size_t translation_length_tree(const NormalForm& g) {
  std::size_t len = cyclic_syllable_length(g);
  return len >= 2 ? len : 0;
}

namespace {

std::size_t count_syllables(const NormalForm& g, char gen) {
  std::size_t n = 0;
  for (const auto& s : g.syllables())
    if (s.gen == gen) ++n;
  return n;
}

}  // namespace

long long tree_distance(const TreeVertex& u, const TreeVertex& v) {
  NormalForm z = nf_mul(nf_inv(u.coset), v.coset);
  auto strip_trailing = [&](char gen) {
    if (!z.syllables().empty() && z.syllables().back().gen == gen) {
      const Syllable s = z.syllables().back();
      if (gen == 'b')
        z.append_beta(-s.exp);
      else
        z.append_delta(3 - s.exp);
    }
  };
  if (u.kind == 'A' && v.kind == 'A') return 2 * static_cast<long long>(count_syllables(z, 'd'));
  if (u.kind == 'B' && v.kind == 'B') return 2 * static_cast<long long>(count_syllables(z, 'b'));
  if (u.kind == 'A' && v.kind == 'B') {
    strip_trailing('d');
    return 1 + 2 * static_cast<long long>(count_syllables(z, 'd'));
  }
  strip_trailing('b');
  return 1 + 2 * static_cast<long long>(count_syllables(z, 'b'));
}

std::vector<TreeVertex> tree_neighbors(const TreeVertex& v, int horizon) {
  std::vector<TreeVertex> out;
  if (v.kind == 'A') {
    for (int n = -horizon; n <= horizon; ++n) {
      NormalForm g = v.coset;
      g.append_beta(n);
      out.push_back(tree_vertex('B', g));
    }
  } else {
    for (int d = 0; d <= 2; ++d) {
      NormalForm g = v.coset;
      g.append_delta(d);
      out.push_back(tree_vertex('A', g));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Graph tree_ball(const TreeVertex& center, int radius, int horizon) {
  if (radius < 0) throw std::invalid_argument("negative radius");
  Graph g;
  std::map<TreeVertex, int> index;
  std::vector<TreeVertex> verts;
  std::queue<std::pair<TreeVertex, int>> q;
  auto intern = [&](const TreeVertex& v) {
    auto it = index.find(v);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(verts.size());
    index.emplace(v, id);
    verts.push_back(v);
    g.labels.push_back(tree_vertex_label(v));
    return id;
  };
  std::set<std::pair<int, int>> edges;
  intern(center);
  q.push({center, 0});
  std::map<TreeVertex, int> depth{{center, 0}};
  while (!q.empty()) {
    auto [v, d] = q.front();
    q.pop();
    if (d == radius) continue;
    if (v.kind == 'A') g.truncated = true;
    int vi = index.at(v);
    for (const TreeVertex& w : tree_neighbors(v, horizon)) {
      int wi = intern(w);
      if (wi != vi) edges.insert({std::min(vi, wi), std::max(vi, wi)});
      if (!depth.count(w)) {
        depth[w] = d + 1;
        q.push({w, d + 1});
      }
    }
  }
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

long long graph_bfs_distance(const Graph& g, int from, int to) {
  std::vector<long long> dist(g.labels.size(), -1);
  std::vector<std::vector<int>> adj(g.labels.size());
  for (auto [a, b] : g.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::queue<int> q;
  dist[from] = 0;
  q.push(from);
  while (!q.empty()) {
    int cur = q.front();
    q.pop();
    if (cur == to) return dist[cur];
    for (int nb : adj[cur])
      if (dist[nb] < 0) {
        dist[nb] = dist[cur] + 1;
        q.push(nb);
      }
  }
  return -1;
}

int graph_find_vertex(const Graph& g, const std::string& label) {
  for (std::size_t i = 0; i < g.labels.size(); ++i)
    if (g.labels[i] == label) return static_cast<int>(i);
  return -1;
}

std::string graph_to_dot(const Graph& g) {
  std::string out = "graph ball {\n";
  for (std::size_t i = 0; i < g.labels.size(); ++i)
    out += "  v" + std::to_string(i) + " [label=\"" + g.labels[i] + "\"];\n";
  for (auto [a, b] : g.edges)
    out += "  v" + std::to_string(a) + " -- v" + std::to_string(b) + ";\n";
  if (g.truncated) out += "  // truncated at horizon\n";
  out += "}\n";
  return out;
}

// --- coned-off Cayley graph ----------------------------------------------------------

namespace {

struct ConeSearch {
  // group states with distances in half-units
  std::map<NormalForm, long long> dist;
  std::vector<NormalForm> cone_reps;  // representative per discovered coset

  int coset_id(const NormalForm& x) {
    for (std::size_t i = 0; i < cone_reps.size(); ++i)
      if (disk_stab_member(nf_mul(nf_inv(cone_reps[i]), x))) return static_cast<int>(i);
    cone_reps.push_back(x);
    return static_cast<int>(cone_reps.size()) - 1;
  }
};

int word_length(const NormalForm& g) { return static_cast<int>(g.to_word().size()); }

}  // namespace

ConeDistance cone_distance_upper(const NormalForm& g, const NormalForm& h, int horizon) {
  ConeDistance out;
  if (disk_stab_member(nf_mul(nf_inv(g), h))) {
    out.half_units = 0;
    out.exact = true;
    return out;
  }
  // Dijkstra over group vertices, seeded at distance 1 (half-edge from the
  // cone point of gH) on every discovered member of gH; stop on hH.
  using State = std::pair<long long, NormalForm>;
  std::priority_queue<State, std::vector<State>, std::greater<>> pq;
  std::map<NormalForm, long long> dist;
  bool truncated = false;
  auto push = [&](const NormalForm& x, long long d) {
    if (disk_stab_member(nf_mul(nf_inv(g), x))) d = 1;  // clamp inside gH
    auto it = dist.find(x);
    if (it != dist.end() && it->second <= d) return;
    dist[x] = d;
    pq.push({d, x});
  };
  push(g, 1);
  const char letters[] = {'a', 'b', 'B', 'g', 'd', 'D'};
  long long best = -1;
  while (!pq.empty()) {
    auto [d, x] = pq.top();
    pq.pop();
    if (dist.at(x) != d) continue;
    if (disk_stab_member(nf_mul(nf_inv(h), x))) {
      best = d + 1;
      break;
    }
    if (word_length(x) >= horizon) {
      truncated = true;
      continue;
    }
    for (char c : letters) {
      NormalForm y = x;
      y.append_letter(c);
      push(y, d + 2);
    }
  }
  out.half_units = best;
  // distinct cosets sit at >= 2 half-units x2; settle exactness cheaply:
  // 0 handled above; a found value of 4 half-units meets the parity lower
  // bound for distinct cosets, hence exact even under truncation.
  out.exact = best >= 0 && (best == 4 || !truncated);
  return out;
}

Graph cone_ball(const NormalForm& g, int radius_half, int horizon) {
  Graph out;
  // vertex 0: the cone point of gH
  out.labels.push_back("cone:" + (g.to_word().empty() ? std::string("e") : g.to_word()) + "H");
  std::set<std::pair<int, int>> edges;
  std::map<NormalForm, int> index;
  auto intern = [&](const NormalForm& x) {
    auto it = index.find(x);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(out.labels.size());
    index.emplace(x, id);
    out.labels.push_back(x.to_word().empty() ? "e" : x.to_word());
    return id;
  };
  if (radius_half < 1) return out;
  // coset members within the horizon: products of subgroup generators
  std::set<NormalForm> members;
  std::queue<NormalForm> q;
  q.push(g);
  members.insert(g);
  const char* subgroup_moves[] = {"a", "b", "B", "gd", "Dg"};
  while (!q.empty()) {
    NormalForm cur = q.front();
    q.pop();
    for (const char* mv : subgroup_moves) {
      NormalForm nxt = right_mul_word(cur, mv);
      if (word_length(nxt) > horizon) {
        out.truncated = true;
        continue;
      }
      if (members.insert(nxt).second) q.push(nxt);
    }
  }
  for (const NormalForm& x : members) {
    int id = intern(x);
    edges.insert({0, id});
  }
  if (radius_half >= 3) {
    // group-group edges extend the ball beyond the coset
    std::vector<NormalForm> frontier(members.begin(), members.end());
    const char letters[] = {'a', 'b', 'B', 'g', 'd', 'D'};
    for (int step = 3; step <= radius_half; step += 2) {
      std::vector<NormalForm> next;
      for (const NormalForm& x : frontier) {
        for (char c : letters) {
          NormalForm y = x;
          y.append_letter(c);
          if (word_length(y) > horizon) {
            out.truncated = true;
            continue;
          }
          bool fresh = !index.count(y);
          int yi = intern(y);
          int xi = intern(x);
          edges.insert({std::min(xi, yi), std::max(xi, yi)});
          if (fresh) next.push_back(y);
        }
      }
      frontier = std::move(next);
    }
  }
  out.edges.assign(edges.begin(), edges.end());
  return out;
}

}  // namespace goeritz
