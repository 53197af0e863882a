#include "goeritz/slope_lab.hpp"

#include <cassert>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace goeritz {

Mat2 monodromy_matrix(Monodromy m) {
  // T_a T_b and T_a T_b^-1 with T_a = [[1,1],[0,1]], T_b = [[1,0],[-1,1]]
  if (m == Monodromy::Trefoil) return {0, 1, -1, 1};
  return {2, 1, 1, 1};
}

Mat2 slope_action(Monodromy m) {
  Mat2 h = monodromy_matrix(m);
  // P h P with P the antidiagonal swap
  return {h.d, h.c, h.b, h.a};
}

std::vector<Slope> slope_orbit(const Mat2& m, const Slope& s, int steps) {
  if (steps < 0) throw std::invalid_argument("slope_orbit: steps must be >= 0");
  std::vector<Slope> out;
  out.reserve(steps + 1);
  Slope cur = s;
  out.push_back(cur);
  for (int i = 0; i < steps; ++i) {
    cur = apply(m, cur);
    out.push_back(cur);
  }
  return out;
}

namespace {

// Crossing word of a straight arc with direction (m, n) against the vertical
// integer lines (letter lv, m-1 crossings at i/m) and horizontal integer
// lines (letter lh, n-1 crossings at j/n). gcd(m, n) = 1, so no ties.
void emit_crossings(long long m, long long n, char lv, char lh, std::string& out) {
  long long i = 1, j = 1;
  while (i < m || j < n) {
    if (j >= n || (i < m && i * n < j * m)) {
      out.push_back(lv);
      ++i;
    } else {
      out.push_back(lh);
      ++j;
    }
  }
}

void emit_run(char c, long long count, std::string& out) {
  for (long long i = 0; i < count; ++i) out.push_back(c);
}

bool in_open_unit(const Slope& s) { return s.q > 0 && s.p > 0 && s.p < s.q; }

F2Word trefoil_generic_word(const Slope& s) {
  // 0 < p/q < 1: one arc block per horizontal boundary component.
  long long p = s.p, q = s.q;
  std::string w;
  emit_crossings(q, p, 'x', 'Y', w);          // q-1 letters r, p-1 letters b^-1
  emit_crossings(q - p, q, 'X', 'y', w);      // q-1-p letters r^-1, q-1 letters b
  return f2_reduce(w);
}

Slope trefoil_normalize_to_unit(const Slope& s) {
  Mat2 n = slope_action(Monodromy::Trefoil);
  Slope cur = s;
  for (int k = 0; k < 3; ++k) {
    if (in_open_unit(cur)) return cur;
    cur = apply(n, cur);
  }
  throw std::invalid_argument("trefoil slope " + s.to_string() + " outside handled range");
}

// order on extended rationals for range tests; infinity handled separately
bool slope_lt(const Slope& s, long long num, long long den) {
  return s.p * den < num * s.q;  // valid for q > 0
}

F2Word fig8_generic_word(const Slope& s) {
  if (s.q == 0) throw std::invalid_argument("fig8 word: slope infinity is special");
  long long p = s.p, q = s.q;
  std::string w;
  if (p > q && q >= 1) {
    // (1, inf): stated counts 2p-q-1 of b and p-1 of b^-1; the r letters,
    // implicit in the published analysis, are pinned as q and p-q.
    emit_run('y', 2 * p - q - 1, w);
    emit_run('x', q, w);
    emit_run('Y', p - 1, w);
    emit_run('X', p - q, w);
  } else if (p < 0 && -p < q) {
    // (-1, 0): stated counts |q|-1 of r and |p|+|q|-1 of r^-1; b letters
    // pinned as |p| and |q|-|p|.
    long long u = -p, v = q;
    emit_run('x', v - 1, w);
    emit_run('y', u, w);
    emit_run('X', u + v - 1, w);
    emit_run('Y', v - u, w);
  } else if (p > 0 && 2 * p < q) {
    // (0, 1/2): the (1, inf) family transported along the a<->b swap.
    long long u = p, v = q;
    emit_run('x', 2 * v - u - 1, w);
    emit_run('y', u, w);
    emit_run('X', v - 1, w);
    emit_run('Y', v - u, w);
  } else if (p < 0 && -p > 2 * q && q >= 1) {
    // (-inf, -2): the (-1, 0) family transported along the a<->b swap.
    long long v = -p, u = q;
    emit_run('y', v - 1, w);
    emit_run('x', u, w);
    emit_run('Y', u + v - 1, w);
    emit_run('X', v - u, w);
  } else {
    throw std::invalid_argument("fig8 slope " + s.to_string() + " outside handled range");
  }
  F2Word out = f2_reduce(w);
  assert(f2_cyclic_reduce(out).first.letters.size() == out.letters.size());
  return out;
}

// Pull a slope into (0, 1/2] u (-inf, -2] under the fig8 slope action;
// the orbit representatives of 0/1 and 1/0 are 1/2 and -2.
Slope fig8_normalize(const Slope& s) {
  Mat2 n = slope_action(Monodromy::Fig8);
  Mat2 ninv = m_inv(n);
  Slope cur = s;
  for (int guard = 0; guard < 512; ++guard) {
    if (cur.q > 0 && cur.p > 0 && 2 * cur.p <= cur.q) return cur;          // (0, 1/2]
    if (cur.q > 0 && cur.p < 0 && -cur.p >= 2 * cur.q) return cur;         // (-inf, -2]
    if (cur.q == 0 && cur.p < 0) cur = Slope{-cur.p, 0};
    bool forward = (cur.q > 0 && cur.p == 0) ||
                   (cur.q > 0 && cur.p < 0 && slope_lt(cur, 0, 1) && !slope_lt(cur, -2, 1));
    cur = apply(forward ? n : ninv, cur);
  }
  throw std::runtime_error("fig8 slope normalization did not terminate");
}

}  // namespace

F2Word boundary_word(Monodromy mono, const Slope& s) {
  if (mono == Monodromy::Trefoil) {
    if (s == Slope{0, 1}) return f2_reduce("y");
    if (s == Slope{1, 0}) return f2_reduce("x");
    if (s == Slope{1, 1}) return f2_reduce("xY");
    if (in_open_unit(s)) return trefoil_generic_word(s);
    if (s == Slope{-1, 1} || s == Slope{2, 1})
      return trefoil_generic_word(trefoil_normalize_to_unit(s));
    throw std::invalid_argument("trefoil slope " + s.to_string() + " outside handled range");
  }
  // fig8
  if (s == Slope{0, 1} || s == Slope{-1, 1} || s == Slope{1, 2}) return f2_reduce("y");
  if (s == Slope{1, 0} || s == Slope{1, 1} || s == Slope{-2, 1}) return f2_reduce("x");
  return fig8_generic_word(s);
}

bool is_vertical_primitive(Monodromy mono, const Slope& s) {
  if (mono == Monodromy::Trefoil) {
    Mat2 n = slope_action(Monodromy::Trefoil);
    Slope cur = s;
    for (int k = 0; k < 3; ++k) {
      if (cur == Slope{0, 1} || cur == Slope{1, 0} || cur == Slope{1, 1})
        return f2_is_primitive(boundary_word(mono, cur)).primitive;
      if (in_open_unit(cur))
        return f2_is_primitive(boundary_word(mono, cur)).primitive;
      cur = apply(n, cur);
    }
    throw std::runtime_error("trefoil orbit normalization failed");
  }
  // orbit representatives land on {1/2, -2} (primitive single-letter words)
  // or inside the mirrored generic ranges (mixed-pair words)
  Slope rep = fig8_normalize(s);
  return f2_is_primitive(boundary_word(mono, rep)).primitive;
}

std::set<Slope> vertical_primitive_scan(Monodromy mono, long long bound, long long cap) {
  if (bound < 0 || bound > cap)
    throw std::invalid_argument("vertical_primitive_scan: bound exceeds cap");
  std::set<Slope> out;
  // q = 0: the slope at infinity
  if (is_vertical_primitive(mono, Slope{1, 0})) out.insert(Slope{1, 0});
  for (long long q = 1; q <= bound; ++q)
    for (long long p = -bound; p <= bound; ++p) {
      if (std::gcd(std::llabs(p), q) != 1) continue;
      Slope s{p, q};
      if (is_vertical_primitive(mono, s)) out.insert(s);
    }
  return out;
}

std::set<Slope> vertical_primitive_closed_form(Monodromy mono, long long bound) {
  Mat2 n = slope_action(mono);
  std::set<Slope> out;
  // trefoil: the projective-order-3 action splits the six exceptional
  // slopes into the orbits of 0 and 1/2; fig8: the orbits of 0 and infinity
  std::vector<Slope> seeds = mono == Monodromy::Trefoil
                                 ? std::vector<Slope>{Slope{0, 1}, Slope{1, 2}}
                                 : std::vector<Slope>{Slope{0, 1}, Slope{1, 0}};
  for (Slope base : seeds) {
    for (Mat2 step : {n, m_inv(n)}) {
      Slope cur = base;
      for (int k = 0; k < 60; ++k) {
        if (std::llabs(cur.p) <= bound && cur.q <= bound) out.insert(cur);
        if (std::llabs(cur.p) > 4 * bound || cur.q > 4 * bound) break;
        cur = apply(step, cur);
      }
    }
  }
  return out;
}

// --- Farey graph -----------------------------------------------------------------

bool farey_adjacent(const Slope& s1, const Slope& s2) {
  return std::llabs(s1.p * s2.q - s1.q * s2.p) == 1;
}

namespace {

long long ext_gcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return std::llabs(a);
  }
  long long x1, y1;
  long long g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

// distance from infinity along Stern-Brocot parents, memoized
int dist_from_infinity(const Slope& s, std::map<Slope, int>& memo) {
  if (s.q == 0) return 0;
  if (s.q == 1) return 1;
  auto it = memo.find(s);
  if (it != memo.end()) return it->second;
  memo.emplace(s, 1 << 20);  // recursion guard; parents have smaller q
  long long a = s.p, b = s.q;
  long long x, y;
  ext_gcd(((a % b) + b) % b, b, x, y);
  long long s1 = ((x % b) + b) % b;  // a * s1 = 1 mod b
  if (s1 == 0) s1 = b;
  long long s2 = b - s1;
  int best = 1 << 20;
  for (long long sv : {s1, s2}) {
    if (sv < 1 || sv > b - 1) continue;
    long long num = a * sv;
    long long r;
    if (((num - 1) % b) == 0)
      r = (num - 1) / b;
    else
      r = (num + 1) / b;
    assert(std::llabs(a * sv - b * r) == 1);
    best = std::min(best, dist_from_infinity(make_slope(r, sv), memo));
  }
  int d = 1 + best;
  memo[s] = d;
  return d;
}

}  // namespace

int farey_distance(const Slope& s1, const Slope& s2) {
  if (s1 == s2) return 0;
  if (farey_adjacent(s1, s2)) return 1;
  // move s1 to infinity: U = [[x, y],[-q, p]] with x p + y q = 1
  long long x, y;
  long long g = ext_gcd(s1.p, s1.q, x, y);
  assert(g == 1);
  (void)g;
  Mat2 u{x, y, -s1.q, s1.p};
  assert(u.det() == 1);
  Slope v = apply(u, s2);
  std::map<Slope, int> memo;
  return dist_from_infinity(v, memo);
}

std::optional<int> farey_distance_bfs(const Slope& s1, const Slope& s2, long long pbound,
                                      long long qbound) {
  std::vector<Slope> verts;
  verts.push_back(Slope{1, 0});
  for (long long q = 1; q <= qbound; ++q)
    for (long long p = -pbound; p <= pbound; ++p)
      if (std::gcd(std::llabs(p), q) == 1) verts.push_back(Slope{p, q});
  auto index_of = [&](const Slope& s) -> int {
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (verts[i] == s) return static_cast<int>(i);
    return -1;
  };
  int src = index_of(s1), dst = index_of(s2);
  if (src < 0 || dst < 0) return std::nullopt;
  std::vector<int> dist(verts.size(), -1);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int cur = q.front();
    q.pop();
    if (cur == dst) return dist[cur];
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (dist[i] >= 0) continue;
      if (farey_adjacent(verts[cur], verts[i])) {
        dist[i] = dist[cur] + 1;
        q.push(static_cast<int>(i));
      }
    }
  }
  return std::nullopt;
}

}  // namespace goeritz
