#include "goeritz/sl2.hpp"

#include <cassert>
#include <cmath>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace goeritz {

std::string Mat2::to_string() const {
  return "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" + std::to_string(c) +
         "," + std::to_string(d) + "]]";
}

namespace {

long long checked_fma(long long a, long long b, long long c, long long d) {
  long long p1, p2, s;
  if (__builtin_mul_overflow(a, b, &p1) || __builtin_mul_overflow(c, d, &p2) ||
      __builtin_add_overflow(p1, p2, &s))
    throw std::overflow_error("matrix entry overflow");
  return s;
}

}  // namespace

Mat2 m_mul(const Mat2& x, const Mat2& y) {
  return {checked_fma(x.a, y.a, x.b, y.c), checked_fma(x.a, y.b, x.b, y.d),
          checked_fma(x.c, y.a, x.d, y.c), checked_fma(x.c, y.b, x.d, y.d)};
}

Mat2 m_inv(const Mat2& m) {
  if (m.det() != 1) throw std::invalid_argument("m_inv requires determinant 1");
  return {m.d, -m.b, -m.c, m.a};
}

Mat2 m_neg(const Mat2& m) { return {-m.a, -m.b, -m.c, -m.d}; }

Mat2 m_pow(const Mat2& m, long long n) {
  Mat2 base = n < 0 ? m_inv(m) : m;
  long long k = std::llabs(n);
  Mat2 r;
  while (k) {
    if (k & 1) r = m_mul(r, base);
    base = m_mul(base, base);
    k >>= 1;
  }
  return r;
}

bool Slope::operator<(const Slope& o) const {
  if (p != o.p) return p < o.p;
  return q < o.q;
}

std::string Slope::to_string() const {
  return std::to_string(p) + "/" + std::to_string(q);
}

Slope make_slope(long long p, long long q) {
  if (p == 0 && q == 0) throw std::invalid_argument("slope 0/0");
  long long g = std::gcd(std::llabs(p), std::llabs(q));
  p /= g;
  q /= g;
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
  return {p, q};
}

Slope parse_slope(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "oo") return {1, 0};
  auto pos = text.find('/');
  try {
    if (pos == std::string::npos) return make_slope(std::stoll(text), 1);
    return make_slope(std::stoll(text.substr(0, pos)), std::stoll(text.substr(pos + 1)));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad slope '" + text + "'");
  }
}

Slope apply(const Mat2& m, const Slope& s) {
  return make_slope(m.a * s.p + m.b * s.q, m.c * s.p + m.d * s.q);
}

// --- conjugacy ----------------------------------------------------------------

namespace {

const Mat2 kR{1, 1, 0, 1};
const Mat2 kL{1, 0, 1, 1};
const Mat2 kS{0, -1, 1, 0};

long long entry_norm(const Mat2& m) {
  return std::llabs(m.a) + std::llabs(m.b) + std::llabs(m.c) + std::llabs(m.d);
}

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

bool nonneg(const Mat2& m) { return m.a >= 0 && m.b >= 0 && m.c >= 0 && m.d >= 0; }

// Descend to an entry-norm local minimum by conjugation; used to land
// hyperbolic matrices in the nonnegative RL monoid and elliptic matrices on
// a small canonical set. Returns u with u m u^-1 = reduced.
struct Reduced {
  Mat2 m;
  Mat2 u;
};

Reduced reduce_by_conjugation(Mat2 m, bool want_nonneg) {
  Mat2 u;
  const Mat2 moves[] = {kR, m_inv(kR), kL, m_inv(kL), kS, m_inv(kS)};
  auto better = [&](const Mat2& x, const Mat2& y) {
    if (want_nonneg && nonneg(x) != nonneg(y)) return nonneg(x);
    return entry_norm(x) < entry_norm(y);
  };
  bool progress = true;
  while (progress) {
    progress = false;
    for (const Mat2& c : moves) {
      Mat2 cand = m_mul(m_mul(c, m), m_inv(c));
      if (better(cand, m)) {
        m = cand;
        u = m_mul(c, u);
        progress = true;
        break;
      }
    }
    if (!progress) {
      // try depth-2 combinations to escape plateaus
      for (const Mat2& c1 : moves) {
        for (const Mat2& c2 : moves) {
          Mat2 c = m_mul(c1, c2);
          Mat2 cand = m_mul(m_mul(c, m), m_inv(c));
          if (better(cand, m)) {
            m = cand;
            u = m_mul(c, u);
            progress = true;
            break;
          }
        }
        if (progress) break;
      }
    }
  }
  return {m, u};
}

}  // namespace

RLWord hyperbolic_rl_word(const Mat2& m_in) {
  if (m_in.trace() < 3) throw std::invalid_argument("hyperbolic_rl_word needs trace >= 3");
  Reduced red = reduce_by_conjugation(m_in, true);
  if (!nonneg(red.m))
    throw std::runtime_error("failed to reduce hyperbolic matrix into the RL monoid");
  Mat2 m = red.m;
  std::string word;
  while (!(m == Mat2{})) {
    if (m.a >= m.c && m.b >= m.d && (m.c > 0 || m.d > 0 || m.a > 1 || m.b > 0)) {
      // top row dominates: factor R on the left
      word.push_back('R');
      m = m_mul(m_inv(kR), m);
    } else if (m.c >= m.a && m.d >= m.b) {
      word.push_back('L');
      m = m_mul(m_inv(kL), m);
    } else {
      throw std::runtime_error("RL peeling stuck");
    }
    if (word.size() > 4096) throw std::runtime_error("RL word too long");
  }
  return {word, red.u};
}

namespace {

// cyclic equality of RL words; returns rotation index of w1 matching w2
std::optional<std::size_t> cyclic_match(const std::string& w1, const std::string& w2) {
  if (w1.size() != w2.size()) return std::nullopt;
  if (w1.empty()) return 0;
  std::string doubled = w1 + w1;
  auto pos = doubled.find(w2);
  if (pos == std::string::npos || pos >= w1.size()) {
    if (pos == std::string::npos) return std::nullopt;
  }
  return pos;
}

Mat2 rl_prefix_product(const std::string& w, std::size_t k) {
  Mat2 p;
  for (std::size_t i = 0; i < k; ++i) p = m_mul(p, w[i] == 'R' ? kR : kL);
  return p;
}

std::optional<Mat2> conjugacy_same_sign(const Mat2& m1, const Mat2& m2);

// elliptic (|trace| < 2) and parabolic (|trace| = 2) cases assume equal traces
std::optional<Mat2> elliptic_conjugacy(const Mat2& m1, const Mat2& m2) {
  Reduced r1 = reduce_by_conjugation(m1, false);
  Reduced r2 = reduce_by_conjugation(m2, false);
  if (r1.m == r2.m) return m_mul(m_inv(r2.u), r1.u);
  // reduced elliptic representatives are tiny; settle residual ambiguity by
  // a bounded search around the reduced forms
  if (auto w = sl2_conjugacy_brute(r1.m, r2.m, 6))
    return m_mul(m_inv(r2.u), m_mul(*w, r1.u));
  return std::nullopt;
}

std::optional<Mat2> parabolic_conjugacy(const Mat2& m1, const Mat2& m2) {
  // sign-normalize to trace +2
  if (m1.trace() == -2) {
    auto r = parabolic_conjugacy(m_neg(m1), m_neg(m2));
    return r;
  }
  auto normalize = [](const Mat2& m) -> std::pair<Mat2, Mat2> {
    // find primitive eigenvector (x,y) of eigenvalue 1: (m - I)v = 0
    long long x, y;
    if (m.b == 0 && m.a == 1) {
      x = 1; y = 0;
      if (m.c != 0) { x = 0; y = 1; }
    } else {
      // rows of (m - I) are proportional; solve (a-1)x + b y = 0
      x = m.b;
      y = 1 - m.a;
      if (x == 0 && y == 0) { x = m.d - 1 >= 0 ? m.d - 1 : 1 - m.d; y = -m.c; }
      long long g = std::gcd(std::llabs(x), std::llabs(y));
      if (g > 1) { x /= g; y /= g; }
      if (x == 0 && y == 0) { x = 1; y = 0; }
    }
    // complete to U in SL2 with first column (x,y); U^-1 m U is triangular.
    // ext_gcd gives x u - y v = 1, so U = [[x, v],[y, u]] has determinant 1.
    long long u, v;
    long long g = ext_gcd(x, -y, u, v);
    (void)g;
    long long t = u;
    long long s = v;
    Mat2 U{x, s, y, t};
    assert(U.det() == 1);
    Mat2 tri = m_mul(m_mul(m_inv(U), m), U);
    return {tri, m_inv(U)};  // (triangular, w) with w m w^-1 = tri
  };
  auto [t1, w1] = normalize(m1);
  auto [t2, w2] = normalize(m2);
  // t = [[1, k],[0,1]] or [[1,0],[k,1]] after normalization; unify
  auto shear = [](const Mat2& t) -> std::optional<long long> {
    if (t.c == 0 && t.a == 1 && t.d == 1) return t.b;
    return std::nullopt;
  };
  auto k1 = shear(t1), k2 = shear(t2);
  if (!k1 || !k2) return std::nullopt;
  if (*k1 == *k2) return m_mul(m_inv(w2), w1);
  // T^k ~ T^k' only for k = k'; also try the orientation swap S: S T^k S^-1 = L^-k
  Mat2 s_conj = m_mul(m_mul(kS, t1), m_inv(kS));
  if (s_conj == t2) return m_mul(m_inv(w2), m_mul(kS, w1));
  return std::nullopt;
}

std::optional<Mat2> conjugacy_same_sign(const Mat2& m1, const Mat2& m2) {
  long long tr = m1.trace();
  if (tr >= 3) {
    RLWord w1 = hyperbolic_rl_word(m1);
    RLWord w2 = hyperbolic_rl_word(m2);
    auto rot = cyclic_match(w1.word, w2.word);
    if (!rot) return std::nullopt;
    // prefix p of w1: p^-1 (prod w1) p = prod (rotated w1) = prod w2
    Mat2 p = rl_prefix_product(w1.word, *rot);
    Mat2 u = m_mul(m_inv(p), w1.conjugator);
    return m_mul(m_inv(w2.conjugator), u);
  }
  if (tr == 2 || tr == -2) return parabolic_conjugacy(m1, m2);
  if (tr <= -3) {
    auto r = conjugacy_same_sign(m_neg(m1), m_neg(m2));
    return r;
  }
  return elliptic_conjugacy(m1, m2);
}

}  // namespace

std::optional<Mat2> sl2_conjugacy(const Mat2& m1, const Mat2& m2) {
  if (m1.det() != 1 || m2.det() != 1)
    throw std::invalid_argument("sl2_conjugacy requires determinant 1");
  if (m1.trace() != m2.trace()) return std::nullopt;
  if (m1 == m2) return Mat2{};
  auto u = conjugacy_same_sign(m1, m2);
  if (u) assert(m_mul(m_mul(*u, m1), m_inv(*u)) == m2);
  return u;
}

std::optional<Mat2> sl2_conjugacy_brute(const Mat2& m1, const Mat2& m2, long long bound) {
  if (m1.trace() != m2.trace()) return std::nullopt;
  for (long long a = -bound; a <= bound; ++a)
    for (long long b = -bound; b <= bound; ++b)
      for (long long c = -bound; c <= bound; ++c) {
        // a d - b c = 1  =>  d = (1 + b c)/a when a != 0
        if (a != 0) {
          if ((1 + b * c) % a != 0) continue;
          long long d = (1 + b * c) / a;
          if (std::llabs(d) > bound) continue;
          Mat2 u{a, b, c, d};
          if (m_mul(m_mul(u, m1), m_inv(u)) == m2) return u;
        } else {
          if (b * c != -1) continue;
          for (long long d = -bound; d <= bound; ++d) {
            Mat2 u{0, b, c, d};
            if (m_mul(m_mul(u, m1), m_inv(u)) == m2) return u;
          }
        }
      }
  return std::nullopt;
}

}  // namespace goeritz
