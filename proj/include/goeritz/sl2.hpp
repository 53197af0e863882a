#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Integer 2x2 determinant-1 matrices, projective slopes, and exact SL2(Z)
// conjugacy (hyperbolic classes via cyclic equivalence of RL words, finite
// order via reduction of the fixed-point form, parabolic via eigenvector
// normalization).

namespace goeritz {

struct Mat2 {
  long long a = 1, b = 0, c = 0, d = 1;

  bool operator==(const Mat2&) const = default;
  long long trace() const { return a + d; }
  long long det() const { return a * d - b * c; }
  std::string to_string() const;
};

Mat2 m_mul(const Mat2& x, const Mat2& y);
Mat2 m_inv(const Mat2& m);  // requires det 1
Mat2 m_neg(const Mat2& m);
Mat2 m_pow(const Mat2& m, long long n);

// Reduced fraction p/q with q >= 0; (1,0) encodes the slope at infinity.
struct Slope {
  long long p = 1, q = 0;

  bool operator==(const Slope&) const = default;
  bool operator<(const Slope& o) const;
  bool is_infinity() const { return q == 0; }
  std::string to_string() const;
};

Slope make_slope(long long p, long long q);      // reduces and normalizes sign
Slope parse_slope(const std::string& text);      // "p/q", "p", or "inf"
Slope apply(const Mat2& m, const Slope& s);      // projective column action

// Exact conjugacy in SL2(Z). Returns a conjugator u with u m1 u^-1 = m2.
std::optional<Mat2> sl2_conjugacy(const Mat2& m1, const Mat2& m2);

// Test-support oracle: search conjugators with |entries| <= bound.
std::optional<Mat2> sl2_conjugacy_brute(const Mat2& m1, const Mat2& m2, long long bound);

// RL decomposition of a hyperbolic conjugacy class representative with
// trace >= 3 (R = [[1,1],[0,1]], L = [[1,0],[1,1]]). Also returns the
// conjugator u with u m u^-1 = product of the word.
struct RLWord {
  std::string word;  // over {'R','L'}
  Mat2 conjugator;
};
RLWord hyperbolic_rl_word(const Mat2& m);

}  // namespace goeritz
