#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Exact arithmetic in the genus-2 Goeritz group
//
//   G = A *_C B,   A = <alpha, gamma, beta>,  B = <alpha, gamma, delta>,
//                  C = <alpha, gamma> = Z2 x Z2,
//
// with the presentation
//
//   alpha^2, gamma^2, delta^3, (gamma delta)^2,
//   [alpha,beta], [alpha,gamma], [alpha,delta],
//   beta gamma beta^-1 = alpha gamma.
//
// So alpha is central, A = (Z2 x Z2) x| Z (beta swaps gamma <-> alpha gamma)
// and B = Z2 x S3. Every element has a unique normal form
//
//   alpha^x gamma^y  s_1 s_2 ... s_k
//
// where the syllables s_i strictly alternate between beta^n (n != 0) and
// delta^d (d in {1,2}), computed by the left-pushing rules
//
//   beta^n alpha = alpha beta^n        delta^d alpha = alpha delta^d
//   beta^n gamma = alpha^n gamma beta^n    delta^d gamma = gamma delta^-d
//   delta^3 = 1.
//
// Word syntax: a = alpha, b = beta, B = beta^-1, g = gamma, d = delta,
// D = delta^-1.

namespace goeritz {

struct Syllable {
  char gen;       // 'b' or 'd'
  long long exp;  // b: nonzero integer; d: 1 or 2

  bool operator==(const Syllable&) const = default;
};

// Letter string over {a,b,B,g,d,D}; alpha and gamma are involutions, so no
// capital A/G letters exist.
using GoeritzWord = std::string;

// Parse a word; whitespace is skipped. Throws std::invalid_argument with the
// offending position on any other character.
GoeritzWord parse_goeritz_word(std::string_view text);

class NormalForm {
 public:
  NormalForm() = default;

  static NormalForm identity() { return NormalForm(); }
  static NormalForm from_word(const GoeritzWord& w);
  static NormalForm from_letter(char c);

  // right multiplication by generators
  void append_alpha();
  void append_gamma();
  void append_beta(long long n);
  void append_delta(long long d);
  void append_letter(char c);

  std::uint8_t head_alpha() const { return a_; }
  std::uint8_t head_gamma() const { return g_; }
  const std::vector<Syllable>& syllables() const { return syl_; }

  bool is_identity() const { return a_ == 0 && g_ == 0 && syl_.empty(); }

  // Expanded word over {a,b,B,g,d,D}; delta^2 prints as "dd".
  std::string to_word() const;

  bool operator==(const NormalForm&) const = default;
  bool operator<(const NormalForm& o) const;

 private:
  std::uint8_t a_ = 0;
  std::uint8_t g_ = 0;
  std::vector<Syllable> syl_;
};

NormalForm nf_mul(const NormalForm& u, const NormalForm& v);
NormalForm nf_inv(const NormalForm& u);
NormalForm nf_conj(const NormalForm& k, const NormalForm& g);  // k g k^-1
NormalForm nf_pow(const NormalForm& g, long long n);
NormalForm normal_form(const GoeritzWord& w);

// ---------------------------------------------------------------------------
// Order and conjugacy

struct Order {
  bool finite = false;
  long long value = 0;  // set when finite
};

Order order_of(const NormalForm& g);

struct CyclicReduction {
  NormalForm core;  // cyclically reduced: syllable count 0, 1, or even >= 2
  NormalForm conj;  // g = conj * core * conj^-1
};

CyclicReduction cyclic_reduce(const NormalForm& g);

// Number of syllables of the cyclically reduced core.
std::size_t cyclic_syllable_length(const NormalForm& g);

// Conjugacy-class representative. Hyperbolic classes (cyclic length >= 2)
// are canonicalized over the finite orbit of syllable rotations and
// conjugation by the four edge-group elements {e, alpha, gamma, alpha gamma};
// elliptic classes use the closed-form class representatives of the vertex
// groups (with the gamma ~ alpha gamma fusion through the edge).
struct CyclicClass {
  NormalForm rep;
  // witness: element = witness * rep * witness^-1
  NormalForm witness;

  bool operator==(const CyclicClass& o) const { return rep == o.rep; }
};

CyclicClass cyclic_class(const NormalForm& g);

// Some(k) with k g k^-1 = h, or nullopt. Exact decision.
std::optional<NormalForm> is_conjugate(const NormalForm& g, const NormalForm& h);

// ---------------------------------------------------------------------------
// Quotients

struct S3Element {
  std::array<std::uint8_t, 3> perm{0, 1, 2};  // i -> perm[i]

  bool operator==(const S3Element&) const = default;
  bool is_identity() const { return perm == std::array<std::uint8_t, 3>{0, 1, 2}; }
  bool is_three_cycle() const;
  bool is_transposition() const;
  std::string to_string() const;
};

S3Element s3_mul(const S3Element& f, const S3Element& g);  // apply g, then f

// G -> S3: alpha, beta -> id; gamma -> (0 1); delta -> (0 1 2).
S3Element quotient_s3(const NormalForm& g);

// G^ab = Z2 x Z: (gamma bit, beta exponent sum); alpha and delta die.
std::pair<int, long long> abelianization(const NormalForm& g);

}  // namespace goeritz
