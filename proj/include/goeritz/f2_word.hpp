#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Words in the rank-2 free group F2 = <x1, x2>, with the letter encoding
//   'x' = x1, 'X' = x1^-1, 'y' = x2, 'Y' = x2^-1
// and a primitivity test by length-reducing automorphisms, certified either
// by a reduction sequence down to a single letter or by an obstruction.

namespace goeritz {

// Freely reduced word. The empty string is the identity.
struct F2Word {
  std::string letters;

  bool operator==(const F2Word&) const = default;
  auto operator<=>(const F2Word&) const = default;
};

// Freely and cyclically reduced word stored in its canonical rotation,
// the lexicographically least one under the letter order x < X < y < Y.
struct CyclicF2Word {
  std::string letters;

  bool operator==(const CyclicF2Word&) const = default;
  bool operator<(const CyclicF2Word& o) const;
};

char f2_inverse_letter(char c);
bool f2_is_letter(char c);

// Rank of a letter in the order x < X < y < Y.
int f2_letter_rank(char c);

// Free reduction. Throws std::invalid_argument on a symbol outside xXyY.
F2Word f2_reduce(std::string_view raw);

F2Word f2_inverse(const F2Word& w);
F2Word f2_concat(const F2Word& a, const F2Word& b);

// w = conjugator * core * conjugator^-1 with core cyclically reduced.
std::pair<CyclicF2Word, F2Word> f2_cyclic_reduce(const F2Word& w);

// Exponent sums (sum over x1-letters, sum over x2-letters).
std::pair<long long, long long> f2_abelianize(const F2Word& w);

// One length-reducing move: an automorphism of F2 given by the images of
// x1 and x2 (as reduced words over xXyY).
struct WhiteheadMove {
  std::string image_x;  // image of x1
  std::string image_y;  // image of x2
  std::string name;
};

// The fixed table of candidate moves used by the reduction.
const std::vector<WhiteheadMove>& whitehead_moves();

// Apply a move to a word (substitute and freely reduce).
F2Word f2_apply_move(const WhiteheadMove& m, const F2Word& w);

enum class PrimitivityObstruction : std::uint8_t {
  None,
  NonUnimodularAbelianization,
  MixedSignLetterPair,
  ReductionStuck,
};

struct PrimitivityResult {
  bool primitive = false;
  // Indices into whitehead_moves(); replaying them on the cyclic core
  // strictly decreases cyclic length at each step and ends at length 1.
  std::vector<std::size_t> certificate;
  PrimitivityObstruction obstruction = PrimitivityObstruction::None;
};

// True iff the cyclic reduction of w is part of a free basis of F2.
PrimitivityResult f2_is_primitive(const F2Word& w);

// Independent oracle: all primitive cyclic words of length <= maxlen,
// enumerated from Christoffel words over coprime exponent pairs and the
// eight signed generator permutations. Test cross-validation only.
// Throws std::invalid_argument if maxlen exceeds the configured limit (12).
std::set<CyclicF2Word> f2_primitive_oracle(int maxlen);

// Lower Christoffel word with a letters 'x' and b letters 'y', gcd(a,b)=1.
std::string christoffel_word(long long a, long long b);

}  // namespace goeritz
