#pragma once

#include <string>
#include <vector>

namespace goeritz {

struct CheckResult {
  std::string name;
  bool ok = false;
};

// Presentation validation: the eight relators, the gamma-beta twist
// identity, the figure-8 inversion identity, centrality of alpha, the
// free-product normal-form property of <beta, delta> up to syllable length
// 8, the Z2 x Z structure of <alpha, beta>, and randomized soundness of
// multiplication/inversion and the two quotient homomorphisms.
std::vector<CheckResult> presentation_selfcheck(unsigned seed = 12345, int random_words = 500);

}  // namespace goeritz
