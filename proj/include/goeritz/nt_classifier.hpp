#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "goeritz/goeritz_group.hpp"

// Nielsen-Thurston classification of Goeritz mapping classes: an element is
// pseudo-Anosov exactly when it is not conjugate into any of
//
//   DiskStab   = <alpha, beta, gamma delta>           (primitive-disk stabilizer)
//   SphereStab = <alpha, beta, gamma> = A             (reducing-sphere stabilizer)
//   PantsStab  = <alpha, gamma, delta> = B            (pants-decomposition stabilizer)
//   Fig8Stab   = <alpha, beta delta beta^-1 delta, gamma delta>  (figure-8 knot stabilizer)
//
// All four exclusion tests here are exact and certificate-producing; the
// Unknown verdict exists as an honest outcome for budget exhaustion but is
// not reachable with the default budgets.

namespace goeritz {

enum class SubgroupId : std::uint8_t { DiskStab, SphereStab, PantsStab, Fig8Stab };

std::string subgroup_name(SubgroupId id);

// Membership test for DiskStab = <alpha, beta, gamma delta>, exact.
//
// Writing p = gamma delta, every element of the subgroup is
// alpha^x t_1 ... t_m with factors alternating beta^n and p. Pushing the
// normal form through shows these are exactly the normal forms whose
// gamma bit equals the number of delta syllables mod 2 and whose delta
// exponents, read right to left, are 1, 2, 1, 2, ...
// On success returns the element rewritten as a word in {a, b, B} and "gd".
std::optional<std::string> disk_stab_express(const NormalForm& g);
bool disk_stab_member(const NormalForm& g);

// Membership in Fig8Stab: elements are alpha^x q^m p^e with
// q = beta delta beta^-1 delta and p = gamma delta.
struct Fig8Expression {
  int alpha = 0;
  long long q_exp = 0;
  int p_exp = 0;
};
std::optional<Fig8Expression> fig8_express(const NormalForm& g);
bool fig8_member(const NormalForm& g);

bool sphere_stab_member(const NormalForm& g);  // vertex group A
bool pants_stab_member(const NormalForm& g);   // vertex group B
bool subgroup_member(SubgroupId id, const NormalForm& g);

// --- conjugation tests -------------------------------------------------------

struct VertexConjugation {
  NormalForm conjugator;  // k with k g k^-1 = element
  char vertex;            // 'A' or 'B'
  NormalForm element;
};

// Some iff the cyclic syllable length of g is <= 1.
std::optional<VertexConjugation> conjugate_into_vertex(const NormalForm& g);

struct Fig8Decision {
  bool yes = false;
  std::optional<NormalForm> conjugator;  // k g k^-1 in Fig8Stab
  std::string reason;                    // exclusion evidence when no
};

// Exact decision for hyperbolic g: infinite-order elements of Fig8Stab are
// alpha^x q^m (m != 0) with tree translation length 4|m|, so at most four
// candidates, each settled by is_conjugate. Throws on elliptic input.
Fig8Decision conjugate_into_fig8(const NormalForm& g);

enum class DiskStabAnswer : std::uint8_t { Yes, No, Unknown };

struct DiskStabDecision {
  DiskStabAnswer answer = DiskStabAnswer::Unknown;
  std::optional<NormalForm> conjugator;  // Yes: k g k^-1 in DiskStab
  std::optional<std::string> expression; // Yes: the conjugate as a DiskStab word
  std::string reason;                    // No: exclusion evidence
  std::size_t candidates_checked = 0;
};

// Exact for hyperbolic g: an S3-quotient filter (a 3-cycle image excludes
// conjugacy into DiskStab outright) followed by a scan of the full
// rotation x edge-conjugation orbit of the cyclic core against the
// membership pattern. The orbit is complete for cyclically reduced
// elements, so a clean scan is an exact No. budget caps the orbit size;
// exceeding it yields Unknown (not reachable at default settings).
DiskStabDecision conjugate_into_disk_stab(const NormalForm& g, std::size_t budget = 1u << 20);

// --- classifier ----------------------------------------------------------------

enum class VerdictType : std::uint8_t { FiniteOrder, Reducible, PseudoAnosov, Unknown };

struct Evidence {
  std::string vertex;     // why g is not conjugate into a vertex group
  std::string fig8;       // why not into Fig8Stab
  std::string disk_stab;  // why not into DiskStab
};

struct Verdict {
  VerdictType type = VerdictType::Unknown;
  std::optional<long long> order;          // FiniteOrder
  std::optional<SubgroupId> subgroup;      // Reducible
  std::optional<NormalForm> conjugator;    // certificate: k g k^-1 in subgroup/vertex
  std::optional<std::string> crs_label;    // descriptive reduction-system kind
  std::optional<Evidence> evidence;        // PseudoAnosov
  std::optional<std::size_t> budget_spent; // Unknown

  bool definitive() const { return type != VerdictType::Unknown; }
};

std::string verdict_type_name(VerdictType t);

Verdict classify(const NormalForm& g, std::size_t budget = 1u << 20);
Verdict classify_word(const GoeritzWord& w, std::size_t budget = 1u << 20);

// --- subgroup scans --------------------------------------------------------------

struct ScanEntry {
  std::string word;  // word in the given generators, 1-based letters g1,G1,...
  GoeritzWord expanded;
  Verdict verdict;
};

struct ScanReport {
  std::size_t total = 0;
  std::map<VerdictType, std::size_t> counts;
  std::vector<ScanEntry> exceptional;  // every non-pseudo-Anosov hit
  double unknown_rate = 0.0;
};

// Classify every nonempty freely reduced word of length <= maxlen in the
// given generators and their inverses. Generators are Goeritz words.
ScanReport scan_subgroup(const std::vector<GoeritzWord>& generators, std::size_t maxlen,
                         std::size_t budget = 1u << 20, std::size_t max_words = 2'000'000);

}  // namespace goeritz
