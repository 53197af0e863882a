#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "goeritz/sl2.hpp"

// Recognizer for genus-1 fibered knots from a mapping-class word on the
// once-punctured torus. The double handlebody glued along phi is S^3 exactly
// when phi is conjugate to one of three model classes; otherwise the first
// homology or the Casson invariant obstructs.
//
// Letters: t = T_a, T = T_a^-1, u = T_b, U = T_b^-1, z = boundary twist,
// Z = its inverse. On homology T_a = [[1,1],[0,1]], T_b = [[1,0],[-1,1]],
// and the boundary twist acts trivially with (T_a T_b)^6 = T_boundary.

namespace goeritz {

using MonodromyWord = std::string;

MonodromyWord parse_monodromy_word(std::string_view text);

Mat2 mcg_matrix(const MonodromyWord& w);

// Exponent sum: t, u count +-1 and z counts +-12.
long long twist_exponent_sum(const MonodromyWord& w);

enum class KnotModel { Figure8, Trefoil, MirrorTrefoil };

Mat2 model_matrix(KnotModel m);
long long model_exponent_sum(KnotModel m);
std::string model_name(KnotModel m);

// The unique n with w conjugate to model * T_boundary^n, assuming the
// homology matrices are conjugate. Throws std::invalid_argument when the
// exponent-sum difference is not divisible by 12 (matrix/model mismatch).
long long central_exponent(const MonodromyWord& w, KnotModel model);

// |2 - trace| = 1, the first-homology test for the glued manifold.
bool is_homology_sphere(const MonodromyWord& w);

// |n| * |second derivative of the Alexander polynomial at 1| / 2.
// Figure-8: Delta = 3 - x - 1/x; trefoil: Delta = x + 1/x - 1. Both give
// |Delta''(1)| = 2, so the obstruction is |n|.
long long casson_obstruction(KnotModel knot, long long n);

enum class RecognitionKind { Figure8Knot, TrefoilClass, MirrorTrefoilClass, NotS3 };
enum class NotS3Reason { None, Homology, Casson };

struct RecognitionResult {
  RecognitionKind kind = RecognitionKind::NotS3;
  NotS3Reason reason = NotS3Reason::None;
  long long trace = 0;
  std::optional<long long> central_twist;  // Casson case
  std::optional<long long> casson_magnitude;
};

std::string recognition_kind_name(RecognitionKind k);

// Full pipeline: homology test, SL2(Z) conjugacy against the three models,
// central exponent, Casson obstruction. A homology sphere matching no model
// raises std::logic_error (unreachable; guards the trace argument).
RecognitionResult recognize(const MonodromyWord& w);

}  // namespace goeritz
