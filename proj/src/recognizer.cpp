#include "goeritz/recognizer.hpp"

#include <cmath>
#include <stdexcept>

namespace goeritz {

MonodromyWord parse_monodromy_word(std::string_view text) {
  MonodromyWord w;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == ' ' || c == '\t') continue;
    if (c == 't' || c == 'T' || c == 'u' || c == 'U' || c == 'z' || c == 'Z')
      w.push_back(c);
    else
      throw std::invalid_argument("unknown twist letter '" + std::string(1, c) +
                                  "' at position " + std::to_string(i));
  }
  return w;
}

namespace {
const Mat2 kTa{1, 1, 0, 1};
const Mat2 kTb{1, 0, -1, 1};
}  // namespace

Mat2 mcg_matrix(const MonodromyWord& w) {
  Mat2 m;
  for (char c : w) {
    switch (c) {
      case 't': m = m_mul(m, kTa); break;
      case 'T': m = m_mul(m, m_inv(kTa)); break;
      case 'u': m = m_mul(m, kTb); break;
      case 'U': m = m_mul(m, m_inv(kTb)); break;
      case 'z':
      case 'Z': break;  // boundary twist is homologically trivial
      default: throw std::invalid_argument("bad twist letter");
    }
  }
  return m;
}

long long twist_exponent_sum(const MonodromyWord& w) {
  long long s = 0;
  for (char c : w) {
    switch (c) {
      case 't': case 'u': s += 1; break;
      case 'T': case 'U': s -= 1; break;
      case 'z': s += 12; break;
      case 'Z': s -= 12; break;
    }
  }
  return s;
}

Mat2 model_matrix(KnotModel m) {
  switch (m) {
    case KnotModel::Figure8: return m_mul(kTa, m_inv(kTb));        // [[2,1],[1,1]]
    case KnotModel::Trefoil: return m_mul(kTa, kTb);               // [[0,1],[-1,1]]
    case KnotModel::MirrorTrefoil: return m_inv(m_mul(kTa, kTb));
  }
  return {};
}

long long model_exponent_sum(KnotModel m) {
  switch (m) {
    case KnotModel::Figure8: return 0;
    case KnotModel::Trefoil: return 2;
    case KnotModel::MirrorTrefoil: return -2;
  }
  return 0;
}

std::string model_name(KnotModel m) {
  switch (m) {
    case KnotModel::Figure8: return "figure8";
    case KnotModel::Trefoil: return "trefoil";
    case KnotModel::MirrorTrefoil: return "mirror_trefoil";
  }
  return "?";
}

long long central_exponent(const MonodromyWord& w, KnotModel model) {
  long long diff = twist_exponent_sum(w) - model_exponent_sum(model);
  if (diff % 12 != 0)
    throw std::invalid_argument("exponent sum difference " + std::to_string(diff) +
                                " is not divisible by 12; word does not match model");
  return diff / 12;
}

bool is_homology_sphere(const MonodromyWord& w) {
  return std::llabs(2 - mcg_matrix(w).trace()) == 1;
}

long long casson_obstruction(KnotModel knot, long long n) {
  (void)knot;  // |Delta''(1)| = 2 for both genus-1 fibered knots
  return std::llabs(n) * 2 / 2;
}

std::string recognition_kind_name(RecognitionKind k) {
  switch (k) {
    case RecognitionKind::Figure8Knot: return "figure8_knot";
    case RecognitionKind::TrefoilClass: return "trefoil";
    case RecognitionKind::MirrorTrefoilClass: return "mirror_trefoil";
    case RecognitionKind::NotS3: return "not_s3";
  }
  return "?";
}

RecognitionResult recognize(const MonodromyWord& w) {
  RecognitionResult res;
  Mat2 m = mcg_matrix(w);
  res.trace = m.trace();
  if (std::llabs(2 - res.trace) != 1) {
    res.kind = RecognitionKind::NotS3;
    res.reason = NotS3Reason::Homology;
    return res;
  }
  for (KnotModel model :
       {KnotModel::Figure8, KnotModel::Trefoil, KnotModel::MirrorTrefoil}) {
    if (!sl2_conjugacy(m, model_matrix(model))) continue;
    long long n = central_exponent(w, model);
    if (n == 0) {
      switch (model) {
        case KnotModel::Figure8: res.kind = RecognitionKind::Figure8Knot; break;
        case KnotModel::Trefoil: res.kind = RecognitionKind::TrefoilClass; break;
        case KnotModel::MirrorTrefoil: res.kind = RecognitionKind::MirrorTrefoilClass; break;
      }
      return res;
    }
    res.kind = RecognitionKind::NotS3;
    res.reason = NotS3Reason::Casson;
    res.central_twist = n;
    res.casson_magnitude = casson_obstruction(model, n);
    return res;
  }
  throw std::logic_error("homology sphere outside the recognition table");
}

}  // namespace goeritz
