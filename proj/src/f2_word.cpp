#include "goeritz/f2_word.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace goeritz {

bool f2_is_letter(char c) { return c == 'x' || c == 'X' || c == 'y' || c == 'Y'; }

char f2_inverse_letter(char c) {
  switch (c) {
    case 'x': return 'X';
    case 'X': return 'x';
    case 'y': return 'Y';
    case 'Y': return 'y';
  }
  throw std::invalid_argument("not an F2 letter");
}

int f2_letter_rank(char c) {
  switch (c) {
    case 'x': return 0;
    case 'X': return 1;
    case 'y': return 2;
    case 'Y': return 3;
  }
  throw std::invalid_argument("not an F2 letter");
}

bool CyclicF2Word::operator<(const CyclicF2Word& o) const {
  if (letters.size() != o.letters.size()) return letters.size() < o.letters.size();
  return std::lexicographical_compare(
      letters.begin(), letters.end(), o.letters.begin(), o.letters.end(),
      [](char a, char b) { return f2_letter_rank(a) < f2_letter_rank(b); });
}

F2Word f2_reduce(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    char c = raw[i];
    if (c == ' ' || c == '\t') continue;
    if (!f2_is_letter(c))
      throw std::invalid_argument("unknown F2 letter '" + std::string(1, c) +
                                  "' at position " + std::to_string(i));
    if (!out.empty() && out.back() == f2_inverse_letter(c))
      out.pop_back();
    else
      out.push_back(c);
  }
  return F2Word{std::move(out)};
}

F2Word f2_inverse(const F2Word& w) {
  std::string out;
  out.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.push_back(f2_inverse_letter(*it));
  return F2Word{std::move(out)};
}

F2Word f2_concat(const F2Word& a, const F2Word& b) {
  return f2_reduce(a.letters + b.letters);
}

static std::string least_rotation(const std::string& s) {
  if (s.size() < 2) return s;
  std::string best = s;
  std::string cur = s;
  for (std::size_t i = 1; i < s.size(); ++i) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    CyclicF2Word a{cur}, b{best};
    if (a < b) best = cur;
  }
  return best;
}

std::pair<CyclicF2Word, F2Word> f2_cyclic_reduce(const F2Word& w) {
  std::string core = w.letters;
  std::string conj;
  while (core.size() >= 2 && core.front() == f2_inverse_letter(core.back())) {
    conj.push_back(core.front());
    core = core.substr(1, core.size() - 2);
  }
  // Canonical rotation; the rotated-off prefix joins the conjugator:
  // u = r * u_canon * r^-1 where r is the prefix of length k.
  if (core.size() >= 2) {
    std::string canon = least_rotation(core);
    if (canon != core) {
      // locate a rotation index realizing canon
      std::string cur = core;
      for (std::size_t i = 1; i < core.size(); ++i) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur == canon) {
          conj += core.substr(0, i);
          break;
        }
      }
      core = canon;
    }
  }
  return {CyclicF2Word{core}, F2Word{conj}};
}

std::pair<long long, long long> f2_abelianize(const F2Word& w) {
  long long p = 0, q = 0;
  for (char c : w.letters) {
    if (c == 'x') ++p;
    else if (c == 'X') --p;
    else if (c == 'y') ++q;
    else --q;
  }
  return {p, q};
}

F2Word f2_apply_move(const WhiteheadMove& m, const F2Word& w) {
  std::string out;
  for (char c : w.letters) {
    switch (c) {
      case 'x': out += m.image_x; break;
      case 'X': out += f2_inverse(F2Word{m.image_x}).letters; break;
      case 'y': out += m.image_y; break;
      case 'Y': out += f2_inverse(F2Word{m.image_y}).letters; break;
    }
  }
  return f2_reduce(out);
}

const std::vector<WhiteheadMove>& whitehead_moves() {
  static const std::vector<WhiteheadMove> moves = {
      // one-sided multiplier moves on x1
      {"xy", "y", "x->xy"},
      {"xY", "y", "x->xY"},
      {"yx", "y", "x->yx"},
      {"Yx", "y", "x->Yx"},
      // one-sided multiplier moves on x2
      {"x", "yx", "y->yx"},
      {"x", "yX", "y->yX"},
      {"x", "xy", "y->xy"},
      {"x", "Xy", "y->Xy"},
      // conjugation-type moves
      {"Yxy", "y", "x->Yxy"},
      {"yxY", "y", "x->yxY"},
      {"x", "Xyx", "y->Xyx"},
      {"x", "xyX", "y->xyX"},
  };
  return moves;
}

static std::size_t cyclic_length(const F2Word& w) {
  return f2_cyclic_reduce(w).first.letters.size();
}

PrimitivityResult f2_is_primitive(const F2Word& w) {
  PrimitivityResult res;
  CyclicF2Word core = f2_cyclic_reduce(w).first;
  if (core.letters.empty()) {
    res.primitive = false;
    res.obstruction = PrimitivityObstruction::NonUnimodularAbelianization;
    return res;
  }
  F2Word cur{core.letters};
  const auto& moves = whitehead_moves();
  while (cur.letters.size() > 1) {
    bool reduced = false;
    for (std::size_t i = 0; i < moves.size(); ++i) {
      F2Word img = f2_apply_move(moves[i], cur);
      std::size_t len = cyclic_length(img);
      if (len < cur.letters.size()) {
        cur = F2Word{f2_cyclic_reduce(img).first.letters};
        res.certificate.push_back(i);
        reduced = true;
        break;
      }
    }
    if (!reduced) break;
  }
  if (cur.letters.size() == 1) {
    res.primitive = true;
    return res;
  }
  res.primitive = false;
  auto [p, q] = f2_abelianize(F2Word{core.letters});
  if (std::gcd(std::abs(p), std::abs(q)) != 1) {
    res.obstruction = PrimitivityObstruction::NonUnimodularAbelianization;
  } else {
    bool hx = core.letters.find('x') != std::string::npos;
    bool hX = core.letters.find('X') != std::string::npos;
    bool hy = core.letters.find('y') != std::string::npos;
    bool hY = core.letters.find('Y') != std::string::npos;
    if ((hx && hX) || (hy && hY))
      res.obstruction = PrimitivityObstruction::MixedSignLetterPair;
    else
      res.obstruction = PrimitivityObstruction::ReductionStuck;
  }
  return res;
}

std::string christoffel_word(long long a, long long b) {
  if (a < 0 || b < 0 || (a == 0 && b == 0)) throw std::invalid_argument("bad Christoffel pair");
  if (std::gcd(a, b) != 1) throw std::invalid_argument("Christoffel pair must be coprime");
  if (a == 0) return "y";
  if (b == 0) return "x";
  // lower Christoffel word of slope b/a: step pattern of the lattice path
  std::string w;
  long long n = a + b;
  for (long long k = 1; k <= n; ++k)
    w.push_back((k * b) / n == ((k - 1) * b) / n ? 'x' : 'y');
  return w;
}

std::set<CyclicF2Word> f2_primitive_oracle(int maxlen) {
  constexpr int kMaxOracleLen = 12;
  if (maxlen > kMaxOracleLen) throw std::invalid_argument("primitive_oracle limit exceeded");
  std::set<CyclicF2Word> out;
  if (maxlen < 1) return out;

  // signed generator permutations acting on letters
  struct LetterMap {
    char x, y;  // images of 'x' and 'y'; capitals map to the inverses
  };
  const LetterMap maps[8] = {{'x', 'y'}, {'X', 'y'}, {'x', 'Y'}, {'X', 'Y'},
                             {'y', 'x'}, {'Y', 'x'}, {'y', 'X'}, {'Y', 'X'}};
  auto apply_map = [](const LetterMap& m, const std::string& s) {
    std::string t;
    t.reserve(s.size());
    for (char c : s) {
      switch (c) {
        case 'x': t.push_back(m.x); break;
        case 'X': t.push_back(f2_inverse_letter(m.x)); break;
        case 'y': t.push_back(m.y); break;
        case 'Y': t.push_back(f2_inverse_letter(m.y)); break;
      }
    }
    return t;
  };

  for (long long a = 0; a <= maxlen; ++a) {
    for (long long b = 0; b <= maxlen; ++b) {
      if (a + b < 1 || a + b > maxlen) continue;
      if (std::gcd(a, b) != 1) continue;
      std::string c = christoffel_word(a, b);
      for (const auto& m : maps) {
        F2Word img = f2_reduce(apply_map(m, c));
        out.insert(f2_cyclic_reduce(img).first);
      }
    }
  }
  return out;
}

}  // namespace goeritz
