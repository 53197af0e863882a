#include "goeritz/goeritz_group.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <queue>
#include <stdexcept>

namespace goeritz {

GoeritzWord parse_goeritz_word(std::string_view text) {
  GoeritzWord w;
  w.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n') continue;
    if (c == 'a' || c == 'b' || c == 'B' || c == 'g' || c == 'd' || c == 'D')
      w.push_back(c);
    else
      throw std::invalid_argument("unknown generator '" + std::string(1, c) +
                                  "' at position " + std::to_string(i));
  }
  return w;
}

void NormalForm::append_alpha() { a_ ^= 1; }

void NormalForm::append_gamma() {
  // gamma travels from the right end to the head:
  // passing beta^n emits alpha^n, passing delta^d flips d -> 3-d.
  for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) {
    if (it->gen == 'd')
      it->exp = 3 - it->exp;
    else
      a_ ^= static_cast<std::uint8_t>(it->exp & 1);
  }
  g_ ^= 1;
}

void NormalForm::append_beta(long long n) {
  if (n == 0) return;
  if (!syl_.empty() && syl_.back().gen == 'b') {
    syl_.back().exp += n;
    if (syl_.back().exp == 0) syl_.pop_back();
  } else {
    syl_.push_back({'b', n});
  }
}

void NormalForm::append_delta(long long d) {
  d = ((d % 3) + 3) % 3;
  if (d == 0) return;
  if (!syl_.empty() && syl_.back().gen == 'd') {
    syl_.back().exp = (syl_.back().exp + d) % 3;
    if (syl_.back().exp == 0) syl_.pop_back();
  } else {
    syl_.push_back({'d', d});
  }
}

void NormalForm::append_letter(char c) {
  switch (c) {
    case 'a': append_alpha(); break;
    case 'g': append_gamma(); break;
    case 'b': append_beta(1); break;
    case 'B': append_beta(-1); break;
    case 'd': append_delta(1); break;
    case 'D': append_delta(2); break;
    default: throw std::invalid_argument("bad generator letter");
  }
}

NormalForm NormalForm::from_word(const GoeritzWord& w) {
  NormalForm nf;
  for (char c : w) nf.append_letter(c);
  return nf;
}

NormalForm NormalForm::from_letter(char c) {
  NormalForm nf;
  nf.append_letter(c);
  return nf;
}

std::string NormalForm::to_word() const {
  std::string out;
  if (a_) out.push_back('a');
  if (g_) out.push_back('g');
  for (const auto& s : syl_) {
    if (s.gen == 'b') {
      char c = s.exp > 0 ? 'b' : 'B';
      for (long long i = 0; i < std::abs(s.exp); ++i) out.push_back(c);
    } else {
      for (long long i = 0; i < s.exp; ++i) out.push_back('d');
    }
  }
  return out;
}

bool NormalForm::operator<(const NormalForm& o) const {
  if (a_ != o.a_) return a_ < o.a_;
  if (g_ != o.g_) return g_ < o.g_;
  if (syl_.size() != o.syl_.size()) return syl_.size() < o.syl_.size();
  for (std::size_t i = 0; i < syl_.size(); ++i) {
    if (syl_[i].gen != o.syl_[i].gen) return syl_[i].gen < o.syl_[i].gen;
    if (syl_[i].exp != o.syl_[i].exp) return syl_[i].exp < o.syl_[i].exp;
  }
  return false;
}

NormalForm nf_mul(const NormalForm& u, const NormalForm& v) {
  NormalForm r = u;
  if (v.head_alpha()) r.append_alpha();
  if (v.head_gamma()) r.append_gamma();
  for (const auto& s : v.syllables()) {
    if (s.gen == 'b')
      r.append_beta(s.exp);
    else
      r.append_delta(s.exp);
  }
  return r;
}

NormalForm nf_inv(const NormalForm& u) {
  NormalForm r;
  const auto& syl = u.syllables();
  for (auto it = syl.rbegin(); it != syl.rend(); ++it) {
    if (it->gen == 'b')
      r.append_beta(-it->exp);
    else
      r.append_delta(3 - it->exp);
  }
  if (u.head_gamma()) r.append_gamma();
  if (u.head_alpha()) r.append_alpha();
  return r;
}

NormalForm nf_conj(const NormalForm& k, const NormalForm& g) {
  return nf_mul(nf_mul(k, g), nf_inv(k));
}

NormalForm nf_pow(const NormalForm& g, long long n) {
  NormalForm base = n < 0 ? nf_inv(g) : g;
  long long m = std::abs(n);
  NormalForm r;
  for (long long i = 0; i < m; ++i) r = nf_mul(r, base);
  return r;
}

NormalForm normal_form(const GoeritzWord& w) { return NormalForm::from_word(w); }

// ---------------------------------------------------------------------------

CyclicReduction cyclic_reduce(const NormalForm& g) {
  CyclicReduction cr{g, NormalForm::identity()};
  while (cr.core.syllables().size() >= 2 &&
         cr.core.syllables().front().gen == cr.core.syllables().back().gen) {
    // rotate off the head and first syllable: core -> u^-1 core u
    NormalForm u;
    if (cr.core.head_alpha()) u.append_alpha();
    if (cr.core.head_gamma()) u.append_gamma();
    const Syllable& s = cr.core.syllables().front();
    if (s.gen == 'b')
      u.append_beta(s.exp);
    else
      u.append_delta(s.exp);
    cr.core = nf_mul(nf_mul(nf_inv(u), cr.core), u);
    cr.conj = nf_mul(cr.conj, u);
  }
  return cr;
}

std::size_t cyclic_syllable_length(const NormalForm& g) {
  return cyclic_reduce(g).core.syllables().size();
}

Order order_of(const NormalForm& g) {
  NormalForm core = cyclic_reduce(g).core;
  const auto& syl = core.syllables();
  if (syl.size() >= 2) return {false, 0};
  if (syl.size() == 1 && syl[0].gen == 'b') return {false, 0};
  if (core.is_identity()) return {true, 1};
  if (syl.empty()) return {true, 2};  // alpha, gamma, alpha gamma
  // B-elliptic alpha^x gamma^y delta^d, d != 0
  if (core.head_gamma()) return {true, 2};  // reflection, alpha bit immaterial
  return {true, core.head_alpha() ? 6 : 3};
}

// --- conjugacy -------------------------------------------------------------

namespace {

const std::array<NormalForm, 4>& edge_elements() {
  static const std::array<NormalForm, 4> c = [] {
    std::array<NormalForm, 4> arr;
    arr[0] = NormalForm::identity();
    arr[1] = NormalForm::from_letter('a');
    arr[2] = NormalForm::from_letter('g');
    arr[3] = NormalForm::from_word("ag");
    return arr;
  }();
  return c;
}

// Candidates of the rotation x edge-conjugation orbit of a cyclically
// reduced hyperbolic core, each with a witness K: candidate = K core K^-1.
struct OrbitCandidate {
  NormalForm value;
  NormalForm witness;
};

std::vector<OrbitCandidate> hyperbolic_orbit(const NormalForm& core) {
  std::vector<OrbitCandidate> out;
  NormalForm cur = core;
  NormalForm pre;  // cur = pre^-1 * core * pre
  std::size_t k = core.syllables().size();
  for (std::size_t i = 0; i < k; ++i) {
    for (const auto& c : edge_elements()) {
      OrbitCandidate cand;
      cand.value = nf_conj(c, cur);
      cand.witness = nf_mul(c, nf_inv(pre));
      out.push_back(std::move(cand));
    }
    // rotate one syllable
    NormalForm u;
    if (cur.head_alpha()) u.append_alpha();
    if (cur.head_gamma()) u.append_gamma();
    const Syllable& s = cur.syllables().front();
    if (s.gen == 'b')
      u.append_beta(s.exp);
    else
      u.append_delta(s.exp);
    cur = nf_mul(nf_mul(nf_inv(u), cur), u);
    pre = nf_mul(pre, u);
  }
  return out;
}

// class representatives for the finite-order classes: e, a, d, ad, g
NormalForm finite_class_rep(const NormalForm& core) {
  const auto& syl = core.syllables();
  if (core.head_gamma()) return NormalForm::from_letter('g');  // reflections fuse
  if (syl.empty()) {
    if (core.head_alpha()) return NormalForm::from_letter('a');
    return NormalForm::identity();
  }
  NormalForm rep;
  if (core.head_alpha()) rep.append_alpha();
  rep.append_delta(1);  // {d, dd} same class via gamma
  return rep;
}

// A-elliptic alpha^x gamma^y beta^n: conjugates are alpha^(x + m y + n v) ...
NormalForm infinite_elliptic_rep(const NormalForm& core) {
  const Syllable& s = core.syllables()[0];
  bool x_fused = core.head_gamma() || (s.exp & 1);
  NormalForm rep;
  if (!x_fused && core.head_alpha()) rep.append_alpha();
  if (core.head_gamma()) rep.append_gamma();
  rep.append_beta(s.exp);
  return rep;
}

// BFS over the conjugation orbit of g by generator letters until h is found.
// Intended for elliptic elements, whose orbits of interest are tiny.
std::optional<NormalForm> orbit_search_conjugator(const NormalForm& g, const NormalForm& h,
                                                  std::size_t max_states = 4096) {
  if (g == h) return NormalForm::identity();
  std::map<NormalForm, NormalForm> seen;  // element -> conjugator k with k g k^-1 = elt
  std::queue<NormalForm> q;
  seen[g] = NormalForm::identity();
  q.push(g);
  const char letters[] = {'a', 'b', 'B', 'g', 'd', 'D'};
  while (!q.empty() && seen.size() < max_states) {
    NormalForm cur = q.front();
    q.pop();
    const NormalForm& k_cur = seen.at(cur);
    for (char c : letters) {
      NormalForm l = NormalForm::from_letter(c);
      NormalForm img = nf_conj(l, cur);
      if (seen.count(img)) continue;
      NormalForm k = nf_mul(l, k_cur);
      if (img == h) return k;
      seen.emplace(img, std::move(k));
      q.push(img);
    }
  }
  return std::nullopt;
}

}  // namespace

CyclicClass cyclic_class(const NormalForm& g) {
  CyclicReduction cr = cyclic_reduce(g);
  CyclicClass cls;
  if (cr.core.syllables().size() >= 2) {
    auto orbit = hyperbolic_orbit(cr.core);
    const OrbitCandidate* best = &orbit[0];
    for (const auto& cand : orbit)
      if (cand.value < best->value) best = &cand;
    cls.rep = best->value;
    // g = conj core conj^-1, rep = K core K^-1  =>  g = (conj K^-1) rep (...)
    cls.witness = nf_mul(cr.conj, nf_inv(best->witness));
    return cls;
  }
  Order ord = order_of(g);
  cls.rep = ord.finite ? finite_class_rep(cr.core) : infinite_elliptic_rep(cr.core);
  // witness via conjugation-orbit search from rep to core (orbits are tiny)
  if (cr.core == cls.rep) {
    cls.witness = cr.conj;
  } else {
    auto k = orbit_search_conjugator(cls.rep, cr.core);
    assert(k.has_value());
    cls.witness = nf_mul(cr.conj, *k);
  }
  assert(nf_conj(cls.witness, cls.rep) == g);
  return cls;
}

std::optional<NormalForm> is_conjugate(const NormalForm& g, const NormalForm& h) {
  CyclicClass cg = cyclic_class(g);
  CyclicClass ch = cyclic_class(h);
  if (!(cg == ch)) return std::nullopt;
  // g = Wg rep Wg^-1, h = Wh rep Wh^-1  =>  (Wh Wg^-1) g (...)^-1 = h
  NormalForm k = nf_mul(ch.witness, nf_inv(cg.witness));
  assert(nf_conj(k, g) == h);
  return k;
}

// --- quotients ---------------------------------------------------------------

bool S3Element::is_three_cycle() const {
  return !is_identity() && perm[0] != 0 && perm[1] != 1 && perm[2] != 2;
}

bool S3Element::is_transposition() const { return !is_identity() && !is_three_cycle(); }

std::string S3Element::to_string() const {
  if (is_identity()) return "id";
  if (perm == std::array<std::uint8_t, 3>{1, 2, 0}) return "(012)";
  if (perm == std::array<std::uint8_t, 3>{2, 0, 1}) return "(021)";
  if (perm == std::array<std::uint8_t, 3>{1, 0, 2}) return "(01)";
  if (perm == std::array<std::uint8_t, 3>{0, 2, 1}) return "(12)";
  return "(02)";
}

S3Element s3_mul(const S3Element& f, const S3Element& g) {
  S3Element r;
  for (int i = 0; i < 3; ++i) r.perm[i] = f.perm[g.perm[i]];
  return r;
}

S3Element quotient_s3(const NormalForm& g) {
  const S3Element s{{1, 0, 2}};  // gamma
  const S3Element r{{1, 2, 0}};  // delta
  S3Element out;
  if (g.head_gamma()) out = s;
  for (const auto& syl : g.syllables()) {
    if (syl.gen != 'd') continue;
    S3Element d = syl.exp == 1 ? r : s3_mul(r, r);
    out = s3_mul(out, d);
  }
  return out;
}

std::pair<int, long long> abelianization(const NormalForm& g) {
  long long n = 0;
  for (const auto& s : g.syllables())
    if (s.gen == 'b') n += s.exp;
  return {g.head_gamma() ? 1 : 0, n};
}

}  // namespace goeritz
