#include "goeritz/nt_classifier.hpp"

#include <cassert>
#include <stdexcept>

namespace goeritz {

std::string subgroup_name(SubgroupId id) {
  switch (id) {
    case SubgroupId::DiskStab: return "disk_stab";
    case SubgroupId::SphereStab: return "sphere_stab";
    case SubgroupId::PantsStab: return "pants_stab";
    case SubgroupId::Fig8Stab: return "fig8_stab";
  }
  return "?";
}

std::string verdict_type_name(VerdictType t) {
  switch (t) {
    case VerdictType::FiniteOrder: return "finite_order";
    case VerdictType::Reducible: return "reducible";
    case VerdictType::PseudoAnosov: return "pseudo_anosov";
    case VerdictType::Unknown: return "unknown";
  }
  return "?";
}

// --- membership ---------------------------------------------------------------

std::optional<std::string> disk_stab_express(const NormalForm& g) {
  const auto& syl = g.syllables();
  std::size_t m = 0;
  for (const auto& s : syl)
    if (s.gen == 'd') ++m;
  if (g.head_gamma() != (m & 1)) return std::nullopt;
  // delta exponents must read ..., 2, 1, 2, 1 ending with 1 at the right
  std::size_t seen_after = 0;  // delta syllables to the right of the current one
  for (auto it = syl.rbegin(); it != syl.rend(); ++it) {
    if (it->gen != 'd') continue;
    long long want = (seen_after % 2 == 0) ? 1 : 2;
    if (it->exp != want) return std::nullopt;
    ++seen_after;
  }
  // reconstruct: factors in order, then fix the alpha bit
  NormalForm rebuilt;
  std::string word;
  for (const auto& s : syl) {
    if (s.gen == 'b') {
      rebuilt.append_beta(s.exp);
      char c = s.exp > 0 ? 'b' : 'B';
      for (long long i = 0; i < std::abs(s.exp); ++i) word.push_back(c);
    } else {
      rebuilt.append_gamma();
      rebuilt.append_delta(1);
      word += "gd";
    }
  }
  if (rebuilt.head_alpha() != g.head_alpha()) word.insert(word.begin(), 'a');
  assert(normal_form(parse_goeritz_word(word)) == g);
  return word;
}

bool disk_stab_member(const NormalForm& g) { return disk_stab_express(g).has_value(); }

namespace {

const NormalForm& fig8_q() {
  static const NormalForm q = normal_form(parse_goeritz_word("bdBd"));
  return q;
}

const NormalForm& fig8_p() {
  static const NormalForm p = normal_form(parse_goeritz_word("gd"));
  return p;
}

}  // namespace

std::optional<Fig8Expression> fig8_express(const NormalForm& g) {
  for (int e = 0; e <= 1; ++e) {
    NormalForm base = e ? nf_mul(g, nf_inv(fig8_p())) : g;
    for (int x = 0; x <= 1; ++x) {
      NormalForm core = base;
      if (x) core.append_alpha();  // alpha central and an involution
      std::size_t k = core.syllables().size();
      if (k % 4 != 0) continue;
      long long mag = static_cast<long long>(k / 4);
      for (long long m : {mag, -mag}) {
        if (nf_pow(fig8_q(), m) == core) return Fig8Expression{x, m, e};
        if (m == 0) break;
      }
    }
  }
  return std::nullopt;
}

bool fig8_member(const NormalForm& g) { return fig8_express(g).has_value(); }

bool sphere_stab_member(const NormalForm& g) {
  const auto& syl = g.syllables();
  return syl.empty() || (syl.size() == 1 && syl[0].gen == 'b');
}

bool pants_stab_member(const NormalForm& g) {
  const auto& syl = g.syllables();
  return syl.empty() || (syl.size() == 1 && syl[0].gen == 'd');
}

bool subgroup_member(SubgroupId id, const NormalForm& g) {
  switch (id) {
    case SubgroupId::DiskStab: return disk_stab_member(g);
    case SubgroupId::SphereStab: return sphere_stab_member(g);
    case SubgroupId::PantsStab: return pants_stab_member(g);
    case SubgroupId::Fig8Stab: return fig8_member(g);
  }
  return false;
}

// --- conjugation tests -----------------------------------------------------------

std::optional<VertexConjugation> conjugate_into_vertex(const NormalForm& g) {
  CyclicReduction cr = cyclic_reduce(g);
  const auto& syl = cr.core.syllables();
  if (syl.size() >= 2) return std::nullopt;
  VertexConjugation out;
  out.conjugator = nf_inv(cr.conj);
  out.element = cr.core;
  out.vertex = (!syl.empty() && syl[0].gen == 'd') ? 'B' : 'A';
  assert(nf_conj(out.conjugator, g) == out.element);
  return out;
}

Fig8Decision conjugate_into_fig8(const NormalForm& g) {
  CyclicReduction cr = cyclic_reduce(g);
  std::size_t tau = cr.core.syllables().size();
  if (tau < 2) throw std::invalid_argument("conjugate_into_fig8 requires a hyperbolic element");
  Fig8Decision dec;
  if (tau % 4 != 0) {
    dec.yes = false;
    dec.reason = "translation length " + std::to_string(tau) +
                 " is not a positive multiple of 4";
    return dec;
  }
  long long m = static_cast<long long>(tau / 4);
  for (int x = 0; x <= 1; ++x) {
    for (long long e : {m, -m}) {
      NormalForm cand = nf_pow(fig8_q(), e);
      if (x) cand.append_alpha();
      if (auto k = is_conjugate(g, cand)) {
        dec.yes = true;
        dec.conjugator = *k;
        assert(fig8_member(nf_conj(*k, g)));
        return dec;
      }
    }
  }
  dec.yes = false;
  dec.reason = "not conjugate to alpha^x q^(+-" + std::to_string(m) +
               ") for any of the 4 candidates";
  return dec;
}

DiskStabDecision conjugate_into_disk_stab(const NormalForm& g, std::size_t budget) {
  CyclicReduction cr = cyclic_reduce(g);
  if (cr.core.syllables().size() < 2)
    throw std::invalid_argument("conjugate_into_disk_stab requires a hyperbolic element");
  DiskStabDecision dec;
  S3Element img = quotient_s3(g);
  if (img.is_three_cycle()) {
    dec.answer = DiskStabAnswer::No;
    dec.reason = "S3 image " + img.to_string() +
                 " is a 3-cycle; the subgroup's image is {id, (12)} up to conjugacy";
    return dec;
  }
  // full rotation x edge-conjugation orbit of the cyclic core
  std::size_t k = cr.core.syllables().size();
  if (4 * k > budget) {
    dec.answer = DiskStabAnswer::Unknown;
    dec.candidates_checked = 0;
    return dec;
  }
  static const char* edge_words[4] = {"", "a", "g", "ag"};
  NormalForm cur = cr.core;
  NormalForm pre;  // cur = pre^-1 core pre
  for (std::size_t i = 0; i < k; ++i) {
    for (const char* ew : edge_words) {
      NormalForm c = normal_form(parse_goeritz_word(ew));
      NormalForm cand = nf_conj(c, cur);
      ++dec.candidates_checked;
      if (auto expr = disk_stab_express(cand)) {
        // cand = (c pre^-1 conj^-1) g (...)^-1
        NormalForm witness = nf_mul(c, nf_mul(nf_inv(pre), nf_inv(cr.conj)));
        assert(nf_conj(witness, g) == cand);
        dec.answer = DiskStabAnswer::Yes;
        dec.conjugator = witness;
        dec.expression = *expr;
        return dec;
      }
    }
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
  dec.answer = DiskStabAnswer::No;
  dec.reason = "no element of the full rotation/edge-conjugation orbit (" +
               std::to_string(dec.candidates_checked) +
               " candidates) lies in the subgroup";
  return dec;
}

// --- classifier ---------------------------------------------------------------------

Verdict classify(const NormalForm& g, std::size_t budget) {
  Verdict v;
  auto vertex = conjugate_into_vertex(g);
  if (vertex) {
    Order ord = order_of(g);
    if (ord.finite) {
      v.type = VerdictType::FiniteOrder;
      v.order = ord.value;
      v.conjugator = vertex->conjugator;
      return v;
    }
    // infinite-order elliptic: fixes the A-vertex, i.e. reducing-sphere stabilizer
    v.type = VerdictType::Reducible;
    v.subgroup = SubgroupId::SphereStab;
    v.conjugator = vertex->conjugator;
    v.crs_label = "reducing curve";
    assert(vertex->vertex == 'A');
    return v;
  }

  Fig8Decision f8 = conjugate_into_fig8(g);
  if (f8.yes) {
    v.type = VerdictType::Reducible;
    v.subgroup = SubgroupId::Fig8Stab;
    v.conjugator = f8.conjugator;
    v.crs_label = "figure-8 curve";
    return v;
  }

  DiskStabDecision ds = conjugate_into_disk_stab(g, budget);
  if (ds.answer == DiskStabAnswer::Yes) {
    v.type = VerdictType::Reducible;
    v.subgroup = SubgroupId::DiskStab;
    v.conjugator = ds.conjugator;
    v.crs_label = "weakly reducing pair";
    return v;
  }
  if (ds.answer == DiskStabAnswer::No) {
    v.type = VerdictType::PseudoAnosov;
    Evidence e;
    e.vertex = "cyclic syllable length " + std::to_string(cyclic_syllable_length(g)) +
               " >= 2 excludes the vertex stabilizers";
    e.fig8 = f8.reason;
    e.disk_stab = ds.reason;
    v.evidence = e;
    return v;
  }
  v.type = VerdictType::Unknown;
  v.budget_spent = budget;
  Evidence e;
  e.vertex = "excluded exactly";
  e.fig8 = f8.reason;
  e.disk_stab = "inconclusive: orbit size exceeds the budget";
  v.evidence = e;
  return v;
}

Verdict classify_word(const GoeritzWord& w, std::size_t budget) {
  return classify(normal_form(w), budget);
}

// --- scans -------------------------------------------------------------------------

ScanReport scan_subgroup(const std::vector<GoeritzWord>& generators, std::size_t maxlen,
                         std::size_t budget, std::size_t max_words) {
  if (generators.empty()) throw std::invalid_argument("scan_subgroup: no generators");
  ScanReport rep;
  const std::size_t n = generators.size();
  std::vector<NormalForm> gens;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    gens.push_back(normal_form(generators[i]));
    names.push_back("g" + std::to_string(i + 1));
  }
  // symbols 0..n-1 = generators, n..2n-1 = inverses
  std::vector<int> word;
  std::size_t unknowns = 0;

  auto symbol_inverse = [n](int s) { return s < static_cast<int>(n) ? s + static_cast<int>(n)
                                                                    : s - static_cast<int>(n); };

  auto emit = [&](const std::vector<int>& symbols) {
    NormalForm g;
    std::string name;
    GoeritzWord expanded;
    for (int s : symbols) {
      bool inv = s >= static_cast<int>(n);
      std::size_t idx = inv ? s - n : s;
      g = nf_mul(g, inv ? nf_inv(gens[idx]) : gens[idx]);
      name += (inv ? names[idx] + "'" : names[idx]);
      GoeritzWord piece = generators[idx];
      if (inv) {
        GoeritzWord rev;
        for (auto it = piece.rbegin(); it != piece.rend(); ++it) {
          char c = *it;
          if (c == 'b') rev.push_back('B');
          else if (c == 'B') rev.push_back('b');
          else if (c == 'd') rev.push_back('D');
          else if (c == 'D') rev.push_back('d');
          else rev.push_back(c);  // a, g self-inverse
        }
        piece = rev;
      }
      expanded += piece;
    }
    Verdict v = classify(g, budget);
    ++rep.total;
    ++rep.counts[v.type];
    if (v.type == VerdictType::Unknown) ++unknowns;
    if (v.type == VerdictType::FiniteOrder || v.type == VerdictType::Reducible)
      rep.exceptional.push_back({name, expanded, v});
  };

  // iterative enumeration of freely reduced symbol sequences, shortlex order
  for (std::size_t len = 1; len <= maxlen; ++len) {
    std::vector<int> idx(len, 0);
    while (true) {
      bool reduced = true;
      for (std::size_t i = 1; i < len; ++i)
        if (idx[i] == symbol_inverse(idx[i - 1])) { reduced = false; break; }
      if (reduced) {
        if (rep.total >= max_words) throw std::invalid_argument("scan_subgroup: word cap exceeded");
        emit(idx);
      }
      std::size_t pos = len;
      while (pos > 0 && idx[pos - 1] == static_cast<int>(2 * n - 1)) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < len; ++i) idx[i] = 0;
    }
  }
  rep.unknown_rate = rep.total ? static_cast<double>(unknowns) / rep.total : 0.0;
  return rep;
}

}  // namespace goeritz
