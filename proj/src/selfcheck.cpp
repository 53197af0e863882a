#include "goeritz/selfcheck.hpp"

#include <random>

#include "goeritz/goeritz_group.hpp"

namespace goeritz {

namespace {

NormalForm nf(const char* w) { return normal_form(parse_goeritz_word(w)); }

GoeritzWord random_word(std::mt19937_64& rng, int maxlen) {
  static const char letters[] = "abBgdD";
  std::uniform_int_distribution<int> len(0, maxlen);
  std::uniform_int_distribution<int> pick(0, 5);
  int n = len(rng);
  GoeritzWord w;
  for (int i = 0; i < n; ++i) w.push_back(letters[pick(rng)]);
  return w;
}

}  // namespace

std::vector<CheckResult> presentation_selfcheck(unsigned seed, int random_words) {
  std::vector<CheckResult> out;
  auto add = [&](const std::string& name, bool ok) { out.push_back({name, ok}); };

  const char* relators[] = {"aa", "gg", "ddd", "gdgd", "abaB", "agag", "adaD", "bgBga"};
  bool rel_ok = true;
  for (const char* r : relators) rel_ok = rel_ok && nf(r).is_identity();
  add("eight relators normalize to identity", rel_ok);

  add("gamma beta gamma = alpha beta", nf("gbg") == nf("ab"));

  NormalForm q = nf("bdBd");
  NormalForm p = nf("gd");
  add("gd conjugates bdBd to its inverse", nf_conj(p, q) == nf_inv(q));

  bool central = true;
  for (const char* g : {"b", "g", "d"})
    central = central && nf_mul(nf("a"), nf(g)) == nf_mul(nf(g), nf("a"));
  add("alpha commutes with every generator", central);

  // <beta, delta>: no nonempty alternating word of syllable length <= 8 is trivial
  bool free_product_ok = true;
  {
    struct Item {
      NormalForm g;
      char last;  // 'b' or 'd'
      int len;
    };
    std::vector<Item> frontier;
    for (long long n : {-2, -1, 1, 2}) {
      NormalForm g;
      g.append_beta(n);
      frontier.push_back({g, 'b', 1});
    }
    for (long long d : {1, 2}) {
      NormalForm g;
      g.append_delta(d);
      frontier.push_back({g, 'd', 1});
    }
    while (!frontier.empty()) {
      std::vector<Item> next;
      for (const auto& item : frontier) {
        if (item.g.is_identity() ||
            item.g.syllables().size() != static_cast<std::size_t>(item.len))
          free_product_ok = false;
        if (item.len == 8) continue;
        if (item.last == 'b') {
          for (long long d : {1, 2}) {
            NormalForm g = item.g;
            g.append_delta(d);
            next.push_back({g, 'd', item.len + 1});
          }
        } else {
          for (long long n : {-2, -1, 1, 2}) {
            NormalForm g = item.g;
            g.append_beta(n);
            next.push_back({g, 'b', item.len + 1});
          }
        }
      }
      frontier = std::move(next);
    }
  }
  add("<beta,delta> free-product normal forms nontrivial to syllable length 8",
      free_product_ok);

  // <alpha, beta> = Z2 x Z: alpha^x beta^n pairwise distinct, alpha central
  bool ab_ok = true;
  for (int x = 0; x <= 1; ++x)
    for (long long n = -6; n <= 6; ++n)
      for (int x2 = 0; x2 <= 1; ++x2)
        for (long long n2 = -6; n2 <= 6; ++n2) {
          NormalForm g1, g2;
          if (x) g1.append_alpha();
          g1.append_beta(n);
          if (x2) g2.append_alpha();
          g2.append_beta(n2);
          if ((g1 == g2) != (x == x2 && n == n2)) ab_ok = false;
        }
  add("<alpha,beta> is Z2 x Z", ab_ok);

  std::mt19937_64 rng(seed);
  bool sound = true;
  for (int i = 0; i < random_words && sound; ++i) {
    GoeritzWord wu = random_word(rng, 40), wv = random_word(rng, 40);
    NormalForm u = normal_form(wu), v = normal_form(wv);
    if (!nf_mul(u, nf_inv(u)).is_identity()) sound = false;
    if (nf_mul(u, v) != normal_form(wu + wv)) sound = false;
    if (!(s3_mul(quotient_s3(u), quotient_s3(v)) == quotient_s3(nf_mul(u, v)))) sound = false;
    auto au = abelianization(u), av = abelianization(v), auv = abelianization(nf_mul(u, v));
    if (((au.first + av.first) % 2 != auv.first) || (au.second + av.second != auv.second))
      sound = false;
  }
  add("randomized soundness (inverse, concatenation, quotient homomorphisms)", sound);

  return out;
}

}  // namespace goeritz
