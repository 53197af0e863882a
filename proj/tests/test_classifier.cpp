#include <doctest.h>

#include <stdexcept>

#include <random>
#include <set>

#include "goeritz/nt_classifier.hpp"

using namespace goeritz;

namespace {

NormalForm nf(const std::string& w) { return normal_form(parse_goeritz_word(w)); }

GoeritzWord rand_word(std::mt19937_64& rng, int maxlen) {
  static const char letters[] = "abBgdD";
  std::uniform_int_distribution<int> len(0, maxlen);
  std::uniform_int_distribution<int> pick(0, 5);
  GoeritzWord w;
  int n = len(rng);
  for (int i = 0; i < n; ++i) w.push_back(letters[pick(rng)]);
  return w;
}

void check_certificate(const NormalForm& g, const Verdict& v) {
  if (v.type == VerdictType::Reducible) {
    REQUIRE(v.conjugator.has_value());
    CHECK(subgroup_member(*v.subgroup, nf_conj(*v.conjugator, g)));
  } else if (v.type == VerdictType::FiniteOrder) {
    REQUIRE(v.conjugator.has_value());
    NormalForm img = nf_conj(*v.conjugator, g);
    CHECK((sphere_stab_member(img) || pants_stab_member(img)));
    CHECK(nf_pow(g, *v.order).is_identity());
  }
}

}  // namespace

TEST_CASE("disk stabilizer membership pattern") {
  CHECK(disk_stab_member(nf("")));
  CHECK(disk_stab_member(nf("a")));
  CHECK(disk_stab_member(nf("b")));
  CHECK(disk_stab_member(nf("gd")));
  CHECK(disk_stab_member(nf("bgd")));
  CHECK(disk_stab_member(nf("bbgdBBBgd")));
  CHECK_FALSE(disk_stab_member(nf("g")));
  CHECK_FALSE(disk_stab_member(nf("d")));
  CHECK_FALSE(disk_stab_member(nf("bdBd")));
  CHECK_FALSE(disk_stab_member(nf("gdd")));
}

TEST_CASE("disk stabilizer expressions replay") {
  std::mt19937_64 rng(31);
  static const char* moves[] = {"a", "b", "B", "gd"};
  std::uniform_int_distribution<int> len(0, 12), pick(0, 3);
  for (int i = 0; i < 500; ++i) {
    std::string w;
    int n = len(rng);
    for (int k = 0; k < n; ++k) w += moves[pick(rng)];
    NormalForm g = nf(w);
    auto expr = disk_stab_express(g);
    REQUIRE(expr.has_value());
    CHECK(nf(*expr) == g);
  }
}

TEST_CASE("random non-members are rejected consistently") {
  // if the pattern test says member, the reconstruction must replay; if it
  // says non-member, the S3 image must not certify membership wrongly
  std::mt19937_64 rng(37);
  for (int i = 0; i < 1000; ++i) {
    NormalForm g = nf(rand_word(rng, 16));
    auto expr = disk_stab_express(g);
    if (expr) {
      CHECK(nf(*expr) == g);
      S3Element img = quotient_s3(g);
      CHECK_FALSE(img.is_three_cycle());
    }
  }
}

TEST_CASE("fig8 membership") {
  CHECK(fig8_member(nf("")));
  CHECK(fig8_member(nf("a")));
  CHECK(fig8_member(nf("gd")));
  CHECK(fig8_member(nf("bdBd")));
  CHECK(fig8_member(nf("bdBdbdBd")));
  CHECK(fig8_member(nf("DbDBgd")));  // q^-1 p
  CHECK(fig8_member(nf("abdBdgd")));
  CHECK_FALSE(fig8_member(nf("b")));
  CHECK_FALSE(fig8_member(nf("g")));
  CHECK_FALSE(fig8_member(nf("bd")));
  auto e = fig8_express(nf("abdBdbdBdgd"));
  REQUIRE(e.has_value());
  CHECK(e->alpha == 1);
  CHECK(e->q_exp == 2);
  CHECK(e->p_exp == 1);
}

TEST_CASE("conjugate_into_vertex") {
  auto r = conjugate_into_vertex(nf("ddbd"));
  REQUIRE(r.has_value());
  CHECK(r->vertex == 'A');
  CHECK(r->element == nf("b"));
  CHECK(r->conjugator == nf("d"));
  CHECK(nf_conj(r->conjugator, nf("ddbd")) == nf("b"));

  CHECK_FALSE(conjugate_into_vertex(nf("bd")).has_value());

  auto r2 = conjugate_into_vertex(nf("ag"));
  REQUIRE(r2.has_value());
  CHECK(r2->vertex == 'A');
  CHECK(r2->conjugator.is_identity());
  CHECK(r2->element == nf("ag"));
}

TEST_CASE("conjugate_into_fig8") {
  auto y1 = conjugate_into_fig8(nf("bdBd"));
  CHECK(y1.yes);
  CHECK(fig8_member(nf_conj(*y1.conjugator, nf("bdBd"))));

  auto y2 = conjugate_into_fig8(nf_conj(nf("d"), nf("bdBd")));
  CHECK(y2.yes);

  auto n1 = conjugate_into_fig8(nf("bd"));
  CHECK_FALSE(n1.yes);
  CHECK(n1.reason.find("multiple of 4") != std::string::npos);

  CHECK_THROWS_AS(conjugate_into_fig8(nf("b")), std::invalid_argument);

  // translation length 4 but wrong class
  auto n2 = conjugate_into_fig8(nf("bdbbdd"));
  CHECK_FALSE(n2.yes);
}

TEST_CASE("conjugate_into_disk_stab") {
  auto y = conjugate_into_disk_stab(nf("bgd"));
  CHECK(y.answer == DiskStabAnswer::Yes);
  CHECK(disk_stab_member(nf_conj(*y.conjugator, nf("bgd"))));

  auto n = conjugate_into_disk_stab(nf("bd"));
  CHECK(n.answer == DiskStabAnswer::No);
  CHECK(n.reason.find("3-cycle") != std::string::npos);

  // conjugates of subgroup words are found through the orbit scan
  std::mt19937_64 rng(41);
  static const char* moves[] = {"b", "B", "gd"};
  std::uniform_int_distribution<int> len(2, 8), pick(0, 2);
  for (int i = 0; i < 100; ++i) {
    std::string w;
    int m = len(rng);
    for (int k = 0; k < m; ++k) w += moves[pick(rng)];
    NormalForm g = nf(w);
    if (cyclic_syllable_length(g) < 2) continue;
    NormalForm h = nf(rand_word(rng, 8));
    NormalForm conj = nf_conj(h, g);
    auto dec = conjugate_into_disk_stab(conj);
    CAPTURE(w);
    CAPTURE(h.to_word());
    REQUIRE(dec.answer == DiskStabAnswer::Yes);
    CHECK(disk_stab_member(nf_conj(*dec.conjugator, conj)));
  }
}

TEST_CASE("classifier spot table") {
  Verdict v;

  v = classify_word("a");
  CHECK(v.type == VerdictType::FiniteOrder);
  CHECK(*v.order == 2);

  v = classify_word("d");
  CHECK(v.type == VerdictType::FiniteOrder);
  CHECK(*v.order == 3);

  v = classify_word("ad");
  CHECK(v.type == VerdictType::FiniteOrder);
  CHECK(*v.order == 6);

  v = classify_word("b");
  CHECK(v.type == VerdictType::Reducible);
  CHECK(*v.subgroup == SubgroupId::SphereStab);
  check_certificate(nf("b"), v);

  v = classify_word("bdBd");
  CHECK(v.type == VerdictType::Reducible);
  CHECK(*v.subgroup == SubgroupId::Fig8Stab);
  check_certificate(nf("bdBd"), v);

  v = classify_word("bd");
  CHECK(v.type == VerdictType::PseudoAnosov);
  REQUIRE(v.evidence.has_value());
  CHECK(v.evidence->disk_stab.find("3-cycle") != std::string::npos);

  v = classify_word("bgd");
  CHECK(v.type == VerdictType::Reducible);
  CHECK(*v.subgroup == SubgroupId::DiskStab);
  check_certificate(nf("bgd"), v);
}

TEST_CASE("classification is conjugation and inversion invariant") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 400; ++i) {
    NormalForm g = nf(rand_word(rng, 12));
    NormalForm h = nf(rand_word(rng, 8));
    Verdict vg = classify(g);
    Verdict vc = classify(nf_conj(h, g));
    CHECK(vg.type == vc.type);
    if (vg.type == VerdictType::Reducible) CHECK(*vg.subgroup == *vc.subgroup);
    if (vg.type == VerdictType::FiniteOrder) CHECK(*vg.order == *vc.order);
    Verdict vi = classify(nf_inv(g));
    CHECK(vg.type == vi.type);
  }
}

TEST_CASE("powers of non-pseudo-Anosov elements never become pseudo-Anosov") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 150; ++i) {
    NormalForm g = nf(rand_word(rng, 8));
    Verdict vg = classify(g);
    if (vg.type == VerdictType::PseudoAnosov) continue;
    for (long long k = 2; k <= 4; ++k) {
      Verdict vk = classify(nf_pow(g, k));
      CHECK(vk.type != VerdictType::PseudoAnosov);
    }
  }
}

TEST_CASE("pseudo-Anosov excludes literal membership in all four subgroups") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 10000; ++i) {
    NormalForm g = nf(rand_word(rng, 14));
    Verdict v = classify(g);
    if (v.type != VerdictType::PseudoAnosov) continue;
    for (SubgroupId id : {SubgroupId::DiskStab, SubgroupId::SphereStab, SubgroupId::PantsStab,
                          SubgroupId::Fig8Stab})
      CHECK_FALSE(subgroup_member(id, g));
  }
}

TEST_CASE("disk stabilizer pattern equals BFS enumeration of the subgroup") {
  // Independent route: enumerate the subgroup by breadth-first products of
  // its generators and compare against the normal-form pattern over all
  // short normal forms.
  std::set<NormalForm> enumerated;
  {
    std::vector<NormalForm> frontier{NormalForm::identity()};
    enumerated.insert(NormalForm::identity());
    const char* moves[] = {"a", "b", "B", "gd", "Dg"};
    for (int len = 0; len < 7; ++len) {
      std::vector<NormalForm> next;
      for (const auto& g : frontier)
        for (const char* mv : moves) {
          NormalForm h = nf_mul(g, nf(mv));
          if (enumerated.insert(h).second) next.push_back(h);
        }
      frontier = std::move(next);
    }
  }
  // every enumerated element passes the pattern test
  for (const auto& g : enumerated) CHECK(disk_stab_member(g));
  // every pattern-passing word within a small envelope is enumerated;
  // the envelope keeps syllable counts and exponents inside BFS reach
  std::vector<GoeritzWord> all;
  std::vector<GoeritzWord> frontier{""};
  static const char letters[] = "abBgdD";
  for (int len = 0; len < 5; ++len) {
    std::vector<GoeritzWord> next;
    for (const auto& w : frontier)
      for (char c : letters) {
        if (c == 0) continue;
        next.push_back(w + c);
        all.push_back(w + c);
      }
    frontier = std::move(next);
  }
  for (const auto& w : all) {
    NormalForm g = nf(w);
    if (disk_stab_member(g)) {
      CAPTURE(w);
      CHECK(enumerated.count(g));
    }
  }
}

TEST_CASE("disk stabilizer exclusion agrees with brute-force conjugation") {
  // when the exact test says No, no short conjugator lands in the subgroup
  std::mt19937_64 rng(211);
  std::set<NormalForm> short_conjugators;
  {
    std::vector<NormalForm> frontier{NormalForm::identity()};
    short_conjugators.insert(NormalForm::identity());
    static const char letters[] = "abBgdD";
    for (int len = 0; len < 5; ++len) {
      std::vector<NormalForm> next;
      for (const auto& k : frontier)
        for (char c : letters) {
          if (c == 0) continue;
          NormalForm k2 = k;
          k2.append_letter(c);
          if (short_conjugators.insert(k2).second) next.push_back(k2);
        }
      frontier = std::move(next);
    }
  }
  int tested = 0;
  for (int i = 0; i < 400 && tested < 120; ++i) {
    NormalForm g = nf(rand_word(rng, 8));
    if (cyclic_syllable_length(g) < 2) continue;
    auto dec = conjugate_into_disk_stab(g);
    if (dec.answer != DiskStabAnswer::No) continue;
    ++tested;
    for (const auto& k : short_conjugators) CHECK_FALSE(disk_stab_member(nf_conj(k, g)));
  }
  CHECK(tested >= 100);
}

TEST_CASE("fig8 stabilizer has the dihedral structure") {
  NormalForm q = nf("bdBd");
  NormalForm p = nf("gd");
  NormalForm a = nf("a");
  // generators satisfy the claimed relations
  CHECK(nf_conj(p, q) == nf_inv(q));
  CHECK(nf_mul(p, p).is_identity());
  CHECK(nf_mul(a, a).is_identity());
  CHECK(nf_mul(nf_mul(a, q), nf_inv(nf_mul(q, a))).is_identity());
  // BFS over the generators stays inside {a^x q^m p^e} and reaches all of it
  std::set<NormalForm> enumerated;
  std::vector<NormalForm> frontier{NormalForm::identity()};
  enumerated.insert(NormalForm::identity());
  const NormalForm moves[] = {a, q, nf_inv(q), p};
  for (int len = 0; len < 6; ++len) {
    std::vector<NormalForm> next;
    for (const auto& g : frontier)
      for (const auto& mv : moves) {
        NormalForm h = nf_mul(g, mv);
        if (enumerated.insert(h).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  for (const auto& g : enumerated) {
    auto e = fig8_express(g);
    REQUIRE(e.has_value());
    NormalForm rebuilt = nf_pow(q, e->q_exp);
    if (e->alpha) rebuilt.append_alpha();
    if (e->p_exp) rebuilt = nf_mul(rebuilt, p);
    CHECK(rebuilt == g);
  }
  // count: a^x q^m p^e costs |m| + x + e moves, so depth 6 reaches
  // 9*4 + 2*3 + 2*1 = 44 elements
  CHECK(enumerated.size() == 44);
}

TEST_CASE("pseudo-Anosov persists under powers") {
  std::mt19937_64 rng(223);
  for (int i = 0; i < 150; ++i) {
    NormalForm g = nf(rand_word(rng, 10));
    if (classify(g).type != VerdictType::PseudoAnosov) continue;
    for (long long k = 2; k <= 3; ++k)
      CHECK(classify(nf_pow(g, k)).type == VerdictType::PseudoAnosov);
  }
}

TEST_CASE("delta count mod 3 obstruction") {
  // words whose delta exponent sum is nonzero mod 3 map to a 3-cycle and
  // are excluded from the disk stabilizer outright
  NormalForm g = nf_mul(nf_mul(nf("bbd"), nf("dbb")), nf_pow(nf("bbd"), 3));
  S3Element img = quotient_s3(g);
  CHECK(img.is_three_cycle());
  auto dec = conjugate_into_disk_stab(g);
  CHECK(dec.answer == DiskStabAnswer::No);
  CHECK(dec.reason.find("3-cycle") != std::string::npos);
}

TEST_CASE("certificates replay on random words") {
  std::mt19937_64 rng(59);
  for (int i = 0; i < 1000; ++i) {
    NormalForm g = nf(rand_word(rng, 14));
    Verdict v = classify(g);
    CHECK(v.definitive());
    check_certificate(g, v);
  }
}

TEST_CASE("scan_subgroup examples") {
  // <beta>: everything reducible into the sphere stabilizer
  ScanReport r1 = scan_subgroup({parse_goeritz_word("b")}, 2);
  CHECK(r1.total == 4);  // b, B, bb, BB after free reduction over symbols
  CHECK(r1.counts[VerdictType::Reducible] == 4);

  // <delta>: contains finite orders 3 and 1
  ScanReport r2 = scan_subgroup({parse_goeritz_word("d")}, 3);
  bool has_order3 = false, has_order1 = false;
  for (const auto& e : r2.exceptional) {
    if (e.verdict.order && *e.verdict.order == 3) has_order3 = true;
    if (e.verdict.order && *e.verdict.order == 1) has_order1 = true;
  }
  CHECK(has_order3);
  CHECK(has_order1);

  // The scan over {b^2 d, d b^2} finds genuine disk-stabilizer conjugates
  // among mixed-sign words: gamma conjugates (b^2 d)(d b^2)^-1 to
  // b^2 (gd) b^-2 (gd). Every hit must carry a replaying certificate, every
  // other word must be pseudo-Anosov, and nothing may be left unknown.
  ScanReport r3 = scan_subgroup({parse_goeritz_word("bbd"), parse_goeritz_word("dbb")}, 4);
  CHECK(r3.total == 160);
  CHECK(r3.unknown_rate == 0.0);
  CHECK(r3.counts[VerdictType::FiniteOrder] == 0);
  CHECK_FALSE(r3.exceptional.empty());
  for (const auto& e : r3.exceptional) {
    CHECK(e.verdict.type == VerdictType::Reducible);
    CHECK(*e.verdict.subgroup == SubgroupId::DiskStab);
    NormalForm g = nf(e.expanded);
    CHECK(disk_stab_member(nf_conj(*e.verdict.conjugator, g)));
  }
  // positive words in the generators are all pseudo-Anosov
  ScanReport r4 = scan_subgroup({parse_goeritz_word("bbddbb")}, 3);
  CHECK(r4.exceptional.empty());

  CHECK_THROWS_AS(scan_subgroup({}, 3), std::invalid_argument);
}
