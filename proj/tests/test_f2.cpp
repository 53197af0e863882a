#include <doctest.h>

#include <stdexcept>

#include <numeric>
#include <random>

#include "goeritz/f2_word.hpp"

using namespace goeritz;

namespace {

F2Word rand_word(std::mt19937_64& rng, int maxlen) {
  static const char letters[] = "xXyY";
  std::uniform_int_distribution<int> len(0, maxlen);
  std::uniform_int_distribution<int> pick(0, 3);
  std::string s;
  int n = len(rng);
  for (int i = 0; i < n; ++i) s.push_back(letters[pick(rng)]);
  return f2_reduce(s);
}

// all freely reduced words of length exactly len
void enumerate_reduced(int len, const std::string& prefix, std::vector<F2Word>& out) {
  if (len == 0) {
    out.push_back(F2Word{prefix});
    return;
  }
  for (char c : {'x', 'X', 'y', 'Y'}) {
    if (!prefix.empty() && prefix.back() == f2_inverse_letter(c)) continue;
    enumerate_reduced(len - 1, prefix + c, out);
  }
}

}  // namespace

TEST_CASE("free reduction") {
  CHECK(f2_reduce("xX").letters == "");
  CHECK(f2_reduce("xyYx").letters == "xx");
  CHECK(f2_reduce("xy").letters == "xy");
  CHECK_THROWS_AS(f2_reduce("xq"), std::invalid_argument);
}

TEST_CASE("cyclic reduction with conjugator") {
  auto [core, conj] = f2_cyclic_reduce(f2_reduce("xyX"));
  CHECK(core.letters == "y");
  CHECK(conj.letters == "x");

  auto [core2, conj2] = f2_cyclic_reduce(f2_reduce(""));
  CHECK(core2.letters.empty());
  CHECK(conj2.letters.empty());

  F2Word w = f2_reduce("xyxYX");
  auto [core3, conj3] = f2_cyclic_reduce(w);
  CHECK(core3.letters == "x");
  CHECK(conj3.letters == "xy");
  // replay: w = conj core conj^-1
  CHECK(f2_concat(f2_concat(conj3, F2Word{core3.letters}), f2_inverse(conj3)) == w);
}

TEST_CASE("cyclic reduction conjugator identity holds on random words") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    F2Word w = rand_word(rng, 16);
    auto [core, conj] = f2_cyclic_reduce(w);
    CHECK(f2_concat(f2_concat(conj, F2Word{core.letters}), f2_inverse(conj)) == w);
    // canonical rotation is lex-least
    CyclicF2Word c = core;
    std::string cur = core.letters;
    for (std::size_t k = 1; k < cur.size(); ++k) {
      std::rotate(cur.begin(), cur.begin() + 1, cur.end());
      CHECK_FALSE(CyclicF2Word{cur} < c);
    }
  }
}

TEST_CASE("abelianization") {
  CHECK(f2_abelianize(f2_reduce("xYx")) == std::pair<long long, long long>{2, -1});
  CHECK(f2_abelianize(f2_reduce("")) == std::pair<long long, long long>{0, 0});
  CHECK(f2_abelianize(f2_reduce("xYxyXy")) == std::pair<long long, long long>{1, 1});
}

TEST_CASE("primitivity basics") {
  CHECK(f2_is_primitive(f2_reduce("x")).primitive);
  CHECK(f2_is_primitive(f2_reduce("xy")).primitive);
  // the standard non-primitive disk boundary word
  auto r = f2_is_primitive(f2_reduce("xYxyXy"));
  CHECK_FALSE(r.primitive);
  auto r2 = f2_is_primitive(f2_reduce("xxyy"));
  CHECK_FALSE(r2.primitive);
  CHECK(r2.obstruction == PrimitivityObstruction::NonUnimodularAbelianization);
  auto r3 = f2_is_primitive(f2_reduce(""));
  CHECK_FALSE(r3.primitive);
  CHECK(r3.obstruction == PrimitivityObstruction::NonUnimodularAbelianization);
}

TEST_CASE("primitivity certificate replays with strict descent") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    F2Word w = rand_word(rng, 10);
    auto res = f2_is_primitive(w);
    if (!res.primitive) continue;
    F2Word cur{f2_cyclic_reduce(w).first.letters};
    for (std::size_t idx : res.certificate) {
      F2Word img = f2_apply_move(whitehead_moves()[idx], cur);
      F2Word next{f2_cyclic_reduce(img).first.letters};
      CHECK(next.letters.size() < cur.letters.size());
      cur = next;
    }
    CHECK(cur.letters.size() == 1);
  }
}

TEST_CASE("primitive implies unimodular abelianization") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 500; ++i) {
    F2Word w = rand_word(rng, 12);
    if (!f2_is_primitive(w).primitive) continue;
    auto [p, q] = f2_abelianize(w);
    CHECK(std::gcd(std::llabs(p), std::llabs(q)) == 1);
  }
}

TEST_CASE("primitivity is a conjugacy and inversion invariant") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    F2Word w = rand_word(rng, 8);
    F2Word h = rand_word(rng, 8);
    bool base = f2_is_primitive(w).primitive;
    F2Word conj = f2_concat(f2_concat(h, w), f2_inverse(h));
    CHECK(f2_is_primitive(conj).primitive == base);
    CHECK(f2_is_primitive(f2_inverse(w)).primitive == base);
  }
}

TEST_CASE("oracle small cases") {
  auto o1 = f2_primitive_oracle(1);
  CHECK(o1.size() == 4);
  CHECK(o1.count(CyclicF2Word{"x"}));
  CHECK(o1.count(CyclicF2Word{"Y"}));
  auto o2 = f2_primitive_oracle(2);
  CHECK(o2.count(f2_cyclic_reduce(f2_reduce("xy")).first));
  CHECK(o2.count(f2_cyclic_reduce(f2_reduce("xY")).first));
  CHECK_FALSE(o2.count(CyclicF2Word{"xx"}));
  CHECK_FALSE(o2.count(CyclicF2Word{"yy"}));
  CHECK_THROWS_AS(f2_primitive_oracle(13), std::invalid_argument);
}

TEST_CASE("Whitehead reduction matches the Christoffel oracle up to length 6") {
  auto oracle = f2_primitive_oracle(6);
  std::vector<F2Word> words;
  for (int len = 1; len <= 6; ++len) enumerate_reduced(len, "", words);
  for (const auto& w : words) {
    bool via_whitehead = f2_is_primitive(w).primitive;
    bool via_oracle = oracle.count(f2_cyclic_reduce(w).first) > 0;
    CAPTURE(w.letters);
    CHECK(via_whitehead == via_oracle);
  }
}

TEST_CASE("christoffel words are primitive and have the right exponents") {
  for (long long a = 0; a <= 7; ++a)
    for (long long b = 0; b <= 7; ++b) {
      if (a + b < 1 || std::gcd(a, b) != 1) continue;
      std::string w = christoffel_word(a, b);
      CHECK(w.size() == static_cast<std::size_t>(a + b));
      auto [p, q] = f2_abelianize(f2_reduce(w));
      CHECK(p == a);
      CHECK(q == b);
      CHECK(f2_is_primitive(f2_reduce(w)).primitive);
    }
}
