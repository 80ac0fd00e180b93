#include "doctest.h"

#include "perm_oracle.hpp"
#include "weyl/words.hpp"

using namespace weyl;

namespace {

CoxeterSystem dihedral(int m) {
  return CoxeterSystem::from_matrix({"s", "t"}, {{1, m}, {m, 1}});
}

CoxeterSystem a2_tilde() {
  return CoxeterSystem::parse(
      R"({"generators":["a","b","c"],"labels":{"a,b":3,"b,c":3,"a,c":3}})");
}

}  // namespace

TEST_CASE("normal forms in the infinite dihedral group") {
  WordEngine eng(dihedral(kInfLabel));
  CHECK(eng.normal_form({}) == Word{});
  CHECK(eng.normal_form({0, 0}) == Word{});
  CHECK(eng.normal_form({0, 1, 1, 0}) == Word{});
  CHECK(eng.normal_form({0, 1, 0}) == Word{0, 1, 0});
  CHECK(eng.length({0, 1, 0, 1}) == 4);
  CHECK(eng.is_reduced({0, 1, 0}));
  CHECK(!eng.is_reduced({0, 0, 1}));
}

TEST_CASE("braid relation produces the ShortLex-least word") {
  WordEngine eng(dihedral(3));
  // tst = sts, and sts is smaller
  CHECK(eng.normal_form({1, 0, 1}) == Word{0, 1, 0});
  // the longest element has length 3
  CHECK(eng.length({0, 1, 0, 1}) == 2);
}

TEST_CASE("descent sets") {
  WordEngine eng(dihedral(kInfLabel));
  CHECK(eng.right_descents({0, 1, 0}) == 0b01u);
  CHECK(eng.left_descents({0, 1, 0}) == 0b01u);
  CHECK(eng.right_descents({0, 1}) == 0b10u);
  CHECK(eng.right_descents({}) == 0u);
}

TEST_CASE("ball enumeration sizes and counts") {
  WordEngine a2(dihedral(3));
  Ball b = enumerate_ball(a2, 5);
  CHECK(b.elements.size() == 6);
  CHECK(b.counts == std::vector<std::uint64_t>{1, 2, 2, 1, 0, 0});

  WordEngine dinf(dihedral(kInfLabel));
  Ball bd = enumerate_ball(dinf, 4);
  CHECK(bd.elements.size() == 9);
  CHECK(bd.counts == std::vector<std::uint64_t>{1, 2, 2, 2, 2});

  WordEngine aff(a2_tilde());
  Ball ba = enumerate_ball(aff, 3);
  CHECK(ba.counts[0] == 1);
  CHECK(ba.counts[1] == 3);
  // elements are sorted by (length, lex) and indexed consistently
  for (size_t i = 0; i + 1 < ba.elements.size(); ++i) {
    CHECK(ba.elements[i].size() <= ba.elements[i + 1].size());
    CHECK(ba.index.at(ba.elements[i]) == static_cast<int>(i));
  }
}

TEST_CASE("ball cap raises LIMIT_EXCEEDED") {
  WordEngine eng(dihedral(kInfLabel));
  CHECK_THROWS_AS(enumerate_ball(eng, 10, 5), Error);
}

TEST_CASE("agreement with permutation models, all words of length <= 8") {
  struct Case {
    CoxeterSystem sys;
    oracle::PermGroup model;
  };
  std::vector<Case> cases;
  cases.push_back({dihedral(3), oracle::dihedral_model(3)});    // A2
  cases.push_back({dihedral(4), oracle::dihedral_model(4)});    // B2
  cases.push_back({dihedral(2), oracle::klein_model()});        // A1 x A1
  for (int m = 5; m <= 8; ++m)
    cases.push_back({dihedral(m), oracle::dihedral_model(m)});
  cases.push_back({CoxeterSystem::from_matrix(
                       {"a", "b", "c"},
                       {{1, 3, 2}, {3, 1, 4}, {2, 4, 1}}),
                   oracle::b3_model()});

  for (const auto& c : cases) {
    WordEngine eng(c.sys);
    int n = c.sys.rank();
    std::vector<int> word;
    // iterate all words over n letters of length 0..8
    for (int len = 0; len <= 8; ++len) {
      std::vector<int> idx(len, 0);
      for (;;) {
        word.assign(idx.begin(), idx.end());
        Word nf = eng.normal_form(word);
        auto p = c.model.evaluate(word);
        // same group element
        CHECK(c.model.evaluate(nf) == p);
        // normal form length equals Cayley distance in the model
        CHECK(static_cast<int>(nf.size()) == c.model.length.at(p));
        int pos = len - 1;
        while (pos >= 0 && ++idx[pos] == n) idx[pos--] = 0;
        if (pos < 0) break;
      }
    }
  }
}

TEST_CASE("weighted element counts for the infinite dihedral group") {
  WordEngine eng(dihedral(kInfLabel));
  auto counts = weighted_element_counts(eng, {2, 3}, 36);
  CHECK(counts.at(1) == 1);
  CHECK(counts.at(2) == 1);
  CHECK(counts.at(3) == 1);
  CHECK(counts.at(6) == 2);
  CHECK(counts.at(12) == 1);
  CHECK(counts.at(18) == 1);
  CHECK(counts.at(36) == 2);
  CHECK(counts.size() == 7);
}

TEST_CASE("uniform thickness reproduces the growth counts") {
  WordEngine eng(a2_tilde());
  auto counts = weighted_element_counts(eng, {2, 2, 2}, 1u << 4);
  Ball b = enumerate_ball(eng, 4);
  for (int k = 0; k <= 4; ++k)
    CHECK(counts[std::uint64_t{1} << k] == b.counts[k]);
}

TEST_CASE("thickness validation") {
  WordEngine a2(dihedral(3));
  // odd label forces equal thickness
  CHECK_THROWS_AS(weighted_element_counts(a2, {2, 3}, 10), Error);
  WordEngine b2(dihedral(4));
  CHECK_NOTHROW(weighted_element_counts(b2, {2, 3}, 10));
  CHECK_THROWS_AS(weighted_element_counts(b2, {1, 2}, 10), Error);
  CHECK_THROWS_AS(weighted_element_counts(b2, {2}, 10), Error);
}

TEST_CASE("braid class cap raises LIMIT_EXCEEDED") {
  // the longest element of A3 has 16 reduced words
  auto a3 = CoxeterSystem::from_matrix(
      {"a", "b", "c"}, {{1, 3, 2}, {3, 1, 3}, {2, 3, 1}});
  WordEngine eng(a3, 3);
  CHECK_THROWS_AS(eng.normal_form({0, 1, 0, 2, 1, 0}), Error);
}
