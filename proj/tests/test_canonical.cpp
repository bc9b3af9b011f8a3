#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "topalg/canonical.hpp"
#include "topalg/errors.hpp"
#include "topalg/preorder.hpp"

using namespace topalg;

// ---------------------------------------------------------------------------
// Brute-force oracles over all n! permutations (n <= 5 here).

namespace {

// Count relation-preserving permutations of the index set.
long long oracle_aut_order(const Preorder& t) {
  const int n = t.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  long long count = 0;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        if (t.leq(i, j) != t.leq(perm[i], perm[j])) ok = false;
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

bool oracle_homeomorphic(const Preorder& a, const Preorder& b) {
  if (a.size() != b.size()) return false;
  const int n = a.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        if (a.leq(i, j) != b.leq(perm[i], perm[j])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return n == 0;
}

std::vector<std::map<std::string, std::string>> all_bijections_onto(
    const Preorder& t, const std::vector<std::string>& target) {
  std::vector<int> perm(t.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::map<std::string, std::string>> out;
  do {
    std::map<std::string, std::string> phi;
    for (int i = 0; i < t.size(); ++i) phi[t.label(i)] = target[perm[i]];
    out.push_back(phi);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

TEST_CASE("enumeration counts") {
  const std::size_t labeled[] = {1, 1, 4, 29, 355};
  const std::size_t unlabeled[] = {1, 1, 3, 9, 33};
  for (int n = 0; n <= 4; ++n) {
    CHECK(enumerate_labeled(n).size() == labeled[n]);
    CHECK(enumerate_unlabeled(n).size() == unlabeled[n]);
  }
  for (const auto& t : enumerate_labeled(3)) CHECK(t.is_valid());
  // every enumerated space is distinct
  std::set<std::string> texts;
  for (const auto& t : enumerate_labeled(4)) texts.insert(t.to_text());
  CHECK(texts.size() == 355);
  CHECK_THROWS_AS(enumerate_labeled(6), DomainError);
}

TEST_CASE("five-point enumeration is consistent") {
  // |labeled(5)| = 6942 (OEIS A000798); the extension construction must hit
  // every space exactly once, and the class count must match A001930.
  CHECK(enumerate_labeled(5).size() == 6942);
  CHECK(enumerate_unlabeled(5).size() == 139);
  std::set<std::string> texts;
  for (const auto& t : enumerate_labeled(5)) {
    CHECK(t.is_valid());
    texts.insert(t.to_text());
  }
  CHECK(texts.size() == 6942);
}

TEST_CASE("automorphism order matches permutation brute force everywhere") {
  for (int n = 0; n <= 4; ++n)
    for (const auto& t : enumerate_labeled(n))
      CHECK(automorphisms(t).order == Int(oracle_aut_order(t)));
}

TEST_CASE("symmetry factor examples") {
  CHECK(sigma(Preorder::parse("{a<c, b<c}")) == 2);
  CHECK(sigma(Preorder::parse("{a<b<c}")) == 1);
  CHECK(sigma(Preorder::parse("{a<b, a<c, b<d, c<d}")) == 2);
  CHECK(sigma(Preorder::discrete({"a", "b", "c", "d"})) == 24);
  CHECK(sigma(Preorder::indiscrete({"a", "b", "c"})) == 6);
  CHECK(sigma(Preorder()) == 1);
  CHECK(sigma(Preorder::point("p")) == 1);
}

TEST_CASE("orbits") {
  const Preorder lam = Preorder::parse("{a<c, b<c}");
  const auto info = automorphisms(lam);
  CHECK(info.order == 2);
  REQUIRE(info.orbits.size() == 2);
  CHECK(info.orbits[0] == lam.mask_of({"a", "b"}));
  CHECK(info.orbits[1] == lam.mask_of({"c"}));

  const auto rigid = automorphisms(Preorder::parse("{a<b<c}"));
  CHECK(rigid.orbits.size() == 3);

  // orbit-stabilizer: |orbit(v)| divides sigma, and summing sigma/|orbit|
  // over orbit representatives counts Aut-cosets consistently
  for (const auto& t : enumerate_labeled(4)) {
    const auto st = automorphisms(t);
    Mask seen = 0;
    for (Mask orb : st.orbits) {
      CHECK((seen & orb) == 0);
      seen |= orb;
      CHECK(st.order % popcount(orb) == 0);
    }
    CHECK(seen == t.full_mask());
  }
}

TEST_CASE("canonical keys separate exactly the homeomorphism classes") {
  for (int n = 0; n <= 3; ++n) {
    const auto& all = enumerate_labeled(n);
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i; j < all.size(); ++j) {
        const bool same = canonical_key(all[i]) == canonical_key(all[j]);
        CHECK(same == oracle_homeomorphic(all[i], all[j]));
      }
  }
  // at n = 4, spot the class partition size only (pairwise is covered above)
  std::set<std::string> keys;
  for (const auto& t : enumerate_labeled(4)) keys.insert(canonical_key(t));
  CHECK(keys.size() == 33);
}

TEST_CASE("canonical form is label-invariant and idempotent") {
  const std::vector<Preorder> samples = {
      Preorder::parse("{a<c, b<c}"),
      Preorder::parse("{a<b, a<c, b<d, c<d}"),
      Preorder::parse("{a~b, b<c, d}"),
      Preorder::parse("{p<q, p<r}"),
  };
  const std::vector<std::string> fresh = {"w", "x", "y", "z"};
  for (const auto& t : samples) {
    const Preorder cf = canonical_form(t);
    CHECK(canonical_form(cf) == cf);
    CHECK(homeomorphic(cf, t));
    for (const auto& phi : all_bijections_onto(
             t, std::vector<std::string>(fresh.begin(), fresh.begin() + t.size()))) {
      CHECK(canonical_form(relabel(t, phi)) == cf);
      CHECK(canonical_key(relabel(t, phi)) == canonical_key(t));
    }
  }
  // canonical labels are "0".."n-1"
  CHECK(canonical_form(Preorder::parse("{x<y}")).labels() ==
        std::vector<std::string>{"0", "1"});
}

TEST_CASE("homeomorphism tests") {
  CHECK(homeomorphic(Preorder::parse("{a<b}"), Preorder::parse("{y<x}")));
  CHECK_FALSE(homeomorphic(Preorder::parse("{a<b}"), Preorder::indiscrete({"a", "b"})));
  CHECK_FALSE(homeomorphic(Preorder::parse("{a<b<c}"), Preorder::parse("{a<c, b<c}")));
  CHECK(homeomorphic(Preorder(), Preorder()));
  CHECK_FALSE(homeomorphic(Preorder(), Preorder::point("a")));
}

TEST_CASE("orbit sums reproduce the labeled counts") {
  for (int n = 0; n <= 4; ++n) {
    Int fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    Int total = 0;
    for (const auto& t : enumerate_unlabeled(n)) total += fact / sigma(t);
    CHECK(total == Int(static_cast<long long>(enumerate_labeled(n).size())));
  }
}

TEST_CASE("dual-basis functional") {
  const Preorder lam = Preorder::parse("{a<c, b<c}");
  const Preorder lam2 = Preorder::parse("{x<z, y<z}");
  CHECK(eval_functional(lam, lam2) == 2);
  CHECK(eval_functional(lam, Preorder::parse("{a<b<c}")) == 0);
  CHECK(eval_functional(Preorder::point("a"), Preorder::parse("{a<b}")) == 0);
  CHECK(eval_functional(Preorder::parse("{a<b}"), Preorder::parse("{a<b}")) == 1);
  // strict mode requires equality as labeled spaces
  CHECK(eval_functional(lam, lam2, EvalMode::StrictLabelled) == 0);
  CHECK(eval_functional(lam, lam, EvalMode::StrictLabelled) == 2);
}

TEST_CASE("size limits on the canonical search") {
  std::vector<std::string> eleven, thirteen;
  for (int i = 0; i < 11; ++i) eleven.push_back("v" + std::to_string(i));
  for (int i = 0; i < 13; ++i) thirteen.push_back("w" + std::to_string(i));
  CHECK_THROWS_AS(canonical_key(Preorder::chain(eleven)), DomainError);
  // rigid spaces stay fast at the raised limit
  CHECK(canonical_key(Preorder::chain(eleven), kCanonLimitMax) ==
        canonical_key(Preorder::chain(std::vector<std::string>(
                          eleven.rbegin(), eleven.rend())),
                      kCanonLimitMax));
  CHECK_THROWS_AS(canonical_key(Preorder::chain(thirteen), kCanonLimitMax),
                  DomainError);
  // zero-padded canonical labels keep lexicographic = numeric order
  const Preorder big = canonical_form(Preorder::chain(eleven), kCanonLimitMax);
  CHECK(big.label(0) == "00");
  CHECK(big.size() == 11);
}
