#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "topalg/canonical.hpp"
#include "topalg/coproducts.hpp"
#include "topalg/errors.hpp"
#include "topalg/lincomb.hpp"
#include "topalg/preorder.hpp"

using namespace topalg;

namespace {
TensorWord unl(const char* left, const char* right) {
  return TensorWord({canonical_form(Preorder::parse(left)),
                     canonical_form(Preorder::parse(right))});
}
}  // namespace

TEST_CASE("open-set coproduct") {
  const Preorder pt = Preorder::point("a");
  const LinComb d1 = delta_open(pt);
  CHECK(d1.term_count() == 2);
  CHECK(d1.coeff(TensorWord({pt, Preorder()})) == 1);
  CHECK(d1.coeff(TensorWord({Preorder(), pt})) == 1);

  const Preorder chain = Preorder::parse("{a<b}");
  const LinComb d2 = delta_open(chain);
  CHECK(d2.term_count() == 3);
  // left factor on the complement, right factor on the open set
  CHECK(d2.coeff(TensorWord({Preorder::point("a"), Preorder::point("b")})) == 1);
  CHECK(d2.coeff(TensorWord({Preorder::point("b"), Preorder::point("a")})) == 0);
  CHECK(d2.coeff(TensorWord({chain, Preorder()})) == 1);
  CHECK(d2.coeff(TensorWord({Preorder(), chain})) == 1);

  CHECK(delta_open(Preorder::indiscrete({"a", "b"})).term_count() == 2);
  CHECK(delta_open(Preorder()) == LinComb::unit(2));
}

TEST_CASE("admissible cuts of the pinned spaces") {
  // chain: every open set is admissible
  const Preorder chain = Preorder::parse("{a<b}");
  auto cuts = admissible_graft_cuts(chain);
  std::set<Mask> opens;
  for (const auto& c : cuts) opens.insert(c.open_set);
  CHECK(opens == std::set<Mask>{chain.mask_of({}),
                                chain.mask_of({"b"}),
                                chain.mask_of({"a", "b"})});
  for (const auto& c : cuts)
    if (c.open_set == chain.mask_of({"b"})) {
      REQUIRE(c.tags.size() == 1);
      CHECK_FALSE(c.tags[0].detached);
      CHECK(c.tags[0].vertex == "a");
    }

  // lambda: only the trivial cuts
  const Preorder lam = Preorder::parse("{a<c, b<c}");
  cuts = admissible_graft_cuts(lam);
  CHECK(cuts.size() == 2);
  std::set<Mask> lam_opens;
  for (const auto& c : cuts) lam_opens.insert(c.open_set);
  CHECK(lam_opens == std::set<Mask>{Mask{0}, lam.full_mask()});

  // diamond: the top three points graft back at the bottom
  const Preorder dia = Preorder::parse("{a<b, a<c, b<d, c<d}");
  cuts = admissible_graft_cuts(dia);
  CHECK(cuts.size() == 3);
  bool found = false;
  for (const auto& c : cuts)
    if (c.open_set == dia.mask_of({"b", "c", "d"})) {
      found = true;
      REQUIRE(c.tags.size() == 1);
      CHECK(c.tags[0].vertex == "a");
    }
  CHECK(found);

  // the literal minimum-reading admits the extra lambda cuts {a,c} and
  // (by the a<->b symmetry) {b,c}
  cuts = admissible_graft_cuts(lam, CutRule::LiteralMin);
  CHECK(cuts.size() == 4);
  std::set<Mask> lit_opens;
  for (const auto& c : cuts) lit_opens.insert(c.open_set);
  CHECK(lit_opens.count(lam.mask_of({"a", "c"})) == 1);
  CHECK(lit_opens.count(lam.mask_of({"b", "c"})) == 1);
}

TEST_CASE("graft-cut coproduct reproduces the pinned combinations") {
  const Preorder lam = Preorder::parse("{a<c, b<c}");
  LinComb expect(2);
  expect.add_term(TensorWord({lam, Preorder()}), 1);
  expect.add_term(TensorWord({Preorder(), lam}), 1);
  CHECK(delta_graft(lam) == expect);

  const Preorder dia = Preorder::parse("{a<b, a<c, b<d, c<d}");
  const LinComb dd = delta_graft(dia);
  CHECK(dd.term_count() == 3);
  CHECK(dd.coeff(TensorWord({Preorder::parse("{b<d, c<d}"),
                             Preorder::point("a")})) == 1);
  CHECK(dd.coeff(TensorWord({dia, Preorder()})) == 1);
  CHECK(dd.coeff(TensorWord({Preorder(), dia})) == 1);

  // the vee: five cuts, including the two single-top ones the duality needs
  const Preorder vee = Preorder::parse("{o<s, o<t}");
  const LinComb dv = delta_graft(vee);
  CHECK(dv.term_count() == 5);
  CHECK(dv.coeff(TensorWord({Preorder::point("s"), Preorder::parse("{o<t}")})) == 1);
  CHECK(dv.coeff(TensorWord({Preorder::point("t"), Preorder::parse("{o<s}")})) == 1);
  CHECK(dv.coeff(TensorWord({Preorder::discrete({"s", "t"}),
                             Preorder::point("o")})) == 1);
  const LinComb pv = dv.projected_unlabeled();
  CHECK(pv.coeff(unl("{a}", "{a<b}")) == 2);
  CHECK(pv.coeff(unl("{a, b}", "{a}")) == 1);

  // non-cocommutativity witness on the chain
  const LinComb dc = delta_graft(Preorder::parse("{a<b}"));
  CHECK(dc.coeff(TensorWord({Preorder::point("b"), Preorder::point("a")})) == 1);
  CHECK(dc.coeff(TensorWord({Preorder::point("a"), Preorder::point("b")})) == 0);

  CHECK(delta_graft(Preorder()) == LinComb::unit(2));
}

TEST_CASE("equivalent vertices give one cut per grafting point") {
  // p~q below r: cutting {r} can regraft at p or at q (same down-set), so
  // the open set carries two cuts and the tensor term has coefficient 2.
  // Collapsing them to one cut would break the pairing with the star
  // product, which counts the two grafting points separately.
  const Preorder t = Preorder::parse("{p~q, p<r, q<r}");
  const auto cuts = admissible_graft_cuts(t);
  CHECK(cuts.size() == 4);
  std::set<std::string> vertices;
  for (const auto& c : cuts)
    if (c.open_set == t.mask_of({"r"})) {
      REQUIRE(c.tags.size() == 1);
      CHECK_FALSE(c.tags[0].detached);
      vertices.insert(c.tags[0].vertex);
      CHECK(reconstruct_cut(t, c) == t);
    }
  CHECK(vertices == std::set<std::string>{"p", "q"});

  const LinComb dt = delta_graft(t);
  CHECK(dt.coeff(TensorWord({Preorder::point("r"),
                             Preorder::parse("{p~q}")})) == 2);
}

TEST_CASE("every admissible cut regrafts back to the original space") {
  for (int n = 0; n <= 4; ++n)
    for (const auto& t : enumerate_labeled(n))
      for (const auto& cut : admissible_graft_cuts(t))
        CHECK(reconstruct_cut(t, cut) == t);
}

TEST_CASE("the literal rule breaks reconstruction where the rules differ") {
  const Preorder lam = Preorder::parse("{a<c, b<c}");
  for (const auto& cut : admissible_graft_cuts(lam, CutRule::LiteralMin))
    if (cut.open_set == lam.mask_of({"a", "c"}))
      CHECK(reconstruct_cut(lam, cut) != lam);
}

TEST_CASE("coassociativity and counits on small spaces") {
  auto dopen = [](const Preorder& x) { return delta_open(x); };
  auto dgraft = [](const Preorder& x) { return delta_graft(x); };
  for (const char* txt : {"{}", "{a}", "{a<b}", "{a~b}", "{a<c, b<c}",
                          "{a<b, a<c, b<d, c<d}", "{a<b, c}"}) {
    const Preorder t = Preorder::parse(txt);
    CHECK(coassoc_defect(dopen, t).is_zero());
    CHECK(coassoc_defect(dgraft, t).is_zero());
    for (const LinComb& cop : {delta_open(t), delta_graft(t)}) {
      LinComb left(1), right(1);
      for (const auto& [k, term] : cop.terms()) {
        if (term.first.factors[0].empty())
          left.add_term(TensorWord({term.first.factors[1]}), term.second);
        if (term.first.factors[1].empty())
          right.add_term(TensorWord({term.first.factors[0]}), term.second);
      }
      CHECK(left == LinComb::of(t));
      CHECK(right == LinComb::of(t));
    }
  }
}

TEST_CASE("multiplicativity on sample pairs") {
  auto dopen = [](const Preorder& x) { return delta_open(x); };
  auto dgraft = [](const Preorder& x) { return delta_graft(x); };
  const Preorder a = Preorder::parse("{a<b}");
  const Preorder b = Preorder::parse("{x<z, y<z}");
  CHECK(product_compat_defect(dopen, a, b).is_zero());
  CHECK(product_compat_defect(dgraft, a, b).is_zero());
  CHECK(product_compat_defect(dgraft, Preorder::point("p"), a).is_zero());
}

TEST_CASE("finer-topology coproduct on the pinned spaces") {
  const Preorder pt = Preorder::point("a");
  CHECK(gamma(pt) == LinComb::single(TensorWord({pt, pt})));

  const Preorder chain = Preorder::parse("{a<b}");
  const Preorder disc = Preorder::discrete({"a", "b"});
  const Preorder ind = Preorder::indiscrete({"a", "b"});
  LinComb expect(2);
  expect.add_term(TensorWord({disc, chain}), 1);
  expect.add_term(TensorWord({chain, ind}), 1);
  CHECK(gamma(chain) == expect);

  const auto adm = gamma_admissible(chain);
  CHECK(adm.size() == 2);

  for (int n = 1; n <= 3; ++n) {
    std::vector<std::string> ls;
    for (int i = 0; i < n; ++i) ls.push_back("d" + std::to_string(i));
    const Preorder d = Preorder::discrete(ls);
    CHECK(gamma(d) == LinComb::single(TensorWord({d, d})));
  }

  // indiscrete pair: only itself is admissible, quotient glues to one class
  CHECK(gamma(ind) == LinComb::single(TensorWord({ind, ind})));

  CHECK(gamma(Preorder()) == LinComb::unit(2));

  // the alternative class-condition reading drops the T'=T term of the chain
  const LinComb alt = gamma(chain, GammaReading::ClassesOfFiner);
  CHECK(alt == LinComb::single(TensorWord({disc, chain})));

  std::vector<std::string> big;
  for (int i = 0; i < 6; ++i) big.push_back("v" + std::to_string(i));
  CHECK_THROWS_AS(gamma(Preorder::discrete(big)), DomainError);
}

TEST_CASE("gamma against delta_graft: the incompatibility witness") {
  const Preorder pt = Preorder::point("a");
  const auto [pl, pr] = gamma_delta_compat_sides(pt);
  const LinComb a = pl.projected_unlabeled();
  const LinComb b = pr.projected_unlabeled();
  CHECK(a == b);
  CHECK(a.term_count() == 2);  // dot (x) dot (x) 1  +  dot (x) 1 (x) dot
  const Preorder cpt = canonical_form(pt);
  CHECK(a.coeff(TensorWord({cpt, cpt, Preorder()})) == 1);
  CHECK(a.coeff(TensorWord({cpt, Preorder(), cpt})) == 1);

  const Preorder dia = Preorder::parse("{a<b, a<c, b<d, c<d}");
  const auto [dl, dr] = gamma_delta_compat_sides(dia);
  CHECK(dl.projected_unlabeled() != dr.projected_unlabeled());
}
