#pragma once

// The three coproducts.
//
// delta_open(T)  = sum over open subsets Y:      T|_{X\Y} (x) T|_Y.
// delta_graft(T) = sum over admissible cuts:     T|_Y (x) T|_{X\Y},
//   where a cut is an open Y together with a choice, for every connected
//   component C of T|_Y, of either "detached" (C has no comparabilities with
//   X\Y at all) or a point v in X\Y whose full down-set is the down-set in
//   X\Y of every element of C ("grafted at v") — i.e. regrafting the
//   components of T|_Y at their marked points reconstructs T.  Equivalent
//   vertices of T|_{X\Y} are distinct choices of v (they regraft to the same
//   space, so the coefficients add); this is what makes the coproduct the
//   exact dual of the star product.  A literal variant that only constrains
//   minimal points of C is available for comparison (it admits strictly more
//   cuts and breaks the dual pairing).
// gamma(T)       = sum over admissible finer topologies T':  T' (x) T/T',
//   where T' is admissible when (i) T' is finer than T, (ii) T'|_Y = T|_Y
//   for every subset Y connected in T', and (iii) the equivalence classes of
//   T/T' are the equivalence classes of T'/T' (= the connected components of
//   T').  An alternative reading of (iii) — classes of T/T' equal classes of
//   T' itself — is exposed for the witness suite to count how often the two
//   disagree.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "topalg/lincomb.hpp"
#include "topalg/preorder.hpp"

namespace topalg {

LinComb delta_open(const Preorder& t);

enum class CutRule { Graft, LiteralMin };

struct ComponentTag {
  Mask component = 0;    // subset of the points of T (not of the restriction)
  bool detached = true;
  std::string vertex;    // grafting point in X\Y when !detached
};

struct GraftCut {
  Mask open_set = 0;
  std::vector<ComponentTag> tags;
};

std::vector<GraftCut> admissible_graft_cuts(const Preorder& t,
                                            CutRule rule = CutRule::Graft);

LinComb delta_graft(const Preorder& t, CutRule rule = CutRule::Graft);

// Regraft the pieces of a cut: the detached components and T|_{X\Y} stay
// side by side, each grafted component is grafted at its marked point.
// Returns T for every admissible cut of T (tested invariant).
Preorder reconstruct_cut(const Preorder& t, const GraftCut& cut);

enum class GammaReading { Verbatim, ClassesOfFiner };

std::vector<Preorder> gamma_admissible(const Preorder& t,
                                       GammaReading reading = GammaReading::Verbatim);

LinComb gamma(const Preorder& t, GammaReading reading = GammaReading::Verbatim);

// (cop (x) id) cop - (id (x) cop) cop, as a rank-3 combination.
LinComb coassoc_defect(const std::function<LinComb(const Preorder&)>& cop,
                       const Preorder& t);

// cop(T1 T2) - cop(T1) cop(T2) (factorwise product on the right).
LinComb product_compat_defect(const std::function<LinComb(const Preorder&)>& cop,
                              const Preorder& t1, const Preorder& t2);

// The two rank-3 combinations whose inequality witnesses that gamma and
// delta_graft are not compatible:
//   lhs = (id (x) delta_graft) gamma(T)
//   rhs = m13 (gamma (x) gamma) delta_graft(T),
// m13 multiplying the first factors: (a1(x)a2)(x)(b1(x)b2) -> a1 b1 (x) a2 (x) b2.
std::pair<LinComb, LinComb> gamma_delta_compat_sides(const Preorder& t);

}  // namespace topalg
