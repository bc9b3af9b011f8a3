#pragma once

// Extension of the grafting product from connected spaces to the whole
// symmetric algebra (a topology is the disjoint product of its connected
// components), and the Grossman-Larson product built on it.
//
// extended_graft follows the defining recursion
//   1 o b = b,        a o 1 = eps(a) 1,
//   (x a) o b = x o (a o b) - (x o a) o b        (x connected),
//   a o (b c)  = sum (a_(1) o b) (a_(2) o c)     (unshuffle splittings of a);
// closed_form_graft evaluates the same product in one pass as the sum over
// all maps from components of a to points of b (each component grafted where
// its point sends it).  The two agree; tests assert it, hot paths use the
// closed form.
//
// gl_star(a, b) = sum a_(1) (a_(2) o b) over unshuffle splittings of a.

#include <vector>

#include "topalg/graft.hpp"
#include "topalg/lincomb.hpp"
#include "topalg/preorder.hpp"

namespace topalg {

// Restrictions of t to its connected components, ordered by lowest index.
std::vector<Preorder> components_of(const Preorder& t);

// Rank-2 combination: sum over all 2^k splittings of the component multiset
// of t into an ordered pair of sub-products (empty parts allowed).
LinComb unshuffle(const Preorder& t);
LinComb unshuffle(const LinComb& a);  // linear extension of rank-1 input

LinComb extended_graft(const Preorder& a, const Preorder& b);
LinComb extended_graft(const LinComb& a, const Preorder& b);
LinComb extended_graft(const Preorder& a, const LinComb& b);
LinComb closed_form_graft(const Preorder& a, const Preorder& b);

LinComb gl_star(const Preorder& a, const Preorder& b, bool closed_form = true);
LinComb gl_star(const LinComb& a, const LinComb& b, bool closed_form = true);

// Componentwise Grossman-Larson product on rank-2 combinations:
// (a1 (x) a2) star (b1 (x) b2) = (a1 star b1) (x) (a2 star b2).
LinComb gl_star_rank2(const LinComb& a, const LinComb& b);

// Dual-basis pairing of a product functional against a single space:
//   <e_{T1} star e_{T2}, T'>  (computed through the one-point extension:
//   graft T1 into bplus(T2) and evaluate e_{bplus(T')})
// against its coproduct counterpart
//   <e_{T1} (x) e_{T2}, delta_graft(T')>.
// Both require |X1| + |X2| = |X'| (SizeMismatch).
Int pairing_lhs(const Preorder& t1, const Preorder& t2, const Preorder& tp);
Int pairing_rhs(const Preorder& t1, const Preorder& t2, const Preorder& tp);

}  // namespace topalg
