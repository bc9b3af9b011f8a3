#pragma once

// Grafting products on finite topologies.
//
// graft_at(T1, T2, v) puts T1 on top of T2 at the point v: on the disjoint
// union of the ground sets,
//   x <= y   iff   x <=_{T1} y            (both in T1)
//              or  x <=_{T2} y            (both in T2)
//              or  x in T2, y in T1 and x <=_{T2} v,
// i.e. the whole of T1 sits above the down-set of v.  No closure pass is
// needed: the union is already transitive.  graft(T1, T2) sums over all
// grafting points of T2.
//
// graft_up_at hangs T *below* the up-set of a point of S; it is the
// conjugate j(j(T) graft j(S)) of graft_at under the opposite involution j.
//
// bplus adjoins a new global minimum (the one-point grafting target).

#include <string>
#include <utility>

#include "topalg/lincomb.hpp"
#include "topalg/preorder.hpp"

namespace topalg {

// Declared in preorder.hpp (needs friend access): graft_at(t1, t2, v).

LinComb graft(const Preorder& t1, const Preorder& t2);
LinComb graft(const LinComb& a, const Preorder& t2);
LinComb graft(const Preorder& t1, const LinComb& b);
LinComb graft(const LinComb& a, const LinComb& b);

Preorder graft_up_at(const Preorder& t, const Preorder& s, const std::string& sv);
LinComb graft_up(const Preorder& t, const Preorder& s);
LinComb graft_up(const LinComb& a, const Preorder& s);
LinComb graft_up(const Preorder& t, const LinComb& b);
LinComb graft_up(const LinComb& a, const LinComb& b);

// T with a fresh point `star` adjoined below everything.
Preorder bplus(const Preorder& t, const std::string& star = "*");

// T1 graft (T2 graft T3) - (T1 graft T2) graft T3.  Symmetric in T1, T2.
LinComb prelie_defect(const Preorder& t1, const Preorder& t2, const Preorder& t3);
// The same combination written directly as sum over pairs of grafting points
// of T3:  sum_{u,v in X3} T1 graft_u (T2 graft_v T3).
LinComb prelie_defect_direct(const Preorder& t1, const Preorder& t2,
                             const Preorder& t3);
// Mirror notion for the upward grafting.
LinComb prelie_defect_up(const Preorder& t1, const Preorder& t2,
                         const Preorder& t3);

// Apply psi (cut all comparabilities between the two label groups) to every
// term of a rank-1 combination.
LinComb psi_each(const LinComb& a, const std::vector<std::string>& g1,
                 const std::vector<std::string>& g2);

// Upward graft of T at s in S, then downward graft of the result at u in U,
// against: both grafts in the other order, then psi removing the T-U
// comparabilities.  The two sides agree for every choice of s and u.
//   lhs = T up_at_s (S down_at_u U)
//   rhs = psi_{X(T),X(U)}((T up_at_s S) down_at_u U)
std::pair<Preorder, Preorder> updown_exchange(const Preorder& t, const Preorder& s,
                                              const Preorder& u,
                                              const std::string& sv,
                                              const std::string& uv);
// Mirror: downward graft at s in S against upward graft at u in U.
std::pair<Preorder, Preorder> downup_exchange(const Preorder& t, const Preorder& s,
                                              const Preorder& u,
                                              const std::string& sv,
                                              const std::string& uv);

// Summed two-sided identity relating the mixed associators:
//   T up (S down U) - psi_{X,Z}((T up S) down U)
//     = S down (T up U) - psi_{Y,Z}((S down T) up U).
std::pair<LinComb, LinComb> mixed_exchange_identity(const Preorder& t,
                                                    const Preorder& s,
                                                    const Preorder& u);

}  // namespace topalg
