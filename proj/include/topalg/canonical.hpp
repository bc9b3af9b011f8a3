#pragma once

// Canonical forms, homeomorphism tests, automorphism counting and exhaustive
// enumeration for small finite topologies.
//
// canonical_key(T) is a complete homeomorphism invariant: two spaces are
// homeomorphic iff their keys coincide.  It is computed by an
// order-invariant vertex refinement (equivalence-class size, height in the
// condensation, up/down degrees, iterated neighbour colours) followed by a
// permutation backtracking that minimizes the relabelled relation matrix
// under a fixed total order.  The count of minimizing permutations is the
// automorphism group order.

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "topalg/preorder.hpp"

namespace topalg {

using Int = boost::multiprecision::cpp_int;

// Default point limit for the backtracking search.  Fully symmetric spaces
// cost |Aut| leaf visits (10! is still fine, 13! is not); callers may raise
// the limit to 12 explicitly.
constexpr int kCanonLimit = 10;
constexpr int kCanonLimitMax = 12;

// "n|i<j,i<j,..." over the canonically relabelled points 0..n-1.
std::string canonical_key(const Preorder& t, int limit = kCanonLimit);

// The canonical representative itself: points renamed to "0".."n-1"
// (zero-padded when n > 10 so lexicographic and numeric order agree).
Preorder canonical_form(const Preorder& t, int limit = kCanonLimit);

struct AutomorphismInfo {
  Int order;                 // |Aut(T)|
  std::vector<Mask> orbits;  // vertex orbits, ordered by lowest index
};
AutomorphismInfo automorphisms(const Preorder& t, int limit = kCanonLimit);

// sigma(T) = |Aut(T)| — the symmetry factor.
Int sigma(const Preorder& t, int limit = kCanonLimit);

bool homeomorphic(const Preorder& a, const Preorder& b, int limit = kCanonLimit);

// The dual-basis functional e_T evaluated on a basis element:
//   e_T(T') = sigma(T) if T' matches T, else 0.
// UpToHomeo matches up to homeomorphism (the default reading); StrictLabelled
// requires equality as labelled spaces.
enum class EvalMode { UpToHomeo, StrictLabelled };
Int eval_functional(const Preorder& ref, const Preorder& t,
                    EvalMode mode = EvalMode::UpToHomeo);

// All topologies on the labels "0".."n-1":
//   n <= 4 by filtering every off-diagonal bit pattern for transitivity,
//   n == 5 by extending each 4-point space with one new point.
// Cached; the returned reference stays valid.  SizeLimitExceeded for n > 5.
const std::vector<Preorder>& enumerate_labeled(int n);

// One canonical representative per homeomorphism class, ordered by key.
const std::vector<Preorder>& enumerate_unlabeled(int n);

}  // namespace topalg
