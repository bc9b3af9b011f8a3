#pragma once

// A finite topological space on at most 64 points, stored as its
// specialization preorder: x <= y  iff  every open set containing x contains
// y.  Open sets are exactly the up-closed subsets of the preorder, so all
// topological notions (opens, closures, connectedness, quotients, ...) are
// derived from one bit-matrix.
//
// Representation: labels are kept sorted, and row i of `rel_` is the up-set
// of point i as a 64-bit mask (bit j set iff labels_[i] <= labels_[j]).
// Values are immutable after construction; every operation returns a new
// value.  Keeping labels sorted gives a unique representation per
// (label set, relation), so operator== is memberwise and text serialization
// round-trips bit-exactly.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "topalg/errors.hpp"

namespace topalg {

using Mask = std::uint64_t;

int popcount(Mask m);
int lowest_bit(Mask m);          // index of least significant set bit; -1 if 0
bool mask_subset(Mask a, Mask b);  // a subseteq b

class Preorder {
public:
  Preorder() = default;  // the empty space

  // Reflexive-transitive closure of `pairs` on `labels`.
  // Throws: DuplicateLabel, UnknownLabel, InvalidLabel, SizeLimitExceeded.
  static Preorder from_relations(
      std::vector<std::string> labels,
      const std::vector<std::pair<std::string, std::string>>& pairs);

  static Preorder discrete(std::vector<std::string> labels);
  static Preorder indiscrete(std::vector<std::string> labels);
  static Preorder point(const std::string& label);
  // Total order labels[0] < labels[1] < ... (argument order, not sorted order).
  static Preorder chain(const std::vector<std::string>& labels);

  int size() const { return static_cast<int>(labels_.size()); }
  bool empty() const { return labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  int index_of(const std::string& label) const;  // UnknownLabel if absent
  bool has_label(const std::string& label) const;

  bool leq(int i, int j) const { return (rel_[i] >> j) & 1u; }
  bool leq(const std::string& x, const std::string& y) const;
  bool equiv(int i, int j) const { return leq(i, j) && leq(j, i); }
  Mask up_set(int i) const { return rel_[i]; }
  Mask down_set(int i) const;
  Mask full_mask() const;

  // --- topology -----------------------------------------------------------
  bool is_open(Mask subset) const;
  std::vector<Mask> open_sets() const;  // ascending as integers; 2^n scan
  Mask min_set() const;                 // points minimal up to equivalence
  bool is_t0() const;                   // specialization order antisymmetric

  // --- structure ----------------------------------------------------------
  Preorder restrict_to(Mask subset) const;
  Preorder restrict_to(const std::vector<std::string>& labels) const;
  std::vector<Mask> connected_components() const;  // ordered by lowest index
  std::vector<Mask> equiv_classes() const;         // ordered by lowest index
  bool connected() const;  // nonempty with exactly one component

  Mask mask_of(const std::vector<std::string>& labels) const;

  // --- serialization ------------------------------------------------------
  // "{a<b, b<a, c}": strict pairs sorted lexicographically, then isolated
  // labels.  parse() accepts "x~y" as shorthand for both directions.
  std::string to_text() const;
  static Preorder parse(const std::string& text);  // ParseError

  // Internal consistency check (reflexive + transitive + sorted labels).
  bool is_valid() const;

  friend bool operator==(const Preorder& a, const Preorder& b) {
    return a.labels_ == b.labels_ && a.rel_ == b.rel_;
  }
  friend bool operator!=(const Preorder& a, const Preorder& b) {
    return !(a == b);
  }
  // Arbitrary but deterministic order, for use as map keys.
  friend bool operator<(const Preorder& a, const Preorder& b) {
    if (a.labels_ != b.labels_) return a.labels_ < b.labels_;
    return a.rel_ < b.rel_;
  }

private:
  std::vector<std::string> labels_;  // sorted, distinct
  std::vector<Mask> rel_;            // row i = up-set of i

  friend Preorder product(const Preorder&, const Preorder&);
  friend bool is_finer(const Preorder&, const Preorder&);
  friend Preorder quotient(const Preorder&, const Preorder&);
  friend Preorder opposite(const Preorder&);
  friend Preorder psi(const Preorder&, Mask, Mask);
  friend Preorder relabel(const Preorder&, const std::map<std::string, std::string>&);
  friend Preorder graft_at(const Preorder&, const Preorder&, const std::string&);
  static Preorder from_rows(std::vector<std::string> sorted_labels,
                            std::vector<Mask> rows);
};

// Disjoint union of spaces (no comparabilities between the parts).
// Throws LabelClash if the ground sets intersect.
Preorder product(const Preorder& t1, const Preorder& t2);

// Is every comparability of `tp` also one of `t`?  (Same ground set required:
// GroundSetMismatch.)  "tp finer than t" = identity map tp -> t continuous.
bool is_finer(const Preorder& tp, const Preorder& t);

// Quotient topology t/tp: reflexive-transitive closure of
//   x <= y  iff  x <=_t y  or  y <=_tp x.
// Requires tp finer than t (NotFiner).
Preorder quotient(const Preorder& t, const Preorder& tp);

// Opposite preorder (transpose); opens and closeds swap roles.
Preorder opposite(const Preorder& t);

// Remove every comparability between the disjoint subsets a1 and a2 (both
// directions).  The result must still be transitive; otherwise
// TransitivityBroken is thrown (no re-closure is performed).
Preorder psi(const Preorder& t, Mask a1, Mask a2);
Preorder psi(const Preorder& t, const std::vector<std::string>& a1,
             const std::vector<std::string>& a2);

// Rename points along a bijection given as a total map on the label set.
// Throws NotBijective if the map is not a bijection from exactly that set.
Preorder relabel(const Preorder& t, const std::map<std::string, std::string>& phi);

}  // namespace topalg
