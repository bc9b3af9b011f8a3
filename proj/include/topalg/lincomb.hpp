#pragma once

// Finite integer linear combinations of tensor words of topologies.
//
// A TensorWord is a list of 1..3 Preorder factors; the empty space acts as
// the unit 1.  Two basis levels exist and never mix:
//   Labelled   — factors carry concrete point labels; every word of a
//                combination has the same total ground set (as a set of
//                labels).  External products require disjoint ground sets;
//                internal coproducts produce words whose factors share the
//                ground set, which is fine since only the union is checked.
//   Unlabelled — each factor is a canonical representative; obtained from a
//                labelled combination via projected_unlabeled().
//
// Coefficients are arbitrary-precision integers; zero terms are dropped
// eagerly, so operator== is exact structural equality.

#include <map>
#include <string>
#include <vector>

#include "topalg/canonical.hpp"
#include "topalg/preorder.hpp"

namespace topalg {

struct TensorWord {
  std::vector<Preorder> factors;

  TensorWord() = default;
  explicit TensorWord(std::vector<Preorder> fs) : factors(std::move(fs)) {}

  int rank() const { return static_cast<int>(factors.size()); }
  // Deterministic basis key: factor serializations joined by " | ".
  std::string key() const;
  // Labels appearing in any factor (deduplicated, sorted).
  std::vector<std::string> ground_set() const;
};

enum class Level { Labelled, Unlabelled };

class LinComb {
public:
  explicit LinComb(int rank, Level level = Level::Labelled);

  static LinComb single(TensorWord w, const Int& c = 1,
                        Level level = Level::Labelled);
  static LinComb of(const Preorder& p, const Int& c = 1);  // rank-1 word
  // The unit 1 of rank r: the word whose factors are all empty.
  static LinComb unit(int rank = 1);

  int rank() const { return rank_; }
  Level level() const { return level_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  const std::map<std::string, std::pair<TensorWord, Int>>& terms() const {
    return terms_;
  }
  Int coeff(const TensorWord& w) const;

  // Throws RankMismatch / GroundSetMismatch on incompatible words.
  void add_term(TensorWord w, const Int& c);

  LinComb& operator+=(const LinComb& o);
  LinComb& operator-=(const LinComb& o);
  LinComb& operator*=(const Int& c);
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const Int& c, LinComb a) { return a *= c; }
  friend bool operator==(const LinComb& a, const LinComb& b);
  friend bool operator!=(const LinComb& a, const LinComb& b) { return !(a == b); }

  // Canonicalize every factor of every word; coefficients of classes add up.
  LinComb projected_unlabeled(int limit = kCanonLimit) const;

  // One line per term, sorted by basis key: "coeff<TAB>factor | factor".
  // The zero combination prints as a single "0".
  std::vector<std::string> lines() const;
  std::string to_string() const;  // lines joined with '\n'

private:
  int rank_;
  Level level_;
  bool has_ground_ = false;
  std::vector<std::string> ground_;  // union of factor labels, sorted
  std::map<std::string, std::pair<TensorWord, Int>> terms_;

  void check_word(const TensorWord& w);
};

// External tensor product (concatenate factors).  Requires labelled level,
// disjoint total ground sets (LabelClash) and rank sum <= 3 (RankOverflow).
LinComb tensor(const LinComb& a, const LinComb& b);

// Factorwise disjoint union: on rank 1 this is the forest product, on equal
// higher ranks (a1⊗a2)·(b1⊗b2) = (a1·b1)⊗(a2·b2).  RankMismatch otherwise.
LinComb mul(const LinComb& a, const LinComb& b);

// <e_{refs[0]} ⊗ ... ⊗ e_{refs[r-1]}, a> — evaluate the product of dual-basis
// functionals termwise.  RankMismatch if refs.size() != rank.
Int pair_functional(const std::vector<Preorder>& refs, const LinComb& a,
                    EvalMode mode = EvalMode::UpToHomeo);

// Rename labels in every factor of every word; phi must cover the total
// ground set (factors use the induced partial maps).
LinComb relabel(const LinComb& a, const std::map<std::string, std::string>& phi);

}  // namespace topalg
