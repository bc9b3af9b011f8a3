#include "topalg/lincomb.hpp"

#include <algorithm>
#include <set>

namespace topalg {

std::string TensorWord::key() const {
  std::string k;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) k += " | ";
    k += factors[i].to_text();
  }
  return k;
}

std::vector<std::string> TensorWord::ground_set() const {
  std::set<std::string> g;
  for (const auto& f : factors) g.insert(f.labels().begin(), f.labels().end());
  return {g.begin(), g.end()};
}

LinComb::LinComb(int rank, Level level) : rank_(rank), level_(level) {
  if (rank < 1 || rank > 3)
    throw DomainError("RankOverflow", "tensor rank must be between 1 and 3");
}

LinComb LinComb::single(TensorWord w, const Int& c, Level level) {
  LinComb out(w.rank(), level);
  out.add_term(std::move(w), c);
  return out;
}

LinComb LinComb::of(const Preorder& p, const Int& c) {
  return single(TensorWord({p}), c);
}

LinComb LinComb::unit(int rank) {
  return single(TensorWord(std::vector<Preorder>(rank)), 1);
}

Int LinComb::coeff(const TensorWord& w) const {
  auto it = terms_.find(w.key());
  return it == terms_.end() ? Int(0) : it->second.second;
}

void LinComb::check_word(const TensorWord& w) {
  if (w.rank() != rank_)
    throw DomainError("RankMismatch",
                      "word of rank " + std::to_string(w.rank()) +
                          " added to a rank-" + std::to_string(rank_) +
                          " combination");
  if (level_ == Level::Labelled) {
    auto g = w.ground_set();
    if (!has_ground_) {
      ground_ = std::move(g);
      has_ground_ = true;
    } else if (g != ground_) {
      throw DomainError("GroundSetMismatch",
                        "word lives on a different total ground set");
    }
  }
}

void LinComb::add_term(TensorWord w, const Int& c) {
  if (c == 0) return;
  check_word(w);
  std::string k = w.key();
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(std::move(k), std::make_pair(std::move(w), c));
  } else {
    it->second.second += c;
    if (it->second.second == 0) terms_.erase(it);
  }
}

LinComb& LinComb::operator+=(const LinComb& o) {
  if (o.rank_ != rank_)
    throw DomainError("RankMismatch", "adding combinations of different ranks");
  if (o.level_ != level_)
    throw DomainError("GroundSetMismatch",
                      "adding labelled and unlabelled combinations");
  for (const auto& [k, term] : o.terms_) add_term(term.first, term.second);
  return *this;
}

LinComb& LinComb::operator-=(const LinComb& o) {
  if (o.rank_ != rank_)
    throw DomainError("RankMismatch", "subtracting combinations of different ranks");
  if (o.level_ != level_)
    throw DomainError("GroundSetMismatch",
                      "subtracting labelled and unlabelled combinations");
  for (const auto& [k, term] : o.terms_) add_term(term.first, -term.second);
  return *this;
}

LinComb& LinComb::operator*=(const Int& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, term] : terms_) term.second *= c;
  return *this;
}

bool operator==(const LinComb& a, const LinComb& b) {
  if (a.rank_ != b.rank_ || a.level_ != b.level_) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first || ia->second.second != ib->second.second)
      return false;
  }
  return true;
}

LinComb LinComb::projected_unlabeled(int limit) const {
  LinComb out(rank_, Level::Unlabelled);
  for (const auto& [k, term] : terms_) {
    TensorWord w;
    w.factors.reserve(term.first.factors.size());
    for (const auto& f : term.first.factors)
      w.factors.push_back(canonical_form(f, limit));
    out.add_term(std::move(w), term.second);
  }
  return out;
}

std::vector<std::string> LinComb::lines() const {
  if (terms_.empty()) return {"0"};
  std::vector<std::string> out;
  out.reserve(terms_.size());
  for (const auto& [k, term] : terms_)
    out.push_back(term.second.str() + "\t" + k);
  return out;
}

std::string LinComb::to_string() const {
  std::string s;
  bool first = true;
  for (const auto& l : lines()) {
    if (!first) s += '\n';
    s += l;
    first = false;
  }
  return s;
}

LinComb tensor(const LinComb& a, const LinComb& b) {
  if (a.level() != Level::Labelled || b.level() != Level::Labelled)
    throw DomainError("GroundSetMismatch",
                      "tensor products are taken at the labelled level");
  const int r = a.rank() + b.rank();
  if (r > 3) throw DomainError("RankOverflow", "tensor rank above 3");
  LinComb out(r);
  for (const auto& [ka, ta] : a.terms()) {
    for (const auto& [kb, tb] : b.terms()) {
      for (const auto& fa : ta.first.factors)
        for (const auto& la : fa.labels())
          for (const auto& fb : tb.first.factors)
            if (fb.has_label(la))
              throw DomainError("LabelClash",
                                "tensor factors share label '" + la + "'");
      TensorWord w = ta.first;
      w.factors.insert(w.factors.end(), tb.first.factors.begin(),
                       tb.first.factors.end());
      out.add_term(std::move(w), ta.second * tb.second);
    }
  }
  return out;
}

LinComb mul(const LinComb& a, const LinComb& b) {
  if (a.rank() != b.rank())
    throw DomainError("RankMismatch", "factorwise product needs equal ranks");
  if (a.level() != Level::Labelled || b.level() != Level::Labelled)
    throw DomainError("GroundSetMismatch",
                      "factorwise products are taken at the labelled level");
  LinComb out(a.rank());
  for (const auto& [ka, ta] : a.terms()) {
    for (const auto& [kb, tb] : b.terms()) {
      TensorWord w;
      w.factors.reserve(a.rank());
      for (int i = 0; i < a.rank(); ++i)
        w.factors.push_back(product(ta.first.factors[i], tb.first.factors[i]));
      out.add_term(std::move(w), ta.second * tb.second);
    }
  }
  return out;
}

Int pair_functional(const std::vector<Preorder>& refs, const LinComb& a,
                    EvalMode mode) {
  if (static_cast<int>(refs.size()) != a.rank())
    throw DomainError("RankMismatch",
                      "number of functionals differs from tensor rank");
  Int total = 0;
  for (const auto& [k, term] : a.terms()) {
    Int v = term.second;
    for (size_t i = 0; i < refs.size() && v != 0; ++i)
      v *= eval_functional(refs[i], term.first.factors[i], mode);
    total += v;
  }
  return total;
}

LinComb relabel(const LinComb& a, const std::map<std::string, std::string>& phi) {
  LinComb out(a.rank(), a.level());
  for (const auto& [k, term] : a.terms()) {
    TensorWord w;
    w.factors.reserve(term.first.factors.size());
    for (const auto& f : term.first.factors) {
      std::map<std::string, std::string> sub;
      for (const auto& l : f.labels()) {
        auto it = phi.find(l);
        if (it == phi.end())
          throw DomainError("NotBijective", "no image for label '" + l + "'");
        sub.emplace(l, it->second);
      }
      w.factors.push_back(relabel(f, sub));
    }
    out.add_term(std::move(w), term.second);
  }
  return out;
}

}  // namespace topalg
