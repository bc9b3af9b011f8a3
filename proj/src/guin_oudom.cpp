#include "topalg/guin_oudom.hpp"

#include <algorithm>
#include <bit>

#include "topalg/coproducts.hpp"

namespace topalg {

std::vector<Preorder> components_of(const Preorder& t) {
  std::vector<Preorder> out;
  for (Mask comp : t.connected_components()) out.push_back(t.restrict_to(comp));
  return out;
}

namespace {

// Disjoint product over a subset of components (empty subset -> empty space).
Preorder assemble(const Preorder& t, const std::vector<Mask>& comps,
                  std::uint32_t subset) {
  Mask m = 0;
  for (size_t i = 0; i < comps.size(); ++i)
    if ((subset >> i) & 1u) m |= comps[i];
  return t.restrict_to(m);
}

}  // namespace

LinComb unshuffle(const Preorder& t) {
  const auto comps = t.connected_components();
  const size_t k = comps.size();
  if (k > 20) throw size_limit_error("unshuffle limited to 20 components");
  LinComb out(2);
  const std::uint32_t all = (k == 0) ? 0u : ((1u << k) - 1u);
  for (std::uint32_t s = 0;; ++s) {
    out.add_term(TensorWord({assemble(t, comps, s), assemble(t, comps, all & ~s)}), 1);
    if (s == all) break;
  }
  return out;
}

LinComb unshuffle(const LinComb& a) {
  LinComb out(2);
  for (const auto& [k, term] : a.terms())
    out += term.second * unshuffle(term.first.factors[0]);
  return out;
}

LinComb extended_graft(const Preorder& a, const Preorder& b) {
  if (a.empty()) return LinComb::of(b);  // 1 o b = b
  if (b.empty()) return LinComb(1);      // a o 1 = eps(a) 1 = 0 for a != 1
  const auto comps_b = b.connected_components();
  if (comps_b.size() >= 2) {
    // a o (b1 rest) = sum (a_(1) o b1)(a_(2) o rest)
    const Preorder b1 = b.restrict_to(comps_b[0]);
    Mask rest_mask = 0;
    for (size_t i = 1; i < comps_b.size(); ++i) rest_mask |= comps_b[i];
    const Preorder rest = b.restrict_to(rest_mask);
    LinComb out(1);
    const LinComb splits = unshuffle(a);
    for (const auto& [k, term] : splits.terms()) {
      out += term.second * mul(extended_graft(term.first.factors[0], b1),
                               extended_graft(term.first.factors[1], rest));
    }
    return out;
  }
  const auto comps_a = a.connected_components();
  if (comps_a.size() == 1) return graft(a, b);  // connected o connected
  // (x rest) o b = x o (rest o b) - (x o rest) o b
  const Preorder x = a.restrict_to(comps_a[0]);
  Mask rest_mask = 0;
  for (size_t i = 1; i < comps_a.size(); ++i) rest_mask |= comps_a[i];
  const Preorder rest = a.restrict_to(rest_mask);
  LinComb out(1);
  const LinComb rob = extended_graft(rest, b);
  for (const auto& [k, term] : rob.terms())
    out += term.second * extended_graft(x, term.first.factors[0]);
  const LinComb xrest = extended_graft(x, rest);
  for (const auto& [k, term] : xrest.terms())
    out -= term.second * extended_graft(term.first.factors[0], b);
  return out;
}

LinComb extended_graft(const LinComb& a, const Preorder& b) {
  LinComb out(1);
  for (const auto& [k, term] : a.terms())
    out += term.second * extended_graft(term.first.factors[0], b);
  return out;
}

LinComb extended_graft(const Preorder& a, const LinComb& b) {
  LinComb out(1);
  for (const auto& [k, term] : b.terms())
    out += term.second * extended_graft(a, term.first.factors[0]);
  return out;
}

LinComb closed_form_graft(const Preorder& a, const Preorder& b) {
  if (a.empty()) return LinComb::of(b);
  if (b.empty()) return LinComb(1);
  const auto comps = a.connected_components();
  const size_t k = comps.size();
  const int nb = b.size();
  LinComb out(1);
  // One grafting point of b per component of a; iterate all |X_b|^k maps.
  std::vector<int> choice(k, 0);
  for (;;) {
    // Build the simultaneous graft directly: blocks of a and b, plus for each
    // component C with point v: everything in the b-down-set of v below C.
    std::vector<std::string> labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    std::sort(labels.begin(), labels.end());
    if (labels.size() > 64) throw size_limit_error("at most 64 points supported");
    auto idx = [&](const std::string& l) {
      return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), l) -
                              labels.begin());
    };
    const int n = static_cast<int>(labels.size());
    std::vector<Mask> rows(n, 0);
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const Preorder* t : {&a, &b}) {
      for (int i = 0; i < t->size(); ++i)
        for (int j = 0; j < t->size(); ++j)
          if (t->leq(i, j)) rows[idx(t->label(i))] |= Mask{1} << idx(t->label(j));
    }
    for (size_t c = 0; c < k; ++c) {
      Mask above = 0;
      for (Mask m = comps[c]; m; m &= m - 1)
        above |= Mask{1} << idx(a.label(std::countr_zero(m)));
      for (int i = 0; i < nb; ++i)
        if (b.leq(i, choice[c])) rows[idx(b.label(i))] |= above;
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && ((rows[i] >> j) & 1u)) pairs.emplace_back(labels[i], labels[j]);
    out += LinComb::of(Preorder::from_relations(labels, pairs));

    // next map
    size_t c = 0;
    while (c < k && ++choice[c] == nb) choice[c++] = 0;
    if (c == k) break;
  }
  return out;
}

LinComb gl_star(const Preorder& a, const Preorder& b, bool closed_form) {
  const auto comps = a.connected_components();
  const size_t k = comps.size();
  if (k > 20) throw size_limit_error("star limited to 20 components");
  LinComb out(1);
  const std::uint32_t all = (k == 0) ? 0u : ((1u << k) - 1u);
  for (std::uint32_t s = 0;; ++s) {
    Mask left = 0, right = 0;
    for (size_t i = 0; i < k; ++i) ((s >> i) & 1u ? left : right) |= comps[i];
    const Preorder a1 = a.restrict_to(left);
    const Preorder a2 = a.restrict_to(right);
    const LinComb grafted =
        closed_form ? closed_form_graft(a2, b) : extended_graft(a2, b);
    out += mul(LinComb::of(a1), grafted);
    if (s == all) break;
  }
  return out;
}

LinComb gl_star(const LinComb& a, const LinComb& b, bool closed_form) {
  LinComb out(1);
  for (const auto& [ka, ta] : a.terms())
    for (const auto& [kb, tb] : b.terms())
      out += (ta.second * tb.second) *
             gl_star(ta.first.factors[0], tb.first.factors[0], closed_form);
  return out;
}

LinComb gl_star_rank2(const LinComb& a, const LinComb& b) {
  if (a.rank() != 2 || b.rank() != 2)
    throw DomainError("RankMismatch", "componentwise star needs rank 2");
  LinComb out(2);
  for (const auto& [ka, ta] : a.terms()) {
    for (const auto& [kb, tb] : b.terms()) {
      const LinComb left =
          gl_star(ta.first.factors[0], tb.first.factors[0]);
      const LinComb right =
          gl_star(ta.first.factors[1], tb.first.factors[1]);
      const Int c = ta.second * tb.second;
      for (const auto& [kl, tl] : left.terms())
        for (const auto& [kr, tr] : right.terms())
          out.add_term(TensorWord({tl.first.factors[0], tr.first.factors[0]}),
                       c * tl.second * tr.second);
    }
  }
  return out;
}

namespace {

std::string fresh_star(const std::vector<const Preorder*>& spaces) {
  std::string star = "*";
  for (;;) {
    bool clash = false;
    for (const Preorder* p : spaces)
      if (p->has_label(star)) clash = true;
    if (!clash) return star;
    star += "*";
  }
}

}  // namespace

Int pairing_lhs(const Preorder& t1, const Preorder& t2, const Preorder& tp) {
  if (t1.size() + t2.size() != tp.size())
    throw DomainError("SizeMismatch",
                      "pairing requires |X1| + |X2| = |X'|");
  const std::string star = fresh_star({&t1, &t2, &tp});
  const Preorder bt2 = bplus(t2, star);
  const Preorder btp = bplus(tp, star);
  return pair_functional({btp}, closed_form_graft(t1, bt2));
}

Int pairing_rhs(const Preorder& t1, const Preorder& t2, const Preorder& tp) {
  if (t1.size() + t2.size() != tp.size())
    throw DomainError("SizeMismatch",
                      "pairing requires |X1| + |X2| = |X'|");
  return pair_functional({t1, t2}, delta_graft(tp));
}

}  // namespace topalg
