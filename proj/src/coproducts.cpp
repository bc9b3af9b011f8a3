#include "topalg/coproducts.hpp"

#include <bit>

namespace topalg {

LinComb delta_open(const Preorder& t) {
  LinComb out(2);
  const Mask all = t.full_mask();
  for (Mask y : t.open_sets())
    out.add_term(TensorWord({t.restrict_to(all & ~y), t.restrict_to(y)}), 1);
  return out;
}

namespace {

// Down-set of point i inside the complement part.
Mask outside_down_set(const Preorder& t, int i, Mask outside) {
  Mask m = 0;
  for (Mask o = outside; o; o &= o - 1) {
    const int x = std::countr_zero(o);
    if (t.leq(x, i)) m |= Mask{1} << x;
  }
  return m;
}

// Regrafting options for one component of T|_Y; empty result = inadmissible.
// A component either detaches (one option) or regrafts at a vertex v whose
// full down-set in X\Y equals the component's uniform outside down-set D.
// Equivalent vertices share a down-set, so the valid v form one equivalence
// class; each choice is a distinct cut (the pairing with the star product
// counts every grafting point separately).
struct ComponentOptions {
  Mask comp = 0;
  bool detached = false;
  std::vector<std::string> vertices;  // the choices when !detached
};

bool options_component_graft(const Preorder& t, Mask comp, Mask outside,
                             ComponentOptions* opt) {
  // All elements of the component must see the same outside down-set D.
  Mask d = 0;
  bool first = true;
  for (Mask m = comp; m; m &= m - 1) {
    const int c = std::countr_zero(m);
    const Mask dc = outside_down_set(t, c, outside);
    if (first) {
      d = dc;
      first = false;
    } else if (dc != d) {
      return false;
    }
  }
  opt->comp = comp;
  if (d == 0) {
    opt->detached = true;
    return true;
  }
  opt->detached = false;
  opt->vertices.clear();
  for (Mask m = d; m; m &= m - 1) {
    const int v = std::countr_zero(m);
    Mask dv = outside_down_set(t, v, outside) | (Mask{1} << v);
    if (dv == d) opt->vertices.push_back(t.label(v));
  }
  return !opt->vertices.empty();
}

// Literal reading of the cut condition: only the minimal points of the
// component are constrained — either min(C) = min(T) ∩ C, or exactly one
// equivalence class of X\Y lies below all of min(C).
bool options_component_literal(const Preorder& t, const Preorder& restricted,
                               Mask comp_in_restricted, Mask comp, Mask outside,
                               ComponentOptions* opt) {
  const Mask min_comp_local = restricted.min_set() & comp_in_restricted;
  // Translate minimal points of the component back to indices of t.
  std::vector<int> min_pts;
  for (Mask m = min_comp_local; m; m &= m - 1) {
    const int local = std::countr_zero(m);
    min_pts.push_back(t.index_of(restricted.label(local)));
  }
  Mask min_comp = 0;
  for (int i : min_pts) min_comp |= Mask{1} << i;

  opt->comp = comp;
  if (min_comp == (t.min_set() & comp)) {
    opt->detached = true;
    return true;
  }
  // Classes of the complement that sit below every minimal point.
  std::vector<Mask> anc_classes;
  Mask seen = 0;
  for (Mask o = outside; o; o &= o - 1) {
    const int x = std::countr_zero(o);
    if ((seen >> x) & 1u) continue;
    bool below_all = true;
    for (int mp : min_pts)
      if (!t.leq(x, mp)) below_all = false;
    Mask cls = 0;
    for (Mask o2 = outside; o2; o2 &= o2 - 1) {
      const int y = std::countr_zero(o2);
      if (t.equiv(x, y)) cls |= Mask{1} << y;
    }
    seen |= cls;
    if (below_all) anc_classes.push_back(cls);
  }
  if (anc_classes.size() == 1) {
    opt->detached = false;
    opt->vertices.clear();
    for (Mask m = anc_classes[0]; m; m &= m - 1)
      opt->vertices.push_back(t.label(std::countr_zero(m)));
    return true;
  }
  return false;
}

}  // namespace

std::vector<GraftCut> admissible_graft_cuts(const Preorder& t, CutRule rule) {
  std::vector<GraftCut> cuts;
  const Mask all = t.full_mask();
  for (Mask y : t.open_sets()) {
    const Mask outside = all & ~y;
    const Preorder restricted = t.restrict_to(y);
    bool ok = true;
    std::vector<ComponentOptions> opts;
    // Components come back in restricted coordinates; translate to t's.
    for (Mask comp_local : restricted.connected_components()) {
      Mask comp = 0;
      for (Mask m = comp_local; m; m &= m - 1)
        comp |= Mask{1} << t.index_of(restricted.label(std::countr_zero(m)));
      ComponentOptions opt;
      const bool good =
          rule == CutRule::Graft
              ? options_component_graft(t, comp, outside, &opt)
              : options_component_literal(t, restricted, comp_local, comp,
                                          outside, &opt);
      if (!good) {
        ok = false;
        break;
      }
      opts.push_back(std::move(opt));
    }
    if (!ok) continue;
    // One cut per choice of regrafting vertex for every attached component.
    std::vector<GraftCut> partial(1);
    partial[0].open_set = y;
    for (const auto& opt : opts) {
      std::vector<GraftCut> next;
      for (const auto& base : partial) {
        if (opt.detached) {
          GraftCut c = base;
          c.tags.push_back({opt.comp, true, {}});
          next.push_back(std::move(c));
        } else {
          for (const auto& v : opt.vertices) {
            GraftCut c = base;
            c.tags.push_back({opt.comp, false, v});
            next.push_back(std::move(c));
          }
        }
      }
      partial = std::move(next);
    }
    for (auto& c : partial) cuts.push_back(std::move(c));
  }
  return cuts;
}

LinComb delta_graft(const Preorder& t, CutRule rule) {
  LinComb out(2);
  const Mask all = t.full_mask();
  for (const auto& cut : admissible_graft_cuts(t, rule))
    out.add_term(TensorWord({t.restrict_to(cut.open_set),
                             t.restrict_to(all & ~cut.open_set)}),
                 1);
  return out;
}

Preorder reconstruct_cut(const Preorder& t, const GraftCut& cut) {
  const Mask all = t.full_mask();
  Preorder base = t.restrict_to(all & ~cut.open_set);
  for (const auto& tag : cut.tags) {
    const Preorder piece = t.restrict_to(tag.component);
    base = tag.detached ? product(piece, base) : graft_at(piece, base, tag.vertex);
  }
  return base;
}

std::vector<Preorder> gamma_admissible(const Preorder& t, GammaReading reading) {
  const int n = t.size();
  std::vector<Preorder> out;
  // Candidate finer topologies: all topologies on t's points.
  std::vector<std::string> canon_names;
  for (int i = 0; i < n; ++i) canon_names.push_back(std::to_string(i));
  for (const auto& cand0 : enumerate_labeled(n)) {
    std::map<std::string, std::string> to_t;
    for (int i = 0; i < n; ++i) to_t.emplace(canon_names[i], t.label(i));
    const Preorder cand = relabel(cand0, to_t);
    if (!is_finer(cand, t)) continue;

    // (ii) restriction of cand and t agree on every cand-connected subset.
    bool ok = true;
    for (Mask y = 1; y <= t.full_mask() && ok; ++y) {
      const Preorder r = cand.restrict_to(y);
      if (!r.connected()) continue;
      if (!(r == t.restrict_to(y))) ok = false;
    }
    if (!ok) continue;

    // (iii) equivalence classes of T/T' match those of T'/T'
    // (connected components of T'), or of T' itself under the alternative.
    const Preorder q = quotient(t, cand);
    const std::vector<Mask> lhs = q.equiv_classes();
    const std::vector<Mask> rhs = reading == GammaReading::Verbatim
                                      ? quotient(cand, cand).equiv_classes()
                                      : cand.equiv_classes();
    if (lhs != rhs) continue;
    out.push_back(cand);
  }
  return out;
}

LinComb gamma(const Preorder& t, GammaReading reading) {
  LinComb out(2);
  for (const auto& tp : gamma_admissible(t, reading))
    out.add_term(TensorWord({tp, quotient(t, tp)}), 1);
  return out;
}

LinComb coassoc_defect(const std::function<LinComb(const Preorder&)>& cop,
                       const Preorder& t) {
  LinComb out(3);
  const LinComb top = cop(t);
  for (const auto& [k, term] : top.terms()) {
    const Preorder& a = term.first.factors[0];
    const Preorder& b = term.first.factors[1];
    const LinComb left = cop(a);
    for (const auto& [k2, t2] : left.terms())
      out.add_term(
          TensorWord({t2.first.factors[0], t2.first.factors[1], b}),
          term.second * t2.second);
    const LinComb right = cop(b);
    for (const auto& [k2, t2] : right.terms())
      out.add_term(
          TensorWord({a, t2.first.factors[0], t2.first.factors[1]}),
          -term.second * t2.second);
  }
  return out;
}

LinComb product_compat_defect(const std::function<LinComb(const Preorder&)>& cop,
                              const Preorder& t1, const Preorder& t2) {
  return cop(product(t1, t2)) - mul(cop(t1), cop(t2));
}

std::pair<LinComb, LinComb> gamma_delta_compat_sides(const Preorder& t) {
  LinComb lhs(3), rhs(3);
  const LinComb gt = gamma(t);
  for (const auto& [k, term] : gt.terms()) {
    const Preorder& tp = term.first.factors[0];
    const Preorder& q = term.first.factors[1];
    const LinComb dq = delta_graft(q);
    for (const auto& [k2, t2] : dq.terms())
      lhs.add_term(TensorWord({tp, t2.first.factors[0], t2.first.factors[1]}),
                   term.second * t2.second);
  }
  const LinComb dt = delta_graft(t);
  for (const auto& [k, term] : dt.terms()) {
    const Preorder& a = term.first.factors[0];
    const Preorder& b = term.first.factors[1];
    const LinComb ga = gamma(a);
    const LinComb gb = gamma(b);
    for (const auto& [ka, ta] : ga.terms())
      for (const auto& [kb, tb] : gb.terms())
        rhs.add_term(
            TensorWord({product(ta.first.factors[0], tb.first.factors[0]),
                        ta.first.factors[1], tb.first.factors[1]}),
            term.second * ta.second * tb.second);
  }
  return {lhs, rhs};
}

}  // namespace topalg
