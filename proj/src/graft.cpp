#include "topalg/graft.hpp"

namespace topalg {

LinComb graft(const Preorder& t1, const Preorder& t2) {
  LinComb out(1);
  for (const auto& v : t2.labels()) out += LinComb::of(graft_at(t1, t2, v));
  return out;
}

LinComb graft(const LinComb& a, const Preorder& t2) {
  LinComb out(1);
  for (const auto& [k, term] : a.terms())
    out += term.second * graft(term.first.factors[0], t2);
  return out;
}

LinComb graft(const Preorder& t1, const LinComb& b) {
  LinComb out(1);
  for (const auto& [k, term] : b.terms())
    out += term.second * graft(t1, term.first.factors[0]);
  return out;
}

LinComb graft(const LinComb& a, const LinComb& b) {
  LinComb out(1);
  for (const auto& [k, term] : a.terms())
    out += term.second * graft(term.first.factors[0], b);
  return out;
}

Preorder graft_up_at(const Preorder& t, const Preorder& s,
                     const std::string& sv) {
  return opposite(graft_at(opposite(t), opposite(s), sv));
}

LinComb graft_up(const Preorder& t, const Preorder& s) {
  LinComb out(1);
  for (const auto& v : s.labels()) out += LinComb::of(graft_up_at(t, s, v));
  return out;
}

LinComb graft_up(const LinComb& a, const Preorder& s) {
  LinComb out(1);
  for (const auto& [k, term] : a.terms())
    out += term.second * graft_up(term.first.factors[0], s);
  return out;
}

LinComb graft_up(const Preorder& t, const LinComb& b) {
  LinComb out(1);
  for (const auto& [k, term] : b.terms())
    out += term.second * graft_up(t, term.first.factors[0]);
  return out;
}

LinComb graft_up(const LinComb& a, const LinComb& b) {
  LinComb out(1);
  for (const auto& [k, term] : a.terms())
    out += term.second * graft_up(term.first.factors[0], b);
  return out;
}

Preorder bplus(const Preorder& t, const std::string& star) {
  return graft_at(t, Preorder::point(star), star);
}

LinComb prelie_defect(const Preorder& t1, const Preorder& t2,
                      const Preorder& t3) {
  return graft(t1, graft(t2, t3)) - graft(graft(t1, t2), t3);
}

LinComb prelie_defect_direct(const Preorder& t1, const Preorder& t2,
                             const Preorder& t3) {
  LinComb out(1);
  for (const auto& v : t3.labels()) {
    const Preorder inner = graft_at(t2, t3, v);
    for (const auto& u : t3.labels())
      out += LinComb::of(graft_at(t1, inner, u));
  }
  return out;
}

LinComb prelie_defect_up(const Preorder& t1, const Preorder& t2,
                         const Preorder& t3) {
  return graft_up(t1, graft_up(t2, t3)) - graft_up(graft_up(t1, t2), t3);
}

LinComb psi_each(const LinComb& a, const std::vector<std::string>& g1,
                 const std::vector<std::string>& g2) {
  LinComb out(a.rank(), a.level());
  for (const auto& [k, term] : a.terms()) {
    const Preorder& p = term.first.factors[0];
    out.add_term(TensorWord({psi(p, p.mask_of(g1), p.mask_of(g2))}), term.second);
  }
  return out;
}

std::pair<Preorder, Preorder> updown_exchange(const Preorder& t,
                                              const Preorder& s,
                                              const Preorder& u,
                                              const std::string& sv,
                                              const std::string& uv) {
  const Preorder lhs = graft_up_at(t, graft_at(s, u, uv), sv);
  const Preorder inner = graft_at(graft_up_at(t, s, sv), u, uv);
  const Preorder rhs = psi(inner, inner.mask_of(t.labels()), inner.mask_of(u.labels()));
  return {lhs, rhs};
}

std::pair<Preorder, Preorder> downup_exchange(const Preorder& t,
                                              const Preorder& s,
                                              const Preorder& u,
                                              const std::string& sv,
                                              const std::string& uv) {
  const Preorder lhs = graft_at(t, graft_up_at(s, u, uv), sv);
  const Preorder inner = graft_up_at(graft_at(t, s, sv), u, uv);
  const Preorder rhs = psi(inner, inner.mask_of(t.labels()), inner.mask_of(u.labels()));
  return {lhs, rhs};
}

std::pair<LinComb, LinComb> mixed_exchange_identity(const Preorder& t,
                                                    const Preorder& s,
                                                    const Preorder& u) {
  const LinComb lhs =
      graft_up(t, graft(s, u)) -
      psi_each(graft(graft_up(t, s), u), t.labels(), u.labels());
  const LinComb rhs =
      graft(s, graft_up(t, u)) -
      psi_each(graft_up(graft(s, t), u), s.labels(), u.labels());
  return {lhs, rhs};
}

}  // namespace topalg
