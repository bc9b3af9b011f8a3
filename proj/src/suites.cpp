#include "topalg/suites.hpp"

#include <chrono>
#include <functional>
#include <map>

#include "topalg/canonical.hpp"
#include "topalg/coproducts.hpp"
#include "topalg/graft.hpp"
#include "topalg/guin_oudom.hpp"
#include "topalg/lincomb.hpp"
#include "topalg/random_gen.hpp"

namespace topalg {

namespace {

constexpr int kFailureDetail = 25;

void record_failure(SuiteReport& rep, nlohmann::ordered_json detail) {
  ++rep.failure_count;
  if (static_cast<int>(rep.failures.size()) < kFailureDetail)
    rep.failures.push_back(std::move(detail));
}

void check(SuiteReport& rep, bool ok, const std::function<nlohmann::ordered_json()>& detail) {
  ++rep.instances;
  if (!ok) record_failure(rep, detail());
}

std::vector<Preorder> connected_topologies_on(const std::vector<std::string>& labels) {
  std::vector<Preorder> out;
  for (const auto& t : all_topologies_on(labels))
    if (t.connected()) out.push_back(t);
  return out;
}

// Connected labelled spaces of sizes 1..2 on prefixes of the given pool.
std::vector<Preorder> small_connected_pool(const std::vector<std::string>& pool) {
  std::vector<Preorder> out = connected_topologies_on({pool[0]});
  for (const auto& t : connected_topologies_on({pool[0], pool[1]})) out.push_back(t);
  return out;
}

LinComb opposite_each(const LinComb& a) {
  LinComb out(a.rank(), a.level());
  for (const auto& [k, term] : a.terms()) {
    TensorWord w;
    for (const auto& f : term.first.factors) w.factors.push_back(opposite(f));
    out.add_term(std::move(w), term.second);
  }
  return out;
}

// ---------------------------------------------------------------------------

void suite_counts(const SuiteOptions& opts, SuiteReport& rep) {
  const int max_n = opts.max_size < 0 ? 4 : std::min(opts.max_size, 5);
  rep.bounds["max_size"] = max_n;
  const long long labeled_expect[] = {1, 1, 4, 29, 355};
  const long long unlabeled_expect[] = {1, 1, 3, 9, 33};
  auto counts = nlohmann::ordered_json::object();
  for (int n = 0; n <= max_n; ++n) {
    const auto& lab = enumerate_labeled(n);
    const auto& unl = enumerate_unlabeled(n);
    counts[std::to_string(n)] = {{"labeled", lab.size()}, {"unlabeled", unl.size()}};
    if (n <= 4) {
      check(rep, static_cast<long long>(lab.size()) == labeled_expect[n], [&] {
        return nlohmann::ordered_json{{"check", "labeled count"},
                                      {"n", n},
                                      {"expected", labeled_expect[n]},
                                      {"got", lab.size()}};
      });
      check(rep, static_cast<long long>(unl.size()) == unlabeled_expect[n], [&] {
        return nlohmann::ordered_json{{"check", "unlabeled count"},
                                      {"n", n},
                                      {"expected", unlabeled_expect[n]},
                                      {"got", unl.size()}};
      });
    }
    // Orbit-stabilizer consistency: summing n!/sigma over the classes
    // recovers the labelled count.
    Int fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    Int orbit_sum = 0;
    for (const auto& t : unl) orbit_sum += fact / sigma(t);
    check(rep, orbit_sum == Int(static_cast<long long>(lab.size())), [&] {
      return nlohmann::ordered_json{{"check", "orbit sum"},
                                    {"n", n},
                                    {"expected", lab.size()},
                                    {"got", orbit_sum.str()}};
    });
  }
  rep.notes["counts"] = std::move(counts);
}

// ---------------------------------------------------------------------------

void suite_prelie(const SuiteOptions& opts, SuiteReport& rep) {
  const int trials = opts.trials < 0 ? 200 : opts.trials;
  rep.bounds["exhaustive_component_size"] = 2;
  rep.bounds["random_trials"] = trials;
  rep.bounds["random_max_size"] = 3;

  auto run_triple = [&](const Preorder& t1, const Preorder& t2, const Preorder& t3) {
    const LinComb d12 = prelie_defect(t1, t2, t3);
    const LinComb d21 = prelie_defect(t2, t1, t3);
    const LinComb direct = prelie_defect_direct(t1, t2, t3);
    auto detail = [&](const char* what, const LinComb& a, const LinComb& b) {
      return nlohmann::ordered_json{{"check", what},
                                    {"t1", t1.to_text()},
                                    {"t2", t2.to_text()},
                                    {"t3", t3.to_text()},
                                    {"lhs", a.to_string()},
                                    {"rhs", b.to_string()}};
    };
    check(rep, d12 == d21, [&] { return detail("defect symmetry", d12, d21); });
    check(rep, d12 == direct,
          [&] { return detail("defect closed form", d12, direct); });
    const LinComb u12 = prelie_defect_up(t1, t2, t3);
    const LinComb u21 = prelie_defect_up(t2, t1, t3);
    check(rep, u12 == u21, [&] { return detail("upward defect symmetry", u12, u21); });
    // The upward defect is the opposite-transport of the downward one.
    const LinComb transported =
        opposite_each(prelie_defect(opposite(t1), opposite(t2), opposite(t3)));
    check(rep, u12 == transported,
          [&] { return detail("upward defect transport", u12, transported); });
  };

  const auto pool1 = small_connected_pool({"a", "b"});
  const auto pool2 = small_connected_pool({"c", "d"});
  const auto pool3 = small_connected_pool({"e", "f"});
  for (const auto& t1 : pool1)
    for (const auto& t2 : pool2)
      for (const auto& t3 : pool3) run_triple(t1, t2, t3);

  CounterRng rng{opts.seed, 0};
  for (int k = 0; k < trials; ++k) {
    const int n1 = 1 + static_cast<int>(rng.below(3));
    const int n2 = 1 + static_cast<int>(rng.below(3));
    const int n3 = 1 + static_cast<int>(rng.below(3));
    run_triple(random_connected_preorder(rng, n1, "r"),
               random_connected_preorder(rng, n2, "s"),
               random_connected_preorder(rng, n3, "t"));
  }
}

// ---------------------------------------------------------------------------

void suite_assoc_props(const SuiteOptions& opts, SuiteReport& rep) {
  (void)opts;
  rep.bounds["exhaustive_component_size"] = 2;
  const auto pool1 = small_connected_pool({"a", "b"});
  const auto pool2 = small_connected_pool({"c", "d"});
  const auto pool3 = small_connected_pool({"e", "f"});
  for (const auto& t1 : pool1) {
    for (const auto& t2 : pool2) {
      for (const auto& t3 : pool3) {
        // (T1 v-graft T2) w-graft T3  =  T1 v-graft (T2 w-graft T3)
        for (const auto& v : t2.labels()) {
          for (const auto& w : t3.labels()) {
            const Preorder lhs = graft_at(graft_at(t1, t2, v), t3, w);
            const Preorder rhs = graft_at(t1, graft_at(t2, t3, w), v);
            check(rep, lhs == rhs, [&] {
              return nlohmann::ordered_json{{"check", "graft associativity"},
                                            {"t1", t1.to_text()},
                                            {"t2", t2.to_text()},
                                            {"t3", t3.to_text()},
                                            {"v", v},
                                            {"w", w},
                                            {"lhs", lhs.to_text()},
                                            {"rhs", rhs.to_text()}};
            });
          }
        }
        // T1 v-graft (T2 w-graft T3)  =  T2 w-graft (T1 v-graft T3), v,w in X3
        for (const auto& v : t3.labels()) {
          for (const auto& w : t3.labels()) {
            const Preorder lhs = graft_at(t1, graft_at(t2, t3, w), v);
            const Preorder rhs = graft_at(t2, graft_at(t1, t3, v), w);
            check(rep, lhs == rhs, [&] {
              return nlohmann::ordered_json{{"check", "graft commutation"},
                                            {"t1", t1.to_text()},
                                            {"t2", t2.to_text()},
                                            {"t3", t3.to_text()},
                                            {"v", v},
                                            {"w", w},
                                            {"lhs", lhs.to_text()},
                                            {"rhs", rhs.to_text()}};
            });
          }
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------

bool counit_ok(const LinComb& cop, const Preorder& t) {
  LinComb left(1), right(1);
  for (const auto& [k, term] : cop.terms()) {
    if (term.first.factors[0].empty())
      left.add_term(TensorWord({term.first.factors[1]}), term.second);
    if (term.first.factors[1].empty())
      right.add_term(TensorWord({term.first.factors[0]}), term.second);
  }
  return left == LinComb::of(t) && right == LinComb::of(t);
}

void suite_coassoc(const SuiteOptions& opts, SuiteReport& rep) {
  const int max_n = opts.max_size < 0 ? 4 : std::min(opts.max_size, 4);
  rep.bounds["max_size"] = max_n;
  const std::function<LinComb(const Preorder&)> cops[] = {
      [](const Preorder& x) { return delta_open(x); },
      [](const Preorder& x) { return delta_graft(x); }};
  const char* names[] = {"delta_open", "delta_graft"};
  for (int n = 0; n <= max_n; ++n) {
    for (const auto& t : enumerate_labeled(n)) {
      for (int c = 0; c < 2; ++c) {
        const LinComb defect = coassoc_defect(cops[c], t);
        check(rep, defect.is_zero(), [&] {
          return nlohmann::ordered_json{{"check", "coassociativity"},
                                        {"coproduct", names[c]},
                                        {"t", t.to_text()},
                                        {"defect", defect.to_string()}};
        });
        check(rep, counit_ok(cops[c](t), t), [&] {
          return nlohmann::ordered_json{{"check", "counit"},
                                        {"coproduct", names[c]},
                                        {"t", t.to_text()}};
        });
      }
    }
  }
}

// ---------------------------------------------------------------------------

void suite_bialgebra(const SuiteOptions& opts, SuiteReport& rep) {
  const int max_total = opts.max_size < 0 ? 4 : std::min(opts.max_size, 4);
  rep.bounds["max_total_size"] = max_total;
  const std::vector<std::string> pool1 = {"a", "b", "c", "d"};
  const std::vector<std::string> pool2 = {"p", "q", "r", "s"};
  const std::function<LinComb(const Preorder&)> cops[] = {
      [](const Preorder& x) { return delta_open(x); },
      [](const Preorder& x) { return delta_graft(x); }};
  const char* names[] = {"delta_open", "delta_graft"};
  for (int s1 = 1; s1 < max_total; ++s1) {
    for (int s2 = 1; s1 + s2 <= max_total; ++s2) {
      const auto lhs_pool = all_topologies_on(
          std::vector<std::string>(pool1.begin(), pool1.begin() + s1));
      const auto rhs_pool = all_topologies_on(
          std::vector<std::string>(pool2.begin(), pool2.begin() + s2));
      for (const auto& t1 : lhs_pool) {
        for (const auto& t2 : rhs_pool) {
          for (int c = 0; c < 2; ++c) {
            const LinComb defect = product_compat_defect(cops[c], t1, t2);
            check(rep, defect.is_zero(), [&] {
              return nlohmann::ordered_json{{"check", "multiplicativity"},
                                            {"coproduct", names[c]},
                                            {"t1", t1.to_text()},
                                            {"t2", t2.to_text()},
                                            {"defect", defect.to_string()}};
            });
          }
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------

void suite_duality(const SuiteOptions& opts, SuiteReport& rep) {
  (void)opts;
  rep.bounds["factor_sizes"] = {1, 2};
  std::vector<Preorder> firsts, seconds;
  for (int s : {1, 2}) {
    for (const auto& rep_t : enumerate_unlabeled(s)) {
      std::map<std::string, std::string> m1, m2;
      const std::vector<std::string> l1 = {"a", "b"}, l2 = {"c", "d"};
      for (int i = 0; i < s; ++i) {
        m1.emplace(rep_t.label(i), l1[i]);
        m2.emplace(rep_t.label(i), l2[i]);
      }
      firsts.push_back(relabel(rep_t, m1));
      seconds.push_back(relabel(rep_t, m2));
    }
  }
  for (const auto& t1 : firsts) {
    for (const auto& t2 : seconds) {
      for (const auto& tp : enumerate_labeled(t1.size() + t2.size())) {
        const Int lhs = pairing_lhs(t1, t2, tp);
        const Int rhs = pairing_rhs(t1, t2, tp);
        check(rep, lhs == rhs, [&] {
          return nlohmann::ordered_json{{"check", "duality pairing"},
                                        {"t1", t1.to_text()},
                                        {"t2", t2.to_text()},
                                        {"target", tp.to_text()},
                                        {"lhs", lhs.str()},
                                        {"rhs", rhs.str()}};
        });
      }
    }
  }
}

// ---------------------------------------------------------------------------

void suite_psi_diagrams(const SuiteOptions& opts, SuiteReport& rep) {
  (void)opts;
  rep.bounds["exhaustive_component_size"] = 2;
  const auto pool1 = small_connected_pool({"a", "b"});
  const auto pool2 = small_connected_pool({"c", "d"});
  const auto pool3 = small_connected_pool({"e", "f"});
  for (const auto& t : pool1) {
    for (const auto& s : pool2) {
      for (const auto& u : pool3) {
        for (const auto& sv : s.labels()) {
          for (const auto& uv : u.labels()) {
            const auto [lhs_ud, rhs_ud] = updown_exchange(t, s, u, sv, uv);
            check(rep, lhs_ud == rhs_ud, [&] {
              return nlohmann::ordered_json{{"check", "up-down exchange"},
                                            {"t", t.to_text()},
                                            {"s", s.to_text()},
                                            {"u", u.to_text()},
                                            {"sv", sv},
                                            {"uv", uv},
                                            {"lhs", lhs_ud.to_text()},
                                            {"rhs", rhs_ud.to_text()}};
            });
            // psi is a projector: applying the cut twice changes nothing.
            const Preorder again =
                psi(rhs_ud, rhs_ud.mask_of(t.labels()), rhs_ud.mask_of(u.labels()));
            check(rep, again == rhs_ud, [&] {
              return nlohmann::ordered_json{{"check", "psi idempotence"},
                                            {"space", rhs_ud.to_text()}};
            });
            const auto [lhs_du, rhs_du] = downup_exchange(t, s, u, sv, uv);
            check(rep, lhs_du == rhs_du, [&] {
              return nlohmann::ordered_json{{"check", "down-up exchange"},
                                            {"t", t.to_text()},
                                            {"s", s.to_text()},
                                            {"u", u.to_text()},
                                            {"sv", sv},
                                            {"uv", uv},
                                            {"lhs", lhs_du.to_text()},
                                            {"rhs", rhs_du.to_text()}};
            });
          }
        }
        const auto [lhs_id, rhs_id] = mixed_exchange_identity(t, s, u);
        check(rep, lhs_id == rhs_id, [&] {
          return nlohmann::ordered_json{{"check", "mixed exchange identity"},
                                        {"t", t.to_text()},
                                        {"s", s.to_text()},
                                        {"u", u.to_text()},
                                        {"lhs", lhs_id.to_string()},
                                        {"rhs", rhs_id.to_string()}};
        });
      }
    }
  }
}

// ---------------------------------------------------------------------------

void suite_gamma_witness(const SuiteOptions& opts, SuiteReport& rep) {
  const int max_n = opts.max_size < 0 ? 4 : std::min(opts.max_size, 4);
  rep.bounds["alternative_reading_max_size"] = max_n;

  // Frozen values.
  const Preorder pt = Preorder::point("a");
  check(rep, gamma(pt) == LinComb::single(TensorWord({pt, pt})), [&] {
    return nlohmann::ordered_json{{"check", "gamma of a point"},
                                  {"got", gamma(pt).to_string()}};
  });
  {
    const Preorder chain = Preorder::parse("{a<b}");
    const Preorder disc = Preorder::parse("{a, b}");
    const Preorder indisc = Preorder::parse("{a~b}");
    LinComb expect(2);
    expect.add_term(TensorWord({disc, chain}), 1);
    expect.add_term(TensorWord({chain, indisc}), 1);
    check(rep, gamma(chain) == expect, [&] {
      return nlohmann::ordered_json{{"check", "gamma of a 2-chain"},
                                    {"expected", expect.to_string()},
                                    {"got", gamma(chain).to_string()}};
    });
  }
  for (int n = 1; n <= 3; ++n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("d" + std::to_string(i));
    const Preorder disc = Preorder::discrete(labels);
    check(rep, gamma(disc) == LinComb::single(TensorWord({disc, disc})), [&] {
      return nlohmann::ordered_json{{"check", "gamma of a discrete space"},
                                    {"n", n},
                                    {"got", gamma(disc).to_string()}};
    });
  }

  // A point passes the compatibility diagram ...
  {
    const auto [lhs, rhs] = gamma_delta_compat_sides(pt);
    check(rep, lhs.projected_unlabeled() == rhs.projected_unlabeled(), [&] {
      return nlohmann::ordered_json{{"check", "gamma-delta compatibility on a point"},
                                    {"lhs", lhs.to_string()},
                                    {"rhs", rhs.to_string()}};
    });
  }
  // ... and the diamond witnesses the incompatibility.
  {
    const Preorder diamond = Preorder::parse("{a<b, a<c, b<d, c<d}");
    const auto [lhs, rhs] = gamma_delta_compat_sides(diamond);
    const LinComb pl = lhs.projected_unlabeled();
    const LinComb pr = rhs.projected_unlabeled();
    check(rep, pl != pr, [&] {
      return nlohmann::ordered_json{
          {"check", "gamma-delta incompatibility witness (diamond)"},
          {"note", "the two sides unexpectedly coincide"},
          {"lhs", pl.to_string()},
          {"rhs", pr.to_string()}};
    });
    rep.notes["diamond_lhs_terms"] = pl.term_count();
    rep.notes["diamond_rhs_terms"] = pr.term_count();
  }

  // How many classes of size <= max_n does the alternative reading of the
  // class condition affect?  (Informational only.)
  long long affected = 0;
  for (int n = 0; n <= max_n; ++n) {
    for (const auto& t : enumerate_unlabeled(n)) {
      ++rep.instances;
      if (gamma(t, GammaReading::Verbatim) != gamma(t, GammaReading::ClassesOfFiner))
        ++affected;
    }
  }
  rep.notes["alternative_reading_differs"] = affected;
}

// ---------------------------------------------------------------------------

void suite_hopf_star(const SuiteOptions& opts, SuiteReport& rep) {
  const int max_total = opts.max_size < 0 ? 5 : std::min(opts.max_size, 5);
  rep.bounds["max_total_size"] = max_total;
  const std::vector<std::string> pool1 = {"a", "b", "c", "d", "e"};
  const std::vector<std::string> pool2 = {"m", "n", "o", "p", "q"};
  const std::vector<std::string> pool3 = {"x", "y", "z"};
  auto prefix = [](const std::vector<std::string>& pool, int s) {
    return std::vector<std::string>(pool.begin(), pool.begin() + s);
  };

  // Unit: the empty space is a two-sided unit for star.
  const Preorder one;
  for (int s = 0; s <= std::min(3, max_total); ++s) {
    for (const auto& t : all_topologies_on(prefix(pool1, s))) {
      check(rep, gl_star(t, one) == LinComb::of(t) && gl_star(one, t) == LinComb::of(t),
            [&] {
              return nlohmann::ordered_json{{"check", "star unit"},
                                            {"t", t.to_text()}};
            });
    }
  }

  // Frozen: point star point.
  {
    const Preorder pa = Preorder::point("a");
    const Preorder pb = Preorder::point("b");
    LinComb expect(1);
    expect.add_term(TensorWord({Preorder::parse("{a, b}")}), 1);
    expect.add_term(TensorWord({Preorder::parse("{b<a}")}), 1);
    check(rep, gl_star(pa, pb) == expect, [&] {
      return nlohmann::ordered_json{{"check", "point star point"},
                                    {"expected", expect.to_string()},
                                    {"got", gl_star(pa, pb).to_string()}};
    });
  }

  // The defining recursion agrees with the closed form.
  for (int s1 = 0; s1 <= max_total; ++s1) {
    for (int s2 = 0; s1 + s2 <= max_total; ++s2) {
      if (s1 > 4 || s2 > 4) continue;  // enumeration bound per factor
      for (const auto& a : all_topologies_on(prefix(pool1, s1))) {
        for (const auto& b : all_topologies_on(prefix(pool2, s2))) {
          const LinComb rec = extended_graft(a, b);
          const LinComb closed = closed_form_graft(a, b);
          check(rep, rec == closed, [&] {
            return nlohmann::ordered_json{{"check", "extension recursion vs closed form"},
                                          {"a", a.to_text()},
                                          {"b", b.to_text()},
                                          {"recursion", rec.to_string()},
                                          {"closed", closed.to_string()}};
          });
        }
      }
    }
  }

  // Associativity of star.
  for (int s1 = 1; s1 <= max_total - 2; ++s1) {
    for (int s2 = 1; s1 + s2 <= max_total - 1; ++s2) {
      for (int s3 = 1; s1 + s2 + s3 <= max_total; ++s3) {
        if (s1 > 4 || s2 > 4 || s3 > 3) continue;
        for (const auto& a : all_topologies_on(prefix(pool1, s1))) {
          for (const auto& b : all_topologies_on(prefix(pool2, s2))) {
            for (const auto& c : all_topologies_on(prefix(pool3, s3))) {
              const LinComb lhs = gl_star(gl_star(a, b), LinComb::of(c));
              const LinComb rhs = gl_star(LinComb::of(a), gl_star(b, c));
              check(rep, lhs == rhs, [&] {
                return nlohmann::ordered_json{{"check", "star associativity"},
                                              {"a", a.to_text()},
                                              {"b", b.to_text()},
                                              {"c", c.to_text()},
                                              {"lhs", lhs.to_string()},
                                              {"rhs", rhs.to_string()}};
              });
            }
          }
        }
      }
    }
  }

  // The unshuffle coproduct is multiplicative for star.
  for (int s1 = 1; s1 < max_total; ++s1) {
    for (int s2 = 1; s1 + s2 <= max_total; ++s2) {
      if (s1 > 4 || s2 > 4) continue;
      for (const auto& a : all_topologies_on(prefix(pool1, s1))) {
        for (const auto& b : all_topologies_on(prefix(pool2, s2))) {
          const LinComb lhs = unshuffle(gl_star(a, b));
          const LinComb rhs = gl_star_rank2(unshuffle(a), unshuffle(b));
          check(rep, lhs == rhs, [&] {
            return nlohmann::ordered_json{{"check", "unshuffle multiplicativity"},
                                          {"a", a.to_text()},
                                          {"b", b.to_text()},
                                          {"lhs", lhs.to_string()},
                                          {"rhs", rhs.to_string()}};
          });
        }
      }
    }
  }
}

using SuiteFn = void (*)(const SuiteOptions&, SuiteReport&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> reg = {
      {"counts", suite_counts},
      {"prelie", suite_prelie},
      {"assoc-props", suite_assoc_props},
      {"coassoc", suite_coassoc},
      {"bialgebra", suite_bialgebra},
      {"duality", suite_duality},
      {"psi-diagrams", suite_psi_diagrams},
      {"gamma-witness", suite_gamma_witness},
      {"hopf-star", suite_hopf_star},
  };
  return reg;
}

}  // namespace

nlohmann::ordered_json SuiteReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["bounds"] = bounds;
  j["seed"] = seed;
  j["instances"] = instances;
  j["failure_count"] = failure_count;
  j["failures"] = failures;
  j["notes"] = notes;
  j["wall_time_s"] = wall_time_s;
  return j;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
  for (const auto& [n, fn] : registry()) {
    if (n == name) {
      SuiteReport rep;
      rep.suite = name;
      rep.seed = opts.seed;
      const auto start = std::chrono::steady_clock::now();
      fn(opts, rep);
      rep.wall_time_s =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
              .count();
      return rep;
    }
  }
  throw DomainError("UnknownSuite", "no suite named '" + name + "'");
}

std::vector<Preorder> all_topologies_on(const std::vector<std::string>& labels) {
  const int n = static_cast<int>(labels.size());
  std::vector<Preorder> out;
  for (const auto& t : enumerate_labeled(n)) {
    std::map<std::string, std::string> phi;
    for (int i = 0; i < n; ++i) phi.emplace(t.label(i), labels[i]);
    out.push_back(relabel(t, phi));
  }
  return out;
}

}  // namespace topalg
