#include "topalg/textio.hpp"

#include <algorithm>
#include <bit>

namespace topalg {

nlohmann::ordered_json preorder_to_json(const Preorder& t) {
  nlohmann::ordered_json j;
  j["elements"] = t.labels();
  auto rels = nlohmann::ordered_json::array();
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i < t.size(); ++i)
    for (int k = 0; k < t.size(); ++k)
      if (i != k && t.leq(i, k)) pairs.emplace_back(t.label(i), t.label(k));
  std::sort(pairs.begin(), pairs.end());
  for (const auto& [x, y] : pairs) rels.push_back({x, y});
  j["relations"] = std::move(rels);
  return j;
}

Preorder preorder_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array())
    throw ParseError("expected an object with an \"elements\" array");
  std::vector<std::string> labels;
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) throw ParseError("elements must be strings");
    labels.push_back(e.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  if (j.contains("relations")) {
    if (!j["relations"].is_array()) throw ParseError("relations must be an array");
    for (const auto& r : j["relations"]) {
      if (!r.is_array() || r.size() != 2 || !r[0].is_string() || !r[1].is_string())
        throw ParseError("each relation must be a pair of labels");
      pairs.emplace_back(r[0].get<std::string>(), r[1].get<std::string>());
    }
  }
  return Preorder::from_relations(std::move(labels), pairs);
}

nlohmann::ordered_json lincomb_to_json(const LinComb& a) {
  nlohmann::ordered_json j;
  j["rank"] = a.rank();
  j["level"] = a.level() == Level::Labelled ? "labelled" : "unlabelled";
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [k, term] : a.terms()) {
    nlohmann::ordered_json t;
    t["coeff"] = term.second.str();
    auto factors = nlohmann::ordered_json::array();
    for (const auto& f : term.first.factors) factors.push_back(f.to_text());
    t["factors"] = std::move(factors);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

std::string render_dot(const Preorder& t) {
  const auto classes = t.equiv_classes();
  const int k = static_cast<int>(classes.size());
  auto class_label = [&](int c) {
    std::string s;
    bool first = true;
    for (Mask m = classes[c]; m; m &= m - 1) {
      if (!first) s += ",";
      s += t.label(std::countr_zero(m));
      first = false;
    }
    return s;
  };
  auto leq_class = [&](int a, int b) {
    return t.leq(lowest_bit(classes[a]), lowest_bit(classes[b]));
  };

  std::string out = "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int c = 0; c < k; ++c)
    out += "  n" + std::to_string(c) + " [label=\"" + class_label(c) + "\"];\n";
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if (a == b || !leq_class(a, b) || leq_class(b, a)) continue;
      bool covering = true;  // no class strictly between a and b
      for (int c = 0; c < k && covering; ++c) {
        if (c == a || c == b) continue;
        if (leq_class(a, c) && !leq_class(c, a) && leq_class(c, b) && !leq_class(b, c))
          covering = false;
      }
      if (covering)
        out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace topalg
