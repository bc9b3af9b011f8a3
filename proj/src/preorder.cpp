#include "topalg/preorder.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <set>

namespace topalg {

int popcount(Mask m) { return std::popcount(m); }

int lowest_bit(Mask m) { return m ? std::countr_zero(m) : -1; }

bool mask_subset(Mask a, Mask b) { return (a & ~b) == 0; }

namespace {

constexpr int kMaxPoints = 64;   // bit-row representation limit
constexpr int kMaxOpenScan = 22; // open_sets() enumerates 2^n subsets

bool label_char_ok(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '*' ||
         c == '.' || c == '\'' || c == '-' || c == '+';
}

void check_label(const std::string& l) {
  if (l.empty()) throw DomainError("InvalidLabel", "empty label");
  for (char c : l) {
    if (!label_char_ok(c))
      throw DomainError("InvalidLabel", "bad character in label '" + l + "'");
  }
}

// In-place reflexive-transitive closure of bit rows.
void close_rows(std::vector<Mask>& rows) {
  const int n = static_cast<int>(rows.size());
  for (int i = 0; i < n; ++i) rows[i] |= Mask{1} << i;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if ((rows[i] >> k) & 1u) rows[i] |= rows[k];
    }
  }
}

bool rows_transitive(const std::vector<Mask>& rows) {
  const int n = static_cast<int>(rows.size());
  for (int i = 0; i < n; ++i) {
    for (Mask m = rows[i]; m; m &= m - 1) {
      const int j = std::countr_zero(m);
      if (!mask_subset(rows[j], rows[i])) return false;
    }
  }
  return true;
}

}  // namespace

Preorder Preorder::from_rows(std::vector<std::string> sorted_labels,
                             std::vector<Mask> rows) {
  Preorder p;
  p.labels_ = std::move(sorted_labels);
  p.rel_ = std::move(rows);
  return p;
}

Preorder Preorder::from_relations(
    std::vector<std::string> labels,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  if (labels.size() > kMaxPoints)
    throw size_limit_error("at most 64 points supported");
  for (const auto& l : labels) check_label(l);
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    throw DomainError("DuplicateLabel", "label list contains repeats");

  Preorder p;
  p.labels_ = std::move(labels);
  p.rel_.assign(p.labels_.size(), 0);
  for (const auto& [x, y] : pairs) {
    const int i = p.index_of(x);
    const int j = p.index_of(y);
    p.rel_[i] |= Mask{1} << j;
  }
  close_rows(p.rel_);
  return p;
}

Preorder Preorder::discrete(std::vector<std::string> labels) {
  return from_relations(std::move(labels), {});
}

Preorder Preorder::indiscrete(std::vector<std::string> labels) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (size_t i = 0; i + 1 < labels.size(); ++i) {
    pairs.emplace_back(labels[i], labels[i + 1]);
    pairs.emplace_back(labels[i + 1], labels[i]);
  }
  return from_relations(std::move(labels), pairs);
}

Preorder Preorder::point(const std::string& label) {
  return from_relations({label}, {});
}

Preorder Preorder::chain(const std::vector<std::string>& labels) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (size_t i = 0; i + 1 < labels.size(); ++i)
    pairs.emplace_back(labels[i], labels[i + 1]);
  return from_relations(labels, pairs);
}

int Preorder::index_of(const std::string& label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label)
    throw DomainError("UnknownLabel", "no point named '" + label + "'");
  return static_cast<int>(it - labels_.begin());
}

bool Preorder::has_label(const std::string& label) const {
  return std::binary_search(labels_.begin(), labels_.end(), label);
}

bool Preorder::leq(const std::string& x, const std::string& y) const {
  return leq(index_of(x), index_of(y));
}

Mask Preorder::down_set(int i) const {
  Mask m = 0;
  for (int j = 0; j < size(); ++j)
    if (leq(j, i)) m |= Mask{1} << j;
  return m;
}

Mask Preorder::full_mask() const {
  return size() == 64 ? ~Mask{0} : (Mask{1} << size()) - 1;
}

bool Preorder::is_open(Mask subset) const {
  // Up-closed: the up-set of every member stays inside.
  for (Mask m = subset; m; m &= m - 1) {
    if (!mask_subset(rel_[std::countr_zero(m)], subset)) return false;
  }
  return true;
}

std::vector<Mask> Preorder::open_sets() const {
  if (size() > kMaxOpenScan)
    throw size_limit_error("open-set scan limited to 22 points");
  std::vector<Mask> out;
  const Mask all = full_mask();
  for (Mask y = 0;; ++y) {
    if (is_open(y)) out.push_back(y);
    if (y == all) break;
  }
  return out;
}

Mask Preorder::min_set() const {
  Mask m = 0;
  for (int i = 0; i < size(); ++i) {
    bool minimal = true;
    for (int j = 0; j < size(); ++j) {
      if (leq(j, i) && !leq(i, j)) {
        minimal = false;
        break;
      }
    }
    if (minimal) m |= Mask{1} << i;
  }
  return m;
}

bool Preorder::is_t0() const {
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (equiv(i, j)) return false;
  return true;
}

Preorder Preorder::restrict_to(Mask subset) const {
  std::vector<int> keep;
  for (Mask m = subset & full_mask(); m; m &= m - 1)
    keep.push_back(std::countr_zero(m));
  std::vector<std::string> labels;
  labels.reserve(keep.size());
  for (int i : keep) labels.push_back(labels_[i]);
  std::vector<Mask> rows(keep.size(), 0);
  for (size_t a = 0; a < keep.size(); ++a)
    for (size_t b = 0; b < keep.size(); ++b)
      if (leq(keep[a], keep[b])) rows[a] |= Mask{1} << b;
  return from_rows(std::move(labels), std::move(rows));
}

Preorder Preorder::restrict_to(const std::vector<std::string>& labels) const {
  return restrict_to(mask_of(labels));
}

Mask Preorder::mask_of(const std::vector<std::string>& labels) const {
  Mask m = 0;
  for (const auto& l : labels) m |= Mask{1} << index_of(l);
  return m;
}

std::vector<Mask> Preorder::connected_components() const {
  // Components of the symmetrized comparability graph.
  std::vector<Mask> comps;
  Mask seen = 0;
  for (int i = 0; i < size(); ++i) {
    if ((seen >> i) & 1u) continue;
    Mask comp = Mask{1} << i;
    for (;;) {
      Mask grow = comp;
      for (Mask m = comp; m; m &= m - 1) {
        const int v = std::countr_zero(m);
        grow |= rel_[v] | down_set(v);
      }
      if (grow == comp) break;
      comp = grow;
    }
    comps.push_back(comp);
    seen |= comp;
  }
  return comps;
}

std::vector<Mask> Preorder::equiv_classes() const {
  std::vector<Mask> classes;
  Mask seen = 0;
  for (int i = 0; i < size(); ++i) {
    if ((seen >> i) & 1u) continue;
    Mask cls = 0;
    for (int j = 0; j < size(); ++j)
      if (equiv(i, j)) cls |= Mask{1} << j;
    classes.push_back(cls);
    seen |= cls;
  }
  return classes;
}

bool Preorder::connected() const {
  return size() > 0 && connected_components().size() == 1;
}

bool Preorder::is_valid() const {
  if (!std::is_sorted(labels_.begin(), labels_.end())) return false;
  if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end())
    return false;
  if (rel_.size() != labels_.size()) return false;
  for (int i = 0; i < size(); ++i) {
    if (!leq(i, i)) return false;
    if (rel_[i] & ~full_mask()) return false;
  }
  return rows_transitive(rel_);
}

std::string Preorder::to_text() const {
  std::vector<std::string> entries;
  Mask in_pair = 0;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) {
      if (i != j && leq(i, j)) {
        in_pair |= (Mask{1} << i) | (Mask{1} << j);
        pairs.emplace_back(labels_[i], labels_[j]);
      }
    }
  }
  std::sort(pairs.begin(), pairs.end());
  for (const auto& [x, y] : pairs) entries.push_back(x + "<" + y);
  for (int i = 0; i < size(); ++i)
    if (!((in_pair >> i) & 1u)) entries.push_back(labels_[i]);

  std::string out = "{";
  for (size_t k = 0; k < entries.size(); ++k) {
    if (k) out += ", ";
    out += entries[k];
  }
  out += "}";
  return out;
}

Preorder Preorder::parse(const std::string& text) {
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError(msg + " at offset " + std::to_string(pos));
  };
  auto read_label = [&]() -> std::string {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && label_char_ok(text[pos])) ++pos;
    if (pos == start) throw fail("expected a label");
    return text.substr(start, pos - start);
  };

  skip_ws();
  if (pos >= text.size() || text[pos] != '{') throw fail("expected '{'");
  ++pos;
  std::set<std::string> elements;
  std::vector<std::pair<std::string, std::string>> pairs;
  skip_ws();
  if (pos < text.size() && text[pos] == '}') {
    ++pos;
  } else {
    for (;;) {
      std::string x = read_label();
      elements.insert(x);
      skip_ws();
      // Relators chain: "a<b<c" and "a~b<c" mean a<b, b<c resp. a~b, b<c.
      while (pos < text.size() && (text[pos] == '<' || text[pos] == '~')) {
        const char op = text[pos];
        ++pos;
        std::string y = read_label();
        elements.insert(y);
        pairs.emplace_back(x, y);
        if (op == '~') pairs.emplace_back(y, x);
        x = y;
        skip_ws();
      }
      if (pos >= text.size()) throw fail("unterminated '{'");
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == '}') {
        ++pos;
        break;
      }
      throw fail("expected ',' or '}'");
    }
  }
  skip_ws();
  if (pos != text.size()) throw fail("trailing input");
  return from_relations(std::vector<std::string>(elements.begin(), elements.end()),
                        pairs);
}

Preorder product(const Preorder& t1, const Preorder& t2) {
  for (const auto& l : t1.labels_) {
    if (t2.has_label(l))
      throw DomainError("LabelClash", "label '" + l + "' on both sides");
  }
  std::vector<std::string> labels = t1.labels_;
  labels.insert(labels.end(), t2.labels_.begin(), t2.labels_.end());
  if (labels.size() > 64) throw size_limit_error("at most 64 points supported");
  std::sort(labels.begin(), labels.end());
  auto idx = [&](const std::string& l) {
    return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), l) -
                            labels.begin());
  };
  std::vector<Mask> rows(labels.size(), 0);
  for (const Preorder* t : {&t1, &t2}) {
    for (int i = 0; i < t->size(); ++i) {
      const int ni = idx(t->labels_[i]);
      for (int j = 0; j < t->size(); ++j)
        if (t->leq(i, j)) rows[ni] |= Mask{1} << idx(t->labels_[j]);
    }
  }
  return Preorder::from_rows(std::move(labels), std::move(rows));
}

bool is_finer(const Preorder& tp, const Preorder& t) {
  if (tp.labels_ != t.labels_)
    throw DomainError("GroundSetMismatch", "comparing preorders on different points");
  for (int i = 0; i < t.size(); ++i)
    if (!mask_subset(tp.rel_[i], t.rel_[i])) return false;
  return true;
}

Preorder quotient(const Preorder& t, const Preorder& tp) {
  if (!is_finer(tp, t))
    throw DomainError("NotFiner", "quotient requires a finer topology");
  std::vector<Mask> rows = t.rel_;
  for (int i = 0; i < tp.size(); ++i) {
    for (Mask m = tp.rel_[i]; m; m &= m - 1) {
      const int j = std::countr_zero(m);
      rows[j] |= Mask{1} << i;  // reversed comparabilities of tp
    }
  }
  close_rows(rows);
  return Preorder::from_rows(t.labels_, std::move(rows));
}

Preorder opposite(const Preorder& t) {
  std::vector<Mask> rows(t.size(), 0);
  for (int i = 0; i < t.size(); ++i)
    for (int j = 0; j < t.size(); ++j)
      if (t.leq(i, j)) rows[j] |= Mask{1} << i;
  return Preorder::from_rows(t.labels_, std::move(rows));
}

Preorder psi(const Preorder& t, Mask a1, Mask a2) {
  if (a1 & a2) throw DomainError("LabelClash", "psi parts must be disjoint");
  if ((a1 | a2) & ~t.full_mask())
    throw DomainError("UnknownLabel", "psi part outside the ground set");
  std::vector<Mask> rows = t.rel_;
  for (int i = 0; i < t.size(); ++i) {
    if ((a1 >> i) & 1u) rows[i] &= ~a2;
    if ((a2 >> i) & 1u) rows[i] &= ~a1;
  }
  if (!rows_transitive(rows))
    throw DomainError("TransitivityBroken",
                      "removing comparabilities left a non-transitive relation");
  return Preorder::from_rows(t.labels_, std::move(rows));
}

Preorder psi(const Preorder& t, const std::vector<std::string>& a1,
             const std::vector<std::string>& a2) {
  return psi(t, t.mask_of(a1), t.mask_of(a2));
}

Preorder relabel(const Preorder& t,
                 const std::map<std::string, std::string>& phi) {
  if (phi.size() != t.labels_.size())
    throw DomainError("NotBijective", "map must cover exactly the label set");
  std::vector<std::string> new_labels;
  new_labels.reserve(t.size());
  for (const auto& l : t.labels_) {
    auto it = phi.find(l);
    if (it == phi.end())
      throw DomainError("NotBijective", "no image for label '" + l + "'");
    check_label(it->second);
    new_labels.push_back(it->second);
  }
  std::vector<std::string> sorted = new_labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DomainError("NotBijective", "two labels share an image");
  auto idx = [&](const std::string& l) {
    return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), l) -
                            sorted.begin());
  };
  std::vector<Mask> rows(t.size(), 0);
  for (int i = 0; i < t.size(); ++i)
    for (int j = 0; j < t.size(); ++j)
      if (t.leq(i, j))
        rows[idx(new_labels[i])] |= Mask{1} << idx(new_labels[j]);
  return Preorder::from_rows(std::move(sorted), std::move(rows));
}

Preorder graft_at(const Preorder& t1, const Preorder& t2,
                  const std::string& v) {
  for (const auto& l : t1.labels_) {
    if (t2.has_label(l))
      throw DomainError("LabelClash", "label '" + l + "' on both sides");
  }
  const int vi = t2.index_of(v);
  std::vector<std::string> labels = t1.labels_;
  labels.insert(labels.end(), t2.labels_.begin(), t2.labels_.end());
  if (labels.size() > 64) throw size_limit_error("at most 64 points supported");
  std::sort(labels.begin(), labels.end());
  auto idx = [&](const std::string& l) {
    return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), l) -
                            labels.begin());
  };
  std::vector<Mask> rows(labels.size(), 0);
  for (const Preorder* t : {&t1, &t2}) {
    for (int i = 0; i < t->size(); ++i) {
      const int ni = idx(t->labels_[i]);
      for (int j = 0; j < t->size(); ++j)
        if (t->leq(i, j)) rows[ni] |= Mask{1} << idx(t->labels_[j]);
    }
  }
  // Everything in the down-set of v (inside t2) goes below all of t1.
  Mask above = 0;
  for (const auto& l : t1.labels_) above |= Mask{1} << idx(l);
  for (int i = 0; i < t2.size(); ++i)
    if (t2.leq(i, vi)) rows[idx(t2.labels_[i])] |= above;
  return Preorder::from_rows(std::move(labels), std::move(rows));
}

}  // namespace topalg
