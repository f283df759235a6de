#include <algorithm>
#include <cctype>

#include "qsym/error.hpp"
#include "qsym/numerics/wide.hpp"
#include "qsym/graphs/composite.hpp"
#include "qsym/graphs/graph.hpp"
#include "qsym/graphs/rado.hpp"

namespace qsym {
namespace {

class CompleteGraph final : public GraphFamily {
 public:
  explicit CompleteGraph(Id n) : n_(n) {}
  std::string name() const override { return "complete:" + std::to_string(n_); }
  std::optional<Id> order() const override { return n_; }
  std::vector<Permutation> automorphism_samples() const override {
    if (n_ < 2) return {};
    std::vector<Id> rot(n_);
    for (Id i = 0; i < n_; ++i) rot[i] = (i + 1) % n_;
    return {Permutation::cycle({0, 1}), Permutation::from_images(rot)};
  }
  bool is_connected() const override { return n_ >= 1; }
  bool is_bipartite() const override { return n_ <= 2; }

 protected:
  bool adjacent_impl(Id, Id) const override { return true; }
  Distance distance_impl(Id, Id) const override { return 1; }

 private:
  Id n_;
};

class CycleGraph final : public GraphFamily {
 public:
  explicit CycleGraph(Id n) : n_(n) {}
  std::string name() const override { return "cycle:" + std::to_string(n_); }
  std::optional<Id> order() const override { return n_; }
  std::vector<Permutation> automorphism_samples() const override {
    std::vector<Id> rot(n_);
    std::vector<Id> refl(n_);
    for (Id i = 0; i < n_; ++i) {
      rot[i] = (i + 1) % n_;
      refl[i] = (n_ - i) % n_;
    }
    return {Permutation::from_images(rot), Permutation::from_images(refl)};
  }
  bool is_connected() const override { return true; }
  bool is_bipartite() const override { return n_ % 2 == 0; }

 protected:
  bool adjacent_impl(Id v, Id w) const override { return distance_impl(v, w) == 1; }
  Distance distance_impl(Id v, Id w) const override {
    const Id d = v > w ? v - w : w - v;
    return std::min(d, n_ - d);
  }

 private:
  Id n_;
};

class PathGraph final : public GraphFamily {
 public:
  explicit PathGraph(Id n) : n_(n) {}
  std::string name() const override { return "path:" + std::to_string(n_); }
  std::optional<Id> order() const override { return n_; }
  std::vector<Permutation> automorphism_samples() const override {
    if (n_ < 2) return {};
    std::vector<Id> rev(n_);
    for (Id i = 0; i < n_; ++i) rev[i] = n_ - 1 - i;
    return {Permutation::from_images(rev)};
  }
  bool is_connected() const override { return n_ >= 1; }
  bool is_bipartite() const override { return true; }

 protected:
  bool adjacent_impl(Id v, Id w) const override { return distance_impl(v, w) == 1; }
  Distance distance_impl(Id v, Id w) const override { return v > w ? v - w : w - v; }

 private:
  Id n_;
};

std::int64_t line_value(Id id) {
  return id % 2 == 1 ? static_cast<std::int64_t>((id + 1) / 2) : -static_cast<std::int64_t>(id / 2);
}

Id line_id(std::int64_t i) {
  return i > 0 ? static_cast<Id>(2 * i - 1) : static_cast<Id>(-2 * i);
}

class LineGraph final : public GraphFamily {
 public:
  std::string name() const override { return "line"; }
  std::optional<Id> order() const override { return std::nullopt; }
  bool is_connected() const override { return true; }
  bool is_bipartite() const override { return true; }

 protected:
  bool adjacent_impl(Id v, Id w) const override { return distance_impl(v, w) == 1; }
  Distance distance_impl(Id v, Id w) const override {
    const std::int64_t d = line_value(v) - line_value(w);
    return static_cast<Distance>(d < 0 ? -d : d);
  }
  std::optional<std::vector<Id>> neighbours_impl(Id v) const override {
    const std::int64_t i = line_value(v);
    std::vector<Id> out{line_id(i - 1), line_id(i + 1)};
    std::sort(out.begin(), out.end());
    return out;
  }
  json decode_impl(Id v) const override { return line_value(v); }
  Id encode_impl(const json& label) const override {
    if (!label.is_number_integer()) throw CodecError("line: vertex label must be an integer");
    return line_id(label.get<std::int64_t>());
  }
};

// C(n, r) with overflow detection.
Id binomial(Id n, Id r) {
  if (r > n) return 0;
  u128 acc = 1;
  for (Id i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > ~Id{0}) throw OverflowError("subset rank exceeds 64 bits");
  }
  return static_cast<Id>(acc);
}

// Combinatorial number system on k-subsets of N.
std::vector<Id> unrank_subset(Id rank, unsigned k) {
  std::vector<Id> out(k);
  for (unsigned i = k; i >= 1; --i) {
    // largest c with C(c, i) <= rank
    Id lo = i - 1;
    Id hi = i - 1;
    while (binomial(hi, i) <= rank) hi = hi * 2 + 1;
    while (lo < hi) {
      const Id mid = lo + (hi - lo + 1) / 2;
      if (binomial(mid, i) <= rank) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    out[i - 1] = lo;
    rank -= binomial(lo, i);
  }
  return out;
}

Id rank_subset(const std::vector<Id>& sorted) {
  Id rank = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const Id term = binomial(sorted[i], i + 1);
    if (rank > ~Id{0} - term) throw OverflowError("subset rank exceeds 64 bits");
    rank += term;
  }
  return rank;
}

std::size_t common_elements(const std::vector<Id>& a, const std::vector<Id>& b) {
  std::vector<Id> both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
  return both.size();
}

class SubsetGraph final : public GraphFamily {
 public:
  SubsetGraph(unsigned k, bool kneser) : k_(k), kneser_(kneser) {}
  std::string name() const override {
    return (kneser_ ? "kneser:" : "johnson:") + std::to_string(k_);
  }
  std::optional<Id> order() const override { return std::nullopt; }
  bool is_connected() const override { return true; }
  bool is_bipartite() const override { return false; }

 protected:
  bool adjacent_impl(Id v, Id w) const override {
    const std::size_t common = common_elements(unrank_subset(v, k_), unrank_subset(w, k_));
    return kneser_ ? common == 0 : common + 1 == k_;
  }
  Distance distance_impl(Id v, Id w) const override {
    const std::size_t common = common_elements(unrank_subset(v, k_), unrank_subset(w, k_));
    if (kneser_) return common == 0 ? 1 : 2;
    return k_ - common;
  }
  json decode_impl(Id v) const override { return unrank_subset(v, k_); }
  Id encode_impl(const json& label) const override {
    if (!label.is_array() || label.size() != k_) {
      throw CodecError(name() + ": vertex label must be a list of " + std::to_string(k_) +
                       " naturals");
    }
    std::vector<Id> set;
    for (const auto& e : label) {
      if (!e.is_number_integer() || e.get<long long>() < 0) {
        throw CodecError(name() + ": set elements must be naturals");
      }
      set.push_back(e.get<Id>());
    }
    std::sort(set.begin(), set.end());
    if (std::adjacent_find(set.begin(), set.end()) != set.end()) {
      throw CodecError(name() + ": set elements must be distinct");
    }
    return rank_subset(set);
  }

 private:
  unsigned k_;
  bool kneser_;
};

class RadoGraph final : public GraphFamily {
 public:
  std::string name() const override { return "rado"; }
  std::optional<Id> order() const override { return std::nullopt; }
  bool is_connected() const override { return true; }
  bool is_bipartite() const override { return false; }

 protected:
  bool adjacent_impl(Id v, Id w) const override { return rado_adjacent(rado_vertex(v), rado_vertex(w)); }
  // Distinct non-adjacent vertices have a common neighbour by the extension property.
  Distance distance_impl(Id v, Id w) const override { return adjacent_impl(v, w) ? 1 : 2; }
  json decode_impl(Id v) const override { return rado_vertex(v); }
  Id encode_impl(const json& label) const override {
    if (!label.is_number_integer() || label.get<long long>() < 0) {
      throw CodecError("rado: vertex label must be a prime");
    }
    const auto idx = rado_index(label.get<Id>());
    if (!idx) throw CodecError("rado: " + label.dump() + " is not a prime congruent to 1 mod 4");
    return *idx;
  }
};

class ComplementGraph final : public GraphFamily {
 public:
  explicit ComplementGraph(GraphPtr inner) : inner_(std::move(inner)) {}
  std::string name() const override { return "complement(" + inner_->name() + ")"; }
  std::optional<Id> order() const override { return inner_->order(); }
  std::vector<Permutation> automorphism_samples() const override {
    return inner_->automorphism_samples();
  }
  bool is_connected() const override {
    if (is_finite()) return GraphFamily::is_connected();
    return true;  // any two vertices have a common non-neighbour in the original
  }
  bool is_bipartite() const override { return is_finite() ? GraphFamily::is_bipartite() : false; }
  const GraphPtr& inner() const { return inner_; }

 protected:
  bool adjacent_impl(Id v, Id w) const override { return !inner_->adjacent(v, w); }
  Distance distance_impl(Id v, Id w) const override {
    if (is_finite()) return GraphFamily::distance_impl(v, w);
    if (adjacent_impl(v, w)) return 1;
    constexpr Id kScan = 4096;
    for (Id z = 0; z < kScan; ++z) {
      if (z == v || z == w || !inner_->contains(z)) continue;
      if (!inner_->adjacent(v, z) && !inner_->adjacent(w, z)) return 2;
    }
    throw SearchExhausted(name() + ": no common neighbour found", kScan);
  }
  std::optional<std::vector<Id>> distinguishing_impl(Id v, Id w) const override {
    return inner_->distinguishing(v, w);
  }
  bool contains_impl(Id v) const override { return inner_->contains(v); }
  json decode_impl(Id v) const override { return inner_->decode(v); }
  Id encode_impl(const json& label) const override { return inner_->encode(label); }

 private:
  GraphPtr inner_;
};

// ---- parser ------------------------------------------------------------------

class SpecParser {
 public:
  explicit SpecParser(const std::string& text) : s_(text) {}

  GraphPtr parse_all() {
    GraphPtr g = parse();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing text");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("graph spec \"" + s_ + "\" at " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::string word() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a name");
    return s_.substr(start, pos_ - start);
  }
  Id number() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    try {
      return std::stoull(s_.substr(start, pos_ - start));
    } catch (const std::exception&) {
      fail("number out of range");
    }
  }
  Id positive(Id minimum, const char* what) {
    const Id n = number();
    if (n < minimum) fail(std::string(what) + " must be at least " + std::to_string(minimum));
    return n;
  }

  GraphPtr parse() {
    const std::string head = word();
    if (head == "line") return line_graph();
    if (head == "rado") return rado_graph();
    if (head == "complete") return expect(':'), complete_graph(positive(1, "order"));
    if (head == "cycle") return expect(':'), cycle_graph(positive(3, "order"));
    if (head == "path") return expect(':'), path_graph(positive(1, "order"));
    if (head == "hamming") return expect(':'), hamming_graph(positive(2, "alphabet size"));
    if (head == "johnson" || head == "kneser") {
      expect(':');
      const Id k = positive(1, "subset size");
      if (k > 64) fail("subset size too large");
      return head == "johnson" ? johnson_graph(static_cast<unsigned>(k))
                               : kneser_graph(static_cast<unsigned>(k));
    }
    if (head == "union") {
      expect('(');
      GraphPtr inner = parse();
      expect(',');
      skip();
      std::optional<Id> copies;
      if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
        if (word() != "inf") fail("copies must be a number or inf");
      } else {
        copies = positive(1, "copies");
      }
      expect(')');
      return disjoint_union(std::move(inner), copies);
    }
    if (head == "complement") {
      expect('(');
      GraphPtr inner = parse();
      expect(')');
      return complement(std::move(inner));
    }
    if (head == "weak") {
      expect('(');
      GraphPtr inner = parse();
      expect(')');
      return weak_power(std::move(inner));
    }
    if (head == "product") {
      expect(':');
      ProductKind kind{};
      try {
        kind = parse_product_kind(word());
      } catch (const ParseError& e) {
        fail(e.what());
      }
      expect('(');
      GraphPtr x = parse();
      expect(',');
      GraphPtr y = parse();
      expect(')');
      return product(kind, std::move(x), std::move(y));
    }
    fail("unknown graph family \"" + head + "\"");
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

GraphPtr complete_graph(Id n) {
  if (n == 0) throw DomainError("complete graph needs at least one vertex");
  return std::make_shared<CompleteGraph>(n);
}
GraphPtr cycle_graph(Id n) {
  if (n < 3) throw DomainError("cycle needs at least three vertices");
  return std::make_shared<CycleGraph>(n);
}
GraphPtr path_graph(Id n) {
  if (n == 0) throw DomainError("path needs at least one vertex");
  return std::make_shared<PathGraph>(n);
}
GraphPtr line_graph() { return std::make_shared<LineGraph>(); }
GraphPtr johnson_graph(unsigned k) {
  if (k == 0) throw DomainError("johnson graph needs k >= 1");
  return std::make_shared<SubsetGraph>(k, false);
}
GraphPtr kneser_graph(unsigned k) {
  if (k == 0) throw DomainError("kneser graph needs k >= 1");
  return std::make_shared<SubsetGraph>(k, true);
}
GraphPtr hamming_graph(Id n) {
  if (n < 2) throw DomainError("hamming graph needs an alphabet of at least two letters");
  return std::make_shared<WeakPowerGraph>(complete_graph(n), "hamming:" + std::to_string(n));
}
GraphPtr rado_graph() { return std::make_shared<RadoGraph>(); }

GraphPtr disjoint_union(GraphPtr component, std::optional<Id> copies) {
  return std::make_shared<DisjointUnionGraph>(std::move(component), copies);
}

GraphPtr complement(GraphPtr g) {
  if (const auto* c = dynamic_cast<const ComplementGraph*>(g.get())) return c->inner();
  return std::make_shared<ComplementGraph>(std::move(g));
}

GraphPtr product(ProductKind kind, GraphPtr x, GraphPtr y) {
  return std::make_shared<ProductGraph>(kind, std::move(x), std::move(y));
}

GraphPtr weak_power(GraphPtr factor) { return std::make_shared<WeakPowerGraph>(std::move(factor)); }

GraphPtr make_graph(const std::string& spec) { return SpecParser(spec).parse_all(); }

Id parse_vertex(const GraphFamily& g, const std::string& text) {
  json label;
  try {
    label = json::parse(text);
  } catch (const json::exception&) {
    throw ParseError("vertex label \"" + text + "\" is not valid JSON");
  }
  return g.encode(label);
}

}  // namespace qsym
