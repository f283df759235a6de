#include "qsym/qperm/permutation.hpp"

#include <cctype>
#include <numeric>
#include <set>

#include "qsym/error.hpp"

namespace qsym {

std::string IndexSet::describe() const {
  std::string s = is_finite() ? "finite(" + std::to_string(n_) + ")" : std::string("naturals");
  if (!labels_.empty()) s += "[" + labels_ + "]";
  return s;
}

Permutation Permutation::from_map(const std::map<Id, Id>& images) {
  std::set<Id> targets;
  for (const auto& [x, y] : images)
    if (!targets.insert(y).second)
      throw DomainError("permutation: " + std::to_string(y) + " has two preimages");
  for (Id y : targets)
    if (!images.contains(y))
      throw DomainError("permutation: not a bijection of its support (" + std::to_string(y) +
                        " is an image but not a point)");
  Permutation p;
  for (const auto& [x, y] : images)
    if (x != y) p.images_.emplace(x, y);
  return p;
}

Permutation Permutation::from_images(const std::vector<Id>& images) {
  std::map<Id, Id> m;
  for (Id i = 0; i < images.size(); ++i) m.emplace(i, images[i]);
  return from_map(m);
}

Permutation Permutation::cycle(const std::vector<Id>& points) {
  std::map<Id, Id> m;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (!m.emplace(points[i], points[(i + 1) % points.size()]).second)
      throw DomainError("cycle: repeated point " + std::to_string(points[i]));
  return from_map(m);
}

Permutation Permutation::parse(std::string_view text) {
  Permutation result;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) != 0)) ++i;
  };
  skip_space();
  if (text.substr(i) == "id") return result;
  std::vector<Permutation> factors;
  while (true) {
    skip_space();
    if (i == text.size()) break;
    if (text[i] != '(') throw ParseError("permutation: expected '(' in \"" + std::string(text) + "\"");
    ++i;
    std::vector<Id> points;
    while (true) {
      skip_space();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i == text.size() || (std::isdigit(static_cast<unsigned char>(text[i])) == 0))
        throw ParseError("permutation: expected a point id in \"" + std::string(text) + "\"");
      Id v = 0;
      while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) != 0)) {
        const Id digit = static_cast<Id>(text[i] - '0');
        if (v > (~Id{0} - digit) / 10) throw ParseError("permutation: id overflow");
        v = v * 10 + digit;
        ++i;
      }
      points.push_back(v);
    }
    factors.push_back(cycle(points));
  }
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) result = compose(*it, result);
  return result;
}

Id Permutation::operator()(Id x) const {
  const auto it = images_.find(x);
  return it == images_.end() ? x : it->second;
}

Id Permutation::preimage(Id x) const {
  for (const auto& [a, b] : images_)
    if (b == x) return a;
  return x;
}

std::vector<Id> Permutation::moved_points() const {
  std::vector<Id> out;
  out.reserve(images_.size());
  for (const auto& kv : images_) out.push_back(kv.first);
  return out;
}

Permutation Permutation::inverse() const {
  Permutation p;
  for (const auto& [x, y] : images_) p.images_.emplace(y, x);
  return p;
}

std::uint64_t Permutation::order() const {
  std::uint64_t ord = 1;
  for (const auto& c : cycles()) ord = std::lcm(ord, static_cast<std::uint64_t>(c.size()));
  return ord;
}

std::vector<std::vector<Id>> Permutation::cycles() const {
  std::vector<std::vector<Id>> out;
  std::set<Id> seen;
  for (const auto& kv : images_) {
    if (seen.contains(kv.first)) continue;
    std::vector<Id> c;
    for (Id x = kv.first; !seen.contains(x); x = (*this)(x)) {
      seen.insert(x);
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string Permutation::to_string() const {
  if (images_.empty()) return "()";
  std::string s;
  for (const auto& c : cycles()) {
    s += "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i > 0) s += " ";
      s += std::to_string(c[i]);
    }
    s += ")";
  }
  return s;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  std::map<Id, Id> m;
  for (const auto& kv : b.images()) m[kv.first] = a(kv.second);
  for (const auto& kv : a.images())
    if (!m.contains(kv.first)) m[kv.first] = a(b(kv.first));
  return Permutation::from_map(m);
}

}  // namespace qsym
