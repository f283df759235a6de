#include "qsym/qperm/partial.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qsym/error.hpp"
#include "qsym/numerics/linalg.hpp"

namespace qsym {
namespace {

const std::set<Id> kEmptyIds;

// Matrix of p in the coordinates of `frame` (ascending, containing p.support).
CMatrix embed(const SparseProjection& p, const std::vector<Id>& frame) {
  CMatrix out(frame.size(), frame.size());
  std::vector<std::size_t> pos(p.support.size());
  for (std::size_t i = 0; i < p.support.size(); ++i)
    pos[i] = static_cast<std::size_t>(std::lower_bound(frame.begin(), frame.end(), p.support[i]) -
                                      frame.begin());
  for (std::size_t i = 0; i < p.support.size(); ++i)
    for (std::size_t j = 0; j < p.support.size(); ++j) out(pos[i], pos[j]) = p.local(i, j);
  return out;
}

std::vector<Id> merge_supports(const std::vector<Id>& a, const std::vector<Id>& b) {
  std::vector<Id> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool supports_overlap(const std::vector<Id>& a, const std::vector<Id>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

// ||p q|| for two sparse projections.
double product_norm(const SparseProjection& p, const SparseProjection& q) {
  if (!supports_overlap(p.support, q.support)) return 0.0;
  const std::vector<Id> frame = merge_supports(p.support, q.support);
  return frobenius_norm(embed(p, frame) * embed(q, frame));
}

SparseProjection coordinate_projection(Id v) { return {{v}, CMatrix::scalar(1.0)}; }

// Rank-one projection onto a unit vector given on `frame`; coordinates below
// the noise floor are dropped from the support.
SparseProjection rank_one(const CMatrix& vec, const std::vector<Id>& frame) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < frame.size(); ++i)
    if (std::abs(vec(i, 0)) > 1e-14) keep.push_back(i);
  SparseProjection p;
  p.local = CMatrix(keep.size(), keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a) {
    p.support.push_back(frame[keep[a]]);
    for (std::size_t b = 0; b < keep.size(); ++b)
      p.local(a, b) = vec(keep[a], 0) * std::conj(vec(keep[b], 0));
  }
  return p;
}

Id least_missing(const std::set<Id>& s) {
  Id x = 0;
  for (Id v : s) {
    if (v != x) break;
    ++x;
  }
  return x;
}

}  // namespace

std::string to_string(BfPolicy p) { return p == BfPolicy::coordinate ? "coordinate" : "block4"; }

BfPolicy parse_bf_policy(const std::string& s) {
  if (s == "coordinate") return BfPolicy::coordinate;
  if (s == "block4") return BfPolicy::block4;
  throw ParseError("unknown back-and-forth policy: " + s);
}

const SparseProjection* PartialQuantumPermutation::find(Id x, Id y) const {
  const auto it = entries_.find({x, y});
  return it == entries_.end() ? nullptr : &it->second;
}

const std::set<Id>& PartialQuantumPermutation::row_keys(Id x) const {
  const auto it = rows_.find(x);
  return it == rows_.end() ? kEmptyIds : it->second;
}

const std::set<Id>& PartialQuantumPermutation::column_keys(Id y) const {
  const auto it = columns_.find(y);
  return it == columns_.end() ? kEmptyIds : it->second;
}

CMatrix PartialQuantumPermutation::dense_entry(Id x, Id y) const {
  CMatrix out(window_, window_);
  if (const SparseProjection* p = find(x, y))
    for (std::size_t i = 0; i < p->support.size(); ++i)
      for (std::size_t j = 0; j < p->support.size(); ++j)
        out(p->support[i], p->support[j]) = p->local(i, j);
  return out;
}

void PartialQuantumPermutation::assign(Id x, Id y, SparseProjection p) {
  for (Id v : p.support) {
    row_cover_[x][v].push_back(y);
    column_cover_[y][v].push_back(x);
  }
  entries_.emplace(Key{x, y}, std::move(p));
  rows_[x].insert(y);
  columns_[y].insert(x);
}

PartialQuantumPermutation PartialQuantumPermutation::with_entry(Id x, Id y,
                                                                SparseProjection p) const {
  PartialQuantumPermutation out = *this;
  if (out.entries_.erase({x, y}) > 0) {
    out.rows_.clear();
    out.columns_.clear();
    out.row_cover_.clear();
    out.column_cover_.clear();
    auto old = std::move(out.entries_);
    out.entries_.clear();
    for (auto& [key, e] : old) out.assign(key.first, key.second, std::move(e));
  }
  out.assign(x, y, std::move(p));
  return out;
}

bool PartialQuantumPermutation::line_orthogonal(Id line, bool is_column,
                                                const SparseProjection& piece,
                                                const Tolerance& tol) const {
  const auto& covers = is_column ? column_cover_ : row_cover_;
  const auto it = covers.find(line);
  if (it == covers.end()) return true;
  std::set<Id> overlapping;
  for (Id v : piece.support)
    if (const auto c = it->second.find(v); c != it->second.end())
      overlapping.insert(c->second.begin(), c->second.end());
  for (Id other : overlapping) {
    const SparseProjection& e = is_column ? *find(other, line) : *find(line, other);
    if (product_norm(e, piece) > tol.eps_proj) return false;
  }
  return true;
}

std::vector<SparseProjection> PartialQuantumPermutation::complement_pieces(Id point, bool as_row,
                                                                           Id from, Id to,
                                                                           std::uint64_t salt) const {
  // Every entry is supported inside one aligned block of kBfBlock basis
  // vectors (windows grow in multiples of the block), so the uncovered part
  // of a line splits block by block.
  const auto& covers = as_row ? row_cover_ : column_cover_;
  const auto line_cover = covers.find(point);
  std::vector<SparseProjection> pieces;
  for (Id block = from / kBfBlock; block * kBfBlock < to; ++block) {
    std::vector<Id> frame(kBfBlock);
    for (Id k = 0; k < kBfBlock; ++k) frame[k] = block * kBfBlock + k;
    std::set<Id> partners;
    if (line_cover != covers.end())
      for (Id v : frame)
        if (const auto c = line_cover->second.find(v); c != line_cover->second.end())
          partners.insert(c->second.begin(), c->second.end());

    CMatrix rest = CMatrix::identity(kBfBlock);
    for (Id other : partners) rest -= embed(as_row ? *find(point, other) : *find(other, point), frame);

    if (policy_ == BfPolicy::coordinate) {
      // Coordinate entries leave exactly the uncovered basis vectors.
      for (Id k = 0; k < kBfBlock; ++k)
        if (rest(k, k) == cplx(1.0)) pieces.push_back(coordinate_projection(frame[k]));
      continue;
    }
    const HermitianEigen eig = hermitian_eigen(rest);
    std::vector<std::size_t> kept;
    for (std::size_t k = 0; k < eig.values.size(); ++k)
      if (eig.values[k] > 0.5) kept.push_back(k);
    if (kept.empty()) continue;
    CMatrix basis(kBfBlock, kept.size());
    for (std::size_t c = 0; c < kept.size(); ++c)
      for (Id r = 0; r < kBfBlock; ++r) basis(r, c) = eig.vectors(r, kept[c]);
    std::seed_seq seq{seed_, steps_, static_cast<std::uint64_t>(point),
                      static_cast<std::uint64_t>(as_row), salt, static_cast<std::uint64_t>(block)};
    Rng rng(seq);
    const CMatrix mixed = basis * random_unitary(kept.size(), rng);
    for (std::size_t c = 0; c < kept.size(); ++c) pieces.push_back(rank_one(mixed.columns(c, 1), frame));
  }
  return pieces;
}

void PartialQuantumPermutation::fill_line(Id point, bool as_row,
                                          const std::vector<SparseProjection>& pieces,
                                          const Tolerance& tol) {
  for (const SparseProjection& piece : pieces) {
    for (Id partner = 0;; ++partner) {
      const Key key = as_row ? Key{point, partner} : Key{partner, point};
      if (entries_.contains(key)) continue;
      if (!line_orthogonal(partner, as_row, piece, tol)) continue;
      assign(key.first, key.second, piece);
      break;
    }
  }
}

void PartialQuantumPermutation::grow_window(const Tolerance& tol) {
  const Id old = window_;
  window_ += kBfWindowGrowth;
  for (Id x : domain_) fill_line(x, true, complement_pieces(x, true, old, window_, 1), tol);
  for (Id y : range_) fill_line(y, false, complement_pieces(y, false, old, window_, 2), tol);
}

void PartialQuantumPermutation::step_in_place(BfSide side, const Tolerance& tol) {
  const bool as_row = side == BfSide::domain;
  std::set<Id>& members = as_row ? domain_ : range_;
  const Id point = least_missing(members);
  fill_line(point, as_row, complement_pieces(point, as_row, 0, window_, 0), tol);
  members.insert(point);
  ++steps_;
  grow_window(tol);
}

PartialQuantumPermutation bf_init(BfPolicy policy, std::uint64_t seed) {
  PartialQuantumPermutation s;
  s.policy_ = policy;
  s.seed_ = seed;
  s.window_ = kBfInitialWindow;
  // The first row is always the coordinate partition of unity.
  for (Id y = 0; y < s.window_; ++y) s.assign(0, y, coordinate_projection(y));
  s.domain_.insert(0);
  return s;
}

PartialQuantumPermutation bf_step(const PartialQuantumPermutation& state, BfSide side,
                                  const Tolerance& tol) {
  const PartialReport report = validate_partial(state, tol);
  if (!report.ok)
    throw DomainError("bf_step: input violates the partial axioms (" + report.failing_constraint +
                      ")");
  PartialQuantumPermutation next = state;
  next.step_in_place(side, tol);
  return next;
}

PartialQuantumPermutation bf_run(std::size_t steps, BfPolicy policy, std::uint64_t seed,
                                 const Tolerance& tol) {
  PartialQuantumPermutation s = bf_init(policy, seed);
  for (std::size_t k = 0; k < steps; ++k)
    s.step_in_place(k % 2 == 0 ? BfSide::range : BfSide::domain, tol);
  return s;
}

PartialReport validate_partial(const PartialQuantumPermutation& state, const Tolerance& tol) {
  PartialReport r;
  auto record = [&](double residual, const std::string& what) {
    if (std::isnan(residual)) residual = INFINITY;
    r.worst_residual = std::max(r.worst_residual, residual);
    if (residual > tol.eps_proj && r.ok) {
      r.ok = false;
      r.failing_constraint = what;
    }
  };
  const Id w = state.window();
  for (const auto& [key, p] : state.entries()) {
    const std::string name = std::to_string(key.first) + "," + std::to_string(key.second);
    r.max_support = std::max(r.max_support, p.support.size());
    if (p.local.rows() != p.support.size() || p.local.cols() != p.support.size() ||
        !std::is_sorted(p.support.begin(), p.support.end())) {
      record(INFINITY, "malformed entry " + name);
      continue;
    }
    if (!p.support.empty() && p.support.back() >= w) {
      r.supports_in_window = false;
      record(INFINITY, "support outside window " + name);
    }
    record(frobenius_distance(p.local, p.local.adjoint()), "self-adjoint entry " + name);
    record(frobenius_distance(p.local * p.local, p.local), "idempotent entry " + name);
  }

  auto check_line = [&](Id line, bool is_column, bool must_cover) {
    const std::set<Id>& partners = is_column ? state.column_keys(line) : state.row_keys(line);
    std::vector<const SparseProjection*> es;
    for (Id other : partners)
      es.push_back(is_column ? state.find(other, line) : state.find(line, other));
    const std::string name = (is_column ? "column " : "row ") + std::to_string(line);
    for (std::size_t a = 0; a < es.size(); ++a)
      for (std::size_t b = a + 1; b < es.size(); ++b)
        record(product_norm(*es[a], *es[b]), name + " orthogonality");
    if (!must_cover) return;
    std::map<Id, std::size_t> multiplicity;
    CMatrix sum(w, w);
    for (const auto* e : es)
      for (std::size_t i = 0; i < e->support.size(); ++i) {
        if (e->support[i] >= w) continue;
        ++multiplicity[e->support[i]];
        for (std::size_t j = 0; j < e->support.size(); ++j)
          if (e->support[j] < w) sum(e->support[i], e->support[j]) += e->local(i, j);
      }
    record(frobenius_distance(sum, CMatrix::identity(w)), name + " sum");
    std::size_t worst = 0;
    for (const auto& kv : multiplicity) worst = std::max(worst, kv.second);
    (is_column ? r.max_column_multiplicity : r.max_row_multiplicity) =
        std::max(is_column ? r.max_column_multiplicity : r.max_row_multiplicity, worst);
  };

  std::set<Id> rows;
  std::set<Id> cols;
  for (const auto& kv : state.entries()) {
    rows.insert(kv.first.first);
    cols.insert(kv.first.second);
  }
  for (Id x : rows) check_line(x, false, state.domain().contains(x));
  for (Id y : cols) check_line(y, true, state.range().contains(y));
  for (Id x : state.domain())
    if (!rows.contains(x)) check_line(x, false, true);
  for (Id y : state.range())
    if (!cols.contains(y)) check_line(y, true, true);
  return r;
}

}  // namespace qsym
