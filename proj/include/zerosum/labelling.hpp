#pragma once

#include <algorithm>
#include <memory>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "zerosum/abelian.hpp"
#include "zerosum/common.hpp"

namespace zerosum {

// ---------------------------------------------------------------------------
// ArcLabelling: a total map from ordered vertex pairs of the bidirected
// complete graph K_n to elements of a finite Abelian group. Stored as a dense
// n x n table of element indices (diagonal unused). Operations treat
// labellings as values: they return new labellings and never mutate their
// input, so labellings are safe to share across threads once built.
// ---------------------------------------------------------------------------

class ArcLabelling {
 public:
  ArcLabelling(GroupPtr group, int n)
      : group_(std::move(group)), n_(n), tab_(static_cast<std::size_t>(n) * n, 0) {
    if (n < 2) throw std::invalid_argument("ArcLabelling: need n >= 2");
    if (!group_) throw std::invalid_argument("ArcLabelling: null group");
  }

  int n() const { return n_; }
  const GroupPtr& group() const { return group_; }

  elem_t at(int u, int v) const {
    check_arc(u, v);
    return tab_[static_cast<std::size_t>(u) * n_ + v];
  }

  void set(int u, int v, elem_t e) {
    check_arc(u, v);
    if (e >= group_->order()) throw std::invalid_argument("ArcLabelling: label out of range");
    tab_[static_cast<std::size_t>(u) * n_ + v] = e;
  }

  GroupElem label(int u, int v) const { return group_->elem(at(u, v)); }

  // Structural equality: same size, same group element names, same table.
  bool operator==(const ArcLabelling& o) const {
    return n_ == o.n_ && group_->elements() == o.group_->elements() && tab_ == o.tab_;
  }
  bool operator!=(const ArcLabelling& o) const { return !(*this == o); }

  const std::vector<elem_t>& raw() const { return tab_; }

 private:
  void check_arc(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw std::out_of_range("ArcLabelling: vertex out of range");
    if (u == v) throw std::invalid_argument("ArcLabelling: self-loop arc");
  }

  GroupPtr group_;
  int n_;
  std::vector<elem_t> tab_;
};

// A switching S_{c,v}: add c to every arc leaving v, subtract c from every
// arc entering v. value is an element index of the labelling's group.
struct Switching {
  int vertex;
  elem_t value;

  bool operator==(const Switching& o) const {
    return vertex == o.vertex && value == o.value;
  }
};

inline ArcLabelling apply_switching(const ArcLabelling& w, const Switching& s) {
  const int n = w.n();
  if (s.vertex < 0 || s.vertex >= n)
    throw std::out_of_range("apply_switching: vertex out of range");
  const Group& g = *w.group();
  if (s.value >= g.order()) throw std::invalid_argument("apply_switching: value out of range");
  ArcLabelling out = w;
  for (int y = 0; y < n; ++y) {
    if (y == s.vertex) continue;
    out.set(s.vertex, y, g.add(w.at(s.vertex, y), s.value));
    out.set(y, s.vertex, g.sub(w.at(y, s.vertex), s.value));
  }
  return out;
}

inline ArcLabelling apply_switching_sequence(const ArcLabelling& w,
                                             std::span<const Switching> seq) {
  ArcLabelling out = w;
  for (const Switching& s : seq) out = apply_switching(out, s);
  return out;
}

inline ArcLabelling apply_switching_sequence(const ArcLabelling& w,
                                             const std::vector<Switching>& seq) {
  return apply_switching_sequence(w, std::span<const Switching>(seq));
}

// Canonical representative of the switching class: switch by w(0,v) at each
// v != 0 in ascending order, leaving every arc out of vertex 0 zero. Two
// labellings are switching-equivalent iff their canonical forms are equal
// (the only switching function fixing all arcs out of vertex 0 is constant,
// and constant switchings act trivially).
inline std::pair<ArcLabelling, std::vector<Switching>> canonicalize(const ArcLabelling& w) {
  std::vector<Switching> seq;
  for (int v = 1; v < w.n(); ++v) seq.push_back(Switching{v, w.at(0, v)});
  ArcLabelling out = apply_switching_sequence(w, seq);
  return {std::move(out), std::move(seq)};
}

// ---------------------------------------------------------------------------
// B-factor: restrict w to an induced complete subdigraph and project every
// label through the canonical homomorphism A -> A/B. Vertices are re-indexed
// densely; vertex_map[new] = old.
// ---------------------------------------------------------------------------

struct BFactorResult {
  ArcLabelling labelling;  // over the quotient group
  std::vector<int> vertex_map;
  QuotientMap qmap;
};

inline BFactorResult b_factor(const ArcLabelling& w, std::vector<int> vertices,
                              const Subgroup& b) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  if (vertices.size() < 2) throw std::invalid_argument("b_factor: need at least 2 vertices");
  for (int v : vertices)
    if (v < 0 || v >= w.n()) throw std::out_of_range("b_factor: vertex out of range");
  QuotientMap q = quotient(w.group(), b);
  const int m = static_cast<int>(vertices.size());
  ArcLabelling out(q.quotient, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      out.set(i, j, q.project(w.at(vertices[i], vertices[j])));
    }
  return BFactorResult{std::move(out), std::move(vertices), std::move(q)};
}

// ---------------------------------------------------------------------------
// Explicit constructions and fixtures
// ---------------------------------------------------------------------------

// The q+1 lower-bound construction: K_q over Z_q with w(v_i,v_j) = 1 for
// i < j and 0 otherwise. Every directed cycle uses between 1 and q-1 forward
// arcs, so no cycle sums to zero.
inline ArcLabelling lower_bound_labelling(int q) {
  if (q < 2) throw std::invalid_argument("lower_bound_labelling: q must be >= 2");
  GroupSpec spec;
  spec.factors = {q};
  spec.order = q;
  ArcLabelling w(Group::make(spec), q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      if (i == j) continue;
      w.set(i, j, i < j ? 1 : 0);
    }
  return w;
}

// Uniform labels from a seeded deterministic generator; arcs filled in
// row-major (u,v) order so identical seeds give identical tables.
inline ArcLabelling random_labelling(const GroupPtr& g, int n, std::uint64_t seed) {
  ArcLabelling w(g, n);
  std::mt19937_64 rng(seed);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      w.set(u, v, static_cast<elem_t>(uniform_below(rng, g->order())));
    }
  return w;
}

// ---------------------------------------------------------------------------
// EdgeLabelling: symmetric labelling of the undirected complete graph.
// ---------------------------------------------------------------------------

class EdgeLabelling {
 public:
  EdgeLabelling(GroupPtr group, int n)
      : group_(std::move(group)), n_(n),
        tab_(static_cast<std::size_t>(n) * (n - 1) / 2, 0) {
    if (n < 2) throw std::invalid_argument("EdgeLabelling: need n >= 2");
    if (!group_) throw std::invalid_argument("EdgeLabelling: null group");
  }

  int n() const { return n_; }
  const GroupPtr& group() const { return group_; }

  elem_t at(int u, int v) const { return tab_[pair_index(u, v)]; }
  void set(int u, int v, elem_t e) {
    if (e >= group_->order()) throw std::invalid_argument("EdgeLabelling: label out of range");
    tab_[pair_index(u, v)] = e;
  }
  GroupElem label(int u, int v) const { return group_->elem(at(u, v)); }

 private:
  std::size_t pair_index(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw std::out_of_range("EdgeLabelling: vertex out of range");
    if (u == v) throw std::invalid_argument("EdgeLabelling: self-loop edge");
    if (u > v) std::swap(u, v);
    // rank of {u,v}, u < v, in colex order
    return static_cast<std::size_t>(v) * (v - 1) / 2 + u;
  }

  GroupPtr group_;
  int n_;
  std::vector<elem_t> tab_;
};

inline EdgeLabelling random_edge_labelling(const GroupPtr& g, int n, std::uint64_t seed) {
  EdgeLabelling e(g, n);
  std::mt19937_64 rng(seed);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      e.set(u, v, static_cast<elem_t>(uniform_below(rng, g->order())));
  return e;
}

// Symmetric lift: w(u,v) = w(v,u) = e({u,v}).
inline ArcLabelling lift_undirected(const EdgeLabelling& e) {
  ArcLabelling w(e.group(), e.n());
  for (int u = 0; u < e.n(); ++u)
    for (int v = u + 1; v < e.n(); ++v) {
      w.set(u, v, e.at(u, v));
      w.set(v, u, e.at(u, v));
    }
  return w;
}

}  // namespace zerosum
