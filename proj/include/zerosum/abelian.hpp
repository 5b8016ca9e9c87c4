#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "zerosum/common.hpp"

namespace zerosum {

// ---------------------------------------------------------------------------
// GroupSpec: a finite Abelian group presented as a direct product of cyclic
// factors Z_{q_1} x ... x Z_{q_k}. The presentation is order-significant and
// is never normalized: Z6 and Z2xZ3 are distinct specs even though the groups
// are isomorphic.
// ---------------------------------------------------------------------------

struct GroupSpec {
  std::vector<int> factors;  // each >= 2
  long long order = 0;       // product of factors

  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) os << 'x';
      os << 'Z' << factors[i];
    }
    return os.str();
  }
};

// Grammar: Group := "Z" int ("x" "Z" int)*   with every factor >= 2.
inline GroupSpec parse_group_spec(const std::string& text) {
  GroupSpec spec;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("bad group spec \"" + text + "\": " + why);
  };
  if (text.empty()) fail("empty spec");
  while (i < text.size()) {
    if (text[i] != 'Z') fail("expected 'Z'");
    ++i;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) fail("expected factor order after 'Z'");
    long long q = 0;
    for (std::size_t j = start; j < i; ++j) {
      q = q * 10 + (text[j] - '0');
      if (q > 1'000'000) fail("factor too large");
    }
    if (q < 2) fail("factor " + std::to_string(q) + " < 2 (non-trivial group required)");
    spec.factors.push_back(static_cast<int>(q));
    if (i < text.size()) {
      if (text[i] != 'x') fail("expected 'x' between factors");
      ++i;
      if (i == text.size()) fail("trailing 'x'");
    }
  }
  spec.order = 1;
  for (int q : spec.factors) {
    spec.order *= q;
    if (spec.order > 1'000'000) fail("group order too large");
  }
  return spec;
}

// An element as a vector of reduced residues, one per cyclic factor of the
// owning presentation. Comparison is lexicographic.
struct GroupElem {
  std::vector<int> residues;

  bool operator==(const GroupElem& o) const { return residues == o.residues; }
  bool operator!=(const GroupElem& o) const { return residues != o.residues; }
  bool operator<(const GroupElem& o) const { return residues < o.residues; }

  std::string to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < residues.size(); ++i) {
      if (i) os << ',';
      os << residues[i];
    }
    os << ')';
    return os.str();
  }
};

// ---------------------------------------------------------------------------
// Group: executable arithmetic for a finite Abelian group. Elements are dense
// indices 0..order-1 into a lexicographically sorted element table; index 0
// is always the zero element. A Group is built either from a GroupSpec, from
// a subgroup's element set, or from a quotient's coset representatives; in
// the latter two cases element names stay in the coordinates of the ambient
// presentation. Immutable after construction and safe to share across
// threads.
// ---------------------------------------------------------------------------

class Group {
 public:
  static constexpr int kMaxOrder = 65535;  // elem_t addressing

  static std::shared_ptr<const Group> make(const GroupSpec& spec) {
    if (spec.factors.empty() || spec.order < 2)
      throw std::invalid_argument("non-trivial group required");
    if (spec.order > kMaxOrder)
      throw std::invalid_argument("group order exceeds supported maximum");
    auto g = std::shared_ptr<Group>(new Group);
    g->spec_ = spec;
    g->name_ = spec.to_string();
    const int n = static_cast<int>(spec.order);
    const int k = static_cast<int>(spec.factors.size());
    g->elems_.resize(n);
    // Mixed-radix unranking yields the lexicographic element order.
    for (int idx = 0; idx < n; ++idx) {
      GroupElem e;
      e.residues.resize(k);
      int rest = idx;
      for (int f = k - 1; f >= 0; --f) {
        e.residues[f] = rest % spec.factors[f];
        rest /= spec.factors[f];
      }
      g->elems_[idx] = std::move(e);
    }
    g->build_tables([&](int a, int b) {
      GroupElem r;
      r.residues.resize(k);
      for (int f = 0; f < k; ++f)
        r.residues[f] =
            (g->elems_[a].residues[f] + g->elems_[b].residues[f]) % spec.factors[f];
      return g->find_index(r);
    });
    return g;
  }

  // Group structure on an explicit subset of a parent group (must be closed;
  // the caller is responsible, see Subgroup::as_group). Element names are the
  // parent's.
  static std::shared_ptr<const Group> make_from_members(
      const Group& parent, const std::vector<elem_t>& members, std::string name) {
    auto g = std::shared_ptr<Group>(new Group);
    g->name_ = std::move(name);
    g->elems_.reserve(members.size());
    for (elem_t m : members) g->elems_.push_back(parent.elem(m));
    std::sort(g->elems_.begin(), g->elems_.end());
    g->build_tables([&](int a, int b) {
      elem_t pa = parent.index_of(g->elems_[a]);
      elem_t pb = parent.index_of(g->elems_[b]);
      return g->find_index(parent.elem(parent.add(pa, pb)));
    });
    return g;
  }

  int order() const { return static_cast<int>(elems_.size()); }
  elem_t zero() const { return 0; }

  elem_t add(elem_t a, elem_t b) const { return add_[a * elems_.size() + b]; }
  elem_t neg(elem_t a) const { return neg_[a]; }
  elem_t sub(elem_t a, elem_t b) const { return add(a, neg(b)); }

  const GroupElem& elem(elem_t i) const { return elems_[i]; }
  const std::vector<GroupElem>& elements() const { return elems_; }

  elem_t index_of(const GroupElem& e) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), e);
    if (it == elems_.end() || !(*it == e))
      throw std::invalid_argument("element " + e.to_string() + " not in group " + name_);
    return static_cast<elem_t>(it - elems_.begin());
  }

  std::optional<elem_t> try_index_of(const GroupElem& e) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), e);
    if (it == elems_.end() || !(*it == e)) return std::nullopt;
    return static_cast<elem_t>(it - elems_.begin());
  }

  // Null for table-backed groups (subgroups, quotients).
  const GroupSpec* spec() const { return spec_ ? &*spec_ : nullptr; }
  const std::string& name() const { return name_; }

  // Additive order of an element.
  int element_order(elem_t a) const {
    int k = 1;
    elem_t x = a;
    while (x != zero()) {
      x = add(x, a);
      ++k;
    }
    return k;
  }

  // Flat addition table, used by the packed search loops.
  const std::vector<elem_t>& add_table() const { return add_; }

  // Quotient group on canonical coset representatives: element i is named by
  // parent element rep[i]; addition adds representatives in the parent and
  // projects back to a coset id. Used by quotient() below.
  static std::shared_ptr<const Group> make_quotient_table(
      const Group& parent, const std::vector<elem_t>& coset_of,
      const std::vector<elem_t>& rep, std::string name) {
    auto g = std::shared_ptr<Group>(new Group);
    g->name_ = std::move(name);
    g->elems_.reserve(rep.size());
    for (elem_t r : rep) g->elems_.push_back(parent.elem(r));
    // Representatives are scanned in parent index order, so they are already
    // lexicographically sorted and coset id == local element index.
    g->build_tables([&](int a, int b) {
      return coset_of[parent.add(rep[a], rep[b])];
    });
    return g;
  }

 private:
  Group() = default;

  elem_t find_index(const GroupElem& e) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), e);
    return static_cast<elem_t>(it - elems_.begin());
  }

  template <typename AddFn>
  void build_tables(AddFn&& raw_add) {
    const int n = order();
    add_.assign(static_cast<std::size_t>(n) * n, 0);
    neg_.assign(n, 0);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        add_[static_cast<std::size_t>(a) * n + b] = raw_add(a, b);
    for (int a = 0; a < n; ++a) {
      bool found = false;
      for (int b = 0; b < n; ++b)
        if (add_[static_cast<std::size_t>(a) * n + b] == 0) {
          neg_[a] = static_cast<elem_t>(b);
          found = true;
          break;
        }
      if (!found) throw std::logic_error("group table has no inverse for an element");
    }
  }

  std::optional<GroupSpec> spec_;
  std::string name_;
  std::vector<GroupElem> elems_;  // sorted lexicographically; elems_[0] == 0
  std::vector<elem_t> add_;
  std::vector<elem_t> neg_;
};

using GroupPtr = std::shared_ptr<const Group>;

inline GroupPtr make_group(const std::string& spec_text) {
  return Group::make(parse_group_spec(spec_text));
}

// Component-wise operations on named elements (API-level convenience; the
// solvers work on indices throughout).
inline GroupElem add(const Group& g, const GroupElem& a, const GroupElem& b) {
  return g.elem(g.add(g.index_of(a), g.index_of(b)));
}
inline GroupElem neg(const Group& g, const GroupElem& a) {
  return g.elem(g.neg(g.index_of(a)));
}
inline GroupElem zero(const Group& g) { return g.elem(0); }

// ---------------------------------------------------------------------------
// Subgroups and quotients
// ---------------------------------------------------------------------------

struct Subgroup {
  GroupPtr parent;
  std::vector<elem_t> members;  // sorted indices into parent; always contains 0

  int size() const { return static_cast<int>(members.size()); }

  bool contains(elem_t e) const {
    return std::binary_search(members.begin(), members.end(), e);
  }

  bool is_trivial() const { return members.size() == 1; }
  bool is_whole_group() const { return size() == parent->order(); }

  std::vector<GroupElem> elements() const {
    std::vector<GroupElem> out;
    out.reserve(members.size());
    for (elem_t m : members) out.push_back(parent->elem(m));
    return out;
  }

  // The subgroup as a standalone group (element names stay in parent
  // coordinates). Index i here corresponds to members[i] in the parent.
  GroupPtr as_group() const {
    return Group::make_from_members(*parent, members,
                                    "sub<" + std::to_string(size()) + "> of " + parent->name());
  }

  bool operator==(const Subgroup& o) const { return members == o.members; }
};

// Closure of a generating set under addition and negation.
inline std::vector<elem_t> subgroup_closure(const Group& g, std::vector<elem_t> gens) {
  std::set<elem_t> have{g.zero()};
  std::vector<elem_t> frontier{g.zero()};
  for (elem_t x : gens)
    if (have.insert(x).second) frontier.push_back(x);
  // Finite group: adding generators repeatedly reaches closure; negation is
  // then automatic.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<elem_t> snapshot(have.begin(), have.end());
    for (elem_t a : snapshot)
      for (elem_t b : snapshot)
        if (have.insert(g.add(a, b)).second) grew = true;
  }
  return std::vector<elem_t>(have.begin(), have.end());
}

inline bool is_subgroup(const Group& g, const std::vector<elem_t>& members) {
  if (members.empty()) return false;
  std::set<elem_t> s(members.begin(), members.end());
  if (!s.count(g.zero())) return false;
  for (elem_t a : s) {
    if (!s.count(g.neg(a))) return false;
    for (elem_t b : s)
      if (!s.count(g.add(a, b))) return false;
  }
  return true;
}

inline Subgroup cyclic_subgroup(const GroupPtr& g, elem_t a) {
  std::vector<elem_t> members{g->zero()};
  elem_t x = a;
  while (x != g->zero()) {
    members.push_back(x);
    x = g->add(x, a);
  }
  std::sort(members.begin(), members.end());
  return Subgroup{g, std::move(members)};
}

inline Subgroup trivial_subgroup(const GroupPtr& g) {
  return Subgroup{g, {g->zero()}};
}

inline Subgroup full_subgroup(const GroupPtr& g) {
  std::vector<elem_t> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup{g, std::move(all)};
}

// All subgroups, by closing generator sets grown one element at a time.
// Complete for any finite Abelian group (every subgroup is reached by adding
// its generators successively). Deduplicated; sorted by (size, members).
inline std::vector<Subgroup> enumerate_subgroups(const GroupPtr& g, int order_bound = 512) {
  if (g->order() > order_bound)
    throw BudgetError("enumerate_subgroups: group order " + std::to_string(g->order()) +
                      " exceeds bound " + std::to_string(order_bound));
  std::set<std::vector<elem_t>> seen;
  std::vector<std::vector<elem_t>> queue;
  std::vector<elem_t> triv{g->zero()};
  seen.insert(triv);
  queue.push_back(triv);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    std::vector<elem_t> base = queue[qi];
    for (elem_t x = 0; x < g->order(); ++x) {
      if (std::binary_search(base.begin(), base.end(), x)) continue;
      std::vector<elem_t> gens = base;
      gens.push_back(x);
      std::vector<elem_t> closed = subgroup_closure(*g, std::move(gens));
      if (seen.insert(closed).second) queue.push_back(std::move(closed));
    }
  }
  std::vector<Subgroup> out;
  out.reserve(seen.size());
  for (auto& members : seen) out.push_back(Subgroup{g, members});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

// ---------------------------------------------------------------------------
// QuotientMap: cosets of a subgroup B <= A with canonical (lexicographically
// minimal) representatives, plus the quotient group as an operation table on
// those representatives. project() is the canonical homomorphism A -> A/B.
// ---------------------------------------------------------------------------

struct QuotientMap {
  GroupPtr parent;
  Subgroup kernel;
  std::vector<elem_t> coset_of;    // parent elem index -> coset id
  std::vector<elem_t> rep;         // coset id -> parent elem index (lex minimal)
  GroupPtr quotient;               // table-backed group on the representatives

  elem_t project(elem_t a) const { return coset_of[a]; }
  int num_cosets() const { return static_cast<int>(rep.size()); }
};

inline QuotientMap quotient(const GroupPtr& g, const Subgroup& b) {
  if (b.parent.get() != g.get())
    throw std::invalid_argument("quotient: subgroup belongs to a different group");
  if (!is_subgroup(*g, b.members))
    throw std::invalid_argument("quotient: kernel is not closed");
  QuotientMap q;
  q.parent = g;
  q.kernel = b;
  const int n = g->order();
  q.coset_of.assign(n, 0);
  std::vector<bool> assigned(n, false);
  // Scan elements in lex (index) order: the first unassigned element of each
  // coset is its canonical representative.
  for (elem_t a = 0; a < n; ++a) {
    if (assigned[a]) continue;
    elem_t id = static_cast<elem_t>(q.rep.size());
    q.rep.push_back(a);
    for (elem_t m : b.members) {
      elem_t x = g->add(a, m);
      assigned[x] = true;
      q.coset_of[x] = id;
    }
  }
  q.quotient = Group::make_quotient_table(*g, q.coset_of, q.rep,
                                          g->name() + "/B" + std::to_string(b.size()));
  return q;
}

// ---------------------------------------------------------------------------

inline long long smallest_prime_divisor(long long order) {
  if (order < 2) throw std::invalid_argument("smallest_prime_divisor: order < 2");
  for (long long p = 2; p * p <= order; ++p)
    if (order % p == 0) return p;
  return order;
}

inline long long smallest_prime_divisor(const GroupSpec& spec) {
  return smallest_prime_divisor(spec.order);
}

inline bool is_prime(long long n) {
  return n >= 2 && smallest_prime_divisor(n) == n;
}

}  // namespace zerosum
