#pragma once

// Test-only reference implementations. They share no code with the library:
// sets are std::vector<bool> membership vectors over element indices and
// families are std::set of those, so a bug in the bit-table layer cannot hide
// behind an identical bug here.

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

using Set = std::vector<bool>;
using Family = std::set<Set>;

inline Set from_mask(std::size_t n, std::uint32_t mask) {
  Set s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = ((mask >> i) & 1U) != 0;
  return s;
}

inline std::uint32_t to_mask(const Set& s) {
  std::uint32_t m = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i]) m |= 1U << i;
  }
  return m;
}

inline std::vector<Set> all_sets(std::size_t n) {
  std::vector<Set> out;
  for (std::uint32_t m = 0; m < (1U << n); ++m) out.push_back(from_mask(n, m));
  return out;
}

inline Set meet(const Set& a, const Set& b) {
  Set r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] && b[i];
  return r;
}

inline Set join(const Set& a, const Set& b) {
  Set r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] || b[i];
  return r;
}

inline Set comp(const Set& a) {
  Set r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = !a[i];
  return r;
}

inline bool sub(const Set& a, const Set& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && !b[i]) return false;
  }
  return true;
}

inline bool none(const Set& a) {
  for (bool b : a) {
    if (b) return false;
  }
  return true;
}

inline Set point(std::size_t n, std::size_t x) {
  Set s(n);
  s[x] = true;
  return s;
}

/// Family from a 2^n-bit membership table.
inline Family family_from_table(std::size_t n, std::uint64_t table) {
  Family f;
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    if (((table >> m) & 1U) != 0) f.insert(from_mask(n, m));
  }
  return f;
}

inline std::uint64_t table_of(const Family& f) {
  std::uint64_t t = 0;
  for (const auto& s : f) t |= std::uint64_t{1} << to_mask(s);
  return t;
}

/// Literal reading of the three primal conditions.
inline bool is_primal(std::size_t n, const Family& f) {
  const auto sets = all_sets(n);
  if (f.count(Set(n, true)) != 0) return false;
  for (const auto& a : f) {
    for (const auto& b : sets) {
      if (sub(b, a) && f.count(b) == 0) return false;
    }
  }
  for (const auto& a : sets) {
    for (const auto& b : sets) {
      if (f.count(meet(a, b)) != 0 && f.count(a) == 0 && f.count(b) == 0) return false;
    }
  }
  return true;
}

inline bool is_topology(std::size_t n, const Family& f) {
  if (f.count(Set(n, false)) == 0 || f.count(Set(n, true)) == 0) return false;
  for (const auto& a : f) {
    for (const auto& b : f) {
      if (f.count(join(a, b)) == 0 || f.count(meet(a, b)) == 0) return false;
    }
  }
  return true;
}

/// Every family on n points passing pred, as tables in ascending order.
inline std::vector<std::uint64_t> brute_families(std::size_t n,
                                                 const std::function<bool(const Family&)>& pred) {
  std::vector<std::uint64_t> out;
  const std::uint64_t count = std::uint64_t{1} << (1U << n);
  for (std::uint64_t t = 0; t < count; ++t) {
    if (pred(family_from_table(n, t))) out.push_back(t);
  }
  return out;
}

/// Smallest closed superset, by intersecting every closed superset.
inline Set closure(const Family& opens, const Set& a) {
  Set r(a.size(), true);
  for (const auto& u : opens) {
    const Set closed = comp(u);
    if (sub(a, closed)) r = meet(r, closed);
  }
  return r;
}

/// Disjoint closed E, F separated by disjoint opens, via the smallest open
/// supersets (intersection of all opens containing each set).
inline bool is_normal(std::size_t n, const Family& opens) {
  auto smallest_open = [&](const Set& s) {
    Set r(n, true);
    for (const auto& u : opens) {
      if (sub(s, u)) r = meet(r, u);
    }
    return r;
  };
  for (const auto& u : opens) {
    for (const auto& v : opens) {
      const Set e = comp(u);
      const Set f = comp(v);
      if (!none(meet(e, f))) continue;
      if (!none(meet(smallest_open(e), smallest_open(f)))) return false;
    }
  }
  return true;
}

/// Relation as a predicate on (mask, mask).
using Rel = std::function<bool(std::uint32_t, std::uint32_t)>;

/// The five primal-proximity axioms read literally over vector<bool> sets.
inline bool is_primal_proximity(std::size_t n, const Family& p, const Rel& rel) {
  const auto sets = all_sets(n);
  auto r = [&](const Set& a, const Set& b) { return rel(to_mask(a), to_mask(b)); };
  auto in = [&](const Set& s) { return p.count(s) != 0; };
  for (const auto& a : sets) {
    for (const auto& b : sets) {
      if (r(a, b) != r(b, a)) return false;
      if (!in(comp(a)) && r(a, b)) return false;
      if (in(comp(meet(a, b))) && !r(a, b)) return false;
      for (const auto& c : sets) {
        if (r(a, join(b, c)) != (r(a, b) || r(a, c))) return false;
      }
      if (!r(a, b)) {
        bool found = false;
        for (const auto& c : sets) {
          for (const auto& d : sets) {
            if (!r(a, comp(c)) && !r(comp(d), b) && !in(comp(meet(c, d)))) found = true;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

inline std::uint64_t bell(std::size_t k) {
  // Bell triangle.
  std::vector<std::uint64_t> row{1};
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto v : row) next.push_back(next.back() + v);
    row = next;
  }
  return row.front();
}

}  // namespace oracle
