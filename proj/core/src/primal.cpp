#include "proxal/primal.hpp"

#include <algorithm>
#include <array>

#include "assignments.hpp"

namespace proxal {

namespace {

using detail::Eval;

constexpr std::array<bool, 2> kTwoSets{false, false};

bool holds_fast(const Universe& u, SubsetFamily f) {
  if (f.contains(u.full())) {
    return false;
  }
  const std::uint32_t count = u.subset_count();
  for (std::uint32_t a = 0; a < count; ++a) {
    if (!f.contains(Subset{a})) {
      continue;
    }
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (Subset{a}.contains(i) && !f.contains(Subset{a} - Subset::singleton(i))) {
        return false;
      }
    }
  }
  for (std::uint32_t a = 0; a < count; ++a) {
    if (f.contains(Subset{a})) {
      continue;
    }
    for (std::uint32_t b = a + 1; b < count; ++b) {
      if (!f.contains(Subset{b}) && f.contains(Subset{a & b})) {
        return false;
      }
    }
  }
  return true;
}

Verdict fail_from(const detail::SearchResult& r, std::string clause) {
  const auto& v = *r.violation;
  return Verdict::fail(std::move(clause), {{"A", v[0]}, {"B", v[1]}});
}

}  // namespace

Verdict check_primal(const Universe& u, SubsetFamily f) {
  if (f.contains(u.full())) {
    return Verdict::fail("(i)", {{"A", u.full()}});
  }
  auto down = detail::search_assignments(u, kTwoSets, [&](std::span<const Subset> v) {
    if (!f.contains(v[0]) || !v[1].subset_of(v[0])) return Eval::kUnmet;
    return f.contains(v[1]) ? Eval::kHolds : Eval::kViolated;
  });
  if (down.violation) {
    return fail_from(down, "(ii)");
  }
  auto meet = detail::search_assignments(u, kTwoSets, [&](std::span<const Subset> v) {
    if (!f.contains(v[0] & v[1])) return Eval::kUnmet;
    return (f.contains(v[0]) || f.contains(v[1])) ? Eval::kHolds : Eval::kViolated;
  });
  if (meet.violation) {
    return fail_from(meet, "(iii)");
  }
  return Verdict::pass();
}

Verdict check_primal_alt(const Universe& u, SubsetFamily f) {
  if (f.contains(u.full())) {
    return Verdict::fail("(i)", {{"A", u.full()}});
  }
  auto up = detail::search_assignments(u, kTwoSets, [&](std::span<const Subset> v) {
    // v[0] = A, v[1] = B: B ∉ f and B ⊆ A => A ∉ f.
    if (f.contains(v[1]) || !v[1].subset_of(v[0])) return Eval::kUnmet;
    return f.contains(v[0]) ? Eval::kViolated : Eval::kHolds;
  });
  if (up.violation) {
    return fail_from(up, "(ii)");
  }
  auto meet = detail::search_assignments(u, kTwoSets, [&](std::span<const Subset> v) {
    if (f.contains(v[0]) || f.contains(v[1])) return Eval::kUnmet;
    return f.contains(v[0] & v[1]) ? Eval::kViolated : Eval::kHolds;
  });
  if (meet.violation) {
    return fail_from(meet, "(iii)");
  }
  return Verdict::pass();
}

Primal Primal::validate(const Universe& u, SubsetFamily f) {
  if ((f.table() & ~family_mask(u)) != 0) {
    throw InputError("family refers to subsets outside the universe");
  }
  auto v = check_primal(u, f);
  if (!v.passed()) {
    throw InputError("not a primal: condition " + v.witness->clause + " fails at " +
                     v.witness->format(u));
  }
  return Primal(u, f);
}

bool Primal::maximal() const {
  SubsetFamily all = SubsetFamily::power_set(universe_);
  all.erase(universe_.full());
  return family_ == all;
}

Primal mk_maximal(const Universe& u) {
  SubsetFamily f = SubsetFamily::power_set(u);
  f.erase(u.full());
  return Primal::validate(u, f);
}

Primal mk_principal(const Universe& u, std::size_t element) {
  if (element >= u.size()) {
    throw InputError("element index out of range");
  }
  SubsetFamily f;
  for (std::uint32_t a = 0; a < u.subset_count(); ++a) {
    if (!Subset{a}.contains(element)) {
      f.insert(Subset{a});
    }
  }
  return Primal::validate(u, f);
}

Primal mk_principal(const Universe& u, std::string_view label) {
  auto idx = u.index_of(label);
  if (!idx) {
    throw InputError("unknown element '" + std::string(label) + "'");
  }
  return mk_principal(u, *idx);
}

SubsetFamily mk_cocardinal(const Universe& u, bool strict) {
  (void)u;
  (void)strict;
  return SubsetFamily{};
}

SubsetFamily dual_family(const Primal& p) { return p.family().complement_in(p.universe()); }

Subset dual_core(const Primal& p) {
  Subset core = p.universe().full();
  for (Subset s : dual_family(p).members()) {
    core = core & s;
  }
  return core;
}

std::vector<Primal> enumerate_primals_brute(const Universe& u) {
  if (u.size() > 4) {
    throw SizeCapError("brute-force primal enumeration supports n <= 4");
  }
  std::vector<Primal> out;
  const std::uint64_t families = std::uint64_t{1} << u.subset_count();
  for (std::uint64_t t = 0; t < families; ++t) {
    if (holds_fast(u, SubsetFamily{t})) {
      out.push_back(Primal::validate(u, SubsetFamily{t}));
    }
  }
  return out;
}

std::vector<SubsetFamily> enumerate_downsets(const Universe& u) {
  std::vector<SubsetFamily> out;
  const std::uint32_t count = u.subset_count();
  // Masks are decided in ascending order, so every proper subset of m is
  // decided before m.
  auto rec = [&](auto&& self, std::uint32_t m, std::uint64_t table) -> void {
    if (m == count) {
      out.emplace_back(table);
      return;
    }
    self(self, m + 1, table);
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (Subset{m}.contains(i) && ((table >> (m & ~(1U << i))) & 1U) == 0) {
        return;
      }
    }
    self(self, m + 1, table | (std::uint64_t{1} << m));
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Primal> enumerate_primals_downsets(const Universe& u) {
  std::vector<Primal> out;
  for (SubsetFamily f : enumerate_downsets(u)) {
    if (holds_fast(u, f)) {
      out.push_back(Primal::validate(u, f));
    }
  }
  return out;
}

std::vector<Primal> enumerate_primals(const Universe& u) {
  return u.size() <= 4 ? enumerate_primals_brute(u) : enumerate_primals_downsets(u);
}

}  // namespace proxal
