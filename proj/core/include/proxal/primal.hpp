#pragma once

#include <vector>

#include "proxal/finite_sets.hpp"
#include "proxal/verdict.hpp"

namespace proxal {

/// A family P of subsets with X not in P, closed downward, and
/// A∩B in P => A in P or B in P. Only constructible from a family that
/// passes check_primal.
class Primal {
 public:
  /// Throws InputError naming the violated condition.
  static Primal validate(const Universe& u, SubsetFamily f);

  [[nodiscard]] const Universe& universe() const { return universe_; }
  [[nodiscard]] SubsetFamily family() const { return family_; }
  [[nodiscard]] bool contains(Subset s) const { return family_.contains(s); }
  /// The empty family satisfies every axiom vacuously; reports flag it.
  [[nodiscard]] bool degenerate() const { return family_.empty(); }
  /// P = 2^X \ {X}.
  [[nodiscard]] bool maximal() const;

  friend bool operator==(const Primal&, const Primal&) = default;

 private:
  Primal(Universe u, SubsetFamily f) : universe_(std::move(u)), family_(f) {}

  Universe universe_;
  SubsetFamily family_;
};

/// Direct form: (i) X ∉ f, (ii) downward closure, (iii) A∩B ∈ f => A ∈ f or B ∈ f.
Verdict check_primal(const Universe& u, SubsetFamily f);

/// Contrapositive form: (i) X ∉ f, (ii) B ∉ f and B ⊆ A => A ∉ f,
/// (iii) A ∉ f and B ∉ f => A∩B ∉ f. Agrees with check_primal on every input.
Verdict check_primal_alt(const Universe& u, SubsetFamily f);

Primal mk_maximal(const Universe& u);
/// {A : element ∉ A}.
Primal mk_principal(const Universe& u, std::size_t element);
Primal mk_principal(const Universe& u, std::string_view label);

/// {A : |A^c| >= aleph_0} (strict: > aleph_0). No finite complement is
/// infinite, so on any finite universe this is the empty family.
SubsetFamily mk_cocardinal(const Universe& u, bool strict);

/// Complement family {A : A ∉ P}: a filter on X (equal to 2^X when P is empty).
SubsetFamily dual_family(const Primal& p);

/// Intersection of the dual filter: the least set outside P. P is exactly
/// {A : core ⊄ A}.
Subset dual_core(const Primal& p);

/// All primals, ascending by membership table. Uses the brute-force path for
/// n <= 4 and the downward-closed-candidate path for n = 5.
std::vector<Primal> enumerate_primals(const Universe& u);

/// Filters every one of the 2^(2^n) families. n <= 4.
std::vector<Primal> enumerate_primals_brute(const Universe& u);

/// Generates downward-closed families and filters them. n <= 5.
std::vector<Primal> enumerate_primals_downsets(const Universe& u);

/// Every downward-closed family on u, ascending by table.
std::vector<SubsetFamily> enumerate_downsets(const Universe& u);

}  // namespace proxal
