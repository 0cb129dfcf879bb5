#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mersenne/small_field.hpp"

namespace mersenne::delta {

/// Default ceiling on q^(n^r), the number of elements of kG a check may visit.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

/// C_n^r, the direct sum of r copies of the cyclic group of order n. r = 0 (or
/// n = 1) is the trivial group.
struct GroupShape {
  unsigned n = 1;
  unsigned r = 1;

  [[nodiscard]] unsigned order() const;
  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const GroupShape&, const GroupShape&) = default;
};

/// Accepts "C7", "C2^3", "C1", "trivial". Throws std::invalid_argument.
GroupShape parse_group_shape(std::string_view text);

enum class UnitStrategy {
  Auto,                   ///< gcd path for q=2, r=1; inverse search when small; else regular representation
  GroupAlgebraGcd,        ///< F2[C_n] only: gcd(a(x), x^n + 1) == 1
  InverseSearch,          ///< look for b with a*b == 1 over all elements
  RegularRepresentation,  ///< multiplication-by-a matrix has full rank over F_q
};

/// The group algebra F_q[C_n^r] with dense coefficient vectors indexed by
/// group element (base-n digits of the index are the coordinates).
class SmallGroupAlgebra {
public:
  using Element = std::vector<std::uint8_t>;

  SmallGroupAlgebra(unsigned q, GroupShape shape);

  [[nodiscard]] const SmallField& field() const { return *field_; }
  [[nodiscard]] GroupShape shape() const { return shape_; }
  [[nodiscard]] unsigned dimension() const { return dim_; }
  /// q^(n^r); saturates at UINT64_MAX.
  [[nodiscard]] std::uint64_t element_count() const { return count_; }

  /// Element with index `index` in base q (coefficient of group element g is
  /// digit g).
  void decode(std::uint64_t index, Element& out) const;
  [[nodiscard]] std::uint64_t encode(const Element& a) const;
  [[nodiscard]] Element one() const;
  [[nodiscard]] bool is_one(const Element& a) const;

  void mul(const Element& a, const Element& b, Element& out) const;
  [[nodiscard]] Element mul(const Element& a, const Element& b) const;
  [[nodiscard]] Element pow(const Element& a, std::uint64_t e) const;

  /// Rank of left multiplication by a equals the dimension.
  [[nodiscard]] bool is_unit_regular(const Element& a) const;

private:
  const SmallField* field_;
  GroupShape shape_;
  unsigned dim_;
  std::uint64_t count_;
  std::vector<std::uint16_t> group_add_;
};

struct DeltaOptions {
  std::uint64_t budget = kDefaultBudget;
  UnitStrategy strategy = UnitStrategy::Auto;
};

/// Every unit u of F_q[G] satisfies u^delta == 1. Throws BudgetExceeded when
/// q^(n^r) exceeds the budget.
bool is_delta_n_ring(unsigned q, GroupShape group, std::uint64_t delta,
                     const DeltaOptions& options = {});

/// Delta ring at `delta` but not at any proper divisor of it.
bool is_strict_delta_n(unsigned q, GroupShape group, std::uint64_t delta,
                       const DeltaOptions& options = {});

/// Units of F_q[G] in index order.
std::vector<std::uint64_t> unit_indices(unsigned q, GroupShape group, const DeltaOptions& options = {});

/// Field sizes q for which F_q is a Delta_delta field, by the closed form:
/// {2}, plus 3 when delta = 2, plus delta + 1 when that is a power of two.
std::vector<unsigned> delta_field_classification(std::uint64_t delta);

/// Same list found by checking u^delta == 1 for every nonzero u of every
/// field of size <= max_q.
std::vector<unsigned> delta_fields_by_enumeration(std::uint64_t delta, unsigned max_q = 256);

/// Every t in F_q[C_p^r] satisfies t^(p+1) == t. Requires q == 2 or q == p + 1
/// a power of two; throws std::invalid_argument otherwise.
bool frobenius_fixed_check(unsigned q, GroupShape group, const DeltaOptions& options = {});

}  // namespace mersenne::delta
