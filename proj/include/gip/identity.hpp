#pragma once

// Deciding and enumerating monomial identities, and the closed-form
// description available for BT(n-1,1).

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "gip/algebra.hpp"
#include "gip/evaluation.hpp"

namespace gip {

struct StrippedMonomial {
  /// Absent when every factor had degree 0; such a monomial is never an identity.
  std::optional<GradedMonomial> monomial;
  /// Positions of the input that survive.
  std::vector<std::size_t> kept;

  bool never_identity() const noexcept { return !monomial.has_value(); }
};

/// Drops the degree-0 factors, which act as diagonal matrices.
StrippedMonomial strip_zero_degrees(const GradedMonomial& m);

struct IdentityReport {
  GradedMonomial monomial;
  bool is_identity = false;
  std::optional<StandardSubstitution> witness;
  std::optional<std::vector<ProfileStep>> profile;
};

IdentityReport is_identity(const AlgebraSpec& spec, const GradedMonomial& m, bool with_profile = false);

/// Closed-form test for length-n monomials on BT(n-1,1): no factor of degree 0
/// and no contiguous run inside the first n-1 factors summing to 0 mod n.
bool bt_n11_criterion(int n, const GradedMonomial& m);

/// x_t -> sum_{i=1}^{n-1} e_{i,i+t}: the substitution that decides identities of BT(n-1,1).
SupportPattern leading_rows_shift(int n, int t);

/// Whether a monomial shorter than n is an identity of BT(n-1,1), evaluated on
/// leading_rows_shift. Always false; kept as a checked fast path.
bool short_monomial_nonidentity_check(int n, const GradedMonomial& m);

/// Visits identities of length <= max_degree, shortest first then lexicographic.
void for_each_identity(const AlgebraSpec& spec, std::size_t max_degree, bool nonzero_only,
                       const std::function<void(const GradedMonomial&)>& visit);

/// Same sequence as for_each_identity. The search is split by first residue
/// over `threads` workers (0 = hardware concurrency).
std::vector<GradedMonomial> enumerate_identities(const AlgebraSpec& spec, std::size_t max_degree,
                                                 bool nonzero_only = true, unsigned threads = 1);

/// Minimal basis of the monomial identities of BT(n-1,1): the length-n
/// sequences over 1..n-1 accepted by bt_n11_criterion.
struct BtBasis {
  int n = 0;
  std::vector<GradedMonomial> monomials;
};

BtBasis minimal_basis_bt_n11(int n);

}  // namespace gip
