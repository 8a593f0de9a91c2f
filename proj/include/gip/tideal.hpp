#pragma once

// Rearrangements of multilinear monomials modulo the T-ideal I_n generated by
//   [x_1,x_2]              with deg x_1 = deg x_2 = 0
//   x_1x_2x_3 - x_3x_2x_1  with deg x_1 = -deg x_2 = deg x_3
// and a sound (not complete) checker for consequences of monomial identities.

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "gip/algebra.hpp"
#include "gip/evaluation.hpp"

namespace gip {

/// An arrangement of a multilinear monomial's factors: position k of the
/// rearranged monomial holds factor perm[k] of the base (0-based).
using Permutation = std::vector<std::size_t>;

Permutation identity_permutation(std::size_t size);

/// m_sigma.
GradedMonomial arrange(const GradedMonomial& base, const Permutation& sigma);

struct LabeledMonomialPair {
  GradedMonomial base;
  Permutation sigma;
  Permutation tau;
};

struct EquivalenceResult {
  bool equivalent = false;
  /// Rows indexed by base factor: x_k -> e_{rows[k], rows[k] + deg x_k}.
  std::optional<StandardSubstitution> witness;
};

/// Sufficient test for m_sigma == m_tau mod I_n: some starting row gives a
/// chained substitution for the sigma order under which the tau order has the
/// same nonzero value. The lowest such row is reported.
EquivalenceResult equivalent_mod_In(int n, const LabeledMonomialPair& pair);

/// Same test restricted to one starting row.
bool equivalent_at_row(int n, const LabeledMonomialPair& pair, int start_row);

/// Transitive closure of equivalent_mod_In around the identity arrangement,
/// sorted. Throws CapExceeded for monomials longer than `cap`.
std::vector<Permutation> equivalence_class(int n, const GradedMonomial& m, std::size_t cap);

/// Default bound on rearrangement searches.
constexpr std::size_t default_equivalence_cap(int n) noexcept { return reduction_bound(n); }

struct Derivation {
  std::size_t generator_index = 0;
  GradedMonomial generator;
  /// The target's degree-0 factors were removed first.
  bool stripped = false;
  /// arrangements[0] is the identity; each consecutive pair is equivalent
  /// mod I_n through the starting row chain_rows[k].
  std::vector<Permutation> arrangements;
  std::vector<int> chain_rows;
  /// The generator's k-th variable is substituted by factors [cuts[k], cuts[k+1])
  /// of the final arrangement; the rest is left and right context.
  std::vector<std::size_t> cuts;

  std::size_t window_begin() const { return cuts.front(); }
  std::size_t window_end() const { return cuts.back(); }
};

enum class ConsequenceStatus { Confirmed, Unresolved };

struct ConsequenceVerdict {
  ConsequenceStatus status = ConsequenceStatus::Unresolved;
  std::optional<Derivation> derivation;

  bool confirmed() const noexcept { return status == ConsequenceStatus::Confirmed; }
};

struct ConsequenceOptions {
  /// Rearrangements are searched only for (stripped) targets up to this
  /// length; 0 selects default_equivalence_cap(n).
  std::size_t rearrangement_cap = 0;
};

/// Validates the generators once and answers consequence queries against them.
class ConsequenceChecker {
public:
  ConsequenceChecker(const AlgebraSpec& spec, std::vector<GradedMonomial> generators,
                     ConsequenceOptions options = {});

  ConsequenceVerdict check(const GradedMonomial& target) const;

  const std::vector<GradedMonomial>& generators() const noexcept { return generators_; }

private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
  std::vector<GradedMonomial> generators_;
};

ConsequenceVerdict is_consequence(const AlgebraSpec& spec, const GradedMonomial& target,
                                  const std::vector<GradedMonomial>& generators, ConsequenceOptions options = {});

/// Rebuilds the target from the cited generator and checks every step.
bool replay(const GradedMonomial& target, const Derivation& derivation);

struct IndependenceEntry {
  GradedMonomial element;
  ConsequenceVerdict verdict;
  /// For length-n elements of a BT(n-1,1) basis: the element admits no
  /// rearrangement mod I_n other than itself, so no other monomial of the
  /// same length can yield it.
  std::optional<bool> obstruction_holds;
};

std::vector<IndependenceEntry> independence_check(const AlgebraSpec& spec, const std::vector<GradedMonomial>& basis,
                                                  unsigned threads = 1);

/// Distinct degree sequences reachable from m by rearrangements mod I_n.
std::vector<std::vector<int>> rearrangement_orbit(const GradedMonomial& m);

struct DegreeTally {
  std::size_t degree = 0;
  std::size_t identities = 0;
  std::size_t confirmed = 0;
  std::vector<GradedMonomial> unresolved;
};

/// Every identity longer than `generator_degree` checked against all identities of length <= generator_degree.
struct ConsequenceSweep {
  std::size_t generator_degree = 0;
  std::vector<DegreeTally> degrees;

  std::size_t unresolved_count() const noexcept;
};

ConsequenceSweep sweep_consequences(const AlgebraSpec& spec, const std::vector<GradedMonomial>& identities,
                                    std::size_t generator_degree, unsigned threads = 1);

struct ConjectureReport {
  AlgebraSpec spec;
  std::size_t max_degree = 0;
  /// Identities longer than n checked against those of length <= n.
  ConsequenceSweep sweep;
  /// Least d such that every identity up to max_degree follows from those of length <= d.
  std::optional<std::size_t> minimal_generating_degree;
};

/// Enumerates the identities with nonzero degrees up to length 2n-2 and checks
/// that the long ones follow from the short ones.
ConjectureReport conjecture_report(const AlgebraSpec& spec, unsigned threads = 1);

}  // namespace gip
