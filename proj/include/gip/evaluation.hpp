#pragma once

// Evaluation of graded monomials on the algebra: standard substitutions,
// generic matrices, stepwise fall profiles and the reduction of identities
// to short ones.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "gip/algebra.hpp"

namespace gip {

/// x_s -> e_{rows[s], rows[s] + deg(x_s)}.
struct StandardSubstitution {
  std::vector<int> rows;

  friend bool operator==(const StandardSubstitution&, const StandardSubstitution&) = default;
};

/// The elementary matrices a substitution assigns to each factor of `m`.
std::vector<ElementaryMatrix> implied_matrices(const GradedMonomial& m, const StandardSubstitution& s);

/// Product of the substituted elementary matrices; nullopt is the zero matrix.
/// Throws UnsupportedEntry when a factor falls outside the algebra.
std::optional<ElementaryMatrix> evaluate_standard(const AlgebraSpec& spec, const GradedMonomial& m,
                                                  const StandardSubstitution& s);

/// Support of m evaluated on the generic matrices of the algebra. Empty iff m is an identity.
SupportPattern monomial_support(const AlgebraSpec& spec, const GradedMonomial& m);

/// A non-vanishing standard substitution with the lowest starting row, if any.
std::optional<StandardSubstitution> find_witness(const AlgebraSpec& spec, const GradedMonomial& m);

/// y^{(generator)}_{row,col}
struct GenericSymbol {
  int generator = 0;
  int row = 0;
  int col = 0;

  friend auto operator<=>(const GenericSymbol&, const GenericSymbol&) = default;
};

using GenericWord = std::vector<GenericSymbol>;

struct GenericEntry {
  int col = 0;
  GenericWord word;

  friend bool operator==(const GenericEntry&, const GenericEntry&) = default;
};

/// Matrix over commuting indeterminates with at most one nonzero entry per
/// row, each entry a single monomial kept as the ordered list of its symbols.
class GenericMatrix {
public:
  explicit GenericMatrix(int n);

  /// G_r^{(t)}: the generic homogeneous element of degree t with index r.
  static GenericMatrix generator(const AlgebraSpec& spec, int t, int index);

  int n() const noexcept { return n_; }
  const std::optional<GenericEntry>& row(int r) const;
  std::optional<GenericWord> at(int row, int col) const;
  bool is_zero() const noexcept;
  SupportPattern support() const;

  void set(int row, int col, GenericWord word);

  friend GenericMatrix operator*(const GenericMatrix& a, const GenericMatrix& b);
  friend bool operator==(const GenericMatrix&, const GenericMatrix&) = default;

private:
  int n_;
  std::vector<std::optional<GenericEntry>> rows_;
};

/// m evaluated on G_1^{(deg x_1)} ... G_r^{(deg x_r)}.
GenericMatrix generic_evaluate(const AlgebraSpec& spec, const GradedMonomial& m);

struct ProfileStep {
  std::size_t prefix_length = 0;
  int empty_lines = 0;
  /// Fall contributed by this factor; the first factor has no predecessor and records 0.
  int fall = 0;
  SupportPattern pattern{1};
};

std::vector<ProfileStep> fall_profile(const AlgebraSpec& spec, const GradedMonomial& m);

/// A segment [begin, end): the factor at `begin` is the one whose fall opens
/// the segment, followed by its zero-fall tail.
struct FallSegment {
  std::size_t begin = 0;
  std::size_t end = 0;
  int degree = 0;
  /// Fall of this segment against the product of everything before it; absent for the leading segment.
  std::optional<int> fall;

  friend bool operator==(const FallSegment&, const FallSegment&) = default;
};

struct FallDecomposition {
  int n = 0;
  std::vector<FallSegment> segments;
  /// f of the leading segment's pattern.
  int leading_empty_lines = 0;
  int final_empty_lines = 0;
  /// Length of the shortest prefix already reaching `final_empty_lines`.
  std::size_t completion_length = 0;

  int fall_sum() const noexcept;
  /// Falls add up to n - f(M_1).
  bool certifies_identity() const noexcept { return fall_sum() == n - leading_empty_lines; }
};

/// Groups the factors as M_1 = G_1 and M_s = G_{i_s} C_s. Rejects degree-0 factors.
FallDecomposition fall_decomposition(const AlgebraSpec& spec, const GradedMonomial& m);

/// Identities collapse to ones of length at most 2n - 2.
constexpr std::size_t reduction_bound(int n) noexcept {
  return n >= 1 ? static_cast<std::size_t>(2 * n - 2) : 0;
}

enum class CollapseMethod { Unchanged, SegmentGrouping, Companion };

struct CollapseResult {
  GradedMonomial monomial;
  /// Variable k of `monomial` stands for the factors blocks[k] of the input.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  /// Factors from here on are right context and not part of any block.
  std::size_t context_begin = 0;
  CollapseMethod method = CollapseMethod::Unchanged;
};

/// Shortens an identity to one it is a graded-substitution instance of.
///
/// Each segment of the fall decomposition becomes a single variable. When that
/// grouping is not itself an identity (possible once the last block is larger
/// than 1) the result is the companion monomial instead: one variable per
/// fall-opening factor, one per nonempty zero-fall tail (dropped when its
/// degree is 0) and nothing for the tail after the last fall. Both shapes have
/// the same stepwise empty-line counts as the input at every segment boundary.
CollapseResult collapse(const AlgebraSpec& spec, const GradedMonomial& m);

/// Substitutes the blocks back into `result.monomial` and appends the context.
std::vector<int> expand(const GradedMonomial& original, const CollapseResult& result);

}  // namespace gip
