#pragma once

// Block-triangular subalgebras of M_n(F) with the Z_n-grading in which
// e_{ij} has degree (j - i) mod n, and the 0/1 support calculus used to
// decide monomial identities.
//
// Rows and columns are 1-based throughout; degrees are residues 0..n-1.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gip/error.hpp"

namespace gip {

/// Reduces any integer to its canonical residue in 0..n-1.
constexpr int residue(long long value, int n) noexcept {
  const long long r = value % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

/// Column reached from `row` by a shift of `degree`, in 1..n.
constexpr int shifted(int row, int degree, int n) noexcept {
  return residue(static_cast<long long>(row) - 1 + degree, n) + 1;
}

/// BT(d_1,...,d_m;F) inside M_n(F). A single block is the full matrix algebra.
class AlgebraSpec {
public:
  int n() const noexcept { return n_; }
  std::span<const int> blocks() const noexcept { return blocks_; }
  int block_count() const noexcept { return static_cast<int>(blocks_.size()); }
  bool is_full() const noexcept { return blocks_.size() == 1; }

  /// Index (1-based) of the diagonal block holding `row`.
  int block_of(int row) const;

  /// True when e_{row,col} belongs to the algebra.
  bool admits(int row, int col) const;

  /// "BT(4,1)" or "M_3".
  std::string name() const;

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;

private:
  friend AlgebraSpec make_algebra_spec(int n, std::vector<int> blocks);
  AlgebraSpec(int n, std::vector<int> blocks);

  int n_;
  std::vector<int> blocks_;
  std::vector<int> row_block_;
};

AlgebraSpec make_algebra_spec(int n, std::vector<int> blocks);

/// e_{row,col}.
struct ElementaryMatrix {
  int row = 1;
  int col = 1;

  int degree(int n) const noexcept { return residue(col - row, n); }

  friend bool operator==(const ElementaryMatrix&, const ElementaryMatrix&) = default;
};

/// A product of graded variables, recorded by the degree of each factor.
/// Labels name the variables when the monomial is treated as multilinear;
/// otherwise positions serve as labels.
class GradedMonomial {
public:
  GradedMonomial(int n, std::vector<int> degrees);
  GradedMonomial(int n, std::vector<int> degrees, std::vector<int> labels);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return degrees_.size(); }
  std::span<const int> degrees() const noexcept { return degrees_; }
  int degree(std::size_t position) const { return degrees_.at(position); }
  const std::optional<std::vector<int>>& labels() const noexcept { return labels_; }

  int total_degree() const noexcept;
  bool has_zero_degree() const noexcept;

  /// Factors [begin, end) as a new monomial; labels follow along.
  GradedMonomial sub(std::size_t begin, std::size_t end) const;

  /// Comma-separated residues, e.g. "1,2,3".
  std::string to_string() const;

  friend bool operator==(const GradedMonomial&, const GradedMonomial&) = default;

private:
  int n_;
  std::vector<int> degrees_;
  std::optional<std::vector<int>> labels_;
};

/// Canonical order used by every report: shorter first, then lexicographic.
bool canonical_less(const GradedMonomial& a, const GradedMonomial& b) noexcept;

/// Row support of a homogeneous element: each row maps to at most one column.
class SupportPattern {
public:
  /// The empty pattern on n rows.
  explicit SupportPattern(int n);
  /// `columns[row-1]` is the column of that row, or 0 when the row is empty.
  SupportPattern(int n, std::vector<int> columns);

  /// Every row i mapped to i + t: the support of M_n^{(t)}.
  static SupportPattern full_shift(int n, int t);

  int n() const noexcept { return n_; }
  std::optional<int> column(int row) const;
  bool is_mapped(int row) const { return column(row).has_value(); }
  std::span<const int> columns() const noexcept { return cols_; }
  int mapped_count() const noexcept;
  bool is_empty() const noexcept { return mapped_count() == 0; }

  /// Every mapped row of this pattern is mapped identically in `other`.
  bool is_subpattern_of(const SupportPattern& other) const;

  /// Common shift (col - row) mod n of all mapped rows, if there is one.
  /// The empty pattern has no degree.
  std::optional<int> homogeneous_degree() const;

  std::string to_string() const;

  friend bool operator==(const SupportPattern&, const SupportPattern&) = default;

private:
  int n_;
  std::vector<int> cols_;
};

/// Support of the canonical basis of the degree-t component of the algebra.
SupportPattern component_support(const AlgebraSpec& spec, int t);

/// Support of the product AB.
SupportPattern compose_patterns(const SupportPattern& a, const SupportPattern& b);

/// f_A: number of zero rows.
int empty_line_count(const SupportPattern& a);

/// F(A,B) = f_{AB} - f_A.
int fall(const SupportPattern& a, const SupportPattern& b);

}  // namespace gip
