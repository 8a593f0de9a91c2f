#include "gip/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace gip {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::SumMismatch: return "SumMismatch";
    case Errc::ZeroBlock: return "ZeroBlock";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::UnsupportedEntry: return "UnsupportedEntry";
    case Errc::ZeroDegreeVariable: return "ZeroDegreeVariable";
    case Errc::NotAnIdentity: return "NotAnIdentity";
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::LabelMismatch: return "LabelMismatch";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::TargetNotIdentity: return "TargetNotIdentity";
    case Errc::GeneratorNotIdentity: return "GeneratorNotIdentity";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// AlgebraSpec

AlgebraSpec::AlgebraSpec(int n, std::vector<int> blocks) : n_(n), blocks_(std::move(blocks)) {
  row_block_.reserve(static_cast<std::size_t>(n_));
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    row_block_.insert(row_block_.end(), static_cast<std::size_t>(blocks_[b]), static_cast<int>(b) + 1);
  }
}

AlgebraSpec make_algebra_spec(int n, std::vector<int> blocks) {
  if (n < 1) throw Error(Errc::InvalidArgument, "n must be positive, got " + std::to_string(n));
  if (blocks.empty()) throw Error(Errc::InvalidArgument, "at least one block is required");
  for (int d : blocks) {
    if (d < 1) throw Error(Errc::ZeroBlock, "block sizes must be positive, got " + std::to_string(d));
  }
  const long long sum = std::accumulate(blocks.begin(), blocks.end(), 0LL);
  if (sum != n) {
    throw Error(Errc::SumMismatch,
                "blocks sum to " + std::to_string(sum) + " but n = " + std::to_string(n));
  }
  return AlgebraSpec(n, std::move(blocks));
}

int AlgebraSpec::block_of(int row) const {
  if (row < 1 || row > n_) {
    throw Error(Errc::OutOfRange, "row " + std::to_string(row) + " outside 1.." + std::to_string(n_));
  }
  return row_block_[static_cast<std::size_t>(row - 1)];
}

bool AlgebraSpec::admits(int row, int col) const {
  return block_of(row) <= block_of(col);
}

std::string AlgebraSpec::name() const {
  if (is_full()) return "M_" + std::to_string(n_);
  std::string s = "BT(";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(blocks_[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// GradedMonomial

GradedMonomial::GradedMonomial(int n, std::vector<int> degrees) : n_(n), degrees_(std::move(degrees)) {
  if (n_ < 1) throw Error(Errc::InvalidArgument, "grading modulus must be positive");
  if (degrees_.empty()) throw Error(Errc::InvalidArgument, "a monomial needs at least one variable");
  for (int& d : degrees_) d = residue(d, n_);
}

GradedMonomial::GradedMonomial(int n, std::vector<int> degrees, std::vector<int> labels)
    : GradedMonomial(n, std::move(degrees)) {
  if (labels.size() != degrees_.size()) {
    throw Error(Errc::LabelMismatch, "label count differs from monomial length");
  }
  if (std::set<int>(labels.begin(), labels.end()).size() != labels.size()) {
    throw Error(Errc::LabelMismatch, "labels must be pairwise distinct");
  }
  labels_ = std::move(labels);
}

int GradedMonomial::total_degree() const noexcept {
  long long sum = 0;
  for (int d : degrees_) sum += d;
  return residue(sum, n_);
}

bool GradedMonomial::has_zero_degree() const noexcept {
  return std::ranges::find(degrees_, 0) != degrees_.end();
}

GradedMonomial GradedMonomial::sub(std::size_t begin, std::size_t end) const {
  if (begin >= end || end > degrees_.size()) {
    throw Error(Errc::OutOfRange, "empty or out-of-range submonomial");
  }
  std::vector<int> degs(degrees_.begin() + static_cast<std::ptrdiff_t>(begin),
                        degrees_.begin() + static_cast<std::ptrdiff_t>(end));
  if (!labels_) return GradedMonomial(n_, std::move(degs));
  std::vector<int> labs(labels_->begin() + static_cast<std::ptrdiff_t>(begin),
                        labels_->begin() + static_cast<std::ptrdiff_t>(end));
  return GradedMonomial(n_, std::move(degs), std::move(labs));
}

std::string GradedMonomial::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(degrees_[i]);
  }
  return s;
}

bool canonical_less(const GradedMonomial& a, const GradedMonomial& b) noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::ranges::lexicographical_compare(a.degrees(), b.degrees());
}

// ---------------------------------------------------------------------------
// SupportPattern

SupportPattern::SupportPattern(int n) : n_(n), cols_(static_cast<std::size_t>(n), 0) {
  if (n < 1) throw Error(Errc::InvalidArgument, "pattern size must be positive");
}

SupportPattern::SupportPattern(int n, std::vector<int> columns) : n_(n), cols_(std::move(columns)) {
  if (n < 1) throw Error(Errc::InvalidArgument, "pattern size must be positive");
  if (cols_.size() != static_cast<std::size_t>(n)) {
    throw Error(Errc::SizeMismatch, "pattern needs one entry per row");
  }
  for (int c : cols_) {
    if (c < 0 || c > n) throw Error(Errc::OutOfRange, "column " + std::to_string(c) + " out of range");
  }
}

SupportPattern SupportPattern::full_shift(int n, int t) {
  std::vector<int> cols(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) cols[static_cast<std::size_t>(i - 1)] = shifted(i, t, n);
  return SupportPattern(n, std::move(cols));
}

std::optional<int> SupportPattern::column(int row) const {
  if (row < 1 || row > n_) throw Error(Errc::OutOfRange, "row " + std::to_string(row) + " out of range");
  const int c = cols_[static_cast<std::size_t>(row - 1)];
  if (c == 0) return std::nullopt;
  return c;
}

int SupportPattern::mapped_count() const noexcept {
  return static_cast<int>(std::ranges::count_if(cols_, [](int c) { return c != 0; }));
}

bool SupportPattern::is_subpattern_of(const SupportPattern& other) const {
  if (other.n_ != n_) throw Error(Errc::SizeMismatch, "patterns of different size");
  for (std::size_t i = 0; i < cols_.size(); ++i) {
    if (cols_[i] != 0 && other.cols_[i] != cols_[i]) return false;
  }
  return true;
}

std::optional<int> SupportPattern::homogeneous_degree() const {
  std::optional<int> degree;
  for (int i = 1; i <= n_; ++i) {
    const int c = cols_[static_cast<std::size_t>(i - 1)];
    if (c == 0) continue;
    const int d = residue(c - i, n_);
    if (degree && *degree != d) return std::nullopt;
    degree = d;
  }
  return degree;
}

std::string SupportPattern::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int i = 1; i <= n_; ++i) {
    const int c = cols_[static_cast<std::size_t>(i - 1)];
    if (c == 0) continue;
    if (!first) out << ", ";
    out << i << "->" << c;
    first = false;
  }
  out << '}';
  return out.str();
}

SupportPattern component_support(const AlgebraSpec& spec, int t) {
  const int n = spec.n();
  std::vector<int> cols(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    const int j = shifted(i, t, n);
    if (spec.admits(i, j)) cols[static_cast<std::size_t>(i - 1)] = j;
  }
  return SupportPattern(n, std::move(cols));
}

SupportPattern compose_patterns(const SupportPattern& a, const SupportPattern& b) {
  if (a.n() != b.n()) throw Error(Errc::SizeMismatch, "cannot compose patterns of different size");
  const auto ac = a.columns();
  const auto bc = b.columns();
  std::vector<int> cols(ac.size(), 0);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] != 0) cols[i] = bc[static_cast<std::size_t>(ac[i] - 1)];
  }
  return SupportPattern(a.n(), std::move(cols));
}

int empty_line_count(const SupportPattern& a) {
  return a.n() - a.mapped_count();
}

int fall(const SupportPattern& a, const SupportPattern& b) {
  return empty_line_count(compose_patterns(a, b)) - empty_line_count(a);
}

}  // namespace gip
