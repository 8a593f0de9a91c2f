#include "gip/evaluation.hpp"

#include <string>

namespace gip {

std::vector<ElementaryMatrix> implied_matrices(const GradedMonomial& m, const StandardSubstitution& s) {
  if (s.rows.size() != m.size()) {
    throw Error(Errc::LengthMismatch, "substitution has " + std::to_string(s.rows.size()) +
                                          " rows for a monomial of length " + std::to_string(m.size()));
  }
  const int n = m.n();
  std::vector<ElementaryMatrix> out;
  out.reserve(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    const int row = s.rows[i];
    if (row < 1 || row > n) throw Error(Errc::OutOfRange, "substitution row " + std::to_string(row));
    out.push_back({row, shifted(row, m.degree(i), n)});
  }
  return out;
}

std::optional<ElementaryMatrix> evaluate_standard(const AlgebraSpec& spec, const GradedMonomial& m,
                                                  const StandardSubstitution& s) {
  if (m.n() != spec.n()) throw Error(Errc::SizeMismatch, "monomial graded by a different modulus");
  const auto mats = implied_matrices(m, s);
  for (std::size_t i = 0; i < mats.size(); ++i) {
    if (!spec.admits(mats[i].row, mats[i].col)) {
      throw Error(Errc::UnsupportedEntry, "e_{" + std::to_string(mats[i].row) + "," + std::to_string(mats[i].col) +
                                              "} at position " + std::to_string(i + 1) + " is not in " + spec.name());
    }
  }
  for (std::size_t i = 0; i + 1 < mats.size(); ++i) {
    if (mats[i].col != mats[i + 1].row) return std::nullopt;
  }
  return ElementaryMatrix{mats.front().row, mats.back().col};
}

SupportPattern monomial_support(const AlgebraSpec& spec, const GradedMonomial& m) {
  if (m.n() != spec.n()) throw Error(Errc::SizeMismatch, "monomial graded by a different modulus");
  SupportPattern acc = component_support(spec, m.degree(0));
  for (std::size_t i = 1; i < m.size() && !acc.is_empty(); ++i) {
    acc = compose_patterns(acc, component_support(spec, m.degree(i)));
  }
  return acc;
}

std::optional<StandardSubstitution> find_witness(const AlgebraSpec& spec, const GradedMonomial& m) {
  const SupportPattern total = monomial_support(spec, m);
  for (int start = 1; start <= spec.n(); ++start) {
    if (!total.is_mapped(start)) continue;
    StandardSubstitution s;
    s.rows.reserve(m.size());
    int row = start;
    for (std::size_t i = 0; i < m.size(); ++i) {
      s.rows.push_back(row);
      row = shifted(row, m.degree(i), spec.n());
    }
    return s;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// GenericMatrix

GenericMatrix::GenericMatrix(int n) : n_(n), rows_(static_cast<std::size_t>(n)) {
  if (n < 1) throw Error(Errc::InvalidArgument, "matrix size must be positive");
}

GenericMatrix GenericMatrix::generator(const AlgebraSpec& spec, int t, int index) {
  GenericMatrix g(spec.n());
  const SupportPattern basis = component_support(spec, t);
  for (int p = 1; p <= spec.n(); ++p) {
    if (auto q = basis.column(p)) g.set(p, *q, {GenericSymbol{index, p, *q}});
  }
  return g;
}

const std::optional<GenericEntry>& GenericMatrix::row(int r) const {
  if (r < 1 || r > n_) throw Error(Errc::OutOfRange, "row " + std::to_string(r));
  return rows_[static_cast<std::size_t>(r - 1)];
}

std::optional<GenericWord> GenericMatrix::at(int r, int c) const {
  const auto& e = row(r);
  if (!e || e->col != c) return std::nullopt;
  return e->word;
}

bool GenericMatrix::is_zero() const noexcept {
  for (const auto& e : rows_) {
    if (e) return false;
  }
  return true;
}

SupportPattern GenericMatrix::support() const {
  std::vector<int> cols(rows_.size(), 0);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i]) cols[i] = rows_[i]->col;
  }
  return SupportPattern(n_, std::move(cols));
}

void GenericMatrix::set(int r, int c, GenericWord word) {
  if (r < 1 || r > n_ || c < 1 || c > n_) throw Error(Errc::OutOfRange, "entry outside the matrix");
  rows_[static_cast<std::size_t>(r - 1)] = GenericEntry{c, std::move(word)};
}

GenericMatrix operator*(const GenericMatrix& a, const GenericMatrix& b) {
  if (a.n_ != b.n_) throw Error(Errc::SizeMismatch, "cannot multiply matrices of different size");
  GenericMatrix out(a.n_);
  for (int r = 1; r <= a.n_; ++r) {
    const auto& left = a.row(r);
    if (!left) continue;
    const auto& right = b.row(left->col);
    if (!right) continue;
    GenericWord w = left->word;
    w.insert(w.end(), right->word.begin(), right->word.end());
    out.set(r, right->col, std::move(w));
  }
  return out;
}

GenericMatrix generic_evaluate(const AlgebraSpec& spec, const GradedMonomial& m) {
  if (m.n() != spec.n()) throw Error(Errc::SizeMismatch, "monomial graded by a different modulus");
  GenericMatrix acc = GenericMatrix::generator(spec, m.degree(0), 1);
  for (std::size_t i = 1; i < m.size(); ++i) {
    acc = acc * GenericMatrix::generator(spec, m.degree(i), static_cast<int>(i) + 1);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Falls

std::vector<ProfileStep> fall_profile(const AlgebraSpec& spec, const GradedMonomial& m) {
  if (m.n() != spec.n()) throw Error(Errc::SizeMismatch, "monomial graded by a different modulus");
  std::vector<ProfileStep> steps;
  steps.reserve(m.size());
  SupportPattern acc = component_support(spec, m.degree(0));
  steps.push_back({1, empty_line_count(acc), 0, acc});
  for (std::size_t i = 1; i < m.size(); ++i) {
    const int before = empty_line_count(acc);
    acc = compose_patterns(acc, component_support(spec, m.degree(i)));
    const int after = empty_line_count(acc);
    steps.push_back({i + 1, after, after - before, acc});
  }
  return steps;
}

int FallDecomposition::fall_sum() const noexcept {
  int sum = 0;
  for (const auto& s : segments) sum += s.fall.value_or(0);
  return sum;
}

FallDecomposition fall_decomposition(const AlgebraSpec& spec, const GradedMonomial& m) {
  if (m.has_zero_degree()) {
    throw Error(Errc::ZeroDegreeVariable, "strip degree-0 variables before decomposing " + m.to_string());
  }
  const auto steps = fall_profile(spec, m);
  const int n = spec.n();

  FallDecomposition dec;
  dec.n = n;
  dec.leading_empty_lines = steps.front().empty_lines;
  dec.final_empty_lines = steps.back().empty_lines;

  // Factors with a positive fall open a new segment; zero-fall factors join the current one.
  dec.segments.push_back({0, 1, m.degree(0), std::nullopt});
  for (std::size_t i = 1; i < steps.size(); ++i) {
    if (steps[i].fall > 0) {
      dec.segments.push_back({i, i + 1, m.degree(i), steps[i].fall});
    } else {
      auto& seg = dec.segments.back();
      seg.end = i + 1;
      seg.degree = residue(seg.degree + m.degree(i), n);
    }
  }

  dec.completion_length = steps.size();
  while (dec.completion_length > 1 &&
         steps[dec.completion_length - 2].empty_lines == dec.final_empty_lines) {
    --dec.completion_length;
  }
  return dec;
}

namespace {

bool is_identity_of(const AlgebraSpec& spec, const std::vector<int>& degrees) {
  return monomial_support(spec, GradedMonomial(spec.n(), degrees)).is_empty();
}

}  // namespace

CollapseResult collapse(const AlgebraSpec& spec, const GradedMonomial& m) {
  const int n = spec.n();
  const FallDecomposition dec = fall_decomposition(spec, m);
  if (dec.final_empty_lines != n) throw Error(Errc::NotAnIdentity, m.to_string() + " is not an identity of " + spec.name());

  CollapseResult result{m, {}, m.size(), CollapseMethod::Unchanged};
  if (dec.segments.size() == m.size()) {
    for (std::size_t i = 0; i < m.size(); ++i) result.blocks.emplace_back(i, i + 1);
    return result;
  }

  std::vector<int> grouped;
  for (const auto& seg : dec.segments) {
    grouped.push_back(seg.degree);
    result.blocks.emplace_back(seg.begin, seg.end);
  }
  if (is_identity_of(spec, grouped)) {
    result.monomial = GradedMonomial(n, std::move(grouped));
    result.method = CollapseMethod::SegmentGrouping;
  } else {
    std::vector<int> companion;
    result.blocks.clear();
    for (std::size_t s = 0; s < dec.segments.size(); ++s) {
      const auto& seg = dec.segments[s];
      const bool last = s + 1 == dec.segments.size();
      companion.push_back(m.degree(seg.begin));
      result.blocks.emplace_back(seg.begin, seg.begin + 1);
      if (seg.end == seg.begin + 1) continue;
      if (last) {
        result.context_begin = seg.begin + 1;
        break;
      }
      int tail = 0;
      for (std::size_t i = seg.begin + 1; i < seg.end; ++i) tail = residue(tail + m.degree(i), n);
      if (tail == 0) {
        // A degree-0 tail acts as a diagonal matrix; fold it into the preceding variable.
        result.blocks.back().second = seg.end;
      } else {
        companion.push_back(tail);
        result.blocks.emplace_back(seg.begin + 1, seg.end);
      }
    }
    if (!is_identity_of(spec, companion)) {
      throw Error(Errc::NotAnIdentity, "companion of " + m.to_string() + " is not an identity");
    }
    result.monomial = GradedMonomial(n, std::move(companion));
    result.method = CollapseMethod::Companion;
  }

  if (result.monomial.size() > reduction_bound(n)) {
    throw Error(Errc::BoundExceeded, m.to_string() + " collapses to " + result.monomial.to_string() +
                                         ", longer than 2n-2 = " + std::to_string(reduction_bound(n)));
  }
  return result;
}

std::vector<int> expand(const GradedMonomial& original, const CollapseResult& result) {
  std::vector<int> out;
  for (const auto& [begin, end] : result.blocks) {
    for (std::size_t i = begin; i < end; ++i) out.push_back(original.degree(i));
  }
  for (std::size_t i = result.context_begin; i < original.size(); ++i) out.push_back(original.degree(i));
  return out;
}

}  // namespace gip
