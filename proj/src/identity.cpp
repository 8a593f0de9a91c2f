#include "gip/identity.hpp"

#include <string>

#include "parallel.hpp"

namespace gip {

StrippedMonomial strip_zero_degrees(const GradedMonomial& m) {
  StrippedMonomial out;
  std::vector<int> degrees;
  std::vector<int> labels;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m.degree(i) == 0) continue;
    out.kept.push_back(i);
    degrees.push_back(m.degree(i));
    if (m.labels()) labels.push_back((*m.labels())[i]);
  }
  if (out.kept.size() == m.size()) {
    out.monomial = m;
  } else if (!degrees.empty()) {
    out.monomial = m.labels() ? GradedMonomial(m.n(), std::move(degrees), std::move(labels))
                              : GradedMonomial(m.n(), std::move(degrees));
  }
  return out;
}

IdentityReport is_identity(const AlgebraSpec& spec, const GradedMonomial& m, bool with_profile) {
  IdentityReport report{m, false, find_witness(spec, m), std::nullopt};
  report.is_identity = !report.witness.has_value();
  if (with_profile) report.profile = fall_profile(spec, m);
  return report;
}

bool bt_n11_criterion(int n, const GradedMonomial& m) {
  if (m.size() != static_cast<std::size_t>(n)) {
    throw Error(Errc::LengthMismatch, "criterion applies to monomials of length n = " + std::to_string(n));
  }
  if (m.n() != n) throw Error(Errc::SizeMismatch, "monomial graded by a different modulus");
  if (m.has_zero_degree()) return false;
  for (std::size_t r = 0; r + 1 < m.size(); ++r) {
    int sum = 0;
    for (std::size_t s = r; s + 1 < m.size(); ++s) {
      sum = residue(sum + m.degree(s), n);
      if (sum == 0) return false;
    }
  }
  return true;
}

SupportPattern leading_rows_shift(int n, int t) {
  std::vector<int> cols(static_cast<std::size_t>(n), 0);
  for (int i = 1; i < n; ++i) cols[static_cast<std::size_t>(i - 1)] = shifted(i, t, n);
  return SupportPattern(n, std::move(cols));
}

bool short_monomial_nonidentity_check(int n, const GradedMonomial& m) {
  if (m.size() >= static_cast<std::size_t>(n)) {
    throw Error(Errc::LengthMismatch, "fast path covers monomials shorter than n = " + std::to_string(n));
  }
  if (m.n() != n) throw Error(Errc::SizeMismatch, "monomial graded by a different modulus");
  SupportPattern acc = leading_rows_shift(n, m.degree(0));
  for (std::size_t i = 1; i < m.size(); ++i) acc = compose_patterns(acc, leading_rows_shift(n, m.degree(i)));
  return acc.is_empty();
}

namespace {

std::vector<int> alphabet(int n, bool nonzero_only) {
  std::vector<int> out;
  for (int t = nonzero_only ? 1 : 0; t < n; ++t) out.push_back(t);
  return out;
}

/// Depth-first walk over sequences extending `prefix`, lexicographic order.
/// Calls emit(length, prefix) for every identity with length <= max_len.
template <class Emit>
void walk(const std::vector<SupportPattern>& components, const std::vector<int>& letters, std::size_t max_len,
          std::vector<int>& prefix, const SupportPattern& acc, Emit& emit) {
  if (acc.is_empty()) emit(prefix);
  if (prefix.size() == max_len) return;
  for (int t : letters) {
    prefix.push_back(t);
    walk(components, letters, max_len, prefix, compose_patterns(acc, components[static_cast<std::size_t>(t)]), emit);
    prefix.pop_back();
  }
}

std::vector<SupportPattern> all_components(const AlgebraSpec& spec) {
  std::vector<SupportPattern> out;
  for (int t = 0; t < spec.n(); ++t) out.push_back(component_support(spec, t));
  return out;
}

}  // namespace

void for_each_identity(const AlgebraSpec& spec, std::size_t max_degree, bool nonzero_only,
                       const std::function<void(const GradedMonomial&)>& visit) {
  const auto components = all_components(spec);
  const auto letters = alphabet(spec.n(), nonzero_only);
  for (std::size_t len = 1; len <= max_degree; ++len) {
    auto emit = [&](const std::vector<int>& seq) {
      if (seq.size() == len) visit(GradedMonomial(spec.n(), seq));
    };
    for (int first : letters) {
      std::vector<int> prefix{first};
      walk(components, letters, len, prefix, components[static_cast<std::size_t>(first)], emit);
    }
  }
}

std::vector<GradedMonomial> enumerate_identities(const AlgebraSpec& spec, std::size_t max_degree, bool nonzero_only,
                                                 unsigned threads) {
  const auto components = all_components(spec);
  const auto letters = alphabet(spec.n(), nonzero_only);

  // buckets[first letter][length] keeps each partition in lexicographic order.
  std::vector<std::vector<std::vector<GradedMonomial>>> buckets(
      letters.size(), std::vector<std::vector<GradedMonomial>>(max_degree + 1));
  detail::parallel_for(letters.size(), threads, [&](std::size_t k) {
    auto& mine = buckets[k];
    auto emit = [&](const std::vector<int>& seq) { mine[seq.size()].emplace_back(spec.n(), seq); };
    std::vector<int> prefix{letters[k]};
    walk(components, letters, max_degree, prefix, components[static_cast<std::size_t>(letters[k])], emit);
  });

  std::vector<GradedMonomial> out;
  for (std::size_t len = 1; len <= max_degree; ++len) {
    for (auto& part : buckets) {
      for (auto& m : part[len]) out.push_back(std::move(m));
    }
  }
  return out;
}

BtBasis minimal_basis_bt_n11(int n) {
  if (n < 2) throw Error(Errc::InvalidArgument, "BT(n-1,1) needs n >= 2");
  BtBasis basis{n, {}};
  std::vector<int> seq(static_cast<std::size_t>(n), 1);
  while (true) {
    GradedMonomial m(n, seq);
    if (bt_n11_criterion(n, m)) basis.monomials.push_back(std::move(m));
    // odometer over 1..n-1, last position fastest
    std::size_t i = seq.size();
    while (i > 0 && seq[i - 1] == n - 1) seq[--i] = 1;
    if (i == 0) break;
    ++seq[i - 1];
  }
  return basis;
}

}  // namespace gip
