#include "gip/tideal.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "gip/identity.hpp"
#include "parallel.hpp"

namespace gip {

Permutation identity_permutation(std::size_t size) {
  Permutation p(size);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

namespace {

bool is_permutation_of(const Permutation& p, std::size_t size) {
  if (p.size() != size) return false;
  std::vector<bool> seen(size, false);
  for (std::size_t v : p) {
    if (v >= size || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

void require_permutation(const Permutation& p, std::size_t size, const char* what) {
  if (!is_permutation_of(p, size)) {
    throw Error(Errc::LabelMismatch, std::string(what) + " is not a permutation of " + std::to_string(size) + " factors");
  }
}

/// Rows assigned to each base factor by chaining the `order` arrangement from `start`.
std::vector<int> chain_rows_for(int n, std::span<const int> degrees, const Permutation& order, int start) {
  std::vector<int> rows(degrees.size());
  int cur = start;
  for (std::size_t factor : order) {
    rows[factor] = cur;
    cur = shifted(cur, degrees[factor], n);
  }
  return rows;
}

bool chains_from(int n, std::span<const int> degrees, const Permutation& order, const std::vector<int>& rows,
                 int start) {
  int cur = start;
  for (std::size_t factor : order) {
    if (rows[factor] != cur) return false;
    cur = shifted(cur, degrees[factor], n);
  }
  return true;
}

/// Enumerates every reordering of the factors that still chains from `start`
/// under the assignment induced by `order`. With `merge_parallel`, factors
/// carrying the same elementary matrix are interchangeable and only one
/// representative per distinct degree sequence is produced.
void for_each_trail(int n, std::span<const int> degrees, const Permutation& order, int start, bool merge_parallel,
                    const std::function<void(const Permutation&)>& visit) {
  struct Group {
    int to;
    std::vector<std::size_t> factors;
  };
  std::vector<Group> groups;
  std::vector<std::vector<std::size_t>> out(static_cast<std::size_t>(n) + 1);
  std::map<std::pair<int, int>, std::size_t> index;
  int cur = start;
  for (std::size_t factor : order) {
    const int to = shifted(cur, degrees[factor], n);
    auto it = merge_parallel ? index.find({cur, to}) : index.end();
    if (it == index.end()) {
      groups.push_back({to, {factor}});
      out[static_cast<std::size_t>(cur)].push_back(groups.size() - 1);
      if (merge_parallel) index.emplace(std::pair{cur, to}, groups.size() - 1);
    } else {
      groups[it->second].factors.push_back(factor);
    }
    cur = to;
  }
  for (auto& adj : out) {
    std::ranges::stable_sort(adj, [&](std::size_t a, std::size_t b) { return groups[a].to < groups[b].to; });
  }

  std::vector<std::size_t> used(groups.size(), 0);
  Permutation trail;
  trail.reserve(order.size());
  std::function<void(int)> dfs = [&](int v) {
    if (trail.size() == order.size()) {
      visit(trail);
      return;
    }
    for (std::size_t g : out[static_cast<std::size_t>(v)]) {
      if (used[g] == groups[g].factors.size()) continue;
      trail.push_back(groups[g].factors[used[g]++]);
      dfs(groups[g].to);
      --used[g];
      trail.pop_back();
    }
  };
  dfs(start);
}

std::vector<int> arranged_degrees(std::span<const int> degrees, const Permutation& p) {
  std::vector<int> out;
  out.reserve(p.size());
  for (std::size_t f : p) out.push_back(degrees[f]);
  return out;
}

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = v.size();
    for (int x : v) h = h * 1000003u ^ static_cast<std::size_t>(x + 1);
    return h;
  }
};

/// Sequence-level breadth-first search over rearrangements mod I_n, keeping
/// one representative arrangement per degree sequence and how it was reached.
class OrbitSearch {
public:
  struct Node {
    std::vector<int> degrees;
    Permutation arrangement;
    std::size_t parent;
    int row;
  };

  OrbitSearch(const GradedMonomial& m) : m_(m) {
    nodes_.push_back({std::vector<int>(m.degrees().begin(), m.degrees().end()), identity_permutation(m.size()), 0, 0});
    seen_.insert(nodes_.front().degrees);
  }

  /// Visits nodes in discovery order until `stop` returns true. Returns the stopping node.
  template <class Stop>
  std::optional<std::size_t> run(Stop&& stop) {
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
      if (stop(nodes_[k])) return k;
      const Permutation base = nodes_[k].arrangement;
      for (int row = 1; row <= m_.n(); ++row) {
        for_each_trail(m_.n(), m_.degrees(), base, row, true, [&](const Permutation& next) {
          auto degs = arranged_degrees(m_.degrees(), next);
          if (seen_.insert(degs).second) nodes_.push_back({std::move(degs), next, k, row});
        });
      }
    }
    return std::nullopt;
  }

  const std::vector<Node>& nodes() const noexcept { return nodes_; }

private:
  const GradedMonomial& m_;
  std::vector<Node> nodes_;
  std::unordered_set<std::vector<int>, VecHash> seen_;
};

}  // namespace

GradedMonomial arrange(const GradedMonomial& base, const Permutation& sigma) {
  require_permutation(sigma, base.size(), "arrangement");
  auto degs = arranged_degrees(base.degrees(), sigma);
  std::vector<int> labels;
  labels.reserve(sigma.size());
  for (std::size_t f : sigma) labels.push_back(base.labels() ? (*base.labels())[f] : static_cast<int>(f) + 1);
  return GradedMonomial(base.n(), std::move(degs), std::move(labels));
}

bool equivalent_at_row(int n, const LabeledMonomialPair& pair, int start_row) {
  const auto& base = pair.base;
  if (base.n() != n) throw Error(Errc::SizeMismatch, "monomial graded by a different modulus");
  require_permutation(pair.sigma, base.size(), "sigma");
  require_permutation(pair.tau, base.size(), "tau");
  if (start_row < 1 || start_row > n) throw Error(Errc::OutOfRange, "starting row " + std::to_string(start_row));
  const auto rows = chain_rows_for(n, base.degrees(), pair.sigma, start_row);
  return chains_from(n, base.degrees(), pair.tau, rows, start_row);
}

EquivalenceResult equivalent_mod_In(int n, const LabeledMonomialPair& pair) {
  for (int row = 1; row <= n; ++row) {
    if (equivalent_at_row(n, pair, row)) {
      return {true, StandardSubstitution{chain_rows_for(n, pair.base.degrees(), pair.sigma, row)}};
    }
  }
  return {false, std::nullopt};
}

std::vector<Permutation> equivalence_class(int n, const GradedMonomial& m, std::size_t cap) {
  if (m.n() != n) throw Error(Errc::SizeMismatch, "monomial graded by a different modulus");
  if (m.size() > cap) {
    throw Error(Errc::CapExceeded, "length " + std::to_string(m.size()) + " exceeds cap " + std::to_string(cap));
  }
  std::set<Permutation> seen{identity_permutation(m.size())};
  std::deque<Permutation> queue(seen.begin(), seen.end());
  while (!queue.empty()) {
    const Permutation p = std::move(queue.front());
    queue.pop_front();
    for (int row = 1; row <= n; ++row) {
      for_each_trail(n, m.degrees(), p, row, false, [&](const Permutation& next) {
        if (seen.insert(next).second) queue.push_back(next);
      });
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<int>> rearrangement_orbit(const GradedMonomial& m) {
  OrbitSearch search(m);
  search.run([](const OrbitSearch::Node&) { return false; });
  std::vector<std::vector<int>> out;
  for (const auto& node : search.nodes()) out.push_back(node.degrees);
  std::ranges::sort(out);
  return out;
}

// ---------------------------------------------------------------------------
// Consequences

struct ConsequenceChecker::Impl {
  AlgebraSpec spec;
  std::size_t cap;
  std::unordered_map<std::vector<int>, std::size_t, VecHash> full;
  std::unordered_set<std::vector<int>, VecHash> proper_prefixes;

  struct Match {
    std::size_t generator;
    std::vector<std::size_t> cuts;
  };

  /// First window (by start, then depth-first over block ends) whose block
  /// sums spell a generator.
  std::optional<Match> find_window(const std::vector<int>& seq) const {
    const int n = spec.n();
    std::vector<int> sums;
    std::vector<std::size_t> cuts;
    std::optional<Match> found;
    std::function<bool(std::size_t)> extend = [&](std::size_t pos) {
      int s = 0;
      for (std::size_t end = pos + 1; end <= seq.size(); ++end) {
        s = residue(s + seq[end - 1], n);
        sums.push_back(s);
        cuts.push_back(end);
        if (auto it = full.find(sums); it != full.end()) {
          found = Match{it->second, cuts};
          return true;
        }
        if (proper_prefixes.contains(sums) && extend(end)) return true;
        sums.pop_back();
        cuts.pop_back();
      }
      return false;
    };
    for (std::size_t begin = 0; begin < seq.size(); ++begin) {
      sums.clear();
      cuts.assign(1, begin);
      if (extend(begin)) return found;
    }
    return std::nullopt;
  }
};

ConsequenceChecker::ConsequenceChecker(const AlgebraSpec& spec, std::vector<GradedMonomial> generators,
                                       ConsequenceOptions options)
    : generators_(std::move(generators)) {
  auto impl = std::make_shared<Impl>(Impl{spec, options.rearrangement_cap ? options.rearrangement_cap
                                                                          : default_equivalence_cap(spec.n()),
                                          {}, {}});
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto& g = generators_[i];
    if (g.n() != spec.n()) throw Error(Errc::SizeMismatch, "generator graded by a different modulus");
    if (!monomial_support(spec, g).is_empty()) {
      throw Error(Errc::GeneratorNotIdentity, g.to_string() + " is not an identity of " + spec.name());
    }
    std::vector<int> seq(g.degrees().begin(), g.degrees().end());
    impl->full.emplace(seq, i);
    for (std::size_t len = 1; len < seq.size(); ++len) {
      impl->proper_prefixes.emplace(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(len));
    }
  }
  impl_ = std::move(impl);
}

ConsequenceVerdict ConsequenceChecker::check(const GradedMonomial& target) const {
  const auto& spec = impl_->spec;
  if (target.n() != spec.n()) throw Error(Errc::SizeMismatch, "target graded by a different modulus");
  if (!monomial_support(spec, target).is_empty()) {
    throw Error(Errc::TargetNotIdentity, target.to_string() + " is not an identity of " + spec.name());
  }
  const StrippedMonomial stripped = strip_zero_degrees(target);
  // An all-zero monomial evaluates to the unit and was rejected above.
  const GradedMonomial& work = *stripped.monomial;
  const bool was_stripped = stripped.kept.size() != target.size();

  auto derive = [&](const Impl::Match& match, std::vector<Permutation> arrangements, std::vector<int> rows) {
    Derivation d{match.generator, generators_[match.generator], was_stripped, std::move(arrangements),
                 std::move(rows), match.cuts};
    return ConsequenceVerdict{ConsequenceStatus::Confirmed, std::move(d)};
  };

  const std::vector<int> direct(work.degrees().begin(), work.degrees().end());
  if (auto match = impl_->find_window(direct)) {
    return derive(*match, {identity_permutation(work.size())}, {});
  }
  if (work.size() > impl_->cap) return {};

  OrbitSearch search(work);
  std::optional<Impl::Match> match;
  auto hit = search.run([&](const OrbitSearch::Node& node) {
    match = impl_->find_window(node.degrees);
    return match.has_value();
  });
  if (!hit) return {};

  std::vector<Permutation> arrangements;
  std::vector<int> rows;
  for (std::size_t k = *hit; k != 0; k = search.nodes()[k].parent) {
    arrangements.push_back(search.nodes()[k].arrangement);
    rows.push_back(search.nodes()[k].row);
  }
  arrangements.push_back(identity_permutation(work.size()));
  std::ranges::reverse(arrangements);
  std::ranges::reverse(rows);
  return derive(*match, std::move(arrangements), std::move(rows));
}

ConsequenceVerdict is_consequence(const AlgebraSpec& spec, const GradedMonomial& target,
                                  const std::vector<GradedMonomial>& generators, ConsequenceOptions options) {
  return ConsequenceChecker(spec, generators, options).check(target);
}

bool replay(const GradedMonomial& target, const Derivation& d) {
  std::optional<GradedMonomial> work = target;
  if (d.stripped) work = strip_zero_degrees(target).monomial;
  if (!work || d.arrangements.empty() || d.chain_rows.size() + 1 != d.arrangements.size()) return false;
  const int n = work->n();
  if (d.generator.n() != n) return false;
  if (d.arrangements.front() != identity_permutation(work->size())) return false;
  for (const auto& p : d.arrangements) {
    if (!is_permutation_of(p, work->size())) return false;
  }
  for (std::size_t k = 0; k + 1 < d.arrangements.size(); ++k) {
    if (d.chain_rows[k] < 1 || d.chain_rows[k] > n) return false;
    if (!equivalent_at_row(n, {*work, d.arrangements[k], d.arrangements[k + 1]}, d.chain_rows[k])) return false;
  }

  const auto arranged = arranged_degrees(work->degrees(), d.arrangements.back());
  if (d.cuts.size() != d.generator.size() + 1 || d.cuts.back() > arranged.size()) return false;
  // left context, the substituted generator, right context
  std::vector<int> rebuilt(arranged.begin(), arranged.begin() + static_cast<std::ptrdiff_t>(d.cuts.front()));
  for (std::size_t k = 0; k < d.generator.size(); ++k) {
    if (d.cuts[k] >= d.cuts[k + 1]) return false;
    int sum = 0;
    for (std::size_t i = d.cuts[k]; i < d.cuts[k + 1]; ++i) {
      sum = residue(sum + arranged[i], n);
      rebuilt.push_back(arranged[i]);
    }
    if (sum != d.generator.degree(k)) return false;
  }
  rebuilt.insert(rebuilt.end(), arranged.begin() + static_cast<std::ptrdiff_t>(d.cuts.back()), arranged.end());
  return rebuilt == arranged;
}

std::vector<IndependenceEntry> independence_check(const AlgebraSpec& spec, const std::vector<GradedMonomial>& basis,
                                                  unsigned threads) {
  const bool near_full = spec.block_count() == 2 && spec.blocks()[1] == 1;
  std::vector<std::optional<IndependenceEntry>> out(basis.size());
  detail::parallel_for(basis.size(), threads, [&](std::size_t i) {
    std::vector<GradedMonomial> others;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (j != i) others.push_back(basis[j]);
    }
    IndependenceEntry entry{basis[i], ConsequenceChecker(spec, std::move(others)).check(basis[i]), std::nullopt};
    if (near_full && basis[i].size() == static_cast<std::size_t>(spec.n())) {
      entry.obstruction_holds = rearrangement_orbit(strip_zero_degrees(basis[i]).monomial.value()).size() == 1;
    }
    out[i] = std::move(entry);
  });
  std::vector<IndependenceEntry> result;
  for (auto& e : out) result.push_back(std::move(*e));
  return result;
}

// ---------------------------------------------------------------------------
// Sweeps

std::size_t ConsequenceSweep::unresolved_count() const noexcept {
  std::size_t total = 0;
  for (const auto& d : degrees) total += d.unresolved.size();
  return total;
}

ConsequenceSweep sweep_consequences(const AlgebraSpec& spec, const std::vector<GradedMonomial>& identities,
                                    std::size_t generator_degree, unsigned threads) {
  std::vector<GradedMonomial> generators;
  std::vector<const GradedMonomial*> targets;
  std::size_t max_len = 0;
  for (const auto& m : identities) {
    max_len = std::max(max_len, m.size());
    if (m.size() <= generator_degree) {
      generators.push_back(m);
    } else {
      targets.push_back(&m);
    }
  }
  const ConsequenceChecker checker(spec, std::move(generators));
  std::vector<char> confirmed(targets.size(), 0);
  detail::parallel_for(targets.size(), threads,
                       [&](std::size_t i) { confirmed[i] = checker.check(*targets[i]).confirmed() ? 1 : 0; });

  ConsequenceSweep sweep{generator_degree, {}};
  for (std::size_t d = 1; d <= max_len; ++d) sweep.degrees.push_back({d, 0, 0, {}});
  for (const auto& m : identities) ++sweep.degrees[m.size() - 1].identities;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    auto& tally = sweep.degrees[targets[i]->size() - 1];
    if (confirmed[i]) {
      ++tally.confirmed;
    } else {
      tally.unresolved.push_back(*targets[i]);
    }
  }
  for (auto& tally : sweep.degrees) std::ranges::sort(tally.unresolved, canonical_less);
  return sweep;
}

ConjectureReport conjecture_report(const AlgebraSpec& spec, unsigned threads) {
  const int n = spec.n();
  const std::size_t max_degree = reduction_bound(n);
  const auto identities = enumerate_identities(spec, max_degree, true, threads);
  ConjectureReport report{spec, max_degree, sweep_consequences(spec, identities, static_cast<std::size_t>(n), threads),
                          std::nullopt};
  if (identities.empty()) return report;

  for (std::size_t d = identities.front().size(); d < static_cast<std::size_t>(n); ++d) {
    if (sweep_consequences(spec, identities, d, threads).unresolved_count() == 0) {
      report.minimal_generating_degree = d;
      return report;
    }
  }
  if (report.sweep.unresolved_count() == 0) {
    report.minimal_generating_degree = std::min<std::size_t>(static_cast<std::size_t>(n), max_degree);
  }
  return report;
}

}  // namespace gip
