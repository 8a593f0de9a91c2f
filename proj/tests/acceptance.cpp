// Acceptance runner: one PASS/FAIL line per criterion, each against its time limit.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "gip/evaluation.hpp"
#include "gip/identity.hpp"
#include "gip/tideal.hpp"
#include "oracle.hpp"

using namespace gip;

namespace {

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string seq(const GradedMonomial& m) { return "(" + m.to_string() + ")"; }

Outcome golden_examples() {
  Outcome out;
  const auto bt41 = make_algebra_spec(5, {4, 1});
  const auto bt44 = make_algebra_spec(8, {4, 4});
  const std::vector<std::tuple<const AlgebraSpec*, std::vector<int>, bool>> cases = {
      {&bt41, {1, 2, 3, 4, 4}, false},
      {&bt41, {1, 2, 1, 3, 4}, true},
      {&bt41, {1, 2, 3, 4, 4, 3, 1}, true},
      {&bt41, {1, 2, 3, 1, 1}, false},
      {&bt44, {1, 1, 1, 1, 7, 7, 7, 1, 1, 1, 7, 1, 1}, true},
      {&bt44, {1, 1, 1, 1, 7, 7, 2, 1}, false},
  };
  for (const auto& [spec, degrees, expected] : cases) {
    const GradedMonomial m(spec->n(), degrees);
    out.require(is_identity(*spec, m).is_identity == expected, spec->name() + " " + seq(m));
  }
  for (int n = 2; n <= 8; ++n) {
    for (const auto& blocks : oracle::compositions(n)) {
      if (blocks.size() < 2) continue;
      const auto spec = make_algebra_spec(n, blocks);
      out.require(is_identity(spec, GradedMonomial(n, std::vector<int>(static_cast<std::size_t>(n), 1))).is_identity,
                  spec.name() + " degree-1 power");
    }
  }
  return out;
}

Outcome criterion_equivalence() {
  Outcome out;
  for (int n = 3; n <= 5; ++n) {
    const auto spec = make_algebra_spec(n, {n - 1, 1});
    std::size_t cases = 0;
    oracle::for_each_sequence(static_cast<std::size_t>(n), 1, n - 1, [&](const std::vector<int>& d) {
      const GradedMonomial m(n, d);
      ++cases;
      out.require(bt_n11_criterion(n, m) == is_identity(spec, m).is_identity, spec.name() + " " + seq(m));
    });
    std::size_t expected = 1;
    for (int i = 0; i < n; ++i) expected *= static_cast<std::size_t>(n - 1);
    out.require(cases == expected, "case count");
  }
  return out;
}

Outcome short_monomials() {
  Outcome out;
  for (int n = 3; n <= 5; ++n) {
    const auto spec = make_algebra_spec(n, {n - 1, 1});
    for (std::size_t len = 1; len < static_cast<std::size_t>(n); ++len) {
      oracle::for_each_sequence(len, 1, n - 1, [&](const std::vector<int>& d) {
        const GradedMonomial m(n, d);
        out.require(!is_identity(spec, m).is_identity, spec.name() + " " + seq(m));
        out.require(!short_monomial_nonidentity_check(n, m), "leading-rows check " + seq(m));
      });
    }
  }
  return out;
}

void check_collapse(Outcome& out, const AlgebraSpec& spec, const GradedMonomial& m) {
  const auto c = collapse(spec, m);
  out.require(c.monomial.size() <= reduction_bound(spec.n()), spec.name() + " long collapse of " + seq(m));
  out.require(is_identity(spec, c.monomial).is_identity, spec.name() + " collapse of " + seq(m) + " not an identity");
  const auto v = is_consequence(spec, m, {c.monomial});
  out.require(v.confirmed(), spec.name() + " " + seq(m) + " unresolved from " + seq(c.monomial));
}

Outcome reduction_bound_check() {
  Outcome out;
  std::mt19937_64 rng(7);
  for (const auto& blocks : std::vector<std::vector<int>>{{2, 2}, {3, 1}, {4, 1}}) {
    int n = 0;
    for (int b : blocks) n += b;
    const auto spec = make_algebra_spec(n, blocks);
    const auto bound = reduction_bound(n);
    for (const auto& m : enumerate_identities(spec, bound, true, workers())) check_collapse(out, spec, m);

    std::uniform_int_distribution<int> letter(1, n - 1);
    for (std::size_t len : {bound + 1, bound + 2}) {
      std::size_t sampled = 0;
      for (std::size_t attempt = 0; sampled < 1000 && attempt < 1000000; ++attempt) {
        std::vector<int> d(len);
        for (auto& v : d) v = letter(rng);
        const GradedMonomial m(n, d);
        if (!is_identity(spec, m).is_identity) continue;
        ++sampled;
        check_collapse(out, spec, m);
      }
      out.require(sampled == 1000, spec.name() + " could not sample identities of length " + std::to_string(len));
    }
  }
  return out;
}

Outcome bt22_conjecture() {
  Outcome out;
  const auto spec = make_algebra_spec(4, {2, 2});
  const auto ids = enumerate_identities(spec, reduction_bound(4), true, workers());
  const auto sweep = sweep_consequences(spec, ids, 3, workers());
  for (const auto& d : sweep.degrees) {
    if (d.degree < 4) continue;
    out.require(d.identities > 0, "no identities of degree " + std::to_string(d.degree));
    out.require(d.confirmed == d.identities && d.unresolved.empty(),
                std::to_string(d.unresolved.size()) + " unresolved at degree " + std::to_string(d.degree));
  }
  const auto report = conjecture_report(spec, workers());
  out.require(report.sweep.unresolved_count() == 0, "conjecture_report left cases unresolved");
  out.require(report.minimal_generating_degree && *report.minimal_generating_degree <= 3,
              "minimal generating degree above 3");
  return out;
}

Outcome basis_theorems() {
  Outcome out;
  for (int n = 3; n <= 5; ++n) {
    const auto spec = make_algebra_spec(n, {n - 1, 1});
    const auto basis = minimal_basis_bt_n11(n).monomials;

    std::set<std::string> expected, actual;
    for (const auto& m : enumerate_identities(spec, static_cast<std::size_t>(n), true, workers()))
      if (m.size() == static_cast<std::size_t>(n)) expected.insert(m.to_string());
    for (const auto& m : basis) actual.insert(m.to_string());
    out.require(expected == actual, spec.name() + " basis differs from the degree-n identities");

    const auto report = conjecture_report(spec, workers());
    for (const auto& d : report.sweep.degrees) {
      if (d.degree <= static_cast<std::size_t>(n)) {
        const auto want = d.degree == static_cast<std::size_t>(n) ? basis.size() : 0;
        out.require(d.identities == want, spec.name() + " generators differ from the basis");
        continue;
      }
      out.require(d.unresolved.empty(), spec.name() + " unresolved at degree " + std::to_string(d.degree));
    }
    out.require(report.max_degree == reduction_bound(n), "sweep range");

    for (const auto& e : independence_check(spec, basis, workers())) {
      out.require(!e.verdict.confirmed(), spec.name() + " basis element " + seq(e.element) + " is derivable");
      out.require(e.obstruction_holds.value_or(false), spec.name() + " obstruction fails for " + seq(e.element));
    }
  }
  return out;
}

Outcome oracle_cross_validation() {
  Outcome out;
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 1000; ++iter) {
    const int n = std::uniform_int_distribution<int>(1, 6)(rng);
    const auto all = oracle::compositions(n);
    const auto blocks = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
    const auto len = std::uniform_int_distribution<std::size_t>(1, 10)(rng);
    std::vector<int> d(len);
    for (auto& v : d) v = std::uniform_int_distribution<int>(0, n - 1)(rng);
    const auto spec = make_algebra_spec(n, blocks);
    const GradedMonomial m(n, d);
    const bool support = is_identity(spec, m).is_identity;
    const bool generic = generic_evaluate(spec, m).is_zero();
    const bool numeric = oracle::numeric_is_identity(n, blocks, d, rng);
    out.require(support == generic && generic == numeric, spec.name() + " " + seq(m));
  }
  return out;
}

std::pair<SupportPattern, int> random_homogeneous(std::mt19937_64& rng, int n) {
  const int t = std::uniform_int_distribution<int>(0, n - 1)(rng);
  std::bernoulli_distribution keep(0.7);
  std::vector<int> cols(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i)
    if (keep(rng)) cols[static_cast<std::size_t>(i - 1)] = shifted(i, t, n);
  return {SupportPattern(n, cols), t};
}

Outcome fall_calculus() {
  Outcome out;
  std::mt19937_64 rng(13);
  constexpr int kPairs = 10000;
  std::size_t positive = 0, zero = 0, equal = 0, strict = 0;
  for (int iter = 0; iter < kPairs; ++iter) {
    const int n = std::uniform_int_distribution<int>(1, 8)(rng);
    const auto [a, ta] = random_homogeneous(rng, n);
    const auto [b, tb] = random_homogeneous(rng, n);
    const auto [c, tc] = random_homogeneous(rng, n);
    const auto ab = compose_patterns(a, b);
    const int f = fall(a, b);

    bool hits_empty_row = false;
    for (int i = 1; i <= n; ++i)
      if (auto j = a.column(i); j && !b.is_mapped(*j)) hits_empty_row = true;
    out.require((f > 0) == hits_empty_row, "positive fall iff an image row is empty: " + a.to_string() + " " + b.to_string());
    (f > 0 ? positive : zero)++;

    out.require(f <= empty_line_count(b), "fall bounded by empty rows: " + a.to_string() + " " + b.to_string());
    bool shifted_rows_filled = true;
    for (int i = 1; i <= n; ++i)
      if (!a.is_mapped(i) && !b.is_mapped(shifted(i, ta, n))) shifted_rows_filled = false;
    out.require((f == empty_line_count(b)) == shifted_rows_filled, "equality condition: " + a.to_string() + " " + b.to_string());
    (f == empty_line_count(b) ? equal : strict)++;

    out.require(compose_patterns(ab, c) == compose_patterns(a, compose_patterns(b, c)), "associativity");
    out.require(empty_line_count(ab) >= empty_line_count(a), "monotone empty rows");
  }
  out.require(positive > 0 && zero > 0 && equal > 0 && strict > 0, "both branches of each property exercised");
  return out;
}

Outcome equivalence_checks() {
  Outcome out;
  auto replays = [&](int n, const LabeledMonomialPair& pair, const EquivalenceResult& r) {
    if (!r.witness) return false;
    const auto full = make_algebra_spec(n, {n});
    auto value = [&](const Permutation& p) {
      StandardSubstitution s;
      for (auto k : p) s.rows.push_back(r.witness->rows[k]);
      return evaluate_standard(full, arrange(pair.base, p), s);
    };
    const auto a = value(pair.sigma);
    const auto b = value(pair.tau);
    return a && b && *a == *b;
  };
  for (int n = 1; n <= 6; ++n) {
    const LabeledMonomialPair commute{GradedMonomial(n, {0, 0}), {0, 1}, {1, 0}};
    const auto r1 = equivalent_mod_In(n, commute);
    out.require(r1.equivalent && replays(n, commute, r1), "identity (1) at n=" + std::to_string(n));
    for (int d = 0; d < n; ++d) {
      const LabeledMonomialPair rev{GradedMonomial(n, {d, n - d, d}), {0, 1, 2}, {2, 1, 0}};
      const auto r2 = equivalent_mod_In(n, rev);
      out.require(r2.equivalent && replays(n, rev, r2),
                  "identity (2) at n=" + std::to_string(n) + ", d=" + std::to_string(d));
    }
  }
  const auto swap = equivalent_mod_In(2, {GradedMonomial(2, {1, 1}), {0, 1}, {1, 0}});
  out.require(!swap.equivalent && !swap.witness, "n=2 degree-(1,1) swap");

  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 2000; ++iter) {
    const int n = std::uniform_int_distribution<int>(1, 6)(rng);
    const auto len = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    std::vector<int> d(len);
    for (auto& v : d) v = std::uniform_int_distribution<int>(0, n - 1)(rng);
    Permutation sigma = identity_permutation(len), tau = identity_permutation(len);
    std::ranges::shuffle(sigma, rng);
    std::ranges::shuffle(tau, rng);
    const LabeledMonomialPair pair{GradedMonomial(n, d), sigma, tau};
    const auto r = equivalent_mod_In(n, pair);
    if (r.equivalent) out.require(replays(n, pair, r), "witness replay for random pair");
  }
  return out;
}

struct Criterion {
  int number;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "golden identity verdicts", 1, golden_examples},
      {2, "BT(n-1,1) criterion matches the decision procedure", 5, criterion_equivalence},
      {3, "no short identities in BT(n-1,1)", 5, short_monomials},
      {4, "collapse respects the 2n-2 bound and derives the original", 60, reduction_bound_check},
      {5, "BT(2,2) identities follow from degree <= 3", 120, bt22_conjecture},
      {6, "BT(n-1,1) basis properties", 120, basis_theorems},
      {7, "support, generic and numeric verdicts coincide", 30, oracle_cross_validation},
      {8, "fall calculus properties", 30, fall_calculus},
      {9, "equivalence modulo I_n", 10, equivalence_checks},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && secs >= c.limit_seconds) {
      out.ok = false;
      out.detail = "time limit " + std::to_string(c.limit_seconds) + " s exceeded";
    }
    if (!out.ok) ++failures;
    std::printf("criterion %d: %s (%.3f s) %s%s%s\n", c.number, out.ok ? "PASS" : "FAIL", secs, c.name,
                out.ok ? "" : ": ", out.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
