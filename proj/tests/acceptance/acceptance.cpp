// Runs every acceptance criterion once, prints one PASS/FAIL line per
// criterion, and exits nonzero if any criterion fails or overruns its limit.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lhl/colored.hpp"
#include "lhl/inversion.hpp"
#include "lhl/order_polytope.hpp"
#include "lhl/permutation.hpp"
#include "lhl/poset.hpp"
#include "lhl/properties.hpp"
#include "lhl/roots.hpp"
#include "lhl/simplex.hpp"
#include "lhl/smirnoff.hpp"
#include "lhl/triangulation.hpp"
#include "oracles.hpp"

namespace {

using namespace lhl;

struct Outcome {
  bool passed = true;
  std::string detail;

  // Records the first failure only; later ones are counted.
  void require(bool ok, const std::function<std::string()>& what) {
    if (ok) return;
    if (passed) detail = what();
    passed = false;
    ++failures;
  }
  int failures = 0;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> body;
};

std::string show(const IntPolynomial& p) { return to_string(p); }

// Every s with the given length and entries in [1, max_entry].
void each_s(std::size_t n, std::int64_t max_entry, const std::function<void(const SSequence&)>& f) {
  std::vector<std::int64_t> s(n, 1);
  while (true) {
    f(SSequence(s));
    std::size_t i = n;
    while (true) {
      if (i == 0) return;
      --i;
      if (++s[i] <= max_entry) break;
      s[i] = 1;
    }
  }
}

// The 500-sequence corpus shared by criteria 5 and 6.
const std::vector<SSequence>& random_corpus() {
  static const std::vector<SSequence> corpus = [] {
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<int> len(1, 6);
    std::uniform_int_distribution<std::int64_t> entry(1, 6);
    std::vector<SSequence> out;
    for (int k = 0; k < 500; ++k) {
      std::vector<std::int64_t> s(static_cast<std::size_t>(len(rng)));
      for (auto& x : s) x = entry(rng);
      out.emplace_back(std::move(s));
    }
    return out;
  }();
  return corpus;
}

// Non-isomorphic posets on 1..4 elements, 20 random s (entries <= 3) each.
const std::vector<OrderPolytope>& order_corpus() {
  static const std::vector<OrderPolytope> corpus = [] {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> entry(1, 3);
    std::vector<OrderPolytope> out;
    for (std::size_t n = 1; n <= 4; ++n) {
      for (const Poset& p : nonisomorphic_posets(n)) {
        for (int k = 0; k < 20; ++k) {
          std::vector<std::int64_t> s(n);
          for (auto& x : s) x = entry(rng);
          out.emplace_back(p, SSequence(std::move(s)));
        }
      }
    }
    return out;
  }();
  return corpus;
}

std::string describe(const OrderPolytope& o) {
  std::string covers;
  for (const auto& [a, b] : o.poset().covers()) covers += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  return "n=" + std::to_string(o.dimension()) + " covers=" + covers + " s=" + o.s().to_string();
}

IntPolynomial restricted(const std::vector<std::int64_t>& s) {
  return s.empty() ? IntPolynomial() : s_derangement_enum(SSequence(s));
}

Outcome criterion_1() {
  Outcome o;
  for (std::size_t n = 2; n <= 7; ++n) {
    const IntPolynomial lh = s_derangement_recursive(derangement_bound(n));
    const IntPolynomial brute(oracle::derangement_bruteforce(static_cast<unsigned>(n)));
    o.require(lh == brute, [&] { return "n=" + std::to_string(n) + ": " + show(lh) + " vs " + show(brute); });
  }
  return o;
}

Outcome criterion_2() {
  Outcome o;
  const InversionSequence e({1, 0, 3, 2}, derangement_bound(5));
  const Permutation p = inversion_to_derangement(e);
  o.require(p.to_string() == "34521", [&] { return "got " + p.to_string(); });
  o.require(p.cycles() == std::vector<std::vector<int>>{{1, 3, 5}, {2, 4}}, [] { return "wrong cycles"; });
  o.require(derangement_to_inversion(p) == e, [] { return "inverse mismatch"; });
  return o;
}

Outcome criterion_3() {
  Outcome o;
  const auto sigma = ColoredPermutation::parse("2^2 1^1 3^0", 3);
  const auto tau = insert_bad(sigma, {1, 3, 4}, 6);
  o.require(tau.to_string() == "1^0 5^2 2^1 3^1 4^1 6^0", [&] { return "got " + tau.to_string(); });
  return o;
}

Outcome criterion_4() {
  Outcome o;
  for (std::size_t n = 1; n <= 5; ++n) {
    each_s(n, 6, [&](const SSequence& s) {
      const IntPolynomial open = local_hstar(lecture_hall_simplex(s));
      const IntPolynomial asc = s_derangement_enum(s, Statistic::Ascent);
      const IntPolynomial des = s_derangement_enum(s, Statistic::Descent);
      o.require(open == asc && asc == des, [&] {
        return "s=" + s.to_string() + " open=" + show(open) + " asc=" + show(asc) + " des=" + show(des);
      });
    });
  }
  return o;
}

Outcome criterion_5() {
  Outcome o;
  for (const SSequence& s : random_corpus()) {
    const IntPolynomial rec = s_derangement_recursive(s);
    const IntPolynomial en = s_derangement_enum(s);
    o.require(rec == en, [&] { return "s=" + s.to_string() + " rec=" + show(rec) + " enum=" + show(en); });
  }
  return o;
}

Outcome criterion_6() {
  Outcome o;
  for (const SSequence& s : random_corpus()) {
    const IntPolynomial d = s_derangement_recursive(s);
    const std::size_t deg = s.size() + 1;
    const bool symmetric = is_symmetric(d, deg);
    o.require(is_real_rooted(d), [&] { return "not real-rooted: s=" + s.to_string(); });
    o.require(symmetric, [&] { return "not symmetric: s=" + s.to_string(); });
    o.require(is_unimodal(d), [&] { return "not unimodal: s=" + s.to_string(); });
    o.require(is_log_concave(d), [&] { return "not log-concave: s=" + s.to_string(); });
    o.require(symmetric && gamma_vector(d, deg).is_nonnegative(), [&] { return "gamma: s=" + s.to_string(); });
  }
  return o;
}

Outcome criterion_7() {
  Outcome o;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int r = 1; r <= 4; ++r) {
      const IntPolynomial sw = smirnoff_descent_poly(n + 1, r);
      const IntPolynomial d = s_derangement_enum(SSequence(std::vector<std::int64_t>(n, r)));
      o.require(sw == d, [&] {
        return "n=" + std::to_string(n) + " r=" + std::to_string(r) + ": " + show(sw) + " vs " + show(d);
      });
    }
  }
  o.require(smirnoff_descent_poly(3, 2).is_zero(), [] { return "r=2, n=2 should be empty"; });
  return o;
}

Outcome criterion_8() {
  Outcome o;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int r = 1; r <= 3; ++r) {
      const std::string tag = "n=" + std::to_string(n) + " r=" + std::to_string(r);
      const IntPolynomial d = colored_derangement_poly(n, r, 100'000);
      const IntPolynomial a = colored_eulerian(n, r, 100'000);
      o.require(colored_derangement_by_inclusion_exclusion(n, r, 100'000) == d, [&] { return tag + " formula"; });
      o.require(a == s_eulerian(colored_bound(n, r)), [&] { return tag + " eulerian"; });
      std::vector<std::int64_t> tail;
      for (std::size_t i = 2; i <= n; ++i) tail.push_back(static_cast<std::int64_t>(i) * r);
      const IntPolynomial d_tail = restricted(tail);
      const IntPolynomial d_full = s_derangement_enum(colored_bound(n, r));
      o.require(d == d_tail + d_full, [&] { return tag + " sum " + show(d); });
      const SymmetricDecomposition parts = symmetric_decomposition(d, n);
      o.require(parts.a == d_tail && parts.b.shifted(1) == d_full, [&] { return tag + " decomposition"; });
    }
  }
  return o;
}

Outcome criterion_9() {
  Outcome o;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int r = 1; r <= 3; ++r) {
      const SymmetricDecomposition parts = symmetric_decomposition(colored_derangement_poly(n, r, 100'000), n);
      o.require(is_real_rooted(parts.a) && is_real_rooted(parts.b), [&] {
        return "n=" + std::to_string(n) + " r=" + std::to_string(r) + " a=" + show(parts.a) + " b=" + show(parts.b);
      });
    }
  }
  return o;
}

Outcome criterion_10() {
  Outcome o;
  for (std::size_t n = 1; n <= 5; ++n) {
    each_s(n, 6, [&](const SSequence& s) {
      const LatticeSimplex t = lecture_hall_simplex(s);
      for (std::uint32_t mask = 0; mask < (1u << (n + 1)); ++mask) {
        if (std::popcount(mask) < 2) continue;
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i <= n; ++i) {
          if (mask & (1u << i)) idx.push_back(i);
        }
        // The gcd sequence is recomputed here rather than taken from face_mu.
        std::vector<std::int64_t> mu;
        for (std::size_t j = 1; j < idx.size(); ++j) {
          std::int64_t g = 0;
          for (std::size_t k = idx[j - 1] + 1; k <= idx[j]; ++k) g = std::gcd(g, s(k));
          mu.push_back(g);
        }
        const IntPolynomial direct = local_hstar(face(t, idx));
        const IntPolynomial formula = s_derangement_enum(SSequence(mu));
        o.require(direct == formula, [&] {
          return "s=" + s.to_string() + " mask=" + std::to_string(mask) + " direct=" + show(direct) +
                 " formula=" + show(formula);
        });
      }
    });
  }
  return o;
}

Outcome criterion_11() {
  Outcome o;
  for (const OrderPolytope& op : order_corpus()) {
    const IntPolynomial bm = betke_mcmullen_hstar(op);
    const IntPolynomial eh = ehrhart_hstar(op);
    o.require(bm == eh, [&] { return describe(op) + " bm=" + show(bm) + " ehrhart=" + show(eh); });
  }
  return o;
}

Outcome criterion_12() {
  Outcome o;
  const OrderPolytope vee(Poset(3, {{1, 3}, {2, 3}}), SSequence({1, 1, 2}));
  const IntPolynomial h = ehrhart_hstar(vee);
  o.require(h == IntPolynomial{1, 2, 1} && is_symmetric(h, 2) && is_unimodal(h), [&] { return "h*=" + show(h); });
  const std::vector<std::pair<Poset, std::vector<std::int64_t>>> listed = {
      {Poset::antichain(2), {1, 2}}, {Poset::antichain(2), {2, 1}}, {Poset::chain(2), {1, 4}},
      {Poset::chain(2), {4, 1}},     {Poset::chain(2), {2, 2}}};
  for (const auto& [q, mu] : listed) {
    const OrderPolytope oq(q, SSequence(mu));
    const IntPolynomial hq = ehrhart_hstar(oq);
    o.require(hq == IntPolynomial{1, 3} && hq.evaluate(BigInt(1)) == 4,
              [&] { return describe(oq) + " h*=" + show(hq); });
  }
  return o;
}

Outcome criterion_13() {
  Outcome o;
  int ranked = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const Poset& p : naturally_labeled_posets(n)) {
      if (!p.is_ranked()) continue;
      ++ranked;
      const OrderPolytope op(p, rank_sequence(p));
      const IntPolynomial h = ehrhart_hstar(op);
      o.require(is_symmetric(h, n - 1), [&] { return describe(op) + " h*=" + show(h); });
      if (p.minimal_elements().size() == 1) {
        o.require(is_unimodal(h), [&] { return describe(op) + " not unimodal h*=" + show(h); });
      }
    }
  }
  o.require(ranked > 0, [] { return "no ranked posets found"; });
  return o;
}

Outcome criterion_14() {
  Outcome o;
  for (const OrderPolytope& op : order_corpus()) {
    const BoxUnimodalityReport report = box_unimodality_report(op);
    o.require(report.passed(), [&] { return describe(op); });
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "derangement polynomial equals brute force, n = 2..7", 1, criterion_1},
      {2, "bijection example 34521 = (1,3,5)(2,4)", 1, criterion_2},
      {3, "colored bijection example", 1, criterion_3},
      {4, "open parallelepiped heights = restricted asc = restricted des, n <= 5, entries <= 6", 30, criterion_4},
      {5, "recursion agrees with enumeration on 500 random s", 30, criterion_5},
      {6, "real-rooted, symmetric, unimodal, log-concave, gamma-nonnegative on that corpus", 60, criterion_6},
      {7, "Smirnoff descent polynomial equals constant-s derangement polynomial", 60, criterion_7},
      {8, "colored derangement formula, eulerian, sum, decomposition; n <= 5, r <= 3", 60, criterion_8},
      {9, "both decomposition parts real-rooted", 60, criterion_9},
      {10, "face local h* follows the gcd formula, n <= 5, entries <= 6", 60, criterion_10},
      {11, "Betke-McMullen equals Ehrhart on posets <= 4 with 20 random s", 120, criterion_11},
      {12, "order polytope reflexivity examples", 1, criterion_12},
      {13, "ranked posets <= 5 with s = rank + 1: symmetric, unique minimum unimodal", 60, criterion_13},
      {14, "box unimodality report passes on the criterion 11 corpus", 120, criterion_14},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.body();
    } catch (const std::exception& e) {
      outcome.passed = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= c.limit_seconds;
    const bool ok = outcome.passed && in_time;
    failed += !ok;
    std::printf("criterion %2d %s  %.3fs / %.0fs  %s", c.id, ok ? "PASS" : "FAIL", seconds, c.limit_seconds,
                c.name.c_str());
    if (!outcome.passed) std::printf("  [%d failing cases; first: %s]", outcome.failures, outcome.detail.c_str());
    if (!in_time) std::printf("  [over time limit]");
    std::printf("\n");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
