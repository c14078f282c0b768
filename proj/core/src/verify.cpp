#include "lhl/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "lhl/colored.hpp"
#include "lhl/error.hpp"
#include "lhl/inversion.hpp"
#include "lhl/order_polytope.hpp"
#include "lhl/permutation.hpp"
#include "lhl/properties.hpp"
#include "lhl/roots.hpp"
#include "lhl/smirnoff.hpp"
#include "lhl/triangulation.hpp"

namespace lhl {

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

void VerificationReport::sort_checks() {
  std::stable_sort(checks.begin(), checks.end(),
                   [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
}

Json to_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back(Json{{"id", c.id},
                          {"parameters", c.parameters},
                          {"expected", c.expected},
                          {"actual", c.actual},
                          {"passed", c.passed}});
  }
  return Json{{"suite", report.suite},
              {"passed", report.passed()},
              {"duration_ms", report.duration_ms},
              {"checks", std::move(checks)}};
}

VerificationReport report_from_json(const Json& value) {
  VerificationReport report;
  report.suite = value.at("suite").get<std::string>();
  report.duration_ms = value.at("duration_ms").get<std::int64_t>();
  for (const auto& c : value.at("checks")) {
    report.checks.push_back(CheckResult{c.at("id").get<std::string>(), c.at("parameters").get<std::string>(),
                                        c.at("expected").get<std::string>(), c.at("actual").get<std::string>(),
                                        c.at("passed").get<bool>()});
  }
  return report;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string emit_table(const VerificationReport& report, TableFormat format) {
  if (format == TableFormat::Json) return to_json(report).dump(2) + "\n";
  std::string out = "suite,id,parameters,expected,actual,passed\n";
  for (const auto& c : report.checks) {
    out += csv_field(report.suite) + ',' + csv_field(c.id) + ',' + csv_field(c.parameters) + ',' +
           csv_field(c.expected) + ',' + csv_field(c.actual) + ',' + (c.passed ? "true" : "false") + '\n';
  }
  return out;
}

namespace {

std::string show(const IntPolynomial& p) { return to_json(p).dump(); }

std::string show(const std::set<int>& s) {
  std::string out = "{";
  for (const int x : s) out += (out.size() > 1 ? "," : "") + std::to_string(x);
  return out + "}";
}

// Aggregates many cases into one check: passes iff every case agrees, and
// remembers the first disagreement.
class Tally {
 public:
  void record(bool ok, const std::function<std::string()>& describe) {
    ++cases_;
    if (!ok && failure_.empty()) failure_ = describe();
    failed_ += ok ? 0 : 1;
  }
  CheckResult result(std::string id, std::string parameters) const {
    const std::string expected = "all " + std::to_string(cases_) + " cases hold";
    const std::string actual = failed_ == 0 ? expected
                                            : std::to_string(failed_) + " of " + std::to_string(cases_) +
                                                  " failed; first: " + failure_;
    return CheckResult{std::move(id), std::move(parameters), expected, actual, failed_ == 0};
  }

 private:
  std::int64_t cases_ = 0;
  std::int64_t failed_ = 0;
  std::string failure_;
};

CheckResult compare(std::string id, std::string parameters, const std::string& expected, const std::string& actual) {
  return CheckResult{std::move(id), std::move(parameters), expected, actual, expected == actual};
}

int pick(int value, int fallback) { return value > 0 ? value : fallback; }

// Every s with n entries in [1, max_entry], in lexicographic order.
void for_each_s(int n, int max_entry, const std::function<void(const SSequence&)>& visit) {
  std::vector<std::int64_t> s(static_cast<std::size_t>(n), 1);
  while (true) {
    visit(SSequence(s));
    int i = n - 1;
    while (i >= 0 && ++s[static_cast<std::size_t>(i)] > max_entry) {
      s[static_cast<std::size_t>(i)] = 1;
      --i;
    }
    if (i < 0) return;
  }
}

SSequence random_s(std::mt19937_64& rng, int max_n, int max_entry) {
  std::uniform_int_distribution<int> len(1, max_n);
  std::uniform_int_distribution<std::int64_t> entry(1, max_entry);
  std::vector<std::int64_t> s(static_cast<std::size_t>(len(rng)));
  for (auto& x : s) x = entry(rng);
  return SSequence(std::move(s));
}

std::string format_cycles(const Permutation& p) {
  std::string out;
  for (const auto& c : p.cycles()) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i]);
    out += ')';
  }
  return out;
}

using Checks = std::vector<CheckResult>;

void suite_derangement_bijection(const VerifyOptions& o, Checks& out) {
  const int max_n = pick(o.max_n, 6);
  {
    const InversionSequence e({1, 0, 3, 2}, derangement_bound(5));
    const Permutation p = inversion_to_derangement(e);
    out.push_back(compare("derangement-bijection/example", "padded e=(0,1,0,3,2,0)", "34521 (1,3,5)(2,4)",
                          p.to_string() + " " + format_cycles(p)));
  }
  for (int n = 2; n <= max_n; ++n) {
    const std::string params = "n=" + std::to_string(n);
    const SSequence s = derangement_bound(static_cast<std::size_t>(n));
    const IntPolynomial brute = derangement_poly(static_cast<std::size_t>(n), std::max(max_n, 9));
    out.push_back(compare("derangement-bijection/poly/n=" + std::to_string(n), params, show(brute),
                          show(s_derangement_enum(s))));
    Tally tally;
    std::set<Permutation> image;
    for (const auto& e : enumerate_restricted(s)) {
      const Permutation p = inversion_to_derangement(e);
      image.insert(p);
      const bool ok = is_derangement(p) && excedance_count(p) == descent_count(e.entries(), s) &&
                      derangement_to_inversion(p) == e;
      tally.record(ok, [&] { return "image " + p.to_string(); });
    }
    tally.record(BigInt(static_cast<long>(image.size())) == brute.evaluate(BigInt(1)),
                 [&] { return "image has " + std::to_string(image.size()) + " derangements"; });
    out.push_back(tally.result("derangement-bijection/roundtrip/n=" + std::to_string(n), params));
  }
}

void suite_box_polynomial(const VerifyOptions& o, Checks& out) {
  const int max_n = pick(o.max_n, 4);
  const int max_entry = pick(o.max_entry, 6);
  EnumerationOptions enumeration;
  enumeration.max_points = o.max_points;
  for (int n = 1; n <= max_n; ++n) {
    Tally local, global, rem;
    for_each_s(n, max_entry, [&](const SSequence& s) {
      if (s.product() > o.max_points) return;
      const LatticeSimplex simplex = lecture_hall_simplex(s);
      const IntPolynomial l = local_hstar(simplex, enumeration);
      const IntPolynomial asc = s_derangement_enum(s, Statistic::Ascent);
      const IntPolynomial des = s_derangement_enum(s, Statistic::Descent);
      local.record(l == asc && asc == des, [&] {
        return "s=" + s.to_string() + " open=" + show(l) + " asc=" + show(asc) + " des=" + show(des);
      });
      const IntPolynomial h = hstar(simplex, enumeration);
      const IntPolynomial e_asc = s_eulerian(s, Statistic::Ascent);
      const IntPolynomial e_des = s_eulerian(s, Statistic::Descent);
      global.record(h == e_asc && e_asc == e_des, [&] { return "s=" + s.to_string() + " h*=" + show(h); });
      // REM is a height-preserving bijection onto I_n^s, and open points land in the restricted set.
      std::set<std::vector<std::int64_t>> seen;
      bool ok = true;
      for (const auto& p : half_open_points(simplex, enumeration)) {
        const InversionSequence e = rem_map(p, s);
        ok = ok && seen.insert(e.entries()).second && p.height() == descent_count(e.entries(), s) &&
             p.is_open() == is_restricted(e.entries(), s);
      }
      ok = ok && BigInt(static_cast<long>(seen.size())) == s.product();
      rem.record(ok, [&] { return "s=" + s.to_string(); });
    });
    const std::string params = "n=" + std::to_string(n) + ", entries<=" + std::to_string(max_entry);
    out.push_back(local.result("box-polynomial/local/n=" + std::to_string(n), params));
    out.push_back(global.result("box-polynomial/eulerian/n=" + std::to_string(n), params));
    out.push_back(rem.result("box-polynomial/rem/n=" + std::to_string(n), params));
  }
}

void suite_recursion(const VerifyOptions& o, Checks& out) {
  const int max_n = pick(o.max_n, 6);
  const int max_entry = pick(o.max_entry, 6);
  const int samples = pick(o.samples, 200);
  std::mt19937_64 rng(o.seed);
  Tally agree, rooted, symmetric, unimodal, concave, gamma, interlacing;
  for (int k = 0; k < samples; ++k) {
    const SSequence s = random_s(rng, max_n, max_entry);
    const IntPolynomial d = s_derangement_enum(s);
    const IntPolynomial r = s_derangement_recursive(s);
    const std::string tag = "s=" + s.to_string();
    agree.record(d == r, [&] { return tag + " enum=" + show(d) + " rec=" + show(r); });
    rooted.record(is_real_rooted(d), [&] { return tag; });
    symmetric.record(is_symmetric(d, s.size() + 1), [&] { return tag; });
    unimodal.record(is_unimodal(d), [&] { return tag; });
    concave.record(is_log_concave(d), [&] { return tag; });
    gamma.record(gamma_vector(d, s.size() + 1).is_nonnegative(), [&] { return tag; });
    const auto family = interlacing_certificate(s);
    bool ok = true;
    for (std::size_t i = 0; i < family.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < family.size() && ok; ++j) ok = interlaces(family[i], family[j]);
    }
    interlacing.record(ok, [&] { return tag; });
  }
  const std::string params = std::to_string(samples) + " random s, n<=" + std::to_string(max_n) +
                             ", entries<=" + std::to_string(max_entry) + ", seed=" + std::to_string(o.seed);
  out.push_back(agree.result("recursion/agrees-with-enumeration", params));
  out.push_back(rooted.result("recursion/real-rooted", params));
  out.push_back(symmetric.result("recursion/symmetric", params));
  out.push_back(unimodal.result("recursion/unimodal", params));
  out.push_back(concave.result("recursion/log-concave", params));
  out.push_back(gamma.result("recursion/gamma-nonnegative", params));
  out.push_back(interlacing.result("recursion/interlacing-family", params));
}

void suite_edgewise(const VerifyOptions& o, Checks& out) {
  const int max_n = pick(o.max_n, 5);
  const int max_r = pick(o.max_entry, 4);
  for (int n = 1; n <= max_n; ++n) {
    for (int r = 1; r <= max_r; ++r) {
      const SSequence s(std::vector<std::int64_t>(static_cast<std::size_t>(n), r));
      out.push_back(compare("edgewise/n=" + std::to_string(n) + ",r=" + std::to_string(r),
                            "n=" + std::to_string(n) + ", r=" + std::to_string(r), show(s_derangement_enum(s)),
                            show(smirnoff_descent_poly(static_cast<std::size_t>(n) + 1, r))));
    }
  }
}

IntPolynomial restricted_poly(std::vector<std::int64_t> s) {
  if (s.empty()) return IntPolynomial();
  return s_derangement_enum(SSequence(std::move(s)));
}

void suite_colored(const VerifyOptions& o, Checks& out) {
  const int max_n = pick(o.max_n, 4);
  const int max_r = pick(o.max_entry, 3);
  {
    const auto sigma = ColoredPermutation::parse("2^2 1^1 3^0", 3);
    out.push_back(compare("colored/example-insert", "n=6, r=3, T={1,3,4}, sigma=2^2 1^1 3^0",
                          "1^0 5^2 2^1 3^1 4^1 6^0", insert_bad(sigma, {1, 3, 4}, 6).to_string()));
    const auto tau = ColoredPermutation::parse("1^0 5^2 2^1 3^1 4^1 6^0", 3);
    const auto bad = bad_numbers(tau);
    const std::set<int> inserted{1, 3, 4};
    out.push_back(compare("colored/example-bad", "1^0 5^2 2^1 3^1 4^1 6^0", "true",
                          std::includes(bad.begin(), bad.end(), inserted.begin(), inserted.end())
                              ? "true"
                              : "false: " + show(bad)));
  }
  for (int n = 1; n <= max_n; ++n) {
    for (int r = 1; r <= max_r; ++r) {
      const auto un = static_cast<std::size_t>(n);
      const std::string tag = "n=" + std::to_string(n) + ",r=" + std::to_string(r);
      const std::string params = "n=" + std::to_string(n) + ", r=" + std::to_string(r);
      const SSequence mu = colored_bound(un, r);
      std::vector<std::int64_t> s_entries;
      for (int i = 2; i <= n; ++i) s_entries.push_back(static_cast<std::int64_t>(i) * r);
      const IntPolynomial d_s = restricted_poly(s_entries);
      const IntPolynomial d_mu = s_derangement_enum(mu);
      const IntPolynomial d_nr = colored_derangement_poly(un, r);
      const IntPolynomial a_nr = colored_eulerian(un, r);

      out.push_back(compare("colored/eulerian/" + tag, params, show(s_eulerian(mu)), show(a_nr)));
      out.push_back(compare("colored/des-exc/" + tag, params, show(a_nr), show(colored_excedance_poly(un, r))));
      out.push_back(compare("colored/inclusion-exclusion/" + tag, params, show(d_nr),
                            show(colored_derangement_by_inclusion_exclusion(un, r))));
      out.push_back(compare("colored/derangement-sum/" + tag, params, show(d_nr), show(d_s + d_mu)));
      const SymmetricDecomposition dec = symmetric_decomposition(d_nr, un);
      out.push_back(compare("colored/decomposition/" + tag, params, show(d_s) + " " + show(d_mu),
                            show(dec.a) + " " + show(dec.b.shifted(1))));
      out.push_back(compare("colored/decomposition-real-rooted/" + tag, params, "true true",
                            std::string(is_real_rooted(dec.a) ? "true" : "false") + " " +
                                (is_real_rooted(dec.b) ? "true" : "false")));

      Tally psi;
      std::set<std::vector<std::int64_t>> image;
      std::vector<std::int64_t> no_bad(un + 2, 0);
      for_each_colored_permutation(un, r, [&](const ColoredPermutation& sigma) {
        const InversionSequence e = psi_map(sigma);
        image.insert(e.entries());
        const int des = colored_descent_count(sigma);
        psi.record(ascent_count(e.entries(), mu) == des && psi_inverse(e, r) == sigma,
                   [&] { return sigma.to_string(); });
        if (bad_numbers(sigma).empty()) ++no_bad[static_cast<std::size_t>(des)];
      });
      psi.record(image.size() == static_cast<std::size_t>(mu.product().get_ui()), [] { return "not onto"; });
      out.push_back(psi.result("colored/psi/" + tag, params));
      out.push_back(compare("colored/bad-numbers/" + tag, params, show(d_s + d_mu), show(IntPolynomial::from_counts(no_bad))));

      // insert_bad is a descent-preserving bijection onto {sigma : T subset of bad(sigma)}.
      Tally insert;
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::set<int> t;
        for (int i = 0; i < n; ++i) {
          if (mask & (1u << i)) t.insert(i + 1);
        }
        const std::size_t m = un - t.size();
        std::set<std::vector<int>> targets;
        for_each_colored_permutation(m, r, [&](const ColoredPermutation& sigma) {
          const ColoredPermutation f = insert_bad(sigma, t, un);
          const auto bad = bad_numbers(f);
          std::vector<int> key = f.perm().values();
          key.insert(key.end(), f.colors().begin(), f.colors().end());
          targets.insert(key);
          insert.record(colored_descent_count(f) == colored_descent_count(sigma) &&
                            std::includes(bad.begin(), bad.end(), t.begin(), t.end()) && remove_bad(f, t) == sigma,
                        [&] { return "T=" + show(t) + " sigma=" + sigma.to_string(); });
        });
        std::size_t expected = 0;
        for_each_colored_permutation(un, r, [&](const ColoredPermutation& sigma) {
          const auto bad = bad_numbers(sigma);
          if (std::includes(bad.begin(), bad.end(), t.begin(), t.end())) ++expected;
        });
        insert.record(targets.size() == expected, [&] { return "T=" + show(t) + " not onto"; });
      }
      out.push_back(insert.result("colored/insert-bad/" + tag, params));
    }
  }
}

void suite_faces(const VerifyOptions& o, Checks& out) {
  const int max_n = pick(o.max_n, 4);
  const int max_entry = pick(o.max_entry, 4);
  EnumerationOptions enumeration;
  enumeration.max_points = o.max_points;
  for (int n = 1; n <= max_n; ++n) {
    Tally formula, shape;
    for_each_s(n, max_entry, [&](const SSequence& s) {
      if (s.product() > o.max_points) return;
      const LatticeSimplex simplex = lecture_hall_simplex(s);
      for (std::uint32_t mask = 0; mask < (1u << (n + 1)); ++mask) {
        if (std::popcount(mask) < 2) continue;
        std::vector<std::size_t> idx;
        for (int i = 0; i <= n; ++i) {
          if (mask & (1u << i)) idx.push_back(static_cast<std::size_t>(i));
        }
        const IntPolynomial direct = local_hstar(face(simplex, idx), enumeration);
        const SSequence mu = face_mu(s, idx);
        const IntPolynomial predicted = s_derangement_enum(mu);
        formula.record(direct == predicted, [&] {
          return "s=" + s.to_string() + " mu=" + mu.to_string() + " direct=" + show(direct) + " formula=" + show(predicted);
        });
        shape.record(is_real_rooted(direct) && is_unimodal(direct) && is_symmetric(direct, idx.size()),
                     [&] { return "s=" + s.to_string() + " face " + show(direct); });
      }
    });
    const std::string params = "n=" + std::to_string(n) + ", entries<=" + std::to_string(max_entry);
    out.push_back(formula.result("faces/gcd-formula/n=" + std::to_string(n), params));
    out.push_back(shape.result("faces/real-rooted-unimodal/n=" + std::to_string(n), params));
  }
}

// The (poset, s) corpus shared by betke-mcmullen and box-unimodal.
std::vector<OrderPolytope> order_corpus(const VerifyOptions& o, int default_samples) {
  const int max_n = pick(o.max_n, 4);
  const int max_entry = pick(o.max_entry, 3);
  const int samples = pick(o.samples, default_samples);
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::int64_t> entry(1, max_entry);
  std::vector<OrderPolytope> corpus;
  for (int n = 1; n <= max_n; ++n) {
    for (const Poset& p : nonisomorphic_posets(static_cast<std::size_t>(n))) {
      for (int k = 0; k < samples; ++k) {
        std::vector<std::int64_t> s(static_cast<std::size_t>(n));
        for (auto& x : s) x = entry(rng);
        corpus.emplace_back(p, SSequence(std::move(s)));
      }
    }
  }
  return corpus;
}

std::string describe(const OrderPolytope& o) { return to_json(o.poset()).dump() + " s=" + o.s().to_string(); }

void suite_betke_mcmullen(const VerifyOptions& o, Checks& out) {
  std::map<std::size_t, Tally> equal, volume, facets, dilates;
  EnumerationOptions enumeration;
  enumeration.max_points = o.max_points;
  for (const OrderPolytope& op : order_corpus(o, 5)) {
    const std::size_t n = op.dimension();
    const IntPolynomial ehrhart = ehrhart_hstar(op);
    const IntPolynomial bm = betke_mcmullen_hstar(op, enumeration);
    equal[n].record(ehrhart == bm, [&] { return describe(op) + " ehrhart=" + show(ehrhart) + " bm=" + show(bm); });
    const std::size_t extensions = op.poset().linear_extension_count();
    volume[n].record(ehrhart.evaluate(BigInt(1)) == BigInt(static_cast<long>(extensions)) * op.s().product(),
                     [&] { return describe(op); });
    facets[n].record(canonical_triangulation(op).complex.facets().size() == extensions,
                     [&] { return describe(op); });
    bool same = true;
    for (std::int64_t t = 0; t <= 2; ++t) same = same && count_dilate_points(op, t) == count_dilate_points_naive(op, t);
    dilates[n].record(same, [&] { return describe(op); });
  }
  for (auto& [n, tally] : equal) {
    const std::string params = "nonisomorphic posets on " + std::to_string(n) + " elements";
    out.push_back(tally.result("betke-mcmullen/equals-ehrhart/n=" + std::to_string(n), params));
    out.push_back(volume[n].result("betke-mcmullen/volume/n=" + std::to_string(n), params));
    out.push_back(facets[n].result("betke-mcmullen/facets/n=" + std::to_string(n), params));
    out.push_back(dilates[n].result("betke-mcmullen/dilate-oracle/n=" + std::to_string(n), params));
  }
}

void suite_order_reflexive(const VerifyOptions&, Checks& out) {
  const Poset p(3, {{1, 3}, {2, 3}});
  const SSequence s = rank_sequence(p);
  const OrderPolytope op(p, s);
  const IntPolynomial h = ehrhart_hstar(op);
  out.push_back(compare("order-reflexive/rank-sequence", "covers (1,3),(2,3)", "1,1,2", s.to_string()));
  out.push_back(compare("order-reflexive/hstar", "covers (1,3),(2,3), s=1,1,2", "[1,2,1]", show(h)));
  out.push_back(compare("order-reflexive/betke-mcmullen", "covers (1,3),(2,3), s=1,1,2", "[1,2,1]",
                        show(betke_mcmullen_hstar(op))));
  out.push_back(compare("order-reflexive/shape", "covers (1,3),(2,3), s=1,1,2", "symmetric degree 2, unimodal",
                        std::string(is_reflexive(h, 2) && h.degree() == 2 ? "symmetric degree 2" : "not symmetric") +
                            (is_unimodal(h) ? ", unimodal" : ", not unimodal")));
  const Poset antichain = Poset::antichain(2);
  const Poset chain = Poset::chain(2);
  const std::vector<std::pair<const Poset*, std::vector<std::int64_t>>> candidates = {
      {&antichain, {1, 2}}, {&antichain, {2, 1}}, {&chain, {1, 4}}, {&chain, {4, 1}}, {&chain, {2, 2}}};
  for (const auto& [q, mu] : candidates) {
    const OrderPolytope oq(*q, SSequence(mu));
    const IntPolynomial hq = ehrhart_hstar(oq);
    const std::string tag = (q == &chain ? "chain" : "antichain") + std::string(" mu=") + oq.s().to_string();
    out.push_back(compare("order-reflexive/candidate/" + tag, tag, "[1,3] volume 4 not reflexive",
                          show(hq) + " volume " + hq.evaluate(BigInt(1)).get_str() +
                              (is_reflexive(hq, 2) ? " reflexive" : " not reflexive")));
  }
}

void suite_branden_leander(const VerifyOptions& o, Checks& out) {
  const int max_n = pick(o.max_n, 5);
  for (int n = 1; n <= max_n; ++n) {
    Tally symmetric, unimodal, deletion;
    for (const Poset& p : nonisomorphic_posets(static_cast<std::size_t>(n))) {
      if (!p.is_ranked()) continue;
      const SSequence s = rank_sequence(p);
      const OrderPolytope op(p, s);
      const IntPolynomial h = ehrhart_hstar(op);
      const std::string tag = to_json(p).dump();
      symmetric.record(h.degree() == n - 1 && is_symmetric(h, static_cast<std::size_t>(n - 1)),
                       [&] { return tag + " h*=" + show(h); });
      if (p.minimal_elements().size() != 1) continue;
      unimodal.record(is_unimodal(h), [&] { return tag + " h*=" + show(h); });
      if (n == 1) continue;
      // Drop the unique minimum and keep the remaining entries of s.
      const int bottom = p.minimal_elements().front();
      std::vector<std::int64_t> rest;
      for (int i = 1; i <= n; ++i) {
        if (i != bottom) rest.push_back(s(static_cast<std::size_t>(i)));
      }
      const OrderPolytope reduced(p.induced(p.full_mask() & ~(ElementMask{1} << (bottom - 1))), SSequence(rest));
      const IntPolynomial hr = ehrhart_hstar(reduced);
      deletion.record(hr == h, [&] { return tag + " h*=" + show(h) + " reduced=" + show(hr); });
    }
    const std::string params = "ranked posets on " + std::to_string(n) + " elements, s = rank + 1";
    out.push_back(symmetric.result("branden-leander/symmetric/n=" + std::to_string(n), params));
    out.push_back(unimodal.result("branden-leander/unique-minimum-unimodal/n=" + std::to_string(n), params));
    if (n > 1) out.push_back(deletion.result("branden-leander/minimum-deletion/n=" + std::to_string(n), params));
  }
}

void suite_box_unimodal(const VerifyOptions& o, Checks& out) {
  EnumerationOptions enumeration;
  enumeration.max_points = o.max_points;
  std::map<std::size_t, Tally> tallies;
  for (const OrderPolytope& op : order_corpus(o, 5)) {
    const BoxUnimodalityReport report = box_unimodality_report(op, enumeration);
    tallies[op.dimension()].record(report.passed(), [&] { return describe(op); });
  }
  for (auto& [n, tally] : tallies) {
    out.push_back(tally.result("box-unimodal/n=" + std::to_string(n),
                               "nonisomorphic posets on " + std::to_string(n) + " elements"));
  }
}

using SuiteFn = void (*)(const VerifyOptions&, Checks&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"derangement-bijection", suite_derangement_bijection},
      {"box-polynomial", suite_box_polynomial},
      {"recursion", suite_recursion},
      {"edgewise", suite_edgewise},
      {"colored", suite_colored},
      {"faces", suite_faces},
      {"betke-mcmullen", suite_betke_mcmullen},
      {"order-reflexive", suite_order_reflexive},
      {"branden-leander", suite_branden_leander},
      {"box-unimodal", suite_box_unimodal},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

VerificationReport run_suite(std::string_view name, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.suite = std::string(name);
  bool found = false;
  for (const auto& [suite, fn] : registry()) {
    if (name == "all" || name == suite) {
      fn(options, report.checks);
      found = true;
    }
  }
  if (!found) throw Error(ErrorKind::InvalidArgument, "unknown suite '" + std::string(name) + "'");
  report.sort_checks();
  report.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace lhl
