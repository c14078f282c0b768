#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lhl/colored.hpp"
#include "lhl/error.hpp"
#include "lhl/inversion.hpp"
#include "lhl/io.hpp"
#include "lhl/order_polytope.hpp"
#include "lhl/permutation.hpp"
#include "lhl/properties.hpp"
#include "lhl/roots.hpp"
#include "lhl/simplex.hpp"
#include "lhl/triangulation.hpp"
#include "lhl/verify.hpp"

namespace lhl::cli {

namespace {

// Thrown for flag combinations CLI11 cannot express on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<std::int64_t> env_int(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    const long long v = std::stoll(raw, &used);
    if (used != std::string(raw).size() || v <= 0) throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string(name) + " must be a positive integer");
  }
}

EnumerationOptions enumeration_options() {
  EnumerationOptions o;
  if (const auto cap = env_int("LHL_MAX_POINTS")) o.max_points = *cap;
  return o;
}

int permutation_cap() {
  if (const auto cap = env_int("LHL_MAX_N")) return static_cast<int>(*cap);
  return kDefaultMaxPermutationN;
}

Json properties(const IntPolynomial& p, std::size_t d) {
  const bool symmetric = is_symmetric(p, d);
  Json gamma = nullptr;
  if (symmetric) gamma = gamma_vector(p, d).is_nonnegative();
  return Json{{"symmetric", symmetric},
              {"unimodal", is_unimodal(p)},
              {"log_concave", is_log_concave(p)},
              {"real_rooted", is_real_rooted(p)},
              {"gamma_nonnegative", gamma}};
}

Json poly_document(const IntPolynomial& p, std::size_t d) {
  return Json{{"poly", to_json(p)}, {"degree_convention", d}, {"properties", properties(p, d)}};
}

IntPolynomial parse_polynomial(const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '[') {
    try {
      return polynomial_from_json(Json::parse(text));
    } catch (const Json::parse_error&) {
      throw UsageError("--poly is not a valid JSON array");
    }
  }
  std::vector<BigInt> coeffs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string item = text.substr(pos, comma - pos);
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    BigInt c;
    if (item.empty() || c.set_str(item, 10) != 0) throw UsageError("--poly expects integers like 1,4,1");
    coeffs.push_back(c);
    pos = comma + 1;
  }
  return IntPolynomial(std::move(coeffs));
}

LatticeSimplex simplex_from_flags(const std::string& s_text, const std::string& simplex_file) {
  if (s_text.empty() == simplex_file.empty()) throw UsageError("give exactly one of --s and --simplex");
  if (!s_text.empty()) return lecture_hall_simplex(SSequence::parse(s_text));
  return simplex_from_json(read_json_file(simplex_file));
}

OrderPolytope order_polytope_from_flags(const std::string& poset_file, const std::string& s_text) {
  Poset p = poset_from_json(read_json_file(poset_file));
  SSequence s = s_text.empty() ? rank_sequence(p) : SSequence::parse(s_text);
  return OrderPolytope(std::move(p), std::move(s));
}

void print(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact s-Eulerian, s-derangement and Ehrhart h* computations", "lhl"};
  app.require_subcommand(1);
  std::function<int()> action;

  // Shared flag storage.
  std::string eulerian_stat = "asc";
  std::string s_text, simplex_file, poset_file, method = "recursive", stat = "des", poly_text, props_text;
  std::string suite = "all", format = "json", kind = "derangement";
  std::size_t n = 0;
  int r = 1;
  std::optional<std::size_t> degree;
  VerifyOptions verify;

  auto* eulerian = app.add_subcommand("eulerian", "E_n^s, the ascent polynomial of all s-inversion sequences");
  eulerian->add_option("--s", s_text, "sequence such as 2,3,4")->required();
  eulerian->add_option("--stat", eulerian_stat, "asc or des")->check(CLI::IsMember({"asc", "des"}));
  eulerian->callback([&] {
    action = [&] {
      const SSequence s = SSequence::parse(s_text);
      const IntPolynomial p = s_eulerian(s, eulerian_stat == "asc" ? Statistic::Ascent : Statistic::Descent);
      print(out, poly_document(p, degree.value_or(s.size())));
      return kExitOk;
    };
  });
  eulerian->add_option("--degree", degree, "degree used for the symmetry checks");

  auto* derangement = app.add_subcommand("derangement", "d_n^s, the s-derangement polynomial");
  derangement->add_option("--s", s_text, "sequence such as 2,3,4")->required();
  derangement->add_option("--method", method, "recursive or enum")->check(CLI::IsMember({"recursive", "enum"}));
  derangement->add_option("--degree", degree, "degree used for the symmetry checks");
  derangement->callback([&] {
    action = [&] {
      const SSequence s = SSequence::parse(s_text);
      const IntPolynomial p = method == "enum" ? s_derangement_enum(s) : s_derangement_recursive(s);
      print(out, poly_document(p, degree.value_or(s.size() + 1)));
      return kExitOk;
    };
  });

  auto* classical = app.add_subcommand("classical", "brute-force d_n (or A_n) over the symmetric group");
  classical->alias("derangement-poly");
  classical->add_option("--n", n, "permutation size")->required();
  classical->add_option("--poly", kind, "derangement or eulerian")->check(CLI::IsMember({"derangement", "eulerian"}));
  classical->add_option("--degree", degree, "degree used for the symmetry checks");
  classical->callback([&] {
    action = [&] {
      const IntPolynomial p =
          kind == "eulerian" ? eulerian_poly(n, permutation_cap()) : derangement_poly(n, permutation_cap());
      const std::size_t d = kind == "eulerian" ? (n == 0 ? 0 : n - 1) : n;
      print(out, poly_document(p, degree.value_or(d)));
      return kExitOk;
    };
  });

  auto* colored = app.add_subcommand("colored", "colored permutation statistics over Z_r wr S_n");
  colored->add_option("--n", n, "permutation size")->required();
  colored->add_option("--r", r, "number of colors")->required()->check(CLI::PositiveNumber);
  colored->add_option("--stat", stat, "des (A_{n,r}), exc, or derangement (d_{n,r})")
      ->check(CLI::IsMember({"des", "exc", "derangement"}));
  colored->add_option("--degree", degree, "degree used for the symmetry checks");
  colored->callback([&] {
    action = [&] {
      IntPolynomial p;
      if (stat == "des") {
        p = colored_eulerian(n, r);
      } else if (stat == "exc") {
        p = colored_excedance_poly(n, r);
      } else {
        p = colored_derangement_poly(n, r);
      }
      print(out, poly_document(p, degree.value_or(n)));
      return kExitOk;
    };
  });

  auto* hstar_cmd = app.add_subcommand("hstar", "h* of a lattice simplex from its half-open parallelepiped");
  auto* local_cmd = app.add_subcommand("local-hstar", "local h* (box polynomial) of a lattice simplex");
  for (auto* cmd : {hstar_cmd, local_cmd}) {
    cmd->add_option("--s", s_text, "use the s-lecture hall simplex");
    cmd->add_option("--simplex", simplex_file, "JSON file with an array of integer vertices");
    cmd->add_option("--degree", degree, "degree used for the symmetry checks");
  }
  hstar_cmd->callback([&] {
    action = [&] {
      const LatticeSimplex simplex = simplex_from_flags(s_text, simplex_file);
      const IntPolynomial p = hstar(simplex, enumeration_options());
      Json doc = poly_document(p, degree.value_or(simplex.dimension()));
      doc["normalized_volume"] = to_json(simplex.normalized_volume());
      print(out, doc);
      return kExitOk;
    };
  });
  local_cmd->callback([&] {
    action = [&] {
      const LatticeSimplex simplex = simplex_from_flags(s_text, simplex_file);
      const IntPolynomial p = local_hstar(simplex, enumeration_options());
      print(out, poly_document(p, degree.value_or(simplex.dimension() + 1)));
      return kExitOk;
    };
  });

  auto* order_cmd = app.add_subcommand("order-hstar", "h* of O(P, s) from its Ehrhart counts");
  auto* bm_cmd = app.add_subcommand("verify-bm", "compare Betke-McMullen against direct Ehrhart counts");
  auto* box_cmd = app.add_subcommand("box-report", "local h* of every face of the s-canonical triangulation");
  for (auto* cmd : {order_cmd, bm_cmd, box_cmd}) {
    cmd->add_option("--poset", poset_file, R"(JSON file like {"n": 3, "covers": [[1,3],[2,3]]})")->required();
    cmd->add_option("--s", s_text, "sequence s; defaults to rank + 1 for ranked posets");
  }
  order_cmd->add_option("--degree", degree, "degree used for the symmetry checks");
  box_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  order_cmd->callback([&] {
    action = [&] {
      const OrderPolytope o = order_polytope_from_flags(poset_file, s_text);
      const IntPolynomial p = ehrhart_hstar(o);
      const std::size_t dim = o.dimension();
      Json doc = poly_document(p, degree.value_or(dim == 0 ? 0 : dim - 1));
      doc["s"] = o.s().to_string();
      print(out, doc);
      return kExitOk;
    };
  });
  bm_cmd->callback([&] {
    action = [&] {
      const OrderPolytope o = order_polytope_from_flags(poset_file, s_text);
      const IntPolynomial direct = ehrhart_hstar(o);
      const IntPolynomial bm = betke_mcmullen_hstar(o, enumeration_options());
      print(out, Json{{"s", o.s().to_string()},
                      {"ehrhart", to_json(direct)},
                      {"betke_mcmullen", to_json(bm)},
                      {"equal", direct == bm}});
      return direct == bm ? kExitOk : kExitCheckFailed;
    };
  });
  box_cmd->callback([&] {
    action = [&] {
      const OrderPolytope o = order_polytope_from_flags(poset_file, s_text);
      const BoxUnimodalityReport report = box_unimodality_report(o, enumeration_options());
      VerificationReport table;
      table.suite = "box-report";
      for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const auto& row = report.rows[i];
        std::string chain;
        for (const ElementMask f : row.chain) {
          std::string filter;
          for (std::size_t e = 0; e < o.dimension(); ++e) {
            if (f & (ElementMask{1} << e)) filter += (filter.empty() ? "" : " ") + std::to_string(e + 1);
          }
          chain += (chain.empty() ? "{" : " < {") + filter + "}";
        }
        char id[32];
        std::snprintf(id, sizeof id, "face/%05zu", i);
        table.checks.push_back(CheckResult{id, chain, "unimodal real-rooted",
                                           to_json(row.local).dump() + (row.unimodal ? " unimodal" : " not-unimodal") +
                                               (row.real_rooted ? " real-rooted" : " not-real-rooted"),
                                           row.unimodal && row.real_rooted});
      }
      out << emit_table(table, format == "csv" ? TableFormat::Csv : TableFormat::Json);
      return report.passed() ? kExitOk : kExitCheckFailed;
    };
  });

  auto* decompose = app.add_subcommand("decompose", "I_n-decomposition of the colored derangement polynomial");
  decompose->add_option("--n", n, "permutation size")->required()->check(CLI::PositiveNumber);
  decompose->add_option("--r", r, "number of colors")->required()->check(CLI::PositiveNumber);
  decompose->callback([&] {
    action = [&] {
      const IntPolynomial d = colored_derangement_poly(n, r);
      const SymmetricDecomposition parts = symmetric_decomposition(d, n);
      print(out, Json{{"poly", to_json(d)},
                      {"degree_convention", n},
                      {"a", to_json(parts.a)},
                      {"b", to_json(parts.b)},
                      {"a_real_rooted", is_real_rooted(parts.a)},
                      {"b_real_rooted", is_real_rooted(parts.b)}});
      return kExitOk;
    };
  });

  auto* gamma = app.add_subcommand("gamma", "gamma vector of a symmetric polynomial");
  gamma->add_option("--poly", poly_text, "coefficients, e.g. 0,1,7,1 or [0,1,7,1]")->required();
  gamma->add_option("--degree", degree, "symmetry degree d")->required();
  gamma->callback([&] {
    action = [&] {
      const GammaVector g = gamma_vector(parse_polynomial(poly_text), *degree);
      Json entries = Json::array();
      for (const auto& e : g.entries) entries.push_back(to_json(e));
      print(out, Json{{"gamma", entries}, {"degree_convention", g.degree}, {"nonnegative", g.is_nonnegative()}});
      return kExitOk;
    };
  });

  auto* check = app.add_subcommand("check", "test distributional properties of a polynomial");
  check->add_option("--poly", poly_text, "coefficients, e.g. 0,1,7,1 or [0,1,7,1]")->required();
  check->add_option("--degree", degree, "degree for symmetry and gamma (default: the polynomial's degree)");
  check->add_option("--props", props_text, "comma list of symmetric,unimodal,logconcave,realrooted,gamma")
      ->required();
  check->callback([&] {
    action = [&] {
      const IntPolynomial p = parse_polynomial(poly_text);
      const std::size_t d = degree.value_or(p.is_zero() ? 0 : static_cast<std::size_t>(p.degree()));
      Json results = Json::object();
      bool all = true;
      std::size_t pos = 0;
      while (pos <= props_text.size()) {
        const std::size_t comma = std::min(props_text.find(',', pos), props_text.size());
        const std::string prop = props_text.substr(pos, comma - pos);
        pos = comma + 1;
        bool value = false;
        if (prop == "symmetric") {
          value = is_symmetric(p, d);
        } else if (prop == "unimodal") {
          value = is_unimodal(p);
        } else if (prop == "logconcave") {
          value = is_log_concave(p);
        } else if (prop == "realrooted") {
          value = is_real_rooted(p);
        } else if (prop == "gamma") {
          value = is_symmetric(p, d) && gamma_vector(p, d).is_nonnegative();
        } else {
          throw UsageError("--props: unknown property '" + prop + "'");
        }
        results[prop] = value;
        all = all && value;
      }
      print(out, Json{{"poly", to_json(p)}, {"degree_convention", d}, {"properties", results}, {"all", all}});
      return all ? kExitOk : kExitCheckFailed;
    };
  });

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify_cmd->add_option("--suite", suite, "suite name or all")->check(CLI::IsMember(suites));
  verify_cmd->add_option("--max-n", verify.max_n, "largest n (suite default when omitted)")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-entry", verify.max_entry, "largest entry of s, or largest r")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--samples", verify.samples, "random samples per case")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", verify.seed, "seed for the random corpora");
  verify_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  verify_cmd->callback([&] {
    action = [&] {
      if (const auto cap = env_int("LHL_MAX_POINTS")) verify.max_points = *cap;
      const VerificationReport report = run_suite(suite, verify);
      out << emit_table(report, format == "csv" ? TableFormat::Csv : TableFormat::Json);
      return report.passed() ? kExitOk : kExitCheckFailed;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::Internal ? kExitCheckFailed : kExitUsage;
  }
}

}  // namespace lhl::cli
