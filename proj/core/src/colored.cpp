#include "lhl/colored.hpp"

#include <algorithm>
#include <charconv>
#include <utility>

#include "lhl/error.hpp"

namespace lhl {

ColoredPermutation::ColoredPermutation(Permutation perm, std::vector<int> colors, int modulus)
    : perm_(std::move(perm)), colors_(std::move(colors)), modulus_(modulus) {
  if (modulus_ < 1) throw Error(ErrorKind::InvalidArgument, "number of colors must be positive");
  if (colors_.size() != perm_.size()) {
    throw Error(ErrorKind::InvalidArgument, "one color per position is required");
  }
  for (const int c : colors_) {
    if (c < 0 || c >= modulus_) throw Error(ErrorKind::InvalidArgument, "color out of range");
  }
}

ColoredPermutation ColoredPermutation::parse(std::string_view text, int modulus) {
  std::vector<int> values;
  std::vector<int> colors;
  std::size_t pos = 0;
  auto read_int = [&](int& out) {
    const auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), out);
    if (ec != std::errc()) throw Error(ErrorKind::InvalidArgument, "bad colored permutation text");
    pos = static_cast<std::size_t>(end - text.data());
  };
  while (true) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos == text.size()) break;
    int v = 0;
    int c = 0;
    read_int(v);
    if (pos == text.size() || text[pos] != '^') {
      throw Error(ErrorKind::InvalidArgument, "expected value^color");
    }
    ++pos;
    read_int(c);
    values.push_back(v);
    colors.push_back(c);
  }
  return ColoredPermutation(Permutation(std::move(values)), std::move(colors), modulus);
}

std::string ColoredPermutation::to_string() const {
  std::string out;
  for (std::size_t i = 1; i <= size(); ++i) {
    if (i > 1) out += ' ';
    out += std::to_string(value(i)) + '^' + std::to_string(color(i));
  }
  return out;
}

int colored_descent_count(const ColoredPermutation& s) {
  const std::size_t n = s.size();
  int count = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    const int p = s.value(i);
    const int c = s.color(i);
    const int p_next = i == n ? static_cast<int>(n) + 1 : s.value(i + 1);
    const int c_next = i == n ? 0 : s.color(i + 1);
    if (c > c_next || (c == c_next && p > p_next)) ++count;
  }
  return count;
}

int colored_excedance_count(const ColoredPermutation& s) {
  int count = 0;
  for (std::size_t i = 1; i <= s.size(); ++i) {
    const int p = s.value(i);
    if (p > static_cast<int>(i) || (p == static_cast<int>(i) && s.color(i) > 0)) ++count;
  }
  return count;
}

bool is_colored_derangement(const ColoredPermutation& s) {
  for (std::size_t i = 1; i <= s.size(); ++i) {
    if (s.value(i) == static_cast<int>(i) && s.color(i) == 0) return false;
  }
  return true;
}

void check_colored_size(std::size_t n, int r, std::int64_t cap) {
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "number of colors must be positive");
  BigInt total = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    total *= static_cast<long>(k) * r;
    if (total > cap) {
      throw Error(ErrorKind::TooLarge, "r^n * n! exceeds the brute-force cap " + std::to_string(cap));
    }
  }
}

namespace {

template <typename Stat, typename Filter>
IntPolynomial colored_histogram(std::size_t n, int r, std::int64_t cap, Stat stat, Filter keep) {
  std::vector<std::int64_t> counts(n + 1, 0);
  for_each_colored_permutation(
      n, r,
      [&](const ColoredPermutation& s) {
        if (keep(s)) ++counts[static_cast<std::size_t>(stat(s))];
      },
      cap);
  return IntPolynomial::from_counts(counts);
}

}  // namespace

IntPolynomial colored_eulerian(std::size_t n, int r, std::int64_t cap) {
  return colored_histogram(n, r, cap, colored_descent_count, [](const auto&) { return true; });
}

IntPolynomial colored_excedance_poly(std::size_t n, int r, std::int64_t cap) {
  return colored_histogram(n, r, cap, colored_excedance_count, [](const auto&) { return true; });
}

IntPolynomial colored_derangement_poly(std::size_t n, int r, std::int64_t cap) {
  return colored_histogram(n, r, cap, colored_excedance_count, is_colored_derangement);
}

IntPolynomial colored_derangement_by_inclusion_exclusion(std::size_t n, int r, std::int64_t cap) {
  IntPolynomial total;
  BigInt binomial = 1;  // C(n, k)
  for (std::size_t k = 0; k <= n; ++k) {
    if (k > 0) binomial = binomial * static_cast<long>(n - k + 1) / static_cast<long>(k);
    const IntPolynomial a = k == 0 ? IntPolynomial{1} : colored_eulerian(k, r, cap);
    const BigInt sign = (n - k) % 2 == 0 ? 1 : -1;
    total += a * BigInt(sign * binomial);
  }
  return total;
}

SSequence colored_bound(std::size_t n, int r) {
  std::vector<std::int64_t> s;
  for (std::size_t i = 1; i <= n; ++i) s.push_back(static_cast<std::int64_t>(i) * r);
  return SSequence(std::move(s));
}

InversionSequence psi_map(const ColoredPermutation& s) {
  const std::size_t n = s.size();
  const std::vector<int> t = s.perm().lehmer_code();
  std::vector<std::int64_t> e(n);
  for (std::size_t j = 1; j <= n; ++j) {
    // e_j = j * c_{n-j+1} + t_{n-j+1}.
    e[j - 1] = static_cast<std::int64_t>(j) * s.color(n - j + 1) + t[n - j];
  }
  return InversionSequence(std::move(e), colored_bound(n, s.modulus()));
}

ColoredPermutation psi_inverse(const InversionSequence& e, int r) {
  const std::size_t n = e.size();
  if (e.bound() != colored_bound(n, r)) {
    throw Error(ErrorKind::InvalidArgument, "expected an inversion sequence under (r, 2r, ..., nr)");
  }
  std::vector<int> colors(n);
  std::vector<int> code(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const std::int64_t entry = e.entries()[n - i];
    const auto w = static_cast<std::int64_t>(n - i + 1);
    colors[i - 1] = static_cast<int>(entry / w);
    code[i - 1] = static_cast<int>(entry % w);
  }
  return ColoredPermutation(Permutation::from_lehmer_code(code), std::move(colors), r);
}

std::set<int> bad_numbers(const ColoredPermutation& s) {
  const std::size_t n = s.size();
  // suffix_min[j] = min(pi_j, ..., pi_n), with suffix_min[n+1] = infinity.
  std::vector<int> suffix_min(n + 2, static_cast<int>(n) + 1);
  for (std::size_t j = n; j >= 1; --j) suffix_min[j] = std::min(suffix_min[j + 1], s.value(j));
  std::set<int> bad;
  for (std::size_t j = 1; j <= n; ++j) {
    const int p = s.value(j);
    const int p_prev = j == 1 ? 0 : s.value(j - 1);
    const int c_prev = j == 1 ? 0 : s.color(j - 1);
    if (p < suffix_min[j + 1] && p_prev < suffix_min[j] && s.color(j) == c_prev) bad.insert(p);
  }
  return bad;
}

ColoredPermutation insert_bad(const ColoredPermutation& s, const std::set<int>& t, std::size_t n) {
  if (s.size() + t.size() != n) {
    throw Error(ErrorKind::InvalidArgument, "|sigma| + |T| must equal n");
  }
  for (const int i : t) {
    if (i < 1 || static_cast<std::size_t>(i) > n) throw Error(ErrorKind::InvalidArgument, "T must lie in [n]");
  }
  std::vector<int> rest;
  for (int x = 1; x <= static_cast<int>(n); ++x) {
    if (!t.contains(x)) rest.push_back(x);
  }
  std::vector<int> values;
  std::vector<int> colors = s.colors();
  for (const int v : s.perm().values()) values.push_back(rest[static_cast<std::size_t>(v) - 1]);
  for (const int i : t) {
    if (i == 1) {
      values.insert(values.begin(), 1);
      colors.insert(colors.begin(), 0);
      continue;
    }
    // Rightmost pi_j < i that is smaller than everything to its right.
    std::size_t spot = values.size();
    int right_min = static_cast<int>(n) + 1;
    for (std::size_t j = values.size(); j-- > 0;) {
      if (values[j] < i && values[j] < right_min) {
        spot = j;
        break;
      }
      right_min = std::min(right_min, values[j]);
    }
    if (spot == values.size()) throw Error(ErrorKind::Internal, "no insertion point for a bad number");
    values.insert(values.begin() + static_cast<std::ptrdiff_t>(spot) + 1, i);
    colors.insert(colors.begin() + static_cast<std::ptrdiff_t>(spot) + 1, colors[spot]);
  }
  return ColoredPermutation(Permutation(std::move(values)), std::move(colors), s.modulus());
}

ColoredPermutation remove_bad(const ColoredPermutation& s, const std::set<int>& t) {
  std::vector<int> rank(s.size() + 1, 0);
  int next = 0;
  for (int x = 1; x <= static_cast<int>(s.size()); ++x) {
    if (!t.contains(x)) rank[static_cast<std::size_t>(x)] = ++next;
  }
  std::vector<int> values;
  std::vector<int> colors;
  for (std::size_t i = 1; i <= s.size(); ++i) {
    if (t.contains(s.value(i))) continue;
    values.push_back(rank[static_cast<std::size_t>(s.value(i))]);
    colors.push_back(s.color(i));
  }
  return ColoredPermutation(Permutation(std::move(values)), std::move(colors), s.modulus());
}

}  // namespace lhl
