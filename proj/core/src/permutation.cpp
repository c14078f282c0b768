#include "lhl/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <utility>

#include "lhl/error.hpp"

namespace lhl {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const std::size_t n = values_.size();
  std::vector<bool> seen(n + 1, false);
  for (const int v : values_) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorKind::InvalidArgument, "not a permutation of [n]");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i) + 1;
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  const bool separated = text.find_first_of(" ,\t") != std::string_view::npos;
  std::vector<int> values;
  if (!separated) {
    for (const char ch : text) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        throw Error(ErrorKind::InvalidArgument, "bad permutation text");
      }
      values.push_back(ch - '0');
    }
    return Permutation(std::move(values));
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',' || text[pos] == '\t')) ++pos;
    if (pos == text.size()) break;
    int v = 0;
    const auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
    if (ec != std::errc()) throw Error(ErrorKind::InvalidArgument, "bad permutation text");
    values.push_back(v);
    pos = static_cast<std::size_t>(end - text.data());
  }
  return Permutation(std::move(values));
}

Permutation Permutation::from_lehmer_code(const std::vector<int>& code) {
  const std::size_t n = code.size();
  std::vector<int> available(n);
  for (std::size_t i = 0; i < n; ++i) available[i] = static_cast<int>(i) + 1;
  std::vector<int> values;
  values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (code[i] < 0 || static_cast<std::size_t>(code[i]) >= available.size()) {
      throw Error(ErrorKind::InvalidArgument, "entry out of range in Lehmer code");
    }
    values.push_back(available[static_cast<std::size_t>(code[i])]);
    available.erase(available.begin() + code[i]);
  }
  return Permutation(std::move(values));
}

std::vector<int> Permutation::lehmer_code() const {
  const std::size_t n = values_.size();
  std::vector<int> t(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) t[i] += values_[j] < values_[i] ? 1 : 0;
  }
  return t;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  const std::size_t n = values_.size();
  std::vector<bool> done(n + 1, false);
  std::vector<std::vector<int>> out;
  for (std::size_t start = 1; start <= n; ++start) {
    if (done[start]) continue;
    std::vector<int> cycle;
    for (std::size_t x = start; !done[x]; x = static_cast<std::size_t>(values_[x - 1])) {
      done[x] = true;
      cycle.push_back(static_cast<int>(x));
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_string() const {
  const bool compact = values_.size() <= 9;
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += std::to_string(values_[i]);
  }
  return out;
}

int descent_count(const Permutation& p) {
  int count = 0;
  for (std::size_t i = 1; i < p.size(); ++i) count += p(i) > p(i + 1) ? 1 : 0;
  return count;
}

int excedance_count(const Permutation& p) {
  int count = 0;
  for (std::size_t i = 1; i <= p.size(); ++i) count += p(i) > static_cast<int>(i) ? 1 : 0;
  return count;
}

bool is_derangement(const Permutation& p) {
  for (std::size_t i = 1; i <= p.size(); ++i) {
    if (p(i) == static_cast<int>(i)) return false;
  }
  return true;
}

void check_permutation_size(std::size_t n, int max_n) {
  if (static_cast<long>(n) > max_n) {
    throw Error(ErrorKind::TooLarge,
                "n = " + std::to_string(n) + " exceeds the brute-force cap " + std::to_string(max_n));
  }
}

IntPolynomial eulerian_poly(std::size_t n, int max_n) {
  std::vector<std::int64_t> counts(n + 1, 0);
  for_each_permutation(
      n, [&](const std::vector<int>& v) { ++counts[static_cast<std::size_t>(descent_count(Permutation(v)))]; },
      max_n);
  return IntPolynomial::from_counts(counts);
}

IntPolynomial derangement_poly(std::size_t n, int max_n) {
  std::vector<std::int64_t> counts(n + 1, 0);
  for_each_permutation(
      n,
      [&](const std::vector<int>& v) {
        const Permutation p(v);
        if (is_derangement(p)) ++counts[static_cast<std::size_t>(excedance_count(p))];
      },
      max_n);
  return IntPolynomial::from_counts(counts);
}

SSequence derangement_bound(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "the derangement bijection needs n >= 2");
  std::vector<std::int64_t> s;
  for (std::size_t i = 2; i <= n; ++i) s.push_back(static_cast<std::int64_t>(i));
  return SSequence(std::move(s));
}

Permutation inversion_to_derangement(const InversionSequence& e) {
  const std::size_t n = e.size() + 1;
  if (e.bound() != derangement_bound(n)) {
    throw Error(ErrorKind::InvalidArgument, "expected an inversion sequence under (2, 3, ..., n)");
  }
  if (!is_restricted(e.entries(), e.bound())) {
    throw Error(ErrorKind::NotRestricted, "inversion sequence has a ratio tie");
  }
  std::vector<int> available(n);
  for (std::size_t i = 0; i < n; ++i) available[i] = static_cast<int>(i) + 1;
  std::vector<int> values(n, 0);
  std::vector<int> cycle;
  auto close = [&] {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      values[static_cast<std::size_t>(cycle[i]) - 1] = cycle[(i + 1) % cycle.size()];
    }
    cycle.clear();
  };
  // Read e_n, e_{n-1}, ..., e_0 on the padded view.
  for (std::size_t i = n + 1; i-- > 0;) {
    const std::int64_t v = e.padded(i);
    if (v == 0) {
      if (!cycle.empty()) close();
      if (!available.empty()) {
        cycle.push_back(available.front());
        available.erase(available.begin());
      }
    } else {
      const auto k = static_cast<std::size_t>(v - 1);
      cycle.push_back(available.at(k));
      available.erase(available.begin() + static_cast<std::ptrdiff_t>(k));
    }
  }
  return Permutation(std::move(values));
}

InversionSequence derangement_to_inversion(const Permutation& p) {
  if (!is_derangement(p)) throw Error(ErrorKind::HasFixedPoint, "permutation has a fixed point");
  const std::size_t n = p.size();
  const SSequence bound = derangement_bound(n);
  std::vector<int> available(n);
  for (std::size_t i = 0; i < n; ++i) available[i] = static_cast<int>(i) + 1;
  // Padded entries in reading order e_n, ..., e_0.
  std::vector<std::int64_t> read;
  for (const auto& cycle : p.cycles()) {
    read.push_back(0);
    available.erase(std::find(available.begin(), available.end(), cycle.front()));
    for (std::size_t i = 1; i < cycle.size(); ++i) {
      const auto it = std::find(available.begin(), available.end(), cycle[i]);
      read.push_back(it - available.begin() + 1);
      available.erase(it);
    }
  }
  read.push_back(0);
  // read[k] = e_{n-k}; keep e_1 .. e_{n-1}.
  std::vector<std::int64_t> entries(n - 1);
  for (std::size_t i = 1; i < n; ++i) entries[i - 1] = read[n - i];
  return InversionSequence(std::move(entries), bound);
}

}  // namespace lhl
