#include "lhl/inversion.hpp"

#include <charconv>
#include <limits>

namespace lhl {
namespace {

// Entries are multiplied pairwise during ratio comparisons.
constexpr std::int64_t kMaxEntry = std::int64_t{1} << 30;

}  // namespace

SSequence::SSequence(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw Error(ErrorKind::InvalidArgument, "s must have at least one entry");
  for (auto v : entries_) {
    if (v < 1) throw Error(ErrorKind::InvalidArgument, "s entries must be positive, got " + std::to_string(v));
    if (v > kMaxEntry) throw Error(ErrorKind::InvalidArgument, "s entry too large: " + std::to_string(v));
  }
}

SSequence SSequence::parse(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) token.remove_prefix(1);
    while (!token.empty() && (token.back() == ' ' || token.back() == '\t')) token.remove_suffix(1);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw Error(ErrorKind::InvalidArgument, "cannot parse s entry '" + std::string(token) + "'");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return SSequence(std::move(out));
}

BigInt SSequence::product() const {
  BigInt p = 1;
  for (auto v : entries_) p *= static_cast<long>(v);
  return p;
}

std::string SSequence::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

InversionSequence::InversionSequence(std::vector<std::int64_t> entries, SSequence bound)
    : entries_(std::move(entries)), bound_(std::move(bound)) {
  if (entries_.size() != bound_.size()) {
    throw Error(ErrorKind::InvalidArgument, "inversion sequence length does not match s");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 0 || entries_[i] >= bound_(i + 1)) {
      throw Error(ErrorKind::InvalidArgument, "entry e_" + std::to_string(i + 1) + " = " +
                                                  std::to_string(entries_[i]) + " out of range");
    }
  }
}

namespace detail {

void check_enumeration_size(const SSequence& s, std::int64_t cap) {
  if (s.product() > cap) {
    throw Error(ErrorKind::TooLarge,
                "enumerating " + s.product().get_str() + " sequences exceeds the cap " + std::to_string(cap));
  }
}

}  // namespace detail

int statistic_count(std::span<const std::int64_t> e, const SSequence& s, Statistic stat) {
  const int wanted = stat == Statistic::Ascent ? -1 : 1;
  int count = 0;
  for (std::size_t i = 0; i <= e.size(); ++i) count += detail::compare_step(e, s, i) == wanted;
  return count;
}

namespace {

std::vector<std::size_t> index_set(const InversionSequence& e, int wanted) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= e.size(); ++i) {
    if (detail::compare_step(e.entries(), e.bound(), i) == wanted) out.push_back(i);
  }
  return out;
}

}  // namespace

std::vector<std::size_t> ascent_set(const InversionSequence& e) { return index_set(e, -1); }
std::vector<std::size_t> descent_set(const InversionSequence& e) { return index_set(e, 1); }

bool is_restricted(std::span<const std::int64_t> e, const SSequence& s) {
  for (std::size_t i = 0; i <= e.size(); ++i) {
    if (detail::compare_step(e, s, i) == 0) return false;
  }
  return true;
}

std::vector<InversionSequence> enumerate_all(const SSequence& s, std::int64_t cap) {
  std::vector<InversionSequence> out;
  for_each_inversion_sequence(
      s, [&](std::span<const std::int64_t> e) { out.emplace_back(std::vector(e.begin(), e.end()), s); }, cap);
  return out;
}

std::vector<InversionSequence> enumerate_restricted(const SSequence& s) {
  std::vector<InversionSequence> out;
  for_each_restricted_sequence(
      s, [&](std::span<const std::int64_t> e) { out.emplace_back(std::vector(e.begin(), e.end()), s); });
  return out;
}

IntPolynomial s_eulerian(const SSequence& s, Statistic stat) {
  std::vector<std::int64_t> counts(s.size() + 1, 0);
  for_each_inversion_sequence(s, [&](std::span<const std::int64_t> e) { ++counts[statistic_count(e, s, stat)]; });
  return IntPolynomial::from_counts(counts);
}

InversionSequence complement_involution(const InversionSequence& e) {
  std::vector<std::int64_t> out(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    const std::int64_t m = e.bound()(i + 1);
    out[i] = (m - e.entries()[i] % m) % m;
  }
  return InversionSequence(std::move(out), e.bound());
}

IntPolynomial s_derangement_enum(const SSequence& s, Statistic stat) {
  std::vector<std::int64_t> counts(s.size() + 2, 0);
  for_each_restricted_sequence(s, [&](std::span<const std::int64_t> e) { ++counts[statistic_count(e, s, stat)]; });
  return IntPolynomial::from_counts(counts);
}

std::vector<IntPolynomial> interlacing_certificate(const SSequence& s) {
  const IntPolynomial z{0, 1};
  // n = 1: p_{1,0} = 0 and p_{1,k} = z.
  std::vector<IntPolynomial> family(static_cast<std::size_t>(s(1)), z);
  family[0] = IntPolynomial{};

  for (std::size_t m = 2; m <= s.size(); ++m) {
    const std::int64_t prev = s(m - 1);
    const std::int64_t cur = s(m);
    // prefix[t] = sum_{i < t} p_{m-1,i}
    std::vector<IntPolynomial> prefix(static_cast<std::size_t>(prev) + 1);
    for (std::int64_t i = 0; i < prev; ++i) prefix[i + 1] = prefix[i] + family[i];

    std::vector<IntPolynomial> next(static_cast<std::size_t>(cur));
    for (std::int64_t k = 0; k < cur; ++k) {
      // t_k = ceil(k s_{m-1} / s_m); e_{m-1} < t_k makes m-1 an ascent.
      const std::int64_t num = k * prev;
      const std::int64_t t = (num + cur - 1) / cur;
      IntPolynomial value = prefix[t].shifted(1);
      if (t < prev) {
        // e_{m-1} = t_k ties with k/s_m exactly when s_m | k s_{m-1}.
        if (num % cur != 0) value += family[t];
        value += prefix[prev] - prefix[t + 1];
      }
      next[k] = std::move(value);
    }
    family = std::move(next);
  }
  return family;
}

IntPolynomial s_derangement_recursive(const SSequence& s) {
  auto family = interlacing_certificate(s);
  IntPolynomial total;
  for (std::size_t k = 1; k < family.size(); ++k) total += family[k];
  return total;
}

}  // namespace lhl
