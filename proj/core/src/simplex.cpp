#include "lhl/simplex.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "lhl/error.hpp"

namespace lhl {

LatticeSimplex::LatticeSimplex(std::vector<IntPoint> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw Error(ErrorKind::InvalidArgument, "simplex needs at least one vertex");
  const std::size_t n = vertices_.front().size();
  for (const auto& v : vertices_) {
    if (v.size() != n) throw Error(ErrorKind::InvalidArgument, "vertices have mixed dimensions");
  }
  if (vertices_.size() > n + 1 || rank(lifted_matrix()) != vertices_.size()) {
    throw Error(ErrorKind::InvalidArgument, "vertices are not affinely independent");
  }
}

IntMatrix LatticeSimplex::lifted_matrix() const {
  const std::size_t n = ambient_dimension();
  IntMatrix w(n + 1, vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    for (std::size_t k = 0; k < n; ++k) w(k, i) = vertices_[i][k];
    w(n, i) = 1;
  }
  return w;
}

BigInt LatticeSimplex::normalized_volume() const {
  const SmithNormalForm snf = smith_normal_form(lifted_matrix());
  BigInt v = 1;
  for (const auto& d : snf.diagonal) v *= d;
  return v;
}

bool ParallelepipedPoint::is_open() const {
  return std::all_of(lambda.begin(), lambda.end(), [](const Rational& l) { return sgn(l) > 0; });
}

namespace {

// Coset data: the fundamental domain is indexed by a in prod_j [0, d_j), and
// the barycentric weights are lambda_i = frac(N_i / D) with
// N = sum_j a_j * column_j, column_j = V[:, j] * (D / d_j) reduced mod D.
struct CosetData {
  std::size_t width = 0;                     // d + 1 barycentric weights
  std::vector<BigInt> radices;               // the d_j > 1
  BigInt modulus;                            // D = lcm of the radices = last radix
  std::vector<std::vector<BigInt>> columns;  // columns[j][i] in [0, D)
  BigInt volume;
};

CosetData coset_data(const LatticeSimplex& simplex) {
  const SmithNormalForm snf = smith_normal_form(simplex.lifted_matrix());
  const std::size_t k = simplex.dimension() + 1;
  CosetData data;
  data.radices.assign(snf.diagonal.begin(), snf.diagonal.begin() + static_cast<std::ptrdiff_t>(k));
  data.width = k;
  data.modulus = data.radices.back();
  data.volume = 1;
  for (const auto& d : data.radices) {
    if (d == 0) throw Error(ErrorKind::Internal, "degenerate simplex in normal form");
    data.volume *= d;
  }
  // Radix-one digits contribute a multiple of D and are dropped.
  std::vector<BigInt> kept;
  for (std::size_t j = 0; j < k; ++j) {
    if (data.radices[j] == 1) continue;
    const BigInt scale = data.modulus / data.radices[j];
    std::vector<BigInt> column(k);
    for (std::size_t i = 0; i < k; ++i) {
      BigInt c = snf.right(i, j) * scale;
      mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), data.modulus.get_mpz_t());
      column[i] = std::move(c);
    }
    kept.push_back(data.radices[j]);
    data.columns.push_back(std::move(column));
  }
  data.radices = std::move(kept);
  return data;
}

void check_volume(const BigInt& volume, const EnumerationOptions& options) {
  if (volume > options.max_points) {
    throw Error(ErrorKind::VolumeTooLarge, "normalized volume " + volume.get_str() +
                                               " exceeds the point cap " +
                                               std::to_string(options.max_points));
  }
}

// Calls visit(residues, modulus) once per coset, residues being N_i mod D.
// Uses machine integers whenever (d+1) * D fits, BigInt arithmetic otherwise.
template <typename FastVisitor, typename SlowVisitor>
void for_each_residue(const CosetData& data, FastVisitor&& fast, SlowVisitor&& slow) {
  const std::size_t k = data.width;
  const std::size_t m = data.radices.size();
  const bool fits = data.modulus < BigInt(std::numeric_limits<std::int64_t>::max() / 4) /
                                        static_cast<long>(k + 1);
  std::vector<std::size_t> digits(m, 0);
  if (fits) {
    const std::int64_t modulus = data.modulus.get_si();
    std::vector<std::int64_t> radix(m);
    std::vector<std::vector<std::int64_t>> column(m, std::vector<std::int64_t>(k));
    for (std::size_t j = 0; j < m; ++j) {
      radix[j] = data.radices[j].get_si();
      for (std::size_t i = 0; i < k; ++i) column[j][i] = data.columns[j][i].get_si();
    }
    std::vector<std::int64_t> r(k, 0);
    while (true) {
      fast(std::span<const std::int64_t>(r), modulus);
      std::size_t j = 0;
      // Mixed-radix increment; a digit wrapping past d_j adds d_j * column_j == 0 mod D,
      // so every touched digit contributes one more column.
      for (; j < m; ++j) {
        for (std::size_t i = 0; i < k; ++i) {
          r[i] += column[j][i];
          if (r[i] >= modulus) r[i] -= modulus;
        }
        if (static_cast<std::int64_t>(++digits[j]) < radix[j]) break;
        digits[j] = 0;
      }
      if (j == m) return;
    }
  }
  std::vector<BigInt> r(k, 0);
  while (true) {
    slow(std::span<const BigInt>(r), data.modulus);
    std::size_t j = 0;
    for (; j < m; ++j) {
      for (std::size_t i = 0; i < k; ++i) {
        r[i] += data.columns[j][i];
        if (r[i] >= data.modulus) r[i] -= data.modulus;
      }
      if (BigInt(static_cast<unsigned long>(++digits[j])) < data.radices[j]) break;
      digits[j] = 0;
    }
    if (j == m) return;
  }
}

ParallelepipedPoint make_point(const LatticeSimplex& simplex, std::span<const BigInt> residues,
                               const BigInt& modulus) {
  const std::size_t n = simplex.ambient_dimension();
  ParallelepipedPoint p;
  p.coordinates.assign(n + 1, 0);
  p.lambda.resize(residues.size());
  for (std::size_t i = 0; i < residues.size(); ++i) {
    p.lambda[i] = Rational(residues[i], modulus);
    p.lambda[i].canonicalize();
    if (residues[i] == 0) continue;
    const auto& v = simplex.vertices()[i];
    for (std::size_t c = 0; c < n; ++c) p.coordinates[c] += residues[i] * v[c];
    p.coordinates[n] += residues[i];
  }
  for (auto& c : p.coordinates) {
    if (!mpz_divisible_p(c.get_mpz_t(), modulus.get_mpz_t())) {
      throw Error(ErrorKind::Internal, "coset representative is not a lattice point");
    }
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), modulus.get_mpz_t());
  }
  return p;
}

void sort_points(std::vector<ParallelepipedPoint>& points) {
  std::sort(points.begin(), points.end(), [](const auto& a, const auto& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.coordinates < b.coordinates;
  });
}

std::vector<ParallelepipedPoint> enumerate_normal_form(const LatticeSimplex& simplex,
                                                       const EnumerationOptions& options) {
  const CosetData data = coset_data(simplex);
  check_volume(data.volume, options);
  std::vector<ParallelepipedPoint> points;
  points.reserve(data.volume.get_ui());
  std::vector<BigInt> big;
  for_each_residue(
      data,
      [&](std::span<const std::int64_t> r, std::int64_t modulus) {
        big.assign(r.begin(), r.end());
        points.push_back(make_point(simplex, big, BigInt(modulus)));
      },
      [&](std::span<const BigInt> r, const BigInt& modulus) {
        points.push_back(make_point(simplex, r, modulus));
      });
  return points;
}

// Exact solve of W_sel * lambda = x_sel on a set of independent rows.
class RowSolver {
 public:
  explicit RowSolver(const IntMatrix& w) : w_(w) {
    const std::size_t k = w.cols();
    // Greedily pick independent rows.
    for (std::size_t r = 0; r < w.rows() && rows_.size() < k; ++r) {
      rows_.push_back(r);
      IntMatrix sub(rows_.size(), k);
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = w(rows_[i], j);
      }
      if (rank(sub) != rows_.size()) rows_.pop_back();
    }
    // Invert the square submatrix by Gauss-Jordan over Q.
    std::vector<std::vector<Rational>> a(k, std::vector<Rational>(2 * k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) a[i][j] = Rational(w(rows_[i], j));
      a[i][k + i] = 1;
    }
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t p = c;
      while (a[p][c] == 0) ++p;
      std::swap(a[p], a[c]);
      const Rational inv = 1 / a[c][c];
      for (auto& x : a[c]) x *= inv;
      for (std::size_t i = 0; i < k; ++i) {
        if (i == c || a[i][c] == 0) continue;
        const Rational f = a[i][c];
        for (std::size_t j = 0; j < 2 * k; ++j) a[i][j] -= f * a[c][j];
      }
    }
    inverse_.assign(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) inverse_[i][j] = a[i][k + j];
    }
  }

  // lambda with W * lambda == x, or nothing if x is off the span.
  bool solve(const std::vector<BigInt>& x, std::vector<Rational>& lambda) const {
    const std::size_t k = w_.cols();
    lambda.assign(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) lambda[i] += inverse_[i][j] * x[rows_[j]];
    }
    for (std::size_t r = 0; r < w_.rows(); ++r) {
      Rational v = 0;
      for (std::size_t j = 0; j < k; ++j) v += lambda[j] * w_(r, j);
      if (v != x[r]) return false;
    }
    return true;
  }

 private:
  const IntMatrix& w_;
  std::vector<std::size_t> rows_;
  std::vector<std::vector<Rational>> inverse_;
};

std::vector<ParallelepipedPoint> enumerate_bounding_box(const LatticeSimplex& simplex,
                                                        const EnumerationOptions& options) {
  const IntMatrix w = simplex.lifted_matrix();
  const std::size_t rows = w.rows();
  const std::size_t k = w.cols();
  // Coordinate r of sum lambda_i w_i with lambda in [0,1) lies in [lo_r, hi_r].
  std::vector<BigInt> lo(rows, 0), hi(rows, 0);
  BigInt box = 1;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < k; ++j) (w(r, j) < 0 ? lo[r] : hi[r]) += w(r, j);
    box *= hi[r] - lo[r] + 1;
  }
  if (box > BigInt(options.max_points) * 16) {
    throw Error(ErrorKind::VolumeTooLarge, "bounding box of " + box.get_str() +
                                               " points exceeds the scan cap");
  }
  const RowSolver solver(w);
  std::vector<ParallelepipedPoint> points;
  std::vector<BigInt> x = lo;
  std::vector<Rational> lambda;
  while (true) {
    if (solver.solve(x, lambda) &&
        std::all_of(lambda.begin(), lambda.end(),
                    [](const Rational& l) { return sgn(l) >= 0 && l < 1; })) {
      if (static_cast<std::int64_t>(points.size()) >= options.max_points) {
        throw Error(ErrorKind::VolumeTooLarge, "point cap exceeded");
      }
      points.push_back(ParallelepipedPoint{x, lambda});
    }
    std::size_t r = 0;
    for (; r < rows; ++r) {
      if (++x[r] <= hi[r]) break;
      x[r] = lo[r];
    }
    if (r == rows) break;
  }
  return points;
}

}  // namespace

std::vector<ParallelepipedPoint> enumerate_fundamental_domain(const LatticeSimplex& simplex,
                                                              const EnumerationOptions& options) {
  std::vector<ParallelepipedPoint> points = options.method == EnumerationMethod::BoundingBox
                                                ? enumerate_bounding_box(simplex, options)
                                                : enumerate_normal_form(simplex, options);
  sort_points(points);
  return points;
}

std::vector<ParallelepipedPoint> half_open_points(const LatticeSimplex& simplex,
                                                  const EnumerationOptions& options) {
  return enumerate_fundamental_domain(simplex, options);
}

std::vector<ParallelepipedPoint> open_points(const LatticeSimplex& simplex,
                                             const EnumerationOptions& options) {
  std::vector<ParallelepipedPoint> all = enumerate_fundamental_domain(simplex, options);
  std::erase_if(all, [](const ParallelepipedPoint& p) { return !p.is_open(); });
  return all;
}

namespace {

// Height histogram straight from the residues, without building points.
IntPolynomial height_polynomial(const LatticeSimplex& simplex, const EnumerationOptions& options,
                                bool open_only) {
  if (options.method == EnumerationMethod::BoundingBox) {
    std::vector<std::int64_t> counts(simplex.dimension() + 2, 0);
    for (const auto& p : enumerate_fundamental_domain(simplex, options)) {
      if (open_only && !p.is_open()) continue;
      ++counts[p.height().get_ui()];
    }
    return IntPolynomial::from_counts(counts);
  }
  const CosetData data = coset_data(simplex);
  check_volume(data.volume, options);
  std::vector<std::int64_t> counts(simplex.dimension() + 2, 0);
  for_each_residue(
      data,
      [&](std::span<const std::int64_t> r, std::int64_t modulus) {
        std::int64_t sum = 0;
        for (const std::int64_t v : r) {
          if (open_only && v == 0) return;
          sum += v;
        }
        ++counts[static_cast<std::size_t>(sum / modulus)];
      },
      [&](std::span<const BigInt> r, const BigInt& modulus) {
        BigInt sum = 0;
        for (const auto& v : r) {
          if (open_only && v == 0) return;
          sum += v;
        }
        ++counts[BigInt(sum / modulus).get_ui()];
      });
  return IntPolynomial::from_counts(counts);
}

}  // namespace

IntPolynomial hstar(const LatticeSimplex& simplex, const EnumerationOptions& options) {
  return height_polynomial(simplex, options, false);
}

IntPolynomial local_hstar(const LatticeSimplex& simplex, const EnumerationOptions& options) {
  return height_polynomial(simplex, options, true);
}

LatticeSimplex lecture_hall_simplex(const SSequence& s) {
  const std::size_t n = s.size();
  std::vector<IntPoint> vertices(n + 1, IntPoint(n, 0));
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t k = i; k < n; ++k) vertices[i][k] = static_cast<long>(s(k + 1));
  }
  return LatticeSimplex(std::move(vertices));
}

InversionSequence rem_map(const ParallelepipedPoint& point, const SSequence& s) {
  if (point.coordinates.size() != s.size() + 1) {
    throw Error(ErrorKind::InvalidArgument, "point dimension does not match s");
  }
  std::vector<std::int64_t> e(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), point.coordinates[i].get_mpz_t(),
                  static_cast<unsigned long>(s(i + 1)));
    e[i] = r.get_si();
  }
  return InversionSequence(std::move(e), s);
}

namespace {

void check_indices(std::span<const std::size_t> indices, std::size_t limit) {
  if (indices.empty()) throw Error(ErrorKind::InvalidArgument, "face needs at least one vertex");
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] > limit) throw Error(ErrorKind::InvalidArgument, "vertex index out of range");
    if (i > 0 && indices[i] <= indices[i - 1]) {
      throw Error(ErrorKind::InvalidArgument, "vertex indices must be strictly increasing");
    }
  }
}

}  // namespace

LatticeSimplex face(const LatticeSimplex& simplex, std::span<const std::size_t> indices) {
  check_indices(indices, simplex.dimension());
  std::vector<IntPoint> vertices;
  vertices.reserve(indices.size());
  for (const std::size_t i : indices) vertices.push_back(simplex.vertices()[i]);
  return LatticeSimplex(std::move(vertices));
}

SSequence face_mu(const SSequence& s, std::span<const std::size_t> indices) {
  check_indices(indices, s.size());
  if (indices.size() < 2) throw Error(ErrorKind::SingleVertex, "a single vertex has no mu");
  std::vector<std::int64_t> mu;
  for (std::size_t j = 1; j < indices.size(); ++j) {
    std::int64_t g = 0;
    for (std::size_t i = indices[j - 1] + 1; i <= indices[j]; ++i) g = std::gcd(g, s(i));
    mu.push_back(g);
  }
  return SSequence(std::move(mu));
}

}  // namespace lhl
