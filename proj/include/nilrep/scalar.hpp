#ifndef NILREP_SCALAR_HPP
#define NILREP_SCALAR_HPP

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nilrep {

/// Exact rational coordinate type used throughout the algebraic layer.
using Scalar = mpq_class;

enum class ErrorKind {
  Parse,           ///< malformed rational or option string
  InvalidArgument, ///< well-formed but unacceptable value (lambda = 0 for a generic case, ...)
  Domain,          ///< operation precondition violated (singular matrix, non-lattice shift, ...)
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

/// Parses "p", "p/q" or a finite decimal such as "-1.25" into an exact rational.
Scalar parse_scalar(std::string_view text);

/// Canonical "p/q" (or "p" when integral) rendering.
std::string to_string(const Scalar& q);

double to_double(const Scalar& q);

bool is_zero(const Scalar& q);

/// Fixed-size exact 4-vector; index order is (s, x, y, t).
using Vec4 = std::array<Scalar, 4>;

class Matrix4 {
public:
  Matrix4(); // zero matrix
  static Matrix4 identity();
  static Matrix4 from_rows(const std::array<Vec4, 4>& rows);

  Scalar& operator()(std::size_t i, std::size_t j) { return m_[i][j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return m_[i][j]; }
  const Vec4& row(std::size_t i) const { return m_[i]; }

  Matrix4 operator*(const Matrix4& rhs) const;
  Vec4 operator*(const Vec4& v) const;
  Matrix4 operator+(const Matrix4& rhs) const;
  Matrix4 operator-(const Matrix4& rhs) const;
  Matrix4 scaled(const Scalar& c) const;
  Matrix4 transposed() const;

  Scalar determinant() const;
  bool is_zero() const;
  /// Throws Error(Domain) when singular.
  Matrix4 inverse() const;

  bool operator==(const Matrix4& rhs) const { return m_ == rhs.m_; }

private:
  std::array<Vec4, 4> m_;
};

std::string to_string(const Matrix4& m);

/// Draws rationals p/q with p in [-bound, bound] and q in [1, bound] from a seeded engine.
class RationalSampler {
public:
  explicit RationalSampler(std::uint64_t seed, int bound = 9);
  RationalSampler(std::seed_seq& seq, int bound = 9);

  Scalar next();
  Scalar next_nonzero();
  Scalar next_positive();
  Vec4 next_vec();
  int next_int(int lo, int hi);
  std::mt19937_64& engine() { return engine_; }

private:
  std::mt19937_64 engine_;
  int bound_;
};

} // namespace nilrep

#endif
