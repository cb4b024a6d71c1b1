#include "nilrep/scalar.hpp"

#include <cctype>
#include <sstream>

namespace nilrep {

namespace {

bool all_digits(std::string_view s)
{
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

[[noreturn]] void bad_rational(std::string_view text)
{
  throw Error(ErrorKind::Parse, "not a rational number: '" + std::string(text) + "'");
}

} // namespace

Scalar parse_scalar(std::string_view text)
{
  std::string_view body = text;
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front())))
    body.remove_prefix(1);
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back())))
    body.remove_suffix(1);

  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Scalar value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      bad_rational(text);
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0)
      throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
    value = Scalar(n, d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      bad_rational(text);
    std::string digits = std::string(whole) + std::string(frac);
    mpz_class n(digits.empty() ? std::string("0") : digits, 10);
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, frac.size());
    value = Scalar(n, d);
  } else {
    if (!all_digits(body))
      bad_rational(text);
    value = Scalar(mpz_class(std::string(body), 10));
  }
  value.canonicalize();
  return negative ? Scalar(-value) : value;
}

std::string to_string(const Scalar& q)
{
  Scalar c(q);
  c.canonicalize();
  return c.get_str();
}

double to_double(const Scalar& q)
{
  return q.get_d();
}

bool is_zero(const Scalar& q)
{
  return sgn(q) == 0;
}

Matrix4::Matrix4() = default;

Matrix4 Matrix4::identity()
{
  Matrix4 m;
  for (std::size_t i = 0; i < 4; ++i)
    m.m_[i][i] = 1;
  return m;
}

Matrix4 Matrix4::from_rows(const std::array<Vec4, 4>& rows)
{
  Matrix4 m;
  m.m_ = rows;
  return m;
}

Matrix4 Matrix4::operator*(const Matrix4& rhs) const
{
  Matrix4 out;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Scalar acc = 0;
      for (std::size_t k = 0; k < 4; ++k)
        acc += m_[i][k] * rhs.m_[k][j];
      out.m_[i][j] = acc;
    }
  return out;
}

Vec4 Matrix4::operator*(const Vec4& v) const
{
  Vec4 out;
  for (std::size_t i = 0; i < 4; ++i) {
    Scalar acc = 0;
    for (std::size_t k = 0; k < 4; ++k)
      acc += m_[i][k] * v[k];
    out[i] = acc;
  }
  return out;
}

Matrix4 Matrix4::operator+(const Matrix4& rhs) const
{
  Matrix4 out;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      out.m_[i][j] = m_[i][j] + rhs.m_[i][j];
  return out;
}

Matrix4 Matrix4::operator-(const Matrix4& rhs) const
{
  Matrix4 out;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      out.m_[i][j] = m_[i][j] - rhs.m_[i][j];
  return out;
}

Matrix4 Matrix4::scaled(const Scalar& c) const
{
  Matrix4 out;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      out.m_[i][j] = c * m_[i][j];
  return out;
}

Matrix4 Matrix4::transposed() const
{
  Matrix4 out;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      out.m_[i][j] = m_[j][i];
  return out;
}

bool Matrix4::is_zero() const
{
  for (const auto& r : m_)
    for (const auto& e : r)
      if (sgn(e) != 0)
        return false;
  return true;
}

Scalar Matrix4::determinant() const
{
  auto a = m_;
  Scalar det = 1;
  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t pivot = col;
    while (pivot < 4 && sgn(a[pivot][col]) == 0)
      ++pivot;
    if (pivot == 4)
      return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < 4; ++r) {
      if (sgn(a[r][col]) == 0)
        continue;
      Scalar f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < 4; ++c)
        a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

Matrix4 Matrix4::inverse() const
{
  auto a = m_;
  auto inv = identity().m_;
  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t pivot = col;
    while (pivot < 4 && sgn(a[pivot][col]) == 0)
      ++pivot;
    if (pivot == 4)
      throw Error(ErrorKind::Domain, "matrix is singular");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    Scalar p = a[col][col];
    for (std::size_t c = 0; c < 4; ++c) {
      a[col][c] /= p;
      inv[col][c] /= p;
    }
    for (std::size_t r = 0; r < 4; ++r) {
      if (r == col || sgn(a[r][col]) == 0)
        continue;
      Scalar f = a[r][col];
      for (std::size_t c = 0; c < 4; ++c) {
        a[r][c] -= f * a[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return from_rows(inv);
}

std::string to_string(const Matrix4& m)
{
  std::ostringstream os;
  for (std::size_t i = 0; i < 4; ++i) {
    os << (i == 0 ? "[" : " ") << "[";
    for (std::size_t j = 0; j < 4; ++j)
      os << (j ? ", " : "") << to_string(m(i, j));
    os << "]" << (i == 3 ? "]" : "\n");
  }
  return os.str();
}

RationalSampler::RationalSampler(std::uint64_t seed, int bound) : engine_(seed), bound_(bound) {}

RationalSampler::RationalSampler(std::seed_seq& seq, int bound) : engine_(seq), bound_(bound) {}

int RationalSampler::next_int(int lo, int hi)
{
  return std::uniform_int_distribution<int>(lo, hi)(engine_);
}

Scalar RationalSampler::next()
{
  Scalar q(next_int(-bound_, bound_), next_int(1, bound_));
  q.canonicalize();
  return q;
}

Scalar RationalSampler::next_nonzero()
{
  Scalar q(next_int(1, bound_), next_int(1, bound_));
  q.canonicalize();
  return next_int(0, 1) ? q : Scalar(-q);
}

Scalar RationalSampler::next_positive()
{
  Scalar q(next_int(1, bound_), next_int(1, bound_));
  q.canonicalize();
  return q;
}

Vec4 RationalSampler::next_vec()
{
  return {next(), next(), next(), next()};
}

} // namespace nilrep
