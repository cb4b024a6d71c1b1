#include "nilrep/lie_core.hpp"

#include <sstream>

namespace nilrep {

NVector NVector::basis(std::size_t i)
{
  Vec4 v{0, 0, 0, 0};
  v.at(i) = 1;
  return from_array(v);
}

bool NVector::is_zero() const
{
  return sgn(s) == 0 && sgn(x) == 0 && sgn(y) == 0 && sgn(t) == 0;
}

namespace {

std::string tuple_string(const Vec4& v)
{
  std::ostringstream os;
  os << "(" << to_string(v[0]) << ", " << to_string(v[1]) << ", " << to_string(v[2]) << ", "
     << to_string(v[3]) << ")";
  return os.str();
}

} // namespace

std::string to_string(const NVector& v)
{
  return tuple_string(v.to_array());
}

std::string to_string(const NPoint& n)
{
  return tuple_string(n.to_array());
}

NVector bracket(const NVector& u, const NVector& v)
{
  return {0, 0, u.s * v.x - v.s * u.x, u.x * v.y - v.x * u.y};
}

NVector jacobi_defect(const NVector& u, const NVector& v, const NVector& w)
{
  return bracket(u, bracket(v, w)) + bracket(v, bracket(w, u)) + bracket(w, bracket(u, v));
}

NPoint group_mul(const NPoint& a, const NPoint& b)
{
  return {a.s + b.s, a.x + b.x, a.s * b.x + a.y + b.y,
          a.t + b.t + (b.y * a.x + a.s * a.x * b.x - b.x * a.y) / 2};
}

NPoint group_inv(const NPoint& n)
{
  return {-n.s, -n.x, n.s * n.x - n.y, -n.t};
}

H1Point h1_mul(const H1Point& a, const H1Point& b)
{
  return {a.x + b.x, a.y + b.y, a.t + b.t + (b.y * a.x - b.x * a.y) / 2};
}

H1Point h1_bracket(const H1Point& a, const H1Point& b)
{
  return {0, 0, a.x * b.y - a.y * b.x};
}

H1Point s_action(const Scalar& s, const H1Point& h)
{
  return {h.x, s * h.x + h.y, h.t};
}

NPoint exp_map(const NVector& u)
{
  return {u.s, u.x, u.y + u.s * u.x / 2, u.t + u.s * u.x * u.x / 12};
}

NVector log_map(const NPoint& n)
{
  return {n.s, n.x, n.y - n.s * n.x / 2, n.t - n.s * n.x * n.x / 12};
}

Matrix4 ad_matrix(const NVector& u)
{
  // columns are [u, e_j]
  Matrix4 m;
  for (std::size_t j = 0; j < 4; ++j) {
    auto col = bracket(u, NVector::basis(j)).to_array();
    for (std::size_t i = 0; i < 4; ++i)
      m(i, j) = col[i];
  }
  return m;
}

Matrix4 exp_ad(const NVector& u)
{
  Matrix4 a = ad_matrix(u);
  Matrix4 a2 = a * a;
  Matrix4 a3 = a2 * a;
  return Matrix4::identity() + a + a2.scaled(Scalar(1, 2)) + a3.scaled(Scalar(1, 6));
}

Matrix4 Ad(const NPoint& n)
{
  return exp_ad(log_map(n));
}

// ---------------------------------------------------------------------------
// Subspace

namespace {

// In-place reduced row echelon form; drops zero rows.
std::vector<Vec4> rref(std::vector<Vec4> rows)
{
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < 4 && lead_row < rows.size(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < rows.size() && sgn(rows[pivot][col]) == 0)
      ++pivot;
    if (pivot == rows.size())
      continue;
    std::swap(rows[pivot], rows[lead_row]);
    Scalar p = rows[lead_row][col];
    for (auto& e : rows[lead_row])
      e /= p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead_row || sgn(rows[r][col]) == 0)
        continue;
      Scalar f = rows[r][col];
      for (std::size_t c = 0; c < 4; ++c)
        rows[r][c] -= f * rows[lead_row][c];
    }
    ++lead_row;
  }
  rows.resize(lead_row);
  return rows;
}

} // namespace

Subspace Subspace::span(const std::vector<Vec4>& vectors)
{
  Subspace w;
  w.basis_ = rref(vectors);
  return w;
}

Subspace Subspace::span(const std::vector<NVector>& vectors)
{
  std::vector<Vec4> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors)
    rows.push_back(v.to_array());
  return span(rows);
}

Subspace Subspace::whole()
{
  return span(std::vector<Vec4>{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
}

Subspace Subspace::kernel(const std::vector<Vec4>& rows)
{
  auto r = rref(rows);
  std::array<int, 4> pivot_of_col{-1, -1, -1, -1};
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t c = 0; c < 4; ++c)
      if (sgn(r[i][c]) != 0) {
        pivot_of_col[c] = static_cast<int>(i);
        break;
      }
  std::vector<Vec4> null_basis;
  for (std::size_t free = 0; free < 4; ++free) {
    if (pivot_of_col[free] >= 0)
      continue;
    Vec4 v{0, 0, 0, 0};
    v[free] = 1;
    for (std::size_t c = 0; c < 4; ++c)
      if (pivot_of_col[c] >= 0)
        v[c] = -r[static_cast<std::size_t>(pivot_of_col[c])][free];
    null_basis.push_back(v);
  }
  return span(null_basis);
}

std::vector<NVector> Subspace::basis_vectors() const
{
  std::vector<NVector> out;
  out.reserve(basis_.size());
  for (const auto& b : basis_)
    out.push_back(NVector::from_array(b));
  return out;
}

bool Subspace::contains(const Vec4& v) const
{
  auto rows = basis_;
  rows.push_back(v);
  return rref(std::move(rows)).size() == basis_.size();
}

bool Subspace::contains(const Subspace& other) const
{
  for (const auto& b : other.basis_)
    if (!contains(b))
      return false;
  return true;
}

Subspace Subspace::with(const Vec4& v) const
{
  auto rows = basis_;
  rows.push_back(v);
  return span(rows);
}

std::string to_string(const Subspace& w)
{
  if (w.dim() == 0)
    return "{0}";
  std::ostringstream os;
  os << "span{";
  for (std::size_t i = 0; i < w.dim(); ++i)
    os << (i ? ", " : "") << tuple_string(w.basis()[i]);
  os << "}";
  return os.str();
}

std::vector<Subspace> lower_central_series()
{
  std::vector<Subspace> series;
  Subspace current = Subspace::whole();
  for (int step = 0; step < 3; ++step) {
    std::vector<NVector> brackets;
    for (std::size_t i = 0; i < 4; ++i)
      for (const auto& v : current.basis_vectors())
        brackets.push_back(bracket(NVector::basis(i), v));
    current = Subspace::span(brackets);
    series.push_back(current);
  }
  return series;
}

Subspace center()
{
  std::vector<Vec4> rows;
  for (std::size_t i = 0; i < 4; ++i) {
    Matrix4 a = ad_matrix(NVector::basis(i));
    for (std::size_t r = 0; r < 4; ++r)
      rows.push_back(a.row(r));
  }
  return Subspace::kernel(rows);
}

} // namespace nilrep
