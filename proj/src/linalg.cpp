#include "ringlat/linalg.hpp"

#include <algorithm>

#include "ringlat/errors.hpp"

namespace ringlat {

namespace vec {

bool is_zero(const Vec& v) noexcept {
  return std::all_of(v.begin(), v.end(), [](Scalar x) { return x == 0; });
}

Vec add(const FiniteField& F, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.add(a[i], b[i]);
  return r;
}

Vec sub(const FiniteField& F, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.sub(a[i], b[i]);
  return r;
}

Vec scale(const FiniteField& F, Scalar c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(c, a[i]);
  return r;
}

void axpy(const FiniteField& F, Vec& a, Scalar c, const Vec& b) {
  if (c == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] != 0) a[i] = F.add(a[i], F.mul(c, b[i]));
  }
}

}  // namespace vec

namespace {

// In-place reduced row echelon form; drops zero rows. Returns pivot columns.
std::vector<std::size_t> rref(const FiniteField& F, std::vector<Vec>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const Scalar inv = F.inv(rows[r][c]);
    if (inv != 1) {
      for (auto& x : rows[r]) x = F.mul(x, inv);
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && rows[i][c] != 0) vec::axpy(F, rows[i], F.neg(rows[i][c]), rows[r]);
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace

Subspace::Subspace(FieldPtr field, std::size_t ambient_dim)
    : field_(std::move(field)), n_(ambient_dim) {}

Subspace Subspace::span(FieldPtr field, std::size_t ambient_dim, std::span<const Vec> vectors) {
  Subspace s(std::move(field), ambient_dim);
  s.rows_.assign(vectors.begin(), vectors.end());
  for (const auto& v : s.rows_) {
    if (v.size() != ambient_dim) throw AlgebraError("vector length does not match ambient dimension");
  }
  s.pivots_ = rref(*s.field_, s.rows_, ambient_dim);
  return s;
}

Subspace Subspace::full(FieldPtr field, std::size_t ambient_dim) {
  Subspace s(std::move(field), ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    Vec v(ambient_dim, 0);
    v[i] = 1;
    s.rows_.push_back(std::move(v));
    s.pivots_.push_back(i);
  }
  return s;
}

Vec Subspace::reduce(const Vec& v) const {
  Vec r = v;
  const FiniteField& F = *field_;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Scalar c = r[pivots_[k]];
    if (c != 0) vec::axpy(F, r, F.neg(c), rows_[k]);
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return vec::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.dim() > dim()) return false;
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [this](const Vec& v) { return contains(v); });
}

Vec Subspace::coordinates(const Vec& v) const {
  Vec c(rows_.size());
  for (std::size_t k = 0; k < rows_.size(); ++k) c[k] = v[pivots_[k]];
  return c;
}

Vec Subspace::combine(const Vec& coords) const {
  Vec r(n_, 0);
  for (std::size_t k = 0; k < rows_.size(); ++k) vec::axpy(*field_, r, coords[k], rows_[k]);
  return r;
}

std::vector<std::size_t> Subspace::free_columns() const {
  std::vector<std::size_t> cols;
  std::size_t k = 0;
  for (std::size_t c = 0; c < n_; ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
    } else {
      cols.push_back(c);
    }
  }
  return cols;
}

Subspace Subspace::sum(const Subspace& other) const {
  std::vector<Vec> all = rows_;
  all.insert(all.end(), other.rows_.begin(), other.rows_.end());
  return span(field_, n_, all);
}

Subspace Subspace::sum(const Vec& v) const {
  std::vector<Vec> all = rows_;
  all.push_back(v);
  return span(field_, n_, all);
}

Subspace Subspace::intersect(const Subspace& other) const {
  // a in this, b in other with a - b = 0.
  const FiniteField& F = *field_;
  std::vector<Vec> images = rows_;
  for (const auto& w : other.rows_) images.push_back(vec::scale(F, F.neg(1), w));
  const Subspace ker = nullspace(field_, images, n_);
  std::vector<Vec> out;
  for (const auto& a : ker.basis()) {
    Vec v(n_, 0);
    for (std::size_t k = 0; k < rows_.size(); ++k) vec::axpy(F, v, a[k], rows_[k]);
    out.push_back(std::move(v));
  }
  return span(field_, n_, out);
}

bool operator<(const Subspace& a, const Subspace& b) noexcept {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return a.rows_ < b.rows_;
}

std::size_t Subspace::hash() const noexcept {
  std::size_t h = 1469598103934665603ULL ^ n_;
  for (const auto& row : rows_) {
    for (Scalar x : row) {
      h ^= x;
      h *= 1099511628211ULL;
    }
  }
  return h;
}

Subspace nullspace(const FieldPtr& field, std::span<const Vec> images, std::size_t image_dim) {
  const FiniteField& F = *field;
  const std::size_t m = images.size();
  // Augmented rows [image_j | e_j]; rows whose left block vanishes after
  // elimination carry kernel vectors in the right block.
  std::vector<Vec> rows;
  rows.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    Vec r(image_dim + m, 0);
    std::copy(images[j].begin(), images[j].end(), r.begin());
    r[image_dim + j] = 1;
    rows.push_back(std::move(r));
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < image_dim && r < m; ++c) {
    std::size_t sel = r;
    while (sel < m && rows[sel][c] == 0) ++sel;
    if (sel == m) continue;
    std::swap(rows[r], rows[sel]);
    const Scalar inv = F.inv(rows[r][c]);
    for (auto& x : rows[r]) x = F.mul(x, inv);
    for (std::size_t i = 0; i < m; ++i) {
      if (i != r && rows[i][c] != 0) vec::axpy(F, rows[i], F.neg(rows[i][c]), rows[r]);
    }
    ++r;
  }
  std::vector<Vec> kernel;
  for (std::size_t i = r; i < m; ++i) {
    kernel.emplace_back(rows[i].begin() + static_cast<std::ptrdiff_t>(image_dim), rows[i].end());
  }
  return Subspace::span(field, m, kernel);
}

}  // namespace ringlat
