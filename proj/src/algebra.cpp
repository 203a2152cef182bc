#include "ringlat/algebra.hpp"

#include <map>
#include <string>

#include "ringlat/errors.hpp"

namespace ringlat {

Algebra::Algebra(FieldPtr field, std::size_t dim, std::vector<Scalar> table, Vec one)
    : Algebra(std::move(field), dim, std::move(table), std::move(one), true) {}

Algebra Algebra::trusted(FieldPtr field, std::size_t dim, std::vector<Scalar> table, Vec one) {
  return Algebra(std::move(field), dim, std::move(table), std::move(one), false);
}

Algebra::Algebra(FieldPtr field, std::size_t dim, std::vector<Scalar> table, Vec one, bool check)
    : field_(std::move(field)), dim_(dim), table_(std::move(table)), one_(std::move(one)) {
  if (!field_) throw AlgebraError("algebra needs a base field");
  if (dim_ == 0) throw AlgebraError("algebra dimension must be at least 1");
  if (table_.size() != dim_ * dim_ * dim_) {
    throw AlgebraError("structure table must have dim^3 = " + std::to_string(dim_ * dim_ * dim_) +
                       " entries");
  }
  if (one_.size() != dim_) throw AlgebraError("unit vector length must equal dim");
  if (check) validate();
}

void Algebra::validate() const {
  const unsigned q = field_->order();
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] >= q) throw AlgebraError("structure constant out of range at index " + std::to_string(i));
  }
  for (Scalar c : one_) {
    if (c >= q) throw AlgebraError("unit coordinate out of range");
  }
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      if (structure(i, j) != structure(j, i)) {
        throw AlgebraError("commutativity fails at basis pair (" + std::to_string(i) + "," +
                           std::to_string(j) + ")");
      }
    }
  }
  for (std::size_t i = 0; i < dim_; ++i) {
    if (mul(one_, basis_vector(i)) != basis_vector(i)) {
      throw AlgebraError("unit law fails at basis vector " + std::to_string(i));
    }
  }
  std::vector<Vec> pair(dim_ * dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) pair[i * dim_ + j] = structure(i, j);
  }
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      for (std::size_t k = 0; k < dim_; ++k) {
        const Vec left = mul(pair[i * dim_ + j], basis_vector(k));
        const Vec right = mul(basis_vector(i), pair[j * dim_ + k]);
        if (left != right) {
          throw AlgebraError("associativity fails at basis triple (" + std::to_string(i) + "," +
                             std::to_string(j) + "," + std::to_string(k) + ")");
        }
      }
    }
  }
}

Vec Algebra::basis_vector(std::size_t i) const {
  Vec v(dim_, 0);
  v[i] = 1;
  return v;
}

Vec Algebra::structure(std::size_t i, std::size_t j) const {
  const auto begin = table_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j) * dim_);
  return Vec(begin, begin + static_cast<std::ptrdiff_t>(dim_));
}

Vec Algebra::mul(const Vec& x, const Vec& y) const {
  const FiniteField& F = *field_;
  Vec r(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      const Scalar c = F.mul(x[i], y[j]);
      const Scalar* row = &table_[(i * dim_ + j) * dim_];
      for (std::size_t k = 0; k < dim_; ++k) {
        if (row[k] != 0) r[k] = F.add(r[k], F.mul(c, row[k]));
      }
    }
  }
  return r;
}

Vec Algebra::pow(const Vec& x, std::uint64_t k) const {
  Vec result = one_;
  Vec base = x;
  while (k > 0) {
    if (k & 1U) result = mul(result, base);
    k >>= 1U;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

Subspace Algebra::product(const Subspace& a, const Subspace& b) const {
  std::vector<Vec> out;
  out.reserve(a.dim() * b.dim());
  for (const auto& x : a.basis()) {
    for (const auto& y : b.basis()) out.push_back(mul(x, y));
  }
  return span(out);
}

bool Algebra::is_closed(const Subspace& s) const {
  const auto& B = s.basis();
  for (std::size_t i = 0; i < B.size(); ++i) {
    for (std::size_t j = i; j < B.size(); ++j) {
      if (!s.contains(mul(B[i], B[j]))) return false;
    }
  }
  return true;
}

bool Algebra::is_ideal_of(const Subspace& s, const Subspace& ring) const {
  for (const auto& r : ring.basis()) {
    for (const auto& x : s.basis()) {
      if (!s.contains(mul(r, x))) return false;
    }
  }
  return true;
}

Algebra make_poly_quotient(FieldPtr field, const Poly& f) {
  const FiniteField& F = *field;
  const int deg = poly::degree(f);
  if (deg < 1) throw AlgebraError("polynomial quotient needs a modulus of degree at least 1");
  if (f[deg] != 1) throw AlgebraError("polynomial quotient needs a monic modulus");
  for (Scalar c : f) {
    if (c >= F.order()) throw AlgebraError("polynomial coefficient out of range");
  }
  const std::size_t n = static_cast<std::size_t>(deg);
  // y^k mod f for k < 2n - 1
  std::vector<Vec> powers;
  for (std::size_t k = 0; k + 1 < 2 * n; ++k) {
    Poly mono(k + 1, 0);
    mono[k] = 1;
    Poly r = poly::rem(F, mono, f);
    r.resize(n, 0);
    powers.push_back(std::move(r));
  }
  std::vector<Scalar> table(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::copy(powers[i + j].begin(), powers[i + j].end(), table.begin() + static_cast<std::ptrdiff_t>((i * n + j) * n));
    }
  }
  Vec one(n, 0);
  one[0] = 1;
  return Algebra(std::move(field), n, std::move(table), std::move(one));
}

Algebra make_product(const Algebra& a, const Algebra& b) {
  if (!a.field().same_as(b.field())) throw AlgebraError("product of algebras over different fields");
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  const std::size_t n = na + nb;
  std::vector<Scalar> table(n * n * n, 0);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) {
      for (std::size_t k = 0; k < na; ++k) table[(i * n + j) * n + k] = a.table()[(i * na + j) * na + k];
    }
  }
  for (std::size_t i = 0; i < nb; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      for (std::size_t k = 0; k < nb; ++k) {
        table[((na + i) * n + na + j) * n + na + k] = b.table()[(i * nb + j) * nb + k];
      }
    }
  }
  Vec one = a.one();
  one.insert(one.end(), b.one().begin(), b.one().end());
  return Algebra::trusted(a.field_ptr(), n, std::move(table), std::move(one));
}

Algebra make_monomial_algebra(FieldPtr field, const std::vector<std::vector<unsigned>>& standard) {
  if (standard.empty()) throw AlgebraError("monomial algebra needs at least the monomial 1");
  const std::size_t nvars = standard.front().size();
  std::map<std::vector<unsigned>, std::size_t> index;
  for (std::size_t i = 0; i < standard.size(); ++i) {
    if (standard[i].size() != nvars) throw AlgebraError("exponent vectors differ in length");
    if (!index.emplace(standard[i], i).second) throw AlgebraError("repeated standard monomial");
  }
  for (const auto& m : standard) {
    for (std::size_t v = 0; v < nvars; ++v) {
      if (m[v] == 0) continue;
      auto d = m;
      --d[v];
      if (!index.count(d)) throw AlgebraError("standard monomials are not closed under division");
    }
  }
  const std::vector<unsigned> unit_exp(nvars, 0);
  if (!index.count(unit_exp)) throw AlgebraError("standard monomials must contain 1");
  const std::size_t n = standard.size();
  std::vector<Scalar> table(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<unsigned> m(nvars);
      for (std::size_t v = 0; v < nvars; ++v) m[v] = standard[i][v] + standard[j][v];
      auto it = index.find(m);
      if (it != index.end()) table[(i * n + j) * n + it->second] = 1;
    }
  }
  Vec one(n, 0);
  one[index.at(unit_exp)] = 1;
  return Algebra::trusted(std::move(field), n, std::move(table), std::move(one));
}

Subspace Restriction::image_in_parent(const Subspace& s) const {
  std::vector<Vec> out;
  for (const auto& v : s.basis()) out.push_back(to_parent(v));
  return Subspace::span(embedding.field(), embedding.ambient_dim(), out);
}

Subspace Restriction::preimage_of(const Subspace& parent_space) const {
  std::vector<Vec> out;
  for (const auto& v : parent_space.basis()) out.push_back(from_parent(v));
  return Subspace::span(embedding.field(), embedding.dim(), out);
}

Restriction restrict_algebra(const Algebra& a, const Subspace& u, const Vec& unit) {
  if (!u.contains(unit)) throw AlgebraError("restriction unit lies outside the subspace");
  if (!a.is_closed(u)) throw AlgebraError("restriction subspace is not multiplicatively closed");
  const std::size_t m = u.dim();
  if (m == 0) throw AlgebraError("restriction to the zero subspace");
  const auto& B = u.basis();
  std::vector<Scalar> table(m * m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Vec c = u.coordinates(a.mul(B[i], B[j]));
      std::copy(c.begin(), c.end(), table.begin() + static_cast<std::ptrdiff_t>((i * m + j) * m));
    }
  }
  for (const auto& b : B) {
    if (a.mul(unit, b) != b) throw AlgebraError("restriction unit does not act as identity");
  }
  return Restriction{Algebra::trusted(a.field_ptr(), m, std::move(table), u.coordinates(unit)), u};
}

Vec Quotient::project(const Vec& v) const {
  const Vec r = kernel.reduce(v);
  const auto cols = kernel.free_columns();
  Vec out(cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k) out[k] = r[cols[k]];
  return out;
}

Subspace Quotient::project(const Subspace& s) const {
  std::vector<Vec> out;
  for (const auto& v : s.basis()) out.push_back(project(v));
  return algebra.span(out);
}

Quotient quotient(const Algebra& a, const Subspace& j) {
  if (j.ambient_dim() != a.dim()) throw AlgebraError("ideal lives in a different ambient space");
  if (!a.is_ideal_of(j, a.full())) throw AlgebraError("quotient by a subspace that is not an ideal");
  if (j.contains(a.one())) throw AlgebraError("quotient by an improper ideal (the unit maps to 0)");
  const auto cols = j.free_columns();
  const std::size_t m = cols.size();
  Quotient result{Algebra::trusted(a.field_ptr(), 1, std::vector<Scalar>{1}, Vec{1}), j};
  std::vector<Scalar> table(m * m * m);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      const Vec c = result.project(a.mul(a.basis_vector(cols[x]), a.basis_vector(cols[y])));
      std::copy(c.begin(), c.end(), table.begin() + static_cast<std::ptrdiff_t>((x * m + y) * m));
    }
  }
  result.algebra = Algebra::trusted(a.field_ptr(), m, std::move(table), result.project(a.one()));
  return result;
}

}  // namespace ringlat
