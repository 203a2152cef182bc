#include "ringlat/gen.hpp"

#include "ringlat/canonical.hpp"
#include "ringlat/errors.hpp"

namespace ringlat {

std::string shape_name(Shape s) {
  switch (s) {
    case Shape::LocalSubintegral: return "local-subintegral";
    case Shape::ProductOfLocals: return "product-of-locals";
    case Shape::FieldTower: return "field-tower";
    case Shape::Mixed: return "mixed";
  }
  return "?";
}

std::optional<Shape> parse_shape(const std::string& name) {
  for (Shape s : {Shape::LocalSubintegral, Shape::ProductOfLocals, Shape::FieldTower, Shape::Mixed}) {
    if (shape_name(s) == name) return s;
  }
  return std::nullopt;
}

namespace {

Vec random_vector(Rng& rng, std::size_t n, unsigned q) {
  Vec v(n);
  for (auto& x : v) x = static_cast<Scalar>(rng.below(q));
  return v;
}

}  // namespace

Algebra random_local_algebra(Rng& rng, const FieldPtr& field, std::size_t max_dim) {
  if (max_dim < 2) throw AlgebraError("a local algebra with a nonzero maximal ideal needs dimension 2");
  const std::size_t target = rng.between(2, max_dim);
  std::size_t d = 2;
  while (d * (d + 1) / 2 < target) ++d;
  d += rng.below(2);
  std::vector<std::vector<unsigned>> standard;
  for (unsigned total = 0; total < d; ++total) {
    for (unsigned i = 0; i <= total; ++i) standard.push_back({total - i, i});
  }
  const Algebra trunc = make_monomial_algebra(field, standard);
  const unsigned q = field->order();
  Subspace ideal = trunc.zero_space();
  std::size_t extra = rng.below(3);
  while (trunc.dim() - ideal.dim() > target || extra > 0) {
    if (trunc.dim() - ideal.dim() <= target) --extra;
    Vec g = random_vector(rng, trunc.dim(), q);
    g[0] = 0;
    const Vec gens[1] = {g};
    ideal = ideal.sum(trunc.product(trunc.full(), trunc.span(gens)));
    if (trunc.dim() - ideal.dim() < 2) {
      ideal = trunc.zero_space();
      extra = 0;
    }
  }
  return quotient(trunc, ideal).algebra;
}

Poly random_irreducible(Rng& rng, const FiniteField& field, std::size_t degree) {
  while (true) {
    Poly g(degree + 1);
    for (std::size_t i = 0; i < degree; ++i) g[i] = static_cast<Scalar>(rng.below(field.order()));
    g[degree] = 1;
    if (poly::is_irreducible(field, g)) return g;
  }
}

Algebra random_primary_quotient(Rng& rng, const FieldPtr& field, std::size_t f, std::size_t k) {
  const Poly g = random_irreducible(rng, *field, f);
  Poly h{1};
  for (std::size_t i = 0; i < k; ++i) h = poly::mul(*field, h, g);
  return make_poly_quotient(field, h);
}

void validate_spec(const GenSpec& spec) {
  unsigned p = 0, e = 0;
  if (!split_prime_power(spec.q, p, e)) throw AlgebraError("q must be a prime power");
  if (spec.q > 64) throw AlgebraError("generation supports q up to 64");
  if (spec.max_dim < 2 || spec.max_dim > kMaxGenDim) {
    throw AlgebraError("max_dim must lie in [2, " + std::to_string(kMaxGenDim) + "]");
  }
}

ExtensionGenerator::ExtensionGenerator(const GenSpec& spec) : spec_(spec), rng_(spec.seed) {
  validate_spec(spec);
  unsigned p = 0, e = 0;
  split_prime_power(spec.q, p, e);
  field_ = FiniteField::make(p, e);
}

Extension ExtensionGenerator::next() {
  for (std::size_t i = 0; i < kRejectionBudget; ++i) {
    ++stats_.attempts;
    if (auto ext = attempt()) {
      ++stats_.accepted;
      return std::move(*ext);
    }
  }
  throw BudgetExceeded("generator rejected " + std::to_string(kRejectionBudget) + " attempts for shape " +
                       shape_name(spec_.shape) + " (acceptance ratio " + std::to_string(stats_.acceptance_ratio()) +
                       ")");
}

std::optional<Extension> ExtensionGenerator::attempt() {
  const unsigned q = field_->order();
  const std::size_t max_dim = spec_.max_dim;
  auto with_random_base = [&](Algebra s, std::size_t max_gens) -> Extension {
    std::vector<Vec> gens;
    const std::size_t k = rng_.below(max_gens + 1);
    for (std::size_t i = 0; i < k; ++i) gens.push_back(random_vector(rng_, s.dim(), q));
    return make_extension_generated(std::move(s), gens);
  };

  switch (spec_.shape) {
    case Shape::FieldTower: {
      const Poly g = random_irreducible(rng_, *field_, max_dim);
      return make_extension_generated(make_poly_quotient(field_, g), {});
    }
    case Shape::LocalSubintegral: {
      Extension ext = with_random_base(random_local_algebra(rng_, field_, max_dim), 3);
      if (ext.trivial() || !is_subintegral(ext)) return std::nullopt;
      // The base must stay a non-field after reduction mod the conductor.
      const Subspace c = conductor(ext.algebra, ext.r(), ext.algebra.full());
      const LocalStructure lr = local_structure(ext.algebra, ext.r());
      if (c == lr.maximal_ideals[0]) return std::nullopt;
      return ext;
    }
    case Shape::ProductOfLocals: {
      const std::size_t factors = rng_.between(2, std::min<std::size_t>(3, max_dim));
      std::optional<Algebra> s;
      std::size_t used = 0;
      for (std::size_t i = 0; i < factors; ++i) {
        const std::size_t room = max_dim - used - (factors - i - 1);
        Algebra part = [&] {
          if (room >= 2 && rng_.below(2) == 0) return random_local_algebra(rng_, field_, room);
          const std::size_t f = rng_.between(1, std::min<std::size_t>(room, 3));
          const std::size_t k = rng_.between(1, room / f);
          return random_primary_quotient(rng_, field_, f, k);
        }();
        used += part.dim();
        s = s ? make_product(*s, part) : part;
      }
      Extension ext = with_random_base(std::move(*s), 2);
      if (ext.trivial()) return std::nullopt;
      return ext;
    }
    case Shape::Mixed: {
      Algebra s = [&] {
        if (max_dim < 3 || rng_.below(2) == 0) {
          const std::size_t deg = rng_.between(2, max_dim);
          Poly f = random_vector(rng_, deg + 1, q);
          f[deg] = 1;
          return make_poly_quotient(field_, f);
        }
        Algebra local = random_local_algebra(rng_, field_, max_dim - 1);
        const std::size_t room = max_dim - local.dim();
        return make_product(local, random_primary_quotient(rng_, field_, 1, rng_.between(1, room)));
      }();
      Extension ext = with_random_base(std::move(s), 2);
      if (ext.trivial()) return std::nullopt;
      return ext;
    }
  }
  return std::nullopt;
}

std::vector<Extension> random_extensions(const GenSpec& spec, GenStats* stats) {
  ExtensionGenerator gen(spec);
  std::vector<Extension> out;
  out.reserve(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i) out.push_back(gen.next());
  if (stats) *stats = gen.stats();
  return out;
}

}  // namespace ringlat
