#include "qkgr/gr3_path.hpp"

#include <stdexcept>

namespace qkgr {

namespace {

void require_gr3(const GrContext& ctx) {
  if (ctx.k != 3) throw std::invalid_argument("third-row reduction needs k = 3, got " + ctx.describe());
}

}  // namespace

Partition strip_third_row(const Partition& lambda) {
  if (lambda.length() != 3) throw std::invalid_argument("expected a three-row partition");
  return Partition({lambda[0] - lambda[2], lambda[1] - lambda[2], 0});
}

std::optional<IndexTuple> reduce_third_row(const GrContext& ctx, const IndexTuple& t) {
  require_gr3(ctx);
  const int s = t.lambda[2] + t.mu[2];
  const Partition nu_hat = seidel_down(ctx, t.nu, s);
  const int numerator = t.nu.boxes() - nu_hat.boxes() - 3 * s;
  if (numerator % ctx.n != 0) throw std::logic_error("third-row degree shift not integral");
  const int d_hat = t.d + numerator / ctx.n;
  if (d_hat < 0) return std::nullopt;
  return IndexTuple{strip_third_row(t.lambda), strip_third_row(t.mu), nu_hat, d_hat};
}

std::vector<PieriMonomial> giambelli_gr3(const GrContext& ctx, const Partition& mu) {
  require_gr3(ctx);
  require_fits(ctx, mu);
  if (mu[2] != 0) throw std::invalid_argument("two-factor Giambelli form needs mu_3 = 0");
  const auto monomial = [](Coeff sign, int a, int b) {
    PieriMonomial m{sign, {}};
    if (a > 0) m.factors.push_back(a);
    if (b > 0) m.factors.push_back(b);
    return m;
  };
  std::vector<PieriMonomial> recipe;
  if (mu[1] == 0) {
    recipe.push_back(monomial(1, mu[0], 0));
    return recipe;
  }
  recipe.push_back(monomial(1, mu[0], mu[1] - 1));
  for (int j = mu[0]; j <= ctx.width(); ++j) {
    recipe.push_back(monomial(1, j, mu[1]));
    recipe.push_back(monomial(-1, j, mu[1] - 1));
  }
  return recipe;
}

QKElement evaluate_recipe(const PieriFamily& family, const std::vector<PieriMonomial>& recipe,
                          const Partition& start) {
  QKElement out;
  const QKElement seed = QKElement::basis(start);
  for (const PieriMonomial& m : recipe) {
    QKElement v = seed;
    for (int a : m.factors) v = family.op(a).apply(family.basis(), v);
    out.add(v, m.sign);
  }
  return out;
}

Gr3Path::Gr3Path(std::shared_ptr<const PieriFamily> family) : family_(std::move(family)) {
  require_gr3(family_->context());
}

const QKElement& Gr3Path::reduced_product(const Partition& lambda, const Partition& mu) const {
  const Basis& basis = family_->basis();
  const auto key = std::make_pair(basis.index(lambda), basis.index(mu));
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  if (lambda[2] != 0 || mu[2] != 0) throw std::invalid_argument("reduced product needs empty third rows");
  QKElement value = evaluate_recipe(*family_, giambelli_gr3(context(), mu), lambda);
  std::lock_guard lock(mutex_);
  return cache_.emplace(key, std::move(value)).first->second;
}

QKElement Gr3Path::product(const Partition& lambda, const Partition& mu) const {
  const GrContext& ctx = context();
  const QKElement& base = reduced_product(strip_third_row(lambda), strip_third_row(mu));
  const int s = lambda[2] + mu[2];
  QKElement out;
  for (const auto& [term, c] : base.terms()) {
    out.add(seidel_up(ctx, term.partition, s), term.degree + seidel_degree(ctx, term.partition, s), c);
  }
  return out;
}

Coeff Gr3Path::structure_constant(const IndexTuple& t) const {
  const auto reduced = reduce_third_row(context(), t);
  if (!reduced) return 0;
  return reduced_product(reduced->lambda, reduced->mu).coefficient(reduced->nu, reduced->d);
}

}  // namespace qkgr
