#include "qkgr/engine.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace qkgr {

std::vector<GiambelliStep> giambelli_recursion(const Basis& basis) {
  const GrContext& ctx = basis.context();
  const std::size_t size = basis.size();

  // Corrections have at most as many rows as lambda and are larger in basis
  // order, so sorting by (rows ascending, basis order descending) puts every
  // dependency first.
  std::vector<std::size_t> order(size);
  for (std::size_t i = 0; i < size; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const int ra = basis.at(a).nonzero_rows();
    const int rb = basis.at(b).nonzero_rows();
    if (ra != rb) return ra < rb;
    return a > b;
  });

  std::vector<bool> done(size, false);
  std::vector<GiambelliStep> steps;
  steps.reserve(size);
  for (std::size_t target : order) {
    const Partition& lambda = basis.at(target);
    GiambelliStep step;
    step.target = target;
    if (!lambda.empty_shape()) {
      std::vector<int> parent(lambda.vec().begin() + 1, lambda.vec().end());
      parent.push_back(0);
      step.special = lambda[0];
      step.parent = basis.index(Partition(std::move(parent)));
      const QKElement expansion = classical_pieri(ctx, basis.at(step.parent), step.special);
      if (expansion.coefficient(lambda, 0) != 1) throw std::logic_error("Giambelli leading term is not 1");
      if (!done[step.parent]) throw std::logic_error("Giambelli parent not yet available");
      for (const auto& [term, c] : expansion.terms()) {
        if (term.partition == lambda) continue;
        const std::size_t j = basis.index(term.partition);
        if (!done[j]) throw std::logic_error("Giambelli correction " + term.partition.to_string() + " out of order");
        step.corrections.emplace_back(j, c);
      }
    }
    done[target] = true;
    steps.push_back(std::move(step));
  }
  return steps;
}

struct QKEngine::State {
  GrContext ctx;
  int escalations = 0;
  // q * sum_nu b_{lambda,nu}(q) O^nu = G_lambda(P) O^0 - O^lambda; b stored as
  // coefficient lists indexed by degree.
  std::vector<std::vector<std::pair<std::size_t, std::vector<Coeff>>>> correction;
  bool has_correction = false;
  std::vector<std::shared_ptr<const std::vector<SparseProduct>>> columns;
};

namespace {

std::vector<QVector> giambelli_images(const PieriFamily& family, const std::vector<GiambelliStep>& steps,
                                      std::size_t mu, int trunc) {
  const std::size_t size = family.basis().size();
  std::vector<QVector> u(size);
  QVector scratch;
  for (const GiambelliStep& step : steps) {
    if (step.special == 0) {
      u[step.target] = QVector::unit(size, trunc, mu);
      continue;
    }
    family.op(step.special).apply(u[step.parent], scratch);
    for (const auto& [j, c] : step.corrections) scratch.axpy(-c, u[j]);
    u[step.target] = std::move(scratch);
  }
  return u;
}

SparseProduct sparse_of(const QVector& v) {
  SparseProduct out;
  for (int d = 0; d <= v.trunc(); ++d) {
    for (std::size_t i = 0; i < v.basis_size(); ++i) {
      if (const Coeff c = v.at(i, d); c != 0) out.push_back({static_cast<std::uint32_t>(i), d, c});
    }
  }
  return out;
}

constexpr int kMaxEscalations = 8;

}  // namespace

QKEngine::QKEngine(const GrContext& ctx, EngineOptions options)
    : options_(options), family_(std::make_shared<const PieriFamily>(ctx)), steps_(giambelli_recursion(family_->basis())) {
  if (options_.jobs < 1) options_.jobs = 1;
  if (ctx.k == 3) gr3_ = std::make_unique<Gr3Path>(family_);
  auto initial = std::make_shared<State>();
  initial->ctx = ctx;
  state_ = std::move(initial);
}

std::shared_ptr<QKEngine::State> QKEngine::state() const {
  std::lock_guard lock(mutex_);
  if (state_->columns.empty()) {
    // Lazily derive the q-adic correction for the current truncation.
    State& s = *state_;
    const std::size_t size = basis().size();
    const std::size_t empty = basis().index(empty_partition(s.ctx));
    const auto u = giambelli_images(*family_, steps_, empty, s.ctx.D);
    s.correction.assign(size, {});
    for (std::size_t lam = 0; lam < size; ++lam) {
      for (std::size_t nu = 0; nu < size; ++nu) {
        const Coeff constant = u[lam].at(nu, 0) - (nu == lam ? 1 : 0);
        if (constant != 0) throw std::logic_error("Giambelli image has a wrong classical part");
        std::vector<Coeff> b(s.ctx.D, 0);
        bool nonzero = false;
        for (int d = 1; d <= s.ctx.D; ++d) {
          b[d - 1] = u[lam].at(nu, d);
          nonzero = nonzero || b[d - 1] != 0;
        }
        if (nonzero) {
          s.correction[lam].emplace_back(nu, std::move(b));
          s.has_correction = true;
        }
      }
    }
    s.columns.assign(size, nullptr);
  }
  return state_;
}

GrContext QKEngine::context() const { return state()->ctx; }

int QKEngine::escalations() const { return state()->escalations; }

void QKEngine::escalate(const std::shared_ptr<State>& seen) const {
  std::lock_guard lock(mutex_);
  if (state_ != seen) return;
  if (seen->escalations >= kMaxEscalations) {
    throw TruncationError("products did not stabilize below degree " + std::to_string(seen->ctx.D));
  }
  auto next = std::make_shared<State>();
  next->ctx = seen->ctx.with_truncation(seen->ctx.D + 2);
  next->escalations = seen->escalations + 1;
  state_ = std::move(next);
}

std::vector<SparseProduct> QKEngine::compute_column(const State& state, std::size_t mu) const {
  const int D = state.ctx.D;
  const std::vector<QVector> u = giambelli_images(*family_, steps_, mu, D);
  std::vector<QVector> x = u;
  if (state.has_correction) {
    // x_lambda = u_lambda - q sum_nu b_{lambda,nu}(q) x_nu; every pass fixes
    // one more q-degree, so D + 1 passes always suffice.
    bool converged = false;
    for (int pass = 0; pass <= D + 1 && !converged; ++pass) {
      std::vector<QVector> next = u;
      for (std::size_t lam = 0; lam < u.size(); ++lam) {
        for (const auto& [nu, b] : state.correction[lam]) {
          for (std::size_t e = 0; e < b.size(); ++e) {
            if (b[e] != 0) next[lam].axpy_shifted(-b[e], static_cast<int>(e) + 1, x[nu]);
          }
        }
      }
      converged = next == x;
      x = std::move(next);
    }
    if (!converged) throw TruncationError("q-adic correction did not converge; D too small");
  }
  std::vector<SparseProduct> out;
  out.reserve(x.size());
  for (const QVector& v : x) out.push_back(sparse_of(v));
  return out;
}

std::shared_ptr<const std::vector<SparseProduct>> QKEngine::column_ptr(std::size_t mu) const {
  for (;;) {
    const std::shared_ptr<State> s = state();
    {
      std::lock_guard lock(mutex_);
      if (s->columns[mu]) return s->columns[mu];
    }
    auto col = std::make_shared<const std::vector<SparseProduct>>(compute_column(*s, mu));
    const bool reaches_top = std::any_of(col->begin(), col->end(), [&](const SparseProduct& p) {
      return !p.empty() && p.back().degree >= s->ctx.D;
    });
    if (reaches_top && options_.escalate) {
      escalate(s);
      continue;
    }
    std::lock_guard lock(mutex_);
    if (state_ != s) continue;
    if (!s->columns[mu]) s->columns[mu] = col;
    return s->columns[mu];
  }
}

std::vector<SparseProduct> QKEngine::column(const Partition& mu) const {
  return *column_ptr(basis().index(mu));
}

void QKEngine::build_table() const {
  const std::size_t size = basis().size();
  const int workers = std::min<int>(options_.jobs, static_cast<int>(size));
  if (workers <= 1) {
    for (std::size_t mu = 0; mu < size; ++mu) column_ptr(mu);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      try {
        for (std::size_t mu = next++; mu < size; mu = next++) column_ptr(mu);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  // An escalation mid-build leaves earlier columns behind; fill them in.
  for (std::size_t mu = 0; mu < size; ++mu) column_ptr(mu);
}

QKElement QKEngine::to_element(const SparseProduct& p) const {
  QKElement out;
  for (const ProductEntry& e : p) out.add(basis().at(e.index), e.degree, e.coeff);
  return out;
}

QKElement QKEngine::product(const Partition& lambda, const Partition& mu, ProductRoute route) const {
  if (route == ProductRoute::automatic) route = gr3_ ? ProductRoute::third_row : ProductRoute::lift;
  if (route == ProductRoute::third_row) {
    if (!gr3_) throw std::invalid_argument("third-row route needs k = 3");
    return gr3_->product(lambda, mu);
  }
  const std::size_t lam = basis().index(lambda);
  return to_element((*column_ptr(basis().index(mu)))[lam]);
}

QKElement QKEngine::product_mod(const QKElement& a, const QKElement& b, ProductRoute route) const {
  const int D = context().D;
  QKElement out;
  for (const auto& [ta, ca] : a.terms()) {
    for (const auto& [tb, cb] : b.terms()) {
      const int shift = ta.degree + tb.degree;
      if (shift > D) continue;
      const QKElement p = product(ta.partition, tb.partition, route);
      const Coeff scale = checked_mul(ca, cb);
      for (const auto& [t, c] : p.terms()) {
        if (t.degree + shift <= D) out.add(t.partition, t.degree + shift, checked_mul(scale, c));
      }
    }
  }
  return out;
}

QKElement QKEngine::product(const QKElement& a, const QKElement& b, ProductRoute route) const {
  QKElement out;
  for (const auto& [ta, ca] : a.terms()) {
    for (const auto& [tb, cb] : b.terms()) {
      out.add(product(ta.partition, tb.partition, route).shifted(ta.degree + tb.degree), checked_mul(ca, cb));
    }
  }
  out.check_truncation(context());
  return out;
}

Coeff QKEngine::structure_constant(const Partition& lambda, const Partition& mu, const Partition& nu, int d) const {
  const auto col = column_ptr(basis().index(mu));
  const SparseProduct& p = (*col)[basis().index(lambda)];
  const auto target = static_cast<std::uint32_t>(basis().index(nu));
  const auto it = std::lower_bound(p.begin(), p.end(), std::pair{d, target}, [](const ProductEntry& e, const auto& key) {
    return std::pair{e.degree, e.index} < key;
  });
  return it != p.end() && it->degree == d && it->index == target ? it->coeff : 0;
}

Coeff QKEngine::structure_constant(const IndexTuple& t) const {
  return structure_constant(t.lambda, t.mu, t.nu, t.d);
}

int QKEngine::observed_max_degree() const {
  build_table();
  const auto s = state();
  int best = -1;
  for (const auto& col : s->columns) {
    for (const SparseProduct& p : *col) {
      if (!p.empty()) best = std::max(best, p.back().degree);
    }
  }
  return best;
}

QKElement QKEngine::ideal_sheaf(const Partition& mu) const {
  QKElement out;
  for (const SignedPartition& sp : rook_strips_over(context(), mu)) out.add(sp.partition, 0, sp.sign);
  return out;
}

Coeff QKEngine::pairing(const Partition& lambda, const Partition& mu) const {
  Coeff total = 0;
  const QKElement xi = ideal_sheaf(mu);
  for (const auto& [term, c] : xi.terms()) {
    const QKElement classical = product(lambda, term.partition, ProductRoute::lift).degree_part(0);
    const std::vector<Coeff> chi = euler_char(classical);
    if (!chi.empty()) total = checked_add(total, checked_mul(c, chi[0]));
  }
  return total;
}

bool QKEngine::verify_recursion(const Partition& lambda, const Partition& mu, const Partition& kappa) const {
  const QKElement a = QKElement::basis(lambda);
  const QKElement b = QKElement::basis(mu);
  const QKElement c = QKElement::basis(kappa);
  const auto lift = ProductRoute::lift;
  return product_mod(product_mod(a, b, lift), c, lift) == product_mod(a, product_mod(b, c, lift), lift);
}

void QKEngine::write_jsonl(std::ostream& out) const {
  build_table();
  const std::size_t size = basis().size();
  for (std::size_t lam = 0; lam < size; ++lam) {
    for (std::size_t mu = 0; mu < size; ++mu) {
      const auto col = column_ptr(mu);
      nlohmann::ordered_json record;
      record["lambda"] = basis().at(lam).vec();
      record["mu"] = basis().at(mu).vec();
      nlohmann::ordered_json terms = nlohmann::ordered_json::array();
      for (const ProductEntry& e : (*col)[lam]) {
        terms.push_back({{"q", e.degree}, {"partition", basis().at(e.index).vec()}, {"coeff", e.coeff}});
      }
      record["terms"] = std::move(terms);
      out << record.dump() << '\n';
    }
  }
}

void QKEngine::write_csv(std::ostream& out) const {
  build_table();
  const std::size_t size = basis().size();
  out << "lambda,mu,q,nu,coeff\n";
  for (std::size_t lam = 0; lam < size; ++lam) {
    for (std::size_t mu = 0; mu < size; ++mu) {
      const auto col = column_ptr(mu);
      for (const ProductEntry& e : (*col)[lam]) {
        out << '"' << basis().at(lam).to_string() << "\",\"" << basis().at(mu).to_string() << "\"," << e.degree
            << ",\"" << basis().at(e.index).to_string() << "\"," << e.coeff << '\n';
      }
    }
  }
}

}  // namespace qkgr
