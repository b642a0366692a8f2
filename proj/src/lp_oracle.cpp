#include "fractri/lp_oracle.hpp"

#include <string>
#include <vector>

#include "fractri/errors.hpp"

namespace fractri {
namespace {

// Dense phase-one tableau for A x + a = 1, x, a >= 0, minimizing sum(a).
// Columns 0..t-1 are triangles, t..t+m-1 the artificials.
//
// Integer-preserving (fraction-free) form: every stored entry is an integer
// and the true tableau is the stored one divided by `scale_`, the previous
// pivot. Each update's division is exact, so no gcds are ever taken.
class PhaseOneTableau {
 public:
  PhaseOneTableau(const Graph& g, const std::vector<Triangle>& triangles)
      : rows_(static_cast<std::size_t>(g.edge_count())),
        cols_(triangles.size() + rows_),
        structural_(triangles.size()),
        tableau_(rows_ + 1, std::vector<BigInt>(cols_ + 1)),
        retired_(cols_, false),
        basis_(rows_),
        scale_(1) {
    // Row rows_ is the reduced-cost row; column cols_ holds right-hand sides,
    // with minus the objective in the reduced-cost row.
    std::vector<BigInt>& cost = tableau_[rows_];
    for (std::size_t j = 0; j < triangles.size(); ++j) {
      const Triangle& t = triangles[j];
      for (EdgeId e : {g.edge_id(t.a, t.b), g.edge_id(t.a, t.c), g.edge_id(t.b, t.c)}) {
        tableau_[static_cast<std::size_t>(e)][j] = 1;
        cost[j] -= 1;
      }
    }
    for (std::size_t i = 0; i < rows_; ++i) {
      tableau_[i][structural_ + i] = 1;
      tableau_[i][cols_] = 1;
      basis_[i] = structural_ + i;
    }
    cost[cols_] = -static_cast<long>(rows_);
  }

  // Runs to optimality and returns the pivot count. Entering columns follow
  // the most negative reduced cost; after a run of degenerate pivots the
  // rule switches to smallest index (Bland) until the objective drops, so
  // no basis can repeat.
  std::size_t run() {
    const std::vector<BigInt>& cost = tableau_[rows_];
    std::size_t pivots = 0;
    std::size_t degenerate_run = 0;
    while (true) {
      const bool bland = degenerate_run >= kDegenerateLimit;
      std::size_t entering = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (retired_[j] || cost[j] >= 0) continue;
        if (entering == cols_ || (!bland && cost[j] < cost[entering])) entering = j;
        if (bland) break;
      }
      if (entering == cols_) return pivots;
      // Ratio test by cross-multiplication; ties go to the smallest basic index.
      std::size_t leaving = rows_;
      for (std::size_t i = 0; i < rows_; ++i) {
        const BigInt& a = tableau_[i][entering];
        if (a <= 0) continue;
        if (leaving == rows_) {
          leaving = i;
          continue;
        }
        const BigInt lhs = tableau_[i][cols_] * tableau_[leaving][entering];
        const BigInt rhs = tableau_[leaving][cols_] * a;
        if (lhs < rhs || (lhs == rhs && basis_[i] < basis_[leaving])) leaving = i;
      }
      // Phase one is bounded below by zero, so a ratio row always exists.
      if (leaving == rows_) throw std::logic_error("phase-one simplex reported unbounded");
      degenerate_run = tableau_[leaving][cols_] == 0 ? degenerate_run + 1 : 0;
      // An artificial that leaves the basis is never needed again.
      if (basis_[leaving] >= structural_) retired_[basis_[leaving]] = true;
      pivot(leaving, entering);
      ++pivots;
    }
  }

  bool objective_is_zero() const { return tableau_[rows_][cols_] == 0; }

  std::vector<Rational> primal() const {
    std::vector<Rational> x(structural_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < structural_) x[basis_[i]] = Rational(tableau_[i][cols_], scale_);
    }
    return x;
  }

 private:
  static constexpr std::size_t kDegenerateLimit = 50;

  // row_i <- (p * row_i - f * row_r) / scale for every row but r; the pivot
  // row stays as it is and p becomes the new scale.
  void pivot(std::size_t r, std::size_t c) {
    const std::vector<BigInt>& prow = tableau_[r];
    const mpz_srcptr p = prow[c].backend().data();
    const mpz_srcptr d = scale_.backend().data();
    std::vector<std::size_t> live;
    live.reserve(cols_ + 1);
    for (std::size_t j = 0; j <= cols_; ++j) {
      if (j == cols_ || !retired_[j]) live.push_back(j);
    }
    BigInt factor;
    for (std::size_t i = 0; i <= rows_; ++i) {
      if (i == r) continue;
      std::vector<BigInt>& row = tableau_[i];
      factor = row[c];
      const mpz_srcptr f = factor.backend().data();
      const bool has_factor = mpz_sgn(f) != 0;
      for (std::size_t j : live) {
        mpz_ptr x = row[j].backend().data();
        const mpz_srcptr y = prow[j].backend().data();
        const bool x_zero = mpz_sgn(x) == 0;
        if (x_zero && (!has_factor || mpz_sgn(y) == 0)) continue;
        mpz_mul(x, x, p);
        if (has_factor) mpz_submul(x, f, y);
        mpz_divexact(x, x, d);
      }
    }
    scale_ = prow[c];
    basis_[r] = c;
  }

  std::size_t rows_;
  std::size_t cols_;
  std::size_t structural_;
  std::vector<std::vector<BigInt>> tableau_;
  std::vector<bool> retired_;
  std::vector<std::size_t> basis_;
  BigInt scale_;
};

}  // namespace

FeasibilityVerdict lp_feasible(const Graph& g, const LpOptions& options) {
  FeasibilityVerdict verdict;
  if (g.edge_count() == 0) {
    verdict.witness = Decomposition{};
    return verdict;
  }
  const std::vector<Triangle> triangles = enumerate_triangles(g);
  if (triangles.size() > options.max_triangles) {
    throw GuardrailExceeded("LP oracle: " + std::to_string(triangles.size()) + " triangles exceed cap of " +
                            std::to_string(options.max_triangles));
  }
  for (int t_e : triangle_counts(g)) {
    if (t_e == 0) return verdict;
  }
  PhaseOneTableau tableau(g, triangles);
  verdict.pivots = tableau.run();
  if (!tableau.objective_is_zero()) return verdict;
  const std::vector<Rational> x = tableau.primal();
  Decomposition witness;
  witness.entries.reserve(triangles.size());
  for (std::size_t j = 0; j < triangles.size(); ++j) witness.entries.push_back({triangles[j], x[j]});
  verdict.witness = std::move(witness);
  return verdict;
}

}  // namespace fractri
