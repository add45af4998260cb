#include "udom/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace udom {

bool lemma1_check(const Graph& g, const FipoPartition& fipo, int alpha) {
  if (auto problem = fipo_violation(g, fipo); !problem.empty()) throw std::invalid_argument("invalid FIPO partition: " + problem);
  const int d = fipo.f.size() + fipo.i.size();
  if (d <= alpha) return true;
  return fipo.i.size() <= alpha - 2;
}

Rational gamma_upper_bound_exact(int n, int alpha) {
  if (alpha < 1 || alpha > n) throw std::invalid_argument("gamma_upper_bound: need 1 <= alpha <= n");
  return max(Rational(alpha), Rational(n, 2) + Rational(alpha, 2) - 1);
}

int gamma_upper_bound(int n, int alpha) { return static_cast<int>(gamma_upper_bound_exact(n, alpha).floor()); }

Rational gamma_upper_bound_degree(int n, int alpha, int delta_min, int delta_max) {
  if (delta_min < 0 || delta_min > delta_max || delta_max < 1) {
    throw std::invalid_argument("gamma_upper_bound_degree: need 0 <= delta <= Delta, Delta >= 1");
  }
  if (alpha < 1 || alpha > n) throw std::invalid_argument("gamma_upper_bound_degree: need 1 <= alpha <= n");
  const Rational spread(delta_max - delta_min, delta_max);
  return max(Rational(alpha), Rational(n, 2) + Rational(alpha, 2) * spread - spread);
}

bool co_gamma_bounds(int n, int tau, int Gamma) {
  const Rational co(n - Gamma);
  return Rational(tau, 2) + 1 <= co && co <= Rational(tau);
}

bool co_gamma_boundary_case(int tau, int alpha, int Gamma) { return Gamma == alpha && tau < 2; }

bool prune(int n, int alpha_hat, int delta_max, int delta_min, int target) {
  if (n <= 0) return target > 0;
  alpha_hat = std::clamp(alpha_hat, 1, n);
  Rational bound = gamma_upper_bound_exact(n, alpha_hat);
  if (delta_max >= 1) bound = std::min(bound, gamma_upper_bound_degree(n, alpha_hat, delta_min, delta_max));
  return Rational(target) > bound;
}

}  // namespace udom
