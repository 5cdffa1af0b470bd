#include "lpbp/combinatorics.hpp"

#include "lpbp/errors.hpp"

namespace lpbp {

BigCount binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return BigCount(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return BigCount(std::move(r));
}

BigCount catalan(long n) {
  if (n < 0) throw DomainError("catalan: n must be nonnegative, got " + std::to_string(n));
  return binomial(2 * n, n).exact_div(BigInt(n + 1));
}

}  // namespace lpbp
