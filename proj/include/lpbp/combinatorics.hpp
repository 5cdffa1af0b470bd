#pragma once

#include "lpbp/bigint.hpp"

namespace lpbp {

/// C(n, k); zero whenever n < 0, k < 0 or k > n.
BigCount binomial(long n, long k);

/// C(2n, n) / (n + 1). Throws DomainError for negative n.
BigCount catalan(long n);

}  // namespace lpbp
