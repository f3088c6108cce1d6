#pragma once

#include "qrep/bivariate_series.hpp"
#include "qrep/faber.hpp"
#include "qrep/psi.hpp"
#include "qrep/replication.hpp"
#include "qrep/report.hpp"

#include <cstdint>
#include <string>

namespace qrep {

/// t(p) - t(q) with p-exponents -1..P and q-exponents -Q..Q.
BivariateSeries dual_difference(const LaurentSeries& t, std::int64_t P, std::int64_t Q);

/// p^-1 exp(-sum_{n>0} X_n(t) p^n) = t(p) - t(q), compared monomial by
/// monomial for p-exponents -1..P and q-exponents -Q..Q. t must be known
/// through q^{P + Q + max(P, Q) + 3}; see product_precision().
Report faber_generating_check(const std::string& name, const LaurentSeries& t, std::int64_t P, std::int64_t Q);

/// How far (through which q-exponent) t must be known for the two product checks.
std::int64_t product_precision(std::int64_t P, std::int64_t Q);

/// Bound B such that the product checks need F^{(s)}_k for all s^2 k <= B,
/// i.e. grids reaching m <= sqrt(B), n <= B.
std::int64_t product_family_bound(std::int64_t P, std::int64_t Q);

/// p^-1 exp(-sum (psi(sm,sn) F^{(s)}_{mn} + h^{(s)}_{mn}) / (2s) q^{sm} p^{sn}) = t(p) - t(q),
/// the sum over n > 0, m in {-1} u {1, 2, ...}, s >= 1. The base t is column 1 of the t grid.
Report super_product_check(const CoefficientGrid& t, const CoefficientGrid& t0, const PsiCharacter& psi,
                           const ReplicateFamily& family_t, const ReplicateFamily& family_t0, std::int64_t P, std::int64_t Q);

/// F_{m,n} = sum_{s | (m,n)} (1/s) F^{(s)}_{mn/s^2} for m, n >= 1, mn <= bound,
/// with F_{m,n} = psi(m,n)(2 H_{m,n} - h_{m,n}).
Report condition_b_check(const CoefficientGrid& t, const CoefficientGrid& t0, const PsiCharacter& psi,
                         const ReplicateFamily& family_t, std::int64_t bound);

} // namespace qrep
