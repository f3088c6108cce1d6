#pragma once

#include "qrep/catalog.hpp"
#include "qrep/faber.hpp"
#include "qrep/grid_store.hpp"
#include "qrep/psi.hpp"
#include "qrep/report.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace qrep {

/// The quantity F_{m,n} that replicates are extracted from: either
/// psi(m,n) (2 H_{m,n} - h_{m,n}) for a pair of grids, or h_{m,n} of a single grid.
class FaberSource {
public:
    static FaberSource super(const CoefficientGrid& t, const CoefficientGrid& t0, PsiCharacter psi);
    static FaberSource plain(const CoefficientGrid& g);

    /// m, n >= 1; PrecisionError when a grid does not reach (m, n).
    Rational value(std::int64_t m, std::int64_t n) const;
    bool covers(std::int64_t m, std::int64_t n) const;

private:
    FaberSource(const CoefficientGrid* t, const CoefficientGrid* t0, std::optional<PsiCharacter> psi) : t_(t), t0_(t0), psi_(psi) {}

    const CoefficientGrid* t_;
    const CoefficientGrid* t0_;
    std::optional<PsiCharacter> psi_;
};

/// F^{(s)}_k = s sum_{d | s} mu(d) F_{s/d, s d k}.
///
/// Stored for k >= 1 up to a per-s limit. Indices k <= 0 follow the
/// bookkeeping convention: 1 at k = -1, 0 otherwise.
class ReplicateFamily {
public:
    Rational get(std::int64_t s, std::int64_t k) const;
    bool covers(std::int64_t s, std::int64_t k) const;
    std::int64_t s_max() const { return values_.empty() ? 0 : values_.rbegin()->first; }
    std::int64_t k_max(std::int64_t s) const;
    /// Whether every stored F^{(s)}_k is an integer; observational only.
    bool integral(std::int64_t s) const;

private:
    friend ReplicateFamily extract_replicates(const FaberSource&, std::int64_t, std::int64_t);
    friend ReplicateFamily extract_replicates_bounded(const FaberSource&, std::int64_t);
    void fill(const FaberSource& src, std::int64_t s, std::int64_t k_max);

    std::map<std::int64_t, std::vector<Rational>> values_;
};

/// Rectangle: 1 <= s <= s_max, 1 <= k <= k_max.
ReplicateFamily extract_replicates(const FaberSource& src, std::int64_t s_max, std::int64_t k_max);
/// Every (s, k) with s^2 k <= bound, which is what reconstructing F_{m,n}
/// for mn <= bound needs. Reads F_{m,n} for m <= sqrt(bound), n <= bound.
ReplicateFamily extract_replicates_bounded(const FaberSource& src, std::int64_t bound);

/// H_{a,b} = H_{c,d} whenever ab = cd <= bound and gcd(a,b) = gcd(c,d).
Report replicable_check(const CoefficientGrid& g, std::int64_t bound);

/// Same pattern for psi(a,b)(2 H_{a,b} - h_{a,b}).
Report super_check(const CoefficientGrid& t, const CoefficientGrid& t0, const PsiCharacter& psi, std::int64_t bound);

/// Levels and primes for which the U_p identity is claimed.
bool lemma_aa_applies(std::int64_t level, std::int64_t p);

/// 2 X_{pn}(t)|U_p - X_{pn}(t0)|U_p = (1/p)(2 X_n(t) - X_n(t0)) for n <= n_max,
/// compared as Laurent series through q^order, pole parts included.
/// DomainError for a (level, p) pair without the identity.
Report lemma_aa_check(const Catalog& c, std::int64_t level, std::int64_t p, std::int64_t n_max, std::int64_t order);

/// Level 10: 2 X_{2n}(t)|U_2 - X_{2n}(t0)|U_2
///   = 1/4 (2 X_n(t2) - X_n(t02)) + 1/4 (2 X_n(t) - X_n(t0)),
/// with t2, t02 the level-5 Hauptmoduls, through q^order.
Report lemma_ii_check(const Catalog& c, std::int64_t n_max, std::int64_t order);

/// Level 12: chi(m) H_{2^k m, r} = (-1)^k eps(r) H_{m, 2^k r} for odd m, r,
/// eps(r) = 1 for r = 3 mod 4 and -1 for r = 1 mod 4.
Report lemma_ff_check(GridStore& store, std::int64_t m_max, std::int64_t r_max, std::int64_t k_max);

/// Level 10: F_{2^k m, r} = (-1)^k F_{m, 2^k r} with F = 2H - h, odd m <= m_max, odd r.
Report lemma_jj_check(GridStore& store, std::int64_t r_max, std::int64_t k_max, std::int64_t m_max);

/// Level 12: h_{2^k m, r} = 0 for m <= m_max, odd r <= r_max, 1 <= k <= k_max.
Report koike_vanishing_check(GridStore& store, std::int64_t r_max, std::int64_t k_max, std::int64_t m_max);

} // namespace qrep
