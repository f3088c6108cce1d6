#include "oracles/oracles.hpp"

#include "qrep/catalog.hpp"
#include "qrep/errors.hpp"
#include "qrep/grid_store.hpp"
#include "qrep/number_theory.hpp"
#include "qrep/psi.hpp"
#include "qrep/replication.hpp"
#include "qrep/report.hpp"

#include <doctest.h>

#include <random>

using namespace qrep;

namespace {

const Catalog& catalog()
{
    static const Catalog c = Catalog::load(QREP_TEST_CONFIG);
    return c;
}

GridStore& store()
{
    static GridStore s(catalog());
    return s;
}

std::string t_name(int level) { return "t1_" + std::to_string(level); }
std::string t0_name(int level) { return "t0_" + std::to_string(level); }

// Test-side psi. Shared prime powers are removed through gcds, and the odd
// parts are read off by repeated halving of the even argument.
namespace ref {

long g(long a, long b) { return b == 0 ? a : g(b, a % b); }

long prime_part(long n, long p)
{
    long r = 1;
    while (n % p == 0) {
        n /= p;
        r *= p;
    }
    return r;
}

bool pm1(long x, long n) { return x % n == 1 || x % n == n - 1; }
int base(long b, long n) { return pm1(b, n) ? 1 : -1; }
int chi(long n) { return n % 4 == 1 ? 1 : n % 4 == 3 ? -1 : 0; }

int psi(int level, long a, long b)
{
    const long common = g(a, b);
    if (level == 5 || level == 8) {
        const long pk = prime_part(common, level == 5 ? 5 : 2);
        return pm1(a / pk, level) || pm1(b / pk, level) ? 1 : -1;
    }
    const long q = level == 12 ? 3 : 5;
    const long strip = prime_part(common, 2) * prime_part(common, q);
    a /= strip;
    b /= strip;
    if (a % 2 == 1 && b % 2 == 1) return pm1(a, level) || pm1(b, level) ? 1 : -1;
    if (b % 2 == 0) std::swap(a, b);
    int k = 0;
    long n = a;
    while (n % 2 == 0) {
        n /= 2;
        ++k;
    }
    const int sk = k % 2 == 0 ? 1 : -1;
    if (g(b, 2 * q) == 1) return base(b, level);
    if (level == 12) return sk * (b % 4 == 3 ? 1 : -1) * chi(n) * base(n, 12);
    return sk * base(n, 10);
}

} // namespace ref

} // namespace

TEST_CASE("mobius")
{
    CHECK(mobius(1) == 1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(12) == 0);
    CHECK(mobius(30) == -1);
    for (std::int64_t n = 1; n <= 500; ++n) CHECK(mobius(n) == oracle::mobius(n));
}

TEST_CASE("Mobius pairing recovers a function from its inverse transform")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dist(-50, 50);
    std::vector<long> G(121);
    for (auto& x : G) x = dist(rng);
    for (std::int64_t n = 1; n <= 120; ++n) {
        long back = 0;
        for (auto d : divisors(n)) {
            long gd = 0;
            for (auto e : divisors(n / d)) gd += mobius(e) * G[static_cast<std::size_t>(n / d / e)];
            back += gd;
        }
        CHECK(back == G[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("psi examples")
{
    CHECK(psi_base(12, 11) == 1);
    CHECK(psi_base(8, 3) == -1);
    CHECK(psi_base(5, 4) == 1);
    CHECK(psi_base(10, 3) == -1);
    CHECK(psi_pair(8, 2, 2) == 1);
    CHECK(psi_pair(12, 4, 9) == -1);
    CHECK(psi_pair(10, 2, 5) == -1);
    CHECK(psi_pair(12, 3, 5) == -1);
    CHECK_THROWS_AS(psi_base(12, 3), DomainError);
    CHECK_THROWS_AS(psi_base(10, 4), DomainError);
    CHECK_THROWS_AS(PsiCharacter(7), DomainError);
    CHECK_THROWS_AS(psi_pair(5, 0, 3), DomainError);
}

TEST_CASE("psi agrees with the test-side rules and has its invariants")
{
    for (int level : {5, 8, 10, 12}) {
        CAPTURE(level);
        const PsiCharacter psi(level);
        for (long a = 1; a <= 100; ++a) {
            CHECK(psi.pair(a, 1) == 1);
            for (long b = 1; b <= 100; ++b) {
                CAPTURE(a);
                CAPTURE(b);
                const int v = psi.pair(a, b);
                CHECK((v == 1 || v == -1));
                CHECK(v == psi.pair(b, a));
                CHECK(v == ref::psi(level, a, b));
            }
        }
    }
}

TEST_CASE("psi only sees reduced arguments")
{
    // Scaling both arguments by the designated primes changes nothing.
    const std::pair<int, std::vector<long>> scales[] = {{5, {5, 25}}, {8, {2, 4, 8}}, {10, {2, 5, 20}}, {12, {2, 3, 6, 36}}};
    for (const auto& [level, factors] : scales)
        for (long f : factors)
            for (long a = 1; a <= 30; ++a)
                for (long b = 1; b <= 30; ++b) CHECK(psi_pair(level, f * a, f * b) == psi_pair(level, a, b));
}

TEST_CASE("trivial psi is constant")
{
    const auto t = PsiCharacter::trivial(12);
    CHECK(t.level() == 12);
    CHECK(t.rule() == PsiCharacter::Rule::trivial);
    for (long a = 1; a <= 20; ++a)
        for (long b = 1; b <= 20; ++b) CHECK(t.pair(a, b) == 1);
}

TEST_CASE("replicable_check agrees with the brute-force quadruple oracle")
{
    const std::int64_t bound = 24;
    for (const std::string name : {"bigJ", "t0_5", "t0_8", "t0_10", "t0_12", "t1_5", "t1_12"}) {
        CAPTURE(name);
        const auto g = store().get(name, bound, bound);
        const auto r = replicable_check(*g, bound);
        const int bad = oracle::replicability_violations([&](std::int64_t a, std::int64_t b) { return g->get(a, b); }, bound);
        CHECK(r.passed() == (bad == 0));
        CHECK(r.check_id == "replicable");
    }
}

TEST_CASE("replicable and super checks at bound 40")
{
    for (const std::string name : {"bigJ", "t0_5", "t0_8", "t0_10", "t0_12"}) {
        CAPTURE(name);
        CHECK(replicable_check(*store().get(name, 40, 40), 40).passed());
    }
    const auto t12 = replicable_check(*store().get("t1_12", 24, 24), 24);
    CHECK_FALSE(t12.passed());
    CHECK_FALSE(t12.violations.empty());

    for (int level : {5, 8, 10, 12}) {
        CAPTURE(level);
        const auto t = store().get(t_name(level), 40, 40);
        const auto t0 = store().get(t0_name(level), 40, 40);
        const auto r = super_check(*t, *t0, PsiCharacter(level), 40);
        CHECK(r.passed());
        CHECK(r.level == level);
        CHECK(r.comparisons > 0);
    }
    const auto trivial = super_check(*store().get("t1_12", 40, 40), *store().get("t0_12", 40, 40), PsiCharacter::trivial(12), 40);
    CHECK_FALSE(trivial.passed());
}

TEST_CASE("super_check agrees with the brute-force oracle on F = psi (2H - h)")
{
    for (int level : {5, 8, 10, 12}) {
        CAPTURE(level);
        const auto t = store().get(t_name(level), 30, 30);
        const auto t0 = store().get(t0_name(level), 30, 30);
        for (const auto& psi : {PsiCharacter(level), PsiCharacter::trivial(level)}) {
            const bool trivial = psi.rule() == PsiCharacter::Rule::trivial;
            const auto f = [&](std::int64_t a, std::int64_t b) -> oracle::Q {
                const int sign = trivial ? 1 : ref::psi(level, a, b);
                return sign * (2 * t->get(a, b) - t0->get(a, b));
            };
            CHECK(super_check(*t, *t0, psi, 30).passed() == (oracle::replicability_violations(f, 30) == 0));
        }
    }
}

TEST_CASE("checks reject grids that are too small")
{
    const auto g = build_grid("t0_5", catalog().expand("t0_5", 20), 10, 10);
    const auto wide = build_grid("t1_5", catalog().expand("t1_5", 24), 12, 12);
    CHECK_NOTHROW(replicable_check(g, 10));
    CHECK_THROWS_AS(replicable_check(g, 11), PrecisionError);
    CHECK_THROWS_AS(super_check(wide, g, PsiCharacter(5), 12), PrecisionError);
}

TEST_CASE("replicate extraction examples")
{
    const auto t = store().get("t1_5", 12, 48);
    const auto t0 = store().get("t0_5", 12, 48);
    const auto src = FaberSource::super(*t, *t0, PsiCharacter(5));
    const auto fam = extract_replicates(src, 2, 12);
    for (std::int64_t k = 1; k <= 12; ++k) {
        CHECK(fam.get(1, k) == src.value(k, 1));
        CHECK(fam.get(1, k) == 2 * t->get(k, 1) - t0->get(k, 1));
        CHECK(fam.get(2, k) == 2 * (src.value(2, 2 * k) - src.value(1, 4 * k)));
    }
    CHECK(fam.get(2, -1) == 1);
    CHECK(fam.get(2, 0) == 0);
    CHECK(fam.get(2, -3) == 0);
    CHECK(fam.s_max() == 2);
    CHECK(fam.k_max(2) == 12);
    CHECK(fam.covers(2, 12));
    CHECK_FALSE(fam.covers(2, 13));
    CHECK_THROWS_AS(fam.get(3, 1), PrecisionError);
    CHECK_THROWS_AS(extract_replicates(src, 2, 13), PrecisionError);

    const auto plain = extract_replicates(FaberSource::plain(*t0), 1, 5);
    for (std::int64_t k = 1; k <= 5; ++k) CHECK(plain.get(1, k) == t0->get(k, 1));
}

TEST_CASE("replicate roundtrip on level 5 grids")
{
    const std::int64_t side = 12, bound = side * side;
    const auto t = store().get("t1_5", side, bound);
    const auto t0 = store().get("t0_5", side, bound);
    const auto src = FaberSource::super(*t, *t0, PsiCharacter(5));
    const auto fam = extract_replicates_bounded(src, bound);
    CHECK(fam.s_max() == side);
    for (std::int64_t m = 1; m <= side; ++m)
        for (std::int64_t n = 1; n <= side; ++n) {
            oracle::Q sum = 0;
            for (std::int64_t s = 1; s <= std::min(m, n); ++s)
                if (m % s == 0 && n % s == 0) sum += fam.get(s, m * n / (s * s)) / oracle::Q(s);
            CHECK(sum == src.value(m, n));
        }
    for (std::int64_t s = 1; s <= side; ++s) CHECK(fam.k_max(s) == bound / (s * s));

    // For a replicable function the replicates of J's own grid reconstruct it as well.
    const auto j = store().get("bigJ", side, bound);
    const auto jfam = extract_replicates_bounded(FaberSource::plain(*j), bound);
    for (std::int64_t m = 1; m <= side; ++m)
        for (std::int64_t n = 1; n <= side; ++n) {
            oracle::Q sum = 0;
            for (std::int64_t s = 1; s <= std::min(m, n); ++s)
                if (m % s == 0 && n % s == 0) sum += jfam.get(s, m * n / (s * s)) / oracle::Q(s);
            CHECK(sum == j->get(m, n));
        }
    CHECK(jfam.integral(2));
}

TEST_CASE("U_p identity for Faber combinations")
{
    CHECK(lemma_aa_applies(8, 2));
    CHECK_FALSE(lemma_aa_applies(10, 2));
    CHECK_FALSE(lemma_aa_applies(5, 2));
    CHECK_THROWS_AS(lemma_aa_check(catalog(), 10, 2, 3, 10), DomainError);

    const auto r = lemma_aa_check(catalog(), 8, 2, 6, 30);
    CHECK(r.passed());
    CHECK(r.check_id == "lemma-aa");
    // Pole parts are part of the comparison: q^-n through q^30 for every n.
    std::int64_t expected = 0;
    for (std::int64_t n = 1; n <= 6; ++n) expected += 30 + n + 1;
    CHECK(r.comparisons == expected);

    for (const auto& [level, p] : std::vector<std::pair<int, int>>{{5, 5}, {10, 5}, {12, 2}, {12, 3}}) {
        CAPTURE(level);
        CAPTURE(p);
        CHECK(lemma_aa_check(catalog(), level, p, 4, 15).passed());
    }
}

TEST_CASE("U_p identity pole coefficient is 1/(pn)")
{
    const auto t = catalog().expand("t1_12", 40);
    const auto t0 = catalog().expand("t0_12", 40);
    for (std::int64_t n = 1; n <= 4; ++n) {
        const auto x = Rational(2) * faber(t, 3 * n).expansion - faber(t0, 3 * n).expansion;
        CHECK(hecke_u(x, 3)[-n] == ratio(1, 3 * n));
    }
}

TEST_CASE("level 10 U_2 identity")
{
    CHECK(lemma_ii_check(catalog(), 1, 30).passed());
    CHECK(lemma_ii_check(catalog(), 6, 30).passed());
}

TEST_CASE("level 12 coefficient identity and vanishing")
{
    const auto r = lemma_ff_check(store(), 15, 15, 4);
    CHECK(r.passed());
    CHECK(r.comparisons == 8 * 8 * 4);
    // (m, r, k) = (1, 1, 1) reads -H_{2,1} = -H_{1,2}.
    const auto g = store().get("t1_12", 2, 2);
    CHECK(g->get(2, 1) == g->get(1, 2));

    CHECK(koike_vanishing_check(store(), 1, 1, 1).passed());
    CHECK(store().get("t0_12", 2, 1)->get(2, 1) == 0);
    CHECK(koike_vanishing_check(store(), 3, 2, 20).passed());
    // The same vanishing fails for t, so the check can fail.
    const auto t = store().get("t1_12", 2, 1);
    CHECK(t->get(2, 1) != 0);
}

TEST_CASE("level 10 parity identity")
{
    CHECK(lemma_jj_check(store(), 1, 1, 15).passed());
    CHECK(lemma_jj_check(store(), 9, 4, 15).passed());
    CHECK_THROWS_AS(lemma_jj_check(store(), 0, 1, 15), DomainError);
}

TEST_CASE("reports are sorted and serialize deterministically")
{
    Report r;
    r.check_id = "demo";
    r.level = 5;
    r.param("bound", 3);
    CHECK(r.compare({{"a", 2}, {"b", 1}}, 1, 2) == false);
    CHECK(r.compare({{"a", 1}, {"b", 3}}, Rational(1, 3), Rational(-1, 3)) == false);
    CHECK(r.compare({{"a", 1}, {"b", 1}}, 4, 4) == true);
    r.finalize();
    CHECK(r.comparisons == 3);
    REQUIRE(r.violations.size() == 2);
    CHECK(r.violations[0].indices[0].second == 1);
    CHECK_FALSE(r.passed());
    const auto json = to_json(r);
    CHECK(json == to_json(r));
    CHECK(json.find("\"1/3\"") != std::string::npos);
    CHECK(json.find("\"-1/3\"") != std::string::npos);
    CHECK(to_human(r).find("demo") != std::string::npos);
}
