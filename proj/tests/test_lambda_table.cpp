#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdio>

#include "explicitlb/kahan.hpp"
#include "explicitlb/lambda_table.hpp"

using namespace explicitlb;

namespace {

// independent trial-division primality oracle
bool trial_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// independent prime-power test: n = p^k by trial division
double lambda_oracle(std::uint64_t n) {
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        std::uint64_t m = n;
        while (m % p == 0) m /= p;
        return m == 1 && trial_prime(p) ? std::log(static_cast<double>(p)) : 0.0;
    }
    return n >= 2 ? std::log(static_cast<double>(n)) : 0.0;  // n prime
}

const LambdaTable& small_table() {
    static LambdaTable t(200000);
    return t;
}

}  // namespace

TEST_CASE("von Mangoldt support up to 10") {
    LambdaTable t(10);
    std::vector<std::uint64_t> nonzero;
    for (std::uint64_t n = 1; n <= 10; ++n)
        if (t.von_mangoldt(n) != 0.0) nonzero.push_back(n);
    REQUIRE(nonzero == std::vector<std::uint64_t>{2, 3, 4, 5, 7, 8, 9});
    REQUIRE(t.von_mangoldt(8) == Catch::Approx(std::log(2.0)).epsilon(1e-15));
    REQUIRE(t.von_mangoldt(9) == Catch::Approx(std::log(3.0)).epsilon(1e-15));
}

TEST_CASE("von Mangoldt against trial-division oracle") {
    const auto& t = small_table();
    long bad = 0;
    for (std::uint64_t n = 1; n <= 100000; ++n) {
        double got = t.von_mangoldt(n);
        double want = lambda_oracle(n);
        if (want == 0.0) {
            if (got != 0.0) ++bad;
        } else if (std::fabs(got - want) > 1e-14 * want) {
            ++bad;
        }
    }
    REQUIRE(bad == 0);
    REQUIRE(t.von_mangoldt(12) == 0.0);
    REQUIRE(t.von_mangoldt(9973) == Catch::Approx(std::log(9973.0)).epsilon(1e-15));
}

TEST_CASE("psi values and floor semantics") {
    const auto& t = small_table();
    REQUIRE(t.psi(1.9) == 0.0);
    REQUIRE(t.psi(1.0) == 0.0);
    // psi(10) = log 2520
    REQUIRE(t.psi(10.0) == Catch::Approx(std::log(2520.0)).epsilon(1e-14));
    REQUIRE(t.psi(10.0) == Catch::Approx(7.8320141805054690).epsilon(1e-12));
    // direct enumeration to 100
    KahanSum s;
    for (std::uint64_t n = 2; n <= 100; ++n) s += lambda_oracle(n);
    REQUIRE(t.psi(100.0) == Catch::Approx(s.value()).epsilon(1e-13));
    // floor semantics: psi constant between jumps
    REQUIRE(t.psi(10.5) == t.psi(10.0));
    REQUIRE(t.psi(11.0) > t.psi(10.99));
    // psi(n-) excludes the jump
    REQUIRE(t.psi_left(11) == Catch::Approx(t.psi(10.0)).epsilon(1e-15));
}

TEST_CASE("psi is nondecreasing and consistent with the lambda sum") {
    const auto& t = small_table();
    KahanSum total;
    for (double l : t.lambda_values()) total += l;
    REQUIRE(t.psi(static_cast<double>(t.limit())) ==
            Catch::Approx(total.value()).epsilon(1e-12));
    double prev = 0.0;
    long bad = 0;
    for (std::size_t i = 0; i < t.prime_power_count(); ++i) {
        if (t.psi_at_index(i) < prev) ++bad;
        prev = t.psi_at_index(i);
    }
    REQUIRE(bad == 0);
}

TEST_CASE("range errors") {
    LambdaTable t(100);
    REQUIRE_THROWS_AS(t.von_mangoldt(101), range_error);
    REQUIRE_THROWS_AS(t.psi(100.5), range_error);
    REQUIRE_THROWS_AS(LambdaTable(1), capacity_error);
    REQUIRE_THROWS_AS(LambdaTable(200'000'000), capacity_error);
}

TEST_CASE("construction is deterministic") {
    LambdaTable a(5000), b(5000);
    REQUIRE(a.prime_powers() == b.prime_powers());
    REQUIRE(a.psi(5000.0) == b.psi(5000.0));
}

TEST_CASE("sieve cache round-trips") {
    LambdaTable t(30000);
    std::string path = "lambda_cache_test.bin";
    t.save_cache(path);
    LambdaTable u = LambdaTable::load_cache(path);
    REQUIRE(u.limit() == t.limit());
    REQUIRE(u.prime_powers() == t.prime_powers());
    REQUIRE(u.psi(29999.0) == t.psi(29999.0));
    std::remove(path.c_str());
}
