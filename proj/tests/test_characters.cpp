#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numeric>

#include "explicitlb/characters.hpp"

using namespace explicitlb;

namespace {

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t r = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        r -= r / p;
    }
    if (n > 1) r -= r / n;
    return r;
}

std::uint64_t mobius_sign(std::uint64_t n, bool& squarefree) {
    squarefree = true;
    int k = 0;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        ++k;
        if (n % p == 0) { squarefree = false; return 0; }
    }
    if (n > 1) ++k;
    return k;
}

// brute-force conductor: smallest d | q with chi trivial on {a = 1 mod d}
std::uint64_t brute_conductor(const DirichletCharacter& chi) {
    std::uint64_t q = chi.modulus();
    for (std::uint64_t d = 1; d <= q; ++d) {
        if (q % d) continue;
        bool trivial = true;
        for (std::uint64_t a = 1; a <= q && trivial; ++a) {
            if (std::gcd(a, q) != 1 || a % d != 1) continue;
            auto e = chi.exponent_of(static_cast<std::int64_t>(a));
            if (!e || e->num != 0) trivial = false;
        }
        if (trivial) return d;
    }
    return q;
}

}  // namespace

TEST_CASE("enumeration counts phi(q) and fixes the examples") {
    REQUIRE(enumerate_characters(1).size() == 1);
    auto c4 = enumerate_characters(4);
    REQUIRE(c4.size() == 2);
    int nonprincipal = -1;
    for (int i = 0; i < 2; ++i)
        if (!c4[i].is_principal()) nonprincipal = i;
    REQUIRE(nonprincipal >= 0);
    REQUIRE(c4[nonprincipal].evaluate(3).real() == Catch::Approx(-1.0).margin(1e-14));

    auto c5 = enumerate_characters(5);
    REQUIRE(c5.size() == 4);
    bool found_order4 = false;
    for (auto& chi : c5) {
        auto e = chi.exponent_of(2);
        REQUIRE(e.has_value());
        if (e->den == 4 && e->num == 1) {
            found_order4 = true;
            // chi(2) = i
            REQUIRE(chi.evaluate(2).imag() == Catch::Approx(1.0).margin(1e-14));
            // multiplicativity: chi(4) = chi(2)^2 = -1
            REQUIRE(chi.evaluate(4).real() == Catch::Approx(-1.0).margin(1e-14));
        }
    }
    REQUIRE(found_order4);

    for (std::uint64_t q : {2, 3, 6, 8, 9, 12, 16, 24, 45, 100, 243, 128})
        REQUIRE(enumerate_characters(q).size() == euler_phi(q));

    REQUIRE_THROWS_AS(enumerate_characters(2000000), capacity_error);
}

TEST_CASE("evaluate: reduction, vanishing, moduli") {
    auto c4 = enumerate_characters(4);
    for (auto& chi : c4) {
        REQUIRE(chi.evaluate(7) == chi.evaluate(3));  // reduction mod 4
        REQUIRE(chi.evaluate(2) == std::complex<double>(0.0, 0.0));
        REQUIRE(chi.evaluate(1).real() == Catch::Approx(1.0).margin(1e-15));
    }
    for (auto& chi : enumerate_characters(36)) {
        for (std::int64_t n = 0; n < 36; ++n) {
            double m = std::abs(chi.evaluate(n));
            if (std::gcd(n, std::int64_t(36)) == 1)
                REQUIRE(m == Catch::Approx(1.0).margin(1e-14));
            else
                REQUIRE(m == 0.0);
        }
    }
}

TEST_CASE("complete multiplicativity, exact exponents, q <= 100") {
    for (std::uint64_t q = 1; q <= 100; ++q) {
        for (auto& chi : enumerate_characters(q)) {
            std::vector<std::optional<Rational>> exps(q);
            for (std::uint64_t a = 0; a < q; ++a)
                exps[a] = chi.exponent_of(static_cast<std::int64_t>(a));
            bool ok = true;
            for (std::uint64_t m = 0; m < q && ok; ++m) {
                for (std::uint64_t n = m; n < q && ok; ++n) {
                    const auto& em = exps[m];
                    const auto& en = exps[n];
                    const auto& emn = exps[(m * n) % q];
                    if (!em || !en)
                        ok = !emn.has_value();
                    else
                        ok = emn.has_value() && em->plus(*en) == *emn;
                }
            }
            REQUIRE(ok);
        }
    }
}

TEST_CASE("orthogonality: character sums vanish, q <= 1000") {
    // exact route: for a character of order o, the exponents e(a) hit each
    // multiple of 1/o equally often, so sum chi(a) is a full sum over the
    // o-th roots of unity -- identically zero.
    for (std::uint64_t q = 2; q <= 1000; ++q) {
        for (auto& chi : enumerate_characters(q)) {
            if (chi.is_principal()) continue;
            std::int64_t order = 1;
            std::vector<Rational> es;
            es.reserve(q);
            for (std::uint64_t a = 1; a <= q; ++a) {
                auto e = chi.exponent_of(static_cast<std::int64_t>(a));
                if (!e) continue;
                es.push_back(*e);
                order = std::lcm(order, e->den);
            }
            REQUIRE(order > 1);
            REQUIRE(es.size() % order == 0);
            std::vector<std::int64_t> hist(order, 0);
            for (auto& e : es) ++hist[e.num * (order / e.den)];
            bool uniform = true;
            for (auto c : hist)
                uniform = uniform && c == static_cast<std::int64_t>(es.size()) / order;
            REQUIRE(uniform);
        }
    }
    // numeric modulus below 1e-12 after complex conversion (spot moduli)
    for (std::uint64_t q : {7, 24, 45, 90, 97}) {
        for (auto& chi : enumerate_characters(q)) {
            if (chi.is_principal()) continue;
            std::complex<double> s(0.0, 0.0);
            for (std::uint64_t a = 1; a <= q; ++a)
                s += chi.evaluate(static_cast<std::int64_t>(a));
            REQUIRE(std::abs(s) < 1e-12);
        }
    }
}

TEST_CASE("conjugation") {
    auto c5 = enumerate_characters(5);
    for (auto& chi : c5) {
        auto conj = chi.conjugate();
        // involution
        auto back = conj.conjugate();
        REQUIRE(back.exponents() == chi.exponents());
        // pointwise conjugate values
        for (std::int64_t n = 1; n < 5; ++n) {
            auto a = chi.evaluate(n), b = conj.evaluate(n);
            REQUIRE(a.real() == Catch::Approx(b.real()).margin(1e-14));
            REQUIRE(a.imag() == Catch::Approx(-b.imag()).margin(1e-14));
        }
        // parity preserved
        REQUIRE(chi.parity() == conj.parity());
    }
    // real character is a fixed point
    auto c4 = enumerate_characters(4);
    for (auto& chi : c4)
        REQUIRE(chi.conjugate().exponents() == chi.exponents());
    // order-4 character mod 5: conj(chi)(2) = -i when chi(2) = i
    for (auto& chi : c5) {
        auto e = chi.exponent_of(2);
        if (e->den == 4 && e->num == 1)
            REQUIRE(chi.conjugate().evaluate(2).imag() ==
                    Catch::Approx(-1.0).margin(1e-14));
    }
}

TEST_CASE("primitivity and conductors") {
    auto c4 = enumerate_characters(4);
    for (auto& chi : c4) {
        if (chi.is_principal())
            REQUIRE(!chi.is_primitive());
        else
            REQUIRE(chi.is_primitive());
    }
    // mod-6 character induced by the mod-3 quadratic one: conductor 3
    auto c6 = enumerate_characters(6);
    REQUIRE(c6.size() == 2);
    for (auto& chi : c6) {
        if (chi.is_principal()) continue;
        REQUIRE(!chi.is_primitive());
        REQUIRE(chi.conductor() == 3);
    }
    // principal mod 1 is primitive by convention
    REQUIRE(enumerate_characters(1)[0].is_primitive());

    // conductor formula vs brute force, q <= 60 (exercises 2^k and odd p^e)
    for (std::uint64_t q = 1; q <= 60; ++q)
        for (auto& chi : enumerate_characters(q))
            REQUIRE(chi.conductor() == brute_conductor(chi));
}

TEST_CASE("primitive character counts match sum_{d|q} mu(q/d) phi(d), q <= 200") {
    for (std::uint64_t q = 1; q <= 200; ++q) {
        long expected = 0;
        for (std::uint64_t d = 1; d <= q; ++d) {
            if (q % d) continue;
            bool sf;
            std::uint64_t k = mobius_sign(q / d, sf);
            if (!sf) continue;
            expected += (k % 2 ? -1 : 1) * static_cast<long>(euler_phi(d));
        }
        long got = 0;
        for (auto& chi : enumerate_characters(q))
            if (chi.is_primitive()) ++got;
        REQUIRE(got == expected);
    }
}

TEST_CASE("parity examples") {
    // chi mod 4 nonprincipal is odd; quadratic mod 8 characters split
    for (auto& chi : enumerate_characters(4))
        REQUIRE(chi.parity() == (chi.is_principal() ? 0 : 1));
    for (auto& chi : enumerate_characters(3)) {
        if (!chi.is_principal()) REQUIRE(chi.parity() == 1);
    }
}

TEST_CASE("character ids resolve") {
    auto chi = character_by_id("5.2");
    REQUIRE(chi.modulus() == 5);
    REQUIRE(chi.index() == 2);
    REQUIRE(chi.id() == "5.2");
    REQUIRE_THROWS_AS(character_by_id("5.9"), domain_error);
    REQUIRE_THROWS_AS(character_by_id("nonsense"), parse_error);
}
