#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "explicitlb/constants.hpp"
#include "explicitlb/errors.hpp"

namespace explicitlb {

// Exponent of a root of unity: chi(a) = exp(2*pi*i * num/den), reduced,
// normalized to [0, 1). Characters are stored this way rather than as
// floating complex values so conjugation and multiplicativity are exact.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational make(std::int64_t n, std::int64_t d) {
        n %= d;
        if (n < 0) n += d;
        std::int64_t g = std::gcd(n, d);
        if (g == 0) return {0, 1};
        return {n / g, d / g};
    }
    Rational plus(const Rational& o) const {
        std::int64_t l = std::lcm(den, o.den);
        return make(num * (l / den) + o.num * (l / o.den), l);
    }
    Rational negated() const { return make(-num, den); }
    bool operator==(const Rational& o) const {
        return num == o.num && den == o.den;
    }
    std::complex<double> to_complex() const {
        double t = kTwoPi * static_cast<double>(num) / static_cast<double>(den);
        return {std::cos(t), std::sin(t)};
    }
};

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}
inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

inline bool is_probable_prime(std::uint64_t n);
inline std::uint64_t pollard_rho(std::uint64_t n);

// Trial division up to 1e3, then Pollard rho. q <= 1e6 keeps this trivial
// but the helper is written for generic 64-bit input.
inline void factor_into(std::uint64_t n, std::vector<std::pair<std::uint64_t, int>>& out) {
    for (std::uint64_t p = 2; p <= 1000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(p, e);
        }
    }
    if (n == 1) return;
    // n has no factor <= 1000; for our modulus cap this means n is prime
    // unless n > 1e6, where rho takes over.
    if (n <= 1000000ULL || is_probable_prime(n)) {
        out.emplace_back(n, 1);
        return;
    }
    std::uint64_t d = pollard_rho(n);
    std::vector<std::pair<std::uint64_t, int>> sub;
    factor_into(d, sub);
    factor_into(n / d, sub);
    for (auto& [p, e] : sub) {
        bool merged = false;
        for (auto& [p2, e2] : out)
            if (p2 == p) { e2 += e; merged = true; }
        if (!merged) out.emplace_back(p, e);
    }
}

inline bool is_probable_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL})
        if (n % p == 0) return n == p;
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

inline std::uint64_t pollard_rho(std::uint64_t n) {
    if ((n & 1) == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        auto f = [&](std::uint64_t x) { return (mulmod(x, x, n) + c) % n; };
        std::uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

}  // namespace detail

// Structure of (Z/qZ)^*: cyclic components with fixed generators
// (smallest primitive root per odd prime power; -1 and 5 for 2^k, k>=3),
// plus per-component discrete-log tables. Shared by all characters mod q.
class CharacterGroup {
public:
    struct Component {
        std::uint64_t modulus;  // the prime power piece of q
        std::uint64_t generator;
        std::int64_t order;
        std::uint64_t prime;
        std::vector<std::int32_t> dlog;  // index by residue mod modulus; -1 if not coprime
    };

    explicit CharacterGroup(std::uint64_t q) : q_(q) {
        if (q < 1 || q > 1000000) throw capacity_error("modulus out of range [1, 1e6]");
        std::vector<std::pair<std::uint64_t, int>> fac;
        detail::factor_into(q, fac);
        std::sort(fac.begin(), fac.end());
        for (auto [p, e] : fac) {
            std::uint64_t m = 1;
            for (int i = 0; i < e; ++i) m *= p;
            if (p == 2) {
                if (e == 1) continue;  // (Z/2)^* trivial
                if (e == 2) add_cyclic(m, m - 1, 2, p);  // generator -1
                else {
                    add_minus_one(m);        // order-2 component from -1
                    add_two_power_five(m);   // 5 has order 2^(e-2)
                }
            } else {
                add_cyclic(m, primitive_root(p, e, m), phi(p, e), p);
            }
        }
        exponent_ = 1;
        num_chars_ = 1;
        for (auto& c : comps_) {
            exponent_ = std::lcm(exponent_, c.order);
            num_chars_ *= static_cast<std::uint64_t>(c.order);
        }
    }

    std::uint64_t modulus() const { return q_; }
    std::uint64_t phi() const { return num_chars_; }
    std::int64_t exponent() const { return exponent_; }
    const std::vector<Component>& components() const { return comps_; }

    bool coprime(std::uint64_t n) const { return std::gcd(n % q_, q_) == 1; }

    // Component discrete logs of a residue (must be coprime to q).
    void dlogs(std::uint64_t a, std::vector<std::int64_t>& out) const {
        out.clear();
        for (auto& c : comps_) out.push_back(c.dlog[a % c.modulus]);
    }

private:
    static std::uint64_t phi(std::uint64_t p, int e) {
        std::uint64_t r = p - 1;
        for (int i = 1; i < e; ++i) r *= p;
        return r;
    }

    static std::uint64_t primitive_root(std::uint64_t p, int e, std::uint64_t m) {
        if (p == 2) return 1;
        std::vector<std::pair<std::uint64_t, int>> fac;
        detail::factor_into(p - 1, fac);
        std::uint64_t g = 2;
        for (;; ++g) {
            bool ok = true;
            for (auto& [f, _] : fac)
                if (detail::powmod(g, (p - 1) / f, p) == 1) { ok = false; break; }
            if (ok) break;
        }
        if (e == 1) return g;
        // lift: g must have order p^(e-1)(p-1) modulo p^e
        if (detail::powmod(g, p - 1, p * p) == 1) g += p;
        return g % m;
    }

    void add_cyclic(std::uint64_t m, std::uint64_t g, std::uint64_t order,
                    std::uint64_t p) {
        Component c;
        c.modulus = m;
        c.generator = g;
        c.order = static_cast<std::int64_t>(order);
        c.prime = p;
        c.dlog.assign(m, -1);
        std::uint64_t v = 1 % m;
        for (std::uint64_t k = 0; k < order; ++k) {
            c.dlog[v] = static_cast<std::int32_t>(k);
            v = detail::mulmod(v, g, m);
        }
        comps_.push_back(std::move(c));
    }

    // For 2^e, e>=3: residues are (-1)^eps * 5^j; one component records
    // eps, the other records j (for both signs of the coset).
    void add_minus_one(std::uint64_t m) {
        Component c;
        c.modulus = m;
        c.generator = m - 1;
        c.order = 2;
        c.prime = 2;
        c.dlog.assign(m, -1);
        std::uint64_t v = 1;
        for (std::uint64_t j = 0; j < m / 4; ++j) {
            c.dlog[v] = 0;
            c.dlog[m - v] = 1;
            v = detail::mulmod(v, 5, m);
        }
        comps_.push_back(std::move(c));
    }

    void add_two_power_five(std::uint64_t m) {
        Component c;
        c.modulus = m;
        c.generator = 5;
        c.order = static_cast<std::int64_t>(m / 4);
        c.prime = 2;
        c.dlog.assign(m, -1);
        std::uint64_t v = 1;
        for (std::uint64_t j = 0; j < m / 4; ++j) {
            c.dlog[v] = static_cast<std::int32_t>(j);
            c.dlog[m - v] = static_cast<std::int32_t>(j);
            v = detail::mulmod(v, 5, m);
        }
        comps_.push_back(std::move(c));
    }

    std::uint64_t q_;
    std::vector<Component> comps_;
    std::uint64_t num_chars_;
    std::int64_t exponent_;
};

// A Dirichlet character mod q, held as exponents on the group generators.
class DirichletCharacter {
public:
    DirichletCharacter(std::shared_ptr<const CharacterGroup> group,
                       std::vector<std::int64_t> exps, std::uint64_t index)
        : group_(std::move(group)), exps_(std::move(exps)), index_(index) {}

    std::uint64_t modulus() const { return group_->modulus(); }
    std::uint64_t index() const { return index_; }
    std::string id() const {
        return std::to_string(modulus()) + "." + std::to_string(index_);
    }
    const CharacterGroup& group() const { return *group_; }
    const std::vector<std::int64_t>& exponents() const { return exps_; }

    bool is_principal() const {
        for (auto e : exps_)
            if (e) return false;
        return true;
    }

    // Exponent e(n) with chi(n) = exp(2*pi*i*e(n)); nullopt when gcd(n,q)>1.
    std::optional<Rational> exponent_of(std::int64_t n) const {
        std::uint64_t q = modulus();
        std::uint64_t a = static_cast<std::uint64_t>(((n % static_cast<std::int64_t>(q)) + static_cast<std::int64_t>(q)) % static_cast<std::int64_t>(q));
        if (q == 1) return Rational{0, 1};
        if (std::gcd(a, q) != 1) return std::nullopt;
        Rational r{0, 1};
        const auto& comps = group_->components();
        for (std::size_t i = 0; i < comps.size(); ++i) {
            std::int64_t l = comps[i].dlog[a % comps[i].modulus];
            std::int64_t d = comps[i].order;
            std::int64_t t = (exps_[i] % d) * (l % d) % d;
            r = r.plus(Rational::make(t, d));
        }
        return r;
    }

    std::complex<double> evaluate(std::int64_t n) const {
        auto e = exponent_of(n);
        return e ? e->to_complex() : std::complex<double>(0.0, 0.0);
    }

    // parity a = (1 - chi(-1))/2: 0 for even, 1 for odd characters.
    int parity() const {
        auto e = exponent_of(-1);
        return (e && e->num != 0) ? 1 : 0;  // chi(-1) = -1 iff e = 1/2
    }

    DirichletCharacter conjugate() const {
        std::vector<std::int64_t> ne(exps_.size());
        const auto& comps = group_->components();
        for (std::size_t i = 0; i < comps.size(); ++i)
            ne[i] = (comps[i].order - exps_[i]) % comps[i].order;
        return DirichletCharacter(group_, std::move(ne), conjugate_index());
    }

    // Conductor: the smallest modulus inducing this character. Computed
    // componentwise from the order of each generator exponent.
    std::uint64_t conductor() const {
        std::uint64_t cond = 1;
        const auto& comps = group_->components();
        std::uint64_t two_part = 1;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            std::int64_t d = comps[i].order;
            std::int64_t g = std::gcd(exps_[i] % d, d);
            std::int64_t ord = d / (g == 0 ? d : g);  // order of this component character
            if (ord == 1) continue;
            if (comps[i].prime == 2) {
                std::uint64_t piece;
                if (comps[i].generator == comps[i].modulus - 1)
                    piece = 4;  // the -1 component forces conductor 4
                else
                    piece = 4 * static_cast<std::uint64_t>(ord);  // 5-component of order 2^m -> 2^(m+2)
                two_part = std::max(two_part, piece);
            } else {
                // odd p: order p^m * (divisor of p-1) -> conductor p^(m+1)
                std::uint64_t p = comps[i].prime, pm = p;
                std::int64_t o = ord;
                while (o % static_cast<std::int64_t>(p) == 0) {
                    o /= static_cast<std::int64_t>(p);
                    pm *= p;
                }
                cond *= pm;
            }
        }
        return cond * two_part;
    }

    bool is_primitive() const { return conductor() == modulus(); }

private:
    std::uint64_t conjugate_index() const {
        // recompute the mixed-radix rank of the negated exponent tuple
        const auto& comps = group_->components();
        std::uint64_t idx = 0;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            std::int64_t d = comps[i].order;
            std::int64_t e = (d - exps_[i]) % d;
            idx = idx * static_cast<std::uint64_t>(d) + static_cast<std::uint64_t>(e);
        }
        return idx;
    }

    std::shared_ptr<const CharacterGroup> group_;
    std::vector<std::int64_t> exps_;
    std::uint64_t index_;
};

// All phi(q) characters mod q in lexicographic order over the component
// exponent tuples; index is the mixed-radix rank, so ids are reproducible.
inline std::vector<DirichletCharacter> enumerate_characters(std::uint64_t q) {
    auto group = std::make_shared<const CharacterGroup>(q);
    const auto& comps = group->components();
    std::vector<DirichletCharacter> out;
    out.reserve(group->phi());
    std::vector<std::int64_t> exps(comps.size(), 0);
    std::uint64_t total = group->phi();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        out.emplace_back(group, exps, idx);
        for (std::size_t i = comps.size(); i-- > 0;) {
            if (++exps[i] < comps[i].order) break;
            exps[i] = 0;
        }
    }
    return out;
}

// Look up a character by its "q.index" id.
inline DirichletCharacter character_by_id(const std::string& id) {
    auto dot = id.find('.');
    if (dot == std::string::npos)
        throw parse_error("character id must look like q.index");
    std::uint64_t q = std::stoull(id.substr(0, dot));
    std::uint64_t index = std::stoull(id.substr(dot + 1));
    auto chars = enumerate_characters(q);
    if (index >= chars.size())
        throw domain_error("character index out of range for modulus");
    return chars[index];
}

}  // namespace explicitlb
