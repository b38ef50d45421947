#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "explicitlb/errors.hpp"
#include "explicitlb/kahan.hpp"

namespace explicitlb {

// Sieve-backed von Mangoldt table: the positions n <= limit with
// Lambda(n) != 0 (prime powers, ascending), Lambda(n) = log p, and the
// compensated cumulative sums psi(n). Immutable after construction;
// concurrent read-only queries are safe.
class LambdaTable {
public:
    static constexpr std::uint64_t kDefaultLimit = 4'000'001;
    static constexpr std::uint64_t kMaxLimit = 100'000'000;

    explicit LambdaTable(std::uint64_t limit = kDefaultLimit) : limit_(limit) {
        if (limit < 2) throw capacity_error("sieve limit must be >= 2");
        if (limit > kMaxLimit)
            throw capacity_error("sieve limit exceeds memory budget (1e8)");
        build();
    }

    std::uint64_t limit() const { return limit_; }
    std::size_t prime_power_count() const { return pp_.size(); }
    const std::vector<std::uint32_t>& prime_powers() const { return pp_; }
    const std::vector<double>& lambda_values() const { return lambda_; }

    // Lambda(n): log p when n = p^k, else 0.
    double von_mangoldt(std::uint64_t n) const {
        if (n < 1 || n > limit_)
            throw range_error("von_mangoldt: n beyond table limit");
        std::size_t i = index_of(n);
        return (i < pp_.size() && pp_[i] == n) ? lambda_[i] : 0.0;
    }

    bool is_prime(std::uint64_t n) const {
        if (n < 2 || n > limit_) return false;
        std::size_t i = index_of(n);
        return i < pp_.size() && pp_[i] == n && prime_[i];
    }

    // psi(x) = sum_{n<=x} Lambda(n), floor semantics at integer jumps.
    double psi(double x) const {
        if (x < 0 || x > static_cast<double>(limit_))
            throw range_error("psi: x beyond table limit");
        if (x < 2) return 0.0;
        auto n = static_cast<std::uint64_t>(x);
        std::size_t i = index_of(n);
        if (i < pp_.size() && pp_[i] == n) return psi_cum_[i];
        return i == 0 ? 0.0 : psi_cum_[i - 1];
    }

    // psi(n-) = psi just left of n: excludes n's own jump if n is one.
    double psi_left(std::uint64_t n) const {
        if (n < 1 || n > limit_)
            throw range_error("psi_left: n beyond table limit");
        std::size_t i = index_of(n);
        return i == 0 ? 0.0 : psi_cum_[i - 1];
    }

    // Cumulative psi at prime-power index i (inclusive).
    double psi_at_index(std::size_t i) const { return psi_cum_[i]; }

    // Index of the first prime power >= n.
    std::size_t index_of(std::uint64_t n) const {
        return std::lower_bound(pp_.begin(), pp_.end(), n) - pp_.begin();
    }

    // --- binary sieve cache ------------------------------------------------
    // Format: magic "LMTB1", little-endian u64 limit, u64 count, then the
    // prime-power positions as packed little-endian u32.
    void save_cache(const std::string& path) const {
        FILE* f = std::fopen(path.c_str(), "wb");
        if (!f) throw error("cannot open cache file for writing: " + path);
        std::fwrite("LMTB1", 1, 5, f);
        std::uint64_t vals[2] = {limit_, pp_.size()};
        write_le64(f, vals[0]);
        write_le64(f, vals[1]);
        for (std::uint32_t n : pp_) write_le32(f, n);
        std::fclose(f);
    }

    static LambdaTable load_cache(const std::string& path) {
        FILE* f = std::fopen(path.c_str(), "rb");
        if (!f) throw error("cannot open cache file: " + path);
        char magic[5];
        if (std::fread(magic, 1, 5, f) != 5 || std::memcmp(magic, "LMTB1", 5) != 0) {
            std::fclose(f);
            throw parse_error("bad sieve cache magic");
        }
        std::uint64_t limit = read_le64(f), count = read_le64(f);
        std::vector<std::uint32_t> pp(count);
        for (auto& n : pp) n = read_le32(f);
        std::fclose(f);
        LambdaTable t(FromCache{}, limit, std::move(pp));
        return t;
    }

private:
    struct FromCache {};

    LambdaTable(FromCache, std::uint64_t limit, std::vector<std::uint32_t> pp)
        : limit_(limit), pp_(std::move(pp)) {
        finalize_from_pp();
    }

    void build() {
        // odd-only Eratosthenes
        std::uint64_t n = limit_;
        std::vector<std::uint8_t> comp((n >> 1) + 1, 0);  // odd m=2i+1
        for (std::uint64_t p = 3; p * p <= n; p += 2) {
            if (comp[p >> 1]) continue;
            for (std::uint64_t m = p * p; m <= n; m += 2 * p) comp[m >> 1] = 1;
        }
        pp_.clear();
        pp_.push_back(2);
        for (std::uint64_t m = 3; m <= n; m += 2)
            if (!comp[m >> 1]) pp_.push_back(static_cast<std::uint32_t>(m));
        // powers of each prime
        std::size_t nprimes = pp_.size();
        for (std::size_t i = 0; i < nprimes; ++i) {
            std::uint64_t p = pp_[i];
            for (std::uint64_t q = p * p; q <= n; q *= p)
                pp_.push_back(static_cast<std::uint32_t>(q));
        }
        std::sort(pp_.begin(), pp_.end());
        finalize_from_pp();
    }

    void finalize_from_pp() {
        lambda_.resize(pp_.size());
        prime_.resize(pp_.size());
        psi_cum_.resize(pp_.size());
        KahanSum acc;
        for (std::size_t i = 0; i < pp_.size(); ++i) {
            std::uint64_t n = pp_[i];
            std::uint64_t p = prime_root(n);
            lambda_[i] = std::log(static_cast<double>(p));
            prime_[i] = (p == n);
            acc += lambda_[i];
            psi_cum_[i] = acc.value();
        }
    }

    // n is a prime power by construction; recover p as the base of the
    // deepest exact integer root.
    static std::uint64_t prime_root(std::uint64_t n) {
        for (int k = 27; k >= 2; --k) {
            auto r = static_cast<std::uint64_t>(
                std::llround(std::pow(static_cast<double>(n), 1.0 / k)));
            for (std::uint64_t c = (r >= 3 ? r - 1 : 2); c <= r + 1; ++c) {
                std::uint64_t v = 1;
                bool ok = true;
                for (int j = 0; j < k; ++j) {
                    if (v > n / c) { ok = false; break; }
                    v *= c;
                }
                if (ok && v == n) return c;
            }
        }
        return n;
    }

    static void write_le64(FILE* f, std::uint64_t v) {
        unsigned char b[8];
        for (int i = 0; i < 8; ++i) b[i] = (v >> (8 * i)) & 0xff;
        std::fwrite(b, 1, 8, f);
    }
    static void write_le32(FILE* f, std::uint32_t v) {
        unsigned char b[4];
        for (int i = 0; i < 4; ++i) b[i] = (v >> (8 * i)) & 0xff;
        std::fwrite(b, 1, 4, f);
    }
    static std::uint64_t read_le64(FILE* f) {
        unsigned char b[8];
        if (std::fread(b, 1, 8, f) != 8) throw parse_error("truncated cache");
        std::uint64_t v = 0;
        for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
        return v;
    }
    static std::uint32_t read_le32(FILE* f) {
        unsigned char b[4];
        if (std::fread(b, 1, 4, f) != 4) throw parse_error("truncated cache");
        std::uint32_t v = 0;
        for (int i = 3; i >= 0; --i) v = (v << 8) | b[i];
        return v;
    }

    std::uint64_t limit_;
    std::vector<std::uint32_t> pp_;    // prime powers, ascending
    std::vector<double> lambda_;       // log p for each
    std::vector<std::uint8_t> prime_;  // 1 iff pp_[i] is prime itself
    std::vector<double> psi_cum_;      // psi at each jump, compensated
};

}  // namespace explicitlb
