#ifndef MIRRORBENCH_RNG_HPP_
#define MIRRORBENCH_RNG_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace mirrorbench {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Counter-based seed split: (master, cell, repeat) -> independent stream seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t cell, std::uint64_t repeat) {
    std::uint64_t h = splitmix64(master ^ 0x6a09e667f3bcc908ULL);
    h = splitmix64(h ^ splitmix64(cell * 0xff51afd7ed558ccdULL + 0x1234ULL));
    h = splitmix64(h ^ splitmix64(repeat * 0xc4ceb9fe1a85ec53ULL + 0x5678ULL));
    return h;
}

/// Deterministic RNG. mt19937_64 output is pinned by the standard; the
/// distribution helpers below are hand-rolled so streams are portable.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, n), unbiased via rejection.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = engine_();
        while (v >= limit) v = engine_();
        return v % n;
    }

    /// Uniform integer in [lo, hi] inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// Uniform in [0, 1) with 53-bit resolution.
    double u01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

    double normal() {
        // Marsaglia polar; deterministic across platforms.
        for (;;) {
            const double u = 2.0 * u01() - 1.0;
            const double v = 2.0 * u01() - 1.0;
            const double s = u * u + v * v;
            if (s > 0.0 && s < 1.0) return u * std::sqrt(-2.0 * std::log(s) / s);
        }
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    /// k distinct values from [lo, hi] inclusive (Floyd's algorithm), sorted.
    std::vector<int> sample_without_replacement(int lo, int hi, int k) {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(k));
        for (int j = hi - k + 1; j <= hi; ++j) {
            const int t = static_cast<int>(uniform_int(lo, j));
            if (std::find(out.begin(), out.end(), t) != out.end()) {
                out.push_back(j);
            } else {
                out.push_back(t);
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace mirrorbench

#endif  // MIRRORBENCH_RNG_HPP_
