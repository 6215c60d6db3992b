// Deterministic spectral-parameter sampling: uniform complex draws in the
// disk |lambda| <= 2 that stay clear of the trivial zeros and the poles of
// the rescaled inverse.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "blob/matrix.hpp"

namespace blob {

inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

// splitmix64; bit-stable across platforms, unlike the standard
// distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::uint64_t state_;
};

class LambdaSampler {
public:
    LambdaSampler(std::uint64_t seed, double mu) : rng_(seed), mu_(mu) {}

    cplx sample() {
        for (int tries = 0; tries < 1000; ++tries) {
            const cplx l(rng_.uniform(-2.0, 2.0), rng_.uniform(-2.0, 2.0));
            if (std::abs(l) > 2.0) continue;
            if (admissible(l)) return l;
        }
        throw std::runtime_error("LambdaSampler: no admissible sample found");
    }

    std::pair<cplx, cplx> sample_pair() {
        for (int tries = 0; tries < 1000; ++tries) {
            const cplx l1 = sample();
            const cplx l2 = sample();
            if (admissible(l1 - l2) && admissible(l1 + l2)) return {l1, l2};
        }
        throw std::runtime_error("LambdaSampler: no admissible pair found");
    }

    std::vector<cplx> samples(int n) {
        std::vector<cplx> v;
        v.reserve(n);
        for (int k = 0; k < n; ++k) v.push_back(sample());
        return v;
    }

    std::vector<std::pair<cplx, cplx>> pairs(int n) {
        std::vector<std::pair<cplx, cplx>> v;
        v.reserve(n);
        for (int k = 0; k < n; ++k) v.push_back(sample_pair());
        return v;
    }

private:
    // keep away from zeros of sinh(mu l) and of sinh(mu (l -+ i)), where
    // R or its rescaled inverse degenerates
    bool admissible(cplx l) const {
        const cplx i(0, 1);
        if (std::abs(std::sinh(mu_ * l)) < 1e-3) return false;
        if (std::abs(std::sinh(mu_ * (l + i))) < 1e-3) return false;
        if (std::abs(std::sinh(mu_ * (l - i))) < 1e-3) return false;
        return true;
    }

    Rng rng_;
    double mu_;
};

} // namespace blob
