#pragma once

#include <cstdint>
#include <vector>

#include "lvmb/fan.hpp"
#include "lvmb/matrix.hpp"

namespace lvmb::testing {

inline Rational rat(long num, long den = 1) { return make_rational(num, den); }

inline RatVector rv(std::initializer_list<long> xs) {
    RatVector v;
    for (long x : xs) v.push_back(Rational(x));
    return v;
}

inline std::uint64_t mix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline long rand_int(std::uint64_t& state, long lo, long hi) {
    return lo + static_cast<long>(mix64(state) % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Rational rand_rat(std::uint64_t& state, long max_num = 6, long max_den = 4) {
    return rat(rand_int(state, -max_num, max_num), rand_int(state, 1, max_den));
}

// Fan of CP^2: rays e1, e2, -e1-e2, all three 2-cones.
inline Fan cp2_fan() {
    return Fan::make(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {0, 2}, {1, 2}});
}

// Rays (1,0), (-1,0), (0,1), (0,-1); four quadrant cones.
inline Fan square_fan() {
    return Fan::make(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}},
                     {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

// Random complete simplicial fan in R^2: distinct primitive rays in cyclic
// order with every consecutive gap below pi, consecutive pairs as maximal
// cones.
inline Fan random_complete_fan_2d(std::uint64_t& state) {
    auto cross = [](const IntVector& a, const IntVector& b) {
        return static_cast<long long>(a[0]) * b[1] - static_cast<long long>(a[1]) * b[0];
    };
    auto lower_half = [](const IntVector& v) {
        return v[1] < 0 || (v[1] == 0 && v[0] < 0);
    };
    for (;;) {
        std::size_t k = 3 + mix64(state) % 6;
        std::set<IntVector> dirs;
        for (std::size_t tries = 0; tries < 64 && dirs.size() < k; ++tries) {
            long x = rand_int(state, -6, 6), y = rand_int(state, -6, 6);
            if (x == 0 && y == 0) continue;
            dirs.insert(primitivize(rv({x, y})));
        }
        if (dirs.size() < 3) continue;
        std::vector<IntVector> rays(dirs.begin(), dirs.end());
        std::sort(rays.begin(), rays.end(), [&](const IntVector& a, const IntVector& b) {
            if (lower_half(a) != lower_half(b)) return lower_half(b);
            return cross(a, b) > 0;
        });
        bool ok = true;
        for (std::size_t i = 0; i < rays.size(); ++i)
            if (cross(rays[i], rays[(i + 1) % rays.size()]) <= 0) ok = false;
        if (!ok) continue;
        std::vector<ConeKey> cones;
        for (std::size_t i = 0; i < rays.size(); ++i)
            cones.push_back({static_cast<int>(i), static_cast<int>((i + 1) % rays.size())});
        return Fan::make(2, std::move(rays), std::move(cones));
    }
}

}  // namespace lvmb::testing
