#include "lvmb/builtin.hpp"

#include <stdexcept>

namespace lvmb {

namespace {

LVMBData projective_space(int m) {
    std::vector<SimplicialComplex::Face> maximal;
    // All m-subsets of {0,...,m}.
    for (int skip = 0; skip <= m; ++skip) {
        SimplicialComplex::Face f;
        for (int v = 0; v <= m; ++v)
            if (v != skip) f.push_back(v);
        maximal.push_back(std::move(f));
    }
    LVMBData data;
    data.m = static_cast<std::size_t>(m);
    data.sigma = SimplicialComplex::from_maximal(m, maximal);
    return data;
}

LVMBData hopf() {
    LVMBData data;
    data.m = 2;
    data.sigma = SimplicialComplex::from_maximal(2, {{1}, {2}});
    data.h_basis = {{GaussianRational(Rational(1), Rational(0)),
                     GaussianRational(Rational(1), Rational(1))}};
    return data;
}

LVMBData calabi_eckmann() {
    LVMBData data;
    data.m = 4;
    data.sigma = SimplicialComplex::from_maximal(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
    GaussianRational one(Rational(1), Rational(0));
    GaussianRational i(Rational(0), Rational(1));
    data.h_basis = {{one, one, i, i}};
    return data;
}

// Fan over the boundary of the cube [-1,1]^3 triangulated with a chiral
// diagonal pattern (one diagonal per opposite-face pair flipped). The
// triangulation is non-regular, so the fan is complete and simplicial but
// its support-function LP optimum is exactly 0; the acceptance suite
// re-certifies this together with the Farkas certificate for t >= 1.
LVMBData nonpolytopal_fan() {
    std::vector<IntVector> rays = {
        {1, 1, 1},     // 0
        {-1, 1, 1},    // 1
        {-1, -1, 1},   // 2
        {1, -1, 1},    // 3
        {1, 1, -1},    // 4
        {-1, 1, -1},   // 5
        {-1, -1, -1},  // 6
        {1, -1, -1},   // 7
    };
    std::vector<ConeKey> cones = {
        {0, 1, 2}, {0, 2, 3},  // top, diagonal 0-2
        {4, 5, 7}, {5, 6, 7},  // bottom, diagonal 5-7
        {0, 3, 4}, {3, 7, 4},  // +x, diagonal 3-4
        {1, 2, 6}, {1, 6, 5},  // -x, diagonal 1-6
        {0, 1, 4}, {1, 5, 4},  // +y, diagonal 1-4
        {2, 3, 7}, {2, 7, 6},  // -y, diagonal 2-7
    };
    LVMBData data;
    data.m = 3;
    data.ambient_fan = Fan::make(3, std::move(rays), std::move(cones));
    return data;
}

}  // namespace

std::vector<std::string> builtin_example_names() {
    return {"projective-space-2", "projective-space-3", "projective-space-4",
            "projective-space-5", "hopf", "calabi-eckmann", "nonpolytopal-fan"};
}

LVMBData builtin_example(const std::string& name) {
    const std::string ps = "projective-space-";
    if (name.rfind(ps, 0) == 0) {
        try {
            int m = std::stoi(name.substr(ps.size()));
            if (m >= 1) return projective_space(m);
        } catch (const std::exception&) {
        }
    }
    if (name == "hopf") return hopf();
    if (name == "calabi-eckmann") return calabi_eckmann();
    if (name == "nonpolytopal-fan") return nonpolytopal_fan();

    std::string msg = "unknown example '" + name + "'; available:";
    for (const auto& n : builtin_example_names()) msg += " " + n;
    msg += " (projective-space-<m> accepts any m >= 1)";
    throw std::invalid_argument(msg);
}

}  // namespace lvmb
