#include "lvmb/simplicial_complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lvmb {

SimplicialComplex SimplicialComplex::from_maximal(int m, const std::vector<Face>& maximal_faces) {
    if (m < 0) throw std::invalid_argument("simplicial complex: negative m");
    SimplicialComplex sc;
    sc.m_ = m;
    sc.faces_.insert(Face{});
    for (const Face& given : maximal_faces) {
        Face f = given;
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        for (int v : f)
            if (v < 0 || v > m)
                throw std::invalid_argument("face label " + std::to_string(v) +
                                            " outside ground set {0,...," + std::to_string(m) +
                                            "}");
        if (static_cast<int>(f.size()) == m + 1)
            throw std::invalid_argument("face equals the full ground set");
        // All subsets of f.
        const std::size_t k = f.size();
        for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
            Face sub;
            for (std::size_t b = 0; b < k; ++b)
                if (mask & (std::size_t{1} << b)) sub.push_back(f[b]);
            sc.faces_.insert(std::move(sub));
        }
    }
    return sc;
}

bool SimplicialComplex::has_face(Face f) const {
    std::sort(f.begin(), f.end());
    return faces_.count(f) > 0;
}

std::vector<int> SimplicialComplex::vertex_labels() const {
    std::set<int> labels;
    for (const Face& f : faces_)
        for (int v : f) labels.insert(v);
    return {labels.begin(), labels.end()};
}

std::vector<SimplicialComplex::Face> SimplicialComplex::maximal_faces() const {
    std::vector<Face> maximal;
    for (const Face& f : faces_) {
        bool top = true;
        for (const Face& g : faces_) {
            if (g.size() <= f.size() || g == f) continue;
            if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                top = false;
                break;
            }
        }
        if (top) maximal.push_back(f);
    }
    return maximal;
}

bool is_indispensable(const SimplicialComplex& sigma, int i) {
    if (i < 0 || i > sigma.m())
        throw std::out_of_range("vertex label outside ground set");
    return !sigma.has_face({i});
}

}  // namespace lvmb
