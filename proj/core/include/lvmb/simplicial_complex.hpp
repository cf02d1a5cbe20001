#pragma once

#include <set>
#include <vector>

namespace lvmb {

// Abstract simplicial complex on the ground set {0, ..., m}. Downward
// closed, contains the empty face, and never contains the full ground set.
// Vertices that appear in no face are the indispensable ones.
class SimplicialComplex {
public:
    using Face = std::vector<int>;  // strictly increasing labels

    // Downward closure of the listed faces. Throws std::invalid_argument
    // when a face has a label outside {0,...,m} or equals the whole ground
    // set.
    static SimplicialComplex from_maximal(int m, const std::vector<Face>& maximal_faces);

    int m() const { return m_; }
    const std::set<Face>& faces() const { return faces_; }
    bool has_face(Face f) const;

    // Labels in {0,...,m} that appear in some face, ascending.
    std::vector<int> vertex_labels() const;

    std::vector<Face> maximal_faces() const;

private:
    int m_ = 0;
    std::set<Face> faces_;
};

// True iff {i} is not a face. Throws std::out_of_range when i > m.
bool is_indispensable(const SimplicialComplex& sigma, int i);

}  // namespace lvmb
