#include "lvmb/fan.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "lvmb/lp.hpp"

namespace lvmb {

namespace {

RatMatrix ray_matrix(const Fan& f, const ConeKey& cone) {
    std::vector<RatVector> rows;
    for (int i : cone) rows.push_back(to_rational(f.rays()[static_cast<std::size_t>(i)]));
    if (rows.empty()) return RatMatrix(0, static_cast<std::size_t>(f.ambient_dim()));
    return RatMatrix::from_rows(rows);
}

// A cone pos(w_1..w_k) with nonzero generators contains a line iff some
// nonnegative combination of the generators vanishes nontrivially.
bool cone_contains_line(const Fan& f, const ConeKey& cone) {
    const std::size_t k = cone.size();
    const std::size_t n = static_cast<std::size_t>(f.ambient_dim());
    LPProblem lp;
    lp.num_vars = k;
    lp.sense = Sense::Maximize;
    lp.objective.assign(k, Rational(1));
    for (std::size_t d = 0; d < n; ++d) {
        RatVector row(k);
        for (std::size_t j = 0; j < k; ++j)
            row[j] = Rational(static_cast<long>(f.rays()[static_cast<std::size_t>(cone[j])][d]));
        lp.add(std::move(row), Relation::Eq, Rational(0));
    }
    for (std::size_t j = 0; j < k; ++j) {
        RatVector row(k, Rational(0));
        row[j] = 1;
        lp.add(std::move(row), Relation::Ge, Rational(0));
    }
    lp.add(RatVector(k, Rational(-1)), Relation::Ge, Rational(-1));  // sum <= 1
    LPCertificate cert = solve(lp);
    return cert.status == LPStatus::Optimal && cert.objective_value > 0;
}

// Do two simplicial cones meet exactly in the face spanned by their shared
// rays? Any point of the intersection has a unique representation in each
// cone, so the condition fails iff some point uses a non-shared generator.
bool meet_in_common_face(const Fan& f, const ConeKey& a, const ConeKey& b) {
    const std::size_t n = static_cast<std::size_t>(f.ambient_dim());
    const std::size_t ka = a.size(), kb = b.size();

    LPProblem lp;
    lp.num_vars = ka + kb;
    lp.sense = Sense::Maximize;
    lp.objective.assign(lp.num_vars, Rational(0));
    for (std::size_t j = 0; j < ka; ++j)
        if (!std::binary_search(b.begin(), b.end(), a[j])) lp.objective[j] = 1;
    for (std::size_t j = 0; j < kb; ++j)
        if (!std::binary_search(a.begin(), a.end(), b[j])) lp.objective[ka + j] = 1;

    for (std::size_t d = 0; d < n; ++d) {
        RatVector row(lp.num_vars, Rational(0));
        for (std::size_t j = 0; j < ka; ++j)
            row[j] = Rational(static_cast<long>(f.rays()[static_cast<std::size_t>(a[j])][d]));
        for (std::size_t j = 0; j < kb; ++j)
            row[ka + j] = -Rational(static_cast<long>(f.rays()[static_cast<std::size_t>(b[j])][d]));
        lp.add(std::move(row), Relation::Eq, Rational(0));
    }
    for (std::size_t j = 0; j < lp.num_vars; ++j) {
        RatVector row(lp.num_vars, Rational(0));
        row[j] = 1;
        lp.add(std::move(row), Relation::Ge, Rational(0));
    }
    lp.add(RatVector(lp.num_vars, Rational(-1)), Relation::Ge, Rational(-1));
    LPCertificate cert = solve(lp);
    return !(cert.status == LPStatus::Optimal && cert.objective_value > 0);
}

}  // namespace

Fan Fan::make(int ambient_dim, std::vector<IntVector> rays, std::vector<ConeKey> cones) {
    if (ambient_dim < 0) throw std::invalid_argument("fan: negative ambient dimension");
    Fan f;
    f.ambient_dim_ = ambient_dim;

    std::set<IntVector> seen;
    for (const auto& r : rays) {
        if (r.size() != static_cast<std::size_t>(ambient_dim))
            throw std::invalid_argument("fan: ray dimension mismatch");
        if (!is_primitive(r))
            throw std::invalid_argument("fan: ray is not a primitive integer vector");
        if (!seen.insert(r).second) throw std::invalid_argument("fan: duplicate ray");
    }
    f.rays_ = std::move(rays);

    f.cones_.insert(ConeKey{});
    for (ConeKey c : cones) {
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        for (int i : c)
            if (i < 0 || static_cast<std::size_t>(i) >= f.rays_.size())
                throw std::invalid_argument("fan: cone refers to a missing ray");
        const std::size_t k = c.size();
        for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
            ConeKey sub;
            for (std::size_t b = 0; b < k; ++b)
                if (mask & (std::size_t{1} << b)) sub.push_back(c[b]);
            f.cones_.insert(std::move(sub));
        }
    }
    return f;
}

std::vector<ConeKey> Fan::maximal_cones() const {
    std::vector<ConeKey> out;
    for (const ConeKey& c : cones_) {
        bool top = true;
        for (const ConeKey& d : cones_) {
            if (d.size() <= c.size()) continue;
            if (std::includes(d.begin(), d.end(), c.begin(), c.end())) {
                top = false;
                break;
            }
        }
        if (top) out.push_back(c);
    }
    return out;
}

Fan fan_from_complex(const SimplicialComplex& sigma) {
    const int m = sigma.m();
    const std::vector<int> labels = sigma.vertex_labels();

    std::vector<IntVector> rays;
    std::map<int, int> ray_of_label;
    for (int v : labels) {
        IntVector e(static_cast<std::size_t>(m), 0);
        if (v == 0) {
            for (auto& x : e) x = -1;
        } else {
            e[static_cast<std::size_t>(v - 1)] = 1;
        }
        ray_of_label[v] = static_cast<int>(rays.size());
        rays.push_back(std::move(e));
    }

    std::vector<ConeKey> cones;
    for (const auto& face : sigma.faces()) {
        ConeKey c;
        for (int v : face) c.push_back(ray_of_label[v]);
        cones.push_back(std::move(c));
    }
    return Fan::make(m, std::move(rays), std::move(cones));
}

bool is_nonsingular(const Fan& f) {
    for (const ConeKey& c : f.maximal_cones()) {
        std::vector<IntVector> gens;
        for (int i : c) gens.push_back(f.rays()[static_cast<std::size_t>(i)]);
        if (!extends_to_z_basis(gens)) return false;
    }
    return true;
}

std::optional<FanDefect> validate_geometry(const Fan& f) {
    for (const ConeKey& c : f.maximal_cones()) {
        if (c.empty()) continue;
        if (rank(ray_matrix(f, c)) != c.size()) {
            if (cone_contains_line(f, c))
                return FanDefect{"cone is not strongly convex (contains a line)", c, {}};
            return FanDefect{"cone has linearly dependent generators (not simplicial)", c, {}};
        }
    }
    const auto max_cones = f.maximal_cones();
    for (std::size_t i = 0; i < max_cones.size(); ++i)
        for (std::size_t j = i + 1; j < max_cones.size(); ++j)
            if (!meet_in_common_face(f, max_cones[i], max_cones[j]))
                return FanDefect{"cones do not intersect in a common face", max_cones[i],
                                 max_cones[j]};
    return std::nullopt;
}

ProjectedFan project_fan(const Fan& f, const RatMatrix& q) {
    if (q.cols() != static_cast<std::size_t>(f.ambient_dim()))
        throw std::invalid_argument("project_fan: quotient map has wrong width");
    if (rank(q) != q.rows())
        throw std::invalid_argument("project_fan: quotient map must have full row rank");
    const std::size_t n = q.rows();

    if (n == 0) return Fan::make(0, {}, {ConeKey{}});

    std::vector<IntVector> images;
    std::map<IntVector, int> first_of;
    for (std::size_t i = 0; i < f.rays().size(); ++i) {
        RatVector img = mat_vec(q, to_rational(f.rays()[i]));
        if (is_zero_vector(img))
            return FanDefect{"ray " + std::to_string(i) + " projects to zero",
                             ConeKey{static_cast<int>(i)},
                             {}};
        IntVector prim = primitivize(img);
        auto [it, fresh] = first_of.emplace(prim, static_cast<int>(i));
        if (!fresh)
            return FanDefect{"rays project to the same primitive vector",
                             ConeKey{it->second},
                             ConeKey{static_cast<int>(i)}};
        images.push_back(std::move(prim));
    }

    std::vector<ConeKey> cones(f.cones().begin(), f.cones().end());
    Fan qfan = Fan::make(static_cast<int>(n), std::move(images), std::move(cones));
    if (auto defect = validate_geometry(qfan)) return *defect;
    return qfan;
}

namespace {

// Deterministic small PRNG for the completeness cross-check.
std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

bool max_cone_contains(const Fan& f, const ConeKey& cone, const RatVector& x) {
    RatMatrix gens_t = ray_matrix(f, cone).transposed();
    auto lambda = solve_linear(gens_t, x);
    if (!lambda) return false;
    for (const auto& l : *lambda)
        if (l < 0) return false;
    return true;
}

}  // namespace

bool fan_contains_point(const Fan& f, const RatVector& x) {
    if (is_zero_vector(x)) return true;
    for (const ConeKey& c : f.maximal_cones())
        if (!c.empty() && max_cone_contains(f, c, x)) return true;
    return false;
}

bool is_complete(const Fan& f) {
    const std::size_t n = static_cast<std::size_t>(f.ambient_dim());
    if (n == 0) return true;

    const auto max_cones = f.maximal_cones();
    for (const ConeKey& c : max_cones)
        if (c.size() != n) return false;

    // Wall counting: every (n-1)-subset of a maximal cone in exactly two.
    std::map<ConeKey, std::vector<std::size_t>> wall_owners;
    for (std::size_t ci = 0; ci < max_cones.size(); ++ci) {
        const ConeKey& c = max_cones[ci];
        for (std::size_t skip = 0; skip < c.size(); ++skip) {
            ConeKey wall;
            for (std::size_t j = 0; j < c.size(); ++j)
                if (j != skip) wall.push_back(c[j]);
            wall_owners[wall].push_back(ci);
        }
    }
    for (const auto& [wall, owners] : wall_owners)
        if (owners.size() != 2) return false;

    // Wall connectivity of the maximal cones.
    std::vector<bool> visited(max_cones.size(), false);
    std::queue<std::size_t> frontier;
    if (!max_cones.empty()) {
        frontier.push(0);
        visited[0] = true;
    }
    std::map<std::size_t, std::vector<std::size_t>> adj;
    for (const auto& [wall, owners] : wall_owners) {
        adj[owners[0]].push_back(owners[1]);
        adj[owners[1]].push_back(owners[0]);
    }
    std::size_t reached = max_cones.empty() ? 0 : 1;
    while (!frontier.empty()) {
        std::size_t c = frontier.front();
        frontier.pop();
        for (std::size_t d : adj[c])
            if (!visited[d]) {
                visited[d] = true;
                ++reached;
                frontier.push(d);
            }
    }
    if (reached != max_cones.size() || max_cones.empty()) return false;

    // Cross-check: seeded random rational points must all be covered.
    std::uint64_t state = 0x5eedf00dULL + 101 * n;
    for (int trial = 0; trial < 64; ++trial) {
        RatVector x(n);
        for (std::size_t d = 0; d < n; ++d) {
            long num = static_cast<long>(splitmix64(state) % 2001) - 1000;
            long den = static_cast<long>(splitmix64(state) % 9) + 1;
            x[d] = make_rational(num, den);
        }
        if (!fan_contains_point(f, x))
            throw std::logic_error(
                "is_complete: wall criterion and random-point membership disagree");
    }
    return true;
}

std::vector<ConeKey> faces_of(const ConeKey& cone, const Fan& f) {
    ConeKey c = cone;
    std::sort(c.begin(), c.end());
    if (!f.has_cone(c)) throw std::invalid_argument("faces_of: cone is not in the fan");
    std::vector<ConeKey> out;
    const std::size_t k = c.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        ConeKey sub;
        for (std::size_t b = 0; b < k; ++b)
            if (mask & (std::size_t{1} << b)) sub.push_back(c[b]);
        out.push_back(std::move(sub));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool fans_equal(const Fan& a, const Fan& b, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (a.ambient_dim() != b.ambient_dim()) return fail("ambient dimensions differ");
    if (a.rays().size() != b.rays().size()) return fail("ray counts differ");

    std::map<IntVector, int> b_index;
    for (std::size_t i = 0; i < b.rays().size(); ++i)
        b_index[b.rays()[i]] = static_cast<int>(i);
    std::vector<int> remap(a.rays().size());
    for (std::size_t i = 0; i < a.rays().size(); ++i) {
        auto it = b_index.find(a.rays()[i]);
        if (it == b_index.end()) {
            std::ostringstream os;
            os << "ray (";
            for (std::size_t d = 0; d < a.rays()[i].size(); ++d)
                os << (d ? "," : "") << a.rays()[i][d];
            os << ") has no match";
            return fail(os.str());
        }
        remap[i] = it->second;
    }

    std::set<ConeKey> a_mapped;
    for (const ConeKey& c : a.cones()) {
        ConeKey mc;
        for (int i : c) mc.push_back(remap[static_cast<std::size_t>(i)]);
        std::sort(mc.begin(), mc.end());
        a_mapped.insert(std::move(mc));
    }
    if (a_mapped != b.cones()) return fail("cone collections differ");
    return true;
}

}  // namespace lvmb
