#include "lvmb/polytope.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "lvmb/lp.hpp"

namespace lvmb {

namespace {

std::string vec_str(const RatVector& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
    os << ")";
    return os.str();
}

}  // namespace

HPolytope polytope_from_support(const Fan& qfan, const std::vector<Rational>& a) {
    if (a.size() != qfan.rays().size())
        throw std::invalid_argument("polytope_from_support: one offset per ray required");
    HPolytope p;
    p.dim = static_cast<std::size_t>(qfan.ambient_dim());
    for (std::size_t i = 0; i < a.size(); ++i) {
        p.normals.push_back(to_rational(qfan.rays()[i]));
        p.offsets.push_back(a[i]);
    }
    return p;
}

std::map<ConeKey, RatVector> vertices(const HPolytope& p, const Fan& qfan) {
    const std::size_t n = p.dim;
    std::map<ConeKey, RatVector> out;
    std::map<RatVector, ConeKey> seen;
    for (const ConeKey& sigma : qfan.maximal_cones()) {
        if (sigma.size() != n)
            throw PolytopeError("vertices: fan has a maximal cone of deficient dimension");
        RatMatrix sys(n, n);
        RatVector rhs(n);
        for (std::size_t r = 0; r < n; ++r) {
            const std::size_t ray = static_cast<std::size_t>(sigma[r]);
            for (std::size_t c = 0; c < n; ++c) sys.at(r, c) = p.normals[ray][c];
            rhs[r] = p.offsets[ray];
        }
        if (n > 0 && rank(sys) != n)
            throw PolytopeError("vertices: singular per-cone system (support function "
                                "is not strictly convex)");
        auto x = solve_linear(sys, rhs);
        if (!x) throw PolytopeError("vertices: inconsistent per-cone system");
        auto [it, fresh] = seen.emplace(*x, sigma);
        if (!fresh)
            throw PolytopeError("vertices: two maximal cones share the vertex " + vec_str(*x) +
                                " (support function is not strictly convex)");
        out[sigma] = *x;
    }
    return out;
}

FaceDescriptor min_face(const HPolytope& p, const RatVector& v) {
    PolytopeMinResult res = minimize_over_polytope(p, v);
    return FaceDescriptor{res.tight_set, res.face_dim};
}

std::vector<RatVector> enumerate_vertices(const HPolytope& p) {
    const std::size_t n = p.dim;
    const std::size_t k = p.normals.size();

    if (n == 0) return {RatVector{}};

    // Boundedness along every axis; also rules out the empty case.
    for (std::size_t d = 0; d < n; ++d) {
        for (int sign : {1, -1}) {
            LPProblem lp;
            lp.num_vars = n;
            lp.sense = Sense::Minimize;
            lp.objective.assign(n, Rational(0));
            lp.objective[d] = sign;
            for (std::size_t i = 0; i < k; ++i)
                lp.add(p.normals[i], Relation::Ge, p.offsets[i]);
            LPCertificate cert = solve(lp);
            if (cert.status == LPStatus::Infeasible) throw PolytopeError("polytope is empty");
            if (cert.status == LPStatus::Unbounded) throw PolytopeError("polytope is unbounded");
        }
    }

    std::vector<RatVector> verts;
    // All n-subsets of inequalities, solved as equalities.
    std::vector<std::size_t> comb(n);
    for (std::size_t i = 0; i < n; ++i) comb[i] = i;
    if (k < n) throw PolytopeError("polytope has fewer inequalities than its dimension");
    for (;;) {
        RatMatrix sys(n, n);
        RatVector rhs(n);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) sys.at(r, c) = p.normals[comb[r]][c];
            rhs[r] = p.offsets[comb[r]];
        }
        if (rank(sys) == n) {
            auto x = solve_linear(sys, rhs);
            if (x && contains(p, *x) &&
                std::find(verts.begin(), verts.end(), *x) == verts.end())
                verts.push_back(*x);
        }
        // next combination
        std::size_t i = n;
        while (i > 0 && comb[i - 1] == k - n + i - 1) --i;
        if (i == 0) break;
        ++comb[i - 1];
        for (std::size_t j = i; j < n; ++j) comb[j] = comb[j - 1] + 1;
    }
    if (verts.empty()) throw PolytopeError("polytope has no vertices");
    return verts;
}

Fan normal_fan(const HPolytope& p) {
    const std::size_t n = p.dim;
    if (n == 0) return Fan::make(0, {}, {ConeKey{}});

    std::vector<RatVector> verts = enumerate_vertices(p);

    std::vector<IntVector> rays;
    std::map<IntVector, int> ray_index;
    std::vector<ConeKey> top_cones;
    for (const RatVector& v : verts) {
        std::vector<std::size_t> tight;
        for (std::size_t i = 0; i < p.normals.size(); ++i)
            if (dot(p.normals[i], v) == p.offsets[i]) tight.push_back(i);
        if (tight.size() != n)
            throw PolytopeError("normal_fan: vertex " + vec_str(v) + " has " +
                                std::to_string(tight.size()) +
                                " tight inequalities (polytope is not simple)");
        ConeKey cone;
        for (std::size_t i : tight) {
            IntVector prim = primitivize(p.normals[i]);
            auto it = ray_index.find(prim);
            if (it == ray_index.end()) {
                it = ray_index.emplace(prim, static_cast<int>(rays.size())).first;
                rays.push_back(prim);
            }
            cone.push_back(it->second);
        }
        top_cones.push_back(std::move(cone));
    }
    return Fan::make(static_cast<int>(n), std::move(rays), std::move(top_cones));
}

bool is_normal_to(const HPolytope& p, const Fan& qfan, std::string* diagnostic) {
    Fan nf;
    try {
        nf = normal_fan(p);
    } catch (const PolytopeError& e) {
        if (diagnostic) *diagnostic = e.what();
        return false;
    }

    // A normal polytope has every <., q(e_i)> face nonempty, so an
    // inequality that never binds refutes normality outright.
    if (nf.rays().size() != p.normals.size()) {
        if (diagnostic) {
            std::map<IntVector, int> have;
            for (std::size_t i = 0; i < nf.rays().size(); ++i) have[nf.rays()[i]] = 1;
            for (std::size_t i = 0; i < p.normals.size(); ++i) {
                IntVector prim = primitivize(p.normals[i]);
                if (!have.count(prim)) {
                    *diagnostic = "inequality " + std::to_string(i) + " with normal " +
                                  vec_str(p.normals[i]) + " is tight at no vertex (redundant)";
                    break;
                }
            }
            if (diagnostic->empty()) *diagnostic = "duplicate facet normals";
        }
        return false;
    }

    std::string why;
    bool ok = fans_equal(nf, qfan, &why);
    if (!ok && diagnostic) *diagnostic = why;
    return ok;
}

bool contains(const HPolytope& p, const RatVector& x) {
    if (x.size() != p.dim) throw std::invalid_argument("contains: dimension mismatch");
    for (std::size_t i = 0; i < p.normals.size(); ++i)
        if (dot(p.normals[i], x) < p.offsets[i]) return false;
    return true;
}

bool contains(const HPolytope& p, const std::vector<double>& x, double tol) {
    if (x.size() != p.dim) throw std::invalid_argument("contains: dimension mismatch");
    for (std::size_t i = 0; i < p.normals.size(); ++i) {
        double lhs = 0;
        for (std::size_t j = 0; j < p.dim; ++j) lhs += to_double(p.normals[i][j]) * x[j];
        if (lhs < to_double(p.offsets[i]) - tol) return false;
    }
    return true;
}

double membership_violation(const HPolytope& p, const std::vector<double>& x) {
    double worst = 0;
    for (std::size_t i = 0; i < p.normals.size(); ++i) {
        double lhs = 0;
        for (std::size_t j = 0; j < p.dim; ++j) lhs += to_double(p.normals[i][j]) * x[j];
        worst = std::max(worst, to_double(p.offsets[i]) - lhs);
    }
    return worst;
}

}  // namespace lvmb
