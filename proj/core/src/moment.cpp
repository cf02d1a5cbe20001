#include "lvmb/moment.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lvmb {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double uniform01(std::uint64_t& state) {
    return double(splitmix64(state) >> 11) * 0x1.0p-53;
}

RatVector q_column(const QuotientData& qd, std::size_t coord) {
    RatVector col(qd.n());
    for (std::size_t k = 0; k < qd.n(); ++k) col[k] = qd.q.at(k, coord);
    return col;
}

std::vector<double> to_double_vec(const RatVector& v) {
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_double(v[i]);
    return out;
}

double dot_d(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Ray labels for a directly given fan: defined only when every ray is a
// standard basis vector e_i (label i) or -e_1-...-e_m (label 0).
std::vector<int> standard_ray_labels(const Fan& fan) {
    std::vector<int> labels;
    for (const IntVector& r : fan.rays()) {
        int label = -1;
        std::size_t plus = 0, minus = 0, pos = 0;
        for (std::size_t d = 0; d < r.size(); ++d) {
            if (r[d] == 1) {
                ++plus;
                pos = d;
            } else if (r[d] == -1) {
                ++minus;
            } else if (r[d] != 0) {
                return {};
            }
        }
        if (plus == 1 && minus == 0)
            label = static_cast<int>(pos) + 1;
        else if (minus == r.size() && plus == 0)
            label = 0;
        else
            return {};
        labels.push_back(label);
    }
    return labels;
}

struct AmbientSetup {
    Fan fan;
    std::vector<int> ray_vertex;
};

AmbientSetup ambient_setup(const LVMBData& data) {
    if (data.sigma) {
        AmbientSetup s;
        s.fan = fan_from_complex(*data.sigma);
        s.ray_vertex = data.sigma->vertex_labels();
        return s;
    }
    if (!data.ambient_fan) throw std::invalid_argument("input has neither a complex nor a fan");
    if (data.ambient_fan->ambient_dim() != static_cast<int>(data.m))
        throw std::invalid_argument("ambient fan dimension differs from m");
    if (auto defect = validate_geometry(*data.ambient_fan))
        throw std::invalid_argument("ambient fan is not a fan: " + defect->reason);
    AmbientSetup s;
    s.fan = *data.ambient_fan;
    s.ray_vertex = standard_ray_labels(s.fan);
    return s;
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::LVM: return "LVM";
        case Verdict::LvmbNotLvm: return "LVMB-not-LVM";
        case Verdict::NotLvmb: return "not-LVMB";
    }
    return "?";
}

RatMatrix g_J(const LVMBData& data) {
    return real_projection_span(data.h_basis, data.m);
}

QuotientData build_quotient(const LVMBData& data) {
    QuotientData qd;
    EchelonForm ef = reduced_row_echelon(real_projection_span(data.h_basis, data.m));
    qd.p_h = ef.basis;
    qd.pivot_cols = ef.pivot_cols;

    std::vector<bool> is_pivot(data.m, false);
    for (std::size_t c : qd.pivot_cols) is_pivot[c] = true;
    for (std::size_t c = 0; c < data.m; ++c)
        if (!is_pivot[c]) qd.free_cols.push_back(c);

    const std::size_t n = qd.free_cols.size();
    qd.q = RatMatrix(n, data.m);
    for (std::size_t k = 0; k < n; ++k) {
        qd.q.at(k, qd.free_cols[k]) = 1;
        for (std::size_t j = 0; j < qd.pivot_cols.size(); ++j)
            qd.q.at(k, qd.pivot_cols[j]) = -qd.p_h.at(j, qd.free_cols[k]);
    }
    return qd;
}

namespace {

ClassificationReport conditions_report(const LVMBData& data) {
    ClassificationReport rep;
    AmbientSetup setup = ambient_setup(data);
    rep.ambient_fan = setup.fan;
    rep.ray_vertex = setup.ray_vertex;
    rep.quotient = build_quotient(data);
    rep.ambient_nonsingular = is_nonsingular(rep.ambient_fan);

    // Condition (1): p restricted to h is injective, i.e. dim p(h) doubles
    // the complex dimension of the given basis.
    const std::size_t dim_ph = rep.quotient.p_h.rows();
    const std::size_t expected = 2 * data.h_basis.size();
    rep.lvmb.injectivity.ok = dim_ph == expected;
    rep.lvmb.injectivity.detail = "dim p(h) = " + std::to_string(dim_ph) +
                                  ", 2 x (basis size) = " + std::to_string(expected);

    // Condition (2): the quotient map sends the fan to a complete fan.
    ProjectedFan projected = project_fan(rep.ambient_fan, rep.quotient.q);
    if (std::holds_alternative<FanDefect>(projected)) {
        const FanDefect& d = std::get<FanDefect>(projected);
        rep.lvmb.quotient_fan.ok = false;
        rep.lvmb.quotient_fan.detail = "q(Delta) is not a fan: " + d.reason;
    } else {
        Fan qfan = std::get<Fan>(std::move(projected));
        if (is_complete(qfan)) {
            rep.lvmb.quotient_fan.ok = true;
            rep.lvmb.quotient_fan.detail =
                "q(Delta) is a complete fan in R^" + std::to_string(qfan.ambient_dim());
        } else {
            rep.lvmb.quotient_fan.ok = false;
            rep.lvmb.quotient_fan.detail = "q(Delta) is a fan but not complete";
        }
        rep.quotient_fan = std::move(qfan);
    }
    rep.verdict = Verdict::NotLvmb;
    return rep;
}

}  // namespace

LvmbCheckReport check_lvmb(const LVMBData& data) { return conditions_report(data).lvmb; }

ClassificationReport classify(const LVMBData& data) {
    ClassificationReport rep = conditions_report(data);
    if (!rep.lvmb.ok()) return rep;

    // Polytopality: the support-function LP has optimum 1 or 0 by scale
    // invariance.
    const Fan& qfan = *rep.quotient_fan;
    LPProblem lp = support_function_lp(qfan);
    LPCertificate cert = solve(lp);
    if (cert.status != LPStatus::Optimal)
        throw std::logic_error("support LP must have an optimum");
    if (cert.objective_value != 0 && cert.objective_value != 1)
        throw std::logic_error("support LP optimum must be 0 or 1");
    rep.support_certificate = cert;

    if (cert.objective_value > 0) {
        rep.verdict = Verdict::LVM;
        std::vector<Rational> a(qfan.rays().size());
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = cert.primal[i];
        rep.offsets = a;
        rep.polytope = polytope_from_support(qfan, a);
    } else {
        rep.verdict = Verdict::LvmbNotLvm;
        LPProblem strict = lp;
        RatVector row(lp.num_vars, Rational(0));
        row[lp.num_vars - 1] = 1;
        strict.add(std::move(row), Relation::Ge, Rational(1));  // t >= 1
        LPCertificate farkas = solve(strict);
        if (farkas.status != LPStatus::Infeasible)
            throw std::logic_error("t >= 1 must be infeasible when the optimum is 0");
        rep.strict_infeasibility = farkas;
    }
    return rep;
}

std::vector<double> moment_map(const std::vector<std::complex<double>>& z) {
    std::vector<double> phi(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) phi[i] = std::numbers::pi * std::norm(z[i]);
    return phi;
}

RatVector beta(const QuotientData& quotient, const RatVector& a_coords) {
    if (a_coords.size() != quotient.m())
        throw std::invalid_argument("beta: offsets must have one entry per coordinate");
    RatVector b(quotient.p_h.rows());
    for (std::size_t j = 0; j < quotient.p_h.rows(); ++j) {
        Rational s = 0;
        for (std::size_t i = 0; i < quotient.m(); ++i)
            s -= a_coords[i] * quotient.p_h.at(j, i);
        b[j] = s;
    }
    return b;
}

RatVector coordinate_offsets(const ClassificationReport& report, bool strict) {
    if (report.verdict != Verdict::LVM)
        throw std::invalid_argument("coordinate_offsets: LVM verdict required");
    if (report.ray_vertex.empty() && !report.ambient_fan.rays().empty())
        throw std::invalid_argument(
            "moment-level operations require standard-basis ambient rays");

    const std::size_t m = report.quotient.m();
    const Fan& qfan = *report.quotient_fan;
    const auto& a = *report.offsets;

    RatVector a_coords(m, Rational(0));
    std::vector<bool> covered(m, false);
    for (std::size_t j = 0; j < qfan.rays().size(); ++j) {
        int v = report.ray_vertex[j];
        if (v == 0) continue;  // e_0 is not a coordinate
        const std::size_t coord = static_cast<std::size_t>(v - 1);
        // q(e_v) = scale * primitive ray; inequalities rescale alongside.
        RatVector col = q_column(report.quotient, coord);
        const IntVector& prim = qfan.rays()[j];
        std::size_t d = 0;
        while (d < prim.size() && prim[d] == 0) ++d;
        Rational scale = col[d] / Rational(static_cast<long>(prim[d]));
        a_coords[coord] = scale * a[j];
        covered[coord] = true;
    }
    if (strict) {
        for (std::size_t i = 0; i < m; ++i) {
            if (covered[i]) continue;
            PolytopeMinResult res =
                minimize_over_polytope(*report.polytope, q_column(report.quotient, i));
            a_coords[i] = res.value - 1;
        }
    }
    return a_coords;
}

namespace {

struct SampleFrame {
    const ClassificationReport& report;
    RatVector a_coords;                 // strict coordinate offsets
    std::vector<RatVector> q_cols;      // q(e_i) per coordinate
    std::vector<double> a_coords_d;
    std::vector<std::vector<double>> q_cols_d;
    int e0_ray = -1;                    // quotient-fan ray of vertex 0, if any

    explicit SampleFrame(const ClassificationReport& rep)
        : report(rep), a_coords(coordinate_offsets(rep, true)) {
        const std::size_t m = rep.quotient.m();
        for (std::size_t i = 0; i < m; ++i) {
            q_cols.push_back(q_column(rep.quotient, i));
            q_cols_d.push_back(to_double_vec(q_cols.back()));
        }
        a_coords_d = to_double_vec(a_coords);
        for (std::size_t j = 0; j < rep.ray_vertex.size() && j < rep.quotient_fan->rays().size();
             ++j)
            if (rep.ray_vertex[j] == 0) e0_ray = static_cast<int>(j);
    }

    // Coordinates 1..m with r exactly zero must form (with the e_0 ray when
    // it is tight) a cone of the quotient fan; that is exactly membership
    // of the sampled point in X(Delta).
    void check_pattern(const std::vector<int>& tight_rays) const {
        ConeKey key(tight_rays.begin(), tight_rays.end());
        std::sort(key.begin(), key.end());
        if (!report.quotient_fan->has_cone(key))
            throw std::runtime_error("sample lies outside X(Delta): tight ray set is not a cone");
    }

    int ray_of_coord(std::size_t coord) const {
        for (std::size_t j = 0; j < report.ray_vertex.size(); ++j)
            if (report.ray_vertex[j] == static_cast<int>(coord) + 1 &&
                j < report.quotient_fan->rays().size())
                return static_cast<int>(j);
        return -1;
    }
};

SamplePoint build_sample_exact(const SampleFrame& frame, const RatVector& alpha,
                               std::uint64_t& phase_state) {
    const ClassificationReport& rep = frame.report;
    const std::size_t m = rep.quotient.m();
    if (!contains(*rep.polytope, alpha))
        throw std::invalid_argument("sample_at: alpha is not in the polytope");

    RatVector r_exact(m);
    std::vector<int> tight_rays;
    for (std::size_t i = 0; i < m; ++i) {
        r_exact[i] = dot(frame.q_cols[i], alpha) - frame.a_coords[i];
        if (r_exact[i] < 0) throw std::logic_error("negative level coordinate at exact alpha");
        if (r_exact[i] == 0) {
            int ray = frame.ray_of_coord(i);
            // The strict offsets keep ray-less coordinates at least 1.
            if (ray < 0)
                throw std::logic_error("indispensable coordinate hit zero on the level set");
            tight_rays.push_back(ray);
        }
    }
    if (frame.e0_ray >= 0) {
        const IntVector& prim = rep.quotient_fan->rays()[static_cast<std::size_t>(frame.e0_ray)];
        Rational lhs = dot(to_rational(prim), alpha);
        if (lhs == (*rep.offsets)[static_cast<std::size_t>(frame.e0_ray)])
            tight_rays.push_back(frame.e0_ray);
    }
    frame.check_pattern(tight_rays);

    SamplePoint s;
    s.r.resize(m);
    s.z.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        s.r[i] = to_double(r_exact[i]);
        if (r_exact[i] == 0) {
            s.z[i] = 0;
            s.zero_pattern.push_back(static_cast<int>(i) + 1);
        } else {
            double theta = 2 * std::numbers::pi * uniform01(phase_state);
            double rho = std::sqrt(s.r[i] / std::numbers::pi);
            s.z[i] = std::polar(rho, theta);
        }
    }
    return s;
}

}  // namespace

std::vector<SamplePoint> sample_zp(const ClassificationReport& report, std::size_t count,
                                   std::uint64_t seed) {
    if (report.verdict != Verdict::LVM)
        throw std::invalid_argument("sample_zp: LVM verdict required");
    SampleFrame frame(report);
    const HPolytope& p = *report.polytope;
    const std::size_t n = p.dim;

    auto verts = vertices(p, *report.quotient_fan);
    std::vector<double> lo(n, 0.0), hi(n, 0.0);
    bool first = true;
    for (const auto& [cone, v] : verts) {
        for (std::size_t d = 0; d < n; ++d) {
            double x = to_double(v[d]);
            if (first || x < lo[d]) lo[d] = x;
            if (first || x > hi[d]) hi[d] = x;
        }
        first = false;
    }

    std::uint64_t state = seed ^ 0xc0ffee11d00dULL;
    std::vector<SamplePoint> out;
    out.reserve(count);
    constexpr std::size_t kTrialCap = 1'000'000;
    for (std::size_t s = 0; s < count; ++s) {
        std::vector<double> alpha(n);
        bool accepted = false;
        for (std::size_t trial = 0; trial < kTrialCap; ++trial) {
            for (std::size_t d = 0; d < n; ++d)
                alpha[d] = lo[d] + (hi[d] - lo[d]) * uniform01(state);
            if (contains(p, alpha, 0.0)) {
                accepted = true;
                break;
            }
        }
        if (!accepted)
            throw std::runtime_error("sample_zp: rejection sampling exhausted its trial cap "
                                     "(degenerate polytope)");

        const std::size_t m = report.quotient.m();
        SamplePoint sp;
        sp.r.resize(m);
        sp.z.resize(m);
        std::vector<int> tight_rays;
        for (std::size_t i = 0; i < m; ++i) {
            double r = dot_d(frame.q_cols_d[i], alpha) - frame.a_coords_d[i];
            if (r < 0) r = 0;
            sp.r[i] = r;
            if (r == 0) {
                sp.zero_pattern.push_back(static_cast<int>(i) + 1);
                int ray = frame.ray_of_coord(i);
                if (ray >= 0) tight_rays.push_back(ray);
                sp.z[i] = 0;
            } else {
                double theta = 2 * std::numbers::pi * uniform01(state);
                sp.z[i] = std::polar(std::sqrt(r / std::numbers::pi), theta);
            }
        }
        if (!tight_rays.empty()) frame.check_pattern(tight_rays);
        out.push_back(std::move(sp));
    }
    return out;
}

SamplePoint sample_at(const ClassificationReport& report, const RatVector& alpha,
                      std::uint64_t phase_seed) {
    if (report.verdict != Verdict::LVM)
        throw std::invalid_argument("sample_at: LVM verdict required");
    SampleFrame frame(report);
    std::uint64_t state = phase_seed ^ 0xfacefeedULL;
    return build_sample_exact(frame, alpha, state);
}

LiftedMoment lifted_moment(const ClassificationReport& report, const RatVector& a_coords,
                           const SamplePoint& sample, double tol) {
    const QuotientData& qd = report.quotient;
    const std::size_t m = qd.m();
    if (sample.z.size() != m) throw std::invalid_argument("lifted_moment: sample length != m");

    std::vector<double> w = moment_map(sample.z);
    for (std::size_t i = 0; i < m; ++i) w[i] += to_double(a_coords[i]);

    // q restricted to the free columns is the identity, so q^* alpha = w has
    // the unique candidate alpha = w on the free coordinates.
    LiftedMoment out;
    out.alpha.resize(qd.n());
    for (std::size_t k = 0; k < qd.n(); ++k) out.alpha[k] = w[qd.free_cols[k]];

    for (std::size_t i = 0; i < m; ++i) {
        double qa = 0;
        for (std::size_t k = 0; k < qd.n(); ++k) qa += to_double(qd.q.at(k, i)) * out.alpha[k];
        out.residual = std::max(out.residual, std::abs(w[i] - qa));
    }
    if (out.residual > tol)
        throw std::runtime_error("lifted_moment: residual above tolerance (point is off the "
                                 "level set)");
    return out;
}

RatVector lifted_moment_exact(const ClassificationReport& report, const RatVector& a_coords,
                              const RatVector& alpha) {
    const QuotientData& qd = report.quotient;
    const std::size_t m = qd.m();

    RatVector w(m);
    for (std::size_t i = 0; i < m; ++i) {
        RatVector col = q_column(qd, i);
        Rational r = dot(col, alpha) - a_coords[i];  // level coordinate at alpha
        w[i] = r + a_coords[i];
    }
    RatVector lifted(qd.n());
    for (std::size_t k = 0; k < qd.n(); ++k) lifted[k] = w[qd.free_cols[k]];
    for (std::size_t i = 0; i < m; ++i) {
        Rational qa = 0;
        for (std::size_t k = 0; k < qd.n(); ++k) qa += qd.q.at(k, i) * lifted[k];
        if (qa != w[i])
            throw std::logic_error("lifted_moment_exact: q^* alpha != Phi + c at exact data");
    }
    return lifted;
}

std::optional<ConeKey> cone_with_point_in_relint(const Fan& fan, const RatVector& x) {
    if (is_zero_vector(x)) return ConeKey{};
    for (const ConeKey& c : fan.cones()) {
        if (c.empty()) continue;
        std::vector<RatVector> rows;
        for (int i : c) rows.push_back(to_rational(fan.rays()[static_cast<std::size_t>(i)]));
        auto lambda = solve_linear(RatMatrix::from_rows(rows).transposed(), x);
        if (!lambda) continue;
        bool strict = true;
        for (const auto& l : *lambda)
            if (l <= 0) {
                strict = false;
                break;
            }
        if (strict) return c;
    }
    return std::nullopt;
}

bool ConvexityReport::all_ok() const {
    if (!membership_ok || !vertex_images_exact || !normality_ok || !tightness_ok) return false;
    if (!failure.empty()) return false;
    for (const auto& d : directions)
        if (!d.min_ok || !d.face_match || !d.spread_ok) return false;
    return true;
}

ConvexityReport verify_convexity(const ClassificationReport& report, std::size_t samples,
                                 std::uint64_t seed, double tol) {
    if (report.verdict != Verdict::LVM)
        throw std::invalid_argument("verify_convexity: LVM verdict required");

    ConvexityReport out;
    out.samples = samples;
    out.seed = seed;
    out.tol = tol;

    const HPolytope& p = *report.polytope;
    const Fan& qfan = *report.quotient_fan;
    const QuotientData& qd = report.quotient;
    RatVector a_coords = coordinate_offsets(report, true);

    // (b) Exact route: per-cone vertices are in P, their vertex-pattern
    // samples lift exactly back onto them, and every inequality is tight at
    // some vertex.
    std::map<ConeKey, RatVector> verts;
    try {
        SampleFrame frame(report);
        verts = vertices(p, qfan);
        out.vertex_images_exact = true;
        std::vector<bool> tight_somewhere(p.normals.size(), false);
        std::uint64_t phase = seed ^ 0x9e3779b9ULL;
        for (const auto& [sigma, v] : verts) {
            if (!contains(p, v)) {
                out.vertex_images_exact = false;
                out.failure = "vertex violates an inequality of P";
                break;
            }
            RatVector lifted = lifted_moment_exact(report, a_coords, v);
            if (lifted != v) {
                out.vertex_images_exact = false;
                out.failure = "exact lifted image differs from its vertex";
                break;
            }
            build_sample_exact(frame, v, phase);  // pattern membership asserted inside
            for (std::size_t i = 0; i < p.normals.size(); ++i)
                if (dot(p.normals[i], v) == p.offsets[i]) tight_somewhere[i] = true;
        }
        out.tightness_ok = std::all_of(tight_somewhere.begin(), tight_somewhere.end(),
                                       [](bool b) { return b; });
    } catch (const std::exception& e) {
        out.vertex_images_exact = false;
        out.failure = e.what();
    }

    std::string diag;
    out.normality_ok = is_normal_to(p, qfan, &diag);
    if (!out.normality_ok && out.failure.empty()) out.failure = "normal fan mismatch: " + diag;

    // (a) Sampled membership and lift residuals.
    std::vector<SamplePoint> pts;
    std::vector<std::vector<double>> lifted_pts;
    try {
        pts = sample_zp(report, samples, seed);
        for (const SamplePoint& s : pts) {
            LiftedMoment lm = lifted_moment(report, a_coords, s, 1.0);  // record, gate below
            out.max_lift_residual = std::max(out.max_lift_residual, lm.residual);
            out.max_membership_violation =
                std::max(out.max_membership_violation, membership_violation(p, lm.alpha));
            lifted_pts.push_back(std::move(lm.alpha));
        }
        out.membership_ok =
            out.max_membership_violation <= tol && out.max_lift_residual <= tol;
    } catch (const std::exception& e) {
        out.membership_ok = false;
        if (out.failure.empty()) out.failure = e.what();
    }

    // (c) Directions: kernel rows of p(h) first, then seeded integer
    // directions.
    std::vector<RatVector> dirs;
    for (std::size_t j = 0; j < qd.p_h.rows(); ++j) dirs.push_back(qd.p_h.row(j));
    std::uint64_t dstate = seed ^ 0xd1ec710a5ULL;
    while (dirs.size() < qd.p_h.rows() + 20) {
        RatVector v(qd.m());
        bool nonzero = false;
        for (std::size_t i = 0; i < qd.m(); ++i) {
            long x = static_cast<long>(splitmix64(dstate) % 11) - 5;
            v[i] = Rational(x);
            nonzero = nonzero || x != 0;
        }
        if (nonzero) dirs.push_back(std::move(v));
    }

    for (const RatVector& v : dirs) {
        DirectionCheck dc;
        dc.v = v;
        dc.qv = mat_vec(qd.q, v);
        dc.kernel_direction = is_zero_vector(dc.qv);

        PolytopeMinResult res = minimize_over_polytope(p, dc.qv);
        dc.exact_min = res.value;
        dc.lp_tight_set = res.tight_set;

        auto cone = cone_with_point_in_relint(qfan, dc.qv);
        if (!cone) {
            dc.face_match = false;
        } else {
            dc.predicted_cone = *cone;
            std::vector<std::size_t> predicted(cone->begin(), cone->end());
            dc.face_match = predicted == dc.lp_tight_set;
        }

        std::vector<double> qv_d = to_double_vec(dc.qv);
        double mn = 0, mx = 0;
        bool first = true;
        for (const auto& alpha : lifted_pts) {
            double h = dot_d(alpha, qv_d);
            if (first || h < mn) mn = h;
            if (first || h > mx) mx = h;
            first = false;
        }
        dc.sampled_min = mn;
        dc.sampled_spread = mx - mn;
        dc.min_ok = lifted_pts.empty() || mn >= to_double(dc.exact_min) - tol;
        dc.spread_ok = !dc.kernel_direction || lifted_pts.empty() || dc.sampled_spread <= tol;
        out.directions.push_back(std::move(dc));
    }
    return out;
}

}  // namespace lvmb
