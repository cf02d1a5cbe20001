#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lvmb/fan.hpp"
#include "lvmb/lp.hpp"
#include "lvmb/matrix.hpp"
#include "lvmb/polytope.hpp"
#include "lvmb/simplicial_complex.hpp"

namespace lvmb {

// Combinatorial input of the pipeline: a simplicial complex on {0,...,m}
// with a Gaussian-rational basis of the subspace h of C^m, or a fan in R^m
// given directly (fan mode, used for quotient-fan studies).
struct LVMBData {
    std::size_t m = 0;
    std::optional<SimplicialComplex> sigma;
    std::optional<Fan> ambient_fan;
    std::vector<GaussianVector> h_basis;

    bool fan_mode() const { return !sigma.has_value(); }
};

// p(h) and the quotient map out of it. Quotient coordinates are the
// pivot-complement of the canonical echelon basis of p(h): the free columns
// of the echelon form index the coordinates of g/g_J, so q restricted to
// those columns is the identity.
struct QuotientData {
    RatMatrix p_h;                         // echelon basis of p(h) = g_J, r x m
    RatMatrix q;                           // n x m, ker q = row space of p_h
    std::vector<std::size_t> pivot_cols;   // of p_h, size r
    std::vector<std::size_t> free_cols;    // quotient coordinates, size n

    std::size_t n() const { return q.rows(); }
    std::size_t m() const { return q.cols(); }
};

struct ConditionResult {
    bool ok = false;
    std::string detail;
};

struct LvmbCheckReport {
    ConditionResult injectivity;   // condition (1): p restricted to h is injective
    ConditionResult quotient_fan;  // condition (2): q(Delta) is a complete fan
    bool ok() const { return injectivity.ok && quotient_fan.ok; }
};

enum class Verdict { LVM, LvmbNotLvm, NotLvmb };

std::string to_string(Verdict v);

struct ClassificationReport {
    LvmbCheckReport lvmb;
    Verdict verdict = Verdict::NotLvmb;
    QuotientData quotient;
    Fan ambient_fan;
    std::vector<int> ray_vertex;                        // ambient ray -> vertex label
    std::optional<Fan> quotient_fan;                    // when condition (2) holds
    std::optional<std::vector<Rational>> offsets;       // per quotient-fan ray (LVM only)
    std::optional<HPolytope> polytope;                  // inner normal polytope (LVM only)
    std::optional<LPCertificate> support_certificate;   // the support-function LP outcome
    std::optional<LPCertificate> strict_infeasibility;  // Farkas for t >= 1 (negative branch)
    bool ambient_nonsingular = true;                    // informational in fan mode
};

// Canonical echelon basis of p(h) = g_J.
RatMatrix g_J(const LVMBData& data);

QuotientData build_quotient(const LVMBData& data);

// Conditions (1)-(2) with witnesses on failure.
LvmbCheckReport check_lvmb(const LVMBData& data);

// Full pipeline: conditions, quotient fan, polytopality LP, polytope.
ClassificationReport classify(const LVMBData& data);

// Phi(z) = (pi |z_1|^2, ..., pi |z_m|^2).
std::vector<double> moment_map(const std::vector<std::complex<double>>& z);

// Restriction of -sum_i a_i e_i^* to p(h), in the rows of the echelon basis.
// a_coords has one entry per coordinate of C^m (index 0 -> e_1).
RatVector beta(const QuotientData& quotient, const RatVector& a_coords);

// Offsets transported from quotient-fan rays to the coordinates of C^m.
// Ray offsets land on their vertex coordinate; coordinates that carry no ray
// get, when `strict`, the exact minimum of <., q(e_i)> over P minus 1 (so
// the plain moment-level data keeps z_i away from 0 there), and 0 otherwise.
RatVector coordinate_offsets(const ClassificationReport& report, bool strict);

struct SamplePoint {
    std::vector<std::complex<double>> z;  // length m
    std::vector<double> r;                // r_i = pi |z_i|^2
    std::vector<int> zero_pattern;        // coordinates with z_i = 0, 1-based labels
};

// Seeded rejection sampler over P: draw alpha uniformly from the vertex
// bounding box until it lands in P, then lift to a level-set point. Samples
// whose tight ray set is not a cone of the fan, or rejection failure after
// the trial cap, throw std::runtime_error.
std::vector<SamplePoint> sample_zp(const ClassificationReport& report, std::size_t count,
                                   std::uint64_t seed);

// Exact-alpha variant used for vertex-pattern samples; r is built from
// rational data, so tight coordinates are exactly zero.
SamplePoint sample_at(const ClassificationReport& report, const RatVector& alpha,
                      std::uint64_t phase_seed);

struct LiftedMoment {
    std::vector<double> alpha;  // point of (g/g_J)^* in quotient coordinates
    double residual = 0;        // max-norm of Phi(z) + c - q^*(alpha)
};

// Solves q^*(alpha) = Phi(z) + c with the gauge c = sum_i a_i e_i^*.
// Throws std::runtime_error when the residual exceeds tol (the sample is
// off the level set).
LiftedMoment lifted_moment(const ClassificationReport& report, const RatVector& a_coords,
                           const SamplePoint& sample, double tol);

// Exact path: lifted image of the exact level-set point over alpha.
RatVector lifted_moment_exact(const ClassificationReport& report, const RatVector& a_coords,
                              const RatVector& alpha);

struct DirectionCheck {
    RatVector v;                      // direction in g
    RatVector qv;                     // q(v)
    bool kernel_direction = false;    // q(v) = 0
    double sampled_min = 0;
    double sampled_spread = 0;        // for kernel directions
    Rational exact_min;               // LP minimum over P
    std::vector<std::size_t> lp_tight_set;
    ConeKey predicted_cone;           // cone with q(v) in its relative interior
    bool face_match = false;
    bool min_ok = false;
    bool spread_ok = true;
};

struct ConvexityReport {
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    double tol = 1e-9;
    double max_membership_violation = 0;
    double max_lift_residual = 0;
    bool membership_ok = false;
    bool vertex_images_exact = false;  // exact rational path equals vertices(P)
    bool normality_ok = false;         // is_normal_to(P, q(Delta))
    bool tightness_ok = false;         // every inequality tight at some vertex
    std::vector<DirectionCheck> directions;
    std::string failure;               // first hard failure, empty otherwise

    bool all_ok() const;
};

// Desk-scale verification of the convexity and normal-polytope statements:
// sampled membership, exact vertex images, direction minima against exact
// LP minima, and the argmin-face / fan-cone correspondence.
ConvexityReport verify_convexity(const ClassificationReport& report, std::size_t samples,
                                 std::uint64_t seed, double tol);

// The cone of a complete fan whose relative interior contains x (the
// minimal cone containing x). Exact.
std::optional<ConeKey> cone_with_point_in_relint(const Fan& fan, const RatVector& x);

}  // namespace lvmb
