#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lvmb/matrix.hpp"

namespace lvmb {

class Fan;
struct HPolytope;

enum class Relation { Eq, Ge };
enum class Sense { Maximize, Minimize };

struct LPConstraint {
    RatVector coeffs;
    Relation rel = Relation::Ge;
    Rational rhs;
};

// Exact rational linear program over free variables: each constraint is
// coeffs . x  (=|>=)  rhs.
struct LPProblem {
    std::size_t num_vars = 0;
    std::vector<LPConstraint> constraints;
    RatVector objective;
    Sense sense = Sense::Maximize;

    void add(RatVector coeffs, Relation rel, Rational rhs) {
        constraints.push_back({std::move(coeffs), rel, std::move(rhs)});
    }
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

// Every outcome carries an exact, substitution-checkable certificate.
// Multipliers are stated for the minimization form of the problem (the
// objective is negated internally when sense == Maximize):
//   optimal:    dual_i >= 0 on >= rows, sum_i dual_i A_i = c_min,
//               sum_i dual_i b_i = c_min . primal;
//   infeasible: dual_i >= 0 on >= rows, sum_i dual_i A_i = 0,
//               sum_i dual_i b_i > 0 (Farkas refutation);
//   unbounded:  primal feasible, A_Ge . ray >= 0, A_Eq . ray = 0, and the
//               objective improves without bound along ray.
struct LPCertificate {
    LPStatus status = LPStatus::Optimal;
    RatVector primal;           // optimal point; a feasible point when unbounded
    RatVector dual;             // optimal dual or Farkas vector, one entry per constraint
    RatVector ray;              // improving direction when unbounded
    Rational objective_value;   // in the problem's stated sense (meaningful when optimal)
};

struct SimplexOptions {
    // Called once per pivot with (iteration, entering column, leaving row)
    // when set; serves the CLI verbosity flag.
    std::function<void(std::size_t, std::size_t, std::size_t)> on_pivot;
    bool trace_tableau = false;
    std::function<void(const std::string&)> sink;
};

// Process-wide pivot log used when a call site passes no options; the CLI
// points it at stderr under LVMB_LOG=debug (pivots) or LVMB_LOG=trace
// (full tableaus). Not meant for concurrent solves.
void set_simplex_trace(std::function<void(const std::string&)> sink, bool tableau);

// Exact two-phase simplex with Bland's anti-cycling rule. Deterministic:
// identical input yields the identical certificate. Throws std::logic_error
// if the Bland iteration bound is exceeded or a certificate fails its
// internal substitution check (both indicate a bug, not an input condition).
LPCertificate solve(const LPProblem& p, const SimplexOptions& opts = {});

// Exact substitution check of a certificate against the problem it claims
// to settle. No tolerances. On failure, *why (when given) names the first
// violated condition.
bool verify_certificate(const LPProblem& p, const LPCertificate& cert, std::string* why = nullptr);

// The strictly-convex-support-function feasibility program for a complete
// simplicial fan: variables are one offset a_i per ray, one linear
// functional alpha_sigma per maximal cone, and a slack t with
//   <alpha_sigma, r_i> = a_i          for rays i in sigma,
//   <alpha_sigma, r_j> - a_j >= t     for rays j not in sigma,
//   t <= 1, maximize t.
// The fan is polytopal iff the optimum is positive (then it is exactly 1 by
// scale invariance). Variable layout: a_0..a_{k-1}, then n coordinates per
// maximal cone in fan cone order, then t last.
LPProblem support_function_lp(const Fan& qfan);

struct PolytopeMinResult {
    Rational value;
    std::vector<std::size_t> tight_set;  // inequalities tight on every optimum
    std::size_t face_dim = 0;
};

// Exact minimum of <., direction> over a bounded nonempty H-polytope and
// the face where it is attained. Throws std::invalid_argument when the
// polytope is empty or unbounded in the given direction.
PolytopeMinResult minimize_over_polytope(const HPolytope& p, const RatVector& direction);

}  // namespace lvmb
