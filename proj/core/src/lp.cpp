#include "lvmb/lp.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "lvmb/fan.hpp"
#include "lvmb/polytope.hpp"

namespace lvmb {

namespace {

// Standard form: min c~.x~, A~ x~ = b~ (b~ >= 0), x~ >= 0, built as
// [x+ block | x- block | surplus block]; rows are sign-flipped where needed
// and the flip is remembered to map duals back to the stated constraints.
struct StandardForm {
    std::size_t nvars = 0;    // original variable count
    std::size_t ncols = 0;    // standard-form columns (without artificials)
    std::vector<std::vector<Rational>> a;  // rows x ncols
    std::vector<Rational> b;               // >= 0
    std::vector<Rational> cost;            // min-form costs per column
    std::vector<int> row_sign;             // +1 / -1 per original row
    std::vector<std::size_t> surplus_col;  // per row; ncols when Eq
};

StandardForm build_standard_form(const LPProblem& p) {
    StandardForm sf;
    sf.nvars = p.num_vars;
    std::size_t n_ge = 0;
    for (const auto& c : p.constraints)
        if (c.rel == Relation::Ge) ++n_ge;
    sf.ncols = 2 * p.num_vars + n_ge;

    RatVector c_min(p.num_vars);
    for (std::size_t j = 0; j < p.num_vars; ++j)
        c_min[j] = p.sense == Sense::Minimize ? p.objective[j] : -p.objective[j];

    sf.cost.assign(sf.ncols, Rational(0));
    for (std::size_t j = 0; j < p.num_vars; ++j) {
        sf.cost[j] = c_min[j];
        sf.cost[p.num_vars + j] = -c_min[j];
    }

    std::size_t next_surplus = 2 * p.num_vars;
    for (const auto& con : p.constraints) {
        if (con.coeffs.size() != p.num_vars)
            throw std::invalid_argument("constraint width != num_vars");
        int sign = con.rhs < 0 ? -1 : 1;
        std::vector<Rational> row(sf.ncols, Rational(0));
        for (std::size_t j = 0; j < p.num_vars; ++j) {
            row[j] = sign * con.coeffs[j];
            row[p.num_vars + j] = -sign * con.coeffs[j];
        }
        std::size_t scol = sf.ncols;
        if (con.rel == Relation::Ge) {
            scol = next_surplus++;
            row[scol] = Rational(-sign);
        }
        sf.a.push_back(std::move(row));
        sf.b.push_back(sign * con.rhs);
        sf.row_sign.push_back(sign);
        sf.surplus_col.push_back(scol);
    }
    return sf;
}

double log_binomial(std::size_t n, std::size_t k) {
    double s = 0;
    for (std::size_t i = 0; i < k; ++i) s += std::log2(double(n - i)) - std::log2(double(i + 1));
    return s;
}

// Full-tableau simplex state: rows of B^{-1}[A | b] plus incrementally
// maintained phase-1 and phase-2 cost rows.
class Tableau {
public:
    Tableau(const StandardForm& sf, const SimplexOptions& opts)
        : opts_(opts), m_(sf.a.size()), n_(sf.ncols), total_(sf.ncols + sf.a.size()) {
        rows_.assign(m_, std::vector<Rational>(total_ + 1, Rational(0)));
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) rows_[i][j] = sf.a[i][j];
            rows_[i][n_ + i] = 1;  // artificial
            rows_[i][total_] = sf.b[i];
            basis_[i] = n_ + i;
        }
        cost1_.assign(total_ + 1, Rational(0));
        cost2_.assign(total_ + 1, Rational(0));
        for (std::size_t j = 0; j < n_; ++j) {
            cost2_[j] = sf.cost[j];
            for (std::size_t i = 0; i < m_; ++i) cost1_[j] -= rows_[i][j];
        }
        for (std::size_t i = 0; i < m_; ++i) cost1_[total_] -= rows_[i][total_];

        double bound = log_binomial(total_, m_);
        iter_cap_ = bound >= 62 ? ~std::uint64_t{0} : (std::uint64_t{1} << std::uint64_t(bound + 1)) + 64;
    }

    std::size_t rows() const { return m_; }
    std::size_t real_cols() const { return n_; }
    const std::vector<std::size_t>& basis() const { return basis_; }
    const Rational& value(std::size_t i) const { return rows_[i][total_]; }
    const Rational& entry(std::size_t i, std::size_t j) const { return rows_[i][j]; }

    // Bland loop on the selected cost row over columns [0, limit).
    // Returns the entering column that proved unboundedness, or total_ when
    // optimal.
    std::size_t run(bool phase1, std::size_t limit) {
        std::vector<Rational>& cost = phase1 ? cost1_ : cost2_;
        for (;;) {
            std::size_t enter = total_;
            for (std::size_t j = 0; j < limit; ++j)
                if (cost[j] < 0) {
                    enter = j;
                    break;
                }
            if (enter == total_) return total_;

            std::size_t leave = m_;
            Rational best_ratio;
            for (std::size_t i = 0; i < m_; ++i) {
                if (rows_[i][enter] <= 0) continue;
                Rational ratio = rows_[i][total_] / rows_[i][enter];
                if (leave == m_ || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == m_) return enter;  // unbounded column
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t r, std::size_t c) {
        if (++iterations_ > iter_cap_)
            throw std::logic_error("simplex exceeded the Bland iteration bound");
        if (opts_.on_pivot) opts_.on_pivot(iterations_, c, r);
        Rational piv = rows_[r][c];
        for (auto& x : rows_[r]) x /= piv;
        auto eliminate = [&](std::vector<Rational>& row) {
            Rational f = row[c];
            if (f == 0) return;
            for (std::size_t j = 0; j <= total_; ++j) row[j] -= f * rows_[r][j];
        };
        for (std::size_t i = 0; i < m_; ++i)
            if (i != r) eliminate(rows_[i]);
        eliminate(cost1_);
        eliminate(cost2_);
        basis_[r] = c;
        if (opts_.trace_tableau && opts_.sink) opts_.sink(render());
    }

    // After a zero-optimum phase 1: pivot basic artificials out, dropping
    // rows that are redundant. Returns original-row indices of kept rows.
    std::vector<std::size_t> drive_out_artificials() {
        std::vector<std::size_t> kept;
        for (std::size_t i = 0; i < m_;) {
            if (basis_[i] < n_) {
                ++i;
                continue;
            }
            std::size_t c = n_;
            for (std::size_t j = 0; j < n_; ++j)
                if (rows_[i][j] != 0) {
                    c = j;
                    break;
                }
            if (c == n_) {
                drop_row(i);
                continue;
            }
            pivot(i, c);
            ++i;
        }
        for (std::size_t i = 0; i < m_; ++i) kept.push_back(row_origin_[i]);
        return kept;
    }

    void init_row_origin() {
        row_origin_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) row_origin_[i] = i;
    }
    const std::vector<std::size_t>& row_origin() const { return row_origin_; }

    std::string render() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j <= total_; ++j)
                os << rows_[i][j].get_str() << (j == total_ ? "\n" : " ");
        }
        return os.str();
    }

    Rational phase1_objective() const { return -cost1_[total_]; }

private:
    void drop_row(std::size_t i) {
        rows_.erase(rows_.begin() + i);
        basis_.erase(basis_.begin() + i);
        row_origin_.erase(row_origin_.begin() + i);
        --m_;
    }

    const SimplexOptions& opts_;
    std::size_t m_, n_, total_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<Rational> cost1_, cost2_;
    std::vector<std::size_t> basis_;
    std::vector<std::size_t> row_origin_;
    std::uint64_t iterations_ = 0;
    std::uint64_t iter_cap_ = 0;
};

// Duals of the (possibly row-reduced) standard form, recovered exactly from
// the final basis: solve B^T y = c_B against the original columns.
RatVector recover_duals(const StandardForm& sf, const std::vector<std::size_t>& basis,
                        const std::vector<std::size_t>& kept_rows, bool phase1) {
    const std::size_t k = kept_rows.size();
    RatMatrix bt(k, k);
    RatVector cb(k);
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t var = basis[col];
        for (std::size_t r = 0; r < k; ++r) {
            std::size_t orig = kept_rows[r];
            Rational a = var < sf.ncols ? sf.a[orig][var] : Rational(var - sf.ncols == orig ? 1 : 0);
            bt.at(col, r) = a;
        }
        if (phase1)
            cb[col] = var >= sf.ncols ? Rational(1) : Rational(0);
        else
            cb[col] = var < sf.ncols ? sf.cost[var] : Rational(0);
    }
    auto y = solve_linear(bt, cb);
    if (!y) throw std::logic_error("simplex basis matrix is singular");
    RatVector full(sf.a.size(), Rational(0));
    for (std::size_t r = 0; r < k; ++r)
        full[kept_rows[r]] = sf.row_sign[kept_rows[r]] * (*y)[r];
    return full;
}

RatVector extract_point(const StandardForm& sf, const Tableau& t) {
    RatVector xt(sf.ncols + t.rows(), Rational(0));
    for (std::size_t i = 0; i < t.rows(); ++i)
        if (t.basis()[i] < xt.size()) xt[t.basis()[i]] = t.value(i);
    RatVector x(sf.nvars);
    for (std::size_t j = 0; j < sf.nvars; ++j) x[j] = xt[j] - xt[sf.nvars + j];
    return x;
}

}  // namespace

namespace {
std::function<void(const std::string&)> g_trace_sink;
bool g_trace_tableau = false;
}  // namespace

void set_simplex_trace(std::function<void(const std::string&)> sink, bool tableau) {
    g_trace_sink = std::move(sink);
    g_trace_tableau = tableau;
}

LPCertificate solve(const LPProblem& p, const SimplexOptions& opts) {
    if (p.objective.size() != p.num_vars)
        throw std::invalid_argument("objective width != num_vars");

    SimplexOptions effective = opts;
    if (!effective.on_pivot && g_trace_sink) {
        effective.sink = g_trace_sink;
        effective.trace_tableau = g_trace_tableau;
        effective.on_pivot = [](std::size_t it, std::size_t col, std::size_t row) {
            g_trace_sink("pivot " + std::to_string(it) + ": enter column " + std::to_string(col) +
                         ", leave row " + std::to_string(row) + "\n");
        };
    }

    StandardForm sf = build_standard_form(p);
    Tableau t(sf, effective);
    t.init_row_origin();

    LPCertificate cert;

    // Phase 1: minimize the artificial sum (bounded below, so always optimal).
    std::size_t outcome = t.run(true, sf.ncols);
    if (outcome < sf.ncols) throw std::logic_error("phase 1 reported an unbounded column");
    if (t.phase1_objective() > 0) {
        cert.status = LPStatus::Infeasible;
        cert.dual = recover_duals(sf, t.basis(), t.row_origin(), true);
        cert.objective_value = 0;
        std::string why;
        if (!verify_certificate(p, cert, &why))
            throw std::logic_error("infeasibility certificate failed verification: " + why);
        return cert;
    }

    std::vector<std::size_t> kept = t.drive_out_artificials();

    // Phase 2 over the real columns only.
    outcome = t.run(false, sf.ncols);
    if (outcome < sf.ncols) {
        cert.status = LPStatus::Unbounded;
        cert.primal = extract_point(sf, t);
        RatVector d(sf.ncols + sf.a.size(), Rational(0));
        d[outcome] = 1;
        for (std::size_t i = 0; i < t.rows(); ++i) d[t.basis()[i]] = -t.entry(i, outcome);
        cert.ray.assign(sf.nvars, Rational(0));
        for (std::size_t j = 0; j < sf.nvars; ++j) cert.ray[j] = d[j] - d[sf.nvars + j];
        cert.objective_value = 0;
    } else {
        cert.status = LPStatus::Optimal;
        cert.primal = extract_point(sf, t);
        cert.dual = recover_duals(sf, t.basis(), kept, false);
        Rational v = dot(p.objective, cert.primal);
        cert.objective_value = v;
    }
    std::string why;
    if (!verify_certificate(p, cert, &why))
        throw std::logic_error("simplex certificate failed verification: " + why);
    return cert;
}

namespace {

bool fail(std::string* why, const std::string& msg) {
    if (why) *why = msg;
    return false;
}

bool primal_feasible(const LPProblem& p, const RatVector& x, std::string* why) {
    if (x.size() != p.num_vars) return fail(why, "primal has wrong dimension");
    for (std::size_t i = 0; i < p.constraints.size(); ++i) {
        Rational lhs = dot(p.constraints[i].coeffs, x);
        if (p.constraints[i].rel == Relation::Eq && lhs != p.constraints[i].rhs)
            return fail(why, "equality row " + std::to_string(i) + " violated");
        if (p.constraints[i].rel == Relation::Ge && lhs < p.constraints[i].rhs)
            return fail(why, "inequality row " + std::to_string(i) + " violated");
    }
    return true;
}

}  // namespace

bool verify_certificate(const LPProblem& p, const LPCertificate& cert, std::string* why) {
    const std::size_t m = p.constraints.size();
    RatVector c_min(p.num_vars);
    for (std::size_t j = 0; j < p.num_vars; ++j)
        c_min[j] = p.sense == Sense::Minimize ? p.objective[j] : -p.objective[j];

    auto dual_signs_ok = [&](const RatVector& y) {
        for (std::size_t i = 0; i < m; ++i)
            if (p.constraints[i].rel == Relation::Ge && y[i] < 0) return false;
        return true;
    };
    auto dual_combination = [&](const RatVector& y) {
        RatVector comb(p.num_vars, Rational(0));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < p.num_vars; ++j)
                comb[j] += y[i] * p.constraints[i].coeffs[j];
        return comb;
    };
    auto dual_rhs = [&](const RatVector& y) {
        Rational s = 0;
        for (std::size_t i = 0; i < m; ++i) s += y[i] * p.constraints[i].rhs;
        return s;
    };

    switch (cert.status) {
        case LPStatus::Optimal: {
            if (!primal_feasible(p, cert.primal, why)) return false;
            if (cert.dual.size() != m) return fail(why, "dual has wrong dimension");
            if (!dual_signs_ok(cert.dual)) return fail(why, "dual sign condition violated");
            if (dual_combination(cert.dual) != c_min)
                return fail(why, "dual combination != objective");
            Rational primal_min = dot(c_min, cert.primal);
            if (dual_rhs(cert.dual) != primal_min)
                return fail(why, "strong duality gap");
            Rational stated = p.sense == Sense::Minimize ? cert.objective_value
                                                         : -cert.objective_value;
            if (stated != primal_min) return fail(why, "objective_value mismatch");
            return true;
        }
        case LPStatus::Infeasible: {
            if (cert.dual.size() != m) return fail(why, "dual has wrong dimension");
            if (!dual_signs_ok(cert.dual)) return fail(why, "Farkas sign condition violated");
            RatVector comb = dual_combination(cert.dual);
            if (!is_zero_vector(comb)) return fail(why, "Farkas combination is nonzero");
            if (!(dual_rhs(cert.dual) > 0)) return fail(why, "Farkas rhs not positive");
            return true;
        }
        case LPStatus::Unbounded: {
            if (!primal_feasible(p, cert.primal, why)) return false;
            if (cert.ray.size() != p.num_vars) return fail(why, "ray has wrong dimension");
            for (std::size_t i = 0; i < m; ++i) {
                Rational d = dot(p.constraints[i].coeffs, cert.ray);
                if (p.constraints[i].rel == Relation::Eq && d != 0)
                    return fail(why, "ray leaves equality row " + std::to_string(i));
                if (p.constraints[i].rel == Relation::Ge && d < 0)
                    return fail(why, "ray violates inequality row " + std::to_string(i));
            }
            if (!(dot(c_min, cert.ray) < 0)) return fail(why, "ray does not improve objective");
            return true;
        }
    }
    return fail(why, "unknown status");
}

LPProblem support_function_lp(const Fan& qfan) {
    const std::size_t k = qfan.rays().size();
    const std::size_t n = static_cast<std::size_t>(qfan.ambient_dim());
    const auto max_cones = qfan.maximal_cones();
    for (const ConeKey& sigma : max_cones) {
        std::vector<RatVector> rows;
        for (int i : sigma) rows.push_back(to_rational(qfan.rays()[static_cast<std::size_t>(i)]));
        if (!rows.empty() && rank(RatMatrix::from_rows(rows)) != sigma.size())
            throw std::invalid_argument("support_function_lp: fan is not simplicial");
    }
    if (!is_complete(qfan))
        throw std::invalid_argument("support_function_lp: fan is not complete");
    const std::size_t t_var = k + max_cones.size() * n;

    LPProblem lp;
    lp.num_vars = t_var + 1;
    lp.sense = Sense::Maximize;
    lp.objective.assign(lp.num_vars, Rational(0));
    lp.objective[t_var] = 1;

    for (std::size_t s = 0; s < max_cones.size(); ++s) {
        const auto& sigma = max_cones[s];
        std::vector<bool> in_sigma(k, false);
        for (int i : sigma) in_sigma[static_cast<std::size_t>(i)] = true;
        for (std::size_t i = 0; i < k; ++i) {
            RatVector row(lp.num_vars, Rational(0));
            for (std::size_t d = 0; d < n; ++d)
                row[k + s * n + d] = Rational(static_cast<long>(qfan.rays()[i][d]));
            row[i] = -1;
            if (in_sigma[i]) {
                lp.add(std::move(row), Relation::Eq, Rational(0));
            } else {
                row[t_var] = -1;
                lp.add(std::move(row), Relation::Ge, Rational(0));
            }
        }
    }
    {
        RatVector row(lp.num_vars, Rational(0));
        row[t_var] = -1;
        lp.add(std::move(row), Relation::Ge, Rational(-1));  // t <= 1
    }
    return lp;
}

PolytopeMinResult minimize_over_polytope(const HPolytope& p, const RatVector& direction) {
    if (direction.size() != p.dim)
        throw std::invalid_argument("minimize_over_polytope: direction dimension mismatch");

    LPProblem lp;
    lp.num_vars = p.dim;
    lp.sense = Sense::Minimize;
    lp.objective = direction;
    for (std::size_t i = 0; i < p.normals.size(); ++i)
        lp.add(p.normals[i], Relation::Ge, p.offsets[i]);

    LPCertificate cert = solve(lp);
    if (cert.status == LPStatus::Infeasible)
        throw std::invalid_argument("minimize_over_polytope: empty polytope");
    if (cert.status == LPStatus::Unbounded)
        throw std::invalid_argument("minimize_over_polytope: unbounded direction");

    PolytopeMinResult res;
    res.value = cert.objective_value;

    // Tight set = inequalities tight on the whole optimal face: inequality i
    // is included iff max <n_i, .> over the face equals the offset.
    for (std::size_t i = 0; i < p.normals.size(); ++i) {
        LPProblem aux = lp;
        aux.sense = Sense::Maximize;
        aux.objective = p.normals[i];
        aux.add(direction, Relation::Eq, res.value);
        LPCertificate on_face = solve(aux);
        if (on_face.status != LPStatus::Optimal)
            throw std::logic_error("face-probe LP must be bounded over a bounded polytope");
        if (on_face.objective_value == p.offsets[i]) res.tight_set.push_back(i);
    }

    if (res.tight_set.empty()) {
        res.face_dim = p.dim;
    } else {
        std::vector<RatVector> tight_rows;
        for (std::size_t i : res.tight_set) tight_rows.push_back(p.normals[i]);
        res.face_dim = p.dim - rank(RatMatrix::from_rows(tight_rows));
    }
    return res;
}

}  // namespace lvmb
