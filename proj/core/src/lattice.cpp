#include "lvmb/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace lvmb {

RatVector to_rational(const IntVector& v) {
    RatVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(static_cast<long>(v[i]));
    return r;
}

IntVector primitivize(const RatVector& v) {
    Integer l = 1;
    for (const auto& x : v) l = lcm(l, x.get_den());
    std::vector<Integer> scaled(v.size());
    Integer g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rational s = v[i] * Rational(l);
        scaled[i] = s.get_num();
        g = gcd(g, scaled[i]);
    }
    if (g == 0) throw std::invalid_argument("primitivize: zero vector");
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Integer q = scaled[i] / g;
        if (!q.fits_slong_p())
            throw std::overflow_error("primitivize: component exceeds 64-bit range");
        out[i] = q.get_si();
    }
    return out;
}

bool is_primitive(const IntVector& v) {
    Integer g = 0;
    for (long long x : v) g = gcd(g, Integer(static_cast<long>(x)));
    return g == 1;
}

std::vector<Integer> smith_divisors(const std::vector<IntVector>& rows) {
    const std::size_t nr = rows.size();
    const std::size_t nc = nr == 0 ? 0 : rows.front().size();
    std::vector<std::vector<Integer>> a(nr, std::vector<Integer>(nc));
    for (std::size_t i = 0; i < nr; ++i) {
        if (rows[i].size() != nc) throw std::invalid_argument("smith_divisors: ragged rows");
        for (std::size_t j = 0; j < nc; ++j) a[i][j] = Integer(static_cast<long>(rows[i][j]));
    }

    const std::size_t nmin = std::min(nr, nc);
    std::vector<Integer> div(nmin, Integer(0));

    for (std::size_t s = 0; s < nmin; ++s) {
        for (;;) {
            // Pull the smallest nonzero |entry| of the trailing block to (s, s).
            std::size_t pi = s, pj = s;
            Integer best = 0;
            for (std::size_t i = s; i < nr; ++i)
                for (std::size_t j = s; j < nc; ++j) {
                    if (a[i][j] == 0) continue;
                    Integer v = abs(a[i][j]);
                    if (best == 0 || v < best) {
                        best = v;
                        pi = i;
                        pj = j;
                    }
                }
            if (best == 0) break;  // trailing block is zero
            std::swap(a[s], a[pi]);
            if (pj != s)
                for (std::size_t i = 0; i < nr; ++i) std::swap(a[i][s], a[i][pj]);

            bool clean = true;
            for (std::size_t i = s + 1; i < nr; ++i) {
                if (a[i][s] == 0) continue;
                Integer q = a[i][s] / a[s][s];  // truncated quotient keeps |rem| < |pivot|
                if (q != 0)
                    for (std::size_t j = s; j < nc; ++j) a[i][j] -= q * a[s][j];
                if (a[i][s] != 0) clean = false;
            }
            for (std::size_t j = s + 1; j < nc; ++j) {
                if (a[s][j] == 0) continue;
                Integer q = a[s][j] / a[s][s];
                if (q != 0)
                    for (std::size_t i = 0; i < nr; ++i) a[i][j] -= q * a[i][s];
                if (a[s][j] != 0) clean = false;
            }
            if (!clean) continue;

            // Enforce divisibility of the trailing block by the pivot.
            bool divides = true;
            for (std::size_t i = s + 1; i < nr && divides; ++i)
                for (std::size_t j = s + 1; j < nc && divides; ++j)
                    if (a[i][j] % a[s][s] != 0) {
                        for (std::size_t jj = s; jj < nc; ++jj) a[s][jj] += a[i][jj];
                        divides = false;
                    }
            if (divides) break;
        }
        div[s] = abs(a[s][s]);
    }
    return div;
}

bool extends_to_z_basis(const std::vector<IntVector>& rows) {
    if (rows.empty()) return true;
    std::vector<Integer> div = smith_divisors(rows);
    std::size_t nonzero = 0;
    for (const auto& d : div) {
        if (d == 0) continue;
        if (d != 1) return false;
        ++nonzero;
    }
    return nonzero == rows.size();
}

}  // namespace lvmb
