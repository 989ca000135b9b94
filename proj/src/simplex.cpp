#include "stakeopt/simplex.hpp"

#include <cstddef>
#include <stdexcept>

namespace stakeopt {

namespace {

struct Tableau {
    std::vector<std::vector<Rational>> rows;  // each: total_cols coefficients + rhs
    std::vector<std::size_t> basis;           // basic column per row
    std::size_t cols = 0;                     // structural + slack + artificial

    Rational& at(std::size_t r, std::size_t c) { return rows[r][c]; }
    Rational& rhs(std::size_t r) { return rows[r][cols]; }

    void pivot(std::size_t r, std::size_t c, std::vector<Rational>& z, Rational& zval) {
        Rational inv = Rational(1) / rows[r][c];
        for (auto& v : rows[r]) v *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].sign() == 0) continue;
            Rational f = rows[i][c];
            for (std::size_t j = 0; j <= cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        if (z[c].sign() != 0) {
            Rational f = z[c];
            for (std::size_t j = 0; j < cols; ++j) z[j] -= f * rows[r][j];
            zval += f * rows[r][cols];
        }
        basis[r] = c;
    }

    // Bland's rule: entering = lowest admissible index with positive reduced
    // cost; leaving = min-ratio row, ties broken by lowest basic index.
    // Returns false when optimal, throws on unbounded.
    bool step(std::vector<Rational>& z, Rational& zval, std::size_t admissible_cols, bool* unbounded) {
        std::size_t enter = admissible_cols;
        for (std::size_t j = 0; j < admissible_cols; ++j) {
            if (z[j].sign() > 0) {
                enter = j;
                break;
            }
        }
        if (enter == admissible_cols) return false;
        std::size_t leave = rows.size();
        Rational best;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i][enter].sign() <= 0) continue;
            Rational ratio = rows[i][cols] / rows[i][enter];
            if (leave == rows.size() || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == rows.size()) {
            *unbounded = true;
            return false;
        }
        pivot(leave, enter, z, zval);
        return true;
    }
};

}  // namespace

LpResult maximize(const std::vector<Rational>& objective,
                  const std::vector<LpConstraint>& constraints) {
    const std::size_t n = objective.size();
    struct Row {
        std::vector<Rational> a;
        Sense sense;
        Rational b;
    };
    std::vector<Row> normalized;
    normalized.reserve(constraints.size());
    for (const LpConstraint& c : constraints) {
        if (c.coeffs.size() != n)
            throw std::invalid_argument("constraint width does not match objective");
        Row r{c.coeffs, c.sense, c.rhs};
        if (r.b.sign() < 0 || (r.b.sign() == 0 && r.sense == Sense::ge)) {
            for (auto& v : r.a) v = -v;
            r.b = -r.b;
            if (r.sense == Sense::le)
                r.sense = Sense::ge;
            else if (r.sense == Sense::ge)
                r.sense = Sense::le;
        }
        normalized.push_back(std::move(r));
    }

    const std::size_t m = normalized.size();
    std::size_t n_slack = 0, n_art = 0;
    for (const Row& r : normalized) {
        if (r.sense != Sense::eq) ++n_slack;
        if (r.sense != Sense::le) ++n_art;
    }
    const std::size_t art_start = n + n_slack;
    Tableau t;
    t.cols = art_start + n_art;
    t.rows.assign(m, std::vector<Rational>(t.cols + 1));
    t.basis.assign(m, 0);

    std::size_t slack_at = n, art_at = art_start;
    for (std::size_t i = 0; i < m; ++i) {
        const Row& r = normalized[i];
        for (std::size_t j = 0; j < n; ++j) t.at(i, j) = r.a[j];
        t.rhs(i) = r.b;
        if (r.sense == Sense::le) {
            t.at(i, slack_at) = 1;
            t.basis[i] = slack_at++;
        } else if (r.sense == Sense::ge) {
            t.at(i, slack_at) = -1;
            ++slack_at;
            t.at(i, art_at) = 1;
            t.basis[i] = art_at++;
        } else {
            t.at(i, art_at) = 1;
            t.basis[i] = art_at++;
        }
    }

    // Phase 1: maximize -sum(artificials).
    if (n_art > 0) {
        std::vector<Rational> z(t.cols);
        Rational zval = 0;
        for (std::size_t j = art_start; j < t.cols; ++j) z[j] = -1;
        for (std::size_t i = 0; i < m; ++i) {
            if (t.basis[i] < art_start) continue;
            for (std::size_t j = 0; j < t.cols; ++j) z[j] += t.at(i, j);
            zval -= t.rhs(i);
        }
        bool unbounded = false;
        while (t.step(z, zval, t.cols, &unbounded)) {
        }
        if (zval.sign() < 0) return {LpStatus::infeasible, Rational(0), {}};

        // Drive leftover artificials out of the basis; drop redundant rows.
        for (std::size_t i = 0; i < t.rows.size();) {
            if (t.basis[i] < art_start) {
                ++i;
                continue;
            }
            std::size_t c = art_start;
            for (std::size_t j = 0; j < art_start; ++j) {
                if (t.at(i, j).sign() != 0) {
                    c = j;
                    break;
                }
            }
            if (c < art_start) {
                t.pivot(i, c, z, zval);
                ++i;
            } else {
                t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
                t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
    }

    // Phase 2 over structural + slack columns only.
    std::vector<Rational> z(t.cols);
    Rational zval = 0;
    for (std::size_t j = 0; j < n; ++j) z[j] = objective[j];
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        std::size_t b = t.basis[i];
        if (b >= n || objective[b].sign() == 0) continue;
        Rational f = objective[b];
        for (std::size_t j = 0; j < t.cols; ++j) z[j] -= f * t.at(i, j);
        zval += f * t.rhs(i);
    }
    bool unbounded = false;
    while (t.step(z, zval, art_start, &unbounded)) {
    }
    if (unbounded) return {LpStatus::unbounded, Rational(0), {}};

    std::vector<Rational> x(n, Rational(0));
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        if (t.basis[i] < n) x[t.basis[i]] = t.rhs(i);
    return {LpStatus::optimal, zval, std::move(x)};
}

}  // namespace stakeopt
