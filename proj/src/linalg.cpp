#include "kstab/linalg.hpp"

#include "kstab/errors.hpp"

#include <algorithm>

namespace kstab {

Matrix to_rational(const IntMatrix& m) {
    Matrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
    return r;
}

Rational bilinear(const Matrix& g, const Vec& v, const Vec& w) {
    if (g.rows() != v.size() || g.cols() != w.size()) {
        throw DimensionMismatch("pairing of vectors of size " + std::to_string(v.size()) + "/" +
                                std::to_string(w.size()) + " with a " + std::to_string(g.rows()) +
                                "x" + std::to_string(g.cols()) + " form");
    }
    Rational acc = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < w.size(); ++j) acc += v[i] * g(i, j) * w[j];
    }
    return acc;
}

Rational determinant(Matrix m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            m.swap_rows(p, c);
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            const Rational f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

Integer determinant(const IntMatrix& src) {
    if (src.rows() != src.cols()) throw DimensionMismatch("determinant of non-square matrix");
    // Fraction-free Bareiss elimination.
    IntMatrix m = src;
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            m.swap_rows(p, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = v;
            }
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

std::size_t rank(Matrix m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(p, r);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, c) == 0) continue;
            const Rational f = m(i, c) / m(r, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

std::optional<Vec> solve(Matrix a, Vec b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) throw DimensionMismatch("solve shape");
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0) ++p;
        if (p == n) return std::nullopt;
        if (p != c) {
            a.swap_rows(p, c);
            std::swap(b[p], b[c]);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c) == 0) continue;
            const Rational f = a(i, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
            b[i] -= f * b[c];
        }
    }
    for (std::size_t i = 0; i < n; ++i) b[i] /= a(i, i);
    return b;
}

Matrix inverse(const Matrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw DimensionMismatch("inverse of non-square matrix");
    Matrix inv(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Vec e = zero_vec(n);
        e[j] = 1;
        auto x = solve(m, e);
        if (!x) throw DomainError("singular matrix has no inverse");
        for (std::size_t i = 0; i < n; ++i) inv(i, j) = (*x)[i];
    }
    return inv;
}

Inertia inertia(const Matrix& symmetric) {
    if (!symmetric.is_symmetric()) throw DomainError("inertia of a non-symmetric matrix");
    Matrix m = symmetric;
    const std::size_t n = m.rows();
    Inertia out;
    auto sym_swap = [&](std::size_t i, std::size_t j) {
        m.swap_rows(i, j);
        m.swap_cols(i, j);
    };
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m(p, p) == 0) ++p;
        if (p == n) {
            // All remaining diagonal entries vanish; use an off-diagonal entry.
            std::size_t pi = n, pj = n;
            for (std::size_t i = k; i < n && pi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (m(i, j) != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == n) {
                out.zero += static_cast<int>(n - k);
                return out;
            }
            // row_i += row_j, col_i += col_j makes m(i,i) = 2 m(i,j) != 0.
            for (std::size_t c = 0; c < n; ++c) m(pi, c) += m(pj, c);
            for (std::size_t r = 0; r < n; ++r) m(r, pi) += m(r, pj);
            p = pi;
        }
        if (p != k) sym_swap(p, k);
        const Rational d = m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k) == 0) continue;
            const Rational f = m(i, k) / d;
            for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
            for (std::size_t j = k; j < n; ++j) m(j, i) = m(i, j);
        }
        if (d > 0) {
            ++out.positive;
        } else {
            ++out.negative;
        }
    }
    return out;
}

bool is_negative_definite(const Matrix& symmetric) {
    const auto in = inertia(symmetric);
    return in.negative == static_cast<int>(symmetric.rows());
}

SmithForm smith_normal_form(const IntMatrix& src) {
    const std::size_t m = src.rows();
    const std::size_t n = src.cols();
    IntMatrix a = src;
    IntMatrix u = IntMatrix::identity(m);
    IntMatrix v = IntMatrix::identity(n);

    auto row_axpy = [&](std::size_t dst, std::size_t srcrow, const Integer& q) {
        // row_dst -= q * row_src
        for (std::size_t j = 0; j < n; ++j) a(dst, j) -= q * a(srcrow, j);
        for (std::size_t j = 0; j < m; ++j) u(dst, j) -= q * u(srcrow, j);
    };
    auto col_axpy = [&](std::size_t dst, std::size_t srccol, const Integer& q) {
        for (std::size_t i = 0; i < m; ++i) a(i, dst) -= q * a(i, srccol);
        for (std::size_t i = 0; i < n; ++i) v(i, dst) -= q * v(i, srccol);
    };

    const std::size_t steps = std::min(m, n);
    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            std::size_t pi = m, pj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (a(i, j) != 0 && (pi == m || abs(a(i, j)) < abs(a(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == m) break;  // remaining block is zero
            if (pi != t) {
                a.swap_rows(pi, t);
                u.swap_rows(pi, t);
            }
            if (pj != t) {
                a.swap_cols(pj, t);
                v.swap_cols(pj, t);
            }
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a(i, t) == 0) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                row_axpy(i, t, q);
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a(t, j) == 0) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                col_axpy(j, t, q);
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j) {
                    Integer r;
                    mpz_tdiv_r(r.get_mpz_t(), a(i, j).get_mpz_t(), a(t, t).get_mpz_t());
                    if (r != 0) {
                        bad = i;
                        break;
                    }
                }
            if (bad == m) break;
            row_axpy(t, bad, Integer(-1));
        }
        if (a(t, t) < 0) {
            for (std::size_t j = 0; j < n; ++j) a(t, j) = -a(t, j);
            for (std::size_t j = 0; j < m; ++j) u(t, j) = -u(t, j);
        }
    }
    SmithForm out{u, a, v, {}};
    for (std::size_t t = 0; t < steps; ++t) out.diagonal.push_back(a(t, t));
    return out;
}

IntMatrix row_hermite_basis(const IntMatrix& src) {
    IntMatrix a = src;
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        for (;;) {
            std::size_t p = m;
            for (std::size_t i = r; i < m; ++i)
                if (a(i, c) != 0 && (p == m || abs(a(i, c)) < abs(a(p, c)))) p = i;
            if (p == m) break;
            a.swap_rows(p, r);
            bool done = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (a(i, c) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
                for (std::size_t j = 0; j < n; ++j) a(i, j) -= q * a(r, j);
                if (a(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (r < m && a(r, c) != 0) {
            if (a(r, c) < 0)
                for (std::size_t j = 0; j < n; ++j) a(r, j) = -a(r, j);
            for (std::size_t i = 0; i < r; ++i) {
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
                for (std::size_t j = 0; j < n; ++j) a(i, j) -= q * a(r, j);
            }
            ++r;
        }
    }
    IntMatrix out(r, n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, j);
    return out;
}

namespace lp {

namespace {

struct Tableau {
    std::size_t m = 0;
    std::size_t n = 0;
    Matrix t;  // m x n
    Vec rhs;
    std::vector<std::size_t> basis;

    void pivot(std::size_t r, std::size_t c) {
        const Rational p = t(r, c);
        for (std::size_t j = 0; j < n; ++j) t(r, j) /= p;
        rhs[r] /= p;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || t(i, c) == 0) continue;
            const Rational f = t(i, c);
            for (std::size_t j = 0; j < n; ++j) t(i, j) -= f * t(r, j);
            rhs[i] -= f * rhs[r];
        }
        basis[r] = c;
    }

    // Maximizes cost over columns [0, active); returns false when unbounded.
    bool run(const Vec& cost, std::size_t active) {
        for (;;) {
            std::size_t enter = n;
            for (std::size_t j = 0; j < active && enter == n; ++j) {
                if (std::find(basis.begin(), basis.end(), j) != basis.end()) continue;
                Rational reduced = cost[j];
                for (std::size_t i = 0; i < m; ++i) reduced -= cost[basis[i]] * t(i, j);
                if (reduced > 0) enter = j;
            }
            if (enter == n) return true;
            std::size_t leave = m;
            Rational best;
            for (std::size_t i = 0; i < m; ++i) {
                if (t(i, enter) <= 0) continue;
                const Rational ratio = rhs[i] / t(i, enter);
                if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == m) return false;
            pivot(leave, enter);
        }
    }
};

}  // namespace

Result maximize(const Matrix& a, const Vec& b, const Vec& c) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (b.size() != m || c.size() != n) throw DimensionMismatch("lp shape");
    Tableau tab;
    tab.m = m;
    tab.n = n + m;
    tab.t = Matrix(m, n + m);
    tab.rhs = b;
    tab.basis.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j) tab.t(i, j) = flip ? Rational(-a(i, j)) : a(i, j);
        if (flip) tab.rhs[i] = -b[i];
        tab.t(i, n + i) = 1;
        tab.basis[i] = n + i;
    }
    Vec phase1 = zero_vec(n + m);
    for (std::size_t i = 0; i < m; ++i) phase1[n + i] = -1;
    tab.run(phase1, n + m);
    Rational infeas = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (tab.basis[i] >= n) infeas += tab.rhs[i];
    if (infeas != 0) return Result{Status::infeasible, {}, 0};

    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < tab.m;) {
        if (tab.basis[i] < n) {
            ++i;
            continue;
        }
        std::size_t c = n;
        for (std::size_t j = 0; j < n; ++j)
            if (tab.t(i, j) != 0) {
                c = j;
                break;
            }
        if (c < n) {
            tab.pivot(i, c);
            ++i;
            continue;
        }
        Matrix t2(tab.m - 1, tab.n);
        Vec rhs2;
        std::vector<std::size_t> basis2;
        for (std::size_t r = 0, k = 0; r < tab.m; ++r) {
            if (r == i) continue;
            for (std::size_t j = 0; j < tab.n; ++j) t2(k, j) = tab.t(r, j);
            rhs2.push_back(tab.rhs[r]);
            basis2.push_back(tab.basis[r]);
            ++k;
        }
        tab.t = std::move(t2);
        tab.rhs = std::move(rhs2);
        tab.basis = std::move(basis2);
        --tab.m;
    }

    Vec cost = zero_vec(n + m);
    for (std::size_t j = 0; j < n; ++j) cost[j] = c[j];
    if (!tab.run(cost, n)) return Result{Status::unbounded, {}, 0};
    Result out{Status::optimal, zero_vec(n), 0};
    for (std::size_t i = 0; i < tab.m; ++i)
        if (tab.basis[i] < n) out.x[tab.basis[i]] = tab.rhs[i];
    for (std::size_t j = 0; j < n; ++j) out.value += c[j] * out.x[j];
    return out;
}

}  // namespace lp

}  // namespace kstab
