#include "posetcoh/smith.hpp"

#include <stdexcept>
#include <utility>

namespace posetcoh {

namespace {

int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

// Elementary row/column operations on the working matrix, mirrored into the
// requested transformation matrices.
class Reducer {
public:
    Reducer(const IntMatrix& m, SmithOptions opt) : a_(m), opt_(opt) {
        if (opt_.left) {
            u_ = IntMatrix::identity(m.rows());
            if (opt_.inverses) u_inv_ = IntMatrix::identity(m.rows());
        }
        if (opt_.right) {
            v_ = IntMatrix::identity(m.cols());
            if (opt_.inverses) v_inv_ = IntMatrix::identity(m.cols());
        }
    }

    SmithDecomposition run() {
        const std::size_t m = a_.rows(), n = a_.cols();
        std::size_t t = 0;
        for (; t < m && t < n; ++t) {
            std::size_t pi, pj;
            if (!find_pivot(t, pi, pj)) break;
            swap_rows(t, pi);
            swap_cols(t, pj);
            reduce_at(t);
            if (sgn(a_(t, t)) < 0) negate_row(t);
        }
        SmithDecomposition out;
        out.rank = t;
        out.D = std::move(a_);
        out.U = std::move(u_);
        out.V = std::move(v_);
        out.U_inv = std::move(u_inv_);
        out.V_inv = std::move(v_inv_);
        return out;
    }

private:
    bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
        bool found = false;
        for (std::size_t i = t; i < a_.rows(); ++i) {
            for (std::size_t j = t; j < a_.cols(); ++j) {
                const Integer& v = a_(i, j);
                if (sgn(v) == 0) continue;
                if (!found || cmpabs(v, a_(pi, pj)) < 0) {
                    pi = i;
                    pj = j;
                    found = true;
                    if (v == 1 || v == -1) return true;
                }
            }
        }
        return found;
    }

    void reduce_at(std::size_t t) {
        const std::size_t m = a_.rows(), n = a_.cols();
        Integer q;
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (sgn(a_(i, t)) == 0) continue;
                mpz_tdiv_q(q.get_mpz_t(), a_(i, t).get_mpz_t(), a_(t, t).get_mpz_t());
                if (sgn(q) != 0) add_row(i, t, -q);
                if (sgn(a_(i, t)) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (sgn(a_(t, j)) == 0) continue;
                mpz_tdiv_q(q.get_mpz_t(), a_(t, j).get_mpz_t(), a_(t, t).get_mpz_t());
                if (sgn(q) != 0) add_col(j, t, -q);
                if (sgn(a_(t, j)) != 0) clean = false;
            }
            if (!clean) {
                // A remainder smaller than the pivot is left in row or column t.
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < m; ++i)
                    if (sgn(a_(i, t)) != 0 && cmpabs(a_(i, t), a_(bi, bj)) < 0) bi = i, bj = t;
                for (std::size_t j = t + 1; j < n; ++j)
                    if (sgn(a_(t, j)) != 0 && cmpabs(a_(t, j), a_(bi, bj)) < 0) bi = t, bj = j;
                swap_rows(t, bi);
                swap_cols(t, bj);
                continue;
            }
            if (a_(t, t) == 1 || a_(t, t) == -1) return;
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i) {
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (sgn(a_(i, j)) != 0 && !mpz_divisible_p(a_(i, j).get_mpz_t(), a_(t, t).get_mpz_t())) {
                        add_row(t, i, Integer(1));
                        divides = false;
                        break;
                    }
                }
            }
            if (divides) return;
        }
    }

    // row_i += c * row_k
    void add_row(std::size_t i, std::size_t k, const Integer& c) {
        row_axpy(a_, i, k, c);
        if (opt_.left) {
            row_axpy(u_, i, k, c);
            if (opt_.inverses) col_axpy(u_inv_, k, i, -c);
        }
    }

    // col_j += c * col_k
    void add_col(std::size_t j, std::size_t k, const Integer& c) {
        col_axpy(a_, j, k, c);
        if (opt_.right) {
            col_axpy(v_, j, k, c);
            if (opt_.inverses) row_axpy(v_inv_, k, j, -c);
        }
    }

    void swap_rows(std::size_t i, std::size_t k) {
        if (i == k) return;
        row_swap(a_, i, k);
        if (opt_.left) {
            row_swap(u_, i, k);
            if (opt_.inverses) col_swap(u_inv_, i, k);
        }
    }

    void swap_cols(std::size_t j, std::size_t k) {
        if (j == k) return;
        col_swap(a_, j, k);
        if (opt_.right) {
            col_swap(v_, j, k);
            if (opt_.inverses) row_swap(v_inv_, j, k);
        }
    }

    void negate_row(std::size_t i) {
        for (std::size_t j = 0; j < a_.cols(); ++j) a_(i, j) = -a_(i, j);
        if (opt_.left) {
            for (std::size_t j = 0; j < u_.cols(); ++j) u_(i, j) = -u_(i, j);
            if (opt_.inverses)
                for (std::size_t r = 0; r < u_inv_.rows(); ++r) u_inv_(r, i) = -u_inv_(r, i);
        }
    }

    static void row_axpy(IntMatrix& m, std::size_t i, std::size_t k, const Integer& c) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Integer& src = m(k, j);
            if (sgn(src) != 0) mpz_addmul(m(i, j).get_mpz_t(), c.get_mpz_t(), src.get_mpz_t());
        }
    }
    static void col_axpy(IntMatrix& m, std::size_t j, std::size_t k, const Integer& c) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
            const Integer& src = m(i, k);
            if (sgn(src) != 0) mpz_addmul(m(i, j).get_mpz_t(), c.get_mpz_t(), src.get_mpz_t());
        }
    }
    static void row_swap(IntMatrix& m, std::size_t i, std::size_t k) {
        for (std::size_t j = 0; j < m.cols(); ++j) mpz_swap(m(i, j).get_mpz_t(), m(k, j).get_mpz_t());
    }
    static void col_swap(IntMatrix& m, std::size_t j, std::size_t k) {
        for (std::size_t i = 0; i < m.rows(); ++i) mpz_swap(m(i, j).get_mpz_t(), m(i, k).get_mpz_t());
    }

    IntMatrix a_;
    SmithOptions opt_;
    IntMatrix u_, v_, u_inv_, v_inv_;
};

}  // namespace

std::vector<Integer> SmithDecomposition::invariant_factors() const {
    std::vector<Integer> d;
    d.reserve(rank);
    for (std::size_t i = 0; i < rank; ++i) d.push_back(D(i, i));
    return d;
}

SmithDecomposition snf(const IntMatrix& m, SmithOptions options) {
    return Reducer(m, options).run();
}

std::vector<Integer> invariant_factors(const IntMatrix& m) {
    return snf(m, SmithOptions{false, false, false}).invariant_factors();
}

std::size_t rank(const IntMatrix& m) {
    return snf(m, SmithOptions{false, false, false}).rank;
}

IntMatrix kernel_basis(const IntMatrix& m) {
    auto s = snf(m, SmithOptions{false, true, false});
    return s.V.column_range(s.rank, m.cols() - s.rank);
}

IntMatrix image_basis(const IntMatrix& m) {
    auto s = snf(m, SmithOptions{true, false, true});
    IntMatrix basis(m.rows(), s.rank);
    for (std::size_t j = 0; j < s.rank; ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) basis(i, j) = s.U_inv(i, j) * s.D(j, j);
    return basis;
}

LatticeSolver::LatticeSolver(const IntMatrix& m)
    : rows_(m.rows()), cols_(m.cols()), smith_(snf(m, SmithOptions{true, true, false})) {}

std::optional<IntVector> LatticeSolver::solve(const IntVector& b) const {
    if (b.size() != rows_) throw std::invalid_argument("solve: dimension mismatch");
    IntVector c = smith_.U.apply(b);
    IntVector y(cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i < smith_.rank) {
            const Integer& d = smith_.D(i, i);
            if (!mpz_divisible_p(c[i].get_mpz_t(), d.get_mpz_t())) return std::nullopt;
            mpz_divexact(y[i].get_mpz_t(), c[i].get_mpz_t(), d.get_mpz_t());
        } else if (sgn(c[i]) != 0) {
            return std::nullopt;
        }
    }
    return smith_.V.apply(y);
}

std::optional<IntVector> solve(const IntMatrix& m, const IntVector& b) {
    return LatticeSolver(m).solve(b);
}

}  // namespace posetcoh
