#pragma once

// Exact integer linear algebra on Eigen dense matrices.
//
// Everything here is templated on the scalar so the same code runs on
// machine integers (tests, small oracles) and on arbitrary-precision
// `Integer`, which is what the rest of the library uses.

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <cstdlib>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "toribord/errors.hpp"

namespace toribord {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = MatrixX<Integer>;
using IntVec = VectorX<Integer>;
using Index = Eigen::Index;

namespace detail {

template <typename Scalar>
Scalar abs_value(const Scalar& x)
{
    using std::abs;
    return abs(x);
}

template <typename Scalar>
bool is_zero(const Scalar& x) { return x == Scalar(0); }

} // namespace detail

// --------------------------------------------------------------- ordering

/// Lexicographic order on coordinates; shorter vectors first.
template <typename DerivedA, typename DerivedB>
bool lex_less(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b)
{
    if (a.size() != b.size()) return a.size() < b.size();
    for (Index i = 0; i < a.size(); ++i) {
        if (a(i) < b(i)) return true;
        if (b(i) < a(i)) return false;
    }
    return false;
}

struct LexLess {
    template <typename V>
    bool operator()(const V& a, const V& b) const { return lex_less(a, b); }
};

template <typename DerivedA, typename DerivedB>
bool same_vector(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b)
{
    return a.size() == b.size() && a == b;
}

// ---------------------------------------------------------- Smith form

/// U * A * V == D with U, V unimodular and D diagonal with d_1 | d_2 | ...,
/// nonnegative, zeros trailing.
template <typename Scalar>
struct SmithResult {
    MatrixX<Scalar> U;
    MatrixX<Scalar> D;
    MatrixX<Scalar> V;
    Index rank = 0;

    std::vector<Scalar> invariant_factors() const
    {
        std::vector<Scalar> out;
        for (Index i = 0; i < rank; ++i) out.push_back(D(i, i));
        return out;
    }
};

namespace detail {

// Elimination state shared by the full and the factors-only Smith routine.
template <typename Scalar>
class SmithReducer {
public:
    SmithReducer(MatrixX<Scalar> a, bool transforms) : D(std::move(a)), track(transforms)
    {
        if (track) {
            U = MatrixX<Scalar>::Identity(D.rows(), D.rows());
            V = MatrixX<Scalar>::Identity(D.cols(), D.cols());
        }
    }

    Index run()
    {
        const Index limit = std::min(D.rows(), D.cols());
        Index t = 0;
        for (; t < limit; ++t) {
            Index pi = -1, pj = -1;
            if (!min_abs_entry(t, pi, pj)) break;
            swap_rows(t, pi);
            swap_cols(t, pj);
            reduce_pivot(t);
            if (D(t, t) < Scalar(0)) negate_row(t);
        }
        return t;
    }

    MatrixX<Scalar> D;
    MatrixX<Scalar> U;
    MatrixX<Scalar> V;

private:
    bool track;

    bool min_abs_entry(Index t, Index& pi, Index& pj) const
    {
        Scalar best(0);
        for (Index j = t; j < D.cols(); ++j) {
            for (Index i = t; i < D.rows(); ++i) {
                const Scalar& x = D(i, j);
                if (is_zero(x)) continue;
                Scalar ax = abs_value(x);
                if (pi < 0 || ax < best) {
                    best = ax;
                    pi = i;
                    pj = j;
                    if (best == Scalar(1)) return true;
                }
            }
        }
        return pi >= 0;
    }

    void swap_rows(Index a, Index b)
    {
        if (a == b) return;
        D.row(a).swap(D.row(b));
        if (track) U.row(a).swap(U.row(b));
    }

    void swap_cols(Index a, Index b)
    {
        if (a == b) return;
        D.col(a).swap(D.col(b));
        if (track) V.col(a).swap(V.col(b));
    }

    void negate_row(Index t)
    {
        D.row(t) = -D.row(t);
        if (track) U.row(t) = -U.row(t);
    }

    // row_i -= q * row_t (D restricted to columns >= t; D's columns < t are zero there).
    void row_axpy(Index i, Index t, const Scalar& q)
    {
        const Index w = D.cols() - t;
        D.row(i).tail(w) -= q * D.row(t).tail(w);
        if (track) U.row(i) -= q * U.row(t);
    }

    // row_t += row_i
    void add_row_into_pivot(Index t, Index i)
    {
        const Index w = D.cols() - t;
        D.row(t).tail(w) += D.row(i).tail(w);
        if (track) U.row(t) += U.row(i);
    }

    void col_axpy(Index j, Index t, const Scalar& q)
    {
        const Index h = D.rows() - t;
        D.col(j).tail(h) -= q * D.col(t).tail(h);
        if (track) V.col(j) -= q * V.col(t);
    }

    void reduce_pivot(Index t)
    {
        for (;;) {
            bool clean = true;
            for (Index i = t + 1; i < D.rows(); ++i) {
                if (is_zero(D(i, t))) continue;
                const Scalar q = D(i, t) / D(t, t);
                if (!is_zero(q)) row_axpy(i, t, q);
                if (!is_zero(D(i, t))) clean = false;
            }
            for (Index j = t + 1; j < D.cols(); ++j) {
                if (is_zero(D(t, j))) continue;
                const Scalar q = D(t, j) / D(t, t);
                if (!is_zero(q)) col_axpy(j, t, q);
                if (!is_zero(D(t, j))) clean = false;
            }
            if (!clean) {
                // A remainder smaller than the pivot survived; move it to the pivot.
                Index bi = t, bj = t;
                Scalar best = abs_value(D(t, t));
                for (Index i = t + 1; i < D.rows(); ++i)
                    if (!is_zero(D(i, t)) && abs_value(D(i, t)) < best) { best = abs_value(D(i, t)); bi = i; bj = t; }
                for (Index j = t + 1; j < D.cols(); ++j)
                    if (!is_zero(D(t, j)) && abs_value(D(t, j)) < best) { best = abs_value(D(t, j)); bi = t; bj = j; }
                swap_rows(t, bi);
                swap_cols(t, bj);
                continue;
            }
            // Row and column are clear; enforce divisibility of the trailing block.
            if (abs_value(D(t, t)) == Scalar(1)) return;
            bool divisible = true;
            for (Index i = t + 1; i < D.rows() && divisible; ++i) {
                for (Index j = t + 1; j < D.cols(); ++j) {
                    if (!is_zero(D(i, j) % D(t, t))) {
                        add_row_into_pivot(t, i);
                        divisible = false;
                        break;
                    }
                }
            }
            if (divisible) return;
        }
    }
};

} // namespace detail

template <typename Derived>
SmithResult<typename Derived::Scalar> smith_normal_form(const Eigen::MatrixBase<Derived>& a)
{
    using Scalar = typename Derived::Scalar;
    detail::SmithReducer<Scalar> red(a.eval(), true);
    SmithResult<Scalar> out;
    out.rank = red.run();
    out.U = std::move(red.U);
    out.D = std::move(red.D);
    out.V = std::move(red.V);
    return out;
}

/// Nonzero diagonal of the Smith form, without computing the transforms.
template <typename Derived>
std::vector<typename Derived::Scalar> invariant_factors(const Eigen::MatrixBase<Derived>& a)
{
    using Scalar = typename Derived::Scalar;
    detail::SmithReducer<Scalar> red(a.eval(), false);
    const Index r = red.run();
    std::vector<Scalar> out;
    out.reserve(static_cast<std::size_t>(r));
    for (Index i = 0; i < r; ++i) out.push_back(red.D(i, i));
    return out;
}

template <typename Derived>
Index int_rank(const Eigen::MatrixBase<Derived>& a)
{
    return static_cast<Index>(invariant_factors(a).size());
}

// ------------------------------------------------------------ determinant

/// Exact determinant by Bareiss fraction-free elimination.
template <typename Derived>
typename Derived::Scalar int_det(const Eigen::MatrixBase<Derived>& a)
{
    using Scalar = typename Derived::Scalar;
    if (a.rows() != a.cols()) throw DimensionMismatch("determinant of a non-square matrix");
    const Index n = a.rows();
    if (n == 0) return Scalar(1);
    MatrixX<Scalar> m = a.eval();
    Scalar sign(1);
    Scalar prev(1);
    for (Index k = 0; k + 1 < n; ++k) {
        if (detail::is_zero(m(k, k))) {
            Index p = k + 1;
            while (p < n && detail::is_zero(m(p, k))) ++p;
            if (p == n) return Scalar(0);
            m.row(k).swap(m.row(p));
            sign = -sign;
        }
        for (Index i = k + 1; i < n; ++i) {
            for (Index j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            m(i, k) = Scalar(0);
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

// ---------------------------------------------------------- solve / kernel

/// Some integer x with A x = b, or nullopt if none exists.
template <typename DerivedA, typename DerivedB>
std::optional<VectorX<typename DerivedA::Scalar>> int_solve(const Eigen::MatrixBase<DerivedA>& a,
                                                            const Eigen::MatrixBase<DerivedB>& b)
{
    using Scalar = typename DerivedA::Scalar;
    if (b.size() != a.rows()) throw DimensionMismatch("right-hand side length differs from row count");
    const auto snf = smith_normal_form(a);
    const VectorX<Scalar> ub = snf.U * b;
    VectorX<Scalar> y = VectorX<Scalar>::Zero(a.cols());
    for (Index i = 0; i < ub.size(); ++i) {
        if (i < snf.rank) {
            if (!detail::is_zero(ub(i) % snf.D(i, i))) return std::nullopt;
            y(i) = ub(i) / snf.D(i, i);
        } else if (!detail::is_zero(ub(i))) {
            return std::nullopt;
        }
    }
    return VectorX<Scalar>(snf.V * y);
}

/// Columns form a lattice basis of {x in Z^cols : A x = 0}.
template <typename Derived>
MatrixX<typename Derived::Scalar> int_kernel_basis(const Eigen::MatrixBase<Derived>& a)
{
    const auto snf = smith_normal_form(a);
    return snf.V.rightCols(a.cols() - snf.rank);
}

// ----------------------------------------------------------- unimodularity

/// Inverse-transpose of a unimodular matrix: columns s_j with <s_j, b_k> = delta_jk.
/// Throws NotUnimodular when |det B| != 1.
template <typename Derived>
MatrixX<typename Derived::Scalar> int_dual_basis(const Eigen::MatrixBase<Derived>& b)
{
    using Scalar = typename Derived::Scalar;
    if (b.rows() != b.cols()) throw DimensionMismatch("dual basis of a non-square matrix");
    const auto snf = smith_normal_form(b);
    for (Index i = 0; i < b.rows(); ++i)
        if (i >= snf.rank || snf.D(i, i) != Scalar(1))
            throw NotUnimodular("basis matrix does not have determinant +-1");
    // B = U^-1 V^-1, so B^-1 = V U.
    return (snf.V * snf.U).transpose();
}

/// True iff the columns span a direct summand of Z^n of rank equal to their
/// count, i.e. every invariant factor of the n x m column matrix is 1.
template <typename Derived>
bool is_unimodular_columns(const Eigen::MatrixBase<Derived>& cols)
{
    using Scalar = typename Derived::Scalar;
    if (cols.cols() == 0) return true;
    if (cols.cols() > cols.rows()) return false;
    const auto factors = invariant_factors(cols);
    if (static_cast<Index>(factors.size()) != cols.cols()) return false;
    for (const auto& f : factors)
        if (f != Scalar(1)) return false;
    return true;
}

IntMatrix columns_matrix(std::span<const IntVec> vectors, Index n);

/// Unimodularity of a set of integer vectors of length n.
bool is_unimodular_set_z(std::span<const IntVec> vectors);

/// Gcd of the entries; zero for the zero vector.
Integer content(const IntVec& v);
inline bool is_primitive(const IntVec& v) { return content(v) == 1; }

IntVec int_vec(std::initializer_list<long> entries);
IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows);

/// "c1,c2,...,cn"
std::string to_string(const IntVec& v);
IntVec parse_int_vec(std::string_view text);

} // namespace toribord
