#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "hungerlab/matrix.hpp"
#include "hungerlab/scalar.hpp"

namespace hungerlab {

template <class T>
struct RowEchelon {
    Matrix<T> reduced;
    std::vector<std::size_t> pivot_cols;

    std::size_t rank() const { return pivot_cols.size(); }
};

namespace detail {

// Zero threshold for float elimination, relative to the largest entry.
inline constexpr double float_pivot_tolerance = 1e-10;

template <Scalar T>
bool is_zero_pivot(const T& x, double scale) {
    if constexpr (ScalarTraits<T>::exact)
        return x == 0;
    else
        return std::fabs(x) <= float_pivot_tolerance * scale;
}

}  // namespace detail

/// Gauss-Jordan elimination. Exact pivoting (first nonzero) over rationals,
/// partial pivoting (largest magnitude) over doubles. Only the first
/// `elim_cols` columns are eliminated; later columns ride along (augmented part).
template <Scalar T>
RowEchelon<T> reduced_row_echelon(Matrix<T> m, std::size_t elim_cols) {
    double scale = 1.0;
    if constexpr (!ScalarTraits<T>::exact) {
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) scale = std::max(scale, std::fabs(m(i, j)));
    }

    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < elim_cols && r < m.rows(); ++c) {
        std::size_t best = m.rows();
        if constexpr (ScalarTraits<T>::exact) {
            for (std::size_t i = r; i < m.rows(); ++i)
                if (m(i, c) != 0) {
                    best = i;
                    break;
                }
        } else {
            double best_mag = 0.0;
            for (std::size_t i = r; i < m.rows(); ++i)
                if (std::fabs(m(i, c)) > best_mag) {
                    best_mag = std::fabs(m(i, c));
                    best = i;
                }
            if (best != m.rows() && detail::is_zero_pivot(m(best, c), scale)) best = m.rows();
        }
        if (best == m.rows()) continue;

        m.swap_rows(r, best);
        const T pivot = m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) /= pivot;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            const T factor = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= factor * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

template <Scalar T>
RowEchelon<T> reduced_row_echelon(Matrix<T> m) {
    const std::size_t cols = m.cols();
    return reduced_row_echelon(std::move(m), cols);
}

/// Basis of the right nullspace {x : A x = 0}, one vector per free column.
template <Scalar T>
std::vector<std::vector<T>> nullspace(const Matrix<T>& a) {
    const auto ech = reduced_row_echelon(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : ech.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<T>> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<T> x(a.cols(), T(0));
        x[f] = T(1);
        for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) x[ech.pivot_cols[r]] = -ech.reduced(r, f);
        basis.push_back(std::move(x));
    }
    return basis;
}

template <class T>
struct LinearSolution {
    std::vector<T> x;  // particular solution, free variables set to zero
    std::size_t rank = 0;
    bool unique = false;
};

/// Solves A x = b. Returns nullopt when the system is inconsistent.
template <Scalar T>
std::optional<LinearSolution<T>> solve_linear(const Matrix<T>& a, const std::vector<T>& b) {
    Matrix<T> aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    const auto ech = reduced_row_echelon(std::move(aug), a.cols());
    const std::size_t rank = ech.rank();

    double scale = 1.0;
    if constexpr (!ScalarTraits<T>::exact) {
        for (const auto& v : b) scale = std::max(scale, std::fabs(v));
    }
    for (std::size_t i = rank; i < a.rows(); ++i)
        if (!detail::is_zero_pivot(ech.reduced(i, a.cols()), scale)) return std::nullopt;

    LinearSolution<T> sol;
    sol.x.assign(a.cols(), T(0));
    for (std::size_t r = 0; r < rank; ++r) sol.x[ech.pivot_cols[r]] = ech.reduced(r, a.cols());
    sol.rank = rank;
    sol.unique = rank == a.cols();
    return sol;
}

}  // namespace hungerlab
