#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "slc/rational.hpp"
#include "slc/sparse_poly.hpp"

namespace slc {

/// Small dense square matrix, row-major. Writes through set_sym() keep it
/// symmetric; is_symmetric() checks the invariant for matrices built otherwise.
template <typename T>
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(std::size_t n, const T& fill = T{}) : n_(n), data_(n * n, fill) {}

    std::size_t size() const { return n_; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

    void set_sym(std::size_t i, std::size_t j, const T& v) {
        data_[i * n_ + j] = v;
        data_[j * n_ + i] = v;
    }

    template <typename F>
    auto map(F&& f) const {
        using U = decltype(f(data_.front()));
        SymMatrix<U> out(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) out(i, j) = f((*this)(i, j));
        return out;
    }

    friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<T> data_;
};

using SymMatrixF = SymMatrix<double>;
using SymMatrixQ = SymMatrix<Rational>;
using SymMatrixS = SymMatrix<SparsePoly>;

inline bool is_symmetric(const SymMatrixF& m, double tol = 1e-12) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (!(std::abs(m(i, j) - m(j, i)) <= tol)) return false;
    return true;
}

template <typename T>
bool is_symmetric(const SymMatrix<T>& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (!(m(i, j) == m(j, i))) return false;
    return true;
}

inline double max_abs_entry(const SymMatrixF& m) {
    double best = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) best = std::max(best, std::abs(m(i, j)));
    return best;
}

/// Evaluates every entry of a symbolic matrix at an exact rational point.
inline SymMatrixQ eval_exact(const SymMatrixS& m, std::span<const Rational> x) {
    return m.map([&](const SparsePoly& p) { return p.eval_exact(x); });
}

inline SymMatrixF eval(const SymMatrixS& m, std::span<const double> x) {
    return m.map([&](const SparsePoly& p) { return p.eval(x); });
}

}  // namespace slc
