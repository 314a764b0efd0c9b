#include "slc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace slc {

EigenResult eigen_sym(const SymMatrixF& m) {
    if (!is_symmetric(m)) throw std::invalid_argument("eigen_sym needs a symmetric matrix");
    const std::size_t n = m.size();
    SymMatrixF a = m;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!std::isfinite(a(i, j))) throw std::invalid_argument("eigen_sym needs finite entries");

    double norm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) norm2 += a(i, j) * a(i, j);

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
        if (off <= 1e-30 * norm2 || off == 0.0) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                // Rotation zeroing a(p,q), in the stable form of Golub & Van Loan.
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
            }
        }
    }

    EigenResult out;
    out.eigenvalues.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.eigenvalues.push_back(a(i, i));
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
    return out;
}

std::vector<Rational> leading_principal_minors(const SymMatrixQ& m) {
    const std::size_t n = m.size();
    std::vector<Rational> minors;
    minors.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) {
        // Exact Gaussian elimination with row pivoting on the k x k block.
        std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) a[i][j] = m(i, j);
        Rational det(1);
        for (std::size_t col = 0; col < k && !det.is_zero(); ++col) {
            std::size_t piv = col;
            while (piv < k && a[piv][col].is_zero()) ++piv;
            if (piv == k) {
                det = Rational{};
                break;
            }
            if (piv != col) {
                std::swap(a[piv], a[col]);
                det = -det;
            }
            det *= a[col][col];
            for (std::size_t r = col + 1; r < k; ++r) {
                if (a[r][col].is_zero()) continue;
                const Rational f = a[r][col] / a[col][col];
                for (std::size_t j = col; j < k; ++j) a[r][j] -= f * a[col][j];
            }
        }
        minors.push_back(det);
    }
    return minors;
}

bool is_pd_exact(const SymMatrixQ& m) {
    if (m.size() == 0) return false;
    for (const auto& minor : leading_principal_minors(m))
        if (minor.sign() <= 0) return false;
    return true;
}

bool is_strictly_diag_dominant(const SymMatrixQ& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        Rational off;
        for (std::size_t j = 0; j < m.size(); ++j)
            if (j != i) off += m(i, j).abs();
        if (!(m(i, i) > off)) return false;
    }
    return true;
}

double nsd_threshold(const SymMatrixF& m, double rel_tol) { return rel_tol * (1.0 + max_abs_entry(m)); }

}  // namespace slc
