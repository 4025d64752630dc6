#include "mplab/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace mplab {

TridiagFactor::TridiagFactor(std::vector<double> lo, std::vector<double> di,
                             std::vector<double> up)
    : l_(std::move(lo)), d_(std::move(di)), u_(std::move(up)) {
    const std::size_t n = d_.size();
    if (l_.size() != n || u_.size() != n) throw std::invalid_argument("TridiagFactor: sizes");
    // no-pivot LU; valid for the diagonally dominant systems assembled here
    for (std::size_t i = 1; i < n; ++i) {
        if (d_[i - 1] == 0.0) throw std::runtime_error("TridiagFactor: zero pivot");
        double m = l_[i] / d_[i - 1];
        l_[i] = m;
        d_[i] -= m * u_[i - 1];
    }
    if (d_[n - 1] == 0.0) throw std::runtime_error("TridiagFactor: zero pivot");
}

void TridiagFactor::solve(std::vector<double>& b) const {
    const std::size_t n = d_.size();
    if (b.size() != n) throw std::invalid_argument("TridiagFactor::solve: size");
    for (std::size_t i = 1; i < n; ++i) b[i] -= l_[i] * b[i - 1];
    b[n - 1] /= d_[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) b[i] = (b[i] - u_[i] * b[i + 1]) / d_[i];
}

BandedSpd::BandedSpd(std::size_t n, std::size_t bandwidth)
    : n_(n), bw_(bandwidth), a_((bandwidth + 1) * n, 0.0), dinv_(n, 0.0) {}

double& BandedSpd::at(std::size_t row, std::size_t col) {
    if (row < col || row - col > bw_ || row >= n_)
        throw std::out_of_range("BandedSpd::at outside band");
    return a_[(row - col) * n_ + col];
}

double BandedSpd::get(std::size_t row, std::size_t col) const {
    if (row < col) std::swap(row, col);
    if (row - col > bw_) return 0.0;
    return a_[(row - col) * n_ + col];
}

void BandedSpd::factor() {
    // banded LDL^T, in place: a_[k*n + j] becomes L(j+k, j), diag holds D(j)
    for (std::size_t j = 0; j < n_; ++j) {
        double dj = a_[j];
        std::size_t k0 = (j > bw_) ? j - bw_ : 0;
        for (std::size_t k = k0; k < j; ++k) {
            double ljk = a_[(j - k) * n_ + k];
            dj -= ljk * ljk * a_[k];
        }
        if (!(dj > 0)) throw std::runtime_error("BandedSpd::factor: matrix not positive definite");
        a_[j] = dj;
        dinv_[j] = 1.0 / dj;
        std::size_t imax = std::min(n_ - 1, j + bw_);
        for (std::size_t i = j + 1; i <= imax; ++i) {
            double s = a_[(i - j) * n_ + j];
            std::size_t kk0 = (i > bw_) ? i - bw_ : 0;
            for (std::size_t k = std::max(k0, kk0); k < j; ++k)
                s -= a_[(i - k) * n_ + k] * a_[(j - k) * n_ + k] * a_[k];
            a_[(i - j) * n_ + j] = s * dinv_[j];
        }
    }
    factored_ = true;
}

void BandedSpd::solve(std::vector<double>& b) const {
    if (!factored_) throw std::runtime_error("BandedSpd::solve before factor");
    if (b.size() != n_) throw std::invalid_argument("BandedSpd::solve: size");
    // forward: L y = b
    for (std::size_t j = 0; j < n_; ++j) {
        double bj = b[j];
        std::size_t imax = std::min(n_ - 1, j + bw_);
        for (std::size_t i = j + 1; i <= imax; ++i) b[i] -= a_[(i - j) * n_ + j] * bj;
    }
    // diagonal and back-substitution: L^T x = D^{-1} y
    for (std::size_t j = n_; j-- > 0;) {
        double s = b[j] * dinv_[j];
        std::size_t imax = std::min(n_ - 1, j + bw_);
        for (std::size_t i = j + 1; i <= imax; ++i) s -= a_[(i - j) * n_ + j] * b[i];
        b[j] = s;
    }
}

}  // namespace mplab
