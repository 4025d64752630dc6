#pragma once

#include <cstddef>
#include <vector>

namespace mplab {

// Tridiagonal system solver (Thomas algorithm). Rows: lo[i]*x[i-1] +
// di[i]*x[i] + up[i]*x[i+1] = b[i]. Factor once, solve many right-hand sides.
class TridiagFactor {
  public:
    TridiagFactor(std::vector<double> lo, std::vector<double> di, std::vector<double> up);
    void solve(std::vector<double>& b) const;  // in place
    std::size_t size() const { return d_.size(); }

  private:
    std::vector<double> l_, d_, u_;  // LU factors
};

// Symmetric positive definite banded matrix, lower storage: band(i, k) holds
// A(i+k, i) for k = 0..bw. LDL^T factorization in place, then repeated solves.
class BandedSpd {
  public:
    BandedSpd(std::size_t n, std::size_t bandwidth);

    double& at(std::size_t row, std::size_t col);  // requires row >= col, row-col <= bw
    double get(std::size_t row, std::size_t col) const;

    void factor();
    void solve(std::vector<double>& b) const;  // in place; requires factor() first

    std::size_t size() const { return n_; }
    std::size_t bandwidth() const { return bw_; }

  private:
    std::size_t n_, bw_;
    std::vector<double> a_;  // (bw+1) x n, a_[k*n + i] = A(i+k, i)
    std::vector<double> dinv_;
    bool factored_ = false;
};

}  // namespace mplab
