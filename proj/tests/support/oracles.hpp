#pragma once

// Independent reference computations for the test suite. Everything here
// deliberately avoids the library's own code paths: eigenvalues come from
// Eigen, characteristic polynomials from the Faddeev-LeVerrier recursion,
// and the first-order lag responses from their closed forms.

#include <Eigen/Eigenvalues>

#include <array>
#include <cmath>
#include <random>

#include "mbetsim/linear_model.hpp"

namespace oracles {

struct Cubic {
    // monic: s^3 + c2 s^2 + c1 s + c0
    double c2 = 0.0;
    double c1 = 0.0;
    double c0 = 0.0;
};

inline Eigen::Matrix3d to_eigen(const mbetsim::Mat3& m) {
    Eigen::Matrix3d out;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) out(r, c) = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    return out;
}

// Largest real part over the spectrum of a 3x3 matrix.
inline double max_real_eig(const mbetsim::Mat3& m) {
    Eigen::EigenSolver<Eigen::Matrix3d> es(to_eigen(m), /*computeEigenvectors=*/false);
    double worst = -1e300;
    for (int i = 0; i < 3; ++i) worst = std::max(worst, es.eigenvalues()(i).real());
    return worst;
}

// All three eigenvalues, sorted by real part ascending.
inline std::array<std::complex<double>, 3> eigenvalues(const mbetsim::Mat3& m) {
    Eigen::EigenSolver<Eigen::Matrix3d> es(to_eigen(m), false);
    std::array<std::complex<double>, 3> out{es.eigenvalues()(0), es.eigenvalues()(1),
                                            es.eigenvalues()(2)};
    std::sort(out.begin(), out.end(),
              [](const std::complex<double>& a, const std::complex<double>& b) {
                  return a.real() < b.real();
              });
    return out;
}

// Faddeev-LeVerrier characteristic polynomial of a 3x3 matrix:
//   det(sI - M) = s^3 + c2 s^2 + c1 s + c0
// computed through traces only, no determinant or eigenvalue routine.
inline Cubic char_poly(const mbetsim::Mat3& m) {
    Eigen::Matrix3d M = to_eigen(m);
    Eigen::Matrix3d M1 = M;
    double c2 = -M1.trace();
    Eigen::Matrix3d M2 = M * (M1 + c2 * Eigen::Matrix3d::Identity());
    double c1 = -M2.trace() / 2.0;
    Eigen::Matrix3d M3 = M * (M2 + c1 * Eigen::Matrix3d::Identity());
    double c0 = -M3.trace() / 3.0;
    return {c2, c1, c0};
}

// Closed-form response of the lag V' = (Vc - V)/tau after time t.
inline double lag_response(double v0, double vc, double tau, double t) {
    return vc + (v0 - vc) * std::exp(-t / tau);
}

// Distance covered by the lag output from 0 to t when the heading is frozen:
// integral of lag_response.
inline double lag_distance(double v0, double vc, double tau, double t) {
    return vc * t + tau * (v0 - vc) * (1.0 - std::exp(-t / tau));
}

struct Rng {
    std::mt19937 gen;
    explicit Rng(unsigned seed) : gen(seed) {}
    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen);
    }
};

}  // namespace oracles
