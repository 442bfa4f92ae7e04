#include "curvedspec/eigensolve.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <stdexcept>

namespace curvedspec {

std::vector<double> tridiag_lowest_eigenvalues(const std::vector<double>& diag,
                                               const std::vector<double>& offdiag,
                                               std::size_t k) {
    if (diag.empty() || offdiag.size() + 1 != diag.size())
        throw std::invalid_argument("tridiag_lowest_eigenvalues: size mismatch");
    Eigen::VectorXd d = Eigen::Map<const Eigen::VectorXd>(diag.data(), diag.size());
    Eigen::VectorXd e = Eigen::Map<const Eigen::VectorXd>(offdiag.data(), offdiag.size());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(d, e, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("tridiag_lowest_eigenvalues: eigensolver failed");
    const auto& ev = solver.eigenvalues();  // ascending
    const std::size_t kk = std::min<std::size_t>(k, ev.size());
    return std::vector<double>(ev.data(), ev.data() + kk);
}

std::vector<double> schrodinger_lowest_eigenvalues(const std::function<double(double)>& V,
                                                   double x_left, double x_right,
                                                   std::size_t n, std::size_t k) {
    if (n < 8) throw std::invalid_argument("schrodinger_lowest_eigenvalues: n too small");
    if (!(x_right > x_left)) throw std::invalid_argument("schrodinger_lowest_eigenvalues: bad interval");
    const double h = (x_right - x_left) / static_cast<double>(n + 1);
    std::vector<double> diag(n), off(n - 1, -1.0 / (h * h));
    for (std::size_t i = 0; i < n; ++i) {
        const double x = x_left + h * static_cast<double>(i + 1);
        diag[i] = 2.0 / (h * h) + V(x);
    }
    return tridiag_lowest_eigenvalues(diag, off, k);
}

}  // namespace curvedspec
