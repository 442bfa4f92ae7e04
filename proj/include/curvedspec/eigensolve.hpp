#pragma once

#include <functional>
#include <vector>

namespace curvedspec {

// Smallest k eigenvalues of the symmetric tridiagonal matrix with the given
// diagonal and (one shorter) off-diagonal.
std::vector<double> tridiag_lowest_eigenvalues(const std::vector<double>& diag,
                                               const std::vector<double>& offdiag,
                                               std::size_t k);

// Lowest k eigenvalues of -d^2/dx^2 + V(x) on (x_left, x_right) with Dirichlet
// ends, discretized by the 3-point Laplacian on n interior points. The first
// interior point sits at x_left + h, which keeps 1/x^2-type barriers finite.
std::vector<double> schrodinger_lowest_eigenvalues(const std::function<double(double)>& V,
                                                   double x_left, double x_right,
                                                   std::size_t n, std::size_t k);

}  // namespace curvedspec
