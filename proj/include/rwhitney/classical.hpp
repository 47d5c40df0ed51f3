#ifndef RWHITNEY_CLASSICAL_HPP
#define RWHITNEY_CLASSICAL_HPP

#include <vector>

#include <rwhitney/mpoly.hpp>
#include <rwhitney/rational.hpp>

// Classical reference sequences. Nothing here may depend on the Whitney triangles:
// these are the independent oracles they are checked against.

namespace rwhitney
{

/// Stirling numbers of the second kind, plain or r-shifted.
///
/// plain:     S(n,k) = S(n-1,k-1) + k S(n-1,k), S(0,0) = 1.
/// r-shifted: the same recurrence for n > rho, with S_rho(rho,k) = [k == rho] and
///            S_rho(n,k) = 0 for n < rho.
class StirlingTriangle
{
public:
    /// rho = 0 gives the plain triangle.
    explicit StirlingTriangle(int rho = 0);

    [[nodiscard]] int rho() const { return rho_; }
    /// Zero outside rho <= k <= n. Throws std::out_of_range for negative indices.
    const BigInt &at(int n, int k);

private:
    void extend_to(int n);

    int rho_;
    std::vector<std::vector<BigInt>> rows_;
};

/// S(n,k). Throws std::out_of_range for negative indices.
BigInt stirling_oracle(int n, int k);

/// r-Stirling number S_rho(n,k). Throws std::out_of_range for negative indices.
BigInt r_stirling_oracle(int rho, int n, int k);

/// Classical B_0..B_{n_max} from sum_k (-1)^k k!/(k+1) S(n,k).
std::vector<Rational> classical_bernoulli_oracle(int n_max);

/// Classical B_0..B_{n_max} read off t/(e^t - 1).
std::vector<Rational> classical_bernoulli_gf(int n_max);

/// Classical Bernoulli polynomials B_n(r) read off t e^{rt}/(e^t - 1).
std::vector<MPoly> classical_bernoulli_polynomials_gf(int n_max);

/// B_n(rho) = sum_k (-1)^k k!/(k+1) S_rho(n+rho, k+rho) for integer rho >= 0.
Rational classical_bernoulli_r_stirling(int n, int rho);

} // namespace rwhitney

#endif
