#ifndef RWHITNEY_CAUCHY_HPP
#define RWHITNEY_CAUCHY_HPP

#include <array>

#include <rwhitney/mpoly.hpp>

namespace rwhitney
{

/// first: c_n^q(r).  second: the second-kind polynomial at -r, i.e. hat-c_n^q(-r).
enum class CauchyKind { first, second };

struct CauchyQValue {
    int n = 0;
    CauchyKind kind = CauchyKind::first;
    MPoly value;
};

/// c_n^q(r) = sum_k w(n,k) / (k+1).
MPoly cauchy_first(int n);

/// hat-c_n^q(-r) = sum_k (-1)^k w(n,k) / (k+1).
MPoly cauchy_second_neg(int n);

MPoly cauchy(CauchyKind kind, int n);

/// Independent route: integral over x in [0,1] of prod_{i<n} (x - r - iq) for the
/// first kind, or prod_{i<n} (-x - r - iq) for the second kind at -r.
MPoly cauchy_integral_oracle(CauchyKind kind, int n);

/// sum_k W(n,k) c_k^q(r) against 1/(n+1) (index 0), and
/// sum_k W(n,k) hat-c_k^q(-r) against (-1)^n/(n+1) (index 1).
std::array<IdentitySides, 2> cauchy_W_convolution_sides(int n);
bool cauchy_W_convolution_check(int n);

} // namespace rwhitney

#endif
