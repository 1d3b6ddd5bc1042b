#pragma once

#include <cstddef>

#include "hlab/polynomial.hpp"

namespace hlab {

/// Weighted count of paths with up/down steps, never below the x-axis, from
/// (0,0) to (n,j). A downstep ending at odd height weighs t; all other steps 1.
Polynomial weighted_triangle_entry(long n, long j);

/// Largest family size lgv_bruteforce accepts.
inline constexpr std::size_t kLgvMaxN = 4;

/// Sum over nonintersecting families (path i from (-2i,0) to (2 sigma(i)+2, 2))
/// of sgn(sigma) t^EO, EO counting downsteps from even to odd height.
/// Throws DomainError for n > kLgvMaxN.
Polynomial lgv_bruteforce(std::size_t n);

/// sum_s binom(s-1,k-1) binom(n+k-1-s,k) t^(-s) as poly * t^(-shift).
/// The k = 0 term is the single composition with s = 0.
struct DualSum {
  long shift = 0;
  Polynomial poly;
};
DualSum dual_sum(long n, long k);

/// t^binom(n,2) sum_k (-1)^k dual_sum(n,k).
Polynomial dual_path_total(long n);

/// t^binom(n,2) sum_s (-1)^s binom(n-s,s) t^(-s).
Polynomial dual_path_closed_form(long n);

}  // namespace hlab
