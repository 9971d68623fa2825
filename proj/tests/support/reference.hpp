#pragma once

// Independent reference values for the tests. Everything here is computed by a
// route that shares no code with the library beyond the number types.

#include <vector>

#include "hurwitz/exactnum.hpp"
#include "hurwitz/partitions.hpp"

namespace reference {

using hurwitz::Integer;
using hurwitz::Partition;
using hurwitz::Rational;

/// p(n) from Euler's pentagonal recurrence.
Integer partition_count(int n);

/// Standard Young tableaux by removing corners recursively.
Integer standard_tableaux(const Partition& lambda);

/// [x^k] x(x+1)...(x+n-1).
Integer stirling_first(int n, int k);

/// Surjections n -> k divided by k!.
Integer stirling_second(int n, int k);

/// e_k(1, ..., n) and h_k(1, ..., n) by enumerating subsets and multisets.
Integer elementary_of_range(int k, int n);
Integer complete_of_range(int k, int n);

/// Bernoulli numbers by the Akiyama-Tanigawa table, returned with B_1 = -1/2.
Rational bernoulli(int n);

/// Sum of j - i over the boxes, read off row lengths.
Integer content_sum(const Partition& lambda);

/// Coefficients of S(z) + 1/S(z), S(z) = e^(z/2) - e^(-z/2), from z^-1 up to
/// z^order; entry k + 1 holds [z^k]. This is the regularized sum of
/// e^(z (lambda_i - i + 1/2)) for lambda = (1).
std::vector<Rational> degree_one_eigen_series(int order);

}  // namespace reference
