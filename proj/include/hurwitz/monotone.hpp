#pragma once

// Brute-force monotone transposition factorizations: sequences (a_i b_i) with
// a_i < b_i and b_1 <= ... <= b_r, sorted by the cycle type of the product.

#include "hurwitz/report.hpp"

namespace hurwitz {

inline constexpr int kMonotoneMaxN = 6;
inline constexpr int kMonotoneMaxR = 6;

// Cycle type histogram; BudgetExceeded beyond n = 6 or r = 6.
std::map<Partition, BigInt> enumerate_monotone(int n, int r);
// Histogram of the products conjugated by the label reversal i -> n+1-i.
std::map<Partition, BigInt> enumerate_monotone_relabelled(int n, int r);
// Number of monotone sequences, h_r(1, 2, ..., n-1).
BigInt monotone_total(int n, int r);

CheckReport compare_with_tau(int n_max, int r_max);
CheckReport check_monotone_totals(int n_max, int r_max);

}  // namespace hurwitz
