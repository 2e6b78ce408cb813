#include "hurwitz/monotone.hpp"

#include <numeric>

#include "hurwitz/tau.hpp"

namespace hurwitz {

namespace {

Partition cycle_type(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  std::vector<int> lengths;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition::from_unsorted(lengths);
}

// Walks weakly increasing b-sequences and free a-choices, composing the
// transpositions on the right as it goes.
void walk(std::vector<int>& perm, int min_b, int left, const std::function<void()>& leaf) {
  if (left == 0) {
    leaf();
    return;
  }
  const int n = static_cast<int>(perm.size());
  for (int b = min_b; b < n; ++b)
    for (int a = 0; a < b; ++a) {
      std::swap(perm[a], perm[b]);
      walk(perm, b, left - 1, leaf);
      std::swap(perm[a], perm[b]);
    }
}

void guard(int n, int r) {
  if (n < 1 || r < 0) throw Error(ErrorCode::InvalidArgument, "need n >= 1 and r >= 0");
  if (n > kMonotoneMaxN || r > kMonotoneMaxR)
    throw Error(ErrorCode::BudgetExceeded, "enumeration is limited to n <= 6 and r <= 6");
}

std::map<Partition, BigInt> histogram(int n, int r, bool reversed) {
  guard(n, r);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::map<Partition, BigInt> counts;
  std::vector<int> conj(n);
  walk(perm, 1, r, [&] {
    if (!reversed) {
      counts[cycle_type(perm)] += 1;
      return;
    }
    for (int i = 0; i < n; ++i) conj[n - 1 - i] = n - 1 - perm[i];
    counts[cycle_type(conj)] += 1;
  });
  return counts;
}

BigInt hr_of_range(int r, int top) {
  // h_r(1..top) by the recursion h_r(x_1..x_m) = h_r(x_1..x_{m-1}) + x_m h_{r-1}(x_1..x_m).
  std::vector<BigInt> h(r + 1, 0);
  h[0] = 1;
  for (int x = 1; x <= top; ++x)
    for (int k = 1; k <= r; ++k) h[k] += x * h[k - 1];
  return h[r];
}

}  // namespace

std::map<Partition, BigInt> enumerate_monotone(int n, int r) { return histogram(n, r, false); }

std::map<Partition, BigInt> enumerate_monotone_relabelled(int n, int r) {
  return histogram(n, r, true);
}

BigInt monotone_total(int n, int r) {
  guard(n, r);
  return hr_of_range(r, n - 1);
}

CheckReport compare_with_tau(int n_max, int r_max) {
  Check c("monotone-oracle", "n! [t^n u^r p_lambda] tilde-tau at b = 0 counts monotone factorizations",
          {{"nmax", n_max}, {"rmax", r_max}});
  try {
    const TauSeries tau = expand_tau(n_max, TauMode::SymbolicBU);
    const GradedSeries tilde = rescale_tilde(tau);
    for (int n = 1; n <= n_max; ++n) {
      BigInt nfact;
      mpz_fac_ui(nfact.get_mpz_t(), n);
      std::map<Partition, std::vector<RatFun>> useries;
      for (const auto& lambda : partitions_of(n))
        useries[lambda] = tilde.coeff(n, lambda).specialize(Var::B, 0).ratfun().series(Var::U, r_max);
      for (int r = 0; r <= r_max; ++r) {
        const auto counts = enumerate_monotone(n, r);
        for (const auto& lambda : partitions_of(n)) {
          auto it = counts.find(lambda);
          BigInt expected = it == counts.end() ? BigInt(0) : it->second;
          Scalar got = Scalar(useries[lambda][r]) * Scalar(BigRat(nfact));
          c.equal(Scalar(BigRat(expected)), got,
                  {{"n", n}, {"r", r}, {"lambda", partition_json(lambda)}});
        }
      }
    }
  } catch (const std::exception& e) {
    c.error(e, json::object());
  }
  return c.report();
}

CheckReport check_monotone_totals(int n_max, int r_max) {
  Check c("monotone-totals", "histogram totals are h_r(1..n-1); relabelling keeps the histogram",
          {{"nmax", n_max}, {"rmax", r_max}});
  try {
    for (int n = 1; n <= n_max; ++n)
      for (int r = 0; r <= r_max; ++r) {
        const auto counts = enumerate_monotone(n, r);
        BigInt total = 0;
        for (const auto& [lambda, k] : counts) {
          total += k;
          // Each transposition flips the parity of n - l(lambda).
          c.that((n - lambda.length()) % 2 == r % 2, {{"n", n}, {"r", r}}, "parity");
        }
        c.equal(Scalar(BigRat(monotone_total(n, r))), Scalar(BigRat(total)), {{"n", n}, {"r", r}});
        c.that(counts == enumerate_monotone_relabelled(n, r), {{"n", n}, {"r", r}}, "relabelling");
      }
  } catch (const std::exception& e) {
    c.error(e, json::object());
  }
  return c.report();
}

}  // namespace hurwitz
