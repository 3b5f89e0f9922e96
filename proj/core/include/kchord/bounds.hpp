#ifndef KCHORD_BOUNDS_HPP
#define KCHORD_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace kchord {

// Exact C(a,b); 0 when b < 0 or a < b (the caps rely on this convention at p
// close to k). Throws on int64 overflow.
std::int64_t binomial(int a, int b);

// Lemma-2 style sandwich for the number of cycles after adding p chords:
// ( C(p+2,2), 2^{p+1}-1 ). Exact integers, p <= 62.
std::pair<std::int64_t, std::int64_t> n_cycles_bounds(int p);

// Cap on the number of k-chord cycles creatable with p chords that include a
// k-cycle of chords: C(p,k) + k*C(p-k,k-1) + C(p-k,k). k >= 3.
std::int64_t k_cycle_cap(int k, int p);

// The same cap evaluated as the pre-simplification double sum
//   1 + sum_{r=1}^{p-k} ( 2*sum_{i=0}^{1} C(k,i)C(r-1,k-i-1)
//                         + sum_{i=2}^{k-1} C(k,i)C(r-1,k-i-1) ).
// Must equal k_cycle_cap; the equality is machine-checked instead of taking
// the algebraic simplification on faith.
std::int64_t k_cycle_cap_sum_form(int k, int p);

// Integer threshold form of the polynomial root bound: smallest p >= k with
// k_cycle_cap(k,p) >= n-k+1. k >= 3.
int chord_lower_bound(int n, int k);

// Largest real root of Pi(p) = cap(k,p) - n + k - 1 with binomials read as
// falling-factorial polynomials in real p. Reporting only; thresholds above
// are the integer source of truth.
double corollary1_real_root(int n, int k);

// k = 1: each chord realizes the complementary pair of 1-chord cycle lengths
// {l, n+2-l}, and there are n-3 target lengths, so ceil((n-3)/2) chords are
// both necessary and sufficient. (The printed closed form floors instead;
// see bound_report notes and the discrepancy audit.)
int c_value_k1(int n);
int c_lower_bound_k1(int n);
int k1_printed_floor_form(int n);

// k = 2 forms as printed: cap p^2-p-1 on 2-chord cycles and the explicit
// threshold ceil((1+sqrt(4n-3))/2), equivalently min p with p(p-1) >= n-1.
std::int64_t two_chord_cap(std::int64_t p);
int c_lower_bound_k2(int n);

// Sound k = 2 search floor: a pair of chords yields at most two 2-chord
// cycles, so p chords yield at most p(p-1); needing n-2 lengths forces
// p(p-1) >= n-2. Used to seed the search because the printed cap undercounts
// (see the empirical audit).
int pair_lower_bound_k2(int n);

// Minimum edge count of a pancyclic graph on n vertices: n-1+log2(n-1).
double bondy_edge_bound(int n);

struct BoundReport {
  int n = 0;
  int k = 0;
  int p_threshold = 1;
  std::optional<int> k1_closed_form;
  std::optional<int> k2_threshold;
  double bondy_edge_bound = 0.0;
  std::string notes;
};

BoundReport bound_report(int n, int k);

// ---- Lambert W and the log/root crossover ----------------------------------

// Real branches of w*e^w = x. branch 0: x >= -1/e; branch -1: -1/e <= x < 0.
// Halley-refined to ~1e-14 relative residual.
double lambert_w(int branch, double x);

// The two positive solutions of ln n = n^{1/k} (k >= 3): n = exp(-k*W(-1/k))
// on the two branches. Above upper_solution the log bound loses to the k-th
// root bound for good.
struct CrossoverResult {
  int k = 0;
  double lower_solution = 0.0;
  double upper_solution = 0.0;
  double w0_value = 0.0;
  double wm1_value = 0.0;
};

CrossoverResult crossover(int k);

}  // namespace kchord

#endif
