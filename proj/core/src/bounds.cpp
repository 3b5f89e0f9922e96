#include "kchord/bounds.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "kchord/errors.hpp"

namespace kchord {

std::int64_t binomial(int a, int b) {
  if (b < 0 || a < b) return 0;
  if (b > a - b) b = a - b;
  unsigned __int128 r = 1;
  for (int i = 1; i <= b; ++i) {
    r = r * static_cast<unsigned>(a - b + i) / static_cast<unsigned>(i);
    if (r > static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max()))
      throw error(errc::overflow, "binomial exceeds int64");
  }
  return static_cast<std::int64_t>(r);
}

std::pair<std::int64_t, std::int64_t> n_cycles_bounds(int p) {
  if (p < 0) throw error(errc::invalid_argument, "p >= 0 required");
  if (p > 62) throw error(errc::overflow, "2^{p+1}-1 exceeds int64 for p > 62");
  std::int64_t lower = binomial(p + 2, 2);
  std::int64_t upper = (p == 62) ? std::numeric_limits<std::int64_t>::max()
                                 : (std::int64_t{1} << (p + 1)) - 1;
  return {lower, upper};
}

namespace {

void check_cap_args(int k, int p) {
  if (k < 3) throw error(errc::k_below_3, "K(k,p) is defined for k >= 3");
  if (p < k) throw error(errc::invalid_argument, "need p >= k");
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw error(errc::overflow, "sum exceeds int64");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw error(errc::overflow, "product exceeds int64");
  return r;
}

}  // namespace

std::int64_t k_cycle_cap(int k, int p) {
  check_cap_args(k, p);
  std::int64_t r = binomial(p, k);
  r = checked_add(r, checked_mul(k, binomial(p - k, k - 1)));
  r = checked_add(r, binomial(p - k, k));
  return r;
}

std::int64_t k_cycle_cap_sum_form(int k, int p) {
  check_cap_args(k, p);
  std::int64_t total = 1;
  for (int r = 1; r <= p - k; ++r) {
    std::int64_t inner = 0;
    for (int i = 0; i <= 1; ++i)
      inner = checked_add(inner, checked_mul(2, checked_mul(binomial(k, i),
                                                            binomial(r - 1, k - i - 1))));
    for (int i = 2; i <= k - 1; ++i)
      inner = checked_add(inner, checked_mul(binomial(k, i), binomial(r - 1, k - i - 1)));
    total = checked_add(total, inner);
  }
  return total;
}

int chord_lower_bound(int n, int k) {
  if (n < 6) throw error(errc::n_too_small, "need n >= 6");
  if (k < 3) throw error(errc::k_below_3, "use the dedicated k=1 / k=2 forms");
  if (k > n) throw error(errc::k_too_large, "k > n");
  std::int64_t need = n - k + 1;
  for (int p = k;; ++p)
    if (k_cycle_cap(k, p) >= need) return p;
}

namespace {

// C(x,k) for real x as a falling factorial over k!.
double real_binomial(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= (x - i) / (i + 1);
  return r;
}

}  // namespace

double corollary1_real_root(int n, int k) {
  if (k < 3) throw error(errc::k_below_3, "polynomial defined for k >= 3");
  auto poly = [&](double p) {
    return real_binomial(p, k) + k * real_binomial(p - k, k - 1) + real_binomial(p - k, k) -
           n + k - 1;
  };
  double lo = k;  // poly(k) = 1 - n + k - 1 < 0 for k < n
  double hi = static_cast<double>(chord_lower_bound(n, k)) + 1.0;
  while (poly(hi) < 0) hi += 1.0;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    (poly(mid) < 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

int c_value_k1(int n) {
  if (n < 6) throw error(errc::n_too_small, "need n >= 6");
  return (n - 2) / 2;  // ceil((n-3)/2)
}

int c_lower_bound_k1(int n) { return c_value_k1(n); }

int k1_printed_floor_form(int n) { return (n - 3) / 2; }

std::int64_t two_chord_cap(std::int64_t p) {
  if (p < 1) throw error(errc::invalid_argument, "p >= 1 required");
  return p * p - p - 1;
}

int c_lower_bound_k2(int n) {
  if (n < 6) throw error(errc::n_too_small, "need n >= 6");
  // ceil((1+sqrt(4n-3))/2): p(p-1) >= n-1  <=>  (2p-1)^2 >= 4n-3, all integer
  int p = 1;
  while (static_cast<std::int64_t>(p) * (p - 1) < n - 1) ++p;
  return p;
}

int pair_lower_bound_k2(int n) {
  if (n < 6) throw error(errc::n_too_small, "need n >= 6");
  int p = 1;
  while (static_cast<std::int64_t>(p) * (p - 1) < n - 2) ++p;
  return p;
}

double bondy_edge_bound(int n) { return n - 1 + std::log2(static_cast<double>(n - 1)); }

BoundReport bound_report(int n, int k) {
  if (n < 6) throw error(errc::n_too_small, "need n >= 6");
  if (k < 1) throw error(errc::invalid_argument, "k >= 1 required");
  if (k > n) throw error(errc::k_too_large, "k > n");
  BoundReport rep;
  rep.n = n;
  rep.k = k;
  rep.bondy_edge_bound = bondy_edge_bound(n);
  std::ostringstream notes;
  if (k == 1) {
    rep.k1_closed_form = c_value_k1(n);
    rep.p_threshold = *rep.k1_closed_form;
    if (k1_printed_floor_form(n) != c_value_k1(n))
      notes << "pairing argument gives ceil((n-3)/2)=" << c_value_k1(n)
            << "; the floor form prints " << k1_printed_floor_form(n)
            << " which contradicts exhaustive search at even n";
  } else if (k == 2) {
    rep.k2_threshold = c_lower_bound_k2(n);
    rep.p_threshold = *rep.k2_threshold;
    notes << "printed 2-chord cap p^2-p-1 undercounts (p=3 crossing chords reach 6 > "
          << two_chord_cap(3) << "); sound search floor is p(p-1) >= n-2, here "
          << pair_lower_bound_k2(n);
  } else {
    rep.p_threshold = chord_lower_bound(n, k);
  }
  rep.notes = notes.str();
  return rep;
}

// ---- Lambert W --------------------------------------------------------------

namespace {

double halley_refine(double w, double x) {
  for (int it = 0; it < 64; ++it) {
    double ew = std::exp(w);
    double f = w * ew - x;
    double denom = ew * (w + 1) - (w + 2) * f / (2 * w + 2);
    double step = f / denom;
    double next = w - step;
    if (!std::isfinite(next)) break;
    w = next;
    if (std::abs(step) <= 1e-16 * (std::abs(w) + 1e-300)) break;
  }
  return w;
}

}  // namespace

double lambert_w(int branch, double x) {
  const double inv_e = std::exp(-1.0);
  if (branch != 0 && branch != -1)
    throw error(errc::domain_error, "branch must be 0 or -1");
  if (x < -inv_e - 1e-15) throw error(errc::domain_error, "x below -1/e");
  if (branch == -1 && x >= 0) throw error(errc::domain_error, "branch -1 needs x < 0");
  if (std::abs(x + inv_e) < 4e-17) return -1.0;

  double q = std::sqrt(std::max(0.0, 2 * (std::exp(1.0) * x + 1)));
  double w;
  if (branch == 0) {
    if (x > 1.0) {
      double l1 = std::log(x), l2 = std::log(l1);
      w = l1 - l2 + l2 / l1;
    } else if (x < -0.25) {
      // series around the branch point in q = sqrt(2(e*x+1))
      w = -1 + q - q * q / 3 + 11.0 / 72.0 * q * q * q;
    } else {
      w = x * (1 - x + 1.5 * x * x);  // small-x series
    }
  } else {
    if (x > -0.25) {
      double l1 = std::log(-x), l2 = std::log(-l1);
      w = l1 - l2 + l2 / l1;
    } else {
      w = -1 - q - q * q / 3 - 11.0 / 72.0 * q * q * q;
    }
  }
  if (std::abs(x + inv_e) < 1e-12) return w;  // Halley degenerates at the branch point
  return halley_refine(w, x);
}

CrossoverResult crossover(int k) {
  if (k < 3)
    throw error(errc::k_below_3, "ln n = n^{1/k} has two positive solutions only for k >= 3");
  CrossoverResult r;
  r.k = k;
  double x = -1.0 / k;
  r.w0_value = lambert_w(0, x);
  r.wm1_value = lambert_w(-1, x);
  r.lower_solution = std::exp(-static_cast<double>(k) * r.w0_value);
  r.upper_solution = std::exp(-static_cast<double>(k) * r.wm1_value);
  return r;
}

}  // namespace kchord
