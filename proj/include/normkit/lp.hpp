// Copyright (c) 2026 the normkit authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NORMKIT_LP_HPP
#define NORMKIT_LP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "normkit/norms.hpp"
#include "normkit/rng.hpp"
#include "normkit/sampling.hpp"

namespace normkit {

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
  double radius() const { return (upper - lower) / 2.0; }
  bool contains(double v, double slack = 0.0) const {
    return v >= lower - slack && v <= upper + slack;
  }
};

namespace detail {

// (a^p + b^p)^(1/p) without overflow; max(a, b) for p = inf.
inline double p_combine(double a, double b, double p) {
  if (p == kInfExponent) return std::max(a, b);
  double m = std::max(a, b);
  if (m == 0.0) return 0.0;
  return m * std::pow(std::pow(a / m, p) + std::pow(b / m, p), 1.0 / p);
}

}  // namespace detail

/// Finite prefix of an l^p element together with a certified upper bound on
/// the l^p norm of the dropped tail. Finitely supported sequences carry a
/// zero tail; generator-backed ones ("1/j^k") get an integral-comparison
/// bound supplied at construction.
class TruncatedSequence {
 public:
  static TruncatedSequence finite(Vec prefix, double p) {
    return TruncatedSequence(std::move(prefix), p, 0.0, "");
  }

  static TruncatedSequence with_tail(Vec prefix, double p, double tail_bound,
                                     std::string generator_tag = "") {
    return TruncatedSequence(std::move(prefix), p, tail_bound,
                             std::move(generator_tag));
  }

  // Supported generators: "1/j" and "1/j^k" (power decay, k >= 1). The tail
  // bound is the integral comparison sum_{j>N} j^(-kp) <= N^(1-kp)/(kp-1).
  static TruncatedSequence generator(const std::string& tag, double p,
                                     std::size_t n_terms) {
    double k = parse_power_tag(tag);
    if (n_terms == 0) throw std::invalid_argument("empty generator prefix");
    Vec prefix(n_terms);
    for (std::size_t j = 0; j < n_terms; ++j)
      prefix[j] = Complex(std::pow(static_cast<double>(j + 1), -k), 0.0);
    double tail;
    if (p == kInfExponent) {
      tail = std::pow(static_cast<double>(n_terms + 1), -k);
    } else {
      double kp = k * p;
      if (!(kp > 1.0))
        throw std::invalid_argument("generator tail diverges for this p");
      double n = static_cast<double>(n_terms);
      tail = std::pow(std::pow(n, 1.0 - kp) / (kp - 1.0), 1.0 / p);
    }
    return TruncatedSequence(std::move(prefix), p, tail, tag);
  }

  const Vec& prefix() const { return prefix_; }
  double exponent() const { return p_; }
  double tail_bound() const { return tail_; }
  const std::string& generator_tag() const { return tag_; }
  std::size_t length() const { return prefix_.size(); }
  bool finitely_supported() const { return tail_ == 0.0; }

  /// Upper bound on the l^p norm of the entries from index `from` on
  /// (0-based): known prefix part combined with the tail certificate.
  double tail_from(std::size_t from) const {
    if (from >= prefix_.size()) return tail_;
    Vec rest(prefix_.begin() + static_cast<std::ptrdiff_t>(from),
             prefix_.end());
    return detail::p_combine(pnorm(rest, p_), tail_, p_);
  }

 private:
  TruncatedSequence(Vec prefix, double p, double tail, std::string tag)
      : prefix_(std::move(prefix)), p_(p), tail_(tail), tag_(std::move(tag)) {
    if (!(p_ >= 1.0)) throw std::invalid_argument("exponent below 1");
    if (tail_ < 0.0) throw std::invalid_argument("negative tail bound");
  }

  static double parse_power_tag(const std::string& tag) {
    if (tag == "1/j") return 1.0;
    if (tag.rfind("1/j^", 0) == 0) {
      double k = std::stod(tag.substr(4));
      if (!(k >= 1.0)) throw std::invalid_argument("generator power below 1");
      return k;
    }
    throw std::invalid_argument("unknown generator tag: " + tag);
  }

  Vec prefix_;
  double p_;
  double tail_;
  std::string tag_;
};

/// Interval the true l^p norm lies in: prefix-only value from below, prefix
/// combined with the tail certificate from above.
inline Interval lp_norm(const TruncatedSequence& x) {
  double lower = pnorm(x.prefix(), x.exponent());
  double upper = detail::p_combine(lower, x.tail_bound(), x.exponent());
  return {lower, upper};
}

struct ConjugatePair {
  double p = 2.0;
  double q = 2.0;

  static ConjugatePair from_p(double p) {
    if (p == 1.0) return {1.0, kInfExponent};
    if (p == kInfExponent) return {kInfExponent, 1.0};
    if (!(p > 1.0)) throw std::invalid_argument("conjugate exponent needs p >= 1");
    return {p, p / (p - 1.0)};
  }

  // The notes state Hoelder for p, q in (1, inf); the 1/inf pairing is a
  // flagged extension.
  bool extension() const { return p == 1.0 || p == kInfExponent; }

  bool valid(double tol = 1e-12) const {
    if (extension())
      return (p == 1.0 && q == kInfExponent) || (p == kInfExponent && q == 1.0);
    return std::abs(1.0 / p + 1.0 / q - 1.0) <= tol;
  }
};

inline bool exponents_match(double a, double b, double tol = 1e-9) {
  if (a == kInfExponent || b == kInfExponent) return a == b;
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(a));
}

struct PairingReport {
  double prefix_sum = 0.0;       // sum over the common prefix of |xi_j eta_j|
  double tail_bound = 0.0;       // Hoelder bound on the dropped part
  double bound = 0.0;            // ||x||_p ||y||_q (upper interval ends)
  double slack = 0.0;
  Vec normalized_x;              // xi-bar, empty when a norm vanishes
  Vec normalized_y;
  double power_sum_x = 0.0;      // sum |xi-bar|^p over the prefix
  double power_sum_y = 0.0;
  double young_max_violation = 0.0;
  bool extension = false;
  bool pass = false;
};

/// Hoelder pairing sum |xi_j eta_j| <= ||x||_p ||y||_q with certified tail
/// handling: tails multiply. Also produces the normalized sequences whose
/// power sums converge to 1 and checks the pointwise Young bound behind the
/// proof.
inline PairingReport holder_pairing(const TruncatedSequence& x,
                                    const TruncatedSequence& y,
                                    const ConjugatePair& pair) {
  if (!pair.valid()) throw std::invalid_argument("exponents are not conjugate");
  if (!exponents_match(x.exponent(), pair.p) ||
      !exponents_match(y.exponent(), pair.q))
    throw std::invalid_argument("sequence exponents do not match the pair");

  PairingReport rep;
  rep.extension = pair.extension();
  const std::size_t m = std::min(x.length(), y.length());
  for (std::size_t j = 0; j < m; ++j)
    rep.prefix_sum += std::abs(x.prefix()[j]) * std::abs(y.prefix()[j]);
  rep.tail_bound = x.tail_from(m) * y.tail_from(m);

  Interval nx = lp_norm(x), ny = lp_norm(y);
  rep.bound = nx.upper * ny.upper;
  rep.slack = rep.bound - (rep.prefix_sum + rep.tail_bound);
  rep.pass = rep.prefix_sum <= rep.bound * (1.0 + 1e-12) + 1e-300;

  if (nx.lower > 0.0 && ny.lower > 0.0) {
    rep.normalized_x = scale(Complex(1.0 / nx.upper, 0.0), x.prefix());
    rep.normalized_y = scale(Complex(1.0 / ny.upper, 0.0), y.prefix());
    if (!pair.extension()) {
      for (std::size_t j = 0; j < m; ++j) {
        double a = std::abs(rep.normalized_x[j]);
        double b = std::abs(rep.normalized_y[j]);
        double young = std::pow(a, pair.p) / pair.p + std::pow(b, pair.q) / pair.q;
        rep.young_max_violation =
            std::max(rep.young_max_violation, a * b - young);
      }
    }
    for (const auto& v : rep.normalized_x)
      rep.power_sum_x += (pair.p == kInfExponent)
                             ? 0.0
                             : std::pow(std::abs(v), pair.p);
    for (const auto& v : rep.normalized_y)
      rep.power_sum_y += (pair.q == kInfExponent)
                             ? 0.0
                             : std::pow(std::abs(v), pair.q);
  }
  return rep;
}

struct InequalityReport {
  Interval lhs;    // ||x + y||_p
  double rhs = 0.0;  // ||x||_p + ||y||_p (upper ends)
  double slack = 0.0;
  bool pass = false;
};

/// Triangle inequality on truncated sequences; the sum's tail certificate is
/// the sum of the operand tails.
inline InequalityReport minkowski_verify(const TruncatedSequence& x,
                                         const TruncatedSequence& y) {
  if (!exponents_match(x.exponent(), y.exponent()))
    throw std::invalid_argument("minkowski needs equal exponents");
  const std::size_t n = std::max(x.length(), y.length());
  Vec sum = zeros(n);
  for (std::size_t j = 0; j < x.length(); ++j) sum[j] += x.prefix()[j];
  for (std::size_t j = 0; j < y.length(); ++j) sum[j] += y.prefix()[j];
  TruncatedSequence z = TruncatedSequence::with_tail(
      std::move(sum), x.exponent(), x.tail_bound() + y.tail_bound());

  InequalityReport rep;
  rep.lhs = lp_norm(z);
  rep.rhs = lp_norm(x).upper + lp_norm(y).upper;
  rep.slack = rep.rhs - rep.lhs.upper;
  rep.pass = rep.lhs.upper <= rep.rhs * (1.0 + 1e-12) + 1e-300;
  return rep;
}

/// Element f = (alpha_n) of l^q acting on l^p by phi_f(x) = sum alpha_n xi_n.
struct DualFunctional {
  TruncatedSequence coeffs;

  double q() const { return coeffs.exponent(); }
};

struct DualApplyResult {
  Complex center{0.0, 0.0};
  double radius = 0.0;  // Hoelder bound on the unpaired tails
  Interval real_interval() const {
    return {center.real() - radius, center.real() + radius};
  }
};

/// Partial sum of sum alpha_n xi_n plus an absolute-error radius bounding
/// the tails; the true series value lies inside the returned disc.
inline DualApplyResult dual_apply(const DualFunctional& f,
                                  const TruncatedSequence& x) {
  ConjugatePair pair = ConjugatePair::from_p(x.exponent());
  if (!exponents_match(f.q(), pair.q))
    throw std::invalid_argument("functional/argument exponents not conjugate");
  DualApplyResult res;
  const std::size_t m = std::min(f.coeffs.length(), x.length());
  for (std::size_t j = 0; j < m; ++j)
    res.center += f.coeffs.prefix()[j] * x.prefix()[j];
  res.radius = f.coeffs.tail_from(m) * x.tail_from(m);
  return res;
}

/// Phase-cancelling witness beta_k = |alpha_k|^(q-1) e^{-i theta_k}. Pairing
/// it against f recovers the truncated ||f||_q exactly: the ratio
/// phi_f(w) / ||w||_p equals (sum_{k<=m} |alpha_k|^q)^(1/q).
struct NormingWitness {
  Vec entries;
  std::size_t m = 0;
  double ratio = 0.0;           // claimed value, truncated ||f||_q
  double achieved_ratio = 0.0;  // re-evaluated phi_f(w)/||w||_p
  bool extension = false;       // q = inf handled by the argmax coordinate
};

inline NormingWitness norming_witness(const DualFunctional& f, std::size_t m) {
  if (m == 0 || m > f.coeffs.length())
    throw std::invalid_argument("witness truncation out of range");
  const Vec& alpha = f.coeffs.prefix();
  bool all_zero = true;
  for (std::size_t k = 0; k < m; ++k)
    if (std::abs(alpha[k]) != 0.0) all_zero = false;
  if (all_zero)
    throw std::invalid_argument("no norming witness for an all-zero prefix");

  NormingWitness w;
  w.m = m;
  w.entries = zeros(m);
  const double q = f.q();
  if (q == kInfExponent) {
    w.extension = true;
    std::size_t best = 0;
    for (std::size_t k = 1; k < m; ++k)
      if (std::abs(alpha[k]) > std::abs(alpha[best])) best = k;
    w.entries[best] = std::conj(phase(alpha[best]));
    w.ratio = std::abs(alpha[best]);
  } else {
    for (std::size_t k = 0; k < m; ++k) {
      double mod = std::abs(alpha[k]);
      if (mod == 0.0) continue;
      double theta = principal_arg(alpha[k]);
      w.entries[k] = std::pow(mod, q - 1.0) *
                     Complex(std::cos(theta), -std::sin(theta));
    }
    Vec head(alpha.begin(), alpha.begin() + static_cast<std::ptrdiff_t>(m));
    w.ratio = pnorm(head, q);
  }

  Complex paired(0.0, 0.0);
  for (std::size_t k = 0; k < m; ++k) paired += alpha[k] * w.entries[k];
  double wp = (q == kInfExponent) ? pnorm(w.entries, 1.0)
                                  : pnorm(w.entries, q / (q - 1.0));
  w.achieved_ratio = (wp > 0.0) ? std::abs(paired) / wp : 0.0;
  return w;
}

struct DualNormReport {
  double upper = 0.0;          // truncated ||f||_q plus the tail certificate
  double lower = 0.0;          // best of sampling and the norming witness
  double witness_ratio = 0.0;
  double sampled_lower = 0.0;
  double gap = 0.0;
  std::size_t m = 0;
};

/// Two one-sided bounds on ||phi_f||: Hoelder from above, the norming
/// witness and seeded unit samples from below.
inline DualNormReport dual_norm(const DualFunctional& f, std::size_t m,
                                std::size_t samples, std::uint64_t seed) {
  if (m == 0 || samples == 0)
    throw std::invalid_argument("m and samples must be >= 1");
  DualNormReport rep;
  rep.m = std::min(m, f.coeffs.length());
  const double q = f.q();
  const double p = (q == kInfExponent) ? 1.0
               : (q == 1.0) ? kInfExponent
                            : q / (q - 1.0);

  rep.upper = pnorm(f.coeffs.prefix(), q) + f.coeffs.tail_bound();

  bool have_witness = false;
  for (std::size_t k = 0; k < rep.m; ++k)
    if (std::abs(f.coeffs.prefix()[k]) != 0.0) have_witness = true;
  if (have_witness)
    rep.witness_ratio = norming_witness(f, rep.m).ratio;

  NormSpec source = NormSpec::p_norm(p, f.coeffs.length());
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    Vec x = sample_unit_vector(source, SampleMode::OnSphere, rng);
    Complex v(0.0, 0.0);
    for (std::size_t j = 0; j < x.size(); ++j)
      v += f.coeffs.prefix()[j] * x[j];
    rep.sampled_lower = std::max(rep.sampled_lower, std::abs(v));
  }
  rep.lower = std::max(rep.witness_ratio, rep.sampled_lower);
  rep.gap = rep.upper - rep.lower;
  return rep;
}

struct LimitReport {
  bool cauchy_ok = true;
  std::pair<std::size_t, std::size_t> violating_pair{0, 0};
  double violating_distance = 0.0;
  Vec limit;
  double limit_tail_bound = 0.0;
  std::vector<double> distances;       // ||x_m - x||_2 on computable prefixes
  double max_distance_excess = 0.0;    // worst distances[m] - eps[m]
  bool converged = true;
};

/// Coordinate-wise (column) limit of an eps-Cauchy family in l^2: the limit
/// candidate is the last iterate, checked against the schedule both pairwise
/// (precondition) and against the candidate.
inline LimitReport cauchy_limit(const std::vector<TruncatedSequence>& seqs,
                                const std::vector<double>& eps_schedule) {
  if (seqs.size() < 2) throw std::invalid_argument("need at least 2 sequences");
  if (eps_schedule.size() < seqs.size())
    throw std::invalid_argument("eps schedule shorter than the family");
  for (const auto& s : seqs)
    if (!exponents_match(s.exponent(), 2.0))
      throw std::invalid_argument("cauchy_limit works in l^2");
  for (std::size_t i = 0; i + 1 < eps_schedule.size(); ++i)
    if (!(eps_schedule[i] > 0.0) || eps_schedule[i + 1] > eps_schedule[i])
      throw std::invalid_argument("eps schedule must be positive decreasing");

  auto prefix_distance = [&](std::size_t a, std::size_t b) {
    const Vec& xa = seqs[a].prefix();
    const Vec& xb = seqs[b].prefix();
    const std::size_t n = std::max(xa.size(), xb.size());
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      Complex va = j < xa.size() ? xa[j] : Complex(0, 0);
      Complex vb = j < xb.size() ? xb[j] : Complex(0, 0);
      s += std::norm(va - vb);
    }
    return std::sqrt(s);
  };

  LimitReport rep;
  const std::size_t count = seqs.size();

  // Pairwise precondition. All pairs at desk scale; a thinned deterministic
  // subset once the quadratic sweep would get expensive.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::size_t max_len = 0;
  for (const auto& s : seqs) max_len = std::max(max_len, s.length());
  const bool exhaustive = count * count * max_len <= 200'000'000ull;
  if (exhaustive) {
    for (std::size_t a = 0; a < count; ++a)
      for (std::size_t b = a + 1; b < count; ++b) pairs.push_back({a, b});
  } else {
    for (std::size_t a = 0; a + 1 < count; ++a) pairs.push_back({a, a + 1});
    for (std::size_t a = 0; a + 1 < count; ++a) pairs.push_back({a, count - 1});
    Rng rng(0xc001d00d);
    for (int s = 0; s < 1000; ++s) {
      std::size_t a = rng.uniform_index(count);
      std::size_t b = rng.uniform_index(count);
      if (a != b) pairs.push_back({std::min(a, b), std::max(a, b)});
    }
  }
  for (const auto& [a, b] : pairs) {
    double d = prefix_distance(a, b);
    double eps = eps_schedule[std::min(a, b)];
    if (d > eps * (1.0 + 1e-9) + 1e-12) {
      rep.cauchy_ok = false;
      rep.violating_pair = {a, b};
      rep.violating_distance = d;
      rep.converged = false;
      return rep;
    }
  }

  rep.limit = seqs.back().prefix();
  rep.limit_tail_bound = seqs.back().tail_bound();
  rep.distances.resize(count);
  for (std::size_t m = 0; m < count; ++m) {
    rep.distances[m] = prefix_distance(m, count - 1);
    double excess = rep.distances[m] - eps_schedule[m];
    rep.max_distance_excess = std::max(rep.max_distance_excess, excess);
    if (excess > 1e-9 * std::max(1.0, eps_schedule[m])) rep.converged = false;
  }
  return rep;
}

}  // namespace normkit

#endif
