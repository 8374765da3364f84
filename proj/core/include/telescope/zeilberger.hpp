#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "telescope/biratfunc.hpp"
#include "telescope/hyperterm.hpp"
#include "telescope/poly.hpp"

namespace telescope {

// sum_{j=0}^{order} coeffs[j](n) * S(n - j) = 0 (backward form, as printed
// in the literature). Canonical: coefficients share no polynomial or
// integer content and coeffs[0] has a positive leading coefficient.
struct Recurrence {
  std::vector<Poly> coeffs;

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  // Removes common content and fixes the sign; throws if coeffs[0] == 0.
  Recurrence canonical() const;
  std::string to_string() const;  // "a0(n)*S(n) + a1(n)*S(n-1) + ..."

  friend bool operator==(const Recurrence&, const Recurrence&) = default;
};

// True iff a and b have equal order and their coefficient vectors are
// proportional over Q(n).
bool proportional(const Recurrence& a, const Recurrence& b);

// Creative-telescoping witness in forward form:
//
//   sum_j forward[j](n) f(n+j,k) = g(n,k+1) - g(n,k),  g = R f.
//
// The backward recurrence is recovered by n -> n - order and j -> order - j.
struct WZCertificate {
  BiRatFunc R;
  std::vector<Poly> forward;

  int order() const { return static_cast<int>(forward.size()) - 1; }
  Recurrence to_backward() const;
  // "R = <num> / <den>" with both sides in the canonical BiPoly order.
  std::string serialize() const;
  // Stable 64-bit FNV-1a digest of serialize(), as 16 hex digits.
  std::string digest() const;
};

struct TelescopingResult {
  Recurrence recurrence;
  WZCertificate certificate;
};

// Escalates J = 1..max_order and returns the first telescoper found.
std::optional<TelescopingResult> zeilberger(const HyperTerm& t, int max_order);

// Attempts exactly order J.
std::optional<TelescopingResult> zeilberger_at_order(const HyperTerm& t, int order);

class ConventionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The certificate identity holds as a rational-function identity, the
// recurrence matches the certificate's telescoper, and the recurrence
// annihilates the exact sums for every n in [n_lo, n_hi] (with n - order >= 0).
// Throws ConventionError when recurrence and certificate orders differ.
bool verify_certificate(const HyperTerm& t, const Support& support, const Recurrence& rec,
                        const WZCertificate& cert, std::int64_t n_lo, std::int64_t n_hi);

// Just the symbolic half of verify_certificate.
bool certificate_identity_holds(const HyperTerm& t, const WZCertificate& cert);

// sum_j a_j(n) values(n - j) == 0 for all n in [n_lo, n_hi]. Throws
// std::out_of_range when a needed value is missing.
bool check_recurrence_numeric(const std::map<std::int64_t, Rational>& values, const Recurrence& rec,
                              std::int64_t n_lo, std::int64_t n_hi);

}  // namespace telescope
