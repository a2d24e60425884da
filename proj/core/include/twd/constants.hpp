#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <span>
#include <string>
#include <string_view>

namespace twd {

using BigInt = boost::multiprecision::cpp_int;

/// Values above 2^kBoundBits are not materialized; they are replaced by the
/// lower bound 2^kBoundBits and flagged inexact.
inline constexpr unsigned kBoundBits = 16384;

/// An exact integer, or (exact == false) a certified lower bound on one.
struct Bound {
  BigInt value;
  bool exact = true;

  Bound() = default;
  Bound(BigInt v, bool is_exact = true);  // NOLINT(google-explicit-constructor)

  /// Decimal string; inexact values are prefixed with ">= ".
  std::string str() const;

  friend bool operator==(const Bound&, const Bound&) = default;
};

Bound operator+(const Bound& a, const Bound& b);
Bound operator*(const Bound& a, const Bound& b);

/// All functions below are monotone in their arguments, so feeding them lower
/// bounds yields lower bounds.
namespace constants {

/// Pigeonhole number r(m-1)+1.
Bound pigeonhole(const Bound& r, const Bound& m);

/// Upper bound on the Ramsey number from R(p,q) <= R(p-1,q) + R(p,q-1),
/// R(1,q) = R(p,1) = 1; equals binom(p+q-2, min(p,q)-1). R(p,q) is the least
/// n forcing an independent p-set or a q-clique.
Bound ramsey_upper(const Bound& p, const Bound& q);

/// Exact Ramsey number. Closed form when min(p,q) <= 2, otherwise an
/// exhaustive search over graphs with no independent p-set and no q-clique,
/// grown one vertex at a time up to isomorphism. Supported for p + q <= 7;
/// ContractError beyond that.
int ramsey_exact(int p, int q);

/// C(a,b) = 2 P(a^r, b) with r = P(a^b, b).
Bound biclique_family(const Bound& a, const Bound& b);

/// R^0(a,b) = R(a,b), R^i(a,b) = R(R^{i-1}(a,b), b).
Bound ramsey_iterated(const Bound& i, const Bound& a, const Bound& b);

Bound q(const Bound& r, const Bound& p);  ///< R(r, C(rp, p))
Bound c(const Bound& r, const Bound& p);  ///< R^q(r, C(p, p))
Bound d(const Bound& r, const Bound& p);  ///< c + q
Bound m(const Bound& r, const Bound& p);  ///< R(d, 2p)

/// binom(m,2) p + (m-2) + R(3, C) with m = m(p,p), C = C(p,p).
Bound block_bound(const Bound& p);

/// 2(b-1)(b-2).
Bound degree_bound(const Bound& b);

/// (3p+1) R(k, C(3p+1, p)).
Bound delete_bound(const Bound& k, const Bound& p);

/// Dispatch by name: R, R_exact, P, C, R_iter, q, c, d, m, b, deg, delete.
/// Arguments must be >= 1 (R_iter's first argument >= 0). SpecError for an
/// unknown name, wrong arity or out-of-range argument.
Bound evaluate(std::string_view name, std::span<const long long> args);

}  // namespace constants
}  // namespace twd
