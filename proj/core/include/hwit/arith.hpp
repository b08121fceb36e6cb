#pragma once

#include <hwit/rational.hpp>

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

namespace hwit {

// A place of Q: a finite prime or the archimedean absolute value.
// Ordering sorts finite places by prime and puts the archimedean place last,
// which is also the canonical rendering order for ramification sets.
class Place {
 public:
  static Place infinite() { return Place(0, true); }
  static Place prime(Int p);  // validates primality

  bool is_infinite() const { return infinite_; }
  const Int& prime_value() const;  // throws if archimedean

  friend bool operator==(const Place&, const Place&) = default;
  friend bool operator<(const Place& a, const Place& b) {
    if (a.infinite_ != b.infinite_) return !a.infinite_;
    return a.p_ < b.p_;
  }

  std::string str() const;  // "2", "3", ..., "∞"

 private:
  Place(Int p, bool infinite) : p_(std::move(p)), infinite_(infinite) {}
  Int p_;
  bool infinite_;
};

// Deterministic Miller-Rabin, exact for all inputs below 2^64.
bool is_prime(const Int& n);

// Prime factorization of |n| by trial division, sorted by prime.
// The sign of n is the caller's business. Requires n != 0 and |n| <= 2^63.
std::vector<std::pair<Int, int>> factorize(const Int& n);

// The squarefree integer d with r/d a nonzero rational square; sign(d) = sign(r).
// Numerator and denominator are factored separately so each only needs to
// clear the 2^63 trial-division bound.
Int squarefree_part(const Rat& r);
Int squarefree_part(const Int& n);

// p-adic valuation of a nonzero rational.
int valuation(const Rat& r, const Int& p);

// Legendre symbol (a/p) in {-1,0,+1} for odd prime p.
int legendre(const Int& a, const Int& p);

// Hilbert symbol (a,b)_v in {+1,-1} for nonzero rationals, by the classical
// closed form: sign inspection at the archimedean place, Legendre symbols on
// the unit parts at odd p, and the epsilon/omega exponent formula at p = 2.
int hilbert_symbol(const Rat& a, const Rat& b, const Place& v);

// Independent ground truth for the symbol: decides whether
//   z^2 = a x^2 + b y^2
// has a nontrivial solution over Q_v by exhaustive search for a primitive
// solution modulo p^k, k = v_p(a)+v_p(b)+3 for odd p and +5 for p = 2
// (margins under which a primitive solution mod p^k lifts). Any primitive
// triple has a unit among x and y (x = y = 0 mod p would force p | z too),
// and scaling by a unit preserves solutions mod p^k, so the scan fixes x
// and then y to 1 and sweeps the other through every square against a full
// table of squares mod p^k; the solution set searched is exactly the one
// described above. Integer inputs only, 0 < |a|,|b| <= 10^4.
int hilbert_oracle(const Int& a, const Int& b, const Place& v);

// The places where a pair or a form can ramify: {inf} united with the primes
// dividing 2 * n for nonzero n.
std::vector<Place> support_places(const Int& n);

}  // namespace hwit
