#pragma once

#include <hwit/arith.hpp>

#include <vector>

namespace hwit {

// An element of Q*/Q*^2, stored as its unique squarefree integer
// representative. The group law is written multiplicatively; the identity
// is <1>.
class SquareClass {
 public:
  SquareClass() : rep_(1) {}
  explicit SquareClass(const Int& n) : rep_(squarefree_part(n)) {}
  explicit SquareClass(const Rat& r) : rep_(squarefree_part(r)) {}

  const Int& rep() const { return rep_; }
  bool is_trivial() const { return rep_ == 1; }

  friend SquareClass operator*(const SquareClass& a, const SquareClass& b) {
    return SquareClass(Rat(a.rep_) * Rat(b.rep_));
  }
  friend bool operator==(const SquareClass&, const SquareClass&) = default;

  std::string str() const;  // e.g. "⟨3⟩", "⟨-1⟩"

 private:
  Int rep_;
};

// A 2-torsion Brauer class of Q, stored as its set of ramified places
// (sorted, archimedean last). Reciprocity forces the set to have even size,
// which the constructor checks. Written additively; zero is the empty set.
class BrauerClass {
 public:
  BrauerClass() = default;
  explicit BrauerClass(std::vector<Place> ramified);

  const std::vector<Place>& ramified() const { return places_; }
  bool is_zero() const { return places_.empty(); }
  bool ramified_at(const Place& v) const;

  // Symmetric difference of ramification sets.
  friend BrauerClass operator+(const BrauerClass& a, const BrauerClass& b);
  friend bool operator==(const BrauerClass&, const BrauerClass&) = default;

  std::string str() const;  // e.g. "{2,3}", "{2,∞}", "{}"

 private:
  std::vector<Place> places_;
};

// Cup product H^1 x H^1 -> H^2: the class of the quaternion algebra (a,b),
// i.e. the places where the Hilbert symbol is -1. Only places in
// {inf} u {p : p | 2ab} can ramify, so the scan is finite.
BrauerClass cup(const SquareClass& a, const SquareClass& b);

}  // namespace hwit
