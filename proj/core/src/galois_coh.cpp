#include <hwit/galois_coh.hpp>

#include <algorithm>
#include <set>

namespace hwit {

std::string SquareClass::str() const { return "⟨" + rep_.str() + "⟩"; }

BrauerClass::BrauerClass(std::vector<Place> ramified) : places_(std::move(ramified)) {
  std::sort(places_.begin(), places_.end());
  const auto dup = std::adjacent_find(places_.begin(), places_.end());
  if (dup != places_.end())
    throw std::domain_error("BrauerClass: duplicate place " + dup->str());
  if (places_.size() % 2 != 0)
    throw std::domain_error("BrauerClass: ramification set must have even size (reciprocity)");
}

bool BrauerClass::ramified_at(const Place& v) const {
  return std::binary_search(places_.begin(), places_.end(), v);
}

BrauerClass operator+(const BrauerClass& a, const BrauerClass& b) {
  std::vector<Place> out;
  std::set_symmetric_difference(a.places_.begin(), a.places_.end(),
                                b.places_.begin(), b.places_.end(),
                                std::back_inserter(out));
  return BrauerClass(std::move(out));
}

std::string BrauerClass::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < places_.size(); ++i) {
    if (i) s += ",";
    s += places_[i].str();
  }
  return s + "}";
}

BrauerClass cup(const SquareClass& a, const SquareClass& b) {
  std::vector<Place> ram;
  for (const Place& v : support_places(a.rep() * b.rep()))
    if (hilbert_symbol(Rat(a.rep()), Rat(b.rep()), v) == -1) ram.push_back(v);
  return BrauerClass(std::move(ram));
}

}  // namespace hwit
