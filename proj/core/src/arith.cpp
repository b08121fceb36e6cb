#include <hwit/arith.hpp>
#include <hwit/errors.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

namespace hwit {

namespace {

// Function-local so callers running during static initialization (before
// namespace-scope constants would be constructed) still see the right bound.
const Int& two63() {
  static const Int v = Int(1) << 63;
  return v;
}

}  // namespace

Rat parse_rat(const std::string& text) {
  auto bad = [&] { return ParseError("not a rational: '" + text + "'"); };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  const std::string ns = text.substr(0, slash);
  std::string ds = slash == std::string::npos ? "1" : text.substr(slash + 1);
  auto check_int = [&](const std::string& s) {
    if (s.empty()) throw bad();
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw bad();
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw bad();
  };
  check_int(ns);
  check_int(ds);
  Int n(ns), d(ds);
  if (d == 0) throw ParseError("zero denominator: '" + text + "'");
  if (d < 0) {  // the two-arg rational constructor rejects negative denominators
    n = -n;
    d = -d;
  }
  return Rat(n, d);
}

std::string to_string(const Int& n) { return n.str(); }

std::string to_string(const Rat& r) {
  if (den(r) == 1) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

Int sqrt_exact(const Int& n) {
  if (n < 0) throw std::domain_error("sqrt_exact of negative integer");
  Int root = boost::multiprecision::sqrt(n);
  if (root * root != n) throw std::domain_error("sqrt_exact: not a perfect square");
  return root;
}

Rat sqrt_exact(const Rat& r) {
  return Rat(sqrt_exact(num(r)), sqrt_exact(den(r)));
}

Place Place::prime(Int p) {
  if (!is_prime(p)) throw std::domain_error("Place::prime: " + p.str() + " is not prime");
  return Place(std::move(p), false);
}

const Int& Place::prime_value() const {
  if (infinite_) throw std::domain_error("archimedean place has no prime");
  return p_;
}

std::string Place::str() const { return infinite_ ? "∞" : p_.str(); }

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is a proven deterministic test below 2^64.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n >= two63()) throw std::domain_error("is_prime: input exceeds the 2^63 desk-scale bound");
  return is_prime_u64(n.convert_to<std::uint64_t>());
}

std::vector<std::pair<Int, int>> factorize(const Int& n) {
  if (n == 0) throw std::domain_error("factorize(0)");
  Int a = abs(n);
  if (a > two63()) throw std::domain_error("factorize: |n| exceeds the 2^63 trial-division bound");
  std::uint64_t m = a.convert_to<std::uint64_t>();
  std::vector<std::pair<Int, int>> out;
  auto take = [&](std::uint64_t p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) out.emplace_back(Int(p), e);
  };
  take(2);
  take(3);
  bool cofactor_changed = true;
  for (std::uint64_t d = 5; d <= m / d; d += 6) {
    // Stopping on a prime cofactor yields the factorization trial division
    // would reach anyway, just without walking up to sqrt(m).
    if (cofactor_changed && m > 1 && is_prime_u64(m)) break;
    cofactor_changed = false;
    const std::uint64_t before = m;
    take(d);
    take(d + 2);
    cofactor_changed = m != before;
  }
  if (m > 1) out.emplace_back(Int(m), 1);
  return out;
}

Int squarefree_part(const Int& n) {
  if (n == 0) throw std::domain_error("squarefree_part(0)");
  Int d(n < 0 ? -1 : 1);
  for (const auto& [p, e] : factorize(n))
    if (e & 1) d *= p;
  return d;
}

Int squarefree_part(const Rat& r) {
  if (r == 0) throw std::domain_error("squarefree_part(0)");
  // r is a square times num*den; factor the two halves separately so each
  // stays inside the trial-division bound.
  std::vector<std::pair<Int, int>> fs = factorize(num(r));
  for (auto& [p, e] : factorize(den(r))) fs.emplace_back(p, e);
  std::sort(fs.begin(), fs.end());
  Int d(sign_of(r));
  for (std::size_t i = 0; i < fs.size();) {
    std::size_t j = i;
    int e = 0;
    while (j < fs.size() && fs[j].first == fs[i].first) e += fs[j++].second;
    if (e & 1) d *= fs[i].first;
    i = j;
  }
  return d;
}

int valuation(const Rat& r, const Int& p) {
  if (r == 0) throw std::domain_error("valuation of 0");
  int v = 0;
  for (Int n = num(r); n % p == 0; n /= p) ++v;
  for (Int d = den(r); d % p == 0; d /= p) --v;
  return v;
}

int legendre(const Int& a, const Int& p) {
  Int r = a % p;
  if (r < 0) r += p;
  if (r == 0) return 0;
  Int e = boost::multiprecision::powm(r, (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

namespace {

// (u-1)/2 mod 2 for odd u.
int eps2(const Int& u) {
  Int m = u % 4;
  if (m < 0) m += 4;
  return m == 3 ? 1 : 0;
}

// (u^2-1)/8 mod 2 for odd u.
int omega2(const Int& u) {
  Int m = u % 8;
  if (m < 0) m += 8;
  return (m == 3 || m == 5) ? 1 : 0;
}

}  // namespace

int hilbert_symbol(const Rat& a, const Rat& b, const Place& v) {
  if (a == 0 || b == 0) throw std::domain_error("hilbert_symbol: arguments must be nonzero");
  // The symbol only depends on square classes.
  Int as = squarefree_part(a), bs = squarefree_part(b);
  if (v.is_infinite()) return (as < 0 && bs < 0) ? -1 : 1;
  const Int& p = v.prime_value();
  int alpha = 0, beta = 0;
  Int u = as, w = bs;
  while (u % p == 0) {
    u /= p;
    ++alpha;
  }
  while (w % p == 0) {
    w /= p;
    ++beta;
  }
  if (p == 2) {
    int e = eps2(u) * eps2(w) + alpha * omega2(w) + beta * omega2(u);
    return (e & 1) ? -1 : 1;
  }
  int s = 1;
  if (beta & 1) s *= legendre(u, p);
  if (alpha & 1) s *= legendre(w, p);
  if ((alpha & beta & 1) && ((p - 1) / 2) % 2 == 1) s = -s;
  return s;
}

namespace {

constexpr std::uint64_t kOracleCap = 1ull << 28;

// squares_mod(M)[t] <=> t = y^2 (mod M) for some y.  The oracle revisits the
// same handful of moduli for thousands of (a, b) pairs, so the tables are
// memoized; the mutex keeps concurrent callers safe.
const std::vector<bool>& squares_mod(std::uint64_t M) {
  static std::mutex mu;
  static std::map<std::uint64_t, std::vector<bool>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(M);
  if (it != cache.end()) return it->second;
  std::vector<bool> sq(M, false);
  // y and M - y square to the same residue, so y <= M/2 covers everything;
  // (y+1)^2 = y^2 + 2y + 1 keeps the running square without divisions.
  std::uint64_t s = 0;
  for (std::uint64_t y = 0; y <= M / 2; ++y) {
    sq[s] = true;
    s += 2 * y + 1;
    while (s >= M) s -= M;
  }
  return cache.emplace(M, std::move(sq)).first->second;
}

}  // namespace

int hilbert_oracle(const Int& a, const Int& b, const Place& v) {
  if (a == 0 || b == 0) throw std::domain_error("hilbert_oracle: arguments must be nonzero");
  if (abs(a) > 10000 || abs(b) > 10000)
    throw std::domain_error("hilbert_oracle: |a|, |b| must be at most 10^4");
  if (v.is_infinite()) {
    // Over R a nontrivial solution exists exactly when the right side can be
    // nonnegative, i.e. some coefficient is positive.
    return (a > 0 || b > 0) ? 1 : -1;
  }
  const Int& pz = v.prime_value();
  std::uint64_t p = pz.convert_to<std::uint64_t>();
  int k = valuation(Rat(a), pz) + valuation(Rat(b), pz) + (p == 2 ? 5 : 3);
  std::uint64_t M = 1;
  for (int i = 0; i < k; ++i) {
    if (M > kOracleCap / p)
      throw std::domain_error("hilbert_oracle: search modulus p^k exceeds 2^28");
    M *= p;
  }
  auto reduce = [&](const Int& x) {
    Int r = x % Int(M);
    if (r < 0) r += Int(M);
    return r.convert_to<std::uint64_t>();
  };
  const std::uint64_t am = reduce(a), bm = reduce(b);

  const std::vector<bool>& squares = squares_mod(M);
  // With M <= 2^28 every product of two residues stays below 2^56: no overflow.

  // A primitive solution mod p^k has a unit among x and y: if both were
  // divisible by p then a*x^2 + b*y^2 = 0 (mod p^2), forcing p | z as well
  // (k >= 3 here) and the triple would not be primitive.  Scaling by the
  // unit's inverse pins that coordinate to 1, so it is enough to sweep the
  // other square through every residue y^2 (y <= M/2 covers them all) and ask
  // the square table whether z^2 can close the equation.
  std::uint64_t s = 0;  // runs through t^2 mod M without divisions
  for (std::uint64_t t = 0; t <= M / 2; ++t) {
    if (squares[(am * s + bm) % M]) return 1;  // y = 1: z^2 = a t^2 + b
    if (squares[(bm * s + am) % M]) return 1;  // x = 1: z^2 = b t^2 + a
    s += 2 * t + 1;
    while (s >= M) s -= M;
  }
  return -1;
}

std::vector<Place> support_places(const Int& n) {
  if (n == 0) throw std::domain_error("support_places(0)");
  std::vector<Place> out;
  out.push_back(Place::prime(2));
  for (const auto& [p, e] : factorize(n))
    if (p != 2) out.push_back(Place::prime(p));
  out.push_back(Place::infinite());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hwit
