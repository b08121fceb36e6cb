#include <hwit/group_coh.hpp>

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace hwit {

namespace {

// Incremental row-echelon basis over F2; rows are bit vectors in uint64
// words, stored one per pivot position.
class F2Echelon {
 public:
  explicit F2Echelon(std::size_t width) : slot_(width) {}

  // Reduces v against the basis; absorbs it when independent. Returns true
  // when the rank grew.
  bool add(std::vector<std::uint64_t> v) {
    for (;;) {
      const std::size_t p = first_set(v);
      if (p == kNone) return false;
      if (slot_[p].empty()) {
        slot_[p] = std::move(v);
        ++rank_;
        return true;
      }
      xor_into(v, slot_[p]);
    }
  }

  std::size_t rank() const { return rank_; }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  static void xor_into(std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
  }
  static std::size_t first_set(const std::vector<std::uint64_t>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(v[i]));
    return kNone;
  }
  std::vector<std::vector<std::uint64_t>> slot_;
  std::size_t rank_ = 0;
};

std::vector<std::uint64_t> zero_row(std::size_t width) {
  return std::vector<std::uint64_t>((width + 63) / 64, 0);
}

void flip_bit(std::vector<std::uint64_t>& row, std::size_t i) { row[i / 64] ^= 1ull << (i % 64); }

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<unsigned>> table) : table_(std::move(table)) {
  const std::size_t n = table_.size();
  if (n == 0 || n > 64) throw std::domain_error("group order must be in 1..64");
  for (const auto& row : table_) {
    if (row.size() != n) throw std::domain_error("multiplication table is not square");
    for (unsigned e : row)
      if (e >= n) throw std::domain_error("multiplication table entry out of range");
  }
  for (unsigned a = 0; a < n; ++a)
    if (table_[0][a] != a || table_[a][0] != a)
      throw std::domain_error("index 0 is not a two-sided identity");
  // Latin-square check (cancellation), then associativity.
  for (unsigned a = 0; a < n; ++a) {
    std::uint64_t seen_row = 0, seen_col = 0;
    for (unsigned b = 0; b < n; ++b) {
      seen_row |= 1ull << table_[a][b];
      seen_col |= 1ull << table_[b][a];
    }
    const std::uint64_t full = (n == 64) ? ~0ull : (1ull << n) - 1;
    if (seen_row != full || seen_col != full)
      throw std::domain_error("multiplication table is not a latin square");
  }
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b)
      for (unsigned c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw std::domain_error("multiplication table is not associative");
  inv_.assign(n, 0);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b)
      if (table_[a][b] == kIdentity) inv_[a] = b;
  xor_indexed_ = (n & (n - 1)) == 0;
  if (xor_indexed_)
    for (unsigned a = 0; a < n && xor_indexed_; ++a)
      for (unsigned b = 0; b < n; ++b)
        if (table_[a][b] != (a ^ b)) {
          xor_indexed_ = false;
          break;
        }
}

Group FiniteGroup::from_table(std::vector<std::vector<unsigned>> table) {
  return Group(new FiniteGroup(std::move(table)));
}

Group FiniteGroup::trivial() { return from_table({{0}}); }

Group FiniteGroup::cyclic(unsigned n) {
  if (n == 0 || n > 64) throw std::domain_error("cyclic order must be in 1..64");
  std::vector<std::vector<unsigned>> t(n, std::vector<unsigned>(n));
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return from_table(std::move(t));
}

Group FiniteGroup::elementary_abelian(unsigned k) {
  if (k > 6) throw std::domain_error("elementary abelian rank capped at 6");
  const unsigned n = 1u << k;
  std::vector<std::vector<unsigned>> t(n, std::vector<unsigned>(n));
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) t[a][b] = a ^ b;
  return from_table(std::move(t));
}

Group FiniteGroup::dihedral(unsigned n) {
  if (n < 1 || 2 * n > 64) throw std::domain_error("dihedral order 2n must be in 2..64");
  const unsigned m = 2 * n;
  std::vector<std::vector<unsigned>> t(m, std::vector<unsigned>(m));
  for (unsigned e = 0; e < 2; ++e)
    for (unsigned i = 0; i < n; ++i)
      for (unsigned f = 0; f < 2; ++f)
        for (unsigned j = 0; j < n; ++j) {
          // r^i s^e * r^j s^f = r^(i + (-1)^e j) s^(e+f)
          unsigned rot = (i + (e ? n - j : j)) % n;
          t[e * n + i][f * n + j] = ((e ^ f) ? n : 0) + rot;
        }
  return from_table(std::move(t));
}

Group FiniteGroup::direct_product(const Group& a, const Group& b) {
  const std::size_t na = a->order(), nb = b->order();
  if (na * nb > 64) throw std::domain_error("direct product exceeds the order cap");
  std::vector<std::vector<unsigned>> t(na * nb, std::vector<unsigned>(na * nb));
  for (unsigned x = 0; x < na * nb; ++x)
    for (unsigned y = 0; y < na * nb; ++y)
      t[x][y] = a->mul(x / nb, y / nb) * static_cast<unsigned>(nb) + b->mul(x % nb, y % nb);
  return from_table(std::move(t));
}

unsigned FiniteGroup::log2_order() const {
  if (!xor_indexed_) throw std::domain_error("group is not xor-indexed (Z/2)^k");
  return static_cast<unsigned>(std::countr_zero(order()));
}

F2Cochain::F2Cochain(Group g, unsigned degree) : group_(std::move(g)), degree_(degree) {
  if (degree_ > 2) throw std::domain_error("cochain degree must be 0, 1 or 2");
  std::size_t size = 1;
  for (unsigned i = 0; i < degree_; ++i) size *= group_->order();
  v_.assign(size, 0);
}

F2Cochain F2Cochain::from_values(Group g, unsigned degree, std::vector<std::uint8_t> values) {
  F2Cochain f(std::move(g), degree);
  if (values.size() != f.v_.size()) throw std::invalid_argument("cochain value table size mismatch");
  for (std::uint8_t& x : values) x &= 1;
  f.v_ = std::move(values);
  f.check_normalized();
  return f;
}

F2Cochain F2Cochain::normalized_from_raw(Group g, unsigned degree,
                                         std::vector<std::uint8_t> values) {
  if (degree == 2) {
    const std::size_t n = g->order();
    if (values.size() != n * n) throw std::invalid_argument("cochain value table size mismatch");
    const std::uint8_t shift = values[0] & 1;  // z(1,1)
    for (std::uint8_t& x : values) x = (x & 1) ^ shift;
  }
  return from_values(std::move(g), degree, std::move(values));
}

void F2Cochain::check_normalized() const {
  const std::size_t n = group_->order();
  if (degree_ == 1 && v_[FiniteGroup::kIdentity] != 0)
    throw std::domain_error("cochain not normalized: f(1) != 0");
  if (degree_ == 2)
    for (std::size_t a = 0; a < n; ++a)
      if (v_[FiniteGroup::kIdentity * n + a] != 0 || v_[a * n + FiniteGroup::kIdentity] != 0)
        throw std::domain_error("cochain not normalized: f vanishes on identity arguments");
}

int F2Cochain::constant() const {
  if (degree_ != 0) throw std::domain_error("constant() requires degree 0");
  return v_[0];
}

int F2Cochain::operator()(unsigned g) const {
  if (degree_ != 1) throw std::domain_error("unary evaluation requires degree 1");
  return v_.at(g);
}

int F2Cochain::operator()(unsigned g, unsigned h) const {
  if (degree_ != 2) throw std::domain_error("binary evaluation requires degree 2");
  return v_.at(g * group_->order() + h);
}

void F2Cochain::set(unsigned g, int v) {
  if (degree_ != 1) throw std::domain_error("unary set requires degree 1");
  if (g == FiniteGroup::kIdentity && (v & 1))
    throw std::domain_error("normalized cochain cannot be nonzero at the identity");
  v_.at(g) = static_cast<std::uint8_t>(v & 1);
}

void F2Cochain::set(unsigned g, unsigned h, int v) {
  if (degree_ != 2) throw std::domain_error("binary set requires degree 2");
  if ((g == FiniteGroup::kIdentity || h == FiniteGroup::kIdentity) && (v & 1))
    throw std::domain_error("normalized cochain cannot be nonzero at the identity");
  v_.at(g * group_->order() + h) = static_cast<std::uint8_t>(v & 1);
}

bool F2Cochain::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](std::uint8_t x) { return x == 0; });
}

F2Cochain operator+(const F2Cochain& a, const F2Cochain& b) {
  if (!a.group_->same(*b.group_)) throw std::invalid_argument("cochain sum: different groups");
  if (a.degree_ != b.degree_) throw std::invalid_argument("cochain sum: different degrees");
  F2Cochain out = a;
  for (std::size_t i = 0; i < out.v_.size(); ++i) out.v_[i] ^= b.v_[i];
  return out;
}

bool operator==(const F2Cochain& a, const F2Cochain& b) {
  return a.degree_ == b.degree_ && a.v_ == b.v_;
}

F2Cochain coboundary(const F2Cochain& f) {
  const Group& g = f.group();
  const unsigned n = static_cast<unsigned>(g->order());
  if (f.degree() == 0) return F2Cochain(g, 1);  // trivial action: d0 = 0
  if (f.degree() != 1) throw std::domain_error("coboundary implemented for degrees 0 and 1");
  F2Cochain out(g, 2);
  for (unsigned a = 1; a < n; ++a)
    for (unsigned b = 1; b < n; ++b) out.set(a, b, f(a) ^ f(b) ^ f(g->mul(a, b)));
  return out;
}

bool is_cocycle(const F2Cochain& f) {
  const Group& g = f.group();
  const unsigned n = static_cast<unsigned>(g->order());
  if (f.degree() == 0) return true;
  if (f.degree() == 1) {
    for (unsigned a = 0; a < n; ++a)
      for (unsigned b = 0; b < n; ++b)
        if (f(g->mul(a, b)) != (f(a) ^ f(b))) return false;
    return true;
  }
  for (unsigned a = 1; a < n; ++a)
    for (unsigned b = 1; b < n; ++b)
      for (unsigned c = 1; c < n; ++c)
        if ((f(b, c) ^ f(g->mul(a, b), c) ^ f(a, g->mul(b, c)) ^ f(a, b)) != 0) return false;
  return true;
}

namespace {

// Index of the pair (a,b), both non-identity, in the normalized C^2 basis.
std::size_t pair_index(unsigned a, unsigned b, std::size_t n) {
  return (a - 1) * (n - 1) + (b - 1);
}

std::size_t d1_rank(const Group& g) {
  const unsigned n = static_cast<unsigned>(g->order());
  if (n == 1) return 0;
  F2Echelon ech((n - 1) * (n - 1));
  // Columns of d1 = images of the indicator cochains of non-identity elements.
  for (unsigned e = 1; e < n; ++e) {
    F2Cochain f(g, 1);
    f.set(e, 1);
    F2Cochain df = coboundary(f);
    auto row = zero_row((n - 1) * (n - 1));
    for (unsigned a = 1; a < n; ++a)
      for (unsigned b = 1; b < n; ++b)
        if (df(a, b)) flip_bit(row, pair_index(a, b, n));
    ech.add(std::move(row));
  }
  return ech.rank();
}

std::size_t d2_rank(const Group& g) {
  const unsigned n = static_cast<unsigned>(g->order());
  if (n == 1) return 0;
  // Rows = evaluations of the cocycle condition at non-identity triples;
  // rank of the equation system equals rank of d2.
  F2Echelon ech((n - 1) * (n - 1));
  for (unsigned a = 1; a < n; ++a)
    for (unsigned b = 1; b < n; ++b)
      for (unsigned c = 1; c < n; ++c) {
        auto row = zero_row((n - 1) * (n - 1));
        unsigned ab = g->mul(a, b), bc = g->mul(b, c);
        flip_bit(row, pair_index(b, c, n));
        if (ab != FiniteGroup::kIdentity) flip_bit(row, pair_index(ab, c, n));
        if (bc != FiniteGroup::kIdentity) flip_bit(row, pair_index(a, bc, n));
        flip_bit(row, pair_index(a, b, n));
        ech.add(std::move(row));
        if (ech.rank() == (n - 1) * (n - 1)) return ech.rank();
      }
  return ech.rank();
}

}  // namespace

std::size_t cohomology_dim(const Group& g, unsigned nn) {
  const std::size_t n = g->order();
  if (nn == 0) return 1;  // fixed points of the trivial action
  if (nn > 2) throw std::domain_error("cohomology computed for degrees 0..2");
  if (n == 1) return 0;
  if (nn == 1) return (n - 1) - d1_rank(g);  // ker d1; im d0 = 0
  const std::size_t z2 = (n - 1) * (n - 1) - d2_rank(g);
  return z2 - d1_rank(g);
}

F2Cochain cup_basis_cochain(const Group& g, unsigned i, unsigned j) {
  if (!g->xor_indexed()) throw std::domain_error("cup basis requires an xor-indexed (Z/2)^k");
  const unsigned k = g->log2_order();
  if (i >= k || j >= k) throw std::domain_error("cup basis index out of range");
  const unsigned n = static_cast<unsigned>(g->order());
  F2Cochain out(g, 2);
  for (unsigned a = 1; a < n; ++a)
    for (unsigned b = 1; b < n; ++b) out.set(a, b, ((a >> i) & 1) & ((b >> j) & 1));
  return out;
}

int CupDecomposition::lambda(unsigned i, unsigned j) const {
  if (i > j) std::swap(i, j);
  if (j >= k) throw std::domain_error("lambda index out of range");
  // Row-major upper triangle: offset of row i is i*k - i(i-1)/2.
  return lambda_upper.at(i * k - i * (i - 1) / 2 + (j - i));
}

CupDecomposition decompose_cocycle(const F2Cochain& z) {
  const Group& g = z.group();
  if (z.degree() != 2) throw std::domain_error("decomposition requires a degree-2 cochain");
  if (!g->xor_indexed())
    throw std::domain_error("decomposition requires an xor-indexed (Z/2)^k group");
  if (!is_cocycle(z)) throw std::domain_error("decomposition requires a 2-cocycle");

  const unsigned k = g->log2_order();
  const unsigned n = static_cast<unsigned>(g->order());
  const std::size_t rows = (n - 1) * (std::size_t)(n - 1);

  // Unknowns: lambda_ij (i <= j), then witness values c(e) for e != 1.
  std::vector<F2Cochain> basis;
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = i; j < k; ++j) basis.push_back(cup_basis_cochain(g, i, j));
  const std::size_t nl = basis.size();
  std::vector<F2Cochain> dind;
  for (unsigned e = 1; e < n; ++e) {
    F2Cochain f(g, 1);
    f.set(e, 1);
    dind.push_back(coboundary(f));
  }
  const std::size_t cols = nl + dind.size();

  // Dense F2 Gaussian elimination on the augmented system.
  std::vector<std::vector<std::uint8_t>> m(rows, std::vector<std::uint8_t>(cols + 1, 0));
  for (unsigned a = 1; a < n; ++a)
    for (unsigned b = 1; b < n; ++b) {
      const std::size_t r = pair_index(a, b, n);
      for (std::size_t c = 0; c < nl; ++c) m[r][c] = static_cast<std::uint8_t>(basis[c](a, b));
      for (std::size_t c = 0; c < dind.size(); ++c)
        m[r][nl + c] = static_cast<std::uint8_t>(dind[c](a, b));
      m[r][cols] = static_cast<std::uint8_t>(z(a, b));
    }

  std::vector<std::size_t> pivot_of_col(cols, static_cast<std::size_t>(-1));
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && !m[p][c]) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < rows; ++r)
      if (r != rank && m[r][c])
        for (std::size_t cc = c; cc <= cols; ++cc) m[r][cc] ^= m[rank][cc];
    pivot_of_col[c] = rank;
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r)
    if (m[r][cols]) throw std::logic_error("cup decomposition: inconsistent system");

  std::vector<std::uint8_t> solution(cols, 0);
  for (std::size_t c = 0; c < cols; ++c)
    if (pivot_of_col[c] != static_cast<std::size_t>(-1)) solution[c] = m[pivot_of_col[c]][cols];

  CupDecomposition out{k, std::vector<std::uint8_t>(solution.begin(), solution.begin() + nl),
                       F2Cochain(g, 1)};
  for (unsigned e = 1; e < n; ++e) out.witness.set(e, solution[nl + e - 1]);
  return out;
}

BrauerClass inflate_to_brauer(const CupDecomposition& dec, const std::vector<Int>& radicands) {
  if (radicands.size() < dec.k)
    throw std::invalid_argument("inflate_to_brauer: not enough radicands");
  BrauerClass out;
  for (unsigned i = 0; i < dec.k; ++i)
    for (unsigned j = i; j < dec.k; ++j)
      if (dec.lambda(i, j))
        out = out + cup(SquareClass(radicands[i]), SquareClass(radicands[j]));
  return out;
}

}  // namespace hwit
