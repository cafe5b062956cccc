#include "wlcc/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "wlcc/errors.hpp"

namespace wlcc {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long long smallest_prime_divisor(long long m) {
  if (m < 2)
    throw Error(ErrorKind::OutOfRange,
                "smallest_prime_divisor needs m >= 2, got " + std::to_string(m));
  for (long long d = 2; d * d <= m; ++d)
    if (m % d == 0) return d;
  return m;
}

namespace {

using Poly = std::vector<int>;  // coefficients, low degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m over F_p.
Poly poly_mod(Poly a, const Poly& m, int p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const int lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return r;
}

bool irreducible(const Poly& modulus, int p) {
  const int k = static_cast<int>(modulus.size()) - 1;
  for (int d = 1; 2 * d <= k; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
      Poly f(d + 1, 0);
      long long c = code;
      for (int i = 0; i < d; ++i) {
        f[i] = static_cast<int>(c % p);
        c /= p;
      }
      f[d] = 1;
      if (poly_mod(modulus, f, p).empty()) return false;
    }
  }
  return true;
}

Poly element_to_poly(int value, int p, int k) {
  Poly a(k, 0);
  for (int i = 0; i < k; ++i) {
    a[i] = value % p;
    value /= p;
  }
  return a;
}

int poly_to_element(const Poly& a, int p) {
  int value = 0;
  for (std::size_t i = a.size(); i-- > 0;) value = value * p + a[i];
  return value;
}

Poly default_modulus(int p, int k) {
  if (p == 2 && k == 2) return {1, 1, 1};     // x^2 + x + 1
  if (p == 2 && k == 3) return {1, 1, 0, 1};  // x^3 + x + 1
  if (p == 3 && k == 2) return {1, 0, 1};     // x^2 + 1
  return {};
}

}  // namespace

Field Field::make(int p, int k, std::optional<std::vector<int>> modulus) {
  if (p < 2 || k < 1)
    throw Error(ErrorKind::OutOfRange, "field needs p >= 2 and k >= 1");
  if (!is_prime(p))
    throw Error(ErrorKind::NonPrimeCharacteristic,
                std::to_string(p) + " is not prime");
  long long q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder)
      throw Error(ErrorKind::SizeCap, "field order exceeds " +
                                          std::to_string(kMaxOrder));
  }

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->k = k;
  t->q = static_cast<int>(q);
  if (k > 1) {
    Poly m = modulus ? *modulus : default_modulus(p, k);
    if (m.empty())
      throw Error(ErrorKind::MissingModulus,
                  "F_" + std::to_string(q) + " needs an explicit modulus");
    for (int& c : m) c = ((c % p) + p) % p;
    if (static_cast<int>(m.size()) != k + 1 || m.back() == 0)
      throw Error(ErrorKind::ReducibleModulus,
                  "modulus must have degree exactly " + std::to_string(k));
    // Normalize to monic.
    int lead_inv = 1;
    while ((lead_inv * m.back()) % p != 1) ++lead_inv;
    for (int& c : m) c = (c * lead_inv) % p;
    if (!irreducible(m, p))
      throw Error(ErrorKind::ReducibleModulus, "modulus is reducible over F_" +
                                                   std::to_string(p));
    t->modulus = m;
  }

  const int qi = t->q;
  t->add.resize(static_cast<std::size_t>(qi) * qi);
  t->mul.resize(static_cast<std::size_t>(qi) * qi);
  t->neg.resize(qi);
  t->inv.assign(qi, 0);
  std::vector<Poly> polys(qi);
  for (int a = 0; a < qi; ++a) polys[a] = element_to_poly(a, p, k);
  for (int a = 0; a < qi; ++a) {
    Poly n(k);
    for (int i = 0; i < k; ++i) n[i] = (p - polys[a][i]) % p;
    t->neg[a] = static_cast<std::uint16_t>(poly_to_element(n, p));
    for (int b = 0; b < qi; ++b) {
      Poly s(k);
      for (int i = 0; i < k; ++i) s[i] = (polys[a][i] + polys[b][i]) % p;
      t->add[a * qi + b] = static_cast<std::uint16_t>(poly_to_element(s, p));
      Poly prod = poly_mul(polys[a], polys[b], p);
      if (k > 1) {
        prod = poly_mod(prod, t->modulus, p);
      } else if (!prod.empty()) {
        prod.resize(1);
      }
      prod.resize(k, 0);
      t->mul[a * qi + b] = static_cast<std::uint16_t>(poly_to_element(prod, p));
    }
  }
  for (int a = 1; a < qi; ++a)
    for (int b = 1; b < qi; ++b)
      if (t->mul[a * qi + b] == 1) {
        t->inv[a] = static_cast<std::uint16_t>(b);
        break;
      }
  return Field(std::move(t));
}

Element Field::inv(Element a) const {
  if (a == 0 || a >= static_cast<Element>(order()))
    throw Error(ErrorKind::OutOfRange, "no inverse for element " + std::to_string(a));
  return tables_->inv[a];
}

Element Field::from_int(long long value) const {
  const long long p = characteristic();
  return static_cast<Element>(((value % p) + p) % p);
}

std::vector<int> Field::coefficients(Element a) const {
  return element_to_poly(static_cast<int>(a), characteristic(), degree());
}

Element Field::from_coefficients(std::span<const int> coefficients) const {
  if (static_cast<int>(coefficients.size()) > degree())
    throw Error(ErrorKind::OutOfRange, "too many coefficients for field element");
  Poly a(coefficients.begin(), coefficients.end());
  for (int& c : a) c = ((c % characteristic()) + characteristic()) % characteristic();
  return static_cast<Element>(poly_to_element(a, characteristic()));
}

int Field::multiplicative_order(Element a) const {
  if (a == 0) throw Error(ErrorKind::OutOfRange, "zero has no multiplicative order");
  int n = 1;
  for (Element x = a; x != 1; x = mul(x, a)) ++n;
  return n;
}

bool Field::operator==(const Field& other) const {
  return tables_ == other.tables_ ||
         (characteristic() == other.characteristic() &&
          degree() == other.degree() && modulus() == other.modulus());
}

FqMatrix::FqMatrix(Field field, int n, std::vector<Element> entries)
    : field_(std::move(field)), n_(n), entries_(std::move(entries)) {
  if (n_ < 1 || entries_.size() != static_cast<std::size_t>(n_) * n_)
    throw Error(ErrorKind::InvalidArgument, "matrix entries do not match dimension");
  for (Element e : entries_)
    if (e >= static_cast<Element>(field_.order()))
      throw Error(ErrorKind::OutOfRange, "matrix entry outside the field");
}

FqMatrix FqMatrix::identity(const Field& field, int n) {
  return scalar(field, n, field.one());
}

FqMatrix FqMatrix::scalar(const Field& field, int n, Element h) {
  std::vector<Element> e(static_cast<std::size_t>(n) * n, field.zero());
  for (int i = 0; i < n; ++i) e[i * n + i] = h;
  return FqMatrix(field, n, std::move(e));
}

FqMatrix FqMatrix::transvection(const Field& field, int n, int row, int col,
                                Element a) {
  if (row == col || row < 0 || col < 0 || row >= n || col >= n)
    throw Error(ErrorKind::InvalidArgument, "transvection needs distinct indices");
  FqMatrix m = identity(field, n);
  m.entries_[row * n + col] = a;
  return m;
}

Element FqMatrix::determinant() const {
  std::vector<Element> a = entries_;
  Element det = field_.one();
  for (int col = 0; col < n_; ++col) {
    int pivot = -1;
    for (int r = col; r < n_; ++r)
      if (a[r * n_ + col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return field_.zero();
    if (pivot != col) {
      for (int c = 0; c < n_; ++c) std::swap(a[pivot * n_ + c], a[col * n_ + c]);
      det = field_.neg(det);
    }
    const Element pv = a[col * n_ + col];
    det = field_.mul(det, pv);
    const Element pinv = field_.inv(pv);
    for (int r = col + 1; r < n_; ++r) {
      const Element f = field_.mul(a[r * n_ + col], pinv);
      if (f == 0) continue;
      for (int c = col; c < n_; ++c)
        a[r * n_ + c] = field_.sub(a[r * n_ + c], field_.mul(f, a[col * n_ + c]));
    }
  }
  return det;
}

FqMatrix FqMatrix::operator*(const FqMatrix& rhs) const {
  if (n_ != rhs.n_ || !(field_ == rhs.field_))
    throw Error(ErrorKind::InvalidArgument, "matrix product shape mismatch");
  std::vector<Element> out(entries_.size(), field_.zero());
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      Element s = field_.zero();
      for (int t = 0; t < n_; ++t)
        s = field_.add(s, field_.mul(at(i, t), rhs.at(t, j)));
      out[i * n_ + j] = s;
    }
  return FqMatrix(field_, n_, std::move(out));
}

void FqMatrix::apply(std::span<const Element> v, std::span<Element> out) const {
  for (int i = 0; i < n_; ++i) {
    Element s = field_.zero();
    for (int t = 0; t < n_; ++t) s = field_.add(s, field_.mul(at(i, t), v[t]));
    out[i] = s;
  }
}

bool linearly_independent(const Field& field, int n,
                          std::span<const Element> vectors, int count) {
  std::vector<Element> a(vectors.begin(), vectors.begin() + count * n);
  int rank = 0;
  for (int col = 0; col < n && rank < count; ++col) {
    int pivot = -1;
    for (int r = rank; r < count; ++r)
      if (a[r * n + col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    for (int c = 0; c < n; ++c) std::swap(a[pivot * n + c], a[rank * n + c]);
    const Element pinv = field.inv(a[rank * n + col]);
    for (int r = rank + 1; r < count; ++r) {
      const Element f = field.mul(a[r * n + col], pinv);
      if (f == 0) continue;
      for (int c = col; c < n; ++c)
        a[r * n + c] = field.sub(a[r * n + c], field.mul(f, a[rank * n + c]));
    }
    ++rank;
  }
  return rank == count;
}

std::optional<std::uint64_t> independent_tuple_count(int q, int n, int k) {
  unsigned __int128 qn = 1;
  for (int i = 0; i < n; ++i) {
    qn *= static_cast<unsigned>(q);
    if (qn > (static_cast<unsigned __int128>(1) << 62)) return std::nullopt;
  }
  unsigned __int128 qi = 1;
  unsigned __int128 total = 1;
  for (int i = 0; i < k; ++i) {
    total *= (qn - qi);
    if (total > (static_cast<unsigned __int128>(1) << 62)) return std::nullopt;
    qi *= static_cast<unsigned>(q);
  }
  return static_cast<std::uint64_t>(total);
}

TupleSet::TupleSet(Field field, int n, int k, std::vector<Element> coordinates)
    : field_(std::move(field)), n_(n), k_(k), coords_(std::move(coordinates)) {
  const std::size_t count = size();
  lookup_.reserve(count);
  for (std::size_t i = 0; i < count; ++i) lookup_.emplace(encode(point(i)), i);
}

std::uint64_t TupleSet::encode(std::span<const Element> coords) const {
  std::uint64_t code = 0;
  for (Element c : coords) code = code * field_.order() + c;
  return code;
}

std::optional<std::size_t> TupleSet::index_of(std::span<const Element> coords) const {
  if (coords.size() != static_cast<std::size_t>(n_ * k_)) return std::nullopt;
  auto it = lookup_.find(encode(coords));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

TupleSet TupleSet::restricted(std::span<const std::size_t> keep) const {
  std::vector<Element> coords;
  coords.reserve(keep.size() * n_ * k_);
  for (std::size_t i : keep) {
    auto p = point(i);
    coords.insert(coords.end(), p.begin(), p.end());
  }
  return TupleSet(field_, n_, k_, std::move(coords));
}

TupleSet tuples_enumerate(const Field& field, int n, int k, std::size_t cap) {
  if (n < 1 || k < 1 || k > n)
    throw Error(ErrorKind::OutOfRange, "tuples need 1 <= k <= n");
  const int q = field.order();
  auto expected = independent_tuple_count(q, n, k);
  if (!expected || *expected > cap)
    throw Error(ErrorKind::SizeCap, "tuple enumeration exceeds the vertex cap of " +
                                        std::to_string(cap));
  const int digits = n * k;
  std::vector<Element> current(digits, 0);
  std::vector<Element> coords;
  coords.reserve(*expected * digits);
  // Odometer over all q^(nk) coordinate sequences in lexicographic order.
  while (true) {
    if (linearly_independent(field, n, current, k))
      coords.insert(coords.end(), current.begin(), current.end());
    int pos = digits - 1;
    while (pos >= 0 && current[pos] + 1 == static_cast<Element>(q)) {
      current[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++current[pos];
  }
  return TupleSet(field, n, k, std::move(coords));
}

Permutation::Permutation(std::vector<std::uint32_t> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t x : images_) {
    if (x >= images_.size() || seen[x])
      throw Error(ErrorKind::InvalidArgument, "images do not form a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> id(degree);
  std::iota(id.begin(), id.end(), 0u);
  return Permutation(std::move(id));
}

Permutation Permutation::from_cycles(
    std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  for (const auto& cycle : cycles)
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (cycle[i] >= degree)
        throw Error(ErrorKind::OutOfRange, "cycle point outside degree");
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i]] = static_cast<std::uint32_t>(i);
  Permutation result;
  result.images_ = std::move(inv);
  return result;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree())
    throw Error(ErrorKind::DegreeMismatch, "composing permutations of different degree");
  Permutation result;
  result.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    result.images_[i] = images_[rhs.images_[i]];
  return result;
}

Permutation Permutation::pow(long long exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? -static_cast<unsigned long long>(exponent)
                                      : static_cast<unsigned long long>(exponent);
  Permutation result = identity(degree());
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::size_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::size_t result = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::vector<std::uint32_t> Permutation::fixed_points() const {
  std::vector<std::uint32_t> fixed;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] == i) fixed.push_back(static_cast<std::uint32_t>(i));
  return fixed;
}

Permutation perm_from_matrix(const FqMatrix& matrix, const TupleSet& points) {
  const int n = points.dimension();
  const int k = points.tuple_length();
  if (matrix.dimension() != n || !(matrix.field() == points.field()))
    throw Error(ErrorKind::DegreeMismatch, "matrix does not act on these tuples");
  std::vector<std::uint32_t> images(points.size());
  std::vector<Element> image(static_cast<std::size_t>(n) * k);
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto p = points.point(i);
    for (int j = 0; j < k; ++j)
      matrix.apply(p.subspan(j * n, n), std::span(image).subspan(j * n, n));
    auto idx = points.index_of(image);
    if (!idx)
      throw Error(ErrorKind::NotClosed,
                  "image of point " + std::to_string(i) + " is not in the point list");
    images[i] = static_cast<std::uint32_t>(*idx);
  }
  return Permutation(std::move(images));
}

const Generator* ActionSpec::find(std::string_view label) const {
  for (const auto& g : generators)
    if (g.label == label) return &g;
  return nullptr;
}

std::optional<std::size_t> ActionSpec::identity_index() const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i].perm.is_identity()) return i;
  return std::nullopt;
}

ActionSpec make_action(std::size_t points,
                       std::map<std::string, std::vector<std::uint32_t>> generators,
                       std::string origin) {
  ActionSpec spec;
  spec.points = points;
  spec.origin = std::move(origin);
  for (auto& [label, images] : generators)
    spec.generators.push_back({label, Permutation(std::move(images)), {}});
  return spec;
}

ActionSpec genset_validate(ActionSpec spec) {
  if (spec.points == 0)
    throw Error(ErrorKind::InvalidArgument, "action has no points");
  std::sort(spec.generators.begin(), spec.generators.end(),
            [](const Generator& a, const Generator& b) { return a.label < b.label; });
  for (std::size_t i = 0; i < spec.generators.size(); ++i) {
    const auto& g = spec.generators[i];
    if (g.perm.degree() != spec.points)
      throw Error(ErrorKind::DegreeMismatch,
                  "generator '" + g.label + "' has degree " +
                      std::to_string(g.perm.degree()) + ", expected " +
                      std::to_string(spec.points));
    if (i > 0 && spec.generators[i - 1].label == g.label)
      throw Error(ErrorKind::InvalidArgument, "duplicate generator label '" + g.label + "'");
  }
  if (!spec.identity_index())
    throw Error(ErrorKind::MissingIdentity, "no generator acts as the identity");

  for (auto& g : spec.generators) {
    const Permutation inv = g.perm.inverse();
    const Generator* match = nullptr;
    if (g.perm == inv) {
      match = &g;
    } else {
      for (const auto& h : spec.generators)
        if (h.perm == inv) {
          match = &h;
          break;
        }
    }
    if (!match)
      throw Error(ErrorKind::NotInverseClosed,
                  "generator '" + g.label + "' has no inverse in the set");
    g.inverse_label = match->label;
  }

  std::vector<bool> reached(spec.points, false);
  std::queue<std::uint32_t> frontier;
  reached[0] = true;
  frontier.push(0);
  while (!frontier.empty()) {
    const std::uint32_t v = frontier.front();
    frontier.pop();
    for (const auto& g : spec.generators) {
      const std::uint32_t w = g.perm(v);
      if (!reached[w]) {
        reached[w] = true;
        frontier.push(w);
      }
    }
  }
  for (std::size_t v = 0; v < spec.points; ++v)
    if (!reached[v])
      throw Error(ErrorKind::NotTransitive,
                  "point " + std::to_string(v) + " is unreachable from point 0");
  spec.validated = true;
  return spec;
}

std::vector<std::pair<std::string, FqMatrix>> transvection_generators(
    const Field& field, int n) {
  std::vector<std::pair<std::string, FqMatrix>> gens;
  gens.emplace_back("I", FqMatrix::identity(field, n));
  // E_ij(+-1) only generate SL over the prime field; over F_{p^k} the entries
  // run through the power basis 1, x, ..., x^{k-1} so their sums cover F_q.
  std::vector<std::pair<std::string, Element>> entries;
  for (int t = 0; t < field.degree(); ++t) {
    std::vector<int> coeffs(static_cast<std::size_t>(t) + 1, 0);
    coeffs[t] = 1;
    const Element a = field.from_coefficients(coeffs);
    const std::string name = t == 0 ? "1" : t == 1 ? "x" : "x^" + std::to_string(t);
    entries.emplace_back("+" + name, a);
    if (field.neg(a) != a) entries.emplace_back("-" + name, field.neg(a));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const std::string base = "E" + std::to_string(i + 1) + std::to_string(j + 1);
      for (const auto& [name, a] : entries)
        gens.emplace_back(base + "(" + name + ")", FqMatrix::transvection(field, n, i, j, a));
    }
  return gens;
}

}  // namespace wlcc
