#pragma once

// Finite fields, matrices over them, permutations and permutation actions.
//
// Field elements are dense integer indices: the element with coefficient
// vector (a_0, ..., a_{k-1}) over F_p is stored as sum a_i p^i, so 0 and 1 are
// the additive and multiplicative identities and the prime subfield occupies
// indices 0..p-1.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace wlcc {

using Element = std::uint32_t;

bool is_prime(long long n);

// Least prime dividing m; throws OutOfRange for m < 2.
long long smallest_prime_divisor(long long m);

class Field {
 public:
  // Largest field order for which the arithmetic tables are materialized.
  static constexpr int kMaxOrder = 1024;

  // p must be prime. For k > 1 the modulus (coefficients low to high, monic,
  // length k + 1) is required unless q is 4, 8 or 9.
  static Field make(int p, int k = 1,
                    std::optional<std::vector<int>> modulus = std::nullopt);

  int characteristic() const { return tables_->p; }
  int degree() const { return tables_->k; }
  int order() const { return tables_->q; }
  // Empty for prime fields.
  const std::vector<int>& modulus() const { return tables_->modulus; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element add(Element a, Element b) const { return tables_->add[index(a, b)]; }
  Element mul(Element a, Element b) const { return tables_->mul[index(a, b)]; }
  Element neg(Element a) const { return tables_->neg[a]; }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  // Throws OutOfRange for zero.
  Element inv(Element a) const;

  // Image of an integer in the prime subfield.
  Element from_int(long long value) const;
  std::vector<int> coefficients(Element a) const;
  Element from_coefficients(std::span<const int> coefficients) const;

  // Multiplicative order of a nonzero element.
  int multiplicative_order(Element a) const;

  bool operator==(const Field& other) const;

 private:
  struct Tables {
    int p = 0;
    int k = 0;
    int q = 0;
    std::vector<int> modulus;
    std::vector<std::uint16_t> add;
    std::vector<std::uint16_t> mul;
    std::vector<std::uint16_t> neg;
    std::vector<std::uint16_t> inv;
  };

  explicit Field(std::shared_ptr<const Tables> tables)
      : tables_(std::move(tables)) {}
  std::size_t index(Element a, Element b) const {
    return static_cast<std::size_t>(a) * tables_->q + b;
  }

  std::shared_ptr<const Tables> tables_;
};

// Square matrix over a finite field, row-major.
class FqMatrix {
 public:
  FqMatrix(Field field, int n, std::vector<Element> entries);

  static FqMatrix identity(const Field& field, int n);
  static FqMatrix scalar(const Field& field, int n, Element h);
  // I + a * e_{row,col}, row != col (0-indexed).
  static FqMatrix transvection(const Field& field, int n, int row, int col,
                               Element a);

  const Field& field() const { return field_; }
  int dimension() const { return n_; }
  Element at(int row, int col) const { return entries_[row * n_ + col]; }
  const std::vector<Element>& entries() const { return entries_; }

  Element determinant() const;
  FqMatrix operator*(const FqMatrix& rhs) const;
  // Writes A v into out; both spans have length n.
  void apply(std::span<const Element> v, std::span<Element> out) const;

  bool operator==(const FqMatrix& other) const {
    return n_ == other.n_ && entries_ == other.entries_;
  }

 private:
  Field field_;
  int n_;
  std::vector<Element> entries_;
};

// Linearly independent k-tuples of vectors in F_q^n, in lexicographic order
// of their coordinate sequences (v_1[0], ..., v_1[n-1], v_2[0], ...).
class TupleSet {
 public:
  TupleSet(Field field, int n, int k, std::vector<Element> coordinates);

  const Field& field() const { return field_; }
  int dimension() const { return n_; }
  int tuple_length() const { return k_; }
  std::size_t size() const { return coords_.size() / (n_ * k_); }

  // The n*k coordinates of point i.
  std::span<const Element> point(std::size_t i) const {
    return {coords_.data() + i * n_ * k_, static_cast<std::size_t>(n_ * k_)};
  }
  std::optional<std::size_t> index_of(std::span<const Element> coords) const;

  // Keeps only the listed points (ascending indices), preserving order.
  TupleSet restricted(std::span<const std::size_t> keep) const;

 private:
  std::uint64_t encode(std::span<const Element> coords) const;

  Field field_;
  int n_;
  int k_;
  std::vector<Element> coords_;
  std::unordered_map<std::uint64_t, std::size_t> lookup_;
};

// Number of linearly independent k-tuples in F_q^n, or nullopt on overflow.
std::optional<std::uint64_t> independent_tuple_count(int q, int n, int k);

TupleSet tuples_enumerate(const Field& field, int n, int k,
                          std::size_t cap = 5000);

bool linearly_independent(const Field& field, int n,
                          std::span<const Element> vectors, int count);

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t degree);
  // Cycles given as lists of 0-indexed points.
  static Permutation from_cycles(
      std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  // (this * rhs)(x) = this(rhs(x)): rhs is applied first.
  Permutation operator*(const Permutation& rhs) const;
  Permutation pow(long long exponent) const;
  std::size_t order() const;
  std::vector<std::uint32_t> fixed_points() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<std::uint32_t> images_;
};

Permutation perm_from_matrix(const FqMatrix& matrix, const TupleSet& points);

struct Generator {
  std::string label;
  Permutation perm;
  // Filled in by genset_validate.
  std::string inverse_label;
};

// A finite point set with named generator permutations: the pair (V, S).
struct ActionSpec {
  std::size_t points = 0;
  std::vector<Generator> generators;
  std::string origin;
  // Free-form annotations carried into reports (inapplicability flags,
  // index translation notes, generator-set choices).
  std::vector<std::string> notes;
  // Optional alternative labels for points (e.g. 1-indexed names).
  std::vector<std::string> point_labels;
  bool validated = false;

  const Generator* find(std::string_view label) const;
  // Position of the first generator whose permutation is the identity.
  std::optional<std::size_t> identity_index() const;
};

ActionSpec make_action(std::size_t points,
                       std::map<std::string, std::vector<std::uint32_t>> generators,
                       std::string origin);

// Checks identity membership, inverse closure and transitivity; returns the
// spec with generators sorted by label and inverse labels filled in.
ActionSpec genset_validate(ActionSpec spec);

// Identity "I" plus all E_ij(+a) and E_ij(-a), i != j, for a in the power
// basis 1, x, ..., x^{k-1} of F_q; for prime q that is just E_ij(+-1). Signs
// are deduplicated in characteristic 2. Labels use 1-indexed positions.
std::vector<std::pair<std::string, FqMatrix>> transvection_generators(
    const Field& field, int n);

}  // namespace wlcc
