#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace aop {

/// A bijection on {1..n} in one-line notation. images()[i-1] is the image of i.
/// The product is right-factor-first: (p * q)(i) = p(q(i)).
class Perm {
 public:
  Perm() = default;

  /// Throws InputError unless `images` is a permutation of 1..n.
  explicit Perm(std::vector<int> images);

  static Perm identity(int n);
  /// Skips validation; for results that are bijections by construction.
  static Perm trusted(std::vector<int> images) {
    Perm p;
    p.images_ = std::move(images);
    return p;
  }

  int arity() const { return static_cast<int>(images_.size()); }
  const std::vector<int>& images() const { return images_; }

  /// Image of the 1-indexed point i.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }

  bool is_identity() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<int> images_;
};

Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);
inline Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }

/// Block sum: the i-th permutation acts on the i-th consecutive block of positions.
Perm block_sum(std::span<const Perm> ps);

/// Block permutation: block i (width sizes[i]) moves, internally order-preserved,
/// to the slot p assigns to i.
Perm block_perm(const Perm& p, std::span<const int> sizes);

/// All n! permutations of arity n in lexicographic order of images.
std::vector<Perm> all_perms(int n);

/// Adjacent transposition (i, i+1) in arity n.
Perm adjacent_transposition(int i, int n);

/// Factors p into adjacent transpositions t_{i1} t_{i2} ... (right-first product);
/// returns the indices i. The empty list factors the identity.
std::vector<int> adjacent_factorization(const Perm& p);

std::string to_string(const Perm& p);

/// Parses one-line syntax "[2,1,3]"; "[]" is the arity-0 permutation.
Perm parse_perm(std::string_view text);

}  // namespace aop
