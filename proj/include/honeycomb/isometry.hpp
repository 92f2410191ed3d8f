#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace honeycomb {

using Coord = std::int64_t;

/// A vertex of the cubic honeycomb. The vertices are exactly the integer
/// points of 3-space, so every triple is valid.
struct Vertex {
  std::array<Coord, 3> coords{};

  constexpr Vertex() = default;
  constexpr Vertex(Coord x, Coord y, Coord z) : coords{x, y, z} {}

  constexpr Coord x() const { return coords[0]; }
  constexpr Coord y() const { return coords[1]; }
  constexpr Coord z() const { return coords[2]; }
  constexpr Coord operator[](std::size_t i) const { return coords[i]; }
  constexpr Coord& operator[](std::size_t i) { return coords[i]; }

  friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
};

std::ostream& operator<<(std::ostream& os, const Vertex& v);

using Matrix3 = std::array<std::array<int, 3>, 3>;

/*!
 * Orthogonal integer matrix with exactly one nonzero entry (+1 or -1) per
 * row and column. Row i reads input axis `axis(i)` and multiplies it by
 * `sign(i)`:
 *
 *   out[i] = sign(i) * in[axis(i)]
 *
 * The 48 signed permutations form the full octahedral group O_h.
 */
class SignedPermutation {
 public:
  constexpr SignedPermutation() = default;

  // Throws PreconditionError unless `axes` is a permutation of {0,1,2} and
  // every sign is +1 or -1.
  SignedPermutation(std::array<int, 3> axes, std::array<int, 3> signs);

  static SignedPermutation from_matrix(const Matrix3& m);

  int axis(std::size_t row) const { return axes_[row]; }
  int sign(std::size_t row) const { return signs_[row]; }

  Matrix3 matrix() const;
  int determinant() const;
  bool is_identity() const;

  SignedPermutation inverse() const;
  Vertex apply(const Vertex& v) const;

  // Position in the canonical order of the 48 signed permutations: rows
  // compared in turn by (column of the nonzero entry, + before -). The
  // identity has rank 0.
  int rank() const;
  static SignedPermutation from_rank(int rank);
  static constexpr int kCount = 48;

  friend bool operator==(const SignedPermutation&,
                         const SignedPermutation&) = default;

 private:
  std::array<std::int8_t, 3> axes_{0, 1, 2};
  std::array<std::int8_t, 3> signs_{1, 1, 1};
};

// (a * b) applied to v equals a applied to (b applied to v).
SignedPermutation compose(const SignedPermutation& a,
                          const SignedPermutation& b);

/// Exact affine symmetry x -> linear * x + translation.
struct Isometry {
  SignedPermutation linear;
  Vertex translation;

  static Isometry identity() { return {}; }
  static Isometry pure_translation(const Vertex& t) { return {{}, t}; }

  bool is_identity() const {
    return linear.is_identity() && translation == Vertex{};
  }
  bool is_pure_translation() const { return linear.is_identity(); }

  friend bool operator==(const Isometry&, const Isometry&) = default;
};

std::ostream& operator<<(std::ostream& os, const Isometry& g);

// Coordinate-formula rendering, e.g. "(x, y, 1-z)".
std::string to_formula(const Isometry& g);

/// Result applied to v equals a(b(v)).
Isometry compose(const Isometry& a, const Isometry& b);
Isometry invert(const Isometry& a);
Vertex apply(const Isometry& a, const Vertex& v);

// Smallest k >= 1 with a^k = identity, or 0 when no such k <= limit.
int order(const Isometry& a, int limit = 64);

}  // namespace honeycomb
