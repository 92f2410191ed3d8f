#pragma once

#include <array>
#include <string>
#include <vector>

#include "honeycomb/isometry.hpp"
#include "honeycomb/word.hpp"

namespace honeycomb {

/*!
 * Geometric realization of the four generating reflections on the cubic
 * cell [0,1]^3:
 *
 *   P: mirror z = 1/2   (x,y,z) -> (x, y, 1-z)
 *   Q: mirror z = x     (x,y,z) -> (z, y, x)
 *   R: mirror x = y     (x,y,z) -> (y, x, z)
 *   S: mirror y = 0     (x,y,z) -> (x, -y, z)
 *
 * The mirrors bound the tetrahedron with vertices (0,0,0), (0,0,1/2),
 * (1/2,0,1/2), (1/2,1/2,1/2), a fundamental domain of the honeycomb's
 * symmetry group.
 */
struct GeneratorSet {
  std::array<Isometry, 4> images;

  static const GeneratorSet& standard();
  // Fault injection: P replaced by the mirror x + y = 1. Breaks (PQ)^4 and
  // (PS)^2 while keeping P an involution.
  static const GeneratorSet& perturbed();

  const Isometry& operator[](Generator g) const {
    return images[static_cast<std::size_t>(g)];
  }
};

Isometry generator(Generator g, const GeneratorSet& gens = GeneratorSet::standard());

// The rightmost letter acts first: eval_word("PQ") = P o Q.
Isometry eval_word(const GeneratorWord& w,
                   const GeneratorSet& gens = GeneratorSet::standard());

// The honeycomb vertex whose stabilizer is generated by Q, R, PQRSRQP.
inline constexpr Vertex kBaseVertex{1, 1, 1};

struct RelatorCheck {
  std::string name;  // e.g. "(PQ)^4"
  GeneratorWord word;
  Isometry value;
  bool passed = false;
};

// The ten defining relators P^2 = Q^2 = R^2 = S^2 = (PQ)^4 = (QR)^3 = (RS)^4
// = (PR)^2 = (PS)^2 = (QS)^2 = 1, each evaluated exactly.
std::vector<RelatorCheck> check_presentation(
    const GeneratorSet& gens = GeneratorSet::standard());

// Angle k*pi/m between two mirror planes, stored exactly.
struct PiFraction {
  int numerator = 0;
  int denominator = 1;

  double radians() const;
  std::string str() const;  // "pi/4"
  friend bool operator==(const PiFraction&, const PiFraction&) = default;
  friend auto operator<=>(const PiFraction& a, const PiFraction& b) {
    return a.numerator * b.denominator <=> b.numerator * a.denominator;
  }
};

struct DihedralAngle {
  Generator first;
  Generator second;
  Vertex first_normal;
  Vertex second_normal;
  PiFraction angle;
  int product_order = 0;  // order of first*second as an isometry
  bool consistent = false;  // angle == pi / product_order
};

struct DihedralReport {
  std::vector<DihedralAngle> angles;  // pairs PQ, QR, RS, PR, PS, QS
  bool multiset_matches = false;      // {pi/4, pi/3, pi/4, pi/2, pi/2, pi/2}
  bool passed() const;
};

DihedralReport dihedral_angle_check(
    const GeneratorSet& gens = GeneratorSet::standard());

// Normal vector of a reflection's mirror: any nonzero column of (I - A).
// Throws PreconditionError if the linear part is not a reflection.
Vertex mirror_normal(const Isometry& reflection);

}  // namespace honeycomb
