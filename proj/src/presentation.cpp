#include "honeycomb/presentation.hpp"

#include <algorithm>
#include <numbers>
#include <numeric>

#include "honeycomb/errors.hpp"

namespace honeycomb {
namespace {

Isometry make(std::array<int, 3> axes, std::array<int, 3> signs, Vertex t) {
  return {SignedPermutation(axes, signs), t};
}

Coord dot(const Vertex& a, const Vertex& b) {
  return a.x() * b.x() + a.y() * b.y() + a.z() * b.z();
}

// Acute angle between planes from cos^2 = num/den, exact for the angles a
// cubic reflection group can produce.
PiFraction angle_from_cos_squared(Coord num, Coord den) {
  const Coord g = std::gcd(num, den);
  num /= g;
  den /= g;
  if (num == 0) return {1, 2};
  if (num == 1 && den == 4) return {1, 3};
  if (num == 1 && den == 2) return {1, 4};
  if (num == 3 && den == 4) return {1, 6};
  if (num == 1 && den == 1) return {0, 1};
  throw VerificationError("mirror angle is not a rational multiple of pi");
}

}  // namespace

const GeneratorSet& GeneratorSet::standard() {
  static const GeneratorSet gens{{
      make({0, 1, 2}, {1, 1, -1}, {0, 0, 1}),  // P
      make({2, 1, 0}, {1, 1, 1}, {0, 0, 0}),   // Q
      make({1, 0, 2}, {1, 1, 1}, {0, 0, 0}),   // R
      make({0, 1, 2}, {1, -1, 1}, {0, 0, 0}),  // S
  }};
  return gens;
}

const GeneratorSet& GeneratorSet::perturbed() {
  static const GeneratorSet gens = [] {
    GeneratorSet g = standard();
    g.images[0] = make({1, 0, 2}, {-1, -1, 1}, {1, 1, 0});
    return g;
  }();
  return gens;
}

Isometry generator(Generator g, const GeneratorSet& gens) { return gens[g]; }

Isometry eval_word(const GeneratorWord& w, const GeneratorSet& gens) {
  Isometry out = Isometry::identity();
  for (Generator g : w.letters()) out = compose(out, gens[g]);
  return out;
}

std::vector<RelatorCheck> check_presentation(const GeneratorSet& gens) {
  static const std::array<const char*, 10> kRelators = {
      "P^2", "Q^2", "R^2", "S^2", "(PQ)^4",
      "(QR)^3", "(RS)^4", "(PR)^2", "(PS)^2", "(QS)^2"};
  std::vector<RelatorCheck> out;
  for (const char* name : kRelators) {
    std::string text = name;
    if (text.size() == 3) text = "(" + text.substr(0, 1) + ")" + text.substr(1);
    RelatorCheck check;
    check.name = name;
    check.word = GeneratorWord::parse(text);
    check.value = eval_word(check.word, gens);
    check.passed = check.value.is_identity();
    out.push_back(std::move(check));
  }
  return out;
}

double PiFraction::radians() const {
  return std::numbers::pi * numerator / denominator;
}

std::string PiFraction::str() const {
  if (numerator == 0) return "0";
  std::string out = numerator == 1 ? "pi" : std::to_string(numerator) + "pi";
  if (denominator != 1) out += "/" + std::to_string(denominator);
  return out;
}

Vertex mirror_normal(const Isometry& reflection) {
  const Matrix3 a = reflection.linear.matrix();
  if (reflection.linear.determinant() != -1) {
    throw PreconditionError("isometry is not a reflection");
  }
  int rank_columns = 0;
  Vertex normal;
  for (std::size_t j = 0; j < 3; ++j) {
    Vertex column;
    for (std::size_t i = 0; i < 3; ++i) {
      column[i] = (i == j ? 1 : 0) - a[i][j];
    }
    if (column == Vertex{}) continue;
    if (rank_columns == 0) normal = column;
    ++rank_columns;
    // Every nonzero column must be parallel to the first.
    const Vertex& n = normal;
    const bool parallel = n.y() * column.z() == n.z() * column.y() &&
                          n.z() * column.x() == n.x() * column.z() &&
                          n.x() * column.y() == n.y() * column.x();
    if (!parallel) throw PreconditionError("isometry is not a reflection");
  }
  if (rank_columns == 0) throw PreconditionError("isometry is not a reflection");
  return normal;
}

bool DihedralReport::passed() const {
  return multiset_matches &&
         std::all_of(angles.begin(), angles.end(),
                     [](const DihedralAngle& a) { return a.consistent; });
}

DihedralReport dihedral_angle_check(const GeneratorSet& gens) {
  using enum Generator;
  static constexpr std::array<std::array<Generator, 2>, 6> kPairs = {{
      {P, Q}, {Q, R}, {R, S}, {P, R}, {P, S}, {Q, S}}};
  DihedralReport report;
  std::vector<PiFraction> found;
  for (const auto& [a, b] : kPairs) {
    DihedralAngle d{a, b, mirror_normal(gens[a]), mirror_normal(gens[b]), {}, 0, false};
    const Coord num = dot(d.first_normal, d.second_normal);
    d.angle = angle_from_cos_squared(
        num * num, dot(d.first_normal, d.first_normal) *
                       dot(d.second_normal, d.second_normal));
    d.product_order = order(compose(gens[a], gens[b]));
    d.consistent = d.product_order > 0 &&
                   d.angle == PiFraction{1, d.product_order};
    found.push_back(d.angle);
    report.angles.push_back(d);
  }
  std::vector<PiFraction> expected = {{1, 4}, {1, 3}, {1, 4},
                                      {1, 2}, {1, 2}, {1, 2}};
  std::sort(found.begin(), found.end());
  std::sort(expected.begin(), expected.end());
  report.multiset_matches = found == expected;
  return report;
}

}  // namespace honeycomb
