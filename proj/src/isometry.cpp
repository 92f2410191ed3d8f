#include "honeycomb/isometry.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <sstream>
#include <vector>

#include "honeycomb/errors.hpp"

namespace honeycomb {
namespace {

#ifndef NDEBUG
Coord checked_add(Coord a, Coord b) {
  Coord out{};
  if (__builtin_add_overflow(a, b, &out)) {
    throw VerificationError("integer overflow in isometry arithmetic");
  }
  return out;
}
#else
constexpr Coord checked_add(Coord a, Coord b) { return a + b; }
#endif

// Ordering key: rows compared by (axis, sign) with + before -.
std::array<int, 6> order_key(const SignedPermutation& p) {
  std::array<int, 6> key{};
  for (std::size_t i = 0; i < 3; ++i) {
    key[2 * i] = p.axis(i);
    key[2 * i + 1] = p.sign(i) > 0 ? 0 : 1;
  }
  return key;
}

// Dense code in [0, 48): permutation index * 8 + sign bits.
int dense_code(const SignedPermutation& p) {
  const int perm = p.axis(0) * 2 + (p.axis(1) > p.axis(2) ? 1 : 0);
  int bits = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (p.sign(i) < 0) bits |= 1 << i;
  }
  return perm * 8 + bits;
}

struct RankTables {
  std::array<SignedPermutation, 48> by_rank;
  std::array<int, 48> rank_of_code{};
};

const RankTables& rank_tables() {
  static const RankTables tables = [] {
    std::vector<SignedPermutation> all;
    std::array<int, 3> axes{0, 1, 2};
    do {
      for (int bits = 0; bits < 8; ++bits) {
        all.emplace_back(axes, std::array<int, 3>{bits & 1 ? -1 : 1,
                                                  bits & 2 ? -1 : 1,
                                                  bits & 4 ? -1 : 1});
      }
    } while (std::next_permutation(axes.begin(), axes.end()));
    std::sort(all.begin(), all.end(),
              [](const auto& a, const auto& b) {
                return order_key(a) < order_key(b);
              });
    RankTables t;
    for (std::size_t r = 0; r < all.size(); ++r) {
      t.by_rank[r] = all[r];
      t.rank_of_code[dense_code(all[r])] = static_cast<int>(r);
    }
    return t;
  }();
  return tables;
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const Vertex& v) {
  return os << '(' << v.x() << ", " << v.y() << ", " << v.z() << ')';
}

SignedPermutation::SignedPermutation(std::array<int, 3> axes,
                                     std::array<int, 3> signs) {
  std::array<bool, 3> seen{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (axes[i] < 0 || axes[i] > 2 || seen[axes[i]]) {
      throw PreconditionError("signed permutation axes must permute {0,1,2}");
    }
    if (signs[i] != 1 && signs[i] != -1) {
      throw PreconditionError("signed permutation signs must be +1 or -1");
    }
    seen[axes[i]] = true;
    axes_[i] = static_cast<std::int8_t>(axes[i]);
    signs_[i] = static_cast<std::int8_t>(signs[i]);
  }
}

SignedPermutation SignedPermutation::from_matrix(const Matrix3& m) {
  std::array<int, 3> axes{-1, -1, -1};
  std::array<int, 3> signs{0, 0, 0};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (m[i][j] == 0) continue;
      if (axes[i] != -1 || (m[i][j] != 1 && m[i][j] != -1)) {
        throw PreconditionError("matrix is not a signed permutation");
      }
      axes[i] = static_cast<int>(j);
      signs[i] = m[i][j];
    }
  }
  return SignedPermutation(axes, signs);
}

Matrix3 SignedPermutation::matrix() const {
  Matrix3 m{};
  for (std::size_t i = 0; i < 3; ++i) m[i][axes_[i]] = signs_[i];
  return m;
}

int SignedPermutation::determinant() const {
  // Parity of the permutation times the product of signs.
  int inversions = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (axes_[i] > axes_[j]) ++inversions;
    }
  }
  return (inversions % 2 ? -1 : 1) * signs_[0] * signs_[1] * signs_[2];
}

bool SignedPermutation::is_identity() const {
  return *this == SignedPermutation{};
}

SignedPermutation SignedPermutation::inverse() const {
  std::array<int, 3> axes{};
  std::array<int, 3> signs{};
  for (std::size_t i = 0; i < 3; ++i) {
    axes[axes_[i]] = static_cast<int>(i);
    signs[axes_[i]] = signs_[i];
  }
  return {axes, signs};
}

Vertex SignedPermutation::apply(const Vertex& v) const {
  Vertex out;
  for (std::size_t i = 0; i < 3; ++i) out[i] = signs_[i] * v[axes_[i]];
  return out;
}

int SignedPermutation::rank() const {
  return rank_tables().rank_of_code[dense_code(*this)];
}

SignedPermutation SignedPermutation::from_rank(int rank) {
  assert(rank >= 0 && rank < kCount);
  return rank_tables().by_rank[rank];
}

SignedPermutation compose(const SignedPermutation& a,
                          const SignedPermutation& b) {
  std::array<int, 3> axes{};
  std::array<int, 3> signs{};
  for (std::size_t i = 0; i < 3; ++i) {
    axes[i] = b.axis(a.axis(i));
    signs[i] = a.sign(i) * b.sign(a.axis(i));
  }
  return {axes, signs};
}

Isometry compose(const Isometry& a, const Isometry& b) {
  Isometry out;
  out.linear = compose(a.linear, b.linear);
  const Vertex moved = a.linear.apply(b.translation);
  for (std::size_t i = 0; i < 3; ++i) {
    out.translation[i] = checked_add(moved[i], a.translation[i]);
  }
  return out;
}

Isometry invert(const Isometry& a) {
  Isometry out;
  out.linear = a.linear.inverse();
  const Vertex back = out.linear.apply(a.translation);
  for (std::size_t i = 0; i < 3; ++i) out.translation[i] = -back[i];
  return out;
}

Vertex apply(const Isometry& a, const Vertex& v) {
  const Vertex moved = a.linear.apply(v);
  Vertex out;
  for (std::size_t i = 0; i < 3; ++i) {
    out[i] = checked_add(moved[i], a.translation[i]);
  }
  return out;
}

int order(const Isometry& a, int limit) {
  Isometry power = a;
  for (int k = 1; k <= limit; ++k) {
    if (power.is_identity()) return k;
    power = compose(power, a);
  }
  return 0;
}

std::string to_formula(const Isometry& g) {
  static constexpr char kNames[] = {'x', 'y', 'z'};
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < 3; ++i) {
    if (i) os << ", ";
    const Coord t = g.translation[i];
    const char var = kNames[g.linear.axis(i)];
    if (t != 0) {
      os << t << (g.linear.sign(i) > 0 ? "+" : "-") << var;
    } else {
      os << (g.linear.sign(i) > 0 ? "" : "-") << var;
    }
  }
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Isometry& g) {
  return os << to_formula(g);
}

}  // namespace honeycomb
