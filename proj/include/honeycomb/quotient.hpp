#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "honeycomb/isometry.hpp"
#include "honeycomb/word.hpp"

namespace honeycomb {

// Canonical position of an element in its TorusGroup. Id 0 is the identity.
using ElementId = std::uint32_t;

/// Honeycomb vertex reduced modulo N; coordinates in [0, N).
struct TorusVertex {
  std::array<int, 3> coords{};

  constexpr TorusVertex() = default;
  constexpr TorusVertex(int x, int y, int z) : coords{x, y, z} {}

  constexpr int x() const { return coords[0]; }
  constexpr int y() const { return coords[1]; }
  constexpr int z() const { return coords[2]; }
  constexpr int operator[](std::size_t i) const { return coords[i]; }

  Vertex lift() const { return {x(), y(), z()}; }

  friend constexpr auto operator<=>(const TorusVertex&,
                                    const TorusVertex&) = default;
};

std::ostream& operator<<(std::ostream& os, const TorusVertex& v);

/// Image of an isometry in the quotient by the translations N*Z^3.
struct TorusElement {
  SignedPermutation linear;
  std::array<int, 3> translation{};  // each entry in [0, N)

  friend bool operator==(const TorusElement&, const TorusElement&) = default;
};

/*!
 * The symmetry group of the honeycomb modulo the translations N*Z^3, acting
 * on the N^3 vertices of the torus (Z/N)^3.
 *
 * Built as the closure of the projected reflections P, Q, R, S; the result
 * always has 48 * N^3 elements. Element ids follow the canonical order:
 * linear part by SignedPermutation::rank(), then translation
 * lexicographically, so the id is rank * N^3 + (t0 * N + t1) * N + t2.
 */
class TorusGroup {
 public:
  int modulus() const { return modulus_; }
  std::size_t order() const { return order_; }
  std::size_t vertex_count() const { return vertex_count_; }
  std::span<const GeneratorWord> generator_words() const { return words_; }

  static constexpr ElementId identity() { return 0; }

  TorusElement element(ElementId id) const;
  ElementId id(const TorusElement& e) const;

  TorusElement project(const Isometry& g) const;
  ElementId project_id(const Isometry& g) const { return id(project(g)); }

  // Exact isometry with the same linear part and translation in [0, N)^3.
  Isometry lift(ElementId id) const;

  ElementId compose(ElementId a, ElementId b) const;
  ElementId inverse(ElementId a) const;

  TorusVertex reduce(const Vertex& v) const;
  std::size_t vertex_index(const TorusVertex& v) const;
  TorusVertex vertex_at(std::size_t index) const;
  TorusVertex act(ElementId g, const TorusVertex& v) const;
  std::size_t act(ElementId g, std::size_t vertex_index) const;

  std::string describe(ElementId id) const;

 private:
  friend std::shared_ptr<const TorusGroup> build_group(int modulus);
  explicit TorusGroup(int modulus);

  int mod(Coord c) const;

  int modulus_;
  std::size_t translations_;  // N^3
  std::size_t order_;
  std::size_t vertex_count_;
  std::vector<GeneratorWord> words_;
};

// Throws PreconditionError unless modulus is even and >= 2. Throws
// VerificationError if the closure does not reach 48 * N^3 elements.
std::shared_ptr<const TorusGroup> build_group(int modulus);

/// Witness words that evaluate, as exact isometries, to the translations
/// (N,0,0), (0,N,0), (0,0,N). Their presence makes the quotient faithful for
/// the subgroup: the kernel N*Z^3 lies inside it.
struct TranslationCertificate {
  int modulus = 0;
  std::array<GeneratorWord, 3> witnesses;
  std::size_t radius = 0;  // BFS depth at which the certificate closed
};

class TorusSubgroup {
 public:
  // Empty placeholder with no parent group.
  TorusSubgroup() = default;

  // Closure of the projected generator words.
  static TorusSubgroup generated(std::shared_ptr<const TorusGroup> parent,
                                 std::vector<GeneratorWord> words);
  // Closure of the given elements; generator_words() is empty.
  static TorusSubgroup from_elements(std::shared_ptr<const TorusGroup> parent,
                                     std::span<const ElementId> elements);

  const TorusGroup& parent() const { return *parent_; }
  const std::shared_ptr<const TorusGroup>& parent_ptr() const { return parent_; }

  std::span<const ElementId> elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(ElementId id) const { return member_[id]; }
  bool contains(const TorusSubgroup& other) const;
  bool same_elements(const TorusSubgroup& other) const;

  std::span<const GeneratorWord> generator_words() const { return words_; }
  // Generators used for orbit expansion: projected words, or a greedy
  // generating set for subgroups built from elements.
  std::span<const ElementId> generator_ids() const { return generator_ids_; }

  const std::optional<TranslationCertificate>& certificate() const {
    return certificate_;
  }
  bool certified() const { return certificate_.has_value(); }
  TorusSubgroup with_certificate(TranslationCertificate cert) const;

  std::string description() const;

 private:
  void close_over(std::span<const ElementId> gens);

  std::shared_ptr<const TorusGroup> parent_;
  std::vector<bool> member_;
  std::vector<ElementId> elements_;  // sorted canonical ids
  std::vector<GeneratorWord> words_;
  std::vector<ElementId> generator_ids_;
  std::optional<TranslationCertificate> certificate_;
};

TorusSubgroup build_subgroup(std::shared_ptr<const TorusGroup> group,
                             std::vector<GeneratorWord> words);
// The whole torus group, generated by P, Q, R, S and certified.
TorusSubgroup full_subgroup(std::shared_ptr<const TorusGroup> group);

struct CertificationOutcome {
  bool found = false;
  // The subgroup closed before reaching the radius: it is finite and no
  // certificate exists at any radius.
  bool exhausted = false;
  std::size_t depth_searched = 0;
  std::size_t elements_explored = 0;
  TorusSubgroup subgroup;  // carries the certificate when found
};

inline constexpr std::size_t kDefaultCertificateRadius = 12;

/*!
 * Breadth-first search over products of the subgroup's generator
 * evaluations (exact isometries, not reduced mod N), up to `radius`
 * factors. Pure translations found along the way generate a lattice; the
 * search succeeds once (N,0,0), (0,N,0), (0,0,N) all lie in it, and the
 * witness words are assembled from the translation words that built the
 * lattice. Every witness is re-evaluated before being stored.
 */
CertificationOutcome certify_translations(
    const TorusSubgroup& subgroup,
    std::size_t radius = kDefaultCertificateRadius);

struct IndexResult {
  std::size_t value = 0;
  // False when either side lacks a certificate: the value is then only the
  // index of the images, a lower bound for the true index.
  bool exact = false;
  std::string label() const;
};

IndexResult index(const TorusGroup& group, const TorusSubgroup& subgroup);
// Throws PreconditionError unless inner is contained in outer.
IndexResult index(const TorusSubgroup& outer, const TorusSubgroup& inner);

/// Partition of H into left cosets hJ. Each coset is named by its smallest
/// element in canonical order and ids follow that order, so J itself
/// (which holds the identity) is always coset 0.
struct CosetTable {
  std::vector<ElementId> representatives;
  std::vector<std::int32_t> coset_of;  // by element id; -1 outside H

  std::size_t count() const { return representatives.size(); }
  std::int32_t coset(ElementId id) const { return coset_of[id]; }
};

// Throws PreconditionError unless J is contained in H.
CosetTable left_cosets(const TorusSubgroup& h, const TorusSubgroup& j);

struct MembershipResult {
  bool value = false;
  bool exact = false;  // subgroup certified
};

MembershipResult member(const TorusSubgroup& subgroup, const Isometry& g);

}  // namespace honeycomb
