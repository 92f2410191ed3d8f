#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "honeycomb/coloring.hpp"
#include "honeycomb/quotient.hpp"

namespace honeycomb {

// Generator words of the subgroups used by the bundled models.
namespace subgroups {
// The full symmetry group.
inline const std::vector<std::string> kFull = {"P", "Q", "R", "S"};
// Index 2: preserves the parity of x+y+z.
inline const std::vector<std::string> kParity = {"Q", "R", "S", "PQP"};
// Generates the same group as kParity, since PQRQP = R.PQP.R.
inline const std::vector<std::string> kParityConjugate = {"Q", "R", "S", "PQRQP"};
// Index 4: body-centred, PQRPQP is the 2-fold rotation (1-x, 1-z, 1-y).
inline const std::vector<std::string> kBodyCentred = {"Q", "R", "S", "PQRPQP"};
// Index 8: the point group at the origin with translations 2Z^3;
// (SRQPQR)^2 is the translation by (0,-2,0).
inline const std::vector<std::string> kDoubledCell = {"Q", "R", "S", "(SRQPQR)^2"};
}  // namespace subgroups

// Parses, builds and certifies; throws VerificationError when no
// certificate is found within the radius.
TorusSubgroup certified_subgroup(std::shared_ptr<const TorusGroup> group,
                                 const std::vector<std::string>& words,
                                 std::size_t radius = kDefaultCertificateRadius);

struct ElementSite {
  std::string label;    // color label
  std::string element;  // chemical symbol

  friend bool operator==(const ElementSite&, const ElementSite&) = default;
};

/*!
 * A coloring read as a crystal: every non-background color carries one
 * chemical element, background colors are vacancies. The formula lists the
 * sites in `sites` order with counts reduced by their gcd.
 */
struct CrystalModel {
  std::string family;
  TorusSubgroup group;  // the H the coloring was built from
  VertexColoring coloring;
  std::vector<ElementSite> sites;
  std::string formula;
  std::vector<std::size_t> subscripts;

  std::string element_of(ColorId c) const;  // empty for vacancies
};

// Throws PreconditionError unless `sites` covers exactly the non-background
// colors of the coloring.
CrystalModel make_model(std::string family, TorusSubgroup group,
                        const VertexColoring& coloring, std::vector<ElementSite> sites);

std::vector<std::string> preset_names();

// rock-salt | NbO | ReO3 | perovskite. Throws PreconditionError on unknown
// names.
CrystalModel preset(std::string_view name, int modulus = 2);
ColoringRecipe preset_recipe(std::string_view name, std::shared_ptr<const TorusGroup> group);

// Same geometry, new element symbols; the formula follows the new order.
CrystalModel substitute(const CrystalModel& model, std::vector<ElementSite> sites);

}  // namespace honeycomb
