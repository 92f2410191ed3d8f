#include "honeycomb/quotient.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <ostream>
#include <sstream>
#include <utility>

#include "honeycomb/errors.hpp"
#include "honeycomb/presentation.hpp"

namespace honeycomb {
namespace {

struct IsometryLess {
  bool operator()(const Isometry& a, const Isometry& b) const {
    const int ra = a.linear.rank();
    const int rb = b.linear.rank();
    if (ra != rb) return ra < rb;
    return a.translation < b.translation;
  }
};

// Integer row reduction of a few translation vectors, tracking the
// unimodular transform so lattice members can be written as integer
// combinations of the original vectors.
class TranslationLattice {
 public:
  void add(const Vertex& v) {
    sources_.push_back(v);
    rebuild();
  }

  bool contains(const Vertex& target) const {
    return solve(target).has_value();
  }

  // Coefficients c with sum c_i * source_i == target.
  std::optional<std::vector<Coord>> solve(const Vertex& target) const {
    Vertex residual = target;
    std::vector<Coord> coeffs(sources_.size(), 0);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const int c = pivots_[r];
      if (c < 0) break;
      const Coord p = rows_[r][static_cast<std::size_t>(c)];
      if (residual[c] % p != 0) return std::nullopt;
      const Coord x = residual[c] / p;
      for (std::size_t k = 0; k < 3; ++k) residual[k] -= x * rows_[r][k];
      for (std::size_t k = 0; k < coeffs.size(); ++k) {
        coeffs[k] += x * transform_[r][k];
      }
    }
    if (residual != Vertex{}) return std::nullopt;
    return coeffs;
  }

 private:
  void rebuild() {
    const std::size_t n = sources_.size();
    rows_ = sources_;
    transform_.assign(n, std::vector<Coord>(n, 0));
    for (std::size_t i = 0; i < n; ++i) transform_[i][i] = 1;
    pivots_.assign(n, -1);

    std::size_t pivot_row = 0;
    for (int col = 0; col < 3 && pivot_row < n; ++col) {
      // Euclid on the column until a single nonzero entry remains.
      while (true) {
        std::size_t best = n;
        for (std::size_t r = pivot_row; r < n; ++r) {
          if (rows_[r][col] == 0) continue;
          if (best == n || std::abs(rows_[r][col]) < std::abs(rows_[best][col])) {
            best = r;
          }
        }
        if (best == n) break;
        swap_rows(best, pivot_row);
        bool reduced = true;
        for (std::size_t r = pivot_row + 1; r < n; ++r) {
          const Coord q = rows_[r][col] / rows_[pivot_row][col];
          if (q != 0) subtract_row(r, pivot_row, q);
          if (rows_[r][col] != 0) reduced = false;
        }
        if (reduced) {
          pivots_[pivot_row] = col;
          ++pivot_row;
          break;
        }
      }
    }
  }

  void swap_rows(std::size_t a, std::size_t b) {
    std::swap(rows_[a], rows_[b]);
    std::swap(transform_[a], transform_[b]);
  }

  void subtract_row(std::size_t target, std::size_t source, Coord q) {
    for (std::size_t k = 0; k < 3; ++k) rows_[target][k] -= q * rows_[source][k];
    for (std::size_t k = 0; k < transform_[target].size(); ++k) {
      transform_[target][k] -= q * transform_[source][k];
    }
  }

  std::vector<Vertex> sources_;
  std::vector<Vertex> rows_;
  std::vector<std::vector<Coord>> transform_;
  std::vector<int> pivots_;
};

}  // namespace

std::ostream& operator<<(std::ostream& os, const TorusVertex& v) {
  return os << '(' << v.x() << ", " << v.y() << ", " << v.z() << ')';
}

// --- TorusGroup -----------------------------------------------------------

TorusGroup::TorusGroup(int modulus)
    : modulus_(modulus),
      translations_(static_cast<std::size_t>(modulus) * modulus * modulus),
      order_(SignedPermutation::kCount * translations_),
      vertex_count_(translations_),
      words_{GeneratorWord({Generator::P}), GeneratorWord({Generator::Q}),
             GeneratorWord({Generator::R}), GeneratorWord({Generator::S})} {}

int TorusGroup::mod(Coord c) const {
  const Coord r = c % modulus_;
  return static_cast<int>(r < 0 ? r + modulus_ : r);
}

TorusElement TorusGroup::element(ElementId id) const {
  TorusElement e;
  e.linear = SignedPermutation::from_rank(static_cast<int>(id / translations_));
  std::size_t t = id % translations_;
  const auto n = static_cast<std::size_t>(modulus_);
  e.translation[2] = static_cast<int>(t % n);
  t /= n;
  e.translation[1] = static_cast<int>(t % n);
  e.translation[0] = static_cast<int>(t / n);
  return e;
}

ElementId TorusGroup::id(const TorusElement& e) const {
  const auto n = static_cast<std::size_t>(modulus_);
  const std::size_t t =
      (static_cast<std::size_t>(e.translation[0]) * n +
       static_cast<std::size_t>(e.translation[1])) * n +
      static_cast<std::size_t>(e.translation[2]);
  return static_cast<ElementId>(
      static_cast<std::size_t>(e.linear.rank()) * translations_ + t);
}

TorusElement TorusGroup::project(const Isometry& g) const {
  TorusElement e;
  e.linear = g.linear;
  for (std::size_t i = 0; i < 3; ++i) e.translation[i] = mod(g.translation[i]);
  return e;
}

Isometry TorusGroup::lift(ElementId id) const {
  const TorusElement e = element(id);
  return {e.linear, {e.translation[0], e.translation[1], e.translation[2]}};
}

ElementId TorusGroup::compose(ElementId a, ElementId b) const {
  return project_id(honeycomb::compose(lift(a), lift(b)));
}

ElementId TorusGroup::inverse(ElementId a) const {
  return project_id(invert(lift(a)));
}

TorusVertex TorusGroup::reduce(const Vertex& v) const {
  return {mod(v.x()), mod(v.y()), mod(v.z())};
}

std::size_t TorusGroup::vertex_index(const TorusVertex& v) const {
  const auto n = static_cast<std::size_t>(modulus_);
  return (static_cast<std::size_t>(v.x()) * n + static_cast<std::size_t>(v.y())) * n +
         static_cast<std::size_t>(v.z());
}

TorusVertex TorusGroup::vertex_at(std::size_t index) const {
  const auto n = static_cast<std::size_t>(modulus_);
  return {static_cast<int>(index / (n * n)), static_cast<int>((index / n) % n),
          static_cast<int>(index % n)};
}

TorusVertex TorusGroup::act(ElementId g, const TorusVertex& v) const {
  return reduce(apply(lift(g), v.lift()));
}

std::size_t TorusGroup::act(ElementId g, std::size_t vertex_index_in) const {
  return vertex_index(act(g, vertex_at(vertex_index_in)));
}

std::string TorusGroup::describe(ElementId id) const {
  std::ostringstream os;
  os << to_formula(lift(id)) << " mod " << modulus_;
  return os.str();
}

std::shared_ptr<const TorusGroup> build_group(int modulus) {
  if (modulus < 2 || modulus % 2 != 0) {
    throw PreconditionError("torus modulus must be an even integer >= 2, got " +
                            std::to_string(modulus));
  }
  std::shared_ptr<TorusGroup> group(new TorusGroup(modulus));
  // Closure of the projected generators; it must be everything.
  std::vector<ElementId> gens;
  for (const auto& w : group->words_) gens.push_back(group->project_id(eval_word(w)));
  std::vector<bool> seen(group->order_, false);
  std::vector<ElementId> frontier{TorusGroup::identity()};
  seen[TorusGroup::identity()] = true;
  std::size_t count = 1;
  while (!frontier.empty()) {
    std::vector<ElementId> next;
    for (ElementId a : frontier) {
      for (ElementId g : gens) {
        const ElementId c = group->compose(a, g);
        if (!seen[c]) {
          seen[c] = true;
          ++count;
          next.push_back(c);
        }
      }
    }
    frontier = std::move(next);
  }
  if (count != group->order_) {
    throw VerificationError("generator closure has " + std::to_string(count) +
                            " elements, expected " +
                            std::to_string(group->order_));
  }
  return group;
}

// --- TorusSubgroup --------------------------------------------------------

void TorusSubgroup::close_over(std::span<const ElementId> gens) {
  member_.assign(parent_->order(), false);
  elements_.clear();
  std::vector<ElementId> frontier{TorusGroup::identity()};
  member_[TorusGroup::identity()] = true;
  while (!frontier.empty()) {
    std::vector<ElementId> next;
    for (ElementId a : frontier) {
      for (ElementId g : gens) {
        const ElementId c = parent_->compose(a, g);
        if (!member_[c]) {
          member_[c] = true;
          next.push_back(c);
        }
      }
    }
    frontier = std::move(next);
  }
  for (std::size_t i = 0; i < member_.size(); ++i) {
    if (member_[i]) elements_.push_back(static_cast<ElementId>(i));
  }
}

TorusSubgroup TorusSubgroup::generated(std::shared_ptr<const TorusGroup> parent,
                                       std::vector<GeneratorWord> words) {
  TorusSubgroup s;
  s.parent_ = std::move(parent);
  s.words_ = std::move(words);
  for (const auto& w : s.words_) {
    s.generator_ids_.push_back(s.parent_->project_id(eval_word(w)));
  }
  s.close_over(s.generator_ids_);
  return s;
}

TorusSubgroup TorusSubgroup::from_elements(
    std::shared_ptr<const TorusGroup> parent,
    std::span<const ElementId> elements) {
  TorusSubgroup s;
  s.parent_ = std::move(parent);
  s.member_.assign(s.parent_->order(), false);
  s.member_[TorusGroup::identity()] = true;
  // Greedy generating set: keep an element only if the closure so far
  // misses it.
  for (ElementId e : elements) {
    if (s.member_[e]) continue;
    s.generator_ids_.push_back(e);
    s.close_over(s.generator_ids_);
  }
  if (s.elements_.empty()) s.close_over(s.generator_ids_);
  return s;
}

bool TorusSubgroup::contains(const TorusSubgroup& other) const {
  return std::all_of(other.elements_.begin(), other.elements_.end(),
                     [&](ElementId e) { return member_[e]; });
}

bool TorusSubgroup::same_elements(const TorusSubgroup& other) const {
  return elements_ == other.elements_;
}

TorusSubgroup TorusSubgroup::with_certificate(TranslationCertificate cert) const {
  TorusSubgroup s = *this;
  s.certificate_ = std::move(cert);
  return s;
}

std::string TorusSubgroup::description() const {
  if (!words_.empty()) return describe_generated(words_);
  return "<" + std::to_string(elements_.size()) + " elements mod " +
         std::to_string(parent_->modulus()) + ">";
}

TorusSubgroup build_subgroup(std::shared_ptr<const TorusGroup> group,
                             std::vector<GeneratorWord> words) {
  return TorusSubgroup::generated(std::move(group), std::move(words));
}

TorusSubgroup full_subgroup(std::shared_ptr<const TorusGroup> group) {
  std::vector<GeneratorWord> words(group->generator_words().begin(),
                                   group->generator_words().end());
  auto outcome = certify_translations(TorusSubgroup::generated(std::move(group), std::move(words)));
  return std::move(outcome.subgroup);
}

// --- certification ---------------------------------------------------------

CertificationOutcome certify_translations(const TorusSubgroup& subgroup,
                                          std::size_t radius) {
  CertificationOutcome out;
  out.subgroup = subgroup;
  const int n = subgroup.parent().modulus();
  const std::array<Vertex, 3> targets = {Vertex{n, 0, 0}, Vertex{0, n, 0},
                                         Vertex{0, 0, n}};

  // Step set: generator evaluations and their inverses. Letters are
  // involutions, so the inverse of a word is its reversal.
  std::vector<std::pair<Isometry, GeneratorWord>> steps;
  for (const auto& w : subgroup.generator_words()) {
    for (const GeneratorWord& v : {w, w.reversed()}) {
      const Isometry g = eval_word(v);
      const bool dup = std::any_of(steps.begin(), steps.end(),
                                   [&](const auto& s) { return s.first == g; });
      if (!dup && !g.is_identity()) steps.emplace_back(g, v);
    }
  }

  std::map<Isometry, GeneratorWord, IsometryLess> seen;
  seen.emplace(Isometry::identity(), GeneratorWord{});
  std::vector<std::pair<Isometry, GeneratorWord>> frontier{
      {Isometry::identity(), GeneratorWord{}}};
  TranslationLattice lattice;
  std::vector<GeneratorWord> lattice_words;

  for (std::size_t depth = 1; depth <= radius && !frontier.empty(); ++depth) {
    std::vector<std::pair<Isometry, GeneratorWord>> next;
    for (const auto& [g, w] : frontier) {
      for (const auto& [s, sw] : steps) {
        Isometry h = compose(g, s);
        if (seen.count(h)) continue;
        GeneratorWord hw = w * sw;
        seen.emplace(h, hw);
        if (h.is_pure_translation() && !lattice.contains(h.translation)) {
          lattice.add(h.translation);
          lattice_words.push_back(hw);
        }
        next.emplace_back(std::move(h), std::move(hw));
      }
    }
    frontier = std::move(next);
    out.depth_searched = depth;

    const bool all = std::all_of(targets.begin(), targets.end(), [&](const Vertex& t) {
      return lattice.contains(t);
    });
    if (!all) continue;

    TranslationCertificate cert;
    cert.modulus = n;
    cert.radius = depth;
    for (std::size_t axis = 0; axis < 3; ++axis) {
      const auto coeffs = *lattice.solve(targets[axis]);
      GeneratorWord witness;
      for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        const GeneratorWord& base =
            coeffs[k] > 0 ? lattice_words[k] : lattice_words[k].reversed();
        witness = witness * base.power(static_cast<std::size_t>(std::abs(coeffs[k])));
      }
      if (eval_word(witness) != Isometry::pure_translation(targets[axis])) {
        throw VerificationError("translation witness " + witness.str() +
                                " does not evaluate to the target translation");
      }
      cert.witnesses[axis] = std::move(witness);
    }
    out.found = true;
    out.elements_explored = seen.size();
    out.subgroup = subgroup.with_certificate(std::move(cert));
    return out;
  }
  out.exhausted = frontier.empty();
  out.elements_explored = seen.size();
  return out;
}

// --- index, cosets, membership --------------------------------------------

std::string IndexResult::label() const {
  return exact ? "exact" : "image index (lower bound)";
}

IndexResult index(const TorusGroup& group, const TorusSubgroup& subgroup) {
  return {group.order() / subgroup.order(), subgroup.certified()};
}

IndexResult index(const TorusSubgroup& outer, const TorusSubgroup& inner) {
  if (!outer.contains(inner)) {
    throw PreconditionError("subgroup " + inner.description() +
                            " is not contained in " + outer.description());
  }
  return {outer.order() / inner.order(), outer.certified() && inner.certified()};
}

CosetTable left_cosets(const TorusSubgroup& h, const TorusSubgroup& j) {
  if (!h.contains(j)) {
    throw PreconditionError("subgroup " + j.description() +
                            " is not contained in " + h.description());
  }
  const TorusGroup& g = h.parent();
  CosetTable table;
  table.coset_of.assign(g.order(), -1);
  for (ElementId e : h.elements()) {
    if (table.coset_of[e] >= 0) continue;
    const auto id = static_cast<std::int32_t>(table.representatives.size());
    table.representatives.push_back(e);
    for (ElementId k : j.elements()) table.coset_of[g.compose(e, k)] = id;
  }
  return table;
}

MembershipResult member(const TorusSubgroup& subgroup, const Isometry& g) {
  return {subgroup.contains(subgroup.parent().project_id(g)), subgroup.certified()};
}

}  // namespace honeycomb
