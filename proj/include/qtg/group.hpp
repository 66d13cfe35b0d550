#pragma once

/**
 * @file group.hpp
 * @brief Generic finite permutation-group engine: closure from generators,
 *        Cayley tables, orbits, stabilizers, transitivity and cyclic/dihedral
 *        classification.
 *
 * Carrier points are dense indices 0..n-1; callers keep their own labeling
 * (pitch classes, triads, ...), so the same engine serves every carrier.
 */

#include <compare>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qtg/error.hpp"

namespace qtg {

/// Thrown when generators act on carriers of different sizes.
struct CarrierMismatch : Error {
  using Error::Error;
};

/// Thrown when an element or carrier-point index is out of range.
struct NotAnElement : Error {
  using Error::Error;
};

/// A bijection on {0, ..., n-1}, stored as the image table.
class Permutation {
 public:
  /// Validates that mapping is a bijection.
  explicit Permutation(std::vector<int> mapping);

  static Permutation identity(int size);

  int size() const { return static_cast<int>(mapping_.size()); }
  int operator()(int i) const { return mapping_[static_cast<size_t>(i)]; }
  const std::vector<int>& mapping() const { return mapping_; }

  /// (a.after(b))(x) = a(b(x)): apply b first, then a.
  Permutation after(const Permutation& b) const;

  Permutation inverse() const;
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> mapping_;
};

/// A finite permutation group: the closure of its generators, with the Cayley
/// table precomputed. Immutable once built; queries are safe to share across
/// threads.
class FiniteGroup {
 public:
  /// Breadth-first product closure of the generators (sorted and deduplicated
  /// first, so the element order is reproducible). Element 0 is the identity.
  static FiniteGroup close(std::vector<Permutation> generators);

  int order() const { return static_cast<int>(elements_.size()); }
  int carrier_size() const { return carrier_size_; }

  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(int i) const;
  int identity_index() const { return 0; }

  /// Index of p among the elements, or -1.
  int index_of(const Permutation& p) const;

  /// Cayley product: index of element(a) ∘ element(b).
  int compose(int a, int b) const;
  int inverse_of(int a) const;
  const std::vector<std::vector<int>>& cayley_table() const { return cayley_; }

  /// Smallest k >= 1 with element(a)^k = identity.
  int element_order(int a) const;

  /// Same, for an element given by value; throws NotAnElement when p is not
  /// in the group.
  int element_order(const Permutation& p) const;

  /// Partition of the carrier into orbits, each sorted, ordered by least point.
  std::vector<std::vector<int>> orbits() const;

  /// Indices of all elements fixing the given carrier point.
  std::vector<int> stabilizer(int point) const;

  bool is_transitive() const;

  /// True iff every ordered pair of carrier points has exactly one element
  /// mapping the first to the second.
  bool is_simply_transitive() const;

  /// Element labels, orders, classification and orbit partition. Labels are
  /// optional and positional.
  nlohmann::json to_json(std::span<const std::string> element_labels = {}) const;

 private:
  FiniteGroup() = default;

  int carrier_size_ = 0;
  std::vector<Permutation> elements_;
  std::vector<std::vector<int>> cayley_;
};

/// Verdict of the cyclic/dihedral search. The convention for Dihedral(n) is
/// 2n elements: a rotation r of order n and a reflection s of order 2 with
/// s∘r∘s = r^{-1} and <r, s> the whole group.
struct GroupClassification {
  enum class Kind { Cyclic, Dihedral, Other };

  Kind kind = Kind::Other;
  int degree = 0;       // the n of Cyclic(n) / Dihedral(n)
  int rotation = -1;    // witness element index (generator of order degree)
  int reflection = -1;  // witness reflection for the dihedral case

  std::string to_string() const;
  nlohmann::json to_json() const;
};

/// Exhaustive search over element pairs; cyclic is preferred when both apply
/// (e.g. a 2-element group reports Cyclic(2), not Dihedral(1)).
GroupClassification classify(const FiniteGroup& g);

}  // namespace qtg
