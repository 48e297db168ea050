#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dgk/common.hpp"

namespace dgk {

/// Finite groupoid with fully explicit tables.  Identifiers are opaque
/// strings; indices are their positions in `objects` / `elements`.
/// Composition is read left to right: comp(x, y) is defined exactly when
/// tgt(x) == src(y) and is the element "x then y".
struct Groupoid {
  std::vector<std::string> objects;
  std::vector<std::string> elements;
  std::vector<int> src, tgt;               // element -> object
  std::vector<int> inv;                    // element -> element
  std::vector<int> unit;                   // object -> element
  std::vector<std::vector<int>> comp;      // comp[x][y] >= 0 iff defined

  int object_index(const std::string& id) const;
  int element_index(const std::string& id) const;
  bool composable(int x, int y) const { return tgt[x] == src[y]; }
  int compose(int x, int y) const { return comp[x][y]; }
  bool is_empty() const { return objects.empty() && elements.empty(); }
  int n_elements() const { return static_cast<int>(elements.size()); }
  int n_objects() const { return static_cast<int>(objects.size()); }

  friend bool operator==(const Groupoid&, const Groupoid&) = default;
};

/// Incremental construction by identifier; resolves and checks references
/// as they arrive.  Compositions not set stay undefined.
class GroupoidBuilder {
 public:
  void add_object(const std::string& id);
  void add_element(const std::string& id, const std::string& src_obj,
                   const std::string& tgt_obj);
  void set_inv(const std::string& x, const std::string& y);
  void set_unit(const std::string& obj, const std::string& elem);
  void set_comp(const std::string& x, const std::string& y, const std::string& xy);
  Groupoid build();  // throws PreconditionError on unresolved structure

 private:
  Groupoid g_;
  std::unordered_map<std::string, int> obj_ix_, elem_ix_;
  int obj(const std::string& id) const;
  int elem(const std::string& id) const;
};

struct GroupoidMorphism {
  Groupoid domain, codomain;
  std::vector<int> object_map;   // domain object -> codomain object
  std::vector<int> element_map;  // domain element -> codomain element

  friend bool operator==(const GroupoidMorphism&, const GroupoidMorphism&) = default;
};

/// Checks every groupoid axiom instance by enumeration.  Structural issues
/// (table sizes, composition domain) are reported separately from axiom
/// failures (associativity, units, inverses).
ValidationReport validate_groupoid(const Groupoid& g);

ValidationReport validate_groupoid_morphism(const GroupoidMorphism& m);
bool is_groupoid_morphism(const GroupoidMorphism& m);
GroupoidMorphism identity_groupoid_morphism(const Groupoid& g);

/// Elements are ordered pairs "(a,b)"; comp((a,b),(b,c)) = (a,c).
/// An empty object set gives the empty groupoid.
Groupoid pair_groupoid(const std::vector<std::string>& objects);

/// Objects and elements of the i-th summand are tagged "i:".
Groupoid disjoint_union(const std::vector<Groupoid>& gs);

/// A finite group presented by its multiplication table, as a one-object
/// groupoid.  mul[i][j] is "i then j".
Groupoid group_groupoid(const std::string& object,
                        const std::vector<std::string>& element_names,
                        const std::vector<std::vector<int>>& mul, int identity);

/// Cyclic group of order n with elements "1", "t", "t^2", ...
Groupoid cyclic_group_groupoid(int n);

struct QuotientResult {
  Groupoid quotient;
  GroupoidMorphism projection;
  std::vector<int> class_of;  // domain element -> quotient element
};

/// Quotient by the smallest congruence containing the given parallel pairs:
/// closed under inversion and under composition with arbitrary elements on
/// both sides.  Objects are unchanged.  Throws PreconditionError on a
/// non-parallel pair.
QuotientResult quotient_by_congruence(const Groupoid& g,
                                      const std::vector<std::pair<int, int>>& pairs);
QuotientResult quotient_by_congruence_ids(
    const Groupoid& g, const std::vector<std::pair<std::string, std::string>>& pairs);

}  // namespace dgk
