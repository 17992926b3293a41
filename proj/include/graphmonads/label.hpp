#pragma once

#include <compare>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace graphmonads {

// Structured vertex label, closed under the constructions that the two
// endofunctors and binary products introduce:
//
//   Atom    plain token, e.g. "a"
//   Tagged  base~bit with bit in {0,1}; nesting of depth k encodes a
//           vertex of the k-th pendant-edge functor iterate
//   Set     {l} or {l1,l2}; nesting encodes vertices of the triangle
//           functor iterates (singletons and edges)
//   Pair    (l,r); vertices of product graphs
//
// Labels are immutable values with a total canonical order:
// Atom < Tagged < Set < Pair, then lexicographic recursion. Every
// set-valued output in the library is ordered by this relation, which is
// what makes serialization byte-stable.
class VertexLabel {
 public:
  enum class Kind { Atom, Tagged, Set, Pair };

  // Atom tokens are nonempty and may not contain whitespace or the
  // structural characters {}(),~#  (those would make rendered labels
  // ambiguous to reparse).
  static VertexLabel atom(std::string token);
  static VertexLabel tagged(const VertexLabel& base, int bit);
  // Set semantics: duplicates are collapsed; the result must have 1 or 2
  // elements. Elements are stored in canonical order.
  static VertexLabel set(std::vector<VertexLabel> elems);
  static VertexLabel pair(const VertexLabel& left, const VertexLabel& right);

  Kind kind() const;
  bool is_atom() const { return kind() == Kind::Atom; }
  bool is_tagged() const { return kind() == Kind::Tagged; }
  bool is_set() const { return kind() == Kind::Set; }
  bool is_pair() const { return kind() == Kind::Pair; }

  const std::string& token() const;              // Atom
  const VertexLabel& base() const;               // Tagged
  int bit() const;                               // Tagged
  const std::vector<VertexLabel>& elems() const; // Set
  const VertexLabel& left() const;               // Pair
  const VertexLabel& right() const;              // Pair

  // Canonical textual form: token, base~bit, {l1,l2}, (l,r).
  std::string str() const;
  // Inverse of str(); throws InvalidLabel on anything else.
  static VertexLabel parse(std::string_view text);

  friend std::strong_ordering operator<=>(const VertexLabel& a, const VertexLabel& b);
  friend bool operator==(const VertexLabel& a, const VertexLabel& b);

 private:
  struct Node;
  explicit VertexLabel(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

inline bool operator!=(const VertexLabel& a, const VertexLabel& b) { return !(a == b); }

}  // namespace graphmonads
