#pragma once

#include <string>
#include <utility>
#include <vector>

#include "opgb/trees.hpp"

namespace opgb {

enum class KeyPriority { WordsFirst, PermFirst };
enum class WordOrder { DegLex, RevDegLex };  // RevDegLex: the longer word is smaller
enum class PermOrder { Lex, RevLex };        // RevLex: first difference, larger image first

// One of the eight admissible monomial orders. The name lists the components
// in comparison priority; a leading R reverses that component's direction:
// e.g. RPathPerm compares path words first (reverse-degree-lex), then the
// planar permutation (lex). Arity always compares before either component.
struct OrderingSpec {
  KeyPriority priority = KeyPriority::WordsFirst;
  WordOrder word_order = WordOrder::DegLex;
  PermOrder perm_order = PermOrder::Lex;

  bool operator==(const OrderingSpec&) const = default;
};

// The eight named orderings, in display order.
const std::vector<std::pair<std::string, OrderingSpec>>& named_orderings();

// Case-insensitive lookup ("PathPerm", "rpathperm", ...); throws on unknown names.
OrderingSpec ordering_from_name(const std::string& name);
const std::string& ordering_name(const OrderingSpec& spec);

// Comparison key of a monomial: for each leaf label i, the word of generator
// ordinals along the root-to-leaf path, plus the leaf labels in planar order.
// Two valid monomials with equal keys are equal.
struct PathKey {
  std::vector<std::vector<int>> words;  // indexed by leaf label - 1
  std::vector<int> perm;

  bool operator==(const PathKey&) const = default;
};

PathKey path_key(const TreeMonomial& t);

// -1/0/+1; arity compares first (fewer leaves is smaller), then the two key
// components in the spec's priority. compare_keys assumes the cached keys
// belong to monomials of the stated arities.
int compare(const OrderingSpec& spec, const TreeMonomial& s, const TreeMonomial& t);
int compare_keys(const OrderingSpec& spec, int arity_s, const PathKey& ks, int arity_t,
                 const PathKey& kt);

}  // namespace opgb
