#include "opgb/orderings.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace opgb {

const std::vector<std::pair<std::string, OrderingSpec>>& named_orderings() {
  using enum KeyPriority;
  using enum WordOrder;
  using enum PermOrder;
  static const std::vector<std::pair<std::string, OrderingSpec>> table = {
      {"PathPerm", {WordsFirst, DegLex, Lex}},
      {"RPathPerm", {WordsFirst, RevDegLex, Lex}},
      {"PathRPerm", {WordsFirst, DegLex, RevLex}},
      {"RPathRPerm", {WordsFirst, RevDegLex, RevLex}},
      {"PermPath", {PermFirst, DegLex, Lex}},
      {"RPermPath", {PermFirst, DegLex, RevLex}},
      {"PermRPath", {PermFirst, RevDegLex, Lex}},
      {"RPermRPath", {PermFirst, RevDegLex, RevLex}},
  };
  return table;
}

OrderingSpec ordering_from_name(const std::string& name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  for (const auto& [known, spec] : named_orderings()) {
    std::string known_lower(known);
    std::transform(known_lower.begin(), known_lower.end(), known_lower.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (lower == known_lower) return spec;
  }
  throw std::invalid_argument("unknown ordering '" + name + "'");
}

const std::string& ordering_name(const OrderingSpec& spec) {
  for (const auto& [name, known] : named_orderings())
    if (known == spec) return name;
  throw std::invalid_argument("ordering_name: not one of the eight named orderings");
}

namespace {

void fill_key(const TreeMonomial& t, std::vector<int>& word, PathKey& key) {
  if (t.is_leaf()) {
    int label = t.leaf_label();
    if (static_cast<size_t>(label) > key.words.size())
      key.words.resize(label);
    key.words[label - 1] = word;
    key.perm.push_back(label);
    return;
  }
  word.push_back(t.generator());
  for (const auto& c : t.children()) fill_key(c, word, key);
  word.pop_back();
}

// -1/0/+1 per the word order: degree first, ties broken lexicographically by
// generator ordinal. RevDegLex flips only the degree comparison.
int compare_words(WordOrder order, const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) {
    bool a_smaller = a.size() < b.size();
    if (order == WordOrder::RevDegLex) a_smaller = !a_smaller;
    return a_smaller ? -1 : 1;
  }
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

int compare_word_sequences(WordOrder order, const std::vector<std::vector<int>>& a,
                           const std::vector<std::vector<int>>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (int c = compare_words(order, a[i], b[i])) return c;
  return 0;
}

int compare_perms(PermOrder order, const std::vector<int>& a, const std::vector<int>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) {
      int c = a[i] < b[i] ? -1 : 1;
      return order == PermOrder::Lex ? c : -c;
    }
  return 0;
}

}  // namespace

PathKey path_key(const TreeMonomial& t) {
  PathKey key;
  key.words.resize(0);
  key.perm.reserve(8);
  std::vector<int> word;
  fill_key(t, word, key);
  return key;
}

int compare_keys(const OrderingSpec& spec, int arity_s, const PathKey& ks, int arity_t,
                 const PathKey& kt) {
  if (arity_s != arity_t) return arity_s < arity_t ? -1 : 1;
  if (spec.priority == KeyPriority::WordsFirst) {
    if (int c = compare_word_sequences(spec.word_order, ks.words, kt.words)) return c;
    return compare_perms(spec.perm_order, ks.perm, kt.perm);
  }
  if (int c = compare_perms(spec.perm_order, ks.perm, kt.perm)) return c;
  return compare_word_sequences(spec.word_order, ks.words, kt.words);
}

int compare(const OrderingSpec& spec, const TreeMonomial& s, const TreeMonomial& t) {
  int arity_s = s.arity(), arity_t = t.arity();
  if (arity_s != arity_t) return arity_s < arity_t ? -1 : 1;
  return compare_keys(spec, arity_s, path_key(s), arity_t, path_key(t));
}

}  // namespace opgb
