#include "opgb/buchberger.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <utility>

#include "opgb/division.hpp"

namespace opgb {

namespace {

struct ReductionStep {
  int basis_index;
  Embedding embedding;
};

std::optional<ReductionStep> first_reduction(const TreeMonomial& head,
                                             const std::vector<OperadPolynomial>& basis) {
  for (size_t g = 0; g < basis.size(); ++g) {
    if (basis[g].is_zero()) continue;
    auto embeddings = all_embeddings(head, basis[g].leading_monomial());
    if (!embeddings.empty())
      return ReductionStep{static_cast<int>(g), std::move(embeddings.front())};
  }
  return std::nullopt;
}

OperadPolynomial pop_leading_term(const OperadPolynomial& work) {
  const Term& lead = work.leading_term();
  return subtract(work,
                  scale(monomial_polynomial(work.spec(), lead.monomial), lead.coefficient));
}

OperadPolynomial apply_reduction(const OperadPolynomial& work, const OperadPolynomial& g,
                                 const Embedding& e) {
  Rational factor = work.leading_coefficient() / g.leading_coefficient();
  return subtract(work, scale(substitute(e, g), factor));
}

}  // namespace

OperadPolynomial normal_form(const OperadPolynomial& f,
                             const std::vector<OperadPolynomial>& basis) {
  if (f.is_zero()) return f;
  std::vector<std::pair<TreeMonomial, Rational>> kept;
  OperadPolynomial work = f;
  while (!work.is_zero()) {
    auto step = first_reduction(work.leading_monomial(), basis);
    if (!step) {
      kept.emplace_back(work.leading_monomial(), work.leading_coefficient());
      work = pop_leading_term(work);
    } else {
      work = apply_reduction(work, basis[step->basis_index], step->embedding);
    }
  }
  return OperadPolynomial::from_terms(f.spec(), std::move(kept));
}

OperadPolynomial normal_form(const OperadPolynomial& f, const std::vector<OperadPolynomial>& basis,
                             const ReducerChoice& choice) {
  if (f.is_zero()) return f;
  std::vector<std::pair<TreeMonomial, Rational>> kept;
  OperadPolynomial work = f;
  while (!work.is_zero()) {
    const TreeMonomial& head = work.leading_monomial();
    std::vector<std::pair<int, std::vector<Embedding>>> options;
    for (size_t g = 0; g < basis.size(); ++g) {
      if (basis[g].is_zero()) continue;
      auto embeddings = all_embeddings(head, basis[g].leading_monomial());
      if (!embeddings.empty()) options.emplace_back(static_cast<int>(g), std::move(embeddings));
    }
    if (options.empty()) {
      kept.emplace_back(head, work.leading_coefficient());
      work = pop_leading_term(work);
      continue;
    }
    auto [which, emb_index] = choice(head, options);
    if (which < 0 || static_cast<size_t>(which) >= options.size() || emb_index < 0 ||
        static_cast<size_t>(emb_index) >= options[which].second.size())
      throw std::invalid_argument("normal_form: reducer choice out of range");
    work = apply_reduction(work, basis[options[which].first], options[which].second[emb_index]);
  }
  return OperadPolynomial::from_terms(f.spec(), std::move(kept));
}

std::vector<OperadPolynomial> s_polynomials(const OperadPolynomial& f,
                                            const OperadPolynomial& g) {
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("s_polynomials: zero operand has no leading term");
  Rational factor = f.leading_coefficient() / g.leading_coefficient();
  std::vector<OperadPolynomial> out;
  for (const auto& record : small_common_multiples(f.leading_monomial(), g.leading_monomial()))
    out.push_back(
        subtract(substitute(record.emb_a, f), scale(substitute(record.emb_b, g), factor)));
  return out;
}

namespace {

struct BasisEntry {
  OperadPolynomial poly;
  bool active = true;
};

struct PairItem {
  int arity;         // arity of the common multiple
  int round_formed;  // 0 for pairs of the input relations
  int i, j;          // basis indices, i <= j
  int scm_index;     // position within the pair's record list
  SmallCommonMultiple record;
};

std::tuple<int, int, int, int, int> item_key(const PairItem& it) {
  return {it.arity, it.round_formed, it.i, it.j, it.scm_index};
}

}  // namespace

GroebnerResult buchberger(const Presentation& p, const BuchbergerOptions& options) {
  GroebnerResult result;
  result.truncation_arity = options.max_arity;

  std::vector<BasisEntry> entries;
  std::vector<PairItem> pending;
  bool truncation_skipped = false;
  int current_round = 0;

  auto collect_active = [&](int except = -1) {
    std::vector<OperadPolynomial> polys;
    for (size_t i = 0; i < entries.size(); ++i)
      if (entries[i].active && static_cast<int>(i) != except) polys.push_back(entries[i].poly);
    return polys;
  };

  auto queue_pairs_for = [&](int j) {
    for (int i = 0; i <= j; ++i) {
      if (!entries[i].active) continue;
      auto records = small_common_multiples(entries[i].poly.leading_monomial(),
                                            entries[j].poly.leading_monomial());
      for (size_t r = 0; r < records.size(); ++r) {
        int arity = records[r].multiple.arity();
        if (options.max_arity && arity > *options.max_arity) {
          truncation_skipped = true;
          continue;
        }
        pending.push_back(
            PairItem{arity, current_round, i, j, static_cast<int>(r), std::move(records[r])});
      }
    }
  };

  auto adjoin = [&](OperadPolynomial h) {
    entries.push_back(BasisEntry{monic(std::move(h)), true});
    queue_pairs_for(static_cast<int>(entries.size()) - 1);
  };

  for (const auto& relation : p.relations) {
    if (relation.is_zero()) continue;
    if (!(relation.spec() == p.spec))
      throw std::invalid_argument("buchberger: relation ordering differs from the presentation");
    OperadPolynomial candidate = monic(relation);
    bool duplicate = false;
    for (const auto& e : entries)
      if (e.poly == candidate) {
        duplicate = true;
        break;
      }
    if (!duplicate) adjoin(std::move(candidate));
  }

  while (!pending.empty()) {
    if (options.max_rounds && current_round >= *options.max_rounds) {
      result.rounds_exhausted = true;
      break;
    }
    ++current_round;

    // This round's bucket: all queued items minimal in (multiple arity, round
    // formed), processed in a fixed order.
    std::pair<int, int> best{std::numeric_limits<int>::max(), std::numeric_limits<int>::max()};
    for (const auto& it : pending) best = std::min(best, {it.arity, it.round_formed});
    std::vector<PairItem> bucket;
    std::vector<PairItem> rest;
    for (auto& it : pending) {
      if (std::pair<int, int>{it.arity, it.round_formed} == best)
        bucket.push_back(std::move(it));
      else
        rest.push_back(std::move(it));
    }
    pending = std::move(rest);
    std::sort(bucket.begin(), bucket.end(),
              [](const PairItem& a, const PairItem& b) { return item_key(a) < item_key(b); });

    // Reductions run against the basis as it stood when the round began, so
    // they are independent of each other and may run on several threads.
    std::vector<OperadPolynomial> snapshot = collect_active();
    std::vector<OperadPolynomial> remainders(bucket.size(), OperadPolynomial(p.spec));
    std::vector<char> formed(bucket.size(), 0);
    auto compute = [&](size_t k) {
      const PairItem& it = bucket[k];
      // A deactivated element reduces to zero through the current basis, so
      // its pending pairs carry no new information.
      if (!entries[it.i].active || !entries[it.j].active) return;
      const OperadPolynomial& f = entries[it.i].poly;
      const OperadPolynomial& g = entries[it.j].poly;
      Rational factor = f.leading_coefficient() / g.leading_coefficient();
      OperadPolynomial s =
          subtract(substitute(it.record.emb_a, f), scale(substitute(it.record.emb_b, g), factor));
      formed[k] = 1;
      remainders[k] = normal_form(s, snapshot);
    };
    int thread_count = std::max(1, options.threads);
    if (thread_count > 1 && bucket.size() > 1) {
      std::vector<std::thread> pool;
      pool.reserve(static_cast<size_t>(thread_count));
      for (int t = 0; t < thread_count; ++t)
        pool.emplace_back([&, t] {
          for (size_t k = static_cast<size_t>(t); k < bucket.size();
               k += static_cast<size_t>(thread_count))
            compute(k);
        });
      for (auto& th : pool) th.join();
    } else {
      for (size_t k = 0; k < bucket.size(); ++k) compute(k);
    }

    std::vector<OperadPolynomial> candidates;
    for (size_t k = 0; k < bucket.size(); ++k) {
      if (!formed[k]) continue;
      ++result.stats.s_polynomials_formed;
      if (remainders[k].is_zero())
        ++result.stats.reductions_to_zero;
      else
        candidates.push_back(monic(std::move(remainders[k])));
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const OperadPolynomial& a, const OperadPolynomial& b) {
                return polynomial_compare(a, b) < 0;
              });
    for (auto& candidate : candidates) {
      OperadPolynomial h = normal_form(candidate, collect_active());
      if (h.is_zero())
        ++result.stats.reductions_to_zero;
      else
        adjoin(std::move(h));
    }

    // Inter-reduce: retire every element whose leading monomial another active
    // element's leading monomial divides; whatever survives reduction against
    // the rest re-enters as a fresh element with fresh pairs.
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t a = 0; a < entries.size() && !changed; ++a) {
        if (!entries[a].active) continue;
        for (size_t b = 0; b < entries.size(); ++b) {
          if (a == b || !entries[b].active) continue;
          if (divisible_by(entries[a].poly.leading_monomial(),
                           entries[b].poly.leading_monomial())) {
            entries[a].active = false;
            OperadPolynomial h = normal_form(entries[a].poly, collect_active());
            if (!h.is_zero()) adjoin(std::move(h));
            changed = true;
            break;
          }
        }
      }
    }

    // Tail-reduce the survivors against each other until nothing moves.
    // Leading monomials are now mutually irreducible, so only tails change and
    // queued pair records stay valid.
    bool tails_changed = true;
    while (tails_changed) {
      tails_changed = false;
      for (size_t a = 0; a < entries.size(); ++a) {
        if (!entries[a].active) continue;
        OperadPolynomial h =
            monic(normal_form(entries[a].poly, collect_active(static_cast<int>(a))));
        if (!(h == entries[a].poly)) {
          entries[a].poly = std::move(h);
          tails_changed = true;
        }
      }
    }

    result.rounds = current_round;
    if (options.on_round) {
      std::vector<OperadPolynomial> view = collect_active();
      std::sort(view.begin(), view.end(), [](const OperadPolynomial& a, const OperadPolynomial& b) {
        return polynomial_compare(a, b) < 0;
      });
      options.on_round(current_round, view);
    }
  }

  result.complete = pending.empty() && !truncation_skipped;
  result.basis = collect_active();
  std::sort(result.basis.begin(), result.basis.end(),
            [](const OperadPolynomial& a, const OperadPolynomial& b) {
              return polynomial_compare(a, b) < 0;
            });
  result.quadratic = is_quadratic(result.basis);
  return result;
}

std::vector<TreeMonomial> normal_monomials(const std::vector<OperadPolynomial>& basis,
                                           const Alphabet& generators, int n) {
  std::vector<TreeMonomial> out;
  for (auto& m : enumerate_monomials(generators, n)) {
    bool reducible = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      if (divisible_by(m, g.leading_monomial())) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.push_back(std::move(m));
  }
  return out;
}

long dimension(const std::vector<OperadPolynomial>& basis, const Alphabet& generators, int n) {
  return static_cast<long>(normal_monomials(basis, generators, n).size());
}

std::vector<TreeMonomial> normal_monomials(const GroebnerResult& result,
                                           const Alphabet& generators, int n) {
  if (result.truncation_arity && n > *result.truncation_arity)
    throw std::invalid_argument(
        "normal monomials above the truncation arity are not determined by a truncated basis");
  return normal_monomials(result.basis, generators, n);
}

long dimension(const GroebnerResult& result, const Alphabet& generators, int n) {
  if (result.truncation_arity && n > *result.truncation_arity)
    throw std::invalid_argument(
        "dimensions above the truncation arity are not determined by a truncated basis");
  return dimension(result.basis, generators, n);
}

bool is_quadratic(const std::vector<OperadPolynomial>& basis) {
  for (const auto& g : basis)
    for (const auto& t : g.terms())
      if (t.monomial.weight() != 2) return false;
  return true;
}

}  // namespace opgb
