#include "opgb/polynomials.hpp"

#include <algorithm>
#include <stdexcept>

namespace opgb {

namespace {

int term_compare(const OrderingSpec& spec, int arity, const Term& a, const Term& b) {
  return compare_keys(spec, arity, a.key, arity, b.key);
}

}  // namespace

OperadPolynomial OperadPolynomial::from_terms(
    const OrderingSpec& spec, std::vector<std::pair<TreeMonomial, Rational>> raw) {
  OperadPolynomial out(spec);
  std::vector<Term> terms;
  terms.reserve(raw.size());
  int arity = 0;
  for (auto& [monomial, coefficient] : raw) {
    if (coefficient == 0) continue;
    if (!is_shuffle_monomial(monomial))
      throw std::invalid_argument("from_terms: non-canonical tree monomial");
    int a = monomial.arity();
    if (arity == 0) arity = a;
    if (a != arity) throw std::invalid_argument("from_terms: mixed arities");
    terms.push_back(Term{std::move(monomial), {}, std::move(coefficient)});
  }
  for (auto& t : terms) t.key = path_key(t.monomial);
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return term_compare(spec, arity, a, b) < 0;
  });
  // combine equal monomials, drop cancellations
  std::vector<Term> combined;
  for (auto& t : terms) {
    if (!combined.empty() && combined.back().key == t.key)
      combined.back().coefficient += t.coefficient;
    else
      combined.push_back(std::move(t));
    if (!combined.empty() && combined.back().coefficient == 0) combined.pop_back();
  }
  out.terms_ = std::move(combined);
  out.arity_ = out.terms_.empty() ? 0 : arity;
  return out;
}

const Term& OperadPolynomial::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading_term of the zero polynomial");
  return terms_.back();
}

bool OperadPolynomial::operator==(const OperadPolynomial& other) const {
  if (terms_.size() != other.terms_.size() || arity_ != other.arity_) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coefficient != other.terms_[i].coefficient ||
        !(terms_[i].monomial == other.terms_[i].monomial))
      return false;
  return true;
}

OperadPolynomial add(const OperadPolynomial& f, const OperadPolynomial& g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  if (!(f.spec() == g.spec())) throw std::invalid_argument("add: ordering specs differ");
  if (f.arity() != g.arity()) throw std::invalid_argument("add: arities differ");

  OperadPolynomial out(f.spec());
  out.arity_ = f.arity();
  auto& terms = out.terms_;
  terms.reserve(f.terms().size() + g.terms().size());
  size_t i = 0, j = 0;
  const auto& ft = f.terms();
  const auto& gt = g.terms();
  while (i < ft.size() || j < gt.size()) {
    int c;
    if (i == ft.size())
      c = 1;
    else if (j == gt.size())
      c = -1;
    else
      c = term_compare(f.spec(), f.arity(), ft[i], gt[j]);
    if (c < 0) {
      terms.push_back(ft[i++]);
    } else if (c > 0) {
      terms.push_back(gt[j++]);
    } else {
      Rational sum = ft[i].coefficient + gt[j].coefficient;
      if (sum != 0) terms.push_back(Term{ft[i].monomial, ft[i].key, std::move(sum)});
      ++i;
      ++j;
    }
  }
  if (terms.empty()) out.arity_ = 0;
  return out;
}

OperadPolynomial subtract(const OperadPolynomial& f, const OperadPolynomial& g) {
  return add(f, scale(g, make_rational(-1)));
}

OperadPolynomial scale(const OperadPolynomial& f, const Rational& c) {
  OperadPolynomial out(f.spec());
  if (c == 0) return out;
  out.arity_ = f.arity_;
  out.terms_ = f.terms_;
  for (auto& t : out.terms_) t.coefficient *= c;
  return out;
}

OperadPolynomial monic(const OperadPolynomial& f) {
  if (f.is_zero()) return f;
  return scale(f, 1 / f.leading_coefficient());
}

OperadPolynomial monomial_polynomial(const OrderingSpec& spec, const TreeMonomial& m) {
  return OperadPolynomial::from_terms(spec, {{m, make_rational(1)}});
}

int polynomial_compare(const OperadPolynomial& f, const OperadPolynomial& g) {
  if (f.arity() != g.arity()) return f.arity() < g.arity() ? -1 : 1;
  const auto& ft = f.terms();
  const auto& gt = g.terms();
  size_t n = std::min(ft.size(), gt.size());
  for (size_t k = 1; k <= n; ++k) {  // from the leading end
    const Term& a = ft[ft.size() - k];
    const Term& b = gt[gt.size() - k];
    if (int c = compare_keys(f.spec(), f.arity(), a.key, g.arity(), b.key)) return c;
    if (a.coefficient != b.coefficient) return a.coefficient < b.coefficient ? -1 : 1;
  }
  if (ft.size() != gt.size()) return ft.size() < gt.size() ? -1 : 1;
  return 0;
}

}  // namespace opgb
