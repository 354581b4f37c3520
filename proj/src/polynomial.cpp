#include "gsvkit/polynomial.hpp"

#include <algorithm>
#include <map>

#include "gsvkit/error.hpp"

namespace gsvkit {

std::uint64_t Exponent::degree() const noexcept {
  std::uint64_t d = 0;
  for (auto v : e_) d += v;
  return d;
}

bool Exponent::is_one() const noexcept {
  return std::all_of(e_.begin(), e_.end(), [](auto v) { return v == 0; });
}

bool Exponent::divides(const Exponent& other) const noexcept {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

bool Exponent::coprime(const Exponent& other) const noexcept {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != 0 && other.e_[i] != 0) return false;
  return true;
}

Exponent Exponent::operator+(const Exponent& o) const {
  Exponent r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

Exponent Exponent::operator-(const Exponent& o) const {
  Exponent r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

Exponent Exponent::lcm(const Exponent& o) const {
  Exponent r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = std::max(e_[i], o.e_[i]);
  return r;
}

MonomialOrder MonomialOrder::weighted(std::vector<std::uint32_t> weights) {
  if (weights.empty() || std::any_of(weights.begin(), weights.end(), [](auto w) { return w == 0; }))
    throw Error(Reason::invalid_data, "weighted order needs positive integer weights");
  return MonomialOrder(Kind::local_weighted, std::move(weights));
}

namespace {

// Reverse lexicographic tie-break: a > b iff the last nonzero entry of a - b
// is negative.
std::strong_ordering revlex(const Exponent& a, const Exponent& b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Exponent& a, const Exponent& b) const {
  switch (kind_) {
    case Kind::global_degrevlex: {
      auto da = a.degree(), db = b.degree();
      if (da != db) return da <=> db;
      return revlex(a, b);
    }
    case Kind::local_degrevlex: {
      auto da = a.degree(), db = b.degree();
      if (da != db) return db <=> da;
      return revlex(a, b);
    }
    case Kind::local_weighted: {
      std::uint64_t da = 0, db = 0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        da += std::uint64_t(weights_[i]) * a[i];
        db += std::uint64_t(weights_[i]) * b[i];
      }
      if (da != db) return db <=> da;
      return revlex(a, b);
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering monomial_compare(const MonomialOrder& order, const Exponent& a,
                                      const Exponent& b) {
  if (a.size() != b.size())
    throw Error(Reason::arity_mismatch, "exponent vectors of different length");
  if (order.kind() == MonomialOrder::Kind::local_weighted && order.weights().size() != a.size())
    throw Error(Reason::arity_mismatch, "weight vector does not match number of variables");
  return order.compare(a, b);
}

namespace {

const MonomialOrder kCanonical = MonomialOrder::global_degrevlex();

bool canonical_before(const Term& a, const Term& b) {
  return kCanonical.compare(a.exponent, b.exponent) > 0;
}

// Merge two canonically sorted term lists: a + sign * b.
std::vector<Term> merge(std::span<const Term> a, std::span<const Term> b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto c = kCanonical.compare(a[i].exponent, b[j].exponent);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
      ++j;
    } else {
      Rational s = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (s != 0) out.push_back({a[i].exponent, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (sign < 0) out.back().coeff = -out.back().coeff;
  }
  return out;
}

void check_arity(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars())
    throw Error(Reason::arity_mismatch, "polynomials over different numbers of variables");
}

}  // namespace

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_.push_back({Exponent(nvars), c});
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw Error(Reason::index_out_of_range, "variable index out of range");
  Exponent e(nvars);
  e[i] = 1;
  return monomial(e);
}

Polynomial Polynomial::monomial(const Exponent& e, const Rational& c) {
  Polynomial p(e.size());
  if (c != 0) p.terms_.push_back({e, c});
  return p;
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.exponent.size() != nvars)
      throw Error(Reason::arity_mismatch, "term arity differs from polynomial arity");
  std::sort(terms.begin(), terms.end(), canonical_before);
  Polynomial p(nvars);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exponent == t.exponent) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

long Polynomial::total_degree() const noexcept {
  // Canonical order is graded, so the first term has maximal degree.
  return terms_.empty() ? -1 : long(terms_.front().exponent.degree());
}

long Polynomial::order() const noexcept {
  return terms_.empty() ? -1 : long(terms_.back().exponent.degree());
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().exponent.is_one()) return terms_.back().coeff;
  return 0;
}

bool Polynomial::is_homogeneous() const noexcept { return total_degree() == order(); }

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw Error(Reason::invalid_data, "zero polynomial has no leading term");
  const Term* best = &terms_.front();
  for (const auto& t : terms_)
    if (order.compare(t.exponent, best->exponent) > 0) best = &t;
  return *best;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_arity(*this, o);
  terms_ = merge(terms_, o.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_arity(*this, o);
  terms_ = merge(terms_, o.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_arity(a, b);
  std::map<Exponent, Rational> acc;
  for (const auto& s : a.terms())
    for (const auto& t : b.terms()) acc[s.exponent + t.exponent] += s.coeff * t.coeff;
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [e, c] : acc) terms.push_back({e, std::move(c)});
  return Polynomial::from_terms(a.nvars(), std::move(terms));
}

Polynomial pow(const Polynomial& p, unsigned k) {
  Polynomial result = Polynomial::constant(p.nvars(), 1);
  Polynomial base = p;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial partial_derivative(const Polynomial& p, std::size_t i) {
  if (i >= p.nvars()) throw Error(Reason::index_out_of_range, "derivative index out of range");
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    if (t.exponent[i] == 0) continue;
    Term d{t.exponent, t.coeff * t.exponent[i]};
    d.exponent[i] -= 1;
    terms.push_back(std::move(d));
  }
  return Polynomial::from_terms(p.nvars(), std::move(terms));
}

Rational evaluate_at_origin(const Polynomial& p) { return p.constant_term(); }

Polynomial compose(const Polynomial& p, std::span<const Polynomial> images) {
  if (images.size() != p.nvars())
    throw Error(Reason::arity_mismatch, "need one image per variable");
  const std::size_t target = images.empty() ? 0 : images.front().nvars();
  for (const auto& im : images)
    if (im.nvars() != target) throw Error(Reason::arity_mismatch, "images of different arity");

  // Powers of each image, built on demand.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, std::uint32_t k) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };

  Polynomial result(target);
  for (const auto& t : p.terms()) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < p.nvars(); ++i)
      if (t.exponent[i] > 0) term = term * power(i, t.exponent[i]);
    result += term;
  }
  return result;
}

Rational evaluate(const Polynomial& p, std::span<const Rational> point) {
  if (point.size() != p.nvars()) throw Error(Reason::arity_mismatch, "point arity mismatch");
  Rational sum = 0;
  for (const auto& t : p.terms()) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (std::uint32_t k = 0; k < t.exponent[i]; ++k) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

}  // namespace gsvkit
