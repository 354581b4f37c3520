#include "gsvkit/standard_basis.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "gsvkit/error.hpp"

namespace gsvkit {

std::uint64_t Dimension::value() const {
  if (!value_) throw Error(Reason::invalid_data, "dimension is infinite");
  return *value_;
}

std::string Dimension::str() const { return value_ ? std::to_string(*value_) : "INFINITE"; }

Ideal::Ideal(std::size_t nvars, std::vector<Polynomial> generators) : nvars_(nvars) {
  for (auto& g : generators) {
    if (g.nvars() != nvars) throw Error(Reason::arity_mismatch, "generator arity differs from ideal arity");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

StandardBasis::StandardBasis(std::size_t nvars, MonomialOrder order, std::vector<Polynomial> basis)
    : nvars_(nvars), order_(std::move(order)), basis_(std::move(basis)) {
  for (const auto& b : basis_) leading_.push_back(b.leading_term(order_).exponent);
}

namespace {

// Terms sorted in descending order under the engine's monomial order.
using Sorted = std::vector<Term>;

class Engine {
 public:
  Engine(const MonomialOrder& order, std::size_t nvars) : order_(order), nvars_(nvars) {
    if (order.kind() == MonomialOrder::Kind::local_weighted && order.weights().size() != nvars)
      throw Error(Reason::arity_mismatch, "weight vector does not match number of variables");
  }

  const MonomialOrder& order() const { return order_; }
  std::size_t nvars() const { return nvars_; }

  Sorted sorted(const Polynomial& p) const {
    Sorted s(p.terms().begin(), p.terms().end());
    std::sort(s.begin(), s.end(),
              [&](const Term& a, const Term& b) { return order_.compare(a.exponent, b.exponent) > 0; });
    return s;
  }

  Polynomial canonical(const Sorted& s) const { return Polynomial::from_terms(nvars_, s); }

  Sorted one() const { return Sorted{Term{Exponent(nvars_), 1}}; }

  // Degree underlying the order (weighted for weighted orders).
  std::uint64_t degree(const Exponent& e) const {
    if (order_.kind() != MonomialOrder::Kind::local_weighted) return e.degree();
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < nvars_; ++i) d += std::uint64_t(order_.weights()[i]) * e[i];
    return d;
  }

  std::uint64_t ecart(const Sorted& s) const {
    if (s.empty()) return 0;
    std::uint64_t lead = degree(s.front().exponent), top = lead;
    for (const auto& t : s) top = std::max(top, degree(t.exponent));
    return top - lead;
  }

  // h -= c * x^m * t
  void sub_mul(Sorted& h, const Rational& c, const Exponent& m, const Sorted& t) const {
    Sorted out;
    out.reserve(h.size() + t.size());
    std::size_t i = 0, j = 0;
    while (i < h.size() || j < t.size()) {
      if (j == t.size()) {
        out.push_back(std::move(h[i++]));
        continue;
      }
      Exponent shifted = t[j].exponent + m;
      auto cmp = i < h.size() ? order_.compare(h[i].exponent, shifted) : std::strong_ordering::less;
      if (cmp > 0) {
        out.push_back(std::move(h[i++]));
      } else if (cmp < 0) {
        out.push_back({std::move(shifted), -c * t[j].coeff});
        ++j;
      } else {
        Rational v = h[i].coeff - c * t[j].coeff;
        if (v != 0) out.push_back({std::move(shifted), std::move(v)});
        ++i;
        ++j;
      }
    }
    h = std::move(out);
    truncate(h);
  }

  // Terms of degree >= cut lie in the ideal and are dropped. Sorted
  // polynomials list them last, since local orders are anti-graded.
  void set_cut(std::uint64_t cut) { cut_ = cut; }
  std::uint64_t cut() const { return cut_; }
  void truncate(Sorted& s) const {
    while (!s.empty() && degree(s.back().exponent) >= cut_) s.pop_back();
  }

  // Scales s to integer coefficients with content 1 and positive lead.
  void make_primitive(Sorted& s) const {
    if (s.empty()) return;
    mpz_class den = 1, num = 0;
    for (const auto& t : s)
      if (t.coeff.get_den() != 1) den = lcm(den, mpz_class(t.coeff.get_den()));
    for (const auto& t : s) {
      if (den == 1)
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
      else
        num = gcd(num, mpz_class(t.coeff.get_num() * (den / t.coeff.get_den())));
      if (num == 1) break;
    }
    if (s.front().coeff < 0) num = -num;
    if (den == 1 && num == 1) return;
    if (den == 1) {
      for (auto& t : s) mpz_divexact(t.coeff.get_num_mpz_t(), t.coeff.get_num_mpz_t(), num.get_mpz_t());
      return;
    }
    Rational scale(den, num);
    scale.canonicalize();
    for (auto& t : s) t.coeff *= scale;
  }

  // h = a h - b x^m t with integers a, b chosen to cancel the lead of h,
  // then made primitive. Both inputs have integer coefficients.
  void reduce_primitive(Sorted& h, const Exponent& m, const Sorted& t) const {
    mpz_class a = t.front().coeff.get_num(), b = h.front().coeff.get_num();
    const mpz_class g = gcd(a, b);
    a /= g;
    b /= g;
    if (a != 1)
      for (auto& x : h) x.coeff *= a;
    sub_mul(h, Rational(b), m, t);
    make_primitive(h);
  }

  void make_monic(Sorted& s) const {
    if (s.empty() || s.front().coeff == 1) return;
    Rational inv = 1 / s.front().coeff;
    for (auto& t : s) t.coeff *= inv;
  }

 private:
  const MonomialOrder& order_;
  std::size_t nvars_;
  std::uint64_t cut_ = UINT64_MAX;
};

struct Reducer {
  const Sorted* poly;
  std::uint64_t ecart;
  // For entries coming from earlier stages of h: c*p - poly = sum q_i g_i.
  const Sorted* unit = nullptr;
  const std::vector<Sorted>* quotients = nullptr;
  // For input generators: index into G (its combiner is -e_i, unit part 0).
  std::size_t generator = SIZE_MAX;
};

struct WeakResult {
  Sorted remainder;
  Sorted unit;
  std::vector<Sorted> quotients;
};

// Mora's weak normal form with ecart-driven reducer selection.
WeakResult weak_normal_form(const Engine& eng, Sorted h, std::span<const Sorted> gens,
                            std::span<const std::uint64_t> ecarts, bool track_unit,
                            bool track_quotients) {
  WeakResult res;
  if (track_unit) res.unit = eng.one();
  if (track_quotients) res.quotients.assign(gens.size(), Sorted{});

  std::vector<Reducer> reducers;
  reducers.reserve(gens.size() + 8);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Reducer r{&gens[i], ecarts[i]};
    r.generator = i;
    reducers.push_back(r);
  }
  struct Snapshot {
    Sorted poly, unit;
    std::vector<Sorted> quotients;
  };
  std::deque<Snapshot> snapshots;

  while (!h.empty()) {
    const Exponent& lead = h.front().exponent;
    const Reducer* best = nullptr;
    for (const auto& r : reducers) {
      const Exponent& rl = r.poly->front().exponent;
      if (!rl.divides(lead)) continue;
      if (!best || r.ecart < best->ecart ||
          (r.ecart == best->ecart && eng.order().compare(rl, best->poly->front().exponent) > 0))
        best = &r;
    }
    if (!best) break;

    // Modulo a cut only finitely many monomials remain and the lead drops
    // each step, so plain reduction terminates without saving stages of h.
    const std::uint64_t h_ecart = eng.ecart(h);
    Reducer chosen = *best;
    if (chosen.ecart > h_ecart && eng.cut() == UINT64_MAX) {
      snapshots.push_back({h, res.unit, res.quotients});
      const auto& snap = snapshots.back();
      Reducer r{&snap.poly, h_ecart};
      r.unit = &snap.unit;
      r.quotients = &snap.quotients;
      reducers.push_back(r);
    }

    const Sorted& t = *chosen.poly;
    Exponent m = h.front().exponent - t.front().exponent;
    if (!track_unit && !track_quotients) {
      eng.reduce_primitive(h, m, t);
      continue;
    }
    Rational c = h.front().coeff / t.front().coeff;
    eng.sub_mul(h, c, m, t);

    if (chosen.generator != SIZE_MAX) {
      if (track_quotients) {
        Sorted mono{Term{m, 1}};
        eng.sub_mul(res.quotients[chosen.generator], -c, Exponent(eng.nvars()), mono);
      }
    } else {
      if (track_unit) eng.sub_mul(res.unit, c, m, *chosen.unit);
      if (track_quotients)
        for (std::size_t i = 0; i < gens.size(); ++i) eng.sub_mul(res.quotients[i], c, m, (*chosen.quotients)[i]);
    }
  }
  res.remainder = std::move(h);
  return res;
}

bool divisible_by_any(const Exponent& e, std::span<const Exponent> leads) {
  return std::any_of(leads.begin(), leads.end(), [&](const Exponent& l) { return l.divides(e); });
}

Polynomial truncate(const Polynomial& p, std::uint64_t bound) {
  std::vector<Term> keep;
  for (const auto& t : p.terms())
    if (t.exponent.degree() < bound) keep.push_back(t);
  return Polynomial::from_terms(p.nvars(), std::move(keep));
}

// Inverse of a unit modulo m^bound.
Polynomial inverse_unit(const Polynomial& u, std::uint64_t bound) {
  Rational u0 = u.constant_term();
  Polynomial w = u * (1 / u0) - Polynomial::constant(u.nvars(), 1);  // w in m
  Polynomial inv = Polynomial::constant(u.nvars(), 1);
  Polynomial power = inv;
  for (std::uint64_t k = 1; k < bound; ++k) {
    power = truncate(power * (-w), bound);
    if (power.is_zero()) break;
    inv += power;
  }
  return inv * (1 / u0);
}

// One more than the largest degree of a monomial outside <leads>, when that
// set is finite. Every monomial of at least this degree lies in <leads>.
std::optional<std::uint64_t> staircase_cut(const Engine& eng, std::span<const Exponent> leads) {
  const std::size_t n = eng.nvars();
  if (!staircase_count(leads, n).finite()) return std::nullopt;
  std::uint64_t top = 0;
  Exponent e(n);
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == n) {
      top = std::max(top, eng.degree(e) + 1);
      return;
    }
    for (e[i] = 0; !divisible_by_any(e, leads); ++e[i]) walk(i + 1);
    e[i] = 0;
  };
  walk(0);
  return top;
}

std::vector<Sorted> sorted_all(const Engine& eng, std::span<const Polynomial> ps) {
  std::vector<Sorted> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(eng.sorted(p));
  return out;
}

}  // namespace

NormalForm local_normal_form(const Polynomial& p, std::span<const Polynomial> generators,
                             const MonomialOrder& order, const NormalFormOptions& options) {
  const std::size_t n = p.nvars();
  for (const auto& g : generators)
    if (g.nvars() != n) throw Error(Reason::arity_mismatch, "generator arity differs from polynomial");
  Engine eng(order, n);

  std::vector<Polynomial> nonzero;
  std::vector<std::size_t> original_index;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].is_zero()) continue;
    nonzero.push_back(generators[i]);
    original_index.push_back(i);
  }
  std::vector<Sorted> gens = sorted_all(eng, nonzero);
  std::vector<std::uint64_t> ecarts;
  std::vector<Exponent> leads;
  for (const auto& g : gens) {
    ecarts.push_back(eng.ecart(g));
    leads.push_back(g.front().exponent);
  }

  // Without quotients, terms of degree >= the staircase cut of <LM(G)> lie in
  // <G> and can be dropped; u p - r stays in <G>.
  Sorted start = eng.sorted(p);
  if (order.is_local() && !options.track_quotients)
    if (auto cut = staircase_cut(eng, leads)) {
      eng.set_cut(*cut);
      eng.truncate(start);
    }
  WeakResult w = weak_normal_form(eng, std::move(start), gens, ecarts, true, options.track_quotients);

  NormalForm nf;
  Sorted h = std::move(w.remainder);
  std::vector<Sorted> quotients = std::move(w.quotients);

  if (options.reduce_tail && !h.empty()) {
    // m^bound is contained in <G> once <LM(G)> has finite colength.
    std::optional<std::uint64_t> bound;
    if (Dimension d = staircase_count(leads, n); d.finite()) bound = std::max<std::uint64_t>(d.value(), 1);

    auto truncate_sorted = [&](Sorted& s) {
      std::erase_if(s, [&](const Term& t) { return t.exponent.degree() >= *bound; });
    };

    constexpr int kExactSteps = 256;
    for (int step = 0;; ++step) {
      if (!nf.exact) truncate_sorted(h);
      auto it = std::find_if(h.begin(), h.end(), [&](const Term& t) { return divisible_by_any(t.exponent, leads); });
      if (it == h.end()) break;
      if (step >= kExactSteps && nf.exact) {
        if (!bound) {
          nf.fully_reduced = false;
          break;
        }
        nf.exact = false;
        continue;
      }
      Sorted rest(std::make_move_iterator(it), std::make_move_iterator(h.end()));
      h.erase(it, h.end());
      WeakResult tail = weak_normal_form(eng, rest, gens, ecarts, true,
                                         options.track_quotients && nf.exact);
      const bool unit_is_one = tail.unit.size() == 1 && tail.unit.front().exponent.is_one() &&
                               tail.unit.front().coeff == 1;
      if (unit_is_one) {
        for (auto& t : tail.remainder) h.push_back(std::move(t));
        if (options.track_quotients && nf.exact)
          for (std::size_t i = 0; i < quotients.size(); ++i) {
            Polynomial sum = eng.canonical(quotients[i]) + eng.canonical(tail.quotients[i]);
            quotients[i] = eng.sorted(sum);
          }
      } else if (bound) {
        nf.exact = false;
        Polynomial inv = inverse_unit(eng.canonical(tail.unit), *bound);
        Sorted fixed = eng.sorted(truncate(inv * eng.canonical(tail.remainder), *bound));
        for (auto& t : fixed) h.push_back(std::move(t));
      } else {
        // No truncation available: keep the weak remainder for this tail.
        for (auto& t : rest) h.push_back(std::move(t));
        nf.fully_reduced = false;
        break;
      }
    }
  }

  nf.remainder = eng.canonical(h);
  nf.unit = eng.canonical(w.unit);
  if (options.track_quotients && nf.exact) {
    nf.quotients.assign(generators.size(), Polynomial(n));
    for (std::size_t i = 0; i < quotients.size(); ++i)
      nf.quotients[original_index[i]] = eng.canonical(quotients[i]);
  }
  return nf;
}

// Standard basis of I + (monomials of degree >= cut).
static StandardBasis basis_with_cut(const Ideal& ideal, const MonomialOrder& order, std::uint64_t cut) {
  const std::size_t n = ideal.nvars();
  Engine eng(order, n);
  eng.set_cut(cut);

  std::vector<Sorted> basis;
  std::vector<std::uint64_t> ecarts;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  std::vector<Exponent> leads;

  // Once <LM(basis)> has finite colength with cut W, every monomial of
  // degree >= W is in I, so all such terms can be dropped. An element whose
  // leading monomial is that high shrinks to the monomial itself.
  auto shrink = [&](Sorted& s) {
    if (s.empty() || eng.degree(s.front().exponent) < eng.cut()) {
      eng.truncate(s);
    } else {
      s.resize(1);
      s.front().coeff = 1;
    }
  };
  auto update_cut = [&] {
    if (!order.is_local()) return;
    auto cut = staircase_cut(eng, leads);
    if (!cut || *cut >= eng.cut()) return;
    eng.set_cut(*cut);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      shrink(basis[i]);
      ecarts[i] = eng.ecart(basis[i]);
    }
  };
  auto add = [&](Sorted s) {
    shrink(s);
    eng.make_primitive(s);
    const std::size_t k = basis.size();
    for (std::size_t i = 0; i < k; ++i) pending.insert({i, k});
    ecarts.push_back(eng.ecart(s));
    leads.push_back(s.front().exponent);
    basis.push_back(std::move(s));
    update_cut();
  };
  for (const auto& g : ideal.generators()) add(eng.sorted(g));

  auto lead = [&](std::size_t i) -> const Exponent& { return basis[i].front().exponent; };

  while (!pending.empty()) {
    // Sugar selection: smallest degree of the homogenized s-polynomial,
    // then smallest lcm degree.
    auto sugar = [&](std::pair<std::size_t, std::size_t> p) {
      const auto d = eng.degree(lead(p.first).lcm(lead(p.second)));
      return std::pair{d + std::max(ecarts[p.first], ecarts[p.second]), d};
    };
    auto pick = pending.begin();
    auto pick_deg = sugar(*pick);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      auto d = sugar(*it);
      if (d < pick_deg) {
        pick = it;
        pick_deg = d;
      }
    }
    auto [i, j] = *pick;
    pending.erase(pick);

    const Exponent& li = lead(i);
    const Exponent& lj = lead(j);
    if (li.coprime(lj)) continue;  // product criterion
    Exponent l = li.lcm(lj);
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j || !lead(k).divides(l)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::pair{std::min(a, b), std::max(a, b)}; };
      chain = !pending.contains(key(i, k)) && !pending.contains(key(j, k));
    }
    if (chain) continue;

    if (eng.degree(l) >= eng.cut()) continue;
    Sorted s = basis[i];
    for (auto& t : s) t.exponent = t.exponent + (l - li);
    eng.truncate(s);
    eng.reduce_primitive(s, l - lj, basis[j]);
    WeakResult w = weak_normal_form(eng, std::move(s), basis, ecarts, false, false);
    if (!w.remainder.empty()) add(std::move(w.remainder));
  }

  // Keep a minimal set: drop elements whose leading monomial is divisible
  // by an earlier (or strictly smaller) leading monomial.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
      if (k == i || !lead(k).divides(lead(i))) continue;
      redundant = lead(k) != lead(i) || k < i;
    }
    if (redundant) continue;
    Sorted b = basis[i];
    eng.make_monic(b);
    minimal.push_back(eng.canonical(b));
  }
  // With a cut, L(I) = <LM(basis)> + (monomials of degree >= cut). Add the
  // minimal monomials of the second part that the first misses; each is
  // x_i times a standard monomial.
  if (eng.cut() != UINT64_MAX) {
    std::vector<Exponent> kept;
    for (const auto& m : minimal) kept.push_back(m.leading_term(order).exponent);
    std::set<Exponent> extra;
    Exponent e(n);
    std::function<void(std::size_t)> walk = [&](std::size_t v) {
      if (v == n) {
        for (std::size_t i = 0; i < n; ++i) {
          Exponent m = e;
          ++m[i];
          if (eng.degree(m) >= eng.cut() && !divisible_by_any(m, kept)) extra.insert(m);
        }
        return;
      }
      for (e[v] = 0; eng.degree(e) < eng.cut() && !divisible_by_any(e, kept); ++e[v]) walk(v + 1);
      e[v] = 0;
    };
    walk(0);
    for (const auto& m : extra) {
      bool redundant = false;
      for (const auto& o : extra) redundant = redundant || (o != m && o.divides(m));
      if (!redundant) minimal.push_back(Polynomial::monomial(m));
    }
  }
  return StandardBasis(n, order, std::move(minimal));
}

// Lazard's method for local degree orders: a Groebner basis in k[t, x] of
// an ideal between the homogenized generators and its t-saturation,
// dehomogenized. Elements are stored dehomogenized and minimally
// homogenized, so the lead of g in k[t, x] is t^ecart(g) x^LM(g), and g may
// reduce h only when ecart(g) <= ecart(h). Every element lies in I, and the
// leading ideal contains that of the homogenized generators, so the result
// is a standard basis.
static StandardBasis lazard_basis(const Ideal& ideal, const MonomialOrder& order) {
  const std::size_t n = ideal.nvars();
  Engine eng(order, n);
  std::vector<Sorted> basis;
  std::vector<std::uint64_t> ecarts;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto lead = [&](std::size_t i) -> const Exponent& { return basis[i].front().exponent; };

  auto reduce = [&](Sorted h) {
    while (!h.empty()) {
      const std::uint64_t eh = eng.ecart(h);
      std::size_t best = SIZE_MAX;
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if (ecarts[k] > eh || !lead(k).divides(h.front().exponent)) continue;
        if (best == SIZE_MAX || basis[k].size() < basis[best].size()) best = k;
      }
      if (best == SIZE_MAX) break;
      eng.reduce_primitive(h, h.front().exponent - lead(best), basis[best]);
    }
    return h;
  };
  auto add = [&](Sorted s) {
    eng.make_primitive(s);
    const std::size_t k = basis.size();
    for (std::size_t i = 0; i < k; ++i) pending.insert({i, k});
    ecarts.push_back(eng.ecart(s));
    basis.push_back(std::move(s));
  };
  for (const auto& g : ideal.generators()) add(eng.sorted(g));

  // Degree of the homogenized s-polynomial.
  auto pair_degree = [&](std::pair<std::size_t, std::size_t> p) {
    return std::max(ecarts[p.first], ecarts[p.second]) + eng.degree(lead(p.first).lcm(lead(p.second)));
  };
  while (!pending.empty()) {
    auto pick = pending.begin();
    auto pick_deg = pair_degree(*pick);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      if (auto d = pair_degree(*it); d < pick_deg) {
        pick = it;
        pick_deg = d;
      }
    }
    auto [i, j] = *pick;
    pending.erase(pick);

    const std::uint64_t top = std::max(ecarts[i], ecarts[j]);
    if (lead(i).coprime(lead(j)) && std::min(ecarts[i], ecarts[j]) == 0) continue;  // product criterion
    const Exponent l = lead(i).lcm(lead(j));
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j || ecarts[k] > top || !lead(k).divides(l)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::pair{std::min(a, b), std::max(a, b)}; };
      chain = !pending.contains(key(i, k)) && !pending.contains(key(j, k));
    }
    if (chain) continue;

    Sorted h = basis[i];
    for (auto& t : h) t.exponent = t.exponent + (l - lead(i));
    eng.reduce_primitive(h, l - lead(j), basis[j]);
    h = reduce(std::move(h));
    if (!h.empty()) add(std::move(h));
  }

  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
      if (k == i || !lead(k).divides(lead(i))) continue;
      redundant = lead(k) != lead(i) || k < i;
    }
    if (redundant) continue;
    Sorted b = basis[i];
    eng.make_monic(b);
    minimal.push_back(eng.canonical(b));
  }
  return StandardBasis(n, order, std::move(minimal));
}

StandardBasis standard_basis(const Ideal& ideal, const MonomialOrder& order) {
  const std::size_t n = ideal.nvars();
  if (!order.is_local()) return basis_with_cut(ideal, order, UINT64_MAX);
  for (const auto& g : ideal.generators())
    if (g.constant_term() != 0) return StandardBasis(n, order, {Polynomial::constant(n, 1)});

  // Work modulo J_W, the monomials of degree >= W. If every standard
  // monomial of I + J_W has degree <= D with D + max weight < W, then
  // J_W lies in m J_{D+1}, so J_{D+1} is in I by Nakayama and the result is
  // a standard basis of I. Below W the leading ideal of I + J_W agrees with
  // that of I; once those leads have finite colength their staircase gives a
  // W that succeeds. Otherwise double W once, then run Lazard's method.
  Engine eng(order, n);
  std::uint64_t step = 1, low = 0;
  if (order.kind() == MonomialOrder::Kind::local_weighted)
    for (auto w : order.weights()) step = std::max<std::uint64_t>(step, w);
  for (const auto& g : ideal.generators()) {
    if (g.is_zero()) continue;
    std::uint64_t d = UINT64_MAX;
    for (const auto& t : g.terms()) d = std::min(d, eng.degree(t.exponent));
    low = std::max(low, d);
  }
  std::uint64_t w = 2 * low + 2 * step + 4;
  for (int doublings = 0;;) {
    StandardBasis sb = basis_with_cut(ideal, order, w);
    if (auto top = staircase_cut(eng, sb.leading_exponents()); top && *top - 1 + step < w) return sb;
    std::vector<Exponent> exact;
    for (const auto& e : sb.leading_exponents())
      if (eng.degree(e) < w) exact.push_back(e);
    if (auto top = staircase_cut(eng, exact)) {
      w = *top + step;
    } else if (doublings++ == 0) {
      w *= 2;
    } else {
      break;
    }
  }
  return lazard_basis(ideal, order);
}

std::optional<Dimension> brute_force_staircase_count(std::span<const Exponent> leading, std::size_t nvars,
                                                     std::uint64_t box_limit) {
  std::vector<std::uint32_t> side(nvars, 0);
  for (const auto& l : leading) {
    if (l.is_one()) return Dimension(0);
    std::size_t support = 0, var = 0;
    for (std::size_t i = 0; i < nvars; ++i)
      if (l[i] != 0) {
        ++support;
        var = i;
      }
    if (support == 1 && (side[var] == 0 || l[var] < side[var])) side[var] = l[var];
  }
  std::uint64_t box = 1;
  for (auto b : side) {
    if (b == 0) return Dimension::infinite();
    if (box > box_limit / b) return std::nullopt;
    box *= b;
  }
  std::uint64_t count = 0;
  Exponent e(nvars);
  for (std::uint64_t k = 0; k < box; ++k) {
    std::uint64_t r = k;
    for (std::size_t i = 0; i < nvars; ++i) {
      e[i] = std::uint32_t(r % side[i]);
      r /= side[i];
    }
    if (!divisible_by_any(e, leading)) ++count;
  }
  return Dimension(count);
}

Dimension staircase_count(std::span<const Exponent> leading, std::size_t nvars) {
  for (const auto& l : leading)
    if (l.is_one()) return Dimension(0);
  std::vector<std::uint32_t> bound(nvars, 0);
  for (const auto& l : leading) {
    std::size_t support = 0, var = 0;
    for (std::size_t i = 0; i < nvars; ++i)
      if (l[i] != 0) {
        ++support;
        var = i;
      }
    if (support == 1 && (bound[var] == 0 || l[var] < bound[var])) bound[var] = l[var];
  }
  for (auto b : bound)
    if (b == 0) return Dimension::infinite();

  // Depth-first walk over the staircase. A prefix that is already divisible
  // stays divisible for every larger exponent, so each loop stops there.
  std::uint64_t count = 0;
  Exponent e(nvars);
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == nvars) {
      ++count;
      return;
    }
    for (e[i] = 0; e[i] < bound[i]; ++e[i]) {
      if (divisible_by_any(e, leading)) break;
      walk(i + 1);
    }
    e[i] = 0;
  };
  walk(0);
  return Dimension(count);
}

std::vector<Exponent> standard_monomials(const StandardBasis& sb) {
  std::vector<Exponent> out;
  if (!staircase_count(sb.leading_exponents(), sb.nvars()).finite()) return out;
  const auto& leading = sb.leading_exponents();
  const std::size_t n = sb.nvars();
  Exponent e(n);
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == n) {
      out.push_back(e);
      return;
    }
    for (e[i] = 0;; ++e[i]) {
      if (divisible_by_any(e, leading)) break;
      walk(i + 1);
    }
    e[i] = 0;
  };
  walk(0);
  std::sort(out.begin(), out.end(),
            [&](const Exponent& a, const Exponent& b) { return sb.order().compare(a, b) > 0; });
  return out;
}

Dimension quotient_dimension(const StandardBasis& sb) {
  if (sb.basis().empty()) return sb.nvars() == 0 ? Dimension(1) : Dimension::infinite();
  return staircase_count(sb.leading_exponents(), sb.nvars());
}

Dimension quotient_dimension(const Ideal& ideal, const MonomialOrder& order) {
  return quotient_dimension(standard_basis(ideal, order));
}

bool ideal_membership(const Polynomial& p, const StandardBasis& sb) {
  if (p.nvars() != sb.nvars()) throw Error(Reason::arity_mismatch, "polynomial arity differs from ideal");
  if (p.is_zero()) return true;
  NormalFormOptions opts;
  opts.reduce_tail = false;
  return local_normal_form(p, sb.basis(), sb.order(), opts).remainder.is_zero();
}

bool ideal_membership(const Polynomial& p, const Ideal& ideal, const MonomialOrder& order) {
  return ideal_membership(p, standard_basis(ideal, order));
}

}  // namespace gsvkit
