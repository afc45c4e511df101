#include "apoly/polynomial.hpp"

#include <algorithm>

#include "apoly/kernels.hpp"
#include "term_accumulator.hpp"

namespace apoly {

namespace {

void check_compatible(const Polynomial& a, const Polynomial& b) {
  if (!same_varset(a.varset(), b.varset()))
    throw StructuralError("operands live over different VarSets");
}

/// Merge two grlex-ascending term lists, negating b when asked.
std::vector<Term> merge_add(const std::vector<Term>& a,
                            const std::vector<Term>& b, bool negate_b) {
  const auto& K = active_kernels();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const int c = K.cmp_grlex(a[i].mono, b[j].mono);
    if (c < 0) {
      out.push_back(a[i++]);
    } else if (c > 0) {
      out.push_back(b[j]);
      if (negate_b) out.back().coeff = -out.back().coeff;
      ++j;
    } else {
      Int s = negate_b ? Int(a[i].coeff - b[j].coeff)
                       : Int(a[i].coeff + b[j].coeff);
      if (s != 0) out.push_back(Term{a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (negate_b) out.back().coeff = -out.back().coeff;
  }
  return out;
}

std::vector<Term> sort_and_combine(std::vector<Term> terms) {
  const auto& K = active_kernels();
  std::sort(terms.begin(), terms.end(), [&K](const Term& x, const Term& y) {
    return K.cmp_grlex(x.mono, y.mono) < 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && K.equal(out.back().mono, t.mono)) {
      out.back().coeff += t.coeff;
      if (out.back().coeff == 0) out.pop_back();
    } else if (t.coeff != 0) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

ExpVec mono_sub(const ExpVec& a, const ExpVec& b) {
  ExpVec r;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    r.lanes[i] = static_cast<std::uint16_t>(a.lanes[i] - b.lanes[i]);
  return r;
}

int permutation_parity(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return (inv & 1) ? -1 : 1;
}

}  // namespace

Polynomial::Polynomial(VarSetPtr vars) : vars_(std::move(vars)) {
  if (!vars_) throw StructuralError("Polynomial: null VarSet");
}

Polynomial Polynomial::constant(VarSetPtr vars, Int c) {
  Polynomial p(std::move(vars));
  if (c != 0) p.terms_.push_back(Term{ExpVec::zero(), std::move(c)});
  return p;
}

Polynomial Polynomial::variable(VarSetPtr vars, const std::string& name) {
  Polynomial p(std::move(vars));
  const int lane = p.vars_->find(name);
  if (lane < 0)
    throw StructuralError("variable '" + name + "' not in VarSet");
  ExpVec e = ExpVec::zero();
  e.lanes[lane] = 1;
  p.terms_.push_back(Term{e, Int(1)});
  return p;
}

Polynomial Polynomial::monomial(VarSetPtr vars, const ExpVec& mono, Int coeff) {
  Polynomial p(std::move(vars));
  for (std::size_t i = p.vars_->size(); i < kMaxVars; ++i)
    if (mono.lanes[i] != 0)
      throw StructuralError("monomial uses a lane outside the VarSet");
  if (coeff != 0) p.terms_.push_back(Term{mono, std::move(coeff)});
  return p;
}

Polynomial Polynomial::from_terms(VarSetPtr vars, std::vector<Term> terms) {
  Polynomial p(std::move(vars));
  p.terms_ = sort_and_combine(std::move(terms));
  return p;
}

const Term& Polynomial::leading() const {
  if (terms_.empty()) throw StructuralError("leading term of zero polynomial");
  return terms_.back();
}

std::uint32_t Polynomial::total_degree() const {
  if (terms_.empty()) return 0;
  return active_kernels().total_degree(terms_.back().mono);
}

int Polynomial::degree_in(const std::string& name) const {
  const int lane = vars_->find(name);
  if (lane < 0) throw StructuralError("variable '" + name + "' not in VarSet");
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, int(t.mono.lanes[lane]));
  return d;
}

Int Polynomial::coefficient(const ExpVec& mono) const {
  const auto& K = active_kernels();
  auto it = std::lower_bound(terms_.begin(), terms_.end(), mono,
                             [&K](const Term& t, const ExpVec& m) {
                               return K.cmp_grlex(t.mono, m) < 0;
                             });
  if (it != terms_.end() && K.equal(it->mono, mono)) return it->coeff;
  return 0;
}

Int Polynomial::evaluate_all_ones() const {
  Int s = 0;
  for (const auto& t : terms_) s += t.coeff;
  return s;
}

Int Polynomial::evaluate(const std::map<std::string, Int>& point) const {
  std::vector<Int> values(vars_->size());
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    auto it = point.find(vars_->name(i));
    if (it == point.end())
      throw StructuralError("evaluate: no value for '" + vars_->name(i) + "'");
    values[i] = it->second;
  }
  Int sum = 0;
  for (const auto& t : terms_) {
    Int m = t.coeff;
    for (std::size_t i = 0; i < vars_->size(); ++i)
      if (t.mono.lanes[i] != 0) m *= int_pow(values[i], t.mono.lanes[i]);
    sum += m;
  }
  return sum;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_compatible(*this, o);
  Polynomial r(vars_);
  r.terms_ = merge_add(terms_, o.terms_, false);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_compatible(*this, o);
  Polynomial r(vars_);
  r.terms_ = merge_add(terms_, o.terms_, true);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(*this, o);
  if (is_zero() || o.is_zero()) return Polynomial(vars_);
  const Polynomial& outer = num_terms() <= o.num_terms() ? *this : o;
  const Polynomial& inner = num_terms() <= o.num_terms() ? o : *this;

  const auto& K = active_kernels();
  std::vector<ExpVec> inner_monos(inner.terms_.size());
  for (std::size_t i = 0; i < inner.terms_.size(); ++i)
    inner_monos[i] = inner.terms_[i].mono;
  std::vector<ExpVec> shifted(inner_monos.size());

  TermAccumulator acc(std::max(num_terms(), o.num_terms()) * 2);
  for (const auto& t : outer.terms_) {
    K.add_shift_many(inner_monos.data(), inner_monos.size(), t.mono,
                     shifted.data());
    for (std::size_t i = 0; i < shifted.size(); ++i)
      acc.add_mul(shifted[i], t.coeff, inner.terms_[i].coeff);
  }
  return acc.drain(vars_);
}

Polynomial Polynomial::operator*(const Int& c) const {
  if (c == 0) return Polynomial(vars_);
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(vars_, 1);
  if (e == 0) return result;
  Polynomial base(*this);
  while (true) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e == 0) break;
    base = base * base;
  }
  return result;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!same_varset(vars_, o.vars_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  const auto& K = active_kernels();
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!K.equal(terms_[i].mono, o.terms_[i].mono)) return false;
    if (terms_[i].coeff != o.terms_[i].coeff) return false;
  }
  return true;
}

std::string Polynomial::render() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += ' ';
    out += (it->coeff < 0) ? "- " : "+ ";
    const Int mag = it->coeff < 0 ? Int(-it->coeff) : it->coeff;
    std::string body;
    bool has_vars = false;
    for (std::size_t i = 0; i < vars_->size(); ++i) {
      const unsigned e = it->mono.lanes[i];
      if (e == 0) continue;
      if (has_vars) body += '*';
      body += vars_->name(i);
      if (e > 1) {
        body += '^';
        body += std::to_string(e);
      }
      has_vars = true;
    }
    if (mag != 1 || !has_vars) {
      out += mag.get_str();
      if (has_vars) out += '*';
    }
    out += body;
  }
  return out;
}

Polynomial Polynomial::embed(const VarSetPtr& target) const {
  if (!target) throw StructuralError("embed: null target VarSet");
  std::vector<int> map(vars_->size());
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    map[i] = target->find(vars_->name(i));
    if (map[i] < 0)
      throw StructuralError("embed: target VarSet lacks '" + vars_->name(i) +
                            "'");
  }
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    ExpVec e = ExpVec::zero();
    for (std::size_t i = 0; i < vars_->size(); ++i)
      e.lanes[map[i]] = t.mono.lanes[i];
    terms.push_back(Term{e, t.coeff});
  }
  return from_terms(target, std::move(terms));
}

Polynomial Polynomial::permute_lanes(const std::vector<int>& perm) const {
  const std::size_t k = vars_->size();
  if (perm.size() != k)
    throw StructuralError("permute_lanes: wrong permutation size");
  std::vector<bool> hit(k, false);
  for (int p : perm) {
    if (p < 0 || std::size_t(p) >= k || hit[p])
      throw StructuralError("permute_lanes: not a permutation");
    hit[p] = true;
  }
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    ExpVec e = ExpVec::zero();
    for (std::size_t i = 0; i < k; ++i) e.lanes[perm[i]] = t.mono.lanes[i];
    terms.push_back(Term{e, t.coeff});
  }
  return from_terms(vars_, std::move(terms));
}

namespace {

/// p / (x_hi - x_lo) by synthetic division in lane `hi`, coefficients in the
/// remaining variables. Non-zero remainder -> DivisibilityError.
Polynomial divide_synthetic(const Polynomial& p, int hi, int lo) {
  if (p.is_zero()) return p;
  // Bucket by the hi exponent, zeroing that lane. Buckets stay sorted:
  // removing a lane of equal value preserves the grlex order.
  int dmax = 0;
  for (const auto& t : p.terms()) dmax = std::max(dmax, int(t.mono.lanes[hi]));
  std::vector<std::vector<Term>> c(dmax + 1);
  for (const auto& t : p.terms()) {
    Term u = t;
    const int k = u.mono.lanes[hi];
    u.mono.lanes[hi] = 0;
    c[k].push_back(std::move(u));
  }

  auto shift_lo = [lo](std::vector<Term> v) {
    for (auto& t : v)
      t.mono.lanes[lo] = static_cast<std::uint16_t>(t.mono.lanes[lo] + 1);
    return v;
  };

  std::vector<std::vector<Term>> q(std::max(dmax, 1));
  // q[dmax-1] = c[dmax]; q[k-1] = c[k] + x_lo * q[k]; rem = c[0] + x_lo*q[0]
  if (dmax >= 1) q[dmax - 1] = std::move(c[dmax]);
  for (int k = dmax - 1; k >= 1; --k)
    q[k - 1] = merge_add(c[k], shift_lo(q[k]), false);
  std::vector<Term> rem =
      dmax >= 1 ? merge_add(c[0], shift_lo(q[0]), false) : std::move(c[0]);
  if (!rem.empty()) {
    Polynomial r = Polynomial::from_terms(p.varset(), std::move(rem));
    throw DivisibilityError("exact division left a non-zero remainder",
                            std::move(r));
  }

  std::vector<Term> all;
  for (int k = 0; k < dmax; ++k) {
    for (auto& t : q[k]) {
      t.mono.lanes[hi] = static_cast<std::uint16_t>(k);
      all.push_back(std::move(t));
    }
  }
  return Polynomial::from_terms(p.varset(), std::move(all));
}

/// Leading-term reduction; handles every exact divisor. If d | p the loop
/// terminates with zero remainder because leading terms multiply.
Polynomial divide_general(const Polynomial& p, const Polynomial& d) {
  const auto& K = active_kernels();
  const Term& lt_d = d.leading();
  std::vector<Term> r = p.terms();
  std::vector<Term> q_desc;
  std::vector<ExpVec> d_monos(d.terms().size());
  for (std::size_t i = 0; i < d.terms().size(); ++i)
    d_monos[i] = d.terms()[i].mono;
  std::vector<ExpVec> shifted(d_monos.size());

  while (!r.empty()) {
    const Term& lt_r = r.back();
    if (!K.contains(lt_r.mono, lt_d.mono) ||
        !mpz_divisible_p(lt_r.coeff.get_mpz_t(), lt_d.coeff.get_mpz_t())) {
      Polynomial rem = Polynomial::from_terms(p.varset(), std::move(r));
      throw DivisibilityError("exact division left a non-zero remainder",
                              std::move(rem));
    }
    Term t;
    t.mono = mono_sub(lt_r.mono, lt_d.mono);
    mpz_divexact(t.coeff.get_mpz_t(), lt_r.coeff.get_mpz_t(),
                 lt_d.coeff.get_mpz_t());

    K.add_shift_many(d_monos.data(), d_monos.size(), t.mono, shifted.data());
    std::vector<Term> sub;
    sub.reserve(d_monos.size());
    for (std::size_t i = 0; i < d_monos.size(); ++i)
      sub.push_back(Term{shifted[i], Int(t.coeff * d.terms()[i].coeff)});
    r = merge_add(r, sub, true);
    q_desc.push_back(std::move(t));
  }
  std::reverse(q_desc.begin(), q_desc.end());
  Polynomial q = Polynomial::from_terms(p.varset(), std::move(q_desc));
  return q;
}

}  // namespace

Polynomial exact_divide(const Polynomial& p, const Polynomial& d) {
  check_compatible(p, d);
  if (d.is_zero()) throw StructuralError("exact_divide: division by zero");
  if (p.is_zero()) return p;

  const auto& K = active_kernels();
  if (d.num_terms() == 2) {
    const Term& lo = d.terms()[0];
    const Term& hi = d.terms()[1];
    const bool units = (hi.coeff == 1 && lo.coeff == -1) ||
                       (hi.coeff == -1 && lo.coeff == 1);
    if (units && K.total_degree(hi.mono) == 1 && K.total_degree(lo.mono) == 1) {
      int hi_lane = -1, lo_lane = -1;
      for (std::size_t i = 0; i < kMaxVars; ++i) {
        if (hi.mono.lanes[i]) hi_lane = static_cast<int>(i);
        if (lo.mono.lanes[i]) lo_lane = static_cast<int>(i);
      }
      Polynomial q = divide_synthetic(p, hi_lane, lo_lane);
      return hi.coeff == 1 ? q : -q;
    }
  }
  return divide_general(p, d);
}

Polynomial antisymmetrize(const Polynomial& p,
                          const std::vector<std::string>& vars) {
  const std::size_t k = vars.size();
  std::vector<int> lanes(k);
  for (std::size_t i = 0; i < k; ++i) {
    lanes[i] = p.varset()->find(vars[i]);
    if (lanes[i] < 0)
      throw StructuralError("antisymmetrize: unknown variable '" + vars[i] +
                            "'");
    for (std::size_t j = 0; j < i; ++j)
      if (lanes[j] == lanes[i])
        throw StructuralError("antisymmetrize: repeated variable '" + vars[i] +
                              "'");
  }
  if (k == 0 || p.is_zero()) return p;

  TermAccumulator acc(p.num_terms() * 2);
  std::vector<int> sigma(k);
  for (std::size_t i = 0; i < k; ++i) sigma[i] = static_cast<int>(i);
  do {
    const int sign = permutation_parity(sigma);
    for (const auto& t : p.terms()) {
      ExpVec e = t.mono;
      for (std::size_t i = 0; i < k; ++i)
        e.lanes[lanes[sigma[i]]] = t.mono.lanes[lanes[i]];
      if (sign > 0)
        acc.add(e, t.coeff);
      else
        acc.add(e, Int(-t.coeff));
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return acc.drain(p.varset());
}

Polynomial divided_difference(const Polynomial& p, const std::string& a,
                              const std::string& b) {
  const int la = p.varset()->find(a);
  const int lb = p.varset()->find(b);
  if (la < 0 || lb < 0 || la == lb)
    throw StructuralError("divided_difference: bad variable pair");
  std::vector<int> perm(p.varset()->size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  perm[la] = lb;
  perm[lb] = la;
  Polynomial diff = p - p.permute_lanes(perm);
  return divide_synthetic(diff, la, lb);
}

Polynomial substitute(const Polynomial& p, const VarSetPtr& target,
                      const std::map<std::string, Polynomial>& assignment) {
  if (!target) throw StructuralError("substitute: null target VarSet");
  const std::size_t nsrc = p.varset()->size();

  struct VarPlan {
    int id_lane = -1;                     // identity lane in target, or
    const Polynomial* poly = nullptr;     // assigned replacement
    std::vector<Polynomial> powers;       // powers[e] = poly^e
  };
  std::vector<VarPlan> plan(nsrc);
  for (std::size_t i = 0; i < nsrc; ++i) {
    const std::string& name = p.varset()->name(i);
    auto it = assignment.find(name);
    if (it != assignment.end()) {
      if (!same_varset(it->second.varset(), target))
        throw StructuralError("substitute: assignment for '" + name +
                              "' is not over the target VarSet");
      plan[i].poly = &it->second;
    } else {
      plan[i].id_lane = target->find(name);
      if (plan[i].id_lane < 0)
        throw StructuralError("substitute: variable '" + name +
                              "' unassigned and absent from target");
    }
  }
  for (std::size_t i = 0; i < nsrc; ++i) {
    if (!plan[i].poly) continue;
    const int dmax = p.degree_in(p.varset()->name(i));
    plan[i].powers.reserve(dmax + 1);
    plan[i].powers.push_back(Polynomial::constant(target, 1));
    for (int e = 1; e <= dmax; ++e)
      plan[i].powers.push_back(plan[i].powers.back() * *plan[i].poly);
  }

  const auto& K = active_kernels();
  TermAccumulator acc(p.num_terms() * 2);
  for (const auto& t : p.terms()) {
    ExpVec base = ExpVec::zero();
    Polynomial prod = Polynomial::constant(target, 1);
    bool any_poly = false;
    for (std::size_t i = 0; i < nsrc; ++i) {
      const unsigned e = t.mono.lanes[i];
      if (e == 0) continue;
      if (plan[i].id_lane >= 0) {
        base.lanes[plan[i].id_lane] =
            static_cast<std::uint16_t>(base.lanes[plan[i].id_lane] + e);
      } else {
        prod = prod * plan[i].powers[e];
        any_poly = true;
      }
    }
    if (!any_poly) {
      acc.add(base, t.coeff);
    } else {
      for (const auto& s : prod.terms()) {
        ExpVec key;
        K.add(s.mono, base, key);
        acc.add_mul(key, s.coeff, t.coeff);
      }
    }
  }
  return acc.drain(target);
}

std::vector<CoeffGroup> extract_coefficients(
    const Polynomial& p, const std::vector<std::string>& vars) {
  std::vector<int> lanes(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    lanes[i] = p.varset()->find(vars[i]);
    if (lanes[i] < 0)
      throw StructuralError("extract_coefficients: unknown variable '" +
                            vars[i] + "'");
  }
  std::vector<std::string> rest_names;
  std::vector<int> rest_lanes;
  for (std::size_t i = 0; i < p.varset()->size(); ++i) {
    if (std::find(lanes.begin(), lanes.end(), int(i)) == lanes.end()) {
      rest_names.push_back(p.varset()->name(i));
      rest_lanes.push_back(static_cast<int>(i));
    }
  }
  // extracting every variable leaves constant coefficients
  VarSetPtr rest = VarSet::make(rest_names);

  const auto& K = active_kernels();
  std::map<ExpVec, std::vector<Term>,
           bool (*)(const ExpVec&, const ExpVec&)>
      groups(+[](const ExpVec& a, const ExpVec& b) {
        return active_kernels().cmp_grlex(a, b) < 0;
      });
  (void)K;
  for (const auto& t : p.terms()) {
    ExpVec pat = ExpVec::zero();
    for (std::size_t i = 0; i < lanes.size(); ++i)
      pat.lanes[i] = t.mono.lanes[lanes[i]];
    ExpVec rem = ExpVec::zero();
    for (std::size_t i = 0; i < rest_lanes.size(); ++i)
      rem.lanes[i] = t.mono.lanes[rest_lanes[i]];
    groups[pat].push_back(Term{rem, t.coeff});
  }

  std::vector<CoeffGroup> out;
  out.reserve(groups.size());
  for (auto& [pat, terms] : groups) {
    CoeffGroup g{std::vector<int>(vars.size()),
                 Polynomial::from_terms(rest, std::move(terms))};
    for (std::size_t i = 0; i < vars.size(); ++i) g.pattern[i] = pat.lanes[i];
    out.push_back(std::move(g));
  }
  return out;
}

Polynomial vandermonde(const VarSetPtr& vs, const std::vector<std::string>& vars,
                       VandermondeOrientation o) {
  Polynomial prod = Polynomial::constant(vs, 1);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    for (std::size_t j = i + 1; j < vars.size(); ++j) {
      Polynomial xi = Polynomial::variable(vs, vars[i]);
      Polynomial xj = Polynomial::variable(vs, vars[j]);
      prod = prod * (o == VandermondeOrientation::LaterMinusEarlier ? xj - xi
                                                                    : xi - xj);
    }
  }
  return prod;
}

Polynomial divide_vandermonde(const Polynomial& p,
                              const std::vector<std::string>& vars,
                              VandermondeOrientation o) {
  Polynomial q = p;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    for (std::size_t j = i + 1; j < vars.size(); ++j) {
      Polynomial xi = Polynomial::variable(p.varset(), vars[i]);
      Polynomial xj = Polynomial::variable(p.varset(), vars[j]);
      q = exact_divide(
          q, o == VandermondeOrientation::LaterMinusEarlier ? xj - xi
                                                            : xi - xj);
    }
  }
  return q;
}

}  // namespace apoly
