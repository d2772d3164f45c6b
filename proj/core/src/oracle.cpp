#include "towog/oracle.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <tuple>
#include <utility>

namespace towog {

int MonomialOrder::compare(const std::vector<long long>& a, const std::vector<long long>& b) const {
  for (int k = 0; k < aux_vars; ++k)
    if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
  long long da = 0, db = 0;
  for (std::size_t k = aux_vars; k < a.size(); ++k) da += a[k];
  for (std::size_t k = aux_vars; k < b.size(); ++k) db += b[k];
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t k = a.size(); k-- > static_cast<std::size_t>(aux_vars);)
    if (a[k] != b[k]) return a[k] > b[k] ? -1 : 1;  // grevlex: larger trailing exponent loses
  return 0;
}

namespace {

long long total_degree(const std::vector<long long>& expo) {
  long long d = 0;
  for (long long x : expo) d += x;
  return d;
}

bool divides(const std::vector<long long>& a, const std::vector<long long>& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

void sort_and_combine(SparseBinomialPoly& f, const MonomialOrder& order) {
  std::sort(f.terms.begin(), f.terms.end(),
            [&](const SparseBinomialPoly::Term& x, const SparseBinomialPoly::Term& y) {
              return order.compare(x.expo, y.expo) > 0;
            });
  std::vector<SparseBinomialPoly::Term> merged;
  for (auto& t : f.terms) {
    if (!merged.empty() && merged.back().expo == t.expo)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
    if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
  }
  f.terms = std::move(merged);
}

void make_monic(SparseBinomialPoly& f) {
  if (f.is_zero() || f.terms[0].coeff == 1) return;
  Rat lc = f.terms[0].coeff;
  for (auto& t : f.terms) t.coeff /= lc;
}

/// f -= c * x^shift * g, keeping f sorted.
void submul(SparseBinomialPoly& f, const Rat& c, const std::vector<long long>& shift,
            const SparseBinomialPoly& g, const MonomialOrder& order) {
  for (const auto& t : g.terms) {
    SparseBinomialPoly::Term nt;
    nt.expo.resize(t.expo.size());
    for (std::size_t k = 0; k < t.expo.size(); ++k) nt.expo[k] = t.expo[k] + shift[k];
    nt.coeff = -c * t.coeff;
    f.terms.push_back(std::move(nt));
  }
  sort_and_combine(f, order);
}

void check_degree(const SparseBinomialPoly& f, long max_degree) {
  for (const auto& t : f.terms)
    if (total_degree(t.expo) > max_degree)
      fail(errc::budget_exceeded, "monomial degree exceeds the oracle budget");
}

void assert_pure_difference(const SparseBinomialPoly& f) {
  if (f.is_zero()) return;
  bool ok = f.terms.size() == 2 && f.terms[0].coeff == 1 && f.terms[1].coeff == -1;
  if (!ok)
    fail(errc::internal_assertion,
         "reduction left the pure-binomial form; the engine has a bug");
}

}  // namespace

SparseBinomialPoly s_polynomial(const SparseBinomialPoly& f, const SparseBinomialPoly& g,
                                const MonomialOrder& order) {
  const auto& lf = f.terms[0].expo;
  const auto& lg = g.terms[0].expo;
  std::vector<long long> shift_f(lf.size()), shift_g(lf.size());
  for (std::size_t k = 0; k < lf.size(); ++k) {
    long long l = std::max(lf[k], lg[k]);
    shift_f[k] = l - lf[k];
    shift_g[k] = l - lg[k];
  }
  SparseBinomialPoly s;
  submul(s, Rat(-1) / f.terms[0].coeff, shift_f, f, order);
  submul(s, Rat(1) / g.terms[0].coeff, shift_g, g, order);
  return s;
}

SparseBinomialPoly reduce(const SparseBinomialPoly& f, const std::vector<SparseBinomialPoly>& g,
                          const MonomialOrder& order) {
  SparseBinomialPoly work = f;
  sort_and_combine(work, order);
  SparseBinomialPoly result;
  while (!work.is_zero()) {
    const auto lead = work.terms[0];
    const SparseBinomialPoly* divisor = nullptr;
    for (const auto& cand : g)
      if (!cand.is_zero() && divides(cand.terms[0].expo, lead.expo)) {
        divisor = &cand;
        break;
      }
    if (divisor == nullptr) {
      result.terms.push_back(lead);
      work.terms.erase(work.terms.begin());
      continue;
    }
    std::vector<long long> shift(lead.expo.size());
    for (std::size_t k = 0; k < shift.size(); ++k)
      shift[k] = lead.expo[k] - divisor->terms[0].expo[k];
    submul(work, lead.coeff / divisor->terms[0].coeff, shift, *divisor, order);
  }
  return result;
}

namespace {

bool same_poly(const SparseBinomialPoly& a, const SparseBinomialPoly& b) {
  return a.terms.size() == b.terms.size() &&
         std::equal(a.terms.begin(), a.terms.end(), b.terms.begin(),
                    [](const SparseBinomialPoly::Term& x, const SparseBinomialPoly::Term& y) {
                      return x.expo == y.expo && x.coeff == y.coeff;
                    });
}

}  // namespace

GroebnerResult buchberger(std::vector<SparseBinomialPoly> gens, const MonomialOrder& order,
                          const OracleBudget& budget) {
  std::vector<SparseBinomialPoly> basis;
  for (auto& f : gens) {
    sort_and_combine(f, order);
    check_degree(f, budget.max_degree);
    if (!f.is_zero()) {
      make_monic(f);
      basis.push_back(std::move(f));
    }
  }

  using PairKey = std::tuple<long long, std::size_t, std::size_t>;  // lcm degree, i, j
  std::set<PairKey> pairs;
  auto lcm_degree = [&](std::size_t i, std::size_t j) {
    long long d = 0;
    const auto& a = basis[i].terms[0].expo;
    const auto& b = basis[j].terms[0].expo;
    for (std::size_t k = 0; k < a.size(); ++k) d += std::max(a[k], b[k]);
    return d;
  };
  auto coprime_leads = [&](std::size_t i, std::size_t j) {
    const auto& a = basis[i].terms[0].expo;
    const auto& b = basis[j].terms[0].expo;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k] > 0 && b[k] > 0) return false;
    return true;
  };
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.insert({lcm_degree(i, j), i, j});

  bool truncated = false;
  long reductions = 0;
  while (!pairs.empty()) {
    auto [deg, i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    if (deg > budget.max_degree) {
      truncated = true;
      continue;
    }
    if (coprime_leads(i, j)) continue;  // such S-polynomials reduce to zero
    if (++reductions > budget.max_spairs) {
      truncated = true;
      break;
    }
    SparseBinomialPoly h;
    try {
      SparseBinomialPoly s = s_polynomial(basis[i], basis[j], order);
      check_degree(s, budget.max_degree);
      h = reduce(s, basis, order);
      check_degree(h, budget.max_degree);
    } catch (const Error& e) {
      if (e.code() != errc::budget_exceeded) throw;
      truncated = true;
      continue;
    }
    if (h.is_zero()) continue;
    make_monic(h);
    assert_pure_difference(h);
    basis.push_back(std::move(h));
    std::size_t n = basis.size() - 1;
    for (std::size_t k = 0; k < n; ++k) pairs.insert({lcm_degree(k, n), k, n});
  }

  if (!truncated) {
    // Inter-reduce to the unique reduced basis.
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        SparseBinomialPoly self = std::move(basis[i]);
        basis[i] = SparseBinomialPoly{};  // excluded while reducing itself
        SparseBinomialPoly h = reduce(self, basis, order);
        if (!h.is_zero()) {
          make_monic(h);
          assert_pure_difference(h);
        }
        if (!same_poly(h, self)) changed = true;
        basis[i] = std::move(h);
      }
      basis.erase(std::remove_if(basis.begin(), basis.end(),
                                 [](const SparseBinomialPoly& f) { return f.is_zero(); }),
                  basis.end());
    }
  }
  std::sort(basis.begin(), basis.end(),
            [&](const SparseBinomialPoly& x, const SparseBinomialPoly& y) {
              return order.compare(x.terms[0].expo, y.terms[0].expo) < 0;
            });
  return {std::move(basis), !truncated};
}

namespace {

bool fits_ll(const Int& x) { return x.fits_slong_p(); }

/// Binomial -> engine polynomial with `aux` leading zero exponents.
SparseBinomialPoly to_poly(const Binomial& f, int aux, long max_degree) {
  SparseBinomialPoly p;
  SparseBinomialPoly::Term tp, tm;
  tp.expo.assign(aux + f.plus.size(), 0);
  tm.expo.assign(aux + f.minus.size(), 0);
  for (std::size_t k = 0; k < f.plus.size(); ++k) {
    if (!fits_ll(f.plus[k]) || !fits_ll(f.minus[k]))
      fail(errc::budget_exceeded, "binomial exponent too large for the oracle engine");
    tp.expo[aux + k] = f.plus[k].get_si();
    tm.expo[aux + k] = f.minus[k].get_si();
  }
  tp.coeff = 1;
  tm.coeff = -1;
  p.terms = {std::move(tp), std::move(tm)};
  if (total_degree(p.terms[0].expo) > max_degree || total_degree(p.terms[1].expo) > max_degree)
    fail(errc::budget_exceeded, "binomial degree exceeds the oracle budget");
  return p;
}

/// Engine polynomial (pure difference, t-free) -> canonical Binomial over mu
/// edges. Common monomial factors are stripped; the ideal is saturated, so
/// the cofactor stays a member.
Binomial to_binomial(const SparseBinomialPoly& p, int aux, std::size_t mu) {
  Binomial f;
  f.plus.assign(mu, 0);
  f.minus.assign(mu, 0);
  const auto& le = p.terms[0].expo;
  const auto& te = p.terms[1].expo;
  for (std::size_t k = 0; k < mu; ++k) {
    long long common = std::min(le[aux + k], te[aux + k]);
    f.plus[k] = static_cast<long>(le[aux + k] - common);
    f.minus[k] = static_cast<long>(te[aux + k] - common);
  }
  for (std::size_t k = 0; k < mu; ++k) {
    if (f.plus[k] == 0 && f.minus[k] == 0) continue;
    if (f.plus[k] == 0) f = f.negated();
    break;
  }
  return f;
}

int compare_int_vectors_grevlex(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int da = 0, db = 0;
  for (const Int& x : a) da += x;
  for (const Int& x : b) db += x;
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t k = a.size(); k-- > 0;)
    if (a[k] != b[k]) return a[k] > b[k] ? -1 : 1;
  return 0;
}

}  // namespace

bool binomial_order_less(const Binomial& a, const Binomial& b) {
  Int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  int c = compare_int_vectors_grevlex(a.plus, b.plus);
  if (c != 0) return c > 0;  // larger plus monomial first within a degree
  return compare_int_vectors_grevlex(a.minus, b.minus) > 0;
}

std::vector<Binomial> lattice_ideal_generators(const IncidenceMatrix& a) {
  const std::size_t nu = a.matrix.rows(), mu = a.matrix.cols();
  // Unimodular row reduction of [A^T | I]; rows with zero left block carry a
  // basis of the saturated integer kernel lattice.
  IntMatrix m(mu, nu + mu);
  for (std::size_t r = 0; r < mu; ++r) {
    for (std::size_t c = 0; c < nu; ++c) m(r, c) = a.matrix(c, r);
    m(r, nu + r) = 1;
  }
  std::size_t piv = 0;
  for (std::size_t c = 0; c < nu && piv < mu; ++c) {
    while (true) {
      std::vector<std::size_t> nz;
      for (std::size_t r = piv; r < mu; ++r)
        if (m(r, c) != 0) nz.push_back(r);
      if (nz.empty() || nz.size() == 1) break;
      std::size_t r0 = nz[0];
      for (std::size_t r : nz) {
        Int candidate = abs(m(r, c));
        Int best = abs(m(r0, c));
        if (candidate < best) r0 = r;
      }
      for (std::size_t r : nz) {
        if (r == r0) continue;
        Int q = m(r, c) / m(r0, c);  // truncated toward zero
        if (q != 0)
          for (std::size_t k = 0; k < nu + mu; ++k) m(r, k) -= q * m(r0, k);
      }
    }
    std::size_t hit = mu;
    for (std::size_t r = piv; r < mu; ++r)
      if (m(r, c) != 0) {
        hit = r;
        break;
      }
    if (hit == mu) continue;
    if (hit != piv)
      for (std::size_t k = 0; k < nu + mu; ++k) std::swap(m(piv, k), m(hit, k));
    ++piv;
  }
  std::vector<Binomial> out;
  for (std::size_t r = piv; r < mu; ++r) {
    std::vector<Int> u(mu);
    for (std::size_t k = 0; k < mu; ++k) u[k] = m(r, nu + k);
    out.push_back(kernel_vector_to_binomial(a, u));
  }
  std::sort(out.begin(), out.end(), binomial_order_less);
  return out;
}

SaturationResult saturate_markov_basis(const IncidenceMatrix& a, const OracleBudget& budget) {
  std::vector<Binomial> lattice = lattice_ideal_generators(a);
  if (lattice.empty()) return {{}, true};
  const std::size_t mu = a.matrix.cols();
  const int aux = 1;
  MonomialOrder order{aux};

  std::vector<SparseBinomialPoly> gens;
  try {
    for (const Binomial& f : lattice) gens.push_back(to_poly(f, aux, budget.max_degree));
  } catch (const Error& e) {
    if (e.code() != errc::budget_exceeded) throw;
    return {std::move(lattice), false};
  }
  SparseBinomialPoly sat;
  {
    SparseBinomialPoly::Term tp, tm;
    tp.expo.assign(aux + mu, 1);  // t * e_1 ... e_mu
    tm.expo.assign(aux + mu, 0);
    tp.coeff = 1;
    tm.coeff = -1;
    sat.terms = {std::move(tp), std::move(tm)};
  }
  gens.push_back(std::move(sat));

  GroebnerResult gb = buchberger(std::move(gens), order, budget);
  std::vector<Binomial> elim;
  for (const SparseBinomialPoly& p : gb.basis) {
    bool t_free = true;
    for (const auto& t : p.terms)
      if (t.expo[0] != 0) t_free = false;
    if (t_free) elim.push_back(to_binomial(p, aux, mu));
  }
  if (!gb.complete) {
    std::sort(elim.begin(), elim.end(), binomial_order_less);
    return {std::move(elim), false};
  }
  try {
    std::vector<Binomial> minimal = minimalize(elim, a, budget);
    std::sort(minimal.begin(), minimal.end(), binomial_order_less);
    return {std::move(minimal), true};
  } catch (const Error& e) {
    if (e.code() != errc::budget_exceeded) throw;
    std::sort(elim.begin(), elim.end(), binomial_order_less);
    return {std::move(elim), false};
  }
}

std::vector<Binomial> minimalize(const std::vector<Binomial>& basis, const IncidenceMatrix& a,
                                 const OracleBudget& budget) {
  for (const Binomial& f : basis) {
    std::vector<Int> u(f.plus.size());
    for (std::size_t k = 0; k < u.size(); ++k) u[k] = f.plus[k] - f.minus[k];
    for (const Int& y : mat_vec(a.matrix, u))
      if (y != 0) fail(errc::not_in_kernel, "minimalize: element is not in the kernel");
  }
  // Positive grading by the total phi-degree; generators are homogeneous in
  // it, so ascending greedy extraction plus a fixpoint sweep is sound.
  auto phi_degree = [&](const Binomial& f) {
    Int d = 0;
    for (const Int& y : mat_vec(a.matrix, f.plus)) d += y;
    return d;
  };
  std::vector<Binomial> sorted = basis;
  std::sort(sorted.begin(), sorted.end(), [&](const Binomial& x, const Binomial& y) {
    Int dx = phi_degree(x), dy = phi_degree(y);
    if (dx != dy) return dx < dy;
    return binomial_order_less(x, y);
  });
  std::vector<Binomial> kept;
  for (const Binomial& f : sorted) {
    if (!kept.empty() && verify_membership(f, kept, budget)) continue;
    kept.push_back(f);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      std::vector<Binomial> others;
      for (std::size_t j = 0; j < kept.size(); ++j)
        if (j != i) others.push_back(kept[j]);
      if (!others.empty() && verify_membership(kept[i], others, budget)) {
        kept.erase(kept.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
  }
  return kept;
}

bool verify_membership(const Binomial& f, const std::vector<Binomial>& basis,
                       const OracleBudget& budget) {
  if (basis.empty()) return false;
  MonomialOrder order{0};
  std::vector<SparseBinomialPoly> gens;
  for (const Binomial& b : basis) gens.push_back(to_poly(b, 0, budget.max_degree));
  GroebnerResult gb = buchberger(std::move(gens), order, budget);
  if (!gb.complete)
    fail(errc::budget_exceeded, "membership test: Groebner closure exceeded the budget");
  SparseBinomialPoly p = to_poly(f, 0, budget.max_degree);
  return reduce(p, gb.basis, order).is_zero();
}

}  // namespace towog
