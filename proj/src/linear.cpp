#include "geomkit/linear.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace geomkit {

RVector ParamSolution::at(std::span<const Rational> t) const {
  if (t.size() != basis.size()) throw std::invalid_argument("parameter count mismatch");
  RVector x = particular;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (t[i].is_zero()) continue;
    for (std::size_t j = 0; j < x.size(); ++j)
      if (!basis[i][j].is_zero()) x[j] += t[i] * basis[i][j];
  }
  return x;
}

LinearResult solve_linear_exact(const RMatrix& rows, const RVector& rhs, std::vector<std::string> names) {
  const std::size_t m = rows.size();
  if (rhs.size() != m) throw std::invalid_argument("rhs size does not match row count");
  const std::size_t n = m == 0 ? names.size() : rows.front().size();
  for (const auto& r : rows)
    if (r.size() != n) throw std::invalid_argument("ragged matrix");
  if (names.empty()) {
    for (std::size_t j = 0; j < n; ++j) names.push_back("x" + std::to_string(j));
  } else if (names.size() != n) {
    throw std::invalid_argument("variable name count does not match column count");
  }

  RMatrix a = rows;
  RVector b = rhs;
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a[p][c].is_zero()) ++p;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const Rational inv = Rational(1) / a[r][c];
    for (std::size_t j = c; j < n; ++j)
      if (!a[r][j].is_zero()) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < n; ++j)
        if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (!b[i].is_zero())
      return Infeasible{"inconsistent system: rank of augmented matrix exceeds rank of matrix"};

  ParamSolution sol;
  sol.names = std::move(names);
  sol.particular.assign(n, Rational(0));
  std::vector<bool> is_pivot(n, false);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
    is_pivot[pivot_cols[i]] = true;
    sol.particular[pivot_cols[i]] = b[i];
  }
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RVector v(n, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a[i][f];
    sol.basis.push_back(std::move(v));
  }
  return sol;
}

bool satisfies(const RMatrix& rows, const RVector& rhs, std::span<const Rational> x) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Rational acc;
    for (std::size_t j = 0; j < x.size(); ++j)
      if (!rows[i][j].is_zero()) acc += rows[i][j] * x[j];
    if (acc != rhs[i]) return false;
  }
  return true;
}

Rational AffineForm::eval(std::span<const Rational> t) const {
  Rational acc = constant;
  for (std::size_t i = 0; i < coef.size(); ++i)
    if (!coef[i].is_zero()) acc += coef[i] * t[i];
  return acc;
}

bool AffineForm::is_constant() const {
  return std::all_of(coef.begin(), coef.end(), [](const Rational& c) { return c.is_zero(); });
}

AffineForm coordinate_form(const ParamSolution& sol, std::size_t var) {
  AffineForm f;
  f.constant = sol.particular.at(var);
  f.coef.reserve(sol.dimension());
  for (const auto& b : sol.basis) f.coef.push_back(b[var]);
  return f;
}

namespace {

// Scales a constraint so its last nonzero coefficient has magnitude 1.
AffineForm normalized(AffineForm f) {
  for (std::size_t i = f.coef.size(); i-- > 0;) {
    if (f.coef[i].is_zero()) continue;
    const Rational s = Rational(1) / f.coef[i].abs();
    for (auto& c : f.coef) c *= s;
    f.constant *= s;
    break;
  }
  return f;
}

// Keeps the tightest constraint per coefficient vector. Returns false when a
// constant constraint c > 0 fails.
bool insert_constraint(std::map<RVector, Rational>& set, AffineForm f) {
  f = normalized(std::move(f));
  if (f.is_constant()) return f.constant.sign() > 0;
  auto [it, inserted] = set.try_emplace(f.coef, f.constant);
  if (!inserted && f.constant < it->second) it->second = f.constant;
  return true;
}

Rational random_fraction(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> d(1, 1023);
  return Rational(d(rng), 1024);
}

}  // namespace

StrictRegion::StrictRegion(std::size_t dimension, std::vector<AffineForm> constraints,
                           std::size_t constraint_cap)
    : dim_(dimension), levels_(dimension + 1) {
  std::map<RVector, Rational> current;
  for (auto& c : constraints) {
    if (c.coef.size() != dim_) throw std::invalid_argument("constraint dimension mismatch");
    if (!insert_constraint(current, std::move(c))) {
      empty_ = true;
      return;
    }
  }
  for (std::size_t k = dim_; k-- > 0;) {
    auto& level = levels_[k + 1];
    level.reserve(current.size());
    for (auto& [coef, constant] : current) level.push_back(AffineForm{coef, constant});

    std::map<RVector, Rational> next;
    std::vector<const AffineForm*> pos, neg;
    for (const auto& f : level) {
      const int s = f.coef[k].sign();
      if (s > 0) {
        pos.push_back(&f);
      } else if (s < 0) {
        neg.push_back(&f);
      } else {
        AffineForm g = f;
        g.coef.resize(k);
        if (!insert_constraint(next, std::move(g))) {
          empty_ = true;
          return;
        }
      }
    }
    if (pos.size() * neg.size() > constraint_cap) {
      decided_ = false;
      return;
    }
    // Normalised forms have coefficient +-1 on the eliminated variable (it is
    // the last one), so the combination is a plain sum.
    for (const AffineForm* p : pos) {
      for (const AffineForm* q : neg) {
        AffineForm g;
        g.coef.resize(k);
        for (std::size_t i = 0; i < k; ++i) g.coef[i] = p->coef[i] + q->coef[i];
        g.constant = p->constant + q->constant;
        if (!insert_constraint(next, std::move(g))) {
          empty_ = true;
          return;
        }
      }
    }
    current = std::move(next);
    if (current.size() > constraint_cap) {
      decided_ = false;
      return;
    }
  }
  // Remaining constraints at level 0 are constants and were checked on insert.
}

RVector StrictRegion::interior_point() const { return back_substitute(nullptr); }

RVector StrictRegion::sample(std::mt19937_64& rng) const { return back_substitute(&rng); }

RVector StrictRegion::back_substitute(std::mt19937_64* rng) const {
  if (!decided_ || empty_) throw std::logic_error("region has no certified interior point");
  RVector t;
  t.reserve(dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    std::optional<Rational> lo, hi;
    for (const auto& f : levels_[k + 1]) {
      const Rational& a = f.coef[k];
      if (a.is_zero()) continue;
      Rational rest = f.constant;
      for (std::size_t i = 0; i < k; ++i)
        if (!f.coef[i].is_zero()) rest += f.coef[i] * t[i];
      const Rational bound = -rest / a;
      if (a.sign() > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    Rational v;
    if (lo && hi) {
      const Rational frac = rng ? random_fraction(*rng) : Rational(1, 2);
      v = *lo + (*hi - *lo) * frac;
    } else if (lo) {
      v = *lo + (rng ? random_fraction(*rng) * 2 : Rational(1));
    } else if (hi) {
      v = *hi - (rng ? random_fraction(*rng) * 2 : Rational(1));
    } else {
      v = rng ? random_fraction(*rng) * 2 - 1 : Rational(0);
    }
    t.push_back(std::move(v));
  }
  return t;
}

PositivePoint positive_point(const ParamSolution& sol, std::span<const std::size_t> strict_positive_vars,
                             const PositivePointOptions& opts) {
  PositivePoint out;
  if (sol.dimension() > opts.max_dimension) {
    out.status = PositiveStatus::Unsupported;
    return out;
  }
  std::vector<AffineForm> forms;
  forms.reserve(strict_positive_vars.size());
  for (std::size_t v : strict_positive_vars) forms.push_back(coordinate_form(sol, v));

  StrictRegion region(sol.dimension(), forms);
  if (region.decided()) {
    if (region.empty()) {
      out.status = PositiveStatus::Empty;
      return out;
    }
    out.status = PositiveStatus::Found;
    out.params = region.interior_point();
    out.point = sol.at(out.params);
    return out;
  }

  // Elimination blew up: fall back to random rational sampling (no certificate).
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<long long> num(-4096, 4096);
  std::uniform_int_distribution<long long> den(1, 64);
  for (std::size_t attempt = 0; attempt < opts.random_attempts; ++attempt) {
    RVector t;
    for (std::size_t i = 0; i < sol.dimension(); ++i) t.emplace_back(num(rng), den(rng));
    const bool ok = std::all_of(forms.begin(), forms.end(),
                                [&](const AffineForm& f) { return f.eval(t).sign() > 0; });
    if (ok) {
      out.status = PositiveStatus::Found;
      out.point = sol.at(t);
      out.params = std::move(t);
      return out;
    }
  }
  out.status = PositiveStatus::NotFound;
  return out;
}

}  // namespace geomkit
