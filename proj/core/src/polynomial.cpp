#include "koszulcat/polynomial.hpp"

#include <algorithm>

#include "koszulcat/errors.hpp"

namespace koszulcat {

namespace {

void monomials_of_degree(std::size_t n, int d, MultiIndex& cur, std::size_t pos, std::vector<MultiIndex>& out) {
  if (pos + 1 == n) {
    cur[pos] = d;
    out.push_back(cur);
    return;
  }
  for (int k = d; k >= 0; --k) {
    cur[pos] = k;
    monomials_of_degree(n, d - k, cur, pos + 1, out);
  }
  cur[pos] = 0;
}

int degree_of(const MultiIndex& e) {
  int d = 0;
  for (int k : e) d += k;
  return d;
}

// The pairing-multiplicativity identity f_{x◇y} P = P' (f_x ⊗ f_y) on every pair of objects.
bool multiplicative(const MonoidData& from, const MonoidData& to, const ObjectMaps& f) {
  const auto& c = from.cat();
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    for (std::size_t y = 0; y < c.num_objects(); ++y) {
      if (f[c.diamond(x, y)] * from.pairing_at(x, y) != to.pairing_at(x, y) * kronecker(f[x], f[y])) return false;
    }
  }
  return true;
}

bool degree_preserving(const Representation& from, const Representation& to, const ObjectMaps& f) {
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (!is_homogeneous(f[x], from.degrees[x], to.degrees[x])) return false;
  }
  return true;
}

}  // namespace

std::vector<MultiIndex> graded_monomials(std::size_t n, int cap) {
  std::vector<MultiIndex> out;
  if (n == 0) return {MultiIndex{}};
  MultiIndex cur(n, 0);
  for (int d = 0; d <= cap; ++d) monomials_of_degree(n, d, cur, 0, out);
  return out;
}

std::size_t monomial_count(std::size_t n, int d) {
  if (d < 0) return 0;
  if (n == 0) return d == 0 ? 1 : 0;
  // C(n+d-1, d) computed incrementally; exact at every step.
  std::size_t r = 1;
  for (int k = 1; k <= d; ++k) r = r * (n - 1 + static_cast<std::size_t>(k)) / static_cast<std::size_t>(k);
  return r;
}

std::string monomial_name(const MultiIndex& e, const std::vector<std::string>& variables) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += " ";
    out += variables[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::size_t PolynomialMonoid::monomial_index(const MultiIndex& e) const {
  const auto it = lookup_.find(e);
  return it == lookup_.end() ? npos : it->second;
}

PolynomialMonoid polynomial_monoid(const MonoidPtr& a, std::size_t n, int cap, std::vector<std::string> variables) {
  if (a->carrier.cap != kUncapped || a->truncated) {
    throw PreconditionError("the base of a polynomial monoid must not be truncated");
  }
  if (cap < 0) throw RangeError("polynomial monoids need a degree cap >= 0");
  if (variables.empty()) {
    if (n == 1) variables = {"t"};
    for (std::size_t i = 0; n > 1 && i < n; ++i) variables.push_back("t" + std::to_string(i + 1));
  }
  if (variables.size() != n) throw DimensionMismatch("one name per variable expected");

  PolynomialMonoid g;
  g.base = a;
  g.variables = std::move(variables);
  g.cap = cap;
  g.monomials = graded_monomials(n, cap);
  for (std::size_t i = 0; i < g.monomials.size(); ++i) g.lookup_[g.monomials[i]] = i;
  if (n == 0) {
    g.monoid = a;
    return g;
  }

  const auto& c = a->cat();
  const Field& f = c.field;
  const std::size_t nc = c.num_objects(), k = g.monomials.size();
  const Representation& ar = a->carrier;
  auto m = std::make_shared<MonoidData>();
  m->name = a->name + "[";
  for (std::size_t i = 0; i < n; ++i) m->name += (i ? "," : "") + g.variables[i];
  m->name += "]";
  m->truncated = true;
  Representation& r = m->carrier;
  r.cat = ar.cat;
  r.cap = cap;
  r.dims.resize(nc);
  r.degrees.resize(nc);
  r.names.resize(nc);
  r.actions.resize(nc * nc);
  const bool scalar_base = [&] {
    for (std::size_t x = 0; x < nc; ++x) {
      if (ar.dims[x] > 1) return false;
    }
    return true;
  }();
  for (std::size_t x = 0; x < nc; ++x) {
    r.dims[x] = k * ar.dims[x];
    for (const auto& mono : g.monomials) {
      const std::string mn = monomial_name(mono, g.variables);
      for (std::size_t i = 0; i < ar.dims[x]; ++i) {
        r.degrees[x].push_back(degree_of(mono) + ar.degrees[x][i]);
        if (scalar_base && x == c.unit) {
          r.names[x].push_back(mn);
        } else {
          r.names[x].push_back(mn == "1" ? ar.basis_name(x, i) : ar.basis_name(x, i) + "·" + mn);
        }
      }
    }
  }
  const Matrix ik = Matrix::identity(f, k);
  for (std::size_t p = 0; p < nc * nc; ++p) {
    for (const Matrix& act : ar.actions[p]) r.actions[p].push_back(kronecker(ik, act));
  }

  // Products of monomials, -1 when above the cap.
  std::vector<std::vector<std::size_t>> mono_product(k, std::vector<std::size_t>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      MultiIndex e(n);
      for (std::size_t v = 0; v < n; ++v) e[v] = g.monomials[i][v] + g.monomials[j][v];
      mono_product[i][j] = g.monomial_index(e);
    }
  }
  m->pairing.resize(nc * nc);
  for (std::size_t x = 0; x < nc; ++x) {
    for (std::size_t y = 0; y < nc; ++y) {
      const std::size_t dx = ar.dims[x], dy = ar.dims[y], dxy = ar.dims[c.diamond(x, y)];
      const Matrix pt = a->pairing_at(x, y).transpose();
      MatrixBuilder b(f, k * dxy, k * dx * k * dy);
      for (std::size_t m1 = 0; m1 < k; ++m1) {
        for (std::size_t m2 = 0; m2 < k; ++m2) {
          const std::size_t m12 = mono_product[m1][m2];
          if (m12 == PolynomialMonoid::npos) continue;
          for (std::size_t i = 0; i < dx; ++i) {
            for (std::size_t j = 0; j < dy; ++j) {
              const std::size_t col = (m1 * dx + i) * (k * dy) + m2 * dy + j;
              for (const auto& e : pt.row(i * dy + j)) b.add(m12 * dxy + e.col, col, e.value);
            }
          }
        }
      }
      m->pairing[c.pair(x, y)] = b.build();
    }
  }
  m->unit = kronecker(Matrix::unit_vector(f, k, 0), a->unit);
  g.monoid = std::move(m);
  return g;
}

ElementRef variable_element(const PolynomialMonoid& g, std::size_t i) {
  if (i >= g.num_variables()) {
    throw RangeError("variable index " + std::to_string(i + 1) + " out of range 1.." +
                     std::to_string(g.num_variables()));
  }
  MultiIndex e(g.num_variables(), 0);
  e[i] = 1;
  const std::size_t mi = g.monomial_index(e);
  if (mi == PolynomialMonoid::npos) throw RangeError("variables do not fit below the degree cap");
  const Field& f = g.base->field();
  ElementRef out{g.base->cat().unit, kronecker(Matrix::unit_vector(f, g.monomials.size(), mi), g.base->unit)};
  if (!is_central(*g.monoid, out)) throw NotCentral("variable " + g.variables[i] + " is not central");
  return out;
}

MonoidMorphism base_inclusion(const PolynomialMonoid& g) {
  const Field& f = g.base->field();
  MonoidMorphism out{g.base, g.monoid, {}};
  for (std::size_t x = 0; x < g.base->cat().num_objects(); ++x) {
    out.maps.push_back(kronecker(Matrix::unit_vector(f, g.monomials.size(), 0),
                                 Matrix::identity(f, g.base->carrier.dims[x])));
  }
  return out;
}

MonoidMorphism substitution_morphism(const PolynomialMonoid& source, const PolynomialMonoid& target,
                                     const std::vector<ElementRef>& images) {
  if (source.base.get() != target.base.get()) {
    throw PreconditionError("substitution needs polynomial monoids over the same base");
  }
  if (images.size() != source.num_variables()) throw DimensionMismatch("one image per variable expected");
  const MonoidData& t = *target.monoid;
  const auto& c = t.cat();
  const Field& f = c.field;
  const std::size_t u = c.unit;
  for (const auto& img : images) {
    if (img.object != u) throw WrongObject("substituted values must lie in the unit object");
  }
  if (source.num_variables() == 0) {
    return base_inclusion(target);
  }
  // Powers img^m for every monomial of the source, built along the grlex order.
  std::vector<Matrix> power(source.monomials.size());
  power[0] = t.unit;
  for (std::size_t mi = 1; mi < source.monomials.size(); ++mi) {
    MultiIndex e = source.monomials[mi];
    std::size_t v = 0;
    while (e[v] == 0) ++v;
    --e[v];
    power[mi] = t.multiply(u, power[source.monomial_index(e)], u, images[v].coords);
  }
  const std::size_t kt = target.monomials.size();
  MonoidMorphism out{source.monoid, target.monoid, {}};
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    const std::size_t dx = source.base->carrier.dims[x];
    const Matrix embed = kronecker(Matrix::unit_vector(f, kt, 0), Matrix::identity(f, dx));
    std::vector<Matrix> blocks;
    for (std::size_t mi = 0; mi < source.monomials.size(); ++mi) {
      // a ↦ (a t^0) × img^m for every basis a of A(x).
      blocks.push_back(t.pairing_at(x, u) * kronecker(embed, power[mi]));
    }
    out.maps.push_back(Matrix::hstack(blocks));
  }
  return out;
}

MergedPolynomial merge_variables(const PolynomialMonoid& c, const PolynomialMonoid& d, const MonoidPtr& e,
                                 const std::vector<Matrix>& witness, const Exec& exec) {
  const auto& cat = e->cat();
  const Field& f = cat.field;
  const std::size_t nc = cat.num_objects();
  const MonoidData &cb = *c.base, &db = *d.base;
  MergedPolynomial out;
  out.certificate.statement = c.monoid->name + " ⊗ " + d.monoid->name + " is isomorphic to a polynomial monoid over " +
                              e->name;

  const TensorMonoid base_tensor = tensor_monoid(cb, db, kInheritCap, exec);
  const ObjectMaps w = day_induced_map(base_tensor.day, e->carrier, witness);
  const Certificate wiso = certify_natural_iso(base_tensor.monoid.carrier, e->carrier, w, "witness");
  for (const auto& ch : wiso.checks) out.certificate.add("witness " + ch.name, ch.pass, ch.detail);
  if (!wiso.pass()) throw IsoFailure("witness " + cb.name + " ⊗ " + db.name + " -> " + e->name + " is not an isomorphism");
  out.certificate.add("witness is multiplicative", multiplicative(base_tensor.monoid, *e, w));
  out.certificate.add("witness preserves the unit", w[cat.unit] * base_tensor.monoid.unit == e->unit);

  std::vector<std::string> vars = c.variables;
  vars.insert(vars.end(), d.variables.begin(), d.variables.end());
  out.merged = polynomial_monoid(e, vars.size(), std::min(c.cap, d.cap), vars);
  out.tensor = tensor_monoid(*c.monoid, *d.monoid, kInheritCap, exec);
  const PolynomialMonoid& mg = out.merged;
  const Representation& target = mg.monoid->carrier;

  // (a u^i) ⊗ (b v^j) ↦ witness(a ⊗ b) u^i v^j.
  const std::size_t kc = c.monomials.size(), kd = d.monomials.size();
  std::vector<Matrix> beta(nc * nc);
  for (std::size_t y = 0; y < nc; ++y) {
    for (std::size_t z = 0; z < nc; ++z) {
      const std::size_t yz = cat.diamond(y, z);
      const std::size_t cy = cb.carrier.dims[y], dz = db.carrier.dims[z], eyz = e->carrier.dims[yz];
      const Matrix wt = witness[cat.pair(y, z)].transpose();
      MatrixBuilder b(f, target.dims[yz], kc * cy * kd * dz);
      for (std::size_t m1 = 0; m1 < kc; ++m1) {
        for (std::size_t m2 = 0; m2 < kd; ++m2) {
          MultiIndex mono = c.monomials[m1];
          mono.insert(mono.end(), d.monomials[m2].begin(), d.monomials[m2].end());
          const std::size_t mi = mg.monomial_index(mono);
          if (mi == PolynomialMonoid::npos) continue;
          for (std::size_t a = 0; a < cy; ++a) {
            for (std::size_t bb = 0; bb < dz; ++bb) {
              const std::size_t col = (m1 * cy + a) * (kd * dz) + m2 * dz + bb;
              for (const auto& en : wt.row(a * dz + bb)) b.add(mi * eyz + en.col, col, en.value);
            }
          }
        }
      }
      beta[cat.pair(y, z)] = b.build();
    }
  }
  out.phi = day_induced_map(out.tensor.day, target, beta);
  const Certificate piso = certify_natural_iso(out.tensor.monoid.carrier, target, out.phi, "Φ");
  for (const auto& ch : piso.checks) out.certificate.add("Φ " + ch.name, ch.pass, ch.detail);
  if (!piso.pass()) throw IsoFailure("the identification Φ is not an isomorphism");
  out.certificate.add("Φ preserves degrees", degree_preserving(out.tensor.monoid.carrier, target, out.phi));
  out.certificate.add("Φ maps the unit to the unit", out.phi[cat.unit] * out.tensor.monoid.unit == mg.monoid->unit);
  out.certificate.add("Φ is multiplicative", multiplicative(out.tensor.monoid, *mg.monoid, out.phi));
  return out;
}

}  // namespace koszulcat
