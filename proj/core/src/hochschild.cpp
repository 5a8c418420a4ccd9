#include "koszulcat/hochschild.hpp"

#include <algorithm>

#include "koszulcat/errors.hpp"
#include "koszulcat/linalg.hpp"

namespace koszulcat {

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
  return s;
}

std::vector<std::size_t> indices_in_degree(const Representation& r, std::size_t x, std::optional<int> d) {
  if (!d) {
    std::vector<std::size_t> all(r.dims[x]);
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return all;
  }
  return r.basis_in_degree(x, *d);
}

/// Indices of `cols` repeated in each of `blocks` consecutive blocks of size `dim`.
std::vector<std::size_t> replicate(const std::vector<std::size_t>& cols, std::size_t blocks, std::size_t dim) {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < blocks; ++b) {
    for (std::size_t i : cols) out.push_back(b * dim + i);
  }
  return out;
}

}  // namespace

std::string to_string(IdempotenceMode mode) {
  switch (mode) {
    case IdempotenceMode::Direct:
      return "direct";
    case IdempotenceMode::QuotientOfI:
      return "quotient-of-I";
    case IdempotenceMode::None:
      break;
  }
  return "none";
}

TensorIdempotentCertificate certify_tensor_idempotent(const MonoidPtr& a, const Exec& exec) {
  if (a->truncated || a->carrier.cap != kUncapped) {
    throw PreconditionError(a->name + " is truncated; tensor idempotence needs the full monoid");
  }
  const ValidationReport valid = validate_monoid(*a);
  if (!valid.ok()) throw PreconditionError(a->name + " is not a monoid: " + valid.violations.front().axiom);
  const auto& c = a->cat();
  const Field& f = c.field;
  TensorIdempotentCertificate out;
  out.monoid = a;
  out.certificate.statement = a->name + " is tensor idempotent";
  out.commutative = is_commutative(*a);
  out.certificate.add("commutative", out.commutative);

  const DayTensor aa = day_convolution(a->carrier, a->carrier, kInheritCap, exec);
  out.multiplication = day_induced_map(aa, a->carrier, a->pairing);
  std::string direct_failure;
  out.direct = true;
  for (std::size_t x = 0; x < c.num_objects() && out.direct; ++x) {
    const Matrix& mu = out.multiplication[x];
    const std::size_t r = rank(mu);
    if (mu.rows() != mu.cols() || r != mu.rows()) {
      out.direct = false;
      direct_failure = "at " + c.objects[x] + ": A⊗A has dim " + std::to_string(mu.cols()) + ", A has dim " +
                       std::to_string(mu.rows()) + ", μ has rank " + std::to_string(r) + " (deficit " +
                       std::to_string(std::max(mu.rows(), mu.cols()) - r) + ")";
    }
  }
  out.certificate.add("μ_A : A⊗A -> A is invertible at every object", out.direct, direct_failure);

  std::string quotient_failure;
  out.quotient_of_i = true;
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    const std::size_t k = c.hom_basis[c.pair(c.unit, x)].size();
    std::vector<Matrix> cols;
    for (std::size_t h = 0; h < k; ++h) cols.push_back(a->carrier.basis_action(c.unit, x, h) * a->unit);
    out.unit_map.push_back(cols.empty() ? Matrix::zero(f, a->carrier.dims[x], 0) : Matrix::hstack(cols));
    const std::size_t r = rank(out.unit_map.back());
    if (r != a->carrier.dims[x] && out.quotient_of_i) {
      out.quotient_of_i = false;
      quotient_failure = "at " + c.objects[x] + ": e_A has rank " + std::to_string(r) + " onto dim " +
                         std::to_string(a->carrier.dims[x]) + " (deficit " +
                         std::to_string(a->carrier.dims[x] - r) + ")";
    }
  }
  out.certificate.add("e_A : I -> A is onto at every object", out.quotient_of_i, quotient_failure);
  out.certificate.add("quotient-of-I criterion agrees with direct mode", !out.quotient_of_i || out.direct);

  if (out.direct) {
    out.mode = IdempotenceMode::Direct;
  } else if (out.quotient_of_i) {
    out.mode = IdempotenceMode::QuotientOfI;
  }
  if (!out.pass()) out.failure = !out.commutative ? a->name + " is not commutative" : direct_failure;
  return out;
}

EnvelopingData build_enveloping(const MonoidPtr& a, std::size_t n, int cap, const TensorIdempotentCertificate& cert,
                                const Exec& exec) {
  if (cert.monoid != a || !cert.pass()) {
    throw PreconditionError("the enveloping construction needs a passing tensor-idempotence certificate for " +
                            a->name);
  }
  if (n == 0) throw RangeError("at least one variable is needed");
  if (cap < 1) throw RangeError("the degree cap must be at least 1");
  const auto& cat = a->cat();
  const Field& f = cat.field;
  const std::size_t objects = cat.num_objects();

  EnvelopingData e;
  e.base = a;
  e.n = n;
  e.cap = cap;
  e.idempotent = cert;
  e.an = polynomial_monoid(a, n, cap);
  std::vector<std::string> us, vs;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string suffix = n == 1 ? "" : std::to_string(i + 1);
    us.push_back("u" + suffix);
    vs.push_back("v" + suffix);
  }
  const PolynomialMonoid u = polynomial_monoid(a, n, cap, us), v = polynomial_monoid(a, n, cap, vs);
  MergedPolynomial merged = merge_variables(u, v, a, a->pairing, exec);
  e.merge_certificate = merged.certificate;
  e.c = std::move(merged.merged);
  const MonoidData& cm = *e.c.monoid;

  std::vector<ElementRef> images;
  for (std::size_t i = 0; i < 2 * n; ++i) images.push_back(variable_element(e.an, i % n));
  e.pi = substitution_morphism(e.c, e.an, images);
  for (std::size_t i = 0; i < n; ++i) {
    e.alpha.push_back({cat.unit, variable_element(e.c, i).coords - variable_element(e.c, n + i).coords});
    e.alpha_names.push_back(us[i] + " - " + vs[i]);
  }
  e.j = generated_submodule(cm, e.alpha);

  Certificate& cert_out = e.certificate;
  cert_out.statement = "A_n ⊗ A_n ≅ A_2n and ker π = ⟨" + join(e.alpha_names) + "⟩";
  cert_out.add("A_n ⊗ A_n ≅ A_2n", merged.certificate.pass());
  bool central = true;
  for (const auto& al : e.alpha) {
    central = central && is_central(cm, al) && homogeneous_degree(cm.carrier, al) == 1;
  }
  cert_out.add("u_i - v_i are central of degree 1", central);

  bool pi_zero_on_j = true, kernel_in_j = true, dims_match = true, onto = true, graded_j = true, u_injective = true;
  std::string first_bad;
  std::vector<std::vector<KernelCell>> per_object(objects);
  parallel_for(exec, objects, [&](std::size_t x) {
    const Representation& cr = cm.carrier;
    const Representation& ar = e.an.monoid->carrier;
    const Matrix& p = e.pi.maps[x];
    for (int d = 0; d <= cap; ++d) {
      const auto cols = cr.basis_in_degree(x, d);
      const auto rows = ar.basis_in_degree(x, d);
      KernelCell cell;
      cell.object = x;
      cell.degree = d;
      cell.dim_c = cols.size();
      cell.dim_an = rows.size();
      const SubspacePresentation k = kernel(p.submatrix(rows, cols));
      cell.dim_kernel = k.dim();
      // J_d as a subspace of C(x): the degree-d coordinates of J.
      const Matrix jd = e.j[x].basis.select_rows(cols);
      const SubspacePresentation jspan = span_of(jd);
      cell.dim_j = jspan.dim();
      per_object[x].push_back(cell);
    }
  });
  for (std::size_t x = 0; x < objects; ++x) {
    const Representation& cr = cm.carrier;
    const Matrix& p = e.pi.maps[x];
    std::size_t graded_total = 0;
    for (const auto& cell : per_object[x]) {
      graded_total += cell.dim_j;
      e.kernel_table.push_back(cell);
      const std::string where = cat.objects[x] + ", degree " + std::to_string(cell.degree);
      if (cell.dim_c - cell.dim_kernel != cell.dim_an) {
        onto = false;
        if (first_bad.empty()) first_bad = "π not onto at " + where;
      }
      if (cell.dim_kernel != cell.dim_j) {
        dims_match = false;
        if (first_bad.empty()) first_bad = "dim ker π != dim J at " + where;
      }
      // ker π_d ⊆ J, using the kernel embedded back into C(x).
      const auto cols = cr.basis_in_degree(x, cell.degree);
      const auto rows = e.an.monoid->carrier.basis_in_degree(x, cell.degree);
      const SubspacePresentation k = kernel(p.submatrix(rows, cols));
      if (k.dim() > 0) {
        MatrixBuilder emb(f, cr.dims[x], k.dim());
        for (std::size_t j = 0; j < k.dim(); ++j) {
          for (const auto& [i, val] : vector_entries(k.basis.column(j))) emb.add(cols[i], j, val);
        }
        if (!contains(e.j[x], emb.build())) {
          kernel_in_j = false;
          if (first_bad.empty()) first_bad = "ker π ⊄ J at " + where;
        }
      }
    }
    if (graded_total != e.j[x].dim()) graded_j = false;
    if (!(p * e.j[x].basis).is_zero()) pi_zero_on_j = false;
    // The u-only monomials.
    std::vector<std::size_t> u_cols;
    const std::size_t dx = a->carrier.dims[x];
    for (std::size_t mi = 0; mi < e.c.monomials.size(); ++mi) {
      const auto& mono = e.c.monomials[mi];
      if (std::all_of(mono.begin() + static_cast<std::ptrdiff_t>(n), mono.end(), [](int k) { return k == 0; })) {
        for (std::size_t i = 0; i < dx; ++i) u_cols.push_back(mi * dx + i);
      }
    }
    if (rank(p.select_columns(u_cols)) != u_cols.size()) u_injective = false;
  }
  cert_out.add("π is onto in every degree", onto);
  cert_out.add("J is a graded subspace", graded_j);
  cert_out.add("π∘(J -> C) = 0", pi_zero_on_j);
  cert_out.add("ker π ⊆ J", kernel_in_j);
  cert_out.add("dim ker π_d = dim J_d", dims_match, first_bad);
  cert_out.add("π restricted to A[u] is injective", u_injective);
  return e;
}

BimoduleResolution koszul_bimodule_resolution(const EnvelopingData& e, int cap, const Exec& exec) {
  if (cap == kInheritCap) cap = e.cap;
  if (cap > e.cap) {
    throw WindowError("requested degree " + std::to_string(cap) + " exceeds the enveloping cap " +
                      std::to_string(e.cap));
  }
  const MonoidPtr& cm = e.c.monoid;
  const auto& cat = cm->cat();
  const std::size_t n = e.n;
  BimoduleResolution out;

  // C = C'[w] with w_i ↦ u_i - v_i, v_i ↦ v_i.
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < n; ++i) vars.push_back(n == 1 ? "w" : "w" + std::to_string(i + 1));
  for (std::size_t i = 0; i < n; ++i) vars.push_back(e.c.variables[n + i]);
  const PolynomialMonoid cprime = polynomial_monoid(e.base, 2 * n, e.cap, vars);
  std::vector<ElementRef> images = e.alpha;
  for (std::size_t i = 0; i < n; ++i) images.push_back(variable_element(e.c, n + i));
  const MonoidMorphism change = substitution_morphism(cprime, e.c, images);
  out.change_of_variables.statement = "C ≅ A[v][w] with w_i = u_i - v_i";
  bool invertible = true;
  for (std::size_t x = 0; x < cat.num_objects(); ++x) {
    const Matrix& m = change.maps[x];
    invertible = invertible && m.rows() == m.cols() && rank(m) == m.rows();
  }
  out.change_of_variables.add("substitution is invertible at every object", invertible);
  out.change_of_variables.add("substitution preserves degrees",
                              [&] {
                                for (std::size_t x = 0; x < cat.num_objects(); ++x) {
                                  if (!is_homogeneous(change.maps[x], cprime.monoid->carrier.degrees[x],
                                                      cm->carrier.degrees[x])) {
                                    return false;
                                  }
                                }
                                return true;
                              }());

  out.regularity = is_regular_sequence(*cm, e.alpha, cap, e.alpha_names);
  if (!out.regularity.regular() || !out.change_of_variables.pass()) {
    throw TheoremViolation("u - v is not a regular sequence for " + cm->name + ": " + out.regularity.failure());
  }

  out.koszul = build_koszul(cm, e.alpha, cap, e.alpha_names, exec);
  const ModuleData target = restrict_left(forget_right(regular_module(e.an.monoid)), e.pi);
  out.koszul.complex.augmentation = Augmentation{target, e.pi.maps};
  out.exactness = certify_exact(out.koszul.complex, exec);
  out.split = contracting_homotopy(out.koszul.complex, exec);

  Certificate& cert = out.certificate;
  cert.statement = "K_C(" + join(e.alpha_names) + ") -> A_n is an F-split resolution by free C-modules";
  cert.add("d∘d = 0", out.koszul.certificate.pass());
  cert.add("augmentation is a module map", [&] {
    const auto r = validate_module_map(out.koszul.complex.terms[0], target, e.pi.maps);
    return r.ok();
  }());
  cert.add("u - v is a regular sequence", out.regularity.regular(),
           "up to degree " + std::to_string(out.regularity.cap));
  cert.add("change of variables C = C'[u - v]", out.change_of_variables.pass());
  cert.add("exact in the window", out.exactness.pass());
  cert.add("dh + hd = id on every cell", out.split.pass());
  cert.add("terms are free C-modules", true,
           std::to_string(out.koszul.complex.terms.size()) + " terms, C(n,p) copies of C");
  return out;
}

HochschildCohomology hochschild_cohomology(const EnvelopingData& e, const KoszulComplex& resolution,
                                           const ModuleData& m, int p, int cap, const Exec& exec) {
  if (p < 0) throw RangeError("Hochschild cohomology in negative degree " + std::to_string(p));
  if (m.left != e.an.monoid || m.right != e.an.monoid) {
    throw PreconditionError("coefficients must be a bimodule over " + e.an.monoid->name);
  }
  const MonoidData& an = *e.an.monoid;
  const MonoidData& cm = *e.c.monoid;
  const auto& cat = an.cat();
  const Field& f = cat.field;
  const std::size_t n = e.n, objects = cat.num_objects(), u = cat.unit;
  const Representation& mr = m.carrier;
  if (cap == kInheritCap) cap = mr.cap >= 0 ? std::min(mr.cap, e.cap) : e.cap;
  if (mr.cap >= 0 && cap > mr.cap) {
    throw WindowError("requested degree " + std::to_string(cap) + " exceeds the coefficient cap " +
                      std::to_string(mr.cap));
  }
  const bool graded = mr.is_graded();
  const std::optional<int> window = graded ? std::optional<int>(cap - 1) : std::nullopt;

  HochschildCohomology out;
  out.p = p;
  out.regular_coefficients =
      mr.dims == an.carrier.dims && m.left_action == an.pairing && m.right_action == an.pairing;

  // C(1) basis element (u^a v^b, base index a0) acts on M as (a0 t^a) · m · t^b.
  const std::size_t da = e.base->carrier.dims[u];
  const std::size_t kn = e.an.monomials.size();
  std::vector<ObjectMaps> left_ops(cm.carrier.dims[u]), right_ops(cm.carrier.dims[u]);
  auto action = [&](std::size_t basis) -> ObjectMaps {
    if (left_ops[basis].empty()) {
      const std::size_t mono = basis / da, a0 = basis % da;
      const MultiIndex& both = e.c.monomials[mono];
      const MultiIndex ua(both.begin(), both.begin() + static_cast<std::ptrdiff_t>(n));
      const MultiIndex vb(both.begin() + static_cast<std::ptrdiff_t>(n), both.end());
      const std::size_t ia = e.an.monomial_index(ua), ib = e.an.monomial_index(vb);
      ObjectMaps zero;
      for (std::size_t x = 0; x < objects; ++x) zero.push_back(Matrix::zero(f, mr.dims[x], mr.dims[x]));
      if (ia == PolynomialMonoid::npos || ib == PolynomialMonoid::npos) return zero;
      const ElementRef left{u, Matrix::unit_vector(f, kn * da, ia * da + a0)};
      const ElementRef right{u, kronecker(Matrix::unit_vector(f, kn, ib), e.base->unit)};
      left_ops[basis] = mult_operator(left, m);
      right_ops[basis] = right_mult_operator(m, right);
    }
    ObjectMaps out_ops(objects);
    for (std::size_t x = 0; x < objects; ++x) out_ops[x] = left_ops[basis][x] * right_ops[basis][x];
    return out_ops;
  };

  // Φ_q(t)(1_S') = t(d 1_S') = Σ_S c_S · t(1_S), read off the resolution's d.
  const std::size_t dc = cm.carrier.dims[u];
  const Matrix unit_c = cm.unit;
  for (std::size_t q = 0; q < n; ++q) {
    const auto& src = resolution.summands[q];
    const auto& dst = resolution.summands[q + 1];
    const Matrix& d = resolution.complex.d[q + 1][u];
    std::vector<MatrixBuilder> blocks;
    for (std::size_t x = 0; x < objects; ++x) blocks.emplace_back(f, dst.size() * mr.dims[x], src.size() * mr.dims[x]);
    for (std::size_t j = 0; j < dst.size(); ++j) {
      const Matrix gen = kronecker(Matrix::unit_vector(f, dst.size(), j), unit_c);
      const Matrix image = d * gen;
      for (std::size_t s = 0; s < src.size(); ++s) {
        std::vector<std::size_t> rows(dc);
        for (std::size_t i = 0; i < dc; ++i) rows[i] = s * dc + i;
        const Matrix coeff = image.select_rows(rows);
        for (const auto& [basis, val] : vector_entries(coeff)) {
          const ObjectMaps op = action(basis);
          for (std::size_t x = 0; x < objects; ++x) blocks[x].add_block(j * mr.dims[x], s * mr.dims[x], op[x], val);
        }
      }
    }
    ObjectMaps phi;
    for (auto& b : blocks) phi.push_back(b.build());
    out.phi.push_back(std::move(phi));
  }

  GradedReport& r = out.report;
  r.title = "HH^" + std::to_string(p);
  r.window = window;
  Certificate cert;
  cert.statement = "Hom_C(K(C), M) is a cochain complex";
  bool square_zero = true;
  for (std::size_t q = 0; q + 1 < out.phi.size(); ++q) {
    for (std::size_t x = 0; x < objects; ++x) square_zero = square_zero && (out.phi[q + 1][x] * out.phi[q][x]).is_zero();
  }
  cert.add("Φ∘Φ = 0", square_zero);
  if (out.regular_coefficients) {
    bool zero = true;
    for (const auto& phi : out.phi) {
      for (const auto& mx : phi) zero = zero && mx.is_zero();
    }
    cert.add("Φ = 0 for coefficients in A_n", zero);
  }
  if (p > static_cast<int>(n)) r.notes.push_back("HH^p vanishes for p > n = " + std::to_string(n));
  r.certificates.push_back(cert);

  struct Cell {
    std::size_t x;
    std::optional<int> d;
  };
  std::vector<Cell> cells;
  for (std::size_t x = 0; x < objects; ++x) {
    if (!graded) {
      cells.push_back({x, std::nullopt});
      continue;
    }
    for (int d = 0; d <= *window; ++d) cells.push_back({x, d});
  }
  std::vector<GradedEntry> slots(cells.size());
  const std::size_t up = static_cast<std::size_t>(p);
  parallel_for(exec, cells.size(), [&](std::size_t i) {
    const auto [x, d] = cells[i];
    std::size_t dim = 0;
    if (up <= n) {
      const std::size_t copies = resolution.summands[up].size();
      const auto cols = replicate(indices_in_degree(mr, x, d), copies, mr.dims[x]);
      dim = cols.size();
      if (up < n) dim -= rank(out.phi[up][x].select_columns(cols));
      if (up > 0) {
        const std::optional<int> below = d ? std::optional<int>(*d - 1) : std::nullopt;
        const auto in_cols = replicate(below && *below < 0 ? std::vector<std::size_t>{} : indices_in_degree(mr, x, below),
                                       resolution.summands[up - 1].size(), mr.dims[x]);
        dim -= rank(out.phi[up - 1][x].submatrix(cols, in_cols));
      }
    }
    slots[i] = {p, x, d, dim};
  });
  r.entries = std::move(slots);
  return out;
}

HochschildCohomology hochschild_cohomology(const EnvelopingData& e, const ModuleData& m, int p, int cap,
                                           const Exec& exec) {
  const KoszulComplex k = build_koszul(e.c.monoid, e.alpha, e.cap, e.alpha_names, exec);
  return hochschild_cohomology(e, k, m, p, cap, exec);
}

}  // namespace koszulcat
