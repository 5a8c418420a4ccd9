#include "koszulcat/syzygy.hpp"

#include <algorithm>

#include "koszulcat/errors.hpp"
#include "koszulcat/linalg.hpp"

namespace koszulcat {

namespace {

mpq_class sign(std::size_t k) { return k % 2 == 0 ? 1 : -1; }

Matrix sparse_column(const Field& f, std::size_t n, const SparseRow& v) {
  MatrixBuilder b(f, n, 1);
  for (const auto& e : v) b.add(e.col, 0, e.value);
  return b.build();
}

std::vector<Matrix> transposed(const std::vector<Matrix>& mats) {
  std::vector<Matrix> out;
  out.reserve(mats.size());
  for (const auto& m : mats) out.push_back(m.transpose());
  return out;
}

void require_strict(const CategoryPresentation& c) {
  const std::size_t n = c.num_objects();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (c.diamond(c.diamond(x, y), z) != c.diamond(x, c.diamond(y, z))) {
          throw PreconditionError("tensor over a monoid needs a strictly associative product on objects");
        }
      }
    }
  }
}

int effective_cap(int cap, const Representation& f, const Representation& g) {
  return cap == kInheritCap ? combined_cap(f.cap, g.cap) : cap;
}

/// Columns [h ⊗ (m·a) ⊗ n] - [h ⊗ m ⊗ (a·n)] of the ambient space at x.
Matrix delta_relations(const DayAmbient& amb, std::size_t x, const ModuleData& m, const ModuleData& n,
                       const std::vector<Matrix>& right_t, const std::vector<Matrix>& left_t) {
  const auto& c = amb.cat();
  const Field& f = c.field;
  const std::size_t objs = c.num_objects();
  const Representation& a = m.right->carrier;
  const int cap = amb.cap();
  std::size_t count = 0;
  for (std::size_t y = 0; y < objs; ++y) {
    for (std::size_t w = 0; w < objs; ++w) {
      for (std::size_t z = 0; z < objs; ++z) {
        const std::size_t ywz = c.diamond(c.diamond(y, w), z);
        count += c.hom_dim(ywz, x) * m.carrier.dims[y] * a.dims[w] * n.carrier.dims[z];
      }
    }
  }
  MatrixBuilder out(f, amb.dim(x), count);
  std::size_t col = 0;
  for (std::size_t y = 0; y < objs; ++y) {
    for (std::size_t w = 0; w < objs; ++w) {
      const std::size_t yw = c.diamond(y, w);
      for (std::size_t z = 0; z < objs; ++z) {
        const std::size_t wz = c.diamond(w, z), ywz = c.diamond(yw, z);
        const Matrix& mr = right_t[c.pair(y, w)];
        const Matrix& nl = left_t[c.pair(w, z)];
        for (std::size_t h = 0; h < c.hom_dim(ywz, x); ++h) {
          const Matrix phi = c.basis_morphism(ywz, x, h);
          for (std::size_t i = 0; i < m.carrier.dims[y]; ++i) {
            for (std::size_t k = 0; k < a.dims[w]; ++k) {
              const int dik = m.carrier.degrees[y][i] + a.degrees[w][k];
              for (std::size_t j = 0; j < n.carrier.dims[z]; ++j) {
                if (cap >= 0 && dik + n.carrier.degrees[z][j] > cap) continue;
                const Matrix ma = sparse_column(f, m.carrier.dims[yw], mr.row(i * a.dims[w] + k));
                const Matrix an = sparse_column(f, n.carrier.dims[wz], nl.row(k * n.carrier.dims[z] + j));
                amb.add_tensor(out, col, x, yw, z, phi, ma, Matrix::unit_vector(f, n.carrier.dims[z], j));
                amb.add_tensor(out, col, x, y, wz, phi, Matrix::unit_vector(f, m.carrier.dims[y], i), an, -1);
                ++col;
              }
            }
          }
        }
      }
    }
  }
  MatrixBuilder trimmed(f, amb.dim(x), col);
  const Matrix full = out.build();
  for (std::size_t r = 0; r < full.rows(); ++r) {
    for (const auto& e : full.row(r)) trimmed.add(r, e.col, e.value);
  }
  return trimmed.build();
}

/// φ_* on the whole ambient space: [h ⊗ b ⊗ c] -> [φ∘h ⊗ b ⊗ c].
Matrix ambient_action(const DayAmbient& amb, std::size_t x, std::size_t x2, const Matrix& phi) {
  const auto& c = amb.cat();
  MatrixBuilder m(c.field, amb.dim(x2), amb.dim(x));
  for (std::size_t j = 0; j < amb.dim(x); ++j) {
    const auto& k = amb.coord(x, j);
    const std::size_t src = c.diamond(k.y, k.z);
    const Matrix comp = c.compose(src, x, x2, phi, c.basis_morphism(src, x, k.h));
    for (const auto& [h2, v] : vector_entries(comp)) {
      const std::size_t i = amb.index(x2, k.y, k.z, h2, k.b, k.c);
      if (i != DayAmbient::npos) m.add(i, j, v);
    }
  }
  return m.build();
}

/// d·[h ⊗ b ⊗ c] = [(id_w ◇ h) ⊗ d·b ⊗ c], from a left D-action on the left factor.
std::vector<Matrix> outer_left(const DayTensor& t, const Representation& d, const std::vector<Matrix>& act,
                               const Exec& exec) {
  const auto& c = *t.left.cat;
  const Field& f = c.field;
  const std::size_t n = c.num_objects();
  const DayAmbient amb = t.ambient();
  const auto act_t = transposed(act);
  std::vector<Matrix> out(n * n);
  parallel_for(exec, n * n, [&](std::size_t p) {
    const std::size_t w = p / n, x = p % n, wx = c.diamond(w, x);
    const auto& cx = t.quotient[x].complement;
    MatrixBuilder m(f, amb.dim(wx), d.dims[w] * cx.size());
    for (std::size_t j = 0; j < cx.size(); ++j) {
      const auto& k = amb.coord(x, cx[j]);
      const std::size_t yz = c.diamond(k.y, k.z), wy = c.diamond(w, k.y);
      const Matrix psi = c.tensor(w, yz, w, x, c.identity[w], c.basis_morphism(yz, x, k.h));
      const Matrix e_c = Matrix::unit_vector(f, t.right.dims[k.z], k.c);
      for (std::size_t a = 0; a < d.dims[w]; ++a) {
        const Matrix db = sparse_column(f, t.left.dims[wy], act_t[c.pair(w, k.y)].row(a * t.left.dims[k.y] + k.b));
        amb.add_tensor(m, a * cx.size() + j, wx, wy, k.z, psi, db, e_c);
      }
    }
    out[p] = t.quotient[wx].projection * m.build();
  });
  return out;
}

/// [h ⊗ b ⊗ c]·e = [(h ◇ id_w) ⊗ b ⊗ c·e], from a right E-action on the right factor.
std::vector<Matrix> outer_right(const DayTensor& t, const Representation& e, const std::vector<Matrix>& act,
                                const Exec& exec) {
  const auto& c = *t.left.cat;
  const Field& f = c.field;
  const std::size_t n = c.num_objects();
  const DayAmbient amb = t.ambient();
  const auto act_t = transposed(act);
  std::vector<Matrix> out(n * n);
  parallel_for(exec, n * n, [&](std::size_t p) {
    const std::size_t x = p / n, w = p % n, xw = c.diamond(x, w);
    const auto& cx = t.quotient[x].complement;
    MatrixBuilder m(f, amb.dim(xw), cx.size() * e.dims[w]);
    for (std::size_t j = 0; j < cx.size(); ++j) {
      const auto& k = amb.coord(x, cx[j]);
      const std::size_t yz = c.diamond(k.y, k.z), zw = c.diamond(k.z, w);
      const Matrix psi = c.tensor(yz, w, x, w, c.basis_morphism(yz, x, k.h), c.identity[w]);
      const Matrix e_b = Matrix::unit_vector(f, t.left.dims[k.y], k.b);
      for (std::size_t a = 0; a < e.dims[w]; ++a) {
        const Matrix ce = sparse_column(f, t.right.dims[zw], act_t[c.pair(k.z, w)].row(k.c * e.dims[w] + a));
        amb.add_tensor(m, j * e.dims[w] + a, xw, k.y, zw, psi, e_b, ce);
      }
    }
    out[p] = t.quotient[xw].projection * m.build();
  });
  return out;
}

std::string first_violation(const ValidationReport& r) {
  if (r.ok()) return std::to_string(r.checked) + " instances";
  std::string s = r.violations.front().axiom;
  for (const auto& w : r.violations.front().where) s += " " + w;
  return s;
}

}  // namespace

CoequalizerPresentation tensor_over_monoid(const ModuleData& m, const ModuleData& n, int cap, const Exec& exec) {
  if (!m.right) throw PreconditionError("module " + m.name + " has no right action");
  if (!n.left) throw PreconditionError("module " + n.name + " has no left action");
  if (m.right.get() != n.left.get()) {
    throw PreconditionError(m.name + " and " + n.name + " are modules over different monoids");
  }
  if (m.carrier.cat.get() != n.carrier.cat.get()) {
    throw DimensionMismatch("modules over different categories");
  }
  const auto& c = m.cat();
  require_strict(c);
  const std::size_t objs = c.num_objects();
  const int eff_cap = effective_cap(cap, m.carrier, n.carrier);

  CoequalizerPresentation out;
  out.left = m;
  out.right = n;
  out.tensor = day_convolution(m.carrier, n.carrier, eff_cap, exec);
  {
    const DayAmbient amb(out.left.carrier, out.right.carrier, eff_cap);
    const auto right_t = transposed(m.right_action);
    const auto left_t = transposed(n.left_action);
    out.relations.resize(objs);
    parallel_for(exec, objs, [&](std::size_t x) {
      out.relations[x] = delta_relations(amb, x, out.left, out.right, right_t, left_t);
    });
  }
  out.coequalizer = day_convolution(m.carrier, n.carrier, eff_cap, exec, out.relations);
  out.projection.resize(objs);
  for (std::size_t x = 0; x < objs; ++x) {
    out.projection[x] = out.coequalizer.quotient[x].projection * out.tensor.quotient[x].section;
  }

  ModuleData& mod = out.module;
  mod.name = m.name + "⊗_" + m.right->name + n.name;
  mod.carrier = out.coequalizer.result;
  if (m.left) {
    mod.left = m.left;
    mod.left_action = outer_left(out.coequalizer, m.left->carrier, m.left_action, exec);
  }
  if (n.right) {
    mod.right = n.right;
    mod.right_action = outer_right(out.coequalizer, n.right->carrier, n.right_action, exec);
  }

  Certificate& cert = out.certificate;
  cert.statement = mod.name + " is the coequalizer of the two actions";
  const DayAmbient amb = out.coequalizer.ambient();
  bool killed = true, stable = true;
  for (std::size_t x = 0; x < objs; ++x) {
    killed = killed && (out.coequalizer.quotient[x].projection * out.relations[x]).is_zero();
    for (std::size_t x2 = 0; x2 < objs && stable; ++x2) {
      for (std::size_t k = 0; k < c.hom_dim(x, x2) && stable; ++k) {
        const Matrix act = ambient_action(amb, x, x2, c.basis_morphism(x, x2, k));
        stable = (out.coequalizer.quotient[x2].projection * act * out.relations[x]).is_zero();
      }
    }
  }
  cert.add("projection∘δ = 0", killed);
  cert.add("im δ is a subfunctor", stable);
  const ValidationReport nat = check_natural(out.tensor.result, mod.carrier, out.projection, "projection");
  cert.add("projection is natural", nat.ok(), first_violation(nat));
  if (mod.left || mod.right) {
    const ValidationReport v = validate_module(mod);
    cert.add("outer actions form a module", v.ok(), first_violation(v));
  }
  return out;
}

Certificate check_restriction_compatibility(const ModuleData& m, const ModuleData& n, int cap, const Exec& exec) {
  if (!m.left || !n.right) {
    throw PreconditionError("restriction compatibility needs a (D, A)-bimodule and an (A, E)-bimodule");
  }
  for (const MonoidPtr& p : {m.left, m.right, n.right}) {
    if (!p) throw PreconditionError("missing monoid");
    const ValidationReport v = validate_monoid(*p);
    if (!v.ok()) throw PreconditionError("monoid " + p->name + " is invalid: " + first_violation(v));
  }
  const auto& c = m.cat();
  const std::size_t objs = c.num_objects();
  const CoequalizerPresentation full = tensor_over_monoid(m, n, cap, exec);
  const CoequalizerPresentation restricted = tensor_over_monoid(forget_left(m), n, cap, exec);

  Certificate cert;
  cert.statement = "R(" + full.module.name + ") ≅ R(" + m.name + ")⊗_" + m.right->name + n.name +
                   " as right " + n.right->name + "-modules";
  // Both sides are quotients of one ambient space by the same relations.
  ObjectMaps canonical(objs);
  for (std::size_t x = 0; x < objs; ++x) {
    canonical[x] = restricted.coequalizer.quotient[x].projection * full.coequalizer.quotient[x].section;
    cert.add("dims agree at " + c.objects[x], full.module.carrier.dims[x] == restricted.module.carrier.dims[x],
             std::to_string(full.module.carrier.dims[x]) + " and " +
                 std::to_string(restricted.module.carrier.dims[x]));
  }
  const Certificate iso = certify_natural_iso(full.module.carrier, restricted.module.carrier, canonical,
                                              "the canonical map");
  cert.checks.insert(cert.checks.end(), iso.checks.begin(), iso.checks.end());
  const ValidationReport v = validate_module_map(forget_left(full.module), restricted.module, canonical);
  cert.add("canonical map is right-linear", v.ok(), first_violation(v));
  return cert;
}

InducedModule induced_module(const MonoidPtr& a, const Representation& v, int cap, const Exec& exec) {
  require_strict(a->cat());
  InducedModule out;
  out.day = day_convolution(a->carrier, v, effective_cap(cap, a->carrier, v), exec);
  ModuleData& m = out.module;
  m.name = a->name + "⊗V";
  m.carrier = out.day.result;
  m.left = a;
  m.left_action = outer_left(out.day, a->carrier, a->pairing, exec);
  return out;
}

SyzygyResolution build_syzygy_resolution(const EnvelopingData& e, const ModuleData& m, int cap, const Exec& exec) {
  const MonoidPtr& an = e.an.monoid;
  if (m.left.get() != an.get()) throw PreconditionError("module " + m.name + " is not a left module over " + an->name);
  if (cap == kInheritCap) cap = e.cap;
  if (cap > e.cap) {
    throw WindowError("requested degree " + std::to_string(cap) + " exceeds the enveloping cap " +
                      std::to_string(e.cap));
  }
  if (cap - 1 < 0) {
    throw WindowError("cap " + std::to_string(cap) + " leaves no certifiable degree; the differential has degree 1");
  }
  const auto& c = an->cat();
  const Field& f = c.field;
  const std::size_t objs = c.num_objects();
  const std::size_t n = e.n;
  const ModuleData target = m.right ? forget_right(m) : m;

  SyzygyResolution r;
  r.induced = induced_module(an, m.carrier, cap, exec);
  const ModuleData& base = r.induced.module;

  // u_i acts on the A_n factor, v_i through the module.
  std::vector<ObjectMaps> u_op(n), v_op(n);
  ObjectMaps id_a(objs), id_m(objs);
  for (std::size_t x = 0; x < objs; ++x) {
    id_a[x] = Matrix::identity(f, an->carrier.dims[x]);
    id_m[x] = Matrix::identity(f, m.carrier.dims[x]);
  }
  const ModuleData regular_left = forget_right(regular_module(an));
  parallel_for(exec, n, [&](std::size_t i) {
    const ElementRef t = variable_element(e.an, i);
    u_op[i] = day_functorial_map(r.induced.day, r.induced.day, mult_operator(t, regular_left), id_m);
    v_op[i] = day_functorial_map(r.induced.day, r.induced.day, id_a, mult_operator(t, target));
  });

  ChainComplex& cx = r.complex;
  cx.graded = base.carrier.is_graded();
  cx.window = cap - 1;
  std::vector<std::vector<Subset>> summands;
  for (std::size_t p = 0; p <= n; ++p) {
    summands.push_back(subsets_of_size(n, p));
    const std::size_t k = summands.back().size();
    ModuleData term = direct_sum_module(base, k, std::vector<int>(k, static_cast<int>(p)));
    term.name = "L_" + std::to_string(p);
    cx.terms.push_back(std::move(term));
  }
  cx.d.resize(n + 1);
  for (std::size_t p = 1; p <= n; ++p) {
    cx.d[p].resize(objs);
    parallel_for(exec, objs, [&](std::size_t x) {
      const std::size_t dim = base.carrier.dims[x];
      MatrixBuilder b(f, summands[p - 1].size() * dim, summands[p].size() * dim);
      for (std::size_t j = 0; j < summands[p].size(); ++j) {
        const Subset& s = summands[p][j];
        for (std::size_t pos = 0; pos < s.size(); ++pos) {
          Subset face = s;
          face.erase(face.begin() + static_cast<std::ptrdiff_t>(pos));
          const auto it = std::lower_bound(summands[p - 1].begin(), summands[p - 1].end(), face);
          const std::size_t row = static_cast<std::size_t>(it - summands[p - 1].begin()) * dim;
          b.add_block(row, j * dim, u_op[s[pos]][x] - v_op[s[pos]][x], sign(pos));
        }
      }
      cx.d[p][x] = b.build();
    });
  }
  Augmentation aug;
  aug.target = target;
  aug.map = day_induced_map(r.induced.day, m.carrier, m.left_action);
  cx.augmentation = std::move(aug);

  // Terms are induced from F: L_p = A_n ⊗ V_p with V_p = M^{C(n,p)} shifted by p.
  Certificate induced;
  induced.statement = "every term is induced from F";
  for (std::size_t p = 0; p <= n; ++p) {
    const std::size_t k = summands[p].size();
    const Representation vp = direct_power(m.carrier, k, std::vector<int>(k, static_cast<int>(p)));
    const InducedModule ip = induced_module(an, vp, cap + static_cast<int>(p), exec);
    bool same = true;
    for (std::size_t x = 0; x < objs; ++x) {
      for (int d = 0; d <= *cx.window; ++d) {
        same = same && ip.module.carrier.basis_in_degree(x, d).size() ==
                           cx.terms[p].carrier.basis_in_degree(x, d).size();
      }
    }
    const std::string tag = "free-over-I: L_" + std::to_string(p) + " = " + an->name + "⊗" + m.name +
                            (k == 1 ? std::string{} : "^" + std::to_string(k)) +
                            (p == 0 ? std::string{} : "[" + std::to_string(p) + "]");
    induced.add(tag, same);
    if (same) r.tags.push_back(tag);
  }

  // C ⊗_{A_n} M with C a right A_n-module through t_i ↦ v_i, compared with A_n ⊗ M via t_i ↦ u_i.
  {
    std::vector<ElementRef> us, vs;
    for (std::size_t i = 0; i < n; ++i) {
      us.push_back(variable_element(e.c, i));
      vs.push_back(variable_element(e.c, n + i));
    }
    const MonoidMorphism to_u = substitution_morphism(e.an, e.c, us);
    const MonoidMorphism to_v = substitution_morphism(e.an, e.c, vs);
    const ModuleData c_right = restrict_right(forget_left(regular_module(e.c.monoid)), to_v);
    const CoequalizerPresentation cm = tensor_over_monoid(c_right, target, cap, exec);
    const ObjectMaps iota = day_functorial_map(r.induced.day, cm.coequalizer, to_u.maps, id_m);
    r.identification = certify_natural_iso(base.carrier, cm.module.carrier, iota,
                                           e.c.monoid->name + "⊗_" + an->name + m.name + " ≅ " + an->name + "⊗" + m.name);
  }

  r.exactness = certify_exact(cx, exec);
  r.split = contracting_homotopy(cx, exec);

  Certificate& cert = r.certificate;
  cert.statement = "F-split resolution of " + m.name + " over " + an->name;
  const Certificate dd = certify_d_squared(cx);
  cert.add("d∘d = 0", dd.pass());
  const Certificate mm = certify_module_maps(cx);
  cert.add("differentials are " + an->name + "-linear", mm.pass());
  cert.add("C⊗_{A_n}M ≅ A_n⊗M", r.identification.pass());
  cert.add("exact in degrees <= " + std::to_string(*cx.window), r.exactness.pass());
  cert.add("dh + hd = id", r.split.certificate.pass());
  cert.add("each term tagged free-over-I", induced.pass() && r.tags.size() == n + 1);
  cert.add(std::to_string(n + 1) + " terms above " + m.name, cx.terms.size() == n + 1);
  return r;
}

}  // namespace koszulcat
