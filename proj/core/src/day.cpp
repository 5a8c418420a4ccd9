#include "koszulcat/day.hpp"

#include <algorithm>

#include "koszulcat/errors.hpp"

namespace koszulcat {

namespace {

bool is_identity_basis(const CategoryPresentation& c, std::size_t x, std::size_t k) {
  return c.identity[x] == c.basis_morphism(x, x, k);
}

}  // namespace

DayAmbient::DayAmbient(const Representation& f, const Representation& g, int cap)
    : f_(&f), g_(&g), cap_(cap) {
  if (f.cat.get() != g.cat.get()) {
    throw DimensionMismatch("Day convolution of functors on different categories");
  }
  const auto& c = *f.cat;
  const std::size_t n = c.num_objects();
  coords_.resize(n);
  block_offset_.assign(n, std::vector<std::size_t>(n * n, 0));
  table_.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        block_offset_[x][c.pair(y, z)] = table_[x].size();
        const std::size_t hd = c.hom_dim(c.diamond(y, z), x);
        for (std::size_t h = 0; h < hd; ++h) {
          for (std::size_t b = 0; b < f.dims[y]; ++b) {
            for (std::size_t cc = 0; cc < g.dims[z]; ++cc) {
              const int deg = f.degrees[y][b] + g.degrees[z][cc];
              if (cap_ >= 0 && deg > cap_) {
                table_[x].push_back(npos);
              } else {
                table_[x].push_back(coords_[x].size());
                coords_[x].push_back({y, z, h, b, cc});
              }
            }
          }
        }
      }
    }
  }
}

int DayAmbient::degree(std::size_t x, std::size_t i) const {
  const Coord& k = coords_[x][i];
  return f_->degrees[k.y][k.b] + g_->degrees[k.z][k.c];
}

std::size_t DayAmbient::index(std::size_t x, std::size_t y, std::size_t z, std::size_t h,
                              std::size_t b, std::size_t c) const {
  const std::size_t fy = f_->dims[y], gz = g_->dims[z];
  return table_[x][block_offset_[x][cat().pair(y, z)] + (h * fy + b) * gz + c];
}

void DayAmbient::add_tensor(MatrixBuilder& out, std::size_t col, std::size_t x, std::size_t y,
                            std::size_t z, const Matrix& phi, const Matrix& u, const Matrix& v,
                            const mpq_class& coef) const {
  const Field& fld = cat().field;
  const auto pe = vector_entries(phi), ue = vector_entries(u), ve = vector_entries(v);
  for (const auto& [h, ph] : pe) {
    for (const auto& [b, ub] : ue) {
      const mpq_class hb = fld.mul(fld.mul(coef, ph), ub);
      for (const auto& [cc, vc] : ve) {
        const std::size_t i = index(x, y, z, h, b, cc);
        if (i != npos) out.add(i, col, fld.mul(hb, vc));
      }
    }
  }
}

Matrix DayAmbient::naturality_relations(std::size_t x) const {
  const auto& c = cat();
  const Field& fld = c.field;
  const std::size_t n = c.num_objects();
  struct Triplet {
    std::size_t row, col;
    mpq_class v;
  };
  std::vector<Triplet> trips;
  std::size_t count = 0;
  auto emit = [&](std::size_t row, const mpq_class& v) { trips.push_back({row, count, v}); };

  // [h∘(f◇id) ⊗ b ⊗ c] - [h ⊗ F(f) b ⊗ c] for f: y -> y2.
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t y2 = 0; y2 < n; ++y2) {
      for (std::size_t f = 0; f < c.hom_dim(y, y2); ++f) {
        if (y == y2 && is_identity_basis(c, y, f)) continue;
        const Matrix ff = f_->basis_action(y, y2, f).transpose();
        for (std::size_t z = 0; z < n; ++z) {
          const std::size_t src = c.diamond(y, z), mid = c.diamond(y2, z);
          const Matrix fz = c.tensor(y, z, y2, z, c.basis_morphism(y, y2, f), c.identity[z]);
          for (std::size_t h = 0; h < c.hom_dim(mid, x); ++h) {
            const auto phi = vector_entries(c.compose(src, mid, x, c.basis_morphism(mid, x, h), fz));
            for (std::size_t b = 0; b < f_->dims[y]; ++b) {
              for (std::size_t cc = 0; cc < g_->dims[z]; ++cc) {
                if (cap_ >= 0 && f_->degrees[y][b] + g_->degrees[z][cc] > cap_) continue;
                for (const auto& [h2, v] : phi) {
                  const std::size_t i = index(x, y, z, h2, b, cc);
                  if (i != npos) emit(i, v);
                }
                for (const auto& e : ff.row(b)) {
                  const std::size_t i = index(x, y2, z, h, e.col, cc);
                  if (i != npos) emit(i, fld.neg(e.value));
                }
                ++count;
              }
            }
          }
        }
      }
    }
  }
  // [h∘(id◇g) ⊗ b ⊗ c] - [h ⊗ b ⊗ G(g) c] for g: z -> z2.
  for (std::size_t z = 0; z < n; ++z) {
    for (std::size_t z2 = 0; z2 < n; ++z2) {
      for (std::size_t g = 0; g < c.hom_dim(z, z2); ++g) {
        if (z == z2 && is_identity_basis(c, z, g)) continue;
        const Matrix gg = g_->basis_action(z, z2, g).transpose();
        for (std::size_t y = 0; y < n; ++y) {
          const std::size_t src = c.diamond(y, z), mid = c.diamond(y, z2);
          const Matrix yg = c.tensor(y, z, y, z2, c.identity[y], c.basis_morphism(z, z2, g));
          for (std::size_t h = 0; h < c.hom_dim(mid, x); ++h) {
            const auto phi = vector_entries(c.compose(src, mid, x, c.basis_morphism(mid, x, h), yg));
            for (std::size_t b = 0; b < f_->dims[y]; ++b) {
              for (std::size_t cc = 0; cc < g_->dims[z]; ++cc) {
                if (cap_ >= 0 && f_->degrees[y][b] + g_->degrees[z][cc] > cap_) continue;
                for (const auto& [h2, v] : phi) {
                  const std::size_t i = index(x, y, z, h2, b, cc);
                  if (i != npos) emit(i, v);
                }
                for (const auto& e : gg.row(cc)) {
                  const std::size_t i = index(x, y, z2, h, b, e.col);
                  if (i != npos) emit(i, fld.neg(e.value));
                }
                ++count;
              }
            }
          }
        }
      }
    }
  }
  MatrixBuilder out(fld, dim(x), count);
  for (const auto& t : trips) out.add(t.row, t.col, t.v);
  return out.build();
}

int combined_cap(int a, int b) {
  if (a < 0) return b;
  if (b < 0) return a;
  return std::min(a, b);
}

DayTensor day_convolution(const Representation& f, const Representation& g, int cap,
                          const Exec& exec, const std::vector<Matrix>& extra_relations) {
  DayTensor d;
  d.left = f;
  d.right = g;
  const int eff_cap = cap == kInheritCap ? combined_cap(f.cap, g.cap) : cap;
  const DayAmbient amb(d.left, d.right, eff_cap);
  const auto& c = *f.cat;
  const std::size_t n = c.num_objects();
  d.quotient.resize(n);
  parallel_for(exec, n, [&](std::size_t x) {
    Matrix rel = amb.naturality_relations(x);
    if (!extra_relations.empty()) rel = Matrix::hstack({rel, extra_relations[x]});
    d.quotient[x] = quotient(amb.dim(x), SubspacePresentation{amb.dim(x), rel});
  });

  Representation& r = d.result;
  r.cat = f.cat;
  r.cap = eff_cap;
  r.dims.resize(n);
  r.degrees.resize(n);
  r.names.resize(n);
  r.actions.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    r.dims[x] = d.quotient[x].dim;
    for (std::size_t i : d.quotient[x].complement) {
      const auto& k = amb.coord(x, i);
      r.degrees[x].push_back(amb.degree(x, i));
      std::string name = f.basis_name(k.y, k.b) + "⊗" + g.basis_name(k.z, k.c);
      if (c.backend != Backend::Trivial) name = c.hom_basis[c.pair(c.diamond(k.y, k.z), x)][k.h] + ":" + name;
      r.names[x].push_back(std::move(name));
    }
  }
  // phi_* on ambient: [h ⊗ b ⊗ c] -> [phi∘h ⊗ b ⊗ c].
  parallel_for(exec, n * n, [&](std::size_t p) {
    const std::size_t x = p / n, x2 = p % n;
    auto& acts = r.actions[p];
    acts.resize(c.hom_dim(x, x2));
    for (std::size_t k = 0; k < c.hom_dim(x, x2); ++k) {
      const Matrix phi = c.basis_morphism(x, x2, k);
      MatrixBuilder m(c.field, amb.dim(x2), d.quotient[x].dim);
      for (std::size_t j = 0; j < d.quotient[x].complement.size(); ++j) {
        const auto& k2 = amb.coord(x, d.quotient[x].complement[j]);
        const std::size_t src = c.diamond(k2.y, k2.z);
        const Matrix comp = c.compose(src, x, x2, phi, c.basis_morphism(src, x, k2.h));
        for (const auto& [h2, v] : vector_entries(comp)) {
          const std::size_t i = amb.index(x2, k2.y, k2.z, h2, k2.b, k2.c);
          if (i != DayAmbient::npos) m.add(i, j, v);
        }
      }
      acts[k] = d.quotient[x2].projection * m.build();
    }
  });
  return d;
}

ObjectMaps day_induced_map(const DayTensor& d, const Representation& target,
                           const std::vector<Matrix>& beta) {
  const auto& c = *d.left.cat;
  const std::size_t n = c.num_objects();
  const DayAmbient amb = d.ambient();
  ObjectMaps out(n);
  for (std::size_t x = 0; x < n; ++x) {
    // Columns of T(h) * beta_{y,z} for every block and hom basis element.
    std::vector<std::vector<Matrix>> cols(n * n);
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const std::size_t yz = c.diamond(y, z);
        for (std::size_t h = 0; h < c.hom_dim(yz, x); ++h) {
          cols[c.pair(y, z)].push_back((target.basis_action(yz, x, h) * beta[c.pair(y, z)]).transpose());
        }
      }
    }
    MatrixBuilder m(c.field, target.dims[x], d.quotient[x].dim);
    for (std::size_t j = 0; j < d.quotient[x].complement.size(); ++j) {
      const auto& k = amb.coord(x, d.quotient[x].complement[j]);
      const Matrix& t = cols[c.pair(k.y, k.z)][k.h];
      for (const auto& e : t.row(k.b * d.right.dims[k.z] + k.c)) m.add(e.col, j, e.value);
    }
    out[x] = m.build();
  }
  return out;
}

ObjectMaps day_functorial_map(const DayTensor& from, const DayTensor& to, const ObjectMaps& alpha,
                              const ObjectMaps& beta) {
  const auto& c = *from.left.cat;
  const std::size_t n = c.num_objects();
  const DayAmbient src = from.ambient(), dst = to.ambient();
  ObjectMaps out(n);
  std::vector<Matrix> at(n), bt(n);
  for (std::size_t y = 0; y < n; ++y) {
    at[y] = alpha[y].transpose();
    bt[y] = beta[y].transpose();
  }
  for (std::size_t x = 0; x < n; ++x) {
    MatrixBuilder m(c.field, dst.dim(x), from.quotient[x].dim);
    for (std::size_t j = 0; j < from.quotient[x].complement.size(); ++j) {
      const auto& k = src.coord(x, from.quotient[x].complement[j]);
      for (const auto& eb : at[k.y].row(k.b)) {
        for (const auto& ec : bt[k.z].row(k.c)) {
          const std::size_t i = dst.index(x, k.y, k.z, k.h, eb.col, ec.col);
          if (i != DayAmbient::npos) m.add(i, j, c.field.mul(eb.value, ec.value));
        }
      }
    }
    out[x] = to.quotient[x].projection * m.build();
  }
  return out;
}

ObjectMaps day_symmetry(const DayTensor& fg, const DayTensor& gf) {
  const auto& c = *fg.left.cat;
  const std::size_t n = c.num_objects();
  const DayAmbient src = fg.ambient(), dst = gf.ambient();
  ObjectMaps out(n);
  for (std::size_t x = 0; x < n; ++x) {
    MatrixBuilder m(c.field, dst.dim(x), fg.quotient[x].dim);
    for (std::size_t j = 0; j < fg.quotient[x].complement.size(); ++j) {
      const auto& k = src.coord(x, fg.quotient[x].complement[j]);
      const std::size_t yz = c.diamond(k.y, k.z), zy = c.diamond(k.z, k.y);
      const Matrix hs = c.compose(zy, yz, x, c.basis_morphism(yz, x, k.h), c.symmetry[c.pair(k.z, k.y)]);
      for (const auto& [h2, v] : vector_entries(hs)) {
        const std::size_t i = dst.index(x, k.z, k.y, h2, k.c, k.b);
        if (i != DayAmbient::npos) m.add(i, j, v);
      }
    }
    out[x] = gf.quotient[x].projection * m.build();
  }
  return out;
}

ObjectMaps day_left_unitor(const DayTensor& i_f) {
  const Representation& f = i_f.right;
  const auto& c = *f.cat;
  const std::size_t n = c.num_objects(), u = c.unit;
  std::vector<Matrix> beta(n * n);
  for (std::size_t w = 0; w < n; ++w) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t wy = c.diamond(w, y);
      std::vector<Matrix> blocks;
      for (std::size_t i = 0; i < c.hom_dim(u, w); ++i) {
        blocks.push_back(f.act(y, wy, c.tensor(u, y, w, y, c.basis_morphism(u, w, i), c.identity[y])));
      }
      beta[c.pair(w, y)] = blocks.empty() ? Matrix(c.field, f.dims[wy], 0) : Matrix::hstack(blocks);
    }
  }
  return day_induced_map(i_f, f, beta);
}

ObjectMaps day_right_unitor(const DayTensor& f_i) {
  const Representation& f = f_i.left;
  const auto& c = *f.cat;
  const std::size_t n = c.num_objects(), u = c.unit;
  std::vector<Matrix> beta(n * n);
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t w = 0; w < n; ++w) {
      const std::size_t yw = c.diamond(y, w);
      const std::size_t hw = c.hom_dim(u, w);
      // Column b * hw + i is F(id_y ◇ i)(e_b).
      MatrixBuilder m(c.field, f.dims[yw], f.dims[y] * hw);
      for (std::size_t i = 0; i < hw; ++i) {
        const Matrix a = f.act(y, yw, c.tensor(y, u, y, w, c.identity[y], c.basis_morphism(u, w, i)));
        for (std::size_t r = 0; r < a.rows(); ++r) {
          for (const auto& e : a.row(r)) m.add(r, e.col * hw + i, e.value);
        }
      }
      beta[c.pair(y, w)] = m.build();
    }
  }
  return day_induced_map(f_i, f, beta);
}

Certificate certify_natural_iso(const Representation& from, const Representation& to,
                                const ObjectMaps& eta, const std::string& what) {
  Certificate cert;
  cert.statement = what + " is a natural isomorphism";
  const auto& c = *from.cat;
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    const bool square = eta[x].rows() == eta[x].cols();
    const std::size_t r = rank(eta[x]);
    cert.add("invertible at " + c.objects[x], square && r == eta[x].rows(),
             std::to_string(from.dims[x]) + " -> " + std::to_string(to.dims[x]) + ", rank " +
                 std::to_string(r));
  }
  const ValidationReport nat = check_natural(from, to, eta, what);
  cert.add("natural", nat.ok(), std::to_string(nat.checked) + " squares checked");
  return cert;
}

}  // namespace koszulcat
