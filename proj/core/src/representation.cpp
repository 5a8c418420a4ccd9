#include "koszulcat/representation.hpp"

#include <algorithm>

#include "koszulcat/errors.hpp"
#include "koszulcat/linalg.hpp"

namespace koszulcat {

bool is_homogeneous(const Matrix& m, const std::vector<int>& col_degrees,
                    const std::vector<int>& row_degrees, int shift) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& e : m.row(i)) {
      if (row_degrees[i] != col_degrees[e.col] + shift) return false;
    }
  }
  return true;
}

std::size_t Representation::total_dim() const {
  std::size_t t = 0;
  for (std::size_t d : dims) t += d;
  return t;
}

Matrix Representation::act(std::size_t x, std::size_t y, const Matrix& phi) const {
  const auto& acts = actions[cat->pair(x, y)];
  if (phi.rows() != acts.size() || phi.cols() != 1) {
    throw DimensionMismatch("morphism vector does not live in hom(" + cat->objects[x] + ", " +
                            cat->objects[y] + ")");
  }
  Matrix out(field(), dims[y], dims[x]);
  for (std::size_t k = 0; k < phi.rows(); ++k) {
    if (!phi.row(k).empty()) out = out + acts[k].scaled(phi.row(k).front().value);
  }
  return out;
}

std::vector<std::size_t> Representation::basis_in_degree(std::size_t x, int d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < degrees[x].size(); ++i) {
    if (degrees[x][i] == d) out.push_back(i);
  }
  return out;
}

int Representation::max_degree() const {
  int m = 0;
  for (const auto& ds : degrees) {
    for (int d : ds) m = std::max(m, d);
  }
  return m;
}

std::string Representation::basis_name(std::size_t x, std::size_t i) const {
  if (x < names.size() && i < names[x].size()) return names[x][i];
  return cat->objects[x] + "#" + std::to_string(i);
}

void Representation::check_shapes() const {
  const std::size_t n = cat->num_objects();
  if (dims.size() != n || degrees.size() != n || actions.size() != n * n) {
    throw DimensionMismatch("representation tables do not match the object count");
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (degrees[x].size() != dims[x]) throw DimensionMismatch("degree labels do not match dimension");
    for (std::size_t y = 0; y < n; ++y) {
      const auto& acts = actions[cat->pair(x, y)];
      if (acts.size() != cat->hom_dim(x, y)) {
        throw DimensionMismatch("expected one action matrix per basis morphism of hom(" +
                                cat->objects[x] + ", " + cat->objects[y] + ")");
      }
      for (std::size_t k = 0; k < acts.size(); ++k) {
        if (acts[k].rows() != dims[y] || acts[k].cols() != dims[x]) {
          throw DimensionMismatch("action of " + cat->hom_basis[cat->pair(x, y)][k] + " has shape " +
                                  std::to_string(acts[k].rows()) + "x" + std::to_string(acts[k].cols()) +
                                  ", expected " + std::to_string(dims[y]) + "x" + std::to_string(dims[x]));
        }
      }
    }
  }
}

Representation identity_functor(const CategoryPtr& cat) {
  const std::size_t n = cat->num_objects();
  const std::size_t u = cat->unit;
  Representation r;
  r.cat = cat;
  r.dims.resize(n);
  r.degrees.resize(n);
  r.names.resize(n);
  r.actions.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    r.dims[x] = cat->hom_dim(u, x);
    r.degrees[x].assign(r.dims[x], 0);
    r.names[x] = cat->hom_basis[cat->pair(u, x)];
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      auto& acts = r.actions[cat->pair(x, y)];
      for (std::size_t k = 0; k < cat->hom_dim(x, y); ++k) {
        // phi_* : hom(1, x) -> hom(1, y), b -> phi ∘ b.
        const Matrix& comp = cat->composition_matrix(u, x, y);
        MatrixBuilder b(cat->field, r.dims[y], r.dims[x]);
        for (std::size_t j = 0; j < r.dims[x]; ++j) {
          const Matrix col = comp.column(k * r.dims[x] + j);
          for (std::size_t i = 0; i < col.rows(); ++i) {
            for (const auto& e : col.row(i)) b.add(i, j, e.value);
          }
        }
        acts.push_back(b.build());
      }
    }
  }
  return r;
}

Representation zero_representation(const CategoryPtr& cat) {
  const std::size_t n = cat->num_objects();
  Representation r;
  r.cat = cat;
  r.dims.assign(n, 0);
  r.degrees.assign(n, {});
  r.names.assign(n, {});
  r.actions.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      r.actions[cat->pair(x, y)].assign(cat->hom_dim(x, y), Matrix(cat->field, 0, 0));
    }
  }
  return r;
}

Representation direct_power(const Representation& f, std::size_t k, const std::vector<int>& shifts) {
  if (!shifts.empty() && shifts.size() != k) throw DimensionMismatch("one shift per block expected");
  const std::size_t n = f.num_objects();
  Representation r;
  r.cat = f.cat;
  r.cap = f.cap;
  r.dims.resize(n);
  r.degrees.resize(n);
  r.names.resize(n);
  r.actions.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    r.dims[x] = f.dims[x] * k;
    for (std::size_t b = 0; b < k; ++b) {
      const int s = shifts.empty() ? 0 : shifts[b];
      for (std::size_t i = 0; i < f.dims[x]; ++i) {
        r.degrees[x].push_back(f.degrees[x][i] + s);
        r.names[x].push_back("[" + std::to_string(b) + "]" + f.basis_name(x, i));
      }
    }
  }
  for (std::size_t p = 0; p < n * n; ++p) {
    for (const Matrix& a : f.actions[p]) {
      r.actions[p].push_back(kronecker(Matrix::identity(f.field(), k), a));
    }
  }
  return r;
}

Representation select_basis(const Representation& f, const std::vector<std::vector<std::size_t>>& keep) {
  const std::size_t n = f.num_objects();
  Representation r;
  r.cat = f.cat;
  r.cap = f.cap;
  r.dims.resize(n);
  r.degrees.resize(n);
  r.names.resize(n);
  r.actions.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    r.dims[x] = keep[x].size();
    for (std::size_t i : keep[x]) {
      r.degrees[x].push_back(f.degrees[x][i]);
      r.names[x].push_back(f.basis_name(x, i));
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (const Matrix& a : f.actions[f.cat->pair(x, y)]) {
        r.actions[f.cat->pair(x, y)].push_back(a.submatrix(keep[y], keep[x]));
      }
    }
  }
  return r;
}

ValidationReport validate_representation(const Representation& f) {
  ValidationReport report;
  try {
    f.check_shapes();
  } catch (const DimensionMismatch& e) {
    report.add("shape", {}, e.what());
    return report;
  }
  const auto& c = *f.cat;
  const std::size_t n = c.num_objects();
  for (std::size_t x = 0; x < n; ++x) {
    ++report.checked;
    if (f.act(x, x, c.identity[x]) != Matrix::identity(f.field(), f.dims[x])) {
      report.add("functor preserves identities", {c.objects[x]});
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t k = 0; k < c.hom_dim(x, y); ++k) {
        ++report.checked;
        if (!is_homogeneous(f.basis_action(x, y, k), f.degrees[x], f.degrees[y])) {
          report.add("action preserves degree", {c.hom_basis[c.pair(x, y)][k]});
        }
      }
      for (std::size_t z = 0; z < n; ++z) {
        for (std::size_t k = 0; k < c.hom_dim(x, y); ++k) {
          for (std::size_t l = 0; l < c.hom_dim(y, z); ++l) {
            ++report.checked;
            const Matrix comp = c.compose(x, y, z, c.basis_morphism(y, z, l), c.basis_morphism(x, y, k));
            if (f.act(x, z, comp) != f.basis_action(y, z, l) * f.basis_action(x, y, k)) {
              report.add("functor preserves composition",
                         {c.hom_basis[c.pair(x, y)][k], c.hom_basis[c.pair(y, z)][l]});
            }
          }
        }
      }
    }
  }
  return report;
}

std::string format_element(const Representation& f, std::size_t x, const Matrix& coords) {
  std::string out;
  for (const auto& [i, v] : vector_entries(coords)) {
    // Coefficients are printed bare; prime-field values are already integers.
    std::string term = f.basis_name(x, i);
    if (v == -1) {
      term = "-" + term;
    } else if (v != 1) {
      term = v.get_str() + "·" + term;
    }
    if (!out.empty()) out += term.front() == '-' ? " - " + term.substr(1) : " + " + term;
    else out = term;
  }
  return out.empty() ? "0" : out;
}

ValidationReport check_natural(const Representation& from, const Representation& to,
                               const ObjectMaps& eta, const std::string& what) {
  ValidationReport report;
  const auto& c = *from.cat;
  const std::size_t n = c.num_objects();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t k = 0; k < c.hom_dim(x, y); ++k) {
        ++report.checked;
        if (to.basis_action(x, y, k) * eta[x] != eta[y] * from.basis_action(x, y, k)) {
          report.add("naturality of " + what, {c.hom_basis[c.pair(x, y)][k]});
        }
      }
    }
  }
  return report;
}

}  // namespace koszulcat
