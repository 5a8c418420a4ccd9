#include "koszulcat/monoid.hpp"

#include <algorithm>
#include <numeric>

#include "koszulcat/errors.hpp"

namespace koszulcat {

namespace {

bool is_identity_basis(const CategoryPresentation& c, std::size_t x, std::size_t k) {
  return c.identity[x] == c.basis_morphism(x, x, k);
}

SparseRow accumulate(std::vector<Entry> terms, const Field& f) {
  std::sort(terms.begin(), terms.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
  SparseRow out;
  for (auto& t : terms) {
    if (!out.empty() && out.back().col == t.col) {
      out.back().value = f.add(out.back().value, t.value);
      if (sgn(out.back().value) == 0) out.pop_back();
    } else if (sgn(t.value) != 0) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

bool same_vector(const SparseRow& a, const SparseRow& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].col != b[i].col || a[i].value != b[i].value) return false;
  }
  return true;
}

SparseRow as_sparse(const Matrix& column) {
  SparseRow out;
  for (const auto& [i, v] : vector_entries(column)) out.push_back({static_cast<std::uint32_t>(i), v});
  return out;
}

Matrix as_column(const Field& f, std::size_t n, const SparseRow& v) {
  MatrixBuilder b(f, n, 1);
  for (const auto& e : v) b.add(e.col, 0, e.value);
  return b.build();
}

// Columns of a family of pairings B[(x, y)] : T(x◇y) x (F(x)·G(y)).
class PairingColumns {
 public:
  PairingColumns(const std::vector<Matrix>& mats, const Representation& second)
      : second_(&second), n_(second.num_objects()) {
    t_.reserve(mats.size());
    for (const Matrix& m : mats) t_.push_back(m.transpose());
  }

  const SparseRow& column(std::size_t x, std::size_t y, std::size_t i, std::size_t j) const {
    return t_[x * n_ + y].row(i * second_->dims[y] + j);
  }

  // B(u ⊗ e_j).
  SparseRow left_apply(std::size_t x, std::size_t y, const SparseRow& u, std::size_t j,
                       const Field& f) const {
    std::vector<Entry> terms;
    for (const auto& eu : u) {
      for (const auto& e : column(x, y, eu.col, j)) terms.push_back({e.col, f.mul(eu.value, e.value)});
    }
    return accumulate(std::move(terms), f);
  }

  // B(e_i ⊗ v).
  SparseRow right_apply(std::size_t x, std::size_t y, std::size_t i, const SparseRow& v,
                        const Field& f) const {
    std::vector<Entry> terms;
    for (const auto& ev : v) {
      for (const auto& e : column(x, y, i, ev.col)) terms.push_back({e.col, f.mul(ev.value, e.value)});
    }
    return accumulate(std::move(terms), f);
  }

  // B(u ⊗ v).
  SparseRow apply(std::size_t x, std::size_t y, const SparseRow& u, const SparseRow& v,
                  const Field& f) const {
    std::vector<Entry> terms;
    for (const auto& eu : u) {
      for (const auto& ev : v) {
        const mpq_class c = f.mul(eu.value, ev.value);
        for (const auto& e : column(x, y, eu.col, ev.col)) terms.push_back({e.col, f.mul(c, e.value)});
      }
    }
    return accumulate(std::move(terms), f);
  }

 private:
  const Representation* second_;
  std::size_t n_;
  std::vector<Matrix> t_;
};

std::vector<std::size_t> by_degree(const Representation& r, std::size_t x) {
  std::vector<std::size_t> order(r.dims[x]);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return r.degrees[x][a] < r.degrees[x][b]; });
  return order;
}

std::string label(const Representation& r, std::size_t x, std::size_t i) {
  return r.cat->objects[x] + ":" + r.basis_name(x, i);
}

int law_cap(std::initializer_list<int> caps) {
  int c = kUncapped;
  for (int v : caps) c = combined_cap(c, v);
  return c;
}

// (a·b)·c = a·(b·c) on basis triples of total degree <= cap.
struct TripleLaw {
  std::string axiom;
  const Representation *a, *b, *c;
  const PairingColumns *inner_left, *outer_left;
  const PairingColumns *inner_right, *outer_right;
  int cap;
};

void check_triples(const TripleLaw& law, ValidationReport& report) {
  const auto& cat = *law.a->cat;
  const Field& f = cat.field;
  const std::size_t n = cat.num_objects();
  const bool capped = law.cap >= 0;
  for (std::size_t x = 0; x < n; ++x) {
    const auto oi = by_degree(*law.a, x);
    for (std::size_t y = 0; y < n; ++y) {
      const auto oj = by_degree(*law.b, y);
      for (std::size_t z = 0; z < n; ++z) {
        const auto ok = by_degree(*law.c, z);
        const std::size_t xy = cat.diamond(x, y), yz = cat.diamond(y, z);
        for (std::size_t i : oi) {
          const int di = law.a->degrees[x][i];
          if (capped && di > law.cap) break;
          for (std::size_t j : oj) {
            const int dj = di + law.b->degrees[y][j];
            if (capped && dj > law.cap) break;
            const SparseRow& ab = law.inner_left->column(x, y, i, j);
            for (std::size_t k : ok) {
              if (capped && dj + law.c->degrees[z][k] > law.cap) break;
              ++report.checked;
              const SparseRow lhs = law.outer_left->left_apply(xy, z, ab, k, f);
              const SparseRow rhs =
                  law.outer_right->right_apply(x, yz, i, law.inner_right->column(y, z, j, k), f);
              if (!same_vector(lhs, rhs)) {
                report.add(law.axiom, {label(*law.a, x, i), label(*law.b, y, j), label(*law.c, z, k)});
              }
            }
          }
        }
      }
    }
  }
}

void check_pairing_shapes(const std::vector<Matrix>& p, const Representation& first,
                          const Representation& second, const Representation& target,
                          const std::string& what) {
  const auto& c = *target.cat;
  const std::size_t n = c.num_objects();
  if (p.size() != n * n) throw DimensionMismatch(what + ": expected one matrix per pair of objects");
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Matrix& m = p[c.pair(x, y)];
      if (m.rows() != target.dims[c.diamond(x, y)] || m.cols() != first.dims[x] * second.dims[y]) {
        throw DimensionMismatch(what + " at (" + c.objects[x] + ", " + c.objects[y] + ") has shape " +
                                std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
      }
    }
  }
}

void check_additive(const std::vector<Matrix>& p, const Representation& first,
                    const Representation& second, const Representation& target,
                    const std::string& axiom, ValidationReport& report) {
  const auto& c = *target.cat;
  const std::size_t n = c.num_objects();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      ++report.checked;
      const Matrix& m = p[c.pair(x, y)];
      const auto& rd = target.degrees[c.diamond(x, y)];
      bool ok = true;
      for (std::size_t r = 0; r < m.rows() && ok; ++r) {
        for (const auto& e : m.row(r)) {
          const std::size_t i = e.col / second.dims[y], j = e.col % second.dims[y];
          if (rd[r] != first.degrees[x][i] + second.degrees[y][j]) {
            ok = false;
            report.add(axiom, {c.objects[x], c.objects[y]},
                       first.basis_name(x, i) + " times " + second.basis_name(y, j) + " lands in degree " +
                           std::to_string(rd[r]));
            break;
          }
        }
      }
    }
  }
}

// T(φ◇id) P_{x,y} = P_{x2,y} (F(φ) ⊗ id) and T(id◇ψ) P_{x,y} = P_{x,y2} (id ⊗ G(ψ)).
void check_pairing_natural(const std::vector<Matrix>& p, const Representation& first,
                           const Representation& second, const Representation& target,
                           const std::string& axiom, ValidationReport& report) {
  const auto& c = *target.cat;
  const Field& f = c.field;
  const std::size_t n = c.num_objects();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t x2 = 0; x2 < n; ++x2) {
      for (std::size_t k = 0; k < c.hom_dim(x, x2); ++k) {
        if (x == x2 && is_identity_basis(c, x, k)) continue;
        const Matrix phi = c.basis_morphism(x, x2, k);
        const std::string& name = c.hom_basis[c.pair(x, x2)][k];
        for (std::size_t y = 0; y < n; ++y) {
          ++report.checked;
          const Matrix lhs =
              target.act(c.diamond(x, y), c.diamond(x2, y), c.tensor(x, y, x2, y, phi, c.identity[y])) *
              p[c.pair(x, y)];
          const Matrix rhs = p[c.pair(x2, y)] *
                             kronecker(first.basis_action(x, x2, k), Matrix::identity(f, second.dims[y]));
          if (lhs != rhs) report.add(axiom, {name, "first factor", c.objects[y]});
        }
        for (std::size_t y = 0; y < n; ++y) {
          ++report.checked;
          const Matrix lhs =
              target.act(c.diamond(y, x), c.diamond(y, x2), c.tensor(y, x, y, x2, c.identity[y], phi)) *
              p[c.pair(y, x)];
          const Matrix rhs = p[c.pair(y, x2)] *
                             kronecker(Matrix::identity(f, first.dims[y]), second.basis_action(x, x2, k));
          if (lhs != rhs) report.add(axiom, {name, "second factor", c.objects[y]});
        }
      }
    }
  }
}

// Unit laws ε·m = m (left) or m·ε = m (right) on every basis vector.
void check_unit(const PairingColumns& cols, const Representation& m, const Matrix& unit, bool left,
                const std::string& axiom, ValidationReport& report) {
  const auto& c = *m.cat;
  const SparseRow eps = as_sparse(unit);
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    for (std::size_t i = 0; i < m.dims[x]; ++i) {
      ++report.checked;
      const SparseRow ei{{static_cast<std::uint32_t>(i), mpq_class(1)}};
      const SparseRow got = left ? cols.apply(c.unit, x, eps, ei, c.field) : cols.apply(x, c.unit, ei, eps, c.field);
      if (!same_vector(got, ei)) report.add(axiom, {label(m, x, i)});
    }
  }
}

void require_same_category(const Representation& a, const Representation& b) {
  if (a.cat.get() != b.cat.get()) throw DimensionMismatch("operands live over different categories");
}

}  // namespace

Matrix MonoidData::multiply(std::size_t x, const Matrix& a, std::size_t y, const Matrix& b) const {
  return pairing_at(x, y) * kronecker(a, b);
}

ElementRef MonoidData::multiply(const ElementRef& a, const ElementRef& b) const {
  return {cat().diamond(a.object, b.object), multiply(a.object, a.coords, b.object, b.coords)};
}

Side ModuleData::side() const {
  if (left && right) return Side::Bimodule;
  if (left) return Side::Left;
  if (right) return Side::Right;
  throw PreconditionError("module " + name + " has no action");
}

MonoidData identity_monoid(const CategoryPtr& cat) {
  MonoidData a;
  a.name = "I";
  a.carrier = identity_functor(cat);
  const std::size_t n = cat->num_objects(), u = cat->unit;
  a.pairing.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) a.pairing[cat->pair(x, y)] = cat->diamond_matrix(u, u, x, y);
  }
  a.unit = cat->identity[u];
  return a;
}

MonoidData algebra_monoid(const CategoryPtr& cat, std::string name, std::vector<std::string> basis,
                          Matrix product, Matrix unit, std::vector<int> degrees, int cap) {
  if (cat->num_objects() != 1) throw PreconditionError("algebra tables need a one-object category");
  const std::size_t d = basis.size();
  if (degrees.empty()) degrees.assign(d, 0);
  if (degrees.size() != d) throw DimensionMismatch("one degree per basis element expected");
  MonoidData a;
  a.name = std::move(name);
  a.carrier.cat = cat;
  a.carrier.dims = {d};
  a.carrier.degrees = {std::move(degrees)};
  a.carrier.names = {std::move(basis)};
  a.carrier.cap = cap;
  a.carrier.actions.resize(1);
  for (std::size_t k = 0; k < cat->hom_dim(0, 0); ++k) {
    // Endomorphisms of the single object act through their coefficient on the identity.
    const mpq_class s = cat->basis_morphism(0, 0, k) == cat->identity[0] ? mpq_class(1) : mpq_class(0);
    a.carrier.actions[0].push_back(Matrix::identity(cat->field, d).scaled(s));
  }
  a.pairing = {std::move(product)};
  a.unit = std::move(unit);
  a.truncated = cap >= 0;
  return a;
}

ValidationReport validate_monoid(const MonoidData& a) {
  ValidationReport report = validate_representation(a.carrier);
  if (!report.ok()) return report;
  const Representation& r = a.carrier;
  try {
    check_pairing_shapes(a.pairing, r, r, r, "pairing");
    if (a.unit.rows() != r.dims[a.cat().unit] || a.unit.cols() != 1) {
      throw DimensionMismatch("unit is not a vector in A(1)");
    }
  } catch (const DimensionMismatch& e) {
    report.add("shape", {}, e.what());
    return report;
  }
  ++report.checked;
  if (!is_homogeneous(a.unit, {0}, r.degrees[a.cat().unit])) report.add("unit has degree 0", {});
  check_additive(a.pairing, r, r, r, "product is additive in degree", report);
  const PairingColumns cols(a.pairing, r);
  check_unit(cols, r, a.unit, true, "left unit law", report);
  check_unit(cols, r, a.unit, false, "right unit law", report);
  check_triples({"associativity", &r, &r, &r, &cols, &cols, &cols, &cols, r.cap}, report);
  check_pairing_natural(a.pairing, r, r, r, "naturality of the product", report);
  return report;
}

ValidationReport validate_module(const ModuleData& m) {
  ValidationReport report = validate_representation(m.carrier);
  if (!report.ok()) return report;
  const Representation& r = m.carrier;
  if (!m.left && !m.right) {
    report.add("module has an action", {m.name});
    return report;
  }
  try {
    if (m.left) {
      require_same_category(r, m.left->carrier);
      check_pairing_shapes(m.left_action, m.left->carrier, r, r, "left action");
    }
    if (m.right) {
      require_same_category(r, m.right->carrier);
      check_pairing_shapes(m.right_action, r, m.right->carrier, r, "right action");
    }
  } catch (const DimensionMismatch& e) {
    report.add("shape", {}, e.what());
    return report;
  }
  std::optional<PairingColumns> lcols, rcols, acols, bcols;
  if (m.left) {
    const Representation& ar = m.left->carrier;
    lcols.emplace(m.left_action, r);
    acols.emplace(m.left->pairing, ar);
    check_additive(m.left_action, ar, r, r, "left action is additive in degree", report);
    check_unit(*lcols, r, m.left->unit, true, "left unit acts trivially", report);
    check_triples({"left action is associative", &ar, &ar, &r, &*acols, &*lcols, &*lcols, &*lcols,
                   law_cap({ar.cap, r.cap})},
                  report);
    check_pairing_natural(m.left_action, ar, r, r, "naturality of the left action", report);
  }
  if (m.right) {
    const Representation& br = m.right->carrier;
    rcols.emplace(m.right_action, br);
    bcols.emplace(m.right->pairing, br);
    check_additive(m.right_action, r, br, r, "right action is additive in degree", report);
    check_unit(*rcols, r, m.right->unit, false, "right unit acts trivially", report);
    check_triples({"right action is associative", &r, &br, &br, &*rcols, &*rcols, &*bcols, &*rcols,
                   law_cap({br.cap, r.cap})},
                  report);
    check_pairing_natural(m.right_action, r, br, r, "naturality of the right action", report);
  }
  if (m.left && m.right) {
    const Representation &ar = m.left->carrier, &br = m.right->carrier;
    check_triples({"left and right actions commute", &ar, &r, &br, &*lcols, &*rcols, &*rcols, &*lcols,
                   law_cap({ar.cap, r.cap, br.cap})},
                  report);
  }
  return report;
}

ValidationReport validate_morphism(const MonoidMorphism& f) {
  const MonoidData &a = *f.source, &b = *f.target;
  require_same_category(a.carrier, b.carrier);
  const auto& c = a.cat();
  const Field& fld = c.field;
  const std::size_t n = c.num_objects();
  ValidationReport report;
  if (f.maps.size() != n) {
    report.add("shape", {}, "expected one map per object");
    return report;
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (f.maps[x].rows() != b.carrier.dims[x] || f.maps[x].cols() != a.carrier.dims[x]) {
      report.add("shape", {c.objects[x]}, "map has the wrong shape");
      return report;
    }
  }
  report.merge(check_natural(a.carrier, b.carrier, f.maps, "monoid morphism"));
  ++report.checked;
  if (f.maps[c.unit] * a.unit != b.unit) report.add("unit is preserved", {});
  std::vector<Matrix> ft(n);
  for (std::size_t x = 0; x < n; ++x) ft[x] = f.maps[x].transpose();
  const PairingColumns pa(a.pairing, a.carrier), pb(b.pairing, b.carrier);
  const int cap = law_cap({a.carrier.cap, b.carrier.cap});
  for (std::size_t x = 0; x < n; ++x) {
    const auto oi = by_degree(a.carrier, x);
    for (std::size_t y = 0; y < n; ++y) {
      const auto oj = by_degree(a.carrier, y);
      const std::size_t xy = c.diamond(x, y);
      for (std::size_t i : oi) {
        const int di = a.carrier.degrees[x][i];
        if (cap >= 0 && di > cap) break;
        for (std::size_t j : oj) {
          if (cap >= 0 && di + a.carrier.degrees[y][j] > cap) break;
          ++report.checked;
          std::vector<Entry> terms;
          for (const auto& e : pa.column(x, y, i, j)) {
            for (const auto& g : ft[xy].row(e.col)) terms.push_back({g.col, fld.mul(e.value, g.value)});
          }
          const SparseRow lhs = accumulate(std::move(terms), fld);
          const SparseRow rhs = pb.apply(x, y, ft[x].row(i), ft[y].row(j), fld);
          if (!same_vector(lhs, rhs)) {
            report.add("morphism is multiplicative", {label(a.carrier, x, i), label(a.carrier, y, j)});
          }
        }
      }
    }
  }
  return report;
}

bool is_commutative(const MonoidData& a) {
  const auto& c = a.cat();
  const Field& f = c.field;
  const Representation& r = a.carrier;
  const PairingColumns cols(a.pairing, r);
  const std::size_t n = c.num_objects();
  const int cap = r.cap;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      // a·b against A(s_{y,x})(b·a).
      const Matrix st = r.act(c.diamond(y, x), c.diamond(x, y), c.symmetry[c.pair(y, x)]).transpose();
      for (std::size_t i = 0; i < r.dims[x]; ++i) {
        for (std::size_t j = 0; j < r.dims[y]; ++j) {
          if (cap >= 0 && r.degrees[x][i] + r.degrees[y][j] > cap) continue;
          std::vector<Entry> terms;
          for (const auto& e : cols.column(y, x, j, i)) {
            for (const auto& g : st.row(e.col)) terms.push_back({g.col, f.mul(e.value, g.value)});
          }
          if (!same_vector(cols.column(x, y, i, j), accumulate(std::move(terms), f))) return false;
        }
      }
    }
  }
  return true;
}

ModuleData regular_module(const MonoidPtr& a) {
  ModuleData m;
  m.name = a->name;
  m.carrier = a->carrier;
  m.left = m.right = a;
  m.left_action = m.right_action = a->pairing;
  return m;
}

ModuleData forget_left(const ModuleData& m) {
  ModuleData out = m;
  out.left.reset();
  out.left_action.clear();
  return out;
}

ModuleData forget_right(const ModuleData& m) {
  ModuleData out = m;
  out.right.reset();
  out.right_action.clear();
  return out;
}

ModuleData direct_sum_module(const ModuleData& m, std::size_t k, const std::vector<int>& shifts) {
  const auto& c = m.cat();
  const std::size_t n = c.num_objects();
  ModuleData out;
  out.name = m.name + "^" + std::to_string(k);
  out.carrier = direct_power(m.carrier, k, shifts);
  out.left = m.left;
  out.right = m.right;
  auto dim = [&](std::size_t x) { return m.carrier.dims[x]; };
  if (m.left) {
    out.left_action.resize(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        const Matrix& act = m.left_action[c.pair(x, y)];
        const std::size_t xy = c.diamond_obj[c.pair(x, y)];
        MatrixBuilder b(c.field, k * dim(xy), m.left->carrier.dims[x] * k * dim(y));
        for (std::size_t r = 0; r < act.rows(); ++r) {
          for (const auto& e : act.row(r)) {
            const std::size_t a = e.col / dim(y), v = e.col % dim(y);
            for (std::size_t j = 0; j < k; ++j) b.add(j * dim(xy) + r, a * k * dim(y) + j * dim(y) + v, e.value);
          }
        }
        out.left_action[c.pair(x, y)] = b.build();
      }
    }
  }
  if (m.right) {
    out.right_action.resize(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        const Matrix& act = m.right_action[c.pair(x, y)];
        const std::size_t xy = c.diamond_obj[c.pair(x, y)];
        const std::size_t db = m.right->carrier.dims[y];
        MatrixBuilder b(c.field, k * dim(xy), k * dim(x) * db);
        for (std::size_t r = 0; r < act.rows(); ++r) {
          for (const auto& e : act.row(r)) {
            for (std::size_t j = 0; j < k; ++j) b.add(j * dim(xy) + r, j * dim(x) * db + e.col, e.value);
          }
        }
        out.right_action[c.pair(x, y)] = b.build();
      }
    }
  }
  return out;
}

ValidationReport validate_module_map(const ModuleData& from, const ModuleData& to, const ObjectMaps& f) {
  const auto& c = from.cat();
  const std::size_t n = c.num_objects();
  if (f.size() != n) throw DimensionMismatch("module map needs one matrix per object");
  for (std::size_t x = 0; x < n; ++x) {
    if (f[x].rows() != to.carrier.dims[x] || f[x].cols() != from.carrier.dims[x]) {
      throw DimensionMismatch("module map has the wrong shape at " + c.objects[x]);
    }
  }
  ValidationReport r = check_natural(from.carrier, to.carrier, f, "module map");
  const bool left = from.left && to.left, right = from.right && to.right;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t xy = c.diamond_obj[c.pair(x, y)];
      if (left) {
        const Matrix lhs = f[xy] * from.left_action[c.pair(x, y)];
        const Matrix rhs = to.left_action[c.pair(x, y)] *
                           kronecker(Matrix::identity(c.field, from.left->carrier.dims[x]), f[y]);
        ++r.checked;
        if (lhs != rhs) r.add("map commutes with the left action", {c.objects[x], c.objects[y]});
      }
      if (right) {
        const Matrix lhs = f[xy] * from.right_action[c.pair(x, y)];
        const Matrix rhs = to.right_action[c.pair(x, y)] *
                           kronecker(f[x], Matrix::identity(c.field, from.right->carrier.dims[y]));
        ++r.checked;
        if (lhs != rhs) r.add("map commutes with the right action", {c.objects[x], c.objects[y]});
      }
    }
  }
  return r;
}

ModuleData restrict_left(const ModuleData& m, const MonoidMorphism& f) {
  if (!m.left) throw PreconditionError("module " + m.name + " has no left action to restrict");
  if (f.target->carrier.dims != m.left->carrier.dims) {
    throw DimensionMismatch("restriction morphism does not land in the acting monoid");
  }
  const auto& c = m.cat();
  const std::size_t n = c.num_objects();
  ModuleData out = m;
  out.left = f.source;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      out.left_action[c.pair(x, y)] =
          m.left_action[c.pair(x, y)] * kronecker(f.maps[x], Matrix::identity(c.field, m.carrier.dims[y]));
    }
  }
  return out;
}

ModuleData restrict_right(const ModuleData& m, const MonoidMorphism& f) {
  if (!m.right) throw PreconditionError("module " + m.name + " has no right action to restrict");
  if (f.target->carrier.dims != m.right->carrier.dims) {
    throw DimensionMismatch("restriction morphism does not land in the acting monoid");
  }
  const auto& c = m.cat();
  const std::size_t n = c.num_objects();
  ModuleData out = m;
  out.right = f.source;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      out.right_action[c.pair(x, y)] =
          m.right_action[c.pair(x, y)] * kronecker(Matrix::identity(c.field, m.carrier.dims[x]), f.maps[y]);
    }
  }
  return out;
}

std::optional<int> homogeneous_degree(const Representation& r, const ElementRef& e) {
  std::optional<int> d;
  for (const auto& [i, v] : vector_entries(e.coords)) {
    const int di = r.degrees[e.object][i];
    if (d && *d != di) return std::nullopt;
    d = di;
  }
  return d.value_or(0);
}

int top_degree(const Representation& r, const ElementRef& e) {
  int d = 0;
  for (const auto& [i, v] : vector_entries(e.coords)) d = std::max(d, r.degrees[e.object][i]);
  return d;
}

SubspacePresentation commutant(const MonoidData& a, std::size_t x) {
  const auto& c = a.cat();
  const Field& f = c.field;
  const Representation& r = a.carrier;
  const std::size_t n = c.num_objects(), dx = r.dims[x];
  const Matrix ix = Matrix::identity(f, dx);
  // Constraint rows are reduced as they arrive, so the stack never exceeds dim A(x) rows.
  Matrix constraints(f, 0, dx);
  for (std::size_t y = 0; y < n; ++y) {
    const Matrix s = r.act(c.diamond(x, y), c.diamond(y, x), c.symmetry[c.pair(x, y)]);
    const Matrix right = s * a.pairing_at(x, y);
    std::vector<Matrix> blocks{constraints};
    for (std::size_t i = 0; i < r.dims[y]; ++i) {
      const Matrix e = Matrix::unit_vector(f, r.dims[y], i);
      blocks.push_back(a.pairing_at(y, x) * kronecker(e, ix) - right * kronecker(ix, e));
    }
    constraints = row_reduce(Matrix::vstack(blocks)).rref;
  }
  return kernel(constraints);
}

bool is_central(const MonoidData& a, const ElementRef& e) {
  const auto& c = a.cat();
  const Representation& r = a.carrier;
  const std::size_t w = e.object;
  if (e.coords.rows() != r.dims[w] || e.coords.cols() != 1) {
    throw DimensionMismatch("element does not live in A(" + c.objects[w] + ")");
  }
  for (std::size_t y = 0; y < c.num_objects(); ++y) {
    const Matrix iy = Matrix::identity(c.field, r.dims[y]);
    const Matrix s = r.act(c.diamond(w, y), c.diamond(y, w), c.symmetry[c.pair(w, y)]);
    if (a.pairing_at(y, w) * kronecker(iy, e.coords) != s * a.pairing_at(w, y) * kronecker(e.coords, iy)) {
      return false;
    }
  }
  return true;
}

ObjectMaps mult_operator(const ElementRef& elt, const ModuleData& m) {
  if (!m.left) throw PreconditionError("module " + m.name + " has no left action");
  const auto& c = m.cat();
  if (elt.object != c.unit) {
    throw WrongObject("multiplication operators need an element of A(" + c.objects[c.unit] + "), got one in A(" +
                      c.objects[elt.object] + ")");
  }
  if (elt.coords.rows() != m.left->carrier.dims[c.unit]) throw DimensionMismatch("element has the wrong length");
  ObjectMaps out(c.num_objects());
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    out[x] = m.left_action[c.pair(c.unit, x)] *
             kronecker(elt.coords, Matrix::identity(c.field, m.carrier.dims[x]));
  }
  return out;
}

ObjectMaps right_mult_operator(const ModuleData& m, const ElementRef& elt) {
  if (!m.right) throw PreconditionError("module " + m.name + " has no right action");
  const auto& c = m.cat();
  if (elt.object != c.unit) {
    throw WrongObject("multiplication operators need an element of B(" + c.objects[c.unit] + "), got one in B(" +
                      c.objects[elt.object] + ")");
  }
  if (elt.coords.rows() != m.right->carrier.dims[c.unit]) throw DimensionMismatch("element has the wrong length");
  ObjectMaps out(c.num_objects());
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    out[x] = m.right_action[c.pair(x, c.unit)] *
             kronecker(Matrix::identity(c.field, m.carrier.dims[x]), elt.coords);
  }
  return out;
}

Subfamily generated_submodule(const MonoidData& a, const std::vector<ElementRef>& gens) {
  const auto& c = a.cat();
  const Representation& r = a.carrier;
  for (const auto& g : gens) {
    if (g.object != c.unit) throw WrongObject("generators must lie in A(" + c.objects[c.unit] + ")");
  }
  Subfamily sub(c.num_objects());
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    std::vector<Matrix> blocks{Matrix(c.field, r.dims[x], 0)};
    const Matrix ix = Matrix::identity(c.field, r.dims[x]);
    for (const auto& g : gens) blocks.push_back(a.pairing_at(x, c.unit) * kronecker(ix, g.coords));
    sub[x] = span_of(Matrix::hstack(blocks));
  }
  ModuleData left;
  left.name = a.name;
  left.carrier = r;
  left.left = std::make_shared<const MonoidData>(a);
  left.left_action = a.pairing;
  check_stable(left, sub);
  return sub;
}

Subfamily ideal_times_module(const std::vector<ElementRef>& gens, const ModuleData& m) {
  const auto& c = m.cat();
  Subfamily sub(c.num_objects());
  std::vector<ObjectMaps> ops;
  for (const auto& g : gens) ops.push_back(mult_operator(g, m));
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    std::vector<Matrix> blocks{Matrix(c.field, m.carrier.dims[x], 0)};
    for (const auto& op : ops) blocks.push_back(op[x]);
    sub[x] = span_of(Matrix::hstack(blocks));
  }
  check_stable(m, sub);
  return sub;
}

void check_stable(const ModuleData& m, const Subfamily& sub) {
  const auto& c = m.cat();
  const Field& f = c.field;
  const std::size_t n = c.num_objects();
  const Representation& r = m.carrier;
  std::vector<Matrix> proj(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (sub[x].ambient != r.dims[x]) throw DimensionMismatch("subspace family does not match the module");
    proj[x] = quotient(r.dims[x], sub[x]).projection;
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t k = 0; k < c.hom_dim(x, y); ++k) {
        if (!(proj[y] * r.basis_action(x, y, k) * sub[x].basis).is_zero()) {
          throw StabilityError("subfamily of " + m.name + " is not stable under the morphism " +
                               c.hom_basis[c.pair(x, y)][k]);
        }
      }
    }
  }
  if (m.left) {
    const Representation& ar = m.left->carrier;
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t x = 0; x < n; ++x) {
        const Matrix qp = proj[c.diamond(y, x)] * m.left_action[c.pair(y, x)];
        if ((qp * kronecker(Matrix::identity(f, ar.dims[y]), sub[x].basis)).is_zero()) continue;
        for (std::size_t i = 0; i < ar.dims[y]; ++i) {
          if (!(qp * kronecker(Matrix::unit_vector(f, ar.dims[y], i), sub[x].basis)).is_zero()) {
            throw StabilityError("subfamily of " + m.name + " is not stable under left multiplication by " +
                                 label(ar, y, i));
          }
        }
      }
    }
  }
  if (m.right) {
    const Representation& br = m.right->carrier;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        const Matrix qp = proj[c.diamond(x, y)] * m.right_action[c.pair(x, y)];
        if ((qp * kronecker(sub[x].basis, Matrix::identity(f, br.dims[y]))).is_zero()) continue;
        for (std::size_t i = 0; i < br.dims[y]; ++i) {
          if (!(qp * kronecker(sub[x].basis, Matrix::unit_vector(f, br.dims[y], i))).is_zero()) {
            throw StabilityError("subfamily of " + m.name + " is not stable under right multiplication by " +
                                 label(br, y, i));
          }
        }
      }
    }
  }
}

QuotientModule quotient_module(const ModuleData& m, const Subfamily& sub) {
  check_stable(m, sub);
  const auto& c = m.cat();
  const Field& f = c.field;
  const std::size_t n = c.num_objects();
  const Representation& r = m.carrier;
  std::vector<QuotientPresentation> q(n);
  for (std::size_t x = 0; x < n; ++x) q[x] = quotient(r.dims[x], sub[x]);

  QuotientModule out;
  ModuleData& qm = out.module;
  qm.name = m.name + "/N";
  qm.left = m.left;
  qm.right = m.right;
  Representation& qr = qm.carrier;
  qr.cat = r.cat;
  qr.cap = r.cap;
  qr.dims.resize(n);
  qr.degrees.resize(n);
  qr.names.resize(n);
  qr.actions.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    qr.dims[x] = q[x].dim;
    for (std::size_t i : q[x].complement) {
      qr.degrees[x].push_back(r.degrees[x][i]);
      qr.names[x].push_back(r.basis_name(x, i));
    }
    out.projection.push_back(q[x].projection);
    out.section.push_back(q[x].section);
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t k = 0; k < c.hom_dim(x, y); ++k) {
        qr.actions[c.pair(x, y)].push_back(q[y].projection * r.basis_action(x, y, k) * q[x].section);
      }
    }
  }
  if (m.left) {
    qm.left_action.resize(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        qm.left_action[c.pair(x, y)] =
            q[c.diamond(x, y)].projection * m.left_action[c.pair(x, y)] *
            kronecker(Matrix::identity(f, m.left->carrier.dims[x]), q[y].section);
      }
    }
  }
  if (m.right) {
    qm.right_action.resize(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        qm.right_action[c.pair(x, y)] =
            q[c.diamond(x, y)].projection * m.right_action[c.pair(x, y)] *
            kronecker(q[x].section, Matrix::identity(f, m.right->carrier.dims[y]));
      }
    }
  }
  return out;
}

TensorMonoid tensor_monoid(const MonoidData& a, const MonoidData& b, int cap, const Exec& exec) {
  require_same_category(a.carrier, b.carrier);
  TensorMonoid t;
  t.day = day_convolution(a.carrier, b.carrier, cap, exec);
  const DayTensor& d = t.day;
  const DayAmbient amb = d.ambient();
  const auto& c = a.cat();
  const Field& f = c.field;
  const std::size_t n = c.num_objects();
  const int eff_cap = d.result.cap;
  const PairingColumns pa(a.pairing, a.carrier), pb(b.pairing, b.carrier);

  MonoidData& m = t.monoid;
  m.name = a.name + "⊗" + b.name;
  m.carrier = d.result;
  m.truncated = a.truncated || b.truncated || eff_cap >= 0;
  m.pairing.resize(n * n);

  // [h⊗a⊗b]·[h'⊗a'⊗b'] = [(h◇h')∘(id◇s◇id) ⊗ aa' ⊗ bb'].
  parallel_for(exec, n * n, [&](std::size_t p) {
    const std::size_t x = p / n, x2 = p % n, xx = c.diamond(x, x2);
    const auto& cx = d.quotient[x].complement;
    const auto& cx2 = d.quotient[x2].complement;
    MatrixBuilder out(f, amb.dim(xx), cx.size() * cx2.size());
    for (std::size_t j = 0; j < cx.size(); ++j) {
      const auto& k = amb.coord(x, cx[j]);
      const int dj = amb.degree(x, cx[j]);
      for (std::size_t j2 = 0; j2 < cx2.size(); ++j2) {
        if (eff_cap >= 0 && dj + amb.degree(x2, cx2[j2]) > eff_cap) continue;
        const auto& k2 = amb.coord(x2, cx2[j2]);
        const std::size_t yz = c.diamond(k.y, k.z), yz2 = c.diamond(k2.y, k2.z);
        const std::size_t yy = c.diamond(k.y, k2.y), zz = c.diamond(k.z, k2.z);
        const std::size_t y_y2z = c.diamond(k.y, c.diamond(k2.y, k.z));
        const std::size_t y_zy2 = c.diamond(k.y, c.diamond(k.z, k2.y));
        const Matrix inner = c.tensor(k.y, c.diamond(k2.y, k.z), k.y, c.diamond(k.z, k2.y), c.identity[k.y],
                                      c.symmetry[c.pair(k2.y, k.z)]);
        const Matrix swap = c.tensor(y_y2z, k2.z, y_zy2, k2.z, inner, c.identity[k2.z]);
        const Matrix hh = c.tensor(yz, yz2, x, x2, c.basis_morphism(yz, x, k.h), c.basis_morphism(yz2, x2, k2.h));
        const Matrix mu = c.compose(c.diamond(yy, zz), c.diamond(yz, yz2), xx, hh, swap);
        const SparseRow& aa = pa.column(k.y, k2.y, k.b, k2.b);
        const SparseRow& bb = pb.column(k.z, k2.z, k.c, k2.c);
        amb.add_tensor(out, j * cx2.size() + j2, xx, yy, zz, mu, as_column(f, a.carrier.dims[yy], aa),
                       as_column(f, b.carrier.dims[zz], bb));
      }
    }
    m.pairing[p] = d.quotient[xx].projection * out.build();
  });

  const std::size_t u = c.unit;
  MatrixBuilder unit(f, amb.dim(u), 1);
  amb.add_tensor(unit, 0, u, u, u, c.identity[u], a.unit, b.unit);
  m.unit = d.quotient[u].projection * unit.build();
  return t;
}

}  // namespace koszulcat
