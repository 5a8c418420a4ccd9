#include "koszulcat/complex.hpp"

#include <set>

#include "koszulcat/errors.hpp"
#include "koszulcat/linalg.hpp"

namespace koszulcat {

namespace {

struct Cell {
  std::size_t object;
  std::optional<int> degree;
};

std::vector<Cell> cells_of(const ChainComplex& c) {
  std::vector<Cell> out;
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    if (!c.graded) {
      out.push_back({x, std::nullopt});
      continue;
    }
    for (int d : c.cell_degrees(x)) out.push_back({x, d});
  }
  return out;
}

std::string cell_name(const ChainComplex& c, const Cell& cell) {
  std::string s = c.terms.front().cat().objects[cell.object];
  if (cell.degree) s += ", degree " + std::to_string(*cell.degree);
  return s;
}

const Representation& carrier_of(const ChainComplex& c, int p) {
  return p < 0 ? c.augmentation->target.carrier : c.terms[static_cast<std::size_t>(p)].carrier;
}

}  // namespace

bool GradedReport::pass() const {
  for (const auto& c : certificates) {
    if (!c.pass()) return false;
  }
  return true;
}

std::size_t GradedReport::dim(int p, std::size_t object, std::optional<int> degree) const {
  for (const auto& e : entries) {
    if (e.p == p && e.object == object && e.degree == degree) return e.dim;
  }
  return 0;
}

std::vector<std::size_t> GradedReport::series(int p, std::size_t object) const {
  std::vector<std::size_t> out;
  for (const auto& e : entries) {
    if (e.p == p && e.object == object) out.push_back(e.dim);
  }
  return out;
}

void GradedReport::append(const GradedReport& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
  certificates.insert(certificates.end(), other.certificates.begin(), other.certificates.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

std::vector<int> ChainComplex::cell_degrees(std::size_t x) const {
  std::set<int> degs;
  auto collect = [&](const Representation& r) { degs.insert(r.degrees[x].begin(), r.degrees[x].end()); };
  for (const auto& t : terms) collect(t.carrier);
  if (augmentation) collect(augmentation->target.carrier);
  std::vector<int> out;
  for (int d : degs) {
    if (!window || d <= *window) out.push_back(d);
  }
  return out;
}

std::vector<std::size_t> ChainComplex::cell_basis(int p, std::size_t x, std::optional<int> degree) const {
  if (p < -1 || p > static_cast<int>(length())) return {};
  if (p == -1 && !augmentation) return {};
  const Representation& r = carrier_of(*this, p);
  if (!degree) {
    std::vector<std::size_t> all(r.dims[x]);
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return all;
  }
  return r.basis_in_degree(x, *degree);
}

Matrix ChainComplex::cell_differential(int p, std::size_t x, std::optional<int> degree) const {
  const auto cols = cell_basis(p, x, degree);
  const auto rows = cell_basis(p - 1, x, degree);
  if (p <= 0 && !(p == 0 && augmentation)) return Matrix::zero(field(), rows.size(), cols.size());
  if (p > static_cast<int>(length())) return Matrix::zero(field(), rows.size(), 0);
  const Matrix& full = p == 0 ? augmentation->map[x] : d[static_cast<std::size_t>(p)][x];
  return full.submatrix(rows, cols);
}

Certificate certify_d_squared(const ChainComplex& c) {
  Certificate cert;
  cert.statement = "d∘d = 0";
  const std::size_t n = c.length();
  for (std::size_t p = 2; p <= n; ++p) {
    std::string where;
    for (std::size_t x = 0; x < c.num_objects(); ++x) {
      if (!(c.d[p - 1][x] * c.d[p][x]).is_zero()) {
        where = c.terms.front().cat().objects[x];
        break;
      }
    }
    cert.add("d" + std::to_string(p - 1) + "∘d" + std::to_string(p) + " = 0", where.empty(),
             where.empty() ? std::string{} : "nonzero at " + where);
  }
  if (c.augmentation && n >= 1) {
    bool ok = true;
    for (std::size_t x = 0; x < c.num_objects() && ok; ++x) ok = (c.augmentation->map[x] * c.d[1][x]).is_zero();
    cert.add("ε∘d1 = 0", ok);
  }
  if (c.graded) {
    bool ok = true;
    for (std::size_t p = 1; p <= n && ok; ++p) {
      for (std::size_t x = 0; x < c.num_objects() && ok; ++x) {
        ok = is_homogeneous(c.d[p][x], c.terms[p].carrier.degrees[x], c.terms[p - 1].carrier.degrees[x]);
      }
    }
    if (c.augmentation) {
      for (std::size_t x = 0; x < c.num_objects() && ok; ++x) {
        ok = is_homogeneous(c.augmentation->map[x], c.terms[0].carrier.degrees[x],
                            c.augmentation->target.carrier.degrees[x]);
      }
    }
    cert.add("differentials preserve internal degree", ok);
  }
  return cert;
}

Certificate certify_module_maps(const ChainComplex& c) {
  Certificate cert;
  cert.statement = "differentials are module maps";
  for (std::size_t p = 1; p <= c.length(); ++p) {
    const auto r = validate_module_map(c.terms[p], c.terms[p - 1], c.d[p]);
    cert.add("d" + std::to_string(p), r.ok(), r.ok() ? std::string{} : r.violations.front().axiom);
  }
  if (c.augmentation) {
    const auto r = validate_module_map(c.terms[0], c.augmentation->target, c.augmentation->map);
    cert.add("ε", r.ok(), r.ok() ? std::string{} : r.violations.front().axiom);
  }
  return cert;
}

GradedReport homology(const ChainComplex& c, int p, std::optional<int> window, const Exec& exec) {
  if (p < 0 || p > static_cast<int>(c.length())) {
    throw RangeError("homological degree " + std::to_string(p) + " outside 0.." + std::to_string(c.length()));
  }
  if (window && c.window && *window > *c.window) {
    throw WindowError("window " + std::to_string(*window) + " exceeds the certified degree " +
                      std::to_string(*c.window));
  }
  ChainComplex view = c;
  view.augmentation.reset();
  if (window) view.window = window;
  const auto cells = cells_of(view);
  std::vector<GradedEntry> slots(cells.size());
  parallel_for(exec, cells.size(), [&](std::size_t i) {
    const auto& cell = cells[i];
    const std::size_t k = view.cell_basis(p, cell.object, cell.degree).size();
    const std::size_t out = rank(view.cell_differential(p, cell.object, cell.degree));
    const std::size_t in = rank(view.cell_differential(p + 1, cell.object, cell.degree));
    slots[i] = {p, cell.object, cell.degree, k - out - in};
  });
  GradedReport r;
  r.title = "H_" + std::to_string(p);
  r.window = view.window;
  r.entries = std::move(slots);
  return r;
}

GradedReport homology(const ChainComplex& c, const Exec& exec) {
  GradedReport r;
  r.title = "homology";
  r.window = c.window;
  for (int p = 0; p <= static_cast<int>(c.length()); ++p) r.append(homology(c, p, std::nullopt, exec));
  return r;
}

Certificate certify_exact(const ChainComplex& c, const Exec& exec) {
  if (!c.augmentation) throw PreconditionError("exactness needs an augmented complex");
  const auto cells = cells_of(c);
  const int n = static_cast<int>(c.length());
  // bad[i][p + 1]: exactness fails at term p of cell i (p = -1: the target).
  std::vector<std::vector<char>> bad(cells.size(), std::vector<char>(static_cast<std::size_t>(n + 2), 0));
  parallel_for(exec, cells.size(), [&](std::size_t i) {
    const auto& cell = cells[i];
    std::vector<std::size_t> ranks(static_cast<std::size_t>(n + 2));
    for (int p = 0; p <= n + 1; ++p) ranks[static_cast<std::size_t>(p)] = rank(c.cell_differential(p, cell.object, cell.degree));
    bad[i][0] = ranks[0] != c.cell_basis(-1, cell.object, cell.degree).size();
    for (int p = 0; p <= n; ++p) {
      const std::size_t dim = c.cell_basis(p, cell.object, cell.degree).size();
      bad[i][static_cast<std::size_t>(p + 1)] =
          dim != ranks[static_cast<std::size_t>(p)] + ranks[static_cast<std::size_t>(p + 1)];
    }
  });
  Certificate cert;
  cert.statement = "the augmented complex is exact";
  for (int p = -1; p <= n; ++p) {
    std::string where;
    for (std::size_t i = 0; i < cells.size() && where.empty(); ++i) {
      if (bad[i][static_cast<std::size_t>(p + 1)]) where = cell_name(c, cells[i]);
    }
    const std::string name = p == -1 ? "ε is surjective"
                             : p == 0 ? "ker ε = im d1"
                                      : "H_" + std::to_string(p) + " = 0";
    cert.add(name, where.empty(),
             where.empty() ? std::to_string(cells.size()) + " cells" : "fails at " + where);
  }
  return cert;
}

SplitCertificate contracting_homotopy(const ChainComplex& c, const Exec& exec) {
  if (!c.augmentation) throw PreconditionError("a contracting homotopy needs an augmented complex");
  const auto cells = cells_of(c);
  const int n = static_cast<int>(c.length());
  const Field& f = c.field();
  std::vector<HomotopyCell> slots(cells.size());
  // ok[i][p + 1]: identity at term p holds (p = -1: ε h = id).
  std::vector<std::vector<char>> ok(cells.size(), std::vector<char>(static_cast<std::size_t>(n + 2), 0));
  parallel_for(exec, cells.size(), [&](std::size_t i) {
    const auto& cell = cells[i];
    auto dim = [&](int p) { return c.cell_basis(p, cell.object, cell.degree).size(); };
    std::vector<Matrix> big_d(static_cast<std::size_t>(n + 2));
    for (int p = 0; p <= n + 1; ++p) big_d[static_cast<std::size_t>(p)] = c.cell_differential(p, cell.object, cell.degree);
    std::vector<Matrix> h(static_cast<std::size_t>(n + 1));
    try {
      h[0] = section_of_surjection(big_d[0]);
    } catch (const NoSection&) {
      h[0] = Matrix::zero(f, dim(0), dim(-1));
    }
    for (int p = 0; p < n; ++p) {
      const auto up = static_cast<std::size_t>(p);
      const Matrix rhs = Matrix::identity(f, dim(p)) - h[up] * big_d[up];
      auto sol = solve(big_d[up + 1], rhs);
      h[up + 1] = sol ? *sol : Matrix::zero(f, dim(p + 1), dim(p));
    }
    ok[i][0] = big_d[0] * h[0] == Matrix::identity(f, dim(-1));
    for (int p = 0; p <= n; ++p) {
      const auto up = static_cast<std::size_t>(p);
      Matrix lhs = h[up] * big_d[up];
      if (p < n) lhs = lhs + big_d[up + 1] * h[up + 1];
      ok[i][up + 1] = lhs == Matrix::identity(f, dim(p));
    }
    slots[i] = {cell.object, cell.degree, std::move(h)};
  });
  SplitCertificate out;
  out.certificate.statement = "pointwise split: dh + hd = id";
  for (int p = -1; p <= n; ++p) {
    std::string where;
    for (std::size_t i = 0; i < cells.size() && where.empty(); ++i) {
      if (!ok[i][static_cast<std::size_t>(p + 1)]) where = cell_name(c, cells[i]);
    }
    const std::string name = p == -1 ? "ε h = id" : "dh + hd = id on term " + std::to_string(p);
    out.certificate.add(name, where.empty(),
                        where.empty() ? std::to_string(cells.size()) + " cells" : "fails at " + where);
  }
  out.cells = std::move(slots);
  return out;
}

}  // namespace koszulcat
