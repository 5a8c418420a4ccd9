#include "koszulcat/koszul.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "koszulcat/errors.hpp"
#include "koszulcat/linalg.hpp"

namespace koszulcat {

namespace {

void next_subset(Subset& s, std::size_t n, std::vector<Subset>& out) {
  out.push_back(s);
  // Advance to the lexicographic successor.
  const std::size_t p = s.size();
  for (std::size_t i = p; i-- > 0;) {
    if (s[i] < n - p + i) {
      ++s[i];
      for (std::size_t j = i + 1; j < p; ++j) s[j] = s[j - 1] + 1;
      next_subset(s, n, out);
      return;
    }
  }
}

mpq_class sign(std::size_t k) { return k % 2 == 0 ? 1 : -1; }

/// Block-diagonal copies of L_x on `blocks` summands of size dim A(x).
Matrix block_operator(const Field& f, const Matrix& l, std::size_t blocks) {
  return kronecker(Matrix::identity(f, blocks), l);
}

/// Inclusion of the summands `from` into `to` (both lists of subsets, all members of `from`
/// mapped through `map_subset`), one identity block of size dim per match.
Matrix summand_map(const Field& f, std::size_t dim, const std::vector<Subset>& from, const std::vector<Subset>& to,
                   const std::map<Subset, std::size_t>& to_index, const std::function<std::optional<Subset>(const Subset&)>& map_subset) {
  MatrixBuilder b(f, to.size() * dim, from.size() * dim);
  const Matrix id = Matrix::identity(f, dim);
  for (std::size_t j = 0; j < from.size(); ++j) {
    const auto image = map_subset(from[j]);
    if (!image) continue;
    b.add_block(to_index.at(*image) * dim, j * dim, id);
  }
  return b.build();
}

}  // namespace

std::vector<Subset> subsets_of_size(std::size_t n, std::size_t p) {
  if (p > n) return {};
  Subset s(p);
  for (std::size_t i = 0; i < p; ++i) s[i] = i;
  std::vector<Subset> out;
  next_subset(s, n, out);
  return out;
}

std::size_t KoszulComplex::summand_index(const Subset& s) const {
  const auto& list = summands.at(s.size());
  const auto it = std::lower_bound(list.begin(), list.end(), s);
  if (it == list.end() || *it != s) throw RangeError("not a summand of the Koszul complex");
  return static_cast<std::size_t>(it - list.begin());
}

KoszulComplex build_koszul(const MonoidPtr& a, const std::vector<ElementRef>& alpha, int cap,
                           std::vector<std::string> names, const Exec& exec) {
  if (alpha.empty()) throw PreconditionError("the Koszul complex needs at least one element");
  const auto& c = a->cat();
  const std::size_t n = alpha.size();
  if (names.empty()) {
    for (const auto& e : alpha) names.push_back(format_element(a->carrier, e.object, e.coords));
  }
  if (names.size() != n) throw DimensionMismatch("one name per element expected");
  const int carrier_cap = a->carrier.cap;
  if (cap == kInheritCap) cap = carrier_cap;
  if (cap >= 0 && carrier_cap >= 0 && cap > carrier_cap) {
    throw WindowError("requested degree " + std::to_string(cap) + " exceeds the carrier cap " +
                      std::to_string(carrier_cap));
  }

  KoszulComplex k;
  k.monoid = a;
  k.cap = cap;
  k.alpha = alpha;
  k.names = names;
  bool graded = true;
  int max_deg = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (alpha[i].object != c.unit) throw WrongObject(names[i] + " does not lie in the unit object");
    if (!is_central(*a, alpha[i])) throw NotCentral(names[i] + " is not in the commutant at the unit object");
    k.degrees.push_back(homogeneous_degree(a->carrier, alpha[i]));
    if (!k.degrees.back()) graded = false;
    max_deg = std::max(max_deg, top_degree(a->carrier, alpha[i]));
  }
  for (std::size_t p = 0; p <= n; ++p) k.summands.push_back(subsets_of_size(n, p));

  const ModuleData base = forget_right(regular_module(a));
  std::vector<ObjectMaps> l(n);
  parallel_for(exec, n, [&](std::size_t i) { l[i] = mult_operator(alpha[i], base); });

  ChainComplex& cx = k.complex;
  cx.graded = graded && a->carrier.is_graded();
  if (cap >= 0) cx.window = cap - max_deg;
  for (std::size_t p = 0; p <= n; ++p) {
    std::vector<int> shifts;
    for (const auto& s : k.summands[p]) {
      int shift = 0;
      if (graded) {
        for (std::size_t i : s) shift += *k.degrees[i];
      }
      shifts.push_back(shift);
    }
    ModuleData term = direct_sum_module(base, k.summands[p].size(), shifts);
    term.name = "K_" + std::to_string(p);
    cx.terms.push_back(std::move(term));
  }
  cx.d.resize(n + 1);
  const std::size_t objects = c.num_objects();
  for (std::size_t p = 1; p <= n; ++p) {
    cx.d[p].resize(objects);
    parallel_for(exec, objects, [&](std::size_t x) {
      const std::size_t dim = a->carrier.dims[x];
      MatrixBuilder b(c.field, k.summands[p - 1].size() * dim, k.summands[p].size() * dim);
      for (std::size_t j = 0; j < k.summands[p].size(); ++j) {
        const Subset& s = k.summands[p][j];
        for (std::size_t pos = 0; pos < s.size(); ++pos) {
          Subset face = s;
          face.erase(face.begin() + static_cast<std::ptrdiff_t>(pos));
          b.add_block(k.summand_index(face) * dim, j * dim, l[s[pos]][x], sign(pos));
        }
      }
      cx.d[p][x] = b.build();
    });
  }

  k.certificate = certify_d_squared(cx);
  k.certificate.statement = "K(" + [&] {
    std::string s;
    for (std::size_t i = 0; i < n; ++i) s += (i ? ", " : "") + names[i];
    return s;
  }() + ") is a complex";
  const Subfamily ideal = generated_submodule(*a, alpha);
  bool image_ok = true;
  for (std::size_t x = 0; x < objects && image_ok; ++x) {
    image_ok = same_subspace(image(cx.d[1][x]), ideal[x]);
  }
  k.certificate.add("im d1 = A⟨α⟩", image_ok);
  return k;
}

ResolutionCheck check_resolution(const MonoidPtr& a, const std::vector<ElementRef>& alpha, int cap,
                                 std::vector<std::string> names, const Exec& exec) {
  ResolutionCheck out;
  out.koszul = build_koszul(a, alpha, cap, names, exec);
  KoszulComplex& k = out.koszul;
  if (!k.complex.graded && a->carrier.cap >= 0) {
    throw PreconditionError("homology of a truncated carrier needs homogeneous elements");
  }
  out.regularity = is_regular_sequence(*a, alpha, cap, k.names);

  const ModuleData base = forget_right(regular_module(a));
  const QuotientModule q = quotient_module(base, generated_submodule(*a, alpha));
  k.complex.augmentation = Augmentation{q.module, q.projection};

  out.homology = homology(k.complex, exec);
  out.homology.title = "Koszul homology";
  bool higher_zero = true;
  std::string nonzero;
  for (const auto& e : out.homology.entries) {
    if (e.p >= 1 && e.dim > 0) {
      higher_zero = false;
      if (nonzero.empty()) {
        nonzero = "H_" + std::to_string(e.p) + " has dimension " + std::to_string(e.dim) + " at " +
                  a->cat().objects[e.object] + (e.degree ? ", degree " + std::to_string(*e.degree) : "");
      }
    }
  }
  const Certificate exact = certify_exact(k.complex, exec);
  bool h0_ok = true;
  for (const auto& ch : exact.checks) {
    if (ch.name == "ε is surjective" || ch.name == "ker ε = im d1") h0_ok = h0_ok && ch.pass;
  }

  Certificate& cert = out.certificate;
  cert.statement = "regular sequence ⇒ K(α) resolves A/A⟨α⟩";
  cert.add("d∘d = 0", k.certificate.pass());
  const bool regular = out.regularity.regular();
  std::string reg_detail = out.regularity.failure();
  if (regular && out.regularity.cap >= 0) reg_detail = "up to degree " + std::to_string(out.regularity.cap);
  cert.add("α is a regular sequence", regular, reg_detail);
  cert.add("H_p = 0 for 1 <= p <= n", higher_zero, nonzero);
  cert.add("H_0 ≅ A/A⟨α⟩ via the projection", h0_ok);
  cert.add("consistent with the resolution theorem", !regular || (higher_zero && h0_ok),
           regular ? std::string{} : "not regular, so exactness is not predicted");
  out.homology.certificates.push_back(cert);
  return out;
}

PascalSplit pascal_split(const KoszulComplex& k, const Exec& exec) {
  const std::size_t n = k.size();
  if (n < 2) throw PreconditionError("the Pascal decomposition needs at least two elements");
  PascalSplit out;
  std::vector<ElementRef> head(k.alpha.begin(), k.alpha.end() - 1);
  std::vector<std::string> head_names(k.names.begin(), k.names.end() - 1);
  out.smaller = build_koszul(k.monoid, head, k.cap, head_names, exec);
  const KoszulComplex& s = out.smaller;
  const auto& a = *k.monoid;
  const Field& f = a.field();
  const std::size_t objects = a.cat().num_objects();
  const std::size_t last = n - 1;

  std::vector<std::map<Subset, std::size_t>> big_index(n + 1), small_index(n + 1);
  for (std::size_t p = 0; p <= n; ++p) {
    for (std::size_t j = 0; j < k.summands[p].size(); ++j) big_index[p][k.summands[p][j]] = j;
  }
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t j = 0; j < s.summands[p].size(); ++j) small_index[p][s.summands[p][j]] = j;
  }
  auto small_list = [&](std::size_t p) { return p < n ? s.summands[p] : std::vector<Subset>{}; };

  out.iota.resize(n + 1);
  out.tau.resize(n + 1);
  out.rho.resize(n + 1);
  out.sigma.resize(n + 1);
  for (std::size_t p = 0; p <= n; ++p) {
    for (std::size_t x = 0; x < objects; ++x) {
      const std::size_t dim = a.carrier.dims[x];
      out.iota[p].push_back(summand_map(f, dim, small_list(p), k.summands[p], big_index[p],
                                        [](const Subset& t) { return std::optional<Subset>(t); }));
      const std::vector<Subset> below = p >= 1 ? small_list(p - 1) : std::vector<Subset>{};
      std::map<Subset, std::size_t> below_index = p >= 1 ? small_index[p - 1] : std::map<Subset, std::size_t>{};
      out.tau[p].push_back(summand_map(f, dim, k.summands[p], below, below_index, [&](const Subset& t) {
        if (t.empty() || t.back() != last) return std::optional<Subset>();
        return std::optional<Subset>(Subset(t.begin(), t.end() - 1));
      }));
      out.rho[p].push_back(out.iota[p].back().transpose());
      out.sigma[p].push_back(out.tau[p].back().transpose());
    }
  }

  const ChainComplex& big = k.complex;
  const ChainComplex& sm = s.complex;
  const ModuleData base = forget_right(regular_module(k.monoid));
  const ObjectMaps l_last = mult_operator(k.alpha[last], base);
  auto small_d = [&](std::size_t p, std::size_t x) -> Matrix {
    // d_p of K^{n-1}, including the zero maps at the ends.
    const std::size_t rows = p >= 1 && p - 1 < n ? sm.terms[p - 1].carrier.dims[x] : 0;
    const std::size_t cols = p < n ? sm.terms[p].carrier.dims[x] : 0;
    if (p >= 1 && p < n) return sm.d[p][x];
    return Matrix::zero(f, rows, cols);
  };
  auto big_d = [&](std::size_t p, std::size_t x) -> Matrix {
    if (p >= 1) return big.d[p][x];
    return Matrix::zero(f, 0, big.terms[0].carrier.dims[x]);
  };

  Certificate& cert = out.certificate;
  cert.statement = "K^n = K^{n-1} ⊕ K^{n-1}[-1] with δ = (-1)^{p-1} L_" + k.names[last];
  for (std::size_t p = 0; p <= n; ++p) {
    bool split = true, square1 = true, square2 = true, restrict = true, delta = true;
    std::size_t cycles = 0;
    for (std::size_t x = 0; x < objects; ++x) {
      const Matrix& i = out.iota[p][x];
      const Matrix& t = out.tau[p][x];
      const Matrix& r = out.rho[p][x];
      const Matrix& sg = out.sigma[p][x];
      split = split && (t * i).is_zero() && r * i == Matrix::identity(f, i.cols()) &&
              t * sg == Matrix::identity(f, t.rows()) && i * r + sg * t == Matrix::identity(f, i.rows());
      if (p == 0) continue;
      const Matrix dn = big_d(p, x);
      square1 = square1 && dn * i == out.iota[p - 1][x] * small_d(p, x);
      square2 = square2 && out.tau[p - 1][x] * dn == small_d(p - 1, x) * t;
      // The second block: σ then d^n equals ι (-1)^{p-1} L + σ d^{n-1}.
      const Matrix l_block = block_operator(f, l_last[x], s.summands[p - 1].size()).scaled(sign(p - 1));
      const Matrix expected = out.iota[p - 1][x] * l_block + out.sigma[p - 1][x] * small_d(p - 1, x);
      restrict = restrict && dn * sg == expected;
      // Connecting map on lifted cycles of K_{p-1}^{n-1}.
      const SubspacePresentation z = kernel(small_d(p - 1, x));
      cycles += z.dim();
      if (z.dim() == 0) continue;
      const Matrix w = dn * (sg * z.basis);
      delta = delta && (out.tau[p - 1][x] * w).is_zero() && out.rho[p - 1][x] * w == l_block * z.basis;
    }
    const std::string ps = std::to_string(p);
    cert.add("row " + ps + " is split exact", split);
    if (p == 0) continue;
    cert.add("d ι = ι d at p = " + ps, square1);
    cert.add("τ d = d τ at p = " + ps, square2);
    cert.add("d on the second block is d + (-1)^{p-1} L at p = " + ps, restrict);
    cert.add("δ = (-1)^{p-1} L on lifted cycles at p = " + ps, delta, std::to_string(cycles) + " cycles");
  }
  return out;
}

}  // namespace koszulcat
