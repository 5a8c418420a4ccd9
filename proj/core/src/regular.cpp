#include "koszulcat/regular.hpp"

#include <set>

#include "koszulcat/errors.hpp"

namespace koszulcat {

bool RegularityCertificate::regular() const {
  for (const auto& s : stages) {
    if (!s.injective) return false;
  }
  return quotient_nonzero.value_or(true);
}

std::string RegularityCertificate::failure() const {
  for (std::size_t i = 0; i < stages.size(); ++i) {
    const auto& s = stages[i];
    if (!s.injective) {
      return "multiplication by " + s.element + " is not injective (stage " + std::to_string(i + 1) +
             "): it kills " + s.witness->description;
    }
  }
  if (quotient_nonzero && !*quotient_nonzero) return "the quotient by the sequence is zero";
  return {};
}

Certificate RegularityCertificate::to_certificate(const std::string& statement) const {
  Certificate c;
  c.statement = statement;
  for (std::size_t i = 0; i < stages.size(); ++i) {
    const auto& s = stages[i];
    std::string detail = std::to_string(s.cells) + " cells";
    if (s.window) detail += ", degrees <= " + std::to_string(*s.window);
    if (s.witness) detail += "; kills " + s.witness->description;
    c.add("stage " + std::to_string(i + 1) + ": " + s.element + " acts injectively", s.injective, detail);
  }
  if (quotient_nonzero) c.add("quotient is nonzero", *quotient_nonzero);
  return c;
}

RegularityCertificate is_regular(const MonoidData& a, const ElementRef& elt, const ModuleData& m, int cap,
                                 std::string name) {
  const int carrier_cap = m.carrier.cap;
  if (cap == kInheritCap) cap = carrier_cap;
  if (cap >= 0 && carrier_cap >= 0 && cap > carrier_cap) {
    throw WindowError("requested degree " + std::to_string(cap) + " exceeds the carrier cap " +
                      std::to_string(carrier_cap));
  }
  if (name.empty()) name = format_element(a.carrier, elt.object, elt.coords);
  if (!is_central(a, elt)) throw NotCentral(name + " is not in the commutant at the unit object");
  const ObjectMaps l = mult_operator(elt, m);
  const auto hd = homogeneous_degree(a.carrier, elt);
  const bool graded = cap >= 0 || m.carrier.is_graded();

  RegularityCertificate cert;
  cert.cap = cap;
  RegularityStage stage;
  stage.element = name;
  if (cap >= 0) stage.window = cap - (hd ? *hd : top_degree(a.carrier, elt));

  for (std::size_t x = 0; x < m.carrier.num_objects() && stage.injective; ++x) {
    std::vector<std::vector<std::size_t>> groups;
    std::vector<std::optional<int>> group_degree;
    if (graded && hd) {
      std::set<int> degs(m.carrier.degrees[x].begin(), m.carrier.degrees[x].end());
      for (int d : degs) {
        if (stage.window && d > *stage.window) continue;
        groups.push_back(m.carrier.basis_in_degree(x, d));
        group_degree.push_back(d);
      }
    } else {
      std::vector<std::size_t> cols;
      for (std::size_t i = 0; i < m.carrier.dims[x]; ++i) {
        if (!stage.window || m.carrier.degrees[x][i] <= *stage.window) cols.push_back(i);
      }
      groups.push_back(cols);
      group_degree.push_back(std::nullopt);
    }
    for (std::size_t g = 0; g < groups.size(); ++g) {
      ++stage.cells;
      const auto& cols = groups[g];
      if (cols.empty()) continue;
      const SubspacePresentation k = kernel(l[x].select_columns(cols));
      if (k.dim() == 0) continue;
      MatrixBuilder v(m.field(), m.carrier.dims[x], 1);
      for (const auto& [i, c] : vector_entries(k.basis.column(0))) v.add(cols[i], 0, c);
      RegularityWitness w;
      w.object = x;
      w.degree = group_degree[g];
      w.vector = v.build();
      w.description = format_element(m.carrier, x, w.vector);
      if (m.carrier.num_objects() > 1) w.description += " in " + m.cat().objects[x];
      stage.injective = false;
      stage.witness = std::move(w);
      break;
    }
  }
  cert.stages.push_back(std::move(stage));
  return cert;
}

RegularityCertificate is_regular_sequence(const MonoidData& a, const std::vector<ElementRef>& gens, int cap,
                                          std::vector<std::string> names) {
  if (names.empty()) {
    for (const auto& g : gens) names.push_back(format_element(a.carrier, g.object, g.coords));
  }
  if (names.size() != gens.size()) throw DimensionMismatch("one name per generator expected");
  const bool graded = a.carrier.is_graded();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].object != a.cat().unit) throw WrongObject(names[i] + " does not lie in the unit object");
    if (!is_central(a, gens[i])) throw NotCentral(names[i] + " is not in the commutant at the unit object");
    if (graded && !homogeneous_degree(a.carrier, gens[i])) {
      throw PreconditionError(names[i] + " is not homogeneous; graded sequences need homogeneous generators");
    }
  }
  const auto ap = std::make_shared<const MonoidData>(a);
  const ModuleData regular = forget_right(regular_module(ap));
  RegularityCertificate cert;
  cert.cap = cap == kInheritCap ? a.carrier.cap : cap;
  ModuleData current = regular;
  std::vector<ElementRef> prefix;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    auto stage = is_regular(a, gens[i], current, cap, names[i]);
    cert.stages.push_back(std::move(stage.stages.front()));
    prefix.push_back(gens[i]);
    current = quotient_module(regular, generated_submodule(a, prefix)).module;
  }
  cert.quotient_nonzero = current.carrier.total_dim() > 0;
  return cert;
}

}  // namespace koszulcat
