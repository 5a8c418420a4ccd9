#include "koszulcat/category.hpp"

#include "koszulcat/errors.hpp"
#include "koszulcat/linalg.hpp"

namespace koszulcat {

std::shared_ptr<const CategoryPresentation> CategoryPresentation::trivial(const Field& f) {
  auto c = std::make_shared<CategoryPresentation>();
  c->backend = Backend::Trivial;
  c->field = f;
  c->objects = {"1"};
  c->unit = 0;
  c->diamond_obj = {0};
  c->hom_basis = {{"id"}};
  const Matrix one = Matrix::identity(f, 1);
  c->composition = {one};
  c->identity = {one};
  c->diamond_mor = {one};
  c->symmetry = {one};
  return c;
}

const Matrix& CategoryPresentation::composition_matrix(std::size_t x, std::size_t y,
                                                       std::size_t z) const {
  const std::size_t n = num_objects();
  return composition[(x * n + y) * n + z];
}

const Matrix& CategoryPresentation::diamond_matrix(std::size_t x, std::size_t y, std::size_t x2,
                                                   std::size_t y2) const {
  const std::size_t n = num_objects();
  return diamond_mor[((x * n + y) * n + x2) * n + y2];
}

Matrix CategoryPresentation::basis_morphism(std::size_t x, std::size_t y, std::size_t k) const {
  return Matrix::unit_vector(field, hom_dim(x, y), k);
}

Matrix CategoryPresentation::compose(std::size_t x, std::size_t y, std::size_t z, const Matrix& g,
                                     const Matrix& f) const {
  return composition_matrix(x, y, z) * kronecker(g, f);
}

Matrix CategoryPresentation::tensor(std::size_t x, std::size_t y, std::size_t x2, std::size_t y2,
                                    const Matrix& f, const Matrix& g) const {
  return diamond_matrix(x, y, x2, y2) * kronecker(f, g);
}

std::size_t CategoryPresentation::object_index(const std::string& name) const {
  for (std::size_t i = 0; i < objects.size(); ++i) {
    if (objects[i] == name) return i;
  }
  throw DimensionMismatch("unknown object '" + name + "'");
}

void CategoryPresentation::check_shapes() const {
  const std::size_t n = num_objects();
  if (n == 0) throw DimensionMismatch("category has no objects");
  if (unit >= n) throw DimensionMismatch("unit object out of range");
  if (diamond_obj.size() != n * n || hom_basis.size() != n * n || symmetry.size() != n * n ||
      identity.size() != n || composition.size() != n * n * n || diamond_mor.size() != n * n * n * n) {
    throw DimensionMismatch("category tables have the wrong number of entries");
  }
  for (std::size_t v : diamond_obj) {
    if (v >= n) throw DimensionMismatch("diamond table names an unknown object");
  }
  auto expect = [&](const Matrix& m, std::size_t r, std::size_t c, const std::string& what) {
    if (m.rows() != r || m.cols() != c) {
      throw DimensionMismatch(what + " has shape " + std::to_string(m.rows()) + "x" +
                              std::to_string(m.cols()) + ", expected " + std::to_string(r) + "x" +
                              std::to_string(c));
    }
    if (m.field() != field) throw DimensionMismatch(what + " is over a different field");
  };
  for (std::size_t x = 0; x < n; ++x) {
    expect(identity[x], hom_dim(x, x), 1, "identity of " + objects[x]);
    for (std::size_t y = 0; y < n; ++y) {
      expect(symmetry[pair(x, y)], hom_dim(diamond(x, y), diamond(y, x)), 1,
             "symmetry " + objects[x] + "," + objects[y]);
      for (std::size_t z = 0; z < n; ++z) {
        expect(composition_matrix(x, y, z), hom_dim(x, z), hom_dim(y, z) * hom_dim(x, y),
               "composition " + objects[x] + "->" + objects[y] + "->" + objects[z]);
        for (std::size_t w = 0; w < n; ++w) {
          expect(diamond_matrix(x, y, z, w), hom_dim(diamond(x, y), diamond(z, w)),
                 hom_dim(x, z) * hom_dim(y, w), "diamond on morphisms");
        }
      }
    }
  }
}

namespace {

class PresentationValidator {
 public:
  explicit PresentationValidator(const CategoryPresentation& c) : c_(c), n_(c.num_objects()) {}

  ValidationReport run() {
    try {
      c_.check_shapes();
    } catch (const DimensionMismatch& e) {
      report_.add("shape", {}, e.what());
      return report_;
    }
    ++report_.checked;
    if (c_.backend == Backend::Trivial && (n_ != 1 || c_.hom_dim(0, 0) != 1)) {
      report_.add("trivial backend has one object with one-dimensional endomorphisms", {});
    }
    objects();
    composition();
    bifunctor();
    monoidal_morphisms();
    symmetry();
    return report_;
  }

 private:
  std::string ob(std::size_t x) const { return c_.objects[x]; }
  std::string mor(std::size_t x, std::size_t y, std::size_t k) const {
    return c_.hom_basis[c_.pair(x, y)][k];
  }
  Matrix basis(std::size_t x, std::size_t y, std::size_t k) const { return c_.basis_morphism(x, y, k); }
  std::size_t dia(std::size_t x, std::size_t y) const { return c_.diamond(x, y); }

  void objects() {
    for (std::size_t x = 0; x < n_; ++x) {
      ++report_.checked;
      if (dia(c_.unit, x) != x || dia(x, c_.unit) != x) report_.add("unit object", {ob(x)});
      for (std::size_t y = 0; y < n_; ++y) {
        for (std::size_t z = 0; z < n_; ++z) {
          ++report_.checked;
          if (dia(dia(x, y), z) != dia(x, dia(y, z))) {
            report_.add("associativity of diamond on objects", {ob(x), ob(y), ob(z)});
          }
        }
      }
    }
  }

  void composition() {
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = 0; y < n_; ++y) {
        for (std::size_t f = 0; f < c_.hom_dim(x, y); ++f) {
          const Matrix fm = basis(x, y, f);
          ++report_.checked;
          if (c_.compose(x, y, y, c_.identity[y], fm) != fm ||
              c_.compose(x, x, y, fm, c_.identity[x]) != fm) {
            report_.add("identity law of composition", {ob(x), ob(y), mor(x, y, f)});
          }
        }
        for (std::size_t z = 0; z < n_; ++z) {
          for (std::size_t w = 0; w < n_; ++w) {
            const std::size_t dxy = c_.hom_dim(x, y), dyz = c_.hom_dim(y, z), dzw = c_.hom_dim(z, w);
            for (std::size_t f = 0; f < dxy; ++f) {
              for (std::size_t g = 0; g < dyz; ++g) {
                const Matrix gf = c_.compose(x, y, z, basis(y, z, g), basis(x, y, f));
                for (std::size_t h = 0; h < dzw; ++h) {
                  ++report_.checked;
                  const Matrix lhs = c_.compose(x, z, w, basis(z, w, h), gf);
                  const Matrix hg = c_.compose(y, z, w, basis(z, w, h), basis(y, z, g));
                  const Matrix rhs = c_.compose(x, y, w, hg, basis(x, y, f));
                  if (lhs != rhs) {
                    report_.add("associativity of composition",
                                {ob(x), ob(y), ob(z), ob(w), mor(x, y, f), mor(y, z, g), mor(z, w, h)});
                  }
                }
              }
            }
          }
        }
      }
    }
  }

  // (g∘f)◇(g2∘f2) = (g◇g2)∘(f◇f2) and id◇id = id.
  void bifunctor() {
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = 0; y < n_; ++y) {
        ++report_.checked;
        const Matrix idid = c_.tensor(x, y, x, y, c_.identity[x], c_.identity[y]);
        if (idid != c_.identity[dia(x, y)]) report_.add("diamond preserves identities", {ob(x), ob(y)});
      }
    }
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t x2 = 0; x2 < n_; ++x2)
        for (std::size_t x3 = 0; x3 < n_; ++x3)
          for (std::size_t y = 0; y < n_; ++y)
            for (std::size_t y2 = 0; y2 < n_; ++y2)
              for (std::size_t y3 = 0; y3 < n_; ++y3) bifunctor_cell(x, x2, x3, y, y2, y3);
  }

  void bifunctor_cell(std::size_t x, std::size_t x2, std::size_t x3, std::size_t y, std::size_t y2,
                      std::size_t y3) {
    const std::size_t a = dia(x, y), b = dia(x2, y2), c = dia(x3, y3);
    for (std::size_t f = 0; f < c_.hom_dim(x, x2); ++f)
      for (std::size_t g = 0; g < c_.hom_dim(x2, x3); ++g)
        for (std::size_t f2 = 0; f2 < c_.hom_dim(y, y2); ++f2)
          for (std::size_t g2 = 0; g2 < c_.hom_dim(y2, y3); ++g2) {
            ++report_.checked;
            const Matrix gf = c_.compose(x, x2, x3, basis(x2, x3, g), basis(x, x2, f));
            const Matrix gf2 = c_.compose(y, y2, y3, basis(y2, y3, g2), basis(y, y2, f2));
            const Matrix lhs = c_.tensor(x, y, x3, y3, gf, gf2);
            const Matrix rhs = c_.compose(a, b, c, c_.tensor(x2, y2, x3, y3, basis(x2, x3, g), basis(y2, y3, g2)),
                                          c_.tensor(x, y, x2, y2, basis(x, x2, f), basis(y, y2, f2)));
            if (lhs != rhs) {
              report_.add("functoriality of diamond",
                          {mor(x, x2, f), mor(x2, x3, g), mor(y, y2, f2), mor(y2, y3, g2)});
            }
          }
  }

  void monoidal_morphisms() {
    const std::size_t u = c_.unit;
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t x2 = 0; x2 < n_; ++x2) {
        for (std::size_t f = 0; f < c_.hom_dim(x, x2); ++f) {
          ++report_.checked;
          const Matrix fm = basis(x, x2, f);
          if (c_.tensor(u, x, u, x2, c_.identity[u], fm) != fm ||
              c_.tensor(x, u, x2, u, fm, c_.identity[u]) != fm) {
            report_.add("unit law of diamond on morphisms", {mor(x, x2, f)});
          }
        }
      }
    }
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t x2 = 0; x2 < n_; ++x2)
        for (std::size_t y = 0; y < n_; ++y)
          for (std::size_t y2 = 0; y2 < n_; ++y2)
            for (std::size_t z = 0; z < n_; ++z)
              for (std::size_t z2 = 0; z2 < n_; ++z2) {
                for (std::size_t f = 0; f < c_.hom_dim(x, x2); ++f)
                  for (std::size_t g = 0; g < c_.hom_dim(y, y2); ++g)
                    for (std::size_t h = 0; h < c_.hom_dim(z, z2); ++h) {
                      ++report_.checked;
                      const Matrix fm = basis(x, x2, f), gm = basis(y, y2, g), hm = basis(z, z2, h);
                      const Matrix lhs =
                          c_.tensor(dia(x, y), z, dia(x2, y2), z2, c_.tensor(x, y, x2, y2, fm, gm), hm);
                      const Matrix rhs =
                          c_.tensor(x, dia(y, z), x2, dia(y2, z2), fm, c_.tensor(y, z, y2, z2, gm, hm));
                      if (lhs != rhs) {
                        report_.add("associativity of diamond on morphisms",
                                    {mor(x, x2, f), mor(y, y2, g), mor(z, z2, h)});
                      }
                    }
              }
  }

  void symmetry() {
    auto s = [&](std::size_t x, std::size_t y) -> const Matrix& { return c_.symmetry[c_.pair(x, y)]; };
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = 0; y < n_; ++y) {
        const std::size_t xy = dia(x, y), yx = dia(y, x);
        ++report_.checked;
        if (c_.compose(xy, yx, xy, s(y, x), s(x, y)) != c_.identity[xy]) {
          report_.add("symmetry is involutive", {ob(x), ob(y)});
        }
        for (std::size_t z = 0; z < n_; ++z) {
          // s_{x,y◇z} = (id_y ◇ s_{x,z}) ∘ (s_{x,y} ◇ id_z)
          ++report_.checked;
          const std::size_t yz = dia(y, z);
          const Matrix lhs = s(x, yz);
          const Matrix first = c_.tensor(xy, z, yx, z, s(x, y), c_.identity[z]);
          const Matrix second = c_.tensor(y, dia(x, z), y, dia(z, x), c_.identity[y], s(x, z));
          const Matrix rhs = c_.compose(dia(xy, z), dia(yx, z), dia(yz, x), second, first);
          if (lhs != rhs) report_.add("hexagon identity", {ob(x), ob(y), ob(z)});
        }
        for (std::size_t x2 = 0; x2 < n_; ++x2) {
          for (std::size_t y2 = 0; y2 < n_; ++y2) {
            for (std::size_t f = 0; f < c_.hom_dim(x, x2); ++f) {
              for (std::size_t g = 0; g < c_.hom_dim(y, y2); ++g) {
                ++report_.checked;
                const Matrix fm = basis(x, x2, f), gm = basis(y, y2, g);
                const std::size_t x2y2 = dia(x2, y2), y2x2 = dia(y2, x2);
                const Matrix lhs = c_.compose(xy, x2y2, y2x2, s(x2, y2), c_.tensor(x, y, x2, y2, fm, gm));
                const Matrix rhs = c_.compose(xy, yx, y2x2, c_.tensor(y, x, y2, x2, gm, fm), s(x, y));
                if (lhs != rhs) report_.add("naturality of symmetry", {mor(x, x2, f), mor(y, y2, g)});
              }
            }
          }
        }
      }
    }
  }

  const CategoryPresentation& c_;
  std::size_t n_;
  ValidationReport report_;
};

}  // namespace

ValidationReport validate_presentation(const CategoryPresentation& c) {
  return PresentationValidator(c).run();
}

}  // namespace koszulcat
