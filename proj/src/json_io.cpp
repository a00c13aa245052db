#include "dualz/json_io.hpp"

#include <string>

#include "dualz/errors.hpp"
#include "dualz/normal_form.hpp"

namespace dualz {
namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object with field '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

}  // namespace

Json to_json(const Int& x) { return x.get_str(); }

Int int_from_json(const Json& j) {
  if (j.is_string()) return parse_int(j.get<std::string>());
  if (j.is_number_integer()) return parse_int(j.dump());
  throw ParseError("expected an integer (string or number), got " + j.dump());
}

std::size_t count_from_json(const Json& j, const char* what) {
  const Int v = int_from_json(j);
  if (v < 0 || !v.fits_ulong_p())
    throw ParseError(std::string(what) + " must be a nonnegative count");
  return v.get_ui();
}

Json to_json(const IntMatrix& m) {
  if (m.empty()) return Json{{"rows", m.rows()}, {"cols", m.cols()}};
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const Json& j, std::optional<std::size_t> rows,
                           std::optional<std::size_t> cols) {
  IntMatrix m;
  if (j.is_object()) {
    const std::size_t r = count_from_json(field(j, "rows"), "rows");
    const std::size_t c = count_from_json(field(j, "cols"), "cols");
    if (r != 0 && c != 0) {
      if (!j.contains("entries"))
        throw ParseError("nonempty matrix given by shape needs an array of rows");
      m = matrix_from_json(j["entries"]);
      if (m.rows() != r || m.cols() != c) throw ParseError("matrix entries disagree with shape");
    } else {
      m = IntMatrix(r, c);
    }
  } else if (j.is_array()) {
    if (j.empty()) {
      m = IntMatrix(rows.value_or(0), cols.value_or(0));
      if (!m.empty()) throw ParseError("empty array for a matrix of nonzero size");
    } else {
      const std::size_t r = j.size();
      if (!j[0].is_array()) throw ParseError("matrix rows must be arrays");
      const std::size_t c = j[0].size();
      m = IntMatrix(r, c);
      for (std::size_t i = 0; i < r; ++i) {
        if (!j[i].is_array() || j[i].size() != c)
          throw ParseError("matrix rows must have equal length");
        for (std::size_t k = 0; k < c; ++k) m(i, k) = int_from_json(j[i][k]);
      }
    }
  } else {
    throw ParseError("expected a matrix, got " + j.dump());
  }
  if ((rows && m.rows() != *rows) || (cols && m.cols() != *cols))
    throw DimensionError("matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                         ", expected " + (rows ? std::to_string(*rows) : "?") + "x" +
                         (cols ? std::to_string(*cols) : "?"));
  return m;
}

Json to_json(const SubgroupEmbedding& e) {
  return Json{{"ambient_rank", e.ambient_rank()}, {"matrix", to_json(e.matrix())}};
}

SubgroupEmbedding embedding_from_json(const Json& j) {
  const std::size_t n = count_from_json(field(j, "ambient_rank"), "ambient_rank");
  const Json& mj = field(j, "matrix");
  IntMatrix m;
  if (mj.is_array() && mj.empty())
    m = IntMatrix(n, 0);
  else
    m = matrix_from_json(mj, n, std::nullopt);
  return SubgroupEmbedding::make(n, std::move(m));
}

Json to_json(const DiffStructure& d) { return Json{{"rank", d.rank()}, {"e", to_json(d.e())}}; }

DiffStructure diff_from_json(const Json& j) {
  const std::size_t n = count_from_json(field(j, "rank"), "rank");
  return DiffStructure::make(n, matrix_from_json(field(j, "e"), n, n));
}

Json to_json(const DiffMorphism& f) {
  return Json{{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"f", to_json(f.f())}};
}

DiffMorphism diff_morphism_from_json(const Json& j) {
  DiffStructure s = diff_from_json(field(j, "source"));
  DiffStructure t = diff_from_json(field(j, "target"));
  IntMatrix f = matrix_from_json(field(j, "f"), t.rank(), s.rank());
  return DiffMorphism::make(std::move(s), std::move(t), std::move(f));
}

Json to_json(const BoundedComplex& x) {
  Json diffs = Json::array();
  for (const auto& d : x.differentials()) diffs.push_back(to_json(d));
  return Json{{"low_degree", x.low_degree()}, {"ranks", x.ranks()}, {"differentials", diffs}};
}

BoundedComplex complex_from_json(const Json& j) {
  const Json& lj = field(j, "low_degree");
  const Int low = int_from_json(lj);
  if (!low.fits_sint_p()) throw ParseError("low_degree out of range");
  const Json& rj = field(j, "ranks");
  if (!rj.is_array()) throw ParseError("ranks must be an array");
  std::vector<std::size_t> ranks;
  for (const auto& r : rj) ranks.push_back(count_from_json(r, "rank"));
  std::vector<IntMatrix> diffs;
  const Json& dj = j.contains("differentials") ? j["differentials"] : Json::array();
  if (!dj.is_array()) throw ParseError("differentials must be an array");
  if (dj.size() != (ranks.empty() ? 0 : ranks.size() - 1))
    throw DimensionError("complex with " + std::to_string(ranks.size()) + " terms needs " +
                         std::to_string(ranks.empty() ? 0 : ranks.size() - 1) + " differentials");
  for (std::size_t i = 0; i < dj.size(); ++i)
    diffs.push_back(matrix_from_json(dj[i], ranks[i + 1], ranks[i]));
  return BoundedComplex::make(static_cast<int>(low.get_si()), std::move(ranks), std::move(diffs));
}

BoundedComplex object_from_json(const Json& j) {
  if (j.is_object() && j.contains("ranks")) return complex_from_json(j);
  if (j.is_object() && j.contains("ambient_rank"))
    return BoundedComplex::from_embedding(embedding_from_json(j));
  throw ParseError("expected a complex or an embedding object");
}

Json to_json(const ChainMap& f) {
  Json comps = Json::array();
  for (const auto& c : f.components()) comps.push_back(to_json(c));
  return Json{{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"components", comps}};
}

namespace {

std::vector<IntMatrix> components_from_json(const Json& cj, const BoundedComplex& x,
                                            const BoundedComplex& y) {
  if (!cj.is_array() || cj.size() != x.ranks().size())
    throw ParseError("chain map needs one component per source degree");
  std::vector<IntMatrix> comps;
  for (std::size_t t = 0; t < cj.size(); ++t) {
    const int m = x.low_degree() + static_cast<int>(t);
    comps.push_back(matrix_from_json(cj[t], y.rank_at(m), x.rank_at(m)));
  }
  return comps;
}

}  // namespace

ChainMap chain_map_from_json(const Json& j) {
  BoundedComplex x = complex_from_json(field(j, "source"));
  BoundedComplex y = complex_from_json(field(j, "target"));
  auto comps = components_from_json(field(j, "components"), x, y);
  return ChainMap::make(std::move(x), std::move(y), std::move(comps));
}

Json to_json(const OrbitMorphism& f) {
  Json comps = Json::array();
  for (const auto& [i, c] : f.components()) {
    Json parts = Json::array();
    for (const auto& m : c.components()) parts.push_back(to_json(m));
    comps.push_back(Json{{"shift", i}, {"components", parts}});
  }
  return Json{{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"components", comps}};
}

OrbitMorphism orbit_morphism_from_json(const Json& j) {
  const BoundedComplex x = complex_from_json(field(j, "source"));
  const BoundedComplex y = complex_from_json(field(j, "target"));
  OrbitMorphism f(x, y);
  const Json& cj = field(j, "components");
  if (!cj.is_array()) throw ParseError("orbit components must be an array");
  for (const auto& c : cj) {
    const Int i = int_from_json(field(c, "shift"));
    if (!i.fits_sint_p()) throw ParseError("shift out of range");
    const BoundedComplex yi = shift(y, static_cast<int>(i.get_si()));
    f.add(static_cast<int>(i.get_si()),
          ChainMap::make(x, yi, components_from_json(field(c, "components"), x, yi)));
  }
  return f;
}

Json to_json(const FiniteAbGroupInv& g) {
  Json a = Json::array();
  for (const auto& f : g.factors()) a.push_back(to_json(f));
  return a;
}

FiniteAbGroupInv ab_group_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a list of invariant factors");
  IntVector orders;
  for (const auto& x : j) orders.push_back(int_from_json(x));
  return FiniteAbGroupInv::from_cyclic_orders(orders);
}

Json to_json(const GroupInvariants& g) {
  return Json{{"free_rank", g.free_rank}, {"torsion", to_json(g.torsion)}};
}

Json to_json(const Decomposition& d) {
  Json a = Json::array();
  for (const auto& x : d.divisors) a.push_back(to_json(x));
  return a;
}

Json to_json(const SmithDecomposition& s) {
  Json diag = Json::array();
  for (const auto& x : s.diagonal()) diag.push_back(to_json(x));
  return Json{{"U", to_json(s.U)}, {"D", to_json(s.D)}, {"V", to_json(s.V)}, {"diagonal", diag}};
}

Json to_json(const NormalForm& nf) {
  return Json{{"im_rank", nf.im_rank},
              {"ker_rank", nf.ker_rank},
              {"mu", to_json(nf.mu)},
              {"certificate", to_json(nf.certificate)}};
}

}  // namespace dualz
