#include "dualz/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "dualz/errors.hpp"
#include "dualz/normal_form.hpp"
#include "dualz/verify.hpp"

namespace dualz {
namespace {

enum class Format { json, text };

struct Context {
  std::istream& in;
  std::ostream& out;
  Format format = Format::json;
};

Json read_input(Context& ctx, const std::string& spec) {
  std::string text;
  const auto first = spec.find_first_not_of(" \t\r\n");
  if (spec == "-") {
    std::ostringstream ss;
    ss << ctx.in.rdbuf();
    text = ss.str();
  } else if (first != std::string::npos && (spec[first] == '{' || spec[first] == '[')) {
    text = spec;
  } else {
    std::ifstream f(spec);
    if (!f) throw ParseError("cannot read input file '" + spec + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

// Compact rendering with integers unquoted.
std::string render_inline(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + render_inline(j[i]);
    return s + "]";
  }
  if (j.is_object()) {
    std::string s = "{";
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      s += (first ? "" : ", ") + k + ": " + render_inline(v);
      first = false;
    }
    return s + "}";
  }
  return j.dump();
}

void render_text(std::ostream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (!j.is_object()) {
    os << pad << render_inline(j) << "\n";
    return;
  }
  for (const auto& [k, v] : j.items()) {
    const bool nested = v.is_object() || (v.is_array() && !v.empty() && v[0].is_object());
    if (!nested) {
      os << pad << k << ": " << render_inline(v) << "\n";
    } else if (v.is_object()) {
      os << pad << k << ":\n";
      render_text(os, v, indent + 2);
    } else {
      os << pad << k << ":\n";
      for (const auto& item : v) {
        os << pad << "  -\n";
        render_text(os, item, indent + 4);
      }
    }
  }
}

void emit(Context& ctx, const Json& j) {
  if (ctx.format == Format::json)
    ctx.out << j.dump(2) << "\n";
  else
    render_text(ctx.out, j, 0);
}

IntMatrix matrix_input(const Json& j) {
  if (j.is_object() && j.contains("matrix")) return matrix_from_json(j["matrix"]);
  return matrix_from_json(j);
}

Json certificate_json(const EmbeddingIsomorphism& c) {
  return Json{{"b", to_json(c.b)}, {"a", to_json(c.a)}};
}

std::string describe_divisor(const Int& g) {
  if (g == 0) return "(0 ⊂ Z)";
  if (g == 1) return "(Z = Z)";
  return "(" + g.get_str() + "Z ⊂ Z)";
}

// ---------------------------------------------------------------------------

int cmd_snf(Context& ctx, const std::string& input) {
  emit(ctx, to_json(snf(matrix_input(read_input(ctx, input)))));
  return 0;
}

int cmd_decompose(Context& ctx, const std::string& input) {
  const Json j = read_input(ctx, input);
  if (j.is_object() && j.contains("ranks")) {
    const BoundedComplex x = complex_from_json(j);
    const Width2Decomposition w = decompose_width2(x);
    Json parts = Json::array();
    for (const auto& s : w.summands)
      parts.push_back(Json{{"degree", s.degree},
                           {"embedding", to_json(s.embedding)},
                           {"divisors", to_json(decompose_embedding(s.embedding))}});
    Json cert = Json::array();
    for (const auto& c : w.certificate) cert.push_back(to_json(c));
    emit(ctx, Json{{"summands", parts}, {"certificate", cert}, {"normal", to_json(w.normal)}});
    return 0;
  }
  const SubgroupEmbedding e = embedding_from_json(j);
  const Decomposition d = decompose_embedding(e);
  Json names = Json::array();
  for (const auto& g : d.divisors) names.push_back(describe_divisor(g));
  emit(ctx, Json{{"divisors", to_json(d)},
                 {"summands", names},
                 {"stalk_multiplicity", summand_invariants(e).stalk_multiplicity}});
  return 0;
}

int cmd_iso(Context& ctx, const std::string& a, const std::string& b) {
  const SubgroupEmbedding e1 = embedding_from_json(read_input(ctx, a));
  const SubgroupEmbedding e2 = embedding_from_json(read_input(ctx, b));
  const IsoResult r = iso_embeddings(e1, e2);
  Json j{{"isomorphic", r.isomorphic}};
  if (r.certificate) {
    j["certificate"] = certificate_json(*r.certificate);
    j["certificate_verified"] = verify_certificate(e1, e2, *r.certificate);
  }
  j["torsion"] = Json::array({to_json(cokernel_torsion(e1)), to_json(cokernel_torsion(e2))});
  emit(ctx, j);
  return r.isomorphic ? 0 : 1;
}

int cmd_normalize(Context& ctx, const std::string& input) {
  const DiffStructure d = diff_from_json(read_input(ctx, input));
  const NormalForm nf = normalize(d);
  Json j = to_json(nf);
  j["embedding"] = to_json(to_embedding(d));
  emit(ctx, j);
  return 0;
}

int cmd_is_projective(Context& ctx, const std::string& input) {
  const bool p = is_projective(diff_from_json(read_input(ctx, input)));
  emit(ctx, Json{{"projective", p}});
  return p ? 0 : 1;
}

int cmd_hom_rank(Context& ctx, const std::string& a, const std::string& b,
                 const std::string& ideal, bool orbit) {
  const IdealSpec spec = parse_ideal(ideal);
  const BoundedComplex x = object_from_json(read_input(ctx, a));
  const BoundedComplex y = object_from_json(read_input(ctx, b));
  const GroupInvariants g = hom_quotient(x, y, spec, orbit);
  emit(ctx, Json{{"ideal", std::string(ideal_name(spec))},
                 {"orbit", orbit},
                 {"free_rank", g.free_rank},
                 {"torsion", to_json(g.torsion)}});
  return 0;
}

int cmd_nullhomotopic(Context& ctx, const std::string& input) {
  const DiffMorphism f = diff_morphism_from_json(read_input(ctx, input));
  const auto h = is_null_homotopic(f);
  const auto p = factors_through_projective(f);
  Json j{{"null_homotopic", h.has_value()},
         {"factors_through_projective", p.has_value()}};
  if (h) {
    j["h"] = to_json(*h);
    j["h_verified"] = *h * f.source().e() + f.target().e() * *h == f.f();
  }
  if (p)
    j["factorization"] = Json{{"through", to_json(p->through)},
                              {"alpha", to_json(p->alpha)},
                              {"beta", to_json(p->beta)},
                              {"verified", verify_factorization(f, *p)}};
  emit(ctx, j);
  return h ? 0 : 1;
}

int cmd_resolution(Context& ctx, const std::string& input, std::size_t window) {
  const SubgroupEmbedding e = embedding_from_json(read_input(ctx, input));
  const ResolutionWindow w = complete_resolution(e, window);
  Json positions = Json::array();
  for (const auto& p : w.positions)
    positions.push_back(Json{{"position", p.position},
                             {"square_zero", p.square_zero},
                             {"exact", p.exact},
                             {"dual_exact", p.dual_exact}});
  emit(ctx, Json{{"module", to_json(w.module)},
                 {"differential", to_json(w.differential)},
                 {"linear", w.linear},
                 {"kernel_matches", w.kernel_matches},
                 {"positions", positions},
                 {"verified", w.verified()}});
  return w.verified() ? 0 : 1;
}

int cmd_to_ab(Context& ctx, const std::string& input) {
  emit(ctx, Json{{"torsion", to_json(to_Ab(embedding_from_json(read_input(ctx, input))))}});
  return 0;
}

int cmd_to_lprime(Context& ctx, const std::string& input) {
  const SubgroupEmbedding e = embedding_from_json(read_input(ctx, input));
  const FreeSplitting s = split_off_free(e);
  emit(ctx, Json{{"stalk_multiplicity", s.stalk_multiplicity}, {"reduced", to_json(s.reduced)}});
  return 0;
}

int cmd_cube_verify(Context& ctx, const CubeVerifyConfig& cfg) {
  const CubeVerifyReport r = cube_verify(cfg);
  emit(ctx, to_json(r));
  return r.passed() ? 0 : 1;
}

int cmd_krs_demo(Context& ctx) {
  const auto left = SubgroupEmbedding::make(2, IntMatrix{{6, 0}, {0, 1}});
  const auto right = SubgroupEmbedding::make(2, IntMatrix{{2, 0}, {0, 3}});
  const EmbeddingIsomorphism cert{IntMatrix{{1, 2}, {1, 3}}, IntMatrix{{3, 1}, {2, 1}}};
  const bool verified = verify_certificate(left, right, cert);
  const IsoResult generic = iso_embeddings(left, right);
  const bool generic_ok =
      generic.isomorphic && generic.certificate && verify_certificate(left, right, *generic.certificate);

  auto side = [](const SubgroupEmbedding& e, const IntVector& cols) {
    Json names = Json::array();
    for (const auto& g : cols) names.push_back(describe_divisor(g));
    return Json{{"embedding", to_json(e)},
                {"summands", names},
                {"divisors", to_json(decompose_embedding(e))},
                {"cokernel", to_json(cokernel_torsion(e))}};
  };

  Json cross = Json::array();
  bool cross_ok = true;
  for (long l : {6L, 1L})
    for (long r : {2L, 3L}) {
      const bool iso = iso_embeddings(SubgroupEmbedding::from_divisors({Int(l)}),
                                      SubgroupEmbedding::from_divisors({Int(r)}))
                           .isomorphic;
      cross_ok = cross_ok && !iso;
      cross.push_back(Json{{"left", describe_divisor(l)}, {"right", describe_divisor(r)}, {"isomorphic", iso}});
    }
  const bool same_divisors = decompose_embedding(left) == decompose_embedding(right);
  const bool ok = verified && generic_ok && same_divisors && cross_ok;
  emit(ctx, Json{{"left", side(left, {6, 1})},
                 {"right", side(right, {2, 3})},
                 {"certificate", certificate_json(cert)},
                 {"certificate_verified", verified},
                 {"generic_certificate", certificate_json(*generic.certificate)},
                 {"generic_certificate_verified", generic_ok},
                 {"same_canonical_divisors", same_divisors},
                 {"summand_pairs", cross},
                 {"krs_fails", ok}});
  return ok ? 0 : 1;
}

std::optional<std::uint64_t> env_seed() {
  const char* s = std::getenv("DUALZ_SEED");
  if (!s || !*s) return std::nullopt;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(s, &used);
    if (used != std::string(s).size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("DUALZ_SEED is not an unsigned integer: ") + s);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Gorenstein-projective modules over the dual integers: exact computations"};
  app.name(args.empty() ? "dualz" : args[0]);
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::function<int(Context&)> action;
  std::string a, b, ideal = "none";
  bool orbit = false;
  bool serial = false;
  std::size_t window = 3;
  std::optional<std::uint64_t> seed;
  CubeVerifyConfig cube;

  auto unary = [&](const char* name, const char* help, int (*fn)(Context&, const std::string&)) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", a, "JSON file, inline JSON, or - for stdin")->required();
    sub->callback([&, fn] { action = [&, fn](Context& c) { return fn(c, a); }; });
    return sub;
  };
  unary("snf", "Smith normal form with unimodular transforms", cmd_snf);
  unary("decompose", "Canonical decomposition of an embedding or a complex", cmd_decompose);
  unary("normalize", "Normal form of a differential structure", cmd_normalize);
  unary("is-projective", "Whether a differential structure is projective", cmd_is_projective);
  unary("nullhomotopic", "Null-homotopy witness and projective factorization", cmd_nullhomotopic);
  unary("to-ab", "Finite abelian group attached to an embedding", cmd_to_ab);
  unary("to-lprime", "Strip the (0 ⊂ Z) summands", cmd_to_lprime);

  auto* iso = app.add_subcommand("iso", "Isomorphism test for two embeddings");
  iso->add_option("first", a)->required();
  iso->add_option("second", b)->required();
  iso->callback([&] { action = [&](Context& c) { return cmd_iso(c, a, b); }; });

  auto* hom = app.add_subcommand("hom-rank", "Hom group in a quotient of C^b");
  hom->add_option("source", a)->required();
  hom->add_option("target", b)->required();
  hom->add_option("--ideal", ideal, "none, P, Q or PQ")->check(CLI::IsMember({"none", "P", "Q", "PQ"}));
  hom->add_flag("--orbit", orbit, "Work in the orbit category");
  hom->callback([&] { action = [&](Context& c) { return cmd_hom_rank(c, a, b, ideal, orbit); }; });

  auto* res = app.add_subcommand("resolution", "Window of the complete resolution");
  res->add_option("input", a)->required();
  res->add_option("--window", window, "Number of positions")->check(CLI::PositiveNumber);
  res->callback([&] { action = [&](Context& c) { return cmd_resolution(c, a, window); }; });

  auto* cv = app.add_subcommand("cube-verify", "Fuzz the six faces of the cube");
  cv->add_option("--seed", seed, "Run seed (default: $DUALZ_SEED, else 1)");
  cv->add_option("--count", cube.count, "Morphisms per face");
  cv->add_option("--max-rank", cube.max_rank, "Largest rank of a term");
  cv->add_option("--max-entry", cube.max_entry, "Largest absolute entry")->check(CLI::NonNegativeNumber);
  cv->add_flag("--serial", serial, "Use the serial reference driver");
  cv->callback([&] {
    action = [&](Context& c) {
      cube.seed = seed ? *seed : env_seed().value_or(1);
      cube.execution = serial ? Execution::serial : Execution::parallel;
      return cmd_cube_verify(c, cube);
    };
  });

  auto* krs = app.add_subcommand("krs-demo", "Failure of Krull-Remak-Schmidt");
  krs->callback([&] { action = [](Context& c) { return cmd_krs_demo(c); }; });

  std::vector<std::string> rest(args.rbegin(), args.rend());
  if (!rest.empty()) rest.pop_back();
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Context ctx{in, out, format == "text" ? Format::text : Format::json};
  try {
    return action(ctx);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace dualz
