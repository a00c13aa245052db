// Runs the acceptance criteria at their full sizes and prints one PASS/FAIL
// line per criterion. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "dualz/cli.hpp"
#include "dualz/cube.hpp"
#include "dualz/errors.hpp"
#include "dualz/fuzz.hpp"
#include "dualz/json_io.hpp"
#include "dualz/normal_form.hpp"
#include "dualz/verify.hpp"
#include "oracles.hpp"

using namespace dualz;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
  void note(const std::string& what) {
    if (ok) detail = what;
  }
};

Json run_cli_json(const std::string& command, int& code) {
  std::istringstream in;
  std::ostringstream out, err;
  code = run_cli({"dualz", command}, in, out, err);
  return Json::parse(out.str());
}

DiffStructure lower(long u) { return DiffStructure::make(2, IntMatrix{{0, 0}, {u, 0}}); }

Outcome krs_demo() {
  Outcome o;
  int code = 0;
  const Json j = run_cli_json("krs-demo", code);
  if (code != 0 || !j["krs_fails"].get<bool>()) o.fail("krs-demo did not confirm the failure");
  if (j["certificate"]["b"] != Json::parse(R"([["1","2"],["1","3"]])")) o.fail("wrong certificate");
  if (!j["certificate_verified"].get<bool>()) o.fail("certificate does not verify");
  const Json divisors = Json::parse(R"(["1","6"])");
  if (j["left"]["divisors"] != divisors || j["right"]["divisors"] != divisors)
    o.fail("canonical divisors differ from {1,6}");
  const auto six = SubgroupEmbedding::from_divisors({6});
  for (long r : {2L, 3L})
    if (iso_embeddings(six, SubgroupEmbedding::from_divisors({Int(r)})).isomorphic)
      o.fail("cross pair tested isomorphic");
  // The claimed certificate checked here directly as well.
  const IntMatrix b{{1, 2}, {1, 3}}, a{{3, 1}, {2, 1}};
  if (!verify_certificate(SubgroupEmbedding::from_divisors({6, 1}),
                          SubgroupEmbedding::from_divisors({2, 3}), {b, a}))
    o.fail("b E1 != E2 a");
  return o;
}

Outcome snf_oracle() {
  Outcome o;
  Rng rng(case_seed(1, 2));
  for (int k = 0; k < 500 && o.ok; ++k) {
    const auto m = random_matrix(rng, rng.uniform_size(1, 4), rng.uniform_size(1, 4), 5);
    const auto s = snf(m);
    if (!(s.U * m * s.V == s.D) || !is_unimodular(s.U) || !is_unimodular(s.V))
      o.fail("transform check failed at case " + std::to_string(k));
    if (s.diagonal() != oracle::invariant_factors(m))
      o.fail("invariant factors disagree at case " + std::to_string(k));
  }
  return o;
}

Outcome normalization() {
  Outcome o;
  Rng rng(case_seed(1, 3));
  for (int k = 0; k < 1000 && o.ok; ++k) {
    const auto d = random_diff_structure(rng, 8, 9);
    const NormalForm nf = normalize(d);
    const IntMatrix& c = nf.certificate;
    if (!is_unimodular(c)) o.fail("certificate not unimodular at case " + std::to_string(k));
    if (!(c * d.e() == nf.differential() * c)) o.fail("certificate does not intertwine at case " + std::to_string(k));
    const auto e = to_embedding(d);
    const auto back = from_embedding(e);
    if (!(back.e() == nf.differential())) o.fail("from_embedding differs from normal form at case " + std::to_string(k));
    if (!iso_embeddings(to_embedding(back), e).isomorphic) o.fail("round trip changed the class at case " + std::to_string(k));
  }
  return o;
}

Outcome check_morphism_predicates(const DiffMorphism& f, bool& homotopic) {
  Outcome o;
  const auto h = is_null_homotopic(f);
  const auto p = factors_through_projective(f);
  homotopic = h.has_value();
  if (h.has_value() != p.has_value()) o.fail("predicates disagree");
  if (h && !(*h * f.source().e() + f.target().e() * *h == f.f())) o.fail("homotopy witness fails");
  if (p && !verify_factorization(f, *p)) o.fail("factorization witness fails");
  return o;
}

Outcome homotopy_factorization() {
  Outcome o;
  bool h = false;
  if (!check_morphism_predicates(DiffMorphism::identity(lower(1)), h).ok || !h)
    o.fail("id on (Z^2, lower-left 1) is not detected as null-homotopic");
  if (!check_morphism_predicates(DiffMorphism::identity(lower(2)), h).ok || h)
    o.fail("id on (Z^2, lower-left 2) is detected as null-homotopic");
  Rng rng(case_seed(1, 4));
  std::size_t positives = 0;
  for (int k = 0; k < 500 && o.ok; ++k) {
    const auto s = random_diff_structure(rng, 6, 6);
    const auto t = random_diff_structure(rng, 6, 6);
    IntMatrix m = rng.chance(1, 2) ? random_null_homotopic(rng, s, t, 4) : random_intertwiner(rng, s, t, 2);
    const auto f = DiffMorphism::make(s, t, std::move(m));
    const Outcome c = check_morphism_predicates(f, h);
    if (!c.ok) o.fail(c.detail + " at case " + std::to_string(k));
    positives += h;
  }
  if (o.ok && (positives == 0 || positives == 500)) o.fail("sample does not cover both outcomes");
  o.note(std::to_string(positives) + "/500 null-homotopic");
  return o;
}

Outcome eta_equivalence() {
  Outcome o;
  const auto two = BoundedComplex::from_embedding(SubgroupEmbedding::from_divisors({2}));
  const auto three = BoundedComplex::from_embedding(SubgroupEmbedding::from_divisors({3}));
  if (orbit_hom_rank(two, three) != 2) o.fail("Hom((2Z⊂Z),(3Z⊂Z)) does not have rank 2");
  Rng rng(case_seed(1, 5));
  const ComplexParams p{2, 4, 9, -2, 2};
  for (int k = 0; k < 200 && o.ok; ++k) {
    const auto x = random_width2(rng, p);
    const auto y = random_width2(rng, p);
    const std::size_t orbit = orbit_hom_rank(x, y);
    const std::size_t diff = intertwiner_basis(pushdown_eta(x), pushdown_eta(y)).cols();
    if (orbit != diff)
      o.fail("ranks " + std::to_string(orbit) + " and " + std::to_string(diff) + " at case " + std::to_string(k));
  }
  return o;
}

Outcome complete_resolutions() {
  Outcome o;
  Rng rng(case_seed(1, 6));
  for (int k = 0; k < 100 && o.ok; ++k) {
    const auto e = random_embedding(rng, {5, 9, false, false});
    if (!complete_resolution(e, 3).verified()) o.fail("window not exact at case " + std::to_string(k));
  }
  return o;
}

Outcome cube_commutativity() {
  Outcome o;
  CubeVerifyConfig c;
  c.seed = 1;
  c.count = 300;
  c.execution = Execution::parallel;
  const auto first = cube_verify(c);
  if (first.cases_per_face != 300 || first.faces != 6) o.fail("wrong case count");
  if (!first.passed())
    o.fail(std::to_string(first.failures.size()) + " failures, first on " + first.failures[0].face);
  std::size_t nonzero = 0;
  for (auto n : first.nonzero_sinks) nonzero += n;
  if (nonzero == 0) o.fail("every sink class is zero");
  o.note(std::to_string(nonzero) + "/1800 nonzero sink classes");
  const std::string a = to_json(first).dump();
  if (to_json(cube_verify(c)).dump() != a) o.fail("repeated run differs");
  c.execution = Execution::serial;
  if (to_json(cube_verify(c)).dump() != a) o.fail("serial run differs from parallel run");
  return o;
}

Outcome bottom_equivalence() {
  Outcome o;
  Rng rng(case_seed(1, 8));
  std::size_t iso = 0;
  for (int k = 0; k < 200 && o.ok; ++k) {
    const auto e1 = random_embedding(rng, {3, 9, false, false});
    SubgroupEmbedding e2;
    switch (rng.below(3)) {
      case 0:
        e2 = random_embedding(rng, {3, 9, false, false});
        break;
      case 1: {
        // Same torsion, different projective and stalk summands.
        const auto pad = SubgroupEmbedding::from_divisors({Int(rng.uniform(0, 1)), 1});
        const auto s = direct_sum(e1, pad);
        const auto b = random_unimodular(rng, s.ambient_rank(), 8);
        const auto a = random_unimodular(rng, s.sub_rank(), 8);
        e2 = SubgroupEmbedding::make(s.ambient_rank(), b.matrix * s.matrix() * a.matrix);
        break;
      }
      default:
        e2 = SubgroupEmbedding::from_divisors(oracle::cokernel_torsion_factors(e1.matrix()));
    }
    const bool r1 = iso_in_bottom(e1, e2);
    const bool r2 = FiniteAbGroupInv::from_cyclic_orders(oracle::cokernel_torsion_factors(e1.matrix())) ==
                    FiniteAbGroupInv::from_cyclic_orders(oracle::cokernel_torsion_factors(e2.matrix()));
    const bool r3 = read_off_Ab(BoundedComplex::from_embedding(e1)) == read_off_Ab(BoundedComplex::from_embedding(e2)) &&
                    bottom_hom_signatures_agree(e1, e2) == r2;
    if (r1 != r2 || r2 != r3) o.fail("routes disagree at case " + std::to_string(k));
    iso += r1;
  }
  if (o.ok && (iso == 0 || iso == 200)) o.fail("sample does not cover both outcomes");
  o.note(std::to_string(iso) + "/200 isomorphic");
  return o;
}

Outcome eta_shift_invariance() {
  Outcome o;
  Rng rng(case_seed(1, 9));
  for (int k = 0; k < 100 && o.ok; ++k) {
    const auto x = random_complex(rng, {3, 4, 9, -1, 1});
    const std::string base = to_json(pushdown_eta(x)).dump();
    for (int i = -2; i <= 2; ++i)
      if (to_json(pushdown_eta(shift(x, i))).dump() != base)
        o.fail("shift " + std::to_string(i) + " changes the structure at case " + std::to_string(k));
  }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "krs-demo", 1, krs_demo},
      {2, "snf-oracle", 30, snf_oracle},
      {3, "normalization", 60, normalization},
      {4, "nullhomotopy-vs-factorization", 60, homotopy_factorization},
      {5, "eta-hom-rank", 60, eta_equivalence},
      {6, "complete-resolutions", 60, complete_resolutions},
      {7, "cube-commutativity", 120, cube_commutativity},
      {8, "bottom-equivalence", 60, bottom_equivalence},
      {9, "eta-shift-invariance", 10, eta_shift_invariance},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.limit_seconds) o.fail("exceeded time limit");
    failed += !o.ok;
    std::printf("%s %d %s (%.2fs / %.0fs)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                c.limit_seconds, o.detail.empty() ? "" : ": ", o.detail.c_str());
  }
  return failed == 0 ? 0 : 1;
}
