#include "dualz/verify.hpp"

#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dualz/fuzz.hpp"

namespace dualz {

int parallel_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

Json to_json(const CubeClass& c) {
  return Json{{"vertex", std::string(vertex_name(c.vertex()))},
              {"representative", to_json(c.representative())}};
}

namespace {

struct CaseResult {
  std::optional<FaceFailure> failure;
  bool nonzero_sink = false;
};

CaseResult run_case(const CubeVerifyConfig& cfg, std::size_t index) {
  const std::size_t face_index = index / cfg.count;
  const FaceSpec& spec = cube_faces()[face_index];
  const std::uint64_t seed = case_seed(cfg.seed, index);
  Rng rng(seed);

  const ComplexParams cp{cfg.max_length, cfg.max_rank, cfg.max_entry, -1, 1};
  const BoundedComplex x = random_complex(rng, cp);
  const BoundedComplex y = random_complex(rng, cp);
  const bool orbit = vertex_flags(spec.source).orbit;
  const OrbitMorphism m = orbit ? random_orbit_morphism(rng, x, y, 2)
                                : OrbitMorphism::from_chain_map(random_chain_map(rng, x, y, 2));

  const FaceEvaluation ev = evaluate_face(spec.face, CubeClass::make(spec.source, m));
  const bool nonzero = !ev.via_first.is_zero();
  auto failure = [&](std::string reason, const FaceEvaluation& bad) {
    return CaseResult{FaceFailure{std::string(spec.name), index % cfg.count, seed, std::move(reason),
                                  to_json(m), to_json(bad.via_first), to_json(bad.via_second)},
                      nonzero};
  };
  if (!ev.commutes) return failure("the two paths give different classes", ev);

  // A different representative of the same class must land on the same class.
  const IdealSpec ideal = vertex_ideal(spec.source);
  if (ideal == IdealSpec::None) return {std::nullopt, nonzero};
  OrbitMorphism moved = m;
  const auto range = shift_range(x, y);
  if (range)
    for (int i = orbit ? range->first : 0; i <= (orbit ? range->second : 0); ++i) {
      const BoundedComplex yi = shift(y, i);
      const IntVector v = random_lattice_vector(rng, ideal_lattice(x, yi, ideal), 3);
      moved.add(i, ChainMap::unflatten(x, yi, v));
    }
  const FaceEvaluation ev2 = evaluate_face(spec.face, CubeClass::make(spec.source, moved));
  if (!(ev2.via_first == ev.via_first) || !ev2.commutes)
    return failure("the sink class depends on the chosen representative", ev2);
  return {std::nullopt, nonzero};
}

}  // namespace

CubeVerifyReport cube_verify(const CubeVerifyConfig& config) {
  CubeVerifyReport report;
  report.cases_per_face = config.count;
  report.seed = config.seed;
  const std::size_t total = config.count * cube_faces().size();
  auto results = run_indexed(
      total, [&](std::size_t i) { return run_case(config, i); }, config.execution);
  report.nonzero_sinks.assign(cube_faces().size(), 0);
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (results[i].nonzero_sink) ++report.nonzero_sinks[i / config.count];
    if (results[i].failure) report.failures.push_back(std::move(*results[i].failure));
  }
  return report;
}

Json to_json(const CubeVerifyReport& report) {
  Json failures = Json::array();
  for (const auto& f : report.failures)
    failures.push_back(Json{{"face", f.face},
                            {"case", f.case_index},
                            {"case_seed", std::to_string(f.case_seed)},
                            {"reason", f.reason},
                            {"morphism", f.morphism},
                            {"via_first", f.via_first},
                            {"via_second", f.via_second}});
  return Json{{"faces", report.faces},
              {"cases", report.cases_per_face},
              {"total_cases", report.cases_per_face * report.faces},
              {"seed", std::to_string(report.seed)},
              {"nonzero_sinks", report.nonzero_sinks},
              {"failures", failures}};
}

}  // namespace dualz
