#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dualz/cube.hpp"
#include "dualz/json_io.hpp"
#include "dualz/parallel.hpp"

namespace dualz {

struct CubeVerifyConfig {
  std::uint64_t seed = 1;
  std::size_t count = 300;  // morphisms per face
  std::size_t max_rank = 4;
  long max_entry = 9;
  std::size_t max_length = 3;
  Execution execution = Execution::parallel;
};

/// A face on which the two paths, or two representatives of one class,
/// produced different classes. Holds everything needed to replay it.
struct FaceFailure {
  std::string face;
  std::size_t case_index = 0;
  std::uint64_t case_seed = 0;
  std::string reason;
  Json morphism;
  Json via_first;
  Json via_second;
};

struct CubeVerifyReport {
  std::size_t faces = 6;
  std::size_t cases_per_face = 0;
  std::uint64_t seed = 0;
  std::vector<std::size_t> nonzero_sinks;  // per face: cases whose sink class is nonzero
  std::vector<FaceFailure> failures;       // ordered by case index
  bool passed() const { return failures.empty(); }
};

/// Checks every face on `count` fuzzed morphisms. The morphism of case k of
/// face f is drawn from case_seed(seed, f * count + k), so serial and
/// parallel runs agree byte for byte.
CubeVerifyReport cube_verify(const CubeVerifyConfig& config);
Json to_json(const CubeVerifyReport& report);
Json to_json(const CubeClass& c);

}  // namespace dualz
