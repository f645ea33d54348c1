#pragma once

#include <cstdint>
#include <string>

#include "plankm/instance.h"

namespace plankm {

enum class GeneratorKind {
    Grid,
    GridRandomWeights,
    GridWithDeletions,
};

/// Planar-by-construction instance generator. All randomness flows through
/// `seed`; identical specs produce identical instances.
struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::Grid;
    std::size_t width = 3;
    std::size_t height = 3;
    double weight_min = 1.0;
    double weight_max = 2.0;
    double delete_fraction = 0.2;
    double client_fraction = 0.3;
    double facility_fraction = 0.3;
    std::size_t k = 2;
    std::uint64_t seed = 0;
    std::size_t max_resamples = 64;
};

GeneratorKind generator_kind_from_string(const std::string& s);

Instance generate(const GeneratorSpec& spec);

} // namespace plankm
