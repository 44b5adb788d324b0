#pragma once

#include <string>

#include <json.hpp>

#include "qslice/instances.hpp"
#include "qslice/model.hpp"
#include "qslice/slicing.hpp"
#include "qslice/trainer.hpp"

namespace qslice {

using json = nlohmann::json;

// Models: {num_vars, offset: {tag: value}, linear: [{v, c, tag}],
// quadratic: [{i, j, c, tag}], labels: [{v, a, i, s}]}. Terms are emitted
// in index order so serialization is byte-stable.
json to_json(const QuboModel& m);
QuboModel qubo_from_json(const json& j);

json to_json(const IsingModel& m);
IsingModel ising_from_json(const json& j);

json to_json(const AnyModel& m);
AnyModel model_from_json(const json& j);

// Instances: {seed, A, coords: [[x, y], ...]} with coords[0] the depot.
json to_json(const VrpInstance& inst, std::uint64_t seed = 0);
VrpInstance instance_from_json(const json& j);

// Decompositions: {kind, residual, slices: [...], index_maps: [[...]]}.
json to_json(const SliceDecomposition& d);
SliceDecomposition decomposition_from_json(const json& j);

// Training traces (angles, objectives, shots and seeds per iteration).
json to_json(const TrainingTrace& t);
TrainingTrace trace_from_json(const json& j);

void write_json_file(const std::string& path, const json& j);
json read_json_file(const std::string& path);

} // namespace qslice
