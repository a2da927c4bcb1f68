// Copyright 2026 The vitalpovm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "vitalpovm/certify.hpp"
#include "vitalpovm/designs.hpp"
#include "vitalpovm/frames.hpp"
#include "vitalpovm/tomo.hpp"
#include "vitalpovm/whiten.hpp"

namespace vitalpovm {

// Key order is insertion order, so emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

// Scalars: real values as "p/q" strings; complex-field values as
// {"re": "p/q", "im": "r/s"}. Parsing also accepts "p" and JSON integers.
Json to_json(const Gaussian& z, Field field);
Gaussian gaussian_from_json(const Json& j);
Json to_json(const ExactVector& v, Field field);
ExactVector vector_from_json(const Json& j);

Json to_json(const Frame& f);
Frame frame_from_json(const Json& j);

Json to_json(const BlockDesign& d);
BlockDesign design_from_json(const Json& j);

/// Floats: real fields as numbers, complex fields as [re, im] pairs.
Json to_json(const Povm& p);
Povm povm_from_json(const Json& j);

Json to_json(const PartitionWitness& w);
PartitionWitness witness_from_json(const Json& j);

Json to_json(const CollisionPair& c, Field field);
CollisionPair collision_from_json(const Json& j);

Json to_json(const RemovalCertificate& c, Field field);
RemovalCertificate certificate_from_json(const Json& j);

Json to_json(const EquivalenceFingerprint& fp);
EquivalenceFingerprint fingerprint_from_json(const Json& j);

Json to_json(const NoiseSummary& s);

/// Parses text; ParseError on malformed JSON.
Json parse_json(const std::string& text);
/// Reads a file, or stdin for "-".
Json read_json_file(const std::string& path);
/// Two-space indentation plus a trailing newline.
std::string dump(const Json& j);

}  // namespace vitalpovm
