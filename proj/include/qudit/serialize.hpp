// Copyright 2026 The Qudit Adder Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qudit/block_adder.hpp"
#include "qudit/compress.hpp"
#include "qudit/ir.hpp"
#include "qudit/resources.hpp"

namespace qudit {

using Json = nlohmann::ordered_json;

class FormatError : public std::invalid_argument {
 public:
  explicit FormatError(const std::string& message)
      : std::invalid_argument(message) {}
};

// Circuit files hold wires and gates only; interface bounds are not part of
// the format and load as the wire dims.
Json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const Json& j);

Json layout_to_json(const CompressedLayout& layout);
CompressedLayout layout_from_json(const Json& j);

/// Plan sidecar. Loading rebuilds the plan from mode, scheme, n and c and
/// rejects files whose blocks or carry slots disagree.
Json plan_to_json(const BlockPlan& plan);
BlockPlan plan_from_json(const Json& j);

/// Generated ancilla summed over every block of the plan.
std::size_t plan_ancilla_generated(const BlockPlan& plan);

Json report_to_json(const ResourceReport& r);

/// Compact, newline-terminated; identical values give identical bytes.
std::string dump(const Json& j);

Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace qudit
