// Copyright 2026 posebench contributors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     https://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include "posebench/core/manifest.hpp"

namespace posebench {

inline constexpr const char* kSessionSchema = "posebench-session/1";

/// Loads and fully validates a session manifest (JSON). Log paths are
/// resolved relative to the manifest location and must exist. Unknown
/// protocol ids are accepted but flagged custom.
Session parse_manifest(const std::string& path);

/// Serializes a session back to JSON (the simulator's emitter).
void write_manifest(const std::string& path, const Session& session);

std::string resolve_path(const Session& session, const std::string& relative);

}  // namespace posebench
