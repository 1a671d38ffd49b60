// Copyright 2026 The revsurf Authors.
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

#include <filesystem>
#include <iosfwd>
#include <optional>

#include "revsurf/embedding.hpp"

namespace revsurf {

enum class MeshFormat { obj, stl };

/// Format from the file extension (".obj" or ".stl", case-insensitive).
std::optional<MeshFormat> mesh_format_for(const std::filesystem::path& path);

/// ASCII OBJ: "v x y z" lines, then "f i j k" lines with 1-based indices.
void write_obj(const Mesh& mesh, std::ostream& out);

/// Binary little-endian STL: 80-byte header, uint32 triangle count, then per
/// triangle a float32 normal, three float32 vertices and a uint16 zero.
void write_stl(const Mesh& mesh, std::ostream& out);

/// Reads the subset of OBJ that write_obj produces (v and triangular f).
Mesh read_obj(std::istream& in);

/// Writes `mesh` to `path` in the given format. Throws revsurf::Error if the
/// file cannot be written.
void write_mesh_file(const Mesh& mesh, const std::filesystem::path& path,
                     MeshFormat format);

}  // namespace revsurf
