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


#include "revsurf/mesh_io.hpp"

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "revsurf/errors.hpp"

namespace revsurf {
namespace {

std::uint32_t read_u32(const std::string& bytes, std::size_t at) {
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i) v = (v << 8) | static_cast<unsigned char>(bytes[at + i]);
  return v;
}

TEST(MeshFormat, FromExtension) {
  EXPECT_EQ(mesh_format_for("a.obj"), MeshFormat::obj);
  EXPECT_EQ(mesh_format_for("dir/b.STL"), MeshFormat::stl);
  EXPECT_EQ(mesh_format_for("c.ply"), std::nullopt);
  EXPECT_EQ(mesh_format_for("noext"), std::nullopt);
}

TEST(Obj, LineCounts) {
  const Mesh m = generate_mesh(make_preset("sphere"), 4, 5);
  std::ostringstream out;
  write_obj(m, out);
  std::istringstream in(out.str());
  std::string line;
  std::size_t v = 0, f = 0;
  while (std::getline(in, line)) {
    if (line.rfind("v ", 0) == 0) ++v;
    if (line.rfind("f ", 0) == 0) ++f;
  }
  EXPECT_EQ(v, 3u * 5u + 2u);
  EXPECT_EQ(f, 2u * 5u * 3u);
  EXPECT_NE(out.str().find("f 1 "), std::string::npos);  // 1-based indices
}

TEST(Obj, RoundTrip) {
  const Mesh m = generate_mesh(make_preset("dumbbell:0.25"), 16, 12);
  std::stringstream buf;
  write_obj(m, buf);
  const Mesh back = read_obj(buf);
  ASSERT_EQ(back.vertices.size(), m.vertices.size());
  ASSERT_EQ(back.triangles, m.triangles);
  for (std::size_t i = 0; i < m.vertices.size(); ++i) EXPECT_EQ(back.vertices[i], m.vertices[i]);
  const MeshTopology t = analyze_topology(back);
  EXPECT_TRUE(t.watertight);
  EXPECT_TRUE(t.oriented);
  EXPECT_EQ(t.euler_characteristic(), 2);
}

TEST(Obj, RejectsBadInput) {
  std::istringstream bad_vertex("v 1 2\n");
  EXPECT_THROW(read_obj(bad_vertex), Error);
  std::istringstream bad_index("v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 2 4\n");
  EXPECT_THROW(read_obj(bad_index), Error);
  std::istringstream zero_index("v 0 0 0\nf 0 1 2\n");
  EXPECT_THROW(read_obj(zero_index), Error);
}

TEST(Stl, LayoutAndCount) {
  const Mesh m = generate_mesh(make_preset("sphere"), 8, 8);
  std::ostringstream out;
  write_stl(m, out);
  const std::string bytes = out.str();
  ASSERT_EQ(bytes.size(), 84u + 50u * m.triangles.size());
  EXPECT_EQ(read_u32(bytes, 80), m.triangles.size());
  EXPECT_EQ(bytes.rfind("revsurf binary STL", 0), 0u);
  // First facet's first vertex matches the mesh in single precision.
  const Vec3& v0 = m.vertices[m.triangles[0][0]];
  for (int k = 0; k < 3; ++k) {
    float x;
    const std::uint32_t bits = read_u32(bytes, 84 + 12 + 4 * k);
    std::memcpy(&x, &bits, 4);
    EXPECT_EQ(x, static_cast<float>(v0[k]));
  }
}

TEST(MeshFile, WritesAndReportsFailure) {
  const Mesh m = generate_mesh(make_preset("sphere"), 3, 3);
  const auto dir = std::filesystem::temp_directory_path() / "revsurf_mesh_io_test";
  std::filesystem::create_directories(dir);
  write_mesh_file(m, dir / "s.stl", MeshFormat::stl);
  EXPECT_EQ(std::filesystem::file_size(dir / "s.stl"), 84u + 50u * 12u);
  write_mesh_file(m, dir / "s.obj", MeshFormat::obj);
  std::ifstream in(dir / "s.obj");
  EXPECT_EQ(read_obj(in).triangles.size(), 12u);
  EXPECT_THROW(write_mesh_file(m, dir / "missing" / "x.obj", MeshFormat::obj), Error);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace revsurf
