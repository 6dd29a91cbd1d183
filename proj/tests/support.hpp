// Copyright 2026 The modterw Authors
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

// Shared helpers for the test binaries.

#pragma once

#include <algorithm>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "modterw/scheme.hpp"

namespace modterw::test {

inline std::string fixture_dir() { return MODTERW_FIXTURE_DIR; }
inline std::string data_dir() { return MODTERW_TEST_DATA_DIR; }

inline std::string fixture_path(const std::string& id) {
  return fixture_dir() + "/" + id + ".scheme";
}

inline SchemeData load(const std::string& id) {
  return validate_axioms(load_scheme_file(fixture_path(id)));
}

/// Stems of every fixture file, sorted.
inline std::vector<std::string> fixture_ids() {
  std::vector<std::string> ids;
  for (const auto& e : std::filesystem::directory_iterator(fixture_dir())) {
    if (e.path().extension() == ".scheme") {
      ids.push_back(e.path().stem().string());
    }
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

inline GfpMatrix random_matrix(std::size_t r, std::size_t c, const FieldCtx& f,
                               std::mt19937_64& rng) {
  std::uniform_int_distribution<Residue> dist(0, f.p() - 1);
  GfpMatrix                              m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      m(i, j) = dist(rng);
    }
  }
  return m;
}

}  // namespace modterw::test
