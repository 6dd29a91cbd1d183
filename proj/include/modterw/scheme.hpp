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

// Association schemes given by their relation table r(x, y).
//
// File format: optional `#` comment lines, then the point count n, then n
// rows of n relation indices separated by spaces. Relation indices must be
// exactly the contiguous range [0, d].

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "modterw/error.hpp"
#include "modterw/ffmat.hpp"

namespace modterw {

class RelationTable {
 public:
  RelationTable() = default;
  /// Throws Malformed if entries.size() != n*n, EmptyInput for n == 0 and
  /// OutOfRange if the used indices are not exactly [0, d].
  RelationTable(std::size_t n, std::vector<std::uint32_t> entries);

  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  [[nodiscard]] std::size_t d() const noexcept { return d_; }
  [[nodiscard]] std::uint32_t operator()(std::size_t x,
                                         std::size_t y) const noexcept {
    return entries_[x * n_ + y];
  }
  [[nodiscard]] const std::vector<std::uint32_t>& entries() const noexcept {
    return entries_;
  }

  friend bool operator==(const RelationTable&, const RelationTable&) = default;

 private:
  std::size_t                n_ = 0;
  std::size_t                d_ = 0;
  std::vector<std::uint32_t> entries_;
};

RelationTable parse_scheme(std::istream& in);
RelationTable parse_scheme(std::string_view text);
RelationTable load_scheme_file(const std::string& path);
std::string   serialize_scheme(const RelationTable& t);

/// A violated axiom, with the offending pair (x, y) and relation indices.
struct AxiomWitness {
  std::size_t x = 0;
  std::size_t y = 0;
  std::size_t i = 0;
  std::size_t j = 0;
};

class AxiomError : public Error {
 public:
  AxiomError(Errc code, AxiomWitness w, const std::string& what);
  [[nodiscard]] const AxiomWitness& witness() const noexcept { return w_; }

 private:
  AxiomWitness w_;
};

/// A validated scheme. Intersection numbers are kept as integers; reduction
/// mod p happens only where an algebra over GF(p) is built.
class SchemeData {
 public:
  [[nodiscard]] std::size_t          n() const noexcept { return table_.n(); }
  [[nodiscard]] std::size_t          d() const noexcept { return table_.d(); }
  [[nodiscard]] std::size_t          rank() const noexcept { return d() + 1; }
  [[nodiscard]] const RelationTable& table() const noexcept { return table_; }
  [[nodiscard]] std::uint32_t        relation(std::size_t x,
                                              std::size_t y) const noexcept {
    return table_(x, y);
  }
  [[nodiscard]] std::size_t converse(std::size_t i) const;
  [[nodiscard]] std::uint64_t valency(std::size_t i) const;
  [[nodiscard]] const std::vector<std::uint64_t>& valencies() const noexcept {
    return valencies_;
  }
  /// p_{ij}^l, unchecked indices.
  [[nodiscard]] std::uint64_t p(std::size_t i, std::size_t j,
                                std::size_t l) const noexcept {
    const std::size_t r = rank();
    return tensor_[(i * r + j) * r + l];
  }

 private:
  friend SchemeData validate_axioms(const RelationTable& t);

  RelationTable              table_;
  std::vector<std::size_t>   converse_;
  std::vector<std::uint64_t> valencies_;
  std::vector<std::uint64_t> tensor_;
};

/// Throws AxiomError (AxiomI, AxiomII or AxiomIII) with a witness.
SchemeData validate_axioms(const RelationTable& t);

/// p_{ij}^l with range checking (IndexOutOfRange).
std::uint64_t intersection_numbers(const SchemeData& s, std::size_t i,
                                   std::size_t j, std::size_t l);

/// Partition of the relation indices by p-adic valuation of the valency.
struct Strata {
  Residue                               p = 0;
  std::vector<std::vector<std::size_t>> sets;       // S_0 .. S_epsilon
  std::size_t                           epsilon = 0;
  std::vector<unsigned>                 valuation;  // per relation
  std::vector<std::size_t>              thin;       // k_i == 1
  bool                                  p_prime_valenced = false;
};

Strata strata(const SchemeData& s, const FieldCtx& f);

/// p-adic valuation of a positive integer.
unsigned p_valuation(std::uint64_t v, std::uint64_t p);

// Fixture generators.
RelationTable gen_cyclic(std::size_t n);
RelationTable gen_hamming(std::size_t length, std::size_t q);
/// Thin scheme of a group given by its multiplication table
/// (table[a][b] = a*b); r(x, y) is the index of x^{-1} y.
RelationTable gen_thin(const std::vector<std::vector<std::size_t>>& table);
/// Multiplication table of the cyclic group Z_m.
std::vector<std::vector<std::size_t>> cyclic_group_table(std::size_t m);

}  // namespace modterw
