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

#include "modterw/scheme.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

namespace modterw {

RelationTable::RelationTable(std::size_t n, std::vector<std::uint32_t> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ == 0) {
    throw Error(Errc::EmptyInput, "relation table has no points");
  }
  if (entries_.size() != n_ * n_) {
    throw Error(Errc::Malformed, "relation table is not square");
  }
  d_ = *std::max_element(entries_.begin(), entries_.end());
  std::vector<bool> seen(d_ + 1, false);
  for (auto v : entries_) {
    seen[v] = true;
  }
  for (std::size_t i = 0; i <= d_; ++i) {
    if (!seen[i]) {
      throw Error(Errc::OutOfRange, "relation index " + std::to_string(i)
                                        + " unused but " + std::to_string(d_)
                                        + " occurs");
    }
  }
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t                   i = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) {
      ++i;
    }
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) {
      ++j;
    }
    if (j > i) {
      out.push_back(line.substr(i, j - i));
    }
    i = j;
  }
  return out;
}

std::uint64_t parse_natural(std::string_view tok, std::size_t line_no) {
  std::uint64_t v   = 0;
  auto [ptr, ec]    = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw Error(Errc::Malformed, "line " + std::to_string(line_no)
                                     + ": not a natural number: '"
                                     + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

RelationTable parse_scheme(std::istream& in) {
  std::string                line;
  std::size_t                line_no = 0;
  std::size_t                n       = 0;
  bool                       have_n  = false;
  std::size_t                rows    = 0;
  std::vector<std::uint32_t> entries;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = split_tokens(line);
    if (toks.empty() || toks.front().front() == '#') {
      continue;
    }
    if (!have_n) {
      if (toks.size() != 1) {
        throw Error(Errc::Malformed,
                    "line " + std::to_string(line_no) + ": expected point count");
      }
      n      = parse_natural(toks[0], line_no);
      have_n = true;
      if (n == 0) {
        throw Error(Errc::EmptyInput, "point count is zero");
      }
      entries.reserve(n * n);
      continue;
    }
    if (rows == n) {
      throw Error(Errc::Malformed, "line " + std::to_string(line_no)
                                       + ": more than " + std::to_string(n)
                                       + " rows");
    }
    if (toks.size() != n) {
      throw Error(Errc::Malformed, "line " + std::to_string(line_no)
                                       + ": expected " + std::to_string(n)
                                       + " entries, got "
                                       + std::to_string(toks.size()));
    }
    for (auto tok : toks) {
      auto v = parse_natural(tok, line_no);
      if (v >= n * n) {
        throw Error(Errc::OutOfRange, "line " + std::to_string(line_no)
                                          + ": relation index " + std::string(tok)
                                          + " exceeds n^2 - 1");
      }
      entries.push_back(static_cast<std::uint32_t>(v));
    }
    ++rows;
  }
  if (!have_n) {
    throw Error(Errc::EmptyInput, "no point count found");
  }
  if (rows != n) {
    throw Error(Errc::Malformed, "expected " + std::to_string(n)
                                     + " rows, got " + std::to_string(rows));
  }
  return RelationTable(n, std::move(entries));
}

RelationTable parse_scheme(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_scheme(in);
}

RelationTable load_scheme_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  return parse_scheme(in);
}

std::string serialize_scheme(const RelationTable& t) {
  std::string out = std::to_string(t.n()) + "\n";
  for (std::size_t x = 0; x < t.n(); ++x) {
    for (std::size_t y = 0; y < t.n(); ++y) {
      if (y > 0) {
        out += ' ';
      }
      out += std::to_string(t(x, y));
    }
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Axioms
// ---------------------------------------------------------------------------

AxiomError::AxiomError(Errc code, AxiomWitness w, const std::string& what)
    : Error(code, what + " (witness x=" + std::to_string(w.x) + " y="
                      + std::to_string(w.y) + " i=" + std::to_string(w.i)
                      + " j=" + std::to_string(w.j) + ")"),
      w_(w) {}

std::size_t SchemeData::converse(std::size_t i) const {
  if (i > d()) {
    throw Error(Errc::IndexOutOfRange, "relation " + std::to_string(i));
  }
  return converse_[i];
}

std::uint64_t SchemeData::valency(std::size_t i) const {
  if (i > d()) {
    throw Error(Errc::IndexOutOfRange, "relation " + std::to_string(i));
  }
  return valencies_[i];
}

SchemeData validate_axioms(const RelationTable& t) {
  const std::size_t n = t.n(), r = t.d() + 1;

  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const bool diag = x == y;
      if (diag != (t(x, y) == 0)) {
        throw AxiomError(Errc::AxiomI, {x, y, t(x, y), 0},
                         diag ? "diagonal pair outside relation 0"
                              : "off-diagonal pair in relation 0");
      }
    }
  }

  constexpr std::size_t    kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> conv(r, kUnset);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      auto& c = conv[t(x, y)];
      if (c == kUnset) {
        c = t(y, x);
      } else if (c != t(y, x)) {
        throw AxiomError(Errc::AxiomII, {x, y, t(x, y), t(y, x)},
                         "transpose of a relation is not a relation");
      }
    }
  }

  // count[l][i][j] is fixed by the first pair of relation l seen; every
  // later pair must reproduce it.
  std::vector<std::uint64_t> tensor(r * r * r, 0);
  std::vector<bool>          fixed(r, false);
  std::vector<std::uint64_t> local(r * r);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      std::fill(local.begin(), local.end(), 0);
      for (std::size_t z = 0; z < n; ++z) {
        ++local[t(x, z) * r + t(z, y)];
      }
      const std::size_t l = t(x, y);
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
          auto& slot = tensor[(i * r + j) * r + l];
          if (!fixed[l]) {
            slot = local[i * r + j];
          } else if (slot != local[i * r + j]) {
            throw AxiomError(Errc::AxiomIII, {x, y, i, j},
                             "intersection count not constant on relation "
                                 + std::to_string(l));
          }
        }
      }
      fixed[l] = true;
    }
  }

  SchemeData s;
  s.table_    = t;
  s.converse_ = std::move(conv);
  s.tensor_   = std::move(tensor);
  s.valencies_.resize(r);
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < r; ++i) {
    s.valencies_[i] = s.p(i, s.converse_[i], 0);
    ensure(s.valencies_[i] > 0, "zero valency");
    total += s.valencies_[i];
  }
  ensure(total == n, "valencies do not sum to n");
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t l = 0; l < r; ++l) {
        const auto a = s.valencies_[l] * s.p(i, j, l);
        const auto b = s.valencies_[i] * s.p(l, s.converse_[j], i);
        const auto c = s.valencies_[j] * s.p(s.converse_[i], l, j);
        ensure(a == b && b == c, "triangle identity fails");
      }
    }
  }
  return s;
}

std::uint64_t intersection_numbers(const SchemeData& s, std::size_t i,
                                   std::size_t j, std::size_t l) {
  if (i > s.d() || j > s.d() || l > s.d()) {
    throw Error(Errc::IndexOutOfRange, "intersection index beyond class "
                                           + std::to_string(s.d()));
  }
  return s.p(i, j, l);
}

// ---------------------------------------------------------------------------
// Strata
// ---------------------------------------------------------------------------

unsigned p_valuation(std::uint64_t v, std::uint64_t p) {
  unsigned e = 0;
  while (v > 0 && v % p == 0) {
    v /= p;
    ++e;
  }
  return e;
}

Strata strata(const SchemeData& s, const FieldCtx& f) {
  Strata st;
  st.p = f.p();
  st.valuation.resize(s.rank());
  for (std::size_t i = 0; i < s.rank(); ++i) {
    st.valuation[i] = p_valuation(s.valency(i), f.p());
    st.epsilon      = std::max<std::size_t>(st.epsilon, st.valuation[i]);
    if (s.valency(i) == 1) {
      st.thin.push_back(i);
    }
  }
  st.sets.resize(st.epsilon + 1);
  for (std::size_t i = 0; i < s.rank(); ++i) {
    st.sets[st.valuation[i]].push_back(i);
  }
  st.p_prime_valenced = st.epsilon == 0;
  return st;
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

RelationTable gen_cyclic(std::size_t n) {
  if (n < 1) {
    throw Error(Errc::InvalidParameter, "cyclic scheme needs n >= 1");
  }
  std::vector<std::uint32_t> e(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t c = (y + n - x) % n;
      e[x * n + y]        = static_cast<std::uint32_t>(std::min(c, n - c));
    }
  }
  return RelationTable(n, std::move(e));
}

RelationTable gen_hamming(std::size_t length, std::size_t q) {
  if (length < 1 || q < 2) {
    throw Error(Errc::InvalidParameter, "hamming scheme needs len >= 1, q >= 2");
  }
  std::size_t n = 1;
  for (std::size_t k = 0; k < length; ++k) {
    if (n > 4096 / q) {
      throw Error(Errc::InvalidParameter, "hamming scheme too large");
    }
    n *= q;
  }
  std::vector<std::uint32_t> e(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      std::uint32_t dist = 0;
      std::size_t   a = x, b = y;
      for (std::size_t k = 0; k < length; ++k) {
        dist += (a % q) != (b % q);
        a /= q;
        b /= q;
      }
      e[x * n + y] = dist;
    }
  }
  return RelationTable(n, std::move(e));
}

std::vector<std::vector<std::size_t>> cyclic_group_table(std::size_t m) {
  if (m < 1) {
    throw Error(Errc::InvalidParameter, "group order must be >= 1");
  }
  std::vector<std::vector<std::size_t>> t(m, std::vector<std::size_t>(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      t[a][b] = (a + b) % m;
    }
  }
  return t;
}

RelationTable gen_thin(const std::vector<std::vector<std::size_t>>& table) {
  const std::size_t m = table.size();
  if (m == 0) {
    throw Error(Errc::InvalidParameter, "empty group table");
  }
  for (const auto& row : table) {
    if (row.size() != m) {
      throw Error(Errc::InvalidParameter, "group table is not square");
    }
    for (auto v : row) {
      if (v >= m) {
        throw Error(Errc::InvalidParameter, "group table entry out of range");
      }
    }
  }
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::size_t           e     = kNone;
  for (std::size_t a = 0; a < m && e == kNone; ++a) {
    bool ok = true;
    for (std::size_t b = 0; b < m && ok; ++b) {
      ok = table[a][b] == b && table[b][a] == b;
    }
    if (ok) {
      e = a;
    }
  }
  if (e == kNone) {
    throw Error(Errc::InvalidParameter, "group table has no identity");
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t c = 0; c < m; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw Error(Errc::InvalidParameter, "group table is not associative");
        }
      }
    }
  }
  std::vector<std::size_t> inv(m, kNone);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (table[a][b] == e) {
        inv[a] = b;
      }
    }
    if (inv[a] == kNone) {
      throw Error(Errc::InvalidParameter, "group element without inverse");
    }
  }
  // Relabel so the identity becomes relation 0; other labels keep order.
  std::vector<std::uint32_t> label(m);
  std::uint32_t              next = 1;
  for (std::size_t g = 0; g < m; ++g) {
    label[g] = g == e ? 0 : next++;
  }
  std::vector<std::uint32_t> out(m * m);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      out[x * m + y] = label[table[inv[x]][y]];
    }
  }
  return RelationTable(m, std::move(out));
}

}  // namespace modterw
