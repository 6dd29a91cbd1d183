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

#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "modterw/characterize.hpp"
#include "modterw/oracle.hpp"
#include "modterw/report.hpp"

namespace modterw::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

int exit_code_for(const std::exception& e) {
  const auto* err = dynamic_cast<const Error*>(&e);
  if (err == nullptr) {
    return kUsage;
  }
  switch (err->code()) {
    case Errc::InternalInconsistency:
      return kInconsistent;
    case Errc::Malformed:
    case Errc::OutOfRange:
    case Errc::EmptyInput:
    case Errc::AxiomI:
    case Errc::AxiomII:
    case Errc::AxiomIII:
      return kInvalid;
    default:
      return kUsage;
  }
}

std::string scheme_id(const std::string& path) {
  return fs::path(path).stem().string();
}

json analyze_file(const std::string& path, const FieldCtx& f,
                  std::size_t base_point, bool all_points) {
  const auto table = load_scheme_file(path);
  const auto s     = validate_axioms(table);
  std::vector<PointAnalysis> points;
  if (all_points) {
    for (std::size_t x = 0; x < s.n(); ++x) {
      points.push_back(analyze_point(s, f, x));
    }
  } else {
    points.push_back(analyze_point(s, f, base_point));
  }
  return analysis_report(scheme_id(path), s, points);
}

int write_output(const std::string& text, const std::string& out_path,
                 std::ostream& out, std::ostream& err) {
  if (out_path.empty()) {
    out << text;
    return kOk;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    err << "error: cannot write " << out_path << "\n";
    return kUsage;
  }
  file << text;
  return kOk;
}

std::vector<std::uint64_t> parse_primes(const std::string& text) {
  std::vector<std::uint64_t> primes;
  std::stringstream          ss(text);
  std::string                tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    const auto  v    = std::stoull(tok, &used);
    if (used != tok.size()) {
      throw std::invalid_argument("bad prime '" + tok + "'");
    }
    primes.push_back(v);
  }
  if (primes.empty()) {
    throw std::invalid_argument("no primes given");
  }
  return primes;
}

std::vector<std::vector<std::size_t>> load_group_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  std::size_t m = 0;
  if (!(in >> m) || m == 0) {
    throw Error(Errc::InvalidParameter, "group table needs a positive order");
  }
  std::vector<std::vector<std::size_t>> t(m, std::vector<std::size_t>(m));
  for (auto& row : t) {
    for (auto& v : row) {
      if (!(in >> v)) {
        throw Error(Errc::InvalidParameter, "group table is truncated");
      }
    }
  }
  return t;
}

// ---------------------------------------------------------------------------

struct AnalyzeOpts {
  std::string   scheme;
  std::uint64_t prime      = 0;
  std::size_t   base_point = 0;
  bool          all_points = false;
  bool          as_json    = false;
  std::string   out_path;
};

int cmd_analyze(const AnalyzeOpts& o, std::ostream& out, std::ostream& err) {
  try {
    const FieldCtx f(o.prime);
    const auto     report = analyze_file(o.scheme, f, o.base_point, o.all_points);
    const auto text = o.as_json ? report.dump(2) + "\n" : text_summary(report);
    return write_output(text, o.out_path, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

struct BatchOpts {
  std::string dir;
  std::string primes;
  std::string out_path;
  std::size_t jobs       = 1;
  bool        all_points = false;
};

int cmd_batch(const BatchOpts& o, std::ostream& out, std::ostream& err) {
  std::vector<std::uint64_t> primes;
  std::vector<std::string>   files;
  try {
    primes = parse_primes(o.primes);
    for (auto p : primes) {
      FieldCtx check(p);
    }
    if (!fs::is_directory(o.dir)) {
      throw std::runtime_error("not a directory: " + o.dir);
    }
    for (const auto& entry : fs::directory_iterator(o.dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".scheme") {
        files.push_back(entry.path().string());
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (files.empty()) {
    err << "error: no .scheme files in " << o.dir << "\n";
    return kUsage;
  }
  std::sort(files.begin(), files.end());

  struct Task {
    std::string   file;
    std::uint64_t prime = 0;
    json          report;
    int           code = kOk;
    std::string   error;
  };
  std::vector<Task> tasks;
  for (const auto& file : files) {
    for (auto p : primes) {
      tasks.push_back(Task{file, p, {}, kOk, {}});
    }
  }
  std::atomic<std::size_t> next{0};
  auto                     worker = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) {
      auto& t = tasks[k];
      try {
        t.report = analyze_file(t.file, FieldCtx(t.prime), 0, o.all_points);
      } catch (const std::exception& e) {
        t.code  = exit_code_for(e);
        t.error = e.what();
      }
    }
  };
  const std::size_t        jobs = std::max<std::size_t>(1, o.jobs);
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) {
    pool.emplace_back(worker);
  }
  worker();
  for (auto& th : pool) {
    th.join();
  }

  json doc;
  doc["schema"]  = kReportSchema;
  doc["primes"]  = primes;
  doc["reports"] = json::array();
  doc["summary"] = json::array();
  int code       = kOk;
  for (const auto& t : tasks) {
    json row{{"scheme_id", scheme_id(t.file)}, {"prime", t.prime}};
    if (t.code == kOk) {
      doc["reports"].push_back(t.report);
      row["status"]             = "ok";
      row["composition_length"] = t.report["composition_length"];
      row["p_prime_valenced"]   = t.report["characterization"]["i_pprime"];
    } else {
      row["status"] = t.code == kInconsistent ? "inconsistent" : "failed";
      row["error"]  = t.error;
      code          = t.code == kInconsistent ? kInconsistent
                                              : std::max(code, kInvalid);
      err << scheme_id(t.file) << " p=" << t.prime << ": " << t.error << "\n";
    }
    doc["summary"].push_back(row);
  }
  const int wrote = write_output(doc.dump(2) + "\n", o.out_path, out, err);
  return wrote != kOk ? wrote : code;
}

struct GenOpts {
  std::string family;
  std::size_t n      = 0;
  std::size_t len    = 0;
  std::size_t q      = 0;
  std::size_t order  = 0;
  std::string table;
};

int cmd_gen(const GenOpts& o, std::ostream& out, std::ostream& err) {
  try {
    RelationTable t;
    if (o.family == "cyclic") {
      t = gen_cyclic(o.n);
    } else if (o.family == "hamming") {
      t = gen_hamming(o.len, o.q);
    } else if (o.family == "thin") {
      if (!o.table.empty()) {
        t = gen_thin(load_group_table(o.table));
      } else if (o.order > 0) {
        t = gen_thin(cyclic_group_table(o.order));
      } else {
        throw Error(Errc::InvalidParameter, "thin needs --order or --table");
      }
    } else {
      throw Error(Errc::InvalidParameter, "unknown family " + o.family);
    }
    validate_axioms(t);
    out << serialize_scheme(t);
    return kOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

struct VerifyOpts {
  std::string   scheme;
  std::uint64_t prime = 0;
  bool          deep  = false;
  std::string   fault;
};

int cmd_verify(const VerifyOpts& o, std::ostream& out, std::ostream& err) {
  int  code  = kOk;
  auto check = [&](const std::string& name, bool ok, const std::string& fast,
                   const std::string& slow) {
    out << (ok ? "ok    " : "FAIL  ") << name << "  fast=" << fast
        << " oracle=" << slow << "\n";
    if (!ok) {
      code = kInconsistent;
    }
  };
  try {
    const FieldCtx f(o.prime);
    if (!o.fault.empty() && o.fault != "radical") {
      throw std::invalid_argument("unknown fault " + o.fault);
    }
    const auto table = load_scheme_file(o.scheme);
    const auto brute = brute_force_axioms(table);
    SchemeData s;
    try {
      s = validate_axioms(table);
    } catch (const Error& e) {
      const int c = exit_code_for(e);
      if (c != kInvalid) {
        throw;
      }
      check("axioms", !brute.ok, "reject", brute.ok ? "accept" : "reject");
      err << "error: " << e.what() << "\n";
      return code == kOk ? kInvalid : code;
    }
    bool same = brute.ok && brute.valencies == s.valencies();
    for (std::size_t i = 0; same && i < s.rank(); ++i) {
      for (std::size_t j = 0; j < s.rank(); ++j) {
        for (std::size_t l = 0; l < s.rank(); ++l) {
          same = same && brute.tensor[(i * s.rank() + j) * s.rank() + l]
                             == s.p(i, j, l);
        }
      }
    }
    check("axioms", same, "accept", brute.ok ? "accept" : "reject");

    const std::size_t last = o.deep ? s.n() : 1;
    for (std::size_t x = 0; x < last; ++x) {
      const auto        a   = analyze_point(s, f, x);
      const std::string tag = " x=" + std::to_string(x);
      const auto        wd  = word_closure_dim(a.ctx);
      check("algebra-closure" + tag, wd == a.T.dim(), std::to_string(a.T.dim()),
            std::to_string(wd));

      Subspace rad = a.rad;
      if (o.fault == "radical") {
        std::vector<Vec> vecs = rad.basis();
        vecs.push_back(flatten(GfpMatrix::identity(s.n())));
        rad = Subspace::span(s.n() * s.n(), vecs, f);
      }
      bool post_ok = true;
      try {
        check_radical(a.T, rad, f);
      } catch (const Error&) {
        post_ok = false;
      }
      check("radical-postconditions" + tag, post_ok,
            std::to_string(rad.dim()), post_ok ? "pass" : "fail");
      const std::uint64_t pairs = o.deep ? (1ULL << 22) : (1ULL << 16);
      if (auto bd = brute_radical_dim(a.T, f, pairs)) {
        check("radical-bruteforce" + tag, *bd == rad.dim(),
              std::to_string(rad.dim()), std::to_string(*bd));
      }

      if (x == 0 && (s.rank() <= 4 || (o.deep && s.rank() <= 5))) {
        const auto lat = submodule_lattice(a.w.rep, f);
        std::vector<std::size_t> dims;
        for (const auto& fac : a.comp.factors) {
          dims.push_back(fac.dim());
        }
        std::sort(dims.begin(), dims.end());
        check("lattice-length", lat.length == a.comp.length,
              std::to_string(a.comp.length), std::to_string(lat.length));
        check("lattice-factors", lat.factor_dims == dims, json(dims).dump(),
              json(lat.factor_dims).dump());
        check("lattice-uniserial", lat.uniserial == a.uniserial,
              a.uniserial ? "true" : "false", lat.uniserial ? "true" : "false");
      }
    }
    return code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Modular Terwilliger algebras of association schemes"};
  app.require_subcommand(1);

  AnalyzeOpts ao;
  auto*       analyze = app.add_subcommand("analyze", "Analyse one scheme");
  analyze->add_option("--scheme", ao.scheme, "Scheme file")->required();
  analyze->add_option("--prime", ao.prime, "Characteristic p")->required();
  analyze->add_option("--base-point", ao.base_point, "Base point x");
  analyze->add_flag("--all-base-points", ao.all_points, "Analyse every x");
  analyze->add_flag("--json", ao.as_json, "Emit the JSON report");
  analyze->add_option("--out", ao.out_path, "Write to this file");

  BatchOpts bo;
  auto*     batch = app.add_subcommand("batch", "Analyse every *.scheme file");
  batch->add_option("--dir", bo.dir, "Directory")->required();
  batch->add_option("--primes", bo.primes, "Comma-separated primes")->required();
  batch->add_option("--out", bo.out_path, "Write to this file");
  batch->add_option("--jobs", bo.jobs, "Worker threads");
  batch->add_flag("--all-base-points", bo.all_points, "Analyse every x");

  GenOpts go;
  auto*   gen = app.add_subcommand("gen", "Print a generated scheme");
  gen->add_option("--family", go.family, "cyclic, hamming or thin")->required();
  gen->add_option("--n", go.n, "Cyclic order");
  gen->add_option("--len", go.len, "Hamming word length");
  gen->add_option("--q", go.q, "Hamming alphabet size");
  gen->add_option("--order", go.order, "Order of the cyclic group (thin)");
  gen->add_option("--table", go.table, "Group multiplication table (thin)");

  VerifyOpts vo;
  auto*      verify = app.add_subcommand("verify", "Run the oracle suite");
  verify->add_option("--scheme", vo.scheme, "Scheme file")->required();
  verify->add_option("--prime", vo.prime, "Characteristic p")->required();
  verify->add_flag("--deep", vo.deep, "All base points, larger oracles");
  verify->add_option("--inject-fault", vo.fault, "Corrupt a result (radical)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (analyze->parsed()) {
    return cmd_analyze(ao, out, err);
  }
  if (batch->parsed()) {
    return cmd_batch(bo, out, err);
  }
  if (gen->parsed()) {
    return cmd_gen(go, out, err);
  }
  return cmd_verify(vo, out, err);
}

}  // namespace modterw::cli
