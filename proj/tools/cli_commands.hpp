#pragma once

// Subcommand implementations for the charvar CLI. Each command is a pure
// function of its RunConfig returning the exit status and the text it would
// print, so the same code is driven by main() and by the tests.

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "charvar/charvar.hpp"

namespace charvar::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_input_error = 2;
inline constexpr int exit_internal_error = 3;

enum class Format { human, csv };

struct RunConfig {
  std::vector<std::string> inputs;
  std::uint64_t seed = 0;
  std::optional<double> tol;
  Format format = Format::human;
  std::size_t jobs = 1;
  std::string out;

  // gen
  std::string family = "SU";
  std::size_t n = 2;
  std::size_t r = 2;
  std::string mode = "generic";

  // poincare
  std::size_t r_min = 1;
  std::size_t r_max = 4;
  bool betti = false;

  // traces
  std::size_t max_length = 2;

  Tolerance tolerance() const {
    Tolerance t;
    if (tol) t.rel_eps = *tol;
    t.check();
    return t;
  }
};

struct CommandResult {
  int exit_code = exit_ok;
  std::string out;
  std::string err;
};

namespace detail {

inline std::string csv_safe(std::string s) {
  std::replace(s.begin(), s.end(), ',', ';');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

inline std::string join_sizes(const std::vector<std::size_t>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

struct FileOutcome {
  int exit_code = exit_ok;
  std::string out;
  std::string err;
};

// Runs work(i) for every input, on up to `jobs` threads, and concatenates the
// results in input order.
inline CommandResult run_per_file(const RunConfig& cfg, const std::string& header,
                                  const std::function<FileOutcome(const std::string&)>& work) {
  std::vector<FileOutcome> results(cfg.inputs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cfg.inputs.size(); i = next++) {
      try {
        results[i] = work(cfg.inputs[i]);
      } catch (const internal_error& e) {
        results[i] = {exit_internal_error, "", cfg.inputs[i] + ": internal error: " + e.what() + "\n"};
      } catch (const std::exception& e) {
        results[i] = {exit_input_error, "", cfg.inputs[i] + ": " + e.what() + "\n"};
      }
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(cfg.jobs, cfg.inputs.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  CommandResult res;
  if (cfg.format == Format::csv) res.out = header + "\n";
  for (const auto& r : results) {
    res.out += r.out;
    res.err += r.err;
    res.exit_code = std::max(res.exit_code, r.exit_code);
  }
  return res;
}

inline Representation load_valid(const std::string& path, const Tolerance& tol) {
  Representation rep = load_representation(path);
  require_valid(rep, tol);
  return rep;
}

} // namespace detail

/// One row per file: family, n, r, irreducible?, blocks, status, stratum,
/// local model. Parts that need a decomposition print "unsupported" for
/// non-semisimple GL/SL inputs.
inline CommandResult cmd_classify(const RunConfig& cfg) {
  const Tolerance tol = cfg.tolerance();
  return detail::run_per_file(cfg, "file,family,n,r,irreducible,blocks,status,stratum,model", [&](const std::string& path) {
    const Representation rep = detail::load_valid(path, tol);
    const bool irreducible = is_irreducible(rep, tol);
    std::string blocks = "unsupported", blocks_h = "unsupported", stratum = "unsupported", model = "unsupported";
    std::string status = "unsupported";
    try {
      const auto profile = decompose(rep, tol, cfg.seed);
      blocks = detail::join_sizes(profile.block_sizes, ";");
      blocks_h = "[" + detail::join_sizes(profile.block_sizes, ",") + "]";
      stratum = std::to_string(profile.block_count() - 1);
    } catch (const unsupported_input_error&) {
    }
    try {
      status = std::string(to_string(classify_point(rep, tol, cfg.seed).status));
    } catch (const unsupported_input_error&) {
    }
    try {
      model = local_model(rep, tol, cfg.seed).describe();
    } catch (const unsupported_input_error&) {
    }
    const std::string irr = irreducible ? "irreducible" : "reducible";
    std::ostringstream os;
    if (cfg.format == Format::csv)
      os << detail::csv_safe(path) << ',' << to_string(rep.family()) << ',' << rep.n() << ',' << rep.r() << ',' << irr
         << ',' << blocks << ',' << status << ',' << stratum << ',' << model << '\n';
    else
      os << path << ": " << rep.spec().name() << " r=" << rep.r() << ',' << irr << ",blocks=" << blocks_h << ','
         << status << ",stratum=" << stratum << ",model=" << model << '\n';
    return detail::FileOutcome{exit_ok, os.str(), ""};
  });
}

inline CommandResult cmd_cohomology(const RunConfig& cfg) {
  const Tolerance tol = cfg.tolerance();
  return detail::run_per_file(
      cfg, "file,family,n,r,field,dim_z1,dim_b1,dim_h1,dim_stab,lie_dim,dim_w", [&](const std::string& path) {
        const Representation rep = detail::load_valid(path, tol);
        const auto c = cohomology_report(rep, tol);
        std::string w = "-";
        try {
          w = std::to_string(w_block_dim(rep, tol, cfg.seed));
        } catch (const unsupported_input_error&) {
        }
        std::ostringstream os;
        if (cfg.format == Format::csv)
          os << detail::csv_safe(path) << ',' << to_string(rep.family()) << ',' << rep.n() << ',' << rep.r() << ','
             << to_string(c.field) << ',' << c.dim_z1 << ',' << c.dim_b1 << ',' << c.dim_h1 << ',' << c.dim_stab << ','
             << c.lie_dim << ',' << w << '\n';
        else
          os << path << ": " << rep.spec().name() << " r=" << rep.r() << " (" << to_string(c.field)
             << ") Z1=" << c.dim_z1 << " B1=" << c.dim_b1 << " H1=" << c.dim_h1 << " stab=" << c.dim_stab
             << " lie=" << c.lie_dim << " W=" << w << '\n';
        return detail::FileOutcome{exit_ok, os.str(), ""};
      });
}

/// Word traces for all reduced words up to --max-length, then det(x_i).
inline CommandResult cmd_traces(const RunConfig& cfg) {
  const Tolerance tol = cfg.tolerance();
  return detail::run_per_file(cfg, "file,label,value", [&](const std::string& path) {
    const Representation rep = detail::load_valid(path, tol);
    TraceTuple t = word_traces(rep, reduced_words(rep.r(), cfg.max_length));
    const TraceTuple d = det_map(rep);
    for (std::size_t k = 0; k < d.size(); ++k) t.push(d.labels[k], d.values[k]);
    std::ostringstream os;
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (cfg.format == Format::csv)
        os << detail::csv_safe(path) << ',' << t.labels[k] << ',' << format_complex(t.values[k]) << '\n';
      else
        os << path << ": " << t.labels[k] << " = " << format_complex(t.values[k]) << '\n';
    }
    return detail::FileOutcome{exit_ok, os.str(), ""};
  });
}

/// Poincare polynomial of X_r(SU(2)) for r in [r_min, r_max], the duality
/// check, the obstruction verdict against moduli_dim(SU(2), r), and whether
/// the two closed forms agree.
inline CommandResult cmd_poincare(const RunConfig& cfg) {
  CommandResult res;
  if (cfg.r_min < 1 || cfg.r_max < cfg.r_min) {
    res.exit_code = exit_input_error;
    res.err = "poincare: need 1 <= r-min <= r-max\n";
    return res;
  }
  std::ostringstream os;
  if (cfg.format == Format::csv)
    os << (cfg.betti ? "r,degree,coefficient" : "r,poincare,degree,top,duality,witness,expected_dim,obstruction,closed_forms")
       << '\n';
  try {
    for (std::size_t r = cfg.r_min; r <= cfg.r_max; ++r) {
      const IntPoly p = poincare_poly(r);
      const bool agree = p == poincare_poly_ab(r);
      const auto mism = duality_mismatches(p);
      const std::size_t expected = moduli_dim(GroupSpec(Family::SU, 2), r).value;
      const auto obs = manifold_obstruction(p, expected);
      const std::string duality = mism.empty() ? "PASS" : "FAIL";
      const std::string witness = mism.empty() ? "-" : std::to_string(mism.front());
      const std::string obstruction = obs.passes ? "PASS" : "FAIL:" + std::string(to_string(obs.reason));
      if (!agree) res.exit_code = exit_internal_error;
      if (cfg.betti) {
        if (cfg.format == Format::human) os << "r=" << r << " betti (degree,coefficient):\n";
        for (std::size_t k = 0; k <= p.degree(); ++k) {
          if (cfg.format == Format::csv) os << r << ',';
          else os << "  ";
          os << k << ',' << p.coefficient(k) << '\n';
        }
        continue;
      }
      if (cfg.format == Format::csv)
        os << r << ',' << p.to_string() << ',' << p.degree() << ',' << p.top_coefficient() << ',' << duality << ','
           << witness << ',' << expected << ',' << obstruction << ',' << (agree ? "agree" : "DISAGREE") << '\n';
      else
        os << "r=" << r << ": " << p.to_string() << ", N=" << p.degree() << ", top=" << p.top_coefficient()
           << ", duality=" << duality << (mism.empty() ? "" : ", witness=" + witness)
           << ", obstruction(dim " << expected << ")=" << obstruction
           << ", closed-forms=" << (agree ? "agree" : "DISAGREE") << '\n';
    }
  } catch (const internal_error& e) {
    res.exit_code = exit_internal_error;
    res.err += std::string("internal error: ") + e.what() + "\n";
  }
  res.out = os.str();
  return res;
}

inline CommandResult write_or_return(const RunConfig& cfg, const std::string& text) {
  CommandResult res;
  if (cfg.out.empty()) {
    res.out = text;
    return res;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) {
    res.exit_code = exit_input_error;
    res.err = "cannot write " + cfg.out + "\n";
    return res;
  }
  f << text;
  return res;
}

/// Seeded random representation file.
inline CommandResult cmd_gen(const RunConfig& cfg) {
  try {
    const Tolerance tol = cfg.tolerance();
    const GroupSpec spec(parse_family(cfg.family), cfg.n);
    const Representation rep = random_rep(spec, cfg.r, RepMode::parse(cfg.mode), cfg.seed, tol);
    require_valid(rep, tol);
    return write_or_return(cfg, dump_representation(rep));
  } catch (const internal_error& e) {
    return {exit_internal_error, "", std::string("internal error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {exit_input_error, "", std::string(e.what()) + "\n"};
  }
}

inline nlohmann::json matrix_json(const CMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Writes every fixture as a representation file plus manifest.json with
/// the expected outcomes, into --out (default "fixtures").
inline CommandResult cmd_fixtures(const RunConfig& cfg) {
  namespace fs = std::filesystem;
  const fs::path dir = cfg.out.empty() ? fs::path("fixtures") : fs::path(cfg.out);
  CommandResult res;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) return {exit_input_error, "", "cannot create " + dir.string() + ": " + ec.message() + "\n"};

  nlohmann::json manifest;
  manifest["fixtures"] = nlohmann::json::array();
  std::ostringstream os;
  for (const auto& f : fixtures::all()) {
    const std::string file = f.name + ".json";
    std::ofstream(dir / file, std::ios::binary) << dump_representation(f.rep);
    nlohmann::json e;
    e["name"] = f.name;
    e["file"] = file;
    e["description"] = f.description;
    e["generators"] = nlohmann::json::array();
    for (const auto& g : f.rep.generators()) e["generators"].push_back(matrix_json(g));
    e["candidates"] = nlohmann::json::array();
    std::size_t commuting = 0, non_central = 0;
    const auto n = static_cast<Eigen::Index>(f.rep.n());
    for (std::size_t k = 0; k < f.candidates.size(); ++k) {
      const CMatrix& c = f.candidates[k];
      const bool central = (c - c(0, 0) * CMatrix::Identity(n, n)).norm() == 0.0;
      e["candidates"].push_back({{"matrix", matrix_json(c)}, {"expect_commutes", f.expected_commutes[k]}, {"central", central}});
      if (f.expected_commutes[k]) {
        ++commuting;
        if (!central) ++non_central;
      }
    }
    if (!f.candidates.empty()) {
      e["expected_commuting_candidates"] = commuting;
      e["expected_non_central_commuting"] = non_central;
    }
    manifest["fixtures"].push_back(std::move(e));
    os << "wrote " << (dir / file).string() << '\n';
  }
  manifest["trace_pairs"] = nlohmann::json::array(
      {{{"a", "so2_theta"}, {"b", "so2_minus_theta"}, {"max_word_length", 4},
        {"expect", "equal word traces; distinct points of X(SO(2)) = C^*"}}});
  std::ofstream(dir / "manifest.json", std::ios::binary) << manifest.dump(2) << '\n';
  os << "wrote " << (dir / "manifest.json").string() << '\n';
  res.out = cfg.format == Format::human ? os.str() : "";
  return res;
}

} // namespace charvar::cli
