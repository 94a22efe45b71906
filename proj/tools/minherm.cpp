// minherm: certify, construct, and probe minimal Hermitian matrices.
//
// Exit codes: 0 success (verify: Minimal), 1 parse/IO error, 2 Inconclusive,
// 3 NotMinimal (verify only). Shell pipelines can branch on minimality.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "minherm/certify.hpp"
#include "minherm/companion.hpp"
#include "minherm/construct.hpp"
#include "minherm/corpus.hpp"
#include "minherm/eigen.hpp"
#include "minherm/majorize.hpp"
#include "minherm/matrix_io.hpp"
#include "minherm/oracle.hpp"

using nlohmann::json;
using namespace minherm;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitNotMinimal = 3;

json matrix_json(const HermitianMatrix& m) { return json::parse(matrix_to_json(m)); }

json real_matrix_json(const RealMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int run_eig(const std::string& path, bool vectors, bool json_out) {
  const HermitianMatrix m = read_matrix(path);
  const SpectralDecomposition dec = eigh(m);
  json out{{"eigenvalues", dec.eigenvalues}};
  if (vectors) {
    json cols = json::array();
    for (std::size_t k = 0; k < dec.dim(); ++k) {
      json col = json::array();
      for (std::size_t i = 0; i < dec.dim(); ++i) {
        col.push_back(json::array({dec.eigenvectors(i, k).real(), dec.eigenvectors(i, k).imag()}));
      }
      cols.push_back(std::move(col));
    }
    out["eigenvectors"] = std::move(cols);
  }
  if (json_out) {
    emit(out);
  } else {
    std::cout << "eigenvalues:";
    for (double v : dec.eigenvalues) std::cout << ' ' << v;
    std::cout << '\n';
    if (vectors) std::cout << out["eigenvectors"].dump(2) << '\n';
  }
  return kExitOk;
}

int run_verify(const std::string& path, double tol, bool json_out) {
  const HermitianMatrix m = read_matrix(path);
  CertifyOptions opts;
  if (tol > 0.0) opts.cluster_tol = tol;
  const CertifyOutcome out = certify_minimal(m, opts);

  json report;
  report["lambda"] = out.lambda;
  report["diagnostics"] = out.diagnostics;
  int code = kExitOk;
  switch (out.verdict) {
    case Verdict::Minimal:
      report["verdict"] = "minimal";
      break;
    case Verdict::NotMinimal:
      report["verdict"] = "not-minimal";
      report["reason"] = out.reason;
      code = kExitNotMinimal;
      break;
    case Verdict::Inconclusive:
      report["verdict"] = "inconclusive";
      report["reason"] = out.reason;
      code = kExitInconclusive;
      break;
  }
  if (out.certificate) {
    const MinimalityCertificate& cert = *out.certificate;
    report["residuals"] = cert.residuals;
    report["certificate"] = {{"p_plus", matrix_json(cert.p_plus)},
                             {"p_minus", matrix_json(cert.p_minus)},
                             {"p", matrix_json(cert.p)}};
  }
  if (json_out) {
    emit(report);
  } else {
    std::cout << "verdict: " << report["verdict"].get<std::string>() << '\n';
    std::cout << "lambda:  " << out.lambda << '\n';
    if (!out.reason.empty()) std::cout << "reason:  " << out.reason << '\n';
    if (out.certificate) {
      std::cout << "certificate residuals:\n";
      for (const auto& [key, value] : out.certificate->residuals) {
        std::cout << "  " << key << " = " << value << '\n';
      }
    }
  }
  return code;
}

int run_distance(const std::string& path, std::uint64_t seed, int starts, bool json_out) {
  const HermitianMatrix m = read_matrix(path);
  DistanceOptions opts;
  opts.seed = seed;
  if (starts > 0) opts.starts = starts;
  const DistanceResult r = distance_to_diagonals(m, opts);
  const json out{{"distance", r.distance},
                 {"minimizer", r.minimizer},
                 {"iterations", r.iterations},
                 {"starts", r.starts},
                 {"converged", r.converged},
                 {"operator_norm", operator_norm(m)}};
  if (json_out) {
    emit(out);
  } else {
    std::cout << "distance: " << r.distance << "  (||M|| = " << out["operator_norm"].get<double>()
              << ", " << r.starts << " starts, " << r.iterations << " iterations)\n";
  }
  return kExitOk;
}

int run_companion(const std::string& path, const std::string& out_path, bool json_out) {
  const HermitianMatrix p = read_matrix(path);
  const CompanionSearch search = find_companion(p);

  json report;
  switch (search.outcome) {
    case CompanionSearch::Outcome::Found:
      report["outcome"] = "found";
      break;
    case CompanionSearch::Outcome::NoCompanion:
      report["outcome"] = "no-companion";
      break;
    case CompanionSearch::Outcome::Inconclusive:
      report["outcome"] = "inconclusive";
      break;
  }
  if (!search.detail.empty()) report["detail"] = search.detail;
  report["iterations"] = search.iterations;

  if (search.companion) {
    const CompanionReport check = is_companion_pair(p, *search.companion);
    report["pair_residuals"] = {{"product", check.product_residual},
                                {"diag", check.diag_residual},
                                {"trace", check.trace_residual}};
    if (!out_path.empty()) {
      write_matrix(out_path, *search.companion);
      report["written"] = out_path;
    } else {
      report["companion"] = matrix_json(*search.companion);
    }
  }
  if (json_out) {
    emit(report);
  } else {
    std::cout << "outcome: " << report["outcome"].get<std::string>() << '\n';
    if (!search.detail.empty()) std::cout << "detail:  " << search.detail << '\n';
    if (search.companion && !out_path.empty()) std::cout << "wrote " << out_path << '\n';
    if (search.companion && out_path.empty()) std::cout << report["companion"].dump(2) << '\n';
  }
  return search.outcome == CompanionSearch::Outcome::Inconclusive ? kExitInconclusive : kExitOk;
}

int run_hull(const std::string& target_path, const std::vector<std::string>& gen_paths,
             const std::string& kind_name, bool json_out) {
  const RealVector target = read_real_vector(target_path);
  std::vector<RealVector> generators;
  generators.reserve(gen_paths.size());
  for (const std::string& g : gen_paths) generators.push_back(read_real_vector(g));
  const HullKind kind = kind_name == "cone" ? HullKind::Cone : HullKind::Convex;

  const auto witness = hull_membership(target, generators, kind);
  json report{{"kind", kind_name}, {"member", witness.has_value()}};
  if (witness) {
    report["coefficients"] = witness->coefficients;
    report["residual"] = witness->residual;
  }
  if (json_out) {
    emit(report);
  } else if (witness) {
    std::cout << "member: yes\ncoefficients:";
    for (double c : witness->coefficients) std::cout << ' ' << c;
    std::cout << "\nresidual: " << witness->residual << '\n';
  } else {
    std::cout << "member: no\n";
  }
  return kExitOk;
}

int run_schur_horn(const std::vector<double>& a, const std::vector<double>& x, std::size_t zeros,
                   bool json_out) {
  const MajorizationInstance inst = MajorizationInstance::create(a, x, zeros);
  const UnistochasticResult res = schur_horn_zero_diag(inst);

  const RealVector spectrum = inst.spectrum();
  const std::size_t n = spectrum.size();
  double diag_residual = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) acc += spectrum[k] * res.orthogonal(i, k) * res.orthogonal(i, k);
    diag_residual = std::max(diag_residual, std::abs(acc));
  }
  const RealMatrix gram = res.orthogonal.transpose() * res.orthogonal;
  double orth_residual = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      orth_residual = std::max(orth_residual, std::abs(gram(i, j) - (i == j ? 1.0 : 0.0)));

  const json report{{"spectrum", spectrum},
                    {"orthogonal", real_matrix_json(res.orthogonal)},
                    {"doubly_stochastic", real_matrix_json(res.doubly_stochastic)},
                    {"diag_residual", diag_residual},
                    {"orthogonality_residual", orth_residual}};
  if (json_out) {
    emit(report);
  } else {
    std::cout << "diag residual: " << diag_residual << "\northogonality residual: " << orth_residual
              << '\n'
              << report["orthogonal"].dump(2) << '\n';
  }
  return kExitOk;
}

int run_construct(double lambda, const std::vector<double>& a, const std::vector<double>& x,
                  const std::vector<double>& middles, std::size_t zeros, std::uint64_t seed,
                  const std::string& out_path, bool json_out) {
  if (zeros == 0) zeros = middles.size();
  if (middles.size() != zeros) {
    throw InvariantViolated("construct: --middles must supply one value per zero slot");
  }
  const ConstructionSpec spec =
      ConstructionSpec::create(lambda, MajorizationInstance::create(a, x, zeros), middles);
  const BuildResult built = build_minimal(spec, seed);

  json doc = matrix_json(built.matrix);
  doc["provenance"] = {{"lambda", built.provenance.lambda},
                       {"a", built.provenance.positive_weights},
                       {"x", built.provenance.negative_weights},
                       {"middles", built.provenance.middles},
                       {"assigned_eigenvalues", built.provenance.assigned_eigenvalues},
                       {"orthogonal", real_matrix_json(built.provenance.orthogonal)},
                       {"seed", built.provenance.seed}};

  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot open '" + out_path + "' for writing");
    out << doc.dump(2) << '\n';
    if (json_out) {
      emit(json{{"written", out_path}, {"lambda", lambda}, {"n", built.matrix.dim()}});
    } else {
      std::cout << "wrote " << out_path << " (n = " << built.matrix.dim() << ", lambda = " << lambda
                << ")\n";
    }
  } else {
    emit(doc);
  }
  return kExitOk;
}

int run_examples(const std::string& action, const std::string& dir, bool json_out) {
  if (action == "list") {
    json names = json::array();
    for (const CorpusEntry& entry : example_corpus()) names.push_back(entry.name);
    if (json_out) {
      emit(names);
    } else {
      for (const auto& name : names) std::cout << name.get<std::string>() << '\n';
    }
    return kExitOk;
  }
  // export
  std::filesystem::create_directories(dir);
  json written = json::array();
  for (const CorpusEntry& entry : example_corpus()) {
    const std::string path = (std::filesystem::path(dir) / (entry.name + ".json")).string();
    write_matrix(path, entry.matrix);
    written.push_back(path);
  }
  if (json_out) {
    emit(json{{"written", written}});
  } else {
    for (const auto& path : written) std::cout << path.get<std::string>() << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimal Hermitian matrix toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // allow --json after the subcommand name
  bool json_out = false;
  app.add_flag("--json", json_out, "machine-readable JSON output");

  auto* eig_cmd = app.add_subcommand("eig", "eigenvalues (and optionally eigenvectors)");
  std::string eig_path;
  bool eig_vectors = false;
  eig_cmd->add_option("file", eig_path, "matrix JSON file")->required();
  eig_cmd->add_flag("--vectors", eig_vectors, "include eigenvectors");

  auto* verify_cmd = app.add_subcommand("verify", "certify minimality (exit 0/2/3)");
  std::string verify_path;
  double verify_tol = 0.0;
  verify_cmd->add_option("file", verify_path, "matrix JSON file")->required();
  verify_cmd->add_option("--tol", verify_tol, "eigenvalue clustering tolerance");

  auto* distance_cmd = app.add_subcommand("distance", "distance to the real diagonals");
  std::string distance_path;
  std::uint64_t distance_seed = 0;
  int distance_starts = 0;
  distance_cmd->add_option("file", distance_path, "matrix JSON file")->required();
  distance_cmd->add_option("--seed", distance_seed, "multistart seed")->envname("MINHERM_SEED");
  distance_cmd->add_option("--starts", distance_starts, "number of multistarts");

  auto* companion_cmd = app.add_subcommand("companion", "find a companion matrix");
  std::string companion_path, companion_out;
  companion_cmd->add_option("file", companion_path, "PSD matrix JSON file")->required();
  companion_cmd->add_option("-o,--output", companion_out, "write the companion here");

  auto* hull_cmd = app.add_subcommand("hull", "cone / convex hull membership");
  std::string hull_target, hull_kind = "convex";
  std::vector<std::string> hull_gens;
  hull_cmd->add_option("--target", hull_target, "target vector JSON file")->required();
  hull_cmd->add_option("--gens", hull_gens, "generator vector JSON files")->required()->expected(-1);
  hull_cmd->add_option("--kind", hull_kind, "cone or convex")
      ->check(CLI::IsMember({"cone", "convex"}));

  auto* sh_cmd = app.add_subcommand("schur-horn", "zero-diagonal orthogonal frame");
  std::vector<double> sh_a, sh_x;
  std::size_t sh_zeros = 0;
  sh_cmd->add_option("--a", sh_a, "positive weights")->required()->delimiter(',');
  sh_cmd->add_option("--x", sh_x, "negative-side weights")->required()->delimiter(',');
  sh_cmd->add_option("--zeros", sh_zeros, "number of zero slots");

  auto* construct_cmd = app.add_subcommand("construct", "build a minimal matrix");
  double c_lambda = 0.0;
  std::vector<double> c_a, c_x, c_middles;
  std::size_t c_zeros = 0;
  std::uint64_t c_seed = 0;
  std::string c_out;
  construct_cmd->add_option("--lambda", c_lambda, "operator norm of the result")->required();
  construct_cmd->add_option("--a", c_a, "positive weights")->required()->delimiter(',');
  construct_cmd->add_option("--x", c_x, "negative-side weights")->required()->delimiter(',');
  construct_cmd->add_option("--middles", c_middles, "middle eigenvalues, one per zero slot")
      ->delimiter(',');
  construct_cmd->add_option("--zeros", c_zeros, "number of zero slots (default: #middles)");
  construct_cmd->add_option("--seed", c_seed, "recorded in the provenance")->envname("MINHERM_SEED");
  construct_cmd->add_option("-o,--output", c_out, "output path (matrix + provenance)");

  auto* examples_cmd = app.add_subcommand("examples", "bundled example corpus");
  std::string ex_action, ex_dir;
  examples_cmd->add_option("action", ex_action, "list or export")
      ->required()
      ->check(CLI::IsMember({"list", "export"}));
  examples_cmd->add_option("dir", ex_dir, "target directory for export");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (app.got_subcommand(eig_cmd)) return run_eig(eig_path, eig_vectors, json_out);
    if (app.got_subcommand(verify_cmd)) return run_verify(verify_path, verify_tol, json_out);
    if (app.got_subcommand(distance_cmd))
      return run_distance(distance_path, distance_seed, distance_starts, json_out);
    if (app.got_subcommand(companion_cmd)) return run_companion(companion_path, companion_out, json_out);
    if (app.got_subcommand(hull_cmd)) return run_hull(hull_target, hull_gens, hull_kind, json_out);
    if (app.got_subcommand(sh_cmd)) return run_schur_horn(sh_a, sh_x, sh_zeros, json_out);
    if (app.got_subcommand(construct_cmd))
      return run_construct(c_lambda, c_a, c_x, c_middles, c_zeros, c_seed, c_out, json_out);
    if (app.got_subcommand(examples_cmd)) {
      if (ex_action == "export" && ex_dir.empty()) {
        std::cerr << "error: examples export needs a target directory\n";
        return kExitError;
      }
      return run_examples(ex_action, ex_dir, json_out);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
