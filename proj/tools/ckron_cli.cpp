// Command-line front end: reads matrices in the JSON interchange format,
// runs one check or construction per invocation, and writes a single
// machine-readable verdict report to standard output.
//
// Exit codes: 0 = holds/success, 1 = fails (a valid mathematical answer),
// 2 = operational error (bad input, outside domain, dimension cap).

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "ckron/ckron.hpp"

namespace {

using ckron::CMatrix;
using ckron::Tolerances;

struct Report {
  std::string command;
  std::vector<std::string> inputs;
  std::string verdict;  // holds | fails | error
  std::optional<std::string> verdict_case;
  std::optional<std::string> message;
  std::vector<std::pair<std::string, double>> residuals;
  std::vector<std::pair<std::string, CMatrix>> outputs;
  Tolerances tol;
};

std::string escape_json(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string report_to_json(const Report& r) {
  std::string out = "{\"command\":\"" + escape_json(r.command) + "\",\"inputs\":[";
  for (std::size_t i = 0; i < r.inputs.size(); ++i) {
    if (i) out += ',';
    out += '"' + escape_json(r.inputs[i]) + '"';
  }
  out += "],\"verdict\":\"" + r.verdict + '"';
  if (r.verdict_case) out += ",\"case\":\"" + escape_json(*r.verdict_case) + '"';
  if (r.message) out += ",\"message\":\"" + escape_json(*r.message) + '"';
  out += ",\"residuals\":{";
  for (std::size_t i = 0; i < r.residuals.size(); ++i) {
    if (i) out += ',';
    out += '"' + escape_json(r.residuals[i].first) + "\":" +
           ckron::format_double(r.residuals[i].second);
  }
  out += '}';
  if (!r.outputs.empty()) {
    out += ",\"outputs\":{";
    for (std::size_t i = 0; i < r.outputs.size(); ++i) {
      if (i) out += ',';
      out += '"' + escape_json(r.outputs[i].first) + "\":" +
             ckron::matrix_to_json(r.outputs[i].second);
    }
    out += '}';
  }
  out += ",\"tolerances\":{\"tol_eq\":" + ckron::format_double(r.tol.eq) +
         ",\"tol_cluster\":" + ckron::format_double(r.tol.cluster) +
         ",\"tol_conv\":" + ckron::format_double(r.tol.conv) + "}}";
  return out;
}

CMatrix load_matrix(const std::string& path) {
  if (path == "-") return ckron::read_matrix(std::cin, "<stdin>");
  return ckron::read_matrix_file(path);
}

struct TolOptions {
  double eq = -1.0;
  double cluster = -1.0;
  double conv = -1.0;

  Tolerances resolve() const {
    Tolerances t;
    if (eq > 0.0) t = Tolerances{}.scaled(eq / Tolerances{}.eq);
    if (cluster > 0.0) t.cluster = cluster;
    if (conv > 0.0) t.conv = conv;
    t.validate();
    return t;
  }
};

void add_tol_options(CLI::App* cmd, TolOptions& opts) {
  cmd->add_option("--tol", opts.eq,
                  "matrix-equality tolerance; clustering and convergence scale with it");
  cmd->add_option("--tol-cluster", opts.cluster, "eigenvalue clustering tolerance override");
  cmd->add_option("--tol-conv", opts.conv, "eigensolver convergence tolerance override");
}

// Context the error path needs when a handler aborts mid-flight.
struct Invocation {
  std::string command;
  std::vector<std::string> inputs;
  Tolerances tol;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley transforms of Hermitian matrices and their Kronecker-product identities"};
  app.require_subcommand(1);

  Invocation active;
  std::optional<Report> report;

  // Shared per-subcommand state. CLI11 runs exactly one subcommand, so a
  // single copy of each option bundle is enough.
  std::string path_a, path_b, path_out, path_out_c, path_out_d;
  std::vector<std::string> input_paths;
  std::string variant_name = "primary";
  double companion_value = 0.0;
  std::vector<double> phase_params;
  std::size_t idpow_m = 0, idpow_k = 0;
  TolOptions tol_opts;

  const auto begin = [&](const std::string& command, std::vector<std::string> inputs) {
    active.command = command;
    active.inputs = std::move(inputs);
    active.tol = tol_opts.resolve();
    Report r;
    r.command = active.command;
    r.inputs = active.inputs;
    r.tol = active.tol;
    return r;
  };

  const auto single_output = [&](Report& r, const CMatrix& m) {
    r.outputs.emplace_back("result", m);
    if (!path_out.empty()) ckron::write_matrix_file(path_out, m);
  };
  const auto pair_output = [&](Report& r, const ckron::KronFactors& f) {
    r.outputs.emplace_back("C", f.left);
    r.outputs.emplace_back("D", f.right);
    if (!path_out_c.empty()) ckron::write_matrix_file(path_out_c, f.left);
    if (!path_out_d.empty()) ckron::write_matrix_file(path_out_d, f.right);
  };

  // -- cayley ---------------------------------------------------------------
  auto* cmd_cayley = app.add_subcommand("cayley", "Cayley transform of a Hermitian matrix");
  cmd_cayley->add_option("--a", path_a, "Hermitian input matrix (- for standard input)")
      ->required();
  cmd_cayley->add_option("--out", path_out, "write the transform to this file");
  add_tol_options(cmd_cayley, tol_opts);
  cmd_cayley->callback([&] {
    Report r = begin("cayley", {path_a});
    const CMatrix a = load_matrix(path_a);
    const CMatrix u = ckron::cayley(a, r.tol);
    r.verdict = "holds";
    r.residuals.emplace_back(
        "unitarity", max_abs_diff(u.adjoint() * u, CMatrix::identity(u.rows())));
    single_output(r, u);
    report = std::move(r);
  });

  // -- inv-cayley -------------------------------------------------------------
  auto* cmd_inv = app.add_subcommand("inv-cayley", "Hermitian preimage of a unitary matrix");
  cmd_inv->add_option("--a", path_a, "unitary input matrix without eigenvalue 1")->required();
  cmd_inv->add_option("--out", path_out, "write the preimage to this file");
  add_tol_options(cmd_inv, tol_opts);
  cmd_inv->callback([&] {
    Report r = begin("inv-cayley", {path_a});
    const CMatrix u = load_matrix(path_a);
    const CMatrix a = ckron::inverse_cayley(u, r.tol);
    r.verdict = "holds";
    r.residuals.emplace_back("round_trip", max_abs_diff(ckron::cayley(a, r.tol), u));
    single_output(r, a);
    report = std::move(r);
  });

  // -- kron / kron-sum --------------------------------------------------------
  auto* cmd_kron = app.add_subcommand("kron", "Kronecker product of two matrices");
  cmd_kron->add_option("--a", path_a)->required();
  cmd_kron->add_option("--b", path_b)->required();
  cmd_kron->add_option("--out", path_out, "write the product to this file");
  add_tol_options(cmd_kron, tol_opts);
  cmd_kron->callback([&] {
    Report r = begin("kron", {path_a, path_b});
    const CMatrix product =
        ckron::kron(load_matrix(path_a), load_matrix(path_b));
    r.verdict = "holds";
    single_output(r, product);
    report = std::move(r);
  });

  auto* cmd_ksum = app.add_subcommand("kron-sum", "Kronecker sum A x I + I x B");
  cmd_ksum->add_option("--a", path_a)->required();
  cmd_ksum->add_option("--b", path_b)->required();
  cmd_ksum->add_option("--out", path_out, "write the sum to this file");
  add_tol_options(cmd_ksum, tol_opts);
  cmd_ksum->callback([&] {
    Report r = begin("kron-sum", {path_a, path_b});
    const CMatrix sum =
        ckron::kron_sum(load_matrix(path_a), load_matrix(path_b));
    r.verdict = "holds";
    single_output(r, sum);
    report = std::move(r);
  });

  // -- gmap ---------------------------------------------------------------------
  auto* cmd_gmap = app.add_subcommand(
      "gmap", "Hermitian G with cayley(G) = cayley(A) x cayley(B), on admissible pairs");
  cmd_gmap->add_option("--a", path_a)->required();
  cmd_gmap->add_option("--b", path_b)->required();
  cmd_gmap->add_option("--out", path_out, "write G to this file");
  cmd_gmap->add_option("--variant", variant_name, "formula variant")
      ->check(CLI::IsMember({"primary", "alternate"}));
  add_tol_options(cmd_gmap, tol_opts);
  cmd_gmap->callback([&] {
    Report r = begin("gmap", {path_a, path_b});
    const CMatrix a = load_matrix(path_a);
    const CMatrix b = load_matrix(path_b);
    const auto variant =
        variant_name == "alternate" ? ckron::GVariant::alternate : ckron::GVariant::primary;
    const CMatrix g = ckron::g_map(a, b, r.tol, variant);
    const CMatrix target = ckron::kron(ckron::cayley(a, r.tol), ckron::cayley(b, r.tol));
    r.verdict = "holds";
    r.residuals.emplace_back("defining_identity", max_abs_diff(ckron::cayley(g, r.tol), target));
    r.residuals.emplace_back("hermiticity", max_abs_diff(g, g.adjoint()));
    single_output(r, g);
    report = std::move(r);
  });

  // -- classify --------------------------------------------------------------
  auto* cmd_classify =
      app.add_subcommand("classify", "spectral factorability classification of cayley(A x B)");
  cmd_classify->add_option("--a", path_a)->required();
  cmd_classify->add_option("--b", path_b)->required();
  add_tol_options(cmd_classify, tol_opts);
  cmd_classify->callback([&] {
    Report r = begin("classify", {path_a, path_b});
    const auto cls = ckron::classify_factorability(load_matrix(path_a),
                                                   load_matrix(path_b), r.tol);
    r.verdict_case = ckron::to_string(cls.verdict);
    r.verdict = cls.verdict == ckron::FactorVerdict::NotFactorable ? "fails" : "holds";
    r.residuals.emplace_back("quadruple_residual", cls.residual);
    r.residuals.emplace_back("distinct_a", static_cast<double>(cls.distinct_eigenvalues_a.size()));
    r.residuals.emplace_back("distinct_b", static_cast<double>(cls.distinct_eigenvalues_b.size()));
    report = std::move(r);
  });

  // -- factorize ---------------------------------------------------------------
  auto* cmd_factorize =
      app.add_subcommand("factorize", "Kronecker factorization of cayley(A x B)");
  cmd_factorize->add_option("--a", path_a)->required();
  cmd_factorize->add_option("--b", path_b)->required();
  cmd_factorize->add_option("--out-c", path_out_c, "write the left factor to this file");
  cmd_factorize->add_option("--out-d", path_out_d, "write the right factor to this file");
  add_tol_options(cmd_factorize, tol_opts);
  cmd_factorize->callback([&] {
    Report r = begin("factorize", {path_a, path_b});
    const CMatrix a = load_matrix(path_a);
    const CMatrix b = load_matrix(path_b);
    const CMatrix u = ckron::cayley(ckron::kron(a, b), r.tol);
    try {
      const auto factors = ckron::kron_factorize(u, a.rows(), b.rows(), r.tol);
      r.verdict = "holds";
      r.residuals.emplace_back("reconstruction",
                               max_abs_diff(ckron::kron(factors.left, factors.right), u));
      pair_output(r, factors);
    } catch (const ckron::NotRankOne& e) {
      r.verdict = "fails";
      r.verdict_case = "NotRankOne";
      r.residuals.emplace_back("rank_one_deviation", e.residual());
    }
    report = std::move(r);
  });

  // -- hfactor --------------------------------------------------------------
  auto* cmd_hfactor = app.add_subcommand(
      "hfactor", "Hermitian pair (C, D) with cayley(C) x cayley(D) = cayley(A x B)");
  cmd_hfactor->add_option("--a", path_a)->required();
  cmd_hfactor->add_option("--b", path_b)->required();
  cmd_hfactor->add_option("--out-c", path_out_c, "write C to this file");
  cmd_hfactor->add_option("--out-d", path_out_d, "write D to this file");
  add_tol_options(cmd_hfactor, tol_opts);
  cmd_hfactor->callback([&] {
    Report r = begin("hfactor", {path_a, path_b});
    const CMatrix a = load_matrix(path_a);
    const CMatrix b = load_matrix(path_b);
    try {
      const auto factors = ckron::hermitian_refactor(a, b, r.tol);
      const CMatrix rebuilt =
          ckron::kron(ckron::cayley(factors.left, r.tol), ckron::cayley(factors.right, r.tol));
      r.verdict = "holds";
      r.residuals.emplace_back("identity",
                               max_abs_diff(rebuilt, ckron::cayley(ckron::kron(a, b), r.tol)));
      pair_output(r, factors);
    } catch (const ckron::NotFactorable&) {
      r.verdict = "fails";
      r.verdict_case = "NotFactorable";
    }
    report = std::move(r);
  });

  // -- t3 ----------------------------------------------------------------------
  auto* cmd_t3 =
      app.add_subcommand("t3", "does cayley(A x B) equal cayley(A) x cayley(B)?");
  cmd_t3->add_option("--a", path_a)->required();
  cmd_t3->add_option("--b", path_b)->required();
  add_tol_options(cmd_t3, tol_opts);
  cmd_t3->callback([&] {
    Report r = begin("t3", {path_a, path_b});
    const auto verdict = ckron::check_kron_identity(load_matrix(path_a),
                                                    load_matrix(path_b), r.tol);
    r.verdict = verdict.holds ? "holds" : "fails";
    if (verdict.matched_case) r.verdict_case = ckron::to_string(*verdict.matched_case);
    r.residuals.emplace_back("pair_identity_max", verdict.residual);
    r.residuals.emplace_back("direct_residual", verdict.direct_residual);
    report = std::move(r);
  });

  // -- companion -----------------------------------------------------------------
  auto* cmd_companion = app.add_subcommand(
      "companion", "companion eigenvalues compatible with a single eigenvalue a");
  cmd_companion->add_option("--value", companion_value, "the single eigenvalue a")->required();
  add_tol_options(cmd_companion, tol_opts);
  cmd_companion->callback([&] {
    Report r = begin("companion", {});
    const double a = companion_value;
    const double disc = a * a * (1.0 - a) * (1.0 - a) - 4.0 * a;
    try {
      const auto roots = ckron::companion_eigenvalues(a, r.tol);
      r.verdict = "holds";
      r.residuals.emplace_back("discriminant", disc);
      for (std::size_t i = 0; i < roots.size(); ++i) {
        const std::string tag = "b" + std::to_string(i + 1);
        r.residuals.emplace_back(tag, roots[i]);
        r.residuals.emplace_back("identity_residual_" + tag,
                                 ckron::pair_identity_residual(a, roots[i]));
      }
    } catch (const ckron::NoRealCompanion&) {
      r.verdict = "fails";  // a valid answer: no real companion spectrum exists
      r.verdict_case = "NoRealCompanion";
      r.residuals.emplace_back("discriminant", disc);
    }
    report = std::move(r);
  });

  // -- multi ---------------------------------------------------------------------
  auto* cmd_multi = app.add_subcommand(
      "multi", "multipartite identity: direct comparison plus the sufficient chain condition");
  cmd_multi->add_option("--inputs", input_paths, "Hermitian matrices, in product order")
      ->required()
      ->expected(1, -1);
  add_tol_options(cmd_multi, tol_opts);
  cmd_multi->callback([&] {
    Report r = begin("multi", input_paths);
    std::vector<CMatrix> matrices;
    matrices.reserve(input_paths.size());
    for (const auto& p : input_paths) matrices.push_back(load_matrix(p));
    const auto direct = ckron::multipartite_direct(matrices, r.tol);
    const bool sufficient = ckron::multipartite_sufficient(matrices, r.tol);
    r.verdict = direct.holds ? "holds" : "fails";
    if (sufficient) r.verdict_case = "SufficientChain";
    r.residuals.emplace_back("direct_residual", direct.residual);
    report = std::move(r);
  });

  // -- idpow ----------------------------------------------------------------------
  auto* cmd_idpow = app.add_subcommand(
      "idpow", "does the identity-power equality hold for the k-fold product of I_m?");
  cmd_idpow->add_option("--m", idpow_m, "identity dimension")->required();
  cmd_idpow->add_option("--k", idpow_k, "number of Kronecker factors")->required();
  add_tol_options(cmd_idpow, tol_opts);
  cmd_idpow->callback([&] {
    Report r = begin("idpow", {});
    r.verdict = ckron::identity_power_equal(idpow_m, idpow_k) ? "holds" : "fails";
    report = std::move(r);
  });

  // -- phase2x2 ---------------------------------------------------------------------
  auto* cmd_phase = app.add_subcommand(
      "phase2x2", "phase coincidence of a parameterized 2x2 Hermitian with its transform");
  cmd_phase
      ->add_option("--params", phase_params,
                   "the four real parameters a b c d of [[a+d, b-ic], [b+ic, a-d]]")
      ->required()
      ->expected(4);
  add_tol_options(cmd_phase, tol_opts);
  cmd_phase->callback([&] {
    Report r = begin("phase2x2", {});
    const double a = phase_params[0], b = phase_params[1];
    const double c = phase_params[2], d = phase_params[3];
    const auto phase = ckron::phase_coincidence(a, b, c, d, r.tol);
    const double radius = std::sqrt(b * b + c * c + d * d);
    r.residuals.emplace_back("eigenvalue_low", a - radius);
    r.residuals.emplace_back("eigenvalue_high", a + radius);
    if (phase) {
      r.verdict = "holds";
      r.residuals.emplace_back("phase", *phase);
    } else {
      r.verdict = "fails";
    }
    report = std::move(r);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the usage error
    return code == 0 ? 0 : 2;
  } catch (const ckron::Error& e) {
    Report r;
    r.command = active.command;
    r.inputs = active.inputs;
    r.tol = active.tol;
    r.verdict = "error";
    r.message = e.what();
    std::cout << report_to_json(r) << std::endl;
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  } catch (const std::exception& e) {
    Report r;
    r.command = active.command;
    r.inputs = active.inputs;
    r.tol = active.tol;
    r.verdict = "error";
    r.message = e.what();
    std::cout << report_to_json(r) << std::endl;
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }

  if (!report) {
    std::cerr << "error: no subcommand produced a report" << std::endl;
    return 2;
  }
  std::cout << report_to_json(*report) << std::endl;
  if (report->verdict == "holds") return 0;
  return report->verdict == "fails" ? 1 : 2;
}
