// Command-line front end: Kirby colors by three routes, meridional Gram
// matrices, disk-category idempotent batteries, non-returning walks, surface
// evaluation from JSON presentations, worked invariant tables, and the
// verification suites.
//
// Exit codes: 0 success; 1 verification failure (a failing suite, routes that
// disagree, or the singular pairing over an algebra that is not strongly
// separable); 2 usage errors.

#include <cstddef>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "frobskein/frobenius.hpp"
#include "frobskein/idempotents.hpp"
#include "frobskein/invariants.hpp"
#include "frobskein/serialize.hpp"
#include "frobskein/solidtorus.hpp"
#include "frobskein/surfaces.hpp"
#include "frobskein/verify.hpp"

namespace skeincli {

using namespace frobskein;

namespace {

const char* yn(bool b) { return b ? "yes" : "no"; }

std::string power_label(const std::string& base, int k) {
  if (k == 0) return "empty";
  if (k == 1) return base;
  return base + "^" + std::to_string(k);
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
}

int run_kirby(int n, const std::string& algebra, const std::string& u_text,
              std::size_t N, const std::string& method,
              const std::string& format, std::ostream& out) {
  const AlgebraPtr A = builtin_algebra(algebra, Scalar::parse(u_text), N);
  if (!same_algebra(*A, *builtin_alpha())) {
    // Throws SingularPairing when the pairing is degenerate (exit 1) and
    // invalid_argument otherwise (exit 2); no Kirby color exists either way.
    copairing(std::max(n, 1), A);
    return 2;
  }

  const auto route = [&](const std::string& m) {
    if (m == "closed") return kirby_closed_form(n);
    if (m == "symmetrizer") return kirby_symmetrizer(n);
    return kirby_copair(n);
  };

  if (method != "all") {
    const KirbyColor w = route(method);
    if (format == "tensor") {
      out << w.tensor.render() << "\n";
    } else if (format == "dtl") {
      if (!w.dtl)
        throw std::invalid_argument(
            "route '" + method +
            "' carries no diagram presentation; use --method copair or "
            "--method symmetrizer");
      out << w.dtl->render() << "\n";
    } else {
      out << kirby_to_json(w).dump(2) << "\n";
    }
    return 0;
  }

  const KirbyColor wc = kirby_copair(n);
  const KirbyColor wf = kirby_closed_form(n);
  const KirbyColor ws = kirby_symmetrizer(n);
  const bool agree = wc.tensor == wf.tensor && wc.tensor == ws.tensor;
  if (format == "dtl")
    throw std::invalid_argument(
        "--format dtl prints a single route; pick --method copair or "
        "--method symmetrizer");
  if (format == "tensor") {
    out << "copair: " << wc.tensor.render() << "\n";
    out << "closed: " << wf.tensor.render() << "\n";
    out << "symmetrizer: " << ws.tensor.render() << "\n";
    out << "routes agree: " << yn(agree) << "\n";
  } else {
    Json j;
    j["copair"] = kirby_to_json(wc);
    j["closed"] = kirby_to_json(wf);
    j["symmetrizer"] = kirby_to_json(ws);
    j["agree"] = agree;
    out << j.dump(2) << "\n";
  }
  return agree ? 0 : 1;
}

int run_pairing(int n, const std::string& algebra, const std::string& u_text,
                std::size_t N, std::ostream& out) {
  const AlgebraPtr A = builtin_algebra(algebra, Scalar::parse(u_text), N);
  const GramMatrix g = gram_matrix(n, A);
  out << "basis:";
  for (const auto& label : g.labels) out << " " << label;
  out << "\n";
  for (const auto& row : g.entries) {
    out << "[";
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << ", ";
      out << row[j].render();
    }
    out << "]\n";
  }
  out << "det: " << g.det.render() << "\n";
  out << "perfect: " << yn(g.perfect) << "\n";
  return 0;
}

int run_idempotents(int n, std::ostream& out) {
  bool all_ok = true;
  for (const auto& m : PlanarMatching::all(n)) {
    const IdempotentBatteryReport rep = idempotent_battery(m);
    all_ok = all_ok && rep.ok();
    out << m.render() << ": partitions=" << rep.partitions
        << " orthogonal=" << yn(rep.orthogonality)
        << " complete=" << yn(rep.completeness)
        << " primitive=" << yn(rep.primitivity) << "\n";
  }
  out << (all_ok ? "all idempotent batteries passed"
                 : "idempotent battery FAILED")
      << "\n";
  return all_ok ? 0 : 1;
}

int run_walks(int n, std::ostream& out) {
  for (const auto& w : enumerate_classes(n)) out << bits_to_string(w) << "\n";
  return 0;
}

int run_eval(const std::string& file, const std::string& inputs_text,
             const std::string& format, std::ostream& out) {
  std::ifstream in(file);
  if (!in) throw std::invalid_argument("cannot open surface file: " + file);
  const SurfacePresentation S = surface_from_json(Json::parse(in));

  TensorElement result = TensorElement::scalar(S.algebra(), Scalar(0));
  if (S.total_punctures() == 0) {
    if (!inputs_text.empty())
      throw std::invalid_argument("--inputs given but the surface has no punctures");
    result = eval_surface(S);
  } else {
    std::vector<std::string> texts =
        inputs_text.empty()
            ? std::vector<std::string>(
                  static_cast<std::size_t>(S.total_punctures()), "1")
            : split_csv(inputs_text);
    if (static_cast<int>(texts.size()) != S.total_punctures())
      throw std::invalid_argument(
          "expected " + std::to_string(S.total_punctures()) +
          " puncture inputs, got " + std::to_string(texts.size()));
    TensorElement inputs = TensorElement::scalar(S.algebra(), Scalar(1));
    for (const auto& text : texts)
      inputs = outer(inputs, TensorElement::from_element(
                                 parse_element(S.algebra(), text)));
    result = eval_punctured(S, inputs);
  }

  if (format == "json")
    out << tensor_to_json(result).dump(2) << "\n";
  else
    out << result.render() << "\n";
  return 0;
}

int run_invariant(const std::string& example, const std::string& ev_text,
                  int r, std::ostream& out) {
  const auto line = [&](const std::string& label, const Scalar& value) {
    out << label << " -> " << value.render() << "\n";
  };
  if (example == "s2xb2") {
    const Scalar ev = Scalar::parse(ev_text);
    line("empty", invariant_S2xB2(gen_empty(), ev));
    line("D", invariant_S2xB2(gen_D(), ev));
    for (int k = 1; k <= 6; ++k)
      line(power_label("S", k), invariant_S2xB2(gen_S(k), ev));
  } else if (example == "b3xs1") {
    line("empty", invariant_B3xS1(gen_empty()));
    line("D", invariant_B3xS1(gen_D()));
    for (int k = 1; k <= 3; ++k)
      line(power_label("S", k), invariant_B3xS1(gen_S(k)));
  } else {
    line("empty", invariant_T2xB2(gen_empty(), r));
    line("D", invariant_T2xB2(gen_D(), r));
    for (int k = 1; k <= 4; ++k)
      line(power_label("T", k), invariant_T2xB2(gen_T(k), r));
  }
  return 0;
}

int run_verify(const std::string& suite, std::optional<int> max_n,
               unsigned seed, std::ostream& out) {
  const VerifyReport rep = verify_suite(suite, max_n, seed);
  std::size_t passed = 0;
  for (const auto& check : rep.checks) {
    if (check.passed) {
      ++passed;
      out << "[ok] " << check.name << "\n";
    } else {
      out << "[FAIL] " << check.name
          << (check.detail.empty() ? "" : ": " + check.detail) << "\n";
    }
  }
  out << "suite " << rep.suite << ": " << passed << "/" << rep.checks.size()
      << " checks passed\n";
  return rep.all_passed() ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact surface-skein invariants of commutative Frobenius algebras"};
  app.require_subcommand(1);

  const std::vector<std::string> algebras = {"alpha", "bar_natan", "trivial",
                                             "beta"};

  std::string k_algebra = "alpha", k_u = "1", k_method = "copair",
              k_format = "tensor";
  std::size_t k_N = 2;
  int k_n = 1;
  CLI::App* kirby =
      app.add_subcommand("kirby", "Print the 2-handle Kirby color on 2n strands");
  kirby->add_option("--n", k_n, "Number of strand pairs")
      ->required()
      ->check(CLI::NonNegativeNumber);
  kirby->add_option("--algebra", k_algebra, "Builtin Frobenius algebra")
      ->check(CLI::IsMember(algebras));
  kirby->add_option("--u", k_u, "Unit parameter of the trivial algebra");
  kirby->add_option("--N", k_N, "Rank of the beta algebra");
  kirby->add_option("--method", k_method, "Computation route")
      ->check(CLI::IsMember({"copair", "closed", "symmetrizer", "all"}));
  kirby->add_option("--format", k_format, "Output format")
      ->check(CLI::IsMember({"tensor", "dtl", "json"}));

  std::string p_algebra = "alpha", p_u = "1";
  std::size_t p_N = 2;
  int p_n = 1;
  CLI::App* pairing =
      app.add_subcommand("pairing", "Print the meridional Gram matrix");
  pairing->add_option("--n", p_n, "Number of strand pairs")
      ->required()
      ->check(CLI::PositiveNumber);
  pairing->add_option("--algebra", p_algebra, "Builtin Frobenius algebra")
      ->check(CLI::IsMember(algebras));
  pairing->add_option("--u", p_u, "Unit parameter of the trivial algebra");
  pairing->add_option("--N", p_N, "Rank of the beta algebra");

  int i_n = 1;
  CLI::App* idem = app.add_subcommand(
      "idempotents", "Run the idempotent battery over all planar matchings");
  idem->add_option("--n", i_n, "Number of strand pairs")
      ->required()
      ->check(CLI::PositiveNumber);

  int w_n = 1;
  CLI::App* walks =
      app.add_subcommand("walks", "List the non-returning walks W+_{2n}");
  walks->add_option("--n", w_n, "Number of strand pairs")
      ->required()
      ->check(CLI::PositiveNumber);

  std::string e_file, e_inputs, e_format = "text";
  CLI::App* eval =
      app.add_subcommand("eval", "Evaluate a surface presentation from JSON");
  eval->add_option("--surface", e_file, "Surface presentation JSON file")
      ->required();
  eval->add_option("--inputs", e_inputs,
                   "Comma-separated puncture inputs (default: units)");
  eval->add_option("--format", e_format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string inv_example, inv_ev = "1";
  int inv_r = 1;
  CLI::App* invariant = app.add_subcommand(
      "invariant", "Print a worked 2-handlebody invariant table");
  invariant->add_option("--example", inv_example, "Worked example")
      ->required()
      ->check(CLI::IsMember({"s2xb2", "b3xs1", "t2xb2"}));
  invariant->add_option("--ev", inv_ev, "Evaluation of the empty skein");
  invariant->add_option("--r", inv_r, "Framing coefficient for t2xb2");

  std::string v_suite;
  std::optional<int> v_max_n;
  unsigned v_seed = 0;
  CLI::App* verify =
      app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", v_suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(verify_suite_names()));
  verify->add_option("--max-n", v_max_n, "Size bound for the suite");
  verify->add_option("--seed", v_seed, "Seed for randomized checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (kirby->parsed())
      return run_kirby(k_n, k_algebra, k_u, k_N, k_method, k_format, out);
    if (pairing->parsed()) return run_pairing(p_n, p_algebra, p_u, p_N, out);
    if (idem->parsed()) return run_idempotents(i_n, out);
    if (walks->parsed()) return run_walks(w_n, out);
    if (eval->parsed()) return run_eval(e_file, e_inputs, e_format, out);
    if (invariant->parsed()) return run_invariant(inv_example, inv_ev, inv_r, out);
    if (verify->parsed()) return run_verify(v_suite, v_max_n, v_seed, out);
  } catch (const SingularPairing& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace skeincli

#ifndef SKEIN_CLI_NO_MAIN
int main(int argc, char** argv) {
  return skeincli::run(argc, argv, std::cout, std::cerr);
}
#endif
