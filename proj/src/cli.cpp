#include "quadlaw/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "quadlaw/json_io.hpp"
#include "quadlaw/oracle.hpp"

namespace quadlaw {

namespace {

using io::json;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Malformed: return kExitMalformed;
    case ErrorKind::Unknown: return kExitUnknown;
    case ErrorKind::InternalError: return kExitInternal;
    default: return kExitPrecondition;
  }
}

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw Error(ErrorKind::Malformed, "cannot read " + path);
  buf << file.rdbuf();
  return buf.str();
}

// A document is a law ({"coeffs": ..}) or a normal form ({"a": .., "c": ..}).
struct Input {
  Sbl law;
  std::optional<NormalForm> nf;
};

Input load_input(const std::string& path, std::istream& in) {
  const json doc = io::parse(read_source(path, in));
  if (doc.is_object() && doc.contains("coeffs")) return {io::law_from_json(doc), std::nullopt};
  if (doc.is_object() && doc.contains("a") && doc.contains("c")) {
    NormalForm nf = io::normal_form_from_json(doc);
    Sbl law = to_original_coordinates(nf);
    return {std::move(law), std::move(nf)};
  }
  throw Error(ErrorKind::Malformed, "expected a law or a normal form document");
}

NormalForm normal_form_of(const Input& input) {
  return input.nf ? *input.nf : normal_form(input.law);
}

json invariants_json(const Input& input) {
  json out = {{"field", io::field_to_json(input.law.spec())}};
  const bool regular = is_regular(input.law);
  out["regular"] = regular;
  if (regular) {
    const IInvariants i = invariants_I(input.law);
    out["I1"] = io::value_to_json(i.i1);
    out["I2"] = io::value_to_json(i.i2);
  }
  std::optional<NormalForm> nf;
  try {
    nf = normal_form_of(input);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Degenerate && e.kind() != ErrorKind::Unknown) throw;
    out["normal_form_reason"] = e.what();
  }
  if (nf) {
    out["K"] = io::value_to_json(invariant_K(*nf));
    out["Na"] = io::value_to_json(invariant_Na(*nf));
    if (!j_denominator(*nf).is_zero()) {
      const JInvariants j = invariants_J(*nf);
      out["J1"] = io::value_to_json(j.j1);
      out["J2"] = io::value_to_json(j.j2);
    }
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Classification of symmetric bilinear composition laws on the plane", "quadlaw"};
  app.fallthrough();
  app.require_subcommand(1);
  bool pretty = false;
  std::uint64_t seed = 1;
  app.add_flag("--pretty", pretty, "Indent JSON output");
  app.add_option("--seed", seed, "Seed for randomized sampling");

  std::string file1 = "-";
  std::string file2;
  auto* qform_cmd = app.add_subcommand("qform", "Gram matrix of the attached quadratic form");
  auto* trace_cmd = app.add_subcommand("trace", "Trace covector");
  auto* regular_cmd = app.add_subcommand("regular", "det of the traceless part's form, and regularity");
  auto* inv_cmd = app.add_subcommand("invariants", "I-invariants and, when available, J, K and N(a)");
  auto* nf_cmd = app.add_subcommand("normal-form", "Clifford normal form");
  auto* iso_cmd = app.add_subcommand("isotropy", "Isotropy group of the normal form");
  for (auto* cmd : {qform_cmd, trace_cmd, regular_cmd, inv_cmd, nf_cmd, iso_cmd}) {
    cmd->add_option("input", file1, "Law or normal form JSON ('-' for stdin)")->required();
  }
  auto* equiv_cmd = app.add_subcommand("equiv", "Decide GL-equivalence of two laws");
  equiv_cmd->add_option("first", file1, "First law JSON")->required();
  equiv_cmd->add_option("second", file2, "Second law JSON")->required();

  std::int64_t p = 5;
  std::string filter = "all";
  std::optional<std::int64_t> beta;
  auto* census_cmd = app.add_subcommand("census", "Orbit census of all laws over GF(p)");
  census_cmd->add_option("--p", p, "Prime")->required();
  census_cmd->add_option("--filter", filter, "all | qN | regular");
  census_cmd->add_option("--beta", beta, "beta for the qN filter");

  std::string fixtures;
  std::size_t pairs = 1000;
  auto* xv_cmd = app.add_subcommand("cross-validate", "Check every classification result by brute force");
  xv_cmd->add_option("--p", p, "Prime")->required();
  xv_cmd->add_option("--fixtures", fixtures, "Write counterexamples here, one JSON object per line");
  xv_cmd->add_option("--pairs", pairs, "Number of random pairs");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitMalformed;
  }

  auto emit = [&](const json& j) { out << j.dump(pretty ? 2 : -1) << '\n'; };

  try {
    if (qform_cmd->parsed()) {
      const Input input = load_input(file1, in);
      json j = io::form_to_json(qform(input.law));
      j["field"] = io::field_to_json(input.law.spec());
      emit(j);
    } else if (trace_cmd->parsed()) {
      const Input input = load_input(file1, in);
      const Covector t = trace(input.law);
      emit({{"field", io::field_to_json(input.law.spec())},
            {"trace", json::array({io::value_to_json(t.l1), io::value_to_json(t.l2)})}});
    } else if (regular_cmd->parsed()) {
      const Input input = load_input(file1, in);
      emit({{"field", io::field_to_json(input.law.spec())},
            {"det_qbar", io::value_to_json(det_qbar(input.law))},
            {"regular", is_regular(input.law)}});
    } else if (inv_cmd->parsed()) {
      emit(invariants_json(load_input(file1, in)));
    } else if (nf_cmd->parsed()) {
      emit(io::normal_form_to_json(normal_form_of(load_input(file1, in))));
    } else if (iso_cmd->parsed()) {
      const NormalForm nf = normal_form_of(load_input(file1, in));
      json j = io::isotropy_to_json(nf, isotropy(nf));
      j["normal_form"] = io::normal_form_to_json(nf);
      emit(j);
    } else if (equiv_cmd->parsed()) {
      if (file1 == "-" && file2 == "-") throw Error(ErrorKind::Malformed, "only one input may be stdin");
      const Input f = load_input(file1, in);
      const Input g = load_input(file2, in);
      const EquivResult r = equivalent(f.law, g.law);
      emit(io::equiv_to_json(r));
      switch (r.verdict) {
        case Verdict::Equivalent: return kExitOk;
        case Verdict::NotEquivalent: return kExitNotEquivalent;
        case Verdict::Unknown: return kExitUnknown;
      }
    } else if (census_cmd->parsed()) {
      emit(oracle::census_to_json(oracle::census(p, oracle::filter_from_string(filter), beta)));
    } else if (xv_cmd->parsed()) {
      oracle::CrossValidateOptions opt;
      opt.seed = seed;
      opt.random_pairs = pairs;
      const oracle::Report report = oracle::cross_validate(p, opt);
      if (!fixtures.empty()) oracle::write_fixtures(report, fixtures);
      emit(oracle::report_to_json(report));
      if (!report.clean()) {
        err << "cross-validate: counterexamples found\n";
        return kExitCounterexamples;
      }
    }
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace quadlaw
