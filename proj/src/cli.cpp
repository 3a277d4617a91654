#include "tbm/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tbm/dynamics.hpp"
#include "tbm/evidence_io.hpp"
#include "tbm/specialization.hpp"
#include "tbm/verify.hpp"

namespace tbm::cli {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

MassFunction load_mass(const std::string& path) {
  try {
    return io::mass_from_document(io::parse_document(read_file(path)));
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
}

class Output {
 public:
  Output(std::string path, std::ostream& fallback) : path_(std::move(path)), fallback_(fallback) {}

  void write(const std::string& text) const {
    if (path_.empty()) {
      fallback_ << text;
      return;
    }
    std::ofstream file(path_, std::ios::binary);
    if (!file) throw InvalidArgument("cannot write '" + path_ + "'");
    file << text;
  }

 private:
  std::string path_;
  std::ostream& fallback_;
};

std::vector<int> parse_sizes(const std::string& list) {
  std::vector<int> sizes;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int n = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      sizes.push_back(n);
    } catch (const std::exception&) {
      throw InvalidArgument("bad frame size '" + item + "'");
    }
  }
  if (sizes.empty()) throw InvalidArgument("no frame sizes given");
  return sizes;
}

std::vector<std::string> parse_names(const std::string& list) {
  std::vector<std::string> names;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) names.push_back(item);
  return names;
}

std::string text_report(const std::vector<verify::VerificationReport>& reports) {
  std::string out;
  char line[512];
  for (const auto& r : reports) {
    std::snprintf(line, sizeof line, "%s %-22s n=%d instances=%zu violations=%zu worst=%.3g tol=%.0e  %s\n",
                  r.passed() ? "PASS" : "FAIL", r.check.c_str(), r.frame_size, r.instances, r.violations,
                  r.worst_deviation, r.tolerance, r.detail.c_str());
    out += line;
    if (r.witness) out += "  witness: " + *r.witness + "\n";
  }
  out += verify::all_passed(reports) ? "all checks passed\n" : "verification FAILED\n";
  return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Belief-function calculus: conversions, combination rules, specialization matrices, checks", "tbm"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string output_path;
  app.add_option("-o,--output", output_path, "Write the result to this file instead of stdout");

  std::string input;
  std::string target_kind = "bel";
  auto* convert_cmd = app.add_subcommand("convert", "Convert an evidence file to another representation");
  convert_cmd->add_option("file", input, "Evidence file")->required();
  convert_cmd->add_option("--to", target_kind, "Target representation")
      ->check(CLI::IsMember({"mass", "bel", "pl", "q", "b"}));

  std::vector<std::string> inputs;
  std::string rule = "conjunctive";
  auto* combine_cmd = app.add_subcommand("combine", "Combine two or more evidence files");
  combine_cmd->add_option("files", inputs, "Evidence files")->required()->expected(2, -1);
  combine_cmd->add_option("--rule", rule, "Combination rule")
      ->check(CLI::IsMember({"conjunctive", "normalized", "disjunctive"}));

  std::string subset_key;
  auto* condition_cmd = app.add_subcommand("condition", "Condition on a subset (unnormalized Dempster rule)");
  condition_cmd->add_option("file", input, "Evidence file")->required();
  condition_cmd->add_option("--on", subset_key, "Subset key, e.g. \"b|c\"")->required();

  std::string evidence_path;
  auto* retract_cmd = app.add_subcommand("retract", "Remove previously combined evidence");
  retract_cmd->add_option("file", input, "Combined evidence file")->required();
  retract_cmd->add_option("--evidence", evidence_path, "Evidence to remove")->required();

  auto* enlarge_cmd = app.add_subcommand("enlarge", "Make the elements of a subset indiscernible");
  enlarge_cmd->add_option("file", input, "Evidence file")->required();
  enlarge_cmd->add_option("--on", subset_key, "Subset key")->required();

  std::string matrix_kind;
  std::string conditioning_key;
  bool conditioning_given = false;
  std::string frame_labels;
  auto* matrix_cmd = app.add_subcommand("matrix", "Export a specialization or generalization matrix");
  matrix_cmd->add_option("file", input, "Evidence file (frame and generating masses)");
  matrix_cmd->add_option("--conditioning", conditioning_key, "Build S_C for this subset key")
      ->each([&](const std::string&) { conditioning_given = true; });
  matrix_cmd->add_option("--frame", frame_labels, "Comma-separated labels when no file is given");
  matrix_cmd->add_option("--kind", matrix_kind, "Matrix kind")
      ->check(CLI::IsMember({"specialization", "dempsterian", "despecialization", "disjunctive"}));

  std::string theorems;
  std::string sizes = "1,2,3,4";
  std::size_t samples = 0;
  std::uint64_t seed = verify::RunConfig{}.seed;
  bool as_json = false;
  bool inject_fault = false;
  auto* check_cmd = app.add_subcommand("check", "Run the property checks of the belief calculus");
  check_cmd->add_option("--theorems", theorems, "Comma-separated checks (default: all)");
  check_cmd->add_option("--n", sizes, "Comma-separated frame sizes");
  check_cmd->add_option("--samples", samples, "Samples per check (0: per-check default)");
  check_cmd->add_option("--seed", seed, "Random seed");
  check_cmd->add_flag("--json", as_json, "Emit the report as JSON");
  check_cmd->add_flag("--inject-fault", inject_fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  const Output output(output_path, out);
  try {
    if (*convert_cmd) {
      const MassFunction m = load_mass(input);
      output.write(io::print_document(target_kind == "mass" ? io::document_from(m)
                                                            : io::document_from(tbm::convert(m, parse_value_kind(target_kind)))));
    } else if (*combine_cmd) {
      MassFunction acc = load_mass(inputs.front());
      for (std::size_t i = 1; i < inputs.size(); ++i) {
        const MassFunction next = load_mass(inputs[i]);
        if (rule == "conjunctive") acc = combine_conjunctive(acc, next);
        if (rule == "disjunctive") acc = combine_disjunctive(acc, next);
        // Normalizing once at the end equals the normalized left fold.
        if (rule == "normalized") acc = combine_conjunctive(acc, next);
      }
      if (rule == "normalized") acc = normalize(acc);
      output.write(io::print_document(io::document_from(acc)));
    } else if (*condition_cmd) {
      const MassFunction m = load_mass(input);
      output.write(io::print_document(io::document_from(condition(m, m.frame().parse_key(subset_key)))));
    } else if (*retract_cmd) {
      const MassFunction combined = load_mass(input);
      const MassFunction evidence = load_mass(evidence_path);
      output.write(io::print_document(io::document_from(retract(combined, evidence))));
    } else if (*enlarge_cmd) {
      const MassFunction m = load_mass(input);
      output.write(io::print_document(io::document_from(enlarge(m, m.frame().parse_key(subset_key)))));
    } else if (*matrix_cmd) {
      if (matrix_kind.empty()) matrix_kind = conditioning_given ? "specialization" : "dempsterian";
      if (matrix_kind == "specialization") {
        if (!conditioning_given) throw InvalidArgument("--kind specialization needs --conditioning");
        std::optional<Frame> frame;
        if (!input.empty()) frame = load_mass(input).frame();
        else if (!frame_labels.empty()) frame = Frame(parse_names(frame_labels));
        else throw InvalidArgument("--conditioning needs an evidence file or --frame");
        const auto s = conditioning_matrix(*frame, frame->parse_key(conditioning_key));
        output.write(io::print_matrix(*frame, s.matrix(), "specialization (conditioning on " +
                                                              display(*frame, frame->parse_key(conditioning_key)) + ")"));
      } else {
        if (input.empty()) throw InvalidArgument("--kind " + matrix_kind + " needs an evidence file");
        if (conditioning_given) throw InvalidArgument("--conditioning only applies to --kind specialization");
        const MassFunction m = load_mass(input);
        if (matrix_kind == "dempsterian") {
          output.write(io::print_matrix(m.frame(), dempsterian_matrix(m).matrix(), "dempsterian"));
        } else if (matrix_kind == "despecialization") {
          output.write(io::print_matrix(m.frame(), despecialize_matrix(dempsterian_matrix(m)).matrix(),
                                        "despecialization"));
        } else {
          output.write(io::print_matrix(m.frame(), disjunctive_matrix(m).matrix(), "disjunctive (generalization)"));
        }
      }
    } else if (*check_cmd) {
      verify::RunConfig config;
      config.sizes = parse_sizes(sizes);
      if (!theorems.empty()) config.checks = parse_names(theorems);
      config.samples = samples;
      config.seed = seed;
      config.options.inject_fault = inject_fault;
      const auto reports = verify::run_all(config);
      output.write(as_json ? verify::to_json(reports) : text_report(reports));
      return verify::all_passed(reports) ? kSuccess : kVerificationFailure;
    }
  } catch (const PreconditionError& e) {
    err << "tbm: precondition violated: " << e.what() << "\n";
    return kPreconditionError;
  } catch (const Error& e) {
    err << "tbm: input error: " << e.what() << "\n";
    return kInputError;
  }
  return kSuccess;
}

}  // namespace tbm::cli
