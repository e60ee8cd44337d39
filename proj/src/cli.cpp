#include "resgraph/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <future>
#include <ostream>

#include "resgraph/report.hpp"

namespace resgraph::cli {

namespace fs = std::filesystem;

namespace {

struct Options {
  std::string file;
  std::string dir;
  bool json = false;
  bool assume_gorenstein = false;
  bool allow_nonminimal = false;
  long k = 0;
  std::string oracle_cap = "default";
};

int emit(const ReportDocument& doc, const Options& o, std::ostream& out) {
  out << (o.json ? render_json(doc) : render_text(doc));
  return kSuccess;
}

ValidationOptions validation_options(const Options& o) { return {o.allow_nonminimal}; }

int cmd_validate(const Options& o, std::ostream& out) {
  const ResolutionGraph g = read_graph_file(o.file);
  ReportDocument doc;
  doc.command = "validate";
  doc.graph = &g;
  doc.validation = validate(g, validation_options(o));
  emit(doc, o, out);
  return doc.validation->ok() ? kSuccess : kInvalidGraph;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const ResolutionGraph g = read_graph_file(o.file);
  ReportDocument doc;
  doc.command = "classify";
  doc.graph = &g;
  doc.assumptions.gorenstein = o.assume_gorenstein;
  doc.classification = classify(g, validation_options(o));
  if (o.assume_gorenstein) doc.genus = geometric_genus(g, *doc.classification, doc.assumptions);
  return emit(doc, o, out);
}

int cmd_sequence(const Options& o, std::ostream& out) {
  const ResolutionGraph g = read_graph_file(o.file);
  ReportDocument doc;
  doc.command = "sequence";
  doc.graph = &g;
  doc.classification = classify(g, validation_options(o));
  const auto& c = *doc.classification;
  if (!c.elliptic())
    throw HypothesisError("elliptic", std::string("graph is ") + std::string(to_string(c.singularity_class)) +
                                          ", the elliptic sequence needs chi(Z_num) = 0");
  if (!c.numerically_gorenstein)
    throw HypothesisError("numerically_gorenstein",
                          "graph is not numerically Gorenstein, the elliptic sequence is not defined");
  doc.include_sequence = true;
  return emit(doc, o, out);
}

int cmd_invariants(const Options& o, std::ostream& out, std::ostream& err) {
  const ResolutionGraph g = read_graph_file(o.file);
  ReportDocument doc;
  doc.command = "invariants";
  doc.graph = &g;
  doc.assumptions.gorenstein = o.assume_gorenstein;
  doc.classification = classify(g, validation_options(o));
  doc.include_sequence = true;
  doc.invariants = compute_invariants(g, *doc.classification, doc.assumptions);
  emit(doc, o, out);
  if (doc.invariants->refusal_reason) {
    err << "resgraph: " << *doc.invariants->refusal_reason << " [" << *doc.invariants->refused_hypothesis
        << "]\n";
    return kHypothesisNotSatisfied;
  }
  return kSuccess;
}

int cmd_hilbert(const Options& o, std::ostream& out) {
  const ResolutionGraph g = read_graph_file(o.file);
  ReportDocument doc;
  doc.command = "hilbert";
  doc.graph = &g;
  doc.assumptions.gorenstein = o.assume_gorenstein;
  doc.classification = classify(g, validation_options(o));
  const GenusResult genus = geometric_genus(g, *doc.classification, doc.assumptions);
  const auto hs = hilbert_samuel(g, *doc.classification, doc.assumptions, genus.verdict, o.k);
  doc.hilbert = HilbertRequest{o.k, hs.value};
  return emit(doc, o, out);
}

int cmd_verify(const Options& o, std::ostream& out) {
  const ResolutionGraph g = read_graph_file(o.file);
  ReportDocument doc;
  doc.command = "verify";
  doc.graph = &g;
  doc.classification = classify(g, validation_options(o));
  VerificationOptions vo;
  vo.oracle.limit = enumeration_limit_from_env();
  vo.bound = SearchBound::parse(g, o.oracle_cap);
  doc.oracle = verify_graph(g, *doc.classification, vo);
  emit(doc, o, out);
  return all_passed(*doc.oracle) ? kSuccess : kVerificationFailed;
}

struct BatchItem {
  std::string line;
  bool ok = false;
};

BatchItem batch_one(const fs::path& path, const Options& o) {
  const std::string name = path.filename().string();
  try {
    const ResolutionGraph g = read_graph_file(path.string());
    ReportDocument doc;
    doc.command = "classify";
    doc.graph = &g;
    doc.classification = classify(g, validation_options(o));
    if (o.json) {
      nlohmann::ordered_json line;
      line["file"] = name;
      line["report"] = to_json(doc);
      line["error"] = nullptr;
      return {line.dump(), true};
    }
    return {summary_line(name, *doc.classification), true};
  } catch (const Error& e) {
    if (o.json) {
      nlohmann::ordered_json line;
      line["file"] = name;
      line["report"] = nullptr;
      line["error"] = e.what();
      return {line.dump(), false};
    }
    return {name + ": error: " + e.what(), false};
  }
}

int cmd_batch(const Options& o, std::ostream& out, std::ostream& err) {
  if (!fs::is_directory(o.dir)) {
    err << "resgraph: not a directory: " << o.dir << '\n';
    return kUsageError;
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(o.dir))
    if (entry.is_regular_file() && entry.path().extension() == ".graph") files.push_back(entry.path());
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });

  std::vector<std::future<BatchItem>> jobs;
  jobs.reserve(files.size());
  for (const fs::path& p : files) jobs.push_back(std::async(std::launch::async, batch_one, p, o));
  bool ok = true;
  for (auto& job : jobs) {
    const BatchItem item = job.get();
    out << item.line << '\n';
    ok = ok && item.ok;
  }
  return ok ? kSuccess : kInvalidGraph;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Topological invariants of normal surface singularities from resolution graphs",
               "resgraph"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));
  Options o;

  auto file_command = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "graph file")->required();
    sub->add_flag("--json", o.json, "emit JSON");
    sub->add_flag("--allow-nonminimal", o.allow_nonminimal,
                  "accept smooth rational -1 curves (with a warning)");
    return sub;
  };

  CLI::App* validate_cmd = file_command("validate", "check a graph against the input contract");
  CLI::App* classify_cmd = file_command("classify", "classify the singularity");
  classify_cmd->add_flag("--assume-gorenstein", o.assume_gorenstein, "declare the singularity Gorenstein");
  CLI::App* sequence_cmd = file_command("sequence", "list the elliptic sequence");
  CLI::App* invariants_cmd = file_command("invariants", "geometric genus, multiplicity, embedding dimension");
  invariants_cmd->add_flag("--assume-gorenstein", o.assume_gorenstein, "declare the singularity Gorenstein");
  CLI::App* hilbert_cmd = file_command("hilbert", "Hilbert-Samuel function at k");
  hilbert_cmd->add_option("--k", o.k, "power of the maximal ideal")->required()->check(CLI::PositiveNumber);
  hilbert_cmd->add_flag("--assume-gorenstein", o.assume_gorenstein, "declare the singularity Gorenstein");
  CLI::App* verify_cmd = file_command("verify", "cross-check against brute-force enumeration");
  verify_cmd->add_option("--oracle-cap", o.oracle_cap,
                         "enumeration box: default (Z_K + Z_num), <n>z, or a comma list");
  CLI::App* batch_cmd = app.add_subcommand("batch", "classify every *.graph file in a directory");
  batch_cmd->add_option("dir", o.dir, "directory")->required();
  batch_cmd->add_flag("--json", o.json, "one JSON document per line");
  batch_cmd->add_flag("--allow-nonminimal", o.allow_nonminimal, "accept smooth rational -1 curves");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "resgraph: " << e.what() << "\nrun 'resgraph --help' for usage\n";
    return kUsageError;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(o, out);
    if (classify_cmd->parsed()) return cmd_classify(o, out);
    if (sequence_cmd->parsed()) return cmd_sequence(o, out);
    if (invariants_cmd->parsed()) return cmd_invariants(o, out, err);
    if (hilbert_cmd->parsed()) return cmd_hilbert(o, out);
    if (verify_cmd->parsed()) return cmd_verify(o, out);
    if (batch_cmd->parsed()) return cmd_batch(o, out, err);
  } catch (const HypothesisError& e) {
    err << "resgraph: " << e.what() << " [" << e.hypothesis() << "]\n";
    return kHypothesisNotSatisfied;
  } catch (const ParseError& e) {
    err << "resgraph: " << o.file << ": " << e.what() << '\n';
    return kInvalidGraph;
  } catch (const InvalidGraph& e) {
    err << "resgraph: invalid graph: " << e.what() << '\n';
    return kInvalidGraph;
  } catch (const InvariantViolation& e) {
    err << "resgraph: structural check failed: " << e.what() << '\n';
    return kInvalidGraph;
  } catch (const PreconditionError& e) {
    err << "resgraph: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "resgraph: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace resgraph::cli
