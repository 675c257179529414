#include "qmap/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qmap/bijection.hpp"
#include "qmap/blossom.hpp"
#include "qmap/enumeration.hpp"
#include "qmap/experiments.hpp"
#include "qmap/planar_map.hpp"
#include "qmap/verify.hpp"

namespace qmap {

namespace {

// Input problems that are not usage errors: exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line.substr(first));
  }
  return lines;
}

// Map records span several lines and end with "end".
std::vector<std::string> read_map_blocks(std::istream& in) {
  std::vector<std::string> blocks;
  std::string current;
  for (const auto& line : read_lines(in)) {
    current += line;
    current += '\n';
    if (line.rfind("end", 0) == 0) {
      blocks.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) blocks.push_back(std::move(current));
  return blocks;
}

// Runs `convert` on every record; the first rejected record stops the command.
template <class Convert>
void convert_records(const std::vector<std::string>& records, std::ostream& out,
                     Convert convert) {
  for (std::size_t i = 0; i < records.size(); ++i) {
    try {
      out << convert(records[i]);
    } catch (const ContourConsistencyError& err) {
      throw InputError("record " + std::to_string(i + 1) + ": consistency violation: " + err.what());
    } catch (const std::exception& err) {
      throw InputError("record " + std::to_string(i + 1) + ": " + err.what());
    }
  }
}

EmbeddedTree sample_well_labelled(std::size_t size, Rng& rng) {
  return sample_well_labelled_coupled(size, rng).well_labelled;
}

std::string render_sample(const std::string& kind, std::size_t size, Rng& rng) {
  if (kind == "tree") return to_parentheses(sample_plane_tree(size, rng)) + "\n";
  if (kind == "embedded") return to_text(sample_embedded(size, rng)) + "\n";
  if (kind == "well-labelled") return to_text(sample_well_labelled(size, rng)) + "\n";
  return to_text(canonical_form(tree_to_quad(sample_well_labelled(size, rng))));
}

std::string render_enumerated(const std::string& kind, const EmbeddedTree& labelled) {
  if (kind == "quadrangulation") return to_text(canonical_form(tree_to_quad(labelled)));
  return to_text(labelled) + "\n";
}

struct Options {
  std::string kind;
  std::size_t size = 1;
  std::size_t count = 1;
  std::uint64_t seed = 1;
  std::string in_path;
  std::string out_path;
  std::string suite;
  std::int64_t n_max = 4;
  std::string config_path;
  std::size_t jobs = 0;
};

int cmd_sample(const Options& opts, std::ostream& out) {
  if (opts.size < 1 && opts.kind != "tree" && opts.kind != "embedded") {
    throw CLI::ValidationError("--n", "must be at least 1 for this kind");
  }
  for (std::size_t i = 0; i < opts.count; ++i) {
    Rng rng(derive_seed(opts.seed, opts.size, i));
    out << render_sample(opts.kind, opts.size, rng);
  }
  return kExitOk;
}

int cmd_encode(const Options& opts, std::istream& in, std::ostream& out) {
  const auto records = read_lines(in);
  if (opts.kind == "quad") {
    convert_records(records, out, [](const std::string& radius) {
      const auto labelled = parse_embedded(radius);
      if (!is_well_labelled(labelled)) throw std::domain_error("tree is not well labelled");
      return to_text(tree_to_quad(labelled));
    });
  } else if (opts.kind == "contour") {
    convert_records(records, out, [](const std::string& radius) {
      return to_text(to_contour_pair(parse_embedded(radius))) + "\n";
    });
  } else {
    convert_records(records, out, [](const std::string& radius) {
      return to_text(embedded_to_blossom(parse_embedded(radius))) + "\n";
    });
  }
  return kExitOk;
}

int cmd_decode(const Options& opts, std::istream& in, std::ostream& out) {
  if (opts.kind == "quad") {
    convert_records(read_map_blocks(in), out, [](const std::string& radius) {
      return to_text(quad_to_tree(parse_map(radius))) + "\n";
    });
  } else if (opts.kind == "contour") {
    convert_records(read_lines(in), out, [](const std::string& radius) {
      return to_text(from_contour_pair(parse_contour_pair(radius))) + "\n";
    });
  } else {
    convert_records(read_lines(in), out, [](const std::string& radius) {
      return to_text(blossom_to_embedded(parse_blossom(radius))) + "\n";
    });
  }
  return kExitOk;
}

int cmd_enumerate(const Options& opts, std::ostream& out) {
  const auto size = static_cast<std::int64_t>(opts.size);
  try {
    require_enumerable(size);
  } catch (const std::length_error& stop) {
    throw CLI::ValidationError("--n", stop.what());
  }
  if (opts.kind == "tree") {
    for (const auto& tree : all_plane_trees(opts.size)) out << to_parentheses(tree) << '\n';
  } else if (opts.kind == "embedded") {
    EmbeddedTreeEnumerator it(size);
    while (auto step = it.next()) out << render_enumerated(opts.kind, *step);
  } else {
    WellLabelledEnumerator it(size);
    while (auto step = it.next()) out << render_enumerated(opts.kind, *step);
  }
  return kExitOk;
}

int cmd_verify(const Options& opts, std::istream& in, std::ostream& out) {
  bool ok = true;
  auto report = [&](bool passed, const std::string& line) {
    out << (passed ? "ok   " : "FAIL ") << line << '\n';
    ok = ok && passed;
  };
  if (opts.suite == "input") {
    // Well-labelled trees, one per line, e.g. the output of `decode --kind quad`.
    const auto records = read_lines(in);
    for (std::size_t i = 0; i < records.size(); ++i) {
      const auto labelled = parse_embedded(records[i]);
      const bool good = is_well_labelled(labelled) && check_bijection_instance(labelled).ok();
      if (!good) report(false, "record " + std::to_string(i + 1) + ": " + records[i]);
    }
    report(ok, "input records=" + std::to_string(records.size()));
    return ok ? kExitOk : kExitFailure;
  }
  for (std::int64_t size = opts.suite == "cycle-lemma" ? 0 : 1; size <= opts.n_max; ++size) {
    if (opts.suite == "bijection") {
      const auto result = verify_bijection(size);
      report(result.ok(), describe(result));
    } else if (opts.suite == "counts") {
      const auto result = verify_counts(size);
      report(result.ok(), describe(result));
    } else if (opts.suite == "classes") {
      const auto result = verify_conjugation(size);
      report(result.ok(), describe(result));
    } else {
      for (std::int64_t level = 1; level <= 3; ++level) {
        if (2 * size + level > static_cast<std::int64_t>(kCycleLemmaMaxLength)) continue;
        const auto lemma = verify_cycle_lemma(size, level);
        std::ostringstream line;
        line << "cycle-lemma n=" << size << " k=" << level << " walks=" << lemma.walk_count
             << " classes=" << lemma.classes.size();
        report(lemma.all_hold(), line.str());
        const auto rot = verify_rotation_invariance(size, level);
        report(rot.ok(), describe(rot));
      }
    }
  }
  return ok ? kExitOk : kExitFailure;
}

int cmd_experiment(const Options& opts, std::ostream& out, std::ostream& err) {
  std::ifstream file(opts.config_path);
  if (!file) throw CLI::ValidationError("--config", "cannot read " + opts.config_path);
  std::stringstream text;
  text << file.rdbuf();
  ExperimentConfig cfg;
  try {
    cfg = parse_config(text.str());
  } catch (const std::exception& err) {
    throw CLI::ValidationError("--config", err.what());
  }
  if (!cfg.kind.empty() && cfg.kind != opts.kind) {
    throw CLI::ValidationError("--config", "config is for '" + cfg.kind + "', not '" + opts.kind + "'");
  }
  cfg.kind = opts.kind;
  if (opts.jobs > 0) cfg.jobs = opts.jobs;
  if (!opts.out_path.empty()) cfg.output = opts.out_path;
  const auto result = run_experiment(cfg);
  out << result.summary_json << '\n';
  if (!result.ok) {
    err << "qmap: experiment " << cfg.kind << " failed: " << result.failure << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Random quadrangulations and well-labelled trees", "qmap"};
  app.require_subcommand(1);
  Options opts;

  auto* sample = app.add_subcommand("sample", "Draw uniform random objects");
  sample->add_option("--kind", opts.kind)
      ->required()
      ->check(CLI::IsMember({"tree", "embedded", "well-labelled", "quadrangulation"}));
  sample->add_option("--n", opts.size, "Edges of the tree, faces of the map")->required();
  sample->add_option("--count", opts.count)->capture_default_str();
  sample->add_option("--seed", opts.seed)->capture_default_str();
  sample->add_option("--out", opts.out_path, "Output file (default: standard output)");

  auto* encode = app.add_subcommand("encode", "Tree to quadrangulation, contour pair or blossom");
  auto* decode = app.add_subcommand("decode", "Inverse of encode");
  for (auto* sub : {encode, decode}) {
    sub->add_option("--kind", opts.kind)->required()->check(
        CLI::IsMember({"quad", "contour", "blossom"}));
    sub->add_option("--in", opts.in_path, "Input file (default: standard input)");
    sub->add_option("--out", opts.out_path, "Output file (default: standard output)");
  }

  auto* enumerate = app.add_subcommand("enumerate", "List every object of a small size");
  enumerate->add_option("--kind", opts.kind)
      ->required()
      ->check(CLI::IsMember({"tree", "embedded", "well-labelled", "quadrangulation"}));
  enumerate->add_option("--n", opts.size)->required();
  enumerate->add_option("--out", opts.out_path);

  auto* verify = app.add_subcommand("verify", "Exhaustive checks; exit 0 iff all pass");
  verify->add_option("--suite", opts.suite)
      ->required()
      ->check(CLI::IsMember({"bijection", "cycle-lemma", "classes", "counts", "input"}));
  verify->add_option("--n-max", opts.n_max)->capture_default_str();
  verify->add_option("--in", opts.in_path, "Trees for --suite input (default: standard input)");

  auto* experiment = app.add_subcommand("experiment", "Monte-Carlo experiments");
  experiment->add_option("kind", opts.kind)
      ->required()
      ->check(CLI::IsMember({"radius", "profile", "coupling", "tail", "fidis"}));
  experiment->add_option("--config", opts.config_path, "JSON configuration")->required();
  experiment->add_option("--jobs", opts.jobs, "Worker threads (overrides the config)");
  experiment->add_option("--out", opts.out_path, "Output directory (overrides the config)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    return app.exit(error, out, err) == 0 ? kExitOk : kExitUsage;
  }

  std::ifstream in_file;
  std::istream* input = &in;
  if (!opts.in_path.empty()) {
    in_file.open(opts.in_path);
    if (!in_file) {
      err << "qmap: cannot read " << opts.in_path << '\n';
      return kExitUsage;
    }
    input = &in_file;
  }
  std::ofstream out_file;
  std::ostream* output = &out;
  if (!opts.out_path.empty() && !experiment->parsed()) {
    out_file.open(opts.out_path);
    if (!out_file) {
      err << "qmap: cannot write " << opts.out_path << '\n';
      return kExitUsage;
    }
    output = &out_file;
  }

  try {
    if (sample->parsed()) return cmd_sample(opts, *output);
    if (encode->parsed()) return cmd_encode(opts, *input, *output);
    if (decode->parsed()) return cmd_decode(opts, *input, *output);
    if (enumerate->parsed()) return cmd_enumerate(opts, *output);
    if (verify->parsed()) return cmd_verify(opts, *input, *output);
    return cmd_experiment(opts, *output, err);
  } catch (const CLI::ParseError& error) {
    err << "qmap: " << error.what() << '\n';
    return kExitUsage;
  } catch (const InputError& error) {
    err << "qmap: " << error.what() << '\n';
    return kExitFailure;
  } catch (const ExperimentFailure& error) {
    err << "qmap: " << error.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& error) {
    std::string context = sample->parsed() ? " (seed " + std::to_string(opts.seed) + ")" : "";
    err << "qmap: " << error.what() << context << '\n';
    return kExitFailure;
  }
}

}  // namespace qmap
