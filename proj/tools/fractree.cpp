// fractree: build self-similar cycle/wheel graphs and check their invariants.
//
// Exit codes: 0 ok, 1 verification mismatch, 2 usage error, 3 resource cap.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fractree/blocks.hpp"
#include "fractree/clustering.hpp"
#include "fractree/construct.hpp"
#include "fractree/entropy.hpp"
#include "fractree/error.hpp"
#include "fractree/io.hpp"
#include "fractree/sequences.hpp"
#include "fractree/spanning.hpp"
#include "fractree/verify.hpp"

namespace {

using namespace fractree;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

/// Raw parameter inputs: flags win only when the positional slot is empty.
struct ParamInputs {
  std::vector<std::string> positional;
  std::string family;
  std::optional<std::string> n, m, stage;

  void bind(CLI::App* cmd, std::string_view positional_help) {
    cmd->add_option("args", positional, std::string(positional_help));
    cmd->add_option("--family", family, "cycle or wheel");
    cmd->add_option("-n,--n", n, "base size (>= 3)");
    cmd->add_option("-m,--m", m, "path length (>= 2)");
    cmd->add_option("-i,--stage", stage, "stage (>= 0)");
  }
};

long parse_int(const std::string& text, std::string_view what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(text, &used);
  } catch (const std::exception&) {
    throw UsageError(std::string(what) + ": not an integer: '" + text + "'");
  }
  if (used != text.size()) throw UsageError(std::string(what) + ": not an integer: '" + text + "'");
  if (v < -1'000'000 || v > 1'000'000) throw UsageError(std::string(what) + " out of range: " + text);
  return v;
}

/// Combines positional slots `first..` with the flags into FractalParams.
/// `need_stage` false means the stage defaults to 0 and may be omitted.
FractalParams resolve_params(const ParamInputs& in, std::size_t first, bool need_stage) {
  std::vector<std::optional<std::string>> slot(4);
  for (std::size_t k = first; k < in.positional.size(); ++k) {
    if (k - first >= 4) throw UsageError("too many positional arguments");
    slot[k - first] = in.positional[k];
  }
  auto merge = [](std::optional<std::string>& s, const std::optional<std::string>& flag, std::string_view name) {
    if (flag) {
      if (s && *s != *flag) throw UsageError(std::string(name) + " given twice with different values");
      s = flag;
    }
  };
  merge(slot[0], in.family.empty() ? std::nullopt : std::optional<std::string>(in.family), "family");
  merge(slot[1], in.n, "n");
  merge(slot[2], in.m, "m");
  merge(slot[3], in.stage, "stage");
  if (!slot[0]) throw UsageError("missing family");
  if (!slot[1]) throw UsageError("missing n");
  if (!slot[2]) throw UsageError("missing m");
  if (!slot[3] && need_stage) throw UsageError("missing stage");
  FractalParams p;
  p.family = parse_family(*slot[0]);
  p.n = static_cast<int>(parse_int(*slot[1], "n"));
  p.m = static_cast<int>(parse_int(*slot[2], "m"));
  p.i = slot[3] ? static_cast<int>(parse_int(*slot[3], "stage")) : 0;
  p.validate();
  return p;
}

/// Writes to --out when given, stdout otherwise.
class Output {
public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
  std::ofstream file_;
};

std::string histogram_string(const std::map<std::size_t, std::size_t>& h) {
  std::string out;
  for (const auto& [d, k] : h) out += (out.empty() ? "" : " ") + std::to_string(d) + ":" + std::to_string(k);
  return out;
}

std::string histogram_string(const std::map<std::size_t, BigInt>& h) {
  std::string out;
  for (const auto& [d, k] : h) out += (out.empty() ? "" : " ") + std::to_string(d) + ":" + to_decimal(k);
  return out;
}

// ---- generate -------------------------------------------------------------

int cmd_generate(const FractalParams& p, const std::string& format, const std::string& out_path) {
  if (format != "edgelist" && format != "json" && format != "dot") {
    throw UsageError("unknown format '" + format + "' (edgelist, json, dot)");
  }
  const Graph g = build(p);
  Output out(out_path);
  if (format == "edgelist") {
    write_edge_list(out.stream(), g);
  } else if (format == "json") {
    write_json(out.stream(), g);
  } else {
    write_dot(out.stream(), g);
  }
  return kExitOk;
}

// ---- count ----------------------------------------------------------------

int cmd_count(const FractalParams& p, const std::string& method, bool as_json, std::ostream& os) {
  const bool all = method == "all";
  if (!all && method != "formula" && method != "matrix-tree" && method != "blocks") {
    throw UsageError("unknown method '" + method + "' (formula, matrix-tree, blocks, all)");
  }
  const FactoredCount factored = tau_closed(p);
  std::optional<BigInt> formula, oracle, by_blocks;
  if (all || method == "formula") formula = factored_expand(factored);
  if (all || method == "matrix-tree" || method == "blocks") {
    const Graph g = build(p);
    if (all || method == "matrix-tree") oracle = tau_oracle(g);
    if (all || method == "blocks") by_blocks = tau_blocks(g);
  }
  std::vector<const BigInt*> values;
  for (const auto* v : {&formula, &oracle, &by_blocks}) {
    if (*v) values.push_back(&**v);
  }
  bool agree = true;
  for (const BigInt* v : values) agree = agree && *v == *values.front();

  if (as_json) {
    json j;
    j["params"] = to_string(p);
    if (formula) j["formula"] = count_to_json(factored, *formula);
    if (oracle) j["matrix_tree"] = to_decimal(*oracle);
    if (by_blocks) j["blocks"] = to_decimal(*by_blocks);
    if (all) j["agree"] = agree;
    os << j.dump(2) << '\n';
  } else {
    os << "params: " << to_string(p) << '\n';
    if (formula) os << "formula: " << factored.to_string() << " = " << to_decimal(*formula) << '\n';
    if (oracle) os << "matrix-tree: " << to_decimal(*oracle) << '\n';
    if (by_blocks) os << "blocks: " << to_decimal(*by_blocks) << '\n';
    if (all) os << "agreement: " << (agree ? "all three agree" : "DISAGREE") << '\n';
  }
  return agree ? kExitOk : kExitMismatch;
}

// ---- invariants -----------------------------------------------------------

void print_entropy(const FractalParams& p, int iters, std::ostream& os) {
  const EntropyEstimate offset = entropy_limit(p, iters, EntropyMethod::LimitOffsetStage);
  const EntropyEstimate same = entropy_limit(p, iters, EntropyMethod::LimitSameStage);
  os << "entropy " << to_string(p.family) << "," << p.n << "," << p.m << " iters=" << iters << '\n';
  os << "offset-stage: " << format_real(offset.value) << " (last delta " << format_real(offset.last_delta) << ")\n";
  os << "same-stage: " << format_real(same.value) << " (last delta " << format_real(same.last_delta) << ")\n";
  try {
    const double closed = entropy_closed(p);
    os << "closed-form: " << format_real(closed) << " (closed - offset = " << format_real(closed - offset.value)
       << ")\n";
  } catch (const DomainViolation& ex) {
    os << "closed-form: n/a (" << ex.what() << ")\n";
  }
}

int print_clustering(const FractalParams& p, bool as_json, std::ostream& os) {
  const ClusteringReport report = average_clustering(build(p));
  const Rational closed = clustering_closed(p);
  // Published figures that disagree with the direct scan, if any.
  std::vector<const KnownDiscrepancy*> published;
  const std::string suffix = "(" + detail::pstr(p.family, p.n, p.m, p.i) + ")";
  for (const auto& k : kKnownDiscrepancies) {
    const std::string_view id = k.id;
    if (id.starts_with("clustering.") && id.ends_with(suffix)) published.push_back(&k);
  }
  if (as_json) {
    json j = clustering_to_json(report, closed);
    json pub = json::array();
    for (const auto* k : published) {
      const Rational v = parse_rational(std::string(k->value_b));
      pub.push_back({{"id", std::string(k->id)},
                     {"value", to_fraction_string(v)},
                     {"difference", to_fraction_string(Rational(report.average - v))}});
    }
    if (!published.empty()) j["published"] = pub;
    os << j.dump(2) << '\n';
  } else {
    os << "clustering " << to_string(p) << '\n';
    for (const auto& [c, count] : report.classes) os << "  class " << to_fraction_string(c) << ": " << count << '\n';
    os << "direct (authoritative): " << to_fraction_string(report.average) << '\n';
    os << "closed-form: " << to_fraction_string(closed) << " -> "
       << (closed == report.average ? "match" : "mismatch, difference " + to_fraction_string(Rational(report.average - closed)))
       << '\n';
    for (const auto* k : published) {
      const Rational v = parse_rational(std::string(k->value_b));
      os << "published: " << to_fraction_string(v) << " -> "
         << (v == report.average ? "match" : "mismatch, difference " + to_fraction_string(Rational(report.average - v)))
         << '\n';
    }
  }
  return closed == report.average ? kExitOk : kExitMismatch;
}

void print_sizes(const FractalParams& p, std::ostream& os) {
  const std::size_t upto = static_cast<std::size_t>(p.i) + 1;
  const SizeSequences s = size_sequences(p, upto);
  os << "j u_j e_j binet\n";
  for (std::size_t j = 0; j <= upto; ++j) {
    os << j << ' ' << to_decimal(s.u[j]) << ' ' << to_decimal(s.e[j]) << ' ' << to_decimal(binet_vertex(p, j)) << '\n';
  }
  os << "G^(" << p.i << ") has u_" << upto << " = " << to_decimal(s.u[upto]) << " vertices, e_" << upto << " = "
     << to_decimal(s.e[upto]) << " edges\n";
}

int print_census(const FractalParams& p, std::ostream& os) {
  const Graph g = build(p);
  std::map<BlockShape, BigInt> structural;
  for (const auto& [shape, count] : block_shape_counts(blocks(g))) structural[shape] = static_cast<unsigned long>(count);
  const auto predicted = census_block_multiset(p);
  if (p.i >= 1) {
    const CopyCensus c = copy_census(p);
    os << "copy census of " << to_string(p) << ": central " << to_string(c.central.shape()) << '\n';
    for (std::size_t t = c.copies.size(); t-- > 0;) os << "  G^(" << t << ") x " << to_decimal(c.copies[t]) << '\n';
  }
  os << "blocks (structural):";
  for (const auto& [shape, count] : structural) os << ' ' << to_string(shape) << 'x' << to_decimal(count);
  os << "\nblocks (census):    ";
  for (const auto& [shape, count] : predicted) os << ' ' << to_string(shape) << 'x' << to_decimal(count);
  const bool ok = structural == predicted;
  os << "\n" << (ok ? "match" : "mismatch") << '\n';
  return ok ? kExitOk : kExitMismatch;
}

int print_degrees(const FractalParams& p, std::ostream& os) {
  const auto built = degree_histogram(build(p));
  const auto predicted = degree_census_predicted(p);
  os << "built:     " << histogram_string(built) << '\n';
  os << "predicted: " << histogram_string(predicted) << '\n';
  bool ok = built.size() == predicted.size();
  for (const auto& [d, k] : built) {
    auto it = predicted.find(d);
    ok = ok && it != predicted.end() && it->second == static_cast<unsigned long>(k);
  }
  os << (ok ? "match" : "mismatch") << '\n';
  return ok ? kExitOk : kExitMismatch;
}

// ---- surface --------------------------------------------------------------

std::pair<int, int> parse_range(const std::string& text, int lo, int hi, std::string_view what) {
  const auto dots = text.find("..");
  long a = 0;
  long b = 0;
  if (dots == std::string::npos) {
    a = b = parse_int(text, what);
  } else {
    a = parse_int(text.substr(0, dots), what);
    b = parse_int(text.substr(dots + 2), what);
  }
  if (a > b) throw UsageError(std::string(what) + " range is empty: " + text);
  if (a < lo || b > hi) {
    throw UsageError(std::string(what) + " range must lie in [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
  }
  return {static_cast<int>(a), static_cast<int>(b)};
}

int cmd_surface(Family family, std::pair<int, int> nr, std::pair<int, int> mr, int iters, std::ostream& os) {
  os << "family,n,m,sigma_offset,sigma_same,sigma_closed\n";
  for (int n = nr.first; n <= nr.second; ++n) {
    for (int m = mr.first; m <= mr.second; ++m) {
      const FractalParams p{family, n, m, 0};
      const double offset = entropy_limit(p, iters, EntropyMethod::LimitOffsetStage).value;
      const double same = entropy_limit(p, iters, EntropyMethod::LimitSameStage).value;
      std::string closed;
      try {
        closed = format_real(entropy_closed(p));
      } catch (const DomainViolation&) {
      }
      os << to_string(family) << ',' << n << ',' << m << ',' << format_real(offset) << ',' << format_real(same) << ','
         << closed << '\n';
    }
  }
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Self-similar cycle and wheel graphs: construction, spanning-tree counts, invariants"};
  app.require_subcommand(1);

  ParamInputs gen_in;
  std::string gen_format = "edgelist";
  std::string gen_out;
  auto* gen = app.add_subcommand("generate", "write G^(i) as an edge list, JSON or DOT");
  gen_in.bind(gen, "family n m i");
  gen->add_option("--format", gen_format, "edgelist, json or dot");
  gen->add_option("--out", gen_out, "output file (default stdout)");

  ParamInputs count_in;
  std::string count_method = "formula";
  bool count_json = false;
  auto* count = app.add_subcommand("count", "spanning-tree count of G^(i)");
  count_in.bind(count, "family n m [i]");
  count->add_option("--method", count_method, "formula, matrix-tree, blocks or all");
  count->add_flag("--json", count_json, "JSON output");

  ParamInputs inv_in;
  int inv_iters = 60;
  bool inv_json = false;
  auto* inv = app.add_subcommand("invariants", "entropy, clustering, sizes, census or degrees");
  inv_in.bind(inv, "which family n m [i]");
  inv->add_option("--iters", inv_iters, "entropy iterations (>= 2)");
  inv->add_flag("--json", inv_json, "JSON output (clustering)");

  std::vector<std::string> surf_pos;
  std::string surf_family;
  std::string surf_n;
  std::string surf_m;
  std::string surf_out;
  int surf_iters = 60;
  auto* surf = app.add_subcommand("surface", "entropy surface over n and m ranges as CSV");
  surf->add_option("args", surf_pos, "family n-range m-range (ranges as a..b)");
  surf->add_option("--family", surf_family, "cycle or wheel");
  surf->add_option("--n-range", surf_n, "a..b within [3,64]");
  surf->add_option("--m-range", surf_m, "a..b within [2,64]");
  surf->add_option("--iters", surf_iters, "entropy iterations (>= 2)");
  surf->add_option("--out", surf_out, "output file (default stdout)");

  std::string verify_json_path;
  std::string verify_format = "table";
  auto* ver = app.add_subcommand("verify", "run every cross-check and report discrepancies");
  ver->add_option("--json", verify_json_path, "also write the JSON report to this file");
  ver->add_option("--format", verify_format, "table or json (stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) return cmd_generate(resolve_params(gen_in, 0, true), gen_format, gen_out);
    if (*count) return cmd_count(resolve_params(count_in, 0, false), count_method, count_json, std::cout);
    if (*inv) {
      if (inv_in.positional.empty()) throw UsageError("missing report name");
      const std::string which = inv_in.positional.front();
      if (inv_iters < 2) throw UsageError("--iters must be >= 2");
      const FractalParams p = resolve_params(inv_in, 1, false);
      if (which == "entropy") {
        print_entropy(p, inv_iters, std::cout);
        return kExitOk;
      }
      if (which == "clustering") return print_clustering(p, inv_json, std::cout);
      if (which == "sizes") {
        print_sizes(p, std::cout);
        return kExitOk;
      }
      if (which == "census") return print_census(p, std::cout);
      if (which == "degrees") return print_degrees(p, std::cout);
      throw UsageError("unknown report '" + which + "' (entropy, clustering, sizes, census, degrees)");
    }
    if (*surf) {
      std::vector<std::optional<std::string>> slot(3);
      if (surf_pos.size() > 3) throw UsageError("too many positional arguments");
      for (std::size_t k = 0; k < surf_pos.size(); ++k) slot[k] = surf_pos[k];
      if (!surf_family.empty()) slot[0] = surf_family;
      if (!surf_n.empty()) slot[1] = surf_n;
      if (!surf_m.empty()) slot[2] = surf_m;
      if (!slot[0] || !slot[1] || !slot[2]) throw UsageError("surface needs family, n range and m range");
      if (surf_iters < 2) throw UsageError("--iters must be >= 2");
      const Family family = parse_family(*slot[0]);
      const auto nr = parse_range(*slot[1], 3, 64, "n");
      const auto mr = parse_range(*slot[2], 2, 64, "m");
      Output out(surf_out);
      return cmd_surface(family, nr, mr, surf_iters, out.stream());
    }
    if (*ver) {
      if (verify_format != "table" && verify_format != "json") throw UsageError("unknown format '" + verify_format + "'");
      const DiscrepancyReport report = verify_suite();
      if (verify_format == "json") {
        std::cout << report.to_json().dump(2) << '\n';
      } else {
        report.write_table(std::cout);
      }
      if (!verify_json_path.empty()) {
        Output out(verify_json_path);
        out.stream() << report.to_json().dump(2) << '\n';
      }
      return report.ok() ? kExitOk : kExitMismatch;
    }
  } catch (const UsageError& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const ResourceCap& ex) {
    std::cerr << "resource cap: " << ex.what() << '\n';
    return kExitCap;
  } catch (const DisconnectedGraph& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
