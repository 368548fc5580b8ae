#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "honlb/bottleneck.hpp"
#include "honlb/embed.hpp"
#include "honlb/exact_distance.hpp"
#include "honlb/filtration.hpp"
#include "honlb/generators.hpp"
#include "honlb/ingest.hpp"
#include "honlb/matrix.hpp"
#include "honlb/network_io.hpp"
#include "honlb/persistence.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace honlb::cli {

namespace {

// What a run read, wrote and with which parameters; written on request.
struct RunManifest {
  std::string subcommand;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  json params = json::object();
};

void write_output(const std::string& path, std::ostream& out,
                  RunManifest& manifest,
                  const std::function<void(std::ostream&)>& emit) {
  if (path.empty() || path == "-") {
    emit(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  emit(file);
  if (!file) throw std::runtime_error("write to " + path + " failed");
  manifest.outputs.push_back(path);
}

void require_file(const std::string& path, RunManifest& manifest) {
  if (!fs::is_regular_file(path)) throw UsageError("no such file: " + path);
  manifest.inputs.push_back(path);
}

std::ifstream open_input(const std::string& path, RunManifest& manifest) {
  require_file(path, manifest);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  return in;
}

HighOrderNetwork load_network(const std::string& path, RunManifest& manifest) {
  require_file(path, manifest);
  return read_network(path);
}

double parse_p(const std::string& text) {
  if (text == "inf" || text == "infinity") return kInfNorm;
  try {
    std::size_t used = 0;
    const double p = std::stod(text, &used);
    if (used == text.size() && p >= 1.0) return p;
  } catch (const std::exception&) {
  }
  throw UsageError("--p must be a number >= 1 or 'inf'");
}

json p_to_json(double p) {
  return std::isinf(p) ? json("inf") : json(p);
}

// ---------------------------------------------------------------------------

struct GenOptions {
  std::string model;
  std::size_t n = 30;
  std::uint64_t seed = 0;
  double sigma = 0.5;
  std::string domain = "square";
  std::size_t feature_dim = 30;
  double tau = 0.2;
  std::string out;
};

void cmd_gen(const GenOptions& o, std::ostream& out, RunManifest& manifest) {
  GenConfig cfg;
  try {
    cfg.model = parse_model(o.model);
    cfg.n = o.n;
    cfg.seed = o.seed;
    cfg.sigma = o.sigma;
    cfg.domain = parse_domain(o.domain);
    cfg.feature_dim = o.feature_dim;
    cfg.tau = o.tau;
    cfg.check();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  manifest.params = {{"model", std::string(to_string(cfg.model))},
                     {"n", cfg.n},
                     {"seed", cfg.seed},
                     {"sigma", cfg.sigma},
                     {"domain", std::string(to_string(cfg.domain))},
                     {"feature_dim", cfg.feature_dim},
                     {"tau", cfg.tau}};
  const auto net = lift_pairwise(generate(cfg));
  write_output(o.out, out, manifest,
               [&](std::ostream& os) { os << network_to_json(net); });
}

struct DiagramOptions {
  std::string network;
  int max_dim = -1;
  double prune = 0.0;
  std::string out;
};

void cmd_diagram(const DiagramOptions& o, std::ostream& out,
                 RunManifest& manifest) {
  const auto net = load_network(o.network, manifest);
  const int max_dim = o.max_dim < 0 ? net.order() : o.max_dim;
  manifest.params = {{"max_dim", max_dim}, {"prune", o.prune}};
  auto diagrams = diagrams_of(net, max_dim);
  for (auto& d : diagrams) d = prune(d, o.prune);
  write_output(o.out, out, manifest,
               [&](std::ostream& os) { write_diagrams_csv(os, diagrams); });
}

struct FiltrationOptions {
  std::string network;
  int max_dim = -1;
  std::string out;
};

void cmd_filtration(const FiltrationOptions& o, std::ostream& out,
                    RunManifest& manifest) {
  auto net = load_network(o.network, manifest);
  if (net.mode() == Mode::Proximity) net = dual(net);
  const int max_dim = o.max_dim < 0 ? net.order() : o.max_dim;
  manifest.params = {{"max_dim", max_dim}};
  const auto f = build_filtration(net, max_dim);
  write_output(o.out, out, manifest, [&](std::ostream& os) {
    write_filtration_csv(os, f, net.nodes());
  });
}

struct CompareOptions {
  std::string a, b;
  std::vector<int> dims;
  std::vector<int> bound_dims;
  std::string p = "inf";
  std::string exact = "auto";
  double prune = 0.0;
  std::string out;
};

void cmd_compare(const CompareOptions& o, std::ostream& out,
                 RunManifest& manifest) {
  const auto nx = load_network(o.a, manifest);
  const auto ny = load_network(o.b, manifest);
  if (nx.mode() != ny.mode())
    throw UsageError("networks have different modes");
  const double p = parse_p(o.p);
  const int order = std::min(nx.order(), ny.order());

  std::vector<int> dims = o.dims;
  if (dims.empty())
    for (int k = 0; k <= order; ++k) dims.push_back(k);
  for (int k : dims)
    if (k < 0 || k > order)
      throw UsageError("--dims entries must lie in [0, " +
                       std::to_string(order) + "]");
  std::vector<int> bound_dims =
      o.bound_dims.empty() ? default_bound_dims(order) : o.bound_dims;

  bool run_exact = false;
  const bool tiny = nx.size() * ny.size() <= kEnumerationCap;
  if (o.exact == "on") {
    if (!tiny)
      throw UsageError("exact distances need |X|*|Y| <= " +
                       std::to_string(kEnumerationCap));
    run_exact = true;
  } else if (o.exact == "auto") {
    run_exact = tiny;
  } else if (o.exact != "off") {
    throw UsageError("--exact must be auto, on or off");
  }

  manifest.params = {{"dims", dims},         {"bound_dims", bound_dims},
                     {"p", p_to_json(p)},    {"exact", run_exact},
                     {"prune", o.prune}};

  const int top = *std::max_element(dims.begin(), dims.end());
  const auto dx = diagrams_of(nx, top);
  const auto dy = diagrams_of(ny, top);
  json report;
  report["x"] = o.a;
  report["y"] = o.b;
  report["order"] = order;
  report["p"] = p_to_json(p);
  json bn = json::object();
  for (int k : dims)
    bn[std::to_string(k)] =
        bottleneck_distance(prune(dx[k], o.prune), prune(dy[k], o.prune));
  report["bottleneck"] = bn;

  BoundVector lb;
  try {
    lb = pnorm_lower_bound(nx, ny, p, bound_dims);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  report["lower_bound"] = {{"dims", lb.dims},
                           {"entries", lb.entries},
                           {"combined", lb.combined}};
  report["upper_bound"] = upper_bound_distance(nx, ny, p);
  if (run_exact) {
    json k_order = json::array();
    for (int k = 0; k <= order; ++k)
      k_order.push_back(exact_k_order_distance(nx, ny, k).first);
    report["exact"] = {{"pnorm", exact_pnorm_distance(nx, ny, p)},
                       {"k_order", k_order}};
  } else {
    report["exact"] = nullptr;
  }
  write_output(o.out, out, manifest,
               [&](std::ostream& os) { os << report.dump(2) << '\n'; });
}

struct MatrixOptions {
  std::string corpus;
  int dim = 0;
  int workers = 1;
  double prune = 0.0;
  std::string out;
};

void cmd_matrix(const MatrixOptions& o, std::ostream& out, std::ostream& err,
                RunManifest& manifest) {
  if (!fs::is_directory(o.corpus))
    throw UsageError("no such directory: " + o.corpus);
  if (o.dim < 0) throw UsageError("--dim must be >= 0");
  if (o.workers < 0) throw UsageError("--workers must be >= 0");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(o.corpus))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) {
              return a.stem().string() < b.stem().string();
            });
  if (files.empty()) throw UsageError("no .json networks in " + o.corpus);
  manifest.inputs.push_back(o.corpus);
  manifest.params = {{"dim", o.dim}, {"workers", o.workers},
                     {"prune", o.prune}, {"networks", files.size()}};

  std::vector<std::string> labels;
  std::vector<PersistenceDiagram> diagrams;
  for (const auto& f : files) {
    const auto net = read_network(f);
    if (o.dim > net.order())
      throw UsageError(f.string() + ": --dim exceeds the network order");
    labels.push_back(f.stem().string());
    diagrams.push_back(prune(diagrams_of(net, o.dim)[o.dim], o.prune));
  }
  const auto start = std::chrono::steady_clock::now();
  const auto m = o.workers == 1 ? bottleneck_matrix_serial(labels, diagrams)
                                : bottleneck_matrix(labels, diagrams, o.workers);
  const std::chrono::duration<double> took =
      std::chrono::steady_clock::now() - start;
  err << "matrix: " << labels.size() << " networks, dim " << o.dim << ", "
      << took.count() << " s\n";
  write_output(o.out, out, manifest,
               [&](std::ostream& os) { write_matrix_csv(os, m); });
}

std::map<std::string, std::string> read_class_file(const std::string& path,
                                                   RunManifest& manifest) {
  auto in = open_input(path, manifest);
  std::map<std::string, std::string> classes;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw UsageError(path + ": expected 'label,class' rows");
    if (header) {
      header = false;
      if (line == "label,class") continue;
    }
    classes[line.substr(0, comma)] = line.substr(comma + 1);
  }
  return classes;
}

struct EmbedOptions {
  std::string matrix;
  std::string classes;
  std::string svg;
  std::string out;
};

void cmd_embed(const EmbedOptions& o, std::ostream& out,
               RunManifest& manifest) {
  auto in = open_input(o.matrix, manifest);
  const auto m = read_matrix_csv(in);
  auto e = mds_embed(m);
  if (!o.classes.empty()) {
    const auto table = read_class_file(o.classes, manifest);
    for (const auto& l : e.labels) {
      auto it = table.find(l);
      if (it == table.end()) throw UsageError("no class given for " + l);
      e.classes.push_back(it->second);
    }
  } else {
    for (const auto& l : e.labels) e.classes.push_back(class_from_label(l));
  }
  write_output(o.out, out, manifest,
               [&](std::ostream& os) { write_embedding_csv(os, e); });
  if (!o.svg.empty())
    write_output(o.svg, out, manifest,
                 [&](std::ostream& os) { write_embedding_svg(os, e); });
}

struct ClassifyOptions {
  std::string embedding;
  std::string out;
};

void cmd_classify(const ClassifyOptions& o, std::ostream& out,
                  RunManifest& manifest) {
  auto in = open_input(o.embedding, manifest);
  auto e = read_embedding_csv(in);
  if (e.classes.empty())
    for (const auto& l : e.labels) e.classes.push_back(class_from_label(l));
  std::vector<std::string> distinct(e.classes);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  std::ostringstream report;
  report << "class_a,class_b,errors\n";
  std::size_t total = 0;
  for (std::size_t a = 0; a < distinct.size(); ++a)
    for (std::size_t b = a + 1; b < distinct.size(); ++b) {
      Embedding2D pair;
      for (std::size_t i = 0; i < e.labels.size(); ++i)
        if (e.classes[i] == distinct[a] || e.classes[i] == distinct[b]) {
          pair.coords.push_back(e.coords[i]);
          pair.classes.push_back(e.classes[i]);
        }
      const auto errors = linear_boundary_errors(pair);
      total += errors;
      report << distinct[a] << ',' << distinct[b] << ',' << errors << '\n';
    }
  report << "total,," << total << '\n';
  manifest.params = {{"classes", distinct}, {"errors", total}};
  write_output(o.out, out, manifest,
               [&](std::ostream& os) { os << report.str(); });
}

struct IngestOptions {
  std::string records;
  std::string format = "auto";
  double epsilon = 0.0;
  std::string out;
};

void cmd_ingest(const IngestOptions& o, std::ostream& out,
                RunManifest& manifest) {
  auto in = open_input(o.records, manifest);
  std::string format = o.format;
  if (format == "auto")
    format = fs::path(o.records).extension() == ".jsonl" ? "jsonl" : "csv";
  if (format != "csv" && format != "jsonl")
    throw UsageError("--format must be auto, csv or jsonl");
  if (!(o.epsilon >= 0.0)) throw UsageError("--epsilon must be >= 0");
  manifest.params = {{"format", format}, {"epsilon", o.epsilon}};
  const auto records =
      format == "csv" ? read_records_csv(in) : read_records_jsonl(in);
  const auto net = build_coauthorship(records, o.epsilon);
  write_output(o.out, out, manifest,
               [&](std::ostream& os) { os << network_to_json(net); });
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Persistent homology lower bounds for high order network "
               "distances"};
  app.require_subcommand(1);
  std::string manifest_path;
  app.add_option("--manifest", manifest_path,
                 "Write a JSON record of inputs, outputs and parameters");

  GenOptions gen;
  auto* g = app.add_subcommand("gen", "Generate a synthetic network");
  g->add_option("--model", gen.model, "er, gauss or corr")->required();
  g->add_option("--n", gen.n, "Node count")->capture_default_str();
  g->add_option("--seed", gen.seed, "Random seed")->required();
  g->add_option("--sigma", gen.sigma, "Gaussian kernel width")
      ->capture_default_str();
  g->add_option("--domain", gen.domain,
                "Point domain of the gauss model: square or disk")
      ->capture_default_str();
  g->add_option("--feature-dim", gen.feature_dim,
                "Feature dimension of the correlation model")
      ->capture_default_str();
  g->add_option("--tau", gen.tau, "Drop edges with proximity <= tau")
      ->capture_default_str();
  g->add_option("--out", gen.out, "Output network JSON (default stdout)");

  DiagramOptions dia;
  auto* d = app.add_subcommand("diagram", "Persistence diagrams of a network");
  d->add_option("network", dia.network, "Network JSON")->required();
  d->add_option("--max-dim", dia.max_dim,
                "Highest homology dimension (default: network order)");
  d->add_option("--prune", dia.prune,
                "Drop points with persistence <= this value")
      ->capture_default_str();
  d->add_option("--out", dia.out, "Output CSV (default stdout)");

  FiltrationOptions fil;
  auto* f = app.add_subcommand("filtration", "Filtration of a network as CSV");
  f->add_option("network", fil.network, "Network JSON")->required();
  f->add_option("--max-dim", fil.max_dim,
                "Highest simplex dimension (default: network order)");
  f->add_option("--out", fil.out, "Output CSV (default stdout)");

  CompareOptions cmp;
  auto* c = app.add_subcommand("compare", "Bounds and distances for two networks");
  c->add_option("a", cmp.a, "First network JSON")->required();
  c->add_option("b", cmp.b, "Second network JSON")->required();
  c->add_option("--dims", cmp.dims,
                "Diagram dimensions to report (default: 0..order)")
      ->delimiter(',');
  c->add_option("--bound-dims", cmp.bound_dims,
                "Diagram dimension per order 1..K in the p-norm bound "
                "(default: order - 1 each)")
      ->delimiter(',');
  c->add_option("--p", cmp.p, "Norm: a number >= 1 or inf")
      ->capture_default_str();
  c->add_option("--exact", cmp.exact,
                "Exact distances: auto (when |X|*|Y| <= 20), on or off")
      ->capture_default_str();
  c->add_option("--prune", cmp.prune,
                "Prune threshold for the reported bottleneck distances")
      ->capture_default_str();
  c->add_option("--out", cmp.out, "Output JSON report (default stdout)");

  MatrixOptions mat;
  auto* m = app.add_subcommand("matrix",
                               "Bottleneck distance matrix of a corpus");
  m->add_option("corpus", mat.corpus, "Directory of network JSON files")
      ->required();
  m->add_option("--dim", mat.dim, "Diagram dimension")->capture_default_str();
  m->add_option("--workers", mat.workers,
                "Worker threads; 1 runs the serial path, 0 the OpenMP default")
      ->capture_default_str();
  m->add_option("--prune", mat.prune, "Prune threshold for diagrams")
      ->capture_default_str();
  m->add_option("--out", mat.out, "Output matrix CSV (default stdout)");

  EmbedOptions emb;
  auto* e = app.add_subcommand("embed", "Classical MDS of a distance matrix");
  e->add_option("matrix", emb.matrix, "Matrix CSV")->required();
  e->add_option("--classes", emb.classes,
                "CSV of label,class (default: label text before '_')");
  e->add_option("--svg", emb.svg, "Also write a scatter plot");
  e->add_option("--out", emb.out, "Output embedding CSV (default stdout)");

  ClassifyOptions cls;
  auto* k = app.add_subcommand("classify",
                               "Linear-boundary errors of an embedding");
  k->add_option("embedding", cls.embedding, "Embedding CSV")->required();
  k->add_option("--out", cls.out, "Output CSV (default stdout)");

  IngestOptions ing;
  auto* i = app.add_subcommand("ingest",
                               "Coauthorship network from publication records");
  i->add_option("records", ing.records, "CSV or JSON-lines records")
      ->required();
  i->add_option("--format", ing.format, "auto, csv or jsonl")
      ->capture_default_str();
  i->add_option("--epsilon", ing.epsilon,
                "Tie-breaking epsilon (0 keeps ties)")
      ->capture_default_str();
  i->add_option("--out", ing.out, "Output network JSON (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? 0 : 2;
  }

  RunManifest manifest;
  try {
    if (*g) {
      manifest.subcommand = "gen";
      cmd_gen(gen, out, manifest);
    } else if (*d) {
      manifest.subcommand = "diagram";
      cmd_diagram(dia, out, manifest);
    } else if (*f) {
      manifest.subcommand = "filtration";
      cmd_filtration(fil, out, manifest);
    } else if (*c) {
      manifest.subcommand = "compare";
      cmd_compare(cmp, out, manifest);
    } else if (*m) {
      manifest.subcommand = "matrix";
      cmd_matrix(mat, out, err, manifest);
    } else if (*e) {
      manifest.subcommand = "embed";
      cmd_embed(emb, out, manifest);
    } else if (*k) {
      manifest.subcommand = "classify";
      cmd_classify(cls, out, manifest);
    } else if (*i) {
      manifest.subcommand = "ingest";
      cmd_ingest(ing, out, manifest);
    }
    if (!manifest_path.empty()) {
      std::ofstream mf(manifest_path);
      if (!mf) throw UsageError("cannot write " + manifest_path);
      mf << json{{"subcommand", manifest.subcommand},
                 {"inputs", manifest.inputs},
                 {"outputs", manifest.outputs},
                 {"params", manifest.params}}
                .dump(2)
         << '\n';
    }
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << '\n';
    return 2;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace honlb::cli
