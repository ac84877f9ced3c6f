#include "turanlab/cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "turanlab/canonical.hpp"
#include "turanlab/constructions.hpp"
#include "turanlab/error.hpp"
#include "turanlab/hypergraph_io.hpp"
#include "turanlab/orientation.hpp"
#include "turanlab/plane.hpp"
#include "turanlab/search.hpp"
#include "turanlab/text_util.hpp"
#include "turanlab/tournament.hpp"
#include "turanlab/walks.hpp"

namespace turanlab::cli {

namespace {

const std::vector<std::string> kSubcommands = {"gen",   "orient",    "find-bottle", "check-free",
                                               "turan", "clean",     "stability",   "tournaments",
                                               "embed", "tri-hypergraph", "lattice", "verify"};

template <typename Range>
std::string join(const Range& items, const std::string& sep) {
  std::ostringstream out;
  bool first = true;
  for (const auto& x : items) {
    if (!first) out << sep;
    out << x;
    first = false;
  }
  return out.str();
}

std::string triple_text(const Triple& t) {
  return std::to_string(t[0]) + "-" + std::to_string(t[1]) + "-" + std::to_string(t[2]);
}

/// Every option a subcommand may bind; each subcommand registers its own subset.
struct Params {
  std::string kind;
  std::vector<std::string> args;
  std::string format = "human";
  std::size_t jobs = 1;
  std::optional<std::uint64_t> seed;

  std::size_t n = 0;
  std::size_t length = 0;
  std::size_t t = 0;
  std::size_t l1 = 0;
  std::size_t l2 = 0;
  std::size_t max_cycle = 0;
  std::optional<std::size_t> max_size;
  std::optional<std::size_t> threshold;
  std::optional<std::string> delta;
  std::string probability = "1/2";
  std::string family;
  std::size_t steps = 1000;
  std::size_t memo_depth = 3;
  std::string shape = "equilateral";
  std::string eps = "0";
  std::int64_t radius = 0;
  std::size_t prime = 0;
  std::string circulant_steps;
  std::string walk_kind = "cm";
  std::string out_path;
  std::string out_dir;
  bool count_only = false;
  bool check = false;
  bool colors = false;
};

class Run {
 public:
  Run(std::ostream& out, std::ostream& err, const Params& p, RunManifest manifest)
      : out(out), err(err), params(p), manifest_(std::move(manifest)) {}

  bool records() const { return params.format == "records"; }

  /// Digests the inputs and emits the manifest; call before any output.
  void begin(const std::vector<std::string>& inputs = {}) {
    for (const auto& path : inputs) manifest_.input_digests[path] = sha256_file(path);
    if (records()) {
      out << manifest_.to_record() << '\n';
    } else {
      err << "# " << manifest_.to_record() << '\n';
    }
  }

  void record(const std::string& type, const std::vector<std::pair<std::string, std::string>>& fields) {
    out << "record=" << type;
    for (const auto& [k, v] : fields) out << ' ' << k << '=' << v;
    out << '\n';
  }

  /// Human-mode diagnostics that must not disturb the result stream.
  void note(const std::string& text) { err << "# " << text << '\n'; }

  void emit_hypergraph(const Hypergraph3& h) {
    if (!params.out_path.empty()) {
      std::ofstream file(params.out_path);
      if (!file) throw InvalidArgument("cannot write '" + params.out_path + "'");
      write_hypergraph(file, h);
      if (records()) {
        record("written", {{"path", params.out_path}, {"n", std::to_string(h.vertex_count())},
                           {"edges", std::to_string(h.edge_count())}});
      } else {
        out << "wrote " << params.out_path << " n=" << h.vertex_count() << " edges=" << h.edge_count() << '\n';
      }
      return;
    }
    if (!records()) {
      write_hypergraph(out, h);
      return;
    }
    record("hypergraph", {{"n", std::to_string(h.vertex_count())}, {"edges", std::to_string(h.edge_count())}});
    for (const auto& e : h.edges()) record("edge", {{"v", triple_text(e)}});
  }

  void emit_tournament(const Tournament& t) {
    if (!records()) {
      write_tournament(out, t);
      return;
    }
    record("tournament", {{"n", std::to_string(t.vertex_count())}});
    for (Vertex u = 0; u < t.vertex_count(); ++u) {
      for (Vertex v = u + 1; v < t.vertex_count(); ++v) {
        record("arc", {{"from", std::to_string(t.beats(u, v) ? u : v)}, {"to", std::to_string(t.beats(u, v) ? v : u)}});
      }
    }
  }

  std::ostream& out;
  std::ostream& err;
  const Params& params;

 private:
  RunManifest manifest_;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  return in;
}

Hypergraph3 load_hypergraph(const std::string& path) {
  auto in = open_input(path);
  return read_hypergraph(in);
}

Tournament load_tournament(const std::string& path) {
  auto in = open_input(path);
  return read_tournament(in);
}

std::vector<PlanePoint> load_points(const std::string& path) {
  auto in = open_input(path);
  return read_points(in);
}

std::uint64_t max_edges_from_env() {
  const char* raw = std::getenv("TURANLAB_MAX_EDGES");
  if (!raw || !*raw) return kDefaultMaxEdges;
  try {
    std::size_t used = 0;
    const auto value = std::stoull(raw, &used);
    if (used != std::string(raw).size()) throw std::invalid_argument("trailing");
    return value;
  } catch (const std::exception&) {
    throw InvalidArgument(std::string("TURANLAB_MAX_EDGES is not an integer: '") + raw + "'");
  }
}

void require_edges_within_cap(std::uint64_t edges) {
  const auto cap = max_edges_from_env();
  if (edges > cap) {
    throw ResourceLimit("materialising " + std::to_string(edges) + " edges exceeds the cap of " +
                        std::to_string(cap) + " (TURANLAB_MAX_EDGES)");
  }
}

std::uint64_t require_seed(const Params& p, const std::string& what) {
  if (!p.seed) throw InvalidArgument(what + " is randomized and requires --seed");
  return *p.seed;
}

const std::string& single_input(const Params& p, const std::string& what) {
  if (p.args.size() != 1) throw InvalidArgument(what + " expects exactly one input file");
  return p.args.front();
}

std::vector<Vertex> parse_sequence(const std::vector<std::string>& fields, std::size_t from) {
  std::vector<Vertex> out;
  for (std::size_t i = from; i < fields.size(); ++i) {
    out.push_back(parse_vertex(fields[i], std::numeric_limits<Vertex>::max(), "sequence"));
  }
  return out;
}

std::string sequence_text(const std::vector<Vertex>& seq, const std::string& sep) { return join(seq, sep); }

ForbiddenFamily family_from(const Params& p) {
  if (p.family.empty()) throw InvalidArgument("--family is required");
  return ForbiddenFamily::by_name(p.family, p.length);
}

Hypergraph3 random_hypergraph(std::size_t n, const BigRational& p, std::uint64_t seed) {
  if (p < 0 || p > 1) throw InvalidArgument("--p must lie in [0, 1]");
  require_edges_within_cap(static_cast<std::uint64_t>(n) * (n > 0 ? n - 1 : 0) * (n > 1 ? n - 2 : 0) / 6);
  std::mt19937_64 rng(seed);
  // Compare 53 random bits against p * 2^53, exactly.
  const boost::multiprecision::cpp_int scale = boost::multiprecision::cpp_int(1) << 53;
  const BigRational scaled = p * BigRational(scale);
  const auto cut = static_cast<std::uint64_t>(numerator(scaled) / denominator(scaled));
  const bool always = p == 1;
  std::vector<Triple> edges;
  const auto nv = static_cast<Vertex>(n);
  for (Vertex a = 0; a < nv; ++a) {
    for (Vertex b = a + 1; b < nv; ++b) {
      for (Vertex c = b + 1; c < nv; ++c) {
        if (always || (rng() >> 11) < cut) edges.emplace_back(a, b, c);
      }
    }
  }
  return Hypergraph3(n, std::move(edges));
}

// ------------------------------------------------------------ subcommands

int run_gen(Run& run) {
  const auto& p = run.params;
  if (p.kind == "en") {
    if (p.n == 0) throw InvalidArgument("gen en requires --n >= 1");
    run.begin();
    if (p.count_only) {
      const auto count = e_n_edge_count(p.n);
      if (run.records()) {
        run.record("count", {{"n", std::to_string(p.n)}, {"edges", std::to_string(count)}});
      } else {
        run.out << count << '\n';
      }
      return kExitOk;
    }
    run.emit_hypergraph(iterated_blowup(p.n, max_edges_from_env()));
    return kExitOk;
  }
  if (p.kind == "cm" || p.kind == "cycle") {
    if (p.length < 4) throw InvalidArgument("gen " + p.kind + " requires --l >= 4");
    run.begin();
    run.emit_hypergraph(p.kind == "cm" ? cycle_minus_one(p.length) : tight_cycle(p.length));
    return kExitOk;
  }
  if (p.kind == "k4m") {
    run.begin();
    run.emit_hypergraph(k4_minus());
    return kExitOk;
  }
  if (p.kind == "complete") {
    require_edges_within_cap(static_cast<std::uint64_t>(p.n) * (p.n > 0 ? p.n - 1 : 0) * (p.n > 1 ? p.n - 2 : 0) / 6);
    run.begin();
    run.emit_hypergraph(complete_hypergraph(p.n));
    return kExitOk;
  }
  if (p.kind == "blowup") {
    const auto& path = single_input(p, "gen blowup");
    if (p.t == 0) throw InvalidArgument("gen blowup requires --t >= 1");
    const auto h = load_hypergraph(path);
    require_edges_within_cap(static_cast<std::uint64_t>(h.edge_count()) * p.t * p.t * p.t);
    run.begin({path});
    run.emit_hypergraph(blow_up(h, p.t));
    return kExitOk;
  }
  if (p.kind == "random") {
    const auto seed = require_seed(p, "gen random");
    const auto prob = parse_rational(p.probability);
    run.begin();
    run.emit_hypergraph(random_hypergraph(p.n, prob, seed));
    return kExitOk;
  }
  if (p.kind == "improve") {
    const auto& path = single_input(p, "gen improve");
    const auto seed = require_seed(p, "gen improve");
    const auto family = family_from(p);
    const auto h = load_hypergraph(path);
    run.begin({path});
    const auto better = local_search(h, family, p.steps, seed);
    if (run.records()) {
      run.record("improve", {{"before", std::to_string(h.edge_count())}, {"after", std::to_string(better.edge_count())}});
    } else {
      run.note("edges " + std::to_string(h.edge_count()) + " -> " + std::to_string(better.edge_count()));
    }
    run.emit_hypergraph(better);
    return kExitOk;
  }
  throw InvalidArgument("unknown generator '" + p.kind + "' (en, cm, cycle, k4m, complete, blowup, random, improve)");
}

void emit_bottle(Run& run, const BottleCertificate& cert) {
  if (run.records()) {
    run.record("bottle", {{"size", std::to_string(cert.size())}, {"sequence", sequence_text(cert.sequence, ",")}});
  } else {
    run.out << "BOTTLE\n" << sequence_text(cert.sequence, " ") << '\n';
  }
}

int run_orient(Run& run) {
  const auto& path = single_input(run.params, "orient");
  const auto h = load_hypergraph(path);
  run.begin({path});
  const auto outcome = orient(h);
  if (const auto* cert = std::get_if<BottleCertificate>(&outcome)) {
    emit_bottle(run, *cert);
    return kExitOk;
  }
  if (run.records()) {
    run.record("orientation", {{"result", "orientable"}});
  } else {
    run.out << "ORIENTABLE\n";
  }
  run.emit_tournament(std::get<Tournament>(outcome));
  return kExitOk;
}

int run_find_bottle(Run& run) {
  const auto& path = single_input(run.params, "find-bottle");
  const auto h = load_hypergraph(path);
  run.begin({path});
  const auto cert = find_bottle(h, run.params.max_size);
  if (cert) {
    emit_bottle(run, *cert);
  } else if (run.records()) {
    run.record("bottle", {{"size", "0"}, {"sequence", "none"}});
  } else {
    run.out << "NONE\n";
  }
  return kExitOk;
}

int run_check_free(Run& run) {
  const auto& p = run.params;
  const auto& path = single_input(p, "check-free");
  if (p.max_cycle < 4) throw InvalidArgument("check-free requires --max-cycle >= 4");
  const auto h = load_hypergraph(path);
  run.begin({path});
  const auto result = is_fcm_free(h, p.max_cycle);
  if (run.records()) {
    if (result.free) {
      run.record("free", {{"free", "true"}, {"max_cycle", std::to_string(p.max_cycle)}});
    } else {
      run.record("free", {{"free", "false"},
                          {"length", std::to_string(result.witness->length())},
                          {"vertices", sequence_text(result.witness->vertices, ",")}});
    }
  } else if (result.free) {
    run.out << "FREE\n";
  } else {
    run.out << "\xE2\x84\x93=" << result.witness->length() << ": " << sequence_text(result.witness->vertices, " ")
            << '\n';
  }
  return kExitOk;
}

int run_turan(Run& run) {
  const auto& p = run.params;
  const auto family = family_from(p);
  TuranOptions options;
  options.jobs = p.jobs;
  options.memo_depth = p.memo_depth;
  run.begin();
  const auto result = exact_turan(p.n, family, options);
  if (run.records()) {
    run.record("turan", {{"n", std::to_string(p.n)},
                         {"family", family.name()},
                         {"max_edges", std::to_string(result.max_edges)},
                         {"examples", std::to_string(result.extremal_examples.size())}});
  } else {
    run.out << "max_edges " << result.max_edges << '\n' << "examples " << result.extremal_examples.size() << '\n';
  }
  for (std::size_t i = 0; i < result.extremal_examples.size(); ++i) {
    const auto& h = result.extremal_examples[i];
    const auto form = to_hex(result.extremal_forms[i]);
    if (run.records()) {
      std::vector<std::string> edges;
      for (const auto& e : h.edges()) edges.push_back(triple_text(e));
      run.record("example", {{"index", std::to_string(i)}, {"canonical", form}, {"edges", join(edges, ",")}});
    } else {
      run.out << "example " << i << ' ' << form << '\n';
    }
    if (!p.out_dir.empty()) {
      std::filesystem::create_directories(p.out_dir);
      const auto file = std::filesystem::path(p.out_dir) / ("example_" + std::to_string(i) + ".txt");
      std::ofstream f(file);
      if (!f) throw InvalidArgument("cannot write '" + file.string() + "'");
      write_hypergraph(f, h);
    }
  }
  // Search effort depends on scheduling, so it stays off the result stream.
  run.note("nodes_explored " + std::to_string(result.nodes_explored));
  return kExitOk;
}

int run_clean(Run& run) {
  const auto& p = run.params;
  const auto& path = single_input(p, "clean");
  const auto h = load_hypergraph(path);
  std::size_t threshold = 0;
  if (p.threshold && p.delta) throw InvalidArgument("clean takes --threshold or --delta, not both");
  if (p.threshold) {
    threshold = *p.threshold;
  } else if (p.delta) {
    const auto delta = parse_rational(*p.delta);
    if (delta < 0) throw InvalidArgument("--delta must be non-negative");
    const BigRational scaled = delta * BigRational(h.vertex_count());
    auto ceil = numerator(scaled) / denominator(scaled);
    if (ceil * denominator(scaled) < numerator(scaled)) ++ceil;
    threshold = static_cast<std::size_t>(ceil);
  } else {
    throw InvalidArgument("clean requires --threshold or --delta");
  }
  run.begin({path});
  const auto trace = codegree_clean_traced(h, threshold);
  const auto removed = h.edge_count() - trace.result.edge_count();
  if (run.records()) {
    run.record("clean", {{"threshold", std::to_string(threshold)},
                         {"removed_edges", std::to_string(removed)},
                         {"cleaned_pairs", std::to_string(trace.steps.size())}});
  } else {
    run.note("threshold " + std::to_string(threshold) + " removed_edges " + std::to_string(removed) +
             " cleaned_pairs " + std::to_string(trace.steps.size()));
  }
  run.emit_hypergraph(trace.result);
  return kExitOk;
}

int run_stability(Run& run) {
  const auto& path = single_input(run.params, "stability");
  const auto h = load_hypergraph(path);
  run.begin({path});
  const auto s = stability_partition(h);
  const auto& pi = s.partition;
  if (run.records()) {
    run.record("stability", {{"v1", std::to_string(pi.part(0).size())},
                             {"v2", std::to_string(pi.part(1).size())},
                             {"v3", std::to_string(pi.part(2).size())},
                             {"bad", std::to_string(s.report.bad.size())},
                             {"crossing", std::to_string(s.report.crossing.size())},
                             {"missing_crossing", std::to_string(s.report.missing_crossing.size())},
                             {"pivot", std::to_string(s.pivot)},
                             {"link_bipartite", s.link_bipartite ? "true" : "false"}});
    for (std::size_t i = 0; i < 3; ++i) {
      run.record("part", {{"index", std::to_string(i + 1)}, {"vertices", join(pi.part(i), ",")}});
    }
    return kExitOk;
  }
  run.out << "parts " << pi.part(0).size() << ' ' << pi.part(1).size() << ' ' << pi.part(2).size() << '\n'
          << "bad " << s.report.bad.size() << '\n'
          << "crossing " << s.report.crossing.size() << '\n'
          << "missing_crossing " << s.report.missing_crossing.size() << '\n'
          << "pivot " << s.pivot << '\n'
          << "link_bipartite " << (s.link_bipartite ? "true" : "false") << '\n';
  for (std::size_t i = 0; i < 3; ++i) run.out << 'V' << i + 1 << (pi.part(i).empty() ? "" : " ") << join(pi.part(i), " ") << '\n';
  return kExitOk;
}

int run_tournaments(Run& run) {
  const auto& p = run.params;
  if (p.kind == "stats") {
    const auto& path = single_input(p, "tournaments stats");
    const auto t = load_tournament(path);
    run.begin({path});
    const auto n = t.vertex_count();
    const auto cyclic = cyclic_triangle_count(t);
    const auto bound = kendall_smith_bound(n);
    const auto d5_copies = count_induced(t, d5());
    if (run.records()) {
      run.record("tournament_stats", {{"n", std::to_string(n)},
                                      {"cyclic_triangles", std::to_string(cyclic)},
                                      {"kendall_smith_bound", std::to_string(bound)},
                                      {"d5_copies", std::to_string(d5_copies)}});
    } else {
      run.out << "n " << n << '\n'
              << "cyclic_triangles " << cyclic << '\n'
              << "kendall_smith_bound " << bound << '\n'
              << "d5_copies " << d5_copies << '\n';
    }
    return kExitOk;
  }
  if (p.kind == "t5") {
    run.begin();
    const auto family = t5_family();
    if (run.records()) {
      run.record("t5_family", {{"size", std::to_string(family.size())}});
      for (const auto& t : family) run.record("member", {{"code", std::to_string(t.code())}});
    } else {
      run.out << "t5_family_size " << family.size() << '\n';
      for (const auto& t : family) run.out << "code " << t.code() << '\n';
    }
    return kExitOk;
  }
  Tournament t;
  if (p.kind == "qr") {
    t = Tournament::quadratic_residue(p.prime);
  } else if (p.kind == "circulant") {
    std::vector<std::size_t> steps;
    std::stringstream in(p.circulant_steps);
    for (std::string field; std::getline(in, field, ',');) steps.push_back(parse_count(field, "circulant step"));
    t = Tournament::circulant(p.n, steps);
  } else if (p.kind == "d5") {
    t = d5();
  } else if (p.kind == "transitive") {
    t = Tournament::transitive(p.n);
  } else if (p.kind == "random") {
    std::mt19937_64 rng(require_seed(p, "tournaments random"));
    t = Tournament(p.n);
    for (Vertex u = 0; u < p.n; ++u) {
      for (Vertex v = u + 1; v < p.n; ++v) {
        if (rng() & 1U) t.set_arc(v, u);
      }
    }
  } else {
    throw InvalidArgument("unknown tournaments action '" + p.kind +
                          "' (stats, t5, qr, circulant, d5, transitive, random)");
  }
  run.begin();
  run.emit_tournament(t);
  return kExitOk;
}

int run_embed(Run& run) {
  const auto& p = run.params;
  const auto minimal = minimal_blowup_factor(p.l1, p.l2);
  const auto t = p.t == 0 ? minimal : p.t;
  run.begin();
  const auto w = embed_cm_in_blowup(p.l1, p.l2, t);
  if (run.records()) {
    run.record("embedding", {{"l1", std::to_string(p.l1)},
                             {"l2", std::to_string(p.l2)},
                             {"t", std::to_string(t)},
                             {"minimal_t", std::to_string(minimal)},
                             {"vertices", sequence_text(w.vertices, ",")}});
  } else {
    run.out << "t " << t << '\n' << "minimal_t " << minimal << '\n' << "witness " << sequence_text(w.vertices, " ") << '\n';
  }
  return kExitOk;
}

int run_tri_hypergraph(Run& run) {
  const auto& p = run.params;
  const auto& path = single_input(p, "tri-hypergraph");
  const auto shape = TriangleShape::parse(p.shape);
  const auto eps = parse_degrees(p.eps);
  const auto points = load_points(path);
  run.begin({path});
  run.emit_hypergraph(similarity_hypergraph(points, shape, eps));
  return kExitOk;
}

int run_lattice(Run& run) {
  const auto& p = run.params;
  const auto patch = lattice_patch(p.radius);
  run.begin();
  if (p.check) {
    const bool rainbow = rainbow_check(patch);
    if (run.records()) {
      run.record("rainbow", {{"radius", std::to_string(p.radius)}, {"ok", rainbow ? "true" : "false"}});
    } else {
      run.out << "rainbow " << (rainbow ? "OK" : "FAIL") << '\n';
    }
    if (p.max_cycle > 0) {
      const bool free = equilateral_cm_free_check(points_of(patch), p.max_cycle);
      if (run.records()) {
        run.record("cm_free", {{"max_cycle", std::to_string(p.max_cycle)}, {"free", free ? "true" : "false"}});
      } else {
        run.out << "cm_free " << (free ? "FREE" : "NOT_FREE") << '\n';
      }
    }
    return kExitOk;
  }
  if (p.colors) {
    for (const auto& c : patch) {
      if (run.records()) {
        run.record("point", {{"x", std::to_string(c.x)}, {"y", std::to_string(c.y)}, {"color", std::to_string(c.color)}});
      } else {
        run.out << c.x << ' ' << c.y << ' ' << c.color << '\n';
      }
    }
    return kExitOk;
  }
  write_points(run.out, points_of(patch));
  return kExitOk;
}

int verdict(Run& run, bool ok) {
  if (run.records()) {
    run.record("verify", {{"ok", ok ? "true" : "false"}});
  } else {
    run.out << (ok ? "OK" : "FAIL") << '\n';
  }
  return ok ? kExitOk : kExitRejected;
}

int run_verify(Run& run) {
  const auto& p = run.params;
  if (p.args.empty()) throw InvalidArgument("verify expects a hypergraph file");
  const auto& path = p.args.front();
  if (p.kind == "bottle") {
    const auto h = load_hypergraph(path);
    const auto seq = parse_sequence(p.args, 1);
    run.begin({path});
    return verdict(run, verify_bottle(h, seq));
  }
  if (p.kind == "orientation") {
    if (p.args.size() != 2) throw InvalidArgument("verify orientation expects <hypergraph-file> <tournament-file>");
    const auto h = load_hypergraph(path);
    const auto t = load_tournament(p.args[1]);
    run.begin({path, p.args[1]});
    return verdict(run, verify_orientation(h, t));
  }
  if (p.kind == "walk") {
    const auto h = load_hypergraph(path);
    WalkWitness w{parse_sequence(p.args, 1), WalkKind::CycleMinusOne};
    if (p.walk_kind == "pp") {
      w.kind = WalkKind::PseudoPath;
    } else if (p.walk_kind == "pc") {
      w.kind = WalkKind::PseudoCycle;
    } else if (p.walk_kind != "cm") {
      throw InvalidArgument("--walk must be pp, pc or cm");
    }
    run.begin({path});
    return verdict(run, validate_walk(h, w));
  }
  if (p.kind == "free") {
    if (p.args.size() != 1) throw InvalidArgument("verify free expects one hypergraph file");
    const auto family = family_from(p);
    const auto h = load_hypergraph(path);
    run.begin({path});
    return verdict(run, family.is_free(h));
  }
  throw InvalidArgument("unknown verify target '" + p.kind + "' (bottle, orientation, walk, free)");
}

// ------------------------------------------------------------ option wiring

void add_common(CLI::App& app, Params& p) {
  app.add_option("--format", p.format, "Output style")->check(CLI::IsMember({"human", "records"}));
  app.add_option("--jobs", p.jobs, "Worker threads")->check(CLI::Range(std::size_t{1}, std::size_t{256}));
  app.add_option("--seed", p.seed, "Seed for randomized paths");
}

void add_output(CLI::App& app, Params& p) { app.add_option("--out", p.out_path, "Write the result to a file"); }

std::function<int(Run&)> configure(const std::string& name, CLI::App& app, Params& p) {
  if (name == "gen") {
    app.add_option("kind", p.kind, "en, cm, cycle, k4m, complete, blowup, random or improve")->required();
    app.add_option("inputs", p.args, "Input hypergraph (blowup, improve)");
    app.add_option("--n", p.n, "Vertex count");
    app.add_option("--l", p.length, "Cycle length / family bound");
    app.add_option("--t", p.t, "Blow-up factor");
    app.add_option("--p", p.probability, "Edge probability (rational or decimal)");
    app.add_option("--family", p.family, "Family for improve");
    app.add_option("--steps", p.steps, "Local-search steps");
    app.add_flag("--count-only", p.count_only, "Print only the edge count (en)");
    add_output(app, p);
    return run_gen;
  }
  if (name == "orient" || name == "find-bottle" || name == "stability") {
    app.add_option("inputs", p.args, "Hypergraph file")->required();
    if (name == "find-bottle") app.add_option("--max-size", p.max_size, "Largest certificate size sought");
    if (name == "orient") return run_orient;
    if (name == "find-bottle") return run_find_bottle;
    return run_stability;
  }
  if (name == "check-free") {
    app.add_option("inputs", p.args, "Hypergraph file")->required();
    app.add_option("--max-cycle", p.max_cycle, "Largest cycle length L")->required();
    return run_check_free;
  }
  if (name == "turan") {
    app.add_option("--n", p.n, "Vertex count (at most 8)")->required();
    app.add_option("--family", p.family, "k4-minus, c5-minus, fcm or empty")->required();
    app.add_option("--l", p.length, "L for the fcm family");
    app.add_option("--memo-depth", p.memo_depth, "Isomorph-rejection depth");
    app.add_option("--out-dir", p.out_dir, "Directory for extremal example files");
    return run_turan;
  }
  if (name == "clean") {
    app.add_option("inputs", p.args, "Hypergraph file")->required();
    app.add_option("--threshold", p.threshold, "Integer codegree threshold");
    app.add_option("--delta", p.delta, "Threshold as a fraction of n (rounded up)");
    add_output(app, p);
    return run_clean;
  }
  if (name == "tournaments") {
    app.add_option("kind", p.kind, "stats, t5, qr, circulant, d5, transitive or random")->required();
    app.add_option("inputs", p.args, "Tournament file (stats)");
    app.add_option("--n", p.n, "Vertex count");
    app.add_option("--p", p.prime, "Prime for qr");
    app.add_option("--steps", p.circulant_steps, "Comma-separated circulant steps");
    return run_tournaments;
  }
  if (name == "embed") {
    app.add_option("--l1", p.l1, "Length of the embedded cycle")->required();
    app.add_option("--l2", p.l2, "Length of the host cycle")->required();
    app.add_option("--t", p.t, "Blow-up factor (default: minimal)");
    return run_embed;
  }
  if (name == "tri-hypergraph") {
    app.add_option("inputs", p.args, "Point file")->required();
    app.add_option("--shape", p.shape, "'equilateral' or 'a,b,c' in degrees");
    app.add_option("--eps", p.eps, "Angle tolerance in degrees");
    add_output(app, p);
    return run_tri_hypergraph;
  }
  if (name == "lattice") {
    app.add_option("--radius", p.radius, "Patch radius")->required();
    app.add_flag("--check", p.check, "Run the rainbow check");
    app.add_option("--max-cycle", p.max_cycle, "With --check, also test freeness up to this length");
    app.add_flag("--colors", p.colors, "Print lattice coordinates and colours");
    return run_lattice;
  }
  // verify
  app.add_option("kind", p.kind, "bottle, orientation, walk or free")->required();
  app.add_option("inputs", p.args, "Files, then a vertex sequence")->required();
  app.add_option("--walk", p.walk_kind, "Walk kind for 'verify walk': pp, pc or cm");
  app.add_option("--family", p.family, "Family for 'verify free'");
  app.add_option("--l", p.length, "L for the fcm family");
  return run_verify;
}

RunManifest manifest_for(const std::string& name, const CLI::App& app, const Params& p) {
  RunManifest m;
  m.subcommand = name;
  m.seed = p.seed;
  for (const auto* opt : app.get_options()) {
    if (opt->count() == 0) continue;
    auto key = opt->get_name(false, false);
    key.erase(0, key.find_first_not_of('-'));
    if (key == "help" || key == "jobs" || key == "seed" || key == "format") continue;
    m.parameters[key] = join(opt->results(), ",");
  }
  m.parameters["format"] = p.format;
  return m;
}

}  // namespace

std::string RunManifest::to_record() const {
  std::ostringstream out;
  out << "record=manifest subcommand=" << subcommand << " version=" << kToolVersion
      << " seed=" << (seed ? std::to_string(*seed) : "none");
  for (const auto& [k, v] : parameters) out << " param." << k << '=' << v;
  for (const auto& [path, digest] : input_digests) out << " sha256." << path << '=' << digest;
  return out.str();
}

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
    throw InternalInconsistency("sha256: digest initialisation failed");
  }
  std::vector<char> buffer(1 << 16);
  while (in) {
    in.read(buffer.data(), static_cast<std::streamsize>(buffer.size()));
    if (in.gcount() > 0) EVP_DigestUpdate(ctx.get(), buffer.data(), static_cast<std::size_t>(in.gcount()));
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), digest, &len);
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int{digest[i]};
  return hex.str();
}

std::string usage() {
  return "usage: turanlab <subcommand> [options]\n"
         "subcommands:\n"
         "  gen <en|cm|cycle|k4m|complete|blowup|random|improve>   generate a hypergraph\n"
         "  orient <file>                      orientation witness or bottle\n"
         "  find-bottle <file> [--max-size k]  shortest bottle\n"
         "  check-free --max-cycle L <file>    pseudo-cycle-minus-one freeness\n"
         "  turan --n N --family F [--l L]     exact Turan number\n"
         "  clean --threshold k <file>         codegree cleaning\n"
         "  stability <file>                   three-part split around a max-degree vertex\n"
         "  tournaments <stats|t5|qr|circulant|d5|transitive|random>\n"
         "  embed --l1 A --l2 B [--t T]        cycle-minus-one embedding into a blow-up\n"
         "  tri-hypergraph --shape S --eps E <points>   similar-triangle hypergraph\n"
         "  lattice --radius r [--check] [--max-cycle L]\n"
         "  verify <bottle|orientation|walk|free> <file> ...\n"
         "common options: --format human|records, --jobs N, --seed S\n"
         "exit codes: 0 ok, 1 rejected certificate, 2 invalid input, 3 resource limit,\n"
         "            4 indeterminate, 64 usage, 70 internal error\n";
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.empty()) {
    err << usage();
    return kExitUsage;
  }
  const auto& name = args.front();
  if (name == "-h" || name == "--help" || name == "help") {
    out << usage();
    return kExitOk;
  }
  if (std::find(kSubcommands.begin(), kSubcommands.end(), name) == kSubcommands.end()) {
    err << "unknown subcommand '" << name << "'\n" << usage();
    return kExitUsage;
  }

  Params params;
  CLI::App app("turanlab " + name, "turanlab " + name);
  add_common(app, params);
  const auto handler = configure(name, app, params);
  try {
    std::vector<std::string> rest(args.rbegin(), args.rend() - 1);  // CLI11 consumes from the back
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  try {
    Run run(out, err, params, manifest_for(name, app, params));
    return handler(run);
  } catch (const NotOrientable& e) {
    err << "error: " << e.what() << "; bottle " << sequence_text(e.certificate().sequence, " ") << '\n';
    return kExitInvalidInput;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << '\n';
    return kExitResourceLimit;
  } catch (const UnsupportedSize& e) {
    err << "error: " << e.what() << '\n';
    return kExitResourceLimit;
  } catch (const Indeterminate& e) {
    err << "error: " << e.what() << '\n';
    return kExitIndeterminate;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace turanlab::cli
