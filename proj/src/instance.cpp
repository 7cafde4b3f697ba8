#include "qmstp/instance.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>
#include <fstream>
#include <sstream>

#include "qmstp/error.hpp"
#include "qmstp/rng.hpp"
#include "qmstp/union_find.hpp"

namespace qmstp {

namespace {

std::string location(int e, int f) {
  return "row " + std::to_string(e) + ", col " + std::to_string(f);
}

}  // namespace

Instance::Instance(int n, std::vector<Edge> edges, std::vector<double> q, std::string name)
    : n_(n), edges_(std::move(edges)), q_(std::move(q)), name_(std::move(name)) {
  if (n_ < 2) throw InvalidArgument("instance needs at least 2 vertices, got " + std::to_string(n_));
  const auto m = edges_.size();
  for (std::size_t e = 0; e < m; ++e) {
    const Edge& ed = edges_[e];
    if (ed.u < 0 || ed.v >= n_ || ed.u >= ed.v) {
      throw InvalidArgument("edge " + std::to_string(e) + " = (" + std::to_string(ed.u) + "," +
                            std::to_string(ed.v) + ") must satisfy 0 <= u < v < n");
    }
    if (e > 0 && !(edges_[e - 1] < ed)) {
      throw InvalidArgument("edges must be distinct and lexicographically sorted (edge " +
                            std::to_string(e) + ")");
    }
  }
  if (q_.size() != m * m) {
    throw InvalidArgument("cost matrix has " + std::to_string(q_.size()) + " entries, expected " +
                          std::to_string(m * m));
  }
  for (std::size_t e = 0; e < m; ++e) {
    for (std::size_t f = 0; f < m; ++f) {
      const double a = q_[e * m + f];
      if (!std::isfinite(a)) throw InvalidArgument("non-finite cost at " + location(int(e), int(f)));
      if (f > e && a != q_[f * m + e]) {
        throw InvalidArgument("cost matrix not symmetric at " + location(int(e), int(f)) + ": " +
                              std::to_string(a) + " != " + std::to_string(q_[f * m + e]));
      }
    }
  }
  if (!is_connected(n_, edges_)) {
    throw ConnectivityError("graph with " + std::to_string(n_) + " vertices and " +
                            std::to_string(m) + " edges is not connected");
  }
  incident_.resize(static_cast<std::size_t>(n_));
  for (std::size_t e = 0; e < m; ++e) {
    incident_[edges_[e].u].push_back(int(e));
    incident_[edges_[e].v].push_back(int(e));
  }
}

Instance Instance::with_linear_costs(int n, std::vector<Edge> edges, std::span<const double> p,
                                     std::string name) {
  const auto m = edges.size();
  if (p.size() != m) throw InvalidArgument("cost vector length does not match edge count");
  std::vector<double> q(m * m, 0.0);
  for (std::size_t e = 0; e < m; ++e) q[e * m + e] = p[e];
  return Instance(n, std::move(edges), std::move(q), std::move(name));
}

Instance Instance::with_costs(std::vector<double> q, std::string name) const {
  return Instance(n_, edges_, std::move(q), name.empty() ? name_ : std::move(name));
}

int Instance::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it == edges_.end() || *it != Edge{u, v}) return -1;
  return static_cast<int>(it - edges_.begin());
}

int Instance::density_percent() const {
  for (int d : {33, 67, 100})
    if (edges_for_density(n_, d) == m()) return d;
  const int pairs = n_ * (n_ - 1) / 2;
  return static_cast<int>(std::lround(100.0 * m() / pairs));
}

std::vector<Edge> complete_graph_edges(int n) {
  std::vector<Edge> out;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) out.push_back({u, v});
  return out;
}

bool is_connected(int n, std::span<const Edge> edges) {
  if (n <= 1) return true;
  DisjointSets ds(n);
  int components = n;
  for (const Edge& e : edges)
    if (ds.unite(e.u, e.v)) --components;
  return components == 1;
}

// ---------------------------------------------------------------------------
// Generators

std::string_view family_name(Family f) {
  switch (f) {
    case Family::CP1: return "CP1";
    case Family::CP2: return "CP2";
    case Family::CP3: return "CP3";
    case Family::CP4: return "CP4";
    case Family::OPsym: return "OPsym";
    case Family::OPvsym: return "OPvsym";
    case Family::OPesym: return "OPesym";
    case Family::VS: return "VS";
  }
  return "?";
}

Family parse_family(std::string_view tag) {
  std::string lower;
  for (const char c : tag) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  for (const Family f : {Family::CP1, Family::CP2, Family::CP3, Family::CP4, Family::OPsym,
                         Family::OPvsym, Family::OPesym, Family::VS}) {
    std::string name(family_name(f));
    for (char& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (name == lower) return f;
  }
  throw InvalidArgument("unknown instance family '" + std::string(tag) + "'");
}

int edges_for_density(int n, int density) {
  const long pairs = static_cast<long>(n) * (n - 1) / 2;
  return static_cast<int>((pairs * density + 99) / 100);
}

namespace {

bool is_op_family(Family f) {
  return f == Family::OPsym || f == Family::OPvsym || f == Family::OPesym;
}

std::vector<Edge> draw_edges(const GeneratorSpec& spec, int m, GenerationLog* log) {
  auto all = complete_graph_edges(spec.n);
  if (m == static_cast<int>(all.size())) {
    if (log) log->edge_draws = 1;
    return all;
  }
  Rng rng(stream_seed(spec.seed, "edges", static_cast<std::uint64_t>(spec.family),
                      static_cast<std::uint64_t>(spec.n), static_cast<std::uint64_t>(spec.density)));
  for (int attempt = 1; attempt <= 100000; ++attempt) {
    // Partial Fisher-Yates: the first m slots are a uniform m-subset.
    for (int i = 0; i < m; ++i) {
      const auto j = rng.uniform_int(i, static_cast<std::int64_t>(all.size()) - 1);
      std::swap(all[i], all[static_cast<std::size_t>(j)]);
    }
    std::vector<Edge> chosen(all.begin(), all.begin() + m);
    std::sort(chosen.begin(), chosen.end());
    if (is_connected(spec.n, chosen)) {
      if (log) log->edge_draws = attempt;
      return chosen;
    }
  }
  throw InvalidArgument("could not draw a connected graph for n=" + std::to_string(spec.n) +
                        " density=" + std::to_string(spec.density));
}

struct IntRange {
  int lo, hi;
};

void fill_uniform(std::vector<double>& q, int m, Rng& rng, IntRange diag, IntRange off) {
  for (int e = 0; e < m; ++e) q[e * m + e] = double(rng.uniform_int(diag.lo, diag.hi));
  for (int e = 0; e < m; ++e)
    for (int f = e + 1; f < m; ++f) {
      const double v = double(rng.uniform_int(off.lo, off.hi));
      q[e * m + f] = v;
      q[f * m + e] = v;
    }
}

}  // namespace

Instance generate(const GeneratorSpec& spec, GenerationLog* log) {
  if (spec.n < 3) throw InvalidArgument("generator needs n >= 3, got " + std::to_string(spec.n));
  if (spec.density < 1 || spec.density > 100)
    throw InvalidArgument("density must be a percentage in [1, 100]");
  if (is_op_family(spec.family) && spec.density != 100) {
    throw InvalidArgument(std::string(family_name(spec.family)) +
                          " instances are complete graphs; density must be 100");
  }
  if (spec.family == Family::VS && (spec.vs_max_diag < 0 || spec.vs_max_offdiag < 0))
    throw InvalidArgument("VS cost ceilings must be nonnegative");
  const int m = edges_for_density(spec.n, spec.density);
  if (m < spec.n - 1) {
    throw InvalidArgument("density " + std::to_string(spec.density) + "% gives " +
                          std::to_string(m) + " edges, fewer than n-1");
  }
  GenerationLog local;
  GenerationLog& lg = log ? *log : local;
  lg = GenerationLog{};

  std::vector<Edge> edges = draw_edges(spec, m, &lg);
  Rng rng(stream_seed(spec.seed, "costs", static_cast<std::uint64_t>(spec.family),
                      static_cast<std::uint64_t>(spec.n), static_cast<std::uint64_t>(spec.density)));
  std::vector<double> q(static_cast<std::size_t>(m) * m, 0.0);

  switch (spec.family) {
    case Family::CP1: fill_uniform(q, m, rng, {1, 10}, {1, 10}); break;
    case Family::CP2: fill_uniform(q, m, rng, {1, 10}, {1, 100}); break;
    case Family::CP3: fill_uniform(q, m, rng, {1, 100}, {1, 10}); break;
    case Family::CP4: fill_uniform(q, m, rng, {1, 100}, {1, 100}); break;
    case Family::OPsym: fill_uniform(q, m, rng, {1, 100}, {1, 20}); break;
    case Family::OPvsym: {
      lg.vertex_weights.resize(static_cast<std::size_t>(spec.n));
      for (int& w : lg.vertex_weights) w = static_cast<int>(rng.uniform_int(1, 10));
      const auto& w = lg.vertex_weights;
      for (int e = 0; e < m; ++e) q[e * m + e] = double(rng.uniform_int(1, 10000));
      for (int e = 0; e < m; ++e)
        for (int f = e + 1; f < m; ++f) {
          const double v = double(w[edges[e].u] * w[edges[e].v] * w[edges[f].u] * w[edges[f].v]);
          q[e * m + f] = v;
          q[f * m + e] = v;
        }
      break;
    }
    case Family::OPesym: {
      lg.coordinates.resize(static_cast<std::size_t>(spec.n));
      for (auto& p : lg.coordinates) {
        p[0] = rng.uniform_real(0.0, 100.0);
        p[1] = rng.uniform_real(0.0, 100.0);
      }
      const auto& c = lg.coordinates;
      for (int e = 0; e < m; ++e) {
        const auto& a = c[edges[e].u];
        const auto& b = c[edges[e].v];
        q[e * m + e] = std::hypot(a[0] - b[0], a[1] - b[1]);
      }
      for (int e = 0; e < m; ++e)
        for (int f = e + 1; f < m; ++f) {
          const double mx1 = 0.5 * (c[edges[e].u][0] + c[edges[e].v][0]);
          const double my1 = 0.5 * (c[edges[e].u][1] + c[edges[e].v][1]);
          const double mx2 = 0.5 * (c[edges[f].u][0] + c[edges[f].v][0]);
          const double my2 = 0.5 * (c[edges[f].u][1] + c[edges[f].v][1]);
          const double v = std::hypot(mx1 - mx2, my1 - my2);
          q[e * m + f] = v;
          q[f * m + e] = v;
        }
      break;
    }
    case Family::VS: {
      // ceil(10% of m) rows form the high-cost group.
      const int high = (m + 9) / 10;
      std::vector<int> rows(static_cast<std::size_t>(m));
      std::iota(rows.begin(), rows.end(), 0);
      for (int i = 0; i < high; ++i) {
        const auto j = rng.uniform_int(i, m - 1);
        std::swap(rows[i], rows[static_cast<std::size_t>(j)]);
      }
      std::vector<char> is_high(static_cast<std::size_t>(m), 0);
      for (int i = 0; i < high; ++i) is_high[rows[i]] = 1;
      lg.high_rows.assign(rows.begin(), rows.begin() + high);
      std::sort(lg.high_rows.begin(), lg.high_rows.end());

      const double off = spec.vs_max_offdiag;
      std::vector<double> raw(q.size(), 0.0);
      for (int e = 0; e < m; ++e)
        for (int f = 0; f < m; ++f) {
          if (e == f) continue;
          double lo = 0.5, hi = 0.7;
          if (is_high[e]) {
            if (is_high[f]) {
              lo = 0.9;
              hi = 1.0;
            } else {
              lo = 0.2;
              hi = 0.4;
            }
          }
          raw[e * m + f] = std::round(rng.uniform_real(lo * off, hi * off));
        }
      for (int e = 0; e < m; ++e) q[e * m + e] = std::round(rng.uniform_real(0.0, 0.2 * spec.vs_max_diag));
      for (int e = 0; e < m; ++e)
        for (int f = e + 1; f < m; ++f) {
          const double v = 0.5 * (raw[e * m + f] + raw[f * m + e]);
          q[e * m + f] = v;
          q[f * m + e] = v;
        }
      break;
    }
  }
  std::string name = std::string(family_name(spec.family)) + "_n" + std::to_string(spec.n) + "_d" +
                     std::to_string(spec.density) + "_s" + std::to_string(spec.seed);
  return Instance(spec.n, std::move(edges), std::move(q), std::move(name));
}

// ---------------------------------------------------------------------------
// File format

namespace {

void append_number(std::string& out, double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, res.ptr);
}

class Tokenizer {
 public:
  explicit Tokenizer(std::string_view text) : text_(text) {}

  std::string_view next(const char* what) {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      if (text_[pos_] == '\n') ++line_;
      ++pos_;
    }
    if (pos_ >= text_.size()) throw ParseError(where() + ": unexpected end of file, expected " + what);
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  int next_int(const char* what) {
    const auto tok = next(what);
    int v = 0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
      throw ParseError(where() + ": expected integer " + what + ", got '" + std::string(tok) + "'");
    return v;
  }

  double next_double(const char* what) {
    const auto tok = next(what);
    double v = 0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
      throw ParseError(where() + ": expected number " + what + ", got '" + std::string(tok) + "'");
    return v;
  }

  bool at_end() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return pos_ >= text_.size();
  }

  std::string where() const { return "line " + std::to_string(line_); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

}  // namespace

std::string format_instance(const Instance& inst) {
  std::string out = "QMSTP 1\n";
  out += std::to_string(inst.n()) + " " + std::to_string(inst.m()) + "\n";
  for (const Edge& e : inst.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  for (int e = 0; e < inst.m(); ++e) {
    const auto row = inst.row(e);
    for (int f = 0; f < inst.m(); ++f) {
      if (f > 0) out.push_back(' ');
      append_number(out, row[f]);
    }
    out.push_back('\n');
  }
  return out;
}

Instance parse_instance(std::string_view text, std::string name) {
  Tokenizer tok(text);
  if (tok.next("header") != "QMSTP") throw ParseError("line 1: missing 'QMSTP' header");
  if (tok.next("version") != "1") throw ParseError("line 1: unsupported format version");
  const int n = tok.next_int("vertex count");
  const int m = tok.next_int("edge count");
  if (n < 2 || m < 0) throw ParseError("line 2: invalid sizes n=" + std::to_string(n) + " m=" + std::to_string(m));
  std::vector<Edge> edges(static_cast<std::size_t>(m));
  for (auto& e : edges) {
    e.u = tok.next_int("edge endpoint");
    e.v = tok.next_int("edge endpoint");
  }
  std::vector<double> q(static_cast<std::size_t>(m) * m);
  for (auto& v : q) v = tok.next_double("cost entry");
  if (!tok.at_end()) throw ParseError(tok.where() + ": trailing data after cost matrix");
  if (m < n - 1) {
    throw ConnectivityError("graph has " + std::to_string(m) + " edges, a spanning tree on " +
                            std::to_string(n) + " vertices needs " + std::to_string(n - 1));
  }
  return Instance(n, std::move(edges), std::move(q), std::move(name));
}

void write_instance(const Instance& inst, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open '" + path.string() + "' for writing");
  out << format_instance(inst);
  if (!out) throw ParseError("write to '" + path.string() + "' failed");
}

Instance read_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str(), path.stem().string());
}

EdgeSets edge_sets(const Instance& inst, std::span<const int> vertices) {
  std::vector<char> in(static_cast<std::size_t>(inst.n()), 0);
  for (const int v : vertices) {
    if (v < 0 || v >= inst.n()) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
    in[v] = 1;
  }
  EdgeSets out;
  for (int e = 0; e < inst.m(); ++e) {
    const int k = in[inst.edge(e).u] + in[inst.edge(e).v];
    if (k == 2) out.inside.push_back(e);
    else if (k == 1) out.boundary.push_back(e);
  }
  return out;
}

}  // namespace qmstp
