#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qmstp {

struct Edge {
  int u = 0;
  int v = 0;
  auto operator<=>(const Edge&) const = default;
};

/// Undirected connected graph with a symmetric m x m interaction-cost matrix.
/// Edges are kept in lexicographic (u, v) order with u < v; the diagonal of
/// Q holds the linear costs. Immutable after construction.
class Instance {
 public:
  /// Validates every invariant and throws InvalidArgument (bad edges, bad or
  /// asymmetric Q) or ConnectivityError.
  Instance(int n, std::vector<Edge> edges, std::vector<double> q, std::string name = {});

  /// Q = Diag(p): the plain minimum spanning tree problem.
  static Instance with_linear_costs(int n, std::vector<Edge> edges, std::span<const double> p,
                                    std::string name = {});

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::string& name() const { return name_; }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }

  double q(int e, int f) const { return q_[static_cast<std::size_t>(e) * edges_.size() + f]; }
  std::span<const double> row(int e) const {
    return {q_.data() + static_cast<std::size_t>(e) * edges_.size(), edges_.size()};
  }
  std::span<const double> matrix() const { return q_; }

  /// Edge index of {u, v}, or -1.
  int edge_index(int u, int v) const;
  /// Edges incident to vertex i, in increasing index order.
  const std::vector<int>& incident(int i) const { return incident_[static_cast<std::size_t>(i)]; }

  bool is_complete() const { return m() == n_ * (n_ - 1) / 2; }
  /// Generator density (33, 67 or 100) when m matches its edge count,
  /// otherwise the rounded percentage of present vertex pairs.
  int density_percent() const;

  /// Copy with a different cost matrix (same graph); validated like the constructor.
  Instance with_costs(std::vector<double> q, std::string name = {}) const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<double> q_;
  std::string name_;
  std::vector<std::vector<int>> incident_;
};

/// All pairs {u, v}, u < v, of the complete graph on n vertices in lexicographic order.
std::vector<Edge> complete_graph_edges(int n);

/// True when the edge list connects all n vertices.
bool is_connected(int n, std::span<const Edge> edges);

enum class Family { CP1, CP2, CP3, CP4, OPsym, OPvsym, OPesym, VS };

std::string_view family_name(Family f);
/// Parses a family tag (case-insensitive); throws InvalidArgument.
Family parse_family(std::string_view tag);

struct GeneratorSpec {
  Family family = Family::CP1;
  int n = 10;
  int density = 100;  ///< percent of vertex pairs present; OP families require 100
  std::uint64_t seed = 1;
  double vs_max_diag = 100.0;
  double vs_max_offdiag = 100.0;
};

/// Random draws a generator made, kept so tests can recompute costs.
struct GenerationLog {
  std::vector<int> vertex_weights;                 ///< OPvsym w(i)
  std::vector<std::array<double, 2>> coordinates;  ///< OPesym vertex positions
  std::vector<int> high_rows;                      ///< VS rows in the high-cost group
  int edge_draws = 0;                              ///< edge-set draws until connected
};

/// Number of edges for a density: ceil(density * n(n-1)/2 / 100).
int edges_for_density(int n, int density);

Instance generate(const GeneratorSpec& spec, GenerationLog* log = nullptr);

/// Canonical text form (see README, "Instance files").
std::string format_instance(const Instance& inst);
Instance parse_instance(std::string_view text, std::string name = {});

void write_instance(const Instance& inst, const std::filesystem::path& path);
/// Reads a file; the instance name is the file stem. Throws ParseError on
/// I/O or syntax problems, InvalidArgument / ConnectivityError on invariant
/// violations.
Instance read_instance(const std::filesystem::path& path);

struct EdgeSets {
  std::vector<int> inside;    ///< E(S): both endpoints in S
  std::vector<int> boundary;  ///< delta(S): exactly one endpoint in S
};

EdgeSets edge_sets(const Instance& inst, std::span<const int> vertices);

}  // namespace qmstp
