#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fkdiv/graph.hpp"
#include "fkdiv/tree_decomposition.hpp"

namespace fkdiv {

/// An instance plus the optional extras an instance file may carry. Vertex
/// ids are 0-based here and 1-based in the text format.
struct InstanceFile {
  Instance instance;
  std::optional<std::string> declared_class;
  std::optional<std::vector<Vertex>> order_a;
  std::optional<std::vector<Vertex>> order_b;
  std::optional<TreeDecomposition> decomposition;

  bool has_biconvex_ordering() const { return order_a.has_value() && order_b.has_value(); }
};

/// Line format:
///   p fkdiv <n> <m> <k>
///   e <u> <v>                       (m lines)
///   w <j> <p_1> ... <p_n>           (one per agent)
///   c class <name>
///   o A <perm> / o B <perm>
///   t <nodes> <root>, b <node> <v...>, a <parent> <child>
///   # comment
/// Orderings and decompositions are verified here. Throws SyntaxError,
/// DimensionMismatch, InvalidOrdering or InvalidDecomposition.
InstanceFile parse_instance(std::string_view text);

std::string serialize_instance(const InstanceFile& file);

InstanceFile read_instance_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace fkdiv
