#include "fkdiv/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "fkdiv/biconvex.hpp"
#include "fkdiv/error.hpp"

namespace fkdiv {

namespace {

class LineReader {
 public:
  LineReader(std::string_view line, int number) : number_(number) {
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      if (j > i) tokens_.push_back(line.substr(i, j - i));
      i = j;
    }
  }

  bool empty() const { return tokens_.empty(); }
  std::size_t remaining() const { return tokens_.size() - pos_; }
  std::string_view word() {
    if (pos_ >= tokens_.size()) throw error("unexpected end of line");
    return tokens_[pos_++];
  }
  std::int64_t integer() {
    std::string_view w = word();
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), value);
    if (ec != std::errc() || ptr != w.data() + w.size()) throw error("expected an integer, got '" + std::string(w) + "'");
    return value;
  }
  /// 1-based id in 1..limit, returned 0-based.
  int id(std::int64_t limit, const char* what) {
    const std::int64_t v = integer();
    if (v < 1 || v > limit) throw error(std::string(what) + " id " + std::to_string(v) + " out of range");
    return static_cast<int>(v - 1);
  }
  void finish() {
    if (pos_ != tokens_.size()) throw error("trailing tokens");
  }
  Error error(const std::string& what) const {
    return Error(ErrorCode::SyntaxError, "line " + std::to_string(number_) + ": " + what);
  }
  int number() const { return number_; }

 private:
  std::vector<std::string_view> tokens_;
  std::size_t pos_ = 0;
  int number_;
};

}  // namespace

InstanceFile parse_instance(std::string_view text) {
  bool have_header = false;
  std::int64_t n = 0, m = 0, k = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<Profit>> rows;
  std::vector<std::uint8_t> row_seen;
  InstanceFile file;
  std::optional<int> td_nodes;
  TreeDecomposition td;
  std::vector<std::uint8_t> bag_seen;

  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    LineReader line(raw, number);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const std::string_view tag = line.word();
    if (!have_header) {
      if (tag != "p" || line.word() != "fkdiv") throw line.error("expected 'p fkdiv <n> <m> <k>' header");
      n = line.integer();
      m = line.integer();
      k = line.integer();
      line.finish();
      if (n < 0 || m < 0 || k < 1 || k > 255) throw line.error("header values out of range");
      rows.assign(k, {});
      row_seen.assign(k, 0);
      have_header = true;
    } else if (tag == "p") {
      throw line.error("duplicate header");
    } else if (tag == "e") {
      const int u = line.id(n, "vertex"), v = line.id(n, "vertex");
      line.finish();
      if (u == v) throw line.error("self-loop");
      edges.emplace_back(std::min(u, v), std::max(u, v));
    } else if (tag == "w") {
      const int j = line.id(k, "agent");
      if (row_seen[j]) throw line.error("duplicate profit row");
      row_seen[j] = 1;
      while (line.remaining() > 0) rows[j].push_back(line.integer());
      if (static_cast<std::int64_t>(rows[j].size()) != n) {
        throw Error(ErrorCode::DimensionMismatch, "line " + std::to_string(number) + ": profit row has " +
                                                      std::to_string(rows[j].size()) + " entries, expected " +
                                                      std::to_string(n));
      }
    } else if (tag == "c") {
      if (line.word() != "class") throw line.error("expected 'c class <name>'");
      file.declared_class = std::string(line.word());
      line.finish();
    } else if (tag == "o") {
      const std::string_view side = line.word();
      if (side != "A" && side != "B") throw line.error("ordering side must be A or B");
      std::vector<Vertex> order;
      while (line.remaining() > 0) order.push_back(line.id(n, "vertex"));
      (side == "A" ? file.order_a : file.order_b) = std::move(order);
    } else if (tag == "t") {
      if (td_nodes) throw line.error("duplicate decomposition header");
      const std::int64_t nodes = line.integer();
      if (nodes < 1) throw line.error("decomposition needs at least one node");
      td_nodes = static_cast<int>(nodes);
      td.root = line.id(nodes, "node");
      line.finish();
      td.bags.assign(nodes, {});
      bag_seen.assign(nodes, 0);
    } else if (tag == "b") {
      if (!td_nodes) throw line.error("bag before 't' line");
      const int t = line.id(*td_nodes, "node");
      if (bag_seen[t]) throw line.error("duplicate bag");
      bag_seen[t] = 1;
      while (line.remaining() > 0) td.bags[t].push_back(line.id(n, "vertex"));
      std::sort(td.bags[t].begin(), td.bags[t].end());
    } else if (tag == "a") {
      if (!td_nodes) throw line.error("tree edge before 't' line");
      const int parent = line.id(*td_nodes, "node"), child = line.id(*td_nodes, "node");
      line.finish();
      td.edges.emplace_back(parent, child);
    } else {
      throw line.error("unknown line type '" + std::string(tag) + "'");
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw Error(ErrorCode::SyntaxError, "missing 'p fkdiv' header");
  if (static_cast<std::int64_t>(edges.size()) != m) {
    throw Error(ErrorCode::DimensionMismatch,
                "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  for (int j = 0; j < k; ++j) {
    if (!row_seen[j]) throw Error(ErrorCode::DimensionMismatch, "missing profit row for agent " + std::to_string(j + 1));
  }
  file.instance = Instance(Graph(static_cast<int>(n), edges), std::move(rows));

  if (file.order_a.has_value() != file.order_b.has_value()) {
    throw Error(ErrorCode::InvalidOrdering, "orderings for both sides A and B are required");
  }
  if (file.has_biconvex_ordering()) {
    if (!verify_biconvex_ordering(file.instance.graph(), *file.order_a, *file.order_b)) {
      throw Error(ErrorCode::InvalidOrdering, "declared orderings are not a biconvex ordering of the graph");
    }
    try {
      (void)component_structures(file.instance.graph(), *file.order_a, *file.order_b);
    } catch (const Error& e) {
      throw Error(ErrorCode::InvalidOrdering, e.what());
    }
  }
  if (td_nodes) {
    for (int t = 0; t < *td_nodes; ++t) {
      if (!bag_seen[t]) throw Error(ErrorCode::InvalidDecomposition, "missing bag for node " + std::to_string(t + 1));
    }
    try {
      verify_decomposition(file.instance.graph(), td);
    } catch (const Error& e) {
      throw Error(ErrorCode::InvalidDecomposition, e.what());
    }
    file.decomposition = std::move(td);
  }
  return file;
}

std::string serialize_instance(const InstanceFile& file) {
  const Instance& inst = file.instance;
  std::ostringstream out;
  out << "p fkdiv " << inst.vertex_count() << ' ' << inst.graph().edge_count() << ' ' << inst.agents() << '\n';
  if (file.declared_class) out << "c class " << *file.declared_class << '\n';
  for (auto [u, v] : inst.graph().edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  for (int j = 0; j < inst.agents(); ++j) {
    out << "w " << j + 1;
    for (Profit p : inst.profits(j)) out << ' ' << p;
    out << '\n';
  }
  auto ordering = [&](const char* side, const std::vector<Vertex>& order) {
    out << "o " << side;
    for (Vertex v : order) out << ' ' << v + 1;
    out << '\n';
  };
  if (file.order_a) ordering("A", *file.order_a);
  if (file.order_b) ordering("B", *file.order_b);
  if (file.decomposition) {
    const auto& td = *file.decomposition;
    out << "t " << td.node_count() << ' ' << td.root.value_or(0) + 1 << '\n';
    for (int t = 0; t < td.node_count(); ++t) {
      out << "b " << t + 1;
      for (Vertex v : td.bags[t]) out << ' ' << v + 1;
      out << '\n';
    }
    for (auto [a, b] : td.edges) out << "a " << a + 1 << ' ' << b + 1 << '\n';
  }
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
  out << text;
}

InstanceFile read_instance_file(const std::filesystem::path& path) { return parse_instance(read_text_file(path)); }

}  // namespace fkdiv
