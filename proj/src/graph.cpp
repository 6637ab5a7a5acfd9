#include "corient/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <sstream>
#include <string>

#include "corient/error.hpp"

namespace corient {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::SelfLoopInInput: return "SelfLoopInInput";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::IncompleteAssignment: return "IncompleteAssignment";
    case ErrorCode::InvalidChainLength: return "InvalidChainLength";
    case ErrorCode::AcyclicMultigraph: return "AcyclicMultigraph";
    case ErrorCode::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

OrientationBits OrientationBits::from_string(std::string_view text) {
  OrientationBits bits(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1') {
      throw std::invalid_argument("orientation string must be over {0,1}");
    }
    bits.set(i, text[i] == '1');
  }
  return bits;
}

std::string OrientationBits::to_string() const {
  std::string out(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (test(i)) out[i] = '1';
  }
  return out;
}

UndirectedGraph UndirectedGraph::from_edges(std::size_t node_count,
                                            std::span<const std::pair<NodeId, NodeId>> edges) {
  UndirectedGraph g;
  g.node_count_ = node_count;
  g.edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a >= node_count || b >= node_count) {
      throw Error(ErrorCode::MalformedLine, "edge endpoint out of range");
    }
    if (a == b) {
      throw Error(ErrorCode::SelfLoopInInput, "self-loop at node " + std::to_string(a));
    }
    g.edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  if (auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end()); dup != g.edges_.end()) {
    throw Error(ErrorCode::DuplicateEdge,
                "edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");
  }

  g.offsets_.assign(node_count + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < node_count; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.incident_.resize(2 * g.edges_.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (EdgeId e = 0; e < g.edges_.size(); ++e) {
    g.incident_[fill[g.edges_[e].u]++] = e;
    g.incident_[fill[g.edges_[e].v]++] = e;
  }
  return g;
}

std::optional<EdgeId> UndirectedGraph::find_edge(NodeId a, NodeId b) const noexcept {
  if (a >= node_count_ || b >= node_count_) return std::nullopt;
  const NodeId probe = degree(a) <= degree(b) ? a : b;
  const NodeId target = probe == a ? b : a;
  for (EdgeId e : incident(probe)) {
    if (other(e, probe) == target) return e;
  }
  return std::nullopt;
}

bool UndirectedGraph::is_connected() const {
  if (node_count_ <= 1) return true;
  std::vector<char> seen(node_count_, 0);
  std::vector<NodeId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    for (EdgeId e : incident(v)) {
      const NodeId w = other(e, v);
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == node_count_;
}

void UndirectedGraph::set_labels(std::vector<std::uint64_t> labels) {
  if (!labels.empty() && labels.size() != node_count_) {
    throw std::invalid_argument("label count must match node count");
  }
  labels_ = std::move(labels);
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::uint64_t parse_id(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw Error(ErrorCode::MalformedLine,
                "line " + std::to_string(line_no) + ": bad integer '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

UndirectedGraph parse_edge_list(std::istream& in, const ParseOptions& options) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> header;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_tokens(line);
    if (tokens.empty() || tokens[0][0] == '#' || tokens[0] == "c") continue;
    if (tokens[0] == "p") {
      if (header || tokens.size() != 4 || tokens[1] != "edge" || !raw.empty()) {
        throw Error(ErrorCode::MalformedLine, "line " + std::to_string(line_no) +
                                                  ": expected a single leading 'p edge n m'");
      }
      header.emplace(parse_id(tokens[2], line_no), parse_id(tokens[3], line_no));
      continue;
    }
    if (tokens[0] == "e") {
      if (!header) {
        throw Error(ErrorCode::MalformedLine,
                    "line " + std::to_string(line_no) + ": 'e' line without 'p edge' header");
      }
      tokens.erase(tokens.begin());
    }
    if (tokens.size() != 2) {
      throw Error(ErrorCode::MalformedLine,
                  "line " + std::to_string(line_no) + ": expected two node ids");
    }
    raw.emplace_back(parse_id(tokens[0], line_no), parse_id(tokens[1], line_no));
  }

  std::vector<std::uint64_t> labels;
  labels.reserve(2 * raw.size());
  for (const auto& [a, b] : raw) {
    labels.push_back(a);
    labels.push_back(b);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  if (header && (header->first != labels.size() || header->second != raw.size())) {
    throw Error(ErrorCode::MalformedLine,
                "header declares " + std::to_string(header->first) + " nodes and " +
                    std::to_string(header->second) + " edges, body has " +
                    std::to_string(labels.size()) + " and " + std::to_string(raw.size()));
  }

  auto dense = [&](std::uint64_t label) {
    return static_cast<NodeId>(std::lower_bound(labels.begin(), labels.end(), label) -
                               labels.begin());
  };
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(raw.size());
  for (const auto& [a, b] : raw) {
    if (a == b) throw Error(ErrorCode::SelfLoopInInput, "self-loop at node " + std::to_string(a));
    edges.emplace_back(dense(a), dense(b));
  }

  UndirectedGraph g;
  try {
    g = UndirectedGraph::from_edges(labels.size(), edges);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::DuplicateEdge) throw;
    throw Error(ErrorCode::DuplicateEdge, "input repeats an edge");
  }
  g.set_labels(std::move(labels));
  if (options.strict_connected && !g.is_connected()) {
    throw Error(ErrorCode::Disconnected, "input graph has more than one component");
  }
  return g;
}

UndirectedGraph parse_edge_list(std::string_view text, const ParseOptions& options) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in, options);
}

void Digraph::assign(std::size_t node_count, std::span<const Arc> arcs) {
  node_count_ = node_count;
  offsets_.assign(node_count + 1, 0);
  for (const Arc& a : arcs) ++offsets_[a.from + 1];
  for (std::size_t v = 0; v < node_count; ++v) offsets_[v + 1] += offsets_[v];
  fill_.assign(offsets_.begin(), offsets_.end() - 1);
  targets_.resize(arcs.size());
  for (const Arc& a : arcs) targets_[fill_[a.from]++] = a.to;
}

bool CycleDetector::has_cycle(const Digraph& graph, StepCounter& steps) {
  enum : std::uint8_t { kWhite = 0, kGray = 1, kBlack = 2 };
  const std::size_t n = graph.node_count();
  color_.assign(n, kWhite);
  steps.add(n);
  for (NodeId root = 0; root < n; ++root) {
    if (color_[root] != kWhite) continue;
    color_[root] = kGray;
    stack_.clear();
    stack_.emplace_back(root, 0);
    while (!stack_.empty()) {
      auto& [v, next] = stack_.back();
      const auto out = graph.out(v);
      if (next == out.size()) {
        color_[v] = kBlack;
        stack_.pop_back();
        continue;
      }
      const NodeId w = out[next++];
      steps.add();
      if (color_[w] == kGray) return true;
      if (color_[w] == kWhite) {
        color_[w] = kGray;
        stack_.emplace_back(w, 0);
      }
    }
  }
  return false;
}

bool CycleDetector::has_cycle(std::size_t node_count, std::span<const Arc> arcs,
                              StepCounter& steps) {
  scratch_.assign(node_count, arcs);
  steps.add(arcs.size());
  return has_cycle(scratch_, steps);
}

bool digraph_has_cycle(std::size_t node_count, std::span<const Arc> arcs) {
  for (const Arc& a : arcs) {
    if (a.from >= node_count || a.to >= node_count) {
      throw std::invalid_argument("arc endpoint out of range");
    }
  }
  CycleDetector detector;
  StepCounter steps;
  return detector.has_cycle(node_count, arcs, steps);
}

OrientationBits canonical_bits(const UndirectedGraph& g, std::span<const Arc> assignment) {
  OrientationBits bits(g.edge_count());
  std::vector<char> covered(g.edge_count(), 0);
  for (const Arc& a : assignment) {
    const auto e = g.find_edge(a.from, a.to);
    if (!e) {
      throw Error(ErrorCode::IncompleteAssignment, "arc does not match an edge of the graph");
    }
    if (covered[*e]) {
      throw Error(ErrorCode::IncompleteAssignment, "edge assigned more than one direction");
    }
    covered[*e] = 1;
    bits.set(*e, a.from < a.to);
  }
  if (std::find(covered.begin(), covered.end(), 0) != covered.end()) {
    throw Error(ErrorCode::IncompleteAssignment, "some edge has no direction");
  }
  return bits;
}

std::vector<Arc> orientation_arcs(const UndirectedGraph& g, const OrientationBits& bits) {
  std::vector<Arc> arcs;
  arcs.reserve(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    arcs.push_back(bits.test(e) ? Arc{edge.u, edge.v} : Arc{edge.v, edge.u});
  }
  return arcs;
}

}  // namespace corient
