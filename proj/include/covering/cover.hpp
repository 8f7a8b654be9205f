#pragma once

// Cover certificates: a disjoint union of template graphs together with a
// vertex map into the host. Verification checks the homomorphism, edge
// surjectivity, class membership and (for global/local) injectivity.

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "covering/graph.hpp"
#include "covering/templates.hpp"

namespace covering {

enum class CoverMode { global, local, folded };

inline std::string_view mode_name(CoverMode m) {
  switch (m) {
    case CoverMode::global: return "global";
    case CoverMode::local: return "local";
    case CoverMode::folded: return "folded";
  }
  return "?";
}

inline CoverMode parse_mode(std::string_view s) {
  if (s == "global") return CoverMode::global;
  if (s == "local") return CoverMode::local;
  if (s == "folded") return CoverMode::folded;
  throw std::invalid_argument("unknown mode: " + std::string(s));
}

struct CoverComponent {
  Graph graph;
  std::vector<Vertex> map;  // template vertex -> host vertex
};

struct CoverCertificate {
  int host_vertex_count = 0;
  std::vector<CoverComponent> components;

  int size() const { return static_cast<int>(components.size()); }
};

struct CoverReport {
  bool valid = false;
  std::vector<std::string> violations;
  int size = 0;
  int max_preimage = 0;
  bool injective = true;
  int covered_edge_count = 0;
};

// |phi^{-1}(v)| for every host vertex.
inline std::vector<int> preimage_counts(const CoverCertificate& cert) {
  std::vector<int> count(cert.host_vertex_count, 0);
  for (const auto& c : cert.components)
    for (Vertex h : c.map) ++count.at(h);
  return count;
}

inline bool component_injective(const CoverComponent& c) {
  std::vector<Vertex> img = c.map;
  std::sort(img.begin(), img.end());
  return std::adjacent_find(img.begin(), img.end()) == img.end();
}

inline CoverReport verify_cover(const Graph& g, const CoverCertificate& cert, ClassTag cls,
                                CoverMode mode) {
  if (cert.host_vertex_count != g.vertex_count())
    throw std::invalid_argument("certificate host has " + std::to_string(cert.host_vertex_count) +
                                " vertices, graph has " + std::to_string(g.vertex_count()));
  for (const auto& c : cert.components) {
    if (static_cast<int>(c.map.size()) != c.graph.vertex_count())
      throw std::invalid_argument("component vertex map is not total");
    for (Vertex h : c.map)
      if (h < 0 || h >= g.vertex_count())
        throw std::invalid_argument("map image out of range: " + std::to_string(h));
  }

  CoverReport rep;
  rep.size = cert.size();
  std::vector<char> covered(g.edge_count(), 0);
  for (int i = 0; i < cert.size(); ++i) {
    const auto& c = cert.components[i];
    if (!recognize(cls, c.graph))
      rep.violations.push_back("component " + std::to_string(i) + " is not a " +
                               std::string(class_name(cls)));
    for (const auto& e : c.graph.edges()) {
      const int idx = g.edge_index(c.map[e.u], c.map[e.v]);
      if (idx < 0) {
        rep.violations.push_back("component " + std::to_string(i) + " edge " + std::to_string(e.u) +
                                 "-" + std::to_string(e.v) + " maps to non-edge " +
                                 std::to_string(c.map[e.u]) + "-" + std::to_string(c.map[e.v]));
      } else {
        covered[idx] = 1;
      }
    }
    if (!component_injective(c)) {
      rep.injective = false;
      if (mode != CoverMode::folded)
        rep.violations.push_back("component " + std::to_string(i) + " is not injective");
    }
  }
  for (int i = 0; i < g.edge_count(); ++i) {
    if (covered[i]) {
      ++rep.covered_edge_count;
    } else {
      rep.violations.push_back("uncovered edge " + std::to_string(g.edges()[i].u) + "-" +
                               std::to_string(g.edges()[i].v));
    }
  }
  const auto counts = preimage_counts(cert);
  rep.max_preimage = counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
  rep.valid = rep.violations.empty();
  return rep;
}

// Template vertices that lose all their edges are dropped; a component that
// lost edges is split into its connected pieces.
inline CoverCertificate restrict_cover(const CoverCertificate& cert,
                                       const std::vector<Edge>& removed_host_edges) {
  std::set<Edge> removed;
  for (const auto& e : removed_host_edges) removed.insert(make_edge(e.u, e.v));
  CoverCertificate out;
  out.host_vertex_count = cert.host_vertex_count;
  for (const auto& c : cert.components) {
    std::vector<Edge> kept;
    for (const auto& e : c.graph.edges())
      if (!removed.count(make_edge(c.map[e.u], c.map[e.v]))) kept.push_back(e);
    if (static_cast<int>(kept.size()) == c.graph.edge_count()) {
      out.components.push_back(c);
      continue;
    }
    const Graph rest(c.graph.vertex_count(), kept);
    const auto comp = rest.components();
    std::map<int, std::vector<Vertex>> pieces;
    for (Vertex x = 0; x < rest.vertex_count(); ++x) {
      const bool dropped = rest.degree(x) == 0 && c.graph.degree(x) > 0;
      if (!dropped) pieces[comp[x]].push_back(x);
    }
    for (const auto& [id, verts] : pieces) {
      CoverComponent piece;
      piece.graph = induced_subgraph(rest, verts);
      for (Vertex x : verts) piece.map.push_back(c.map[x]);
      out.components.push_back(std::move(piece));
    }
  }
  return out;
}

// Each walk of edge-length m becomes a path template on m+1 vertices.
inline CoverCertificate walks_to_certificate(const Graph& g, const std::vector<Walk>& walks) {
  CoverCertificate cert;
  cert.host_vertex_count = g.vertex_count();
  for (const auto& w : walks) {
    validate_walk(g, w);
    if (w.vertices.empty()) continue;
    const int len = static_cast<int>(w.vertices.size());
    cert.components.push_back({path_graph(len), w.vertices});
  }
  return cert;
}

// ------------------------------------------------------------ text format
//
//   host <vertex_count>
//   component
//   tv <template_vertex> <host_vertex>
//   te <template_vertex> <template_vertex>

inline void write_certificate(std::ostream& out, const CoverCertificate& cert) {
  out << "host " << cert.host_vertex_count << '\n';
  for (const auto& c : cert.components) {
    out << "component\n";
    for (Vertex x = 0; x < c.graph.vertex_count(); ++x) out << "tv " << x << ' ' << c.map[x] << '\n';
    for (const auto& e : c.graph.edges()) out << "te " << e.u << ' ' << e.v << '\n';
  }
}

inline CoverCertificate read_certificate(std::istream& in, int default_host_vertex_count = -1) {
  CoverCertificate cert;
  cert.host_vertex_count = default_host_vertex_count;
  struct Pending {
    std::map<int, Vertex> tv;
    std::vector<Edge> te;
  };
  std::vector<Pending> pending;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = detail::strip_comment(raw);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "host") {
      if (!(ls >> cert.host_vertex_count)) detail::parse_error(line_no, "bad host line");
    } else if (tag == "component") {
      pending.emplace_back();
    } else if (tag == "tv" || tag == "te") {
      if (pending.empty()) detail::parse_error(line_no, tag + " before any component");
      int a, b;
      if (!(ls >> a >> b)) detail::parse_error(line_no, "bad " + tag + " line");
      if (tag == "tv") {
        if (!pending.back().tv.emplace(a, b).second)
          detail::parse_error(line_no, "template vertex defined twice");
      } else {
        pending.back().te.push_back({a, b});
      }
    } else {
      detail::parse_error(line_no, "unknown record '" + tag + "'");
    }
    std::string extra;
    if (ls >> extra) detail::parse_error(line_no, "trailing input '" + extra + "'");
  }
  if (cert.host_vertex_count < 0) throw std::invalid_argument("certificate has no host size");
  for (auto& p : pending) {
    CoverComponent c;
    const int count = static_cast<int>(p.tv.size());
    int expect = 0;
    for (const auto& [tid, hid] : p.tv) {
      if (tid != expect++) throw std::invalid_argument("template vertex ids must be 0..k-1");
      c.map.push_back(hid);
    }
    c.graph = Graph(count, std::move(p.te));
    cert.components.push_back(std::move(c));
  }
  return cert;
}

inline std::string to_string(const CoverCertificate& cert) {
  std::ostringstream os;
  write_certificate(os, cert);
  return os.str();
}

inline CoverCertificate certificate_from_string(const std::string& text, int host_vertex_count = -1) {
  std::istringstream is(text);
  return read_certificate(is, host_vertex_count);
}

}  // namespace covering
