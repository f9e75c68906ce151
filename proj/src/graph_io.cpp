#include "netcomp/graph_io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace netcomp {

void write_graphml(std::ostream& out, const Graph& g, const AgentStateVector* states) {
    if (states && states->size() != g.node_count())
        throw std::invalid_argument("state vector length does not match graph");
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n";
    if (states)
        out << "  <key id=\"d0\" for=\"node\" attr.name=\"group\" attr.type=\"string\"/>\n";
    out << "  <graph id=\"G\" edgedefault=\"undirected\">\n";
    for (std::uint32_t v = 0; v < g.node_count(); ++v) {
        if (states)
            out << "    <node id=\"n" << v << "\"><data key=\"d0\">" << group_char((*states)[v])
                << "</data></node>\n";
        else
            out << "    <node id=\"n" << v << "\"/>\n";
    }
    for (std::uint32_t v = 0; v < g.node_count(); ++v)
        for (std::uint32_t w : g.neighbors(v))
            if (w > v) out << "    <edge source=\"n" << v << "\" target=\"n" << w << "\"/>\n";
    out << "  </graph>\n</graphml>\n";
}

void write_dot(std::ostream& out, const Graph& g, const AgentStateVector* states) {
    if (states && states->size() != g.node_count())
        throw std::invalid_argument("state vector length does not match graph");
    out << "graph G {\n";
    for (std::uint32_t v = 0; v < g.node_count(); ++v) {
        out << "  n" << v;
        if (states) out << " [group=\"" << group_char((*states)[v]) << "\"]";
        out << ";\n";
    }
    for (std::uint32_t v = 0; v < g.node_count(); ++v)
        for (std::uint32_t w : g.neighbors(v))
            if (w > v) out << "  n" << v << " -- n" << w << ";\n";
    out << "}\n";
}

namespace {

// Value of attribute `name` inside an XML tag fragment, or empty.
std::string tag_attr(const std::string& tag, const std::string& name) {
    const std::string needle = name + "=\"";
    const auto pos = tag.find(needle);
    if (pos == std::string::npos) return {};
    const auto start = pos + needle.size();
    const auto end = tag.find('"', start);
    if (end == std::string::npos) return {};
    return tag.substr(start, end - start);
}

std::uint32_t parse_node_id(const std::string& id) {
    if (id.size() < 2 || id[0] != 'n')
        throw std::invalid_argument("bad GraphML node id '" + id + "'");
    try {
        return static_cast<std::uint32_t>(std::stoul(id.substr(1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("bad GraphML node id '" + id + "'");
    }
}

} // namespace

std::pair<Graph, std::optional<AgentStateVector>> read_graphml(std::istream& in) {
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    struct NodeRec {
        std::uint32_t id;
        char group;
    };
    std::vector<NodeRec> nodes;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    bool any_group = false;

    std::size_t pos = 0;
    while ((pos = text.find('<', pos)) != std::string::npos) {
        const auto end = text.find('>', pos);
        if (end == std::string::npos) throw std::invalid_argument("unterminated GraphML tag");
        const std::string tag = text.substr(pos + 1, end - pos - 1);
        if (tag.rfind("node", 0) == 0) {
            NodeRec rec{parse_node_id(tag_attr(tag, "id")), 0};
            if (tag.back() != '/') {
                // look for <data key="...">X</data> before </node>
                const auto close = text.find("</node>", end);
                const auto data_open = text.find("<data", end);
                if (data_open != std::string::npos && data_open < close) {
                    const auto data_gt = text.find('>', data_open);
                    const auto data_close = text.find("</data>", data_gt);
                    if (data_gt == std::string::npos || data_close == std::string::npos)
                        throw std::invalid_argument("malformed <data> element");
                    std::string value = text.substr(data_gt + 1, data_close - data_gt - 1);
                    if (value.size() != 1)
                        throw std::invalid_argument("bad group value '" + value + "'");
                    rec.group = value[0];
                    any_group = true;
                }
            }
            nodes.push_back(rec);
        } else if (tag.rfind("edge", 0) == 0) {
            edges.emplace_back(parse_node_id(tag_attr(tag, "source")),
                               parse_node_id(tag_attr(tag, "target")));
        }
        pos = end + 1;
    }

    if (nodes.empty()) throw std::invalid_argument("GraphML contains no nodes");
    std::uint32_t n = 0;
    for (const NodeRec& r : nodes) n = std::max(n, r.id + 1);
    if (n != nodes.size()) throw std::invalid_argument("GraphML node ids are not contiguous");

    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);

    std::optional<AgentStateVector> states;
    if (any_group) {
        AgentStateVector sv(n, GroupLabel::Unassigned);
        for (const NodeRec& r : nodes) {
            if (r.group == 0)
                throw std::invalid_argument("node n" + std::to_string(r.id) + " lacks a group");
            sv[r.id] = group_from_char(r.group);
        }
        states = std::move(sv);
    }
    return {std::move(g), std::move(states)};
}

std::pair<Graph, std::optional<AgentStateVector>> read_graphml_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open GraphML file '" + path + "'");
    return read_graphml(in);
}

} // namespace netcomp
