#include "gapforge/label_cover.hpp"

#include "gapforge/error.hpp"

#include <algorithm>
#include <set>

namespace gapforge {

namespace {
    Index find_name(const std::vector<std::string>& names, const std::string& name, ErrorCode code, const char* what)
    {
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end())
            fail(code, std::string("unknown ") + what + " '" + name + "'");
        return static_cast<Index>(it - names.begin());
    }

    void require_unique(const std::vector<std::string>& names, const char* what)
    {
        std::set<std::string> seen;
        for (const auto& n : names)
            if (! seen.insert(n).second)
                fail(ErrorCode::MalformedInstance, std::string("duplicate ") + what + " '" + n + "'");
    }
}

Index LabelCoverInstance::a_index(const std::string& name) const
{
    return find_name(a_vertices, name, ErrorCode::UnknownVertex, "A-vertex");
}

Index LabelCoverInstance::b_index(const std::string& name) const
{
    return find_name(b_vertices, name, ErrorCode::UnknownVertex, "B-vertex");
}

Index LabelCoverInstance::sigma_a_index(const std::string& label) const
{
    return find_name(sigma_a, label, ErrorCode::UnknownLabel, "A-label");
}

Index LabelCoverInstance::sigma_b_index(const std::string& label) const
{
    return find_name(sigma_b, label, ErrorCode::UnknownLabel, "B-label");
}

std::optional<Index> LabelCoverInstance::find_edge(Index a, Index b) const
{
    for (Index e = 0; e < edges.size(); ++e)
        if (edges[e].a == a && edges[e].b == b)
            return e;
    return std::nullopt;
}

Index LabelCoverInstance::edge_index(Index a, Index b) const
{
    auto e = find_edge(a, b);
    if (! e)
        fail(ErrorCode::UnknownEdge, "no edge (" + std::to_string(a) + ", " + std::to_string(b) + ")");
    return *e;
}

std::vector<Index> LabelCoverInstance::edges_of_b(Index b) const
{
    std::vector<Index> result;
    for (Index e = 0; e < edges.size(); ++e)
        if (edges[e].b == b)
            result.push_back(e);
    return result;
}

std::vector<Index> LabelCoverInstance::edges_of_a(Index a) const
{
    std::vector<Index> result;
    for (Index e = 0; e < edges.size(); ++e)
        if (edges[e].a == a)
            result.push_back(e);
    return result;
}

ValidationReport validate_label_cover(const LabelCoverInstance& lc)
{
    require_unique(lc.a_vertices, "A-vertex");
    require_unique(lc.b_vertices, "B-vertex");
    require_unique(lc.sigma_a, "A-label");
    require_unique(lc.sigma_b, "B-label");
    if (lc.sigma_a.empty() || lc.sigma_b.empty())
        fail(ErrorCode::MalformedInstance, "empty alphabet");
    if (lc.projections.size() != lc.edges.size())
        fail(ErrorCode::MalformedInstance, "projection table count differs from edge count");

    std::vector<Index> deg_a(lc.a_vertices.size(), 0), deg_b(lc.b_vertices.size(), 0);
    std::set<std::pair<Index, Index>> seen;
    ValidationReport report;

    for (Index e = 0; e < lc.edges.size(); ++e) {
        const auto& [a, b] = lc.edges[e];
        if (a >= lc.a_vertices.size() || b >= lc.b_vertices.size())
            fail(ErrorCode::MalformedInstance, "edge " + std::to_string(e) + " has a dangling endpoint");
        if (! seen.emplace(a, b).second)
            fail(ErrorCode::MalformedInstance,
                "duplicate edge (" + lc.a_vertices[a] + ", " + lc.b_vertices[b] + ")");
        ++deg_a[a];
        ++deg_b[b];

        const auto& table = lc.projections[e];
        if (table.size() != lc.sigma_a.size())
            fail(ErrorCode::MalformedInstance, "projection table of edge " + std::to_string(e) + " has wrong length");
        std::vector<Index> fibre(lc.sigma_b.size(), 0);
        for (Index x = 0; x < table.size(); ++x) {
            if (table[x] == kNoLabel)
                fail(ErrorCode::MalformedInstance, "projection of edge (" + lc.a_vertices[a] + ", " + lc.b_vertices[b]
                        + ") is undefined on label '" + lc.sigma_a[x] + "'");
            if (table[x] >= lc.sigma_b.size())
                fail(ErrorCode::MalformedInstance, "projection of edge " + std::to_string(e) + " leaves Σ_B");
            report.p = std::max(report.p, ++fibre[table[x]]);
        }
    }

    for (Index a = 0; a < deg_a.size(); ++a)
        if (deg_a[a] == 0)
            fail(ErrorCode::MalformedInstance, "A-vertex '" + lc.a_vertices[a] + "' is isolated");
    for (Index b = 0; b < deg_b.size(); ++b)
        if (deg_b[b] == 0)
            fail(ErrorCode::MalformedInstance, "B-vertex '" + lc.b_vertices[b] + "' is isolated");

    auto [min_a, max_a] = std::minmax_element(deg_a.begin(), deg_a.end());
    auto [min_b, max_b] = std::minmax_element(deg_b.begin(), deg_b.end());
    report.d_a = deg_a.empty() ? 0 : *max_a;
    report.d_b = deg_b.empty() ? 0 : *max_b;
    report.bi_regular = (deg_a.empty() || *min_a == *max_a) && (deg_b.empty() || *min_b == *max_b);
    report.size_n = lc.a_vertices.size() + lc.b_vertices.size() + lc.edges.size();
    return report;
}

std::vector<Index> preimage(const LabelCoverInstance& lc, Index edge, Index y)
{
    if (edge >= lc.edges.size())
        fail(ErrorCode::UnknownEdge, "edge index " + std::to_string(edge));
    if (y >= lc.sigma_b.size())
        fail(ErrorCode::UnknownLabel, "B-label index " + std::to_string(y));
    std::vector<Index> result;
    const auto& table = lc.projections[edge];
    for (Index x = 0; x < table.size(); ++x)
        if (table[x] == y)
            result.push_back(x);
    return result;
}

Index count_satisfied_edges(const LabelCoverInstance& lc, const Labeling& lab)
{
    if (! lab.phi_b)
        fail(ErrorCode::PartialLabeling, "φ_B is absent");
    if (lab.phi_a.size() != lc.a_vertices.size() || lab.phi_b->size() != lc.b_vertices.size())
        fail(ErrorCode::PartialLabeling, "labeling domain differs from the vertex sets");
    Index count = 0;
    for (Index e = 0; e < lc.edges.size(); ++e) {
        const auto& [a, b] = lc.edges[e];
        if (lc.projections[e][lab.phi_a[a]] == (*lab.phi_b)[b])
            ++count;
    }
    return count;
}

}  // namespace gapforge
