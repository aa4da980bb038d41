#include "gapforge/io.hpp"

#include "gapforge/error.hpp"

#include <openssl/evp.h>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

namespace gapforge {

std::string canonical_dump(const Json& j)
{
    return j.dump(2) + "\n";
}

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (! in || std::filesystem::is_directory(path))
        fail(ErrorCode::FileNotFound, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Json read_json_file(const std::string& path)
{
    const std::string text = read_text_file(path);
    try {
        return Json::parse(text);
    }
    catch (const Json::parse_error& e) {
        fail(ErrorCode::SchemaViolation, "'" + path + "' is not valid JSON (byte " + std::to_string(e.byte) + ")");
    }
}

void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (! out)
        fail(ErrorCode::FileNotFound, "cannot write '" + path + "'");
    out << text;
}

Json integer_to_json(const Integer& v)
{
    static const Integer safe = (Integer(1) << 53) - 1;
    if (v <= safe && v >= -safe)
        return v.convert_to<long long>();
    return v.str();
}

Json rational_to_json(const Rational& v)
{
    return format_rational(v);
}

namespace {
    /// A JSON value together with its pointer, for error messages.
    class Node {
    public:
        Node(const Json& j, std::string ptr = "") : j_(j), ptr_(std::move(ptr)) {}

        [[noreturn]] void violation(const std::string& what) const
        {
            fail(ErrorCode::SchemaViolation, (ptr_.empty() ? std::string("/") : ptr_) + ": " + what);
        }

        bool has(const std::string& key) const { return j_.is_object() && j_.contains(key) && ! j_.at(key).is_null(); }

        Node operator[](const std::string& key) const
        {
            if (! j_.is_object())
                violation("expected an object");
            if (! j_.contains(key))
                Node(j_, ptr_ + "/" + key).violation("missing field");
            return Node(j_.at(key), ptr_ + "/" + key);
        }

        Node operator[](std::size_t i) const { return Node(j_.at(i), ptr_ + "/" + std::to_string(i)); }

        std::size_t size() const
        {
            if (! j_.is_array())
                violation("expected an array");
            return j_.size();
        }

        template <typename F>
        void each(F&& f) const
        {
            const std::size_t n = size();
            for (std::size_t i = 0; i < n; ++i)
                f((*this)[i]);
        }

        std::string label() const
        {
            if (j_.is_string())
                return j_.get<std::string>();
            if (j_.is_number_integer())
                return j_.dump();
            violation("expected a label (string or integer)");
        }

        std::string string() const
        {
            if (! j_.is_string())
                violation("expected a string");
            return j_.get<std::string>();
        }

        Integer integer() const
        {
            if (j_.is_number_integer())
                return Integer(j_.get<long long>());
            if (j_.is_string()) {
                try {
                    return parse_integer(j_.get<std::string>());
                }
                catch (const Error&) {
                }
            }
            violation("expected an integer");
        }

        Index index() const
        {
            if (j_.is_number_unsigned() || (j_.is_number_integer() && j_.get<long long>() >= 0))
                return j_.get<Index>();
            violation("expected a non-negative index");
        }

        Rational rational() const
        {
            if (j_.is_number_integer())
                return Rational(j_.get<long long>());
            if (j_.is_string()) {
                try {
                    return parse_rational(j_.get<std::string>());
                }
                catch (const Error&) {
                }
            }
            violation("expected a rational \"p/q\"");
        }

        bool boolean() const
        {
            if (! j_.is_boolean())
                violation("expected a boolean");
            return j_.get<bool>();
        }

        IntVector integers() const
        {
            IntVector out;
            each([&](const Node& n) { out.push_back(n.integer()); });
            return out;
        }

        std::vector<Index> indices() const
        {
            std::vector<Index> out;
            each([&](const Node& n) { out.push_back(n.index()); });
            return out;
        }

        std::vector<std::string> labels() const
        {
            std::vector<std::string> out;
            each([&](const Node& n) { out.push_back(n.label()); });
            return out;
        }

        const std::string& pointer() const { return ptr_; }

    private:
        const Json& j_;
        std::string ptr_;
    };

    Json header(const std::string& kind)
    {
        return Json{{"kind", kind}, {"version", kFormatVersion}};
    }

    void expect_kind(const Node& root, const std::string& kind)
    {
        const std::string found = root["kind"].string();
        if (found != kind)
            root["kind"].violation("expected kind '" + kind + "', found '" + found + "'");
        if (root["version"].integer() != kFormatVersion)
            root["version"].violation("unsupported version");
    }

    Json integers_to_json(const IntVector& v)
    {
        Json out = Json::array();
        for (const auto& x : v)
            out.push_back(integer_to_json(x));
        return out;
    }

    Json matrix_to_json(const std::vector<IntVector>& m)
    {
        Json out = Json::array();
        for (const auto& row : m)
            out.push_back(integers_to_json(row));
        return out;
    }

    std::vector<IntVector> matrix_from(const Node& n)
    {
        std::vector<IntVector> out;
        n.each([&](const Node& row) { out.push_back(row.integers()); });
        return out;
    }

    Index lookup(const Node& at, const std::vector<std::string>& names, const std::string& name, const char* what)
    {
        for (Index i = 0; i < names.size(); ++i)
            if (names[i] == name)
                return i;
        at.violation(std::string("unknown ") + what + " '" + name + "'");
    }
}

Json to_json(const LabelCoverInstance& lc)
{
    Json j = header("label_cover");
    j["a"] = lc.a_vertices;
    j["b"] = lc.b_vertices;
    j["sigma_a"] = lc.sigma_a;
    j["sigma_b"] = lc.sigma_b;
    Json edges = Json::array();
    for (Index e = 0; e < lc.edges.size(); ++e) {
        Json pi = Json::object();
        for (Index x = 0; x < lc.sigma_a.size() && x < lc.projections[e].size(); ++x)
            pi[lc.sigma_a[x]] = lc.sigma_b.at(lc.projections[e][x]);
        edges.push_back({{"a", lc.a_vertices.at(lc.edges[e].a)}, {"b", lc.b_vertices.at(lc.edges[e].b)}, {"pi", pi}});
    }
    j["edges"] = edges;
    return j;
}

LabelCoverInstance label_cover_from_json(const Json& j)
{
    Node root(j);
    expect_kind(root, "label_cover");
    LabelCoverInstance lc;
    lc.a_vertices = root["a"].labels();
    lc.b_vertices = root["b"].labels();
    lc.sigma_a = root["sigma_a"].labels();
    lc.sigma_b = root["sigma_b"].labels();
    root["edges"].each([&](const Node& e) {
        const Index a = lookup(e["a"], lc.a_vertices, e["a"].label(), "A-vertex");
        const Index b = lookup(e["b"], lc.b_vertices, e["b"].label(), "B-vertex");
        lc.edges.push_back({a, b});
        std::vector<Index> table(lc.sigma_a.size(), kNoLabel);
        const Node pi = e["pi"];
        for (Index x = 0; x < lc.sigma_a.size(); ++x)
            if (pi.has(lc.sigma_a[x]))
                table[x] = lookup(pi[lc.sigma_a[x]], lc.sigma_b, pi[lc.sigma_a[x]].label(), "B-label");
        lc.projections.push_back(std::move(table));
    });
    validate_label_cover(lc);
    return lc;
}

Json to_json(const SsatInstance& ssat)
{
    Json j = header("ssat");
    j["variables"] = ssat.variables;
    j["field_values"] = ssat.field_values;
    Json tests = Json::array();
    for (const auto& t : ssat.tests) {
        Json vars = Json::array();
        for (Index x : t.variables)
            vars.push_back(ssat.variables.at(x));
        Json rows = Json::array();
        for (const auto& r : t.assignments) {
            Json row = Json::array();
            for (Index v : r)
                row.push_back(ssat.field_values.at(v));
            rows.push_back(row);
        }
        tests.push_back({{"name", t.name}, {"variables", vars}, {"assignments", rows}});
    }
    j["tests"] = tests;
    if (ssat.provenance) {
        Json labels = Json::array();
        for (const auto& l : ssat.provenance->assignment_label)
            labels.push_back(l);
        j["provenance"] = {{"test_to_b", ssat.provenance->test_to_b},
            {"variable_to_a", ssat.provenance->variable_to_a}, {"assignment_label", labels}};
    }
    return j;
}

SsatInstance ssat_from_json(const Json& j)
{
    Node root(j);
    expect_kind(root, "ssat");
    SsatInstance ssat;
    ssat.variables = root["variables"].labels();
    ssat.field_values = root["field_values"].labels();
    root["tests"].each([&](const Node& t) {
        SsatTest test;
        test.name = t["name"].label();
        t["variables"].each([&](const Node& v) { test.variables.push_back(lookup(v, ssat.variables, v.label(), "variable")); });
        t["assignments"].each([&](const Node& r) {
            std::vector<Index> tuple;
            r.each([&](const Node& v) { tuple.push_back(lookup(v, ssat.field_values, v.label(), "field value")); });
            test.assignments.push_back(std::move(tuple));
        });
        ssat.tests.push_back(std::move(test));
    });
    if (root.has("provenance")) {
        const Node p = root["provenance"];
        LcProvenance prov;
        prov.test_to_b = p["test_to_b"].indices();
        prov.variable_to_a = p["variable_to_a"].indices();
        p["assignment_label"].each([&](const Node& l) { prov.assignment_label.push_back(l.indices()); });
        ssat.provenance = std::move(prov);
    }
    validate_ssat(ssat);
    return ssat;
}

Json to_json(const SuperAssignment& s)
{
    Json j = header("superassignment");
    j["weights"] = matrix_to_json(s.weights);
    return j;
}

SuperAssignment superassignment_from_json(const Json& j)
{
    Node root(j);
    expect_kind(root, "superassignment");
    return SuperAssignment{matrix_from(root["weights"])};
}

Json to_json(const SisInstance& sis)
{
    Json j = header("sis");
    j["matrix"] = matrix_to_json(sis.matrix);
    j["target"] = integers_to_json(sis.target);
    j["bound"] = integer_to_json(sis.bound);
    Json cols = Json::array();
    for (const auto& [t, r] : sis.column_provenance)
        cols.push_back({t, r});
    j["column_provenance"] = cols;
    Json rows = Json::array();
    for (const auto& tag : sis.row_provenance) {
        if (tag.kind == SisRowTag::Kind::NonTriviality)
            rows.push_back({{"kind", "nontriviality"}, {"test", tag.test_i}});
        else
            rows.push_back({{"kind", "consistency"}, {"test_i", tag.test_i}, {"test_j", tag.test_j},
                {"variable", tag.variable}, {"value", tag.value}});
    }
    j["row_provenance"] = rows;
    return j;
}

SisInstance sis_from_json(const Json& j)
{
    Node root(j);
    expect_kind(root, "sis");
    SisInstance sis;
    sis.matrix = matrix_from(root["matrix"]);
    sis.target = root["target"].integers();
    sis.bound = root["bound"].integer();
    if (root.has("column_provenance"))
        root["column_provenance"].each([&](const Node& c) {
            if (c.size() != 2)
                c.violation("expected [test, assignment]");
            sis.column_provenance.emplace_back(c[0].index(), c[1].index());
        });
    if (root.has("row_provenance"))
        root["row_provenance"].each([&](const Node& r) {
            SisRowTag tag;
            const std::string kind = r["kind"].string();
            if (kind == "nontriviality") {
                tag.kind = SisRowTag::Kind::NonTriviality;
                tag.test_i = r["test"].index();
            }
            else if (kind == "consistency") {
                tag.kind = SisRowTag::Kind::Consistency;
                tag.test_i = r["test_i"].index();
                tag.test_j = r["test_j"].index();
                tag.variable = r["variable"].index();
                tag.value = r["value"].index();
            }
            else
                r["kind"].violation("unknown row kind '" + kind + "'");
            sis.row_provenance.push_back(tag);
        });
    validate_sis(sis);
    return sis;
}

Json to_json(const NcpInstance& ncp)
{
    Json j = header("ncp");
    j["modulus"] = integer_to_json(ncp.modulus);
    j["matrix"] = matrix_to_json(ncp.matrix);
    j["target"] = integers_to_json(ncp.target);
    j["bound"] = integer_to_json(ncp.bound);
    j["replication"] = integer_to_json(ncp.replication);
    j["gap"] = integer_to_json(ncp.gap);
    return j;
}

NcpInstance ncp_from_json(const Json& j)
{
    Node root(j);
    expect_kind(root, "ncp");
    NcpInstance ncp;
    ncp.modulus = root["modulus"].integer();
    ncp.matrix = matrix_from(root["matrix"]);
    ncp.target = root["target"].integers();
    ncp.bound = root["bound"].integer();
    ncp.replication = root["replication"].integer();
    ncp.gap = root.has("gap") ? root["gap"].integer() : Integer(1);
    validate_ncp(ncp);
    return ncp;
}

namespace {
    LhpGroup group_from(const Node& n)
    {
        static const std::map<std::string, LhpGroup> groups{{"G1", LhpGroup::G1}, {"G2", LhpGroup::G2},
            {"G3", LhpGroup::G3}, {"G4", LhpGroup::G4}, {"G5", LhpGroup::G5}};
        auto it = groups.find(n.string());
        if (it == groups.end())
            n.violation("unknown group");
        return it->second;
    }

    Sense sense_from(const Node& n)
    {
        const std::string s = n.string();
        if (s == "GT")
            return Sense::GT;
        if (s == "LT")
            return Sense::LT;
        n.violation("sense must be GT or LT");
    }
}

Json to_json(const LhpSystem& lhp)
{
    Json j = header("lhp");
    j["num_x"] = lhp.num_x;
    j["u_param"] = integer_to_json(lhp.u_param);
    Json rows = Json::array();
    for (const auto& ineq : lhp.inequalities) {
        Json cx = Json::array();
        for (const auto& [idx, c] : ineq.coeff_x)
            cx.push_back({idx, rational_to_json(c)});
        rows.push_back({{"coeff_x", cx}, {"coeff_y", rational_to_json(ineq.coeff_y)},
            {"coeff_delta", rational_to_json(ineq.coeff_delta)}, {"sense", to_string(ineq.sense)},
            {"rhs", rational_to_json(ineq.rhs)}, {"group", to_string(ineq.group)}, {"copies_of", ineq.copies_of}});
    }
    j["inequalities"] = rows;
    return j;
}

LhpSystem lhp_from_json(const Json& j)
{
    Node root(j);
    expect_kind(root, "lhp");
    LhpSystem lhp;
    lhp.num_x = root["num_x"].index();
    lhp.u_param = root["u_param"].integer();
    root["inequalities"].each([&](const Node& r) {
        LhpInequality ineq;
        r["coeff_x"].each([&](const Node& c) {
            if (c.size() != 2)
                c.violation("expected [index, coefficient]");
            ineq.coeff_x.emplace_back(c[0].index(), c[1].rational());
        });
        ineq.coeff_y = r["coeff_y"].rational();
        ineq.coeff_delta = r["coeff_delta"].rational();
        ineq.sense = sense_from(r["sense"]);
        ineq.rhs = r["rhs"].rational();
        ineq.group = group_from(r["group"]);
        ineq.copies_of = r["copies_of"].string();
        lhp.inequalities.push_back(std::move(ineq));
    });
    validate_lhp(lhp);
    return lhp;
}

Json to_json(const LhpAssignment& a)
{
    Json j = header("lhp_assignment");
    Json xs = Json::array();
    for (const auto& x : a.x_values)
        xs.push_back(rational_to_json(x));
    j["x"] = xs;
    j["y"] = rational_to_json(a.y_value);
    j["delta"] = a.delta_value ? rational_to_json(*a.delta_value) : Json("eps");
    return j;
}

LhpAssignment lhp_assignment_from_json(const Json& j)
{
    Node root(j);
    expect_kind(root, "lhp_assignment");
    LhpAssignment a;
    root["x"].each([&](const Node& n) { a.x_values.push_back(n.rational()); });
    a.y_value = root["y"].rational();
    const Node d = root["delta"];
    if (! (j.at("delta").is_string() && j.at("delta").get<std::string>() == "eps"))
        a.delta_value = d.rational();
    return a;
}

Json to_json(const ListLabeling& lists)
{
    Json j = header("lists");
    Json ls = Json::array();
    for (const auto& l : lists.lists)
        ls.push_back(std::vector<Index>(l.begin(), l.end()));
    j["lists"] = ls;
    j["max_list_size"] = lists.max_list_size;
    return j;
}

ListLabeling list_labeling_from_json(const Json& j)
{
    Node root(j);
    expect_kind(root, "lists");
    std::vector<std::set<Index>> lists;
    root["lists"].each([&](const Node& l) {
        auto v = l.indices();
        lists.emplace_back(v.begin(), v.end());
    });
    return make_list_labeling(std::move(lists));
}

Json labeling_to_json(const LabelCoverInstance& lc, const Labeling& lab)
{
    Json j = header("labeling");
    Json pa = Json::object();
    for (Index a = 0; a < lab.phi_a.size(); ++a)
        pa[lc.a_vertices.at(a)] = lc.sigma_a.at(lab.phi_a[a]);
    j["phi_a"] = pa;
    if (lab.phi_b) {
        Json pb = Json::object();
        for (Index b = 0; b < lab.phi_b->size(); ++b)
            pb[lc.b_vertices.at(b)] = lc.sigma_b.at((*lab.phi_b)[b]);
        j["phi_b"] = pb;
    }
    return j;
}

Labeling labeling_from_json(const LabelCoverInstance& lc, const Json& j)
{
    Node root(j);
    expect_kind(root, "labeling");
    Labeling lab;
    const Node pa = root["phi_a"];
    for (const auto& name : lc.a_vertices) {
        const Node v = pa[name];
        lab.phi_a.push_back(lookup(v, lc.sigma_a, v.label(), "A-label"));
    }
    if (root.has("phi_b")) {
        const Node pb = root["phi_b"];
        std::vector<Index> phi_b;
        for (const auto& name : lc.b_vertices) {
            const Node v = pb[name];
            phi_b.push_back(lookup(v, lc.sigma_b, v.label(), "B-label"));
        }
        lab.phi_b = std::move(phi_b);
    }
    return lab;
}

std::string kind_of(const AnyInstance& instance)
{
    static const char* names[] = {"label_cover", "ssat", "sis", "ncp", "lhp"};
    return names[instance.index()];
}

Json to_json(const AnyInstance& instance)
{
    return std::visit([](const auto& x) { return to_json(x); }, instance);
}

AnyInstance instance_from_json(const Json& j, const std::string& kind)
{
    Node root(j);
    const std::string found = root["kind"].string();
    if (! kind.empty() && found != kind)
        root["kind"].violation("expected kind '" + kind + "', found '" + found + "'");
    if (found == "label_cover")
        return label_cover_from_json(j);
    if (found == "ssat")
        return ssat_from_json(j);
    if (found == "sis")
        return sis_from_json(j);
    if (found == "ncp")
        return ncp_from_json(j);
    if (found == "lhp")
        return lhp_from_json(j);
    root["kind"].violation("unknown instance kind '" + found + "'");
}

AnyInstance read_instance(const std::string& path, const std::string& kind)
{
    return instance_from_json(read_json_file(path), kind);
}

void write_instance(const std::string& path, const AnyInstance& instance)
{
    write_text_file(path, canonical_dump(to_json(instance)));
}

namespace {
    std::string join(const IntVector& v)
    {
        std::string out;
        for (Index i = 0; i < v.size(); ++i) {
            if (i)
                out += ' ';
            out += v[i].str();
        }
        return out;
    }

    class TextReader {
    public:
        explicit TextReader(const std::string& text)
        {
            std::istringstream in(text);
            std::string line;
            while (std::getline(in, line)) {
                std::istringstream ls(line);
                std::vector<std::string> tokens;
                std::string tok;
                while (ls >> tok)
                    tokens.push_back(tok);
                if (! tokens.empty())
                    lines_.push_back(std::move(tokens));
            }
        }

        IntVector line(std::size_t expected)
        {
            if (next_ >= lines_.size())
                fail(ErrorCode::SchemaViolation, "line " + std::to_string(next_ + 1) + ": unexpected end of input");
            const auto& tokens = lines_[next_];
            if (tokens.size() != expected)
                fail(ErrorCode::SchemaViolation, "line " + std::to_string(next_ + 1) + ": expected " +
                        std::to_string(expected) + " integers, found " + std::to_string(tokens.size()));
            IntVector out;
            for (const auto& t : tokens) {
                try {
                    out.push_back(parse_integer(t));
                }
                catch (const Error&) {
                    fail(ErrorCode::SchemaViolation, "line " + std::to_string(next_ + 1) + ": bad integer '" + t + "'");
                }
            }
            ++next_;
            return out;
        }

        void finish() const
        {
            if (next_ != lines_.size())
                fail(ErrorCode::SchemaViolation, "line " + std::to_string(next_ + 1) + ": trailing content");
        }

    private:
        std::vector<std::vector<std::string>> lines_;
        std::size_t next_ = 0;
    };

    std::size_t count(const Integer& v)
    {
        if (v < 0 || v > 1'000'000)
            fail(ErrorCode::SchemaViolation, "dimension " + v.str() + " out of range");
        return v.convert_to<std::size_t>();
    }
}

std::string sis_to_text(const SisInstance& sis)
{
    std::string out = std::to_string(sis.rows()) + " " + std::to_string(sis.cols()) + " " + sis.bound.str() + "\n";
    for (const auto& row : sis.matrix)
        out += join(row) + "\n";
    out += join(sis.target) + "\n";
    return out;
}

SisInstance sis_from_text(const std::string& text)
{
    TextReader in(text);
    const IntVector head = in.line(3);
    const std::size_t n = count(head[0]), m = count(head[1]);
    SisInstance sis;
    sis.bound = head[2];
    for (std::size_t i = 0; i < n; ++i)
        sis.matrix.push_back(in.line(m));
    sis.target = in.line(n);
    in.finish();
    validate_sis(sis);
    return sis;
}

std::string ncp_to_text(const NcpInstance& ncp)
{
    const std::size_t cols = ncp.matrix.empty() ? 0 : ncp.matrix.front().size();
    std::string out = std::to_string(ncp.matrix.size()) + " " + std::to_string(cols) + " " + ncp.modulus.str() + " " +
        ncp.bound.str() + "\n";
    for (const auto& row : ncp.matrix)
        out += join(row) + "\n";
    out += join(ncp.target) + "\n";
    return out;
}

NcpInstance ncp_from_text(const std::string& text)
{
    TextReader in(text);
    const IntVector head = in.line(4);
    const std::size_t n = count(head[0]), m = count(head[1]);
    NcpInstance ncp;
    ncp.modulus = head[2];
    ncp.bound = head[3];
    ncp.replication = 0;
    for (std::size_t i = 0; i < n; ++i)
        ncp.matrix.push_back(in.line(m));
    ncp.target = in.line(n);
    in.finish();
    validate_ncp(ncp);
    return ncp;
}

std::string sha256_hex(const std::string& bytes)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
    std::ostringstream out;
    for (unsigned int i = 0; i < len; ++i)
        out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    return out.str();
}

}  // namespace gapforge
