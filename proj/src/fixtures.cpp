#include "gapforge/fixtures.hpp"

#include "gapforge/error.hpp"
#include "gapforge/reductions.hpp"

namespace gapforge::fixtures {

LabelCoverInstance lc_id2()
{
    LabelCoverInstance lc;
    lc.a_vertices = {"a0", "a1"};
    lc.b_vertices = {"b0"};
    lc.sigma_a = {"0", "1"};
    lc.sigma_b = {"0", "1"};
    lc.edges = {{0, 0}, {1, 0}};
    lc.projections = {{0, 1}, {0, 1}};
    return lc;
}

LabelCoverInstance lc_cyc()
{
    LabelCoverInstance lc;
    lc.a_vertices = {"a0", "a1"};
    lc.b_vertices = {"b0", "b1"};
    lc.sigma_a = {"0", "1"};
    lc.sigma_b = {"0", "1"};
    lc.edges = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    lc.projections = {{0, 1}, {0, 1}, {0, 1}, {1, 0}};
    return lc;
}

LabelCoverInstance lc_share()
{
    LabelCoverInstance lc;
    lc.a_vertices = {"x"};
    lc.b_vertices = {"psi1", "psi2"};
    lc.sigma_a = {"0", "1"};
    lc.sigma_b = {"0", "1"};
    lc.edges = {{0, 0}, {0, 1}};
    lc.projections = {{0, 1}, {0, 1}};
    return lc;
}

LabelCoverInstance lc_two_to_one()
{
    LabelCoverInstance lc;
    lc.a_vertices = {"a0", "a1"};
    lc.b_vertices = {"b0"};
    lc.sigma_a = {"0", "1"};
    lc.sigma_b = {"0"};
    lc.edges = {{0, 0}, {1, 0}};
    lc.projections = {{0, 0}, {0, 0}};
    return lc;
}

LabelCoverInstance lc_linf()
{
    LabelCoverInstance lc;
    lc.a_vertices = {"u", "w", "v"};
    lc.b_vertices = {"b1", "b2"};
    lc.sigma_a = {"0", "1"};
    lc.sigma_b = {"0"};
    lc.edges = {{0, 0}, {1, 0}, {2, 0}, {2, 1}};
    lc.projections = {{0, 0}, {0, 0}, {0, 0}, {0, 0}};
    return lc;
}

SsatInstance ssat_share()
{
    return lc_to_ssat(lc_share());
}

std::vector<std::string> names()
{
    return {"lc_id2", "lc_cyc", "lc_share", "lc_two_to_one", "lc_linf"};
}

LabelCoverInstance by_name(const std::string& name)
{
    if (name == "lc_id2")
        return lc_id2();
    if (name == "lc_cyc")
        return lc_cyc();
    if (name == "lc_share")
        return lc_share();
    if (name == "lc_two_to_one")
        return lc_two_to_one();
    if (name == "lc_linf")
        return lc_linf();
    fail(ErrorCode::FileNotFound, "no fixture named '" + name + "'");
}

}  // namespace gapforge::fixtures
