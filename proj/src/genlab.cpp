#include "gapforge/genlab.hpp"

#include "gapforge/error.hpp"
#include "gapforge/random.hpp"

#include <algorithm>
#include <numeric>

namespace gapforge {

void check_gen_spec(const GenSpec& spec)
{
    auto bad = [](const std::string& why) { fail(ErrorCode::InfeasibleSpec, why); };
    if (spec.num_a == 0 || spec.num_b == 0)
        bad("both sides need at least one vertex");
    if (spec.d_b == 0)
        bad("d_b must be at least 1");
    if (spec.d_b > spec.num_a)
        bad("d_b = " + std::to_string(spec.d_b) + " exceeds num_a = " + std::to_string(spec.num_a));
    if (spec.num_b * spec.d_b < spec.num_a)
        bad("num_b·d_b < num_a leaves A-vertices isolated");
    if (spec.sigma_a_size == 0 || spec.sigma_b_size == 0)
        bad("alphabets must be nonempty");
    if (spec.arity_p == 0 || spec.sigma_a_size < spec.arity_p)
        bad("arity p must lie in [1, |Σ_A|]");
    if (spec.sigma_a_size > spec.arity_p * spec.sigma_b_size)
        bad("|Σ_A| > p·|Σ_B|: no total p-to-1 table exists");
}

namespace {
    std::vector<std::string> numbered(const std::string& prefix, Index n)
    {
        std::vector<std::string> out;
        for (Index i = 0; i < n; ++i)
            out.push_back(prefix + std::to_string(i));
        return out;
    }

    std::vector<Index> draw_table(SeededStream& rng, const GenSpec& spec, std::optional<std::pair<Index, Index>> fixed)
    {
        std::vector<Index> table(spec.sigma_a_size, kNoLabel);
        std::vector<Index> load(spec.sigma_b_size, 0);
        if (fixed) {
            table[fixed->first] = fixed->second;
            ++load[fixed->second];
        }
        for (Index x = 0; x < spec.sigma_a_size; ++x) {
            if (table[x] != kNoLabel)
                continue;
            std::vector<Index> open;
            for (Index y = 0; y < spec.sigma_b_size; ++y)
                if (load[y] < spec.arity_p)
                    open.push_back(y);
            const Index y = open[rng.below(open.size())];
            table[x] = y;
            ++load[y];
        }
        return table;
    }
}

GeneratedLc gen_label_cover(const GenSpec& spec)
{
    check_gen_spec(spec);
    SeededStream rng(derive_seed(spec.seed, 0));

    GeneratedLc out;
    out.spec = spec;
    auto& lc = out.instance;
    lc.a_vertices = numbered("a", spec.num_a);
    lc.b_vertices = numbered("b", spec.num_b);
    lc.sigma_a = numbered("", spec.sigma_a_size);
    lc.sigma_b = numbered("", spec.sigma_b_size);

    std::vector<Index> order(spec.num_a);
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    for (Index b = 0; b < spec.num_b; ++b) {
        std::vector<Index> nbrs;
        for (Index k = 0; k < spec.d_b; ++k)
            nbrs.push_back(order[(b * spec.d_b + k) % spec.num_a]);
        std::sort(nbrs.begin(), nbrs.end());
        for (Index a : nbrs)
            lc.edges.push_back({a, b});
    }

    if (spec.planted) {
        Labeling hidden;
        for (Index a = 0; a < spec.num_a; ++a)
            hidden.phi_a.push_back(rng.below(spec.sigma_a_size));
        std::vector<Index> phi_b;
        for (Index b = 0; b < spec.num_b; ++b)
            phi_b.push_back(rng.below(spec.sigma_b_size));
        hidden.phi_b = phi_b;
        for (const auto& e : lc.edges)
            lc.projections.push_back(draw_table(rng, spec, std::pair{hidden.phi_a[e.a], phi_b[e.b]}));
        out.planted = hidden;
    }
    else {
        for (Index e = 0; e < lc.edges.size(); ++e)
            lc.projections.push_back(draw_table(rng, spec, std::nullopt));
    }
    validate_label_cover(lc);
    return out;
}

std::vector<Index> frustrated_edges(const LabelCoverInstance& lc, Index num_flips, std::uint64_t seed)
{
    if (num_flips > lc.edges.size())
        fail(ErrorCode::BadParameters,
            "cannot twist " + std::to_string(num_flips) + " of " + std::to_string(lc.edges.size()) + " edges");
    SeededStream rng(derive_seed(seed, 1));
    std::vector<Index> edges(lc.edges.size());
    std::iota(edges.begin(), edges.end(), 0);
    rng.shuffle(edges);
    edges.resize(num_flips);
    std::sort(edges.begin(), edges.end());
    return edges;
}

LabelCoverInstance frustrate(const LabelCoverInstance& lc, Index num_flips, std::uint64_t seed)
{
    validate_label_cover(lc);
    LabelCoverInstance out = lc;
    const Index nb = lc.sigma_b.size();
    if (nb < 2)
        return out;
    SeededStream rng(derive_seed(seed, 2));
    for (Index e : frustrated_edges(lc, num_flips, seed)) {
        const Index shift = 1 + rng.below(nb - 1);
        for (auto& y : out.projections[e])
            y = (y + shift) % nb;
    }
    return out;
}

}  // namespace gapforge
