#include "gapforge/cli.hpp"
#include "gapforge/error.hpp"
#include "gapforge/fixtures.hpp"
#include "gapforge/genlab.hpp"
#include "gapforge/io.hpp"
#include "gapforge/oracles.hpp"
#include "gapforge/pipeline.hpp"
#include "gapforge/reductions.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace gapforge;

// Instances and results cross the boundary as canonical JSON text; the
// Python package turns them into dicts.
namespace {
    Integer big(const py::handle& v)
    {
        return parse_integer(py::str(v).cast<std::string>());
    }

    std::optional<Integer> maybe_big(const py::object& v)
    {
        if (v.is_none())
            return std::nullopt;
        return big(v);
    }

    template <class T>
    T parse(const std::string& text, const std::string& kind)
    {
        return std::get<T>(instance_from_json(Json::parse(text), kind));
    }

    std::string dump(const Json& j)
    {
        return canonical_dump(j);
    }

    Json int_vector(const IntVector& v)
    {
        Json out = Json::array();
        for (const auto& x : v)
            out.push_back(integer_to_json(x));
        return out;
    }

    SearchBudget budget(const py::object& box, const std::string& mode)
    {
        SearchBudget b;
        b.coeff_box = big(box);
        b.max_states = default_max_states();
        if (mode == "l1")
            b.mode = SsatMode::L1;
        else if (mode == "linf")
            b.mode = SsatMode::Linf;
        else
            fail(ErrorCode::BadParameters, "mode must be 'l1' or 'linf', got '" + mode + "'");
        return b;
    }
}

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Native core of gapforge";

    static py::exception<Error> error_type(m, "NativeError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        }
        catch (const Error& e) {
            py::tuple args = py::make_tuple(std::string(to_string(e.code())), e.detail());
            PyErr_SetObject(error_type.ptr(), args.ptr());
        }
    });

    m.def("fixture", [](const std::string& name) { return dump(to_json(AnyInstance(fixtures::by_name(name)))); });
    m.def("fixture_names", &fixtures::names);

    m.def("lc_to_ssat", [](const std::string& lc) {
        return dump(to_json(AnyInstance(lc_to_ssat(parse<LabelCoverInstance>(lc, "label_cover")))));
    });
    m.def("ssat_to_sis", [](const std::string& ssat) {
        return dump(to_json(AnyInstance(ssat_to_sis(parse<SsatInstance>(ssat, "ssat")))));
    });
    m.def(
        "sis_to_ncp",
        [](const std::string& sis, const py::object& g, const py::object& d_rep, const py::object& q) {
            return dump(
                to_json(AnyInstance(sis_to_ncp(parse<SisInstance>(sis, "sis"), big(g), maybe_big(d_rep), maybe_big(q)))));
        },
        py::arg("sis"), py::arg("g"), py::arg("d_rep") = py::none(), py::arg("q") = py::none());
    m.def(
        "sis_to_lhp",
        [](const std::string& sis, const py::object& u, const py::object& g) {
            return dump(to_json(AnyInstance(sis_to_lhp(parse<SisInstance>(sis, "sis"), maybe_big(u), big(g)))));
        },
        py::arg("sis"), py::arg("u") = py::none(), py::arg("g") = 1);

    m.def("solve_lc", [](const std::string& text) {
        auto lc = parse<LabelCoverInstance>(text, "label_cover");
        auto r = solve_lc_max(lc);
        return dump({{"optimum", rational_to_json(r.best_fraction)}, {"witness", labeling_to_json(lc, r.witness)},
            {"states_visited", integer_to_json(r.states_visited)}});
    });
    m.def(
        "solve_ssat",
        [](const std::string& text, const py::object& box, const std::string& mode) {
            auto r = solve_ssat_min_norm(parse<SsatInstance>(text, "ssat"), budget(box, mode));
            return dump({{"optimum", r.min_norm ? rational_to_json(*r.min_norm) : Json("inf")},
                {"witness", r.witness ? to_json(*r.witness) : Json(nullptr)}, {"mode", to_string(r.mode)},
                {"states_visited", integer_to_json(r.states_visited)}});
        },
        py::arg("ssat"), py::arg("box") = 2, py::arg("mode") = "l1");
    m.def(
        "solve_sis",
        [](const std::string& text, const py::object& box) {
            auto r = solve_sis_min(parse<SisInstance>(text, "sis"), budget(box, "l1"));
            return dump({{"optimum", r.min_l1 ? integer_to_json(*r.min_l1) : Json("inf")},
                {"witness", r.witness ? int_vector(*r.witness) : Json(nullptr)},
                {"states_visited", integer_to_json(r.states_visited)}});
        },
        py::arg("sis"), py::arg("box") = 2);
    m.def(
        "solve_ncp",
        [](const std::string& text, const py::object& box, bool full_field) {
            auto r = solve_ncp_min(parse<NcpInstance>(text, "ncp"), budget(box, "l1"), full_field);
            return dump({{"optimum", r.min_dist}, {"witness", int_vector(r.witness)}, {"mode", to_string(r.mode)},
                {"states_visited", integer_to_json(r.states_visited)}});
        },
        py::arg("ncp"), py::arg("box") = 1, py::arg("full_field") = true);
    m.def("solve_lhp", [](const std::string& text) {
        auto lhp = parse<LhpSystem>(text, "lhp");
        auto r = solve_lhp_min(lhp, default_lhp_grid(lhp.num_x));
        return dump({{"optimum", r.min_violations}, {"witness", to_json(r.witness)},
            {"states_visited", integer_to_json(r.states_visited)}});
    });

    m.def(
        "run_chain",
        [](const std::string& text, const py::object& g, const py::object& box, bool run_oracles) {
            ChainParams params;
            params.g = big(g);
            params.box = big(box);
            params.run_oracles = run_oracles;
            params.max_states = default_max_states();
            return dump(to_json(run_chain(parse<LabelCoverInstance>(text, "label_cover"), params)));
        },
        py::arg("lc"), py::arg("g") = 1, py::arg("box") = 2, py::arg("run_oracles") = true);

    m.def(
        "gen_lc",
        [](Index num_a, Index num_b, Index d_b, Index sigma_a, Index sigma_b, Index p, bool planted,
            std::uint64_t seed) {
            auto gen = gen_label_cover(GenSpec{num_a, num_b, d_b, sigma_a, sigma_b, p, planted, seed});
            return dump(to_json(AnyInstance(gen.instance)));
        },
        py::arg("num_a"), py::arg("num_b"), py::arg("d_b"), py::arg("sigma_a") = 2, py::arg("sigma_b") = 2,
        py::arg("p") = 1, py::arg("planted") = true, py::arg("seed") = 0);
    m.def("frustrate", [](const std::string& text, Index flips, std::uint64_t seed) {
        return dump(to_json(AnyInstance(frustrate(parse<LabelCoverInstance>(text, "label_cover"), flips, seed))));
    });

    m.def("sha256_hex", &sha256_hex);
    m.def("cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli_main(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
