#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eolab/bijections.hpp"
#include "eolab/harness.hpp"
#include "eolab/identities.hpp"
#include "eolab/overpartitions.hpp"
#include "eolab/partitions.hpp"

namespace py = pybind11;
using namespace eolab;

namespace {

using Parts = std::vector<int>;

Partition to_partition(const Parts& parts) {
    return Partition::from_unsorted(parts);
}

py::tuple to_tuple(const Partition& p) {
    return py::cast(Parts(p.parts().begin(), p.parts().end()));
}

py::tuple pair(const Partition& a, const Partition& b) {
    return py::make_tuple(to_tuple(a), to_tuple(b));
}

py::list partitions(const std::vector<Partition>& ps) {
    py::list out;
    for (const Partition& p : ps) {
        out.append(to_tuple(p));
    }
    return out;
}

py::list rows(const std::vector<ClassCountRow>& t) {
    py::list out;
    for (const ClassCountRow& r : t) {
        out.append(py::make_tuple(r.n, r.c0, r.c2));
    }
    return out;
}

py::dict series_dict(const ZQSeries& s) {
    py::dict out;
    for (int n = 0; n <= s.order().value(); ++n) {
        for (const auto& [m, c] : s.row(n)) {
            out[py::make_tuple(m, n)] = c;
        }
    }
    return out;
}

py::dict report_dict(const VerificationReport& r) {
    py::dict d;
    d["name"] = r.name;
    d["order"] = r.order;
    py::dict params;
    for (const auto& [k, v] : r.params) {
        params[py::str(k)] = v;
    }
    d["params"] = params;
    d["passed"] = r.passed();
    d["checks"] = r.checks;
    if (r.mismatch) {
        d["mismatch"] = py::dict(py::arg("comparison") = r.mismatch->comparison,
                                 py::arg("n") = r.mismatch->n, py::arg("m") = r.mismatch->m,
                                 py::arg("left") = r.mismatch->left,
                                 py::arg("right") = r.mismatch->right);
    } else {
        d["mismatch"] = py::none();
    }
    d["witnesses"] = r.witnesses;
    d["notes"] = r.notes;
    return d;
}

} // namespace

PYBIND11_MODULE(_eolab, m) {
    m.doc() = "Exact checks for partitions with even parts below odd parts";

    auto base = py::register_exception<Error>(m, "EolabError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<ParameterError>(m, "ParameterError", base.ptr());

    m.def("gen_partitions", [](int n) { return partitions(gen_partitions(n)); }, py::arg("n"));
    m.def("gen_eo_star", [](int n) { return partitions(gen_eo_star(n)); }, py::arg("n"));
    m.def("is_eo_star", [](const Parts& p) { return is_eo_star(to_partition(p)); });
    m.def("classify_eo", [](const Parts& p) { return to_string(classify_eo(to_partition(p))); });
    m.def("eoc", [](const Parts& p) { return eoc(to_partition(p)); });
    m.def("conjugate", [](const Parts& p) { return to_tuple(conjugate(to_partition(p))); });
    m.def("durfee_width", [](const Parts& p, int r) { return durfee_width(to_partition(p), r); },
          py::arg("parts"), py::arg("r"));

    m.def("eo_table", [](int max_n) { return rows(eo_table(max_n)); }, py::arg("max_n") = 30);
    m.def("eobar_table", [](int max_n) { return rows(eobar_table(max_n)); },
          py::arg("max_n") = 30);
    m.def("crank_distribution", &crank_distribution, py::arg("n"));
    m.def("crank_series", [](int order) { return series_dict(crank_series(TruncOrder(order))); },
          py::arg("order"), "Nonzero coefficients as {(z_exp, q_exp): value}.");
    m.def("eobar_series",
          [](int order, bool weighted) {
              return series_dict(eobar_weighted_series(TruncOrder(order), weighted));
          },
          py::arg("order"), py::arg("weighted") = true);

    m.def("catalog", [] {
        py::list out;
        for (const CatalogEntry& e : catalog()) {
            out.append(py::make_tuple(e.name, e.summary));
        }
        return out;
    });
    m.def(
        "verify",
        [](const std::string& name, int order, std::optional<int> r, std::optional<int> z_exp) {
            const CatalogEntry* e = find_catalog_entry(name);
            if (e == nullptr) {
                throw ParameterError("unknown identity '" + name + "'");
            }
            py::list out;
            for (const VerificationReport& rep : e->run(CatalogOptions{order, r, z_exp})) {
                out.append(report_dict(rep));
            }
            return out;
        },
        py::arg("name"), py::arg("order") = 30, py::arg("r") = py::none(),
        py::arg("z_exp") = py::none());

    m.def(
        "phi",
        [](const Parts& a, const Parts& b, int r, bool inverse) {
            const PhiResult res = inverse ? phi_inverse(to_partition(a), to_partition(b), r)
                                          : phi_forward(to_partition(a), to_partition(b), r);
            return py::make_tuple(to_tuple(res.first), to_tuple(res.second), to_string(res.which));
        },
        py::arg("first"), py::arg("second"), py::arg("r"), py::arg("inverse") = false);
    m.def(
        "lemma2",
        [](const Parts& a, const Parts& b, int r, bool inverse) {
            const PartitionPair res = inverse ? lemma2_inverse(to_partition(a), to_partition(b), r)
                                              : lemma2_forward(to_partition(a), to_partition(b), r);
            return pair(res.first, res.second);
        },
        py::arg("first"), py::arg("second"), py::arg("r"), py::arg("inverse") = false);
    m.def(
        "lemma3",
        [](const Parts& a, const Parts& b, int r, bool inverse) {
            const PartitionPair res = inverse ? lemma3_inverse(to_partition(a), to_partition(b), r)
                                              : lemma3_forward(to_partition(a), to_partition(b), r);
            return pair(res.first, res.second);
        },
        py::arg("first"), py::arg("second"), py::arg("r"), py::arg("inverse") = false);
    m.def(
        "crank_bijection",
        [](const Parts& a, const Parts& b, int r, bool inverse) {
            const CrankResult res =
                inverse ? crank_bijection_inverse(to_partition(a), to_partition(b), r)
                        : crank_bijection(to_partition(a), to_partition(b), r);
            return py::make_tuple(to_tuple(res.first), to_tuple(res.second),
                                  to_string(res.middle));
        },
        py::arg("first"), py::arg("second"), py::arg("r"), py::arg("inverse") = false);

    m.def(
        "run_harness",
        [](const std::string& map, int r, int max_weight) {
            HarnessReport h;
            {
                py::gil_scoped_release release;
                h = run_harness(parse_bijection_map(map), r, max_weight);
            }
            py::dict d;
            d["map"] = to_string(h.map);
            d["r"] = h.r;
            d["max_weight"] = h.max_weight;
            d["domain_size"] = h.domain_size;
            d["codomain_size"] = h.codomain_size;
            d["case_counts"] = h.case_counts;
            d["failure_count"] = h.failure_count;
            d["failures"] = h.failures;
            d["passed"] = h.passed();
            return d;
        },
        py::arg("map"), py::arg("r"), py::arg("max_weight"));
}
