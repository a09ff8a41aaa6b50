#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "og10lat/catalog.hpp"
#include "og10lat/hassett.hpp"
#include "og10lat/lattice.hpp"
#include "og10lat/nikulin.hpp"
#include "og10lat/og10.hpp"
#include "og10lat/replay.hpp"

namespace py = pybind11;
using namespace og10lat;

namespace {

// arbitrary-precision bridging goes through decimal strings
py::int_ to_py(const Int& v) {
    return py::cast<py::int_>(py::module_::import("builtins").attr("int")(v.get_str()));
}

Int int_from_py(const py::handle& obj) {
    return Int(py::str(obj).cast<std::string>());
}

Rat rat_from_py(const py::handle& obj) {
    Rat r(py::str(obj).cast<std::string>());
    if (r.get_den() == 0)
        throw precondition_error("zero denominator in rational");
    r.canonicalize();
    return r;
}

RowVec vec_from_py(const py::sequence& seq) {
    RowVec v;
    v.reserve(seq.size());
    for (const auto& x : seq)
        v.push_back(int_from_py(x));
    return v;
}

RatVec rat_vec_from_py(const py::sequence& seq) {
    RatVec v;
    v.reserve(seq.size());
    for (const auto& x : seq)
        v.push_back(rat_from_py(x));
    return v;
}

py::list vec_to_py(const RowVec& v) {
    py::list out;
    for (const Int& x : v)
        out.append(to_py(x));
    return out;
}

py::list matrix_to_py(const IntMatrix& m) {
    py::list rows;
    for (std::size_t i = 0; i < m.rows(); ++i)
        rows.append(vec_to_py(m.row(i)));
    return rows;
}

IntMatrix matrix_from_py(const py::sequence& rows) {
    std::vector<RowVec> data;
    for (const auto& r : rows)
        data.push_back(vec_from_py(py::cast<py::sequence>(r)));
    std::size_t cols = data.empty() ? 0 : data[0].size();
    for (const auto& r : data)
        if (r.size() != cols)
            throw precondition_error("ragged rows in gram matrix");
    return IntMatrix::from_rows(data, cols);
}

py::tuple signature_to_py(const Signature& s) {
    return py::make_tuple(s.positive, s.negative, s.zero);
}

py::dict disc_group_to_py(const DiscriminantGroup& d) {
    py::dict out;
    py::list factors, qs;
    for (const Int& f : d.invariant_factors)
        factors.append(to_py(f));
    for (const Rat& q : d.q_values)
        qs.append(q.get_str());
    out["invariant_factors"] = factors;
    out["q_values"] = qs;
    py::list gens;
    for (std::size_t i = 0; i < d.generators.rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < d.generators.cols(); ++j)
            row.append(d.generators(i, j).get_str());
        gens.append(row);
    }
    out["generators"] = gens;
    return out;
}

class PyLattice {
public:
    explicit PyLattice(IntegralLattice l) : l_(std::move(l)) {}
    PyLattice(const py::sequence& gram, const std::string& name)
        : l_(matrix_from_py(gram), name) {}

    const IntegralLattice& get() const { return l_; }
    std::size_t rank() const { return l_.rank(); }
    py::int_ det() const { return to_py(l_.discriminant()); }
    py::tuple signature() const { return signature_to_py(l_.signature()); }
    bool is_even() const { return l_.is_even(); }
    py::int_ scale() const { return to_py(l_.scale()); }
    std::string name() const { return l_.label(); }
    py::list gram() const { return matrix_to_py(l_.gram()); }
    py::dict disc_group() const { return disc_group_to_py(og10lat::disc_group(l_)); }
    py::int_ divisibility(const py::sequence& v) const {
        return to_py(og10lat::divisibility(l_, vec_from_py(v)));
    }
    py::int_ pairing(const py::sequence& x, const py::sequence& y) const {
        return to_py(l_.pairing(vec_from_py(x), vec_from_py(y)));
    }
    std::string repr() const {
        std::string n = l_.label().empty() ? "lattice" : l_.label();
        return "<og10lat.Lattice " + n + " rank " + std::to_string(l_.rank()) + ">";
    }

private:
    IntegralLattice l_;
};

py::dict hassett_report_to_py(const hassett::HassettReport& r) {
    py::dict out;
    out["d"] = r.d;
    out["admissible"] = r.admissible;
    out["mod6"] = r.mod6;
    out["star2"] = r.star2;
    out["witness_n"] = r.witness_n ? py::cast(*r.witness_n) : py::none().cast<py::object>();
    out["star2prime"] = r.star2prime;
    out["lsv"] = r.lsv;
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact integral-lattice computations for OG10 moduli of cubic fourfolds";

    py::register_exception<precondition_error>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<math_error>(m, "MathError", PyExc_ArithmeticError);

    py::class_<PyLattice>(m, "Lattice")
        .def(py::init<const py::sequence&, const std::string&>(), py::arg("gram"),
             py::arg("name") = "")
        .def_property_readonly("rank", &PyLattice::rank)
        .def_property_readonly("name", &PyLattice::name)
        .def("det", &PyLattice::det)
        .def("signature", &PyLattice::signature)
        .def("is_even", &PyLattice::is_even)
        .def("scale", &PyLattice::scale)
        .def("gram", &PyLattice::gram)
        .def("disc_group", &PyLattice::disc_group)
        .def("divisibility", &PyLattice::divisibility, py::arg("v"))
        .def("pairing", &PyLattice::pairing, py::arg("x"), py::arg("y"))
        .def("__repr__", &PyLattice::repr);

    m.def("u", [](long n) { return PyLattice(catalog::make_u(n)); }, py::arg("n") = 1);
    m.def("a2", [] { return PyLattice(catalog::make_a2()); });
    m.def("e8_minus", [] { return PyLattice(catalog::make_e8_neg()); });
    m.def("span", [](const py::handle& n) { return PyLattice(catalog::make_span(int_from_py(n))); });
    m.def("direct_sum", [](const PyLattice& a, const PyLattice& b) {
        return PyLattice(direct_sum(a.get(), b.get()));
    });
    m.def("rescale", [](const PyLattice& l, const py::handle& n) {
        return PyLattice(rescale(l.get(), int_from_py(n)));
    });
    m.def("same_coarse_invariants", [](const PyLattice& a, const PyLattice& b) {
        return same_coarse_invariants(a.get(), b.get());
    });

    m.def("orth_complement", [](const PyLattice& l, const py::sequence& span) {
        std::vector<RowVec> rows;
        for (const auto& r : span)
            rows.push_back(vec_from_py(py::cast<py::sequence>(r)));
        Sublattice s(l.get(), IntMatrix::from_rows(rows, l.get().rank()));
        Sublattice c = orth_complement(s);
        py::dict out;
        out["basis"] = matrix_to_py(c.basis());
        out["lattice"] = PyLattice(c.induced());
        return out;
    });
    m.def("saturation", [](const PyLattice& l, const py::sequence& span) {
        std::vector<RowVec> rows;
        for (const auto& r : span)
            rows.push_back(vec_from_py(py::cast<py::sequence>(r)));
        SaturationResult sat = saturation(Sublattice(l.get(), IntMatrix::from_rows(rows, l.get().rank())));
        py::dict out;
        out["basis"] = matrix_to_py(sat.sublattice.basis());
        out["index"] = to_py(sat.index);
        return out;
    });
    m.def("overlattice", [](const PyLattice& l, const py::sequence& glue) {
        std::vector<GlueVector> gv;
        for (const auto& g : glue)
            gv.push_back(GlueVector{rat_vec_from_py(py::cast<py::sequence>(g))});
        Overlattice o = overlattice_from_glue(l.get(), gv);
        py::dict out;
        out["lattice"] = PyLattice(o.lattice);
        out["index"] = to_py(o.index);
        return out;
    });

    m.def("hassett_admissible", &hassett::admissible, py::arg("d"));
    m.def("hassett_star2", [](long d) {
        hassett::Star2Result r = hassett::star2(d);
        return py::make_tuple(r.holds,
                              r.witness ? py::cast(*r.witness) : py::none().cast<py::object>());
    });
    m.def("hassett_star2prime", &hassett::star2prime, py::arg("d"));
    m.def("discriminant_from_cycle", &hassett::discriminant_from_cycle, py::arg("x"),
          py::arg("y"));
    m.def("torsor_trivializable", &hassett::torsor_trivializable, py::arg("y"));
    m.def("hassett_report", [](long d) { return hassett_report_to_py(hassett::report(d)); });
    m.def("hassett_table", [](long max_d) {
        py::list out;
        for (const auto& r : hassett::enumerate_admissible(max_d))
            out.append(hassett_report_to_py(r));
        return out;
    });

    m.def("mukai_kuznetsov", [] {
        catalog::MarkedMukaiLattice mk = catalog::mukai_kuznetsov();
        py::dict out;
        out["lattice"] = PyLattice(mk.lattice);
        out["lambda1"] = vec_to_py(mk.lambda1);
        out["lambda2"] = vec_to_py(mk.lambda2);
        return out;
    });
    m.def("mukai_k3", [] {
        catalog::K3MukaiLattice mk = catalog::mukai_k3();
        py::dict out;
        out["lattice"] = PyLattice(mk.lattice);
        out["h0"] = vec_to_py(mk.h0);
        out["h4"] = vec_to_py(mk.h4);
        return out;
    });

    m.def("lambda_perp", [](const PyLattice& mukai, const py::sequence& lambda0) {
        og10::MukaiVector v = og10::make_og10_vector(mukai.get(), vec_from_py(lambda0));
        Sublattice perp = og10::lambda_perp(mukai.get(), v);
        py::dict out;
        out["basis"] = matrix_to_py(perp.basis());
        out["lattice"] = PyLattice(perp.induced());
        return out;
    });
    m.def("gamma_lattice", [](const PyLattice& mukai, const py::sequence& lambda0) {
        og10::MukaiVector v = og10::make_og10_vector(mukai.get(), vec_from_py(lambda0));
        og10::GammaLattice g = og10::gamma_lattice(mukai.get(), v);
        py::dict out;
        out["lattice"] = PyLattice(g.lattice);
        out["sigma"] = vec_to_py(g.sigma);
        out["base_index"] = to_py(g.base_index);
        return out;
    });
    m.def("factoriality", [](const PyLattice& alg, const py::sequence& lambda0) {
        og10::FactorialityVerdict v = og10::factoriality(alg.get(), vec_from_py(lambda0));
        py::dict out;
        out["verdict"] = v.kind == og10::Factoriality::TwoFactorial ? "2-factorial"
                                                                    : "locally factorial";
        out["quotient_order"] = v.quotient_order;
        out["witness"] =
            v.witness ? py::object(vec_to_py(*v.witness)) : py::none().cast<py::object>();
        return out;
    });
    m.def("picard_lpz", [](long d) {
        og10::PicardLPZ p = og10::picard_lpz(d);
        py::dict out;
        out["d"] = p.d;
        out["k"] = p.k;
        out["lattice"] = PyLattice(p.lattice);
        out["gram"] = matrix_to_py(p.lattice.gram());
        out["name"] = p.lattice.label();
        out["glued"] = p.glued;
        out["basis_roles"] = py::make_tuple(p.basis_roles[0], p.basis_roles[1], p.basis_roles[2]);
        return out;
    });
    m.def("contains_unimodular_u", [](const PyLattice& l, long bound) {
        og10::USearchResult r = og10::contains_unimodular_u(l.get(), bound);
        py::dict out;
        switch (r.outcome) {
        case og10::USearchOutcome::Yes:
            out["outcome"] = "yes";
            out["witness"] = py::make_tuple(vec_to_py(r.witness->first),
                                            vec_to_py(r.witness->second));
            break;
        case og10::USearchOutcome::NoByScale:
            out["outcome"] = "no-by-scale";
            break;
        case og10::USearchOutcome::NotFoundWithinBound:
            out["outcome"] = "not-found-within-bound";
            break;
        }
        return out;
    }, py::arg("lattice"), py::arg("bound") = 32);
    m.def("lsv_birational", &og10::lsv_birational, py::arg("d"));
    m.def("k3_moduli_birational", &og10::k3_moduli_birational, py::arg("d"));
    m.def("twisted_k3_stratum_birational", &og10::twisted_k3_stratum_birational,
          py::arg("d"));

    m.def("disc_group_length", [](const PyLattice& l) {
        return nikulin::disc_group_length(l.get());
    });
    m.def("embedding_sufficient", [](const PyLattice& l, int lplus, int lminus) {
        return nikulin::embedding_sufficient(l.get(), lplus, lminus) ==
                       nikulin::EmbeddingVerdict::Exists
                   ? "exists"
                   : "unknown";
    });
    m.def("acts_trivially", [](const PyLattice& l, const py::sequence& iso) {
        return nikulin::acts_trivially(nikulin::disc_action(l.get(), matrix_from_py(iso)));
    });

    m.def("replay", [] {
        py::list out;
        for (const auto& c : replay::run_replay())
            out.append(py::make_tuple(c.name, c.pass));
        return out;
    });
}
