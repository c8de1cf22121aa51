#include "farey_sl2/errors.hpp"
#include "farey_sl2/friezes.hpp"
#include "farey_sl2/render.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

// Python ints <-> cpp_int through their decimal text.
namespace pybind11::detail {
template <>
struct type_caster<farey::Int> {
    PYBIND11_TYPE_CASTER(farey::Int, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        value = farey::Int(py::str(src).cast<std::string>());
        return true;
    }

    static handle cast(const farey::Int& v, return_value_policy, handle) {
        return PyLong_FromString(v.str().c_str(), nullptr, 10);
    }
};
}  // namespace pybind11::detail

namespace {

using namespace farey;

using Range = std::pair<long, long>;
IndexRange range(const Range& r) { return {r.first, r.second}; }

py::tuple mat(const Mat2Z& m) { return py::make_tuple(m.p(), m.q(), m.r(), m.s()); }

std::vector<std::vector<Int>> rows_of(const TilingWindow& w) {
    std::vector<std::vector<Int>> out;
    for (long i = w.rows().first; i <= w.rows().last; ++i) {
        std::vector<Int> row;
        for (long j = w.cols().first; j <= w.cols().last; ++j) row.push_back(w.at(i, j));
        out.push_back(std::move(row));
    }
    return out;
}

TilingWindow window_from_rows(long i0, long j0, const std::vector<std::vector<Int>>& rows) {
    if (rows.empty() || rows[0].empty()) throw DomainError("window needs at least one entry");
    std::vector<Int> entries;
    for (const auto& r : rows) {
        if (r.size() != rows[0].size()) throw DomainError("ragged window rows");
        entries.insert(entries.end(), r.begin(), r.end());
    }
    long h = static_cast<long>(rows.size());
    long w = static_cast<long>(rows[0].size());
    return TilingWindow({i0, i0 + h - 1}, {j0, j0 + w - 1}, std::move(entries));
}

py::tuple word_pair(const IndexedWord& w) { return py::make_tuple(w.first, w.values); }

}  // namespace

PYBIND11_MODULE(_farey_sl2, m) {
    m.doc() = "Exact Farey paths, SL2-tilings and friezes";

    py::register_exception<Error>(m, "FareyError");
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<InvalidVertex>(m, "InvalidVertex", PyExc_ValueError);
    py::register_exception<PathError>(m, "PathError", PyExc_ValueError);
    py::register_exception<RangeError>(m, "RangeError", PyExc_IndexError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<ExtRational>(m, "Vertex")
        .def(py::init([](const std::string& s) { return parse_vertex(s); }))
        .def(py::init([](const Int& n) { return ExtRational::from_int(n); }))
        .def(py::init([](const Int& n, const Int& d) { return ExtRational::normalize(n, d); }))
        .def_property_readonly("num", &ExtRational::num)
        .def_property_readonly("den", &ExtRational::den)
        .def_property_readonly("is_infinity", &ExtRational::is_infinity)
        .def("__str__", [](const ExtRational& x) { return to_string(x); })
        .def("__repr__", [](const ExtRational& x) { return "Vertex('" + to_string(x) + "')"; })
        .def("__hash__", [](const ExtRational& x) { return py::hash(py::str(to_string(x))); })
        .def(py::self == py::self)
        .def(py::self != py::self);
    py::implicitly_convertible<py::str, ExtRational>();
    py::implicitly_convertible<py::int_, ExtRational>();

    m.def("delta", &delta);
    m.def("is_adjacent", &is_adjacent);
    m.def("mediant", &mediant);
    m.def("clockwise3", &clockwise3);
    m.def("farey_parents", &farey_parents);
    m.def("edge_normalizer", [](const ExtRational& u, const ExtRational& v) { return mat(edge_normalizer(u, v)); });
    m.def("mobius", [](const std::array<Int, 4>& g, const ExtRational& x) { return mobius(Mat2Z(g[0], g[1], g[2], g[3]), x); });

    py::class_<FareyPath>(m, "Path")
        .def_property_readonly("first", &FareyPath::first)
        .def_property_readonly("last", &FareyPath::last)
        .def_property_readonly("closed", [](const FareyPath& p) { return p.kind() == PathKind::closed; })
        .def_property_readonly("vertices", &FareyPath::vertices)
        .def_property_readonly("lifts", [](const FareyPath& p) {
            std::vector<std::pair<Int, Int>> out;
            for (const auto& l : p.lifts()) out.emplace_back(l.a, l.b);
            return out;
        })
        .def("vertex", &FareyPath::vertex)
        .def("__len__", &FareyPath::size);

    m.def("lift_path", [](const std::vector<ExtRational>& v, long first, bool closed) {
        return lift_path(v, first, closed ? PathKind::closed : PathKind::finite);
    }, py::arg("vertices"), py::arg("first") = 0, py::arg("closed") = false);
    m.def("itinerary", [](const FareyPath& p) { return word_pair(itinerary_of(p)); });
    m.def("path_from_itinerary",
          [](const Range& window, const Word& core, const Word& left_period, const Word& right_period, long start,
             std::optional<std::pair<ExtRational, ExtRational>> seed) {
              ItinerarySpec spec{left_period, core, right_period, start, seed};
              return path_from_itinerary(spec, range(window));
          },
          py::arg("window"), py::arg("core") = Word{}, py::arg("left_period") = Word{}, py::arg("right_period") = Word{},
          py::arg("start") = 1, py::arg("seed") = std::nullopt);
    m.def("closed_path_from_word", &closed_path_from_word);
    m.def("is_clockwise", py::overload_cast<const std::vector<ExtRational>&>(&is_clockwise));
    m.def("is_clockwise_simple_closed", &is_clockwise_simple_closed);
    m.def("is_cycle_sequence", &is_cycle_sequence);
    m.def("contains_cycle_sequence", &contains_cycle_sequence);
    m.def("quiddity_realizable", &quiddity_realizable);
    m.def("period_transform", [](const Word& w) { return mat(period_transform(w)); });
    m.def("classify_tail_limit", [](const FareyPath& p, const Word& period, const std::string& direction) -> py::object {
        TailDirection d = direction == "backward" ? TailDirection::backward : TailDirection::forward;
        TailLimit t = classify_tail_limit(p, period, d);
        if (t.kind == TailLimit::Kind::rational) return py::make_tuple("rational", t.rational);
        if (t.kind == TailLimit::Kind::quadratic_irrational) {
            const auto& q = t.irrational;
            return py::make_tuple("quadratic", py::make_tuple(q.p, q.q, q.d, q.r));
        }
        return py::make_tuple("none", py::none());
    }, py::arg("path"), py::arg("period"), py::arg("direction") = "forward");

    py::class_<TilingWindow>(m, "Window")
        .def(py::init(&window_from_rows), py::arg("i0"), py::arg("j0"), py::arg("rows"))
        .def_property_readonly("i0", [](const TilingWindow& w) { return w.rows().first; })
        .def_property_readonly("j0", [](const TilingWindow& w) { return w.cols().first; })
        .def_property_readonly("rows", &rows_of)
        .def("at", [](const TilingWindow& w, long i, long j) { return w.at(i, j); })
        .def(py::self == py::self);

    m.def("phi", [](const FareyPath& g, const FareyPath& d, const Range& i, const Range& j, bool canonical) {
        return phi(PathPair{g, d}, range(i), range(j), canonical ? SignMode::canonical : SignMode::raw);
    }, py::arg("gamma"), py::arg("delta"), py::arg("i_range"), py::arg("j_range"), py::arg("canonical") = true);
    m.def("frieze_phi", [](const FareyPath& g, const Range& i, const Range& j) { return frieze_phi(g, range(i), range(j)); });
    m.def("psi", [](const TilingWindow& w) {
        PathPair p = psi(w);
        return py::make_tuple(p.gamma, p.delta);
    });
    m.def("is_sl2", &is_sl2);
    m.def("is_tame", &is_tame);
    m.def("quiddity", [](const TilingWindow& w) { return word_pair(quiddity(w)); });

    m.def("frieze_window", [](const FareyPath& closed, long order, const Range& i, const Range& j) {
        return frieze_from_closed_path(closed, order, range(i), range(j)).window;
    });
    m.def("standard_form", [](const Word& word, std::optional<long> order) {
        FareyPath closed = closed_path_from_word(word);
        long n = order.value_or(closed.length());
        IndexRange span = render::standard_form_span(n);
        return render::standard_form(frieze_from_closed_path(closed, n, span, span));
    }, py::arg("word"), py::arg("order") = std::nullopt);
    m.def("triangle_counts", [](long n, const std::vector<std::pair<long, long>>& diagonals) {
        return triangle_counts(polygon_from_diagonals(n, diagonals));
    });
    m.def("polygon_vertices", [](long n, const std::vector<std::pair<long, long>>& diagonals) {
        return realize(polygon_from_diagonals(n, diagonals)).vertices;
    });
    m.def("cc_count", [](long n, const std::vector<std::pair<long, long>>& diagonals, long u) {
        return cc_count(polygon_from_diagonals(n, diagonals), u);
    });
    m.def("is_Cn0", &is_Cn0);
    m.def("dual_path", [](const FareyPath& g) { return dual_path(g).vertices; });
}
