#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <sstream>

#include "wreath/centraliser.hpp"
#include "wreath/classreps.hpp"
#include "wreath/conjugacy.hpp"
#include "wreath/element.hpp"
#include "wreath/io.hpp"

namespace py = pybind11;
using namespace wreath;

namespace {

// shared_ptr<const WreathContext> does not fit pybind11's holder model, so
// the context rides inside a plain value type.
struct ContextHandle {
  Ctx ctx;
};

ContextHandle load_context(const std::string& source, std::uint64_t cap) {
  auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && source[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(source);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return {context_from_json(j, cap)};
  }
  return {context_from_file(source, cap)};
}

py::dict cycle_dict(const WreathCycle& z) {
  py::dict d;
  d["element"] = z.element;
  d["territory"] = z.territory;
  d["anchor"] = z.anchor;
  d["yade"] = z.element.ctx()->base->describe(z.yade_at_anchor);
  d["yade_class"] = z.load.yade_class + 1;
  d["length"] = z.load.length;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "wreath products of finite permutation groups: arithmetic, conjugacy, "
            "classes and centralisers through wreath-cycle decompositions";

  py::register_exception<Error>(m, "WreathError");

  py::class_<ContextHandle>(m, "Context")
      .def_property_readonly("degree", [](const ContextHandle& c) { return c.ctx->degree(); })
      .def_property_readonly("base_order",
                             [](const ContextHandle& c) { return c.ctx->base->size(); })
      .def_property_readonly("top_order", [](const ContextHandle& c) { return c.ctx->top.size(); })
      .def("element",
           [](const ContextHandle& c, const std::string& text) {
             return parse_wreath_element(text, c.ctx);
           },
           py::arg("text"), "parse \"( f1, ..., fn ; h )\"")
      .def("identity", [](const ContextHandle& c) { return WreathElement::identity(c.ctx); })
      .def("class_count",
           [](const ContextHandle& c) { return class_count(c.ctx); })
      .def("class_representatives",
           [](const ContextHandle& c, std::uint64_t limit) {
             std::vector<WreathElement> out;
             for_each_class_representative(c.ctx, [&](const WreathElement& w) {
               out.push_back(w);
               return out.size() < limit;
             });
             return out;
           },
           py::arg("limit") = 1000)
      .def("__repr__", [](const ContextHandle& c) {
        std::ostringstream os;
        os << "Context(degree=" << c.ctx->degree() << ", base_order=" << c.ctx->base->size()
           << ", top_order=" << c.ctx->top.size() << ")";
        return os.str();
      });

  py::class_<WreathElement>(m, "Element")
      .def("__mul__", [](const WreathElement& w, const WreathElement& v) { return w * v; })
      .def("__pow__", [](const WreathElement& w, long long k) { return w.power(k); })
      .def("__eq__", [](const WreathElement& w, const WreathElement& v) { return w == v; })
      .def("__hash__", [](const WreathElement& w) { return hash_value(w); })
      .def("__str__", &WreathElement::str)
      .def("__repr__", &WreathElement::str)
      .def("inverse", &WreathElement::inverse)
      .def("conjugated_by", &WreathElement::conjugated_by)
      .def("order", [](const WreathElement& w) { return element_order(w); })
      .def("territory", [](const WreathElement& w) { return territory(w); })
      .def("is_wreath_cycle", [](const WreathElement& w) { return is_wreath_cycle(w); })
      .def("decompose",
           [](const WreathElement& w) {
             py::list out;
             for (const auto& z : wreath_cycle_decomposition(w).cycles)
               out.append(cycle_dict(z));
             return out;
           })
      .def("yade",
           [](const WreathElement& w, int point) {
             for (const auto& z : wreath_cycle_decomposition(w).cycles)
               if (std::find(z.territory.begin(), z.territory.end(), point) !=
                   z.territory.end())
                 return w.ctx()->base->describe(yade(z.element, point));
             throw DomainError("point is not in the territory of any wreath cycle");
           },
           py::arg("point"))
      .def("class_size", [](const WreathElement& w) { return class_size(w); })
      .def("centraliser_order", [](const WreathElement& w) { return centraliser_order(w); });

  m.def("load_context", &load_context, py::arg("source"), py::arg("cap") = 1'000'000,
        "context from a JSON file path or a JSON object string");
  m.def("is_conjugate",
        [](const WreathElement& w, const WreathElement& v) {
          return conjugacy_witness_in_w(w, v).has_value();
        },
        py::arg("w"), py::arg("v"));
  m.def("conjugator",
        [](const WreathElement& w, const WreathElement& v) -> py::object {
          auto a = conjugacy_witness_in_w(w, v);
          if (!a) return py::none();
          if (w.conjugated_by(*a) != v)
            throw Error("internal error: witness failed re-verification");
          return py::cast(*a);
        },
        py::arg("w"), py::arg("v"), "a verified witness a with w^a == v, or None");
  m.def("centraliser",
        [](const WreathElement& w) {
          CentraliserDescription d = centraliser_of(w);
          py::dict out;
          out["order"] = d.order;
          out["top_stabiliser_order"] = d.stab_order;
          out["base_order"] = d.base_order;
          out["generators"] = d.generators;
          return out;
        },
        py::arg("w"));
}
