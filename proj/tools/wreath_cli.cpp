#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wreath/bench.hpp"
#include "wreath/centraliser.hpp"
#include "wreath/classreps.hpp"
#include "wreath/conjugacy.hpp"
#include "wreath/element.hpp"
#include "wreath/io.hpp"

namespace {

using nlohmann::json;
using namespace wreath;

struct Options {
  std::string group_file;
  bool json_out = false;
  std::uint64_t cap = 1'000'000;
};

Ctx require_ctx(const Options& opt) {
  if (opt.group_file.empty())
    throw Error("this command needs --group FILE (a JSON wreath-product description)");
  return context_from_file(opt.group_file, opt.cap);
}

json load_to_json(const Ctx& ctx, const Load& load) {
  return {{"class", ctx->base->describe(ctx->base->class_representatives()[load.yade_class])},
          {"class_index", load.yade_class + 1},
          {"length", load.length}};
}

json decomposition_to_json(const Ctx& ctx, const TerritoryDecomposition& p) {
  json rows = json::array();
  for (const auto& [load, terrs] : p.rows())
    rows.push_back({{"load", load_to_json(ctx, load)}, {"territories", terrs}});
  return rows;
}

std::string class_legend(const Ctx& ctx) {
  const auto& K = *ctx->base;
  std::string out = "K-classes: ";
  for (int c = 0; c < K.class_count(); ++c) {
    if (c) out += ", ";
    out += "k_" + std::to_string(c + 1) + " = " + K.describe(K.class_representatives()[c]);
  }
  return out;
}

int cmd_decompose(const Options& opt, const std::string& element_text) {
  Ctx ctx = require_ctx(opt);
  WreathElement w = parse_wreath_element(element_text, ctx);
  auto dec = wreath_cycle_decomposition(w);
  auto p = TerritoryDecomposition::of(dec);
  const auto& K = *ctx->base;

  if (opt.json_out) {
    json cycles = json::array();
    for (const auto& z : dec.cycles)
      cycles.push_back({{"element", element_to_json(z.element)},
                        {"territory", z.territory},
                        {"anchor", z.anchor},
                        {"yade", K.describe(z.yade_at_anchor)},
                        {"load", load_to_json(ctx, z.load)}});
    json out = {{"schema", "wreath.decompose/1"},
                {"element", element_to_json(w)},
                {"order", element_order(w)},
                {"cycles", std::move(cycles)},
                {"territory_decomposition", decomposition_to_json(ctx, p)}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::cout << "element: " << w.str() << "\n";
  std::cout << "order: " << element_order(w) << "\n";
  std::cout << "wreath cycles (" << dec.cycles.size() << "):\n";
  for (const auto& z : dec.cycles) {
    std::cout << "  " << z.element.str() << "\n    territory {";
    for (std::size_t i = 0; i < z.territory.size(); ++i)
      std::cout << (i ? "," : "") << z.territory[i];
    std::cout << "}  anchor " << z.anchor << "  yade " << K.describe(z.yade_at_anchor)
              << "  load (k" << z.load.yade_class + 1 << ", " << z.load.length << ")\n";
  }
  std::cout << "territory decomposition (rows: K-classes, columns: cycle lengths):\n"
            << format_territory_matrix(p, K.class_count(), ctx->degree())
            << class_legend(ctx) << "\n";
  return 0;
}

int cmd_order(const Options& opt, const std::string& element_text) {
  Ctx ctx = require_ctx(opt);
  long long ord = element_order(parse_wreath_element(element_text, ctx));
  if (opt.json_out)
    std::cout << json{{"schema", "wreath.order/1"}, {"order", ord}}.dump(2) << "\n";
  else
    std::cout << ord << "\n";
  return 0;
}

int cmd_yade(const Options& opt, const std::string& element_text, int point) {
  Ctx ctx = require_ctx(opt);
  WreathElement w = parse_wreath_element(element_text, ctx);
  auto dec = wreath_cycle_decomposition(w);
  const WreathCycle* holder = nullptr;
  for (const auto& z : dec.cycles)
    if (std::find(z.territory.begin(), z.territory.end(), point) != z.territory.end())
      holder = &z;
  if (holder == nullptr)
    throw DomainError("point " + std::to_string(point) +
                      " is not in the territory of any wreath cycle");
  GroupOracle::Elem y = yade(holder->element, point);
  if (opt.json_out)
    std::cout << json{{"schema", "wreath.yade/1"},
                      {"point", point},
                      {"yade", ctx->base->describe(y)},
                      {"cycle", element_to_json(holder->element)}}
                     .dump(2)
              << "\n";
  else
    std::cout << ctx->base->describe(y) << "\n";
  return 0;
}

int cmd_conjugacy(const Options& opt, const std::string& w_text, const std::string& v_text,
                  bool witness_only) {
  Ctx ctx = require_ctx(opt);
  WreathElement w = parse_wreath_element(w_text, ctx);
  WreathElement v = parse_wreath_element(v_text, ctx);
  auto witness = conjugacy_witness_in_w(w, v);
  if (witness && w.conjugated_by(*witness) != v)
    throw Error("internal error: witness failed re-verification");

  if (opt.json_out) {
    json out = {{"schema", "wreath.conjugacy/1"}, {"conjugate", witness.has_value()}};
    if (witness) {
      out["witness"] = element_to_json(*witness);
      out["verified"] = true;
    }
    std::cout << out.dump(2) << "\n";
    return witness ? 0 : 1;
  }
  if (!witness) {
    std::cout << "not conjugate\n";
    return 1;
  }
  if (witness_only)
    std::cout << witness->str() << "\n";
  else
    std::cout << "conjugate\nwitness: " << witness->str() << "\n";
  return 0;
}

int cmd_centralizer(const Options& opt, const std::string& element_text) {
  Ctx ctx = require_ctx(opt);
  WreathElement w = parse_wreath_element(element_text, ctx);
  CentraliserDescription desc = centraliser_of(w);

  if (opt.json_out) {
    json gens = json::array();
    for (const auto& g : desc.generators) gens.push_back(element_to_json(g));
    std::cout << json{{"schema", "wreath.centralizer/1"},
                      {"order", desc.order},
                      {"top_stabiliser_order", desc.stab_order},
                      {"base_order", desc.base_order},
                      {"generators", std::move(gens)}}
                     .dump(2)
              << "\n";
    return 0;
  }
  std::cout << "centraliser order: " << format_count(desc.order) << "\n"
            << "  base part: " << format_count(desc.base_order)
            << "  top-stabiliser part: " << format_count(desc.stab_order) << "\n"
            << "generators (" << desc.generators.size() << "):\n";
  for (const auto& g : desc.generators) std::cout << "  " << g.str() << "\n";
  return 0;
}

int cmd_class_size(const Options& opt, const std::string& element_text) {
  Ctx ctx = require_ctx(opt);
  WreathElement w = parse_wreath_element(element_text, ctx);
  ClassSizeParts parts = class_size_parts(w);

  if (opt.json_out) {
    std::cout << json{{"schema", "wreath.class-size/1"},
                      {"size", parts.total()},
                      {"top_class_size", parts.top_class_size},
                      {"partition_orbit", parts.partition_orbit},
                      {"yade_class_product", parts.yade_class_product},
                      {"base_freedom", parts.base_freedom}}
                     .dump(2)
              << "\n";
    return 0;
  }
  std::cout << "class size: " << format_count(parts.total()) << "\n"
            << "  top class size:     " << format_count(parts.top_class_size) << "\n"
            << "  partition orbit:    " << format_count(parts.partition_orbit) << "\n"
            << "  yade class product: " << format_count(parts.yade_class_product) << "\n"
            << "  base freedom:       " << format_count(parts.base_freedom) << "\n";
  return 0;
}

int cmd_classes(const Options& opt, bool count_only, bool emit) {
  Ctx ctx = require_ctx(opt);
  if (emit) {
    if (opt.json_out) {
      json reps = json::array();
      for_each_class_representative(ctx, [&](const WreathElement& w) {
        reps.push_back(element_to_json(w));
        return true;
      });
      std::cout << json{{"schema", "wreath.classes/1"},
                        {"total", reps.size()},
                        {"representatives", std::move(reps)}}
                       .dump(2)
                << "\n";
    } else {
      std::uint64_t total = 0;
      for_each_class_representative(ctx, [&](const WreathElement& w) {
        std::cout << w.str() << "\n";
        ++total;
        return true;
      });
      std::cout << "total: " << format_count(total) << " classes\n";
    }
    return 0;
  }

  if (count_only) {
    std::uint64_t total = class_count(ctx);
    if (opt.json_out)
      std::cout << json{{"schema", "wreath.classes/1"}, {"total", total}}.dump(2) << "\n";
    else
      std::cout << format_count(total) << "\n";
    return 0;
  }

  auto by_top = class_count_by_top(ctx);
  std::uint64_t total = 0;
  for (const auto& [h, c] : by_top) total += c;
  if (opt.json_out) {
    json rows = json::array();
    for (const auto& [h, c] : by_top) rows.push_back({{"top", h.str()}, {"classes", c}});
    std::cout << json{{"schema", "wreath.classes/1"},
                      {"total", total},
                      {"by_top", std::move(rows)}}
                     .dump(2)
              << "\n";
    return 0;
  }
  for (const auto& [h, c] : by_top)
    std::cout << "top " << h.str() << ": " << format_count(c) << " classes\n";
  std::cout << "total: " << format_count(total) << " classes\n";
  return 0;
}

int cmd_bench(const Options& opt, const std::string& suite, std::uint64_t seed, bool csv) {
  auto results = run_bench_suite(suite, seed, opt.cap);
  if (opt.json_out) {
    json rows = json::array();
    for (const auto& r : results) {
      json row = {{"instance", r.instance},
                  {"operation", r.operation},
                  {"fast_ms", r.fast_ms},
                  {"note", r.note}};
      if (r.brute_ms >= 0) {
        row["oracle_ms"] = r.brute_ms;
        row["speedup"] = r.speedup();
      }
      rows.push_back(std::move(row));
    }
    std::cout << json{{"schema", "wreath.bench/1"},
                      {"suite", suite},
                      {"seed", seed},
                      {"results", std::move(rows)}}
                     .dump(2)
              << "\n";
    return 0;
  }
  if (csv)
    print_bench_csv(std::cout, results);
  else
    print_bench_table(std::cout, results);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computing in wreath products of permutation groups via wreath-cycle "
               "decompositions: element arithmetic, conjugacy with witnesses, "
               "conjugacy classes and centralisers"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--group", opt.group_file,
                 "JSON wreath-product description: {\"base\": GROUP, \"top\": GROUP} with "
                 "GROUP = {\"degree\": n, \"generators\": [\"(1,2)\", ...]} or "
                 "{\"degree\": n, \"symmetric\": true}");
  app.add_flag("--json", opt.json_out, "machine-readable JSON output");
  app.add_option("--cap", opt.cap, "enumeration cap for groups and oracles")
      ->check(CLI::PositiveNumber);

  std::string element_text, second_text, suite;
  int point = 0;
  bool count_only = false, emit = false, csv = false;
  std::uint64_t seed = 0;

  auto* dec = app.add_subcommand("decompose",
                                 "disjoint wreath-cycle decomposition of an element");
  dec->add_option("element", element_text, "element, e.g. \"( (1,2), (), () ; (1,2,3) )\"")
      ->required();

  auto* ord = app.add_subcommand("order", "order of an element");
  ord->add_option("element", element_text, "element text")->required();

  auto* yad = app.add_subcommand("yade", "yade of the wreath cycle through a point");
  yad->add_option("element", element_text, "element text")->required();
  yad->add_option("--point", point, "territory point")->required();

  auto* isc = app.add_subcommand("is-conjugate",
                                 "test conjugacy of two elements (exit 0 yes, 1 no)");
  isc->add_option("w", element_text, "first element")->required();
  isc->add_option("v", second_text, "second element")->required();

  auto* con = app.add_subcommand("conjugator",
                                 "a verified element a with w^a = v, if one exists");
  con->add_option("w", element_text, "first element")->required();
  con->add_option("v", second_text, "second element")->required();

  auto* cen = app.add_subcommand("centralizer", "centraliser order and generators");
  cen->add_option("element", element_text, "element text")->required();

  auto* cls = app.add_subcommand("classes", "conjugacy classes of the whole product");
  cls->add_flag("--count-only", count_only, "print only the total number of classes");
  cls->add_flag("--emit", emit, "print one representative per class")
      ->excludes("--count-only");

  auto* csz = app.add_subcommand("class-size", "size of the conjugacy class of an element");
  csz->add_option("element", element_text, "element text")->required();

  auto* ben = app.add_subcommand("bench", "timing suites against the brute-force oracle");
  ben->add_option("--suite", suite, "\"oracle\" (graded, with baselines) or \"large\"")
      ->required();
  ben->add_option("--seed", seed, "random seed (runs are reproducible)");
  ben->add_flag("--csv", csv, "CSV instead of the aligned table");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(dec)) return cmd_decompose(opt, element_text);
    if (app.got_subcommand(ord)) return cmd_order(opt, element_text);
    if (app.got_subcommand(yad)) return cmd_yade(opt, element_text, point);
    if (app.got_subcommand(isc)) return cmd_conjugacy(opt, element_text, second_text, false);
    if (app.got_subcommand(con)) return cmd_conjugacy(opt, element_text, second_text, true);
    if (app.got_subcommand(cen)) return cmd_centralizer(opt, element_text);
    if (app.got_subcommand(cls)) return cmd_classes(opt, count_only, emit);
    if (app.got_subcommand(csz)) return cmd_class_size(opt, element_text);
    if (app.got_subcommand(ben)) return cmd_bench(opt, suite, seed, csv);
    throw Error("no command selected");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
