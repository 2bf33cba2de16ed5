#include "unital/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "unital/checks.hpp"
#include "unital/io.hpp"
#include "unital/quadrangle.hpp"

namespace unital {

namespace {

constexpr const char* kVersion = "unital 0.1.0";

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string format = "json";
  std::string cache;
};

std::string fnv_hex(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array()) {
    const bool scalars = std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
    if (scalars) {
      out << prefix << ": " << j.dump() << "\n";
    } else {
      for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    }
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const Json& j, const Common& c, std::ostream& out) {
  if (c.format == "text")
    flatten(j, "", out);
  else
    out << dump(j);
}

SL2 make_group(std::uint32_t q) {
  const auto pe = prime_power(q);
  if (!pe) throw UsageError("q = " + std::to_string(q) + " is not a prime power");
  return SL2(make_field(pe->first, pe->second));
}

// Accepts a bare structure or an object carrying one under "structure".
IncidenceStructure load_structure(const std::string& path, std::istream& in) {
  const auto j = read_json(path, in);
  return structure_from_json(j.is_object() && j.contains("structure") ? j.at("structure") : j);
}

Subgroup choose_subgroup(const SL2& g, const std::string& type, const std::string& file,
                         std::istream& in) {
  if (!file.empty()) {
    Subgroup s;
    try {
      s.elements = read_json(file, in).get<std::vector<ElementId>>();
    } catch (const nlohmann::json::exception& ex) {
      throw IoError(std::string("bad subgroup list: ") + ex.what());
    }
    std::sort(s.elements.begin(), s.elements.end());
    if (s.elements.size() != g.q() + 1 || !is_subgroup(g, s.elements))
      throw UsageError("the subgroup file does not list a subgroup of order q+1");
    s.kind = SubgroupKind::order_q_plus_1;
    return s;
  }
  if (type == "cyclic") return cyclic_subgroup_C(g);
  for (const auto& r : subgroup_orbit_representatives(g))
    if (to_string(r.type) == type) return r.group;
  throw UsageError("no subgroup of order q+1 of type " + type);
}

std::string subgroup_type_name(const SL2& g, const Subgroup& s) {
  return to_string(classify_order_qplus1(g, s));
}

Parallelism choose_parallelism(const std::string& kind, const std::string& file,
                               const IncidenceStructure& u, std::istream& in) {
  if (kind == "file") {
    if (file.empty()) throw UsageError("--parallelism file needs --pi-file");
    return parallelism_from_json(read_json(file, in));
  }
  if (u.order() == 0) throw UsageError("flat and natural parallelisms need the structure's q");
  const auto g = make_group(u.order());
  if (u.num_points() != g.size()) throw UsageError("structure is not labelled by SL(2,q)");
  return kind == "flat" ? flat_parallelism(g, u) : natural_parallelism(g, u);
}

Json affine_report(const IncidenceStructure& u) {
  const auto r = verify_affine_axioms(u);
  Json j{{"kind", "affine"}, {"order", r.order},  {"au1", r.au1}, {"au2", r.au2},
         {"au3", r.au3},     {"au4", r.au4},      {"au5", r.au5}, {"failures", r.failures},
         {"ok", r.all()}};
  if (r.witness) j["parallelism"] = to_json(*r.witness);
  return j;
}

Json unital_report(const IncidenceStructure& u) {
  const auto r = verify_unital(u);
  return Json{{"kind", "unital"},           {"order", r.order},
              {"points", r.points},         {"block_sizes", r.block_sizes},
              {"joining", r.joining},       {"failures", r.failures},
              {"ok", r.all()}};
}

Json classify_report(const SL2& g) {
  const auto c = classify_affine_unitals(g);
  Json classes = Json::array();
  for (const auto& cls : c.classes) {
    classes.push_back(Json{{"digest", cls.certificate.digest()},
                           {"certificate", cls.certificate.hex()},
                           {"subgroup_type", to_string(cls.subgroup.type)},
                           {"subgroup", cls.subgroup.group.elements},
                           {"collection", to_json(cls.collection)},
                           {"aut_order", cls.aut_order}});
  }
  return Json{{"q", c.q},
              {"field", to_json(g.field().spec())},
              {"collections", c.collections},
              {"orbits", c.orbits},
              {"num_classes", c.classes.size()},
              {"classes", classes}};
}

Json check_report(const CheckReport& r) {
  Json classes = Json::array();
  for (const auto& c : r.classes) {
    Json tr = Json::array();
    for (const auto& t : c.translations)
      tr.push_back(Json{{"point", t.point}, {"order", t.order}, {"equals_r_t", t.equals_r_t}});
    const auto closure_json = [](const ClosureCheck& k) {
      return Json{{"aut_order", k.aut_order},
                  {"infinity_stabilizer", k.infinity_stabilizer},
                  {"parallelism_stabilizer", k.parallelism_stabilizer},
                  {"fixes_infinity", k.fixes_infinity()}};
    };
    Json cj{{"digest", c.digest},
            {"subgroup_type", to_string(c.subgroup_type)},
            {"aut_order", c.aut_order},
            {"order_divides_bound", c.order_divides_bound},
            {"generators_factor", c.generators_factor},
            {"flat", closure_json(c.flat)},
            {"natural", closure_json(c.natural)},
            {"classical", c.classical},
            {"translations", tr},
            {"translations_semiregular", c.translations_semiregular},
            {"max_translation_order", c.max_translation_order}};
    if (c.r_invariant)
      cj["r_invariant"] = Json{{"enumerated", c.r_invariant->enumerated},
                               {"complete", c.r_invariant->complete},
                               {"count", c.r_invariant->r_invariant},
                               {"equals_flat_and_natural", c.r_invariant->equals_flat_and_natural}};
    classes.push_back(std::move(cj));
  }
  return Json{{"q", r.q}, {"classes", classes}, {"failures", r.failures}, {"ok", r.ok()}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Construct, verify and classify SL(2,q)-unitals", "unital"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--cache", common.cache, "Cache directory (UNITAL_CACHE overrides)");
  app.set_version_flag("--version", kVersion);

  std::uint32_t q = 0;
  std::string s_type = "cyclic", s_file, d_file, pi_kind, pi_file, input = "-", input2;
  std::size_t cap = 100000;
  bool r_invariant = false;
  bool no_enumeration = false;

  std::function<int()> action;

  auto* build = app.add_subcommand("build", "Build an affine SL(2,q)-unital");
  build->add_option("--q", q, "Field order")->required();
  build->add_option("--s-type", s_type, "cyclic, generalized_quaternion or exceptional")->capture_default_str();
  build->add_option("--s-file", s_file, "JSON list of the elements of S");
  build->add_option("--d-file", d_file, "JSON list of the sets D (searched when absent)");
  build->add_option("--parallelism", pi_kind, "Also emit this parallelism")
      ->check(CLI::IsMember({"flat", "natural"}));
  build->callback([&] {
    action = [&] {
      const auto g = make_group(q);
      if (q > 5 && d_file.empty()) throw UsageError("searching for D needs q <= 5; pass --d-file");
      const auto s = choose_subgroup(g, s_type, s_file, in);
      BlockCollection dc;
      if (!d_file.empty()) {
        dc = collection_from_json(read_json(d_file, in));
      } else {
        SearchOptions opts;
        opts.limit = 1;
        const auto found = search_block_collections(g, s, opts);
        if (found.empty()) {
          err << "no block collection exists for this S\n";
          emit(Json{{"q", q}, {"found", false}}, common, out);
          return kExitFailed;
        }
        dc = found.front();
      }
      const auto u = build_affine_unital(g, s, dc);
      Json j{{"q", q},
             {"field", to_json(g.field().spec())},
             {"subgroup", Json{{"type", subgroup_type_name(g, s)}, {"elements", s.elements}}},
             {"collection", to_json(dc)},
             {"structure", to_json(u)}};
      if (!pi_kind.empty())
        j["parallelism"] = to_json(pi_kind == "flat" ? flat_parallelism(g, u) : natural_parallelism(g, u));
      emit(j, common, out);
      return kExitOk;
    };
  });

  auto* verify = app.add_subcommand("verify", "Check the affine unital or unital axioms");
  verify->add_option("input", input, "Structure file, - for stdin")->capture_default_str();
  verify->callback([&] {
    action = [&] {
      const auto u = load_structure(input, in);
      const auto j = u.num_short() > 0 ? affine_report(u) : unital_report(u);
      emit(j, common, out);
      return j.at("ok").get<bool>() ? kExitOk : kExitFailed;
    };
  });

  auto* pars = app.add_subcommand("parallelisms", "Enumerate parallelisms");
  pars->add_option("input", input, "Structure file, - for stdin")->capture_default_str();
  pars->add_option("--cap", cap, "Stop after this many parallelisms")->capture_default_str()
      ->check(CLI::PositiveNumber);
  pars->add_flag("--r-invariant", r_invariant, "Keep only those fixed by right multiplication");
  pars->callback([&] {
    action = [&] {
      const auto u = load_structure(input, in);
      Json list = Json::array();
      Json j;
      if (r_invariant) {
        if (u.order() == 0) throw UsageError("--r-invariant needs the structure's q");
        const auto g = make_group(u.order());
        if (u.num_points() != g.size()) throw UsageError("structure is not labelled by SL(2,q)");
        const auto r = r_invariant_parallelisms(g, u, cap);
        auto flat = flat_parallelism(g, u), natural = natural_parallelism(g, u);
        flat.normalize();
        natural.normalize();
        for (const auto& pi : r.parallelisms) {
          auto pj = to_json(pi);
          pj["name"] = pi == flat ? "flat" : pi == natural ? "natural" : "other";
          list.push_back(std::move(pj));
        }
        j = Json{{"enumerated", r.enumerated}, {"complete", r.complete}, {"count", r.parallelisms.size()}};
      } else {
        const auto r = ParallelismSolver(u).enumerate(cap);
        for (const auto& pi : r.parallelisms) list.push_back(to_json(pi));
        j = Json{{"complete", r.complete}, {"count", r.parallelisms.size()}};
      }
      j["parallelisms"] = list;
      emit(j, common, out);
      return kExitOk;
    };
  });

  auto* clo = app.add_subcommand("closure", "Close an affine unital along a parallelism");
  clo->add_option("input", input, "Structure file, - for stdin")->capture_default_str();
  clo->add_option("--parallelism", pi_kind, "flat, natural or file")
      ->required()
      ->check(CLI::IsMember({"flat", "natural", "file"}));
  clo->add_option("--pi-file", pi_file, "Parallelism JSON for --parallelism file");
  clo->callback([&] {
    action = [&] {
      const auto u = load_structure(input, in);
      const auto pi = choose_parallelism(pi_kind, pi_file, u, in);
      std::string why;
      if (!is_parallelism(u, pi, &why)) {
        err << "not a parallelism: " << why << "\n";
        return kExitFailed;
      }
      const auto cu = closure(u, pi);
      emit(Json{{"structure", to_json(cu.structure)},
                {"infinity_block", cu.infinity_block},
                {"new_points", cu.new_points},
                {"parallelism", to_json(cu.parallelism)}},
           common, out);
      return kExitOk;
    };
  });

  auto* aut = app.add_subcommand("aut", "Automorphism group");
  aut->add_option("input", input, "Structure file, - for stdin")->capture_default_str();
  aut->callback([&] {
    action = [&] {
      emit(to_json(automorphism_group(load_structure(input, in))), common, out);
      return kExitOk;
    };
  });

  auto* iso = app.add_subcommand("iso", "Isomorphism test; exit 1 when not isomorphic");
  iso->add_option("first", input, "Structure file")->required();
  iso->add_option("second", input2, "Structure file")->required();
  iso->callback([&] {
    action = [&] {
      const auto a = load_structure(input, in);
      const auto b = load_structure(input2, in);
      const auto m = are_isomorphic(a, b);
      emit(Json{{"isomorphic", m.has_value()}, {"map", m ? to_json(*m) : Json(nullptr)}}, common, out);
      return m ? kExitOk : kExitFailed;
    };
  });

  auto* cls = app.add_subcommand("classify", "Isomorphism classes of affine SL(2,q)-unitals");
  cls->add_option("--q", q, "Field order")->required();
  cls->callback([&] {
    action = [&] {
      const auto g = make_group(q);
      if (q > 5) throw UsageError("classification needs q <= 5");
      if (const char* env = std::getenv("UNITAL_CACHE"); env && *env) common.cache = env;
      std::filesystem::path cached;
      if (!common.cache.empty()) {
        const auto key = std::string(kVersion) + "|classify|" + dump(to_json(g.field().spec()));
        cached = std::filesystem::path(common.cache) / ("classify-q" + std::to_string(q) + "-" + fnv_hex(key) + ".json");
        if (std::filesystem::exists(cached)) {
          emit(read_json(cached.string(), in), common, out);
          return kExitOk;
        }
      }
      const auto j = classify_report(g);
      if (!cached.empty()) {
        write_file_atomic(cached, dump(j));
        for (const auto& c : j.at("classes")) {
          const auto rep = std::filesystem::path(common.cache) / "classes" /
                           (c.at("digest").get<std::string>() + ".json");
          if (std::filesystem::exists(rep)) continue;
          const auto s = Subgroup{c.at("subgroup").get<std::vector<ElementId>>(), SubgroupKind::order_q_plus_1};
          const auto u = build_affine_unital(g, s, collection_from_json(c.at("collection")));
          write_file_atomic(rep, dump(Json{{"q", q}, {"certificate", c.at("certificate")}, {"structure", to_json(u)}}));
        }
      }
      emit(j, common, out);
      return kExitOk;
    };
  });

  auto* quad = app.add_subcommand("quadrangle", "Q(4,q) and the short-block model");
  quad->add_option("--q", q, "Field order")->required();
  quad->callback([&] {
    action = [&] {
      const auto g = make_group(q);
      if (q > 4) throw UsageError("the short-block model check needs q <= 4");
      const auto spec = g.field().spec();
      const auto q4 = build_Q4(spec);
      const auto h = hyperplane_H(q4);
      const auto comp = complement_geometry(q4, h);
      const auto m = verify_short_block_model(spec);
      const bool hyp = is_geometric_hyperplane(q4, h), gq = satisfies_gq_axiom(q4);
      const bool ok = m.ok() && hyp && gq;
      emit(Json{{"q", q},
                {"points", q4.points.size()},
                {"lines", q4.lines.size()},
                {"hyperplane_points", h.points.size()},
                {"hyperplane_lines", h.lines.size()},
                {"geometric_hyperplane", hyp},
                {"gq_axiom", gq},
                {"complement_points", comp.num_points()},
                {"complement_blocks", comp.num_blocks()},
                {"isomorphic", m.isomorphism.has_value()},
                {"isomorphism", m.isomorphism ? to_json(*m.isomorphism) : Json(nullptr)},
                {"aut_order", m.aut_order},
                {"expected_order", m.expected_order},
                {"generated_order", m.generated_order},
                {"ok", ok}},
           common, out);
      return ok ? kExitOk : kExitFailed;
    };
  });

  auto* fix = app.add_subcommand("fixture", "The order-3 example with two parallelisms");
  fix->callback([&] {
    action = [&] {
      const auto f = two_parallelism_example();
      emit(Json{{"structure", to_json(f.structure)},
                {"pi", to_json(f.pi)},
                {"pi_prime", to_json(f.pi_prime)},
                {"pi_points", f.pi_point_of_class},
                {"pi_prime_points", f.pi_prime_point_of_class},
                {"isomorphism", to_json(f.isomorphism)}},
           common, out);
      return kExitOk;
    };
  });

  auto* thm = app.add_subcommand("theorems", "Closure, translation and parallelism checks for every class");
  thm->add_option("--q", q, "Field order")->required();
  thm->add_option("--cap", cap, "Parallelism enumeration cap")->capture_default_str()
      ->check(CLI::PositiveNumber);
  thm->add_flag("--no-enumeration", no_enumeration, "Skip the R-invariant parallelism enumeration");
  thm->callback([&] {
    action = [&] {
      const auto g = make_group(q);
      if (q < 3 || q > 5) throw UsageError("the checks need 3 <= q <= 5");
      CheckOptions opts;
      opts.parallelism_cap = cap;
      opts.enumerate_parallelisms = !no_enumeration;
      const auto r = run_checks(g, opts);
      emit(check_report(r), common, out);
      return r.ok() ? kExitOk : kExitFailed;
    };
  });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    return action();
  } catch (const IoError& e) {
    err << "input error: " << e.what() << "\n";
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
  } catch (const FieldError& e) {
    err << "field error: " << e.what() << "\n";
  } catch (const DesignError& e) {
    err << "design error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
  } catch (const std::overflow_error& e) {
    err << "overflow: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace unital
