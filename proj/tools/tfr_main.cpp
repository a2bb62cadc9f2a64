// tfr: local cohomology of toric face rings from the command line.
//
// Exit status: 0 success, 1 a negative verdict or failed validation (the
// witness is printed), 2 bad input or usage.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tfr/cech.hpp"
#include "tfr/corpus.hpp"
#include "tfr/facering.hpp"
#include "tfr/fan.hpp"
#include "tfr/io.hpp"
#include "tfr/kpmod.hpp"
#include "tfr/verify.hpp"

namespace {

using tfr::io::json;

struct Options {
  std::string fan_path, complex_path, poset_path, module_path;
  std::string degree, face, field = "q", format = "text", corpus = "small", skyscraper;
  std::optional<int> i;
  std::size_t max_degree = 8;
  std::size_t threads = 0;
};

struct Result {
  json data;
  std::string text;
  int status = 0;
};

struct FanInput {
  tfr::Fan fan;
  std::optional<tfr::SimplicialComplex> complex;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> warnings;

FanInput load_fan(const Options& o) {
  if (!o.fan_path.empty() == !o.complex_path.empty()) throw UsageError("give exactly one of --fan or --complex");
  if (!o.fan_path.empty()) return {tfr::io::parse_fan(tfr::io::read_json_file(o.fan_path)), std::nullopt};
  auto complex = tfr::io::parse_complex(tfr::io::read_json_file(o.complex_path));
  return {tfr::fan_of_complex(complex), complex};
}

tfr::SimplicialComplex load_complex(const Options& o) {
  if (o.complex_path.empty()) throw UsageError("--complex is required");
  return tfr::io::parse_complex(tfr::io::read_json_file(o.complex_path));
}

// Stanley-Reisner degrees (length n) are embedded into Z^(n+1); fan
// degrees pass through. The mapping goes into `data`.
tfr::LatticeVector fan_degree(const FanInput& in, const Options& o, Result& r) {
  const tfr::LatticeVector a = tfr::io::parse_degree(o.degree);
  r.data["degree"] = tfr::io::to_json(a);
  if (in.complex && a.size() == in.complex->vertex_count()) {
    const auto b = tfr::embed_sr_degree(a);
    r.data["fan_degree"] = tfr::io::to_json(b);
    r.text += "# degree " + tfr::to_string(a) + " embedded as " + tfr::to_string(b) + "\n";
    return b;
  }
  if (a.size() != in.fan.ambient_dim())
    throw UsageError("degree " + tfr::to_string(a) + " has length " + std::to_string(a.size()) + ", expected " +
                     (in.complex ? std::to_string(in.complex->vertex_count()) + " or " : std::string()) +
                     std::to_string(in.fan.ambient_dim()));
  r.data["fan_degree"] = tfr::io::to_json(a);
  return a;
}

std::string dims_text(const tfr::GradedDims& d) {
  std::string s;
  for (const auto& [i, n] : d.support()) s += std::to_string(i) + " " + std::to_string(n) + "\n";
  return s.empty() ? "0\n" : s;
}

void verdict_into(Result& r, const char* key, const tfr::Verdict& v) {
  r.data[key] = tfr::io::to_json(v);
  r.text += std::string(v.result ? "true" : "false") + "\n";
  for (const auto& w : v.witnesses)
    r.text += "witness " + w.label + " degree " + std::to_string(w.degree) + " dim " + std::to_string(w.dimension) +
              "\n";
  if (!v.result) r.status = 1;
}

Result run_betti(const Options& o, const tfr::Field& f) {
  Result r;
  tfr::SimplicialComplex c;
  if (!o.poset_path.empty()) {
    c = tfr::order_complex(tfr::io::parse_poset(tfr::io::read_json_file(o.poset_path), &warnings));
  } else {
    c = load_complex(o);
    if (!o.face.empty()) c = tfr::link(c, tfr::io::parse_face(c, o.face));
  }
  const auto h = tfr::reduced_cohomology(c, f);
  r.data["reduced_cohomology"] = tfr::io::to_json(h);
  r.text = dims_text(h);
  return r;
}

Result run_link(const Options& o, const tfr::Field& f) {
  Result r;
  const auto c = load_complex(o);
  const auto lk = tfr::link(c, tfr::io::parse_face(c, o.face));
  const auto h = tfr::reduced_cohomology(lk, f);
  r.data["link"] = tfr::io::to_json(lk);
  r.data["reduced_cohomology"] = tfr::io::to_json(h);
  for (auto facet : lk.facets()) r.text += lk.face_label(facet) + "\n";
  r.text += "# reduced cohomology\n" + dims_text(h);
  return r;
}

Result run_lch(const Options& o, const tfr::Field& f) {
  Result r;
  const auto in = load_fan(o);
  const auto a = fan_degree(in, o, r);
  const auto table = tfr::local_cohomology_by_cone(in.fan, f);
  const auto dims = tfr::local_cohomology_at(table, in.fan, a);
  if (o.i) {
    r.data["i"] = *o.i;
    r.data["dim"] = dims[*o.i];
    r.text = std::to_string(dims[*o.i]) + "\n" + r.text;
  } else {
    r.data["local_cohomology"] = tfr::io::to_json(dims);
    r.text = dims_text(dims) + r.text;
  }
  return r;
}

Result run_lch_table(const Options& o, const tfr::Field& f) {
  Result r;
  const auto in = load_fan(o);
  const auto table = tfr::local_cohomology_by_cone(in.fan, f);
  r.data["krull_dimension"] = table.krull_dim();
  r.data["table"] = tfr::io::table_to_json(table, in.fan);
  for (std::size_t c = 0; c < in.fan.size(); ++c) {
    r.text += in.fan.cone(c).label();
    for (const auto& [i, n] : table.at(c).support()) r.text += " " + std::to_string(i) + ":" + std::to_string(n);
    r.text += "\n";
  }
  return r;
}

Result run_cm(const Options& o, const tfr::Field& f) {
  Result r;
  verdict_into(r, "cm", tfr::cm_test(load_fan(o).fan, f));
  return r;
}

Result run_buchsbaum(const Options& o, const tfr::Field& f) {
  Result r;
  const auto in = load_fan(o);
  if (!in.complex) throw UsageError("buchsbaum-test needs --complex");
  verdict_into(r, "buchsbaum", tfr::buchsbaum_test(in.fan, f));
  return r;
}

Result run_stanley(const Options& o, const tfr::Field& f) {
  Result r;
  const auto s = tfr::stanley_check(load_fan(o).fan, f);
  r.data["order_complex_cm"] = s.order_complex_cm;
  r.data["ring_cm"] = s.ring_cm;
  r.text = std::string("order_complex_cm ") + (s.order_complex_cm ? "true" : "false") + "\nring_cm " +
           (s.ring_cm ? "true" : "false") + "\n";
  return r;
}

tfr::KPModule load_module(const Options& o, const tfr::Field& f, Result& r) {
  if (!o.module_path.empty()) return tfr::io::parse_module(tfr::io::read_json_file(o.module_path), f, &warnings);
  if (!o.poset_path.empty()) {
    const auto p = tfr::io::parse_poset(tfr::io::read_json_file(o.poset_path), &warnings);
    if (o.skyscraper.empty()) return tfr::constant_module(p, f);
    r.data["skyscraper"] = o.skyscraper;
    return tfr::skyscraper(p, p.index_of(o.skyscraper), f);
  }
  const auto in = load_fan(o);
  return tfr::degree_sheaf(in.fan, fan_degree(in, o, r), f);
}

Result run_ext(const Options& o, const tfr::Field& f) {
  Result r;
  const auto m = load_module(o, f, r);
  const auto h = tfr::poset_cohomology(m, o.max_degree);
  r.data["ext"] = tfr::io::to_json(h);
  r.data["max_degree"] = o.max_degree;
  r.text = dims_text(h) + r.text;
  return r;
}

Result run_flasque(const Options& o, const tfr::Field& f) {
  Result r;
  const auto m = load_module(o, f, r);
  const auto v = tfr::is_flasque(m);
  r.data["flasque"] = v.flasque;
  std::string head = v.flasque ? "true\n" : "false\n";
  if (v.witness) {
    json open = json::array();
    for (auto x : v.witness->first) open.push_back(m.poset().label(x));
    r.data["witness"] = json{{"open", open}, {"removed", m.poset().label(v.witness->second)}};
    head += "witness open " + open.dump() + " removed " + m.poset().label(v.witness->second) + "\n";
    r.status = 1;
  }
  r.text = head + r.text;
  return r;
}

Result run_verify(const Options& o, const tfr::Field& f) {
  Result r;
  if (o.corpus != "small" && o.corpus != "full") throw UsageError("--corpus must be small or full");
  const auto corpus = o.corpus == "small" ? tfr::corpus::all_complexes(4) : tfr::corpus::standard_complexes();
  const auto report = tfr::verify_corpus(corpus, f, o.threads);
  json failures = json::array();
  for (const auto& d : report.disagreements) failures.push_back(json::parse(tfr::reproducer(d)));
  for (const auto& m : report.cm_mismatches) failures.push_back(json::parse(tfr::reproducer(m)));
  r.data = json{{"corpus", o.corpus},
                {"cases", report.cases},
                {"comparisons", report.comparisons},
                {"failures", failures},
                {"ok", report.ok()}};
  r.text = "corpus " + o.corpus + ": " + std::to_string(report.cases) + " complexes, " +
           std::to_string(report.comparisons) + " comparisons, " + std::to_string(failures.size()) + " failures\n";
  for (const auto& d : report.disagreements) r.text += "disagreement " + tfr::reproducer(d) + "\n";
  for (const auto& m : report.cm_mismatches) r.text += "cm mismatch " + tfr::reproducer(m) + "\n";
  if (!report.ok()) r.status = 1;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local cohomology of toric face rings"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* s) {
    s->add_option("--field", o.field, "q (default) or gf:<p>");
    s->add_option("--format", o.format, "text (default) or json")->check(CLI::IsMember({"text", "json"}));
  };
  auto fan_inputs = [&](CLI::App* s) {
    s->add_option("--fan", o.fan_path, "fan JSON");
    s->add_option("--complex", o.complex_path, "simplicial complex JSON (uses its Stanley-Reisner fan)");
  };

  using Runner = Result (*)(const Options&, const tfr::Field&);
  std::vector<std::pair<CLI::App*, Runner>> commands;

  auto* betti = app.add_subcommand("betti", "reduced cohomology of a complex, a link, or an order complex");
  betti->add_option("--complex", o.complex_path);
  betti->add_option("--poset", o.poset_path, "use the order complex of this poset");
  betti->add_option("--face", o.face, "take the link of this face first");
  commands.emplace_back(betti, run_betti);

  auto* link = app.add_subcommand("link", "link of a face");
  link->add_option("--complex", o.complex_path)->required();
  link->add_option("--face", o.face, "comma-separated vertex labels")->required();
  commands.emplace_back(link, run_link);

  auto* lch = app.add_subcommand("lch", "dim H^i_m(K[Σ])_a");
  fan_inputs(lch);
  lch->add_option("--degree", o.degree, "comma-separated integers")->required();
  lch->add_option("--i", o.i, "cohomological degree (all when omitted)");
  commands.emplace_back(lch, run_lch);

  auto* table = app.add_subcommand("lch-table", "per-cone local cohomology table");
  fan_inputs(table);
  commands.emplace_back(table, run_lch_table);

  auto* cm = app.add_subcommand("cm-test", "Cohen-Macaulay test");
  fan_inputs(cm);
  commands.emplace_back(cm, run_cm);

  auto* bb = app.add_subcommand("buchsbaum-test", "Buchsbaum test (complexes only)");
  fan_inputs(bb);
  commands.emplace_back(bb, run_buchsbaum);

  auto* st = app.add_subcommand("stanley-check", "order complex CM against ring CM");
  fan_inputs(st);
  commands.emplace_back(st, run_stanley);

  auto module_inputs = [&](CLI::App* s) {
    s->add_option("--module", o.module_path, "KP-module JSON");
    s->add_option("--poset", o.poset_path, "constant module on this poset");
    s->add_option("--skyscraper", o.skyscraper, "with --poset: skyscraper at this element");
    fan_inputs(s);
    s->add_option("--degree", o.degree, "with --fan/--complex: degree sheaf");
  };

  auto* ext = app.add_subcommand("ext", "Ext^n_KP(K, M) for n <= max degree");
  module_inputs(ext);
  ext->add_option("--max-degree", o.max_degree);
  commands.emplace_back(ext, run_ext);

  auto* fl = app.add_subcommand("flasque", "flasqueness of a KP-module");
  module_inputs(fl);
  commands.emplace_back(fl, run_flasque);

  auto* ver = app.add_subcommand("verify", "decomposition engine against the Čech oracle");
  ver->add_option("--corpus", o.corpus, "small (complexes on <= 4 vertices) or full (plus 50 random)");
  ver->add_option("--threads", o.threads, "worker threads (0 = all cores)");
  commands.emplace_back(ver, run_verify);

  for (auto& [s, _] : commands) common(s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const tfr::Field field = tfr::Field::parse(o.field);
    for (auto& [s, run] : commands) {
      if (!s->parsed()) continue;
      Result r = run(o, field);
      for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
      if (o.format == "json") {
        r.data["command"] = s->get_name();
        r.data["field"] = field.name();
        std::cout << tfr::io::dump(r.data);
      } else {
        std::cout << r.text;
      }
      return r.status;
    }
  } catch (const tfr::FanValidationError& e) {
    std::cerr << "fan validation failed: " << e.what() << "\n  cone " << e.first() << "\n  cone " << e.second() << "\n";
    return 1;
  } catch (const tfr::NonPointedCone& e) {
    std::cerr << "fan validation failed: " << e.what() << "\n";
    return 1;
  } catch (const tfr::FunctorialityError& e) {
    std::cerr << "module validation failed: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    // invalid_argument, out_of_range, length_error and domain_error are
    // input problems; anything else from logic_error is an internal fault.
    if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::out_of_range*>(&e) ||
        dynamic_cast<const std::length_error*>(&e) || dynamic_cast<const std::domain_error*>(&e)) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
