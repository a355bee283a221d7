#include "toric/crosscheck.hpp"
#include "toric/gale.hpp"
#include "toric/generators.hpp"
#include "toric/io.hpp"
#include "toric/oracle.hpp"
#include "toric/selfdual.hpp"
#include "toric/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>

using namespace toric;
using io::Json;

namespace {

enum ExitCode {
  kOk = 0,
  kInapplicable = 1,
  kBadInput = 2,
  kGuard = 3,
  kDisagreement = 4,
};

struct Options {
  std::string format = "json";
  bool verify = false;
  std::string file;
  std::string subset;
  std::string basis;
  std::string output;
  std::size_t m = 2;
  long alpha = 1;
  std::string alphas;
  std::string rows;
  std::uint64_t seed = 1;
  std::size_t count = 50;
};

Json config_echo(const Configuration &c) {
  Json out = io::to_json(c.weights);
  out["regular"] = c.regular;
  out["lattice_normalized"] = c.lattice_normalized;
  return out;
}

Configuration load(const Options &o) {
  return config::parse_configuration(io::read_matrix_file(o.file));
}

Json verdict_report(const std::string &command, const Configuration &c,
                    const Verdict &v) {
  Json r{{"command", command}};
  r.update(io::to_json(v));
  r["config_echo"] = config_echo(c);
  return r;
}

Json value_report(const std::string &command, const std::string &criterion,
                  Json witness, const Configuration &c) {
  return Json{{"command", command},
              {"verdict", nullptr},
              {"criterion", criterion},
              {"witness", std::move(witness)},
              {"notes", Json::array()},
              {"config_echo", config_echo(c)}};
}

void attach(Json &r, const verify::Outcome &o) {
  r["verification"] = {
      {"method", o.method}, {"agrees", o.agrees}, {"details", o.details}};
}

// Generated matrices go to --output when given.
void write_output(const Options &o, const Configuration &c) {
  if (o.output.empty())
    return;
  std::ofstream out(o.output);
  if (!out)
    throw InvalidInput("cannot write " + o.output);
  out << io::to_json(c.weights).dump(2) << "\n";
}

void print_text(const Json &j, std::ostream &os, const std::string &indent) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json &v = it.value();
    os << indent << it.key() << ":";
    if (v.is_object() && v.contains("entries")) {
      os << "\n";
      for (const auto &row : v["entries"]) {
        os << indent << "  ";
        for (const auto &x : row)
          os << " " << (x.is_string() ? x.get<std::string>() : x.dump());
        os << "\n";
      }
      for (auto k = v.begin(); k != v.end(); ++k)
        if (k.key() != "entries" && k.key() != "rows" && k.key() != "cols")
          os << indent << "  " << k.key() << ": " << k.value().dump() << "\n";
    } else if (v.is_object()) {
      os << "\n";
      print_text(v, os, indent + "  ");
    } else if (v.is_array() && !v.empty() && v[0].is_object()) {
      os << "\n";
      for (const auto &e : v) {
        os << indent << "  -\n";
        print_text(e, os, indent + "    ");
      }
    } else {
      os << " " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

Json circuits_witness(const Configuration &c) {
  Json list = Json::array();
  for (const auto &ci : oracle::enumerate_circuits(c))
    list.push_back(Json{{"support", io::to_json(ci.support)},
                        {"relation", io::to_json(ci.relation)}});
  return Json{{"type", "circuits"}, {"count", list.size()}, {"circuits", list}};
}

Json flats_witness(const GaleDual &b) {
  Json list = Json::array();
  for (const auto &f : oracle::enumerate_flats(b)) {
    IntVector sum(b.rank());
    for (auto i : f.closure)
      for (std::size_t k = 0; k < b.rank(); ++k)
        sum[k] += b.matrix(i, k);
    list.push_back(Json{{"generators", io::to_json(f.generators)},
                        {"closure", io::to_json(f.closure)},
                        {"sum", io::to_json(sum)}});
  }
  return Json{{"type", "flats"}, {"count", list.size()}, {"flats", list}};
}

Json crosscheck_report(const Options &o) {
  auto sweeps = crosscheck::run_all(o.seed, o.count);
  Json list = Json::array();
  bool ok = true;
  for (const auto &s : sweeps) {
    ok = ok && s.passed();
    list.push_back(Json{{"name", s.name},
                        {"instances", s.instances},
                        {"checks", s.checks},
                        {"positives", s.positives},
                        {"violations", s.violations},
                        {"examples", s.examples}});
  }
  return Json{{"command", "oracle crosscheck"},
              {"verdict", ok},
              {"criterion", "oracle-agreement"},
              {"witness",
               {{"type", "crosscheck"},
                {"seed", o.seed},
                {"count", o.count},
                {"sweeps", list}}},
              {"notes", Json::array()},
              {"config_echo", nullptr}};
}

Json generate_report(const std::string &kind, const Options &o) {
  Configuration c;
  Json r;
  if (kind == "lawrence") {
    IntMatrix m = io::parse_inline_matrix(o.rows);
    c = gen::lawrence(m);
    try {
      Verdict v = engine::lawrence_strong_parity(m);
      r = verdict_report("generate lawrence", c, v);
      if (o.verify)
        attach(r, verify::lawrence_parity(m, v));
    } catch (const InapplicableCriterion &e) {
      r = value_report("generate lawrence", "lawrence-parity",
                       Json{{"type", "none"}}, c);
      r["notes"].push_back(e.what());
    }
    r["lower_block"] = io::to_json(m);
  } else {
    if (kind == "segre")
      c = gen::segre(o.m);
    else if (kind == "family-alpha")
      c = gen::family_alpha(o.alpha);
    else if (kind == "family-dim")
      c = gen::family_dim(io::parse_long_list(o.alphas));
    else
      c = gen::family_codim(o.m, io::parse_long_list(o.alphas));
    Verdict v = engine::is_self_dual(c);
    r = verdict_report("generate " + kind, c, v);
    if (o.verify)
      attach(r, verify::self_dual(c, v));
  }
  r["affine_dim"] = config::affine_dim(c);
  write_output(o, c);
  if (!o.output.empty())
    r["output"] = o.output;
  return r;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Self-duality of projective toric varieties from lattice "
               "configurations"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--verify", o.verify,
               "Re-check verdicts and witnesses with the brute-force oracles");

  std::function<Json()> action;
  auto file_arg = [&o](CLI::App *sub) {
    sub->add_option("file", o.file, "Matrix file (JSON or plain text)")
        ->required();
  };

  auto *gale_cmd = app.add_subcommand("gale", "Canonical Gale dual");
  file_arg(gale_cmd);
  gale_cmd->callback([&] {
    action = [&] {
      Configuration c = load(o);
      GaleDual b = gale::gale_dual(c);
      Json w{{"type", "gale_dual"},
             {"matrix", io::to_json(b.matrix)},
             {"pyramidal", b.has_zero_row()}};
      return value_report("gale", "gale-dual", w, c);
    };
  });

  auto *check = app.add_subcommand("check", "Decide a property");
  check->require_subcommand(1);
  auto *sd = check->add_subcommand("self-dual", "Self-duality");
  file_arg(sd);
  sd->callback([&] {
    action = [&] {
      Configuration c = load(o);
      Verdict v = engine::is_self_dual(c);
      Json r = verdict_report("check self-dual", c, v);
      if (o.verify)
        attach(r, verify::self_dual(c, v));
      return r;
    };
  });
  auto *strong = check->add_subcommand("strong", "Strong self-duality");
  file_arg(strong);
  strong->add_option("--basis", o.basis, "Gale dual to use (n x r matrix file)");
  strong->callback([&] {
    action = [&] {
      Configuration c = load(o);
      std::optional<IntMatrix> basis;
      if (!o.basis.empty())
        basis = io::read_matrix_file(o.basis);
      Verdict v = engine::is_strongly_self_dual(c, basis);
      Json r = verdict_report("check strong", c, v);
      if (o.verify)
        attach(r, verify::strong(c, v));
      return r;
    };
  });
  auto *facial = check->add_subcommand("facial", "Face test for a subset");
  file_arg(facial);
  facial->add_option("--subset", o.subset, "0-based indices, e.g. 0,2,3")
      ->required();
  facial->callback([&] {
    action = [&] {
      Configuration c = load(o);
      IndexSet s = io::parse_index_list(o.subset);
      Verdict v = gale::is_facial(c, s);
      Json r = verdict_report("check facial", c, v);
      if (o.verify)
        attach(r, verify::facial(c, s, v));
      return r;
    };
  });

  auto *decompose = app.add_subcommand("decompose", "Repeats and pyramids");
  file_arg(decompose);
  decompose->callback([&] {
    action = [&] {
      Configuration c = load(o);
      DecompositionReport rep = config::decompose(c);
      return value_report("decompose", "decomposition",
                          io::to_json(witness::Payload{rep}), c);
    };
  });

  auto *circuits = app.add_subcommand("circuits", "Enumerate circuits");
  file_arg(circuits);
  circuits->callback([&] {
    action = [&] {
      Configuration c = load(o);
      return value_report("circuits", "subset-enumeration",
                          circuits_witness(c), c);
    };
  });

  auto *flats = app.add_subcommand("flats", "Enumerate Gale flats");
  file_arg(flats);
  flats->callback([&] {
    action = [&] {
      Configuration c = load(o);
      return value_report("flats", "subset-enumeration",
                          flats_witness(gale::gale_dual(c)), c);
    };
  });

  auto *smooth =
      app.add_subcommand("smooth-certificate", "Vertex smoothness test");
  file_arg(smooth);
  smooth->callback([&] {
    action = [&] {
      Configuration c = load(o);
      Verdict v = engine::smooth_certificate(c);
      Json r = verdict_report("smooth-certificate", c, v);
      r["status"] = v.value ? "SmoothCertified" : "NotCertified";
      if (o.verify)
        attach(r, verify::smoothness(c, v));
      return r;
    };
  });

  auto *hyper = app.add_subcommand("classify-hypersurface",
                                   "Classify n = dim + 2 configurations");
  file_arg(hyper);
  hyper->callback([&] {
    action = [&] {
      Configuration c = load(o);
      auto h = engine::hypersurface_class(c);
      Json r = value_report(
          "classify-hypersurface", "gale-pattern",
          Json{{"type", "hypersurface_class"}, {"class", engine::to_string(h)}},
          c);
      r["verdict"] = h != engine::HypersurfaceClass::NotHypersurface;
      return r;
    };
  });

  auto *generate = app.add_subcommand("generate", "Example families");
  generate->require_subcommand(1);
  generate->add_option("--output", o.output, "Write the matrix JSON here");
  auto *g_segre = generate->add_subcommand("segre", "P^1 x P^(m-1)");
  g_segre->add_option("--m", o.m, "m >= 2")->required();
  auto *g_law = generate->add_subcommand("lawrence", "(Id Id ; 0 M)");
  g_law->add_option("--rows", o.rows, "Rows of M, ';'-separated")->required();
  auto *g_alpha = generate->add_subcommand("family-alpha", "5 x 7 A_alpha");
  g_alpha->add_option("--alpha", o.alpha, "Nonzero integer")->required();
  auto *g_dim = generate->add_subcommand("family-dim", "Any dimension >= 3");
  g_dim->add_option("--alphas", o.alphas, "Nonzero, summing to zero")
      ->required();
  auto *g_codim =
      generate->add_subcommand("family-codim", "Any codimension >= 2");
  g_codim->add_option("--m", o.m, "Codimension m >= 2")->required();
  g_codim->add_option("--alphas", o.alphas, "Nonzero, summing to zero")
      ->required();
  for (auto *sub : {g_segre, g_law, g_alpha, g_dim, g_codim}) {
    std::string kind = sub->get_name();
    sub->callback([&, kind] { action = [&, kind] { return generate_report(kind, o); }; });
  }

  auto *oracle_cmd = app.add_subcommand("oracle", "Brute-force referees");
  oracle_cmd->require_subcommand(1);
  auto *cross = oracle_cmd->add_subcommand(
      "crosscheck", "Seeded agreement sweeps between engine and oracles");
  cross->add_option("--seed", o.seed, "Random seed");
  cross->add_option("--count", o.count, "Instances per sweep");
  cross->callback([&] { action = [&] { return crosscheck_report(o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e);
  }

  auto start = std::chrono::steady_clock::now();
  Json report;
  int code = kOk;
  try {
    report = action();
  } catch (const InapplicableCriterion &e) {
    report = Json{{"error", e.what()},
                  {"criterion", e.criterion()},
                  {"hypothesis", e.hypothesis()}};
    code = kInapplicable;
  } catch (const GuardExceeded &e) {
    report = Json{{"error", e.what()}};
    code = kGuard;
  } catch (const Error &e) {
    report = Json{{"error", e.what()}};
    code = kBadInput;
  } catch (const nlohmann::json::exception &e) {
    report = Json{{"error", std::string("malformed JSON: ") + e.what()}};
    code = kBadInput;
  }
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  report["timings"] = {{"total_ms", ms}};

  if (code == kOk) {
    if (report.contains("verification") && !report["verification"]["agrees"])
      code = kDisagreement;
    if (report.value("criterion", "") == "oracle-agreement" &&
        !report["verdict"].get<bool>())
      code = kDisagreement;
  }

  std::ostream &os = code == kOk || code == kDisagreement ? std::cout : std::cerr;
  if (o.format == "text")
    print_text(report, os, "");
  else
    os << report.dump(2) << "\n";
  return code;
}
