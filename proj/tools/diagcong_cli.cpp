// Command-line front end: enumerate diagram monoids, compute and compare
// congruence lattices, classify generating pairs, run the verification
// suite, and export DOT/JSON.  Machine-readable output goes to stdout,
// progress and errors to stderr.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "diagcong/catalog.hpp"
#include "diagcong/congruence.hpp"
#include "diagcong/exportfmt.hpp"
#include "diagcong/verification.hpp"

namespace {

using namespace diagcong;

struct Options {
  std::string family = "P";
  int         degree = 0;
  uint64_t    max_elements = 1'000'000;
};

Monoid build_monoid(Options const& opt) {
  return enumerate(family_from_string(opt.family), opt.degree,
                   opt.max_elements);
}

uint64_t lattice_guard(Options const& opt) {
  // --max-elements also lifts the brute-force lattice guard when raised
  // beyond the default.
  return std::max<uint64_t>(1200, opt.max_elements == 1'000'000
                                      ? 0
                                      : opt.max_elements);
}

void print_lattice(std::ostream& os, CongruenceLattice const& lat,
                   std::function<std::string(int)> name) {
  os << lat.congruences.size() << " nodes\n";
  for (size_t i = 0; i < lat.congruences.size(); ++i) {
    os << "node " << i << ": " << name(static_cast<int>(i)) << " ("
       << lat.congruences[i].num_classes() << " classes)\n";
  }
  for (auto const& [a, b] : lat.hasse) {
    os << "cover: " << name(a) << " < " << name(b) << "\n";
  }
  if (lat.is_chain()) {
    os << "chain: ";
    for (size_t i = 0; i < lat.congruences.size(); ++i) {
      os << (i ? " < " : "") << name(static_cast<int>(i));
    }
    os << "\n";
  }
}

int cmd_enumerate(Options const& opt, bool dump) {
  Monoid m = build_monoid(opt);
  std::cout << to_string(m.family()) << "_" << m.degree() << ": " << m.size()
            << " elements\n";
  if (dump) {
    for (elem_id i = 0; i < m.size(); ++i) {
      std::cout << m.at(i).to_string() << "\n";
    }
  }
  return 0;
}

int cmd_lattice(Options const& opt, bool brute, bool predicted) {
  Family f = family_from_string(opt.family);
  if (brute) {
    Monoid            m   = build_monoid(opt);
    CongruenceLattice lat = all_congruences(m, lattice_guard(opt));
    std::cout << to_string(f) << "_" << opt.degree << " brute-force lattice: ";
    print_lattice(std::cout, lat,
                  [](int i) { return "c" + std::to_string(i); });
    return 0;
  }
  check_classification_range(f, opt.degree);
  (void) predicted;
  try {
    Monoid         m    = build_monoid(opt);
    LabeledLattice pred = predicted_lattice(m);
    std::cout << to_string(f) << "_" << opt.degree << " predicted lattice: ";
    print_lattice(std::cout, pred.lattice,
                  [&pred](int i) { return pred.name(i); });
  } catch (std::length_error const&) {
    SymbolicLattice sym = predicted_lattice_symbolic(f, opt.degree);
    std::cerr << "enumeration guard exceeded; emitting symbolic structure "
                 "(labels and covers only, unverified)\n";
    std::cout << to_string(f) << "_" << opt.degree
              << " predicted lattice (symbolic, unverified): "
              << sym.nodes.size() << " nodes\n";
    for (size_t i = 0; i < sym.nodes.size(); ++i) {
      std::cout << "node " << i << ": " << sym.name(static_cast<int>(i))
                << "\n";
    }
    for (auto const& [a, b] : sym.hasse) {
      std::cout << "cover: " << sym.name(a) << " < " << sym.name(b) << "\n";
    }
  }
  return 0;
}

int cmd_diff(Options const& opt) {
  Family f = family_from_string(opt.family);
  try {
    check_classification_range(f, opt.degree);
  } catch (std::invalid_argument const& e) {
    std::cout << e.what() << "\n";
    return 0;
  }
  Monoid            m     = build_monoid(opt);
  CongruenceLattice brute = all_congruences(m, lattice_guard(opt));
  LabeledLattice    pred  = predicted_lattice(m);
  if (brute.congruences == pred.lattice.congruences
      && brute.hasse == pred.lattice.hasse) {
    std::cout << "PASS " << to_string(f) << "_" << opt.degree << ": "
              << brute.congruences.size() << " = "
              << pred.lattice.congruences.size() << " nodes\n";
    return 0;
  }
  std::cout << "MISMATCH " << to_string(f) << "_" << opt.degree << ": brute "
            << brute.congruences.size() << " nodes, predicted "
            << pred.lattice.congruences.size() << " nodes\n";
  for (size_t i = 0; i < pred.lattice.congruences.size(); ++i) {
    if (brute.find(pred.lattice.congruences[i]) < 0) {
      std::cout << "missing: " << pred.name(static_cast<int>(i)) << "\n";
    }
  }
  for (size_t i = 0; i < brute.congruences.size(); ++i) {
    if (pred.lattice.find(brute.congruences[i]) < 0) {
      std::cout << "extra: brute node " << i << " ("
                << brute.congruences[i].num_classes() << " classes)\n";
    }
  }
  if (brute.congruences == pred.lattice.congruences
      && brute.hasse != pred.lattice.hasse) {
    std::cout << "order disagreement in Hasse edges\n";
  }
  return 1;
}

int cmd_classify(Options const& opt, std::vector<std::string> const& pair) {
  Family  f = family_from_string(opt.family);
  Diagram a = Diagram::parse(pair[0], opt.degree);
  Diagram b = Diagram::parse(pair[1], opt.degree);
  CongruenceLabel label = classify_pair(f, opt.degree, a, b);
  Monoid          m     = build_monoid(opt);
  Congruence      closure =
      principal_congruence(m, m.id_of(a), m.id_of(b));
  Congruence realized = realize_label(m, label);
  std::cout << "pair ranks: " << rank(a) << ", " << rank(b) << "\n";
  std::cout << "label: " << label.str() << "\n";
  std::cout << "closure classes: " << closure.num_classes() << "\n";
  std::cout << "closure matches label: "
            << (closure == realized ? "yes" : "NO") << "\n";
  return closure == realized ? 0 : 1;
}

int cmd_export(Options const& opt, bool brute, std::string const& dot_path,
               std::string const& json_path) {
  Family            f = family_from_string(opt.family);
  Monoid            m = build_monoid(opt);
  CongruenceLattice lat;
  if (brute) {
    lat = all_congruences(m, lattice_guard(opt));
  } else {
    check_classification_range(f, opt.degree);
    lat = predicted_lattice(m).lattice;
  }
  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    out << export_dot(lat);
    std::cerr << "wrote " << dot_path << "\n";
  }
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    out << export_json(f, opt.degree, lat);
    std::cerr << "wrote " << json_path << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"diagram monoid congruence lattices"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&opt](CLI::App* cmd, bool need_degree = true) {
    cmd->add_option("-f,--family", opt.family,
                    "family tag: P, PB, B, PP, M, J, I, O, S");
    auto* deg = cmd->add_option("-n,--degree", opt.degree, "degree");
    if (need_degree) {
      deg->required();
    }
    cmd->add_option("--max-elements", opt.max_elements,
                    "size guard override");
  };

  bool dump = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "enumerate a monoid");
  add_common(enumerate_cmd);
  enumerate_cmd->add_flag("--dump", dump, "print every element");

  bool brute = false, predicted = false;
  auto* lattice_cmd = app.add_subcommand("lattice", "print a lattice");
  add_common(lattice_cmd);
  lattice_cmd->add_flag("--brute", brute, "brute-force lattice");
  lattice_cmd->add_flag("--predicted", predicted, "predicted lattice");

  auto* diff_cmd =
      app.add_subcommand("diff", "compare brute force against prediction");
  add_common(diff_cmd);

  std::vector<std::string> pair;
  auto* classify_cmd =
      app.add_subcommand("classify", "classify a generating pair");
  add_common(classify_cmd);
  // allow_extra_args(false) keeps CLI11 from treating the bracketed diagram
  // syntax as its own list format.
  classify_cmd->add_option("--pair", pair, "two diagrams")
      ->expected(2)
      ->allow_extra_args(false)
      ->required();

  auto* verify_cmd =
      app.add_subcommand("verify", "run the full verification suite");
  add_common(verify_cmd, false);

  bool        export_brute = false, export_predicted = false;
  std::string dot_path, json_path;
  auto* export_cmd = app.add_subcommand("export", "write DOT/JSON");
  add_common(export_cmd);
  export_cmd->add_flag("--brute", export_brute, "brute-force lattice");
  export_cmd->add_flag("--predicted", export_predicted, "predicted lattice");
  export_cmd->add_option("--dot", dot_path, "DOT output path");
  export_cmd->add_option("--json", json_path, "JSON output path");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (enumerate_cmd->parsed()) {
      return cmd_enumerate(opt, dump);
    }
    if (lattice_cmd->parsed()) {
      if (brute == predicted) {
        std::cerr << "lattice: pass exactly one of --brute, --predicted\n";
        return 2;
      }
      return cmd_lattice(opt, brute, predicted);
    }
    if (diff_cmd->parsed()) {
      return cmd_diff(opt);
    }
    if (classify_cmd->parsed()) {
      return cmd_classify(opt, pair);
    }
    if (verify_cmd->parsed()) {
      int failures = diagcong::run_verification(std::cout, std::cerr);
      return failures == 0 ? 0 : 1;
    }
    if (export_cmd->parsed()) {
      if (export_brute == export_predicted) {
        std::cerr << "export: pass exactly one of --brute, --predicted\n";
        return 2;
      }
      if (dot_path.empty() && json_path.empty()) {
        std::cerr << "export: pass --dot and/or --json\n";
        return 2;
      }
      return cmd_export(opt, export_brute, dot_path, json_path);
    }
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
