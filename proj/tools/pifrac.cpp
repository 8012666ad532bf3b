// Command-line driver: type-check, run, invert, tabulate and verify
// fractional-tier programs, and browse the built-in circuit gallery.
//
// Exit codes: 0 success; 1 a program raised its deallocation check or a
// verification failed; 2 usage, parse or type errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "pifrac/pifrac.hpp"

using namespace pifrac;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_check(const std::string& file) {
  const FracComb c = parse_program(read_file(file));
  std::cout << "dom: " << to_string(c.dom()) << "\n";
  std::cout << "cod: " << to_string(c.cod()) << "\n";
  return 0;
}

int cmd_run(const std::string& file, const std::string& input) {
  const FracComb c = parse_program(read_file(file));
  const FracVal v = parse_value_text(input);
  if (!has_type(v, c.dom()))
    throw TypeMismatch("input", to_string(c.dom()), to_string(v));
  const std::optional<FracVal> out = eval(c, v);
  if (!out) {
    std::cout << "exception\n";
    return 1;
  }
  std::cout << to_string(*out) << "\n";
  return 0;
}

int cmd_invert(const std::string& file) {
  const FracComb c = parse_program(read_file(file));
  std::cout << to_text(invert(c)) << "\n";
  return 0;
}

int cmd_truth_table(const std::string& file, bool json) {
  const FracComb c = parse_program(read_file(file));
  const auto rows = truth_table(c);
  if (json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const TruthRow& r : rows) {
      nlohmann::json row;
      row["in"] = to_string(r.in);
      if (r.out)
        row["out"] = to_string(*r.out);
      else
        row["out"] = nullptr;
      arr.push_back(row);
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const TruthRow& r : rows)
      std::cout << to_string(r.in) << " -> " << (r.out ? to_string(*r.out) : "exception")
                << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& file) {
  const FracComb c = parse_program(read_file(file));
  const ProgramReport rep = verify_program(c);
  std::cout << "rows: " << rep.rows << "\n";
  std::cout << "absent: " << rep.absent << "\n";
  std::cout << "bijective: " << (rep.bijective ? "yes" : "no") << "\n";
  std::cout << "round-trip: " << (rep.round_trip ? "yes" : "no") << "\n";
  if (!rep.ok()) {
    std::cerr << "verification failed\n";
    return 1;
  }
  std::cout << "verified\n";
  return 0;
}

int cmd_example(const std::string& name, bool extract, bool verify) {
  if (name.empty()) {
    for (const NamedCircuit& c : gallery())
      std::cout << c.name << "  -  " << c.summary << "\n";
    return 0;
  }
  const std::optional<NamedCircuit> found = find_circuit(name);
  if (!found) throw Error("no such circuit: " + name + " (try `example` for the list)");
  const NamedCircuit& c = *found;

  if (verify) {
    const CircuitReport rep = verify_circuit(c);
    std::cout << "rows: " << (rep.rows - rep.row_failures) << "/" << rep.rows
              << " match the reference\n";
    std::cout << "round-trip: " << (rep.round_trip ? "ok" : "failed") << "\n";
    if (rep.pointed_total) {
      std::cout << "pointed: " << (rep.pointed_total - rep.pointed_failures) << "/"
                << rep.pointed_total << " members extract and agree\n";
      std::cout << "extraction uniform: " << (rep.extraction_uniform ? "yes" : "no")
                << "\n";
    }
    if (!rep.ok()) {
      std::cerr << "verification failed\n";
      return 1;
    }
    std::cout << "verified: " << c.name << "\n";
    return 0;
  }
  if (extract) {
    if (c.pointed.empty())
      throw Error(c.name + " has no pointed family to extract from");
    std::cout << to_text(ext_comb(c.pointed.front())) << "\n";
    return 0;
  }
  std::cout << to_text(c.dynamic) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reversible combinator language with fractional ancilla types"};
  app.require_subcommand(1);

  std::string file, input, name;
  bool json = false, extract = false, verify = false;

  CLI::App* check = app.add_subcommand("check", "infer a program's domain and codomain");
  check->add_option("FILE", file)->required();

  CLI::App* run = app.add_subcommand("run", "evaluate a program on one input value");
  run->add_option("FILE", file)->required();
  run->add_option("--input", input, "input value, e.g. '(inl tt)' or F")->required();

  CLI::App* inv = app.add_subcommand("invert", "print the inverse program");
  inv->add_option("FILE", file)->required();

  CLI::App* tt = app.add_subcommand("truth-table", "tabulate a program over its domain");
  tt->add_option("FILE", file)->required();
  tt->add_flag("--json", json, "machine-readable rows");

  CLI::App* ex = app.add_subcommand("example", "print or verify a gallery circuit");
  ex->add_option("NAME", name, "circuit name; omit to list the gallery");
  ex->add_flag("--extract", extract, "print the extraction of the pointed family");
  ex->add_flag("--verify", verify, "run the circuit's verification suite");

  CLI::App* vf = app.add_subcommand("verify", "bijectivity and round-trip checks");
  vf->add_option("FILE", file)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(check)) return cmd_check(file);
    if (app.got_subcommand(run)) return cmd_run(file, input);
    if (app.got_subcommand(inv)) return cmd_invert(file);
    if (app.got_subcommand(tt)) return cmd_truth_table(file, json);
    if (app.got_subcommand(ex)) return cmd_example(name, extract, verify);
    if (app.got_subcommand(vf)) return cmd_verify(file);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
