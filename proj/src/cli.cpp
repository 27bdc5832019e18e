#include "qlh/cli.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <thread>

#include "qlh/expr.hpp"
#include "qlh/graded.hpp"
#include "qlh/relations.hpp"

namespace qlh::cli {

namespace {

struct Shared {
  std::string lattice_path;
  bool q1 = false;
};

LatticeSpec lattice_from(const Shared& s) {
  return s.lattice_path.empty() ? LatticeSpec::rank_one(1) : load_lattice(s.lattice_path);
}

std::string print_poly(const LaurentPoly& f, bool q1) {
  return to_string(q1 ? LaurentPoly(eval_at_one(f)) : f);
}

std::string print_double(const DoubleElement& u, Basis plus, Basis minus, bool q1) {
  DoubleReadout r = readout(u, plus, minus);
  if (q1) r = specialize_q1(r);
  return to_string(r);
}

SymElement specialize(const SymElement& x) {
  SymElement out(x.colors(), x.basis());
  for (const auto& [label, c] : x.terms()) out.add_term(label, LaurentPoly(eval_at_one(c)));
  return out;
}

SymTensor specialize(const SymTensor& t) {
  SymTensor out(t.colors(), t.left_basis(), t.right_basis());
  for (const auto& [key, c] : t.terms()) out.add_term(key.first, key.second, LaurentPoly(eval_at_one(c)));
  return out;
}

unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in quantum lattice Heisenberg algebras", "qlh"};
  app.require_subcommand(1);

  Shared shared;
  auto add_lattice = [&](CLI::App* cmd) {
    cmd->add_option("--lattice", shared.lattice_path, "Lattice file (default: rank 1, <1,1> = 1)");
  };
  auto add_q1 = [&](CLI::App* cmd) { cmd->add_flag("--q1", shared.q1, "Specialize printed coefficients at q = 1"); };

  int exit_code = kExitOk;
  std::string basis_text = "p", minus_basis_text;

  // mul
  std::string mul_expr;
  auto* mul_cmd = app.add_subcommand("mul", "Normal-order a product in the Heisenberg double");
  mul_cmd->add_option("expr", mul_expr, "Expression, e.g. \"h-(1,1)*h+(1,1)\"")->required();
  mul_cmd->add_option("--basis", basis_text, "Readout basis p|h|e");
  mul_cmd->add_option("--minus-basis", minus_basis_text, "Readout basis for the H- factor (default: --basis)");
  add_lattice(mul_cmd);
  add_q1(mul_cmd);
  mul_cmd->callback([&] {
    const LatticeHeisenberg algebra(lattice_from(shared));
    const Basis plus = parse_basis(basis_text);
    const Basis minus = minus_basis_text.empty() ? plus : parse_basis(minus_basis_text);
    const Expr e = parse_expr(mul_expr, {algebra.colors()});
    out << print_double(eval_double(e, algebra.pairing), plus, minus, shared.q1) << "\n";
  });

  // commutator
  std::string comm_a, comm_b;
  auto* comm_cmd = app.add_subcommand("commutator", "Commutator [A, B] in the Heisenberg double");
  comm_cmd->add_option("a", comm_a)->required();
  comm_cmd->add_option("b", comm_b)->required();
  comm_cmd->add_option("--basis", basis_text, "Readout basis p|h|e");
  add_lattice(comm_cmd);
  add_q1(comm_cmd);
  comm_cmd->callback([&] {
    const LatticeHeisenberg algebra(lattice_from(shared));
    const Basis b = parse_basis(basis_text);
    const ParseOptions opts{algebra.colors()};
    const DoubleElement u = eval_double(parse_expr(comm_a, opts), algebra.pairing);
    const DoubleElement v = eval_double(parse_expr(comm_b, opts), algebra.pairing);
    out << print_double(commutator(u, v), b, b, shared.q1) << "\n";
  });

  // omega
  std::string omega_expr;
  auto* omega_cmd = app.add_subcommand("omega", "Apply the involution Omega in the Heisenberg double");
  omega_cmd->add_option("expr", omega_expr)->required();
  omega_cmd->add_option("--basis", basis_text, "Readout basis p|h|e");
  add_lattice(omega_cmd);
  add_q1(omega_cmd);
  omega_cmd->callback([&] {
    const LatticeHeisenberg algebra(lattice_from(shared));
    const Basis b = parse_basis(basis_text);
    const DoubleElement u = eval_double(parse_expr(omega_expr, {algebra.colors()}), algebra.pairing);
    out << print_double(omega_double(u), b, b, shared.q1) << "\n";
  });

  // pair
  std::string pair_x, pair_y;
  auto* pair_cmd = app.add_subcommand("pair", "Evaluate the Hopf pairing <X, Y>");
  pair_cmd->add_option("x", pair_x, "Element of H+")->required();
  pair_cmd->add_option("y", pair_y, "Element of H-")->required();
  bool pair_recursive_flag = false;
  pair_cmd->add_flag("--recursive", pair_recursive_flag, "Use the axiom-driven recursive evaluator");
  add_lattice(pair_cmd);
  add_q1(pair_cmd);
  pair_cmd->callback([&] {
    const LatticeHeisenberg algebra(lattice_from(shared));
    const ParseOptions opts{algebra.colors()};
    const SymElement x = eval_sym(parse_expr(pair_x, opts), algebra.colors());
    const SymElement y = eval_sym(parse_expr(pair_y, opts), algebra.colors());
    const LaurentPoly v =
        pair_recursive_flag ? pair_recursive(x, y, *algebra.pairing) : pair(x, y, *algebra.pairing);
    out << print_poly(v, shared.q1) << "\n";
  });

  // convert
  std::string convert_expr, convert_to = "p";
  auto* convert_cmd = app.add_subcommand("convert", "Re-express a symmetric function in the p, h or e basis");
  convert_cmd->add_option("expr", convert_expr)->required();
  convert_cmd->add_option("--to", convert_to, "Target basis p|h|e");
  add_lattice(convert_cmd);
  add_q1(convert_cmd);
  convert_cmd->callback([&] {
    const int colors = lattice_from(shared).rank();
    SymElement x = convert(eval_sym(parse_expr(convert_expr, {colors}), colors), parse_basis(convert_to));
    if (shared.q1) x = specialize(x);
    out << to_string(x) << "\n";
  });

  // coproduct
  std::string cop_expr;
  auto* cop_cmd = app.add_subcommand("coproduct", "Sweedler expansion of the coproduct");
  cop_cmd->add_option("expr", cop_expr)->required();
  cop_cmd->add_option("--basis", basis_text, "Basis for both tensor factors p|h|e");
  add_lattice(cop_cmd);
  add_q1(cop_cmd);
  cop_cmd->callback([&] {
    const int colors = lattice_from(shared).rank();
    const Basis b = parse_basis(basis_text);
    SymTensor t = convert(coproduct(eval_sym(parse_expr(cop_expr, {colors}), colors)), b, b);
    if (shared.q1) t = specialize(t);
    out << to_string(t) << "\n";
  });

  // qdim
  long chi = 0;
  int power = 1;
  std::string kind = "sym";
  auto* qdim_cmd = app.add_subcommand("qdim", "Graded dimension of S^k(V) or Lambda^k(V) with qdim V = [chi]");
  qdim_cmd->add_option("--chi", chi, "Lattice value chi")->required();
  qdim_cmd->add_option("--power", power, "Power k")->required()->check(CLI::NonNegativeNumber);
  qdim_cmd->add_option("--kind", kind, "sym|ext")->check(CLI::IsMember({"sym", "ext"}));
  add_q1(qdim_cmd);
  qdim_cmd->callback([&] {
    const GradedVS v = from_quantum_int(chi);
    const LaurentPoly f = kind == "sym" ? qdim_sym_power(v, power) : qdim_ext_power(v, power);
    out << print_poly(f, shared.q1) << "\n";
  });

  // verify
  int verify_max = 5;
  std::string which = "all";
  unsigned threads = default_threads();
  auto* verify_cmd = app.add_subcommand("verify", "Check the h/e presentation relations exactly");
  add_lattice(verify_cmd);
  verify_cmd->add_option("--max", verify_max, "Largest m, n")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--which", which, "hh|eh|ee|he|all");
  verify_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  add_q1(verify_cmd);
  verify_cmd->callback([&] {
    const LatticeHeisenberg algebra(lattice_from(shared));
    const VerificationReport report = verify(algebra, {verify_max, parse_checks(which), shared.q1, threads});
    out << report.table();
    if (!report.passed()) exit_code = kExitFailed;
  });

  // integrality
  int integrality_max = 4;
  auto* int_cmd = app.add_subcommand("integrality", "Check integrality of h-h+ and e-h+ normal orderings");
  add_lattice(int_cmd);
  int_cmd->add_option("--max", integrality_max, "Largest m, n")->check(CLI::NonNegativeNumber);
  int_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  int_cmd->callback([&] {
    const LatticeHeisenberg algebra(lattice_from(shared));
    const VerificationReport report = integrality_scan(algebra, integrality_max, threads);
    out << report.table();
    if (!report.passed()) exit_code = kExitFailed;
  });

  // series-check
  int series_bound = 8;
  auto* series_cmd = app.add_subcommand("series-check", "Check H(t) = exp(sum p_r t^r / r) and E(-t)H(t) = 1");
  series_cmd->add_option("--bound", series_bound, "Largest degree")->check(CLI::NonNegativeNumber);
  series_cmd->callback([&] {
    auto report = [&](const char* name, const SeriesCheckResult& r) {
      out << name << ": " << (r.ok ? "pass" : "FAIL at degree " + std::to_string(*r.failing_degree)) << "\n";
      if (!r.ok) exit_code = kExitFailed;
    };
    report("H(t) = exp(sum p_r t^r/r)", series_check_H(series_bound));
    report("E(-t)H(t) = 1", series_check_EH(series_bound));
  });

  // partitions
  int part_n = 0, part_colors = 1;
  auto* part_cmd = app.add_subcommand("partitions", "List (multi)partitions of n with z_lambda");
  part_cmd->add_option("n", part_n)->required()->check(CLI::NonNegativeNumber);
  part_cmd->add_option("--colors", part_colors, "Number of colors")->check(CLI::PositiveNumber);
  part_cmd->callback([&] {
    if (part_colors == 1) {
      for (const auto& p : partitions_of(part_n)) out << p.to_string() << " z=" << z_of(p).get_str() << "\n";
    } else {
      for (const auto& mp : multipartitions_of(part_n, part_colors)) out << mp.to_string() << "\n";
    }
  });

  std::vector<std::string> storage{"qlh"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return exit_code;
}

}  // namespace qlh::cli
