#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sv/expr.hpp"
#include "sv/json_io.hpp"
#include "sv/verify.hpp"

namespace {

struct ModuleFlags {
  std::string module = "universal";
  std::string eta1 = "0", eta2 = "0", m1 = "0", eta3 = "0";
  std::string xi = "0", zeta = "0";
};

void add_module_flags(CLI::App* cmd, ModuleFlags& mf) {
  cmd->add_option("--module", mf.module, "universal | quotient | verma")
      ->check(CLI::IsMember({"universal", "quotient", "verma"}));
  cmd->add_option("--eta1", mf.eta1, "value on L1 (rational, e.g. -3/5)");
  cmd->add_option("--eta2", mf.eta2, "value on L2");
  cmd->add_option("--m1", mf.m1, "value on M1");
  cmd->add_option("--eta3", mf.eta3, "value on Y0, i.e. on Y_{1/2}");
  cmd->add_option("--xi", mf.xi, "M_0 eigenvalue (quotient and verma)");
  cmd->add_option("--zeta", mf.zeta, "L_0 eigenvalue (verma)");
}

sv::ModuleSpec build_spec(const ModuleFlags& mf) {
  sv::WhittakerHom psi{.eta1 = sv::parse_rational(mf.eta1),
                       .eta2 = sv::parse_rational(mf.eta2),
                       .m1 = sv::parse_rational(mf.m1),
                       .eta3 = sv::parse_rational(mf.eta3)};
  if (mf.module == "universal") return sv::ModuleSpec::universal(psi);
  if (mf.module == "quotient") return sv::ModuleSpec::quotient(psi, sv::parse_rational(mf.xi));
  return sv::ModuleSpec::verma(sv::parse_rational(mf.xi), sv::parse_rational(mf.zeta));
}

struct TruncFlags {
  std::string deg = "3";
  long l0 = 3;
  long m0 = 3;
};

void add_trunc_flags(CLI::App* cmd, TruncFlags& tf) {
  cmd->add_option("--deg", tf.deg, "degree bound D; half-integers as \"7/2\"");
  cmd->add_option("--l0", tf.l0, "bound on the L_0 exponent");
  cmd->add_option("--m0", tf.m0, "bound on the M_0 exponent");
}

sv::Truncation build_trunc(const TruncFlags& tf) {
  sv::Truncation t;
  t.D = sv::parse_halfint(tf.deg);
  t.D0 = sv::Int(tf.l0);
  t.K = sv::Int(tf.m0);
  return t;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

sv::json load_json_arg(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] != '[' && arg[0] != '{') text = slurp(arg);
  return sv::json::parse(text);
}

// "w"/"wbar" for the cyclic vector, else inline JSON or a file of JSON
sv::ModuleVector load_vector(const std::string& arg) {
  if (arg == "w" || arg == "wbar") return sv::cyclic_vector();
  return sv::vector_from_json(load_json_arg(arg));
}

std::vector<sv::ModuleVector> load_vector_list(const std::string& arg) {
  sv::json j = load_json_arg(arg);
  if (!j.is_array()) throw std::invalid_argument("expected a JSON array of module vectors");
  std::vector<sv::ModuleVector> out;
  if (j.empty()) return out;
  if (j.front().is_object()) {
    out.push_back(sv::vector_from_json(j));  // a single vector was given
  } else {
    for (const auto& el : j) out.push_back(sv::vector_from_json(el));
  }
  return out;
}

sv::Generator parse_gen_arg(const std::string& s) {
  auto g = sv::parse_generator(s);
  if (!g) throw std::invalid_argument("bad generator: " + s);
  return *g;
}

void emit_vector(const sv::ModuleVector& v, const std::string& format) {
  if (format == "json")
    std::cout << sv::to_json(v).dump(2) << "\n";
  else
    std::cout << sv::render(v) << "\n";
}

void emit_report(const sv::SolveReport& rep, const std::string& format) {
  if (format == "json") {
    std::cout << sv::to_json(rep).dump(2) << "\n";
  } else {
    std::cout << "dimension " << rep.dimension << "\n";
    for (std::size_t i = 0; i < rep.basis.size(); i++)
      std::cout << "basis[" << i << "] = " << sv::render(rep.basis[i]) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact symbolic engine for the Schroedinger-Virasoro algebra"};
  app.require_subcommand(1);
  int exit_code = 0;

  struct {
    std::string expr, format = "text";
  } nf;
  CLI::App* c_nf = app.add_subcommand("normal-form", "rewrite an expression into the PBW basis");
  c_nf->add_option("expr", nf.expr, "e.g. \"L1*L-1 + 2 M0^2\"")->required();
  c_nf->add_option("--format", nf.format)->check(CLI::IsMember({"text", "json"}));
  c_nf->callback([&] {
    sv::UEAElement u = sv::parse_expression(nf.expr);
    if (nf.format == "json")
      std::cout << sv::to_json(u).dump(2) << "\n";
    else
      std::cout << sv::render(u) << "\n";
  });

  struct {
    std::string a, b, format = "text";
  } br;
  CLI::App* c_br = app.add_subcommand("bracket", "Lie bracket of two algebra elements");
  c_br->add_option("a", br.a)->required();
  c_br->add_option("b", br.b)->required();
  c_br->add_option("--format", br.format)->check(CLI::IsMember({"text", "json"}));
  c_br->callback([&] {
    sv::LieElement r = sv::bracket(sv::parse_lie_expression(br.a), sv::parse_lie_expression(br.b));
    if (br.format == "json")
      std::cout << sv::to_json(r).dump(2) << "\n";
    else
      std::cout << sv::render(r) << "\n";
  });

  struct {
    std::string expr, on = "w", format = "text";
    ModuleFlags mf;
  } act;
  CLI::App* c_act = app.add_subcommand("act", "apply an enveloping-algebra element to a vector");
  c_act->add_option("expr", act.expr)->required();
  c_act->add_option("--on", act.on, "\"w\", inline JSON, or a file");
  c_act->add_option("--format", act.format)->check(CLI::IsMember({"text", "json"}));
  add_module_flags(c_act, act.mf);
  c_act->callback([&] {
    sv::ModuleSpec spec = build_spec(act.mf);
    emit_vector(sv::act(sv::parse_expression(act.expr), load_vector(act.on), spec), act.format);
  });

  struct {
    std::string gen, on = "w", format = "text";
    ModuleFlags mf;
  } dot;
  CLI::App* c_dot = app.add_subcommand("dot-act", "apply x - psi(x) for a positive generator x");
  c_dot->add_option("gen", dot.gen, "a positive generator, e.g. M1 or Y0")->required();
  c_dot->add_option("--on", dot.on);
  c_dot->add_option("--format", dot.format)->check(CLI::IsMember({"text", "json"}));
  add_module_flags(c_dot, dot.mf);
  c_dot->callback([&] {
    sv::ModuleSpec spec = build_spec(dot.mf);
    emit_vector(sv::dot_act(parse_gen_arg(dot.gen), load_vector(dot.on), spec), dot.format);
  });

  struct {
    std::string format = "text";
    ModuleFlags mf;
    TruncFlags tf;
  } wv;
  CLI::App* c_wv = app.add_subcommand("whittaker-vectors",
                                      "solve the eigenvector system inside the window");
  c_wv->add_option("--format", wv.format)->check(CLI::IsMember({"text", "json"}));
  add_module_flags(c_wv, wv.mf);
  add_trunc_flags(c_wv, wv.tf);
  c_wv->callback(
      [&] { emit_report(sv::whittaker_vectors(build_spec(wv.mf), build_trunc(wv.tf)), wv.format); });

  struct {
    std::string format = "text";
    ModuleFlags mf;
    TruncFlags tf;
  } sg;
  CLI::App* c_sg = app.add_subcommand("singular-vectors",
                                      "solve the annihilation system inside the window");
  c_sg->add_option("--format", sg.format)->check(CLI::IsMember({"text", "json"}));
  add_module_flags(c_sg, sg.mf);
  add_trunc_flags(c_sg, sg.tf);
  c_sg->callback(
      [&] { emit_report(sv::singular_vectors(build_spec(sg.mf), build_trunc(sg.tf)), sg.format); });

  struct {
    std::string gen, on = "w", format = "text";
    long bound = 12;
    ModuleFlags mf;
  } nil;
  CLI::App* c_nil = app.add_subcommand("nilpotency",
                                       "least m with (x - psi(x))^m v = 0, within a bound");
  c_nil->add_option("gen", nil.gen)->required();
  c_nil->add_option("--on", nil.on);
  c_nil->add_option("--bound", nil.bound);
  c_nil->add_option("--format", nil.format)->check(CLI::IsMember({"text", "json"}));
  add_module_flags(c_nil, nil.mf);
  c_nil->callback([&] {
    sv::ModuleSpec spec = build_spec(nil.mf);
    auto idx = sv::nilpotency_index(parse_gen_arg(nil.gen), load_vector(nil.on), spec,
                                    sv::Int(nil.bound));
    if (nil.format == "json") {
      sv::json j = {{"bound", nil.bound}};
      if (idx)
        j["index"] = idx->get_si();
      else
        j["index"] = nullptr;
      std::cout << j.dump(2) << "\n";
    } else if (idx) {
      std::cout << "index " << idx->get_str() << "\n";
    } else {
      std::cout << "no nilpotency within bound " << nil.bound << "\n";
    }
    if (!idx) exit_code = 1;
  });

  struct {
    std::string gens, format = "text", wbound = "4";
    ModuleFlags mf;
    TruncFlags tf;
  } clo;
  CLI::App* c_clo = app.add_subcommand("closure",
                                       "window-certified submodule generated by vectors");
  c_clo->add_option("--gens", clo.gens, "JSON array of module vectors (inline or file)")
      ->required();
  c_clo->add_option("--weight-bound", clo.wbound, "apply generators with |weight| up to this");
  c_clo->add_option("--format", clo.format)->check(CLI::IsMember({"text", "json"}));
  add_module_flags(c_clo, clo.mf);
  add_trunc_flags(c_clo, clo.tf);
  c_clo->callback([&] {
    sv::ModuleSpec spec = build_spec(clo.mf);
    std::vector<sv::ModuleVector> basis =
        sv::submodule_closure(load_vector_list(clo.gens), spec, build_trunc(clo.tf),
                              sv::parse_halfint(clo.wbound));
    if (clo.format == "json") {
      sv::json arr = sv::json::array();
      for (const auto& v : basis) arr.push_back(sv::to_json(v));
      std::cout << sv::json{{"dimension", basis.size()}, {"basis", arr}}.dump(2) << "\n";
    } else {
      std::cout << "dimension " << basis.size() << "\n";
      for (std::size_t i = 0; i < basis.size(); i++)
        std::cout << "basis[" << i << "] = " << sv::render(basis[i]) << "\n";
    }
  });

  struct {
    std::string format = "text", only;
    unsigned long seed = 0;
    bool corrupt = false;
    TruncFlags tf;
  } vf;
  CLI::App* c_vf = app.add_subcommand("verify", "run the exact acceptance checks");
  c_vf->add_option("--seed", vf.seed, "seed for the supplementary random probes");
  c_vf->add_option("--only", vf.only, "run only checks whose name contains this");
  c_vf->add_flag("--corrupt-bracket-table", vf.corrupt)->group("");
  c_vf->add_option("--format", vf.format)->check(CLI::IsMember({"text", "json"}));
  add_trunc_flags(c_vf, vf.tf);
  c_vf->callback([&] {
    sv::VerifyOptions opts;
    opts.trunc = build_trunc(vf.tf);
    opts.seed = vf.seed;
    opts.corrupt = vf.corrupt;
    opts.only = vf.only;
    sv::VerifyReport rep = sv::run_verify(opts);
    if (rep.checks.empty()) throw std::invalid_argument("no check matches --only " + vf.only);
    // stdout stays byte-identical across runs; timings go to stderr
    if (vf.format == "json") {
      sv::json arr = sv::json::array();
      for (const auto& c : rep.checks)
        arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      std::cout << sv::json{{"checks", arr}, {"all_pass", rep.all_pass()}}.dump(2) << "\n";
    } else {
      int failed = 0;
      for (const auto& c : rep.checks) {
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
        if (!c.pass) failed++;
      }
      std::cout << (failed == 0 ? "all checks passed"
                                : std::to_string(failed) + " check(s) failed")
                << " (" << rep.checks.size() << " run)\n";
    }
    for (const auto& c : rep.checks)
      std::cerr << c.name << ": " << static_cast<long>(c.ms) << " ms\n";
    if (!rep.all_pass()) exit_code = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
