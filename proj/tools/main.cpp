// bdouble: command-line front end for the verification suites.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bdouble/autgroup.hpp"
#include "bdouble/looptrunc.hpp"
#include "bdouble/report.hpp"

using namespace bdouble;

namespace {

constexpr int kPass = 0;
constexpr int kFalsified = 1;
constexpr int kUsage = 2;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int cmd_verify(const std::string& type_text, const std::string& eps, const std::string& suites, std::size_t cap,
               const std::string& format, const std::string& out_path, std::uint64_t seed, bool timings) {
  SuiteOptions opts;
  for (const auto& e : split_list(eps)) opts.epsilons.push_back(parse_scalar(e));
  opts.suites = split_list(suites);
  opts.der_cap = cap;
  opts.seed = seed;
  opts.timings = timings;
  auto report = run_suite(parse_simple_type(type_text), opts);
  std::string text = format == "json" ? to_json(report) : to_text(report);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + out_path);
    f << text;
    if (!f) throw std::runtime_error("write failed: " + out_path);
  }
  return report.passed() ? kPass : kFalsified;
}

int cmd_diagram_aut(const std::string& type_text) {
  auto st = parse_simple_type(type_text);
  auto rs = generate_roots(st);
  auto group = diagram_automorphism_group(rs.extended_cartan());
  std::cout << "extended " << st.name() << ": " << group.size() << " diagram automorphisms\n";
  for (const auto& th : group) std::cout << "  " << th.label() << "  (order " << th.order() << ")\n";
  return group.size() == reference_automorphism_count(st) ? kPass : kFalsified;
}

int cmd_der_dim(const std::string& type_text, bool bar, std::size_t cap) {
  auto g = build_simple(parse_simple_type(type_text));
  auto d = bar ? build_Ib_bar(g) : build_Ib(g);
  auto rep = der_decomposition_check(d, DerivationOptions{cap});
  std::cout << (bar ? "Ib_bar(" : "Ib(") << g.roots->simple_type().name() << "): dim " << d.dim() << ", dim Der "
            << rep.der_dim << " = " << rep.d_line << " d-line + " << rep.inner << " inner + " << rep.u_type
            << " u-type\n";
  return kPass;
}

int cmd_lambda(const std::string& type_text) {
  auto g = build_simple(parse_simple_type(type_text));
  for (const auto& th : diagram_automorphism_group(g.roots->extended_cartan())) {
    auto lift = lift_to_loop(g, th, 2);
    std::cout << th.label() << "  order " << th.order() << "  lambda " << to_string(semilinearity_lambda(lift))
              << "\n";
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the Borel double Ib = b + t b^- and its automorphisms"};
  app.require_subcommand(1);

  std::string type_text, eps, suites, format = "text", out_path;
  std::size_t cap = 24;
  std::uint64_t seed = SuiteOptions{}.seed;
  bool timings = false, bar = false;

  auto* verify = app.add_subcommand("verify", "run the verification suites for a simple type");
  verify->add_option("type", type_text, "simple type, e.g. A2, G2, D4")->required();
  verify->add_option("--epsilon", eps, "comma-separated rationals (default 0,1,1/2,-2,3/5)");
  verify->add_option("--suites", suites, "comma-separated suite names (default all)");
  verify->add_option("--der-cap", cap, "largest algebra dimension for the derivation solve")->capture_default_str();
  verify->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  verify->add_option("--out", out_path, "write the report here instead of stdout");
  verify->add_option("--seed", seed, "seed for sampled checks")->capture_default_str();
  verify->add_flag("--timings", timings, "include per-suite wall times");

  auto* diag = app.add_subcommand("diagram-aut", "list the automorphisms of the extended Dynkin diagram");
  diag->add_option("type", type_text, "simple type")->required();

  auto* der = app.add_subcommand("der-dim", "dimension of Der(Ib) with its family decomposition");
  der->add_option("type", type_text, "simple type")->required();
  der->add_flag("--bar", bar, "use Ib_bar = Ib / t h instead");
  der->add_option("--der-cap", cap, "largest algebra dimension for the derivation solve")->capture_default_str();

  auto* lam = app.add_subcommand("lambda", "semilinearity constant of each loop lift");
  lam->add_option("type", type_text, "simple type")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*verify) return cmd_verify(type_text, eps, suites, cap, format, out_path, seed, timings);
    if (*diag) return cmd_diagram_aut(type_text);
    if (*der) return cmd_der_dim(type_text, bar, cap);
    if (*lam) return cmd_lambda(type_text);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise --der-cap)\n";
    return kUsage;
  } catch (const FalsificationError& e) {
    std::cerr << "falsified: " << e.what() << "\n";
    return kFalsified;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFalsified;
  }
  return kUsage;
}
