// Acceptance checks, one line per criterion. Usage: acceptance <path to bdouble CLI>

#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>

#include "bdouble/autgroup.hpp"
#include "bdouble/looptrunc.hpp"
#include "bdouble/report.hpp"

using namespace bdouble;

namespace {

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

ChevalleyAlgebra simple(const std::string& t) { return build_simple(parse_simple_type(t)); }

std::vector<AlgebraMap> all_lifts(const DoubleAlgebra& ib) {
  std::vector<AlgebraMap> out;
  for (const auto& th : diagram_automorphism_group(ib.simple.roots->extended_cartan()))
    out.push_back(lift_diagram_automorphism(ib, th));
  return out;
}

std::string c1() {
  std::size_t checked = 0;
  for (const auto& t : {"A1", "A2", "B2", "C3", "G2", "D4"})
    for (const auto& e : {Scalar(0), Scalar(1), make_scalar(1, 2), Scalar(-2)}) {
      auto g = simple(t);
      std::string tag = std::string(t) + " eps=" + to_string(e);
      require(!check_jacobi(*build_g_eps_plus(g, e).underlying), "g^eps_+ Jacobi fails for " + tag);
      require(!check_jacobi(*build_g_eps(g, e).underlying), "g^eps Jacobi fails for " + tag);
      checked += 2;
    }
  return std::to_string(checked) + " algebras satisfy Jacobi";
}

std::string c2() {
  for (const auto& t : {"A1", "A2", "B2", "C3", "G2", "D4"}) {
    auto eta = eta_iso(simple(t));
    require(eta.verified_homomorphism && eta.verified_bijective, std::string("eta fails for ") + t);
  }
  return "g^0_+ = Ib on 6 types";
}

std::string c3() {
  for (const auto& t : {"A1", "A2", "B2", "G2"})
    for (const auto& e : {Scalar(0), Scalar(1), make_scalar(3, 5)}) {
      auto g = simple(t);
      auto q = build_borel_quotient(g, e);
      auto gp = build_g_eps_plus(g, e);
      auto gamma = gamma_eps(gp, q);
      auto theta = theta_retraction(q, gp);
      std::string tag = std::string(t) + " eps=" + to_string(e);
      require(is_verified_automorphism(gamma), "gamma not an isomorphism for " + tag);
      require((theta.matrix * gamma.matrix).is_identity(), "theta o gamma != id for " + tag);
    }
  return "gamma_eps isomorphisms with theta o gamma = id, 12 cases";
}

std::string c4() {
  std::size_t n = 0;
  for (const auto& t : {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4"}) {
    SuiteOptions opts;
    opts.suites = {"ib-structure"};
    auto rep = run_suite(parse_simple_type(t), opts);
    require(rep.passed(), std::string(t) + ": " + rep.suites.front().witness);
    ++n;
  }
  return "center, derived algebra, Cartan, weights, ad-nilpotency on " + std::to_string(n) + " types";
}

std::string c5() {
  for (const auto& t : {"A2", "A3", "B2", "B3", "C3", "G2", "D4"}) {
    auto g = simple(t);
    auto rec = recover_extended_cartan(build_Ib(g));
    require(rec.from_strings == rec.from_ad, std::string("paths disagree for ") + t);
    require(rec.from_strings == g.roots->extended_cartan(), std::string("wrong matrix for ") + t);
  }
  bool refused = false;
  try {
    recover_extended_cartan(build_Ib(simple("A1")));
  } catch (const InputError&) {
    refused = true;
  }
  require(refused, "A1 not refused");
  return "7 types recovered by both paths, A1 refused";
}

std::string c6() {
  const std::vector<std::pair<std::string, std::size_t>> table = {
      {"A1", 2}, {"A2", 6}, {"A3", 8}, {"B3", 2}, {"C2", 2}, {"D4", 24},
      {"D5", 8}, {"G2", 1}, {"F4", 1}, {"E6", 6}};
  std::ostringstream out;
  for (const auto& [t, order] : table) {
    auto rs = generate_roots(parse_simple_type(t));
    auto n = diagram_automorphism_group(rs.extended_cartan()).size();
    require(n == order, t + ": " + std::to_string(n) + " != " + std::to_string(order));
    out << (out.tellp() > 0 ? " " : "") << t << ":" << n;
  }
  return out.str();
}

std::string c7() {
  std::size_t total = 0;
  for (const auto& t : {"A1", "A2", "A3", "B3", "C2", "D4", "D5", "G2", "F4", "E6"}) {
    auto ib = build_Ib(simple(t));
    auto group = diagram_automorphism_group(ib.simple.roots->extended_cartan());
    auto lifts = all_lifts(ib);
    require(lifts.size() == group.size(), std::string("lift count differs for ") + t);
    for (std::size_t i = 0; i < lifts.size(); ++i) {
      require(is_verified_automorphism(lifts[i]), std::string("lift not verified for ") + t);
      for (std::size_t j = 0; j < i; ++j)
        require(!(lifts[i].matrix == lifts[j].matrix), std::string("lifting not injective for ") + t);
    }
    total += lifts.size();
  }
  auto ib = build_Ib(simple("A2"));
  Matrix m = lift_diagram_automorphism(ib, DiagramAutomorphism{{1, 2, 0}}).matrix;
  require(!m.is_identity() && !(m * m).is_identity() && (m * m * m).is_identity(), "A2 cycle lift order != 3");
  return std::to_string(total) + " lifts verified and distinct; A2 cycle lift has order 3";
}

std::string c8() {
  std::ostringstream out;
  for (const auto& t : {"A1", "A2", "A3", "D4"}) {
    auto g = simple(t);
    std::size_t minus = 0, n = 0;
    for (const auto& th : diagram_automorphism_group(g.roots->extended_cartan())) {
      auto lift = lift_to_loop(g, th, 2);
      Scalar lambda = semilinearity_lambda(lift);
      require(lambda == 1 || lambda == -1, std::string(t) + " " + th.label() + ": lambda not +-1");
      if (th.order() % 2 == 1) require(lambda == 1, std::string(t) + " " + th.label() + ": odd order, lambda != 1");
      if (th.label() == "(0 1 2)" && std::string(t) == "A2") require(lambda == 1, "A2 cycle lambda != 1");
      minus += lambda == -1 ? 1 : 0;
      ++n;
    }
    out << (out.tellp() > 0 ? "; " : "") << t << ": " << n << " lifts, " << minus << " with lambda = -1";
  }
  return out.str();
}

std::string c9() {
  const std::vector<std::pair<std::string, std::size_t>> ib_table = {{"A1", 5}, {"A2", 13}, {"B2", 15}, {"C3", 31}};
  const std::vector<std::pair<std::string, std::size_t>> bar_table = {{"A1", 4}, {"A2", 9}, {"B2", 11}};
  std::ostringstream out;
  for (const auto& [t, expected] : ib_table) {
    auto r = der_decomposition_check(build_Ib(simple(t)), DerivationOptions{32});
    require(r.der_dim == expected && r.pass(), t + ": dim Der(Ib) = " + std::to_string(r.der_dim));
    out << "Ib(" << t << ")=" << r.der_dim << " ";
  }
  for (const auto& [t, expected] : bar_table) {
    auto r = der_decomposition_check(build_Ib_bar(simple(t)), DerivationOptions{32});
    require(r.der_dim == expected && r.pass(), t + ": dim Der(Ib_bar) = " + std::to_string(r.der_dim));
    out << "Ib_bar(" << t << ")=" << r.der_dim << " ";
  }
  return out.str() + "families independent and spanning";
}

std::string c10() {
  std::size_t types = 0;
  for (const auto& t : {"A1", "A2", "A3", "B2", "C3", "G2", "D4"}) {
    auto ib = build_Ib(simple(t));
    auto rep = component_separation_check(ib, all_lifts(ib), 5, SuiteOptions{}.seed);
    require(rep.samples >= 20 && rep.pass(), std::string("separation fails for ") + t);
    ++types;
  }
  return "20 samples trivial on Ib/[Ib,Ib] and p injective on Gamma, " + std::to_string(types) + " types";
}

std::string capture(const std::string& cmd) {
  std::array<char, 4096> buf{};
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) throw Failure{"cannot run " + cmd};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  return out;
}

std::string c11(const std::string& cli) {
  require(!cli.empty(), "no CLI path given");
  std::string cmd = "\"" + cli + "\" verify A2 --format json";
  std::string a = capture(cmd), b = capture(cmd);
  require(!a.empty(), "empty report");
  require(a == b, "reports differ");
  return "two runs, " + std::to_string(a.size()) + " identical bytes";
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria = {
      {"Jacobi for g^eps_+ and g^eps", c1},
      {"eta isomorphism", c2},
      {"gamma/theta isomorphism", c3},
      {"structure of Ib", c4},
      {"extended Cartan recovery", c5},
      {"diagram automorphism orders", c6},
      {"Gamma lifts", c7},
      {"semilinearity lambda", c8},
      {"derivation dimensions", c9},
      {"component separation", c10},
      {"CLI determinism", [&] { return c11(cli); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string status, detail;
    try {
      detail = criteria[i].second();
      status = "PASS";
    } catch (const Failure& f) {
      status = "FAIL";
      detail = f.what;
    } catch (const std::exception& e) {
      status = "FAIL";
      detail = std::string("exception: ") + e.what();
    }
    if (status == "FAIL") ++failed;
    std::cout << "[" << status << "] criterion " << (i + 1) << " (" << criteria[i].first << "): " << detail
              << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
