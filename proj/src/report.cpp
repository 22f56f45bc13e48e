#include "bdouble/report.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

#include "json.hpp"

#include "bdouble/autgroup.hpp"
#include "bdouble/looptrunc.hpp"

namespace bdouble {

std::string status_name(SuiteStatus s) {
  switch (s) {
    case SuiteStatus::Pass: return "pass";
    case SuiteStatus::Fail: return "fail";
    case SuiteStatus::Skipped: return "skipped";
  }
  return "?";
}

bool VerificationReport::passed() const {
  return std::none_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.status == SuiteStatus::Fail; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "roots",        "jacobi",        "isomorphisms", "ib-structure", "cartan-recovery", "diagram-automorphisms",
      "gamma-lifts",  "semilinearity", "derivations",  "component-separation"};
  return names;
}

std::vector<Scalar> default_epsilons() { return {0, 1, make_scalar(1, 2), -2, make_scalar(3, 5)}; }

namespace {

// Thrown inside a suite to mark it failed with a witness.
struct SuiteFailure {
  std::string witness;
};

void require(bool ok, const std::string& witness) {
  if (!ok) throw SuiteFailure{witness};
}

struct SuiteSkipped {
  std::string reason;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string int_list(const IntVector& v) {
  std::vector<std::string> s;
  for (int x : v) s.push_back(std::to_string(x));
  return "[" + join(s, ", ") + "]";
}

std::size_t reference_positive_count(const SimpleType& st) {
  const auto r = static_cast<std::size_t>(st.rank);
  switch (st.family) {
    case Family::A: return r * (r + 1) / 2;
    case Family::B:
    case Family::C: return r * r;
    case Family::D: return r * (r - 1);
    case Family::E: return r == 6 ? 36 : r == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

// Objects shared between suites, built on first use.
class Context {
 public:
  Context(const SimpleType& type, const SuiteOptions& options) : type_(type), options_(options) {}

  const SuiteOptions& options() const { return options_; }
  const SimpleType& type() const { return type_; }

  const ChevalleyAlgebra& simple() {
    if (!simple_) simple_ = build_simple(type_);
    return *simple_;
  }
  const DoubleAlgebra& ib() {
    if (!ib_) ib_ = build_Ib(simple());
    return *ib_;
  }
  const DoubleAlgebra& ib_bar() {
    if (!ib_bar_) ib_bar_ = build_Ib_bar(simple());
    return *ib_bar_;
  }
  const std::vector<DiagramAutomorphism>& diagram_group() {
    if (!group_) group_ = diagram_automorphism_group(simple().roots->extended_cartan());
    return *group_;
  }
  const std::vector<AlgebraMap>& lifts() {
    if (!lifts_) {
      lifts_.emplace();
      for (const auto& th : diagram_group()) lifts_->push_back(lift_diagram_automorphism(ib(), th));
    }
    return *lifts_;
  }

 private:
  SimpleType type_;
  SuiteOptions options_;
  std::optional<ChevalleyAlgebra> simple_;
  std::optional<DoubleAlgebra> ib_, ib_bar_;
  std::optional<std::vector<DiagramAutomorphism>> group_;
  std::optional<std::vector<AlgebraMap>> lifts_;
};

using Details = std::vector<std::string>;

void suite_roots(Context& ctx, Details& out, VerificationReport& rep) {
  const RootSystem& rs = *ctx.simple().roots;
  const std::size_t r = ctx.simple().rank();
  const auto& pos = rs.positive_roots();
  require(pos.size() == reference_positive_count(ctx.type()),
          "positive root count " + std::to_string(pos.size()) + " != " +
              std::to_string(reference_positive_count(ctx.type())));
  out.push_back("positive roots: " + std::to_string(pos.size()));
  out.push_back("highest root: " + to_string(rs.highest_root()));

  const auto& a = rs.extended_cartan();
  const auto& marks = rs.marks();
  require(marks.size() == r + 1 && marks[0] == 1, "mark of node 0 is not 1");
  for (std::size_t i = 0; i <= r; ++i) {
    require(a[i][i] == 2, "extended Cartan diagonal entry != 2");
    int sum = 0;
    for (std::size_t j = 0; j <= r; ++j) {
      if (i != j) require(a[i][j] <= 0, "positive off-diagonal extended Cartan entry");
      require((a[i][j] == 0) == (a[j][i] == 0), "extended Cartan zero pattern is not symmetric");
      sum += a[i][j] * marks[j];
    }
    require(sum == 0, "marks are not a null vector of the extended Cartan matrix");
  }
  for (std::size_t i = 0; i < r; ++i)
    require(rs.highest_root().coords[i] == marks[i + 1], "marks differ from the highest root coordinates");
  out.push_back("marks: " + int_list(marks));
  std::vector<std::string> rows;
  for (const auto& row : a) rows.push_back(int_list(row));
  out.push_back("extended Cartan: " + join(rows, " "));
  rep.dims["positive_roots"] = pos.size();
  rep.dims["g"] = ctx.simple().dim();
}

void check_jacobi_of(const DoubleAlgebra& d, Details& out, const std::string& label) {
  auto w = check_jacobi(*d.underlying);
  require(!w, label + ": Jacobi fails on basis triple (" + (w ? std::to_string(w->i) + ", " + std::to_string(w->j) +
                                                                         ", " + std::to_string(w->k)
                                                                   : std::string()) +
                  ")");
  require(is_antisymmetric(*d.underlying), label + ": bracket is not antisymmetric");
  out.push_back(label + ": Jacobi holds (dim " + std::to_string(d.dim()) + ")");
}

void suite_jacobi(Context& ctx, Details& out, VerificationReport&) {
  const auto& g = ctx.simple();
  require(!check_jacobi(*g.algebra), "g: Jacobi fails");
  for (const auto& eps : ctx.options().epsilons) {
    const std::string e = to_string(eps);
    check_jacobi_of(build_g_eps_plus(g, eps), out, "g^" + e + "_+");
    check_jacobi_of(build_g_eps(g, eps), out, "g^" + e);
    if (eps != 0) {
      require(phi_eps_check(g, eps), "phi_" + e + " does not intertwine the brackets");
      out.push_back("phi_" + e + ": contraction identity holds");
    }
  }
  check_jacobi_of(ctx.ib(), out, "Ib");
  check_jacobi_of(ctx.ib_bar(), out, "Ib_bar");
}

void suite_isomorphisms(Context& ctx, Details& out, VerificationReport&) {
  const auto& g = ctx.simple();
  auto eta = eta_iso(g);
  require(is_verified_automorphism(eta), "eta: g^0_+ -> Ib is not an isomorphism");
  out.push_back("eta: g^0_+ -> Ib isomorphism");

  auto iota = iota_embeddings(g);
  require(iota.iota_g.verified_homomorphism && iota.iota_h.verified_homomorphism, "iota: not homomorphisms");
  require(iota.image_g_is_ideal && iota.image_h_is_center && iota.direct_sum, "iota: g^1_+ != g + h");
  out.push_back("iota: g^1_+ = g + h (ideal + center)");

  for (const auto& eps : ctx.options().epsilons) {
    const std::string e = to_string(eps);
    auto m = g_eps_isomorphism(g, eps);
    require(is_verified_automorphism(m), "g^" + e + " isomorphism failed");

    auto q = build_borel_quotient(g, eps);
    auto gp = build_g_eps_plus(g, eps);
    auto gamma = gamma_eps(gp, q);
    require(is_verified_automorphism(gamma), "gamma_" + e + " is not an isomorphism");
    auto theta = theta_retraction(q, gp);
    require(theta.verified_homomorphism, "theta_" + e + " is not a homomorphism");
    require((theta.matrix * gamma.matrix).is_identity(), "theta o gamma_" + e + " != id");
    out.push_back("eps " + e + ": g^eps iso, gamma iso, theta o gamma = id");
  }
}

void suite_ib_structure(Context& ctx, Details& out, VerificationReport& rep) {
  const auto& g = ctx.simple();
  const auto& ib = ctx.ib();
  const LieAlgebra& alg = *ib.underlying;
  const std::size_t n = alg.dim(), r = g.rank();

  auto z = center(alg);
  require(z.size() == r, "dim center = " + std::to_string(z.size()) + " != rank");
  auto d1 = derived_subalgebra(alg);
  require(d1.size() == g.dim(), "dim [Ib, Ib] = " + std::to_string(d1.size()) + " != dim g");
  rep.dims["Ib"] = n;
  rep.dims["center"] = z.size();
  rep.dims["derived"] = d1.size();
  out.push_back("dim center = " + std::to_string(z.size()) + ", dim [Ib, Ib] = " + std::to_string(d1.size()));

  auto c = alg.subspace_vectors("c");
  require(is_abelian(alg, c), "c is not abelian");
  require(same_span(normalizer(alg, c), c, n), "c is not self-normalizing");
  out.push_back("c = h + t h self-normalizing");

  auto roots = ib_roots(ib);
  require(roots.t_component_zero, "a c-weight is nonzero on t h");
  std::vector<Root> expected;
  for (const auto& a : g.roots->positive_roots()) {
    expected.push_back(a);
    expected.push_back(-a);
  }
  auto got = roots.roots;
  std::sort(expected.begin(), expected.end());
  std::sort(got.begin(), got.end());
  require(got == expected, "c-weights do not match Phi");
  out.push_back("c-weights = Phi (" + std::to_string(got.size()) + "), zero on t h");

  std::vector<std::size_t> nil;
  for (std::size_t k = 0; k < g.positive_count(); ++k) nil.push_back(ib.b_index(g.e(k)));
  nil.insert(nil.end(), ib.part_minus.begin(), ib.part_minus.end());
  for (auto i : nil) require(is_ad_nilpotent(alg, alg.basis_vector(i)), alg.labels()[i] + " is not ad-nilpotent");

  std::mt19937_64 rng(ctx.options().seed);
  std::uniform_int_distribution<long> num(-4, 4);
  const std::size_t samples = 20;
  for (std::size_t s = 0; s < samples; ++s) {
    Vector x(n);
    for (auto& v : x) v = num(rng);
    std::size_t h0 = ib.b_index(g.h(s % r));
    if (x[h0] == 0) x[h0] = 1;
    require(!is_ad_nilpotent(alg, x), "random element with nonzero h-part is ad-nilpotent");
  }
  out.push_back("n + t b^- basis ad-nilpotent; " + std::to_string(samples) + " samples with h-part are not");
}

void suite_cartan_recovery(Context& ctx, Details& out, VerificationReport&) {
  if (ctx.type().family == Family::A && ctx.type().rank == 1)
    throw SuiteSkipped{"sl2: the root-string formula for the extended Cartan matrix does not apply"};
  auto rec = recover_extended_cartan(ctx.ib());
  const auto& expected = ctx.simple().roots->extended_cartan();
  require(rec.from_strings == rec.from_ad, "root-string and ad-iteration matrices differ");
  require(rec.from_strings == expected, "recovered extended Cartan matrix differs from the root system's");
  out.push_back("root strings = ad iteration = extended Cartan matrix");
}

void suite_diagram(Context& ctx, Details& out, VerificationReport& rep) {
  const auto& group = ctx.diagram_group();
  require(is_group(group), "diagram automorphisms are not closed under composition");
  std::size_t ref = reference_automorphism_count(ctx.type());
  require(group.size() == ref,
          "|Aut| = " + std::to_string(group.size()) + ", reference " + std::to_string(ref));
  std::vector<std::string> labels;
  for (const auto& th : group) labels.push_back(th.label());
  out.push_back("|Aut| = " + std::to_string(group.size()) + ": " + join(labels, " "));
  rep.dims["diagram_automorphisms"] = group.size();
}

void suite_gamma(Context& ctx, Details& out, VerificationReport&) {
  const auto& group = ctx.diagram_group();
  const auto& lifts = ctx.lifts();
  for (std::size_t i = 0; i < lifts.size(); ++i)
    require(is_verified_automorphism(lifts[i]), group[i].label() + ": lift is not an automorphism");
  for (std::size_t i = 0; i < lifts.size(); ++i)
    for (std::size_t j = i + 1; j < lifts.size(); ++j)
      require(!(lifts[i].matrix == lifts[j].matrix), "lifts of " + group[i].label() + " and " + group[j].label() +
                                                         " coincide");

  auto index_of = [&](const DiagramAutomorphism& th) {
    return static_cast<std::size_t>(std::find(group.begin(), group.end(), th) - group.begin());
  };
  for (std::size_t i = 0; i < lifts.size(); ++i)
    for (std::size_t j = 0; j < lifts.size(); ++j) {
      auto k = index_of(group[i].compose(group[j]));
      require((lifts[i].matrix * lifts[j].matrix) == lifts[k].matrix,
              "lift(" + group[i].label() + ") lift(" + group[j].label() + ") != lift of the product");
    }

  for (std::size_t i = 0; i < lifts.size(); ++i) {
    std::size_t ord = 1;
    Matrix p = lifts[i].matrix;
    while (!p.is_identity()) {
      p = p * lifts[i].matrix;
      ++ord;
    }
    require(ord == group[i].order(), group[i].label() + ": lift has order " + std::to_string(ord));
  }
  out.push_back(std::to_string(lifts.size()) + " lifts, injective, multiplicative, orders preserved");
}

void suite_semilinearity(Context& ctx, Details& out, VerificationReport& rep) {
  for (const auto& th : ctx.diagram_group()) {
    auto lift = lift_to_loop(ctx.simple(), th, 2);
    require(lift.complete, th.label() + ": loop lift does not reach the whole window");
    Scalar lambda = semilinearity_lambda(lift);
    require(omega_compatibility(lift), th.label() + ": lift does not commute with omega");
    rep.lambda_table.push_back({th.label(), th.order(), lambda});
    out.push_back(th.label() + " (order " + std::to_string(th.order()) + "): lambda = " + to_string(lambda));
  }
}

void suite_derivations(Context& ctx, Details& out, VerificationReport& rep) {
  const std::size_t cap = ctx.options().der_cap;
  if (ctx.ib().dim() > cap)
    throw SuiteSkipped{"dim Ib = " + std::to_string(ctx.ib().dim()) + " exceeds the derivation cap " +
                       std::to_string(cap)};
  for (const auto* d : {&ctx.ib(), &ctx.ib_bar()}) {
    auto r = der_decomposition_check(*d, DerivationOptions{cap});
    std::string name = d->kind == DoubleKind::Ib ? "Ib" : "Ib_bar";
    rep.dims["Der(" + name + ")"] = r.der_dim;
    out.push_back("dim Der(" + name + ") = " + std::to_string(r.der_dim) + " = " + std::to_string(r.d_line) +
                  " d-line + " + std::to_string(r.inner) + " inner + " + std::to_string(r.u_type) + " u-type");
  }
}

void suite_separation(Context& ctx, Details& out, VerificationReport&) {
  auto r = component_separation_check(ctx.ib(), ctx.lifts(), ctx.options().samples_per_family, ctx.options().seed);
  out.push_back(std::to_string(r.samples) + " family samples trivial on Ib/[Ib, Ib]");
  out.push_back("p injective on " + std::to_string(r.lifts) + " lifts");
}

using SuiteFn = std::function<void(Context&, Details&, VerificationReport&)>;

const std::map<std::string, SuiteFn>& suite_table() {
  static const std::map<std::string, SuiteFn> table = {
      {"roots", suite_roots},
      {"jacobi", suite_jacobi},
      {"isomorphisms", suite_isomorphisms},
      {"ib-structure", suite_ib_structure},
      {"cartan-recovery", suite_cartan_recovery},
      {"diagram-automorphisms", suite_diagram},
      {"gamma-lifts", suite_gamma},
      {"semilinearity", suite_semilinearity},
      {"derivations", suite_derivations},
      {"component-separation", suite_separation},
  };
  return table;
}

}  // namespace

VerificationReport run_suite(const SimpleType& type, const SuiteOptions& options) {
  for (const auto& s : options.suites)
    if (!suite_table().count(s)) throw InputError("unknown suite '" + s + "'");
  SuiteOptions opts = options;
  if (opts.epsilons.empty()) opts.epsilons = default_epsilons();

  VerificationReport rep{type, {}, 0, {}, {}, {}};
  rep.epsilons = opts.epsilons;
  rep.seed = opts.seed;
  Context ctx(type, opts);

  for (const auto& name : suite_names()) {
    if (!opts.suites.empty() && std::find(opts.suites.begin(), opts.suites.end(), name) == opts.suites.end())
      continue;
    SuiteResult res;
    res.name = name;
    auto start = std::chrono::steady_clock::now();
    try {
      suite_table().at(name)(ctx, res.details, rep);
    } catch (const SuiteFailure& f) {
      res.status = SuiteStatus::Fail;
      res.witness = f.witness;
    } catch (const SuiteSkipped& s) {
      res.status = SuiteStatus::Skipped;
      res.reason = s.reason;
    } catch (const CapExceeded& e) {
      res.status = SuiteStatus::Skipped;
      res.reason = e.what();
    } catch (const std::exception& e) {
      res.status = SuiteStatus::Fail;
      res.witness = e.what();
    }
    if (opts.timings)
      res.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    rep.suites.push_back(std::move(res));
  }
  return rep;
}

std::string to_json(const VerificationReport& report) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema"] = 1;
  j["type"] = report.type.name();
  j["status"] = report.passed() ? "pass" : "fail";
  j["seed"] = report.seed;
  j["epsilons"] = ordered_json::array();
  for (const auto& e : report.epsilons) j["epsilons"].push_back(to_string(e));
  j["suites"] = ordered_json::array();
  for (const auto& s : report.suites) {
    ordered_json o;
    o["name"] = s.name;
    o["status"] = status_name(s.status);
    o["details"] = s.details;
    if (s.status == SuiteStatus::Skipped) o["reason"] = s.reason;
    if (s.status == SuiteStatus::Fail) o["witness"] = s.witness;
    if (s.millis) o["millis"] = *s.millis;
    j["suites"].push_back(std::move(o));
  }
  j["lambda_table"] = ordered_json::array();
  for (const auto& l : report.lambda_table)
    j["lambda_table"].push_back({{"automorphism", l.automorphism}, {"order", l.order}, {"lambda", to_string(l.lambda)}});
  j["dims"] = ordered_json::object();
  for (const auto& [k, v] : report.dims) j["dims"][k] = v;
  return j.dump(2) + "\n";
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "type " << report.type.name() << ": " << (report.passed() ? "PASS" : "FAIL") << "\n\n";
  for (const auto& s : report.suites) {
    out << std::left << std::setw(24) << s.name << std::setw(8) << status_name(s.status);
    if (s.millis) out << std::fixed << std::setprecision(1) << *s.millis << " ms";
    out << "\n";
    for (const auto& d : s.details) out << "    " << d << "\n";
    if (s.status == SuiteStatus::Skipped) out << "    reason: " << s.reason << "\n";
    if (s.status == SuiteStatus::Fail) out << "    witness: " << s.witness << "\n";
  }
  if (!report.lambda_table.empty()) {
    out << "\nlambda table\n";
    for (const auto& l : report.lambda_table)
      out << "    " << std::left << std::setw(20) << l.automorphism << "order " << l.order << "  lambda "
          << to_string(l.lambda) << "\n";
  }
  if (!report.dims.empty()) {
    out << "\ndimensions\n";
    for (const auto& [k, v] : report.dims) out << "    " << std::left << std::setw(24) << k << v << "\n";
  }
  return out.str();
}

}  // namespace bdouble
