// symlat: command-line front end.
//
// Exit codes: 0 success, 1 a verification failed, 2 bad input, 3 size limit.

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

#include "symlat/homobasis.hpp"
#include "symlat/hyperkahler.hpp"
#include "symlat/io.hpp"
#include "symlat/lattices.hpp"
#include "symlat/orthopoly.hpp"
#include "symlat/symform.hpp"
#include "symlat/theta.hpp"

using namespace symlat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitSizeLimit = 3;

// Decimal values longer than this are shown only in factored form.
constexpr std::size_t kMaxDecimalDigits = 60;

struct Result {
  int code = kExitOk;
  Json payload = Json::object();
  std::string text;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string describe(const FactoredInteger& f) {
  std::string factored = f.to_string();
  std::string decimal = to_string(f.value());
  if (decimal == factored || decimal.size() > kMaxDecimalDigits) return factored;
  return factored + " = " + decimal;
}

std::vector<std::string> scalar_strings(const std::vector<Scalar>& values) {
  std::vector<std::string> out;
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

std::string matrix_text(const ExactMatrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<std::string> row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    out << "  [" << join(row) << "]\n";
  }
  return out.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------- theta

Result cmd_theta(int d, int k) {
  ThetaResult t = theta_result(d, k);
  Result r;
  r.payload = {{"d", d}, {"k", k}, {"theta", t.value.to_string()}, {"det_exponent", to_string(t.exponent_of_det_g)}};
  std::string decimal = to_string(t.value.value());
  if (decimal.size() <= kMaxDecimalDigits) r.payload["value"] = decimal;
  r.text = describe(t.value) + "\n";
  return r;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  int dmax = 3;
  int kmax = 4;
  int samples = 20;
  std::uint64_t seed = 1;
  bool corrupt_theta = false;
};

// Random symmetric integer matrix with entries in [-5, 5] and nonzero
// determinant, from a seeded engine (modulo draws keep runs portable).
IntMatrix random_nondegenerate(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    IntMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) g(i, j) = g(j, i) = static_cast<long>(rng() % 11) - 5;
    if (det_exact(g) != 0) return g;
  }
}

Result cmd_verify(const VerifyOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  Result r;
  Json shapes = Json::array();
  std::ostringstream text;
  bool all_equal = true;
  for (int d = 0; d <= opt.dmax; ++d)
    for (int k = 1; k <= opt.kmax; ++k) {
      const std::size_t size = static_cast<std::size_t>(to_int64(binom(d + k, d)));
      if (size > kMaxVerifyRank) {
        throw SizeLimitError("Sym^" + std::to_string(k) + " of rank " + std::to_string(d + 1) + " has rank " +
                             std::to_string(size) + ", above the verification cap " + std::to_string(kMaxVerifyRank));
      }
      int equal = 0;
      Json samples = Json::array();
      for (int s = 0; s < opt.samples; ++s) {
        IntMatrix g = random_nondegenerate(rng, static_cast<std::size_t>(d + 1));
        MainTheoremReport rep = verify_maintheorem(GramMatrix(g), k);
        FactoredInteger det_g(det_exact(g));
        FactoredInteger rhs = det_closed_form(det_g, d, k);
        if (opt.corrupt_theta) rhs *= FactoredInteger(2);
        const bool ok = rep.lhs == rhs.value();
        equal += ok;
        Json sample = {{"det_g", to_string(det_g.integer_value())}, {"rhs", rhs.to_string()}, {"equal", ok}};
        sample["lhs"] = ok ? rhs.to_string() : to_string(rep.lhs);
        samples.push_back(sample);
        if (s == 0 || !ok) {
          text << "d=" << d << " k=" << k << " sample " << s << ": det G = " << det_g.integer_value() << ", ";
          if (ok) {
            text << "lhs = rhs = " << rhs.to_string() << "\n";
          } else {
            text << "MISMATCH lhs = " << to_string(rep.lhs) << ", rhs = " << rhs.to_string() << "\n";
          }
        }
      }
      all_equal = all_equal && equal == opt.samples;
      text << "d=" << d << " k=" << k << ": " << equal << "/" << opt.samples << " equal\n";
      shapes.push_back({{"d", d}, {"k", k}, {"samples", samples}, {"equal", equal}});
    }
  text << (all_equal ? "all shapes passed\n" : "verification FAILED\n");
  r.payload = {{"seed", opt.seed}, {"shapes", shapes}, {"all_equal", all_equal}};
  r.text = text.str();
  r.code = all_equal ? kExitOk : kExitVerification;
  return r;
}

// ---------------------------------------------------------------- sym-gram

Result cmd_sym_gram(const std::string& path, int k, bool with_det) {
  GramMatrix g = gram_from_json(read_json_file(path));
  SymPowerForm form = induced_gram(g, k);
  Result r;
  Json basis = Json::array();
  std::vector<std::string> names;
  for (const auto& a : form.basis) {
    basis.push_back(a.to_string());
    names.push_back(a.to_string());
  }
  r.payload = {{"k", k}, {"basis", basis}, {"gram", matrix_to_json(form.gram)}};
  std::ostringstream text;
  text << "basis: " << join(names, " ") << "\n" << matrix_text(form.gram);
  if (with_det) {
    Scalar det = det_exact(form.gram);
    r.payload["det"] = to_string(det);
    text << "det: " << to_string(det) << "\n";
  }
  r.text = text.str();
  return r;
}

// ---------------------------------------------------------------- orthopoly

Result cmd_orthopoly(int n, int m) {
  UniPoly p = p_poly(n, m);
  Result r;
  r.payload = {{"n", n}, {"m", m}, {"poly", p.to_string()}, {"coefficients", scalar_strings(p.coefficients())}};
  std::ostringstream text;
  text << p.to_string() << "\n";
  if (n >= 1 && 2 * n <= m - 1) {
    r.payload["d"] = to_string(d_coeff(n, m));
    text << "d: " << to_string(d_coeff(n, m)) << "\n";
  }
  if (2 * n <= m - 1) {
    r.payload["norm"] = to_string(norm_hat(n, m));
    text << "norm: " << to_string(norm_hat(n, m)) << "\n";
  }
  r.text = text.str();
  return r;
}

// ---------------------------------------------------------------- hbasis

struct HBasisOptions {
  int d = 0;
  int k = 0;
  bool norms = false;
  bool gram = false;
  bool transition = false;
};

Result cmd_hbasis(const HBasisOptions& opt) {
  const auto basis = enumerate_monomials(opt.d, opt.k);
  if (basis.size() > kMaxHBasisRank) {
    throw SizeLimitError("basis of " + std::to_string(basis.size()) + " elements exceeds " +
                         std::to_string(kMaxHBasisRank));
  }
  Result r;
  std::ostringstream text;
  Json elements = Json::array();
  for (const auto& a : basis) {
    const MultiPoly& h = h_alpha_poly(a);
    Json e = {{"alpha", a.to_string()}, {"poly", h.to_string()}};
    text << "h" << a.to_string() << " = " << h.to_string() << "\n";
    if (opt.norms) {
      e["norm"] = to_string(h_norm(a));
      text << "  norm: " << to_string(h_norm(a)) << "\n";
    }
    elements.push_back(e);
  }
  r.payload = {{"d", opt.d}, {"k", opt.k}, {"basis", elements}};
  bool ok = true;
  if (opt.gram) {
    GramHReport g = gram_h(opt.d, opt.k);
    r.payload["gram"] = {{"diagonal", scalar_strings(g.diagonal)},
                         {"off_diagonal_zero", g.off_diagonal_zero},
                         {"recursion_matches", g.recursion_matches},
                         {"product", to_string(g.determinant)},
                         {"theta", theta(opt.d, opt.k).to_string()}};
    const bool matches_theta = g.determinant == theta(opt.d, opt.k).value();
    text << "diagonal: " << join(scalar_strings(g.diagonal)) << "\n"
         << "product: " << to_string(g.determinant) << "\n"
         << "off-diagonal zero: " << yes_no(g.off_diagonal_zero) << "\n"
         << "norm recursion matches: " << yes_no(g.recursion_matches) << "\n"
         << "product equals theta: " << yes_no(matches_theta) << "\n";
    ok = ok && g.off_diagonal_zero && g.recursion_matches && matches_theta;
  }
  if (opt.transition) {
    TransitionReport t = transition_check(opt.d, opt.k);
    r.payload["transition"] = {{"inverse", matrix_to_json(t.inverse_transition)},
                               {"unit_lower_triangular", t.unit_lower_triangular},
                               {"reconstructs_monomials", t.reconstructs_monomials}};
    text << "inverse transition:\n"
         << matrix_text(t.inverse_transition) << "unit lower triangular: " << yes_no(t.unit_lower_triangular) << "\n"
         << "reconstructs monomials: " << yes_no(t.reconstructs_monomials) << "\n";
    ok = ok && t.unit_lower_triangular && t.reconstructs_monomials;
  }
  r.code = ok ? kExitOk : kExitVerification;
  r.text = text.str();
  return r;
}

// ---------------------------------------------------------------- lattice

Json int_rows(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

std::optional<FactoredInteger> discriminant_if_nondegenerate(const Embedding& e) {
  if (e.rank() > 0 && det_exact(e.source_gram()) == 0) return std::nullopt;
  return discriminant(e.source());
}

Result cmd_lattice_gram(const std::string& path) {
  GramMatrix g = gram_from_json(read_json_file(path));
  Lattice l(to_integer_matrix(g.matrix()));
  FactoredInteger disc = discriminant(l);
  Result r;
  r.payload = {{"rank", l.rank()}, {"discriminant", disc.to_string()}, {"unimodular", disc.is_one()}};
  r.text = "rank: " + std::to_string(l.rank()) + "\ndiscriminant: " + describe(disc) + "\n";
  return r;
}

Result cmd_lattice_embedding(const std::string& path) {
  Embedding e = embedding_from_json(read_json_file(path));
  Embedding perp = orthogonal_complement(e);
  Embedding sat = double_complement(e);
  FactoredInteger torsion = quotient_torsion(e);
  auto disc_l = discriminant_if_nondegenerate(e);
  auto disc_perp = discriminant_if_nondegenerate(perp);

  Result r;
  std::ostringstream text;
  const auto disc_json = [](const std::optional<FactoredInteger>& d) { return d ? Json(d->to_string()) : Json(); };
  const auto disc_text = [](const std::optional<FactoredInteger>& d) { return d ? describe(*d) : "degenerate"; };
  r.payload = {{"target_rank", e.target().rank()},
               {"target_discriminant", discriminant(e.target()).to_string()},
               {"rank", e.rank()},
               {"discriminant", disc_json(disc_l)},
               {"torsion", torsion.to_string()},
               {"complement_basis", int_rows(perp.basis())},
               {"complement_discriminant", disc_json(disc_perp)},
               {"saturation_basis", int_rows(sat.basis())}};
  text << "target rank: " << e.target().rank() << "\n"
       << "target discriminant: " << describe(discriminant(e.target())) << "\n"
       << "sublattice rank: " << e.rank() << "\n"
       << "sublattice discriminant: " << disc_text(disc_l) << "\n"
       << "torsion of quotient: " << describe(torsion) << "\n"
       << "complement rank: " << perp.rank() << "\n"
       << "complement basis:\n"
       << matrix_text(to_exact(perp.basis())) << "complement discriminant: " << disc_text(disc_perp) << "\n"
       << "saturation basis:\n"
       << matrix_text(to_exact(sat.basis()));
  if (disc_l && discriminant(e.target()).is_one()) {
    FactoredInteger predicted = complement_discriminant(*disc_l, torsion);
    const bool ok = disc_perp && *disc_perp == predicted;
    r.payload["predicted_complement_discriminant"] = predicted.to_string();
    r.payload["prediction_holds"] = ok;
    text << "predicted complement discriminant: " << describe(predicted) << (ok ? " (holds)" : " (FAILS)") << "\n";
    if (!ok) r.code = kExitVerification;
  }
  r.text = text.str();
  return r;
}

// ---------------------------------------------------------------- hk

Result cmd_hk(const std::string& name, std::optional<int> k, const std::string& torsion, bool without_cx) {
  ManifoldData m = registry(name, k);
  HKReport rep = torsion.empty() ? hk_report(m) : torsion_report(m, FactoredInteger::parse(torsion));
  if (without_cx) {
    rep.discriminant = sym_discriminant(m, false);
    if (rep.torsion) rep.complement_discriminant = complement_discriminant(rep.discriminant, *rep.torsion);
  }
  Result r;
  r.payload = hk_report_to_json(rep);
  r.payload["b2"] = m.b2;
  r.payload["d2"] = m.d2.to_string();
  r.payload["c_x"] = to_string(m.c_x);
  r.payload["includes_c_x"] = !without_cx;
  std::vector<std::string> primes;
  for (const auto& p : rep.prime_set) primes.push_back(to_string(p));
  std::ostringstream text;
  text << "manifold: " << rep.manifold << " (k=" << rep.k << ", b2=" << m.b2 << ", d2=" << m.d2.to_string()
       << ", c_X=" << to_string(m.c_x) << ")\n"
       << "rank of Sym^k H^2: " << to_string(rep.rank) << "\n"
       << "discriminant" << (without_cx ? " (without c_X)" : "") << ": " << rep.discriminant.to_string() << "\n"
       << "square-free part: " << rep.discriminant.square_free_part().to_string() << "\n"
       << "prime set Z: " << join(primes) << "\n";
  if (rep.discriminant.is_square()) text << "square root: " << rep.discriminant.sqrt().to_string() << "\n";
  if (rep.torsion) {
    text << "torsion order: " << rep.torsion->to_string() << "\n"
         << "complement discriminant: " << rep.complement_discriminant->to_string() << "\n"
         << "complement square-free part: " << rep.complement_discriminant->square_free_part().to_string() << "\n";
  }
  r.text = text.str();
  return r;
}

// ---------------------------------------------------------------- driver

void emit(const Result& r, bool json, std::optional<double> millis) {
  if (json) {
    Json out = {{"status", r.code == kExitOk ? "ok" : "error"}, {"payload", r.payload}};
    if (millis) out["timing_ms"] = *millis;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << r.text;
    if (millis) std::cerr << "time: " << *millis << " ms\n";
  }
}

int fail(int code, const std::string& message, bool json) {
  if (json) {
    Json out = {{"status", "error"}, {"payload", {{"message", message}, {"exit_code", code}}}};
    std::cout << out.dump(2) << "\n";
  }
  std::cerr << "error: " << message << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Gram determinants of symmetric powers of lattices"};
  app.require_subcommand(1);
  std::string format = "text";
  bool timing = false;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--timing", timing, "Report wall-clock time");
  };

  int d = 0, k = 0, n = 0, m = 0;

  auto* theta_cmd = app.add_subcommand("theta", "Combinatorial factor theta_{d,k}, factored");
  theta_cmd->add_option("d", d, "Rank minus one")->required()->check(CLI::NonNegativeNumber);
  theta_cmd->add_option("k", k, "Symmetric power")->required()->check(CLI::NonNegativeNumber);
  add_common(theta_cmd);

  VerifyOptions vopt;
  auto* verify_cmd = app.add_subcommand("verify", "Brute-force check of the determinant formula on random forms");
  verify_cmd->add_option("--dmax", vopt.dmax, "Largest d (rank d+1)")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--kmax", vopt.kmax, "Largest k")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--samples", vopt.samples, "Random forms per shape")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", vopt.seed, "Random seed");
  verify_cmd->add_flag("--corrupt-theta", vopt.corrupt_theta, "Test hook: double theta before comparing")
      ->group("");
  add_common(verify_cmd);

  std::string gram_path;
  bool with_det = false;
  auto* sym_cmd = app.add_subcommand("sym-gram", "Induced Gram matrix on Sym^k");
  sym_cmd->add_option("--gram", gram_path, "Gram matrix JSON file")->required();
  sym_cmd->add_option("-k", k, "Symmetric power")->required()->check(CLI::NonNegativeNumber);
  sym_cmd->add_flag("--det", with_det, "Also print the determinant");
  add_common(sym_cmd);

  auto* ortho_cmd = app.add_subcommand("orthopoly", "The polynomial p_n^m");
  ortho_cmd->add_option("n", n, "Degree")->required();
  ortho_cmd->add_option("m", m, "Parameter")->required();
  add_common(ortho_cmd);

  HBasisOptions hopt;
  auto* hb_cmd = app.add_subcommand("hbasis", "Orthogonal homogeneous basis h_alpha");
  hb_cmd->add_option("d", hopt.d, "Number of variables minus one")->required()->check(CLI::NonNegativeNumber);
  hb_cmd->add_option("k", hopt.k, "Degree")->required()->check(CLI::NonNegativeNumber);
  hb_cmd->add_flag("--norms", hopt.norms, "Norms from the recursion");
  hb_cmd->add_flag("--gram", hopt.gram, "Gram matrix of the basis, checked against theta");
  hb_cmd->add_flag("--transition", hopt.transition, "Transition matrix to monomials");
  add_common(hb_cmd);

  std::string embedding_path, lattice_gram_path;
  auto* lat_cmd = app.add_subcommand("lattice", "Discriminants, torsion and complements");
  auto* emb_opt = lat_cmd->add_option("--embedding", embedding_path, "Embedding JSON file");
  auto* lg_opt = lat_cmd->add_option("--gram", lattice_gram_path, "Lattice Gram JSON file");
  emb_opt->excludes(lg_opt);
  lat_cmd->require_option(1);
  add_common(lat_cmd);

  std::string manifold, torsion;
  std::optional<int> hk_k;
  bool without_cx = false;
  auto* hk_cmd = app.add_subcommand("hk", "Sym^k H^2 of a hyperkaehler manifold");
  hk_cmd->add_option("--manifold", manifold, "One of K3_Hilb, Kummer, OG6, OG10")->required();
  hk_cmd->add_option("-k", hk_k, "Half the complex dimension");
  hk_cmd->add_option("--torsion", torsion, "Torsion order of the quotient, factored (e.g. \"2^277 * 3^46\")");
  hk_cmd->add_flag("--without-cx", without_cx, "Drop the Fujiki constant from the form");
  add_common(hk_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  const bool json = format == "json";
  try {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    if (*theta_cmd) r = cmd_theta(d, k);
    else if (*verify_cmd) r = cmd_verify(vopt);
    else if (*sym_cmd) r = cmd_sym_gram(gram_path, k, with_det);
    else if (*ortho_cmd) r = cmd_orthopoly(n, m);
    else if (*hb_cmd) r = cmd_hbasis(hopt);
    else if (*lat_cmd) r = embedding_path.empty() ? cmd_lattice_gram(lattice_gram_path) : cmd_lattice_embedding(embedding_path);
    else if (*hk_cmd) r = cmd_hk(manifold, hk_k, torsion, without_cx);
    std::optional<double> millis;
    if (timing) {
      millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    emit(r, json, millis);
    return r.code;
  } catch (const SizeLimitError& e) {
    return fail(kExitSizeLimit, e.what(), json);
  } catch (const Json::exception& e) {
    return fail(kExitBadInput, e.what(), json);
  } catch (const std::invalid_argument& e) {
    return fail(kExitBadInput, e.what(), json);
  } catch (const std::domain_error& e) {
    return fail(kExitBadInput, e.what(), json);
  } catch (const std::out_of_range& e) {
    return fail(kExitBadInput, e.what(), json);
  }
}
