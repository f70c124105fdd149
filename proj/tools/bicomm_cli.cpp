// Command-line interface for the library: exact arithmetic, identity checks,
// Hilbert series and dimensions, truncated ideal bases, characters.
//
// Exit codes: 0 success, 1 domain failure (single "error: ..." line on
// stderr) or a failing check, 2 usage errors.  --format json wraps every
// result in {"command", "inputs", "result", "seed"}; seed is null for
// deterministic commands.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bicomm/algebra.hpp"
#include "bicomm/characters.hpp"
#include "bicomm/groebner.hpp"
#include "bicomm/identity.hpp"
#include "bicomm/series.hpp"
#include "bicomm/term.hpp"
#include "bicomm/textio.hpp"

using nlohmann::json;
using namespace bicomm;

namespace {

int exit_status = 0;

Signature make_signature(unsigned p, unsigned q, unsigned characteristic) {
  return Signature(p, q, characteristic == 0 ? Field::rationals()
                                             : Field::prime(characteristic));
}

std::vector<unsigned> parse_uvec(const std::string& text) {
  std::vector<unsigned> out;
  if (text.empty()) return out;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw DomainError("expected a comma-separated list of nonnegative integers");
    out.push_back(static_cast<unsigned>(std::stoul(tok)));
  }
  return out;
}

Partition parse_partition_arg(const std::string& text) {
  Partition p = parse_uvec(text);
  validate_partition(p);
  return p;
}

std::string partition_to_text(const Partition& p) {
  std::string s;
  for (unsigned part : p) {
    if (!s.empty()) s += " ";
    s += std::to_string(part);
  }
  return s;
}

void emit(const std::string& command, const json& inputs, const json& result,
          std::optional<std::uint64_t> seed, const std::string& format,
          const std::string& text_form) {
  if (format == "json") {
    json envelope{{"command", command},
                  {"inputs", inputs},
                  {"result", result},
                  {"seed", seed ? json(*seed) : json(nullptr)}};
    std::cout << envelope.dump(2) << "\n";
  } else {
    std::cout << text_form << "\n";
  }
}

std::string exponent_text(const std::vector<std::string>& vars,
                          const std::vector<unsigned>& e) {
  std::string s;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += " ";
    s += vars[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

json series_to_json(const RationalSeries& s) {
  json numer = json::array();
  for (const auto& [e, c] : s.numerator().terms())
    numer.push_back({{"exponents", e}, {"coeff", c.get_str()}});
  json denom = json::array();
  for (const DenomFactor& f : s.denominator())
    denom.push_back({{"exponents", f.exponents}, {"power", f.power}});
  json coeffs = json::array();
  for (const auto& [e, c] : s.coefficients())
    coeffs.push_back({{"exponents", e}, {"coeff", c.get_str()}});
  return {{"variables", s.variables()},
          {"truncation", s.truncation()},
          {"numerator", numer},
          {"denominator", denom},
          {"coefficients", coeffs}};
}

std::string series_to_csv(const RationalSeries& s) {
  std::ostringstream out;
  for (const std::string& v : s.variables()) out << v << ",";
  out << "coefficient\n";
  if (s.variables().size() == 1) {
    for (unsigned d = 0; d <= s.truncation(); ++d)
      out << d << "," << s.coefficient({d}).get_str() << "\n";
    return out.str();
  }
  for (const auto& [e, c] : s.coefficients()) {
    for (unsigned x : e) out << x << ",";
    out << c.get_str() << "\n";
  }
  return out.str();
}

std::string series_to_text(const RationalSeries& s) {
  std::ostringstream out;
  out << "variables:";
  for (const std::string& v : s.variables()) out << " " << v;
  out << "\ntruncation: " << s.truncation() << "\n";
  if (s.variables().size() == 1) {
    for (unsigned d = 0; d <= s.truncation(); ++d)
      out << exponent_text(s.variables(), {d}) << ": " << s.coefficient({d}).get_str()
          << "\n";
  } else {
    for (const auto& [e, c] : s.coefficients())
      out << exponent_text(s.variables(), e) << ": " << c.get_str() << "\n";
  }
  std::string text = out.str();
  if (!text.empty() && text.back() == '\n') text.pop_back();
  return text;
}

std::string poly_vars_text(const MultiPoly& f, const std::string& stem) {
  if (f.is_zero()) return "0";
  std::vector<std::string> vars;
  for (unsigned i = 1; i <= f.nvars(); ++i) vars.push_back(stem + std::to_string(i));
  std::string s;
  for (const auto& [e, c] : f.terms()) {
    if (!s.empty()) s += " + ";
    if (c == 1)
      s += exponent_text(vars, e);
    else
      s += c.get_str() + " * " + exponent_text(vars, e);
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation in free bicommutative superalgebras"};
  app.require_subcommand(1);
  std::string format = "text";

  // ---- normalize ----------------------------------------------------------
  auto* norm = app.add_subcommand("normalize", "expand a bracketed term over the basis");
  {
    static unsigned p = 0, q = 0, chr = 0;
    static std::string term, fmt;
    fmt = "text";
    norm->add_option("--p", p, "even generators")->required();
    norm->add_option("--q", q, "odd generators")->required();
    norm->add_option("--char", chr, "field characteristic (0 = rationals)");
    norm->add_option("term", term, "term, e.g. \"(z2 (z1 y1))\"")->required();
    norm->add_option("--format", fmt)->check(CLI::IsMember({"text", "json"}));
    norm->callback([&]() {
      Signature sig = make_signature(p, q, chr);
      SuperPolynomial f = normalize(term, sig);
      json inputs{{"p", p}, {"q", q}, {"char", chr}, {"term", term}};
      json result{{"text", to_text(f)}, {"polynomial", to_json(f)}};
      emit("normalize", inputs, result, std::nullopt, fmt, to_text(f));
    });
  }

  // ---- identity-check ------------------------------------------------------
  auto* idc = app.add_subcommand("identity-check", "verify a structural identity");
  {
    static unsigned p = 0, q = 0, chr = 0, k = 4, l = 2, m = 2, n = 2, trials = 200;
    static std::uint64_t seed = 0;
    static int drop_sign = -1;
    static std::string name, fmt;
    static bool no_exhaustive = false;
    fmt = "text";
    idc->add_option("--p", p)->required();
    idc->add_option("--q", q)->required();
    idc->add_option("--char", chr);
    idc->add_option("--name", name, "identity name or 'all'")->required();
    idc->add_option("--k", k, "stack size for sized families");
    idc->add_option("--l", l);
    idc->add_option("--m", m);
    idc->add_option("--n", n);
    idc->add_option("--trials", trials);
    idc->add_option("--seed", seed, "PRNG seed (trial t uses seed + t)")->required();
    idc->add_option("--drop-sign", drop_sign, "drop one sign term; expects a failure");
    idc->add_flag("--no-exhaustive", no_exhaustive);
    idc->add_option("--format", fmt)->check(CLI::IsMember({"text", "json"}));
    idc->callback([&]() {
      Signature sig = make_signature(p, q, chr);
      CheckOptions opts;
      opts.trials = trials;
      opts.seed = seed;
      opts.exhaustive = !no_exhaustive;

      auto make = [&](const std::string& nm) -> std::optional<IdentityPattern> {
        if (nm == "superleft") return pat_superleft();
        if (nm == "superright") return pat_superright();
        if (nm == "weak-assoc") return pat_weak_assoc();
        if (nm == "two-odd-left-box") return pat_two_odd_left_box(std::max(3u, k));
        if (nm == "cor-two-odd-left-box") return pat_cor_two_odd_left_box(std::max(1u, k - 1));
        if (nm == "two-odd-left") return pat_two_odd_left(std::max(3u, k));
        if (nm == "cor-two-odd-left") return pat_cor_two_odd_left(std::max(1u, k - 1));
        if (nm == "two-odd-right") return pat_two_odd_right(std::max(3u, k));
        if (nm == "cor-two-odd-right") return pat_cor_two_odd_right(std::max(1u, k - 1));
        if (nm == "left-to-right-comb") return pat_left_to_right_comb(std::max(2u, k - 1));
        if (nm == "comb-product") return pat_comb_product(k, l, m, n);
        return std::nullopt;
      };

      json rows = json::array();
      std::ostringstream text;
      bool all_pass = true;
      auto run_pattern = [&](IdentityPattern pat) {
        if (drop_sign >= 0) {
          if (static_cast<std::size_t>(drop_sign) >= pat.sign.size())
            throw DomainError("no sign term with that index");
          pat.sign.erase(pat.sign.begin() + drop_sign);
          pat.name += "/drop-sign-" + std::to_string(drop_sign);
        }
        CheckResult r = check_identity(pat, sig, opts);
        all_pass = all_pass && r.pass;
        json row{{"name", pat.name},
                 {"pass", r.pass},
                 {"random_trials", r.random_trials},
                 {"exhaustive_cases", r.exhaustive_cases}};
        text << "identity " << pat.name << ": " << (r.pass ? "PASS" : "FAIL")
             << " (random " << r.random_trials << ", exhaustive "
             << r.exhaustive_cases << ")";
        if (r.witness) {
          json w = json::array();
          text << "\n  counterexample (" << r.witness->phase << "):";
          for (std::size_t i = 0; i < r.witness->substitution.size(); ++i) {
            text << "\n    x" << i + 1 << " = " << r.witness->substitution[i];
            w.push_back(r.witness->substitution[i]);
          }
          row["witness"] = w;
        }
        text << "\n";
        rows.push_back(std::move(row));
      };
      auto run_permute = [&](bool left) {
        PermuteCheckResult r =
            check_permutation_identity(sig, left, std::min(k, 3u), std::min(l, 3u),
                                       trials, seed);
        all_pass = all_pass && r.pass;
        std::string nm = left ? "permute-left" : "permute-right";
        rows.push_back({{"name", nm}, {"pass", r.pass}, {"cases", r.cases}});
        text << "identity " << nm << ": " << (r.pass ? "PASS" : "FAIL") << " ("
             << r.cases << " cases)\n";
      };

      if (name == "all") {
        for (const char* nm :
             {"superleft", "superright", "weak-assoc", "two-odd-left-box",
              "cor-two-odd-left-box", "two-odd-left", "cor-two-odd-left",
              "two-odd-right", "cor-two-odd-right", "left-to-right-comb",
              "comb-product"})
          run_pattern(*make(nm));
        run_permute(true);
        run_permute(false);
      } else if (name == "permute-left") {
        run_permute(true);
      } else if (name == "permute-right") {
        run_permute(false);
      } else if (auto pat = make(name)) {
        run_pattern(std::move(*pat));
      } else {
        throw DomainError("unknown identity name: " + name);
      }

      if (!all_pass && drop_sign < 0) exit_status = 1;
      if (drop_sign >= 0 && all_pass) exit_status = 1;  // mutation must fail
      std::string t = text.str();
      if (!t.empty() && t.back() == '\n') t.pop_back();
      json inputs{{"p", p},         {"q", q},     {"char", chr}, {"name", name},
                  {"k", k},         {"l", l},     {"m", m},      {"n", n},
                  {"trials", trials}, {"drop_sign", drop_sign}};
      emit("identity-check", inputs, {{"checks", rows}, {"pass", all_pass}}, seed,
           fmt, t);
    });
  }

  // ---- hilbert -------------------------------------------------------------
  auto* hil = app.add_subcommand("hilbert", "Hilbert series of the free algebra");
  {
    static unsigned p = 0, q = 0, trunc = 12;
    static std::string grading, fmt;
    grading = "total";
    fmt = "text";
    hil->add_option("--p", p)->required();
    hil->add_option("--q", q)->required();
    hil->add_option("--grading", grading)
        ->check(CLI::IsMember({"total", "bi", "multi"}));
    hil->add_option("--trunc", trunc, "expand coefficients up to this total degree");
    hil->add_option("--format", fmt)->check(CLI::IsMember({"text", "json", "csv"}));
    hil->callback([&]() {
      Signature sig = make_signature(p, q, 0);
      Grading g = grading == "total"  ? Grading::total
                  : grading == "bi"   ? Grading::bi
                                      : Grading::multi;
      RationalSeries s = hilbert_free(sig, g, trunc);
      json inputs{{"p", p}, {"q", q}, {"grading", grading}, {"trunc", trunc}};
      if (fmt == "csv") {
        std::cout << series_to_csv(s);
        return;
      }
      emit("hilbert", inputs, series_to_json(s), std::nullopt, fmt, series_to_text(s));
    });
  }

  // ---- dim -----------------------------------------------------------------
  auto* dim = app.add_subcommand("dim", "dimension of a graded component");
  {
    static unsigned p = 0, q = 0;
    static int n = -1, k = -1, l = -1;
    static std::string kvec, lvec, fmt;
    fmt = "text";
    dim->add_option("--p", p)->required();
    dim->add_option("--q", q)->required();
    dim->add_option("--n", n, "total degree");
    dim->add_option("--k", k, "even degree (with --l)");
    dim->add_option("--l", l, "odd degree (with --k)");
    dim->add_option("--kvec", kvec, "per-variable even degrees, e.g. 1,2");
    dim->add_option("--lvec", lvec, "per-variable odd degrees, e.g. 0,1");
    dim->add_option("--format", fmt)->check(CLI::IsMember({"text", "json"}));
    dim->callback([&]() {
      Signature sig = make_signature(p, q, 0);
      Integer value;
      json inputs{{"p", p}, {"q", q}};
      if (!kvec.empty() || !lvec.empty()) {
        value = dim_component(sig, parse_uvec(kvec), parse_uvec(lvec));
        inputs["kvec"] = kvec;
        inputs["lvec"] = lvec;
      } else if (k >= 0 || l >= 0) {
        if (k < 0 || l < 0) throw DomainError("--k and --l must be given together");
        value = dim_component_bi(sig, static_cast<unsigned>(k), static_cast<unsigned>(l));
        inputs["k"] = k;
        inputs["l"] = l;
      } else if (n >= 0) {
        value = dim_component_total(sig, static_cast<unsigned>(n));
        inputs["n"] = n;
      } else {
        throw DomainError("one of --n, --k/--l, --kvec/--lvec is required");
      }
      emit("dim", inputs, json{{"dimension", value.get_str()}}, std::nullopt, fmt,
           value.get_str());
    });
  }

  // ---- codim ---------------------------------------------------------------
  auto* cod = app.add_subcommand("codim", "codimension of the multilinear part");
  {
    static int n = -1, p = -1, q = -1;
    static std::string fmt;
    fmt = "text";
    cod->add_option("--n", n, "ordinary codimension c_n");
    cod->add_option("--p", p, "even block (with --q)");
    cod->add_option("--q", q, "odd block (with --p)");
    cod->add_option("--format", fmt)->check(CLI::IsMember({"text", "json"}));
    cod->callback([&]() {
      Integer value;
      json inputs;
      if (n >= 0) {
        value = codimension_ordinary(static_cast<unsigned>(n));
        inputs["n"] = n;
      } else if (p >= 0 && q >= 0) {
        value = codimension_super(static_cast<unsigned>(p), static_cast<unsigned>(q));
        inputs["p"] = p;
        inputs["q"] = q;
      } else {
        throw DomainError("either --n or both --p and --q are required");
      }
      emit("codim", inputs, json{{"codimension", value.get_str()}}, std::nullopt, fmt,
           value.get_str());
    });
  }

  // ---- gk ------------------------------------------------------------------
  auto* gk = app.add_subcommand("gk", "Gelfand-Kirillov dimension of the free algebra");
  {
    static unsigned p = 0, q = 0;
    static std::string fmt;
    fmt = "text";
    gk->add_option("--p", p)->required();
    gk->add_option("--q", q)->required();
    gk->add_option("--format", fmt)->check(CLI::IsMember({"text", "json"}));
    gk->callback([&]() {
      Signature sig = make_signature(p, q, 0);
      unsigned value = gk_dimension_free(sig);
      emit("gk", json{{"p", p}, {"q", q}}, json{{"gk", value}}, std::nullopt, fmt,
           std::to_string(value));
    });
  }

  // ---- gs ------------------------------------------------------------------
  auto* gs = app.add_subcommand("gs", "truncated ideal bases");
  gs->require_subcommand(1);
  {
    static unsigned p = 0, q = 0, chr = 0, maxdeg = 8;
    static std::string ideal_path, order_name, poly_text, fmt;
    order_name = "deglex";
    fmt = "text";
    gs->add_option("--p", p)->required();
    gs->add_option("--q", q)->required();
    gs->add_option("--char", chr);
    gs->add_option("--ideal", ideal_path, "file with one polynomial per line")
        ->required();
    gs->add_option("--order", order_name)->check(CLI::IsMember({"deglex", "weight"}));
    gs->add_option("--max-degree", maxdeg);
    gs->add_option("--format", fmt)->check(CLI::IsMember({"text", "json", "csv"}));
    gs->fallthrough();

    auto build = [&]() {
      Signature sig = make_signature(p, q, chr);
      std::vector<SuperPolynomial> ideal = read_ideal_file(ideal_path, sig);
      MonomialOrder ord = order_name == "weight" ? MonomialOrder::weight(sig)
                                                 : MonomialOrder::deglex(sig);
      return truncated_basis(sig, ideal, ord, maxdeg);
    };
    auto inputs = [&]() {
      return json{{"p", p},           {"q", q},         {"char", chr},
                  {"ideal", ideal_path}, {"order", order_name}, {"max_degree", maxdeg}};
    };

    auto* basis = gs->add_subcommand("basis", "staircase and reduced generators");
    basis->callback([&, build, inputs]() {
      GsBasis b = build();
      json stair = json::array(), gens = json::array();
      std::ostringstream text;
      text << "staircase (" << b.staircase.size() << "):\n";
      for (const BasisMonomial& m : b.staircase) {
        stair.push_back(to_text(m, b.sig));
        text << "  " << to_text(m, b.sig) << "\n";
      }
      text << "generators:\n";
      for (const SuperPolynomial& g : b.generators) {
        gens.push_back(to_text(g));
        text << "  " << to_text(g) << "\n";
      }
      text << "stable_through: " << b.stable_through;
      emit("gs basis", inputs(),
           json{{"staircase", stair},
                {"generators", gens},
                {"stable_through", b.stable_through}},
           std::nullopt, fmt == "csv" ? "text" : fmt, text.str());
    });

    auto* red = gs->add_subcommand("reduce", "normal form modulo the basis");
    red->add_option("--poly", poly_text, "polynomial in text form")->required();
    red->callback([&, build, inputs]() {
      GsBasis b = build();
      SuperPolynomial f = poly_from_text(poly_text, b.sig);
      SuperPolynomial r = b.generators.empty() ? f : reduce(f, b.generators, b.order);
      json in = inputs();
      in["poly"] = poly_text;
      emit("gs reduce", in, json{{"normal_form", to_text(r)}}, std::nullopt,
           fmt == "csv" ? "text" : fmt, to_text(r));
    });

    auto* mem = gs->add_subcommand("member", "ideal membership up to the truncation");
    mem->add_option("--poly", poly_text, "polynomial in text form")->required();
    mem->callback([&, build, inputs]() {
      GsBasis b = build();
      SuperPolynomial f = poly_from_text(poly_text, b.sig);
      Membership r = member(f, b);
      std::string s = r == Membership::yes ? "yes"
                      : r == Membership::no ? "no"
                                            : "unknown";
      json in = inputs();
      in["poly"] = poly_text;
      emit("gs member", in, json{{"member", s}}, std::nullopt,
           fmt == "csv" ? "text" : fmt, s);
    });

    auto* dims = gs->add_subcommand("dims", "quotient dimensions per degree");
    dims->callback([&, build, inputs]() {
      GsBasis b = build();
      std::vector<unsigned long> d = quotient_dims(b);
      if (fmt == "csv") {
        std::cout << "degree,dimension\n";
        for (std::size_t i = 0; i < d.size(); ++i) std::cout << i << "," << d[i] << "\n";
        return;
      }
      std::ostringstream text;
      for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) text << "\n";
        text << "degree " << i << ": " << d[i];
      }
      emit("gs dims", inputs(), json{{"dims", d}}, std::nullopt, fmt, text.str());
    });
  }

  // ---- cochar --------------------------------------------------------------
  auto* coc = app.add_subcommand("cochar", "double character multiplicities");
  {
    static std::string lambda_s, mu_s, fmt;
    static bool table = false, series = false;
    static unsigned maxw = 6, trunc = 6;
    static bool lambda_given = false;
    fmt = "text";
    coc->add_option("--lambda", lambda_s, "partition, e.g. 2,1")
        ->each([&](const std::string&) { lambda_given = true; });
    coc->add_option("--mu", mu_s, "partition, e.g. 1");
    coc->add_flag("--table", table, "all multiplicities with |lambda|+|mu| <= max");
    coc->add_option("--max", maxw);
    coc->add_flag("--series", series, "generating series of the multiplicities");
    coc->add_option("--trunc", trunc);
    coc->add_option("--format", fmt)->check(CLI::IsMember({"text", "json", "csv"}));
    coc->callback([&]() {
      if (series) {
        RationalSeries s = double_multiplicity_series(trunc);
        if (fmt == "csv") {
          std::cout << series_to_csv(s);
          return;
        }
        emit("cochar", json{{"series", true}, {"trunc", trunc}}, series_to_json(s),
             std::nullopt, fmt, series_to_text(s));
        return;
      }
      if (table) {
        json rows = json::array();
        std::ostringstream text, csv;
        csv << "lambda,mu,multiplicity\n";
        for (unsigned w = 1; w <= maxw; ++w) {
          for (unsigned a = 0; a <= w; ++a) {
            for (const Partition& lam : partitions_of(a)) {
              for (const Partition& mu : partitions_of(w - a)) {
                unsigned long m = multiplicity(lam, mu);
                if (m == 0) continue;
                rows.push_back({{"lambda", lam}, {"mu", mu}, {"multiplicity", m}});
                text << "lambda=(" << partition_to_text(lam) << ") mu=("
                     << partition_to_text(mu) << "): " << m << "\n";
                csv << "\"" << partition_to_text(lam) << "\",\""
                    << partition_to_text(mu) << "\"," << m << "\n";
              }
            }
          }
        }
        if (fmt == "csv") {
          std::cout << csv.str();
          return;
        }
        std::string t = text.str();
        if (!t.empty() && t.back() == '\n') t.pop_back();
        emit("cochar", json{{"table", true}, {"max", maxw}}, json{{"rows", rows}},
             std::nullopt, fmt, t);
        return;
      }
      if (!lambda_given && mu_s.empty())
        throw DomainError("either --lambda/--mu, --table, or --series is required");
      Partition lam = parse_partition_arg(lambda_s);
      Partition mu = parse_partition_arg(mu_s);
      unsigned long m = multiplicity(lam, mu);
      emit("cochar", json{{"lambda", lam}, {"mu", mu}},
           json{{"multiplicity", m}}, std::nullopt, fmt == "csv" ? "text" : fmt,
           std::to_string(m));
    });
  }

  // ---- schur ---------------------------------------------------------------
  auto* sch = app.add_subcommand("schur", "Schur polynomial in d variables");
  {
    static std::string shape, fmt;
    static unsigned vars = 2;
    fmt = "text";
    sch->add_option("--shape", shape, "partition, e.g. 2,1")->required();
    sch->add_option("--vars", vars, "number of variables")->required();
    sch->add_option("--format", fmt)->check(CLI::IsMember({"text", "json"}));
    sch->callback([&]() {
      Partition lam = parse_partition_arg(shape);
      MultiPoly f = schur(lam, vars);
      json terms = json::array();
      for (const auto& [e, c] : f.terms())
        terms.push_back({{"exponents", e}, {"coeff", c.get_str()}});
      emit("schur", json{{"shape", lam}, {"vars", vars}}, json{{"terms", terms}},
           std::nullopt, fmt, poly_vars_text(f, "x"));
    });
  }

  // ---- selftest --------------------------------------------------------------
  auto* st = app.add_subcommand("selftest", "compact internal consistency suite");
  {
    static std::uint64_t seed = 12345;
    static unsigned trials = 25;
    static std::string fmt;
    fmt = "text";
    st->add_option("--seed", seed);
    st->add_option("--trials", trials);
    st->add_option("--format", fmt)->check(CLI::IsMember({"text", "json"}));
    st->callback([&]() {
      json rows = json::array();
      std::ostringstream text;
      bool all = true;
      auto report = [&](const std::string& name, bool pass) {
        all = all && pass;
        rows.push_back({{"name", name}, {"pass", pass}});
        text << (pass ? "PASS " : "FAIL ") << name << "\n";
      };

      Signature s22 = make_signature(2, 2, 0);
      CheckOptions opts;
      opts.trials = trials;
      opts.seed = seed;
      for (const IdentityPattern& pat :
           {pat_superleft(), pat_superright(), pat_weak_assoc(),
            pat_two_odd_left(4), pat_two_odd_right(4), pat_comb_product(1, 2, 1, 2)})
        report("identity " + pat.name, check_identity(pat, s22, opts).pass);

      report("hilbert (1,1) matches dimensions", [&]() {
        RationalSeries h = hilbert_free(make_signature(1, 1, 0), Grading::total, 8);
        for (unsigned n = 1; n <= 8; ++n)
          if (h.coefficient({n}) != dim_component_total(make_signature(1, 1, 0), n))
            return false;
        return true;
      }());

      report("codimension consistency", [&]() {
        for (unsigned n = 1; n <= 6; ++n) {
          Integer sum = 0;
          for (unsigned a = 0; a <= n; ++a) {
            Integer b;
            mpz_bin_uiui(b.get_mpz_t(), n, a);
            sum += b * codimension_super(a, n - a);
          }
          if (sum != codimension_ordinary(n)) return false;
        }
        return true;
      }());

      report("quotient dims for one relation", [&]() {
        Signature sig = make_signature(0, 2, 0);
        SuperPolynomial g = poly_from_text("z1 | z2 + z2 | z1", sig);
        GsBasis b = truncated_basis(sig, {g}, MonomialOrder::deglex(sig), 6);
        std::vector<unsigned long> d = quotient_dims(b);
        return d[1] == 2 && d[2] == 3 && d[3] == 0 && d[4] == 0;
      }());

      report("schur expansion round-trip", [&]() {
        MultiPoly f = mul(schur({2}, 3), schur({1, 1}, 3));
        auto parts = schur_expand(f);
        MultiPoly back(3);
        for (const auto& [lam, c] : parts)
          back = add(back, mul(MultiPoly::constant(3, c), schur(lam, 3)));
        return back == f;
      }());

      if (!all) exit_status = 1;
      std::string t = text.str();
      if (!t.empty() && t.back() == '\n') t.pop_back();
      emit("selftest", json{{"trials", trials}}, json{{"checks", rows}, {"pass", all}},
           seed, fmt, t);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  (void)format;
  return exit_status;
}
