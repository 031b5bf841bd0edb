// Command-line front end. Exit codes: 0 all checks pass, 2 usage or invalid
// input, 3 an internal cross-check or certificate check failed.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "otbook/json_io.hpp"
#include "otbook/kirby.hpp"
#include "otbook/report.hpp"

namespace {

using namespace otbook;
using io::Json;

constexpr int kUsage = 2;
constexpr int kCheckFailed = 3;

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open '" + out_path + "' for writing");
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("write to '" + out_path + "' failed");
}

std::vector<Integer> parse_int_list(std::string text) {
  for (char& c : text)
    if (c == '[' || c == ']' || c == ',') c = ' ';
  std::istringstream is(text);
  std::vector<Integer> out;
  std::string tok;
  while (is >> tok) {
    Rational r = Rational::parse(tok);
    if (!r.is_integer()) throw DomainError("'" + tok + "' is not an integer");
    out.push_back(r.num());
  }
  if (out.empty()) throw DomainError("empty integer list");
  return out;
}

lens::LensSpace parse_lens(const std::string& text) {
  auto v = parse_int_list(text);
  if (v.size() != 2) throw DomainError("a lens space is written p,q");
  return lens::LensSpace::make(v[0], v[1]);
}

std::string chain_str(const std::vector<Integer>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "]";
}

void print_family(const report::FamilyReport& r, bool verbose) {
  std::cout << "family h=" << r.h << " k=" << r.k << "\n"
            << "  word          " << r.word.str() << "\n"
            << "  final chain   " << chain_str(r.chain_framings) << "\n"
            << "  lens          " << r.lens.str() << " (chain gives " << r.chain_lens.str() << ")\n"
            << "  |H1|          " << r.h1.str() << "\n"
            << "  d3            " << r.overtwisted.data.d3.str() << "\n"
            << "  tight census  " << r.overtwisted.census_size << " structures, d3 in {";
  for (std::size_t i = 0; i < r.overtwisted.census_d3.size(); ++i)
    std::cout << (i ? ", " : "") << r.overtwisted.census_d3[i].str();
  std::cout << "}\n"
            << "  verdict       " << census::name(r.overtwisted.verdict) << "\n"
            << "  right-veering " << (r.certificate_check.valid ? "certificate valid" : "no valid certificate") << "\n"
            << "  conclusion    " << (r.destabilization ? r.destabilization->conclusion : "n/a") << "\n";
  if (verbose) {
    std::cout << "  moves:\n";
    for (const auto& m : r.chain.move_log())
      std::cout << "    " << io::to_json(m.move).dump() << "  |H1| " << m.before.str() << " -> " << m.after.str()
                << "\n";
  }
  for (const auto& c : r.checks)
    std::cout << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name << ": " << c.detail << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact pipeline for a family of overtwisted, right-veering, non-destabilizable open books"};
  // "-h" is taken by the family parameter, so help is long-form only.
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);

  bool json = false, verbose = false;
  std::string out_path;
  Integer h = 0, k = 0;
  auto add_hk = [&](CLI::App* cmd, bool required) {
    auto* oh = cmd->add_option("--h", h, "exponent of the twist along a (h >= 1)")->check(CLI::Range(Integer{1}, Integer{1} << 20));
    auto* ok = cmd->add_option("--k", k, "e is twisted -(k+1) times (k >= 1)")->check(CLI::Range(Integer{1}, Integer{1} << 20));
    if (required) {
      oh->required();
      ok->required();
    }
  };

  auto* family = app.add_subcommand("family", "run the full pipeline for one (h, k)");
  add_hk(family, true);
  family->add_flag("--json", json, "print a JSON document");
  family->add_flag("--verbose", verbose, "include the move log, certificate and report steps");

  Integer hmax = 0, kmax = 0;
  auto* sweep = app.add_subcommand("sweep", "run the pipeline for 1 <= h <= hmax, 1 <= k <= kmax");
  sweep->add_option("--hmax", hmax)->required()->check(CLI::PositiveNumber);
  sweep->add_option("--kmax", kmax)->required()->check(CLI::PositiveNumber);
  sweep->add_option("--out", out_path, "JSON-lines output (default: stdout)");
  sweep->add_flag("--verbose", verbose);

  auto* kirby = app.add_subcommand("kirby", "Kirby calculus");
  kirby->require_subcommand(1);
  std::string script_path, diagram_path;
  auto* replay = kirby->add_subcommand("replay", "apply a move script to a diagram");
  replay->add_option("script", script_path, "JSON array of {move, args}; defaults to the family script");
  replay->add_option("--diagram", diagram_path, "framed link diagram JSON");
  add_hk(replay, false);
  replay->add_flag("--json", json);
  replay->add_flag("--verbose", verbose);
  auto* script = kirby->add_subcommand("script", "print the family move script");
  add_hk(script, true);

  auto* lens_cmd = app.add_subcommand("lens", "negative continued fractions and lens spaces");
  lens_cmd->require_subcommand(1);
  std::string lens_arg, lens_arg2;
  bool unoriented = false;
  auto* cf = lens_cmd->add_subcommand("cf", "expand a rational > 1");
  cf->add_option("rational", lens_arg)->required();
  cf->add_flag("--json", json);
  auto* chain = lens_cmd->add_subcommand("chain", "lens space of a linear chain, e.g. \"-2,-3,-2\"");
  chain->add_option("framings", lens_arg)->required();
  chain->add_flag("--json", json);
  auto* eq = lens_cmd->add_subcommand("eq", "compare L(p,q) and L(p',q')");
  eq->add_option("first", lens_arg)->required();
  eq->add_option("second", lens_arg2)->required();
  eq->add_flag("--unoriented", unoriented, "allow orientation reversal");
  eq->add_flag("--json", json);

  Integer p = 0, q = 0;
  auto* census_cmd = app.add_subcommand("census", "tight contact structures on L(p,q) with their d3");
  census_cmd->add_option("p", p)->required();
  census_cmd->add_option("q", q)->required();
  census_cmd->add_flag("--json", json);

  auto* d3_cmd = app.add_subcommand("d3", "d3 invariants");
  d3_cmd->require_subcommand(1);
  auto* d3_family = d3_cmd->add_subcommand("family", "d3 of the family contact structure");
  d3_family->add_option("h", h)->required()->check(CLI::PositiveNumber);
  d3_family->add_option("k", k)->required()->check(CLI::PositiveNumber);
  d3_family->add_flag("--json", json);

  auto* rv = app.add_subcommand("rv", "right-veering certificates");
  rv->require_subcommand(1);
  std::string word_json, cert_path;
  auto* prove = rv->add_subcommand("prove", "certify the family word (or --word)");
  add_hk(prove, false);
  prove->add_option("--word", word_json, "twist word as JSON, e.g. '[[\"e\",-2]]'");
  prove->add_option("--out", out_path, "write the certificate here");
  auto* check = rv->add_subcommand("check", "validate a certificate file");
  check->add_option("certificate", cert_path)->required();
  add_hk(check, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*family) {
      const auto r = report::run_family(h, k);
      if (json)
        std::cout << report::to_json(r, verbose).dump(2) << '\n';
      else
        print_family(r, verbose);
      if (!r.ok()) throw CheckFailure("cross-check failed: " + r.first_failure()->name + ": " + r.first_failure()->detail);
    } else if (*sweep) {
      report::SweepSummary s;
      if (out_path.empty())
        s = report::run_sweep(hmax, kmax, std::cout, verbose);
      else
        s = report::run_sweep(hmax, kmax, std::filesystem::path(out_path), verbose);
      (out_path.empty() ? std::cerr : std::cout) << report::to_json(s).dump() << '\n';
      if (s.failed) throw CheckFailure(std::to_string(s.failed) + " sweep rows failed cross-checks");
    } else if (*kirby) {
      if (*script) {
        std::cout << io::script_to_json(kirby::family_script(h, k)).dump(2) << '\n';
      } else {
        FramedLinkDiagram start;
        std::vector<MoveSpec> moves;
        if (!diagram_path.empty()) {
          start = io::diagram_from_json(read_json_file(diagram_path));
        } else if (h >= 1 && k >= 1) {
          start = contact::smooth_diagram(contact::presentation_for(h, k));
        } else {
          throw DomainError("kirby replay needs --diagram FILE or --h and --k");
        }
        if (!script_path.empty())
          moves = io::script_from_json(read_json_file(script_path));
        else if (h >= 1 && k >= 1)
          moves = kirby::family_script(h, k);
        else
          throw DomainError("kirby replay needs a script file when starting from --diagram");
        const auto end = kirby::replay(start, moves);
        if (json) {
          std::cout << io::to_json(end, true).dump(2) << '\n';
        } else {
          for (const auto& m : end.move_log())
            std::cout << io::to_json(m.move).dump() << "  |H1| " << m.before.str() << " -> " << m.after.str() << "\n";
          std::cout << io::to_json(end, false).dump(verbose ? 2 : -1) << '\n';
          std::cout << "|H1| = " << h1_order(end).str() << "\n";
        }
      }
    } else if (*lens_cmd) {
      if (*cf) {
        const Rational x = Rational::parse(lens_arg);
        const auto coeffs = lens::neg_cf_expand(x);
        std::vector<Integer> chain_framings;
        for (Integer a : coeffs) chain_framings.push_back(-a);
        if (json)
          std::cout << Json{{"p", x.num()}, {"q", x.den()}, {"cf", coeffs}, {"chain", chain_framings}}.dump(2) << '\n';
        else
          std::cout << x.str() << " = " << chain_str(coeffs) << "^-\n";
      } else if (*chain) {
        const auto framings = parse_int_list(lens_arg);
        const auto l = lens::chain_to_lens(framings);
        std::vector<Integer> cf_entries;
        for (Integer f : framings) cf_entries.push_back(-f);
        const auto value = lens::cf_evaluate(cf_entries);
        if (json) {
          Json j = io::to_json(l);
          j["chain"] = framings;
          j["cf"] = value ? Json(value->str()) : Json("POLE");
          std::cout << j.dump(2) << '\n';
        } else {
          std::cout << chain_str(framings) << " -> " << l.str() << "\n";
        }
      } else if (*eq) {
        const auto a = parse_lens(lens_arg), b = parse_lens(lens_arg2);
        const bool same = lens::lens_equal(a, b, !unoriented);
        if (json)
          std::cout << Json{{"first", io::to_json(a)}, {"second", io::to_json(b)}, {"oriented", !unoriented}, {"equal", same}}.dump(2)
                    << '\n';
        else
          std::cout << a.str() << (same ? " == " : " != ") << b.str() << (unoriented ? " (unoriented)" : "") << "\n";
      }
    } else if (*census_cmd) {
      const auto l = lens::LensSpace::make(p, q);
      const auto all = census::tight_census(l);
      if (json) {
        Json rows = Json::array();
        for (const auto& t : all) rows.push_back(io::to_json(t));
        std::cout << Json{{"lens", io::to_json(l)}, {"size", all.size()}, {"structures", rows}}.dump(2) << '\n';
      } else {
        std::cout << l.str() << ": " << all.size() << " tight structures\n";
        for (const auto& t : all) std::cout << "  rot " << chain_str(t.rot) << "  d3 = " << t.d3.str() << "\n";
      }
    } else if (*d3_cmd) {
      const auto r = census::overtwisted_verdict(h, k);
      if (json) {
        std::cout << io::to_json(r).dump(2) << '\n';
      } else {
        std::cout << "d3 = " << r.data.d3.str() << " (c^2 = " << r.data.c_squared.str()
                  << ", sigma = " << r.data.signature << ", chi = " << r.data.euler_characteristic
                  << ", q_plus = " << r.data.q_plus << ")\n"
                  << census::name(r.verdict) << ": " << r.justification << "\n";
      }
    } else if (*rv) {
      if (*prove) {
        const bool family_mode = word_json.empty();
        mcg::TwistWord w;
        if (family_mode) {
          if (h < 1 || k < 1) throw DomainError("rv prove needs --h and --k, or --word");
          w = mcg::phi_word(h, k);
        } else {
          w = io::word_from_json(Json::parse(word_json));
        }
        const auto cert = veering::prove_right_veering(w);
        if (!cert) {
          std::cout << "UNKNOWN\n";
          if (family_mode) throw CheckFailure("no right-veering certificate for " + w.str());
        } else {
          emit(io::to_json(*cert), out_path);
        }
      } else if (*check) {
        const auto cert = io::certificate_from_json(read_json_file(cert_path));
        std::optional<mcg::TwistWord> expected;
        if (h >= 1 && k >= 1) expected = mcg::phi_word(h, k);
        const auto res = veering::check_certificate(cert, expected);
        std::cout << io::to_json(res).dump(2) << '\n';
        if (!res.valid) throw CheckFailure("certificate rejected: " + res.reason);
      }
    }
  } catch (const CheckFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const InvariantViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
