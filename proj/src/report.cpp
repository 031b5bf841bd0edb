#include "otbook/report.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include "otbook/kirby.hpp"

namespace otbook::report {

namespace {

CrossCheck h1_check(const std::string& name, const H1Order& got, Integer p) {
  const bool ok = !got.is_infinite() && got.value() == static_cast<std::uint64_t>(p);
  return {name, ok, "|H1| = " + got.str() + ", expected " + std::to_string(p)};
}

}  // namespace

bool FamilyReport::ok() const { return first_failure() == nullptr; }

const CrossCheck* FamilyReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

FamilyReport run_family(Integer h, Integer k) {
  FamilyReport r;
  r.h = h;
  r.k = k;
  r.word = mcg::phi_word(h, k);
  r.lens = lens::family_lens(h, k);
  const Integer p = r.lens.p;

  // Runs one stage; any library error becomes a failed cross-check.
  auto stage = [&r](const std::string& name, auto&& fn) {
    try {
      fn();
      return true;
    } catch (const Error& e) {
      r.checks.push_back({name, false, e.what()});
      return false;
    }
  };

  stage("contact_presentation", [&] {
    r.contact_diagram = contact::presentation_for(h, k);
    r.expanded_diagram = contact::expand_to_unit_coefficients(r.contact_diagram);
    r.checks.push_back(h1_check("h1_contact_diagram", h1_order(contact::smooth_diagram(r.contact_diagram)), p));
    r.checks.push_back(h1_check("h1_expanded_diagram", h1_order(contact::smooth_diagram(r.expanded_diagram)), p));
    std::size_t plus = 0, minus = 0;
    for (const auto& c : r.expanded_diagram.components()) (c.coeff.sign() > 0 ? plus : minus) += 1;
    const bool ok = plus == static_cast<std::size_t>(k + 1) && minus == static_cast<std::size_t>(h);
    r.checks.push_back({"unit_surgery_counts", ok,
                        std::to_string(plus) + " (+1) and " + std::to_string(minus) + " (-1) contact surgeries"});
  });

  stage("kirby_reduction", [&] {
    r.chain = kirby::reduce_family_diagram(h, k);
    bool moves_ok = true;
    std::string detail = std::to_string(r.chain.move_log().size()) + " moves";
    for (const auto& m : r.chain.move_log()) {
      if (m.before != m.after || m.after.is_infinite() || m.after.value() != static_cast<std::uint64_t>(p)) {
        moves_ok = false;
        detail = std::string(name(m.move.kind)) + "(" + m.move.vertex + "): |H1| " + m.before.str() + " -> " +
                 m.after.str();
        break;
      }
    }
    r.checks.push_back({"h1_every_move", moves_ok, detail});
    r.h1 = h1_order(r.chain);
    r.checks.push_back(h1_check("h1_chain", r.h1, p));
    for (std::size_t v : linear_chain(r.chain)) r.chain_framings.push_back(r.chain.vertex(v).framing.num());
    r.chain_lens = lens::chain_to_lens(r.chain);
    r.checks.push_back({"lens_matches_formula", lens::lens_equal(r.chain_lens, r.lens, true),
                        r.chain_lens.str() + " vs " + r.lens.str()});
  });

  stage("overtwistedness", [&] { r.overtwisted = census::overtwisted_verdict(h, k); });

  stage("right_veering", [&] {
    r.certificate = veering::prove_right_veering(r.word);
    if (!r.certificate) {
      r.checks.push_back({"right_veering_certificate", false, "prover returned UNKNOWN"});
      return;
    }
    r.certificate_check = veering::check_certificate(*r.certificate, r.word);
    r.checks.push_back({"right_veering_certificate", r.certificate_check.valid,
                        r.certificate_check.valid ? std::to_string(r.certificate_check.nodes_checked) + " nodes"
                                                  : r.certificate_check.reason});
  });

  if (r.certificate && r.certificate_check.valid) {
    stage("destabilization", [&] {
      r.destabilization = veering::destabilization_report(h, k, r.overtwisted, *r.certificate);
      r.checks.push_back({"not_destabilizable", r.destabilization->conclusion == "NOT_DESTABILIZABLE",
                          r.destabilization->conclusion});
    });
  }
  return r;
}

io::Json to_json(const FamilyReport& r, bool verbose) {
  io::Json checks = io::Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});

  io::Json rv = {{"valid", r.certificate_check.valid}};
  if (r.certificate) {
    io::Json goals = io::Json::object();
    for (const auto& g : r.certificate->goals) {
      std::string shape(veering::name(g.rule));
      if (g.arc) shape += "(" + std::string(mcg::name(*g.arc)) + ")";
      goals[std::string(mcg::name(g.boundary))] = shape;
    }
    rv["goals"] = goals;
    rv["nodes_checked"] = r.certificate_check.nodes_checked;
    if (verbose) rv["certificate"] = io::to_json(*r.certificate);
  } else {
    rv["goals"] = nullptr;
  }

  io::Json j = {
      {"h", r.h},
      {"k", r.k},
      {"word", io::to_json(r.word)},
      {"contact_diagram", io::to_json(r.contact_diagram)},
      {"expanded_diagram", io::to_json(r.expanded_diagram)},
      {"final_chain", r.chain_framings},
      {"chain_lens", io::to_json(r.chain_lens)},
      {"lens", io::to_json(r.lens)},
      {"h1_order", io::to_json(r.h1)},
      {"d3", io::to_json(r.overtwisted.data)},
      {"presentation", io::to_json(r.overtwisted.presentation)},
      {"census", {{"size", r.overtwisted.census_size}, {"d3_values", io::to_json(r.overtwisted).at("census_d3")}}},
      {"verdict", std::string(census::name(r.overtwisted.verdict))},
      {"right_veering", rv},
      {"checks", checks},
      {"ok", r.ok()},
  };
  if (r.destabilization) {
    io::Json ds = {{"conclusion", r.destabilization->conclusion},
                   {"axioms", r.destabilization->axiom_count()},
                   {"unverified", r.destabilization->unverified_count()}};
    if (verbose) ds["steps"] = io::to_json(*r.destabilization).at("steps");
    j["destabilization"] = ds;
  } else {
    j["destabilization"] = nullptr;
  }
  if (verbose) j["move_log"] = io::to_json(r.chain, true).at("move_log");
  return j;
}

SweepSummary run_sweep(Integer hmax, Integer kmax, std::ostream& out, bool verbose) {
  if (hmax < 1 || kmax < 1) throw DomainError("sweep bounds must be >= 1");
  SweepSummary s;
  for (Integer h = 1; h <= hmax; ++h)
    for (Integer k = 1; k <= kmax; ++k) {
      const FamilyReport r = run_family(h, k);
      out << to_json(r, verbose).dump() << '\n';
      ++s.rows;
      if (!r.ok()) ++s.failed;
      ++s.verdicts[std::string(census::name(r.overtwisted.verdict))];
    }
  return s;
}

SweepSummary run_sweep(Integer hmax, Integer kmax, const std::filesystem::path& out_path, bool verbose) {
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open '" + out_path.string() + "' for writing");
  SweepSummary s = run_sweep(hmax, kmax, out, verbose);
  out.flush();
  if (!out) throw std::runtime_error("write to '" + out_path.string() + "' failed");
  return s;
}

io::Json to_json(const SweepSummary& s) {
  return {{"rows", s.rows}, {"failed", s.failed}, {"verdicts", s.verdicts}};
}

}  // namespace otbook::report
