#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "otbook/contact_presentation.hpp"
#include "otbook/framed_link.hpp"
#include "otbook/homotopy_census.hpp"
#include "otbook/json_io.hpp"
#include "otbook/lens.hpp"
#include "otbook/mcg_words.hpp"
#include "otbook/veering.hpp"

// End-to-end pipeline for one member of the family, and sweeps over (h, k).
namespace otbook::report {

struct CrossCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct FamilyReport {
  Integer h = 0, k = 0;
  mcg::TwistWord word;
  contact::ContactSurgeryDiagram contact_diagram;
  contact::ContactSurgeryDiagram expanded_diagram;
  FramedLinkDiagram chain;  // carries the full move log
  std::vector<Integer> chain_framings;
  lens::LensSpace chain_lens;
  lens::LensSpace lens;  // closed formula
  H1Order h1;
  census::OvertwistedReport overtwisted;
  std::optional<veering::Certificate> certificate;
  veering::CheckResult certificate_check;
  std::optional<veering::DestabilizationReport> destabilization;
  std::vector<CrossCheck> checks;

  bool ok() const;
  // First failed cross-check, if any.
  const CrossCheck* first_failure() const;
};

FamilyReport run_family(Integer h, Integer k);

// `verbose` embeds the move log, the full certificate and the report steps.
io::Json to_json(const FamilyReport& r, bool verbose);

struct SweepSummary {
  std::size_t rows = 0;
  std::size_t failed = 0;
  std::map<std::string, std::size_t> verdicts;
};

// One JSON line per (h, k), h-major. Throws std::runtime_error with the path on I/O failure.
SweepSummary run_sweep(Integer hmax, Integer kmax, std::ostream& out, bool verbose = false);
SweepSummary run_sweep(Integer hmax, Integer kmax, const std::filesystem::path& out_path, bool verbose = false);

io::Json to_json(const SweepSummary& s);

}  // namespace otbook::report
