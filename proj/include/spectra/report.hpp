#pragma once

// The excess-bound survey over all spectra up to a given c2, with the
// headline facts stated as labeled assertions so a diff shows any change.

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "spectra/curves.hpp"
#include "spectra/spectrum.hpp"
#include "spectra/version.hpp"

namespace spectra {

struct SurveyRow {
  std::int64_t c2 = 0;
  std::int64_t spectra = 0;
  std::int64_t applicable = 0;  // start (1, 2, 2, ...)
  std::int64_t exception = 0;
  std::int64_t violated = 0;
};

struct LabeledAssertion {
  std::string label;
  bool holds = false;
};

struct Report {
  std::int64_t c2_max = 0;
  std::vector<SurveyRow> survey;
  std::vector<ExcludedSpectrum> excluded;
  std::vector<LabeledAssertion> assertions;

  bool all_hold() const {
    for (auto& a : assertions)
      if (!a.holds) return false;
    return true;
  }
};

inline Report build_report(std::int64_t c2_max) {
  if (c2_max < 1) throw std::invalid_argument("report: c2_max must be >= 1");
  Report rep;
  rep.c2_max = c2_max;
  for (std::int64_t c = 1; c <= c2_max; ++c) {
    SurveyRow row{c, 0, 0, 0, 0};
    for (auto& s : enumerate(c)) {
      ++row.spectra;
      auto v = excess_bound(s);
      if (v != ExcessVerdict::NotApplicable) ++row.applicable;
      if (v == ExcessVerdict::ExceptionCase) ++row.exception;
      if (v == ExcessVerdict::Violated) {
        ++row.violated;
        rep.excluded.push_back({c, s, v});
      }
    }
    rep.survey.push_back(row);
  }

  auto verdict_of = [](std::vector<std::int64_t> tail) { return excess_bound(validate(tail).value()); };
  if (c2_max >= 20) {
    std::int64_t low = 0;
    for (auto& r : rep.survey)
      if (r.c2 <= 20) low += r.violated;
    rep.assertions.push_back({"no spectrum with c2 <= 20 violates the excess bound", low == 0});
  }
  if (c2_max >= 17)
    rep.assertions.push_back({"(1,2,2,4) with c2 = 17 is an exception case, not a violation",
                              verdict_of({1, 2, 2, 4}) == ExcessVerdict::ExceptionCase});
  if (c2_max >= 21) {
    rep.assertions.push_back({"(1,2,2,4,2) with c2 = 21 violates the excess bound",
                              verdict_of({1, 2, 2, 4, 2}) == ExcessVerdict::Violated});
    rep.assertions.push_back({"(1,2,2,3,3) with c2 = 21 violates the excess bound",
                              verdict_of({1, 2, 2, 3, 3}) == ExcessVerdict::Violated});
    rep.assertions.push_back({"(1,2,2,4,2) matches no curve profile of degree <= 21",
                              tail_search(FinSuppSeq(0, {1, 2, 2, 4, 2}), 21).empty()});
  }
  return rep;
}

inline std::string report_markdown(const Report& rep) {
  std::ostringstream os;
  os << "# Excess-bound survey, c2 <= " << rep.c2_max << "\n\n";
  os << "spectra version " << kVersion << ". All verdicts are necessary conditions: a spectrum that is not\n"
     << "excluded is not claimed to be realized by a bundle.\n\n";
  os << "## Assertions\n\n";
  for (auto& a : rep.assertions) os << "- [" << (a.holds ? "PASS" : "FAIL") << "] " << a.label << "\n";
  if (rep.assertions.empty()) os << "- (none apply below c2 = 17)\n";
  os << "\n## Excluded spectra\n\n";
  if (rep.excluded.empty()) os << "None.\n";
  else {
    os << "| c2 | spectrum tail | verdict |\n|---:|---|---|\n";
    for (auto& x : rep.excluded)
      os << "| " << x.c2 << " | (" << x.spectrum.to_string() << ") | " << verdict_name(x.verdict) << " |\n";
  }
  os << "\n## Counts by c2\n\n| c2 | spectra | start (1,2,2) | exception | violated |\n|---:|---:|---:|---:|---:|\n";
  for (auto& r : rep.survey)
    os << "| " << r.c2 << " | " << r.spectra << " | " << r.applicable << " | " << r.exception << " | " << r.violated
       << " |\n";
  return os.str();
}

inline std::string report_tsv(const Report& rep) {
  std::ostringstream os;
  os << "c2\ttail\tverdict\n";
  for (auto& x : rep.excluded) os << x.c2 << "\t" << x.spectrum.to_string() << "\t" << verdict_name(x.verdict) << "\n";
  return os.str();
}

}  // namespace spectra
