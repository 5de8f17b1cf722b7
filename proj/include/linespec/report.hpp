#pragma once

#include <iosfwd>

#include "json.hpp"

#include "linespec/spectra.hpp"

namespace linespec {

/// Rounds to 12 significant digits, the precision used for every real in reports.
double round_real(double v);

/// Eigenvalues rounded for output; entries within 1e-9 * max(1, |largest|) of an
/// integer are printed as that integer so solver noise never reaches reports.
nlohmann::json numeric_json(const std::vector<double>& values);

nlohmann::json partition_json(const Partition& p);
/// [[value, multiplicity], ...], largest value first.
nlohmann::json spectrum_json(const IntegerSpectrum& s);
/// Coefficients as decimal strings, constant term first.
nlohmann::json polynomial_json(const Polynomial& p);

nlohmann::json to_json(const CandidateSet& s);
nlohmann::json to_json(const RamanujanVerdict& v);
nlohmann::json to_json(const SpectrumReport& r);

/// Serialized form used on disk and stdout (sorted keys, two-space indent).
std::string dump(const nlohmann::json& j);

void write_text(std::ostream& out, const RamanujanVerdict& v);
void write_text(std::ostream& out, const SpectrumReport& r);

} // namespace linespec
