#pragma once

#include "cxwidths/harmonic_basis.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace cxw::report {

using Json = nlohmann::ordered_json;

/// Keys in insertion order; floats with 17 significant digits; non-finite
/// floats as the strings "inf", "-inf", "nan".
std::string dump_json(const Json& j, int indent = 2);

std::string format_double(double v);

class Csv {
public:
  explicit Csv(std::vector<std::string> header);
  void row(const std::vector<std::string>& cells);
  std::string str() const { return text_; }

private:
  std::size_t width_;
  std::string text_;
};

Json basis_to_json(const harmonic_basis::HarmonicBasis& h);
/// Inverse of basis_to_json; throws DataError on malformed input.
harmonic_basis::HarmonicBasis basis_from_json(const Json& j);

/// Writes text to path, or stdout when path is empty. False if the file cannot be written.
bool write_output(const std::string& text, const std::optional<std::string>& path, std::ostream& out);

} // namespace cxw::report
