#include "report.hpp"

#include "cxwidths/errors.hpp"

#include <fmt/format.h>

#include <cmath>
#include <fstream>
#include <ostream>

namespace cxw::report {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", v);
}

namespace {

void emit(const Json& j, int indent, int depth, std::string& out) {
  const std::string pad = indent > 0 ? "\n" + std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
  const std::string close = indent > 0 ? "\n" + std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
  const char* sep = indent > 0 ? ": " : ":";
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{";
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) out += ",";
        first = false;
        out += pad;
        out += Json(k).dump();
        out += sep;
        emit(v, indent, depth + 1, out);
      }
      out += close + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[";
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ",";
        first = false;
        out += pad;
        emit(v, indent, depth + 1, out);
      }
      out += close + "]";
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      out += std::isfinite(v) ? format_double(v) : "\"" + format_double(v) + "\"";
      return;
    }
    default:
      out += j.dump();
  }
}

} // namespace

std::string dump_json(const Json& j, int indent) {
  std::string out;
  emit(j, indent, 0, out);
  out += "\n";
  return out;
}

Csv::Csv(std::vector<std::string> header) : width_(header.size()) { row(header); }

void Csv::row(const std::vector<std::string>& cells) {
  if (cells.size() != width_) throw InternalError("csv: row width mismatch");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) text_ += ",";
    text_ += cells[i];
  }
  text_ += "\n";
}

Json basis_to_json(const harmonic_basis::HarmonicBasis& h) {
  Json j;
  j["d"] = h.d();
  j["m"] = h.bidegree().m;
  j["n"] = h.bidegree().n;
  Json vecs = Json::array();
  for (const auto& v : h.vectors()) {
    Json terms = Json::array();
    for (const auto& [k, c] : v.terms()) {
      Json t;
      t["alpha"] = k.alpha;
      t["beta"] = k.beta;
      t["numerator"] = numerator(c).str();
      t["denominator"] = denominator(c).str();
      terms.push_back(std::move(t));
    }
    vecs.push_back(std::move(terms));
  }
  j["vectors"] = std::move(vecs);
  Json sq = Json::array();
  for (const auto& s : h.sq_norms()) sq.push_back(rational_to_string(s));
  j["sq_norms"] = std::move(sq);
  return j;
}

harmonic_basis::HarmonicBasis basis_from_json(const Json& j) {
  try {
    const int d = j.at("d").get<int>();
    const BiDegree b{j.at("m").get<int>(), j.at("n").get<int>()};
    std::vector<MonomialPoly> vecs;
    for (const auto& terms : j.at("vectors")) {
      MonomialPoly p(d);
      for (const auto& t : terms) {
        const Rational c = rational_from_string(t.at("numerator").get<std::string>() + "/" +
                                                t.at("denominator").get<std::string>());
        p.add_term(t.at("alpha").get<MultiIndex>(), t.at("beta").get<MultiIndex>(), c);
      }
      vecs.push_back(std::move(p));
    }
    std::vector<Rational> sq;
    for (const auto& s : j.at("sq_norms")) sq.push_back(rational_from_string(s.get<std::string>()));
    return harmonic_basis::HarmonicBasis(d, b, std::move(vecs), std::move(sq));
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("basis json: ") + e.what());
  } catch (const ArgumentError& e) {
    throw DataError(std::string("basis json: ") + e.what());
  }
}

bool write_output(const std::string& text, const std::optional<std::string>& path, std::ostream& out) {
  if (!path || path->empty() || *path == "-") {
    out << text;
    out.flush();
    return static_cast<bool>(out);
  }
  std::ofstream f(*path, std::ios::binary);
  if (!f) return false;
  f << text;
  f.close();
  return static_cast<bool>(f);
}

} // namespace cxw::report
