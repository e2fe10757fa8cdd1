#include "polyeig/polyfile.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace polyeig {

namespace {

using nlohmann::json;

double parse_real(std::string_view s, std::size_t line, const std::string& token) {
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  if (s.front() == '+') s.remove_prefix(1);
  double v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size() || !std::isfinite(v))
    throw ParseError(line, "bad complex entry '" + token + "'");
  return v;
}

std::string strip_comment(const std::string& raw) {
  const auto hash = raw.find('#');
  return hash == std::string::npos ? raw : raw.substr(0, hash);
}

void check_shape(const CoefficientList& coeffs) {
  if (coeffs.empty()) throw BadInput("no coefficients");
  for (const auto& c : coeffs)
    if (c.rows() != coeffs.front().rows() || c.cols() != c.rows()) throw BadInput("coefficients must be square and equal-sized");
}

std::size_t line_of_offset(const std::string& text, std::size_t offset) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

Complex json_pair(const json& p) {
  if (p.is_number()) return {p.get<double>(), 0.0};
  if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
    throw ParseError(0, "entries must be [re, im] pairs");
  return {p[0].get<double>(), p[1].get<double>()};
}

}  // namespace

Complex parse_entry(const std::string& token, std::size_t line) {
  if (token.empty()) throw ParseError(line, "empty complex entry");
  if (token.back() != 'i') return {parse_real(token, line, token), 0.0};

  const std::string body = token.substr(0, token.size() - 1);
  // The sign separating the parts is the last +/- not at the front and not in an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, parse_real(body, line, token)};
  const std::string_view view(body);
  return {parse_real(view.substr(0, split), line, token), parse_real(view.substr(split), line, token)};
}

std::string format_entry(Complex z) {
  char re[32], im[32];
  std::snprintf(re, sizeof re, "%.17g", z.real());
  std::snprintf(im, sizeof im, "%.17g", z.imag());
  if (z.imag() == 0) return re;
  if (z.real() == 0) return std::string(im) + "i";
  return std::string(re) + (std::signbit(z.imag()) ? "" : "+") + im + "i";
}

CoefficientList parse_text(std::istream& in) {
  std::string raw;
  std::size_t line = 0;
  auto next_line = [&](std::istringstream& fields) {
    while (std::getline(in, raw)) {
      ++line;
      const std::string content = strip_comment(raw);
      if (content.find_first_not_of(" \t\r") == std::string::npos) continue;
      fields = std::istringstream(content);
      return true;
    }
    return false;
  };

  std::istringstream fields;
  if (!next_line(fields)) throw ParseError(line, "missing 'matpoly m n' header");
  std::string word;
  long long m = -1, n = -1;
  if (!(fields >> word >> m >> n) || word != "matpoly" || (fields >> word))
    throw ParseError(line, "expected 'matpoly m n'");
  if (m < 1 || n < 0) throw ParseError(line, "need m >= 1 and n >= 0");

  CoefficientList coeffs;
  for (long long i = 0; i <= n; ++i) {
    if (!next_line(fields)) throw ParseError(line, "missing 'coeff " + std::to_string(i) + "'");
    long long idx = -1;
    if (!(fields >> word >> idx) || word != "coeff" || (fields >> word))
      throw ParseError(line, "expected 'coeff " + std::to_string(i) + "'");
    if (idx != i) throw ParseError(line, "coefficient blocks must appear in order 0..n");
    ComplexMatrix a(m, m);
    for (long long r = 0; r < m; ++r) {
      if (!next_line(fields)) throw ParseError(line, "coefficient " + std::to_string(i) + " has too few rows");
      long long c = 0;
      for (std::string tok; fields >> tok; ++c) {
        if (c >= m) throw ParseError(line, "row has more than " + std::to_string(m) + " entries");
        a(r, c) = parse_entry(tok, line);
      }
      if (c < m) throw ParseError(line, "row has fewer than " + std::to_string(m) + " entries");
    }
    coeffs.push_back(std::move(a));
  }
  if (next_line(fields)) throw ParseError(line, "unexpected content after coefficient " + std::to_string(n));
  return coeffs;
}

CoefficientList parse_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(line_of_offset(text, e.byte), e.what());
  }
  try {
    const long long m = doc.at("m").get<long long>();
    const long long n = doc.at("n").get<long long>();
    const json& cs = doc.at("coeffs");
    if (m < 1 || n < 0) throw ParseError(0, "need m >= 1 and n >= 0");
    if (!cs.is_array() || static_cast<long long>(cs.size()) != n + 1) throw ParseError(0, "coeffs must hold n + 1 matrices");
    CoefficientList coeffs;
    for (const json& c : cs) {
      ComplexMatrix a(m, m);
      const bool flat = c.is_array() && static_cast<long long>(c.size()) == m * m && c[0].is_array() && !c[0].empty() &&
                        c[0][0].is_number();
      if (flat) {
        for (long long k = 0; k < m * m; ++k) a(k / m, k % m) = json_pair(c[static_cast<std::size_t>(k)]);
      } else if (c.is_array() && static_cast<long long>(c.size()) == m) {
        for (long long r = 0; r < m; ++r) {
          const json& row = c[static_cast<std::size_t>(r)];
          if (!row.is_array() || static_cast<long long>(row.size()) != m) throw ParseError(0, "row has wrong length");
          for (long long k = 0; k < m; ++k) a(r, k) = json_pair(row[static_cast<std::size_t>(k)]);
        }
      } else {
        throw ParseError(0, "coefficient matrix has wrong shape");
      }
      if (!a.allFinite()) throw ParseError(0, "non-finite entry");
      coeffs.push_back(std::move(a));
    }
    return coeffs;
  } catch (const json::exception& e) {
    throw ParseError(0, e.what());
  }
}

void write_text(std::ostream& out, const CoefficientList& coeffs) {
  check_shape(coeffs);
  const Eigen::Index m = coeffs.front().rows();
  out << "matpoly " << m << ' ' << coeffs.size() - 1 << '\n';
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    out << "coeff " << i << '\n';
    for (Eigen::Index r = 0; r < m; ++r) {
      for (Eigen::Index c = 0; c < m; ++c) out << (c ? " " : "") << format_entry(coeffs[i](r, c));
      out << '\n';
    }
  }
}

void write_json(std::ostream& out, const CoefficientList& coeffs) {
  check_shape(coeffs);
  const Eigen::Index m = coeffs.front().rows();
  json doc;
  doc["m"] = m;
  doc["n"] = coeffs.size() - 1;
  doc["coeffs"] = json::array();
  for (const auto& a : coeffs) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m; ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < m; ++c) row.push_back({a(r, c).real(), a(r, c).imag()});
      rows.push_back(std::move(row));
    }
    doc["coeffs"].push_back(std::move(rows));
  }
  out << doc.dump() << '\n';
}

CoefficientList read_coefficients(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw BadInput("cannot open " + path.string());
  if (path.extension() == ".json") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str());
  }
  return parse_text(in);
}

void write_coefficients(const std::filesystem::path& path, const CoefficientList& coeffs) {
  std::ofstream out(path);
  if (!out) throw BadInput("cannot write " + path.string());
  if (path.extension() == ".json")
    write_json(out, coeffs);
  else
    write_text(out, coeffs);
}

}  // namespace polyeig
