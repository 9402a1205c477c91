#include "ybx/matrix_io.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ybx/errors.hpp"

namespace ybx {
namespace {

using nlohmann::json;

double parse_strict_double(const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ParseError("not a number: '" + text + "'");
  }
  if (used != text.size()) {
    throw ParseError("trailing characters in number: '" + text + "'");
  }
  return value;
}

// "a", "a+bi", "a-bi", "bi", "i", "-i": one complex entry, no spaces.
Complex parse_complex_token(const std::string& tok) {
  if (tok.empty()) throw ParseError("empty matrix entry");
  if (tok.back() != 'i') {
    return Complex(parse_strict_double(tok), 0.0);
  }
  const std::string body = tok.substr(0, tok.size() - 1);
  // Look for the sign separating the real and imaginary parts, skipping a
  // leading sign and exponent signs.
  std::size_t split = std::string::npos;
  for (std::size_t k = 1; k < body.size(); ++k) {
    if ((body[k] == '+' || body[k] == '-') &&
        body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
    }
  }
  const auto imag_of = [](const std::string& part) {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    return parse_strict_double(part);
  };
  if (split == std::string::npos) {
    return Complex(0.0, imag_of(body));
  }
  return Complex(parse_strict_double(body.substr(0, split)),
                 imag_of(body.substr(split)));
}

void require_finite(const ComplexMatrix& A) {
  if (!A.allFinite()) {
    throw ParseError("matrix has non-finite entries");
  }
}

}  // namespace

ComplexMatrix parse_matrix_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("m") ||
      !j.contains("data")) {
    throw ParseError("matrix JSON needs fields n, m, data");
  }
  if (!j["n"].is_number_integer() || !j["m"].is_number_integer()) {
    throw ParseError("n and m must be integers");
  }
  const Index n = j["n"].get<Index>();
  const Index m = j["m"].get<Index>();
  if (n < 1 || m < 1) {
    throw ParseError("matrix dimensions must be positive");
  }
  const json& data = j["data"];
  if (!data.is_array() || static_cast<Index>(data.size()) != n * m) {
    throw ParseError("data must hold exactly n*m [re, im] pairs");
  }
  ComplexMatrix A(n, m);
  Index flat = 0;
  for (const json& cell : data) {
    if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
        !cell[1].is_number()) {
      throw ParseError("each data entry must be a [re, im] number pair");
    }
    A(flat / m, flat % m) = Complex(cell[0].get<double>(), cell[1].get<double>());
    ++flat;
  }
  require_finite(A);
  return A;
}

ComplexMatrix parse_matrix_text(const std::string& text) {
  std::istringstream in(text);
  long long n = 0;
  long long m = 0;
  if (!(in >> n >> m) || n < 1 || m < 1) {
    throw ParseError("text matrix must start with positive 'n m'");
  }
  ComplexMatrix A(n, m);
  std::string tok;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < m; ++j) {
      if (!(in >> tok)) {
        throw ParseError("text matrix ended before n*m entries");
      }
      A(i, j) = parse_complex_token(tok);
    }
  }
  if (in >> tok) {
    throw ParseError("trailing content after n*m entries");
  }
  require_finite(A);
  return A;
}

ComplexMatrix parse_matrix(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_matrix_json(text) : parse_matrix_text(text);
  }
  throw ParseError("empty matrix input");
}

std::string matrix_to_json(const ComplexMatrix& A) {
  if (!A.allFinite()) {
    throw Error("refusing to serialize non-finite matrix entries");
  }
  json data = json::array();
  for (Index i = 0; i < A.rows(); ++i) {
    for (Index j = 0; j < A.cols(); ++j) {
      data.push_back(json::array({A(i, j).real(), A(i, j).imag()}));
    }
  }
  const json j{{"n", A.rows()}, {"m", A.cols()}, {"data", std::move(data)}};
  return j.dump();
}

ComplexMatrix load_matrix(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

void save_matrix_json(const std::string& path, const ComplexMatrix& A) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot write '" + path + "'");
  }
  out << matrix_to_json(A) << '\n';
}

}  // namespace ybx
