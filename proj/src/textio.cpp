#include "holo/textio.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace holo {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// exact value of a plain decimal such as -12.375
mpq_class decimal(const std::string& s) {
  size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
  std::string digits, frac;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
  if (i >= s.size() || s[i] != '.') throw ScalarError("bad number '" + s + "'");
  ++i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) frac += s[i++];
  if (i != s.size() || (digits.empty() && frac.empty())) throw ScalarError("bad number '" + s + "'");
  mpz_class num(digits.empty() ? "0" : digits);
  mpz_class den = 1;
  for (char c : frac) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  mpq_class q(neg ? -num : num, den);
  q.canonicalize();
  return q;
}

}  // namespace

ParseError::ParseError(int line, const std::string& reason, const std::string& source)
    : std::runtime_error((source.empty() ? "" : source + ": ") + "line " + std::to_string(line) + ": " + reason),
      line(line),
      reason(reason) {}

Scalar parse_scalar(const std::string& text) {
  std::string t = trim(text);
  if (t.find('.') != std::string::npos) {
    try {
      return Scalar(decimal(t));
    } catch (const ScalarError&) {
      throw ScalarError("bad number '" + text + "'");
    }
  }
  return Scalar::parse(t);
}

std::vector<Scalar> parse_scalar_list(const std::string& text) {
  std::vector<Scalar> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_scalar(item));
  return out;
}

Multivector parse_form(const std::string& text, int dim) {
  struct Term {
    std::vector<int> idx;
    Scalar c;
    int line;
  };
  std::vector<Term> terms;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0, maxi = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    if (trim(line).empty()) continue;
    size_t colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(lineno, "expected 'indices : coefficient'");
    Term t;
    t.line = lineno;
    std::istringstream ix(line.substr(0, colon));
    std::string tok;
    while (ix >> tok) {
      if (!std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError(lineno, "bad index '" + tok + "'");
      int i = std::stoi(tok);
      if (i < 1 || i > kMaxDim) throw ParseError(lineno, "index " + tok + " out of range 1.." + std::to_string(kMaxDim));
      t.idx.push_back(i);
      maxi = std::max(maxi, i);
    }
    if (std::set<int>(t.idx.begin(), t.idx.end()).size() != t.idx.size()) throw ParseError(lineno, "repeated index");
    std::string coeff = trim(line.substr(colon + 1));
    if (coeff.empty()) throw ParseError(lineno, "missing coefficient");
    try {
      t.c = parse_scalar(coeff);
    } catch (const ScalarError& e) {
      throw ParseError(lineno, e.what());
    }
    terms.push_back(std::move(t));
  }
  int n = dim > 0 ? dim : maxi;
  if (dim > kMaxDim) throw FormError("dimension above " + std::to_string(kMaxDim));
  Multivector f(n);
  for (auto& t : terms) {
    for (int i : t.idx)
      if (i > n) throw ParseError(t.line, "index " + std::to_string(i) + " exceeds dimension " + std::to_string(n));
    try {
      f += Multivector::blade(n, t.idx, t.c);
    } catch (const ScalarError& e) {
      throw ParseError(t.line, e.what());
    }
  }
  return f;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Multivector read_form_file(const std::string& path, int dim) {
  std::string text = read_text_file(path);
  try {
    return parse_form(text, dim);
  } catch (const ParseError& e) {
    throw ParseError(e.line, e.reason, path);
  }
}

std::string format_form(const Multivector& f) {
  std::ostringstream os;
  for (auto& [m, c] : f.terms()) {
    auto ix = indices_of(m);
    for (size_t k = 0; k < ix.size(); ++k) os << (k ? " " : "") << ix[k];
    os << (ix.empty() ? ": " : " : ");
    if (!c.is_rational() && sgn(c.rational_part()) == 0)
      os << c.root_coeff().get_str() << " * sqrt(" << c.root() << ")";
    else
      os << c.str();
    os << "\n";
  }
  return os.str();
}

std::vector<std::vector<double>> parse_points(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  size_t width = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    std::vector<double> row;
    std::string tok;
    while (ls >> tok) {
      try {
        size_t used = 0;
        row.push_back(std::stod(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError(lineno, "bad coordinate '" + tok + "'");
      }
    }
    if (row.empty()) continue;
    if (width && row.size() != width) throw ParseError(lineno, "expected " + std::to_string(width) + " coordinates");
    width = row.size();
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const Scalar& x, NumberMode mode) {
  if (mode == NumberMode::floating) return x.to_double();
  return x.str();
}

json to_json(const Multivector& f, NumberMode mode) {
  json arr = json::array();
  for (auto& [m, c] : f.terms()) arr.push_back({{"blade", indices_of(m)}, {"coeff", to_json(c, mode)}});
  return arr;
}

json to_json(const std::vector<Scalar>& v, NumberMode mode) {
  json arr = json::array();
  for (auto& x : v) arr.push_back(to_json(x, mode));
  return arr;
}

}  // namespace holo
