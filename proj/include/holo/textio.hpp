#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "holo/form.hpp"
#include "json.hpp"

namespace holo {

using json = nlohmann::ordered_json;

// "<source>: line N: reason"
struct ParseError : std::runtime_error {
  int line = 0;
  std::string reason;
  ParseError(int line, const std::string& reason, const std::string& source = "");
};
// unreadable input file
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One term per line: "i j k : p/q [* sqrt(d)]". An empty index list is a scalar term.
// dim == 0 takes the largest index seen. Repeated blades add up.
Multivector parse_form(const std::string& text, int dim = 0);
Multivector read_form_file(const std::string& path, int dim = 0);
std::string format_form(const Multivector& f);

// whitespace or comma separated rows of decimals
std::vector<std::vector<double>> parse_points(const std::string& text);
std::string read_text_file(const std::string& path);

// "3/4", "-1/2*sqrt(3)", "0.25", "sqrt(5)/2"
Scalar parse_scalar(const std::string& text);
// "a,b,c,d"
std::vector<Scalar> parse_scalar_list(const std::string& text);

enum class NumberMode { exact, floating };

json to_json(const Scalar& x, NumberMode mode);
// [{"blade": [1,3,5], "coeff": "1/6"}, ...] in blade order
json to_json(const Multivector& f, NumberMode mode);
json to_json(const std::vector<Scalar>& v, NumberMode mode);

}  // namespace holo
