#pragma once
// JSON rendering of results and the operation table shared by the C API
// and the CLI. Every operation maps canonical JSON arguments to a JSON
// result; keys are sorted and exact values never pass through floats.

#include <string>
#include <vector>

#include <json.hpp>

#include "asd.hpp"
#include "charsums.hpp"
#include "curves.hpp"
#include "frobenius.hpp"

namespace scholl {

using json = nlohmann::json;

inline constexpr const char* kArtifactVersion = "1.0.0";

namespace report {

json big(const mpz_class& v);  // number when it fits in 64 bits, else a decimal string
json cyc(const CycInt& v);
json int_poly(const std::vector<mpz_class>& c);
json place(const Place& pl);
json series(const FracSeries& s, size_t max_terms);
json quartic(const ASDQuartic& q);
json approx(double v);

// "x^2 + 6x + 25" from constant-first integer coefficients.
std::string poly_text(const std::vector<mpz_class>& c);

}  // namespace report

// Names accepted by run_operation, in a fixed order.
const std::vector<std::string>& operation_names();

// Throws Error on bad arguments or failed computations. Results carry an
// "ok" field whenever the operation checks an identity.
json run_operation(const std::string& op, const json& args);

}  // namespace scholl
