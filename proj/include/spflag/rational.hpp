#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spflag {

using Rational = mpq_class;
using Integer = mpz_class;
using RVec = std::vector<Rational>;
using RMatrix = std::vector<RVec>;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown on malformed caller input; the CLI maps it to exit code 2.
class UsageError : public Error {
public:
    using Error::Error;
};

std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

Rational dot(const RVec& a, const RVec& b);
RVec to_rvec(const std::vector<int>& v);

// Scales v by a positive rational so it becomes a primitive integer vector.
void make_primitive(RVec& v);

}  // namespace spflag
