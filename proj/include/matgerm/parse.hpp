#pragma once

#include "matgerm/family.hpp"
#include "matgerm/poly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mg {

struct parse_error : error {
    parse_error(const std::string& what, int line, int col)
        : error("parse error at line " + std::to_string(line) + ", column " +
                std::to_string(col) + ": " + what),
          line(line), col(col) {}
    int line, col;
};

// Integer parameters usable inside catalog templates (exponents, formulas).
using ParamEnv = std::map<std::string, long>;

// Grammar: variables [a-zA-Z][a-zA-Z0-9_]*; integer and rational literals
// (n or n/m); + - * ^ with ^ taking a non-negative integer exponent;
// parentheses; no implicit multiplication.
Poly parse_poly(const std::string& text, const VarList& vars,
                const ParamEnv* params = nullptr, int line_offset = 1);

// Integer formula over parameters; same operator grammar plus min(a,b).
long eval_int_expr(const std::string& text, const ParamEnv& params);

MatrixFamily parse_family(const std::string& text);
MatrixFamily parse_family_file(const std::string& path);
std::string family_to_text(const MatrixFamily& m);

EquivalenceCertificate parse_certificate(const std::string& text);
EquivalenceCertificate parse_certificate_file(const std::string& path);

// Constant skew matrices for the trace-form complement: a `size:` header
// followed by one or more `matrix:` blocks of rational entries.
std::vector<std::vector<std::vector<Rat>>> parse_const_sk_list(const std::string& text);

std::string read_file(const std::string& path);

} // namespace mg
