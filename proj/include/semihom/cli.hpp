#pragma once

// Command-line front end: shorthand and JSON inputs, report serialization and
// the command dispatcher. The executable is a thin wrapper around run().

#include "semihom/steinberg.hpp"

#include "json.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace semihom::cli {

using Json = nlohmann::ordered_json;
using invmon::Elt;
using invmon::InverseMonoid;

inline constexpr std::size_t kMaxDegreeCap = 8;

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInputError = 2 };

/// i:n, chain:n, z:n, products a*b*..., file:path.
std::shared_ptr<const InverseMonoid> parse_monoid(const std::string& spec);
/// trivial-ke, trivial, regular, sums a+b, file:path.
monhom::KSModule parse_module(const std::string& spec, std::shared_ptr<const InverseMonoid> s, FieldSpec field);
/// k, diag:n, mat:n, dual, ks:<monoid>, ke:<monoid>, file:path.
crossprod::Algebra parse_algebra(const std::string& spec, FieldSpec field);
/// i1-pair, conj:<monoid>, trivial:<monoid> (acting on `algebra`), file:path.
crossprod::UnitalAction parse_action(const std::string& spec, const std::string& algebra, FieldSpec field);
/// pair:n, discrete:n, group:zn, group:<monoid>, unions a+b, file:path.
steinberg::FiniteGroupoid parse_groupoid(const std::string& spec);
/// regular or file:path, over the given algebra.
crossprod::Bimodule parse_bimodule(const std::string& spec, const crossprod::Algebra& a);

/// Rationals as "p/q" strings, F_p elements as integers 0..p-1.
Json to_json(const Scalar& s);
Json to_json(std::span<const Scalar> v);
/// List of rows.
Json to_json(const Matrix& m);
Json to_json(const crossprod::Algebra& a);
Scalar scalar_from_json(const Json& j, const FieldSpec& field);
crossprod::Algebra algebra_from_json(const Json& j, FieldSpec field);

/// args excludes the program name. Reports go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace semihom::cli
