#include "semihom/cli.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace semihom::cli {

namespace {

using crossprod::Algebra;
using crossprod::Bimodule;
using crossprod::UnitalAction;
using steinberg::FiniteGroupoid;

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

std::size_t parse_count(const std::string& text, const std::string& spec) {
  std::size_t n = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty())
    throw InputError("bad count in '" + spec + "'");
  return n;
}

// Splits at top-level separators; a file: component swallows the rest.
std::vector<std::string> split(const std::string& spec, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (starts_with(spec.substr(i), "file:") && cur.empty()) {
      parts.push_back(spec.substr(i));
      return parts;
    }
    if (spec[i] == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += spec[i];
    }
  }
  parts.push_back(cur);
  return parts;
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

template <class T>
T field_of(const Json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw InputError(where + ": missing \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(where + ": bad \"" + key + "\": " + e.what());
  }
}

Vector vector_from_json(const Json& j, const FieldSpec& f, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n) throw InputError(where + ": expected a vector of length " + std::to_string(n));
  Vector v;
  for (const auto& x : j) v.push_back(scalar_from_json(x, f));
  return v;
}

Matrix matrix_from_json(const Json& j, const FieldSpec& f, std::size_t rows, std::size_t cols,
                        const std::string& where) {
  if (!j.is_array() || j.size() != rows) throw InputError(where + ": expected " + std::to_string(rows) + " rows");
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Vector row = vector_from_json(j[r], f, cols, where);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

std::vector<Matrix> matrices_from_json(const Json& j, const FieldSpec& f, std::size_t count, std::size_t dim,
                                       const std::string& where) {
  if (!j.is_array() || j.size() != count)
    throw InputError(where + ": expected " + std::to_string(count) + " matrices");
  std::vector<Matrix> out;
  for (const auto& m : j) out.push_back(matrix_from_json(m, f, dim, dim, where));
  return out;
}

void check_field(const Json& j, const FieldSpec& f, const std::string& where) {
  if (j.contains("field") && !(FieldSpec::parse(field_of<std::string>(j, "field", where)) == f))
    throw InputError(where + ": field differs from --field");
}

}  // namespace

Json to_json(const Scalar& s) {
  if (s.characteristic() != 0) return s.residue();
  return s.to_string();
}

Json to_json(std::span<const Scalar> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Json to_json(const Algebra& a) {
  return Json{{"field", a.field.to_string()}, {"dim", a.dim}, {"sc", to_json(a.sc)}, {"unit", to_json(a.unit)}};
}

Scalar scalar_from_json(const Json& j, const FieldSpec& field) {
  if (j.is_number_integer()) return Scalar::in(field, j.get<long>());
  if (j.is_string()) return Scalar::parse(field, j.get<std::string>());
  throw InputError("scalar must be an integer or a \"p/q\" string, got " + j.dump());
}

Algebra algebra_from_json(const Json& j, FieldSpec field) {
  const std::string where = "algebra";
  check_field(j, field, where);
  const auto dim = field_of<std::size_t>(j, "dim", where);
  Algebra a{field, dim, vector_from_json(j.at("sc"), field, dim * dim * dim, where + " sc"),
            vector_from_json(j.at("unit"), field, dim, where + " unit")};
  a.validate();
  return a;
}

std::shared_ptr<const InverseMonoid> parse_monoid(const std::string& spec) {
  const auto parts = split(spec, '*');
  if (parts.size() > 1) {
    InverseMonoid acc = *parse_monoid(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) acc = invmon::direct_product(acc, *parse_monoid(parts[i]));
    return std::make_shared<const InverseMonoid>(std::move(acc));
  }
  if (starts_with(spec, "i:"))
    return std::make_shared<const InverseMonoid>(invmon::symmetric_inverse_monoid(parse_count(spec.substr(2), spec)));
  if (starts_with(spec, "chain:"))
    return std::make_shared<const InverseMonoid>(invmon::chain_semilattice(parse_count(spec.substr(6), spec)));
  if (starts_with(spec, "z:"))
    return std::make_shared<const InverseMonoid>(invmon::cyclic_group(parse_count(spec.substr(2), spec)));
  if (starts_with(spec, "file:")) {
    const std::string path = spec.substr(5);
    const Json j = read_file(path);
    auto table = field_of<std::vector<std::vector<Elt>>>(j, "table", path);
    if (j.contains("size") && field_of<std::size_t>(j, "size", path) != table.size())
      throw InputError(path + ": size does not match the table");
    std::optional<Elt> unit;
    if (j.contains("unit")) unit = field_of<Elt>(j, "unit", path);
    std::vector<std::string> names;
    if (j.contains("names")) names = field_of<std::vector<std::string>>(j, "names", path);
    return std::make_shared<const InverseMonoid>(InverseMonoid::from_table(std::move(table), unit, std::move(names)));
  }
  throw InputError("unknown monoid '" + spec + "'");
}

monhom::KSModule parse_module(const std::string& spec, std::shared_ptr<const InverseMonoid> s, FieldSpec field) {
  const auto parts = split(spec, '+');
  if (parts.size() > 1) {
    monhom::KSModule acc = parse_module(parts[0], s, field);
    for (std::size_t i = 1; i < parts.size(); ++i) acc = monhom::direct_sum(acc, parse_module(parts[i], s, field));
    return acc;
  }
  if (spec == "trivial-ke") return monhom::trivial_module_ke(s, field);
  if (spec == "trivial") return monhom::trivial_character(s, field);
  if (spec == "regular") return monhom::regular_module(s, field);
  if (starts_with(spec, "file:")) {
    const std::string path = spec.substr(5);
    const Json j = read_file(path);
    check_field(j, field, path);
    const auto dim = field_of<std::size_t>(j, "dim", path);
    monhom::KSModule v{s, field, dim, matrices_from_json(j.at("act"), field, s->size(), dim, path),
                       monhom::Side::Left};
    if (j.contains("side")) {
      const auto side = field_of<std::string>(j, "side", path);
      if (side == "right") v.side = monhom::Side::Right;
      else if (side != "left") throw InputError(path + ": side must be \"left\" or \"right\"");
    }
    v.validate();
    return v;
  }
  throw InputError("unknown module '" + spec + "'");
}

Algebra parse_algebra(const std::string& spec, FieldSpec field) {
  if (spec == "k") return crossprod::ground_field(field);
  if (spec == "dual") return crossprod::dual_numbers(field);
  if (starts_with(spec, "diag:")) return crossprod::diagonal_algebra(field, parse_count(spec.substr(5), spec));
  if (starts_with(spec, "mat:")) return crossprod::matrix_algebra(field, parse_count(spec.substr(4), spec));
  if (starts_with(spec, "ks:")) return crossprod::semigroup_algebra(*parse_monoid(spec.substr(3)), field);
  if (starts_with(spec, "ke:")) return crossprod::semilattice_algebra(*parse_monoid(spec.substr(3)), field);
  if (starts_with(spec, "file:")) return algebra_from_json(read_file(spec.substr(5)), field);
  throw InputError("unknown algebra '" + spec + "'");
}

UnitalAction parse_action(const std::string& spec, const std::string& algebra, FieldSpec field) {
  if (spec == "i1-pair") return crossprod::i1_on_pair(field);
  if (starts_with(spec, "conj:")) return crossprod::conjugation_action(parse_monoid(spec.substr(5)), field);
  if (starts_with(spec, "trivial:"))
    return crossprod::trivial_action(parse_monoid(spec.substr(8)), parse_algebra(algebra, field));
  if (starts_with(spec, "file:")) {
    const std::string path = spec.substr(5);
    const Json j = read_file(path);
    UnitalAction a{parse_monoid(field_of<std::string>(j, "monoid_ref", path)),
                   parse_algebra(field_of<std::string>(j, "algebra_ref", path), field), {}, {}};
    const std::size_t n = a.monoid->size(), d = a.algebra.dim;
    if (!j.contains("one") || !j.at("one").is_array() || j.at("one").size() != n)
      throw InputError(path + ": expected one vector per monoid element in \"one\"");
    for (const auto& v : j.at("one")) a.one.push_back(vector_from_json(v, field, d, path));
    a.theta = matrices_from_json(j.at("theta"), field, n, d, path);
    return a;
  }
  throw InputError("unknown action '" + spec + "'");
}

FiniteGroupoid parse_groupoid(const std::string& spec) {
  const auto parts = split(spec, '+');
  if (parts.size() > 1) {
    FiniteGroupoid acc = parse_groupoid(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) acc = steinberg::disjoint_union(acc, parse_groupoid(parts[i]));
    return acc;
  }
  if (starts_with(spec, "pair:")) return steinberg::pair_groupoid(parse_count(spec.substr(5), spec));
  if (starts_with(spec, "discrete:")) return steinberg::discrete_groupoid(parse_count(spec.substr(9), spec));
  if (starts_with(spec, "group:")) {
    const std::string g = spec.substr(6);
    if (g.size() > 1 && g[0] == 'z' && g[1] != ':')
      return steinberg::group_as_groupoid(invmon::cyclic_group(parse_count(g.substr(1), spec)));
    return steinberg::group_as_groupoid(*parse_monoid(g));
  }
  if (starts_with(spec, "file:")) {
    const std::string path = spec.substr(5);
    const Json j = read_file(path);
    std::vector<std::size_t> src, rng;
    for (const auto& a : field_of<Json>(j, "arrows", path)) {
      src.push_back(field_of<std::size_t>(a, "src", path));
      rng.push_back(field_of<std::size_t>(a, "rng", path));
    }
    return steinberg::groupoid_from_data(field_of<std::size_t>(j, "objects", path), std::move(src), std::move(rng),
                                         field_of<std::vector<std::array<std::size_t, 3>>>(j, "comp", path),
                                         field_of<std::vector<std::size_t>>(j, "inv", path));
  }
  throw InputError("unknown groupoid '" + spec + "'");
}

Bimodule parse_bimodule(const std::string& spec, const Algebra& a) {
  if (spec == "regular") return crossprod::regular_bimodule(a);
  if (starts_with(spec, "file:")) {
    const std::string path = spec.substr(5);
    const Json j = read_file(path);
    check_field(j, a.field, path);
    const auto dim = field_of<std::size_t>(j, "dim", path);
    Bimodule m{a, dim, matrices_from_json(j.at("left"), a.field, a.dim, dim, path),
               matrices_from_json(j.at("right"), a.field, a.dim, dim, path)};
    m.validate();
    return m;
  }
  throw InputError("unknown bimodule '" + spec + "'");
}

}  // namespace semihom::cli
