#include "transtat/model_io.hpp"

#include <fstream>
#include <numeric>

#include "transtat/errors.hpp"
#include "transtat/exactla.hpp"

namespace transtat::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ParseError(path + ": " + message);
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object() || !obj.contains(key)) fail(path + "." + key, "missing field");
  return obj.at(key);
}

std::size_t parse_count(const json& value, const std::string& path) {
  if (!value.is_number_unsigned()) fail(path, "expected a nonnegative integer");
  return value.get<std::size_t>();
}

Rational parse_entry(const json& value, const std::string& path) {
  if (value.is_number_integer()) return Rational(value.get<long long>());
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const ParseError& e) {
      fail(path, e.what());
    }
  }
  fail(path, "expected a rational as \"p/q\" string or integer");
}

RationalVector parse_vector(const json& value, std::size_t expected,
                            const std::string& path) {
  if (!value.is_array()) fail(path, "expected an array");
  if (value.size() != expected)
    fail(path, "expected " + std::to_string(expected) + " entries, got " +
                   std::to_string(value.size()));
  RationalVector out(expected);
  for (std::size_t i = 0; i < expected; ++i)
    out[i] = parse_entry(value[i], path + "[" + std::to_string(i) + "]");
  return out;
}

RationalMatrix parse_square_matrix(const json& value, std::size_t n,
                                   const std::string& path) {
  // Row-major flat list of n*n entries.
  const RationalVector flat = parse_vector(value, n * n, path);
  RationalMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m.at(r, c) = flat[r * n + c];
  return m;
}

Subspace parse_subspace(const json& value, std::size_t ambient,
                        const std::string& path) {
  if (!value.is_object()) fail(path, "expected an object with 'vectors' or 'projector'");
  if (value.contains("vectors")) {
    const json& vecs = value.at("vectors");
    if (!vecs.is_array()) fail(path + ".vectors", "expected an array of vectors");
    std::vector<RationalVector> rows;
    for (std::size_t i = 0; i < vecs.size(); ++i)
      rows.push_back(
          parse_vector(vecs[i], ambient, path + ".vectors[" + std::to_string(i) + "]"));
    return Subspace::from_spanning(ambient, rows);
  }
  if (value.contains("projector")) {
    RationalMatrix p =
        parse_square_matrix(value.at("projector"), ambient, path + ".projector");
    if (kernels::multiply(p, p) != p)
      fail(path + ".projector", "matrix is not idempotent");
    return exactla::image(p);
  }
  fail(path, "expected 'vectors' or 'projector'");
}

fock::Tensor4 parse_tensor4(const json& value, std::size_t k, const std::string& path) {
  fock::Tensor4 t = fock::Tensor4::zeros(k);
  t.data = parse_vector(value, k * k * k * k, path);
  return t;
}

json rational_vector_to_json(const RationalVector& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(rational_to_string(x));
  return arr;
}

json matrix_to_flat_json(const RationalMatrix& m) {
  json arr = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      arr.push_back(rational_to_string(m.at(r, c)));
  return arr;
}

json subspace_to_json(const Subspace& s) {
  json vecs = json::array();
  for (std::size_t r = 0; r < s.dim(); ++r)
    vecs.push_back(rational_vector_to_json(s.basis().row_vector(r)));
  return json{{"vectors", vecs}};
}

}  // namespace

ModelFile parse_model_json(const json& doc) {
  ModelFile file;
  if (!doc.is_object()) fail("$", "model file must be a JSON object");
  file.schema_version = require(doc, "schema_version", "$").get<int>();
  if (file.schema_version != 1)
    fail("$.schema_version",
         "unsupported schema version " + std::to_string(file.schema_version));

  const json& model = require(doc, "model", "$");
  statmodel::StatModel& m = file.model;
  m.d = parse_count(require(model, "d", "$.model"), "$.model.d");
  m.k_dim = parse_count(require(model, "k_dim", "$.model"), "$.model.k_dim");
  if (m.d < 1) fail("$.model.d", "must be >= 1");
  if (m.k_dim < 1) fail("$.model.k_dim", "must be >= 1");
  m.g = parse_square_matrix(require(model, "g", "$.model"), m.k_dim, "$.model.g");
  const std::size_t amb = m.k_dim * m.k_dim;
  m.w_sym = parse_subspace(require(model, "w_sym", "$.model"), amb, "$.model.w_sym");
  m.w_ext = parse_subspace(require(model, "w_ext", "$.model"), amb, "$.model.w_ext");
  if (model.contains("n_max"))
    m.n_max = parse_count(model.at("n_max"), "$.model.n_max");
  if (model.contains("order") && !model.at("order").is_null()) {
    const json& order = model.at("order");
    if (order.is_string()) {
      if (order.get<std::string>() != "lex")
        fail("$.model.order", "expected \"lex\" or a permutation array");
      m.order.resize(m.h_dim());
      std::iota(m.order.begin(), m.order.end(), 0);
    } else if (order.is_array()) {
      m.order.clear();
      for (std::size_t i = 0; i < order.size(); ++i)
        m.order.push_back(
            parse_count(order[i], "$.model.order[" + std::to_string(i) + "]"));
    } else {
      fail("$.model.order", "expected \"lex\" or a permutation array");
    }
  } else {
    m.order.resize(m.h_dim());
    std::iota(m.order.begin(), m.order.end(), 0);
  }
  try {
    m.validate();
  } catch (const ValidationError& e) {
    fail("$.model", e.what());
  }

  if (doc.contains("exchange") && !doc.at("exchange").is_null()) {
    const json& ex = doc.at("exchange");
    if (!ex.is_object()) fail("$.exchange", "expected an object");
    const auto parse_opt = [&](const char* key) -> std::optional<fock::Tensor4> {
      if (!ex.contains(key) || ex.at(key).is_null()) return std::nullopt;
      return parse_tensor4(ex.at(key), m.k_dim, std::string("$.exchange.") + key);
    };
    file.exchange.a = parse_opt("A");
    file.exchange.b = parse_opt("B");
    file.exchange.c = parse_opt("C");
    file.exchange.s = parse_opt("S");
    file.exchange.r = parse_opt("R");
  }
  if (doc.contains("guards") && !doc.at("guards").is_null()) {
    const json& guards = doc.at("guards");
    if (guards.contains("max_ambient_dim"))
      file.guard_dim =
          parse_count(guards.at("max_ambient_dim"), "$.guards.max_ambient_dim");
  }
  file.echo = model_to_json(file.model, file.exchange);
  return file;
}

ModelFile load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open model file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
  return parse_model_json(doc);
}

json model_to_json(const statmodel::StatModel& model,
                   const fock::ExchangeData& exchange) {
  json order = json::array();
  for (const auto idx : model.order) order.push_back(idx);
  json doc{{"schema_version", 1},
           {"model",
            {{"d", model.d},
             {"k_dim", model.k_dim},
             {"g", matrix_to_flat_json(model.g)},
             {"w_sym", subspace_to_json(model.w_sym)},
             {"w_ext", subspace_to_json(model.w_ext)},
             {"order", order},
             {"n_max", model.n_max}}}};
  json ex = json::object();
  const auto emit = [&](const char* key, const std::optional<fock::Tensor4>& t) {
    if (t) ex[key] = rational_vector_to_json(t->data);
  };
  emit("A", exchange.a);
  emit("B", exchange.b);
  emit("C", exchange.c);
  emit("S", exchange.s);
  emit("R", exchange.r);
  if (!ex.empty()) doc["exchange"] = ex;
  return doc;
}

void write_model_file(const std::string& path, const statmodel::StatModel& model,
                      const fock::ExchangeData& exchange) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write model file '" + path + "'");
  out << model_to_json(model, exchange).dump(2) << "\n";
}

}  // namespace transtat::cli
