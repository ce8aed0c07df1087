#include "quadlie/json_io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace quadlie {

using nlohmann::json;

std::size_t max_dim_limit() {
  if (const char* env = std::getenv("QUADLIE_MAX_DIM")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 64;
}

namespace {

Rational parse_rational(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("expected rational as string \"p/q\" or integer");
}

json rational_to_json(const Rational& r) { return r.str(); }

Vec parse_vec(const json& j, std::size_t expected) {
  if (!j.is_array() || j.size() != expected)
    throw ParseError("expected array of " + std::to_string(expected) + " rationals");
  Vec v(expected);
  for (std::size_t i = 0; i < expected; ++i) v[i] = parse_rational(j[i]);
  return v;
}

json vec_to_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rational_to_json(x));
  return a;
}

}  // namespace

json rational_matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vec_to_json(m.row(i)));
  return rows;
}

Matrix rational_matrix_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected matrix as array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j[0].size();
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) m.set_row(i, parse_vec(j[i], cols));
  return m;
}

json algebra_to_json(const AlgebraFile& file) {
  const LieAlgebra& g = file.algebra;
  json out;
  out["dim"] = g.dim();
  out["labels"] = g.labels();
  json brackets = json::array();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      if (vec_is_zero(g.c(i, j))) continue;
      json entry;
      entry["i"] = i;
      entry["j"] = j;
      entry["v"] = vec_to_json(g.c(i, j));
      brackets.push_back(std::move(entry));
    }
  out["brackets"] = std::move(brackets);
  if (file.metric) out["metric"] = rational_matrix_to_json(*file.metric);
  if (file.oscillator) {
    json osc;
    osc["m"] = file.oscillator->m;
    osc["lambda"] = vec_to_json(file.oscillator->lambda);
    osc["t"] = rational_to_json(file.oscillator->t);
    osc["s"] = rational_to_json(file.oscillator->s);
    out["oscillator"] = std::move(osc);
  }
  return out;
}

AlgebraFile algebra_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("labels") || !j.contains("brackets"))
    throw ParseError("algebra file needs dim, labels and brackets");
  const std::size_t n = j.at("dim").get<std::size_t>();
  if (n > max_dim_limit())
    throw ValidationError("dimension " + std::to_string(n) + " exceeds QUADLIE_MAX_DIM (" +
                          std::to_string(max_dim_limit()) + ")");
  std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
  if (labels.size() != n) throw ParseError("labels length != dim");

  std::vector<LieAlgebra::BracketEntry> entries;
  for (const auto& e : j.at("brackets")) {
    const std::size_t i = e.at("i").get<std::size_t>();
    const std::size_t jj = e.at("j").get<std::size_t>();
    if (i >= jj || jj >= n) throw ParseError("bracket entries need i < j < dim");
    entries.push_back({i, jj, parse_vec(e.at("v"), n)});
  }

  AlgebraFile out;
  try {
    out.algebra = LieAlgebra::from_brackets(std::move(labels), entries);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
  const auto bad = check_jacobi(out.algebra);
  if (!bad.empty()) {
    std::ostringstream os;
    os << "Jacobi identity fails at triples:";
    for (const auto& t : bad) os << " (" << t[0] << "," << t[1] << "," << t[2] << ")";
    throw ValidationError(os.str());
  }

  if (j.contains("metric")) {
    Matrix gram = rational_matrix_from_json(j.at("metric"));
    if (gram.rows() != n || gram.cols() != n) throw ValidationError("metric must be dim x dim");
    out.metric = std::move(gram);
  }
  if (j.contains("oscillator")) {
    const auto& osc = j.at("oscillator");
    std::vector<Rational> lambda;
    for (const auto& l : osc.at("lambda")) lambda.push_back(parse_rational(l));
    try {
      out.oscillator =
          OscillatorSpec(std::move(lambda), parse_rational(osc.at("t")), parse_rational(osc.at("s")));
    } catch (const std::invalid_argument& e) {
      throw ValidationError(e.what());
    }
    if (2 * out.oscillator->m + 2 != n)
      throw ValidationError("oscillator metadata inconsistent with dim");
  }
  return out;
}

json matrix_lie_algebra_to_json(const MatrixLieAlgebra& m) {
  json out;
  out["ambient_dim"] = m.ambient_dim();
  json basis = json::array();
  for (const auto& b : m.basis()) basis.push_back(rational_matrix_to_json(b));
  out["basis"] = std::move(basis);
  json cert = json::array();
  for (std::size_t a = 0; a < m.dim(); ++a)
    for (std::size_t b = 0; b < m.dim(); ++b) {
      json e;
      e["a"] = a;
      e["b"] = b;
      e["coords"] = vec_to_json(m.certificate(a, b));
      cert.push_back(std::move(e));
    }
  out["certificate"] = std::move(cert);
  return out;
}

MatrixLieAlgebra matrix_lie_algebra_from_json(const json& j) {
  const std::size_t n = j.at("ambient_dim").get<std::size_t>();
  if (n > max_dim_limit()) throw ValidationError("ambient_dim exceeds QUADLIE_MAX_DIM");
  std::vector<Matrix> basis;
  for (const auto& b : j.at("basis")) {
    Matrix m = rational_matrix_from_json(b);
    if (m.rows() != n || m.cols() != n)
      throw ValidationError("matrix basis entries must be ambient_dim x ambient_dim");
    basis.push_back(std::move(m));
  }
  MatrixLieAlgebra out = [&] {
    try {
      return MatrixLieAlgebra::from_span(n, basis);
    } catch (const std::invalid_argument& e) {
      throw ValidationError(e.what());
    }
  }();
  // The stored certificate must agree with the recomputed one.
  if (j.contains("certificate"))
    for (const auto& e : j.at("certificate")) {
      const std::size_t a = e.at("a").get<std::size_t>();
      const std::size_t b = e.at("b").get<std::size_t>();
      if (a >= out.dim() || b >= out.dim()) throw ValidationError("certificate index out of range");
      if (parse_vec(e.at("coords"), out.dim()) != out.certificate(a, b))
        throw ValidationError("stored closure certificate disagrees with recomputation");
    }
  return out;
}

json hom_images_to_json(const std::vector<Matrix>& images) {
  json out;
  json arr = json::array();
  for (const auto& m : images) arr.push_back(rational_matrix_to_json(m));
  out["images"] = std::move(arr);
  return out;
}

std::vector<Matrix> hom_images_from_json(const json& j) {
  if (!j.is_object() || !j.contains("images")) throw ParseError("hom file needs an images array");
  std::vector<Matrix> out;
  for (const auto& m : j.at("images")) out.push_back(rational_matrix_from_json(m));
  return out;
}

json extension_certificate_to_json(const ExtensionCertificate& cert) {
  json out;
  out["jacobi_triples_checked"] = cert.jacobi_triples_checked;
  out["invariance_triples_checked"] = cert.invariance_triples_checked;
  out["nondegeneracy_det"] = rational_to_json(cert.gram_det);
  return out;
}

void save_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open for writing: " + path);
  out << j.dump(2) << "\n";
  if (!out) throw ParseError("write failed: " + path);
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open: " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(std::string("JSON parse error in ") + path + ": " + e.what());
  }
}

AlgebraFile load_algebra_file(const std::string& path) {
  try {
    return algebra_from_json(load_json(path));
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad algebra file ") + path + ": " + e.what());
  }
}

void save_algebra_file(const std::string& path, const AlgebraFile& file) {
  save_json(path, algebra_to_json(file));
}

}  // namespace quadlie
