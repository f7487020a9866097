#include "ahg/config.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace ahg {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kHeader = "ahg-config 1";

IMat parse_int_matrix(const json& j, const char* name) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw config_error(std::string(name) + " must be a list of integer rows");
  int rows = static_cast<int>(j.size());
  int cols = static_cast<int>(j[0].size());
  IMat M(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(j[r].size()) != cols)
      throw config_error(std::string(name) + " rows have unequal lengths");
    for (int c = 0; c < cols; ++c) {
      const json& e = j[r][c];
      if (e.is_number_integer())
        M(r, c) = Int(static_cast<long>(e.get<long long>()));
      else if (e.is_string())
        M(r, c) = Int(e.get<std::string>());
      else
        throw config_error(std::string(name) + " entries must be integers");
    }
  }
  return M;
}

QVec parse_rat_vector(const json& j, const char* name) {
  if (!j.is_array())
    throw config_error(std::string(name) + " must be a list of rationals");
  QVec v(static_cast<int>(j.size()));
  for (int i = 0; i < v.size(); ++i) {
    const json& e = j[i];
    try {
      if (e.is_number_integer())
        v[i] = Rat(static_cast<long>(e.get<long long>()));
      else if (e.is_string())
        v[i] = parse_rat(e.get<std::string>());
      else
        throw config_error("bad entry");
    } catch (const std::exception&) {
      throw config_error(std::string(name) +
                         " entries must be integers or \"p/q\" strings");
    }
  }
  return v;
}

json int_matrix_json(const IMat& M) {
  json rows = json::array();
  for (int r = 0; r < M.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < M.cols(); ++c) row.push_back(M(r, c).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json rat_vector_json(const QVec& v) {
  json a = json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(rat_str(v[i]));
  return a;
}

}  // namespace

bool ProblemConfig::operator==(const ProblemConfig& o) const {
  auto same_basis = [&] {
    if (basis.has_value() != o.basis.has_value()) return false;
    if (!basis) return true;
    return basis->rows() == o.basis->rows() &&
           basis->cols() == o.basis->cols() && *basis == *o.basis;
  };
  return A.rows() == o.A.rows() && A.cols() == o.A.cols() && A == o.A &&
         beta.size() == o.beta.size() && beta == o.beta &&
         w.size() == o.w.size() && w == o.w && same_basis() &&
         radius == o.radius && weight_cap == o.weight_cap &&
         degree_cap == o.degree_cap;
}

ProblemConfig parse_config(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header))
    throw config_error("empty config document");
  // Tolerate trailing carriage returns and whitespace on the header line.
  while (!header.empty() && (header.back() == '\r' || header.back() == ' '))
    header.pop_back();
  if (header != kHeader)
    throw config_error("config must start with the header line \"" +
                       std::string(kHeader) + "\"");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw config_error(std::string("config body is not valid JSON: ") +
                       e.what());
  }
  if (!j.is_object()) throw config_error("config body must be a JSON object");
  for (auto& [key, val] : j.items()) {
    (void)val;
    if (key != "A" && key != "beta" && key != "w" && key != "basis" &&
        key != "radius" && key != "weight_cap" && key != "degree_cap")
      throw config_error("unknown config key: " + key);
  }
  if (!j.contains("A") || !j.contains("beta") || !j.contains("w"))
    throw config_error("config requires keys A, beta, w");

  ProblemConfig c;
  c.A = parse_int_matrix(j["A"], "A");
  c.beta = parse_rat_vector(j["beta"], "beta");
  c.w = parse_rat_vector(j["w"], "w");
  if (c.beta.size() != c.d())
    throw config_error("beta length must equal the number of rows of A");
  if (c.w.size() != c.n())
    throw config_error("w length must equal the number of columns of A");
  if (j.contains("basis")) {
    // Basis vectors are given as rows of length n; stored as columns.
    IMat rows = parse_int_matrix(j["basis"], "basis");
    if (static_cast<int>(rows.cols()) != c.n())
      throw config_error("basis vectors must have length n");
    c.basis = rows.transpose();
  }
  if (j.contains("radius")) {
    if (!j["radius"].is_number_integer() || j["radius"].get<long long>() < 1)
      throw config_error("radius must be a positive integer");
    c.radius = static_cast<int>(j["radius"].get<long long>());
  }
  if (j.contains("weight_cap")) {
    const json& e = j["weight_cap"];
    try {
      c.weight_cap = e.is_number_integer()
                         ? Rat(static_cast<long>(e.get<long long>()))
                         : parse_rat(e.get<std::string>());
    } catch (const std::exception&) {
      throw config_error("weight_cap must be an integer or \"p/q\" string");
    }
  }
  if (j.contains("degree_cap")) {
    if (!j["degree_cap"].is_number_integer() ||
        j["degree_cap"].get<long long>() < 0)
      throw config_error("degree_cap must be a nonnegative integer");
    c.degree_cap = static_cast<int>(j["degree_cap"].get<long long>());
  }
  return c;
}

std::string serialize_config(const ProblemConfig& c) {
  json j;
  j["A"] = int_matrix_json(c.A);
  j["beta"] = rat_vector_json(c.beta);
  j["w"] = rat_vector_json(c.w);
  if (c.basis) j["basis"] = int_matrix_json(c.basis->transpose());
  j["radius"] = c.radius;
  j["weight_cap"] = rat_str(c.weight_cap);
  j["degree_cap"] = c.degree_cap;
  return std::string(kHeader) + "\n" + j.dump(2) + "\n";
}

ProblemConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot read config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace ahg
