#include "hca/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hca {

Json to_json(const GaussianInt& z) { return to_string(z); }

Json to_json(const GaussVector& v) {
  Json j = Json::array();
  for (const auto& z : v) j.push_back(to_string(z));
  return j;
}

Json to_json(const GaussMatrix& m) {
  Json j = Json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(to_string(m.at(r, c)));
    j.push_back(row);
  }
  return j;
}

GaussianInt gaussian_from_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("expected a Gaussian-integer string");
  return parse_gaussian(j.get<std::string>());
}

GaussVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of Gaussian strings");
  GaussVector v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(gaussian_from_json(e));
  return v;
}

GaussMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("expected a matrix");
  if (j.front().is_array()) {
    std::vector<GaussVector> rows;
    rows.reserve(j.size());
    for (const auto& r : j) rows.push_back(vector_from_json(r));
    return GaussMatrix::from_rows(rows);
  }
  // flat row-major: dim^2 strings
  GaussVector flat = vector_from_json(j);
  std::size_t d = 0;
  while (d * d < flat.size()) ++d;
  if (d * d != flat.size())
    throw std::invalid_argument("flat matrix needs a square number of entries");
  GaussMatrix m(d);
  for (std::size_t i = 0; i < flat.size(); ++i) m.flat()[i] = flat[i];
  return m;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_history(std::ostream& os, const CAHistory& hist) {
  Json header;
  header["dim"] = hist.dim();
  header["l"] = hist.scale;
  header["H"] = to_json(hist.ham.H);
  header["solution"] = hist.solution;
  header["slices"] = hist.states.size();
  os << header.dump() << "\n";
  for (std::size_t n = 0; n < hist.states.size(); ++n) {
    Json line;
    line["n"] = n;
    line["psi"] = to_json(hist.states[n]);
    os << line.dump() << "\n";
  }
}

void write_history_file(const std::string& path, const CAHistory& hist) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  write_history(os, hist);
}

CAHistory read_history(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("history file is empty");
  Json header = Json::parse(line);
  const std::size_t dim = header.at("dim").get<std::size_t>();
  const double l = header.at("l").get<double>();
  HamiltonianSpec ham = split_hamiltonian(matrix_from_json(header.at("H")));
  if (ham.dim() != dim) throw std::invalid_argument("history header dim mismatch");
  const bool solution = header.value("solution", false);

  std::vector<GaussVector> states;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    Json j = Json::parse(line);
    const std::size_t n = j.at("n").get<std::size_t>();
    if (n != states.size()) throw std::invalid_argument("history slices out of order");
    GaussVector psi = vector_from_json(j.at("psi"));
    if (psi.size() != dim) throw std::invalid_argument("history slice dim mismatch");
    states.push_back(std::move(psi));
  }
  CAHistory hist = history_from_states(std::move(states), std::move(ham), l);
  hist.solution = solution && satisfies_update_rule(hist);
  return hist;
}

CAHistory read_history_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::invalid_argument("cannot open history file " + path);
  return read_history(is);
}

Json tensor_to_json(const MultiHistory& m) {
  Json j;
  j["parts"] = m.parts;
  j["dims"] = m.dims;
  j["clocks"] = m.clocks;
  j["l"] = m.scale;
  Json hams = Json::array();
  for (const auto& h : m.hams) hams.push_back(to_json(h.H));
  j["hams"] = hams;
  j["interaction"] = m.interaction ? to_json(*m.interaction) : Json(nullptr);
  Json vals = Json::array();
  for (const auto& z : m.values) vals.push_back(to_string(z));
  j["values"] = vals;
  return j;
}

MultiHistory tensor_from_json(const Json& j) {
  std::vector<std::size_t> dims = j.at("dims").get<std::vector<std::size_t>>();
  std::vector<std::size_t> clocks = j.at("clocks").get<std::vector<std::size_t>>();
  std::vector<HamiltonianSpec> hams;
  for (const auto& h : j.at("hams")) hams.push_back(split_hamiltonian(matrix_from_json(h)));
  std::optional<GaussMatrix> inter;
  if (j.contains("interaction") && !j.at("interaction").is_null())
    inter = matrix_from_json(j.at("interaction"));
  const double l = j.value("l", 1.0);
  MultiHistory m = MultiHistory::zeros(dims, clocks, hams, inter, l);
  const Json& vals = j.at("values");
  if (vals.size() != m.values.size())
    throw std::invalid_argument("tensor value count mismatch");
  for (std::size_t i = 0; i < m.values.size(); ++i)
    m.values[i] = gaussian_from_json(vals[i]);
  return m;
}

void write_tensor_file(const std::string& path, const MultiHistory& m) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  os << tensor_to_json(m).dump(2) << "\n";
}

MultiHistory read_tensor_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::invalid_argument("cannot open tensor file " + path);
  Json j = Json::parse(is);
  return tensor_from_json(j);
}

void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  for (std::size_t i = 0; i < header.size(); ++i)
    os << header[i] << (i + 1 < header.size() ? "," : "");
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      os << row[i] << (i + 1 < row.size() ? "," : "");
    os << "\n";
  }
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::uint64_t fnv1a64_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return fnv1a64(ss.str());
}

}  // namespace hca
