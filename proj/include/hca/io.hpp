#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "hca/history.hpp"
#include "hca/multitime.hpp"

namespace hca {

using Json = nlohmann::json;

// Gaussian values travel as "a+bi" strings; vectors as arrays of strings;
// matrices as row-major nested arrays (a flat array of dim^2 strings is also
// accepted on input).
Json to_json(const GaussianInt& z);
Json to_json(const GaussVector& v);
Json to_json(const GaussMatrix& m);
GaussianInt gaussian_from_json(const Json& j);
GaussVector vector_from_json(const Json& j);
GaussMatrix matrix_from_json(const Json& j);

// History files are JSONL: a header object with dim / l / H / solution,
// then one {"n": k, "psi": [...]} line per slice.
void write_history(std::ostream& os, const CAHistory& hist);
void write_history_file(const std::string& path, const CAHistory& hist);
CAHistory read_history(std::istream& is);
CAHistory read_history_file(const std::string& path);

// Tensor files are a single JSON object (shape, Hamiltonians, interaction,
// flat row-major values).
Json tensor_to_json(const MultiHistory& m);
MultiHistory tensor_from_json(const Json& j);
void write_tensor_file(const std::string& path, const MultiHistory& m);
MultiHistory read_tensor_file(const std::string& path);

// Floats in text output always use printf %.17g (round-trip exact, and
// byte-stable for identical runs).
std::string format_double(double x);

// CSV with a header row; every cell already stringified.
void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

std::uint64_t fnv1a64(const std::string& bytes);
std::uint64_t fnv1a64_file(const std::string& path);

}  // namespace hca
