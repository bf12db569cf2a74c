// Copyright 2026 The qsep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsep/state_io.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qsep/error.h"

namespace qsep {
namespace {

using nlohmann::json;

[[noreturn]] void SchemaError(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kParseError, where + ": " + what);
}

json ParseJson(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

const json& Field(const json& object, const char* key, const std::string& where) {
  if (!object.is_object()) SchemaError(where, "expected an object");
  const auto it = object.find(key);
  if (it == object.end()) {
    SchemaError(where, std::string("missing field \"") + key + "\"");
  }
  return *it;
}

int ParseDim(const json& root) {
  const json& dim = Field(root, "dim", "$");
  if (!dim.is_number_integer() || dim.get<long long>() < 1 ||
      dim.get<long long>() > 1 << 15) {
    SchemaError("$.dim", "expected a positive integer");
  }
  return dim.get<int>();
}

double ParseNumber(const json& node, const std::string& where) {
  if (!node.is_number()) SchemaError(where, "expected a number");
  return node.get<double>();
}

ComplexMatrix ParseMatrix(const json& node, int dim, const std::string& where) {
  if (!node.is_array()) SchemaError(where, "expected an array of rows");
  for (std::size_t r = 0; r < node.size(); ++r) {
    if (!node[r].is_array()) {
      SchemaError(where + "[" + std::to_string(r) + "]", "expected an array");
    }
    if (node[r].size() != node[0].size()) {
      SchemaError(where, "ragged rows (row 0 has " +
                             std::to_string(node[0].size()) + " entries, row " +
                             std::to_string(r) + " has " +
                             std::to_string(node[r].size()) + ")");
    }
  }
  const std::size_t width = node.empty() ? 0 : node[0].size();
  if (node.size() != static_cast<std::size_t>(dim) ||
      width != static_cast<std::size_t>(dim)) {
    throw Error(ErrorCode::kDimensionMismatch,
                where + ": matrix is " + std::to_string(node.size()) + "x" +
                    std::to_string(width) + ", dim is " + std::to_string(dim));
  }
  ComplexMatrix m(dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      const std::string at =
          where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]";
      const json& entry = node[r][c];
      m(r, c) = Complex(ParseNumber(Field(entry, "re", at), at + ".re"),
                        ParseNumber(Field(entry, "im", at), at + ".im"));
    }
  }
  return m;
}

void AppendMatrix(std::ostringstream& out, const ComplexMatrix& m,
                  const std::string& indent) {
  out << "[\n";
  for (int r = 0; r < m.dim(); ++r) {
    out << indent << "  [";
    for (int c = 0; c < m.dim(); ++c) {
      if (c > 0) out << ", ";
      out << "{\"re\": " << FormatDouble(m(r, c).real())
          << ", \"im\": " << FormatDouble(m(r, c).imag()) << "}";
    }
    out << "]" << (r + 1 < m.dim() ? "," : "") << "\n";
  }
  out << indent << "]";
}

}  // namespace

std::string FormatDouble(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  std::string s(buf);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

RawStateSet ParseStateSet(std::string_view json_text) {
  const json root = ParseJson(json_text);
  RawStateSet raw;
  raw.dim = ParseDim(root);
  const json& states = Field(root, "states", "$");
  if (!states.is_array()) SchemaError("$.states", "expected an array");
  for (std::size_t k = 0; k < states.size(); ++k) {
    const std::string where = "$.states[" + std::to_string(k) + "]";
    RawState state;
    if (!states[k].is_object()) SchemaError(where, "expected an object");
    if (const auto it = states[k].find("label"); it != states[k].end()) {
      if (!it->is_string()) SchemaError(where + ".label", "expected a string");
      state.label = it->get<std::string>();
    }
    state.matrix =
        ParseMatrix(Field(states[k], "matrix", where), raw.dim, where + ".matrix");
    raw.states.push_back(std::move(state));
  }
  return raw;
}

ComplexMatrix ParseMeasurement(std::string_view json_text) {
  const json root = ParseJson(json_text);
  const int dim = ParseDim(root);
  return ParseMatrix(Field(root, "matrix", "$"), dim, "$.matrix");
}

StateSet ToStateSet(const RawStateSet& raw) {
  std::vector<DensityMatrix> states;
  std::vector<std::optional<std::string>> labels;
  for (std::size_t k = 0; k < raw.states.size(); ++k) {
    try {
      states.push_back(ValidateDensity(raw.states[k].matrix));
    } catch (const Error& e) {
      throw Error(e.code(), "state " + std::to_string(k) + ": " + e.detail());
    }
    labels.push_back(raw.states[k].label);
  }
  return StateSet::Create(std::move(states), std::move(labels));
}

std::string SerializeStateSet(const StateSet& set) {
  std::ostringstream out;
  out << "{\n  \"dim\": " << set.dim() << ",\n  \"states\": [\n";
  for (int k = 0; k < set.size(); ++k) {
    out << "    {\n";
    if (set.label(k)) {
      out << "      \"label\": " << nlohmann::json(*set.label(k)).dump() << ",\n";
    }
    out << "      \"matrix\": ";
    AppendMatrix(out, set[k].matrix(), "      ");
    out << "\n    }" << (k + 1 < set.size() ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

std::string SerializeMeasurement(const ComplexMatrix& m) {
  std::ostringstream out;
  out << "{\n  \"dim\": " << m.dim() << ",\n  \"matrix\": ";
  AppendMatrix(out, m, "  ");
  out << "\n}\n";
  return out.str();
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path.string());
}

RawStateSet ReadStateSetFile(const std::filesystem::path& path) {
  try {
    return ParseStateSet(ReadTextFile(path));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kIo) throw;
    throw Error(e.code(), path.string() + ": " + e.detail());
  }
}

ComplexMatrix ReadMeasurementFile(const std::filesystem::path& path) {
  try {
    return ParseMeasurement(ReadTextFile(path));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kIo) throw;
    throw Error(e.code(), path.string() + ": " + e.detail());
  }
}

}  // namespace qsep
