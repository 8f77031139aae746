// Copyright 2026 The qgrad Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qgrad/circuit_file.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qgrad/error.hpp"

namespace qgrad {
namespace {

using Json = nlohmann::ordered_json;

// Line numbers (1-based) at which each element of the top-level "gates"
// array begins. Assumes `text` is valid JSON.
std::vector<int> GateLines(std::string_view text) {
  std::vector<int> lines;
  int line = 1;
  int depth = 0;
  bool in_gates = false;
  int gates_depth = -1;
  std::string last_key;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '\n') {
      ++line;
    } else if (ch == '"') {
      std::string str;
      for (++i; i < text.size() && text[i] != '"'; ++i) {
        if (text[i] == '\\') ++i;
        else str += text[i];
      }
      if (depth == 1) last_key = str;
    } else if (ch == '[' || ch == '{') {
      if (in_gates && depth == gates_depth && ch == '{') lines.push_back(line);
      if (depth == 1 && ch == '[' && last_key == "gates") {
        in_gates = true;
        gates_depth = depth + 1;
      }
      ++depth;
    } else if (ch == ']' || ch == '}') {
      --depth;
      if (in_gates && depth < gates_depth) in_gates = false;
    }
  }
  return lines;
}

[[noreturn]] void Fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kParse, where + ": " + what);
}

double AngleValue(const Json& v, const std::string& where) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    try {
      return ParseAngle(v.get<std::string>());
    } catch (const Error& e) {
      Fail(where, e.what());
    }
  }
  Fail(where, "expected a number or angle string");
}

const Json& Field(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) Fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

}  // namespace

double ParseAngle(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  auto bad = [&]() -> Error {
    return Error(ErrorCode::kArgument,
                 "cannot parse angle '" + std::string(text) + "'");
  };
  if (s.empty()) throw bad();
  std::size_t pos = 0;
  double sign = 1.0;
  if (s[pos] == '+' || s[pos] == '-') {
    sign = s[pos] == '-' ? -1.0 : 1.0;
    ++pos;
  }
  auto number = [&](double& out) {
    const char* begin = s.data() + pos;
    const char* end = s.data() + s.size();
    if (begin == end || *begin == '-' || *begin == '+') return false;
    auto [ptr, ec] = std::from_chars(begin, end, out);
    if (ec != std::errc() || ptr == begin) return false;
    pos += static_cast<std::size_t>(ptr - begin);
    return true;
  };
  double value = 1.0;
  bool have_coeff = number(value);
  if (s.compare(pos, 3, "*pi") == 0 && have_coeff) {
    pos += 3;
    value *= kPi;
  } else if (s.compare(pos, 2, "pi") == 0) {
    pos += 2;
    value *= kPi;
  } else if (!have_coeff) {
    throw bad();
  }
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    double den = 0.0;
    if (!number(den) || den == 0.0) throw bad();
    value /= den;
  }
  if (pos != s.size() || !std::isfinite(value)) throw bad();
  return sign * value;
}

CircuitFile ParseCircuitJson(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    const std::size_t byte = std::min<std::size_t>(e.byte, text.size());
    int line = 1;
    int col = 1;
    for (std::size_t i = 0; i + 1 < byte; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::kParse, "line " + std::to_string(line) +
                                       ", column " + std::to_string(col) +
                                       ": malformed JSON");
  }
  if (!doc.is_object()) Fail("line 1", "top level must be an object");

  const Json& nq = Field(doc, "num_qubits", "top level");
  if (!nq.is_number_integer()) Fail("num_qubits", "expected an integer");
  const int num_qubits = nq.get<int>();
  if (num_qubits < 1 || num_qubits > kDefaultMaxQubits) {
    Fail("num_qubits", "must be in [1, 24]");
  }
  Circuit circuit(num_qubits);

  if (auto it = doc.find("symbols"); it != doc.end()) {
    if (!it->is_object()) Fail("symbols", "expected an object");
    for (const auto& [name, value] : it->items()) {
      try {
        circuit.AddSymbol(name, AngleValue(value, "symbols." + name));
      } catch (const Error& e) {
        if (e.code() == ErrorCode::kParse) throw;
        Fail("symbols." + name, e.what());
      }
    }
  }

  const std::vector<int> lines = GateLines(text);
  const Json& gates = Field(doc, "gates", "top level");
  if (!gates.is_array()) Fail("gates", "expected an array");
  for (std::size_t i = 0; i < gates.size(); ++i) {
    std::string where = "gates[" + std::to_string(i) + "]";
    if (i < lines.size()) where += " (line " + std::to_string(lines[i]) + ")";
    const Json& g = gates[i];
    if (!g.is_object()) Fail(where, "expected an object");
    const Json& name = Field(g, "name", where);
    if (!name.is_string()) Fail(where, "\"name\" must be a string");
    std::vector<int> targets;
    const Json& tj = Field(g, "targets", where);
    if (!tj.is_array()) Fail(where, "\"targets\" must be an array");
    for (const Json& t : tj) {
      if (!t.is_number_integer()) Fail(where, "targets must be integers");
      targets.push_back(t.get<int>());
    }
    std::vector<ParamRef> params;
    if (auto pit = g.find("params"); pit != g.end()) {
      if (!pit->is_array()) Fail(where, "\"params\" must be an array");
      for (const Json& p : *pit) {
        if (p.is_string()) {
          const std::string ref = p.get<std::string>();
          if (auto sym = circuit.FindSymbol(ref)) {
            params.emplace_back(SymbolRef{*sym});
            continue;
          }
          try {
            params.emplace_back(ParseAngle(ref));
          } catch (const Error&) {
            Fail(where, "undeclared symbol '" + ref + "'");
          }
        } else if (p.is_number()) {
          params.emplace_back(p.get<double>());
        } else {
          Fail(where, "parameters must be numbers or symbol names");
        }
      }
    }
    try {
      circuit.Add(name.get<std::string>(), std::move(targets),
                  std::move(params));
    } catch (const Error& e) {
      Fail(where, e.what());
    }
  }

  const Json& obs = Field(doc, "observable", "top level");
  if (!obs.is_array() || obs.empty()) {
    Fail("observable", "expected a non-empty array of Pauli terms");
  }
  std::vector<PauliTerm> terms;
  for (std::size_t i = 0; i < obs.size(); ++i) {
    const std::string where = "observable[" + std::to_string(i) + "]";
    const Json& t = obs[i];
    if (!t.is_object()) Fail(where, "expected an object");
    const Json& str = Field(t, "string", where);
    if (!str.is_string()) Fail(where, "\"string\" must be a string");
    double weight = 1.0;
    if (auto wit = t.find("weight"); wit != t.end()) {
      if (!wit->is_number()) Fail(where, "\"weight\" must be a number");
      weight = wit->get<double>();
    }
    terms.push_back({str.get<std::string>(), weight});
  }
  try {
    return CircuitFile{std::move(circuit),
                       Observable::FromPauliTerms(num_qubits, std::move(terms))};
  } catch (const Error& e) {
    Fail("observable", e.what());
  }
}

CircuitFile LoadCircuitFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return ParseCircuitJson(buf.str());
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

std::string WriteCircuitJson(const CircuitFile& file) {
  const Circuit& c = file.circuit;
  Json doc;
  doc["num_qubits"] = c.num_qubits();
  Json symbols = Json::object();
  for (std::size_t i = 0; i < c.num_symbols(); ++i) {
    symbols[c.symbol_name(i)] = c.symbol_value(i);
  }
  doc["symbols"] = symbols;
  Json gates = Json::array();
  for (const GateOp& op : c.ops()) {
    Json g;
    g["name"] = op.name();
    g["targets"] = op.targets;
    Json params = Json::array();
    for (const ParamRef& p : op.params) {
      if (const auto* sym = std::get_if<SymbolRef>(&p)) {
        params.push_back(c.symbol_name(sym->index));
      } else {
        params.push_back(std::get<double>(p));
      }
    }
    g["params"] = params;
    gates.push_back(g);
  }
  doc["gates"] = gates;
  if (!file.observable.is_pauli_sum()) {
    throw Error(ErrorCode::kArgument,
                "only Pauli-sum observables can be written");
  }
  Json obs = Json::array();
  for (const PauliTerm& t : file.observable.terms()) {
    obs.push_back({{"string", t.paulis}, {"weight", t.weight}});
  }
  doc["observable"] = obs;
  return doc.dump(2) + "\n";
}

}  // namespace qgrad
