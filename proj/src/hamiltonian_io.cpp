// SPDX-License-Identifier: MIT

#include <csvqe/errors.hpp>
#include <csvqe/hamiltonian_io.hpp>

#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

namespace csvqe {

namespace {

using nlohmann::json;

std::size_t line_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), line_of(text, e.byte));
  }
}

}  // namespace

HamiltonianFile hamiltonian_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("document must be an object", 1);
  if (!doc.contains("n_qubits") || !doc["n_qubits"].is_number_unsigned()) {
    throw ParseError("missing or invalid n_qubits", 1);
  }
  const auto n = doc["n_qubits"].get<std::size_t>();
  if (n == 0 || n > kMaxQubits) throw ParseError("n_qubits out of range", 1);
  if (!doc.contains("terms") || !doc["terms"].is_array()) {
    throw ParseError("missing terms array", 1);
  }
  HamiltonianFile out{PauliSum(n), {}};
  PauliSum raw(n);
  std::size_t index = 0;
  for (const auto& t : doc["terms"]) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_string() ||
        !t[1].is_array() || t[1].size() != 2 || !t[1][0].is_number() ||
        !t[1][1].is_number()) {
      throw ParseError("term " + std::to_string(index) +
                           " must be [\"PAULI\", [re, im]]",
                       1);
    }
    const auto text = t[0].get<std::string>();
    if (text.size() != n) {
      throw LengthMismatch("term " + std::to_string(index) + " \"" + text +
                           "\" has length " + std::to_string(text.size()) +
                           ", expected " + std::to_string(n));
    }
    raw.add(PauliWord::parse(text),
            complex{t[1][0].get<double>(), t[1][1].get<double>()});
    ++index;
  }
  if (raw.max_imag() > kHermitianTolerance) throw NonHermitian(raw.max_imag());
  out.hamiltonian = raw.real_part();
  if (doc.contains("metadata") && doc["metadata"].is_object()) {
    for (const auto& [k, v] : doc["metadata"].items()) {
      out.metadata[k] = v.is_string() ? v.get<std::string>() : v.dump();
    }
  }
  return out;
}

json hamiltonian_to_json(const PauliSum& h, const Metadata& metadata) {
  json terms = json::array();
  for (const auto& [w, c] : h) {
    terms.push_back(json::array({w.str(), json::array({c.real(), c.imag()})}));
  }
  json meta = json::object();
  for (const auto& [k, v] : metadata) meta[k] = v;
  return json{{"n_qubits", h.n_qubits()}, {"terms", terms}, {"metadata", meta}};
}

HamiltonianFile parse_hamiltonian(const std::string& text) {
  return hamiltonian_from_json(parse_json(text));
}

HamiltonianFile load_hamiltonian(const std::string& path) {
  return parse_hamiltonian(read_text_file(path));
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("write failed for " + path);
}

void save_hamiltonian(const std::string& path, const PauliSum& h,
                      const Metadata& metadata) {
  // Full round-trip precision for doubles.
  write_text_file(path, hamiltonian_to_json(h, metadata).dump(2) + "\n");
}

json report_to_json(const PipelineReport& report) {
  json rows = json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"qubits", r.qubits},
                    {"terms", r.terms},
                    {"energy", r.energy},
                    {"delta_e", r.delta_e}});
  }
  return json{{"pipeline", report.pipeline}, {"rows", rows}};
}

PipelineReport report_from_json(const json& doc) {
  PipelineReport out;
  if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array()) {
    throw ParseError("report must contain a rows array", 1);
  }
  out.pipeline = doc.value("pipeline", json::array());
  for (const auto& r : doc["rows"]) {
    try {
      out.rows.push_back({r.at("qubits").get<std::size_t>(),
                          r.at("terms").get<std::size_t>(),
                          r.at("energy").get<double>(),
                          r.at("delta_e").get<double>()});
    } catch (const json::exception& e) {
      throw ParseError(std::string("malformed report row: ") + e.what(), 1);
    }
  }
  return out;
}

std::string report_to_csv(const PipelineReport& report) {
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<double>::max_digits10);
  os << "qubits,terms,energy,delta_e\n";
  for (const auto& r : report.rows) {
    os << r.qubits << ',' << r.terms << ',' << r.energy << ',' << r.delta_e
       << '\n';
  }
  return os.str();
}

void save_report(const std::string& path, const PipelineReport& report) {
  write_text_file(path, report_to_json(report).dump(2) + "\n");
}

void save_report_csv(const std::string& path, const PipelineReport& report) {
  write_text_file(path, report_to_csv(report));
}

PipelineReport load_report(const std::string& path) {
  return report_from_json(parse_json(read_text_file(path)));
}

}  // namespace csvqe
