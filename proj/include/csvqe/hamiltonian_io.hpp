// SPDX-License-Identifier: MIT

#pragma once

#include <csvqe/pauli.hpp>

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace csvqe {

using Metadata = std::map<std::string, std::string>;

struct HamiltonianFile {
  PauliSum hamiltonian;
  Metadata metadata;
};

HamiltonianFile hamiltonian_from_json(const nlohmann::json& doc);
nlohmann::json hamiltonian_to_json(const PauliSum& h,
                                   const Metadata& metadata = {});

// Throws ParseError, LengthMismatch, NonHermitian or IoError.
HamiltonianFile load_hamiltonian(const std::string& path);
HamiltonianFile parse_hamiltonian(const std::string& text);
void save_hamiltonian(const std::string& path, const PauliSum& h,
                      const Metadata& metadata = {});

struct ReportRow {
  std::size_t qubits = 0;
  std::size_t terms = 0;
  double energy = 0.0;
  double delta_e = 0.0;
};

struct PipelineReport {
  nlohmann::json pipeline = nlohmann::json::array();
  std::vector<ReportRow> rows;
};

nlohmann::json report_to_json(const PipelineReport& report);
PipelineReport report_from_json(const nlohmann::json& doc);
std::string report_to_csv(const PipelineReport& report);

void save_report(const std::string& path, const PipelineReport& report);
void save_report_csv(const std::string& path, const PipelineReport& report);
PipelineReport load_report(const std::string& path);

void write_text_file(const std::string& path, const std::string& text);

}  // namespace csvqe
