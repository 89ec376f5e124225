#include "netideal/registry.hpp"

#include <stdexcept>

#include "json.hpp"

namespace netideal {

const char* var_class_name(VarClass c) {
  switch (c) {
    case VarClass::UnprimedAtom: return "unprimed-atom";
    case VarClass::PrimedAtom: return "primed-atom";
    case VarClass::ChartParameter: return "chart-parameter";
  }
  return "?";
}

long slice_size(int atom_count, int truncation) {
  long s = 1;
  for (int t = 0; t < atom_count; ++t) s *= truncation + 1;
  return s;
}

long slice_address(const std::vector<int>& unprimed_exponents, int truncation) {
  long addr = 0, base = 1;
  for (int a : unprimed_exponents) {
    addr += static_cast<long>(a) * base;
    base *= truncation + 1;
  }
  return addr;
}

std::vector<int> slice_exponents(long address, int atom_count, int truncation) {
  std::vector<int> out(atom_count);
  for (int t = 0; t < atom_count; ++t) {
    out[t] = static_cast<int>(address % (truncation + 1));
    address /= truncation + 1;
  }
  return out;
}

std::string atom_var_name(const std::string& edge, int t, int atom_count, bool primed) {
  std::string s = atom_count == 1 ? edge : edge + std::to_string(t);
  if (primed) s += "'";
  return s;
}

std::string param_var_name(const std::string& edge, int k) {
  return edge + std::to_string(k);
}

int VariableRegistry::atoms_of(const std::string& edge) const {
  auto it = edge_atoms.find(edge);
  return it == edge_atoms.end() ? 0 : it->second;
}

int VariableRegistry::params_of(const std::string& edge) const {
  auto it = charts.find(edge);
  return it == charts.end() ? 0 : it->second.param_count();
}

std::string VariableRegistry::atom_var(const std::string& edge, int t, bool primed) const {
  return atom_var_name(edge, t, atoms_of(edge), primed);
}

std::string VariableRegistry::param_var(const std::string& edge, int k) const {
  return param_var_name(edge, k);
}

const VarInfo* VariableRegistry::info(const std::string& var_name) const {
  for (const auto& v : vars)
    if (v.name == var_name) return &v;
  return nullptr;
}

std::vector<std::pair<std::string, std::string>> VariableRegistry::atom_blocks() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i + 1 < vars.size(); ++i)
    if (vars[i].cls == VarClass::UnprimedAtom && vars[i + 1].cls == VarClass::PrimedAtom &&
        vars[i].edge == vars[i + 1].edge && vars[i].index == vars[i + 1].index)
      out.push_back({vars[i].name, vars[i + 1].name});
  return out;
}

std::string VariableRegistry::to_json() const {
  nlohmann::ordered_json j;
  j["truncation"] = truncation;
  j["variables"] = nlohmann::ordered_json::array();
  for (const auto& v : vars)
    j["variables"].push_back({{"name", v.name},
                              {"class", var_class_name(v.cls)},
                              {"edge", v.edge},
                              {"index", v.index}});
  j["charts"] = nlohmann::ordered_json::object();
  for (const auto& [edge, chart] : charts)
    j["charts"][edge] = {{"truncation", chart.truncation},
                         {"pivots", chart.pivots},
                         {"basis", chart.basis}};
  return j.dump();
}

}  // namespace netideal
