#include "radmap/profiles.hpp"

#include <fstream>
#include <sstream>

#include "radmap/mapping.hpp"

namespace radmap::profiles {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

ProfileFile parse_profile(std::istream& in) {
  ProfileFile f;
  std::string line;
  bool in_rows = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line == "[rows]") {
      in_rows = true;
      continue;
    }
    if (!in_rows) {
      const auto eq = line.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("profile line " + std::to_string(lineno) +
                                    ": expected key = value before [rows]");
      const std::string key = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      try {
        if (key == "j") {
          f.has_j = true;
          f.dim_shift = std::stoi(value);
        } else if (key == "J") {
          f.has_J = true;
          f.dim_shift = std::stoi(value);
        } else if (key == "tail_i" || key == "tail_I") {
          f.tail_count = std::stoi(value);
        } else if (key == "tail_delta" || key == "tail_Delta") {
          f.tail_defect = std::stod(value);
        } else {
          throw std::invalid_argument("profile line " + std::to_string(lineno) +
                                      ": unknown key '" + key + "'");
        }
      } catch (const std::invalid_argument&) {
        throw;
      } catch (const std::exception&) {
        throw std::invalid_argument("profile line " + std::to_string(lineno) +
                                    ": bad value '" + value + "'");
      }
    } else {
      std::istringstream row(line);
      ProfileFile::Row r{};
      if (!(row >> r.angular >> r.count >> r.defect))
        throw std::invalid_argument("profile line " + std::to_string(lineno) +
                                    ": rows need three columns (angular count defect)");
      std::string extra;
      if (row >> extra)
        throw std::invalid_argument("profile line " + std::to_string(lineno) +
                                    ": rows need exactly three columns");
      f.rows.push_back(r);
    }
  }
  if (f.has_j && f.has_J)
    throw std::invalid_argument("profile: give either j or J, not both");
  return f;
}

sqdt::CoulombDefectProfile to_coulomb(const ProfileFile& f) {
  if (f.has_J)
    throw std::invalid_argument("profile: oscillator file (J) used where a Coulomb "
                                "profile (j) was expected");
  sqdt::CoulombDefectProfile p;
  p.dim_shift = f.dim_shift;
  p.tail_filled = f.tail_count;
  p.tail_defect = f.tail_defect;
  for (const auto& r : f.rows) p.rows.push_back({r.angular, r.count, r.defect});
  return p;
}

sqdt::OscillatorDefectProfile to_oscillator(const ProfileFile& f) {
  if (f.has_j)
    throw std::invalid_argument("profile: Coulomb file (j) used where an oscillator "
                                "profile (J) was expected");
  sqdt::OscillatorDefectProfile p;
  p.dim_shift = f.dim_shift;
  p.tail_inaccessible = f.tail_count;
  p.tail_defect = f.tail_defect;
  for (const auto& r : f.rows) p.rows.push_back({r.angular, r.count, r.defect});
  return p;
}

namespace {

ProfileFile load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("profile: cannot open '" + path + "'");
  return parse_profile(in);
}

}  // namespace

sqdt::CoulombDefectProfile load_coulomb_profile(const std::string& path_or_name) {
  if (path_or_name == "sodium") return sqdt::sodium_coulomb_profile();
  return to_coulomb(load_file(path_or_name));
}

sqdt::OscillatorDefectProfile load_oscillator_profile(const std::string& path_or_name) {
  if (path_or_name == "sodium") return sodium_oscillator_profile();
  return to_oscillator(load_file(path_or_name));
}

sqdt::OscillatorDefectProfile sodium_oscillator_profile() {
  sqdt::OscillatorDefectProfile p;
  p.dim_shift = 1;  // the sodium mapping is the lambda = 1, J = 1, D* = 3 case
  for (const auto& row : mapping::sodium_table(1)) {
    if (row.l < 4) p.rows.push_back({row.L, row.I, row.Delta});
  }
  p.tail_defect = 0.5;  // Delta tends to 1/2 at large L
  return p;
}

}  // namespace radmap::profiles
