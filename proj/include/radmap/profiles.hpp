#pragma once

#include <iosfwd>

#include "radmap/sqdt.hpp"

namespace radmap::profiles {

/// Line-oriented defect-profile file:
///
///   # comment
///   j = 0              (or J = ... for an oscillator profile)
///   tail_i = 0         (optional tail values; tail_I / tail_Delta likewise)
///   tail_delta = 0.0
///   [rows]
///   0  2  1.35         (l i delta   /   L I Delta)
///   1  1  0.859
///
/// Exactly one of j / J decides which system the file describes; a file with
/// neither is accepted by the typed loaders below and treated as j = J = 0.
struct ProfileFile {
  bool has_j = false;
  bool has_J = false;
  int dim_shift = 0;
  int tail_count = 0;
  double tail_defect = 0.0;
  struct Row {
    int angular;
    int count;
    double defect;
  };
  std::vector<Row> rows;
};

ProfileFile parse_profile(std::istream& in);

sqdt::CoulombDefectProfile to_coulomb(const ProfileFile& f);
sqdt::OscillatorDefectProfile to_oscillator(const ProfileFile& f);

/// Loads from a path; the name "sodium" resolves to the built-in preset.
sqdt::CoulombDefectProfile load_coulomb_profile(const std::string& path_or_name);
sqdt::OscillatorDefectProfile load_oscillator_profile(const std::string& path_or_name);

/// The oscillator side of the sodium mapping at lambda = 1 (levels below
/// N_s = 5 filled), keyed by L.
sqdt::OscillatorDefectProfile sodium_oscillator_profile();

}  // namespace radmap::profiles
