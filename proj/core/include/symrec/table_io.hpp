#pragma once

#include "symrec/noise.hpp"

#include <iosfwd>
#include <string>

namespace symrec {

// "STB1" truth-table files and "SMK1" mask files. All integers are
// little-endian; entries and mask bits are packed least-significant-bit first.
void write_table(std::ostream& out, const TruthTable& table);
TruthTable read_table(std::istream& in);

struct MaskFile {
  std::string problem_key;
  unsigned n = 0;
  CorruptionMask mask;
};

void write_mask(std::ostream& out, const MaskFile& file);
MaskFile read_mask(std::istream& in);

void save_table(const std::string& path, const TruthTable& table);
TruthTable load_table(const std::string& path);
void save_mask(const std::string& path, const MaskFile& file);
MaskFile load_mask(const std::string& path);

}  // namespace symrec
