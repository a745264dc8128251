#include "symrec/table_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace symrec {

namespace {

constexpr std::uint16_t kVersion = 1;

void put_uint(std::ostream& out, std::uint64_t v, unsigned bytes) {
  for (unsigned i = 0; i < bytes; ++i) out.put(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::uint64_t get_uint(std::istream& in, unsigned bytes) {
  std::uint64_t v = 0;
  for (unsigned i = 0; i < bytes; ++i) {
    const int c = in.get();
    if (c == std::char_traits<char>::eof()) throw std::runtime_error("truncated file");
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(c)) << (8 * i);
  }
  return v;
}

void put_header(std::ostream& out, const char* magic, const std::string& key, unsigned n,
                std::uint64_t entries, unsigned width) {
  out.write(magic, 4);
  put_uint(out, kVersion, 2);
  put_uint(out, key.size(), 4);
  out.write(key.data(), static_cast<std::streamsize>(key.size()));
  put_uint(out, n, 8);
  put_uint(out, entries, 8);
  put_uint(out, width, 1);
}

struct Header {
  std::string key;
  unsigned n;
  std::uint64_t entries;
  unsigned width;
};

Header get_header(std::istream& in, const char* magic) {
  char got[4] = {};
  in.read(got, 4);
  if (in.gcount() != 4 || std::string(got, 4) != std::string(magic, 4)) {
    throw std::runtime_error(std::string("bad magic, expected ") + magic);
  }
  const auto version = get_uint(in, 2);
  if (version != kVersion) {
    throw std::runtime_error("unsupported format version " + std::to_string(version));
  }
  const auto len = get_uint(in, 4);
  if (len > (1u << 16)) throw std::runtime_error("problem id too long");
  Header h;
  h.key.resize(len);
  in.read(h.key.data(), static_cast<std::streamsize>(len));
  if (static_cast<std::uint64_t>(in.gcount()) != len) throw std::runtime_error("truncated file");
  h.n = static_cast<unsigned>(get_uint(in, 8));
  h.entries = get_uint(in, 8);
  h.width = static_cast<unsigned>(get_uint(in, 1));
  return h;
}

void put_words(std::ostream& out, const std::vector<std::uint64_t>& words, std::uint64_t bits) {
  const std::uint64_t bytes = (bits + 7) / 8;
  for (std::uint64_t b = 0; b < bytes; ++b) {
    out.put(static_cast<char>((words[b / 8] >> (8 * (b % 8))) & 0xff));
  }
}

std::vector<std::uint64_t> get_words(std::istream& in, std::uint64_t bits) {
  std::vector<std::uint64_t> words((bits + 63) / 64, 0);
  const std::uint64_t bytes = (bits + 7) / 8;
  for (std::uint64_t b = 0; b < bytes; ++b) {
    words[b / 8] |= get_uint(in, 1) << (8 * (b % 8));
  }
  return words;
}

template <class Stream>
Stream open(const std::string& path, std::ios::openmode mode) {
  Stream s(path, mode | std::ios::binary);
  if (!s) throw std::runtime_error("cannot open '" + path + "'");
  return s;
}

}  // namespace

void write_table(std::ostream& out, const TruthTable& table) {
  put_header(out, "STB1", table.problem_key(), table.n(), table.size(), table.width());
  put_words(out, table.words(), table.size() * table.width());
  if (!out) throw std::runtime_error("write failed");
}

TruthTable read_table(std::istream& in) {
  const Header h = get_header(in, "STB1");
  if (h.width == 0 || h.width > 64) throw std::runtime_error("bad value width");
  if (h.entries > (std::uint64_t{1} << 36)) throw std::runtime_error("table too large");
  TruthTable t(h.key, h.n, h.entries, h.width);
  t.words() = get_words(in, h.entries * h.width);
  return t;
}

void write_mask(std::ostream& out, const MaskFile& file) {
  const CorruptionMask& m = file.mask;
  if (!m.materialized()) throw std::invalid_argument("only materialized masks can be written");
  put_header(out, "SMK1", file.problem_key, file.n, m.entry_count(), 1);
  put_uint(out, m.seed(), 8);
  put_uint(out, static_cast<std::uint8_t>(m.model()), 1);
  put_uint(out, m.delta().num, 8);
  put_uint(out, m.delta().den, 8);
  put_words(out, m.bits(), m.entry_count());
  if (!out) throw std::runtime_error("write failed");
}

MaskFile read_mask(std::istream& in) {
  const Header h = get_header(in, "SMK1");
  if (h.width != 1) throw std::runtime_error("mask width must be 1");
  if (h.entries > (std::uint64_t{1} << 36)) throw std::runtime_error("mask too large");
  const std::uint64_t seed = get_uint(in, 8);
  const auto model = get_uint(in, 1);
  if (model > 1) throw std::runtime_error("unknown corruption model " + std::to_string(model));
  const std::uint64_t num = get_uint(in, 8);
  const std::uint64_t den = get_uint(in, 8);
  MaskFile f;
  f.problem_key = h.key;
  f.n = h.n;
  f.mask = CorruptionMask::from_bits(static_cast<CorruptionModel>(model), Rational(num, den), seed,
                                     h.entries, get_words(in, h.entries));
  return f;
}

void save_table(const std::string& path, const TruthTable& table) {
  auto out = open<std::ofstream>(path, std::ios::out | std::ios::trunc);
  write_table(out, table);
}

TruthTable load_table(const std::string& path) {
  auto in = open<std::ifstream>(path, std::ios::in);
  return read_table(in);
}

void save_mask(const std::string& path, const MaskFile& file) {
  auto out = open<std::ofstream>(path, std::ios::out | std::ios::trunc);
  write_mask(out, file);
}

MaskFile load_mask(const std::string& path) {
  auto in = open<std::ifstream>(path, std::ios::in);
  return read_mask(in);
}

}  // namespace symrec
