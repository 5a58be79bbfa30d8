#include "cache.hpp"

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace ringlab {

namespace {

constexpr char kMagic[4] = {'R', 'N', 'G', 'F'};

uint64_t fnv64(const std::string& s, uint64_t h) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

void put_u16(std::string& out, uint16_t v) {
  out += char(v & 0xff);
  out += char(v >> 8);
}

void put_u32(std::string& out, uint32_t v) {
  for (int i = 0; i < 4; ++i) out += char((v >> (8 * i)) & 0xff);
}

class Reader {
 public:
  explicit Reader(std::string data) : data_(std::move(data)) {}

  bool u16(uint16_t& v) {
    if (pos_ + 2 > data_.size()) return false;
    v = uint16_t(uint8_t(data_[pos_])) | uint16_t(uint8_t(data_[pos_ + 1])) << 8;
    pos_ += 2;
    return true;
  }

  bool u32(uint32_t& v) {
    if (pos_ + 4 > data_.size()) return false;
    v = 0;
    for (int i = 0; i < 4; ++i) v |= uint32_t(uint8_t(data_[pos_ + size_t(i)])) << (8 * i);
    pos_ += 4;
    return true;
  }

  bool bytes(std::string& out, size_t len) {
    if (pos_ + len > data_.size()) return false;
    out.assign(data_, pos_, len);
    pos_ += len;
    return true;
  }

  bool done() const { return pos_ == data_.size(); }

 private:
  std::string data_;
  size_t pos_ = 0;
};

}  // namespace

std::string cache_file_name(const std::string& canonical_expr) {
  // Two independent 64-bit hashes over the versioned key.
  std::string key = "v" + std::to_string(kCacheFormatVersion) + ":" + canonical_expr;
  uint64_t h1 = fnv64(key, 0xcbf29ce484222325ull);
  uint64_t h2 = fnv64(key, 0x84222325cbf29ce4ull);
  char buf[40];
  std::snprintf(buf, sizeof buf, "%016llx%016llx.rngf",
                static_cast<unsigned long long>(h1),
                static_cast<unsigned long long>(h2));
  return buf;
}

std::optional<FiniteRing> cache_load(const std::string& dir,
                                     const std::string& canonical_expr,
                                     std::string* warning) {
  namespace fs = std::filesystem;
  fs::path path = fs::path(dir) / cache_file_name(canonical_expr);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::string data((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  in.close();

  auto corrupt = [&]() -> std::optional<FiniteRing> {
    if (warning) *warning = "corrupt cache file " + path.string() + "; rebuilding";
    return std::nullopt;
  };

  Reader r(std::move(data));
  std::string magic;
  if (!r.bytes(magic, 4) || magic != std::string(kMagic, 4)) return corrupt();
  uint32_t version = 0, size = 0;
  if (!r.u32(version)) return corrupt();
  if (version != kCacheFormatVersion) return std::nullopt;  // silent miss
  if (!r.u32(size) || size == 0 || size > kMaxTableCap) return corrupt();
  uint16_t zero = 0, one = 0;
  if (!r.u16(zero) || !r.u16(one) || zero != 0 || one >= size) return corrupt();

  auto read_table = [&](std::vector<uint16_t>& t) {
    t.resize(size_t(size) * size);
    for (auto& v : t)
      if (!r.u16(v) || v >= size) return false;
    return true;
  };
  std::vector<uint16_t> add, mul;
  if (!read_table(add) || !read_table(mul)) return corrupt();

  std::vector<std::string> labels(size);
  for (auto& l : labels) {
    uint32_t len = 0;
    if (!r.u32(len) || len > 1u << 20 || !r.bytes(l, len)) return corrupt();
  }
  if (!r.done()) return corrupt();

  try {
    return FiniteRing(std::make_shared<TableRing>(size, std::move(add), std::move(mul),
                                                  one, std::move(labels),
                                                  canonical_expr));
  } catch (const RingError&) {
    return corrupt();
  }
}

void cache_store(const std::string& dir, const std::string& canonical_expr,
                 const FiniteRing& ring) {
  namespace fs = std::filesystem;
  const TableRing& t = ring.table();
  const uint32_t n = t.count();

  std::string out;
  out.reserve(16 + size_t(n) * n * 4);
  out.append(kMagic, 4);
  put_u32(out, kCacheFormatVersion);
  put_u32(out, n);
  put_u16(out, 0);
  put_u16(out, t.one_index());
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j) put_u16(out, t.addi(uint16_t(i), uint16_t(j)));
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j) put_u16(out, t.muli(uint16_t(i), uint16_t(j)));
  for (uint32_t i = 0; i < n; ++i) {
    const std::string& l = t.label_at(uint16_t(i));
    put_u32(out, uint32_t(l.size()));
    out += l;
  }

  std::error_code ec;
  fs::create_directories(dir, ec);
  fs::path final_path = fs::path(dir) / cache_file_name(canonical_expr);
  fs::path tmp_path = final_path;
  tmp_path += ".tmp" + std::to_string(::getpid());
  std::ofstream of(tmp_path, std::ios::binary | std::ios::trunc);
  if (!of) fail(Errc::io_error, "cannot write cache file " + tmp_path.string());
  of.write(out.data(), std::streamsize(out.size()));
  of.close();
  if (!of) fail(Errc::io_error, "short write to " + tmp_path.string());
  fs::rename(tmp_path, final_path, ec);
  if (ec) fail(Errc::io_error, "cannot move cache file into place: " + ec.message());
}

}  // namespace ringlab
