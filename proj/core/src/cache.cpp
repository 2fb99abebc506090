#include "qmch/cache.hpp"

#include <array>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "qmch/errors.hpp"

namespace qmch {

namespace {

std::string format_alpha(double alpha) {
  std::ostringstream os;
  os << alpha;
  return os.str();
}

}  // namespace

std::optional<std::vector<std::uint64_t>> vector_cache_lookup(const std::string& path,
                                                              const VectorCacheKey& key) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string kind, alpha_text, gamma;
    std::uint64_t n = 0;
    std::size_t d = 0;
    if (!(ss >> kind >> n >> d >> alpha_text >> gamma)) continue;
    if (kind != key.kind || n != key.modulus || d != key.dimension ||
        alpha_text != format_alpha(key.alpha) || gamma != key.gamma_spec) {
      continue;
    }
    std::vector<std::uint64_t> z(d);
    bool ok = true;
    for (std::size_t j = 0; j < d; ++j) {
      if (!(ss >> z[j])) {
        ok = false;
        break;
      }
    }
    if (ok) return z;
  }
  return std::nullopt;
}

void vector_cache_append(const std::string& path, const VectorCacheKey& key,
                         const std::vector<std::uint64_t>& z) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw ConfigError("cannot open cache file: " + path);
  out << key.kind << ' ' << key.modulus << ' ' << key.dimension << ' '
      << format_alpha(key.alpha) << ' ' << key.gamma_spec;
  for (auto zj : z) out << ' ' << zj;
  out << '\n';
}

std::optional<std::vector<FieldPoly>> poly_cache_lookup(const std::string& path,
                                                        const PolyCacheKey& key) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string tag, p_text, alpha_text, gamma;
    std::uint32_t b = 0;
    std::size_t m = 0;
    if (!(ss >> tag >> b >> m >> p_text >> alpha_text >> gamma)) continue;
    if (tag != "poly" || b != key.base || m != key.m || p_text != key.modulus ||
        alpha_text != format_alpha(key.alpha) || gamma != key.gamma_spec) {
      continue;
    }
    std::vector<FieldPoly> q;
    std::string q_text;
    while (ss >> q_text) q.push_back(FieldPoly::parse(b, q_text));
    if (q.size() == key.dimension) return q;
  }
  return std::nullopt;
}

void poly_cache_append(const std::string& path, const PolyCacheKey& key,
                       const std::vector<FieldPoly>& q) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw ConfigError("cannot open cache file: " + path);
  out << "poly " << key.base << ' ' << key.m << ' ' << key.modulus << ' '
      << format_alpha(key.alpha) << ' ' << key.gamma_spec;
  for (const auto& qj : q) out << ' ' << qj.print();
  out << '\n';
}

std::string sha1_hex(const std::string& data) {
  std::array<std::uint32_t, 5> h = {0x67452301u, 0xEFCDAB89u, 0x98BADCFEu, 0x10325476u,
                                    0xC3D2E1F0u};
  std::string msg = data;
  const std::uint64_t bit_len = static_cast<std::uint64_t>(msg.size()) * 8;
  msg.push_back(static_cast<char>(0x80));
  while (msg.size() % 64 != 56) msg.push_back('\0');
  for (int i = 7; i >= 0; --i) msg.push_back(static_cast<char>((bit_len >> (8 * i)) & 0xFF));

  auto rotl = [](std::uint32_t v, int s) { return (v << s) | (v >> (32 - s)); };
  for (std::size_t chunk = 0; chunk < msg.size(); chunk += 64) {
    std::array<std::uint32_t, 80> w{};
    for (int i = 0; i < 16; ++i) {
      w[i] = (static_cast<std::uint8_t>(msg[chunk + 4 * i]) << 24) |
             (static_cast<std::uint8_t>(msg[chunk + 4 * i + 1]) << 16) |
             (static_cast<std::uint8_t>(msg[chunk + 4 * i + 2]) << 8) |
             static_cast<std::uint8_t>(msg[chunk + 4 * i + 3]);
    }
    for (int i = 16; i < 80; ++i) w[i] = rotl(w[i - 3] ^ w[i - 8] ^ w[i - 14] ^ w[i - 16], 1);
    std::uint32_t a = h[0], b = h[1], c = h[2], d = h[3], e = h[4];
    for (int i = 0; i < 80; ++i) {
      std::uint32_t f = 0, k = 0;
      if (i < 20) {
        f = (b & c) | ((~b) & d);
        k = 0x5A827999u;
      } else if (i < 40) {
        f = b ^ c ^ d;
        k = 0x6ED9EBA1u;
      } else if (i < 60) {
        f = (b & c) | (b & d) | (c & d);
        k = 0x8F1BBCDCu;
      } else {
        f = b ^ c ^ d;
        k = 0xCA62C1D6u;
      }
      const std::uint32_t temp = rotl(a, 5) + f + e + k + w[i];
      e = d;
      d = c;
      c = rotl(b, 30);
      b = a;
      a = temp;
    }
    h[0] += a;
    h[1] += b;
    h[2] += c;
    h[3] += d;
    h[4] += e;
  }
  std::ostringstream os;
  os << std::hex << std::setfill('0');
  for (auto v : h) os << std::setw(8) << v;
  return os.str();
}

}  // namespace qmch
