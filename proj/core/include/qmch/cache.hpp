#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmch/field_poly.hpp"

namespace qmch {

/// One cached rank-1 generating vector, keyed by construction parameters.
/// Line format: kind N d alpha gamma_spec z1 ... zd
struct VectorCacheKey {
  std::string kind;  // "R", "S" or "recon"
  std::uint64_t modulus = 0;
  std::size_t dimension = 0;
  double alpha = 0.0;
  std::string gamma_spec;
};

std::optional<std::vector<std::uint64_t>> vector_cache_lookup(const std::string& path,
                                                              const VectorCacheKey& key);
void vector_cache_append(const std::string& path, const VectorCacheKey& key,
                         const std::vector<std::uint64_t>& z);

/// Polynomial lattice record: poly b m p_coeffs alpha gamma_spec q1 ... qd
struct PolyCacheKey {
  std::uint32_t base = 2;
  std::size_t m = 0;
  std::string modulus;  // printed coefficient list
  double alpha = 0.0;
  std::string gamma_spec;
  std::size_t dimension = 0;
};

std::optional<std::vector<FieldPoly>> poly_cache_lookup(const std::string& path,
                                                        const PolyCacheKey& key);
void poly_cache_append(const std::string& path, const PolyCacheKey& key,
                       const std::vector<FieldPoly>& q);

/// SHA-1 hex digest (config stamping for reproducible outputs).
std::string sha1_hex(const std::string& data);

}  // namespace qmch
