#ifndef GREYSD_DIGEST_HPP
#define GREYSD_DIGEST_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

// Canonical value encoding and the digests defined over it.

namespace greysd {

// 17-significant-digit rendering ("%.17g"): round-trips every double
// bit-exactly.  This is the canonical text form of a value, shared by
// JSON serialization, CSV data cells and digest computation.
std::string num17(double v);

// FNV-1a 64-bit hash.
std::uint64_t fnv1a64(std::string_view bytes);

// Digest of the first `count` values: each rendered by num17, joined
// with commas, hashed with FNV-1a.  Identifies the data a model was
// fitted on and guards embedded fixtures.
std::uint64_t values_digest(const std::vector<double> &values,
                            std::size_t count);

} // namespace greysd

#endif
