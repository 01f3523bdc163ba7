#ifndef ARCOPUC_JSONIO_HPP
#define ARCOPUC_JSONIO_HPP

#include <string>

#include "arcopuc/fourext.hpp"
#include "arcopuc/opuc.hpp"

namespace arcopuc {

/// OpucSystem to JSON; coefficient words serialized as hex-float strings so
/// cross-run comparisons are bit-exact.
std::string opuc_to_json(const OpucSystem& sys);
OpucSystem opuc_from_json(const std::string& text);

std::string approx_to_json(const ExtensionApprox& approx);

/// Samples from CSV with columns j, Re f, Im f ('#' lines are comments).
/// Throws with a line diagnostic on malformed input.
std::vector<std::complex<double>> samples_from_csv(const std::string& path, int expected_n);

/// Atomic file write: temp file in the same directory + rename.
void write_file_atomic(const std::string& path, const std::string& content);

} // namespace arcopuc

#endif
