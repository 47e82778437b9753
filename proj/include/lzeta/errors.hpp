#pragma once

#include <stdexcept>
#include <string>

namespace lzeta {

enum class errc {
    config,              // invalid parameters / contour placement
    pole,                // evaluation requested at a pole
    truncation,          // stated tail bound cannot be met
    missed_zero,         // sign-change census disagrees with N(T)
    multiple_zero,       // |zeta'(rho)| below the simplicity threshold
    unsupported_weight,  // eigenform space not wired up for this weight
    insufficient_coeffs, // coefficient series shorter than requested
    nonconvergence,      // iterative scheme failed to settle
    invalid_index,       // Meijer-G pole-separation violated
    oracle_mismatch      // two independent evaluation routes disagree
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace lzeta
