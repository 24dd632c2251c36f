#pragma once

#include <stdexcept>
#include <string>

namespace lexpow {

// Error taxonomy shared by the library and the CLI exit-code mapping.
enum class Errc {
  malformed_input,        // bad exponent lengths, unparsable text
  undefined_colon,        // colon by the zero ideal
  range,                  // argument outside its documented range
  infeasible_hilbert,     // no ideal of the requested kind has this Hilbert function
  insufficient_bound,     // degree window too small for the declared tail
  nonexistence,           // LPP candidate failed verification (proof of nonexistence)
  not_stable,             // Eliahou-Kervaire input not stable
  not_spp,                // Lemma 3.5 input not d-SPP
  resource_limit,         // configured cap exceeded
  containment_violation,  // linkage strictness (power ideal ⊊ I ⊊ S) violated
  non_artinian,           // some variable has no pure power in the ideal
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace lexpow
