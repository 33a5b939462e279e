#pragma once

// Explicit torsion classes and structural checks on the stable model.

#include <optional>
#include <string>
#include <vector>

#include "koszul/degree.hpp"
#include "koszul/homology.hpp"

namespace koszul {

struct CertificateCheck {
  std::string description;
  bool passed = false;
  /// Canonical text of the polynomial or group backing the verdict.
  std::string witness;
};

struct CertificateReport {
  std::string name;
  std::optional<Degree> degree;
  std::vector<CertificateCheck> checks;
  /// Free-form remarks: accepted sign, detected offsets, skipped steps.
  std::vector<std::string> notes;

  bool passed() const noexcept;
  /// One "key: value" record per line, ending in "verdict: PASS|FAIL".
  std::string to_string() const;
};

/// t_p = sum_{i=1}^{p-1} (N i - p + i) x_i xi_{p-i} in stable(p, N).
/// Checks d(t_p) = 0 mod p, N - p + 1 != 0 mod p, and, when
/// integral_check is set, a Z/p^k summand of integral homology at
/// (2p + 2N + 2, 2p + 1) together with its universal-coefficient shadow
/// over F_p. Requires p prime and p > N + 1.
CertificateReport torsion_certificate_tp(int p, int N, bool integral_check = true);

/// "A" (stable(5,2), mod-5 cycle) or "B" (stable(6,3), mod-7 cycle).
/// integral_check adds the SNF computation at the class's bidegree.
CertificateReport verify_named_class(const std::string& name, bool integral_check = false);

/// Compares the reduced homology of stable(n, N) with the free algebra on
/// xi_1..xi_{N-1}, x_{n-N+1}..x_{n-1} tensored with the homology of a copy
/// of stable(n - N, N) regraded by x_j -> x_{j+1}, xi_i -> xi_{i+N}.
/// Requires n > N.
CertificateReport reduced_factorization_check(int n, int N, const Window& window);

/// Experimental: per bidegree, whether the classes of products of x_k and
/// mu_k span rational homology. Requires n <= 4 and N <= 3.
CertificateReport generator_saturation_check(int n, int N, const Window& window);

/// Dispatch on "tp:<p>,<N>", "A", "B", "reduced:<n>,<N>", "generators:<n>,<N>".
CertificateReport run_certificate(const std::string& name, const Window& window,
                                  bool integral_check);

}  // namespace koszul
