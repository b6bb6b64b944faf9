#pragma once

#include "modquot/catalog.hpp"
#include "modquot/group.hpp"
#include "modquot/profile.hpp"

#include <optional>
#include <string>
#include <vector>

namespace modquot {

/// Request for one quotient certificate: genus, block sizes, and the divisor
/// choice for each block (Weierstrass unless overridden).
struct CertificateInput {
    int g = 0;
    std::vector<int> blocks;
    std::vector<CatalogEntry> entries;  // one per block

    static CertificateInput closed(int g, std::vector<int> blocks);
    int n() const;
};

enum class CoordStatus { ProvedExact, ProvedByBound, Unproved };

struct CoordinateReport {
    std::string coordinate;  // "lambda", "psi[k]", "irr", "delta(i;c1,...)"
    CoefInterval remainder;
    CoordStatus status = CoordStatus::ProvedExact;
    std::vector<std::string> assumptions;
};

/// Result of the decomposition check: K_G minus the weighted sum of the slope
/// divisor, the per-block pullbacks, the ambient Weierstrass class and the
/// psi-multiple, verified coordinate by coordinate with interval arithmetic.
struct Certificate {
    enum class Grade { GeneralType, NonNegativeKodaira, Fail };

    CertificateInput input;
    SlopeEntry slope;
    Rational epsilon, eta, f_value;
    Rational mult_D, mult_L, mult_W;
    ProfileDivisorClass remainder;
    std::vector<CoordinateReport> coordinates;
    std::vector<std::string> assumptions;  // declared bounds used by proved coordinates
    Grade grade = Grade::Fail;

    bool all_proved() const;
    std::vector<const CoordinateReport*> unproved() const;
};

/// The closed-form certificate value for Weierstrass divisors on every block:
///   f = 2 s(g) - (1/(1+eps)) sum_k a(g,n_k) - (2 eps/(b(g,n)(1+eps))) a(g,n),
/// eps = min over blocks with n_k >= 2 of b(g,n_k) - 3. Requires max n_k <= g;
/// the quotient is of general type when f <= 13 and max n_k <= g-2, and has
/// non-negative Kodaira dimension when f <= 13 and max n_k <= g.
Rational f_closed(int g, const std::vector<int>& blocks);

/// General form with chosen per-block entries:
///   f = (2 - (1/(1+eps)) sum_k b_irr,k)_+ s(g)
///       + (1/(1+eps)) sum_k a_k - (2 eps/(b(g,n)(1+eps))) a(g,n).
Rational f_general(int g, const std::vector<int>& blocks, const std::vector<CatalogEntry>& entries);

Certificate build_certificate(const CertificateInput& input);

struct Verdict {
    enum class Classification {
        GeneralType,
        NonNegativeKodaira,
        IntermediateKodaira,
        Uniruled,
        Unirational,
        Unknown,
    };

    Classification classification = Classification::Unknown;
    long kodaira = 0;  // filled for IntermediateKodaira
    std::vector<std::string> justification;
    std::optional<Certificate> certificate;
};

const char* classification_name(Verdict::Classification c);

/// Classification of the quotient of (g, n) by the group, by the rule chain:
/// transposition-free reduction, symmetric-quotient knowledge, block-product
/// certificates, orbit reduction for generator-presented groups.
Verdict classify(int g, int n, const GroupSpec& group);

enum class SearchMode { Closed, General };

struct NminResult {
    std::optional<int> n;
    std::string route;  // "closed" or the entry name that certified
};

/// Smallest block size n such that the symmetric partition (n repeated m
/// times) certifies: closed mode scans f <= 13 over 2 <= n <= g-2; general
/// mode additionally tries the documented catalog supplements (T at n = g-1,
/// F_{20,8} at (20,4), Ftilde_{22,9} at (22,5)).
NminResult nmin_search(int g, int m, SearchMode mode);

struct DiffRow {
    int g = 0;
    int stored = 0;
    std::optional<int> closed;
    std::optional<int> general;
    std::string general_route;
    std::string annotation;
    bool match = false;
};

/// Recomputed difference-variety thresholds against the stored table, with
/// the documented exceptions annotated.
std::vector<DiffRow> reproduce_diff(int gmin = 10, int gmax = 23);

}  // namespace modquot
