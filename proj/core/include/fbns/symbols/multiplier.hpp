#pragma once

#include "fbns/params.hpp"
#include "fbns/symbols/symbols.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace fbns::symbols {

using SymbolFn = std::function<cplx(double xi1, double xi2, cplx lambda)>;

/// Immutable table of audited symbols. Ids:
///   "A^s", "B^s", "D^s" (power = s), "xi1/|xi|", "xi1", "1/B",
///   "A*B", "B/D", and the boundary-formula fractions
///   "bf:xxB/AD", "bf:ix(B2+A2)/AD", "bf:xx(3B-A)/BD", "bf:ix(B-A)/D",
///   "bf:ixB/D", "bf:(B2+A2)/D", "bf:A(B+A)/D".
class MultiplierRegistry {
public:
    static const MultiplierRegistry& instance();
    bool contains(const std::string& id) const;
    /// Symbol with the exponent bound in (only used by the power ids).
    SymbolFn get(const std::string& id, double power, double mu = 1.0) const;
    std::vector<std::string> ids() const;

private:
    MultiplierRegistry() = default;
};

struct AuditSpec {
    double xi_min = 1e-2;
    double xi_max = 1e4;
    double lambda_max = 1e8;
    std::size_t sample_budget = 2000;
    std::uint64_t seed = 12345;
    double mu = 1.0;
};

struct AuditRow {
    std::array<int, 2> alpha{0, 0};
    bool tau_derivative = false;
    double constant = 0.0;
    std::array<double, 2> argmax_xi{0.0, 0.0};
    cplx argmax_lambda{0.0};
};

struct AuditResult {
    std::string symbol_id;
    double order = 0.0;
    int type = 1;
    double power = 0.0;
    std::vector<AuditRow> rows;
    double constant = 0.0;  ///< max over rows
    std::size_t worst_row = 0;
};

/// Sampled sup of |d^alpha m| (|lambda|^{1/2} + |xi|)^{|alpha| - s} (type 1)
/// or |d^alpha m| |xi|^{|alpha|} (|lambda|^{1/2} + |xi|)^{-s} (type 2) over
/// |alpha| <= 2, plus the tau d/dtau rows with lambda = gamma + i tau.
AuditResult multiplier_bound_estimate(const std::string& symbol_id, double s, int type, const SectorSpec& sector,
                                      const AuditSpec& spec, double power);
AuditResult multiplier_bound_estimate(const SymbolFn& m, const std::string& label, double s, int type,
                                      const SectorSpec& sector, const AuditSpec& spec);

/// symbol_id,s,type,alpha1,alpha2,tau,constant,xi1,xi2,lambda_re,lambda_im
void write_audit_csv(std::ostream& os, const std::vector<AuditResult>& results, bool header = true);

} // namespace fbns::symbols
