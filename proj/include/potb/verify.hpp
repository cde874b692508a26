#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "potb/incidence.hpp"
#include "potb/plan.hpp"

namespace potb {

// Orthogonality through the block factor for one ordered factor pair:
// holds iff k * N_ij == L_i * L_j'.  The residual is the difference, kept
// as the failure witness.
struct OtbStatus {
    int i = 0;
    int j = 0;
    bool holds = false;
    IMat residual;
};

// Concurrence structure of one factor's level-in-block incidence matrix.
struct BlockDesignClass {
    enum class Kind { BIBD, GDD, EquireplicateOther, Other };
    Kind kind = Kind::Other;
    // BIBD parameters (v, b, r, k, lambda); v, b, r, k also filled for GDD.
    long long v = 0, b = 0, r = 0, k = 0, lambda = 0;
    // GDD parameters: level-index groups plus the two concurrence counts,
    // lambda1 within a group, lambda2 across groups.
    std::vector<std::vector<int>> groups;
    long long lambda1 = 0, lambda2 = 0;
};

struct SaturationStatus {
    bool saturated = false;
    long long n = 0, b = 0;
    long long model_df = 0;   // n - b
    long long factor_df = 0;  // sum of (appearing levels - 1)
};

struct PergolaStatus {
    int i = 0;
    int j = 0;
    bool holds = false;
    long long f = 0, g = 0;
};

struct ClaimResult {
    std::string claim;
    bool pass = false;
    std::string detail;
};

struct FactorReport {
    BlockDesignClass design;
    int adjusted_rank = -1;  // rank of the factor's fully adjusted information matrix
    int levels_declared = 0;
    int levels_present = 0;
    bool connected = false;  // adjusted_rank == levels_declared - 1
};

struct VerificationReport {
    bool potb = false;
    std::vector<OtbStatus> otb;                   // all unordered pairs, i < j
    std::vector<std::vector<int>> classes;        // derived orthogonal classes
    std::vector<FactorReport> per_factor;
    SaturationStatus saturation;
    std::vector<PergolaStatus> pergola;           // all unordered pairs, i < j
    bool connected = false;
    bool degenerate = false;  // some declared level never runs; ranks unavailable
    std::vector<ClaimResult> claims;
};

OtbStatus check_otb(const Plan& p, int i, int j);
OtbStatus check_otb(const IncidenceSet& inc, int block_size, int i, int j);

// True plus the list of failing pairs (empty iff a POTB).
std::pair<bool, std::vector<std::pair<int, int>>> check_potb(const Plan& p);

// Connected components of the graph whose edges are the non-orthogonal
// pairs: the finest partition with all cross-class pairs orthogonal through
// the block factor.  Classes are sorted by smallest member.
std::vector<std::vector<int>> derive_classes(const Plan& p);

// Classify L's concurrence LL': BIBD when the diagonal is constant r and the
// off-diagonal constant lambda with 1 <= lambda < r; GDD when off-diagonal
// concurrences take exactly two values and the smaller one induces a
// partition into equal-size complete groups; otherwise Equireplicate/Other.
BlockDesignClass classify_block_design(const IMat& L, long long block_size);

// (f, g) such that NN' = N'N = f*I + g*J, when such integers exist.
std::optional<std::pair<long long, long long>> check_pergola(const IMat& N);

// Rank of each factor's information matrix adjusted for blocks and all
// other factors, by exact rational elimination on the block-adjusted Gram
// matrix.  The plan is connected iff every entry equals that factor's
// declared level count minus one.  DegenerateModel if some declared level
// never appears in a run.
std::vector<int> check_connected(const Plan& p);

SaturationStatus check_saturated(const Plan& p);

// Run every check and evaluate the declared claims.  Grammar, one claim per
// string: potb | piotb(n1,n2;n3,n4;...) with semicolon-separated classes of
// factor names | connected | saturated | balanced | gdd(l1,l2) |
// block_shape(b,k) | factors(m) | levels(s).  Unknown claims raise
// ParseError.
VerificationReport full_report(const Plan& p, const std::vector<std::string>& claims = {});

std::string describe(const BlockDesignClass& c);

}  // namespace potb
