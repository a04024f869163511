#pragma once

#include "thyp/identities.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace thyp {

// Unknown registry id, mutation or parameter name.
struct UsageError : std::invalid_argument {
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

enum class VerifyMode { Parametric, Sampled };
std::string mode_name(VerifyMode m);
VerifyMode parse_mode(const std::string& s);

struct IdentityCase {
    std::string id;
    std::string description;
    std::string ring;                 // declared coefficient ring
    std::vector<int> free_slots;      // parameters carried symbolically
    std::vector<std::string> shape;   // integer parameters the builder reads
    std::vector<Mutation> mutations;  // corruptions the builder supports
    int default_order = 12;
    IdentityParams defaults;
    // Multiplier m such that m a in Z is excluded, 0 when nothing is screened.
    std::function<int(const IdentityParams&)> screen;
    // Degree n entering the sample bound.
    std::function<int(const IdentityParams&)> degree_n;
    std::function<Sides(const IdentityParams&, int)> build;
};

// Registry in id order.
const std::vector<IdentityCase>& list_identities();
// Throws UsageError for an unknown id.
const IdentityCase& find_identity(const std::string& id);

// Raises ConstraintError when a fixed value of a is screened out.
void screen_params(const IdentityCase& c, const IdentityParams& ip);

Sides build_sides(const std::string& id, const IdentityParams& ip, int N);

// Degree bound d for SAMPLED mode; the plan draws d + 1 points.
int sample_degree_bound(const std::string& id, const IdentityParams& ip, int N);
int sample_plan(const std::string& id, const IdentityParams& ip, int N);

// Coefficient ring actually used by the sides.
std::string ring_of(const Sides& s);

struct SampleInfo {
    int count = 0;
    int degree_bound = 0;
    std::string status;  // "deterministic under degree bound" or "probabilistic"
    bool operator==(const SampleInfo&) const = default;
};

struct VerifyReport {
    std::string id;
    VerifyMode mode = VerifyMode::Parametric;
    int order = 0;
    bool pass = false;
    int mismatch_order = -1;
    std::string mismatch_value;
    std::string ring;
    std::vector<std::string> branch_choices;
    double millis = 0;
    std::optional<SampleInfo> samples;
    bool operator==(const VerifyReport&) const = default;
};

struct VerifyJob {
    std::string id;
    IdentityParams params;
    VerifyMode mode = VerifyMode::Parametric;
    int order = -1;  // -1 selects the registry default
    std::uint64_t seed = 1;
};

// Constraint violations propagate as ConstraintError, unknown ids and
// unsupported mutations as UsageError.
VerifyReport verify(const VerifyJob& job);
// Independent jobs, run concurrently when parallel is set; reports are
// returned sorted by id, ties in input order.
std::vector<VerifyReport> verify_batch(const std::vector<VerifyJob>& jobs, bool parallel = true);

std::string report_to_json(const VerifyReport& r);
VerifyReport report_from_json(const std::string& s);

}  // namespace thyp
