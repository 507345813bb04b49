#pragma once

#include "coprod/io/json_io.hpp"
#include "coprod/separation/pipeline.hpp"

#include <string>
#include <vector>

namespace coprod {

/// Self-contained certificate JSON (embeds both group tables).
Json certificate_to_json(const SeparationCertificate& cert);

/// Outcome of replaying a certificate. Checks run in a fixed order and stop
/// at the first failure, since later checks rely on earlier ones.
struct VerifyReport {
    struct Check {
        std::string name;
        bool passed = false;
        std::string detail;
    };
    std::vector<Check> checks;

    [[nodiscard]] bool passed() const;
    /// nullptr when everything passed.
    [[nodiscard]] const Check* first_failure() const;
};

/// Re-checks a certificate using Z/p arithmetic only: schema, group tables,
/// prime validity (p prime, p ∤ D_s), image shapes, the product ρ_{s,p}(w),
/// factor homomorphisms, every recorded inequation, the factorial power and
/// the closure size when present.
VerifyReport verify_certificate(const Json& cert);

}  // namespace coprod
