#ifndef BIGENIC_LEMMAS_HPP
#define BIGENIC_LEMMAS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "bigenic/gadget.hpp"

namespace bigenic {

/// One checked claim. A violated claim always carries a machine-checkable
/// counter-witness (an assignment, colouring or induced embedding) in
/// JSON form.
struct Claim {
    std::string name;
    bool holds = false;
    nlohmann::json witness;
};

struct VerificationReport {
    std::string lemma;
    NaeInstance instance;
    std::vector<Claim> claims;
    std::int64_t elapsed_ms = 0;

    bool all_hold() const;
};

/// Satisfiability of the instance, list-colourability of G1 and of G2 are
/// all equivalent; checks both biconditionals by running the solvers.
VerificationReport verify_lemma1(const NaeInstance& inst);

/// Satisfiability, 2n-colourability of G1' and of G2' are all equivalent.
VerificationReport verify_lemma2(const NaeInstance& inst);

/// G1' has no induced 2P2, co-3P2 or co-T_{0,2,2}; checked directly and,
/// as a cross-check, on the complement side against C4, 3P2, T_{0,2,2}.
VerificationReport verify_lemma3(const NaeInstance& inst);

/// G2' has no induced 2P2, co-2C3, co-(C3+P4), co-2P4 or co-T_{0,0,4};
/// direct and complement-side searches as in verify_lemma3.
VerificationReport verify_lemma4(const NaeInstance& inst);

/// Deterministic instance generator: for each instance the variable count
/// is drawn from [3, max_vars] and the clause count from
/// [1, min(max_clauses, C(n,3))], then that many distinct clauses are
/// sampled uniformly without replacement. Identical seeds give identical
/// instances on every platform.
std::vector<NaeInstance> random_instances(int count, int max_vars,
                                          int max_clauses,
                                          std::uint64_t seed);

nlohmann::json instance_json(const NaeInstance& inst);
nlohmann::json report_json(const VerificationReport& report,
                           bool include_timing = false);

/// Schema-versioned envelope for a batch of reports. Timings are left out
/// by default so identical runs emit identical bytes.
nlohmann::json emit_report(std::span<const VerificationReport> reports,
                           bool include_timings = false);

} // namespace bigenic

#endif
