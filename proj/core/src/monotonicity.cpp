#include "pscvote/monotonicity.hpp"

#include <algorithm>
#include <cassert>

#include "pscvote/phragmen.hpp"

namespace pscvote {

AuditReport audit_psc_set(const Instance& inst, long cap) {
    AuditReport report;
    report.instance_digest = serialize_instance(inst);

    const std::vector<Committee> psc_set = enumerate_psc_committees(inst, cap);
    // Candidates that appear in some PSC committee, paired with the set of
    // perturbations that must preserve them.
    std::vector<char> winning(static_cast<size_t>(inst.num_candidates()), 0);
    for (const Committee& w : psc_set) {
        for (int c : w.members) {
            winning[static_cast<size_t>(c)] = 1;
        }
    }

    const auto& ballots = inst.ballots();
    for (int c = 0; c < inst.num_candidates(); ++c) {
        if (!winning[static_cast<size_t>(c)]) {
            continue;
        }
        for (int line = 0; line < static_cast<int>(ballots.size()); ++line) {
            if (ballots[static_cast<size_t>(line)].ranking.front() == c) {
                continue;
            }
            ++report.perturbations_tested;
            const Instance perturbed = swap_up(inst, line, 1, c);
            bool covered = false;
            for (const Committee& w : enumerate_psc_committees(perturbed, cap)) {
                if (std::binary_search(w.members.begin(), w.members.end(), c)) {
                    covered = true;
                    break;
                }
            }
            if (!covered) {
                report.violations.push_back(
                    {line, c, "in PSC set", "absent from all PSC committees"});
            }
        }
    }
    return report;
}

AuditReport audit_pfr(const Instance& inst) {
    AuditReport report;
    report.instance_digest = serialize_instance(inst);

    const FractionalCommittee base = pfr(inst).first;
    const auto& ballots = inst.ballots();
    for (int line = 0; line < static_cast<int>(ballots.size()); ++line) {
        const auto& ranking = ballots[static_cast<size_t>(line)].ranking;
        for (size_t pos = 1; pos < ranking.size(); ++pos) {
            const int c = ranking[pos];
            ++report.perturbations_tested;
            const Instance perturbed = swap_up(inst, line, 1, c);
            const FractionalCommittee after = pfr(perturbed).first;
            const Rational& p_before = base.probabilities[static_cast<size_t>(c)];
            const Rational& p_after = after.probabilities[static_cast<size_t>(c)];
            if (p_after < p_before) {
                report.violations.push_back({line, c, to_fraction_string(p_before),
                                             to_fraction_string(p_after)});
            }
            // Support-level corollary: positive probability stays positive.
            assert(p_after < p_before || p_before == 0 || p_after > 0);
        }
    }
    return report;
}

}  // namespace pscvote
