#pragma once

// Shared fixture instances used across the suites.

namespace fixtures {

// Four voters, four candidates, k = 2; one coalition of two voters over
// {c1, c2}. Every committee containing c1 or c2 satisfies PSC.
inline constexpr const char* kPscIntro =
    "4 2\n"
    "1: 1 2 3 4\n"
    "1: 2 1 3 4\n"
    "1: 3 4 1 2\n"
    "1: 4 2 1 3\n";

// Ordered rule elects c1 at t = 1/2 and c3 at t = 3/4.
inline constexpr const char* kOrderedEating =
    "4 2\n"
    "1: 1 4 3 2\n"
    "1: 1 3 2 4\n"
    "1: 2 3 4 1\n"
    "1: 3 4 2 1\n";

// Fractional rule gives (1, 1/6, 2/3, 1/6).
inline constexpr const char* kFractionalEating =
    "4 2\n"
    "1: 1 2 3 4\n"
    "1: 1 4 3 2\n"
    "1: 1 3 2 4\n"
    "1: 3 4 2 1\n";

// Fifteen voters, k = 3. The ordered rule elects {c6, c7, c1} and fails
// PSC; the fractional rule gives c6 probability 1 and c1..c5 each 2/5.
inline constexpr const char* kOrderedPscFailure =
    "7 3\n"
    "2: 1 2 3 4 5 6 7\n"
    "2: 2 3 4 5 1 6 7\n"
    "2: 3 4 5 1 2 6 7\n"
    "2: 4 5 1 2 3 6 7\n"
    "2: 5 1 2 3 4 6 7\n"
    "5: 6 7 1 2 3 4 5\n";

// Fractional rule puts mass 1/2 on each of c1, c4, c5, c6 and none on the
// middle candidates c2, c3.
inline constexpr const char* kRankPjrGap =
    "6 2\n"
    "1: 1 2 3 4 5 6\n"
    "1: 5 2 3 4 6 1\n"
    "1: 4 3 2 6 1 5\n"
    "1: 6 3 2 5 1 4\n";

// All voters share one ranking.
inline constexpr const char* kUnanimity =
    "4 2\n"
    "3: 2 4 1 3\n";

}  // namespace fixtures
