"""Hand-crafted crossing schedules with sufficiency conditions.

Each strategy is a constructive recipe: when its condition on the parameters
holds it emits a full move script that the validator accepts, which certifies
the instance solvable without any search.  Scripts are not required to be
minimal.  The conditions are sufficient only; their failure proves nothing.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .puzzle import McParams, Move, bank_ok, validate_params


class Strategy(enum.Enum):
    TWO_BOAT = "TwoBoat"
    BIG_BOAT_1 = "BigBoat1"
    BIG_BOAT_2 = "BigBoat2"
    SPLIT_CANNIBALS = "SplitCannibals"
    SIMULTANEOUS_FERRY = "SimultaneousFerry"
    ZERO_MARGIN_SLACK = "ZeroMarginSlack"
    ZERO_MARGIN_EQUAL_BIG_BOAT = "ZeroMarginEqualBigBoat"


@dataclass(frozen=True)
class Violation:
    index: int
    rule: str
    message: str


def applicability(p: McParams) -> set[Strategy]:
    """The strategies whose sufficiency condition holds for p."""
    validate_params(p)
    m, c, b, d = p
    found = set()
    if m - c >= 2 * d + 3:
        found.add(Strategy.TWO_BOAT)
    if b >= c + d + 1:
        found.add(Strategy.BIG_BOAT_1)
    if b >= m and c >= 2:
        found.add(Strategy.BIG_BOAT_2)
    if m - c >= 2 * d + 1 and b > (c + 1) // 2 + d + 1:
        found.add(Strategy.SPLIT_CANNIBALS)
    # The ferry cycle returns d people, so it degenerates at d = 0 (an empty
    # boat may not cross); the margin must be positive for the recipe to exist.
    if d >= 1 and m - c >= 3 * d and b >= d + 2:
        found.add(Strategy.SIMULTANEOUS_FERRY)
    if d == 0 and m > c:
        found.add(Strategy.ZERO_MARGIN_SLACK)
    # The equal-population recipe ships pairs, so it needs at least 2 of each.
    if d == 0 and m == c and b >= 4 and m >= 2:
        found.add(Strategy.ZERO_MARGIN_EQUAL_BIG_BOAT)
    return found


def build_strategy(p: McParams, strategy: Strategy) -> tuple[Move, ...] | None:
    """Emit the move script for one strategy, or None when its condition fails."""
    if strategy not in applicability(p):
        return None
    builder = {
        Strategy.TWO_BOAT: _two_boat,
        Strategy.BIG_BOAT_1: _big_boat_1,
        Strategy.BIG_BOAT_2: _big_boat_2,
        Strategy.SPLIT_CANNIBALS: _split_cannibals,
        Strategy.SIMULTANEOUS_FERRY: _simultaneous_ferry,
        Strategy.ZERO_MARGIN_SLACK: _zero_margin_slack,
        Strategy.ZERO_MARGIN_EQUAL_BIG_BOAT: _zero_margin_equal_big_boat,
    }[strategy]
    return _trim_at_goal(p, builder(p))


def validate_solution(p: McParams, moves: tuple[Move, ...]) -> Violation | None:
    """Simulate a move script from the initial state; None means fully legal and complete."""
    m, c, boat = p.missionaries, p.cannibals, 1
    for idx, mv in enumerate(moves):
        e1, e2 = mv.missionaries, mv.cannibals
        if e1 < 0 or e2 < 0:
            return Violation(idx, "load-range", f"negative load {mv.render()}")
        if e1 + e2 == 0:
            return Violation(idx, "empty-boat", "the boat cannot cross empty")
        if e1 + e2 > p.boat_capacity:
            return Violation(
                idx, "boat-capacity",
                f"load {mv.render()} exceeds capacity {p.boat_capacity}")
        if e1 > 0 and e2 > 0 and e1 - e2 < p.safety_margin:
            return Violation(
                idx, "boat-balance",
                f"load {mv.render()} violates the margin {p.safety_margin}")
        if mv.forward != (boat == 1):
            return Violation(idx, "boat-side", "move direction does not match the boat's bank")
        if mv.forward:
            if e1 > m or e2 > c:
                return Violation(idx, "availability", "not enough people on the start bank")
            m, c = m - e1, c - e2
        else:
            if e1 > p.missionaries - m or e2 > p.cannibals - c:
                return Violation(idx, "availability", "not enough people on the far bank")
            m, c = m + e1, c + e2
        boat = 1 - boat
        if not (bank_ok(p, m, c) and bank_ok(p, p.missionaries - m, p.cannibals - c)):
            return Violation(
                idx, "bank-balance",
                f"state {(m, c, boat)} leaves missionaries outnumbered beyond the margin")
    if (m, c, boat) != (0, 0, 0):
        return Violation(len(moves), "incomplete", f"script ends at {(m, c, boat)}, not the goal")
    return None


# ---------------------------------------------------------------------------
# Script builders.  Each tracks the start-bank population while emitting moves;
# correctness is certified by validate_solution, exercised in the test sweep.
# ---------------------------------------------------------------------------


class _Script:
    def __init__(self, p: McParams):
        self.p = p
        self.m = p.missionaries
        self.c = p.cannibals
        self.moves: list[Move] = []

    def forward(self, e1: int, e2: int) -> None:
        self.moves.append(Move(e1, e2, True))
        self.m -= e1
        self.c -= e2

    def back(self, e1: int, e2: int) -> None:
        self.moves.append(Move(e1, e2, False))
        self.m += e1
        self.c += e2

    def done(self) -> tuple[Move, ...]:
        return tuple(self.moves)


def _two_boat(p: McParams) -> tuple[Move, ...]:
    """Two people per trip: drain surplus missionaries, then shuttle cannibals across."""
    m_, c_, b_, d = p
    s = _Script(p)
    for _ in range(m_ - c_ - d - 1):
        s.forward(2, 0)
        s.back(1, 0)
    while s.c > 1:
        s.forward(0, 2)
        s.back(0, 1)
        s.forward(2, 0)
        s.back(1, 0)
    s.forward(0, 1)
    while s.m > 0:
        s.back(1, 0)
        s.forward(2, 0)
    return s.done()


def _big_boat_1(p: McParams) -> tuple[Move, ...]:
    """Boat dominates the cannibals: ship every missionary, then let cannibals self-ferry."""
    m_, c_, b_, d = p
    s = _Script(p)
    for _ in range(max(0, m_ - c_ - d - 1)):
        s.forward(2, 0)
        s.back(1, 0)
    s.forward(s.m, 0)
    # A dominant group must row back to fetch the boat for the cannibals.
    escort = min(b_ - 1, m_)
    s.back(escort, 0)
    s.forward(escort, 1)
    s.back(0, 1)
    while s.c > 0:
        s.forward(0, min(b_, s.c))
        if s.c > 0:
            s.back(0, 1)
    return s.done()


def _big_boat_2(p: McParams) -> tuple[Move, ...]:
    """Boat fits every missionary at once."""
    m_, c_, b_, d = p
    s = _Script(p)
    s.forward(0, 2)
    s.back(0, 1)
    s.forward(m_, 0)
    s.back(0, 1)
    while s.c > 0:
        s.forward(0, min(b_, s.c))
        if s.c > 0:
            s.back(0, 1)
    return s.done()


def _split_cannibals(p: McParams) -> tuple[Move, ...]:
    """Ship half the cannibals first, then all missionaries, then the rest."""
    m_, c_, b_, d = p
    s = _Script(p)
    half = (c_ + 1) // 2
    s.forward(0, half)
    s.back(0, 1)
    s.forward(half + d + 1, 1)  # the returning cannibal rides with the missionary block
    floor = (c_ - half) + d
    while s.m > 0:
        s.back(1, 0)
        if s.m <= b_:
            s.forward(s.m, 0)
        else:
            s.forward(min(b_, s.m - floor), 0)
    while s.c > 0:
        s.back(0, 1)
        s.forward(0, min(b_, s.c))
    return s.done()


def _simultaneous_ferry(p: McParams) -> tuple[Move, ...]:
    """Park a standing surplus across, then cycle one cannibal over per round trip."""
    m_, c_, b_, d = p
    s = _Script(p)
    s.forward(d + 1, 0)
    s.back(1, 0)
    while s.c > 0:
        s.forward(d + 1, 1)
        s.back(d, 0)
    while s.m > 0:
        s.forward(min(b_, s.m), 0)
        if s.m > 0:
            s.back(1, 0)
    return s.done()


def _zero_margin_slack(p: McParams) -> tuple[Move, ...]:
    """No margin and spare missionaries: drain the slack, then walk pairs down."""
    s = _Script(p)
    while s.m > s.c:
        s.forward(1, 1)
        s.back(0, 1)
    while s.c >= 2:
        s.forward(1, 1)
        s.back(1, 0)
        s.forward(1, 1)
        s.back(0, 1)
    s.forward(1, 1)
    return s.done()


def _zero_margin_equal_big_boat(p: McParams) -> tuple[Move, ...]:
    """Equal populations, roomy boat: pairs out, singles back, 2n-3 moves total."""
    s = _Script(p)
    while s.m > 2:
        s.forward(2, 2)
        s.back(1, 1)
    s.forward(2, 2)
    return s.done()


def _trim_at_goal(p: McParams, moves: tuple[Move, ...]) -> tuple[Move, ...]:
    """Cut a script at the first moment everyone is across (some recipes overshoot)."""
    m, c, boat = p.missionaries, p.cannibals, 1
    for idx, mv in enumerate(moves):
        sign = -1 if mv.forward else 1
        m += sign * mv.missionaries
        c += sign * mv.cannibals
        boat = 1 - boat
        if (m, c, boat) == (0, 0, 0):
            return moves[: idx + 1]
    return moves
