"""Puzzle model: parameters, bank states, legal moves, and state graphs.

The classic instance has a crew of missionaries and cannibals crossing a river
in a small boat.  A state records how many of each group stand on the starting
bank and where the boat is.  Wherever missionaries and cannibals share a bank
(or the boat), the missionaries must outnumber the cannibals by at least the
safety margin.  A generic multi-species puzzle covers variants such as
wolf-goat-cabbage through caller-supplied bank and boat predicates.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, NamedTuple

from .digraph import Digraph, all_shortest_paths


class McParams(NamedTuple):
    missionaries: int
    cannibals: int
    boat_capacity: int
    safety_margin: int = 0


class BankState(NamedTuple):
    """Population of the starting bank plus boat position (1 = start bank, 0 = far bank)."""

    missionaries: int
    cannibals: int
    boat: int


class Move(NamedTuple):
    """One boat crossing: who is aboard and which way it sails."""

    missionaries: int
    cannibals: int
    forward: bool

    def render(self) -> str:
        sign = "" if self.forward else "-"
        return f"{sign}({self.missionaries},{self.cannibals})"


StatePath = tuple[BankState, ...]


class ParamError(ValueError):
    """Invalid puzzle parameters; `code` names the violated constraint."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


def validate_params(p: McParams) -> None:
    """Raise ParamError unless p describes a well-posed puzzle instance."""
    if p.missionaries < 1:
        raise ParamError("missionaries", f"need at least 1 missionary, got {p.missionaries}")
    if p.cannibals < 1:
        raise ParamError("cannibals", f"need at least 1 cannibal, got {p.cannibals}")
    if p.boat_capacity < 2:
        raise ParamError("boat-capacity", f"boat must hold at least 2, got {p.boat_capacity}")
    if p.missionaries - p.cannibals < p.safety_margin:
        raise ParamError(
            "initial-state",
            f"initial state is illegal: surplus {p.missionaries - p.cannibals} "
            f"is below the safety margin {p.safety_margin}",
        )


def bank_ok(p: McParams, m: int, c: int) -> bool:
    """Bank rule: with both groups present, missionaries lead by at least the margin."""
    return not (m > 0 and c > 0 and m - c < p.safety_margin)


def is_legal_state(p: McParams, s: BankState) -> bool:
    """True when both banks satisfy the outnumbering rule.  Rejects out-of-range states."""
    m, c, boat = s
    if not (0 <= m <= p.missionaries and 0 <= c <= p.cannibals and boat in (0, 1)):
        raise ValueError(f"state {tuple(s)} out of range for {tuple(p)}")
    return bank_ok(p, m, c) and bank_ok(p, p.missionaries - m, p.cannibals - c)


def legal_boat_loads(p: McParams) -> tuple[tuple[int, int], ...]:
    """Every load (e1 missionaries, e2 cannibals) the boat may carry, in (e1, e2) order."""
    out = []
    for e1 in range(p.boat_capacity + 1):
        for e2 in range(p.boat_capacity - e1 + 1):
            if e1 + e2 == 0:
                continue
            if e1 > 0 and e2 > 0 and e1 - e2 < p.safety_margin:
                continue
            out.append((e1, e2))
    return tuple(sorted(out))


def legal_moves(p: McParams, s: BankState) -> list[tuple[Move, BankState]]:
    """All legal crossings from state s with the states they lead to, sorted by load."""
    if not is_legal_state(p, s):
        raise ValueError(f"state {tuple(s)} is not legal")
    m, c, boat = s
    forward = boat == 1
    out = []
    for e1, e2 in legal_boat_loads(p):
        if forward:
            nm, nc = m - e1, c - e2
        else:
            nm, nc = m + e1, c + e2
        if not (0 <= nm <= p.missionaries and 0 <= nc <= p.cannibals):
            continue
        nxt = BankState(nm, nc, 1 - boat)
        if is_legal_state(p, nxt):
            out.append((Move(e1, e2, forward), nxt))
    return out


# ---------------------------------------------------------------------------
# Generic multi-species puzzles
# ---------------------------------------------------------------------------

BankRule = Callable[[tuple[int, ...], bool], bool]
BoatRule = Callable[[tuple[int, ...]], bool]


@dataclass(frozen=True)
class SpeciesPuzzle:
    """A k-species river crossing.

    `bank_rule(populations, boat_present)` decides whether a bank holding the
    given populations is safe; `boat_rule(load)` decides whether a nonzero load
    may ride the boat (loads are already size-limited by `boat_capacity`).
    `allow_empty_boat` lets the boat cross with no cargo, which puzzles with an
    implicit ferryman (wolf-goat-cabbage) require.
    """

    names: tuple[str, ...]
    amounts: tuple[int, ...]
    boat_capacity: int
    bank_rule: BankRule
    boat_rule: BoatRule
    allow_empty_boat: bool = False

    @property
    def species_count(self) -> int:
        return len(self.amounts)


SpeciesState = tuple[tuple[int, ...], int]  # (populations on start bank, boat flag)


def species_loads(sp: SpeciesPuzzle) -> tuple[tuple[int, ...], ...]:
    """All boat loads the puzzle admits, in ascending lexicographic order."""
    k = sp.species_count
    out = []
    for load in product(range(sp.boat_capacity + 1), repeat=k):
        total = sum(load)
        if total > sp.boat_capacity:
            continue
        if total == 0:
            if sp.allow_empty_boat:
                out.append(load)
            continue
        if sp.boat_rule(load):
            out.append(load)
    return tuple(out)


def species_state_ok(sp: SpeciesPuzzle, populations: tuple[int, ...], boat_on_start: bool) -> bool:
    """Both banks safe for the given start-bank populations and boat side."""
    far = tuple(a - v for a, v in zip(sp.amounts, populations))
    return sp.bank_rule(populations, boat_on_start) and sp.bank_rule(far, not boat_on_start)


def mc_species(p: McParams) -> SpeciesPuzzle:
    """The missionaries-and-cannibals instance expressed as a two-species puzzle."""
    margin = p.safety_margin

    def bank_rule(v: tuple[int, ...], boat_present: bool) -> bool:
        m, c = v
        return not (m > 0 and c > 0 and m - c < margin)

    def boat_rule(load: tuple[int, ...]) -> bool:
        e1, e2 = load
        return not (e1 > 0 and e2 > 0 and e1 - e2 < margin)

    return SpeciesPuzzle(
        names=("missionaries", "cannibals"),
        amounts=(p.missionaries, p.cannibals),
        boat_capacity=p.boat_capacity,
        bank_rule=bank_rule,
        boat_rule=boat_rule,
    )


def wolf_goat_cabbage() -> SpeciesPuzzle:
    """The wolf, goat, and cabbage puzzle: goat never left alone with either neighbor."""

    def bank_rule(v: tuple[int, ...], boat_present: bool) -> bool:
        if boat_present:
            return True
        wolf, goat, cabbage = v
        return not (goat and (wolf or cabbage))

    def boat_rule(load: tuple[int, ...]) -> bool:
        return True

    return SpeciesPuzzle(
        names=("wolf", "goat", "cabbage"),
        amounts=(1, 1, 1),
        boat_capacity=1,
        bank_rule=bank_rule,
        boat_rule=boat_rule,
        allow_empty_boat=True,
    )


def species_graph(sp: SpeciesPuzzle) -> tuple[Digraph, tuple[SpeciesState, ...]]:
    """State graph of a species puzzle.

    Vertex 1 is the initial state (everyone and the boat on the start bank),
    vertex n the goal (everyone and the boat across); the remaining states sit
    between them in lexicographic order, so numbering is reproducible.
    """
    initial: SpeciesState = (sp.amounts, 1)
    goal: SpeciesState = (tuple(0 for _ in sp.amounts), 0)
    if not species_state_ok(sp, sp.amounts, True):
        raise ValueError("initial position violates the bank rule")

    states = set()
    for vec in product(*(range(a + 1) for a in sp.amounts)):
        for flag in (0, 1):
            if species_state_ok(sp, vec, flag == 1):
                states.add((vec, flag))
    middle = sorted(states - {initial, goal})
    ordered = (initial, *middle, goal)
    index = {state: i + 1 for i, state in enumerate(ordered)}

    loads = species_loads(sp)
    rows = []
    for vec, flag in ordered:
        row = []
        for load in loads:
            if flag == 1:
                nxt = tuple(v - l for v, l in zip(vec, load))
                if any(x < 0 for x in nxt):
                    continue
            else:
                nxt = tuple(v + l for v, l in zip(vec, load))
                if any(x > a for x, a in zip(nxt, sp.amounts)):
                    continue
            j = index.get((nxt, 1 - flag))
            if j is not None:
                row.append(j)
        rows.append(tuple(sorted(set(row))))
    return Digraph(tuple(rows)), ordered


def mc_graph(p: McParams) -> tuple[Digraph, tuple[BankState, ...]]:
    """State graph of an MC instance; vertex i maps to the i-th returned BankState."""
    validate_params(p)
    graph, raw = species_graph(mc_species(p))
    states = tuple(BankState(vec[0], vec[1], flag) for vec, flag in raw)
    return graph, states


def solve_species(sp: SpeciesPuzzle) -> tuple[int, tuple[tuple[SpeciesState, ...], ...]] | None:
    """All shortest solutions of a species puzzle as state sequences, or None."""
    graph, states = species_graph(sp)
    found = all_shortest_paths(graph, 1, graph.n)
    if found is None:
        return None
    decoded = sorted(tuple(states[v - 1] for v in path) for path in found.paths)
    return found.length, tuple(decoded)


def solve_mc(p: McParams) -> tuple[int, tuple[StatePath, ...]] | None:
    """All shortest MC solutions, sorted lexicographically by state sequence, or None."""
    graph, states = mc_graph(p)
    found = all_shortest_paths(graph, 1, graph.n)
    if found is None:
        return None
    decoded = sorted(tuple(states[v - 1] for v in path) for path in found.paths)
    return found.length, tuple(decoded)


# ---------------------------------------------------------------------------
# Bridging between state paths and move scripts
# ---------------------------------------------------------------------------


def path_to_moves(path: StatePath) -> tuple[Move, ...]:
    """Read the crossing sequence off a state path."""
    moves = []
    for a, b in zip(path, path[1:]):
        forward = a.boat == 1
        e1 = a.missionaries - b.missionaries if forward else b.missionaries - a.missionaries
        e2 = a.cannibals - b.cannibals if forward else b.cannibals - a.cannibals
        moves.append(Move(e1, e2, forward))
    return tuple(moves)


def moves_to_path(p: McParams, moves: tuple[Move, ...]) -> StatePath:
    """Replay a move script from the initial state, returning every state visited."""
    m, c, boat = p.missionaries, p.cannibals, 1
    out = [BankState(m, c, boat)]
    for mv in moves:
        sign = -1 if mv.forward else 1
        m += sign * mv.missionaries
        c += sign * mv.cannibals
        boat = 1 - boat
        out.append(BankState(m, c, boat))
    return tuple(out)


def check_solution_path(p: McParams, path: StatePath) -> None:
    """Raise ValueError at the first defect of a purported solution path."""
    initial = BankState(p.missionaries, p.cannibals, 1)
    goal = BankState(0, 0, 0)
    if not path or path[0] != initial:
        raise ValueError("index 0: path must start at the initial state")
    seen = {path[0]}
    for i, (a, b) in enumerate(zip(path, path[1:])):
        legal_targets = {nxt for _, nxt in legal_moves(p, a)}
        if b not in legal_targets:
            raise ValueError(f"index {i}: no legal crossing from {tuple(a)} to {tuple(b)}")
        if b in seen:
            raise ValueError(f"index {i + 1}: state {tuple(b)} repeats")
        seen.add(b)
    if path[-1] != goal:
        raise ValueError(f"index {len(path) - 1}: path ends at {tuple(path[-1])}, not the goal")


def spell_out(p: McParams, path: StatePath) -> str:
    """Spell a solution out crossing by crossing, ending with a completion line."""
    check_solution_path(p, path)
    lines = []
    for i, move in enumerate(path_to_moves(path), start=1):
        after = path[i]
        total = move.missionaries + move.cannibals
        verb = "crosses" if total == 1 else "cross"
        where = "to the far bank" if move.forward else "back to the start bank"
        lines.append(
            f"{i}. {_load_text(move)} {verb} {where}; "
            f"start bank: {_crew_text(after.missionaries, after.cannibals)}; "
            f"far bank: {_crew_text(p.missionaries - after.missionaries, p.cannibals - after.cannibals)}."
        )
    crossings = len(path) - 1
    lines.append(
        f"done: all {_plural(p.missionaries, 'missionary', 'missionaries')} and "
        f"{_plural(p.cannibals, 'cannibal', 'cannibals')} are on the far bank after "
        f"{_plural(crossings, 'crossing', 'crossings')}."
    )
    return "\n".join(lines)


def _plural(n: int, singular: str, plural: str) -> str:
    return f"{n} {singular if n == 1 else plural}"


def _load_text(move: Move) -> str:
    parts = []
    if move.missionaries:
        parts.append(_plural(move.missionaries, "missionary", "missionaries"))
    if move.cannibals:
        parts.append(_plural(move.cannibals, "cannibal", "cannibals"))
    return " and ".join(parts)


def _crew_text(m: int, c: int) -> str:
    return (f"{_plural(m, 'missionary', 'missionaries')}, "
            f"{_plural(c, 'cannibal', 'cannibals')}")
