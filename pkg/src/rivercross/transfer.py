"""Counting solutions with plain polynomial algebra.

Populations on the starting bank are tracked as monomial exponents.  One
forward crossing divides by a legal boat load (subtracts its exponent vector),
one return crossing multiplies; after every crossing a clean-up pass discards
monomials encoding unsafe banks.  The iteration alternates forward and back
from the full initial population; the first stage whose forward polynomial
gains a constant term proves the puzzle solvable, and that constant term is
the exact number of shortest solutions.  If no constant term appears within
one stage more than the number of legal states, no solution exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .puzzle import SpeciesPuzzle, species_loads, species_state_ok

Exponents = tuple[int, ...]
Polynomial = dict[Exponents, int]


@dataclass(frozen=True)
class TransferOutcome:
    solvable: bool
    crossings: int | None
    count: int | None
    success_index: int | None
    states_bound: int
    iterations_run: int


@dataclass(frozen=True)
class TransferTrace:
    """The polynomials of the first `len(steps)` stages: initial, then (forward, back) pairs."""

    initial: Polynomial
    steps: tuple[tuple[Polynomial, Polynomial], ...]


def crossing_polynomial(sp: SpeciesPuzzle) -> Polynomial:
    """One monomial per legal boat load, each with coefficient 1."""
    return {load: 1 for load in species_loads(sp)}


def cleanup(poly: Polynomial, sp: SpeciesPuzzle, boat_on_start: bool) -> Polynomial:
    """Keep only monomials that encode a safe pair of banks (out-of-range ones die too)."""
    out: Polynomial = {}
    for mono, coeff in poly.items():
        if coeff == 0:
            continue
        if any(e < 0 or e > a for e, a in zip(mono, sp.amounts)):
            continue
        if species_state_ok(sp, mono, boat_on_start):
            out[mono] = coeff
    return out


def transfer_step(poly: Polynomial, sp: SpeciesPuzzle, forward: bool) -> Polynomial:
    """One crossing: shift every monomial by every load, then clean up.

    Forward crossings subtract load vectors (people leave the start bank) and
    clean with the boat on the far side; return crossings add and clean with
    the boat back at the start.
    """
    loads = species_loads(sp)
    amounts = sp.amounts
    acc: Polynomial = {}
    for mono, coeff in poly.items():
        for load in loads:
            if forward:
                shifted = tuple(e - l for e, l in zip(mono, load))
                if any(x < 0 for x in shifted):
                    continue
            else:
                shifted = tuple(e + l for e, l in zip(mono, load))
                if any(x > a for x, a in zip(shifted, amounts)):
                    continue
            acc[shifted] = acc.get(shifted, 0) + coeff
    return cleanup(acc, sp, boat_on_start=not forward)


def legal_state_bound(sp: SpeciesPuzzle) -> int:
    """Number of legal states, which bounds the transfer iteration.

    For puzzles whose bank rule ignores the boat this is the number of legal
    population vectors; otherwise each (vector, boat side) pair counts.
    """
    with_boat = set()
    without_boat = set()
    for vec in product(*(range(a + 1) for a in sp.amounts)):
        if species_state_ok(sp, vec, True):
            with_boat.add(vec)
        if species_state_ok(sp, vec, False):
            without_boat.add(vec)
    if with_boat == without_boat:
        return len(with_boat)
    return len(with_boat) + len(without_boat)


def solve_by_transfer(sp: SpeciesPuzzle) -> TransferOutcome:
    """Run the alternating iteration until a constant term appears or the bound is exhausted."""
    bound = legal_state_bound(sp)
    zero = tuple(0 for _ in sp.amounts)
    here: Polynomial = {sp.amounts: 1}
    limit = bound + 1
    i = 0
    for i in range(1, limit + 1):
        across = transfer_step(here, sp, forward=True)
        constant = across.get(zero, 0)
        if constant:
            return TransferOutcome(
                solvable=True,
                crossings=2 * i - 1,
                count=constant,
                success_index=i,
                states_bound=bound,
                iterations_run=i,
            )
        if not across:
            break
        here = transfer_step(across, sp, forward=False)
    return TransferOutcome(
        solvable=False,
        crossings=None,
        count=None,
        success_index=None,
        states_bound=bound,
        iterations_run=i,
    )


def transfer_trace(sp: SpeciesPuzzle, stages: int) -> TransferTrace:
    """Compute the first `stages` (forward, back) polynomial pairs for inspection."""
    if stages < 0:
        raise ValueError("stages must be non-negative")
    here: Polynomial = {sp.amounts: 1}
    initial = dict(here)
    steps = []
    for _ in range(stages):
        across = transfer_step(here, sp, forward=True)
        here = transfer_step(across, sp, forward=False)
        steps.append((across, here))
    return TransferTrace(initial, tuple(steps))


def monomial_sort_key(mono: Exponents) -> tuple:
    """Descending total degree, then descending lexicographic exponent order."""
    return (-sum(mono), tuple(-e for e in mono))


def format_polynomial(poly: Polynomial, variables: tuple[str, ...] | None = None) -> str:
    """Render a polynomial deterministically, highest-degree monomials first."""
    if not poly:
        return "0"
    k = len(next(iter(poly)))
    names = variables if variables is not None else tuple(f"x{i + 1}" for i in range(k))
    parts = []
    for mono in sorted(poly, key=monomial_sort_key):
        coeff = poly[mono]
        factors = []
        for name, e in zip(names, mono):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        if not factors:
            term = str(abs(coeff))
        elif abs(coeff) == 1:
            term = "*".join(factors)
        else:
            term = "*".join([str(abs(coeff))] + factors)
        if not parts:
            parts.append(term if coeff > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if coeff > 0 else f"- {term}")
    return " ".join(parts)
