"""Exact evaluators and positivity audits for the auxiliary bound functions.

The stability argument behind the constructive generators reduces, case by
case, to the positivity of five explicit binomial expressions (T, U, V, Q, P)
and one polynomial lower bound on a binomial difference.  This module turns
each of those reductions into something executable: evaluate the closed form
exactly on a finite grid and count sign violations.  A passing audit does not
replace the unbounded induction arguments, but any bookkeeping slip in the
case analysis would show up here as a concrete counterexample tuple.

All evaluators return Fraction. The five main functions are integer-valued
on integer arguments once the factorials clear, but exact rationals cost
nothing and remove any temptation to round.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Iterable, Iterator, Sequence

from .monomials import binomial


def eval_T(N: int, d: int, gcd_degree: int, r: int, l: int) -> Fraction:
    """Lower bound for the margin of a subset meeting r whole faces and a
    partial layer of depth l, when the subset gcd has degree gcd_degree <= l.

    Positive on 1 <= gcd_degree <= l <= d-r-1, 1 <= r <= min(d-1, N), N >= 3.
    """
    e = gcd_degree
    value = (
        (d - e) * (binomial(d + N, N) - binomial(d - r + N, N) + binomial(l + N - 1, N - 1))
        + e
        - d
        * (
            binomial(d - e + N, N)
            - binomial(d - e - r + N, N)
            + binomial(l - e + N - 1, N - 1)
        )
        - e * binomial(l - e + N - 1, N - 2)
    )
    return Fraction(value)


def eval_U(N: int, d: int, r: int, l: int) -> Fraction:
    """Lower bound for the same margins when the subset gcd degree exceeds l.

    Positive on 0 <= l <= d-r-1, 1 <= r <= min(d-1, N), N >= 3.
    """
    value = (d - l - 1) * (
        binomial(d + N, N) - binomial(d - r + N, N) + binomial(l + N - 1, N - 1)
    ) - d * (binomial(d - l - 1 + N, N) - binomial(d - l - 1 - r + N, N))
    return Fraction(value)


def eval_V(d: int, gcd_degree: int, N: int) -> Fraction:
    """Margin lower bound for the faces-plus-dots families.

    Positive on 1 <= gcd_degree <= d-N, d >= N+2, N >= 3; as a function of
    the gcd degree it is concave, so grid minima sit at interval endpoints.
    """
    e = gcd_degree
    value = (d - e) * (binomial(d + N, N) - binomial(d - 1, N)) - d * (
        binomial(d - e + N, N) - binomial(d - e, N)
    )
    return Fraction(value)


def eval_Q(N: int, d: int, gcd_degree: int, t: int) -> Fraction:
    """Face contribution to the margin in the interior-recursion argument.

    t counts the zero exponents of the subset gcd; admissible pairs satisfy
    max(0, N+1-gcd_degree) <= t <= N with 1 <= gcd_degree <= d-1, d >= N+2.
    Nonincreasing in t; positive on the admissible grid.
    """
    e = gcd_degree
    value = (
        (d - e) * (binomial(d + N, N) - binomial(d - 1, N))
        - d * binomial(d - e + N, N)
        + (d - N - 1 + t) * binomial(d - e + N - t, N)
    )
    return Fraction(value)


def eval_P(n_prime: int, k_prime: int, N: int, d: int, gcd_degree: int, i: int) -> Fraction:
    """Interior contribution to the margin in the interior-recursion argument.

    Nonnegative whenever k_prime is at most binomial(d - gcd_degree + N - i, N),
    the largest number of interior members the lifted gcd can divide.
    """
    value = i * (n_prime - k_prime) + (N + 1 - i) * (
        binomial(d - gcd_degree + N - i, N) - k_prime + 1
    )
    return Fraction(value)


def brenner2_gap(N: int, d: int) -> Fraction:
    """Binomial difference minus its polynomial lower bound; must be >= 0.

    Both sides are evaluated as polynomials in d (falling-factorial form for
    the binomials), which agrees with the combinatorial values for d >= 1 and
    extends the bound to d = 0 with equality at N = 1 for every d.
    """
    rising = 1
    falling = 1
    for s in range(1, N + 1):
        rising *= d + s
        falling *= d - s
    lhs = Fraction(rising - falling, factorial(N))
    rhs = Fraction((N + 1) * d ** (N - 1), factorial(N - 1))
    return lhs - rhs


def _t_in_range(args: Sequence[int]) -> bool:
    N, d, e, r, l = args
    return N >= 3 and 1 <= r <= min(d - 1, N) and 1 <= e <= l <= d - r - 1


def _u_in_range(args: Sequence[int]) -> bool:
    N, d, r, l = args
    return N >= 3 and 1 <= r <= min(d - 1, N) and 0 <= l <= d - r - 1


def _v_in_range(args: Sequence[int]) -> bool:
    d, e, N = args
    return N >= 3 and d >= N + 2 and 1 <= e <= d - N


def _q_in_range(args: Sequence[int]) -> bool:
    N, d, e, t = args
    return N >= 3 and d >= N + 2 and 1 <= e <= d - 1 and max(0, N + 1 - e) <= t <= N


def _p_in_range(args: Sequence[int]) -> bool:
    n_prime, k_prime, N, d, e, i = args
    if not (N >= 3 and d >= N + 2 and 1 <= e <= d - 1 and 0 <= i <= N):
        return False
    return 1 <= k_prime <= binomial(d - e + N - i, N) and n_prime >= k_prime


def _gap_in_range(args: Sequence[int]) -> bool:
    N, d = args
    return N >= 1 and d >= 0


@dataclass(frozen=True)
class FunctionSpec:
    """One auditable function: evaluator, proof range, and sign requirement.

    strict means the proof needs value > 0 on the range; otherwise >= 0.
    """

    label: str
    evaluate: Callable[..., Fraction]
    in_range: Callable[[Sequence[int]], bool]
    strict: bool


FUNCTIONS: dict[str, FunctionSpec] = {
    "T": FunctionSpec("T", eval_T, _t_in_range, True),
    "U": FunctionSpec("U", eval_U, _u_in_range, True),
    "V": FunctionSpec("V", eval_V, _v_in_range, True),
    "Q": FunctionSpec("Q", eval_Q, _q_in_range, True),
    "P": FunctionSpec("P", eval_P, _p_in_range, False),
    "brenner2": FunctionSpec("Brenner2Gap", brenner2_gap, _gap_in_range, False),
}


@dataclass(frozen=True)
class InequalityTrace:
    function: str
    arguments: tuple[int, ...]
    value: Fraction
    in_range: bool

    @property
    def sign(self) -> str:
        if self.value < 0:
            return "negative"
        return "zero" if self.value == 0 else "positive"


@dataclass(frozen=True)
class SweepSummary:
    """Aggregate of one audit run.

    violations counts in-range points with the wrong sign; flagged counts
    points evaluated outside the proof range (informative, never failing).
    min_value and argmin are taken over in-range points only.
    """

    function: str
    count: int
    flagged: int
    violations: int
    min_value: Fraction | None
    argmin: tuple[int, ...] | None

    def to_json(self) -> dict:
        return {
            "function": self.function,
            "count": self.count,
            "flagged": self.flagged,
            "violations": self.violations,
            "min": None if self.min_value is None else str(self.min_value),
            "argmin": None if self.argmin is None else list(self.argmin),
        }


def sweep(
    name: str, grid: Iterable[Sequence[int]]
) -> tuple[list[InequalityTrace], SweepSummary]:
    """Evaluate one function on every argument tuple of the grid.

    Returns all traces plus the violation summary; an empty grid yields an
    empty summary with no minimum.
    """
    fn = FUNCTIONS[name]
    traces = []
    flagged = violations = 0
    min_value: Fraction | None = None
    argmin: tuple[int, ...] | None = None
    for raw in grid:
        args = tuple(raw)
        value = fn.evaluate(*args)
        in_range = fn.in_range(args)
        traces.append(InequalityTrace(fn.label, args, value, in_range))
        if not in_range:
            flagged += 1
            continue
        bad = value <= 0 if fn.strict else value < 0
        violations += bad
        if min_value is None or value < min_value:
            min_value, argmin = value, args
    summary = SweepSummary(fn.label, len(traces), flagged, violations, min_value, argmin)
    return traces, summary


def sample_P(count: int, seed: int) -> list[tuple[int, int, int, int, int, int]]:
    """Deterministic random in-range argument tuples for the P audit.

    The grid for P is unbounded in the subset sizes, so the audit samples:
    draw the geometric parameters uniformly, then a subset size k' up to its
    admissible maximum and an ambient size n' >= k'.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        N = rng.randint(3, 5)
        d = rng.randint(N + 2, 12)
        e = rng.randint(1, d - 1)
        i = rng.randint(max(0, N + 1 - e), N)
        k_max = binomial(d - e + N - i, N)
        if k_max < 1:
            continue
        k_prime = rng.randint(1, k_max)
        n_prime = k_prime + rng.randint(0, 60)
        out.append((n_prime, k_prime, N, d, e, i))
    return out


def audit_grid(
    name: str,
    N_range: Sequence[int],
    d_range: Sequence[int],
    samples: int = 10_000,
    seed: int = 0,
) -> Iterator[tuple[int, ...]]:
    """In-proof-range argument tuples for one function over (N, d) ranges.

    For P the proof range has no finite (N, d)-indexed grid, so sampled
    tuples are yielded instead; samples and seed are ignored otherwise.
    """
    if name not in FUNCTIONS:
        raise KeyError(f"unknown function {name!r}")
    if name == "P":
        yield from sample_P(samples, seed)
        return
    for N, d in itertools.product(N_range, d_range):
        if name == "T":
            for r in range(1, min(d - 1, N) + 1):
                for e in range(1, d - r):
                    for l in range(e, d - r):
                        yield (N, d, e, r, l)
        elif name == "U":
            for r in range(1, min(d - 1, N) + 1):
                for l in range(0, d - r):
                    yield (N, d, r, l)
        elif name == "V":
            for e in range(1, d - N + 1):
                if d >= N + 2:
                    yield (d, e, N)
        elif name == "Q":
            if d >= N + 2:
                for e in range(1, d):
                    for t in range(max(0, N + 1 - e), N + 1):
                        yield (N, d, e, t)
        else:
            yield (N, d)


def audit(
    name: str,
    N_range: Sequence[int],
    d_range: Sequence[int],
    samples: int = 10_000,
    seed: int = 0,
) -> tuple[list[InequalityTrace], SweepSummary]:
    """Sweep one function over its proof range restricted to (N, d) ranges."""
    return sweep(name, audit_grid(name, N_range, d_range, samples, seed))
