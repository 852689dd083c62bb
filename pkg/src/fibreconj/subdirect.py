"""The fibre product P of two copies of F over Q, and conjugacy inside it.

P consists of the pairs (a, b) of free-group words whose images in Q
agree.  Membership therefore reduces to one word-problem query, and
conjugacy of pairs reduces to finitely many power-problem queries
against the primitive roots of the coordinates.  Every positive answer
ships with an explicit conjugator that is verified by exact free-group
arithmetic before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .area import Presentation
from .decisions import Decision, PowerDecision, Verdict
from .oracle import StrategySpec, power_decide, q_equal
from .words import (
    free_conjugator,
    free_reduce,
    inverse,
    mul,
    power,
    primitive_root,
    validate_word,
)


class PairElement(NamedTuple):
    first: str
    second: str


def validate_pair(pair, generators: str) -> PairElement:
    a, b = pair
    validate_word(a, generators)
    validate_word(b, generators)
    return PairElement(free_reduce(a), free_reduce(b))


def pair_mul(*pairs) -> PairElement:
    return PairElement(
        mul(*(p[0] for p in pairs)),
        mul(*(p[1] for p in pairs)),
    )


def pair_inverse(pair) -> PairElement:
    return PairElement(inverse(pair[0]), inverse(pair[1]))


def pair_conjugate(pair, g) -> PairElement:
    """g^-1 * pair * g, coordinatewise."""
    return pair_mul(pair_inverse(g), pair, g)


@dataclass(frozen=True)
class SubdirectSetup:
    """A presentation together with a generating set for P."""

    pres: Presentation
    p_generators: tuple[PairElement, ...]

    def __post_init__(self):
        for pair in self.p_generators:
            validate_pair(pair, self.pres.generators)


def canonical_setup(pres: Presentation) -> SubdirectSetup:
    """Standard generators: the diagonal plus each relator on one side.

    Conjugating (r, 1) and (1, r) by diagonal elements reaches the whole
    kernel on either coordinate, so these generate P.
    """
    gens = [PairElement(g, g) for g in pres.generators]
    gens += [PairElement(r, "") for r in pres.relators]
    gens += [PairElement("", r) for r in pres.relators]
    return SubdirectSetup(pres, tuple(gens))


def p_membership(pair, setup: SubdirectSetup, strat: StrategySpec) -> Decision:
    """(a, b) lies in P iff a and b agree in Q."""
    a, b = validate_pair(pair, setup.pres.generators)
    return q_equal(a, b, setup.pres, strat)


class PowerQuery(NamedTuple):
    """One power-problem probe made while searching for a conjugator."""

    j: int
    target: str
    verdict: Verdict
    p: int | None


@dataclass(frozen=True)
class ConjugacyTrace:
    """Everything needed to replay a conjugacy decision.

    branch is one of "coords", "deg-first", "deg-second", "main".  For
    the main branch the queries record each probe "z2^j * w^-1 is a
    power of z1 in Q", and winner holds the (j, p) pair that produced
    the conjugator, if any.
    """

    branch: str
    x1: str | None = None
    x2: str | None = None
    w2: str | None = None
    w: str | None = None
    z1: str | None = None
    e1: int | None = None
    z2: str | None = None
    e2: int | None = None
    queries: tuple[PowerQuery, ...] = ()
    winner: tuple[int, int] | None = None


@dataclass(frozen=True)
class ConjugacyResult:
    verdict: Verdict
    conjugator: PairElement | None
    trace: ConjugacyTrace

    @property
    def yes(self) -> bool:
        return self.verdict is Verdict.YES

    @property
    def no(self) -> bool:
        return self.verdict is Verdict.NO

    @property
    def unknown(self) -> bool:
        return self.verdict is Verdict.UNKNOWN


def _finish(U, V, gamma, trace, setup, strat) -> ConjugacyResult:
    """Exact verification of a candidate conjugator, then membership."""
    for i in (0, 1):
        if free_reduce(inverse(gamma[i]) + U[i] + gamma[i]) != V[i]:
            raise AssertionError("constructed conjugator fails exact verification")
    member = p_membership(gamma, setup, strat)
    if member.no:
        raise AssertionError("constructed conjugator escaped P")
    if member.unknown:
        return ConjugacyResult(Verdict.UNKNOWN, None, trace)
    return ConjugacyResult(Verdict.YES, gamma, trace)


def p_conjugacy(U, V, setup: SubdirectSetup, strat: StrategySpec) -> ConjugacyResult:
    """Decide whether some gamma in P satisfies gamma^-1 * U * gamma = V.

    Both pairs must already lie in P (a definite non-member raises
    ValueError, an undecided membership returns Unknown).  Coordinatewise
    free conjugacy is necessary; past that, the conjugator is pinned
    down by a scan over the finitely many cosets of the second root.
    """
    U = validate_pair(U, setup.pres.generators)
    V = validate_pair(V, setup.pres.generators)
    for name, pair in (("U", U), ("V", V)):
        member = p_membership(pair, setup, strat)
        if member.no:
            raise ValueError(f"{name} is not an element of P")
        if member.unknown:
            return ConjugacyResult(
                Verdict.UNKNOWN, None, ConjugacyTrace(branch="coords")
            )

    u1, u2 = U
    v1, v2 = V
    x1 = free_conjugator(u1, v1)
    x2 = free_conjugator(u2, v2)
    if x1 is None or x2 is None:
        return ConjugacyResult(
            Verdict.NO, None, ConjugacyTrace(branch="coords", x1=x1, x2=x2)
        )

    if u1 == "" and v1 == "":
        gamma = PairElement(x2, x2)
        trace = ConjugacyTrace(branch="deg-first", x1=x1, x2=x2)
        return _finish(U, V, gamma, trace, setup, strat)
    if u2 == "" and v2 == "":
        gamma = PairElement(x1, x1)
        trace = ConjugacyTrace(branch="deg-second", x1=x1, x2=x2)
        return _finish(U, V, gamma, trace, setup, strat)

    # Main branch: both coordinates nontrivial.  Any conjugator in F x F
    # has the form (z1^p * x1, z2^q * x2) with z_i the primitive root of
    # u_i; such a pair lies in P iff z1^p * w = z2^q in Q, w = x1 * x2^-1.
    # Since u2 = z2^e2 equals u1 = z1^e1 in Q, shifting q by e2 shifts p
    # by e1, so scanning q = j in [0, e2) loses nothing.
    w2 = x2
    w = mul(x1, inverse(w2))
    r1 = primitive_root(u1)
    r2 = primitive_root(u2)
    z1, e1 = r1.root, r1.exponent
    z2, e2 = r2.root, r2.exponent

    queries: list[PowerQuery] = []
    saw_unknown = False
    for j in range(e2):
        tgt = mul(power(z2, j), inverse(w))
        pd: PowerDecision = power_decide(tgt, z1, setup.pres, strat)
        queries.append(PowerQuery(j, tgt, pd.verdict, pd.p))
        if pd.yes:
            p = pd.p
            zeta = PairElement(mul(power(z1, p), w), power(z2, j))
            gamma = pair_mul(zeta, PairElement(w2, w2))
            trace = ConjugacyTrace(
                branch="main",
                x1=x1,
                x2=x2,
                w2=w2,
                w=w,
                z1=z1,
                e1=e1,
                z2=z2,
                e2=e2,
                queries=tuple(queries),
                winner=(j, p),
            )
            return _finish(U, V, gamma, trace, setup, strat)
        if pd.unknown:
            saw_unknown = True

    trace = ConjugacyTrace(
        branch="main",
        x1=x1,
        x2=x2,
        w2=w2,
        w=w,
        z1=z1,
        e1=e1,
        z2=z2,
        e2=e2,
        queries=tuple(queries),
        winner=None,
    )
    if saw_unknown:
        return ConjugacyResult(Verdict.UNKNOWN, None, trace)
    return ConjugacyResult(Verdict.NO, None, trace)


def replay_trace(result: ConjugacyResult, U, V, setup: SubdirectSetup, strat: StrategySpec) -> bool:
    """Re-derive a positive conjugacy result from its trace.

    Recomputes the winning query from the recorded data, re-runs it,
    rebuilds the conjugator, and re-verifies it exactly.  Returns False
    on any mismatch.
    """
    if not result.yes or result.conjugator is None:
        return False
    U = validate_pair(U, setup.pres.generators)
    V = validate_pair(V, setup.pres.generators)
    gamma = result.conjugator
    for i in (0, 1):
        if free_reduce(inverse(gamma[i]) + U[i] + gamma[i]) != V[i]:
            return False
    if not p_membership(gamma, setup, strat).yes:
        return False
    trace = result.trace
    if trace.branch in ("deg-first", "deg-second"):
        return True
    if trace.branch != "main" or trace.winner is None:
        return False
    j, p = trace.winner
    if trace.z1 is None or trace.z2 is None or trace.w is None:
        return False
    tgt = mul(power(trace.z2, j), inverse(trace.w))
    recorded = next((q for q in trace.queries if q.j == j), None)
    if recorded is None or recorded.target != tgt or recorded.p != p:
        return False
    check = q_equal(tgt, power(trace.z1, p), setup.pres, strat)
    if not check.yes:
        return False
    zeta = PairElement(mul(power(trace.z1, p), trace.w), power(trace.z2, j))
    rebuilt = pair_mul(zeta, PairElement(trace.w2, trace.w2))
    return rebuilt == gamma
