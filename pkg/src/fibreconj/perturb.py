"""Perturbing words away from proper powers without moving their Q-image.

Appending a power of a kernel element (trivial in Q, nontrivial in F)
changes a word only inside its Q-fibre.  The escape routine first
minimises the word within its fibre, then appends increasing powers of
a fixed kernel witness until the result is not a proper power in F.
Short minimal representatives are reported as exceptional instead.
"""

from __future__ import annotations

from dataclasses import dataclass

from .decisions import Decision
from .oracle import StrategySpec, q_equal, wp_decide
from .subdirect import SubdirectSetup
from .words import (
    free_reduce,
    is_proper_power,
    mul,
    power,
    reduced_words,
    validate_word,
)


class SearchBudgetExceeded(Exception):
    """A ball search hit its query budget before finding its target."""


class KMaxExhausted(Exception):
    """Every tried perturbation exponent still produced a proper power."""


@dataclass(frozen=True)
class PerturbConfig:
    """Tuning for power_avoid.

    Words whose minimal representative is shorter than threshold are
    exceptional.  kernel_witness overrides the enumerated witness, which
    helps presentations whose shortest kernel element is long.
    """

    threshold: int = 1
    k_start: int = 1
    k_max: int = 8
    kernel_witness: str | None = None
    ball_budget: int = 500_000


@dataclass(frozen=True)
class PerturbResult:
    """Outcome of power_avoid.

    outcome is "perturbed" or "exceptional".  word holds the perturbed
    word, or the short minimal representative in the exceptional case.
    base_rep is the minimal representative the search started from, and
    image_certificate witnesses that word agrees with the input in Q.
    """

    outcome: str
    word: str
    base_rep: str
    k: int | None = None
    image_certificate: Decision | None = None

    @property
    def perturbed(self) -> bool:
        return self.outcome == "perturbed"

    @property
    def exceptional(self) -> bool:
        return self.outcome == "exceptional"


def kernel_witness(
    setup: SubdirectSetup,
    strat: StrategySpec,
    max_len: int | None = None,
    budget: int = 500_000,
) -> str:
    """First nontrivial free word that dies in Q, in length-then-rank order."""
    pres = setup.pres
    if not pres.relators:
        raise ValueError("the kernel is trivial: no witness exists")
    if max_len is None:
        max_len = pres.max_relator_length
    seen = 0
    for w in reduced_words(pres.generators, max_len):
        if w == "":
            continue
        seen += 1
        if seen > budget:
            raise SearchBudgetExceeded(f"no kernel witness within {budget} queries")
        if wp_decide(w, pres, strat).yes:
            return w
    raise SearchBudgetExceeded(f"no kernel witness of length <= {max_len}")


def minimal_q_rep(w: str, setup: SubdirectSetup, strat: StrategySpec,
                  budget: int = 500_000) -> str:
    """Shortest word with the same Q-image as w, ties broken by rank order.

    Requires an exact strategy: an Unknown equality query would make the
    minimality claim unverifiable.
    """
    pres = setup.pres
    validate_word(w, pres.generators)
    if not strat.exactness_claim:
        raise ValueError("minimal representative search needs an exact strategy")
    w = free_reduce(w)
    seen = 0
    for cand in reduced_words(pres.generators, len(w)):
        seen += 1
        if seen > budget:
            raise SearchBudgetExceeded(f"minimal representative not found in {budget} queries")
        if q_equal(cand, w, pres, strat).yes:
            return cand
    raise AssertionError("ball search ended without reaching the word itself")


def power_avoid(
    w: str,
    cfg: PerturbConfig,
    setup: SubdirectSetup,
    strat: StrategySpec,
) -> PerturbResult:
    """Replace w, within its Q-fibre, by a word that is not a proper power.

    Returns an exceptional result when the fibre's minimal representative
    is shorter than cfg.threshold; otherwise appends powers of a kernel
    witness until primitivity is reached.  Exhausting cfg.k_max raises
    rather than returning a silently unusable word.
    """
    pres = setup.pres
    w0 = minimal_q_rep(w, setup, strat, budget=cfg.ball_budget)
    if len(w0) < cfg.threshold:
        cert = q_equal(w0, w, pres, strat)
        return PerturbResult("exceptional", w0, w0, None, cert)

    witness = cfg.kernel_witness
    if witness is None:
        witness = kernel_witness(setup, strat, budget=cfg.ball_budget)
    if not wp_decide(witness, pres, strat).yes:
        raise ValueError("supplied kernel witness is not trivial in Q")

    for k in range(cfg.k_start, cfg.k_max + 1):
        cand = mul(w0, power(witness, k))
        if cand == "" or is_proper_power(cand):
            continue
        cert = q_equal(cand, w, pres, strat)
        if not cert.yes:
            raise AssertionError("perturbation moved the Q-image")
        return PerturbResult("perturbed", cand, w0, k, cert)
    raise KMaxExhausted(
        f"no primitive perturbation of {w0!r} with exponent <= {cfg.k_max}"
    )
