"""Rank 1 laboratory: deformed weight space maps between a Verma module
and its twisted partner, over the local ring of rational functions
regular at X = 0.

Everything here is for sl2 with deformed highest weight z = lam + X.  In
the divided power basis v_0, ..., v_N of the truncated deformed Verma
module the actions are

    h v_i = (z - 2i) v_i,   f v_i = (i+1) v_{i+1},   e v_i = (z+1-i) v_{i-1},

and on the dual basis of the twisted (dual) module

    h u_i = (z - 2i) u_i,   e u_i = i u_{i-1},       f u_i = (z - i) u_{i+1}.

A weight map is diagonal in these bases, one local ring entry per index.
The forward map has entry binomial(z, i); its essentially unique
equivariant partner in the other direction divides by that binomial,
rescaled for natural lam so that every entry stays regular at X = 0.
Specializing X to 0 recovers the classical undeformed maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import TruncationTooSmall
from .localring import LocalRingElem, constant, one, variable

VERMA_TO_DUAL = "verma_to_dual"
DUAL_TO_VERMA = "dual_to_verma"

#: Truncation used by the command line driver unless overridden.
DEFAULT_TRUNCATION = 12


@dataclass(frozen=True)
class WeightMap:
    """A diagonal map between weight spaces, entries indexed 0..truncation."""

    lam: Fraction
    truncation: int
    direction: str
    entries: tuple[LocalRingElem, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "lam", Fraction(self.lam))
        if self.direction not in (VERMA_TO_DUAL, DUAL_TO_VERMA):
            raise ValueError(f"unknown direction {self.direction!r}")
        if len(self.entries) != self.truncation + 1:
            raise ValueError("need one entry per index from 0 to the truncation")

    def specialized(self) -> tuple[Fraction, ...]:
        """The classical map: every entry evaluated at X = 0."""
        return tuple(entry.specialize() for entry in self.entries)

    def valuations(self) -> tuple[int, ...]:
        vals = []
        for entry in self.entries:
            v = entry.valuation()
            assert v != float("inf"), "weight map entries must be nonzero"
            vals.append(int(v))
        return tuple(vals)


def is_natural(lam) -> bool:
    lam = Fraction(lam)
    return lam.denominator == 1 and lam >= 0


def deformed_binomial(lam, i: int) -> LocalRingElem:
    """binomial(lam + X, i) as a polynomial in X, exactly.

    >>> deformed_binomial(3, 2).specialize()
    Fraction(3, 1)
    >>> deformed_binomial(1, 3).valuation()
    1
    """
    lam = Fraction(lam)
    out = one()
    for k in range(i):
        out = out * (variable() + constant(lam - k))
    factorial = 1
    for k in range(2, i + 1):
        factorial *= k
    return out / constant(factorial)


def phi(lam, truncation: int = DEFAULT_TRUNCATION) -> WeightMap:
    """The deformed map out of the Verma module, entry binomial(z, i)."""
    lam = Fraction(lam)
    entries = tuple(deformed_binomial(lam, i) for i in range(truncation + 1))
    return WeightMap(lam, truncation, VERMA_TO_DUAL, entries)


def psi(lam, truncation: int = DEFAULT_TRUNCATION) -> WeightMap:
    """The deformed map back into the Verma module.

    For lam outside the natural numbers every binomial(z, i) is a unit
    and the entries are simply its inverses.  For natural lam those
    binomials acquire a zero at X = 0 once i exceeds lam, so the entries
    are rescaled by X times a constant; the scale (-1)^(lam+1) / (lam+1)
    makes the specialization at X = 0 match the classical map, whose
    nonzero entries are (-1)^i * binomial(i, i - lam - 1).
    """
    lam = Fraction(lam)
    if is_natural(lam):
        scale = constant(Fraction((-1) ** (int(lam) + 1), int(lam) + 1)) * variable()
    else:
        scale = one()
    entries = tuple(
        scale / deformed_binomial(lam, i) for i in range(truncation + 1)
    )
    return WeightMap(lam, truncation, DUAL_TO_VERMA, entries)


def check_equivariance(wmap: WeightMap, lam=None, truncation: int | None = None) -> bool:
    """Exact commutation with the deformed e and f actions, over the ring.

    Checked on the basis vectors of index 0..truncation-1; the f action
    on the last vector leaves the truncation and is excluded.  The h
    action is diagonal with equal eigenvalues on both sides, so it
    commutes automatically.  ``lam`` and ``truncation`` default to the
    map's own.
    """
    lam = Fraction(wmap.lam if lam is None else lam)
    n = wmap.truncation if truncation is None else min(truncation, wmap.truncation)
    z = variable() + constant(lam)
    m = wmap.entries
    if wmap.direction == VERMA_TO_DUAL:
        for i in range(1, n):
            if (z + 1 - i) * m[i - 1] != i * m[i]:
                return False
        for i in range(n):
            if (i + 1) * m[i + 1] != (z - i) * m[i]:
                return False
    else:
        for i in range(1, n):
            if i * m[i - 1] != (z + 1 - i) * m[i]:
                return False
        for i in range(n):
            if (z - i) * m[i + 1] != (i + 1) * m[i]:
                return False
    return True


def jantzen_layers_sl2(lam, truncation: int = DEFAULT_TRUNCATION) -> dict[int, int]:
    """X-adic valuation of the forward map, index by index.

    This is the rank 1 Jantzen layer count: index i sits inside the k-th
    filtration step exactly when the valuation is at least k.
    """
    return {i: v for i, v in enumerate(phi(lam, truncation).valuations())}


def _require_window(lam: int, truncation: int) -> None:
    needed = 2 * lam + 4
    if truncation < needed:
        raise TruncationTooSmall(
            f"truncation {truncation} cannot certify lam = {lam}; need at least {needed}"
        )


def four_term_rank_check(lam, truncation: int = DEFAULT_TRUNCATION) -> bool:
    """Degreewise exactness of the classical four term sequence.

    For natural lam the Verma module of -lam-2 embeds into that of lam,
    the twisted module receives the quotient, and the cokernel is the
    twisted module of -lam-2 again.  Degreewise this says the specialized
    forward entry vanishes exactly above index lam, and the specialized
    backward entry exactly up to lam.
    """
    lam = Fraction(lam)
    if not is_natural(lam):
        raise ValueError("the four term sequence needs a natural highest weight")
    lam_int = int(lam)
    _require_window(lam_int, truncation)
    forward = phi(lam, truncation).specialized()
    backward = psi(lam, truncation).specialized()
    for i in range(truncation + 1):
        if (forward[i] == 0) != (i > lam_int):
            return False
        if (backward[i] == 0) != (i <= lam_int):
            return False
    return True


def coker_check_over_A(lam, truncation: int = DEFAULT_TRUNCATION) -> bool:
    """Valuation profile of both deformed maps over the local ring.

    For natural lam the forward map has a simple zero exactly above index
    lam and the backward map exactly up to lam, so the two cokernels are
    the expected truncated modules with X acting by zero.  For any other
    lam all entries are units and the check is trivially true.
    """
    lam = Fraction(lam)
    natural = is_natural(lam)
    if natural:
        _require_window(int(lam), truncation)
    lam_int = int(lam) if natural else None
    forward = phi(lam, truncation).valuations()
    backward = psi(lam, truncation).valuations()
    for i in range(truncation + 1):
        want_forward = 1 if natural and i > lam_int else 0
        want_backward = 1 if natural and i <= lam_int else 0
        if forward[i] != want_forward or backward[i] != want_backward:
            return False
    return True
