"""Finite root systems from Cartan matrices, with exact rational arithmetic.

Conventions used throughout the package:

* ``cartan[i][j]`` is the pairing of the j-th simple root against the i-th
  simple coroot.  The simple reflection ``s_i`` therefore acts on simple
  roots by ``s_i(a_j) = a_j - cartan[i][j] * a_i``.
* A :class:`Root` stores integer coordinates in the simple root basis.
* A :class:`Weight` stores rational coordinates in the fundamental weight
  basis, so ``lam.coords[i]`` equals the pairing of ``lam`` against the
  i-th simple coroot.
* ``rho`` is the weight with every coordinate equal to 1.

Root systems are interned: building twice from equal Cartan data returns
the same object, so identity comparison is meaningful and cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from . import _matrix
from .errors import NotARoot, NotFiniteType

#: Cartan matrices for the built-in type labels.  Indexing follows the
#: module convention above.  For B2 the first simple root is the short one.
CARTAN_BY_LABEL: dict[str, tuple[tuple[int, ...], ...]] = {
    "A1": ((2,),),
    "A2": ((2, -1), (-1, 2)),
    "B2": ((2, -2), (-1, 2)),
    "G2": ((2, -3), (-1, 2)),
    "A3": ((2, -1, 0), (-1, 2, -1), (0, -1, 2)),
    "B3": ((2, -1, 0), (-1, 2, -1), (0, -2, 2)),
    "C3": ((2, -1, 0), (-1, 2, -2), (0, -1, 2)),
    "B4": ((2, -1, 0, 0), (-1, 2, -1, 0), (0, -1, 2, -1), (0, 0, -2, 2)),
    "D4": ((2, -1, 0, 0), (-1, 2, -1, -1), (0, -1, 2, 0), (0, -1, 0, 2)),
    "F4": ((2, -1, 0, 0), (-1, 2, -1, 0), (0, -2, 2, -1), (0, 0, -1, 2)),
}


@dataclass(frozen=True)
class Root:
    """A root written in simple root coordinates.

    Roots of a finite system are either positive (all coordinates >= 0) or
    negative (all <= 0); mixed signs are rejected.
    """

    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        coords = tuple(int(c) for c in self.coords)
        object.__setattr__(self, "coords", coords)
        if not coords or all(c == 0 for c in coords):
            raise NotARoot(f"zero vector is not a root: {coords}")
        if any(c > 0 for c in coords) and any(c < 0 for c in coords):
            raise NotARoot(f"mixed signs in root coordinates: {coords}")

    @property
    def is_positive(self) -> bool:
        return all(c >= 0 for c in self.coords)

    @property
    def height(self) -> int:
        return sum(self.coords)

    def __neg__(self) -> Root:
        return Root(tuple(-c for c in self.coords))

    def __repr__(self) -> str:
        return f"Root{self.coords}"


@dataclass(frozen=True)
class Weight:
    """A weight written in fundamental weight coordinates."""

    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def __add__(self, other: Weight) -> Weight:
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords, strict=True)))

    def __sub__(self, other: Weight) -> Weight:
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords, strict=True)))

    def __neg__(self) -> Weight:
        return Weight(tuple(-a for a in self.coords))

    def __repr__(self) -> str:
        return "Weight(" + ", ".join(str(c) for c in self.coords) + ")"


def weight(*coords) -> Weight:
    """Convenience constructor: ``weight(-2, -2)`` for rational coordinates."""
    return Weight(tuple(Fraction(c) for c in coords))


@dataclass(frozen=True)
class WeightClassification:
    antidominant: bool
    dominant: bool
    regular: bool
    integral: bool


def _validate_cartan(matrix) -> tuple[tuple[int, ...], ...]:
    rows = tuple(tuple(int(x) for x in row) for row in matrix)
    n = len(rows)
    if n == 0 or any(len(row) != n for row in rows):
        raise ValueError("Cartan matrix must be square and non-empty")
    for i in range(n):
        if rows[i][i] != 2:
            raise ValueError(f"Cartan matrix diagonal entry ({i},{i}) must be 2")
        for j in range(n):
            if i != j and rows[i][j] > 0:
                raise ValueError(f"off-diagonal Cartan entry ({i},{j}) must be <= 0")
            if (rows[i][j] == 0) != (rows[j][i] == 0):
                raise ValueError(f"Cartan entries ({i},{j}) and ({j},{i}) must vanish together")
    return rows


def _symmetrizer(cartan: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    """Minimal positive integers d with d[i]*a[i][j] == d[j]*a[j][i].

    Computed per connected component of the Dynkin diagram; raises
    ``NotFiniteType`` if the matrix is not symmetrizable.
    """
    n = len(cartan)
    ratios: list[Fraction | None] = [None] * n
    for start in range(n):
        if ratios[start] is not None:
            continue
        component = [start]
        ratios[start] = Fraction(1)
        queue = [start]
        while queue:
            i = queue.pop()
            for j in range(n):
                if cartan[i][j] == 0 or i == j:
                    continue
                r = ratios[i] * Fraction(cartan[i][j], cartan[j][i])
                if ratios[j] is None:
                    ratios[j] = r
                    component.append(j)
                    queue.append(j)
                elif ratios[j] != r:
                    raise NotFiniteType("Cartan matrix is not symmetrizable")
        scale = lcm(*(ratios[i].denominator for i in component))
        shrink = gcd(*(int(ratios[i] * scale) for i in component))
        for i in component:
            ratios[i] = Fraction(int(ratios[i] * scale) // shrink)
    d = tuple(int(r) for r in ratios)
    for i in range(n):
        for j in range(n):
            if d[i] * cartan[i][j] != d[j] * cartan[j][i]:
                raise NotFiniteType("Cartan matrix is not symmetrizable")
    return d


def _generate_positive_roots(cartan: tuple[tuple[int, ...], ...]) -> tuple[Root, ...]:
    """Close the simple roots under simple reflections, keeping positives.

    For a finite type this produces exactly the positive roots.  The loop
    aborts with ``NotFiniteType`` once the closure exceeds 10 * rank**2,
    which comfortably covers every finite type (F4 has 24 positive roots).
    """
    n = len(cartan)
    bound = 10 * n * n
    simples = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    seen = set(simples)
    queue = list(simples)
    while queue:
        beta = queue.pop()
        for i in range(n):
            p = sum(cartan[i][j] * beta[j] for j in range(n))
            image = list(beta)
            image[i] -= p
            if image[i] < 0:
                continue
            img = tuple(image)
            if img not in seen:
                seen.add(img)
                queue.append(img)
                if len(seen) > bound:
                    raise NotFiniteType(
                        f"positive root closure exceeded {bound} vectors; "
                        "the Cartan matrix is not of finite type"
                    )
    ordered = sorted(seen, key=lambda v: (sum(v), v))
    return tuple(Root(v) for v in ordered)


class RootSystem:
    """A finite root system together with its exact invariant form.

    Instances are immutable once built and interned by Cartan matrix, so
    ``build_root_system(m) is build_root_system(m)`` holds.  Do not call
    the constructor directly; use :func:`build_root_system`.
    """

    def __init__(self, cartan: tuple[tuple[int, ...], ...], label: str | None):
        self.cartan = cartan
        self.rank = len(cartan)
        self.label = label
        self.symmetrizer = _symmetrizer(cartan)
        self.positive_roots = _generate_positive_roots(cartan)
        self.rho = Weight(tuple(Fraction(1) for _ in range(self.rank)))
        self._positive_set = frozenset(r.coords for r in self.positive_roots)
        self._cartan_inv = _matrix.invert(
            tuple(tuple(Fraction(x) for x in row) for row in cartan)
        )
        # internal caches filled lazily by this module and by weyl.py
        self._kostant_memo: dict = {}
        self._bruhat_memo: dict = {}
        self._elements_cache = None
        self._longest_cache = None

    def __repr__(self) -> str:
        name = self.label if self.label else f"rank {self.rank}"
        return f"RootSystem({name}, {len(self.positive_roots)} positive roots)"

    def is_root(self, coords: tuple[int, ...]) -> bool:
        return coords in self._positive_set or tuple(-c for c in coords) in self._positive_set

    def form(self, x: tuple, y: tuple) -> Fraction:
        """Invariant symmetric form on root coordinates.

        ``form(a_i, a_j) = d_i * cartan[i][j]`` where d is the symmetrizer,
        so every short root has squared length 2 * min(d).
        """
        total = Fraction(0)
        for i in range(self.rank):
            if x[i] == 0:
                continue
            row = self.cartan[i]
            di = self.symmetrizer[i]
            total += sum(Fraction(x[i] * di * row[j]) * y[j] for j in range(self.rank) if y[j] != 0)
        return total

    def root_to_weight(self, beta: Root) -> Weight:
        """Rewrite a root in fundamental weight coordinates."""
        c = beta.coords
        return Weight(
            tuple(
                Fraction(sum(self.cartan[j][i] * c[i] for i in range(self.rank)))
                for j in range(self.rank)
            )
        )

    def weight_to_root_coords(self, lam: Weight) -> tuple[Fraction, ...]:
        """Coordinates of a weight in the simple root basis (rational)."""
        return _matrix.mat_vec(self._cartan_inv, lam.coords)

    def in_root_lattice(self, lam: Weight) -> bool:
        return all(c.denominator == 1 for c in self.weight_to_root_coords(lam))


_REGISTRY: dict[tuple[tuple[int, ...], ...], RootSystem] = {}


def build_root_system(cartan) -> RootSystem:
    """Build (or fetch the interned) root system for the given Cartan data.

    ``cartan`` is either a type label such as ``"B2"`` (see
    ``CARTAN_BY_LABEL``) or a square matrix of integers.  Raises
    ``NotFiniteType`` when the data does not describe a finite root system.

    >>> rs = build_root_system("B2")
    >>> [r.coords for r in rs.positive_roots]
    [(0, 1), (1, 0), (1, 1), (2, 1)]
    >>> build_root_system("B2") is rs
    True
    """
    label: str | None
    if isinstance(cartan, str):
        key = cartan.upper()
        if key not in CARTAN_BY_LABEL:
            raise ValueError(f"unknown type label {cartan!r}; known: {sorted(CARTAN_BY_LABEL)}")
        matrix, label = CARTAN_BY_LABEL[key], key
    else:
        matrix, label = _validate_cartan(cartan), None
        for name, known in CARTAN_BY_LABEL.items():
            if known == matrix:
                label = name
                break
    matrix = _validate_cartan(matrix)
    if matrix not in _REGISTRY:
        _REGISTRY[matrix] = RootSystem(matrix, label)
    return _REGISTRY[matrix]


def _check_root(rs: RootSystem, beta: Root) -> None:
    if not isinstance(beta, Root):
        raise NotARoot(f"expected a Root, got {beta!r}")
    if len(beta.coords) != rs.rank or not rs.is_root(beta.coords):
        raise NotARoot(f"{beta!r} is not a root of {rs!r}")


def pairing(rs: RootSystem, lam: Weight, beta: Root) -> Fraction:
    """Pairing of a weight against the coroot of ``beta``, exactly.

    This is 2*(lam, beta)/(beta, beta) for the invariant form; for a simple
    root it agrees with the corresponding fundamental weight coordinate.

    >>> rs = build_root_system("B2")
    >>> pairing(rs, rs.rho, Root((2, 1)))
    Fraction(2, 1)
    """
    _check_root(rs, beta)
    d = rs.symmetrizer
    numerator = sum(
        Fraction(beta.coords[i] * d[i]) * lam.coords[i] for i in range(rs.rank)
    )
    return 2 * numerator / rs.form(beta.coords, beta.coords)


def coroot_pairing_roots(rs: RootSystem, gamma: Root, beta: Root) -> int:
    """Pairing of the root ``gamma`` against the coroot of ``beta``."""
    _check_root(rs, beta)
    value = 2 * rs.form(gamma.coords, beta.coords) / rs.form(beta.coords, beta.coords)
    assert value.denominator == 1, "root paired against a coroot must be integral"
    return int(value)


def classify_weight(rs: RootSystem, lam: Weight) -> WeightClassification:
    """Classify ``lam`` relative to the shifted Weyl group action.

    * antidominant: pairing of lam + rho with every simple coroot is <= 0
    * dominant: those pairings are all >= 0
    * regular: pairing of lam + rho with every positive coroot is nonzero
    * integral: all fundamental weight coordinates are integers
    """
    if len(lam.coords) != rs.rank:
        raise ValueError("weight has wrong rank for this root system")
    shifted = lam + rs.rho
    simples = shifted.coords
    regular = all(
        pairing(rs, shifted, beta) != 0 for beta in rs.positive_roots
    )
    return WeightClassification(
        antidominant=all(c <= 0 for c in simples),
        dominant=all(c >= 0 for c in simples),
        regular=regular,
        integral=lam.is_integral,
    )


def integral_positive_roots(rs: RootSystem, lam: Weight) -> tuple[Root, ...]:
    """Positive roots whose coroot pairs integrally with ``lam``.

    For an integral weight this is every positive root; in general it is
    the positive part of the integral root subsystem of ``lam``.
    """
    return tuple(
        beta for beta in rs.positive_roots if pairing(rs, lam, beta).denominator == 1
    )


def kostant_partition(rs: RootSystem, nu: tuple[int, ...]) -> int:
    """Number of ways to write ``nu`` as a sum of positive roots.

    ``nu`` is given in simple root coordinates.  Vectors outside the
    nonnegative cone have no partitions.

    >>> rs = build_root_system("B2")
    >>> kostant_partition(rs, (1, 1))
    2
    >>> kostant_partition(rs, (0, 0))
    1
    """
    nu = tuple(int(c) for c in nu)
    if len(nu) != rs.rank:
        raise ValueError("vector has wrong rank for this root system")
    roots = [r.coords for r in rs.positive_roots]
    memo = rs._kostant_memo

    def count(v: tuple[int, ...], k: int) -> int:
        if any(c < 0 for c in v):
            return 0
        if all(c == 0 for c in v):
            return 1
        if k == len(roots):
            return 0
        key = (v, k)
        if key not in memo:
            r = roots[k]
            memo[key] = count(v, k + 1) + count(tuple(a - b for a, b in zip(v, r)), k)
        return memo[key]

    return count(nu, 0)
