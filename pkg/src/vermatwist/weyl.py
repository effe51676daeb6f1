"""Weyl group elements as exact integer matrices on root coordinates.

An element is canonically the matrix of its action in the simple root
basis (column j is the image of the j-th simple root).  Words are derived
data: the canonical reduced word of an element is the ShortLex smallest
one, obtained greedily by splitting off the smallest left descent.

Simple reflection indices are 1-based everywhere in the public API, so
words are tuples like ``(1, 2, 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from . import _matrix
from .errors import GroupTooLarge, IndexOutOfRange, MixedRootSystems
from .rootsystem import Root, RootSystem, Weight, coroot_pairing_roots

IntMatrix = tuple[tuple[int, ...], ...]


def _int_identity(n: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _int_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n)
    )


def _act(mat: IntMatrix, coords: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sum(row[k] * coords[k] for k in range(len(coords))) for row in mat)


def _simple_matrix(rs: RootSystem, i: int) -> IntMatrix:
    """Matrix of s_i (0-based i) acting on simple root coordinates."""
    n = rs.rank
    return tuple(
        tuple((1 if r == j else 0) - (rs.cartan[i][j] if r == i else 0) for j in range(n))
        for r in range(n)
    )


@dataclass(frozen=True, eq=False)
class WeylElement:
    """One Weyl group element, pinned to its root system."""

    rs: RootSystem
    mat: IntMatrix

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.rs is other.rs and self.mat == other.mat

    def __hash__(self) -> int:
        return hash((id(self.rs), self.mat))

    def __repr__(self) -> str:
        return f"WeylElement({word_text(self)})"

    @cached_property
    def inv_mat(self) -> IntMatrix:
        frac = _matrix.invert(tuple(tuple(Fraction(x) for x in row) for row in self.mat))
        return _matrix.to_int_matrix(frac)

    @cached_property
    def length(self) -> int:
        # l(w) = number of positive roots sent to negative roots
        return sum(
            1 for beta in self.rs.positive_roots if sum(_act(self.mat, beta.coords)) < 0
        )

    @cached_property
    def word(self) -> tuple[int, ...]:
        """ShortLex minimal reduced word, as 1-based indices.

        Peeling off the smallest left descent at every step yields the
        lexicographically smallest reduced word; all reduced words share
        the same length, so this is also the ShortLex minimum.
        """
        n = self.rs.rank
        inv = self.inv_mat
        ident = _int_identity(n)
        letters: list[int] = []
        while inv != ident:
            for i in range(n):
                # column i of inv is w^{-1}(a_i); negative iff coordinate sum < 0
                if sum(inv[r][i] for r in range(n)) < 0:
                    letters.append(i + 1)
                    inv = _int_mul(inv, _simple_matrix(self.rs, i))
                    break
            else:
                raise AssertionError("no left descent found for a non-identity element")
        return tuple(letters)

    @cached_property
    def inversions(self) -> tuple[Root, ...]:
        """Positive roots sent negative by w^{-1}, in the standard root order."""
        inv = self.inv_mat
        return tuple(
            beta for beta in self.rs.positive_roots if sum(_act(inv, beta.coords)) < 0
        )

    def __mul__(self, other: WeylElement) -> WeylElement:
        if not isinstance(other, WeylElement):
            return NotImplemented
        _same_system(self, other)
        return WeylElement(self.rs, _int_mul(self.mat, other.mat))

    def inverse(self) -> WeylElement:
        return WeylElement(self.rs, self.inv_mat)

    @property
    def is_identity(self) -> bool:
        return self.length == 0

    def right_descents(self) -> tuple[int, ...]:
        """1-based indices i with l(w s_i) < l(w)."""
        out = []
        for i in range(self.rs.rank):
            if sum(self.mat[r][i] for r in range(self.rs.rank)) < 0:
                out.append(i + 1)
        return tuple(out)


def _same_system(a: WeylElement, b: WeylElement) -> None:
    if a.rs is not b.rs:
        raise MixedRootSystems("cannot combine elements of different root systems")


def identity_element(rs: RootSystem) -> WeylElement:
    return WeylElement(rs, _int_identity(rs.rank))


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    """The i-th simple reflection, 1-based."""
    if not 1 <= i <= rs.rank:
        raise IndexOutOfRange(f"simple reflection index {i} outside 1..{rs.rank}")
    return WeylElement(rs, _simple_matrix(rs, i - 1))


def element_from_word(rs: RootSystem, word) -> WeylElement:
    """Product of simple reflections; the word need not be reduced.

    >>> from vermatwist.rootsystem import build_root_system
    >>> rs = build_root_system("B2")
    >>> element_from_word(rs, (1, 1)).is_identity
    True
    >>> element_from_word(rs, (1, 2, 1, 2)).length
    4
    """
    w = identity_element(rs)
    for i in word:
        w = w * simple_reflection(rs, int(i))
    return w


def multiply(u: WeylElement, v: WeylElement) -> WeylElement:
    return u * v


def inverse(w: WeylElement) -> WeylElement:
    return w.inverse()


def length(w: WeylElement) -> int:
    return w.length


def inversion_set(w: WeylElement) -> tuple[Root, ...]:
    return w.inversions


def longest_element(rs: RootSystem) -> WeylElement:
    """The longest element, by greedy ascent through right multiplication."""
    if rs._longest_cache is None:
        w = identity_element(rs)
        n = rs.rank
        while True:
            for i in range(n):
                # ascent iff w(a_i) stays positive
                if sum(w.mat[r][i] for r in range(n)) > 0:
                    w = w * simple_reflection(rs, i + 1)
                    break
            else:
                break
        rs._longest_cache = w
    return rs._longest_cache


def all_elements(rs: RootSystem, bound: int = 1_000_000) -> tuple[WeylElement, ...]:
    """Every group element, sorted by (length, ShortLex word).

    Raises ``GroupTooLarge`` if the group has more than ``bound`` elements.
    """
    if rs._elements_cache is None:
        seen = {identity_element(rs)}
        frontier = list(seen)
        while frontier:
            fresh = []
            for w in frontier:
                for i in range(1, rs.rank + 1):
                    u = w * simple_reflection(rs, i)
                    if u not in seen:
                        seen.add(u)
                        fresh.append(u)
                        if len(seen) > bound:
                            raise GroupTooLarge(
                                f"Weyl group exceeds the bound of {bound} elements"
                            )
            frontier = fresh
        rs._elements_cache = tuple(sorted(seen, key=lambda w: (w.length, w.word)))
    if len(rs._elements_cache) > bound:
        raise GroupTooLarge(f"Weyl group exceeds the bound of {bound} elements")
    return rs._elements_cache


def bruhat_leq(x: WeylElement, y: WeylElement) -> bool:
    """Bruhat order test via the standard lifting recursion, memoized.

    With s the smallest left descent of y: if sx < x then x <= y iff
    sx <= sy, otherwise x <= y iff x <= sy.
    """
    _same_system(x, y)
    rs = x.rs
    memo = rs._bruhat_memo

    def rec(a: WeylElement, b: WeylElement) -> bool:
        if a.length > b.length:
            return False
        if a.length == 0 or a == b:
            return True
        key = (a.mat, b.mat)
        if key not in memo:
            s = simple_reflection(rs, b.word[0])
            sb = s * b
            sa = s * a
            if sa.length < a.length:
                memo[key] = rec(sa, sb)
            else:
                memo[key] = rec(a, sb)
        return memo[key]

    return rec(x, y)


def reflection_through(rs: RootSystem, beta: Root) -> WeylElement:
    """The reflection attached to the (positive or negative) root beta."""
    n = rs.rank
    columns = []
    for j in range(n):
        alpha_j = Root(tuple(1 if k == j else 0 for k in range(n)))
        c = coroot_pairing_roots(rs, alpha_j, beta)
        columns.append(tuple((1 if r == j else 0) - c * beta.coords[r] for r in range(n)))
    mat = tuple(tuple(columns[j][r] for j in range(n)) for r in range(n))
    return WeylElement(rs, mat)


def weight_action(w: WeylElement, lam: Weight) -> Weight:
    """Natural (unshifted) action of w on a weight, exactly.

    Derived from the action on root coordinates by transport through the
    invariant form; for a simple reflection it reduces to
    ``s_i(lam) = lam - lam.coords[i] * a_i``.
    """
    rs = w.rs
    d = rs.symmetrizer
    inv = w.inv_mat
    m = lam.coords
    coords = tuple(
        sum((Fraction(d[j], d[i]) * inv[j][i] * m[j] for j in range(rs.rank)), Fraction(0))
        for i in range(rs.rank)
    )
    return Weight(coords)


def dot_action(rs: RootSystem, w: WeylElement, lam: Weight) -> Weight:
    """Shifted action w . lam = w(lam + rho) - rho."""
    if w.rs is not rs:
        raise MixedRootSystems("element does not belong to the given root system")
    return weight_action(w, lam + rs.rho) - rs.rho


@dataclass(frozen=True)
class RootSequence:
    """A positive-root enumeration adapted to a group element.

    ``word`` is a reduced word for the longest element whose reversed
    length-``split`` prefix multiplies to the chosen element; ``betas``
    lists every positive root exactly once, the first ``split`` of them
    forming the element's inversion set.
    """

    word: tuple[int, ...]
    betas: tuple[Root, ...]
    split: int


def root_sequence_through(rs: RootSystem, w: WeylElement) -> RootSequence:
    """Enumerate the positive roots along a longest-element word through w.

    The reduced word for the longest element is the canonical word of
    w^{-1} followed by the canonical word of w * w0 (lengths add).  The
    j-th root is w applied to the image of the j-th letter's simple root
    under the preceding prefix, negated on the first l(w) steps.  The
    result is checked to enumerate all positive roots with the inversion
    set of w as prefix.
    """
    if w.rs is not rs:
        raise MixedRootSystems("element does not belong to the given root system")
    w0 = longest_element(rs)
    head = w.inverse().word
    tail = (w * w0).word
    letters = head + tail
    n = w.length
    assert len(letters) == w0.length, "length additivity failed for the w0 word"

    betas: list[Root] = []
    prefix = identity_element(rs)
    for j, letter in enumerate(letters, start=1):
        alpha = Root(tuple(1 if k == letter - 1 else 0 for k in range(rs.rank)))
        image = _act(w.mat, _act(prefix.mat, alpha.coords))
        if j <= n:
            image = tuple(-c for c in image)
        betas.append(Root(image))
        prefix = prefix * simple_reflection(rs, letter)

    assert {b.coords for b in betas} == {b.coords for b in rs.positive_roots}, (
        "root sequence does not enumerate the positive roots"
    )
    assert {b.coords for b in betas[:n]} == {b.coords for b in w.inversions}, (
        "root sequence prefix does not match the inversion set"
    )
    return RootSequence(word=letters, betas=tuple(betas), split=n)


def parse_word_text(rs: RootSystem, text: str) -> tuple[int, ...]:
    """Parse a word given as letters ("st", rank <= 2), indices ("1,2"),
    or the aliases "e" (identity) and "w0" (longest element)."""
    stripped = text.strip()
    if stripped in ("", "e"):
        return ()
    if stripped == "w0":
        return longest_element(rs).word
    if rs.rank <= 2 and all(ch in "st" for ch in stripped):
        return tuple(1 if ch == "s" else 2 for ch in stripped)
    try:
        return tuple(int(part) for part in stripped.replace(" ", ",").split(",") if part)
    except ValueError:
        raise ValueError(f"cannot parse Weyl word {text!r}") from None


def word_text(w: WeylElement) -> str:
    """Render an element as its canonical word ("e" for the identity)."""
    if not w.word:
        return "e"
    if w.rs.rank <= 2:
        return "".join("st"[i - 1] for i in w.word)
    return ",".join(str(i) for i in w.word)
