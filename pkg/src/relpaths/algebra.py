"""Concrete relation algebra on a finite vertex set.

A :class:`Relation` is an immutable ``n x n`` Boolean matrix packed into a
single int (row-major, cell ``(a, b)`` at bit ``a*n + b``).  The integer is
also the relation's canonical encoding: enumeration order and witness
serialisation both use it.

Operators::

    R | S    union            R & S    meet          ~R     complement
    R @ S    composition      R.T      converse
    R <= S   inclusion        R == S   equality
    R.star() reflexive-transitive closure, R.plus() = R @ R.star()
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from relpaths import kernels

#: Largest vertex count accepted when constructing a universe.
MAX_VERTICES = 12


class UniverseMismatch(ValueError):
    """Two relations from different universes were combined."""

    def __init__(self, left: int, right: int):
        super().__init__(f"universe mismatch: n={left} vs n={right}")
        self.left = left
        self.right = right


@dataclass(frozen=True)
class Universe:
    """The vertex set ``{0, ..., n-1}``."""

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"vertex count must be a non-negative int, got {self.n!r}")
        if self.n > MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} exceeds the cap of {MAX_VERTICES}")

    @property
    def cells(self) -> int:
        return self.n * self.n

    @property
    def size(self) -> int:
        """Number of relations on this universe."""
        return 1 << self.cells

    def vertices(self) -> range:
        return range(self.n)


def _n_of(u: Universe | int) -> int:
    if isinstance(u, Universe):
        return u.n
    return Universe(u).n


class Relation:
    __slots__ = ("n", "bits", "_conv", "_star")

    def __init__(self, n: Universe | int, bits: int = 0):
        n = _n_of(n)
        if bits < 0 or bits >> (n * n):
            raise ValueError(f"encoding {bits} out of range for n={n}")
        self.n = n
        self.bits = bits
        self._conv = None
        self._star = None

    @classmethod
    def _raw(cls, n: int, bits: int) -> Relation:
        r = object.__new__(cls)
        r.n = n
        r.bits = bits
        r._conv = None
        r._star = None
        return r

    # -- construction -------------------------------------------------

    @classmethod
    def from_pairs(cls, n: Universe | int, pairs: Iterable[tuple[int, int]]) -> Relation:
        n = _n_of(n)
        bits = 0
        for a, b in pairs:
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"pair ({a}, {b}) outside universe n={n}")
            bits |= 1 << (a * n + b)
        return cls._raw(n, bits)

    @classmethod
    def from_matrix(cls, rows: Iterable[Iterable[bool | int]]) -> Relation:
        rows = [list(r) for r in rows]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        return cls.from_pairs(n, ((a, b) for a in range(n) for b in range(n) if rows[a][b]))

    @property
    def universe(self) -> Universe:
        return Universe(self.n)

    # -- inspection ---------------------------------------------------

    def __contains__(self, pair: tuple[int, int]) -> bool:
        a, b = pair
        return 0 <= a < self.n and 0 <= b < self.n and bool((self.bits >> (a * self.n + b)) & 1)

    def pairs(self) -> list[tuple[int, int]]:
        n, bits, out = self.n, self.bits, []
        while bits:
            low = bits & -bits
            i = low.bit_length() - 1
            out.append(divmod(i, n))
            bits ^= low
        return out

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.pairs())

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def rows(self) -> list[int]:
        """Row bit masks; bit ``b`` of ``rows()[a]`` is cell ``(a, b)``."""
        rm = (1 << self.n) - 1
        return [(self.bits >> (a * self.n)) & rm for a in range(self.n)]

    def to_matrix(self) -> list[list[bool]]:
        return [[(row >> b) & 1 == 1 for b in range(self.n)] for row in self.rows()]

    def row_set(self) -> list[int]:
        """Indices of non-empty rows (the vertex set when this is a vector)."""
        return [a for a, row in enumerate(self.rows()) if row]

    def __bool__(self) -> bool:
        return self.bits != 0

    def __repr__(self) -> str:
        return f"Relation(n={self.n}, pairs={self.pairs()})"

    def __hash__(self) -> int:
        return hash((self.n, self.bits))

    # -- Boolean lattice ----------------------------------------------

    def _check(self, other: Relation) -> None:
        if self.n != other.n:
            raise UniverseMismatch(self.n, other.n)

    def __or__(self, other: Relation) -> Relation:
        if not isinstance(other, Relation):
            return NotImplemented
        self._check(other)
        return Relation._raw(self.n, self.bits | other.bits)

    def __and__(self, other: Relation) -> Relation:
        if not isinstance(other, Relation):
            return NotImplemented
        self._check(other)
        return Relation._raw(self.n, self.bits & other.bits)

    def __sub__(self, other: Relation) -> Relation:
        if not isinstance(other, Relation):
            return NotImplemented
        self._check(other)
        return Relation._raw(self.n, self.bits & ~other.bits)

    def __invert__(self) -> Relation:
        return Relation._raw(self.n, self.bits ^ ((1 << (self.n * self.n)) - 1))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Relation):
            return NotImplemented
        self._check(other)
        return self.bits == other.bits

    def __ne__(self, other: object) -> bool:
        if not isinstance(other, Relation):
            return NotImplemented
        self._check(other)
        return self.bits != other.bits

    def __le__(self, other: Relation) -> bool:
        if not isinstance(other, Relation):
            return NotImplemented
        self._check(other)
        return self.bits & ~other.bits == 0

    def __ge__(self, other: Relation) -> bool:
        if not isinstance(other, Relation):
            return NotImplemented
        self._check(other)
        return other.bits & ~self.bits == 0

    def __lt__(self, other: Relation) -> bool:
        return self <= other and self.bits != other.bits

    def __gt__(self, other: Relation) -> bool:
        return self >= other and self.bits != other.bits

    # -- relational operations ----------------------------------------

    def __matmul__(self, other: Relation) -> Relation:
        if not isinstance(other, Relation):
            return NotImplemented
        self._check(other)
        return Relation._raw(self.n, kernels.compose(self.bits, other.bits, self.n))

    @property
    def T(self) -> Relation:
        if self._conv is None:
            self._conv = Relation._raw(self.n, kernels.converse(self.bits, self.n))
        return self._conv

    def star(self) -> Relation:
        if self._star is None:
            self._star = Relation._raw(self.n, kernels.star(self.bits, self.n))
        return self._star

    def plus(self) -> Relation:
        return self @ self.star()

    def dom(self) -> Relation:
        """``R ; L``, the vector of vertices with a successor."""
        return Relation._raw(self.n, kernels.row_fill(self.bits, self.n))


def empty(u: Universe | int) -> Relation:
    return Relation._raw(_n_of(u), 0)


def universal(u: Universe | int) -> Relation:
    n = _n_of(u)
    return Relation._raw(n, (1 << (n * n)) - 1)


def identity(u: Universe | int) -> Relation:
    n = _n_of(u)
    bits = 0
    for a in range(n):
        bits |= 1 << (a * n + a)
    return Relation._raw(n, bits)


def vector(u: Universe | int, vertices: Iterable[int]) -> Relation:
    """Row-constant relation whose full rows are ``vertices``."""
    n = _n_of(u)
    rm = (1 << n) - 1
    bits = 0
    for a in vertices:
        if not 0 <= a < n:
            raise ValueError(f"vertex {a} outside universe n={n}")
        bits |= rm << (a * n)
    return Relation._raw(n, bits)


def point(u: Universe | int, vertex: int) -> Relation:
    return vector(u, [vertex])


def atom(u: Universe | int, a: int, b: int) -> Relation:
    return Relation.from_pairs(u, [(a, b)])


def union(r: Relation, s: Relation) -> Relation:
    return r | s


def meet(r: Relation, s: Relation) -> Relation:
    return r & s


def complement(r: Relation) -> Relation:
    return ~r


def compose(*rs: Relation) -> Relation:
    """Left-to-right composition of one or more relations."""
    if not rs:
        raise TypeError("compose needs at least one relation")
    out = rs[0]
    for r in rs[1:]:
        out = out @ r
    return out


def converse(r: Relation) -> Relation:
    return r.T


def star(r: Relation) -> Relation:
    return r.star()


def plus(r: Relation) -> Relation:
    return r.plus()


def subset(r: Relation, s: Relation) -> bool:
    return r <= s


def equal(r: Relation, s: Relation) -> bool:
    return r == s


def all_relations(u: Universe | int) -> Iterator[Relation]:
    """Every relation on the universe in increasing encoding order."""
    n = _n_of(u)
    for bits in range(1 << (n * n)):
        yield Relation._raw(n, bits)
