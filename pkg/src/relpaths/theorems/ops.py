"""Evaluation backends for law formulas.

Laws are written once against an ``ops`` namespace and relation-like values
supporting ``| & ~ @ .T .star() .plus() .dom() <= == !=``.

* :class:`ScalarOps` evaluates on :class:`~relpaths.algebra.Relation` values
  and returns plain bools.
* :class:`TableOps` evaluates on :class:`Batch` values, numpy arrays of
  relation encodings, by table lookup.  One call decides a law for a whole
  grid of instances, which is what makes exhaustive multi-variable sweeps
  at ``n <= 3`` (up to 512**3 instances) tractable.
* :class:`WordOps` evaluates batches for ``n <= 8`` with word-parallel bit
  arithmetic on uint64 arrays.  Its predicates are the closed formulas in
  :data:`FORMULAS`, independent of :mod:`relpaths.predicates`.
"""

from __future__ import annotations

from functools import reduce
from typing import Callable

import numpy as np

from relpaths import kernels, predicates as P
from relpaths.algebra import Relation, point

TerminationKind = P.TerminationKind

# unary bool-valued predicates available on both backends
BOOL_PREDICATES: dict[str, Callable[[Relation], bool]] = {
    "univalent": P.is_univalent,
    "injective": P.is_injective,
    "total": P.is_total,
    "surjective": P.is_surjective,
    "bijective": P.is_bijective,
    "irreflexive": P.is_irreflexive,
    "symmetric": P.is_symmetric,
    "vector": P.is_vector,
    "point": P.is_point,
    "atom": P.is_atom,
    "acyclic": P.is_acyclic,
    "connected": P.is_connected,
    "path": P.is_path,
    "cycle": P.is_cycle,
    "termpath": P.is_terminating_path,
    "injuni": lambda r: P.is_injective(r) and P.is_univalent(r),
    # raw termination inequalities, meaningful as classes only on paths
    "bt": lambda r: r <= P.head_form(r),
    "ft": lambda r: r <= P.tail_form(r),
    "term": lambda r: r <= P.head_form(r) & P.tail_form(r),
}

# unary relation-valued operations available on both backends
REL_FUNCTIONS: dict[str, Callable[[Relation], Relation]] = {
    "sp": P.start_points,
    "ep": P.end_points,
    "head": P.head_form,
    "tail": P.tail_form,
}


class ScalarOps:
    batched = False

    def __init__(self, n: int):
        self.n = n
        self.O, self.L, self.I = P.constants(n)
        self.points = [point(n, a) for a in range(n)]
        for name, fn in BOOL_PREDICATES.items():
            setattr(self, name, fn)
        for name, fn in REL_FUNCTIONS.items():
            setattr(self, name, fn)

    @staticmethod
    def implies(a, b) -> bool:
        return (not a) or bool(b)

    @staticmethod
    def iff(a, b) -> bool:
        return bool(a) == bool(b)

    @staticmethod
    def all(*xs) -> bool:
        return all(xs)

    @staticmethod
    def any(*xs) -> bool:
        return any(xs)

    @staticmethod
    def not_(a) -> bool:
        return not a

    @staticmethod
    def same(*xs) -> bool:
        """All arguments have the same truth value."""
        return len({bool(x) for x in xs}) <= 1

    def exists_point(self, fn) -> bool:
        return any(fn(p) for p in self.points)

    def exists_points(self, fn) -> bool:
        return any(fn(p, q) for p in self.points for q in self.points)

    def wrap(self, bits: int) -> Relation:
        return Relation._raw(self.n, bits)


def _f_head(o, R):
    return ~(o.L @ R) @ R @ o.L


def _f_tail(o, R):
    return o.L @ R @ ~R.dom()


def _f_path(o, R):
    return o.all(FORMULAS["injective"](o, R), FORMULAS["univalent"](o, R), FORMULAS["connected"](o, R))


# closed formulas for every predicate, usable on any backend
FORMULAS: dict[str, Callable] = {
    "univalent": lambda o, R: (R.T @ R) <= o.I,
    "injective": lambda o, R: (R @ R.T) <= o.I,
    "total": lambda o, R: o.I <= (R @ R.T),
    "surjective": lambda o, R: o.I <= (R.T @ R),
    "bijective": lambda o, R: o.all((R @ R.T) <= o.I, o.I <= (R.T @ R)),
    "irreflexive": lambda o, R: R <= ~o.I,
    "symmetric": lambda o, R: R == R.T,
    "vector": lambda o, R: R == R.dom(),
    "point": lambda o, R: o.all(R == R.dom(), (R @ R.T) <= o.I, o.I <= (R.T @ R)),
    "atom": lambda o, R: o.all(FORMULAS["point"](o, R.dom()), FORMULAS["point"](o, R.T.dom())),
    "acyclic": lambda o, R: R.plus() <= ~o.I,
    "connected": lambda o, R: (R @ o.L @ R) <= (R.star() | R.T.star()),
    "path": _f_path,
    "cycle": lambda o, R: o.all(_f_path(o, R), R.star() == R.T.star()),
    "termpath": lambda o, R: o.all(_f_path(o, R), R <= (_f_head(o, R) & _f_tail(o, R))),
    "injuni": lambda o, R: o.all((R @ R.T) <= o.I, (R.T @ R) <= o.I),
    "bt": lambda o, R: R <= _f_head(o, R),
    "ft": lambda o, R: R <= _f_tail(o, R),
    "term": lambda o, R: R <= (_f_head(o, R) & _f_tail(o, R)),
    "sp": lambda o, R: R.dom() & ~R.T.dom(),
    "ep": lambda o, R: R.T.dom() & ~R.dom(),
    "head": _f_head,
    "tail": _f_tail,
}


class Batch:
    """A numpy array of relation encodings that behaves like a relation.

    The arithmetic is delegated to the owning backend ``t``.
    """

    __slots__ = ("a", "t")
    __array_priority__ = 1000

    def __init__(self, a: np.ndarray, t):
        self.a = a
        self.t = t

    def __or__(self, other: Batch) -> Batch:
        return Batch(self.a | other.a, self.t)

    def __and__(self, other: Batch) -> Batch:
        return Batch(self.a & other.a, self.t)

    def __invert__(self) -> Batch:
        return Batch(self.a ^ self.t.full, self.t)

    def __matmul__(self, other: Batch) -> Batch:
        return Batch(self.t.compose(self.a, other.a), self.t)

    @property
    def T(self) -> Batch:
        return Batch(self.t.converse(self.a), self.t)

    def star(self) -> Batch:
        return Batch(self.t.star(self.a), self.t)

    def plus(self) -> Batch:
        return self @ self.star()

    def dom(self) -> Batch:
        return Batch(self.t.dom(self.a), self.t)

    def __le__(self, other: Batch) -> np.ndarray:
        return (self.a & ~other.a) == 0

    def __ge__(self, other: Batch) -> np.ndarray:
        return (other.a & ~self.a) == 0

    def __eq__(self, other: Batch) -> np.ndarray:  # type: ignore[override]
        return self.a == other.a

    def __ne__(self, other: Batch) -> np.ndarray:  # type: ignore[override]
        return self.a != other.a

    __hash__ = None  # type: ignore[assignment]

    def __bool__(self):
        raise TypeError("a Batch has no single truth value; compare against ops.O")


class _BatchLogic:
    """numpy logic shared by the batched backends."""

    batched = True

    @staticmethod
    def implies(a, b):
        return np.logical_or(np.logical_not(a), b)

    @staticmethod
    def iff(a, b):
        return np.equal(np.asarray(a, dtype=bool), np.asarray(b, dtype=bool))

    @staticmethod
    def all(*xs):
        return reduce(np.logical_and, xs)

    @staticmethod
    def any(*xs):
        return reduce(np.logical_or, xs)

    @staticmethod
    def not_(a):
        return np.logical_not(a)

    @staticmethod
    def same(*xs):
        xs = [np.asarray(x, dtype=bool) for x in xs]
        return np.logical_or(reduce(np.logical_and, xs), np.logical_not(reduce(np.logical_or, xs)))

    def exists_point(self, fn):
        return reduce(np.logical_or, (fn(p) for p in self.points), np.False_)

    def exists_points(self, fn):
        return reduce(
            np.logical_or, (fn(p, q) for p in self.points for q in self.points), np.False_
        )

    def const(self, bits: int) -> Batch:
        return Batch(np.asarray(bits, dtype=self.dtype), self)

    def wrap(self, a) -> Batch:
        return Batch(np.asarray(a, dtype=self.dtype), self)

    def _init_constants(self):
        O, L, I = P.constants(self.n)
        self.O, self.L, self.I = (self.const(c.bits) for c in (O, L, I))
        self.points = [self.const(point(self.n, a).bits) for a in range(self.n)]


class TableOps(_BatchLogic):
    """Lookup-table backend for universes with ``n <= 3``."""

    MAX_N = 3
    dtype = np.int64

    def __init__(self, n: int):
        if n > self.MAX_N:
            raise ValueError(f"table backend supports n <= {self.MAX_N}, got n={n}")
        self.n = n
        self.size = 1 << (n * n)
        self.full = self.size - 1
        rels = [Relation._raw(n, i) for i in range(self.size)]
        self._rels = rels
        table = np.zeros((self.size, self.size), dtype=np.uint16)
        kernels.fill_compose_table(table, n)
        self.comp = table.astype(np.int64)
        self.conv = np.array([r.T.bits for r in rels], dtype=np.int64)
        self.star_ = np.array([r.star().bits for r in rels], dtype=np.int64)
        self.dom_ = np.array([r.dom().bits for r in rels], dtype=np.int64)
        self._bool: dict[str, np.ndarray] = {}
        self._rel: dict[str, np.ndarray] = {}
        self._init_constants()

    def compose(self, a, b):
        return self.comp[a, b]

    def converse(self, a):
        return self.conv[a]

    def star(self, a):
        return self.star_[a]

    def dom(self, a):
        return self.dom_[a]

    def _bool_table(self, name: str) -> np.ndarray:
        tab = self._bool.get(name)
        if tab is None:
            fn = BOOL_PREDICATES[name]
            tab = np.fromiter((bool(fn(r)) for r in self._rels), dtype=bool, count=self.size)
            self._bool[name] = tab
        return tab

    def _rel_table(self, name: str) -> np.ndarray:
        tab = self._rel.get(name)
        if tab is None:
            fn = REL_FUNCTIONS[name]
            tab = np.fromiter((fn(r).bits for r in self._rels), dtype=np.int64, count=self.size)
            self._rel[name] = tab
        return tab

    def __getattr__(self, name: str):
        if name in BOOL_PREDICATES:
            tab = self._bool_table(name)
            return lambda x: tab[x.a]
        if name in REL_FUNCTIONS:
            tab = self._rel_table(name)
            return lambda x: Batch(tab[x.a], self)
        raise AttributeError(name)


class WordOps(_BatchLogic):
    """Word-parallel backend for ``n <= 8`` (one uint64 per relation).

    Composition and closure work a column at a time: ``col * rowmask``
    spreads column ``b`` across whole rows and ``row * colmask`` copies row
    ``b`` into every row, so one AND selects the contribution of ``b``.
    """

    MAX_N = 8
    dtype = np.uint64

    def __init__(self, n: int):
        if n > self.MAX_N:
            raise ValueError(f"word backend supports n <= {self.MAX_N}, got n={n}")
        self.n = n
        u = np.uint64
        self.full = u((1 << (n * n)) - 1)
        self.rowmask = u((1 << n) - 1)
        self.colmask = u(sum(1 << (a * n) for a in range(n)))
        self.diag = u(sum(1 << (a * n + a) for a in range(n)))
        self._shift = [u(k) for k in range(max(n * n, 1))]
        self._init_constants()
        for name, fn in FORMULAS.items():
            if name in REL_FUNCTIONS:
                setattr(self, name, (lambda f: lambda x: f(self, x))(fn))
            else:
                setattr(self, name, (lambda f: lambda x: np.asarray(f(self, x), dtype=bool))(fn))

    def _col(self, a, b):
        return (a >> self._shift[b]) & self.colmask

    def _row(self, a, b):
        return (a >> self._shift[b * self.n]) & self.rowmask

    def compose(self, a, b):
        a, b = np.broadcast_arrays(np.asarray(a, self.dtype), np.asarray(b, self.dtype))
        out = np.zeros(a.shape, dtype=self.dtype)
        for k in range(self.n):
            out |= (self._col(a, k) * self.rowmask) & (self._row(b, k) * self.colmask)
        return out

    def star(self, a):
        r = np.array(a, dtype=self.dtype, copy=True)
        for k in range(self.n):
            r |= (self._col(r, k) * self.rowmask) & (self._row(r, k) * self.colmask)
        return r | self.diag

    def converse(self, a):
        a = np.asarray(a, self.dtype)
        out = np.zeros(a.shape, dtype=self.dtype)
        n, one = self.n, np.uint64(1)
        for i in range(n):
            for j in range(n):
                out |= ((a >> self._shift[i * n + j]) & one) << self._shift[j * n + i]
        return out

    def dom(self, a):
        a = np.asarray(a, self.dtype)
        out = np.zeros(a.shape, dtype=self.dtype)
        for i in range(self.n):
            filled = (self._row(a, i) != 0).astype(self.dtype) * self.rowmask
            out |= filled << self._shift[i * self.n]
        return out
