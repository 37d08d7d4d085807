"""Relational properties and the path taxonomy.

Every predicate here is a closed algebraic formula over :mod:`relpaths.algebra`
operations; none of them inspects vertices one by one.  The pointwise
oracles that cross-check these formulas live in the test tree.
"""

from __future__ import annotations

import enum
from functools import lru_cache

from relpaths.algebra import Relation, empty, identity, universal


class BasicProperty(enum.Enum):
    UNIVALENT = "Univalent"
    INJECTIVE = "Injective"
    TOTAL = "Total"
    SURJECTIVE = "Surjective"
    BIJECTIVE = "Bijective"
    IRREFLEXIVE = "Irreflexive"
    SYMMETRIC = "Symmetric"
    VECTOR = "Vector"
    POINT = "Point"
    ATOM = "Atom"
    ACYCLIC = "Acyclic"
    WELL_FOUNDED = "WellFounded"


class TerminationKind(enum.Enum):
    BACKWARD_TERMINATING = "BackwardTerminating"
    FORWARD_TERMINATING = "ForwardTerminating"
    TERMINATING = "Terminating"
    BACKWARD_FINITE = "BackwardFinite"
    FORWARD_FINITE = "ForwardFinite"
    FINITE = "Finite"


class PathClass(enum.Enum):
    NOT_A_PATH = "NotAPath"
    EMPTY = "Empty"
    CYCLE = "Cycle"
    FINITE_CHAIN = "FiniteChain"


class Rooted(enum.Enum):
    PATH = "RootedPath"
    NON_EMPTY = "RootedNonEmpty"
    BACKWARD_FINITE = "RootedBackwardFinite"
    NON_EMPTY_BACKWARD_FINITE = "RootedNonEmptyBackwardFinite"
    CYCLE = "RootedCycle"
    BACKWARD_TERMINATING = "RootedBackwardTerminating"
    TERMINATING = "RootedTerminating"


class PathRequired(ValueError):
    """A path-only characterisation was asked about a non-path."""


@lru_cache(maxsize=None)
def constants(n: int) -> tuple[Relation, Relation, Relation]:
    """``(O, L, I)`` for a universe of ``n`` vertices."""
    return empty(n), universal(n), identity(n)


# -- basic properties ---------------------------------------------------


def is_univalent(r: Relation) -> bool:
    return r.T @ r <= constants(r.n)[2]


def is_injective(r: Relation) -> bool:
    return r @ r.T <= constants(r.n)[2]


def is_total(r: Relation) -> bool:
    return constants(r.n)[2] <= r @ r.T


def is_surjective(r: Relation) -> bool:
    return constants(r.n)[2] <= r.T @ r


def is_bijective(r: Relation) -> bool:
    return is_injective(r) and is_surjective(r)


def is_irreflexive(r: Relation) -> bool:
    return r <= ~constants(r.n)[2]


def is_symmetric(r: Relation) -> bool:
    return r == r.T


def is_vector(r: Relation) -> bool:
    return r == r.dom()


def is_point(r: Relation) -> bool:
    return is_vector(r) and is_bijective(r)


def is_atom(r: Relation) -> bool:
    return is_point(r.dom()) and is_point(r.T.dom())


def is_acyclic(r: Relation) -> bool:
    return r.plus() <= ~constants(r.n)[2]


def is_well_founded(r: Relation) -> bool:
    # on a finite universe well-foundedness coincides with acyclicity
    return is_acyclic(r)


_BASIC = {
    BasicProperty.UNIVALENT: is_univalent,
    BasicProperty.INJECTIVE: is_injective,
    BasicProperty.TOTAL: is_total,
    BasicProperty.SURJECTIVE: is_surjective,
    BasicProperty.BIJECTIVE: is_bijective,
    BasicProperty.IRREFLEXIVE: is_irreflexive,
    BasicProperty.SYMMETRIC: is_symmetric,
    BasicProperty.VECTOR: is_vector,
    BasicProperty.POINT: is_point,
    BasicProperty.ATOM: is_atom,
    BasicProperty.ACYCLIC: is_acyclic,
    BasicProperty.WELL_FOUNDED: is_well_founded,
}


def is_basic(r: Relation, prop: BasicProperty | str) -> bool:
    return _BASIC[BasicProperty(prop)](r)


# -- connectivity and paths ---------------------------------------------


def is_connected(r: Relation) -> bool:
    L = constants(r.n)[1]
    return r @ L @ r <= r.star() | r.T.star()


def is_path(r: Relation) -> bool:
    return is_injective(r) and is_univalent(r) and is_connected(r)


def path_defects(r: Relation) -> list[str]:
    """Names of the failed path conditions, empty iff ``r`` is a path."""
    out = []
    if not is_univalent(r):
        out.append("not univalent")
    if not is_injective(r):
        out.append("not injective")
    if not is_connected(r):
        out.append("not connected")
    return out


def start_points(r: Relation) -> Relation:
    return r.dom() & ~r.T.dom()


def end_points(r: Relation) -> Relation:
    return r.T.dom() & ~r.dom()


def head_form(r: Relation) -> Relation:
    """``-(L;R) ; R ; L``: universal iff ``r`` has a start point, else empty."""
    L = constants(r.n)[1]
    return ~(L @ r) @ r @ L


def tail_form(r: Relation) -> Relation:
    """``L ; R ; -(R;L)``: universal iff ``r`` has an end point, else empty."""
    L = constants(r.n)[1]
    return L @ r @ ~r.dom()


def _termination_form(r: Relation, kind: TerminationKind) -> bool:
    if kind is TerminationKind.BACKWARD_TERMINATING:
        return r <= head_form(r)
    if kind is TerminationKind.FORWARD_TERMINATING:
        return r <= tail_form(r)
    if kind is TerminationKind.TERMINATING:
        return r <= head_form(r) & tail_form(r)
    back = r.T.star()
    if kind is TerminationKind.BACKWARD_FINITE:
        return r <= head_form(r) | back
    if kind is TerminationKind.FORWARD_FINITE:
        return r <= tail_form(r) | back
    return r <= (head_form(r) & tail_form(r)) | back


def has_termination(r: Relation, kind: TerminationKind | str) -> bool:
    """Termination/finiteness class of a path, via its single-inequality form.

    Raises :class:`PathRequired` for non-paths: the characterisations only
    mean termination when ``r`` is a path.
    """
    kind = TerminationKind(kind)
    if not is_path(r):
        raise PathRequired(f"{kind.value} is only defined for paths")
    return _termination_form(r, kind)


def is_terminating_path(r: Relation) -> bool:
    return is_path(r) and _termination_form(r, TerminationKind.TERMINATING)


def is_cycle(r: Relation) -> bool:
    return is_path(r) and r.star() == r.T.star()


def classify(r: Relation) -> PathClass:
    if not is_path(r):
        return PathClass.NOT_A_PATH
    if not r:
        return PathClass.EMPTY
    if r.star() == r.T.star():
        return PathClass.CYCLE
    return PathClass.FINITE_CHAIN


def min_set(s: Relation, w: Relation) -> Relation:
    """The ``s``-minimal members of the vertex set ``w``."""
    if not is_vector(w):
        raise ValueError("min_set expects a vector as its second argument")
    return w & ~(s.T @ w)


# -- rooted characterisations -------------------------------------------


class RootedPreconditionError(ValueError):
    def __init__(self, prop: str):
        super().__init__(f"rooted check precondition failed: {prop}")
        self.prop = prop


def rooted_check(r: Relation, p: Relation, kind: Rooted | str, q: Relation | None = None) -> bool:
    kind = Rooted(kind)
    if not is_injective(r):
        raise RootedPreconditionError("R injective")
    if not is_univalent(r):
        raise RootedPreconditionError("R univalent")
    if not is_point(p):
        raise RootedPreconditionError("p point")
    if kind is Rooted.TERMINATING and (q is None or not is_point(q)):
        raise RootedPreconditionError("q point")

    L = constants(r.n)[1]
    pr = p @ r
    if kind is Rooted.PATH:
        return pr <= r.star() | r.T.star()
    if kind is Rooted.NON_EMPTY:
        return pr <= r.star() | r.T.star() and p <= (r | r.T) @ L
    reach = pr <= r.plus()
    if kind is Rooted.BACKWARD_FINITE:
        return reach
    if kind is Rooted.NON_EMPTY_BACKWARD_FINITE:
        return reach and p <= r.dom()
    if kind is Rooted.CYCLE:
        return reach and p <= r.T.dom()
    if kind is Rooted.BACKWARD_TERMINATING:
        return reach and not (r @ p)
    return reach and p <= r.star() @ q and not (r.T @ q)
