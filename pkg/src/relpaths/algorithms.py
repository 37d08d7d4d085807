"""Relational graph programs run under a dynamic Hoare-style harness.

Each program mirrors a while-program whose variables are relations.  With
``check=True`` the harness evaluates every precondition clause, every
loop-invariant conjunct at each loop head, and every postcondition clause,
raising on the first false verdict.  Loops are bounded by a step budget of
``n + 1`` iterations in place of a variant function.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable

from relpaths.algebra import Relation
from relpaths.predicates import (
    PathClass,
    classify,
    constants,
    end_points,
    is_acyclic,
    is_cycle,
    is_injective,
    is_point,
    is_terminating_path,
    is_vector,
    is_well_founded,
    min_set,
    start_points,
)


class AlgorithmError(Exception):
    trace: Trace | None = None


class PreconditionViolated(AlgorithmError):
    def __init__(self, clause: str):
        super().__init__(f"Pre: {clause}")
        self.clause = clause


class InvariantViolated(AlgorithmError):
    def __init__(self, conjunct: str, iteration: int):
        super().__init__(f"Inv: {conjunct} (iteration {iteration})")
        self.conjunct = conjunct
        self.iteration = iteration


class PostconditionViolated(AlgorithmError):
    def __init__(self, clause: str):
        super().__init__(f"Post: {clause}")
        self.clause = clause


class StepBudgetExceeded(AlgorithmError):
    def __init__(self, loop: str, budget: int):
        super().__init__(f"loop {loop!r} exceeded its budget of {budget} iterations")
        self.loop = loop
        self.budget = budget


class EmptyChoice(AlgorithmError):
    def __init__(self, op: str):
        super().__init__(f"{op} called on an empty relation")
        self.op = op


# -- choice operations ---------------------------------------------------


@dataclass(frozen=True)
class Choice:
    op: str  # "ChoosePoint" | "ChooseAtom"
    argument: int
    chosen: int


@dataclass
class ChoiceLog:
    entries: list[Choice] = field(default_factory=list)

    def record(self, op: str, argument: Relation, chosen: Relation) -> None:
        self.entries.append(Choice(op, argument.bits, chosen.bits))

    def replay(self, n: int) -> bool:
        """Re-run every logged choice and confirm it reproduces."""
        for c in self.entries:
            arg = Relation(n, c.argument)
            again = choose_point(arg) if c.op == "ChoosePoint" else choose_atom(arg)
            if again.bits != c.chosen:
                return False
        return True

    def __len__(self) -> int:
        return len(self.entries)


def choose_point(v: Relation, log: ChoiceLog | None = None) -> Relation:
    """The point of the least vertex in the non-empty vector ``v``."""
    if not is_vector(v):
        raise ValueError("choose_point expects a vector")
    if not v:
        raise EmptyChoice("ChoosePoint")
    low = (v.bits & -v.bits).bit_length() - 1
    a = low // v.n
    rm = (1 << v.n) - 1
    chosen = Relation._raw(v.n, rm << (a * v.n))
    if log is not None:
        log.record("ChoosePoint", v, chosen)
    return chosen


def choose_atom(x: Relation, log: ChoiceLog | None = None) -> Relation:
    """The single-pair relation at the lexicographically least cell of ``x``."""
    if not x:
        raise EmptyChoice("ChooseAtom")
    chosen = Relation._raw(x.n, x.bits & -x.bits)
    if log is not None:
        log.record("ChooseAtom", x, chosen)
    return chosen


# -- traces --------------------------------------------------------------


@dataclass
class Snapshot:
    loop: str
    iteration: int
    variables: dict[str, int]
    verdicts: dict[str, bool]


@dataclass
class Trace:
    algorithm: str
    n: int
    checked: bool
    snapshots: list[Snapshot] = field(default_factory=list)
    choices: ChoiceLog = field(default_factory=ChoiceLog)
    steps: int = 0
    final: dict[str, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "algorithm": self.algorithm,
            "n": self.n,
            "checked": self.checked,
            "steps": self.steps,
            "snapshots": [
                {
                    "loop": s.loop,
                    "iteration": s.iteration,
                    "variables": s.variables,
                    "verdicts": s.verdicts,
                }
                for s in self.snapshots
            ],
            "choices": [
                {"op": c.op, "argument": c.argument, "chosen": c.chosen}
                for c in self.choices.entries
            ],
            "final": self.final,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2)


Conjuncts = list[tuple[str, Callable[[], bool]]]


def _require(trace: Trace, clauses: Conjuncts, error: type[AlgorithmError]) -> None:
    for name, test in clauses:
        if not test():
            exc = error(name)
            exc.trace = trace
            raise exc


def _loop_head(
    trace: Trace, loop: str, iteration: int, variables: dict[str, Relation], inv: Conjuncts
) -> None:
    verdicts = {}
    if trace.checked:
        for name, test in inv:
            verdicts[name] = bool(test())
    trace.snapshots.append(
        Snapshot(loop, iteration, {k: v.bits for k, v in variables.items()}, verdicts)
    )
    for name, ok in verdicts.items():
        if not ok:
            exc = InvariantViolated(name, iteration)
            exc.trace = trace
            raise exc


def _budget(trace: Trace, loop: str, iteration: int) -> None:
    if iteration > trace.n + 1:
        exc = StepBudgetExceeded(loop, trace.n + 1)
        exc.trace = trace
        raise exc


# -- Algorithm: construct a path ----------------------------------------


def _path_pre(D: Relation, x: Relation, y: Relation) -> Conjuncts:
    return [
        ("D acyclic", lambda: is_acyclic(D)),
        ("point(x)", lambda: is_point(x)),
        ("point(y)", lambda: is_point(y)),
        ("x ≠ y", lambda: x != y),
        ("D*;y ⊆ Dᵀ*;x", lambda: D.star() @ y <= D.T.star() @ x),
    ]


def _path_loop(D: Relation, x: Relation, y: Relation, trace: Trace) -> Relation:
    """The greedy backward walk from ``y`` to ``x``, shared with construct_cycle."""
    log = trace.choices
    p = choose_point(D @ y, log)
    W = p @ y.T
    q = p

    def inv() -> Conjuncts:
        return [
            ("D acyclic", lambda: is_acyclic(D)),
            ("point(x)", lambda: is_point(x)),
            ("point(y)", lambda: is_point(y)),
            ("point(q)", lambda: is_point(q)),
            ("D*;q ⊆ Dᵀ*;x", lambda: D.star() @ q <= D.T.star() @ x),
            ("W ⊆ D", lambda: W <= D),
            ("termPath(W)", lambda: is_terminating_path(W)),
            ("q = sp(W)", lambda: q == start_points(W)),
            ("y = ep(W)", lambda: y == end_points(W)),
        ]

    iteration = 0
    while True:
        _loop_head(trace, "path", iteration, {"W": W, "q": q}, inv())
        if q == x:
            break
        iteration += 1
        trace.steps += 1
        _budget(trace, "path", iteration)
        p = choose_point(D @ q, log)
        W = W | p @ q.T
        q = p
    return W


def construct_path(
    D: Relation, x: Relation, y: Relation, check: bool = True
) -> tuple[Relation, Trace]:
    """Build a terminating path ``W ⊆ D`` from point ``x`` to point ``y``."""
    trace = Trace("construct_path", D.n, check)
    if check:
        _require(trace, _path_pre(D, x, y), PreconditionViolated)
    W = _path_loop(D, x, y, trace)
    if check:
        _require(
            trace,
            [
                ("W ⊆ D", lambda: W <= D),
                ("termPath(W)", lambda: is_terminating_path(W)),
                ("x = sp(W)", lambda: x == start_points(W)),
                ("y = ep(W)", lambda: y == end_points(W)),
            ],
            PostconditionViolated,
        )
    trace.final = {"W": W.bits}
    return W, trace


# -- Algorithm: topological sorting -------------------------------------


def topological_sort(R: Relation, check: bool = True) -> tuple[Relation, Trace]:
    """Linearise a well-founded relation as a terminating path over all vertices."""
    trace = Trace("topological_sort", R.n, check)
    O, L, I = constants(R.n)
    log = trace.choices
    if check:
        _require(
            trace,
            [("non-empty universe", lambda: R.n > 0), ("well-founded", lambda: is_well_founded(R))],
            PreconditionViolated,
        )
    W = O
    q = choose_point(min_set(R, L), log)
    v = q

    def inv() -> Conjuncts:
        return [
            ("well-founded", lambda: is_well_founded(R)),
            ("R ∩ v;vᵀ ⊆ W⁺", lambda: R & v @ v.T <= W.plus()),
            ("termPath(W)", lambda: is_terminating_path(W)),
            ("point(q)", lambda: is_point(q)),
            ("q ⊆ v", lambda: q <= v),
            ("W = O ∨ q = ep(W)", lambda: W == O or q == end_points(W)),
            ("v = v;L", lambda: v == v @ L),
            ("W;L = v ∩ ¬q", lambda: W @ L == v & ~q),
            ("R;v ⊆ v", lambda: R @ v <= v),
        ]

    iteration = 0
    while True:
        _loop_head(trace, "sort", iteration, {"W": W, "q": q, "v": v}, inv())
        if v == L:
            break
        iteration += 1
        trace.steps += 1
        _budget(trace, "sort", iteration)
        p = choose_point(min_set(R, ~v), log)
        W = W | q @ p.T
        q = p
        v = v | p
    if check:
        _require(
            trace,
            [
                ("R ⊆ W⁺", lambda: R <= W.plus()),
                ("termPath(W)", lambda: is_terminating_path(W)),
                ("(W ∪ Wᵀ);L = ¬I;L", lambda: (W | W.T) @ L == ~I @ L),
            ],
            PostconditionViolated,
        )
    trace.final = {"W": W.bits}
    return W, trace


# -- Algorithm: construct a non-empty cycle ------------------------------


def construct_cycle(R: Relation, check: bool = True) -> tuple[Relation, Trace]:
    """Find a non-empty cycle ``C ⊆ R`` in a relation that is not acyclic."""
    trace = Trace("construct_cycle", R.n, check)
    O, L, I = constants(R.n)
    log = trace.choices
    if check:
        _require(trace, [("R⁺ ∩ I ≠ O", lambda: R.plus() & I != O)], PreconditionViolated)
    y = choose_point((R.plus() & I) @ L, log)
    x = choose_point(R.star() @ y & R.T @ y, log)
    if x == y:
        C = y @ x.T
        trace.final = {"x": x.bits, "y": y.bits, "C": C.bits}
    else:
        D = O
        v = x

        def inv() -> Conjuncts:
            return [
                ("point(x)", lambda: is_point(x)),
                ("point(y)", lambda: is_point(y)),
                ("x ≠ y", lambda: x != y),
                ("y ⊆ Rᵀ*;x", lambda: y <= R.T.star() @ x),
                ("y;xᵀ ⊆ R", lambda: y @ x.T <= R),
                ("D ⊆ R", lambda: D <= R),
                ("D acyclic", lambda: is_acyclic(D)),
                ("D;Dᵀ ⊆ I", lambda: is_injective(D)),
                ("D ⊆ v;vᵀ", lambda: D <= v @ v.T),
                ("v = v;L", lambda: v == v @ L),
                ("x;vᵀ ⊆ D*", lambda: x @ v.T <= D.star()),
                ("D;x = O", lambda: D @ x == O),
                ("v = x ∪ Dᵀ;L", lambda: v == x | D.T @ L),
            ]

        iteration = 0
        while True:
            _loop_head(trace, "tree", iteration, {"D": D, "v": v}, inv())
            if y <= v:
                break
            iteration += 1
            trace.steps += 1
            _budget(trace, "tree", iteration)
            e = choose_atom(v @ (~v).T & R, log)
            D = D | e
            v = v | e.T @ L

        if check:
            try:
                _require(trace, _path_pre(D, x, y), PreconditionViolated)
            except PreconditionViolated as exc:
                err = InvariantViolated(f"Pre(D,x,y): {exc.clause}", iteration)
                err.trace = trace
                raise err from exc
        W = _path_loop(D, x, y, trace)
        C = W | y @ x.T
        trace.final = {"x": x.bits, "y": y.bits, "D": D.bits, "W": W.bits, "C": C.bits}
    if check:
        _require(
            trace,
            [
                ("C ≠ O", lambda: C != O),
                ("cycle(C)", lambda: is_cycle(C)),
                ("C ⊆ R", lambda: C <= R),
            ],
            PostconditionViolated,
        )
    return C, trace


# -- relational paths as vertex sequences ---------------------------------


def path_to_sequence(W: Relation) -> list[int]:
    """Vertices of a finite path in order; a cycle starts at its least vertex."""
    cls = classify(W)
    if cls is PathClass.NOT_A_PATH:
        raise ValueError("path_to_sequence expects a path")
    if cls is PathClass.EMPTY:
        return []
    succ = dict(W.pairs())
    if cls is PathClass.CYCLE:
        start = min(succ)
        seq = [start]
        nxt = succ[start]
        while nxt != start:
            seq.append(nxt)
            nxt = succ[nxt]
        return seq
    (start,) = start_points(W).row_set()
    seq = [start]
    while seq[-1] in succ:
        seq.append(succ[seq[-1]])
    return seq


def sequence_to_relation(n: int, seq: list[int], closed: bool = False) -> Relation:
    """Edge relation of a vertex sequence; ``closed`` adds the last-to-first edge."""
    pairs = list(zip(seq, seq[1:]))
    if closed and seq:
        pairs.append((seq[-1], seq[0]))
    return Relation.from_pairs(n, pairs)


__all__ = [
    "AlgorithmError",
    "Choice",
    "ChoiceLog",
    "EmptyChoice",
    "InvariantViolated",
    "PostconditionViolated",
    "PreconditionViolated",
    "Snapshot",
    "StepBudgetExceeded",
    "Trace",
    "choose_atom",
    "choose_point",
    "construct_cycle",
    "construct_path",
    "path_to_sequence",
    "sequence_to_relation",
    "topological_sort",
]
