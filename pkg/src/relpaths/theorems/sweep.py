"""Exhaustive and randomized law checking.

Work is split into *units* that depend only on the law, the universe size,
the mode and the seed: exhaustive units are slices of the first variable's
pool, random units are fixed-size sample blocks with their own generator.
Units are merged in order, so reports do not depend on the worker count.
"""

from __future__ import annotations

import enum
import fnmatch
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from relpaths.algebra import Relation, Universe, point, vector
from relpaths.models import MAX_SAMPLE_N, block_rng, sample
from relpaths.theorems.catalog import LAWS, MUTANTS, Law, get_law
from relpaths.theorems.ops import ScalarOps, TableOps, WordOps

EXHAUSTIVE_MAX_N = 4
#: Multi-variable laws are swept exhaustively only while their guarded
#: product stays below this many instances.
EXHAUSTIVE_LIMIT = 1 << 24
BLOCK = 5000
GRID_CHUNK = 1 << 20
SCALAR_CHUNK = 20000
DEFAULT_SAMPLES = 100_000


class Status(str, enum.Enum):
    HOLDS = "Holds"
    COUNTEREXAMPLE = "Counterexample"
    INCONCLUSIVE = "Inconclusive"
    SKIPPED = "Skipped"


Binding = tuple[tuple[str, int], ...]


@dataclass(frozen=True)
class CheckResult:
    law: str
    status: Status
    instances: int
    qualifying: int
    counterexamples: int = 0
    witness: Binding | None = None
    example: Binding | None = None
    note: str = ""


@dataclass
class SuiteReport:
    n: int
    mode: str
    seed: int
    samples: int
    results: list[CheckResult] = field(default_factory=list)

    def count(self, status: Status) -> int:
        return sum(r.status is status for r in self.results)

    @property
    def ok(self) -> bool:
        return self.count(Status.COUNTEREXAMPLE) == 0 and self.count(Status.INCONCLUSIVE) == 0

    def by_law(self) -> dict[str, CheckResult]:
        return {r.law: r for r in self.results}


def enumerate_relations(u: Universe | int) -> Iterator[Relation]:
    """All ``2**(n*n)`` relations in increasing encoding order (``n <= 4``)."""
    n = u.n if isinstance(u, Universe) else Universe(u).n
    if n > EXHAUSTIVE_MAX_N:
        raise ValueError(f"exhaustive bound is {EXHAUSTIVE_MAX_N}; use sampling for n={n}")
    for bits in range(1 << (n * n)):
        yield Relation._raw(n, bits)


def domain_size(kind: str, n: int) -> int:
    if kind == "rel":
        return 1 << (n * n)
    if kind == "point":
        return n
    return 1 << n


def _domain(kind: str, n: int) -> list[int]:
    if kind == "rel":
        return list(range(1 << (n * n)))
    if kind == "point":
        return [point(n, a).bits for a in range(n)]
    # subsets in increasing mask order give increasing encodings
    return [vector(n, [a for a in range(n) if m >> a & 1]).bits for m in range(1 << n)]


# -- backends ----------------------------------------------------------------


@lru_cache(maxsize=None)
def get_ops(n: int, backend: str):
    if backend == "scalar":
        return ScalarOps(n)
    if backend == "table":
        return TableOps(n)
    return WordOps(n)


def pick_backend(law: Law, n: int, requested: str = "auto") -> str:
    if law.scalar_only or requested == "scalar" or n > WordOps.MAX_N:
        return "scalar"
    if requested == "auto":
        return "table" if n <= TableOps.MAX_N else "word"
    if requested == "table" and n > TableOps.MAX_N:
        return "word"
    return requested


def _as_bool(x, shape) -> np.ndarray:
    return np.broadcast_to(np.asarray(x, dtype=bool), shape)


def _rels(ops, n, values):
    return [Relation._raw(n, int(v)) for v in values]


# -- exhaustive pools --------------------------------------------------------


@lru_cache(maxsize=None)
def _pools(law_id: str, n: int, backend: str) -> tuple:
    """Per-variable candidates that pass the variable's own guard, sorted."""
    law = get_law(law_id)
    ops = get_ops(n, backend)
    pools = []
    for var in law.vars:
        dom = _domain(var.kind, n)
        if var.guard is None:
            keep = dom
        elif backend == "scalar":
            keep = [b for b, r in zip(dom, _rels(ops, n, dom)) if var.guard(ops, r)]
        else:
            arr = np.asarray(dom, dtype=ops.dtype)
            mask = _as_bool(var.guard(ops, ops.wrap(arr)), arr.shape)
            keep = arr[mask].tolist()
        if backend == "scalar":
            pools.append(tuple(keep))
        else:
            pools.append(np.asarray(keep, dtype=ops.dtype))
    return tuple(pools)


def _units_exhaustive(law: Law, n: int, backend: str) -> list[tuple[int, int]]:
    pools = _pools(law.id, n, backend)
    if not pools or len(pools[0]) == 0:
        return []
    rest = math.prod(len(p) for p in pools[1:])
    if rest == 0:
        return []
    budget = SCALAR_CHUNK if backend == "scalar" else GRID_CHUNK
    step = max(1, budget // rest)
    size = len(pools[0])
    return [(lo, min(size, lo + step)) for lo in range(0, size, step)]


# -- partial results ---------------------------------------------------------


@dataclass
class _Partial:
    qualifying: int = 0
    failures: int = 0
    witness: tuple[int, ...] | None = None
    example: tuple[int, ...] | None = None

    def merge(self, other: _Partial) -> None:
        self.qualifying += other.qualifying
        self.failures += other.failures
        if self.witness is None:
            self.witness = other.witness
        if self.example is None:
            self.example = other.example


def _grid_partial(law: Law, ops, arrays: Sequence[np.ndarray], mask=None) -> _Partial:
    vals = [ops.wrap(a) for a in arrays]
    shape = np.broadcast_shapes(*(a.shape for a in arrays))
    g = np.ones(shape, dtype=bool) if mask is None else _as_bool(mask, shape)
    if law.guard is not None:
        g = g & _as_bool(law.guard(ops, *vals), shape)
    fail = g & ~_as_bool(law.conclusion(ops, *vals), shape)
    out = _Partial(qualifying=int(g.sum()), failures=int(fail.sum()))

    def first(m):
        idx = np.flatnonzero(m)
        if idx.size == 0:
            return None
        pos = np.unravel_index(int(idx[0]), shape)
        return tuple(int(np.broadcast_to(a, shape)[pos]) for a in arrays)

    if out.failures:
        out.witness = first(fail)
    if law.exists is not None:
        out.example = first(g & _as_bool(law.exists(ops, *vals), shape))
    return out


def _scalar_partial(law: Law, ops, n: int, rows: Iterable[Sequence[Relation]]) -> _Partial:
    out = _Partial()
    for rs in rows:
        if law.guard is not None and not law.guard(ops, *rs):
            continue
        out.qualifying += 1
        if not law.conclusion(ops, *rs):
            out.failures += 1
            if out.witness is None:
                out.witness = tuple(r.bits for r in rs)
        if law.exists is not None and out.example is None and law.exists(ops, *rs):
            out.example = tuple(r.bits for r in rs)
    return out


def _run_exhaustive_unit(law: Law, n: int, backend: str, unit: tuple[int, int]) -> _Partial:
    lo, hi = unit
    ops = get_ops(n, backend)
    pools = _pools(law.id, n, backend)
    if backend == "scalar":
        objs = [_rels(ops, n, p) for p in pools]
        objs[0] = objs[0][lo:hi]
        return _scalar_partial(law, ops, n, product(*objs))
    k = len(pools)
    arrays = []
    for j, p in enumerate(pools):
        if j == 0:
            p = p[lo:hi]
        shape = [1] * k
        shape[j] = len(p)
        arrays.append(p.reshape(shape))
    return _grid_partial(law, ops, arrays)


def _run_random_unit(law: Law, n: int, backend: str, seed: int, block: int, count: int) -> _Partial:
    ops = get_ops(n, backend)
    rng = block_rng(seed, law.id, n, block)
    drawn = [sample(v.sampler_name, rng, n, count) for v in law.vars]
    if backend == "scalar":
        objs = [_rels(ops, n, d) for d in drawn]
        out = _Partial()
        for rs in zip(*objs):
            if all(v.guard is None or v.guard(ops, r) for v, r in zip(law.vars, rs)):
                out.merge(_scalar_partial(law, ops, n, [rs]))
        return out
    arrays = [d.astype(ops.dtype) for d in drawn]
    mask = np.ones(count, dtype=bool)
    for v, a in zip(law.vars, arrays):
        if v.guard is not None:
            mask &= _as_bool(v.guard(ops, ops.wrap(a)), (count,))
    return _grid_partial(law, ops, arrays, mask)


def _run_unit(task) -> _Partial:
    law_id, n, mode, backend, seed, unit = task
    law = get_law(law_id)
    if mode == "exhaustive":
        return _run_exhaustive_unit(law, n, backend, unit)
    block, count = unit
    return _run_random_unit(law, n, backend, seed, block, count)


# -- planning and merging ----------------------------------------------------


def _plan(law: Law, n: int, mode: str, samples: int, backend: str) -> tuple[list, str]:
    """Units for one law, or an empty list and the reason it is skipped."""
    if n < law.min_n:
        return [], f"needs n >= {law.min_n}"
    if mode == "random":
        blocks = [(b, min(BLOCK, samples - b * BLOCK)) for b in range(-(-samples // BLOCK))]
        return blocks, ""
    pools = _pools(law.id, n, backend)
    size = math.prod(len(p) for p in pools)
    if law.arity > 1 and n > TableOps.MAX_N and size > EXHAUSTIVE_LIMIT:
        return [], f"guarded product {size} exceeds the exhaustive limit; use random mode"
    return _units_exhaustive(law, n, backend), ""


def _finish(law: Law, n: int, mode: str, samples: int, parts: Iterable[_Partial], skip: str) -> CheckResult:
    if skip:
        return CheckResult(law.id, Status.SKIPPED, 0, 0, note=skip)
    total = _Partial()
    for p in parts:
        total.merge(p)
    if mode == "random":
        instances = samples
    else:
        instances = math.prod(domain_size(v.kind, n) for v in law.vars)
    names = [v.name for v in law.vars]
    bind = lambda t: None if t is None else tuple(zip(names, t))  # noqa: E731
    note = ""
    if total.failures:
        status = Status.COUNTEREXAMPLE
    elif total.qualifying == 0:
        status, note = Status.INCONCLUSIVE, "no qualifying instance"
    elif law.exists is not None and total.example is None:
        status, note = Status.INCONCLUSIVE, "claimed example not found"
    else:
        status = Status.HOLDS
    return CheckResult(
        law.id, status, instances, total.qualifying, total.failures,
        bind(total.witness), bind(total.example), note,
    )


def select_laws(patterns: str | Sequence[str] | None = None) -> list[str]:
    """Law ids matching comma-separated glob patterns; default is every non-mutant law."""
    if patterns is None:
        return list(LAWS)
    if isinstance(patterns, str):
        patterns = [p.strip() for p in patterns.split(",") if p.strip()]
    ids = list(LAWS) + list(MUTANTS)
    out = []
    for pat in patterns:
        hits = [i for i in ids if fnmatch.fnmatchcase(i, pat)]
        if not hits:
            raise KeyError(f"no law matches {pat!r}")
        out += [h for h in hits if h not in out]
    return out


def check_sweep(
    law_id: str,
    n: int,
    mode: str = "exhaustive",
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
    backend: str = "auto",
) -> CheckResult:
    """Sweep a single law in-process."""
    return run_suite(n, mode, [law_id], samples=samples, seed=seed, backend=backend).results[0]


def _validate(n: int, mode: str, samples: int) -> None:
    Universe(n)
    if mode == "exhaustive":
        if n > EXHAUSTIVE_MAX_N:
            raise ValueError(f"exhaustive bound is {EXHAUSTIVE_MAX_N}")
    elif mode == "random":
        if not 1 <= n <= MAX_SAMPLE_N:
            raise ValueError(f"random mode supports 1 <= n <= {MAX_SAMPLE_N}")
        if samples < 1:
            raise ValueError("random mode needs at least one sample")
    else:
        raise ValueError(f"unknown mode {mode!r}")


def run_suite(
    n: int,
    mode: str = "exhaustive",
    laws: str | Sequence[str] | None = None,
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
    workers: int = 1,
    backend: str = "auto",
) -> SuiteReport:
    _validate(n, mode, samples)
    ids = select_laws(laws)
    if mode == "exhaustive":
        samples = 0
    plans = []
    for law_id in ids:
        law = get_law(law_id)
        be = pick_backend(law, n, backend)
        units, skip = _plan(law, n, mode, samples, be)
        plans.append((law, be, units, skip))

    tasks = [(law.id, n, mode, be, seed, u) for law, be, units, _ in plans for u in units]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_run_unit, tasks))
    else:
        parts = [_run_unit(t) for t in tasks]

    report = SuiteReport(n, mode, seed, samples)
    pos = 0
    for law, _, units, skip in plans:
        mine = parts[pos:pos + len(units)]
        pos += len(units)
        report.results.append(_finish(law, n, mode, samples, mine, skip))
    return report


# -- single instances and replay ---------------------------------------------


def _bind(law: Law, instance) -> list[Relation]:
    if isinstance(instance, Mapping):
        values = [instance[v.name] for v in law.vars]
    elif isinstance(instance, Relation):
        values = [instance]
    else:
        values = list(instance)
    if len(values) != law.arity:
        raise ValueError(f"{law.id} takes {law.arity} variables, got {len(values)}")
    return values


def evaluate(law_id: str, instance) -> tuple[bool, bool]:
    """``(qualifies, holds)`` for one instance, evaluated with the scalar backend."""
    law = get_law(law_id)
    rs = _bind(law, instance)
    n = rs[0].n
    ops = ScalarOps(n)
    for v, r in zip(law.vars, rs):
        if v.kind == "point" and not ops.point(r):
            raise ValueError(f"{v.name} must be a point")
        if v.kind == "vector" and not ops.vector(r):
            raise ValueError(f"{v.name} must be a vector")
    qualifies = all(v.guard is None or v.guard(ops, r) for v, r in zip(law.vars, rs))
    qualifies = qualifies and (law.guard is None or bool(law.guard(ops, *rs)))
    holds = (not qualifies) or bool(law.conclusion(ops, *rs))
    return qualifies, holds


def check_law(law_id: str, instance) -> CheckResult:
    """Check one law on one instance (a relation, a sequence, or a name mapping)."""
    law = get_law(law_id)
    rs = _bind(law, instance)
    qualifies, holds = evaluate(law_id, rs)
    witness = None if holds else tuple((v.name, r.bits) for v, r in zip(law.vars, rs))
    status = Status.HOLDS if holds else Status.COUNTEREXAMPLE
    return CheckResult(law.id, status, 1, int(qualifies), int(not holds), witness)


def replay(law_id: str, n: int, witness: Binding | Mapping[str, int]) -> bool:
    """True iff the recorded witness still violates the law."""
    law = get_law(law_id)
    enc = dict(witness)
    rs = [Relation(n, enc[v.name]) for v in law.vars]
    qualifies, holds = evaluate(law_id, rs)
    return qualifies and not holds
