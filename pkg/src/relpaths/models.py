"""Random instance generators.

Samplers draw ``size`` relation encodings at once from a numpy Generator
and return a uint64 array (so they need ``n <= 8``).  They are biased
toward the structures laws quantify over: most hypotheses (path, cycle,
partial permutation) are vanishingly rare under uniform sampling.

The algorithm generators at the bottom return ready-to-run instances whose
preconditions hold.
"""

from __future__ import annotations

import hashlib
import random
from typing import Callable

import numpy as np

from relpaths.algebra import Relation, point

MAX_SAMPLE_N = 8


def block_rng(*key) -> np.random.Generator:
    """A generator seeded from a string key, stable across processes and platforms."""
    text = ":".join(str(k) for k in key).encode()
    return np.random.default_rng(int.from_bytes(hashlib.sha256(text).digest()[:8], "little"))


def pack(mat: np.ndarray) -> np.ndarray:
    """Boolean ``(size, n, n)`` matrices to uint64 encodings."""
    size, n = mat.shape[0], mat.shape[1]
    if n == 0:
        return np.zeros(size, dtype=np.uint64)
    flat = mat.reshape(size, n * n).astype(np.uint64)
    weights = np.uint64(1) << np.arange(n * n, dtype=np.uint64)
    return np.bitwise_or.reduce(flat * weights, axis=1)


def _mix(rng, size, *parts):
    """Pick, per sample, one of several equally sized candidate arrays."""
    which = rng.integers(0, len(parts), size)
    return np.choose(which, parts)


def _density_matrix(rng, n, size):
    dens = np.where(rng.random(size) < 0.5, 0.5, rng.uniform(0.05, 0.4, size))
    return rng.random((size, n, n)) < dens[:, None, None]


def _perms(rng, n, size):
    return rng.permuted(np.tile(np.arange(n), (size, 1)), axis=1)


def _chain_matrix(rng, n, size, closed_p):
    """Chains along a random vertex order, closed into cycles with probability ``closed_p``."""
    mat = np.zeros((size, n, n), dtype=bool)
    order = _perms(rng, n, size)
    k = rng.integers(0, n + 1, size)
    closed = rng.random(size) < closed_p
    rows = np.arange(size)
    for i in range(n - 1):
        on = i + 1 < k
        mat[rows[on], order[on, i], order[on, i + 1]] = True
    back = closed & (k >= 1)
    last = order[rows[back], k[back] - 1]
    mat[rows[back], last, order[back, 0]] = True
    return mat


def sample_rel(rng, n, size):
    return pack(_density_matrix(rng, n, size))


def sample_point(rng, n, size):
    v = rng.integers(0, n, size).astype(np.uint64)
    return np.uint64((1 << n) - 1) << (v * np.uint64(n))


def sample_vector(rng, n, size):
    mat = np.repeat((rng.random((size, n)) < 0.5)[:, :, None], n, axis=2)
    return pack(mat)


def sample_path(rng, n, size):
    return pack(_chain_matrix(rng, n, size, 0.3))


def sample_cycle(rng, n, size):
    return pack(_chain_matrix(rng, n, size, 1.0))


def _partial_perm_matrix(rng, n, size):
    mat = np.zeros((size, n, n), dtype=bool)
    perm = _perms(rng, n, size)
    keep = rng.random((size, n)) < rng.uniform(0.3, 1.0, size)[:, None]
    s, a = np.nonzero(keep)
    mat[s, a, perm[s, a]] = True
    return mat


def sample_injuni(rng, n, size):
    return _mix(rng, size, pack(_partial_perm_matrix(rng, n, size)), sample_path(rng, n, size))


def _function_matrix(rng, n, size):
    """Univalent: each row has at most one entry."""
    mat = np.zeros((size, n, n), dtype=bool)
    target = rng.integers(0, n, (size, n))
    keep = rng.random((size, n)) < rng.uniform(0.4, 1.0, size)[:, None]
    s, a = np.nonzero(keep)
    mat[s, a, target[s, a]] = True
    return mat


def sample_univalent(rng, n, size):
    return _mix(rng, size, pack(_function_matrix(rng, n, size)), sample_injuni(rng, n, size))


def sample_injective(rng, n, size):
    inj = pack(np.swapaxes(_function_matrix(rng, n, size), 1, 2))
    return _mix(rng, size, inj, sample_injuni(rng, n, size))


def sample_surjective(rng, n, size):
    mat = _density_matrix(rng, n, size)
    empty_cols = ~mat.any(axis=1)
    rows = rng.integers(0, n, (size, n))
    s, b = np.nonzero(empty_cols)
    mat[s, rows[s, b], b] = True
    return pack(mat)


def sample_bijective(rng, n, size):
    mat = np.zeros((size, n, n), dtype=bool)
    rows = rng.integers(0, n, (size, n))
    s, b = np.nonzero(np.ones((size, n), dtype=bool))
    mat[s, rows[s, b], b] = True
    return pack(mat)


SAMPLERS: dict[str, Callable[[np.random.Generator, int, int], np.ndarray]] = {
    "rel": sample_rel,
    "point": sample_point,
    "vector": sample_vector,
    "path": sample_path,
    "cycle": sample_cycle,
    "injuni": sample_injuni,
    "univalent": sample_univalent,
    "injective": sample_injective,
    "surjective": sample_surjective,
    "bijective": sample_bijective,
}


def sample(name: str, rng: np.random.Generator, n: int, size: int) -> np.ndarray:
    if not 1 <= n <= MAX_SAMPLE_N:
        raise ValueError(f"sampling supports 1 <= n <= {MAX_SAMPLE_N}, got n={n}")
    return SAMPLERS[name](rng, n, size)


# -- algorithm instances ---------------------------------------------------


def random_dag(rng: random.Random, n: int, density: float | None = None) -> Relation:
    """Strict upper-triangular bit matrix under a random vertex permutation."""
    if density is None:
        density = rng.uniform(0.1, 0.7)
    perm = list(range(n))
    rng.shuffle(perm)
    pairs = [(perm[a], perm[b]) for a in range(n) for b in range(a + 1, n) if rng.random() < density]
    return Relation.from_pairs(n, pairs)


def path_instance(rng: random.Random, n: int) -> tuple[Relation, Relation, Relation]:
    """``(D, x, y)`` satisfying the path-construction precondition.

    Starts from a random DAG and a pair ``x -> y`` made reachable, then
    deletes the outgoing edges of every predecessor of ``y`` that ``x``
    does not reach, which enforces ``D*;y ⊆ Dᵀ*;x``.
    """
    if n < 2:
        raise ValueError("path instances need n >= 2")
    D = random_dag(rng, n)
    order = _topological_order(D)
    i = rng.randrange(n - 1)
    j = rng.randrange(i + 1, n)
    xv, yv = order[i], order[j]
    x, y = point(n, xv), point(n, yv)
    if not (y <= D.T.star() @ x):
        D = D | Relation.from_pairs(n, [(xv, yv)])
    while True:
        bad = (D.star() @ y) & ~(D.T.star() @ x)
        if not bad:
            return D, x, y
        # drop every edge leaving a vertex x cannot reach
        rows = set(bad.row_set())
        D = Relation.from_pairs(n, [(a, b) for a, b in D.pairs() if a not in rows])


def topsort_instance(rng: random.Random, n: int) -> Relation:
    return random_dag(rng, n)


def cycle_instance(rng: random.Random, n: int) -> Relation:
    """A random relation with a planted cycle (a loop when the length is 1)."""
    base = Relation.from_pairs(
        n, [(a, b) for a in range(n) for b in range(n) if rng.random() < rng.uniform(0.0, 0.3)]
    )
    k = rng.randint(1, n)
    verts = rng.sample(range(n), k)
    cyc = Relation.from_pairs(n, [(verts[i], verts[(i + 1) % k]) for i in range(k)])
    return base | cyc


def _topological_order(D: Relation) -> list[int]:
    n = D.n
    indeg = [0] * n
    for _, b in D.pairs():
        indeg[b] += 1
    succ = [[] for _ in range(n)]
    for a, b in D.pairs():
        succ[a].append(b)
    ready = [v for v in range(n) if indeg[v] == 0]
    out = []
    while ready:
        v = ready.pop()
        out.append(v)
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    return out
