"""Independent pointwise oracles.

Everything here works on sets of ``(a, b)`` pairs with plain loops and BFS,
never through the algebra operators, so agreement is evidence rather than
a restatement.
"""

from __future__ import annotations

from collections import deque
from itertools import product


def pairs_of(bits: int, n: int) -> set[tuple[int, int]]:
    return {(a, b) for a in range(n) for b in range(n) if bits >> (a * n + b) & 1}


def bits_of(pairs, n: int) -> int:
    out = 0
    for a, b in pairs:
        out |= 1 << (a * n + b)
    return out


def compose(r: set, s: set, n: int) -> set:
    return {(a, c) for a, c in product(range(n), repeat=2) if any((a, b) in r and (b, c) in s for b in range(n))}


def converse(r: set) -> set:
    return {(b, a) for a, b in r}


def star_fixpoint(r: set, n: int) -> set:
    """Least fixpoint of X = I ∪ R;X by plain iteration."""
    x = {(a, a) for a in range(n)}
    while True:
        nxt = {(a, a) for a in range(n)} | compose(r, x, n)
        if nxt == x:
            return x
        x = nxt


def successors(r: set, n: int) -> list[set[int]]:
    out = [set() for _ in range(n)]
    for a, b in r:
        out[a].add(b)
    return out


def reach(r: set, n: int, src: int) -> set[int]:
    """Vertices reachable from ``src`` by a walk of length >= 0 (BFS)."""
    succ = successors(r, n)
    seen = {src}
    todo = deque([src])
    while todo:
        v = todo.popleft()
        for w in succ[v]:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return seen


def plus_bfs(r: set, n: int) -> set:
    """Non-empty walks: (a, c) with a -> b in r and c reachable from b."""
    return {(a, c) for a, b in r for c in reach(r, n, b)}


def out_degrees(r: set, n: int) -> list[int]:
    d = [0] * n
    for a, _ in r:
        d[a] += 1
    return d


def in_degrees(r: set, n: int) -> list[int]:
    d = [0] * n
    for _, b in r:
        d[b] += 1
    return d


def univalent(r, n):
    return all(d <= 1 for d in out_degrees(r, n))


def injective(r, n):
    return all(d <= 1 for d in in_degrees(r, n))


def total(r, n):
    return all(d >= 1 for d in out_degrees(r, n))


def surjective(r, n):
    return all(d >= 1 for d in in_degrees(r, n))


def is_vector(r, n):
    rows = successors(r, n)
    return all(len(row) in (0, n) for row in rows)


def is_point(r, n):
    """One full row and the rest empty; on the empty universe O = L = I counts."""
    if n == 0:
        return True
    rows = successors(r, n)
    return sum(len(row) == n for row in rows) == 1 and all(len(row) in (0, n) for row in rows)


def is_atom(r, n):
    return n == 0 or len(r) == 1


def acyclic(r, n):
    succ = successors(r, n)
    return not any(a in reach(r, n, b) for a in range(n) for b in succ[a])


def well_founded_vectors(r, n):
    """No non-empty vertex set w with every member having a predecessor in w."""
    pred = [set() for _ in range(n)]
    for a, b in r:
        pred[b].add(a)
    for mask in range(1, 1 << n):
        w = {v for v in range(n) if mask >> v & 1}
        if all(pred[v] & w for v in w):
            return False
    return True


def connected(r, n):
    """Every vertex with a successor reaches or is reached from every vertex with a predecessor."""
    srcs = [a for a in range(n) if out_degrees(r, n)[a]]
    tgts = [b for b in range(n) if in_degrees(r, n)[b]]
    for a in srcs:
        ra = reach(r, n, a)
        for b in tgts:
            if b not in ra and a not in reach(r, n, b):
                return False
    return True


def is_path(r, n):
    return univalent(r, n) and injective(r, n) and connected(r, n)


def walk(r, n):
    """For a path: ``("empty"|"cycle"|"chain", vertex sequence)`` by following successors."""
    if not r:
        return "empty", []
    succ = {a: b for a, b in r}
    preds = {b for _, b in r}
    starts = [a for a in succ if a not in preds]
    if not starts:
        start = min(succ)
        seq = [start]
        while succ[seq[-1]] != start:
            seq.append(succ[seq[-1]])
        return "cycle", seq
    seq = [starts[0]]
    while seq[-1] in succ:
        seq.append(succ[seq[-1]])
    return "chain", seq


def start_points(r, n):
    out_d, in_d = out_degrees(r, n), in_degrees(r, n)
    return {a for a in range(n) if out_d[a] and not in_d[a]}


def end_points(r, n):
    out_d, in_d = out_degrees(r, n), in_degrees(r, n)
    return {a for a in range(n) if in_d[a] and not out_d[a]}
