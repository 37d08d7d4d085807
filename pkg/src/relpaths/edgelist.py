"""Plain-text edge lists.

::

    # optional comments anywhere
    n 4
    0 1
    1 2

The header fixes the vertex count; every other line is one edge ``u v``.
Repeated edges are harmless.  Rendering lists edges in encoding order, so
``parse(render(r)) == r`` and equal relations render identically.
"""

from __future__ import annotations

from relpaths.algebra import MAX_VERTICES, Relation


class EdgeListError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _ints(tokens: list[str], line: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise EdgeListError(line, f"expected integers, got {' '.join(tokens)!r}") from None


def parse(text: str) -> Relation:
    n = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].split()
        if not body:
            continue
        if n is None:
            if body[0] != "n" or len(body) != 2:
                raise EdgeListError(lineno, "expected header 'n <vertex count>'")
            (n,) = _ints(body[1:], lineno)
            if not 0 <= n <= MAX_VERTICES:
                raise EdgeListError(lineno, f"vertex count must be in [0, {MAX_VERTICES}]")
            continue
        if len(body) != 2:
            raise EdgeListError(lineno, "expected an edge 'u v'")
        u, v = _ints(body, lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(lineno, f"edge ({u}, {v}) outside 0..{n - 1}")
        pairs.append((u, v))
    if n is None:
        raise EdgeListError(max(1, len(text.splitlines())), "missing header 'n <vertex count>'")
    return Relation.from_pairs(n, pairs)


def read(path: str) -> Relation:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def render(r: Relation) -> str:
    lines = [f"n {r.n}"] + [f"{a} {b}" for a, b in r.pairs()]
    return "\n".join(lines) + "\n"


def render_dot(r: Relation, name: str = "R") -> str:
    lines = [f"digraph {name} {{"]
    lines += [f"  {v};" for v in range(r.n)]
    lines += [f"  {a} -> {b};" for a, b in r.pairs()]
    lines.append("}")
    return "\n".join(lines) + "\n"
