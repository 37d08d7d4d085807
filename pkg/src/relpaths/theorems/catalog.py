"""The law catalog.

Each law quantifies over a few variables (relations, points or vectors),
may restrict them by a hypothesis, and states a conclusion.  Formulas are
written against an ops namespace (see :mod:`relpaths.theorems.ops`) so the
same definition runs on single relations and on batched encodings.

Variable guards are unary hypotheses evaluated once per candidate; the
joint ``guard`` relates several variables.  ``exists`` marks laws that also
claim some instance satisfies a predicate; a sweep that finds none reports
the law as inconclusive.

Rules for formulas: use ``o.all/o.any/o.not_/o.implies/o.iff/o.same``
instead of ``and/or/not``, and parenthesise ``&``/``|`` mixtures.  Laws
marked ``scalar_only`` may use plain Python control flow.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from relpaths.algorithms import choose_point


@dataclass(frozen=True)
class Var:
    name: str
    kind: str = "rel"  # rel | point | vector
    guard: Callable | None = None
    sampler: str | None = None

    @property
    def sampler_name(self) -> str:
        return self.sampler or self.kind


@dataclass(frozen=True)
class Law:
    id: str
    vars: tuple[Var, ...]
    conclusion: Callable
    guard: Callable | None = None
    exists: Callable | None = None
    min_n: int = 0
    scalar_only: bool = False
    summary: str = ""
    mutant: bool = False
    tags: tuple[str, ...] = field(default_factory=tuple)

    @property
    def arity(self) -> int:
        return len(self.vars)

    @property
    def unary(self) -> bool:
        return self.arity == 1 and self.vars[0].kind == "rel"


LAWS: dict[str, Law] = {}
MUTANTS: dict[str, Law] = {}


def _register(law_id, *vars, guard=None, exists=None, min_n=0, scalar_only=False,
              mutant=False, tags=()):
    registry = MUTANTS if mutant else LAWS

    def deco(fn):
        if law_id in LAWS or law_id in MUTANTS:
            raise ValueError(f"duplicate law id {law_id}")
        summary = (fn.__doc__ or "").strip().splitlines()[0] if fn.__doc__ else ""
        registry[law_id] = Law(law_id, tuple(vars), fn, guard, exists, min_n, scalar_only,
                               summary, mutant, tuple(tags))
        return fn

    return deco


law = _register


def rel(name, guard=None, sampler=None) -> Var:
    return Var(name, "rel", guard, sampler)


def pt(name) -> Var:
    return Var(name, "point")


def vec(name) -> Var:
    return Var(name, "vector")


# shared hypotheses (scalar, evaluated per candidate)
def _injuni(o, R):
    return o.injuni(R)


def _path(o, R):
    return o.path(R)


def _ft_path(o, R):
    return o.all(o.path(R), o.ft(R))


def _bt_path(o, R):
    return o.all(o.path(R), o.bt(R))


def _termpath(o, R):
    return o.termpath(R)


def _cycle(o, R):
    return o.cycle(R)


def _ne_cycle(o, R):
    return o.all(o.cycle(R), R != o.O)


# shared formula fragments (both backends)
def bt_def(o, R):
    """Has a start point or is empty."""
    return o.any(o.sp(R) != o.O, R == o.O)


def ft_def(o, R):
    return o.any(o.ep(R) != o.O, R == o.O)


def term_def(o, R):
    return o.all(bt_def(o, R), ft_def(o, R))


def noncrossing(o, R, S):
    L = o.L
    return ((R @ L) & ((R.T @ L) | (S @ L)) & (S.T @ L)) == o.O


# ---------------------------------------------------------------------------
# Relation-algebra axioms and basic facts
# ---------------------------------------------------------------------------


@law("ax-join-assoc", rel("R"), rel("S"), rel("T"), tags=("axiom",))
def _(o, R, S, T):
    """Join is associative."""
    return ((R | S) | T) == (R | (S | T))


@law("ax-join-comm", rel("R"), rel("S"), tags=("axiom",))
def _(o, R, S):
    """Join is commutative."""
    return (R | S) == (S | R)


@law("ax-huntington", rel("R"), rel("S"), tags=("axiom",))
def _(o, R, S):
    """Huntington's axiom."""
    return R == (~(~R | ~S) | ~(~R | S))


@law("ax-comp-assoc", rel("R"), rel("S"), rel("T"), tags=("axiom",))
def _(o, R, S, T):
    """Composition is associative."""
    return ((R @ S) @ T) == (R @ (S @ T))


@law("ax-comp-distrib", rel("R"), rel("S"), rel("T"), tags=("axiom",))
def _(o, R, S, T):
    """Composition distributes over join from the right."""
    return ((R | S) @ T) == ((R @ T) | (S @ T))


@law("ax-comp-unit", rel("R"), tags=("axiom",))
def _(o, R):
    """Identity is a right unit of composition."""
    return (R @ o.I) == R


@law("ax-conv-invol", rel("R"), tags=("axiom",))
def _(o, R):
    """Converse is an involution."""
    return R.T.T == R


@law("ax-conv-join", rel("R"), rel("S"), tags=("axiom",))
def _(o, R, S):
    """Converse distributes over join."""
    return (R | S).T == (R.T | S.T)


@law("ax-conv-comp", rel("R"), rel("S"), tags=("axiom",))
def _(o, R, S):
    """Converse reverses composition."""
    return (R @ S).T == (S.T @ R.T)


@law("ax-schroeder", rel("R"), rel("S"), tags=("axiom",))
def _(o, R, S):
    """The converse/complement axiom."""
    return ((R.T @ ~(R @ S)) | ~S) == ~S


@law("eq-triple", rel("R"), tags=("axiom",))
def _(o, R):
    """Every edge survives a forward-backward-forward round trip."""
    return R <= R @ R.T @ R


@law("eq-loops", rel("R"), tags=("axiom",))
def _(o, R):
    """Loops are invariant under converse."""
    return (R & o.I) == (R.T & o.I)


@law("monotone", rel("R"), rel("S"), rel("T"), guard=lambda o, R, S, T: R <= S,
     tags=("axiom",))
def _(o, R, S, T):
    """Join, meet, composition and converse preserve inclusion; complement reverses it."""
    return o.all(
        (R | T) <= (S | T),
        (R & T) <= (S & T),
        (R @ T) <= (S @ T),
        (T @ R) <= (T @ S),
        R.T <= S.T,
        ~S <= ~R,
    )


@law(
    "lem-swap",
    rel("P", guard=lambda o, P: o.surjective(P), sampler="surjective"),
    rel("Q"),
    rel("R", guard=lambda o, R: o.injective(R), sampler="injective"),
    tags=("axiom",),
)
def _(o, P, Q, R):
    """Inclusions through a surjection and an injection swap sides; both ways if bijective."""
    left = P <= Q @ R
    right = R <= Q.T @ P
    return o.all(
        o.implies(left, right),
        o.implies(o.all(o.bijective(P), o.bijective(R)), o.iff(left, right)),
    )


@law("lem-vec", rel("R"), rel("S"), tags=("axiom",))
def _(o, R, S):
    """For vectors, composition with a converse is a meet."""
    L = o.L
    v = R @ L
    w = S @ L
    return o.all((v @ w.T) == (v & w.T), (R @ L @ S) == ((R @ L) & (L @ S)))


@law("tarski", rel("R"), min_n=1, tags=("axiom",))
def _(o, R):
    """A relation is non-empty exactly when L;R;L is universal."""
    return o.iff(R != o.O, (o.L @ R @ o.L) == o.L)


@law("point-char", rel("R"), min_n=1, tags=("axiom",))
def _(o, R):
    """Points are the non-empty injective vectors."""
    return o.iff(o.point(R), o.all(o.vector(R), o.injective(R), R != o.O))


@law("point-axiom", rel("R"), scalar_only=True, tags=("axiom",))
def _(o, R):
    """Every non-empty relation contains an atom p;qᵀ built from two chosen points."""
    if R == o.O:
        return True
    p = choose_point(R @ o.L)
    q = choose_point(R.T @ p)
    edge = p @ q.T
    return o.atom(edge) and edge <= R


@law("star-unfold-left", rel("R"), tags=("axiom", "star"))
def _(o, R):
    """I ∪ R;R* ⊆ R*."""
    return (o.I | (R @ R.star())) <= R.star()


@law("star-unfold-right", rel("R"), tags=("axiom", "star"))
def _(o, R):
    """I ∪ R*;R ⊆ R*."""
    return (o.I | (R.star() @ R)) <= R.star()


@law("star-induct-left", rel("R"), rel("Q"), rel("S"), tags=("axiom", "star"))
def _(o, R, Q, S):
    """S ∪ R;Q ⊆ Q implies R*;S ⊆ Q."""
    return o.implies((S | (R @ Q)) <= Q, (R.star() @ S) <= Q)


@law("star-induct-right", rel("R"), rel("Q"), rel("S"), tags=("axiom", "star"))
def _(o, R, Q, S):
    """S ∪ Q;R ⊆ Q implies S;R* ⊆ Q."""
    return o.implies((S | (Q @ R)) <= Q, (S @ R.star()) <= Q)


@law("star-consequences", rel("R"), rel("S"), tags=("axiom", "star"))
def _(o, R, S):
    """Derived star identities and monotonicity of star over join."""
    return o.all(
        (R.star() | S.star()) == (R.plus() | S.star()),
        R.T.star() == R.star().T,
        (R.star() | S.star()) <= (R | S).star(),
    )


# ---------------------------------------------------------------------------
# Paths and connectivity
# ---------------------------------------------------------------------------


@law("conv-path", rel("R", sampler="injuni"))
def _(o, R):
    """Connectedness and being a path are invariant under converse."""
    return o.all(o.iff(o.connected(R), o.connected(R.T)), o.iff(o.path(R), o.path(R.T)))


def connectivity_forms(o, R) -> list:
    L = o.L
    both = R.star() | R.T.star()
    Rp, Rtp = R.plus(), R.T.plus()
    return [
        (R @ L @ R) <= both,
        (R @ L @ R.T) <= both,
        (R.T @ L @ R) <= both,
        (R.T @ L @ R.T) <= both,
        (Rp @ L @ Rp) <= both,
        (Rp @ L @ Rtp) <= both,
        (Rtp @ L @ Rp) <= both,
        (Rtp @ L @ Rtp) <= both,
    ]


@law("conn-8way", rel("R", guard=_injuni, sampler="injuni"))
def _(o, R):
    """Eight formulations of connectivity agree on injective univalent relations."""
    return o.same(*connectivity_forms(o, R))


# ---------------------------------------------------------------------------
# Start points and end points
# ---------------------------------------------------------------------------


@law("sp-consequences", rel("R", sampler="path"))
def _(o, R):
    """sp(R) = ep(Rᵀ) and no edge enters a start point or leaves an end point."""
    return o.all(o.sp(R) == o.ep(R.T), (R @ o.sp(R)) == o.O, (R.T @ o.ep(R)) == o.O)


@law("sp-inj", rel("R", guard=_path, sampler="path"))
def _(o, R):
    """A path has at most one start point and at most one end point."""
    return o.all(o.injective(o.sp(R)), o.injective(o.ep(R)))


@law("sp-point", rel("R", guard=_path, sampler="path"))
def _(o, R):
    """Start and end points of a path are empty or points."""
    sp, ep = o.sp(R), o.ep(R)
    return o.all(o.any(sp == o.O, o.point(sp)), o.any(ep == o.O, o.point(ep)))


@law("se-iff-1", rel("R", guard=_path, sampler="path"), min_n=1)
def _(o, R):
    """A start point exists iff -(L;R);R;L is universal."""
    L = o.L
    return o.iff(o.sp(R) != o.O, (~(L @ R) @ R @ L) == L)


@law("se-iff-2", rel("R", guard=_path, sampler="path"))
def _(o, R):
    """No start point iff R;L ⊆ Rᵀ;L."""
    return o.iff(o.sp(R) == o.O, (R @ o.L) <= (R.T @ o.L))


@law("se-iff-3", rel("R", guard=_path, sampler="path"), min_n=1)
def _(o, R):
    """An end point exists iff L;R;-(R;L) is universal."""
    L = o.L
    return o.iff(o.ep(R) != o.O, (L @ R @ ~(R @ L)) == L)


@law("se-iff-4", rel("R", guard=_path, sampler="path"))
def _(o, R):
    """No end point iff Rᵀ;L ⊆ R;L."""
    return o.iff(o.ep(R) == o.O, (R.T @ o.L) <= (R @ o.L))


@law("se-iff-5", rel("R", guard=_path, sampler="path"), min_n=1)
def _(o, R):
    """Both endpoints exist iff the meet of the two forms is universal."""
    L = o.L
    both = (~(L @ R) @ R @ L) & (L @ R @ ~(R @ L))
    return o.iff(o.all(o.sp(R) != o.O, o.ep(R) != o.O), both == L)


@law("se-iff-6", rel("R", guard=_path, sampler="path"))
def _(o, R):
    """Neither endpoint exists iff R;L = Rᵀ;L."""
    return o.iff(o.all(o.sp(R) == o.O, o.ep(R) == o.O), (R @ o.L) == (R.T @ o.L))


@law("edge-lemma", pt("p"), pt("q"))
def _(o, p, q):
    """p;qᵀ is a path from p to q, or a loop when p = q."""
    e = p @ q.T
    return o.all(
        o.path(e),
        o.implies(p != q, o.all(o.sp(e) == p, o.ep(e) == q)),
        o.implies(p == q, o.all(o.sp(e) == o.O, o.ep(e) == o.O)),
    )


def termination_forms(o, R) -> list:
    """The twelve termination inequalities, in order."""
    L, O = o.L, o.O
    head = ~(L @ R) @ R @ L
    tail = L @ R @ ~(R @ L)
    return [
        o.any(L == head, R == O),
        R <= head,
        R <= (~(L @ R) @ R.star()),
        R <= (R.T.star() @ ~(R.T @ L)),
        o.any(L == tail, R == O),
        R <= tail,
        R <= (R.star() @ ~(R @ L)),
        R <= (~(L @ R.T) @ R.T.star()),
        o.any(L == (head & tail), R == O),
        R <= (head & tail),
        R <= ((~(L @ R) @ R.star()) & (R.star() @ ~(R @ L))),
        R <= ((R.T.star() @ ~(R.T @ L)) & (~(L @ R.T) @ R.T.star())),
    ]


@law("term-12", rel("R", guard=_path, sampler="path"))
def _(o, R):
    """Twelve inequalities characterise backward, forward and two-sided termination."""
    f = termination_forms(o, R)
    bt, ft, tm = bt_def(o, R), ft_def(o, R), term_def(o, R)
    return o.all(
        o.same(bt, *f[0:4]),
        o.same(ft, *f[4:8]),
        o.same(tm, *f[8:12]),
        o.iff(bt, ft_def(o, R.T)),
        o.iff(tm, term_def(o, R.T)),
    )


@law(
    "concat",
    rel("R", guard=_ft_path, sampler="path"),
    rel("S", guard=_bt_path, sampler="path"),
    guard=lambda o, R, S: o.all(o.ep(R) == o.sp(S), noncrossing(o, R, S)),
)
def _(o, R, S):
    """Non-crossing paths meeting end-to-start concatenate to a path."""
    U = R | S
    return o.all(o.path(U), o.sp(U) <= o.sp(R), o.ep(U) <= o.ep(S))


@law("concat-strength", rel("R"), rel("S"))
def _(o, R, S):
    """The strengthened disjointness hypothesis splits into two conditions."""
    strong = ((R @ o.L) & (S.T @ o.L)) == o.O
    return o.iff(strong, o.all(noncrossing(o, R, S), (o.sp(R) & o.ep(S)) == o.O))


@law(
    "concat-sp",
    rel("R", guard=_ft_path, sampler="path"),
    rel("S", guard=_bt_path, sampler="path"),
    guard=lambda o, R, S: o.all(o.ep(R) == o.sp(S), ((R @ o.L) & (S.T @ o.L)) == o.O),
)
def _(o, R, S):
    """Under the strengthened hypothesis the concatenation keeps both endpoints."""
    U = R | S
    return o.all(o.path(U), o.sp(U) == o.sp(R), o.ep(U) == o.ep(S))


def _restriction(o, R, p):
    return (R.T.star() @ p) & R


@law("restrict", rel("R", guard=_path, sampler="path"), pt("p"))
def _(o, R, p):
    """Restricting a path to what is reachable from p yields a path starting at p if anywhere."""
    X = _restriction(o, R, p)
    return o.all(o.path(X), o.sp(X) <= p, o.ep(X) <= o.ep(R))


@law(
    "restrict-on",
    rel("R", guard=lambda o, R: o.all(o.path(R), o.acyclic(R)), sampler="path"),
    pt("p"),
    guard=lambda o, R, p: p <= (R @ o.L),
)
def _(o, R, p):
    """For p on an acyclic path with a successor, the restriction starts exactly at p."""
    X = _restriction(o, R, p)
    return o.all(o.sp(X) == p, o.ep(X) == o.ep(R))


# ---------------------------------------------------------------------------
# Cycles and strong connectivity
# ---------------------------------------------------------------------------


def strong_forms(o, R) -> list:
    """The eight equivalent forms of R* = Rᵀ*, in order."""
    Rs, Rts, Rp, Rtp = R.star(), R.T.star(), R.plus(), R.T.plus()
    return [
        Rs == Rts,
        Rp == Rtp,
        R.T <= Rs,
        R.T <= Rp,
        R <= Rts,
        R <= Rtp,
        (Rs @ R.T) <= Rp,
        (R.T @ Rs) <= Rp,
    ]


def strong_implied(o, R) -> list:
    """Consequences (9)-(15) of strong connectivity, in order."""
    L, Rs, Rp = o.L, R.star(), R.plus()
    return [
        (R @ L) == (R.T @ L),
        (R @ R.T) <= Rp,
        (R.T @ R) <= Rp,
        (R @ R.T @ Rs) <= Rp,
        (Rs @ R.T @ R) <= Rp,
        (Rs @ R @ R.T) <= Rp,
        (R.T @ R @ Rs) <= Rp,
    ]


@law("msc-1to8", rel("R", sampler="path"))
def _(o, R):
    """Eight formulations of R* = Rᵀ* agree."""
    return o.same(*strong_forms(o, R))


@law("msc-implied-9to15", rel("R", sampler="path"))
def _(o, R):
    """R* = Rᵀ* implies properties (9)-(15)."""
    f1 = strong_forms(o, R)[0]
    return o.implies(f1, o.all(*strong_implied(o, R)))


@law("msc-conditional", rel("R", sampler="univalent"))
def _(o, R):
    """Univalence or injectivity turns three implied properties each into equivalences."""
    f1 = strong_forms(o, R)[0]
    g = strong_implied(o, R)  # g[k] is property (k + 9)
    return o.all(
        o.implies(o.univalent(R), o.same(f1, g[1], g[3], g[5])),
        o.implies(o.injective(R), o.same(f1, g[2], g[4], g[6])),
    )


@law("msc-equalities", rel("R", sampler="path"))
def _(o, R):
    """The strong-connectivity results survive replacing (7), (8), (12)-(15) by equalities."""
    Rs, Rp = R.star(), R.plus()
    f1 = strong_forms(o, R)[0]
    e7 = (Rs @ R.T) == Rp
    e8 = (R.T @ Rs) == Rp
    e12 = (R @ R.T @ Rs) == Rp
    e13 = (Rs @ R.T @ R) == Rp
    e14 = (Rs @ R @ R.T) == Rp
    e15 = (R.T @ R @ Rs) == Rp
    return o.all(
        o.same(f1, e7, e8),
        o.implies(f1, o.all(e12, e13, e14, e15)),
        o.implies(o.univalent(R), o.same(f1, e12, e14)),
        o.implies(o.injective(R), o.same(f1, e13, e15)),
    )


def one_component_forms(o, R) -> list:
    """Properties (1)-(10) of the single-strong-component theorem, in order."""
    L, Rs, Rp = o.L, R.star(), R.plus()
    return [
        o.all(o.connected(R), Rs == R.T.star()),
        (R.T @ L @ R.T) <= Rs,
        (R.T @ L @ R.T) <= Rp,
        (R.T @ L @ R.T) == Rp,
        (R.T @ L @ R) == Rp,
        (R @ L @ R.T) == Rp,
        (R.T @ L @ R) <= Rp,
        (R @ L @ R.T) <= Rp,
        (R @ L @ R) <= (R @ Rp),
        (R @ L @ R) <= Rp,
    ]


@law("osc-1to6", rel("R", sampler="path"))
def _(o, R):
    """Connected and strongly connected, as one (in)equality six ways."""
    return o.same(*one_component_forms(o, R)[:6])


@law("osc-implied-7to10", rel("R", sampler="path"))
def _(o, R):
    """Property (1) implies properties (7)-(10)."""
    g = one_component_forms(o, R)
    return o.implies(g[0], o.all(*g[6:10]))


@law("osc-conditional", rel("R", sampler="injuni"))
def _(o, R):
    """(7) needs injectivity, (8) univalence and (9) both to be equivalent to (1)."""
    g = one_component_forms(o, R)
    inj, uni = o.injective(R), o.univalent(R)
    return o.all(
        o.implies(inj, o.iff(g[6], g[0])),
        o.implies(uni, o.iff(g[7], g[0])),
        o.implies(o.all(inj, uni), o.iff(g[8], g[0])),
    )


@law("osc-9-equality", rel("R", sampler="path"))
def _(o, R):
    """(9) is equivalent to its equality form."""
    lhs = R @ o.L @ R
    return o.iff(lhs <= (R @ R.plus()), lhs == (R @ R.plus()))


@law("osc-10-equality", rel("R", sampler="path"))
def _(o, R):
    """(10) is equivalent to its equality form."""
    lhs = R @ o.L @ R
    return o.iff(lhs <= R.plus(), lhs == R.plus())


@law(
    "fig2-asymmetry",
    rel("R", sampler="injuni"),
    exists=lambda o, R: o.all(
        o.injective(R),
        o.univalent(R),
        one_component_forms(o, R)[9],
        o.not_(one_component_forms(o, R)[0]),
    ),
)
def _(o, R):
    """(7) and (8) force strong connectivity on injective univalent relations; (10) does not."""
    g = one_component_forms(o, R)
    return o.implies(
        o.all(o.injective(R), o.univalent(R)),
        o.all(o.implies(g[6], g[0]), o.implies(g[7], g[0])),
    )


def finiteness_forms(o, R) -> list:
    """The six finiteness (in)equalities, in order."""
    L = o.L
    head = ~(L @ R) @ R @ L
    tail = L @ R @ ~(R @ L)
    strong = R.star() == R.T.star()
    back = R.T.star()
    return [
        o.any(strong, R <= head),
        R <= (head | back),
        o.any(strong, R <= tail),
        R <= (tail | back),
        o.any(strong, R <= (head & tail)),
        R <= ((head & tail) | back),
    ]


@law("fin-6", rel("R", sampler="path"))
def _(o, R):
    """Backward, forward and two-sided finiteness each have two equivalent forms."""
    f = finiteness_forms(o, R)
    cyc = o.cycle(R)
    bf = o.any(cyc, bt_def(o, R))
    ff = o.any(cyc, ft_def(o, R))
    fin = o.any(cyc, term_def(o, R))
    on_paths = o.all(
        o.iff(f[1], bf),
        o.iff(f[3], ff),
        o.iff(f[5], fin),
        o.iff(bf, o.any(o.cycle(R.T), ft_def(o, R.T))),
        o.iff(fin, o.any(o.cycle(R.T), term_def(o, R.T))),
    )
    return o.all(
        o.iff(f[0], f[1]),
        o.iff(f[2], f[3]),
        o.iff(f[4], f[5]),
        o.implies(o.path(R), on_paths),
    )


@law("finite-classes", rel("R", sampler="path"))
def _(o, R):
    """On a finite universe a non-empty path without endpoints is a cycle."""
    hyp = o.all(o.path(R), o.sp(R) == o.O, o.ep(R) == o.O, R != o.O)
    return o.implies(hyp, o.cycle(R))


@law("cyc-from-path", rel("R", guard=_termpath, sampler="path"))
def _(o, R):
    """Closing a terminating path from its end point back to its start point gives a cycle."""
    return o.cycle(R | (o.ep(R) @ o.sp(R).T))


@law(
    "cyc-minus-edge",
    rel("R", guard=_cycle, sampler="cycle"),
    pt("s"),
    pt("e"),
    guard=lambda o, R, s, e: (e @ s.T) <= R,
)
def _(o, R, s, e):
    """Removing one edge from a cycle leaves a terminating path between its endpoints."""
    X = R & ~(e @ s.T)
    return o.all(
        o.termpath(X),
        o.sp(X) <= s,
        o.ep(X) <= e,
        o.implies(s != e, o.all(o.sp(X) == s, o.ep(X) == e)),
    )


@law(
    "cyc-join",
    rel("R", guard=_termpath, sampler="path"),
    rel("S", guard=_termpath, sampler="path"),
    guard=lambda o, R, S: o.all(
        o.sp(R) == o.ep(S), o.sp(S) == o.ep(R), noncrossing(o, R, S)
    ),
)
def _(o, R, S):
    """Two non-crossing terminating paths joined at both ends form a cycle."""
    return o.cycle(R | S)


# ---------------------------------------------------------------------------
# Rooted characterisations
# ---------------------------------------------------------------------------


def _reach_either(o, R, p):
    return (p @ R) <= (R.star() | R.T.star())


def _reach_plus(o, R, p):
    return (p @ R) <= R.plus()


def bfin_def(o, R):
    return o.any(o.cycle(R), bt_def(o, R))


_RI = rel("R", guard=_injuni, sampler="injuni")


@law("root-path", _RI, min_n=1)
def _(o, R):
    """A partial permutation is a path iff some point reaches every edge target."""
    return o.iff(o.path(R), o.exists_point(lambda p: _reach_either(o, R, p)))


@law("root-path-ne", _RI)
def _(o, R):
    """The root of a non-empty path can be taken on the path."""
    return o.iff(
        o.all(o.path(R), R != o.O),
        o.exists_point(
            lambda p: o.all(_reach_either(o, R, p), p <= ((R | R.T) @ o.L))
        ),
    )


@law(
    "root-acyclic",
    _RI,
    pt("p"),
    guard=lambda o, R, p: o.all(_reach_either(o, R, p), (R @ p) == o.O),
)
def _(o, R, p):
    """A root without predecessors makes the path acyclic."""
    return o.acyclic(R)


@law("root-bfin", _RI, min_n=1)
def _(o, R):
    """Backward finite paths are those rooted by p;R ⊆ R⁺."""
    return o.iff(o.all(o.path(R), bfin_def(o, R)), o.exists_point(lambda p: _reach_plus(o, R, p)))


@law("root-bfin-equiv", rel("R", sampler="injuni"), pt("p"))
def _(o, R, p):
    """For a point, p;R ⊆ R⁺ has two converse formulations."""
    cod = R.T @ o.L
    rooted = R.T.plus() @ p
    return o.same(_reach_plus(o, R, p), cod <= rooted, cod == rooted)


@law("root-bfin-ne", _RI)
def _(o, R):
    """Non-empty backward finite paths have a root with a successor."""
    return o.iff(
        o.all(o.path(R), bfin_def(o, R), R != o.O),
        o.exists_point(lambda p: o.all(_reach_plus(o, R, p), p <= (R @ o.L))),
    )


@law("root-bfin-acyclic-iff", _RI, pt("p"), guard=_reach_plus)
def _(o, R, p):
    """With p;R ⊆ R⁺, the root has no predecessor iff the relation is acyclic."""
    return o.iff((R @ p) == o.O, o.acyclic(R))


@law("root-cycle", _RI)
def _(o, R):
    """Non-empty cycles are rooted at a point with a predecessor."""
    return o.iff(
        o.all(o.cycle(R), R != o.O),
        o.exists_point(lambda p: o.all(_reach_plus(o, R, p), p <= (R.T @ o.L))),
    )


@law(
    "root-cycle-anypoint",
    _RI,
    pt("p"),
    pt("q"),
    guard=lambda o, R, p, q: o.all(_reach_plus(o, R, p), p <= (R.T @ o.L)),
)
def _(o, R, p, q):
    """Any point on a rooted cycle can serve as its root."""
    L, Rs, Rp = o.L, R.star(), R.plus()
    on_cycle = q <= (Rs @ p)
    return o.all(
        o.same(
            on_cycle,
            p <= (Rs @ q),
            (R @ q) != o.O,
            (R.T @ q) != o.O,
            q <= (R @ L),
            q <= (R.T @ L),
        ),
        (p @ R.T) <= R.T.plus(),
        p <= (R @ L),
        o.implies(
            on_cycle,
            o.all(
                _reach_plus(o, R, q),
                q <= (R.T @ L),
                q <= (Rp @ q),
                (Rp @ q) == (Rs @ q),
                (Rs @ q) == (Rs @ p),
                (Rs @ p) == (R @ L),
            ),
        ),
    )


@law(
    "root-cycle-subset-eq",
    rel("R", guard=_ne_cycle, sampler="cycle"),
    rel("S", guard=_ne_cycle, sampler="cycle"),
    guard=lambda o, R, S: R <= S,
)
def _(o, R, S):
    """A non-empty cycle contains no smaller non-empty cycle."""
    return R == S


@law("root-cycle-oneineq", _RI, min_n=1)
def _(o, R):
    """Cycles, empty included, are rooted by a single inequality."""
    return o.iff(
        o.cycle(R),
        o.exists_point(lambda p: (p @ R) <= (R.plus() & (R.T @ o.L))),
    )


@law("root-bterm", _RI, min_n=1)
def _(o, R):
    """Backward terminating paths are rooted at a point without predecessors."""
    return o.iff(
        o.all(o.path(R), bt_def(o, R)),
        o.exists_point(lambda p: o.all(_reach_plus(o, R, p), (R @ p) == o.O)),
    )


@law("root-bterm-sp", _RI)
def _(o, R):
    """A non-empty backward terminating path is rooted at its start point."""
    sp = o.sp(R)
    return o.iff(
        o.all(o.path(R), bt_def(o, R), R != o.O),
        o.all(o.point(sp), _reach_plus(o, R, sp)),
    )


def _term_roots(o, R, p, q):
    return o.all(_reach_plus(o, R, p), p <= (R.star() @ q), (R.T @ q) == o.O)


@law("root-term", _RI, min_n=1)
def _(o, R):
    """Terminating paths are rooted at a start point reaching an end point."""
    return o.iff(
        o.all(o.path(R), term_def(o, R)),
        o.exists_points(lambda p, q: _term_roots(o, R, p, q)),
    )


@law("root-term-consequences", _RI, pt("p"), pt("q"), guard=_term_roots)
def _(o, R, p, q):
    """Roots of a terminating path dualise under converse; the path is empty iff they coincide."""
    return o.all(
        (R @ p) == o.O,
        q <= (R.T.star() @ p),
        (q @ R.T) <= R.T.plus(),
        o.iff(R == o.O, p == q),
    )


@law("root-term-ne", _RI)
def _(o, R):
    """A non-empty terminating path is rooted at its own start and end points."""
    sp, ep = o.sp(R), o.ep(R)
    return o.iff(
        o.all(o.path(R), term_def(o, R), R != o.O),
        o.all(o.point(sp), o.point(ep), _reach_plus(o, R, sp), sp <= (R.star() @ ep)),
    )


# ---------------------------------------------------------------------------
# Mutants: deliberately weakened laws that a working sweep must refute
# ---------------------------------------------------------------------------


@law(
    "mut-concat-no-noncross",
    rel("R", guard=_ft_path, sampler="path"),
    rel("S", guard=_bt_path, sampler="path"),
    guard=lambda o, R, S: o.ep(R) == o.sp(S),
    mutant=True,
)
def _(o, R, S):
    """concat without the non-crossing hypothesis."""
    return o.path(R | S)


def _uni_conn(o, R):
    return o.all(o.univalent(R), o.connected(R))


@law(
    "mut-concat-no-injective",
    rel("R", guard=lambda o, R: o.all(_uni_conn(o, R), o.ft(R)), sampler="univalent"),
    rel("S", guard=lambda o, S: o.all(_uni_conn(o, S), o.bt(S)), sampler="univalent"),
    guard=lambda o, R, S: o.all(o.ep(R) == o.sp(S), noncrossing(o, R, S)),
    mutant=True,
)
def _(o, R, S):
    """concat with injectivity dropped from both paths."""
    return o.path(R | S)


@law("mut-osc10-sufficient", rel("R", guard=_injuni, sampler="injuni"), mutant=True)
def _(o, R):
    """Claims (10) forces strong connectivity on injective univalent relations."""
    g = one_component_forms(o, R)
    return o.implies(g[9], g[0])


@law(
    "mut-cyc-minus-edge-loop",
    rel("R", guard=_cycle, sampler="cycle"),
    pt("s"),
    pt("e"),
    guard=lambda o, R, s, e: (e @ s.T) <= R,
    mutant=True,
)
def _(o, R, s, e):
    """cyc-minus-edge claiming exact endpoints even when s = e."""
    X = R & ~(e @ s.T)
    return o.all(o.sp(X) == s, o.ep(X) == e)


@law("mut-msc-univalent-11", rel("R", sampler="univalent"), mutant=True)
def _(o, R):
    """Claims univalence (instead of injectivity) makes (11) equivalent to (1)."""
    f1 = strong_forms(o, R)[0]
    return o.implies(o.univalent(R), o.iff(strong_implied(o, R)[2], f1))


def get_law(law_id: str) -> Law:
    try:
        return LAWS[law_id] if law_id in LAWS else MUTANTS[law_id]
    except KeyError:
        raise KeyError(f"unknown law id {law_id!r}") from None


def all_ids(include_mutants: bool = False) -> list[str]:
    ids = list(LAWS)
    if include_mutants:
        ids += list(MUTANTS)
    return ids
