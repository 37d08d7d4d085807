"""Text and machine renderings of sweep reports.

The machine format is line oriented with a fixed field order::

    report n=3 mode=exhaustive seed=0 samples=0
    law=eq-triple status=Holds instances=512 qualifying=512 counterexamples=0 witness=- edges=- example=- note=-
    summary laws=1 holds=1 counterexamples=0 inconclusive=0 skipped=0

Bindings are ``name:encoding`` joined by commas; ``edges`` repeats the
witness as ``name:u>v/u>v`` for readability and is ignored when parsing.
Notes are percent-encoded so records never contain spaces.
"""

from __future__ import annotations

from urllib.parse import quote, unquote

from relpaths.algebra import Relation
from relpaths.theorems.sweep import Binding, CheckResult, Status, SuiteReport


def _binding(b: Binding | None) -> str:
    if not b:
        return "-"
    return ",".join(f"{k}:{v}" for k, v in b)


def _edges(b: Binding | None, n: int) -> str:
    if not b:
        return "-"
    parts = []
    for k, v in b:
        pairs = Relation(n, v).pairs()
        parts.append(f"{k}:" + ("/".join(f"{a}>{c}" for a, c in pairs) or "none"))
    return ",".join(parts)


def _parse_binding(s: str) -> Binding | None:
    if s == "-":
        return None
    out = []
    for item in s.split(","):
        k, v = item.split(":")
        out.append((k, int(v)))
    return tuple(out)


def _summary_fields(report: SuiteReport) -> list[tuple[str, int]]:
    return [
        ("laws", len(report.results)),
        ("holds", report.count(Status.HOLDS)),
        ("counterexamples", report.count(Status.COUNTEREXAMPLE)),
        ("inconclusive", report.count(Status.INCONCLUSIVE)),
        ("skipped", report.count(Status.SKIPPED)),
    ]


def render_machine(report: SuiteReport) -> str:
    lines = [f"report n={report.n} mode={report.mode} seed={report.seed} samples={report.samples}"]
    for r in report.results:
        lines.append(
            f"law={r.law} status={r.status.value} instances={r.instances} "
            f"qualifying={r.qualifying} counterexamples={r.counterexamples} "
            f"witness={_binding(r.witness)} edges={_edges(r.witness, report.n)} "
            f"example={_binding(r.example)} note={quote(r.note) if r.note else '-'}"
        )
    lines.append("summary " + " ".join(f"{k}={v}" for k, v in _summary_fields(report)))
    return "\n".join(lines) + "\n"


def _fields(line: str) -> tuple[str, dict[str, str]]:
    head, *rest = line.split(" ")
    if "=" in head:
        rest.insert(0, head)
        head = ""
    return head, dict(item.split("=", 1) for item in rest)


def parse_machine(text: str) -> SuiteReport:
    report = None
    for line in text.splitlines():
        if not line.strip():
            continue
        head, f = _fields(line)
        if head == "report":
            report = SuiteReport(int(f["n"]), f["mode"], int(f["seed"]), int(f["samples"]))
        elif head == "" and "law" in f:
            if report is None:
                raise ValueError("law record before report header")
            report.results.append(
                CheckResult(
                    f["law"],
                    Status(f["status"]),
                    int(f["instances"]),
                    int(f["qualifying"]),
                    int(f["counterexamples"]),
                    _parse_binding(f["witness"]),
                    _parse_binding(f["example"]),
                    "" if f["note"] == "-" else unquote(f["note"]),
                )
            )
        elif head == "summary":
            expected = {k: str(v) for k, v in _summary_fields(report)}
            if f != expected:
                raise ValueError("summary does not match the law records")
        else:
            raise ValueError(f"unrecognised record: {line!r}")
    if report is None:
        raise ValueError("missing report header")
    return report


def _describe(b: Binding, n: int) -> str:
    parts = []
    for k, v in b:
        r = Relation(n, v)
        parts.append(f"{k}=#{v} {{{', '.join(f'({a},{c})' for a, c in r.pairs())}}}")
    return "; ".join(parts)


def render_text(report: SuiteReport) -> str:
    head = f"Law sweep: n={report.n}, mode={report.mode}"
    if report.mode == "random":
        head += f", samples={report.samples}, seed={report.seed}"
    lines = [head]
    width = max([len(r.law) for r in report.results] + [4])
    for r in report.results:
        line = f"  {r.law:<{width}}  {r.status.value:<14}"
        if r.status is Status.SKIPPED:
            line += f"  ({r.note})"
        else:
            line += f"  {r.qualifying}/{r.instances} qualifying"
            if r.note:
                line += f"  ({r.note})"
        lines.append(line)
        if r.witness:
            lines.append(f"    witness: {_describe(r.witness, report.n)}")
    s = dict(_summary_fields(report))
    lines.append(
        f"Summary: {s['laws']} laws, {s['holds']} hold, {s['counterexamples']} counterexamples, "
        f"{s['inconclusive']} inconclusive, {s['skipped']} skipped"
    )
    return "\n".join(lines) + "\n"
