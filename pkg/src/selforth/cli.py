"""Command-line front end.

Jobs read one JSON document (``--input FILE`` or ``-`` for stdin) with
optional blocks::

    {"field": {"q": 4, "m": 3}                        # or p, r, m, inner_modulus, outer_modulus
     "code":  {"kind": "cyclic", "n": 7, "nonzeros": [1, 2, 3]}
     "basis": ["a^0", "a^3", "a^15"]
     "form":  {"variant": "hermitian", "k": 0, "l": 1}}

Each command prints an aligned text table; ``--records PATH`` also writes one
JSON line per logical row (schema ``selforth/1``).  Exit status: 0 success,
1 when ``--assert`` is given and the verdict is false, 2 on invalid input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Sequence

from . import __version__
from .basis_lab import (
    Basis,
    DualBasisPair,
    PowerSumProfile,
    count_ordered_bases,
    enumerate_bases,
    is_self_dual,
    power_sum_profile,
)
from .codes import (
    CyclicCode,
    LinearCode,
    ScalableCode,
    bch_bound,
    cyclic_trace_zero_set,
    cyclotomic_cosets,
)
from .criteria import Verdict, all_bases_report, image_selforth, shortcut_verdict, trace_selforth
from .errors import ConditionNotMet, ParseError, SelforthError
from .ff_core import FieldTower, default_tower
from .forms import GeneralTable, Hermitian, canonical, hermitian_kl
from .quantum import (
    format_table,
    image_condition_cyclic,
    reference_pool,
    profile_pool,
    quantum_params,
    search_table,
    trace_condition_cyclic,
)

SCHEMA = "selforth/1"


class Job:
    """Parsed input blocks, built lazily so each command only validates what it uses."""

    def __init__(self, doc: dict, args: argparse.Namespace):
        self.doc = doc
        self.args = args
        self._tower: FieldTower | None = None

    def block(self, name: str) -> Any:
        if name not in self.doc:
            raise ParseError(f"input has no '{name}' block")
        return self.doc[name]

    @property
    def tower(self) -> FieldTower:
        if self._tower is None:
            self._tower = parse_field(self.doc.get("field", {}), self.args)
        return self._tower

    def basis(self) -> DualBasisPair:
        items = self.block("basis")
        if not isinstance(items, list):
            raise ParseError("basis block must be a list of elements")
        b = Basis.of(self.tower, items)
        return DualBasisPair.from_dual(b) if self.args.dual else DualBasisPair.from_basis(b)

    def code(self):
        return parse_code(self.block("code"), self.tower)

    def form(self):
        return parse_form(self.doc.get("form", {"variant": "canonical"}), self.tower)


def parse_field(block: dict, args: argparse.Namespace | None = None) -> FieldTower:
    block = dict(block)
    if args is not None:
        if getattr(args, "q", None) is not None:
            block = {"q": args.q, "m": block.get("m", 1)}
        if getattr(args, "m", None) is not None and "inner_modulus" not in block:
            block["m"] = args.m
    if "inner_modulus" in block or "outer_modulus" in block:
        try:
            return FieldTower(int(block["p"]), block["inner_modulus"], block["outer_modulus"], block.get("primitive"))
        except KeyError as exc:
            raise ParseError(f"field block is missing {exc}") from exc
    if "q" in block:
        q = int(block["q"])
    elif "p" in block:
        q = int(block["p"]) ** int(block.get("r", 1))
    else:
        raise ParseError("field block needs q (or p, r) and m")
    if "m" not in block:
        raise ParseError("field block needs m")
    return default_tower(q, int(block["m"]))


def _vector(t: FieldTower, items: Sequence[Any]) -> list[int]:
    if not isinstance(items, list):
        raise ParseError("vector must be a list of elements")
    return [t.parse(x) for x in items]


def parse_code(block: dict, t: FieldTower):
    kind = block.get("kind")
    if kind == "cyclic":
        n = int(block["n"])
        if "zeros" in block:
            return CyclicCode(t, n, zero_set=block["zeros"])
        if "nonzeros" in block:
            return CyclicCode(t, n, nonzero_set=block["nonzeros"])
        raise ParseError("cyclic code needs zeros or nonzeros")
    if kind == "linear":
        gens = [_vector(t, g) for g in block.get("gens", [])]
        return LinearCode(t, gens, n=block.get("n"))
    if kind == "scalable":
        reps = [_vector(t, v) for v in block.get("reps", [])]
        return ScalableCode(t, reps, n=block.get("n"))
    raise ParseError(f"unknown code kind {kind!r}")


def parse_form(block: dict, t: FieldTower):
    variant = block.get("variant", "canonical")
    if variant == "canonical":
        return canonical()
    if variant == "hermitian":
        return hermitian_kl(t, int(block.get("k", 0)), int(block.get("l", 0)))
    if variant == "table":
        entries = {}
        for row in block.get("entries", []):
            if len(row) != 5:
                raise ParseError("table entries are [i, j, k, l, element]")
            i, j, k, l, e = row
            entries[(int(i), int(j), int(k), int(l))] = t.parse(e)
        return GeneralTable(int(block["n"]), entries)
    raise ParseError(f"unknown form variant {variant!r}")


# ---------------------------------------------------------------------------
# report emission


def _table(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    cells = [list(map(str, header))] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells)


def _rec(rtype: str, **fields) -> dict:
    return {"schema": SCHEMA, "type": rtype, **fields}


def emit_verdict(v: Verdict, t: FieldTower) -> tuple[str, list[dict]]:
    rows, recs = [], []
    for e in v.evidence:
        status = "skipped" if e.checked is None else ("ok" if e.checked else "FAIL")
        ps = "-" if e.power_sum is None else t.format(e.power_sum)
        klw = "-" if e.klw is None else ",".join(map(str, e.klw))
        part = "-" if e.part is None else str(e.part)
        rows.append([e.j, klw, part, ps, status])
        recs.append(
            _rec(
                "evidence",
                mode=v.mode,
                j=e.j,
                klw=None if e.klw is None else list(e.klw),
                part=e.part,
                power_sum=None if e.power_sum is None else t.format(e.power_sum),
                check=status,
            )
        )
    text = _table(["j", "k,l,w", "part", "power_sum", "conjugate_form"], rows)
    text += f"\n{v.mode} self-orthogonal: {'TRUE' if v.overall else 'FALSE'}"
    summary = _rec("verdict", mode=v.mode, overall=v.overall, dual=None if v.dual is None else [t.format(x) for x in v.dual])
    return text, recs + [summary]


def emit_report(result: Any, t: FieldTower | None = None) -> tuple[str, list[dict]]:
    if isinstance(result, Verdict):
        return emit_verdict(result, t)
    if isinstance(result, PowerSumProfile):
        t = result.dual.tower
        rows = [[j, 1 + t.p**j, t.format(v), "yes" if v == 0 else ""] for j, v in result.sums.items()]
        recs = [_rec("power_sum", j=j, exponent=1 + t.p**j, value=t.format(v)) for j, v in result.sums.items()]
        return _table(["j", "exponent", "power_sum", "vanishes"], rows), recs
    if isinstance(result, list):
        text = format_table(result)
        return text, [_rec("quantum", **r.as_record()) for r in result]
    raise TypeError(f"cannot report {type(result).__name__}")


# ---------------------------------------------------------------------------
# commands


def cmd_field_info(job: Job) -> tuple[str, list[dict], bool]:
    t = job.tower
    d = t.describe()
    d["primitive"] = t.format(t.primitive)
    lines = [f"GF({t.order}) over GF({t.q}) over GF({t.p})"]
    lines += [f"{k}: {json.dumps(v)}" for k, v in d.items()]
    return "\n".join(lines), [_rec("field", **d)], True


def cmd_basis_dual(job: Job) -> tuple[str, list[dict], bool]:
    t = job.tower
    pair = job.basis()
    rows = [[i, t.format(b), t.format(d)] for i, (b, d) in enumerate(zip(pair.basis.elems, pair.dual.elems))]
    text = _table(["i", "basis", "dual"], rows)
    text += f"\nself-dual: {is_self_dual(pair.basis)}"
    rec = _rec("dual_basis", basis=pair.basis.format(), dual=pair.dual.format(), self_dual=is_self_dual(pair.basis))
    return text, [rec], True


def cmd_basis_powersums(job: Job) -> tuple[str, list[dict], bool]:
    t = job.tower
    prof = power_sum_profile(job.basis().dual)
    text, recs = emit_report(prof)
    return "dual basis: " + ", ".join(prof.dual.format()) + "\n" + text, recs, True


def cmd_basis_enum(job: Job) -> tuple[str, list[dict], bool]:
    t = job.tower
    ordered = job.args.ordered
    bases = list(enumerate_bases(t, unordered=not ordered))
    recs = [_rec("basis", elems=b.format()) for b in bases] if job.args.list else []
    text = f"{len(bases)} {'ordered' if ordered else 'unordered'} bases of GF({t.order}) over GF({t.q})"
    if job.args.list:
        text += "\n" + "\n".join("{" + ", ".join(b.format()) + "}" for b in bases)
    recs.append(_rec("basis_count", ordered=ordered, count=len(bases), ordered_total=count_ordered_bases(t)))
    return text, recs, True


def cmd_check_image(job: Job) -> tuple[str, list[dict], bool]:
    t = job.tower
    code, pair, form = job.code(), job.basis(), job.form()
    v = image_selforth(code, pair, form)
    text, recs = emit_verdict(v, t)
    sc = shortcut_verdict(code, pair, form)
    if sc is not None:
        text += f"\nshortcut {sc.rule} ({sc.kind.value}): code canonically self-orthogonal = {sc.code_selforth}"
        recs.append(_rec("shortcut", rule=sc.rule, kind=sc.kind.value, code_selforth=sc.code_selforth))
    return text, recs, v.overall


def cmd_check_trace(job: Job) -> tuple[str, list[dict], bool]:
    v = trace_selforth(job.code(), job.form())
    text, recs = emit_verdict(v, job.tower)
    return text, recs, v.overall


def cmd_check_all_bases(job: Job) -> tuple[str, list[dict], bool]:
    t = job.tower
    rep = all_bases_report(job.code(), job.form(), ordered=job.args.ordered)
    n_true = sum(v for _, v in rep.per_basis)
    lines = [
        f"bases checked: {rep.count}",
        f"image true: {n_true}",
        f"all bases: {rep.all_bases}",
        f"some basis: {rep.some_basis}",
        f"trace: {rep.trace}",
        f"equivalence all-bases <=> trace: {'holds' if rep.all_bases == rep.trace else ('q=m=2 exception' if rep.exception_case else 'VIOLATED')}",
    ]
    recs = [_rec("basis_verdict", basis=b.format(), image=v) for b, v in rep.per_basis]
    recs.append(
        _rec(
            "all_bases",
            count=rep.count,
            all_bases=rep.all_bases,
            some_basis=rep.some_basis,
            trace=rep.trace,
            exception_case=rep.exception_case,
            equivalence_holds=rep.equivalence_holds,
        )
    )
    return "\n".join(lines), recs, rep.equivalence_holds


def cmd_cyclic_info(job: Job) -> tuple[str, list[dict], bool]:
    c = job.code()
    if not isinstance(c, CyclicCode):
        raise ParseError("cyclic-info needs a cyclic code block")
    t = c.tower
    zc, sc = cyclic_trace_zero_set(c)
    cosets = cyclotomic_cosets(c.n, t.q)
    info = {
        "n": c.n,
        "dimension": c.k,
        "zeros": sorted(c.zero_set),
        "nonzeros": sorted(c.nonzero_set),
        "alpha": t.format(c.alpha),
        "cosets": [list(x) for x in cosets],
        "trace_zeros": sorted(zc),
        "trace_nonzeros": sorted(sc),
        "bch_bound": bch_bound(c.zero_set, c.n),
        "dual_bch_bound": bch_bound({(-s) % c.n for s in c.nonzero_set}, c.n),
    }
    text = "\n".join(f"{k}: {json.dumps(v)}" for k, v in info.items())
    return text, [_rec("cyclic", **info)], True


def _load_pool(path: str, m: int) -> list[tuple[str, Basis]]:
    t = default_tower(4, m)
    with open(path) as fh:
        doc = json.load(fh)
    out = []
    for i, entry in enumerate(doc):
        if isinstance(entry, dict):
            label, elems = entry.get("label", f"B{i + 1}"), entry["dual"]
        else:
            label, elems = f"B{i + 1}", entry
        out.append((str(label), Basis.of(t, elems)))
    return out


def cmd_quantum_search(job: Job) -> tuple[str, list[dict], bool]:
    args = job.args
    pool = reference_pool(args.m)
    if args.basis_file:
        pool = _load_pool(args.basis_file, args.m)
    if args.profile_pool:
        pool = pool + profile_pool(args.m)
    rows = search_table(args.m, args.n0, pool)
    text, recs = emit_report(rows)
    return text, recs, True


def cmd_quantum_check(job: Job) -> tuple[str, list[dict], bool]:
    args = job.args
    t = default_tower(4, args.m)
    s = [int(x) for x in args.S.split(",") if x.strip()]
    recs = [_rec("condition", name="trace", holds=trace_condition_cyclic(args.n0, s, t))]
    label, dual = "All", None
    if args.basis:
        dual = Basis.of(t, [x.strip() for x in args.basis.split(",")])
        label = args.label
        recs.append(_rec("condition", name="image", holds=image_condition_cyclic(args.n0, s, power_sum_profile(dual))))
    lines = [f"{r['name']} condition: {r['holds']}" for r in recs]
    try:
        qp = quantum_params(args.n0, s, args.m, label, dual)
    except ConditionNotMet as exc:
        lines.append(f"no quantum code: {exc}")
        return "\n".join(lines), recs, False
    lines.append(f"[[{qp.n}, {qp.k}, {qp.d}]]")
    recs.append(_rec("quantum", **qp.as_record()))
    return "\n".join(lines), recs, True


def cmd_verify_oracle(job: Job) -> tuple[str, list[dict], bool]:
    from . import verify

    rep = verify.run(job.args.seed, job.args.instances)
    recs = [
        _rec(
            "oracle_check",
            index=i,
            kind=o.instance.kind,
            field=[o.instance.tower.order, o.instance.tower.q],
            image=[o.image_theorem, o.image_oracle],
            trace=[o.trace_theorem, o.trace_oracle],
            agree=o.agree,
        )
        for i, o in enumerate(rep.outcomes)
    ]
    recs.append(_rec("oracle_summary", total=rep.total, agree=rep.agreed, image_true=rep.image_true, trace_true=rep.trace_true))
    return rep.summary(), recs, rep.agreed == rep.total


COMMANDS = {
    "field-info": (cmd_field_info, "describe the field tower"),
    "basis-dual": (cmd_basis_dual, "trace-dual basis of the basis block"),
    "basis-powersums": (cmd_basis_powersums, "power sums of the dual basis at every Frobenius index"),
    "basis-enum": (cmd_basis_enum, "count (or list) all bases"),
    "check-image": (cmd_check_image, "is the q-ary image self-orthogonal?"),
    "check-trace": (cmd_check_trace, "is the trace code self-orthogonal?"),
    "check-all-bases": (cmd_check_all_bases, "image verdict for every basis versus the trace"),
    "cyclic-info": (cmd_cyclic_info, "zero sets, cosets and bounds of a cyclic code"),
    "quantum-search": (cmd_quantum_search, "quantum codes from cyclic codes over GF(4^m)"),
    "quantum-check": (cmd_quantum_check, "check one (n0, S, basis) combination"),
    "verify-oracle": (cmd_verify_oracle, "compare criteria with brute force on random instances"),
}

NEEDS_INPUT = {"basis-dual", "basis-powersums", "check-image", "check-trace", "check-all-bases", "cyclic-info"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="selforth", description="Self-orthogonality of q-ary images and traces.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--input", "-i", help="JSON job file, '-' for stdin")
        p.add_argument("--records", help="write JSON lines to this path")
        p.add_argument("--assert", dest="assert_", action="store_true", help="exit 1 when the verdict is false")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--limit", type=int, help="override every brute-force size guard")
        if name not in ("quantum-search", "quantum-check"):
            p.add_argument("--q", type=int, help="base field size (overrides the field block)")
            p.add_argument("--m", type=int, help="extension degree (overrides the field block)")
        p.add_argument("--dual", action="store_true", help="the basis block lists B' directly")
        if name in ("basis-enum", "check-all-bases"):
            p.add_argument("--ordered", action="store_true")
        if name == "basis-enum":
            p.add_argument("--list", action="store_true")
        if name in ("quantum-search", "quantum-check"):
            p.add_argument("--m", type=int, required=True)
            p.add_argument("--n0", type=int, required=True)
        if name == "quantum-search":
            p.add_argument("--basis-file", help="JSON list of dual bases ({label, dual} or element lists)")
            p.add_argument("--profile-pool", action="store_true", help="add one basis per vanishing pattern")
        if name == "quantum-check":
            p.add_argument("--S", required=True, help="comma-separated nonzero set")
            p.add_argument("--basis", help="comma-separated dual basis B' (omit for the trace condition)")
            p.add_argument("--label", default="B'")
        if name == "verify-oracle":
            p.add_argument("--instances", type=int, default=200)
    return parser


def _read_doc(path: str | None) -> dict:
    if path is None:
        return {}
    try:
        text = sys.stdin.read() if path == "-" else open(path).read()
        doc = json.loads(text)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("job document must be a JSON object")
    return doc


def run(argv: Sequence[str] | None = None, stdout=None) -> int:
    out = sys.stdout if stdout is None else stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    saved = os.environ.get("SELFORTH_LIMIT")
    try:
        if args.command in NEEDS_INPUT and args.input is None:
            raise ParseError(f"{args.command} needs --input")
        if args.limit is not None:
            os.environ["SELFORTH_LIMIT"] = str(args.limit)
        job = Job(_read_doc(args.input), args)
        text, recs, ok = COMMANDS[args.command][0](job)
    except (SelforthError, KeyError, TypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    finally:
        if args.limit is not None:
            if saved is None:
                os.environ.pop("SELFORTH_LIMIT", None)
            else:
                os.environ["SELFORTH_LIMIT"] = saved
    print(text, file=out)
    if args.records:
        with open(args.records, "w") as fh:
            for r in recs:
                fh.write(json.dumps(r, sort_keys=True) + "\n")
    return 1 if args.assert_ and not ok else 0


def main() -> None:
    sys.exit(run())
