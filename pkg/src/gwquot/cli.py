"""Command-line front end.

Subcommands
-----------
compute   one genus-0 invariant:
          gwquot compute --model P2 --degree 3 --insert pt*8
compare   both sides of the quotient comparison identity:
          gwquot compare --family torus:1,1 --degree 1 --insert pt,pt,pt
dlambda   a degeneracy-locus degree:
          gwquot dlambda --m 5 --n 3 --lambda 2
table     CSV sweep of the comparison over degrees 1..D
ledger    expected-dimension bookkeeping for a family at (g, k, d)

Class syntax: ``H^a`` on projective space, ``H1^a*H2^b`` on a product,
``s[2,1]`` for a Schubert class, ``pt`` and ``1`` for the point and
fundamental classes; an integer multiplicity may be appended as ``*k``.

Exit codes: 0 success, 1 internal assertion failure (a comparison that is
dimensionally consistent but unequal), 2 parameter error, 3 unsupported
configuration.  Rationals are emitted as strings "p/q" (integers as "p").

If ``GW_CACHE_DIR`` is set, the invariant memo table is loaded from and
persisted to ``$GW_CACHE_DIR/gwquot_memo.tsv`` as ``key<TAB>p/q`` lines;
unreadable lines are skipped with a warning.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time
from fractions import Fraction
from pathlib import Path

from .cohmodel import (
    BasisClass,
    Grassmannian,
    Product,
    Projective,
    RingModel,
    make_model,
)
from .errors import (
    GWQuotError,
    InternalCheckError,
    ParameterError,
    UnsupportedConfigurationError,
    UnsupportedModelError,
)
from .gwengine import MemoTable, default_memo, gw0, gw0_grassmannian_3pt, make_key
from .quotientcmp import (
    GrassmannQuot,
    TorusPair,
    dimension_ledger,
    make_family,
    verify_comparison,
)
from . import schubert

_MODEL_RE = re.compile(r"^P(\d+)(?:xP(\d+))?$")
_GR_RE = re.compile(r"^Gr(\d+),(\d+)$")
_FAMILY_RE = re.compile(r"^(torus|grassmann):(\d+),(\d+)$")
_PRODUCT_TERM_RE = re.compile(r"^H1\^(\d+)\*H2\^(\d+)(?:\*(\d+))?$")
_TERM_RE = re.compile(r"^(pt|1|H(?:\^(\d+))?|s\[(\d*(?:,\d+)*)\])(?:\*(\d+))?$")


def parse_model(text: str) -> RingModel:
    match = _MODEL_RE.match(text)
    if match:
        if match.group(2) is None:
            return make_model(Projective(int(match.group(1))))
        return make_model(Product(int(match.group(1)), int(match.group(2))))
    match = _GR_RE.match(text)
    if match:
        return make_model(Grassmannian(int(match.group(1)), int(match.group(2))))
    raise ParameterError(f"cannot parse model {text!r} (expected P3, P1xP2 or Gr2,4)")


def model_name(model: RingModel) -> str:
    kind = model.kind
    if isinstance(kind, Projective):
        return f"P{kind.n}"
    if isinstance(kind, Product):
        return f"P{kind.m}xP{kind.n}"
    return f"Gr{kind.k},{kind.m}"


def parse_family(text: str):
    match = _FAMILY_RE.match(text)
    if not match:
        raise ParameterError(f"cannot parse family {text!r} (expected torus:m,n)")
    name, m, n = match.group(1), int(match.group(2)), int(match.group(3))
    kind = TorusPair(m, n) if name == "torus" else GrassmannQuot(m, n)
    return make_family(kind)


def family_name(family) -> str:
    label = "torus" if isinstance(family.kind, TorusPair) else "grassmann"
    return f"{label}:{family.kind.m},{family.kind.n}"


def parse_degree(text: str, model: RingModel):
    parts = [p.strip() for p in text.split(",")]
    try:
        components = tuple(int(p) for p in parts)
    except ValueError as exc:
        raise ParameterError(f"cannot parse degree {text!r}") from exc
    return model.curve(components)


def parse_insertions(text: str, model: RingModel) -> list[BasisClass]:
    """Parse a comma-separated insertion list against a model's basis."""
    out: list[BasisClass] = []
    if not text.strip():
        return out
    for raw in _split_terms(text):
        cls, mult = _parse_term(raw, model)
        out.extend([cls] * mult)
    return out


def _split_terms(text: str) -> list[str]:
    return [t.strip() for t in text.split(",") if t.strip()] if "s[" not in text else _split_bracketed(text)


def _split_bracketed(text: str) -> list[str]:
    terms, depth, current = [], 0, []
    for ch in text:
        if ch == "," and depth == 0:
            terms.append("".join(current).strip())
            current = []
            continue
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        current.append(ch)
    if current:
        terms.append("".join(current).strip())
    return [t for t in terms if t]


def _parse_term(raw: str, model: RingModel) -> tuple[BasisClass, int]:
    match = _PRODUCT_TERM_RE.match(raw)
    if match:
        if not isinstance(model.kind, Product):
            raise ParameterError(f"{raw!r} is a product class but the model is {model_name(model)}")
        tag = (int(match.group(1)), int(match.group(2)))
        mult = int(match.group(3) or 1)
        return model.class_by_tag(tag), mult
    match = _TERM_RE.match(raw)
    if not match:
        raise ParameterError(f"cannot parse insertion {raw!r}")
    atom, power, partition, mult = match.group(1), match.group(2), match.group(3), match.group(4)
    mult = int(mult or 1)
    if atom == "pt":
        return model.point_class, mult
    if atom == "1":
        return model.fundamental_class, mult
    if atom.startswith("s["):
        if not isinstance(model.kind, Grassmannian):
            raise ParameterError(f"{raw!r} is a Schubert class but the model is {model_name(model)}")
        parts = tuple(int(p) for p in partition.split(",")) if partition else ()
        return model.class_by_tag(schubert.normalize_partition(parts)), mult
    exponent = int(power) if power is not None else 1
    if isinstance(model.kind, Projective):
        return model.class_by_tag((exponent,)), mult
    raise ParameterError(f"{raw!r} needs H1^a*H2^b syntax on {model_name(model)}")


def class_token(model: RingModel, cls: BasisClass) -> str:
    if cls.codim == 0:
        return "1"
    if cls.codim == model.complex_dimension:
        return "pt"
    if isinstance(model.kind, Projective):
        return f"H^{cls.tag[0]}"
    if isinstance(model.kind, Product):
        return f"H1^{cls.tag[0]}*H2^{cls.tag[1]}"
    return "s[" + ",".join(str(p) for p in cls.tag) + "]"


def format_insertions(model: RingModel, classes) -> str:
    """Canonical textual form: grouped, sorted by (codim, tag)."""
    counts: dict[BasisClass, int] = {}
    for cls in classes:
        counts[cls] = counts.get(cls, 0) + 1
    chunks = []
    for cls in sorted(counts, key=lambda c: (c.codim, c.tag)):
        token = class_token(model, cls)
        chunks.append(token if counts[cls] == 1 else f"{token}*{counts[cls]}")
    return ",".join(chunks)


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


# ---------------------------------------------------------------------------
# memo persistence
# ---------------------------------------------------------------------------

def _key_to_text(key) -> str:
    kind, components, tags = key[0], key[1], key[2]
    if isinstance(kind, Projective):
        name, fmt = f"P{kind.n}", lambda t: f"H^{t[0]}"
    elif isinstance(kind, Product):
        name, fmt = f"P{kind.m}xP{kind.n}", lambda t: f"H1^{t[0]}*H2^{t[1]}"
    else:
        raise ParameterError(f"cannot serialize key for {kind!r}")
    extra = "" if len(key) == 3 else "|" + str(key[3])
    return f"{name}|{','.join(str(c) for c in components)}|{';'.join(fmt(t) for t in tags)}{extra}"


def _key_from_text(text: str):
    name, degree, tags = text.split("|", 2)
    model = parse_model(name)
    components = tuple(int(c) for c in degree.split(","))
    classes = []
    for token in tags.split(";") if tags else []:
        cls, mult = _parse_term(token, model)
        if mult != 1:
            raise ParameterError("memo keys carry no multiplicities")
        classes.append(cls)
    return make_key(model, model.curve(components), classes)


def _cache_path() -> Path | None:
    cache_dir = os.environ.get("GW_CACHE_DIR")
    if not cache_dir:
        return None
    return Path(cache_dir) / "gwquot_memo.tsv"


def _load_cache(memo: MemoTable) -> None:
    path = _cache_path()
    if path is None or not path.exists():
        return
    skipped = 0
    try:
        lines = path.read_text().splitlines()
    except OSError as exc:
        print(f"warning: cache unreadable: {exc}", file=sys.stderr)
        return
    for line in lines:
        if not line.strip():
            continue
        try:
            key_text, value_text = line.split("\t")
            memo.put(_key_from_text(key_text), Fraction(value_text))
        except (ValueError, GWQuotError):
            skipped += 1
    if skipped:
        print(f"warning: ignored {skipped} corrupt cache line(s) in {path}", file=sys.stderr)


def _save_cache(memo: MemoTable) -> None:
    path = _cache_path()
    if path is None:
        return
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        lines = []
        for key, value in sorted(memo.snapshot().items(), key=lambda kv: _key_to_text(kv[0])):
            lines.append(f"{_key_to_text(key)}\t{format_rational(value)}")
        tmp = path.with_suffix(".tmp")
        tmp.write_text("\n".join(lines) + ("\n" if lines else ""))
        tmp.replace(path)
    except (OSError, GWQuotError) as exc:
        print(f"warning: cache not saved: {exc}", file=sys.stderr)


# ---------------------------------------------------------------------------
# command implementations
# ---------------------------------------------------------------------------

def _emit(args, payload: dict, csv_rows: tuple[list[str], list[list[str]]] | None = None) -> None:
    if getattr(args, "format", "json") == "csv" and csv_rows is not None:
        header, rows = csv_rows
        text = "\n".join([",".join(header)] + [",".join(map(str, row)) for row in rows]) + "\n"
    else:
        text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if getattr(args, "output", None):
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _payload(command: str, inputs: dict, body: dict, started: float, timing: bool) -> dict:
    payload = {"command": command, "inputs": inputs}
    payload.update(body)
    payload["timing_ms"] = int((time.monotonic() - started) * 1000) if timing else None
    return payload


def _cmd_compute(args, memo: MemoTable) -> int:
    started = time.monotonic()
    model = parse_model(args.model)
    degree = parse_degree(args.degree, model)
    insertions = parse_insertions(args.insert, model)
    if isinstance(model.kind, Grassmannian):
        if len(insertions) != 3:
            raise UnsupportedConfigurationError(
                "Grassmannian invariants need exactly 3 insertions"
            )
        value = gw0_grassmannian_3pt(
            model.kind.k, model.kind.m,
            insertions[0].tag, insertions[1].tag, insertions[2].tag,
            degree.components[0],
        )
    else:
        value = gw0(model, degree, insertions, memo=memo)
    inputs = {
        "model": model_name(model),
        "degree": ",".join(str(c) for c in degree.components),
        "insertions": format_insertions(model, insertions),
    }
    _emit(args, _payload("compute", inputs, {"value": format_rational(value)}, started, args.timing),
          ((["model", "degree", "insertions", "value"],
            [[inputs["model"], inputs["degree"], inputs["insertions"], format_rational(value)]])))
    return 0


def _report_dict(model, report) -> dict:
    ledger = {
        "D_hat": report.ledger.d_hat,
        "D_minus_dimG": report.ledger.d_minus_dim_g,
        "gap": report.ledger.gap,
    }
    if report.ledger.real_dim_2d is not None:
        ledger["real_dim_2D"] = report.ledger.real_dim_2d
    return {
        "lhs": format_rational(report.lhs),
        "rhs": format_rational(report.rhs),
        "equal": report.equal,
        "lhs_dim_ok": report.lhs_dim_ok,
        "rhs_dim_ok": report.rhs_dim_ok,
        "zeta_slot": report.zeta_slot,
        "warnings": list(report.warnings),
        "ledger": ledger,
    }


def _cmd_compare(args, memo: MemoTable) -> int:
    started = time.monotonic()
    family = parse_family(args.family)
    degree = int(args.degree)
    insertions = parse_insertions(args.insert, family.downstairs)
    report = verify_comparison(family, degree, insertions, zeta_slot=args.zeta_slot, memo=memo)
    for warning in report.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    inputs = {
        "family": family_name(family),
        "degree": str(degree),
        "insertions": format_insertions(family.downstairs, insertions),
        "zeta_slot": args.zeta_slot,
    }
    body = {"report": _report_dict(family.downstairs, report)}
    _emit(args, _payload("compare", inputs, body, started, args.timing),
          ((["family", "d", "k", "insertions", "lhs", "rhs", "equal"],
            [[inputs["family"], degree, len(insertions), inputs["insertions"],
              format_rational(report.lhs), format_rational(report.rhs),
              str(report.equal).lower()]])))
    if report.lhs_dim_ok and report.rhs_dim_ok and not report.equal:
        print(
            "error: internal: comparison identity failed at "
            f"{inputs['family']} d={degree} ({format_rational(report.lhs)} != "
            f"{format_rational(report.rhs)})",
            file=sys.stderr,
        )
        return 1
    return 0


def _cmd_dlambda(args, _memo: MemoTable) -> int:
    started = time.monotonic()
    lam = schubert.normalize_partition(
        int(p) for p in args.lam.split(",") if p.strip()
    ) if args.lam.strip() else ()
    value = schubert.dlambda(lam, args.m, args.n).value
    inputs = {"m": args.m, "n": args.n, "lambda": ",".join(str(p) for p in lam)}
    _emit(args, _payload("dlambda", inputs, {"value": str(value)}, started, args.timing),
          ((["m", "n", "lambda", "value"],
            [[args.m, args.n, inputs["lambda"], value]])))
    return 0


def _cmd_table(args, memo: MemoTable) -> int:
    started = time.monotonic()
    family = parse_family(args.family)
    model = family.downstairs
    parsed = parse_insertions(args.insert, model)
    if len(parsed) != 1:
        raise ParameterError("table needs a single insertion class as template")
    template = parsed[0]
    if template.codim < 2:
        raise ParameterError("table template class must have codimension >= 2")
    header = ["family", "d", "k", "insertions", "lhs", "rhs", "equal"]
    rows = []
    from .quotientcmp import pushforward_class

    for d in range(1, args.dmax + 1):
        a_hat = pushforward_class(family, d)
        need = model.complex_dimension + model.c1_dot(a_hat) - 3
        if need % (template.codim - 1):
            continue
        k = need // (template.codim - 1)
        if k < 1:
            continue
        try:
            report = verify_comparison(family, d, [template] * k, memo=memo)
        except UnsupportedConfigurationError:
            continue
        rows.append([
            family_name(family), d, k, format_insertions(model, [template] * k),
            format_rational(report.lhs), format_rational(report.rhs),
            str(report.equal).lower(),
        ])
    inputs = {"family": family_name(family), "dmax": args.dmax,
              "insert": class_token(model, template)}
    table_rows = [dict(zip(header, row)) for row in rows]
    _emit(args, _payload("table", inputs, {"rows": table_rows}, started, args.timing),
          (header, rows))
    return 0


def _cmd_ledger(args, _memo: MemoTable) -> int:
    started = time.monotonic()
    family = parse_family(args.family)
    ledger = dimension_ledger(family, args.g, args.k, args.degree)
    inputs = {"family": family_name(family), "g": args.g, "k": args.k, "degree": args.degree}
    body = {
        "ledger": {
            "D_hat": ledger.d_hat,
            "D_minus_dimG": ledger.d_minus_dim_g,
            "gap": ledger.gap,
            **({"real_dim_2D": ledger.real_dim_2d} if ledger.real_dim_2d is not None else {}),
        }
    }
    _emit(args, _payload("ledger", inputs, body, started, args.timing),
          ((["family", "g", "k", "d", "D_hat", "D_minus_dimG", "gap", "real_dim_2D"],
            [[inputs["family"], args.g, args.k, args.degree, ledger.d_hat,
              ledger.d_minus_dim_g, ledger.gap,
              "" if ledger.real_dim_2d is None else ledger.real_dim_2d]])))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gwquot",
        description="Exact genus-0 Gromov-Witten invariants and quotient comparisons.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=["json", "csv"], default="json")
        p.add_argument("--output", help="write the report to this path instead of stdout")
        p.add_argument("--timing", action="store_true",
                       help="include wall-clock timing_ms (off by default for reproducible output)")

    p = sub.add_parser("compute", help="compute one invariant")
    p.add_argument("--model", required=True)
    p.add_argument("--degree", required=True)
    p.add_argument("--insert", required=True)
    common(p)
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("compare", help="verify the quotient comparison identity")
    p.add_argument("--family", required=True)
    p.add_argument("--degree", required=True, type=int)
    p.add_argument("--insert", required=True)
    p.add_argument("--zeta-slot", dest="zeta_slot", type=int, default=1)
    common(p)
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("dlambda", help="degeneracy-locus degree d(lambda)")
    p.add_argument("--m", required=True, type=int)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--lambda", dest="lam", required=True)
    common(p)
    p.set_defaults(func=_cmd_dlambda)

    p = sub.add_parser("table", help="sweep the comparison over degrees")
    p.add_argument("--family", required=True)
    p.add_argument("--dmax", required=True, type=int)
    p.add_argument("--insert", default="pt")
    common(p)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("ledger", help="expected-dimension ledger")
    p.add_argument("--family", required=True)
    p.add_argument("--g", required=True, type=int)
    p.add_argument("--k", required=True, type=int)
    p.add_argument("--degree", required=True, type=int)
    common(p)
    p.set_defaults(func=_cmd_ledger)
    return parser


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    memo = MemoTable() if os.environ.get("GW_CACHE_DIR") else default_memo()
    _load_cache(memo)
    try:
        code = args.func(args, memo)
    except ParameterError as exc:
        print(f"error: parameter: {exc}", file=sys.stderr)
        return 2
    except (UnsupportedModelError, UnsupportedConfigurationError) as exc:
        print(f"error: unsupported: {exc}", file=sys.stderr)
        return 3
    except InternalCheckError as exc:
        print(f"error: internal: {exc}", file=sys.stderr)
        return 1
    _save_cache(memo)
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
