"""Command-line front end: gen, canon, count, memsize, fuse, beliefs.

Exit codes: 0 success, 1 usage error, 2 parse/input error, 3 full
contradiction, 4 capacity refusal.  All output ordering is canonical, so
identical invocations produce byte-identical output.
"""

import argparse
import csv
import json
import sys
import warnings

from . import fusion, oracles
from .errors import (
    CapacityError,
    DsmkitError,
    FullContradictionError,
    MassValidationError,
    ModelViolationError,
    ParseError,
    RegionRangeError,
    UnknownCardinalityError,
)
from .expr import eval_mask, parse
from .hyperpowerset import (
    GENERATION_CAP,
    dnf_of_mask,
    generate,
    known_cardinality,
    render_expr,
    to_dnf,
)
from .venn import Frame, VennMask, atom_mask, to_bitstring, to_hex

BELIEFS_ALL_CAP = 4


class DuplicateMassWarning(UserWarning):
    """Two mass entries canonicalized to the same element and were merged."""


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def subset_to_expr(subset: int, frame: Frame) -> str:
    """Render an atom subset as a union expression; "0" for the empty set."""
    if subset == 0:
        return "0"
    return "|".join(f"t{i}" for i in frame.atoms if subset >> (i - 1) & 1)


def _subset_of_atoms(mask: VennMask, frame: Frame) -> int | None:
    """The atom subset whose union equals ``mask``, or None if there is none."""
    subset = 0
    bits = 0
    for i in frame.atoms:
        am = atom_mask(i, frame)
        if am.bits & mask.bits == am.bits:
            subset |= 1 << (i - 1)
            bits |= am.bits
    return subset if bits == mask.bits else None


def load_bba(path: str, frame: Frame | None = None):
    """Read a mass-assignment file into a generalized or classical bba.

    Schema: {"n": N, "model": "dsm"|"dst", "masses": [{"expr": ..., "mass":
    ...}, ...]}.  Expressions are canonicalized to masks before validation;
    entries whose expressions denote the same element are merged with a
    warning.  Under the "dst" model every expression must reduce to a union
    of atoms.
    """
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict):
        raise MassValidationError(f"{path}: top level must be an object")
    for key in ("n", "model", "masses"):
        if key not in doc:
            raise MassValidationError(f"{path}: missing key {key!r}")
    if not isinstance(doc["n"], int) or isinstance(doc["n"], bool):
        raise MassValidationError(f"{path}: \"n\" must be an integer")
    file_frame = Frame(doc["n"])
    if frame is not None and file_frame != frame:
        raise MassValidationError(
            f"{path}: frame size {file_frame.n} does not match expected {frame.n}"
        )
    model = doc["model"]
    if model not in ("dsm", "dst"):
        raise MassValidationError(f"{path}: model must be \"dsm\" or \"dst\"")
    if not isinstance(doc["masses"], list) or not doc["masses"]:
        raise MassValidationError(f"{path}: \"masses\" must be a nonempty list")

    by_mask: dict[VennMask, float] = {}
    for entry in doc["masses"]:
        if not isinstance(entry, dict) or "expr" not in entry or "mass" not in entry:
            raise MassValidationError(
                f"{path}: each mass entry needs \"expr\" and \"mass\""
            )
        mask = eval_mask(parse(entry["expr"], file_frame), file_frame)
        if mask in by_mask:
            warnings.warn(
                f"{path}: duplicate expression for {to_bitstring(mask)}; masses added",
                DuplicateMassWarning,
                stacklevel=2,
            )
            by_mask[mask] += entry["mass"]
        else:
            by_mask[mask] = entry["mass"]

    if model == "dsm":
        return fusion.GeneralizedBBA(file_frame, by_mask)
    subsets: dict[int, float] = {}
    for mask, mass in by_mask.items():
        if mask.bits == 0:
            subsets[0] = subsets.get(0, 0.0) + mass
            continue
        subset = _subset_of_atoms(mask, file_frame)
        if subset is None:
            raise ModelViolationError(
                f"{path}: {dnf_of_mask(mask)!r} is not a union of atoms;"
                f" the dst model has exclusive atoms"
            )
        subsets[subset] = subsets.get(subset, 0.0) + mass
    return fusion.ClassicalBBA(file_frame, subsets)


def beliefs_report(
    m: fusion.GeneralizedBBA, targets: list[str] | str
) -> list[tuple[str, str, float, float]]:
    """Rows of (expression, mask bits, Bel, Pl) for the requested targets.

    ``targets`` may be the string "all", meaning every lattice element
    (frames up to n=4 only; the row count is the lattice size).
    """
    frame = m.frame
    rows = []
    if targets == "all":
        if frame.n > BELIEFS_ALL_CAP:
            raise CapacityError(
                f"\"all\" would emit {known_cardinality(frame.n) - 1} rows for"
                f" n={frame.n}; capped at n={BELIEFS_ALL_CAP}",
                element_count=known_cardinality(frame.n) - 1,
            )
        pairs = [(dnf_of_mask(mask), mask) for mask in generate(frame)]
    else:
        pairs = [(text, eval_mask(parse(text, frame), frame)) for text in targets]
    for text, mask in pairs:
        bel, pl = fusion.dsm_bel_pl(m, mask)
        rows.append((text, to_bitstring(mask), bel, pl))
    return rows


def _emit_table(header: list[str], rows: list[list[str]], fmt: str, out) -> None:
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return
    widths = [
        max(len(header[c]), *(len(r[c]) for r in rows)) if rows else len(header[c])
        for c in range(len(header))
    ]
    out.write("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip() + "\n")
    for row in rows:
        out.write("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() + "\n")


def _cmd_gen(args, out) -> int:
    frame = Frame(args.n)
    lattice = generate(frame)
    if args.format == "structured":
        elements = [
            {
                "index": i,
                "bits": to_bitstring(mask),
                "hex": to_hex(mask),
                "dnf": dnf_of_mask(mask),
            }
            for i, mask in enumerate(lattice)
        ]
        json.dump({"n": frame.n, "count": len(lattice), "elements": elements}, out)
        out.write("\n")
        return 0
    rows = [
        [str(i), to_bitstring(mask), to_hex(mask), dnf_of_mask(mask)]
        for i, mask in enumerate(lattice)
    ]
    _emit_table(["index", "bits", "hex", "dnf"], rows, args.format, out)
    return 0


def _cmd_canon(args, out) -> int:
    frame = Frame(args.n)
    mask = eval_mask(parse(args.expr, frame), frame)
    out.write(f"bits {to_bitstring(mask)}\n")
    out.write(f"hex {to_hex(mask)}\n")
    out.write(f"dnf {render_expr(to_dnf(mask))}\n")
    return 0


def _cmd_count(args, out) -> int:
    if args.method == "lookup":
        value = known_cardinality(args.n)
    elif args.method == "brute":
        value = oracles.brute_force_mbf(args.n).count
    else:
        value = oracles.kisielewicz_d(args.n, allow_long=args.allow_long)
    out.write(f"{value}\n")
    return 0


def _cmd_memsize(args, out) -> int:
    report = oracles.memsize_report(args.min, args.max)
    rows = [
        [
            str(r.n),
            str(r.bytes_per_elem),
            str(r.elem_count),
            str(r.total_bytes),
            r.human_size,
            str(r.refined_powerset_size),
        ]
        for r in report
    ]
    _emit_table(
        ["n", "bytes/elem", "elems", "total_bytes", "size", "refined_powerset"],
        rows,
        args.format,
        out,
    )
    return 0


def _cmd_fuse(args, out) -> int:
    if len(args.bba) < 2:
        raise _UsageError("fuse needs at least 2 mass files")
    if args.rule != "dsm" and len(args.bba) != 2:
        # the conflict-redistribution family is defined pairwise; only the
        # lattice rule is associative enough to chain safely
        raise _UsageError(
            f"--rule {args.rule} combines exactly 2 sources, got {len(args.bba)}"
        )
    sources = [load_bba(path) for path in args.bba]
    frames = {m.frame for m in sources}
    if len(frames) != 1:
        raise MassValidationError("all mass files must share the same frame size")
    frame = frames.pop()
    p = args.precision

    if args.rule == "dsm":
        if not all(isinstance(m, fusion.GeneralizedBBA) for m in sources):
            raise MassValidationError("--rule dsm needs \"dsm\"-model mass files")
        fused = fusion.dsm_fuse_many(sources)
        rows = [
            [dnf_of_mask(mask), f"{fused.masses[mask]:.{p}f}"]
            for mask in fused.focal()
        ]
        _emit_table(["focal", "mass"], rows, "table", out)
        out.write(f"conflict {0.0:.{p}f}\n")
        return 0

    if not all(isinstance(m, fusion.ClassicalBBA) for m in sources):
        raise MassValidationError(
            f"--rule {args.rule} needs \"dst\"-model mass files"
        )
    if args.rule == "dempster":
        outcome, conflict = fusion.dempster_combine(sources[0], sources[1])
    else:
        weights = (
            fusion.yager_weights(frame)
            if args.rule == "yager"
            else fusion.smets_weights(frame)
        )
        outcome, conflict = fusion.weighted_redistribution(
            sources[0], sources[1], weights
        )
    rows = [
        [subset_to_expr(s, frame), f"{outcome.masses[s]:.{p}f}"]
        for s in outcome.focal()
    ]
    _emit_table(["focal", "mass"], rows, "table", out)
    out.write(f"conflict {conflict:.{p}f}\n")
    return 0


def _cmd_beliefs(args, out) -> int:
    m = load_bba(args.bba)
    if not isinstance(m, fusion.GeneralizedBBA):
        raise MassValidationError("beliefs needs a \"dsm\"-model mass file")
    targets = "all" if args.all else args.target
    p = args.precision
    rows = [
        [text, bits, f"{bel:.{p}f}", f"{pl:.{p}f}"]
        for text, bits, bel, pl in beliefs_report(m, targets)
    ]
    _emit_table(["expr", "bits", "bel", "pl"], rows, "table", out)
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="dsmkit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", help="emit the whole lattice in canonical order")
    gen.add_argument("--n", type=int, required=True, help=f"frame size (<= {GENERATION_CAP})")
    gen.add_argument("--format", choices=["table", "csv", "structured"], default="table")
    gen.set_defaults(func=_cmd_gen)

    canon = sub.add_parser("canon", help="canonicalize a set expression")
    canon.add_argument("--n", type=int, required=True)
    canon.add_argument("--expr", required=True)
    canon.set_defaults(func=_cmd_canon)

    count = sub.add_parser("count", help="monotone-function count d(n)")
    count.add_argument("--n", type=int, required=True)
    count.add_argument("--method", choices=["lookup", "brute", "formula"], default="lookup")
    count.add_argument("--allow-long", action="store_true", help="permit the n=5 formula run")
    count.set_defaults(func=_cmd_count)

    memsize = sub.add_parser("memsize", help="storage-size table per frame size")
    memsize.add_argument("--max", type=int, required=True)
    memsize.add_argument("--min", type=int, default=2)
    memsize.add_argument("--format", choices=["table", "csv"], default="table")
    memsize.set_defaults(func=_cmd_memsize)

    fuse = sub.add_parser("fuse", help="combine mass-assignment files")
    fuse.add_argument("--rule", choices=["dsm", "dempster", "yager", "smets"], required=True)
    fuse.add_argument("--bba", nargs="+", required=True, metavar="FILE")
    fuse.add_argument("--precision", type=int, default=6)
    fuse.set_defaults(func=_cmd_fuse)

    beliefs = sub.add_parser("beliefs", help="belief/plausibility table for targets")
    beliefs.add_argument("--bba", required=True, metavar="FILE")
    group = beliefs.add_mutually_exclusive_group(required=True)
    group.add_argument("--target", action="append", default=[], metavar="EXPR")
    group.add_argument("--all", action="store_true")
    beliefs.add_argument("--precision", type=int, default=6)
    beliefs.set_defaults(func=_cmd_beliefs)

    return parser


def dispatch(argv, out=None, err=None) -> int:
    """Route an argv to its subcommand, mapping errors to exit codes."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return 1
    try:
        return args.func(args, out)
    except _UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return 1
    except ParseError as exc:
        expected = ", ".join(sorted(exc.expected)) or "nothing"
        err.write(f"parse error at byte {exc.offset}: {exc}; expected {expected}\n")
        return 2
    except FullContradictionError as exc:
        err.write(f"full contradiction: {exc}\n")
        return 3
    except (CapacityError, UnknownCardinalityError) as exc:
        err.write(f"capacity error: {exc}\n")
        return 4
    except (MassValidationError, json.JSONDecodeError, OSError) as exc:
        err.write(f"input error: {exc}\n")
        return 2
    except RegionRangeError as exc:
        err.write(f"usage error: {exc}\n")
        return 1
    except DsmkitError as exc:
        err.write(f"error: {exc}\n")
        return 2
    except ValueError as exc:
        err.write(f"usage error: {exc}\n")
        return 1


def main(argv=None) -> int:
    return dispatch(sys.argv[1:] if argv is None else argv)


def entry() -> None:
    sys.exit(main())
