"""Command-line surface.

Every public operation is reachable through exactly one subcommand.  Output
is plain text by default; --format json emits exactly one JSON document on
stdout.  Exit codes: 0 success or verification pass, 1 verification failure,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .acceptance import criterion_ids, run_all, run_criterion
from .bott import bott, spin_cohomology_B, spin_cohomology_D
from .characters import (
    CoordSystem,
    HalfInt,
    Weight,
    build_root_system,
    char_of_irrep,
    Character,
    decompose_character,
    dim_irrep,
    schur_character,
    weight_multiplicities,
)
from .complexes import (
    branch_gl_to_iso,
    bracket_weight,
    littlewood_complex,
    parse_case,
    spinor_complex,
    verify_littlewood_identity,
    verify_spinor_identity,
)
from .errors import LittlewoodError
from .partitions import (
    Partition,
    enumerate_q,
    in_q,
    lr_coefficient,
    plethysm_wedge_power,
    skew_schur_expand,
    dim_schur,
)
from .resolutions import (
    AUDITS,
    BettiTable,
    G2_Y2_BETTI_CHAR2_TEXT,
    betti_of,
    cauchy_slice,
    g2_equivariant_resolution,
    g2_term_dimension,
    hilbert_numerator,
    koszul_complex,
    koszul_terms,
    run_audit,
)


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("", "-"):
        return Partition()
    return Partition(tuple(int(x) for x in text.split(",")))


def parse_type(text: str):
    text = text.strip()
    return text[0].upper(), int(text[1:])


def parse_weight(text: str, family: str, rank: int) -> Weight:
    text = text.strip()
    kind = "fundamental"
    if ":" in text:
        prefix, text = text.split(":", 1)
        kind = {"fund": "fundamental", "eps": "epsilon"}[prefix]
    coords = tuple(HalfInt.parse(x) for x in text.split(","))
    return Weight(CoordSystem(kind, family, rank), coords)


def weight_from_key(text: str) -> Weight:
    kind, name, coords = text.split(":")
    family, rank = name[0], int(name[1:])
    return parse_weight(f"{kind}:{coords}", family, rank)


def _emit(args, payload, text_lines) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _named_betti(name: str) -> BettiTable:
    if name == "g2-y2":
        return betti_of(g2_equivariant_resolution(), g2_term_dimension, ambient_dim=14)
    if name in AUDITS:
        return run_audit(name).betti
    if name.startswith("koszul:"):
        _, form, m = name.split(":")
        m = int(m)
        return betti_of(koszul_complex(form, m), lambda lam: dim_schur(lam, m))
    raise LittlewoodError(f"unknown betti table {name!r}")


# ---------------------------------------------------------------------------
# subcommand handlers; each returns (exit_code, payload, text_lines)


def _cmd_bott(args):
    if args.spin:
        lam = parse_partition(args.lam if args.lam is not None else "")
        if args.spin == "B":
            out = spin_cohomology_B(args.n, lam)
        else:
            out = spin_cohomology_D(args.n, lam, args.spin.removeprefix("D"))
        line = "vanishes" if out.vanishes else f"degree {out.degree}: {out.label}"
        return 0, out.to_json(), [line]
    if not args.type or not args.weight:
        raise LittlewoodError("bott needs --type/--weight, or --spin with --n/--lambda")
    family, rank = parse_type(args.type)
    rs = build_root_system(family, rank)
    out = bott(rs, parse_weight(args.weight, family, rank))
    if out.vanishes:
        return 0, out.to_json(), ["vanishes"]
    return 0, out.to_json(), [f"degree {out.degree}: {out.weight}"]


def _cmd_dim(args):
    family, rank = parse_type(args.type)
    rs = build_root_system(family, rank)
    d = dim_irrep(rs, parse_weight(args.weight, family, rank))
    return 0, {"dim": d}, [str(d)]


def _cmd_mults(args):
    family, rank = parse_type(args.type)
    rs = build_root_system(family, rank)
    char = weight_multiplicities(rs, parse_weight(args.weight, family, rank), bound=args.bound)
    lines = [f"{rs.weight(fc)}: {m}" for fc, m in char.sorted_items()]
    lines.append(f"total {char.dimension()}")
    return 0, char.to_json(), lines


def _cmd_decompose(args):
    family, rank = parse_type(args.type)
    rs = build_root_system(family, rank)
    if args.input:
        raw = sys.stdin.read() if args.input == "-" else open(args.input).read()
        data = json.loads(raw)
        entries = {}
        for key, mult in data.items():
            fc = weight_from_key(key).fund_coords()
            entries[fc] = entries.get(fc, 0) + mult
        char = Character(rs, entries)
    elif args.weight is None:
        raise LittlewoodError("decompose needs --weight (plus optional --schur) or --input")
    else:
        base = char_of_irrep(rs, parse_weight(args.weight, family, rank))
        char = schur_character(rs, base, parse_partition(args.schur)) if args.schur else base
    dec = decompose_character(rs, char)
    lines = [f"{w}: {m}" for w, m in dec.sorted_items()]
    return 0, dec.to_json(), lines


def _cmd_lr(args):
    c = lr_coefficient(parse_partition(args.lam), parse_partition(args.mu), parse_partition(args.nu))
    return 0, {"coefficient": c}, [str(c)]


def _cmd_skew(args):
    dec = skew_schur_expand(parse_partition(args.outer), parse_partition(args.inner))
    return 0, dec.to_json(), [repr(dec)]


def _cmd_qset(args):
    if args.check is not None:
        lam = parse_partition(args.check)
        payload = {
            "partition": lam.to_json(),
            "member": in_q(lam, args.variant),
            "transpose": lam.transpose().to_json(),
            "rank": lam.rank,
        }
        line = f"{lam} in Q[{args.variant}]: {payload['member']} (transpose {lam.transpose()}, rank {lam.rank})"
        return 0, payload, [line]
    if args.size is None:
        raise LittlewoodError("qset needs --size or --check")
    if args.oracle:
        form = "alternating" if args.variant == "minus" else "symmetric"
        dec = plethysm_wedge_power(args.size // 2, form, args.dim_e)
        members = sorted(dec.support(), key=lambda p: p.parts)
    else:
        members = enumerate_q(args.variant, args.size)
    return 0, [p.to_json() for p in members], [str(p) for p in members]


def _cmd_pleth(args):
    dec = plethysm_wedge_power(args.k, args.form, args.dim_e)
    return 0, dec.to_json(), [repr(dec)]


def _cmd_branch(args):
    dec = branch_gl_to_iso(parse_partition(args.lam), args.target, oracle=args.oracle)
    return 0, dec.to_json(), [repr(dec)]


def _cmd_lwood(args):
    terms = littlewood_complex(args.family, parse_partition(args.lam))
    lines = [f"C_{t.index}(-{t.degree}): {t.content!r}" for t in terms]
    return 0, [t.to_json() for t in terms], lines


def _cmd_verify_lwood(args):
    report = verify_littlewood_identity(args.family, parse_partition(args.lam), args.n, oracle=args.oracle)
    line = f"{'pass' if report.passed else 'FAIL'}: {report.case}"
    return (0 if report.passed else 1), report.to_json(), [line]


def _cmd_spinor(args):
    terms = spinor_complex(args.family, args.n)
    lines = [f"F_{t.index}(-{t.degree}): {t.content!r}" for t in terms]
    return 0, [t.to_json() for t in terms], lines


def _cmd_verify_spinor(args):
    report = verify_spinor_identity(args.family, args.n, parse_partition(args.lam))
    line = f"{'pass' if report.passed else 'FAIL'}: {report.case} ({report.lhs} = {report.rhs})"
    return (0 if report.passed else 1), report.to_json(), [line]


def _cmd_bracket(args):
    w = bracket_weight(parse_case(args.case), parse_partition(args.lam))
    return 0, w.to_json(), [str(w)]


def _cmd_koszul(args):
    dec = koszul_terms(args.form, args.m, args.i)
    return 0, dec.to_json(), [repr(dec)]


def _cmd_slice(args):
    dec, total = cauchy_slice(parse_case(args.case), args.degree)
    payload = {"content": dec.to_json(), "dimension": total}
    return 0, payload, [repr(dec), f"dimension {total}"]


def _cmd_g2_resolution(args):
    terms = g2_equivariant_resolution()
    lines = [f"F_{t.index}(-{t.degree}): {t.content!r}" for t in terms]
    return 0, [t.to_json() for t in terms], lines


def _cmd_betti(args):
    if args.case == "g2-y2-char2":
        return 0, {"table": G2_Y2_BETTI_CHAR2_TEXT}, [G2_Y2_BETTI_CHAR2_TEXT]
    table = _named_betti(args.case)
    return 0, table.to_json(), [table.render()]


def _cmd_hilbert(args):
    table = _named_betti(args.case)
    hd = hilbert_numerator(table, args.codim)
    return 0, hd.to_json(), [hd.numerator_str(), f"krull dim {hd.krull_dim}"]


def _cmd_audit(args):
    report = run_audit(args.case)
    lines = [
        f"F_{row.index}: {row.computed}"
        + (f" (expected {row.expected}: {'ok' if row.passed else 'MISMATCH'})" if row.expected is not None else "")
        for row in report.rows
    ]
    lines.append("pass" if report.passed else "FAIL")
    return (0 if report.passed else 1), report.to_json(), lines


def _cmd_suite(args):
    results = [run_criterion(args.name)] if args.name else run_all()
    lines = [r.line() for r in results]
    ok = all(r.passed for r in results)
    lines.append("all criteria pass" if ok else "FAILURES present")
    return (0 if ok else 1), [r.to_json() for r in results], lines


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="littlewood", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, conf):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--format", choices=("text", "json"), default="text")
        conf(p)
        p.set_defaults(fn=fn)

    def with_type_weight(p):
        p.add_argument("--type", required=True, help="root system, e.g. G2, B3, E6")
        p.add_argument("--weight", required=True, help="coords, e.g. 1,0 or eps:3/2,1/2")

    def conf_bott(p):
        p.add_argument("--type", help="root system, e.g. G2, B3, E6")
        p.add_argument("--weight", help="coords, e.g. 1,0 or eps:3/2,1/2")
        p.add_argument("--spin", choices=("B", "Dplus", "Dminus"), help="closed-form spinor-twist cohomology instead of a walk")
        p.add_argument("--n", type=int, help="rank for --spin")
        p.add_argument("--lambda", dest="lam", help="shape for --spin")

    add("bott", _cmd_bott, "cohomology of an equivariant line bundle", conf_bott)
    add("dim", _cmd_dim, "Weyl dimension of an irreducible", with_type_weight)

    def conf_mults(p):
        with_type_weight(p)
        p.add_argument("--bound", type=int, default=None, help="dimension guard override")

    add("mults", _cmd_mults, "weight multiplicities of an irreducible", conf_mults)

    def conf_decompose(p):
        p.add_argument("--type", required=True)
        p.add_argument("--weight", help="highest weight of the base character")
        p.add_argument("--schur", help="apply this Schur functor to the base first")
        p.add_argument("--input", help="JSON character file, or - for stdin")

    add("decompose", _cmd_decompose, "decompose a character into irreducibles", conf_decompose)

    def conf_lr(p):
        p.add_argument("--lambda", dest="lam", required=True)
        p.add_argument("--mu", required=True)
        p.add_argument("--nu", required=True)

    add("lr", _cmd_lr, "Littlewood-Richardson coefficient", conf_lr)

    def conf_skew(p):
        p.add_argument("--outer", required=True)
        p.add_argument("--inner", required=True)

    add("skew", _cmd_skew, "skew Schur expansion", conf_skew)

    def conf_qset(p):
        p.add_argument("--variant", choices=("minus", "plus"), required=True)
        p.add_argument("--size", type=int, default=None)
        p.add_argument("--check", default=None, help="report membership, transpose, and rank of one shape")
        p.add_argument("--oracle", action="store_true", help="recompute through the plethysm oracle")
        p.add_argument("--dim-e", type=int, default=6)

    add("qset", _cmd_qset, "partitions of a given size in a Q-set", conf_qset)

    def conf_pleth(p):
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--form", choices=("alternating", "symmetric"), required=True)
        p.add_argument("--dim-e", type=int, required=True)

    add("pleth", _cmd_pleth, "Schur expansion of an exterior power of a quadric space", conf_pleth)

    def conf_branch(p):
        p.add_argument("--lambda", dest="lam", required=True)
        p.add_argument("--target", required=True, help="sp:2n or o:m")
        p.add_argument("--oracle", action="store_true", help="use the character oracle")

    add("branch", _cmd_branch, "restrict a GL Schur functor to an isometry group", conf_branch)

    def conf_lwood(p):
        p.add_argument("--family", choices=("B", "C", "D"), required=True)
        p.add_argument("--lambda", dest="lam", required=True)

    add("lwood", _cmd_lwood, "terms of a Littlewood complex", conf_lwood)

    def conf_verify_lwood(p):
        conf_lwood(p)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--oracle", action="store_true")

    add("verify-lwood", _cmd_verify_lwood, "Euler identity of a Littlewood complex", conf_verify_lwood)

    def conf_spinor(p):
        p.add_argument("--family", choices=("B", "Dplus", "Dminus", "Dfull"), required=True)
        p.add_argument("--n", type=int, required=True)

    add("spinor", _cmd_spinor, "terms of a spinor complex", conf_spinor)

    def conf_verify_spinor(p):
        conf_spinor(p)
        p.add_argument("--lambda", dest="lam", required=True)

    add("verify-spinor", _cmd_verify_spinor, "dimension Euler identity of a spinor complex", conf_verify_spinor)

    def conf_bracket(p):
        p.add_argument("--case", required=True, help="G2, F4_3, E6_5, SpC(3), OD(4), ...")
        p.add_argument("--lambda", dest="lam", required=True)

    add("bracket", _cmd_bracket, "bracket weight of a shape", conf_bracket)

    def conf_koszul(p):
        p.add_argument("--form", choices=("alternating", "symmetric"), required=True)
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--i", type=int, required=True)

    add("koszul", _cmd_koszul, "Schur constituents of a Koszul term", conf_koszul)

    def conf_slice(p):
        p.add_argument("--case", required=True)
        p.add_argument("--degree", type=int, required=True)

    add("slice", _cmd_slice, "coordinate-ring degree slice with exact dimension", conf_slice)

    add("g2-resolution", _cmd_g2_resolution, "reconstructed equivariant resolution terms", lambda p: None)

    betti_cases = ["g2-y2", "g2-y2-char2", "koszul:<form>:<m>"] + sorted(AUDITS)

    def conf_betti(p):
        p.add_argument("--case", required=True, help=f"one of {', '.join(betti_cases)}")

    add("betti", _cmd_betti, "render a graded Betti table", conf_betti)

    def conf_hilbert(p):
        p.add_argument("--case", required=True, help="same names as betti")
        p.add_argument("--codim", type=int, required=True)

    add("hilbert", _cmd_hilbert, "Hilbert-series numerator by exact division", conf_hilbert)

    def conf_audit(p):
        p.add_argument("--case", choices=sorted(AUDITS), required=True)

    add("audit", _cmd_audit, "dimension audit of a stated resolution", conf_audit)

    def conf_suite(p):
        p.add_argument("--name", choices=criterion_ids(), default=None)

    add("suite", _cmd_suite, "run acceptance criteria", conf_suite)
    return parser


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        code, payload, lines = args.fn(args)
    except (LittlewoodError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(args, payload, lines)
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))
