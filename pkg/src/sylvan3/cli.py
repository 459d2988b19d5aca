"""Command-line front end: ``sylvan3 <command> [options]``.

Every command reads an ideal from ``--gens "xy, y^3, z"`` or ``--ideal FILE``
(the ``corpus`` command generates its own).  Output is JSON carrying
``"schema": "sylvan3/1"`` unless ``--format text`` is given; rationals are
written ``p/q``.  Exit status is 0 on success, 1 when a verification or
cross-check fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .closed_form import (
    PreconditionFailed,
    UnclassifiablePath,
    UnsupportedShape,
    path_contribution_F1F2,
    sylvan_matrix_closed,
)
from .complexes import face_name
from .fence_oracle import delta_lambda, hedgerow_count, path_contributions, sylvan_matrix_oracle
from .hedge import delta_S, delta_ST, delta_T, enumerate_hedges, enumerate_shrubberies, enumerate_stake_sets
from .ideal_staircase import (
    EmptyIdeal,
    IdealSyntaxError,
    MonomialIdeal,
    format_degree,
    leq,
    minimalize,
    parse_degree,
    parse_ideal,
)
from .koszul import VERTEX_NAMES, classify_shape, koszul_complex, reduced_homology_dims
from .lattice import NotComparable, enumerate_paths, profile, shape_sequence_valid
from .rational_linalg import format_rat
from .resolution import (
    MethodMismatch,
    betti_support,
    build_resolution,
    default_workers,
    to_macaulay2,
    verify_exact_and_minimal,
)

SCHEMA = "sylvan3/1"


class UsageError(ValueError):
    pass


def generate_corpus(seed: int, count: int, max_exponent: int) -> list[MonomialIdeal]:
    """Reproducible random monomial ideals from 2 to 8 candidate generators in [0, max_exponent]^3.

    Candidates are minimalized; principal ideals and the unit ideal are
    rejected, as are repeats.
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    rng = random.Random(seed)
    seen, out = set(), []
    while len(out) < count:
        cand = [
            tuple(rng.randint(0, max_exponent) for _ in range(3))
            for _ in range(rng.randint(2, 8))
        ]
        gens = minimalize(cand)
        if len(gens) < 2 or (0, 0, 0) in gens or gens in seen:
            continue
        seen.add(gens)
        out.append(MonomialIdeal(gens))
    return out


# ------------------------------------------------------------------ rendering


def _faces(fs):
    return [face_name(f, VERTEX_NAMES) for f in fs]


def _betti_json(betti):
    return {
        f"F{i}": [{"degree": format_degree(d), "rank": r} for d, r in betti[i]] for i in range(3)
    }


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "text":
        print(text)
    else:
        print(json.dumps({"schema": SCHEMA, **payload}, indent=2))


def _read_ideal(args) -> MonomialIdeal:
    if args.gens and args.ideal:
        raise UsageError("give either --gens or --ideal, not both")
    if args.gens:
        return parse_ideal(args.gens)
    if args.ideal:
        with open(args.ideal, encoding="utf-8") as fh:
            return parse_ideal(fh.read())
    raise UsageError("an ideal is required (--gens or --ideal)")


def _method_matrices(I, a, b, hom, method):
    out = {}
    if method in ("oracle", "both"):
        out["oracle"] = sylvan_matrix_oracle(I, a, b, hom)
    if method in ("closed", "both"):
        out["closed"] = sylvan_matrix_closed(I, a, b, hom)
    return out


# ------------------------------------------------------------------ commands


def cmd_betti(args) -> int:
    I = _read_ideal(args)
    betti = betti_support(I)
    lines = [f"ideal {I}"]
    for i in range(3):
        lines.append(f"F{i}: " + ", ".join(f"S(-{format_degree(d)})^{r}" for d, r in betti[i]))
    _emit(args, {"ideal": I.render(), "betti": _betti_json(betti)}, "\n".join(lines))
    return 0


def cmd_koszul(args) -> int:
    I = _read_ideal(args)
    b = parse_degree(args.degree)
    K = koszul_complex(I, b)
    shape = classify_shape(K)
    h = reduced_homology_dims(K)
    faces = sorted(K.faces, key=lambda f: (len(f), f))
    payload = {
        "degree": format_degree(b),
        "faces": _faces(faces),
        "shape": shape.label(),
        "reduced_homology": {"-1": h[0], "0": h[1], "1": h[2]},
    }
    text = f"K^{format_degree(b)}: {shape.label()}  faces {' '.join(_faces(faces))}  H~ = {h}"
    _emit(args, payload, text)
    return 0


def cmd_paths(args) -> int:
    I = _read_ideal(args)
    b, a = parse_degree(args.from_), parse_degree(args.to)
    rows, lines = [], []
    for lam in enumerate_paths(a, b):
        row = {"path": lam.render()}
        line = lam.render()
        if args.profile:
            prof = profile(I, lam)
            valid = shape_sequence_valid(prof.shapes, lam.steps)
            row.update(
                shapes=prof.labels(),
                r=prof.r,
                s=prof.s,
                m=prof.m,
                b_lambda=format_degree(prof.b_lambda),
                taxonomy_valid=valid,
            )
            line += f"  {' > '.join(prof.labels())}  r={prof.r} s={prof.s} m={prof.m}"
            line += "" if valid else "  (outside taxonomy)"
        rows.append(row)
        lines.append(line)
    text = "\n".join(lines)
    _emit(args, {"from": format_degree(b), "to": format_degree(a), "paths": rows}, text)
    return 0


def cmd_hedges(args) -> int:
    I = _read_ideal(args)
    b = parse_degree(args.degree)
    K = koszul_complex(I, b)
    i = args.dim
    shrubs = [_faces(T.faces) for T in enumerate_shrubberies(K, i)]
    stakes = [_faces(S.faces) for S in enumerate_stake_sets(K, i - 1)]
    hedges = [
        {"stakes": _faces(H.stake_set.faces), "shrubbery": _faces(H.shrubbery.faces)}
        for H in enumerate_hedges(K, i)
    ]
    deltas = {"T": delta_T(K, i), "S": delta_S(K, i - 1), "ST": delta_ST(K, i)}
    payload = {
        "degree": format_degree(b),
        "dim": i,
        "delta": deltas,
        "shrubberies": shrubs,
        "stake_sets": stakes,
        "hedges": hedges,
    }
    text = "\n".join(
        [f"shrubberies ({len(shrubs)}): {shrubs}", f"stake sets ({len(stakes)}): {stakes}",
         f"hedges: {len(hedges)}", f"delta T={deltas['T']} S={deltas['S']} ST={deltas['ST']}"]
    )
    _emit(args, payload, text)
    return 0


def cmd_matrix(args) -> int:
    I = _read_ideal(args)
    b, a = parse_degree(args.from_), parse_degree(args.to)
    mats = _method_matrices(I, a, b, args.hom, args.method)
    payload = {name: D.to_dict() for name, D in mats.items()}
    text = "\n\n".join(f"[{name}]\n{D.render()}" for name, D in mats.items())
    status = 0
    if len(mats) == 2:
        equal = mats["oracle"].same_entries(mats["closed"])
        payload["equal"] = equal
        text += f"\n\nequal: {str(equal).lower()}"
        status = 0 if equal else 1
    if args.paths:
        contribs = []
        for lam, blk in path_contributions(I, a, b, args.hom):
            entry = {
                "path": lam.render(),
                "hedgerows": hedgerow_count(I, lam, args.hom),
                "delta": delta_lambda(I, lam, args.hom),
                "entries": [[format_rat(x) for x in row] for row in blk.to_rows()],
            }
            if args.hom == 1:
                entry["closed_form"] = path_contribution_F1F2(I, lam).case_tag
            contribs.append(entry)
        payload["paths"] = contribs
        text += "\n" + "\n".join(f"{c['path']}: {c['entries']}" for c in contribs)
    _emit(args, payload, text)
    return status


def _resolution_payload(R):
    blocks = []
    for (i, a, b), blk in sorted(R.blocks.items()):
        blocks.append(
            {
                "hom": i,
                "to": format_degree(a),
                "from": format_degree(b),
                "entries": [[format_rat(x) for x in row] for row in blk.to_rows()],
                "sylvan": R.sylvan[(i, a, b)].to_dict()["entries"],
            }
        )
    return {"ideal": R.ideal.render(), "method": R.method, "betti": _betti_json(R.betti()),
            "blocks": blocks}


def cmd_resolve(args) -> int:
    I = _read_ideal(args)
    R = build_resolution(I, args.method, args.threads)
    if args.format == "macaulay2":
        sys.stdout.write(to_macaulay2(R))
        return 0
    payload = _resolution_payload(R)
    lines = [f"ideal {I}  ({R.method})"]
    for blk in payload["blocks"]:
        lines.append(f"F{blk['hom']}[{blk['to']}] <- F{blk['hom'] + 1}[{blk['from']}]: {blk['entries']}")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_verify(args) -> int:
    I = _read_ideal(args)
    R = build_resolution(I, args.method, args.threads)
    report = verify_exact_and_minimal(R, I, args.threads)
    payload = {"ideal": I.render(), "method": args.method, **report.to_dict()}
    text = f"{I}: {'PASS' if report.ok else 'FAIL'}"
    if report.failing_degrees:
        text += "  failing degrees " + " ".join(payload["failing_degrees"])
    _emit(args, payload, text)
    return 0 if report.ok else 1


def crosscheck_ideal(I: MonomialIdeal) -> tuple[int, list[dict]]:
    """Compare both methods on every (a, b, i) with nonzero homology at both ends."""
    betti = betti_support(I)
    checked, diffs = 0, []
    for i in (0, 1):
        for b, _ in betti[i + 1]:
            for a, _ in betti[i]:
                if a == b or not leq(a, b):
                    continue
                checked += 1
                O = sylvan_matrix_oracle(I, a, b, i)
                C = sylvan_matrix_closed(I, a, b, i)
                if not O.same_entries(C):
                    diffs.append({"hom": i, "to": format_degree(a), "from": format_degree(b),
                                  "oracle": O.to_dict()["entries"],
                                  "closed": C.to_dict()["entries"]})
    return checked, diffs


def cmd_crosscheck(args) -> int:
    if args.gens or args.ideal:
        ideals = [_read_ideal(args)]
    else:
        ideals = generate_corpus(args.seed, args.count, args.max_exponent)
    results = []
    for I in ideals:
        checked, diffs = crosscheck_ideal(I)
        results.append({"ideal": I.render(), "checked": checked, "mismatches": diffs})
    bad = sum(bool(r["mismatches"]) for r in results)
    payload = {"ideals": len(results), "failing": bad, "results": results}
    text = "\n".join(
        f"{r['ideal']}: {r['checked']} matrices, {len(r['mismatches'])} mismatches" for r in results
    )
    _emit(args, payload, text + f"\n{len(results) - bad}/{len(results)} ideals agree")
    return 1 if bad else 0


def cmd_corpus(args) -> int:
    ideals = generate_corpus(args.seed, args.count, args.max_exponent)
    payload = {
        "seed": args.seed,
        "count": args.count,
        "max_exponent": args.max_exponent,
        "ideals": [I.render() for I in ideals],
    }
    _emit(args, payload, "\n".join(I.render() for I in ideals))
    return 0


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sylvan3", description="Sylvan resolutions of monomial ideals in three variables."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, helptext, needs_ideal=True):
        p = sub.add_parser(name, help=helptext)
        if needs_ideal:
            p.add_argument("--gens", help='generators, e.g. "xy, y^3, z" or "1 1 0"')
            p.add_argument("--ideal", help="file with one generator per line")
        p.add_argument("--format", choices=("json", "text", "macaulay2"), default="json")
        return p

    add("betti", "Betti degrees and ranks (Hochster)")
    p = add("koszul", "Koszul simplicial complex at one degree")
    p.add_argument("--degree", "--at", dest="degree", required=True,
                   help='degree, e.g. "131" or "1,3,1"')
    p = add("paths", "lattice paths from --from down to --to with their shapes")
    p.add_argument("--from", dest="from_", required=True)
    p.add_argument("--to", required=True)
    p.add_argument("--profile", action="store_true", help="add shapes and path statistics")
    p = add("hedges", "shrubberies, stake sets and hedges of one Koszul complex")
    p.add_argument("--degree", "--at", dest="degree", required=True)
    p.add_argument("--dim", type=int, default=1, help="dimension of the shrubbery faces")
    p = add("matrix", "one sylvan matrix")
    p.add_argument("--from", dest="from_", required=True, help="source degree b")
    p.add_argument("--to", required=True, help="target degree a")
    p.add_argument("--hom", type=int, choices=(0, 1), required=True)
    p.add_argument("--method", choices=("oracle", "closed", "both"), default="oracle")
    p.add_argument("--paths", action="store_true", help="list per-path contributions")
    for name, helptext in (("resolve", "assemble the resolution"),
                           ("verify", "check complex, exactness and minimality")):
        p = add(name, helptext)
        p.add_argument("--method", choices=("oracle", "closed", "both"), default="oracle")
        p.add_argument("--threads", type=int, default=None)
    for name, helptext, needs in (("crosscheck", "oracle against closed form", True),
                                  ("corpus", "print a seeded random corpus", False)):
        p = add(name, helptext, needs)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--count", type=int, default=100)
        p.add_argument("--max-exponent", type=int, default=6)
    return parser


COMMANDS = {
    "betti": cmd_betti,
    "koszul": cmd_koszul,
    "paths": cmd_paths,
    "hedges": cmd_hedges,
    "matrix": cmd_matrix,
    "resolve": cmd_resolve,
    "verify": cmd_verify,
    "crosscheck": cmd_crosscheck,
    "corpus": cmd_corpus,
}

INPUT_ERRORS = (
    UsageError,
    IdealSyntaxError,
    EmptyIdeal,
    NotComparable,
    PreconditionFailed,
    UnsupportedShape,
    OSError,
)


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "threads", None) is None and hasattr(args, "threads"):
        args.threads = default_workers()
    if args.format == "macaulay2" and args.command != "resolve":
        parser.error("--format macaulay2 is only available for resolve")
    try:
        return COMMANDS[args.command](args)
    except INPUT_ERRORS as exc:
        print(f"sylvan3 {args.command}: {exc}", file=sys.stderr)
        return 2
    except (MethodMismatch, UnclassifiablePath) as exc:
        print(f"sylvan3 {args.command}: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
