"""
Command-line front end: dimension tables, basis dumps, verification suites
and conjecture-evidence runs.

Exit codes: 0 ok, 1 verification failure, 2 dimension mismatch, 64 usage.
Conjecture-evidence runs (the `c3` selection) report but never fail the
build.  Identical configurations produce byte-identical JSON (term and case
order are fixed).  The AFFZIG_CACHE_DIR environment variable, when set,
caches the per-type word tables.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from . import affinize as aff
from .cuspidal import CDelta, check_minisom, check_zigisom, zigisom_phi
from .cuspwords import CuspWordData, check_wordfacts
from .induced import EndomorphismAlgebra
from .rootdata import build_affine_type, build_sign_table, null_root
from .scalars import ZZ, ring_from_name, series_of_rational
from .symalg import (
    SymmetricAlgebraSpec,
    dual_numbers,
    graded_dimension_counts,
    ground_ring_algebra,
    parse_graph,
    zigzag_algebra,
    zigzag_of_finite_type,
)

USAGE_ERROR = 64
E_TYPES = ("E6", "E7", "E8")


def _emit(data, fmt: str):
    if fmt == "json":
        print(json.dumps(data, indent=1, sort_keys=True, default=str))
    else:
        _emit_text(data)


def _emit_text(data, indent=0):
    pad = " " * indent
    if isinstance(data, dict):
        for k, v in data.items():
            if isinstance(v, (dict, list)) and v and not _is_flat(v):
                print(f"{pad}{k}:")
                _emit_text(v, indent + 2)
            else:
                print(f"{pad}{k}: {v}")
    elif isinstance(data, list):
        for v in data:
            _emit_text(v, indent)
    else:
        print(f"{pad}{data}")


def _is_flat(v):
    if isinstance(v, list):
        return all(not isinstance(x, (dict, list)) for x in v)
    return False


def _algebra_from_selector(sel: str, ring):
    if sel in ("k", "ground"):
        return ground_ring_algebra(ring)
    if sel in ("dual", "dualnumbers"):
        return dual_numbers(ring)
    if sel.startswith("zigzag:"):
        vertices, edges = parse_graph(sel[len("zigzag:"):])
        return zigzag_algebra(vertices, edges, ring)
    if sel.startswith("type:"):
        return zigzag_of_finite_type(build_affine_type(sel[len("type:"):]), ring)
    if sel.startswith("file:"):
        with open(sel[len("file:"):]) as fh:
            return SymmetricAlgebraSpec.from_json(fh.read(), ring)
    raise ValueError(f"unknown algebra selector {sel!r}")


def _require_type(args) -> str:
    if not args.type:
        print("error: --type is required", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)
    return args.type


# ---------------------------------------------------------------------------
# dims


def cmd_dims(args) -> int:
    name = _require_type(args)
    try:
        t = build_affine_type(name)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    n, trunc = args.n, args.deg
    cd = CDelta(t, signs=build_sign_table(t, args.orientation_seed))
    algebra = EndomorphismAlgebra(cd, n)
    counts = algebra.endbasis_degree_counts(trunc)
    l = t.rank
    poly = [1]
    for _ in range(n):
        new = [0] * (len(poly) + 2)
        for a, ca in enumerate(poly):
            for b, cb in enumerate([l, 2 * (l - 1), l]):
                new[a + b] += ca * cb
        poly = new
    fact = 1
    for k in range(2, n + 1):
        fact *= k
    formula = series_of_rational([fact * c for c in poly], [2] * n, trunc)
    table = {
        "claim": "twist-endomorphism basis count per degree vs the closed graded-dimension formula",
        "type": name,
        "n": n,
        "degree": list(range(trunc + 1)),
        "enumerated": counts,
        "formula": list(formula.coeffs),
        "match": counts == list(formula.coeffs),
    }
    _emit(table, args.format)
    return 0 if table["match"] else 2


# ---------------------------------------------------------------------------
# dump


def cmd_dump(args) -> int:
    what = args.what
    if what == "zigzag":
        if not args.graph:
            print("error: dump zigzag needs --graph", file=sys.stderr)
            return USAGE_ERROR
        vertices, edges = parse_graph(args.graph)
        alg = zigzag_algebra(vertices, edges, ring_from_name(args.ring))
        print(alg.to_json())
        return 0
    name = _require_type(args)
    t = build_affine_type(name)
    if what == "bwords":
        data = CuspWordData(t)
        _emit({str(i): list(w) for i, w in sorted(data.b_words.items())}, args.format)
        return 0
    if what == "gdelta":
        data = CuspWordData(t)
        _emit({str(i): [list(w) for w in data.words_of_component(i)]
               for i in t.finite_vertices}, args.format)
        return 0
    if what == "cdelta-basis":
        cd = CDelta(t, signs=build_sign_table(t, args.orientation_seed))
        out = []
        for k in t.finite_vertices:
            for e in cd.basis_of_column(k, args.bmax):
                out.append({"b": e.b, "m": e.m, "target": list(e.target),
                            "source": k, "degree": e.degree})
        _emit(out, args.format)
        return 0
    if what == "endbasis":
        cd = CDelta(t, signs=build_sign_table(t, args.orientation_seed))
        algebra = EndomorphismAlgebra(cd, args.n)
        out = [{"w": list(d["w"]), "j": list(d["j"]), "i": list(d["i"]),
                "u": list(d["u"]), "t": list(d["t"]), "degree": d["degree"]}
               for d in algebra.endbasis_elements(args.deg)]
        _emit(out, args.format)
        return 0
    print(f"error: unknown dump target {what!r}", file=sys.stderr)
    return USAGE_ERROR


# ---------------------------------------------------------------------------
# words


def cmd_words(args) -> int:
    name = _require_type(args)
    t = build_affine_type(name)
    if args.check_wordfacts:
        report = check_wordfacts(t)
        _emit({"claim": "special-word facts (i)-(viii)", "type": name,
               "items": {k: v for k, v in report.items()}}, args.format)
        return 0 if report["all_pass"]["pass"] else 1
    data = CuspWordData(t)
    _emit({str(i): [ "".join(map(str, w)) for w in data.words_of_component(i)]
           for i in t.finite_vertices}, args.format)
    return 0


# ---------------------------------------------------------------------------
# cdelta


def _cd_elem_from_json(cd: CDelta, items):
    from .cuspidal import CdBasisElem

    out = {}
    for it in items:
        e = CdBasisElem(it["b"], it["m"], tuple(it["target"]), it["source"],
                        0 if tuple(it["target"])[-1] == cd.words.b_words[it["source"]][-1] else 1)
        out[e] = out.get(e, 0) + it.get("coefficient", 1)
    return out


def _cd_elem_to_json(elem):
    out = []
    for e, c in sorted(elem.items(), key=lambda ec: (ec[0].degree, ec[0].source, ec[0].target, ec[0].b, ec[0].m)):
        out.append({"b": e.b, "m": e.m, "target": list(e.target), "source": e.source,
                    "coefficient": c})
    return out


def cmd_cdelta(args) -> int:
    name = _require_type(args)
    t = build_affine_type(name)
    cd = CDelta(t, signs=build_sign_table(t, args.orientation_seed))
    if args.action == "basis":
        out = []
        for k in t.finite_vertices:
            for e in cd.basis_of_column(k, args.bmax):
                out.append({"b": e.b, "m": e.m, "target": list(e.target), "source": k,
                            "degree": e.degree})
        _emit(out, args.format)
        return 0
    if args.action == "mul":
        x = _cd_elem_from_json(cd, json.loads(args.x))
        y = _cd_elem_from_json(cd, json.loads(args.y))
        _emit(_cd_elem_to_json(cd.multiply(x, y)), args.format)
        return 0
    if args.action == "zigisom-check":
        report = check_zigisom(cd, zigzag_of_finite_type(t))
        ok = report["bijective"] and report["multiplicative"]
        _emit({"claim": "degree-bounded quotient is the zigzag algebra (basis bijection + products)",
               "type": name, "bijective": report["bijective"],
               "multiplicative": report["multiplicative"]}, args.format)
        return 0 if ok else 1
    print(f"error: unknown cdelta action {args.action!r}", file=sys.stderr)
    return USAGE_ERROR


# ---------------------------------------------------------------------------
# affinize


def _aff_elem_from_json(ctx, items):
    terms = {}
    for it in items:
        key = (tuple(it["exps"]), tuple(it["tensor"]), tuple(it["perm"]))
        terms[key] = ctx.ring.coerce(it.get("coeff", 1))
    return ctx.element(terms)


def cmd_affinize(args) -> int:
    ring = ring_from_name(args.ring)
    algebra = _algebra_from_selector(args.A, ring)
    ctx = aff.Affinization(algebra, args.n)
    if args.action == "mul":
        x = _aff_elem_from_json(ctx, json.loads(args.x))
        y = _aff_elem_from_json(ctx, json.loads(args.y))
        _emit(x.mul(y).to_json_terms(), args.format)
        return 0
    if args.action == "center":
        basis = aff.center_space(ctx, args.deg)
        _emit({"claim": "center = symmetric invariants of polynomials tensor the coefficient-algebra center",
               "degree_bound": args.deg,
               "dimension": len(basis),
               "members": [x.to_json_terms() for x in basis]}, args.format)
        return 0
    if args.action == "cyclotomic":
        c = aff.default_central_tensor(ctx)
        cs = [c.scale(ctx.ring.coerce(j)) for j in range(args.level)]
        quot = aff.CyclotomicQuotient(ctx, args.level, cs)
        ev = aff.c3_evidence(quot, trials=args.trials, seed=args.seed)
        _emit({"claim": "cyclotomic quotient spanning-set rewriting consistency (evidence, not assertion)",
               **ev}, args.format)
        return 0
    print(f"error: unknown affinize action {args.action!r}", file=sys.stderr)
    return USAGE_ERROR


# ---------------------------------------------------------------------------
# verify


def _verify_one(selection: str, name: str, args) -> dict:
    t = build_affine_type(name)
    record: dict = {"check": selection, "type": name}
    if selection == "wordfacts":
        report = check_wordfacts(t)
        record["claim"] = "special-word facts (i)-(viii)"
        record["pass"] = report["all_pass"]["pass"]
        record["items"] = {k: v.get("pass") for k, v in report.items() if k != "all_pass"}
        return record
    cd = CDelta(t, signs=build_sign_table(t, args.orientation_seed))
    if selection == "zigisom":
        rep = check_zigisom(cd, zigzag_of_finite_type(t))
        record["claim"] = "zigzag-algebra isomorphism on the degree-bounded quotient"
        record["pass"] = rep["bijective"] and rep["multiplicative"]
        return record
    if selection == "minisom":
        record["claim"] = "rank-one endomorphism algebra is polynomial tensor zigzag"
        record["pass"] = check_minisom(cd, zigzag_of_finite_type(t))
        return record
    algebra = EndomorphismAlgebra(cd, args.n)
    if selection == "sigmaprime":
        rep = algebra.verify_sigmaprime()
        record["claim"] = "partial block crossing closed form (equal/adjacent/orthogonal cases)"
        record["pass"] = rep["pass"]
        record["cases"] = {str(k): v["equal"] for k, v in sorted(rep["cases"].items())}
        return record
    if selection == "psisigma":
        rep = algebra.verify_psisigma()
        record["claim"] = "crossing vs block-swap commutation with boundary corrections"
        record["pass"] = rep["pass"]
        record["cases"] = {str(k): v["equal"] for k, v in sorted(rep["cases"].items())}
        return record
    if selection == "scommute":
        rep = algebra.verify_scommute()
        record["claim"] = "twist-endomorphism commutation relations (End0)-(End3)"
        record["pass"] = rep["pass"]
        return record
    if selection == "mainthm":
        rep = algebra.verify_mainthm(args.deg)
        record["claim"] = "affine zigzag presentation + basis independence + dimension match"
        record.update({k: v for k, v in rep.items() if k != "cases"})
        return record
    raise ValueError(f"unknown selection {selection!r}")


def _verify_algebraic(selection: str, args) -> dict:
    ring = ring_from_name(args.ring)
    record: dict = {"check": selection}
    if selection == "center":
        record["claim"] = "affinization center equals symmetric invariants (vs commutant oracle)"
        ok = True
        for sel in ("k", "type:A2"):
            ctx = aff.Affinization(_algebra_from_selector(sel, ring), 2)
            inv = aff.center_space(ctx, min(args.deg, 4))
            brute = aff.center_space_bruteforce(ctx, min(args.deg, 4))
            record[f"dim[{sel}]"] = len(inv)
            ok = ok and len(inv) == brute
        record["pass"] = ok
        return record
    if selection == "jm":
        record["claim"] = "Jucys-Murphy commutativity, centralizing, and the wreath surjection"
        ok = True
        for sel in ("k", "dual", "type:A2"):
            ctx = aff.Affinization(_algebra_from_selector(sel, ring), min(args.n, 4))
            ls = [aff.jucys_murphy(ctx, r) for r in range(1, ctx.n + 1)]
            ok = ok and ls[0].is_zero()
            for i in range(len(ls)):
                for j in range(i + 1, len(ls)):
                    ok = ok and ls[i].mul(ls[j]) == ls[j].mul(ls[i])
            c = aff.default_central_tensor(ctx)
            gens = [g for _, g in aff.generators(ctx)]
            for g in gens:
                for h in gens:
                    ok = ok and aff.beta_c(ctx, g.mul(h), c) == aff.beta_c(ctx, g, c).mul(aff.beta_c(ctx, h, c))
            ok = ok and aff.beta_c(ctx, ctx.generator_z(1).sub(c), c).is_zero()
        record["pass"] = ok
        return record
    if selection == "c3":
        record["claim"] = "cyclotomic spanning-set consistency (conjecture evidence; never gating)"
        sel = args.A or "dual"
        ctx = aff.Affinization(_algebra_from_selector(sel, ring), args.n)
        c = aff.default_central_tensor(ctx)
        quot = aff.CyclotomicQuotient(ctx, args.level, [c.scale(ctx.ring.coerce(j)) for j in range(args.level)])
        ev = aff.c3_evidence(quot, trials=args.trials, seed=args.seed)
        record.update(ev)
        record["pass"] = True  # evidence runs never gate
        return record
    raise ValueError(f"unknown selection {selection!r}")


TYPE_SUITES = ("wordfacts", "zigisom", "minisom", "sigmaprime", "psisigma", "scommute", "mainthm")
ALGEBRA_SUITES = ("center", "jm", "c3")


def cmd_verify(args) -> int:
    selections = args.selections or ["all"]
    if "all" in selections:
        selections = list(TYPE_SUITES) + list(ALGEBRA_SUITES)
    types = [args.type] if args.type else ["A2"]
    if args.include_e_types and not args.type:
        types += list(E_TYPES)
    jobs = []
    for sel in selections:
        if sel in TYPE_SUITES:
            jobs.extend((sel, name) for name in types)
        elif sel in ALGEBRA_SUITES:
            jobs.append((sel, None))
        else:
            print(f"error: unknown verification selection {sel!r}", file=sys.stderr)
            return USAGE_ERROR

    def run(job):
        sel, name = job
        if name is None:
            return _verify_algebraic(sel, args)
        return _verify_one(sel, name, args)

    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            records = list(pool.map(run, jobs))
    else:
        records = [run(job) for job in jobs]
    overall = all(r["pass"] for r in records)
    _emit({"reports": records, "pass": overall}, args.format)
    return 0 if overall else 1


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="affzig")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--ring", default="int", help="int, rat or mod:p")
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--orientation-seed", type=int, default=None)
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("dims", help="formula vs enumerated graded dimensions")
    p.add_argument("--type")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--deg", type=int, default=4)

    p = sub.add_parser("dump", help="emit bases and tables as JSON")
    p.add_argument("what", choices=("bwords", "gdelta", "zigzag", "cdelta-basis", "endbasis"))
    p.add_argument("--type")
    p.add_argument("--graph")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--deg", type=int, default=2)
    p.add_argument("--bmax", type=int, default=2)

    p = sub.add_parser("words", help="list word components / check word facts")
    p.add_argument("--type")
    p.add_argument("--list", action="store_true")
    p.add_argument("--check-wordfacts", action="store_true")

    p = sub.add_parser("cdelta", help="basis, products and the zigzag image")
    p.add_argument("action", choices=("basis", "mul", "zigisom-check"))
    p.add_argument("--type")
    p.add_argument("--bmax", type=int, default=2)
    p.add_argument("--x", help="JSON element (list of {b,m,target,source,coefficient})")
    p.add_argument("--y", help="JSON element")

    p = sub.add_parser("affinize", help="affinization arithmetic and quotients")
    p.add_argument("action", choices=("mul", "center", "cyclotomic"))
    p.add_argument("--A", default="dual", help="k, dual, zigzag:<graph>, type:<Xl>")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--deg", type=int, default=4)
    p.add_argument("--level", "--l", type=int, default=2, dest="level")
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--x", help="JSON element (list of {exps,tensor,perm,coeff})")
    p.add_argument("--y", help="JSON element")

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("selections", nargs="*",
                   help=f"any of {TYPE_SUITES + ALGEBRA_SUITES} or 'all'")
    p.add_argument("--type")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--deg", type=int, default=4)
    p.add_argument("--A")
    p.add_argument("--level", "--l", type=int, default=2, dest="level")
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--include-e-types", action="store_true",
                   help="also run the (long) exceptional types where supported")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not args.command:
        parser.print_help()
        return USAGE_ERROR
    try:
        if args.command == "dims":
            return cmd_dims(args)
        if args.command == "dump":
            return cmd_dump(args)
        if args.command == "words":
            return cmd_words(args)
        if args.command == "cdelta":
            return cmd_cdelta(args)
        if args.command == "affinize":
            return cmd_affinize(args)
        if args.command == "verify":
            return cmd_verify(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 1
    return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
