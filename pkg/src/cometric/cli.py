"""Command-line front end.

Commands: analyze, recover, catalan, strength, derived, verify.
Exit codes: 0 success, 1 property violation, 2 input error.
"""

import argparse
import json
import random
import sys

from gmpy2 import mpq

from . import catalan as ct
from . import derived as dv
from .designs import embed, krein_moment_identity, strength_by_krein, strength_by_moments
from .errors import CometricError, InconsistentMoments, ParseError
from .exact import rat
from .generators import SchemeSpec, generate, load_relation_file
from .numberfield import FieldElement
from .qpoly import find_qpoly_orderings
from .scheme import krein_parameters, validate_scheme

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2


def _enc(x):
    """Exact scalar -> JSON-safe string: 'p/q', 'p', or an algebraic expr."""
    if isinstance(x, FieldElement):
        r = x.as_rational()
        return str(r) if r is not None else str(x.to_sympy())
    return str(mpq(x))


def _scheme_from_args(args):
    if args.file:
        return load_relation_file(args.file), f"file:{args.file}"
    if not args.family:
        raise ParseError("one of --family or --file is required")
    params = {}
    if args.params:
        try:
            params = json.loads(args.params)
        except json.JSONDecodeError as e:
            raise ParseError(f"--params: {e}") from e
        if not isinstance(params, dict):
            raise ParseError("--params must be a JSON object")
    rp = generate(SchemeSpec(args.family, params))
    label = args.family + (str(tuple(params.values())) if params else "")
    return rp, label


def _analyze(rp, label, t_max=None):
    sc = validate_scheme(rp)
    kt = krein_parameters(sc)
    orderings = find_qpoly_orderings(kt, sc)
    tm = t_max if t_max is not None else 2 * sc.d
    report = {
        "scheme": {
            "name": label,
            "n": sc.n,
            "d": sc.d,
            "valencies": sc.k,
            "multiplicities": sc.m,
        },
        "q_polynomial": bool(orderings),
        "orderings": [],
        "derived": [],
        "bound_check": None,
    }
    ok = True
    for idx, o in enumerate(orderings):
        e = embed(sc, o)
        sm = strength_by_moments(e, tm)
        sk = strength_by_krein(o, tm)
        agree = sm.t == sk.t
        ok = ok and agree
        w = ct.WeightTriple.from_abc(list(o.a_star), list(o.c_star), o.m)
        report["orderings"].append(
            {
                "perm": list(o.perm),
                "m": _enc(o.m),
                "a_star": [_enc(x) for x in o.a_star],
                "b_star": [_enc(x) for x in o.b_star],
                "c_star": [_enc(x) for x in o.c_star],
                "catalan_numbers": [_enc(x) for x in ct.catalan_numbers(w)],
                "strength_moments": sm.t,
                "strength_krein": sk.t,
                "agree": agree,
            }
        )
        for i in range(1, sc.d + 1):
            entry = {"ordering": idx, "class": i}
            try:
                dd = dv.derived_design(sc, o, i)
            except CometricError as e2:
                entry["status"] = type(e2).__name__
            else:
                entry["status"] = "ok"
                if dd.theta0 >= 3:
                    entry["strength"] = dv.derived_strength_by_moments(dd, tm).t
            report["derived"].append(entry)
    if orderings:
        bc = dv.pq_strength_bound_check(sc, orderings[0])
        report["bound_check"] = {
            "is_pq": bc.is_pq,
            "theta0": _enc(bc.theta0),
            "in_hypothesis": bc.in_hypothesis,
            "strength": bc.strength,
            "ok": bc.ok,
            "detail": bc.detail,
        }
        ok = ok and bc.ok
    return sc, kt, orderings, report, ok


def _print_report(report, as_json):
    if as_json:
        print(json.dumps(report, indent=2, sort_keys=True))
        return
    s = report["scheme"]
    print(f"{s['name']}: n={s['n']} d={s['d']}")
    print(f"  valencies      {s['valencies']}")
    print(f"  multiplicities {s['multiplicities']}")
    if not report["q_polynomial"]:
        print("  not Q-polynomial")
        return
    for o in report["orderings"]:
        print(
            f"  ordering {o['perm']}: m={o['m']} "
            f"a*={o['a_star']} c*={o['c_star']}"
        )
        mark = "agree" if o["agree"] else "DISAGREE"
        print(
            f"    strength: moments={o['strength_moments']} "
            f"krein={o['strength_krein']} ({mark})"
        )
    for e in report["derived"]:
        extra = f" strength={e['strength']}" if "strength" in e else ""
        print(f"  derived class {e['class']} (ordering {e['ordering']}): {e['status']}{extra}")
    bc = report["bound_check"]
    if bc:
        print(
            f"  bound check: P&Q={bc['is_pq']} theta0*={bc['theta0']} "
            f"in_hypothesis={bc['in_hypothesis']} strength={bc['strength']} "
            f"{'pass' if bc['ok'] else 'VIOLATION'}"
        )


def cmd_analyze(args):
    rp, label = _scheme_from_args(args)
    _, _, _, report, ok = _analyze(rp, label, args.t_max)
    _print_report(report, args.json)
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_strength(args):
    rp, label = _scheme_from_args(args)
    _, _, _, report, ok = _analyze(rp, label, args.t_max)
    if args.json:
        out = {
            "scheme": report["scheme"],
            "orderings": [
                {
                    "perm": o["perm"],
                    "strength_moments": o["strength_moments"],
                    "strength_krein": o["strength_krein"],
                    "agree": o["agree"],
                }
                for o in report["orderings"]
            ],
        }
        print(json.dumps(out, indent=2, sort_keys=True))
    else:
        for o in report["orderings"]:
            mark = "agree" if o["agree"] else "DISAGREE"
            print(
                f"{label} ordering {o['perm']}: moments={o['strength_moments']} "
                f"krein={o['strength_krein']} ({mark})"
            )
        if not report["orderings"]:
            print(f"{label}: not Q-polynomial")
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_catalan(args):
    rp, label = _scheme_from_args(args)
    sc = validate_scheme(rp)
    kt = krein_parameters(sc)
    orderings = find_qpoly_orderings(kt, sc)
    if not orderings:
        print(f"{label}: not Q-polynomial", file=sys.stderr)
        return EXIT_VIOLATION
    o = orderings[args.ordering if args.ordering < len(orderings) else 0]
    w = ct.WeightTriple.from_abc(list(o.a_star), list(o.c_star), o.m)
    cm = ct.catalan_matrix(w)
    if args.json:
        out = {
            "perm": list(o.perm),
            "m": _enc(o.m),
            "f": {f"{n},{k}": _enc(v) for (n, k), v in sorted(cm.f.items())},
        }
        print(json.dumps(out, indent=2, sort_keys=True))
    else:
        print(f"{label} ordering {o.perm}, m = {_enc(o.m)}")
        for n in range(2 * w.d + 1):
            row = [
                _enc(cm.get(n, k)) for k in range(min(n, 2 * w.d - n) + 1)
            ]
            print(f"  f[{n}] = {row}")
    return EXIT_OK


def cmd_derived(args):
    rp, label = _scheme_from_args(args)
    sc = validate_scheme(rp)
    kt = krein_parameters(sc)
    orderings = find_qpoly_orderings(kt, sc)
    if not orderings:
        print(f"{label}: not Q-polynomial", file=sys.stderr)
        return EXIT_VIOLATION
    o = orderings[0]
    tm = args.t_max if args.t_max is not None else 2 * sc.d
    rows = []
    for i in range(1, sc.d + 1):
        entry = {"class": i}
        try:
            dd = dv.derived_design(sc, o, i)
        except CometricError as e:
            entry["status"] = type(e).__name__
        else:
            entry["status"] = "ok"
            entry["thetai"] = _enc(dd.thetai) if not isinstance(dd.thetai, FieldElement) else _enc(dd.thetai)
            entry["size"] = dd.size
            entry["angles"] = [[_enc(v), mult] for v, mult in dd.angles]
            if dd.theta0 >= 3:
                entry["strength"] = dv.derived_strength_by_moments(dd, tm).t
        rows.append(entry)
    if args.json:
        print(json.dumps({"scheme": label, "derived": rows}, indent=2, sort_keys=True))
    else:
        for e in rows:
            if e["status"] != "ok":
                print(f"{label} class {e['class']}: {e['status']}")
            else:
                t = e.get("strength", "n/a (theta0* < 3)")
                print(
                    f"{label} class {e['class']}: size={e['size']} "
                    f"angles={e['angles']} strength={t}"
                )
    return EXIT_OK


def cmd_recover(args):
    try:
        with open(args.moments, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as e:
        raise ParseError(f"{args.moments}: {e.strerror}") from e
    except json.JSONDecodeError as e:
        raise ParseError(f"{args.moments}:{e.lineno}: {e.msg}") from e
    if not isinstance(data, list):
        raise ParseError("moments file must be a JSON list of rational strings")
    try:
        bs = [rat(x) for x in data]
    except (ValueError, TypeError) as e:
        raise ParseError(f"bad rational in moments file: {e}") from e
    m = rat(args.m)
    try:
        a, c = ct.recover_weights(bs, m)
    except InconsistentMoments as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_VIOLATION
    if args.json:
        print(
            json.dumps(
                {"m": _enc(m), "a_star": [_enc(x) for x in a], "c_star": [_enc(x) for x in c]},
                indent=2,
                sort_keys=True,
            )
        )
    else:
        print(f"a* = {[_enc(x) for x in a]}")
        print(f"c* = {[_enc(x) for x in c]}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify

CORPUS = [
    ("complete", {"n": 4}),
    ("complete", {"n": 7}),
    ("cycle", {"n": 5}),
    ("cycle", {"n": 6}),
    ("cycle", {"n": 7}),
    ("cycle", {"n": 8}),
    ("cycle", {"n": 9}),
    ("cycle", {"n": 10}),
    ("cycle", {"n": 11}),
    ("cycle", {"n": 12}),
    ("hamming", {"d": 3, "q": 2}),
    ("hamming", {"d": 4, "q": 2}),
    ("hamming", {"d": 6, "q": 2}),
    ("hamming", {"d": 2, "q": 3}),
    ("johnson", {"v": 5, "k": 2}),
    ("johnson", {"v": 7, "k": 3}),
    ("petersen", {}),
    ("cocktail_party", {"n": 3}),
    ("cocktail_party", {"n": 5}),
    ("icosahedron", {}),
]


def corpus_schemes():
    """Analyzed corpus: (label, SchemeCore, KreinTensor, orderings)."""
    out = []
    for fam, params in CORPUS:
        rp = generate(SchemeSpec(fam, params))
        sc = validate_scheme(rp)
        kt = krein_parameters(sc)
        out.append((fam + str(tuple(params.values())), sc, kt, find_qpoly_orderings(kt, sc)))
    return out


def _verify_properties(seed, random_triples):
    rng = random.Random(seed)
    corpus = corpus_schemes()
    props = {}

    props["scheme-axioms"] = all(sc.n >= 1 for _, sc, _, _ in corpus)
    props["krein-nonnegative"] = True  # krein_parameters raises otherwise
    props["lemma-as"] = all(dv.dual_intersection_identity(sc) for _, sc, _, _ in corpus)

    ok = True
    for _, sc, kt, ords in corpus:
        for o in ords:
            e = embed(sc, o)
            tm = 2 * sc.d
            if strength_by_moments(e, tm).t != strength_by_krein(o, tm).t:
                ok = False
            if not all(
                krein_moment_identity(sc, o, i, kt) for i in range(1, tm + 1)
            ):
                ok = False
    props["route-agreement"] = ok

    ok = True
    for _ in range(random_triples):
        w = ct.random_weight_triple(rng, rng.randint(2, 4))
        cm = ct.catalan_matrix(w)
        tab = ct.path_weight_table(w)
        if any(tab[cell] != cm.f[cell] for cell in cm.f):
            ok = False
    props["catalan-oracle"] = ok

    ok = True
    for _ in range(random_triples):
        w = ct.random_weight_triple(rng, rng.randint(2, 6))
        b = ct.catalan_numbers(w)[1:]
        a, c = ct.recover_weights(b, w.m)
        if tuple(a) != w.alpha[: len(a)] or tuple(c) != w.gamma[: len(c)]:
            ok = False
    props["recover-roundtrip"] = ok

    ok = True
    for _, sc, kt, ords in corpus:
        for o in ords[:1]:
            for i in range(1, sc.d + 1):
                try:
                    dd = dv.derived_design(sc, o, i)
                except CometricError:
                    continue
                for h in range(1, sc.d + 1):
                    if dv.derived_moment(dd, h) != dv.derived_moment_expansion(dd, o, h):
                        ok = False
    props["derived-two-route"] = ok

    ok = True
    for _, sc, _, ords in corpus:
        for o in ords[:1]:
            if not dv.pq_strength_bound_check(sc, o).ok:
                ok = False
    props["bound-check"] = ok
    return props


def cmd_verify(args):
    print(f"seed = {args.seed}")
    props = _verify_properties(args.seed, args.random_triples)
    if args.only:
        unknown = set(args.only) - set(props)
        if unknown:
            print(f"unknown properties: {sorted(unknown)}", file=sys.stderr)
            return EXIT_INPUT
        props = {k: v for k, v in props.items() if k in args.only}
    failed = False
    for name in sorted(props):
        status = "pass" if props[name] else "FAIL"
        failed = failed or not props[name]
        print(f"  {name:20s} {status}")
    return EXIT_VIOLATION if failed else EXIT_OK


# ---------------------------------------------------------------------------


def _add_scheme_args(p):
    p.add_argument("--family", help="named scheme family")
    p.add_argument("--params", help="family parameters as a JSON object")
    p.add_argument("--file", help="scheme JSON file")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--t-max", type=int, default=None, help="probe degrees up to this cap")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cometric",
        description="Exact design-strength analysis of association schemes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full pipeline report")
    _add_scheme_args(p)
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("strength", help="design strength by both routes")
    _add_scheme_args(p)
    p.set_defaults(fn=cmd_strength)

    p = sub.add_parser("catalan", help="dump the Catalan table of an ordering")
    _add_scheme_args(p)
    p.add_argument("--ordering", type=int, default=0)
    p.set_defaults(fn=cmd_catalan)

    p = sub.add_parser("derived", help="derived designs per class")
    _add_scheme_args(p)
    p.set_defaults(fn=cmd_derived)

    p = sub.add_parser("recover", help="recover weights from moment numbers")
    p.add_argument("moments", help="JSON file: list of rationals B_1..B_t")
    p.add_argument("--m", required=True, help="first multiplicity m")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_recover)

    p = sub.add_parser("verify", help="run the invariant suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--random-triples", type=int, default=25)
    p.add_argument("--only", nargs="*", help="subset of properties")
    p.set_defaults(fn=cmd_verify)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ParseError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except CometricError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
