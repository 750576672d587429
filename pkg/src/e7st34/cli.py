"""Command-line interface: classify surfaces, run verification suites, emit discriminants."""

import argparse
import hashlib
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from gmpy2 import mpq

from . import discrim, e7family, wdvv
from .fields import QQ, QW
from .poly import ParseError, Ring, parse_poly
from .singclass import NonIsolatedError, UnsupportedShapeError, classify_surface


def _parse_rational(text):
    if "/" in text:
        n, d = text.split("/", 1)
        return mpq(int(n), int(d))
    return mpq(int(text))


def _format_point(pt):
    return "(" + ", ".join(str(c) for c in pt) + ")"


def cmd_classify(args):
    text = args.poly
    if os.path.exists(text):
        with open(text) as fh:
            text = fh.read()
    names = tuple(v.strip() for v in args.vars.split(","))
    field = QW if args.field == "Qw" else QQ
    ring = Ring(names, field)
    try:
        f = parse_poly(text, ring)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 3
    try:
        reports, complete = classify_surface(f)
    except UnsupportedShapeError as exc:
        print(f"unsupported shape: {exc}", file=sys.stderr)
        return 2
    except NonIsolatedError as exc:
        print(f"non-isolated singular locus: {exc}", file=sys.stderr)
        return 4
    print("point | mu | type | corank")
    for rep in reports:
        print(f"{_format_point(rep.point)} | {rep.milnor} | {rep.type} | {rep.corank}")
    if not complete:
        print("note: the point list may be incomplete over this field")
    return 0


# ---------------------------------------------------------------------------
# verify suites

_ADJACENCY_TYPES = {
    1: ["D6"], 2: ["A6"], 3: ["A1", "A5"], 4: ["A1", "A2", "A3"],
    5: ["A2", "A4"], 6: ["A1", "D5"], 7: ["E6"],
}

_ST34_TYPES = {
    1: ["A2", "A3"], 2: ["A1", "D5"], 3: ["E6"],
    4: ["A5"], 5: ["A1", "A4"], 6: ["D6"],
}


def _classified_types(f):
    reports, complete = classify_surface(f)
    types = sorted(str(rep.type) for rep in reports)
    return types, complete


def _check_base_curve(eta):
    ring = e7family.curve_ring()
    zero = e7family.LambdaParams(*([mpq(0)] * 7))
    types, complete = _classified_types(e7family.f_curve(zero, ring))
    ok = types == ["E7"] and complete
    return ok, f"types={types} complete={complete}"


def _check_adjacency_case(i, eta):
    lam = e7family.lambda_case(i, eta=eta)
    types, complete = _classified_types(e7family.f_curve(lam))
    want = _ADJACENCY_TYPES[i]
    ok = types == want and complete
    return ok, f"types={types} expected={want} complete={complete}"


def _check_st34_case(i, eta):
    tau = e7family.st34_tau(i, eta=eta)
    field = QW if i == 4 else QQ
    ring = e7family.curve_ring(field)
    types, complete = _classified_types(e7family.f_family(tau, ring))
    want = _ST34_TYPES[i]
    ok = types == want and complete
    return ok, f"types={types} expected={want} complete={complete}"


def _check_st34_discriminant(i, eta):
    tau = e7family.st34_tau(i, eta=eta)
    if i in (2, 3, 6):
        ok = tau.t7 == 0
        return ok, f"t7={tau.t7} expected 0"
    d = discrim.delta_st34()
    if i == 4:
        rw = Ring(d.ring.vars, QW)
        d = d.substitute({v: rw.gen(v) for v in d.ring.vars}, ring=rw)
    val = d.evaluate({n: getattr(tau, n) for n in d.ring.vars})
    ok = val == 0
    return ok, f"delta_st34(tau[{i}])={val}"


def _check_shioda_case(i, xi):
    lam = e7family.lambda_case(i, eta=e7family.case_eta(i, xi))
    phi = e7family.shioda_phi(lam)
    psi = e7family.psi_poly(e7family.case_vector(i, xi))
    ok = phi == psi
    return ok, f"degree={phi.degree_in('X')} match={ok}"


def _check_eps_pq_case(i, xi):
    eps = e7family.epsilons(e7family.case_vector(i, xi))
    lam = e7family.pq_from_eps(eps)
    want = e7family.lambda_case(i, eta=e7family.case_eta(i, xi))
    ok = lam == want
    return ok, f"match={ok}"


def _check_solution_roundtrip(i, eta):
    lam = e7family.lambda_case(i, eta=eta)
    ok = True
    count = 0
    for sol in e7family.family_solutions(i, eta=eta):
        count += 1
        if e7family.st_to_pq(sol) != lam:
            ok = False
    return ok and count > 0, f"solutions={count} all map back={ok}"


def _check_k0(_eta):
    b = discrim.bundle()
    want = mpq(823543, 4782969)
    ok = b.k0 == want
    return ok, f"k0={b.k0}"


def _check_delta_weights(_eta):
    dt = discrim.delta_tilde()
    ds = discrim.delta_st34()
    w1 = dt.weighted_degree(discrim.PARAM_WEIGHTS)
    w2 = ds.weighted_degree(discrim.PARAM_WEIGHTS)
    ok = (w1, w2) == (98, 84) and dt.degree_in("t7") == 7 and ds.degree_in("t7") == 6
    return ok, f"weights=({w1},{w2}) degrees=({dt.degree_in('t7')},{ds.degree_in('t7')})"


def _check_matrix_entry(_eta):
    diffs = discrim.compare_matrix_B()
    ok = diffs == [(4, 4)]
    return ok, f"disagreements={diffs}"


def _check_uv(_eta):
    flags = discrim.verify_uv_points()
    ok = all(flags.values())
    return ok, f"congruences={flags}"


def _check_point_audit(_eta):
    good = discrim.audit_det_points()
    return good == 20, f"{good}/20 random points agree"


def _check_delta_vanishing(eta):
    dt = discrim.delta_tilde()
    bad = []
    for i in range(1, 8):
        for sol in e7family.family_solutions(i, eta=eta):
            val = dt.evaluate(dict(zip(dt.ring.vars, sol)))
            if val != 0:
                bad.append(i)
    return not bad, f"nonvanishing cases={bad}" if bad else "all tabulated strata lie on delta_tilde"


def _check_t4_factor(_eta):
    ds = discrim.delta_st34()
    zero = ds.ring.zero()
    at0 = ds.substitute({v: (zero if v == "t7" else ds.ring.gen(v)) for v in ds.ring.vars},
                        ring=ds.ring)
    t4 = ds.ring.gen("t4")
    try:
        at0.exact_divide(t4 ** 3)
        return True, "t4^3 divides delta_st34 at t7=0"
    except Exception:
        return False, "t4^3 does not divide delta_st34 at t7=0"


def _check_b7(_eta):
    ok = wdvv.b7_is_identity()
    return ok, f"B7==I: {ok}"


def _check_c_symmetry(_eta):
    ok = wdvv.c_is_pairing_symmetric()
    return ok, f"pairing symmetry: {ok}"


def _check_commutators(_eta):
    defects = wdvv.commutator_defects()
    return not defects, f"defects={defects[:3]}" if defects else "all 21 commutators vanish"


def _check_dett_matches(_eta):
    kappa = wdvv.transform_and_compare(discrim.delta_tilde())
    ok = not kappa.is_zero() if hasattr(kappa, "is_zero") else kappa != 0
    return ok, f"kappa={kappa}"


def _suite_checks(suite, eta):
    checks = []
    if suite in ("adjacency", "all"):
        checks.append(("adjacency.base", lambda: _check_base_curve(eta)))
        for i in range(1, 8):
            checks.append((f"adjacency.case{i}", lambda i=i: _check_adjacency_case(i, eta)))
        for i in range(1, 8):
            checks.append((f"adjacency.roundtrip{i}", lambda i=i: _check_solution_roundtrip(i, eta)))
    if suite in ("st34", "all"):
        for i in range(1, 7):
            checks.append((f"st34.case{i}", lambda i=i: _check_st34_case(i, eta)))
        for i in range(1, 7):
            checks.append((f"st34.discriminant{i}", lambda i=i: _check_st34_discriminant(i, eta)))
    if suite in ("shioda", "all"):
        for i in range(1, 8):
            checks.append((f"shioda.case{i}", lambda i=i: _check_shioda_case(i, eta)))
        for i in range(1, 8):
            checks.append((f"shioda.eps{i}", lambda i=i: _check_eps_pq_case(i, eta)))
    if suite in ("discriminant", "all"):
        checks.append(("discriminant.k0", lambda: _check_k0(eta)))
        checks.append(("discriminant.weights", lambda: _check_delta_weights(eta)))
        checks.append(("discriminant.matrix_entry", lambda: _check_matrix_entry(eta)))
        checks.append(("discriminant.uv_congruences", lambda: _check_uv(eta)))
        checks.append(("discriminant.point_audit", lambda: _check_point_audit(eta)))
        checks.append(("discriminant.strata_vanish", lambda: _check_delta_vanishing(eta)))
        checks.append(("discriminant.t4_factor", lambda: _check_t4_factor(eta)))
    if suite in ("wdvv", "all"):
        checks.append(("wdvv.b7_identity", lambda: _check_b7(eta)))
        checks.append(("wdvv.c_symmetry", lambda: _check_c_symmetry(eta)))
        checks.append(("wdvv.commutators", lambda: _check_commutators(eta)))
        checks.append(("wdvv.dett_discriminant", lambda: _check_dett_matches(eta)))
    return checks


def _artifact_hashes(suite):
    artifacts = {}
    if suite in ("discriminant", "wdvv", "all"):
        artifacts["delta_tilde"] = str(discrim.delta_tilde())
        artifacts["delta_st34"] = str(discrim.delta_st34())
    if suite in ("wdvv", "all"):
        artifacts["det_T_transformed"] = str(wdvv.det_T_transformed())
    if suite in ("shioda", "all"):
        for i in range(1, 8):
            artifacts[f"phi_case{i}"] = str(
                e7family.shioda_phi(e7family.lambda_case(i, eta=e7family.case_eta(i))))
    return {k: hashlib.sha256(v.encode()).hexdigest() for k, v in sorted(artifacts.items())}


def _run_check(name, fn):
    t0 = time.monotonic()
    try:
        ok, detail = fn()
        status = "pass" if ok else "fail"
    except Exception as exc:
        status, detail = "error", f"{type(exc).__name__}: {exc}"
    elapsed = int((time.monotonic() - t0) * 1000)
    return {"id": name, "status": status, "detail": detail, "elapsed_ms": elapsed}


def cmd_verify(args):
    eta = _parse_rational(args.eta)
    checks = _suite_checks(args.suite, eta)
    workers = int(os.environ.get("E7M_THREADS", "1") or "1")
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda c: _run_check(*c), checks))
    else:
        results = [_run_check(name, fn) for name, fn in checks]
    report = {
        "suite": args.suite,
        "checks": results,
        "artifact_hashes": _artifact_hashes(args.suite),
    }
    for r in results:
        print(f"[{r['status'].upper():5}] {r['id']}: {r['detail']} ({r['elapsed_ms']} ms)")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(report, fh, indent=2, sort_keys=True)
            fh.write("\n")
    failed = [r for r in results if r["status"] != "pass"]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 1 if failed else 0


def cmd_discriminant(args):
    poly = discrim.delta_tilde() if args.emit == "delta_tilde" else discrim.delta_st34()
    if args.format == "text":
        out = str(poly) + "\n"
    else:
        terms = sorted((list(e), str(c)) for e, c in poly.terms.items())
        out = json.dumps({
            "name": args.emit,
            "variables": list(poly.ring.vars),
            "terms": terms,
        }, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return 0


def main(argv=None):
    parser = argparse.ArgumentParser(prog="e7m", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify the singular points of a suspension surface")
    p.add_argument("--poly", required=True, help="polynomial text or a file containing it")
    p.add_argument("--vars", default="x,y,z", help="comma-separated variable names")
    p.add_argument("--field", choices=("Q", "Qw"), default="Q")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=("adjacency", "st34", "discriminant", "shioda", "wdvv", "all"))
    p.add_argument("--eta", default="1", help="rational scale parameter")
    p.add_argument("--out", help="write a JSON report here")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("discriminant", help="emit a discriminant polynomial")
    p.add_argument("--emit", choices=("delta_tilde", "delta_st34"), default="delta_tilde")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", help="write to this file instead of stdout")
    p.set_defaults(func=cmd_discriminant)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
