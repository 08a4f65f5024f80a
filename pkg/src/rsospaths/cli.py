"""Command-line harness: emit generating polynomials and run identity sweeps.

    rsospaths gf --pprime 3 --a 1 --b 1 --c 2 --L 2 --model parafermion --method brute
    rsospaths verify --pprime 4-6 --max-L 10
    rsospaths bijection --pprime 3-5 --max-L 10
    rsospaths mn --pprime 3-5 --max-L 10 --system 1
    rsospaths --fixture fig1

Exit codes: 0 all pass, 1 an identity failed, 2 usage or parameter error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .closedforms import bosonic_chi, dual, fermionic_abf, fermionic_para
from .errors import ParameterError
from .hookdiff import d_arguments, d_function, path_to_partition
from .paths import FamilyParams, Path, enumerate_paths, gf, weight_alt, weight_III_normalized
from .qlaurent import LaurentPoly
from .striking import m_value, striking_of, weight_ef
from .transforms import chi_by_recursion, mn_residuals, particle_content

MODELS = ("abf", "parafermion")
METHODS = ("brute", "bosonic", "fermionic1", "fermionic2", "recursion", "dfunction")
FORMATS = ("text", "json", "csv")

WORKED = (3, 4, 5, 4, 5, 4, 3, 2, 3, 2, 1, 2)


def _recursion_para(p: int, a: int, b: int, c: int, L: int) -> LaurentPoly:
    f = 0 if c == b + 1 else 1
    total = LaurentPoly.zero()
    for m in range(L + 3):
        total += chi_by_recursion(p, a, b, 0, f, L, m)
    return total


def compute(model: str, method: str, p: int, a: int, b: int, c: int, L: int) -> LaurentPoly:
    """The family's generating polynomial by the named method."""
    FamilyParams(p, a, b, L, c).validate()
    para = model == "parafermion"
    if method == "brute":
        return gf(FamilyParams(p, a, b, L, c), "alt" if para else "III_normalized")
    if method == "bosonic":
        chi = bosonic_chi(p, a, b, c, L)
        return dual(chi, L, a, b) if para else chi
    if method in ("fermionic1", "fermionic2"):
        system = int(method[-1])
        fn = fermionic_para if para else fermionic_abf
        return fn(p, a, b, c, L, system)
    if method == "recursion":
        chi = _recursion_para(p, a, b, c, L)
        return chi if para else dual(chi, L, a, b)
    if method == "dfunction":
        return d_function(*d_arguments(p, a, b, c, L, model))
    raise ParameterError(f"unknown method {method!r}; expected one of {METHODS}")


def _corrupt(poly: LaurentPoly) -> LaurentPoly:
    # bump the lowest coefficient (or create a constant term)
    low = poly.min_quarters()
    return poly + LaurentPoly.monomial(0 if low is None else low, 1)


def first_difference(p: LaurentPoly, r: LaurentPoly):
    """(quarters, coeff in p, coeff in r) at the lowest exponent where they differ."""
    for e in sorted(set(p.terms) | set(r.terms)):
        if p.coeff(e) != r.coeff(e):
            return e, p.coeff(e), r.coeff(e)
    return None


def _qpow(quarters: int) -> str:
    ex = Fraction(quarters, 4)
    return f"q^{ex}" if ex.denominator == 1 else f"q^({ex})"


@dataclass(frozen=True)
class Family:
    p: int
    a: int
    b: int
    c: int
    L: int

    def label(self) -> str:
        return f"{self.p} {self.a} {self.b} {self.c} {self.L}"


@dataclass
class Result:
    model: str
    family: Family
    ok: bool
    tag: str
    detail: str = ""

    def text(self) -> str:
        line = f"{self.family.label()} : {'PASS' if self.ok else 'FAIL'} [{self.tag}]"
        return line + (f" {self.detail}" if self.detail else "")

    def record(self) -> dict:
        f = self.family
        return {
            "model": self.model,
            "p_prime": f.p,
            "a": f.a,
            "b": f.b,
            "c": f.c,
            "L": f.L,
            "status": "PASS" if self.ok else "FAIL",
            "check": self.tag,
            "detail": self.detail,
        }


def families(pprimes, max_L: int, a=None, b=None, c=None, L=None):
    """Valid (p', a, b, c, L) in deterministic order, honouring the filters."""
    Ls = [L] if L is not None else range(max_L + 1)
    for p in pprimes:
        for aa in range(1, p):
            if a is not None and aa != a:
                continue
            for bb in range(1, p):
                if b is not None and bb != b:
                    continue
                for cc in (bb - 1, bb + 1):
                    if not 1 <= cc <= p - 1 or (c is not None and cc != c):
                        continue
                    for LL in Ls:
                        if LL < 0 or (LL + aa - bb) % 2 or abs(aa - bb) > LL:
                            continue
                        yield Family(p, aa, bb, cc, LL)


def _verify_task(task) -> Result:
    model, fam, methods, fault = task
    polys = []
    for method in methods:
        poly = compute(model, method, fam.p, fam.a, fam.b, fam.c, fam.L)
        if method == fault:
            poly = _corrupt(poly)
        polys.append(poly)
    ref_name, ref = methods[0], polys[0]
    for name, poly in zip(methods[1:], polys[1:]):
        if poly != ref:
            e, x, y = first_difference(ref, poly)
            return Result(model, fam, False, f"{ref_name}!={name}",
                          f"first difference at {_qpow(e)}: {x} != {y}")
    return Result(model, fam, True, "=".join(methods))


def _bijection_task(task) -> Result:
    model, fam = task
    kind = "alt" if model == "parafermion" else "III_normalized"
    weigh = weight_alt if model == "parafermion" else weight_III_normalized
    seen = {}
    counts: dict[int, int] = {}
    for h in enumerate_paths(fam.p, fam.a, fam.b, fam.L, fam.c):
        mu = path_to_partition(h, model)
        if mu.weight != weigh(h):
            return Result(model, fam, False, "bijection",
                          f"weight of {mu} is {mu.weight}, path {h.heights} has {weigh(h)}")
        if mu in seen:
            return Result(model, fam, False, "bijection",
                          f"{seen[mu]} and {h.heights} both map to {mu}")
        seen[mu] = h.heights
        counts[4 * mu.weight] = counts.get(4 * mu.weight, 0) + 1
    image = LaurentPoly(counts)
    D = d_function(*d_arguments(fam.p, fam.a, fam.b, fam.c, fam.L, model))
    brute = gf(FamilyParams(fam.p, fam.a, fam.b, fam.L, fam.c), kind)
    for name, poly in (("image", image), ("dfunction", D)):
        if poly != brute:
            e, x, y = first_difference(brute, poly)
            return Result(model, fam, False, f"brute!={name}",
                          f"first difference at {_qpow(e)}: {x} != {y}")
    return Result(model, fam, True, "bijection")


def _mn_task(task) -> Result:
    system, fam = task
    bad = 0
    first = ""
    for h in enumerate_paths(fam.p, fam.a, fam.b, fam.L):
        mn = particle_content(h, system)
        if not mn.verified:
            bad += 1
            if not first:
                res = mn_residuals(system, fam.p, fam.a, fam.b, mn.m, mn.n)
                first = f"path {h.heights} m={mn.m} n={mn.n} residual={res}"
    if bad:
        return Result(f"system{system}", fam, False, f"mn-system{system}", f"{bad} paths fail; first: {first}")
    return Result(f"system{system}", fam, True, f"mn-system{system}")


def _run(fn, tasks, workers: int) -> list[Result]:
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, tasks, chunksize=max(1, len(tasks) // (4 * workers))))
    return [fn(t) for t in tasks]


def _emit(results: list[Result], fmt: str, out) -> None:
    passed = sum(r.ok for r in results)
    failed = len(results) - passed
    if fmt == "json":
        doc = {
            "results": [r.record() for r in results],
            "summary": {"families": len(results), "passed": passed, "failed": failed},
        }
        out.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
        return
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["model", "p_prime", "a", "b", "c", "L", "status", "check", "detail"])
        for r in results:
            d = r.record()
            w.writerow([d[k] for k in ("model", "p_prime", "a", "b", "c", "L", "status", "check", "detail")])
        out.write(buf.getvalue())
        return
    current = None
    for r in results:
        if r.model != current:
            current = r.model
            out.write(f"# {current}\n")
        out.write(r.text() + "\n")
    out.write(f"# {len(results)} families, {passed} passed, {failed} failed\n")


def parse_range(text: str) -> list[int]:
    """'5', '4-7' or '3,5,6' -> sorted list of ints."""
    try:
        out: set[int] = set()
        for chunk in text.split(","):
            chunk = chunk.strip()
            if "-" in chunk[1:]:
                lo, hi = chunk.split("-", 1) if not chunk.startswith("-") else (chunk, chunk)
                out.update(range(int(lo), int(hi) + 1))
            elif chunk:
                out.add(int(chunk))
        return sorted(out)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer or range: {text!r}")


def _method_list(text: str) -> list[str]:
    methods = [m.strip() for m in text.split(",") if m.strip()]
    bad = [m for m in methods if m not in METHODS]
    if bad or not methods:
        raise argparse.ArgumentTypeError(f"unknown method(s) {bad}; expected a subset of {','.join(METHODS)}")
    return methods


def _single(pprimes: list[int]) -> int:
    if len(pprimes) != 1:
        raise ParameterError(f"--pprime must be a single value here, got {pprimes}")
    return pprimes[0]


def cmd_gf(args, out) -> int:
    p = _single(args.pprime)
    for name in ("a", "b", "c", "L"):
        if getattr(args, name) is None:
            raise ParameterError(f"--{name} is required")
    method = args.method[0] if len(args.method) == 1 else None
    if method is None:
        raise ParameterError("gf takes exactly one --method")
    model = args.model or "parafermion"
    poly = compute(model, method, p, args.a, args.b, args.c, args.L)
    if args.format == "json":
        doc = {"family": {"p_prime": p, "a": args.a, "b": args.b, "c": args.c, "L": args.L},
               "model": model, "method": method, "poly": poly.to_json_obj()}
        out.write(json.dumps(doc, sort_keys=True) + "\n")
    elif args.format == "csv":
        out.write("quarters,coeff\n")
        for e, c in poly.items():
            out.write(f"{e},{c}\n")
    else:
        out.write(poly.to_json() + "\n")
    return 0


def cmd_verify(args, out) -> int:
    models = [args.model] if args.model else list(MODELS)
    fams = list(families(args.pprime, args.max_L, args.a, args.b, args.c, args.L))
    tasks = [(model, f, tuple(args.method), args.inject_fault) for model in models for f in fams]
    results = _run(_verify_task, tasks, args.workers)
    _emit(results, args.format, out)
    return 0 if all(r.ok for r in results) else 1


def cmd_bijection(args, out) -> int:
    models = [args.model] if args.model else list(MODELS)
    fams = list(families(args.pprime, args.max_L, args.a, args.b, args.c, args.L))
    results = _run(_bijection_task, [(m, f) for m in models for f in fams], args.workers)
    _emit(results, args.format, out)
    return 0 if all(r.ok for r in results) else 1


def cmd_mn(args, out) -> int:
    systems = [args.system] if args.system else [1, 2]
    fams = []
    for f in families(args.pprime, args.max_L, args.a, args.b, None, args.L):
        # c is implied by f_1: b-1 unless b = 1
        if f.p >= 3 and f.c == (f.b - 1 if f.b > 1 else f.b + 1):
            fams.append(f)
    results = _run(_mn_task, [(s, f) for s in systems for f in fams], args.workers)
    _emit(results, args.format, out)
    return 0 if all(r.ok for r in results) else 1


def cmd_fixture(name: str, fmt: str, out) -> int:
    if name != "fig1":
        raise ParameterError(f"unknown fixture {name!r}; available: fig1")
    h = Path(6, WORKED, 3)
    rows = []
    for e, f in ((0, 0), (1, 0), (0, 1), (1, 1)):
        s = striking_of(h, e, f)
        rows.append({"e": e, "f": f, "striking": str(s), "m": m_value(s), "wt_ef": weight_ef(s)})
    doc = {
        "p_prime": 6,
        "heights": list(WORKED),
        "c": 3,
        "weight_alt": weight_alt(h),
        "weight_III_normalized": weight_III_normalized(h),
        "partition_parafermion": list(path_to_partition(h, "parafermion").parts),
        "partition_abf": list(path_to_partition(h, "abf").parts),
        "augmentations": rows,
    }
    if fmt == "json":
        out.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
        return 0
    out.write(f"path p'=6 heights={','.join(map(str, WORKED))} c=3\n")
    for r in rows:
        out.write(f"  (e,f)=({r['e']},{r['f']})  {r['striking']}  m={r['m']}  wt={r['wt_ef']}\n")
    out.write(f"  weight_alt={doc['weight_alt']}  weight_III_normalized={doc['weight_III_normalized']}\n")
    out.write(f"  partition parafermion={tuple(doc['partition_parafermion'])}  abf={tuple(doc['partition_abf'])}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rsospaths", description="RSOS path generating functions and identity sweeps.")
    parser.add_argument("--fixture", choices=["fig1"], help="print the worked example path and exit")
    parser.add_argument("--format", choices=FORMATS, default="text")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pprime", type=parse_range, default=[3, 4, 5], help="p' value or range, e.g. 5 or 4-7")
    common.add_argument("--a", type=int)
    common.add_argument("--b", type=int)
    common.add_argument("--c", type=int)
    common.add_argument("--L", type=int)
    common.add_argument("--max-L", dest="max_L", type=int, default=8)
    common.add_argument("--model", choices=MODELS)
    common.add_argument("--method", type=_method_list, default=list(METHODS),
                        help="comma-separated subset of " + ",".join(METHODS))
    common.add_argument("--system", type=int, choices=[1, 2])
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    common.add_argument("--workers", type=int, default=1)
    # test hook: corrupt one method's output to exercise failure reporting
    common.add_argument("--inject-fault", dest="inject_fault", choices=METHODS, help=argparse.SUPPRESS)

    sub = parser.add_subparsers(dest="command")
    sub.add_parser("gf", parents=[common], help="print one generating polynomial as JSON")
    sub.add_parser("verify", parents=[common], help="compare methods over a sweep of families")
    sub.add_parser("bijection", parents=[common], help="check the path-to-partition maps")
    sub.add_parser("mn", parents=[common], help="check particle contents against the mn-systems")
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.fixture:
            return cmd_fixture(args.fixture, args.format, out)
        if not args.command:
            parser.print_usage(sys.stderr)
            return 2
        if args.workers < 1:
            raise ParameterError("--workers must be >= 1")
        handler = {"gf": cmd_gf, "verify": cmd_verify, "bijection": cmd_bijection, "mn": cmd_mn}[args.command]
        return handler(args, out)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
