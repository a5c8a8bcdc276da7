"""Command-line front end.

Every subcommand prints one JSON envelope ``{manifest, result, checks}`` on
stdout (or CSV with ``--format csv`` where the result is a table). Exit codes:
0 success, 1 a check failed, 2 usage error, 3 parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction
from importlib import metadata
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import growth, monoideal, s2gamma
from .exprio import (ParseError, parse_monomial_ideal, parse_operator, parse_poly, render,
                     render_operator)
from .poly import Poly, leading_split, lie_ideal_closure, poisson_bracket, u_act, witt_act
from .qij import locus
from .qij.vectors import CASES, PARTITIONS_OF_6

DEFAULT_SEED = 20240607


class UsageError(Exception):
    pass


Table = Tuple[List[str], List[List]]


class Outcome:
    """What a subcommand hands back: a JSON result, checks and an optional table."""

    def __init__(self, result, checks: Optional[List[Dict]] = None, table: Optional[Table] = None):
        self.result = result
        self.checks = checks or []
        self.table = table


def check(name: str, ok: bool, detail="") -> Dict:
    return {"name": name, "pass": bool(ok), "detail": detail}


def _version() -> str:
    try:
        return metadata.version("artifact")
    except metadata.PackageNotFoundError:
        return "0+unknown"


# -- argument helpers -------------------------------------------------------------------

def _int_list(text: str, n_min: int, n_max: int, what: str) -> List[int]:
    try:
        vals = [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"{what}: expected comma-separated integers, got {text!r}") from None
    if not n_min <= len(vals) <= n_max:
        raise UsageError(f"{what}: expected {n_min}..{n_max} integers, got {len(vals)}")
    return vals


def _fractions(text: str) -> List[Fraction]:
    if not text.strip():
        return []
    try:
        return [Fraction(t.strip()) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"--beta: expected comma-separated rationals, got {text!r}") from None


def _monomial(text: str, ambient: int) -> Tuple[int, ...]:
    f = parse_poly(text)
    if len(f) != 1:
        raise UsageError(f"--b must be a single monomial, got {text!r}")
    (lam, _c), = f.terms.items()
    return monoideal.partition_to_exponents(lam, ambient)


def _operator_terms(text: str) -> List[Tuple[int, Tuple[int, ...]]]:
    """Split an operator sum at top-level signs; each piece must be a product word."""
    pieces: List[Tuple[int, Tuple[int, ...]]] = []
    sign, start = 1, 0
    body = text.strip()
    if body.startswith("-"):
        sign, body = -1, body[1:]
    for k, ch in enumerate(body + "+"):
        if ch in "+-":
            word = body[start:k]
            if not word.strip():
                raise ParseError("empty operator term", text, k)
            pieces.append((sign, parse_operator(word)))
            sign, start = (1 if ch == "+" else -1), k + 1
    return pieces


def _s2(text: str) -> Poly:
    f = parse_poly(text)
    if not f or any(len(lam) != 2 for lam in f.terms):
        raise UsageError("expected a nonzero element of S^2 (every term a product of two generators)")
    return f


# -- subcommands ----------------------------------------------------------------------------

def cmd_bracket(a) -> Outcome:
    f, g = parse_poly(a.f), parse_poly(a.g)
    b = poisson_bracket(f, g)
    anti = poisson_bracket(g, f) == -b
    return Outcome(render(b), [check("antisymmetry", anti, "{g,f} = -{f,g}")])


def cmd_act(a) -> Outcome:
    f = parse_poly(a.f)
    out = Poly.zero()
    words = _operator_terms(a.op)
    for sign, word in words:
        out = out + u_act(word, f).scale(sign)
    checks = []
    if len(words) == 1 and len(words[0][1]) == 1:
        k = words[0][1][0]
        checks.append(check("derivation_agrees_with_bracket",
                            witt_act(k, f) == poisson_bracket(Poly.x(k), f), f"e{k} vs {{x{k}, .}}"))
    return Outcome({"operator": " + ".join(render_operator(w) for _, w in words),
                    "result": render(out)}, checks)


def cmd_leading_split(a) -> Outcome:
    f = parse_poly(a.f)
    p, q, n = leading_split(f)
    lhs = poisson_bracket(Poly.x(1), f)
    ok = lhs == Poly.x(n + 1) * p + q
    return Outcome({"n": n, "p": render(p), "q": render(q)},
                   [check("identity", ok, "{x1, f} = x_{n+1} p + q")])


def cmd_lie_ideal(a) -> Outcome:
    g = parse_poly(a.f)
    if not g or any(len(lam) != 1 for lam in g.terms):
        raise UsageError("lie-ideal needs a nonzero linear combination of generators")
    res = lie_ideal_closure(g, a.cap)
    contained = res.generators_contained()
    checks = []
    if len(g) == 1:
        n = g.max_index()
        want = list(range(n + 2, a.cap + 1))
        missing = [m for m in want if m not in contained]
        checks.append(check("contains_tail", not missing,
                            f"x_m for {n + 2} <= m <= {a.cap}" + (f"; missing {missing}" if missing else "")))
    return Outcome({"cap": a.cap, "dim": res.dim, "complement_dim": res.complement_dim,
                    "truncated": res.truncated, "generators_contained": contained,
                    "basis": [render(v) for v in res.space.basis]}, checks)


def _pattern(text: Optional[str]):
    if text is None:
        return None
    try:
        return growth.QuadraticPattern.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_pgk(a) -> Outcome:
    gens = [parse_poly(t) for t in a.gens.split(",")]
    quotient = _pattern(a.quotient)
    table = growth.pd_table(gens, a.n, quotient)
    result = table.to_json()
    result["gens"] = [render(g) for g in gens]
    if quotient is not None:
        bad = quotient.poisson_violations()
        result["quotient_poisson_violations"] = [list(t) for t in bad[:10]]
        if bad:
            print(f"warning: pattern {quotient.name} is not Poisson-stable on sampled brackets "
                  f"(e.g. e{bad[0][2]} . x{bad[0][0]}*x{bad[0][1]})", file=sys.stderr)
    pd = table.pd()
    checks = [
        check("pd_monotone", all(x <= y for x, y in zip(pd, pd[1:]))),
        check("dim_Vn_le_pd", all(r.dim_Vn <= r.pd for r in table.rows)),
    ]
    rows = [[r.n, r.dim_Vn, r.pd] for r in table.rows]
    return Outcome(result, checks, (["n", "dim_Vn", "pd"], rows))


def cmd_good_growth(a) -> Outcome:
    if a.n < 1:
        raise UsageError("--n must be >= 1")
    rep = growth.good_growth_check(a.n)
    detail = "" if rep["pass"] else f"first failure {rep['first_failure']}"
    rows = [[s["n"], s["dim_F"], s["pd"], int(s["contained"])] for s in rep["steps"]]
    return Outcome(rep, [check("F^n in V^0 + ... + V^n", rep["pass"], detail)],
                   (["n", "dim_F", "pd", "contained"], rows))


def cmd_jkl_dims(a) -> Outcome:
    try:
        pattern = growth.QuadraticPattern.jkl(a.k, a.l)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    dims = growth.quotient_dims(pattern, a.n)
    limit = min(a.n, 30)
    direct = growth.quotient_dims_enumerated(pattern, limit)
    checks = [check("class_sum_matches_enumeration", dims[:limit + 1] == direct,
                    f"n <= {limit}")]
    header = ["n", "dim"]
    rows = [[n, d] for n, d in enumerate(dims)]
    result: Dict = {"k": a.k, "l": a.l, "dims": dims}
    if a.fcounts:
        fc = [growth.f_counts(a.k, a.l, n) for n in range(a.n + 1)]
        result["fcounts"] = [list(t) for t in fc]
        header += ["f1", "f2", "f3"]
        rows = [r + list(t) for r, t in zip(rows, fc)]
        if a.k == a.l:
            checks.append(check("f3_zero_when_k_eq_l", all(t[2] == 0 for t in fc)))
    return Outcome(result, checks, (header, rows))


IDEAL_OPS = ("show", "colon", "saturate", "radical", "hat-plus", "minimal-primes", "decompose",
             "intersect")


def cmd_ideal(a) -> Outcome:
    try:
        with open(a.input, encoding="utf-8") as fh:
            I = parse_monomial_ideal(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {a.input}: {exc.strerror}") from None
    op = a.opname
    needs_b = op in ("colon", "saturate", "hat-plus", "decompose")
    if needs_b and a.b is None:
        raise UsageError(f"ideal {op} needs --b MONO")
    b = _monomial(a.b, I.ambient) if needs_b else None
    checks = []
    if op == "show":
        result = I.to_json()
    elif op == "colon":
        result = monoideal.colon(I, b).to_json()
    elif op == "saturate":
        result = monoideal.saturate(I, b).to_json()
    elif op == "radical":
        result = monoideal.radical(I).to_json()
    elif op == "hat-plus":
        result = monoideal.hat_plus(I, b).to_json()
    elif op == "minimal-primes":
        primes = monoideal.minimal_primes(I)
        result = {"vars": I.ambient, "primes": sorted(sorted(v + 1 for g in P.gens for v, e in enumerate(g) if e)
                                                       for P in primes)}
        both = monoideal.intersect_all(primes, I.ambient) if primes else monoideal.MonomialIdeal.unit(I.ambient)
        checks.append(check("intersection_is_radical", both == monoideal.radical(I)))
    elif op == "decompose":
        result = monoideal.decomposition_check(I, b)
        checks.append(check("decomposition", result["holds"], result["identity"]))
    else:
        if a.other is None:
            raise UsageError("ideal intersect needs --other FILE")
        with open(a.other, encoding="utf-8") as fh:
            J = parse_monomial_ideal(fh.read())
        if J.ambient != I.ambient:
            n = max(I.ambient, J.ambient)
            I = monoideal.MonomialIdeal.from_partitions(n, I.partitions())
            J = monoideal.MonomialIdeal.from_partitions(n, J.partitions())
        result = monoideal.intersect(I, J).to_json()
    return Outcome({"op": op, "input": I.to_json(), "result": result}, checks)


def cmd_gamma(a) -> Outcome:
    return Outcome(list(s2gamma.gamma(_s2(a.f)).as_tuple()))


def cmd_gamma_profile(a) -> Outcome:
    f = _s2(a.f)
    prof = s2gamma.gamma_profile(f, a.depth)
    rows = [list(p) for p in prof.points]
    return Outcome(prof.to_json(),
                   [check("contains_cone", prof.contains_cone,
                          "gamma(f) + (0,4) + {0 <= a <= b}, truncated")],
                   (["i", "j"], rows))


def cmd_raise6(a) -> Outcome:
    f = _s2(a.f)
    alpha = s2gamma.find_raise6(f)
    g = s2gamma.gamma(f)
    if alpha is None:
        return Outcome({"gamma": [g.i, g.j], "alpha": None,
                        "partitions": ["".join(map(str, p)) for p in PARTITIONS_OF_6]})
    raised = s2gamma.gamma(s2gamma.apply_combination(alpha, f))
    ok = raised.as_tuple() == (g.i + 3, g.j + 3)
    return Outcome({"gamma": [g.i, g.j], "alpha": [str(x) for x in alpha],
                    "partitions": ["".join(map(str, p)) for p in PARTITIONS_OF_6],
                    "gamma_after": [raised.i, raised.j]},
                   [check("raises_by_(3,3)", ok)])


def cmd_critical(a) -> Outcome:
    f = _s2(a.f)
    if not f.is_homogeneous():
        raise UsageError("critical needs a homogeneous f")
    rep = s2gamma.criticality_dims(f, a.dmax)
    keys = ["d", "dim_S2", "dim_M", "quotient", "cumulative", "bound"]
    return Outcome(rep, [check("cumulative_le_linear_bound", rep["pass"],
                               f"(k+l)*d with (k,l) = ({rep['k']},{rep['l']})")],
                   (keys, [[r[k] for k in keys] for r in rep["rows"]]))


def _case(text: str) -> str:
    if text not in CASES:
        raise UsageError(f"unknown case {text!r}; expected one of {', '.join(CASES)}")
    return text


def cmd_locus(a) -> Outcome:
    case = _case(a.case)
    rep = locus.degenerate_locus(case, a.bound)
    lines = locus.line_deficiency_check(case, a.bound)
    rep["line_checks"] = lines
    checks = [check("factors_divide_all_minors", locus.factors_divide_minors(case, a.bound)),
              check("deficient_on_factor_lines", all(x["deficient"] for x in lines))]
    rows = [f for f in rep["factors"]]
    return Outcome(rep, checks, (["alpha", "beta", "gamma", "multiplicity"], rows))


def cmd_rank_scan(a) -> Outcome:
    case = _case(a.case)
    box = _int_list(a.box, 2, 3, "--box")
    joff = box[2] if len(box) == 3 else 40
    rep = locus.rank_scan(case, box[0], box[1], joff)
    rep.update({k: v for k, v in locus.degenerate_locus(case).items()
                if k in ("factors", "residual_degree")})
    rows = [d["point"] for d in rep["scan_deficiencies"]]
    return Outcome(rep, [check("deficiencies_on_locus", not rep["unexplained"])], (["i", "j"], rows))


def cmd_crosscheck(a) -> Outcome:
    case = _case(a.case)
    pt = _int_list(a.point, 1, 2, "--point")
    beta = _fractions(a.beta)
    try:
        rep = locus.bc_crosscheck(case, pt[0], pt[1] if len(pt) > 1 else None, beta,
                                  trials=a.trials, seed=a.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return Outcome(rep, [check("alpha.B.C == pi(p.f)", rep["pass"], f"{a.trials} trials")])


# -- parser -------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--timing", action="store_true",
                        help="add wall time to the manifest (output then varies between runs)")

    p = argparse.ArgumentParser(prog="wittpoisson",
                                description="Exact computations in the Poisson algebra S(W+).")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name: str, func: Callable, help_: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        return sp

    sp = add("bracket", cmd_bracket, "Poisson bracket {F, G}")
    sp.add_argument("f", metavar="F")
    sp.add_argument("g", metavar="G")

    sp = add("act", cmd_act, "apply an operator word (or a sum of words) to F")
    sp.add_argument("op", metavar="OP")
    sp.add_argument("f", metavar="F")

    sp = add("leading-split", cmd_leading_split, "{x1, F} = x_{n+1} p + q")
    sp.add_argument("f", metavar="F")

    sp = add("lie-ideal", cmd_lie_ideal, "closure of a linear F under every e_k")
    sp.add_argument("f", metavar="F")
    sp.add_argument("--cap", type=int, required=True)

    sp = add("pgk", cmd_pgk, "Poisson growth table of span(GENS)")
    sp.add_argument("--gens", required=True, help="comma-separated polynomials")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--quotient", help="all | jkl:K,L")

    sp = add("good-growth", cmd_good_growth, "check F^n inside the Poisson powers of span(x1, x2)")
    sp.add_argument("--n", type=int, required=True)

    sp = add("jkl-dims", cmd_jkl_dims, "graded dimensions of S(W+)/J(k,l)")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--fcounts", action="store_true")

    sp = add("ideal", cmd_ideal, "monomial ideal operations")
    sp.add_argument("opname", choices=IDEAL_OPS, metavar="OPNAME")
    sp.add_argument("--input", required=True)
    sp.add_argument("--b")
    sp.add_argument("--other")

    sp = add("gamma", cmd_gamma, "leading degree of F in S^2")
    sp.add_argument("f", metavar="F")

    sp = add("gamma-profile", cmd_gamma_profile, "leading degrees of U(W+) . F up to depth M")
    sp.add_argument("f", metavar="F")
    sp.add_argument("--depth", type=int, required=True)

    sp = add("raise6", cmd_raise6, "solve for p in U(W+)_6 raising gamma(F) by (3,3)")
    sp.add_argument("f", metavar="F")

    sp = add("critical", cmd_critical, "dimensions of S^2 modulo U(W+) . F")
    sp.add_argument("f", metavar="F")
    sp.add_argument("--dmax", type=int, required=True)

    sp = add("locus", cmd_locus, "linear factors of the gcd of maximal minors")
    sp.add_argument("--case", required=True)
    sp.add_argument("--bound", type=int, default=10)

    sp = add("rank-scan", cmd_rank_scan, "rank-deficient integer points of a case matrix")
    sp.add_argument("--case", required=True)
    sp.add_argument("--box", required=True, help="IMIN,IMAX[,JOFFMAX]")

    sp = add("crosscheck", cmd_crosscheck, "compare alpha.B.C with the direct action")
    sp.add_argument("--case", required=True)
    sp.add_argument("--point", required=True, help="I,J (J ignored for diagonal cases)")
    sp.add_argument("--beta", default="", help="comma-separated rationals")
    sp.add_argument("--trials", type=int, default=20)
    return p


def _manifest(a, elapsed: Optional[float]) -> Dict:
    args = {k: v for k, v in sorted(vars(a).items())
            if k not in ("func", "command", "seed", "format", "timing")}
    out = {"subcommand": a.command, "args": args, "seed": a.seed, "version": _version()}
    if elapsed is not None:
        out["wall_time"] = round(elapsed, 6)
    return out


def _csv(table: Table) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(table[0])
    w.writerows(table[1])
    return buf.getvalue()


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    start = time.perf_counter()
    try:
        out = a.func(a)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.text:
            print(exc.caret(), file=sys.stderr)
        return 3
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    elapsed = time.perf_counter() - start if a.timing else None
    if a.format == "csv":
        if out.table is None:
            print(f"error: {a.command} has no tabular output; use --format json", file=sys.stderr)
            return 2
        sys.stdout.write(_csv(out.table))
    else:
        env = {"manifest": _manifest(a, elapsed), "result": out.result, "checks": out.checks}
        sys.stdout.write(json.dumps(env, indent=2) + "\n")
    for c in out.checks:
        if not c["pass"]:
            print(f"check failed: {c['name']} {c['detail']}".rstrip(), file=sys.stderr)
    return 0 if all(c["pass"] for c in out.checks) else 1


if __name__ == "__main__":
    sys.exit(main())
