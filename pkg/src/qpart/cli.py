"""Command-line front end.

    qpart expand   --r R [--terms N] [--mod M]
    qpart verify   --r R --A A --B B --M M --nmax N
    qpart theorem  --id T1..T5 --lambda-min L --lambda-max L --nmax N
    qpart identity --name NAME [--terms N] [--k K] [--p P] [--w W,...] [--nmax N]
    qpart scan     --r-min R --r-max R --modulus M --A A --nmax N
    qpart oracle   --n N --r R

Every subcommand takes ``--format json|csv`` (json by default).  Exit codes:
0 success / verified, 1 counterexample found, 2 usage or contract error.
Results go to stdout only after all computation has finished.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field
from typing import Any, Dict, List

from . import congruence as C
from . import oracle
from .products import pr_series
from .series import InexactDivisionError, RingSpec

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2

DEFAULT_TERMS = 500
IDENTITIES = ("dissection5", "lemma-h5", "frobenius", "jacobi", "ramanujan-pm4")


class UsageError(Exception):
    pass


@dataclass
class OutputRecord:
    """One command's output.

    Serialized keys always come in the order command, parameters, results,
    depth, status; ``parameters`` is emitted sorted by key.  Integers that can
    grow without bound (coefficients, counts) are carried as decimal strings.
    """

    command: str
    parameters: Dict[str, Any] = field(default_factory=dict)
    results: List[Any] = field(default_factory=list)
    depth: int = 0
    status: str = "ok"

    def to_json(self) -> str:
        doc = {
            "command": self.command,
            "parameters": {k: self.parameters[k] for k in sorted(self.parameters)},
            "results": self.results,
            "depth": self.depth,
            "status": self.status,
        }
        return json.dumps(doc, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "OutputRecord":
        doc = json.loads(text)
        return cls(doc["command"], doc["parameters"], doc["results"], doc["depth"], doc["status"])


def _report_rows(reports):
    rows = []
    for i, rep in enumerate(reports):
        d = rep.to_dict()
        prefix = f"report[{i}]."
        claim = d["claim"]
        rows.append((prefix + "claim", claim if isinstance(claim, str) else str(rep.claim)))
        rows.append((prefix + "depth", d["depth"]))
        rows.append((prefix + "status", d["status"]))
        if d["witness"] is not None:
            rows.append((prefix + "witness_n", d["witness"]["n"]))
            rows.append((prefix + "witness_value", d["witness"]["value"]))
        for k, v in d["detail"].items():
            rows.append((prefix + k, v))
    return rows


def _csv(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _default_terms():
    raw = os.environ.get("QPART_DEFAULT_TERMS")
    if raw is None:
        return DEFAULT_TERMS
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"QPART_DEFAULT_TERMS must be an integer, got {raw!r}")
    if value < 1:
        raise UsageError(f"QPART_DEFAULT_TERMS must be >= 1, got {value}")
    return value


def _require(cond, message):
    if not cond:
        raise UsageError(message)


def cmd_expand(args):
    terms = args.terms if args.terms is not None else _default_terms()
    _require(args.r != 0, "--r must be nonzero")
    _require(terms >= 1, "--terms must be >= 1")
    _require(args.mod is None or args.mod >= 2, "--mod must be >= 2")
    ring = RingSpec.exact() if args.mod is None else RingSpec.modular(args.mod)
    values = pr_series(ring, args.r, terms).tolist()
    record = OutputRecord(
        "expand",
        {"r": args.r, "terms": terms, "mod": args.mod},
        [str(v) for v in values],
        terms,
    )
    csv_text = _csv(["n", "value"], enumerate(values))
    return record, csv_text, EXIT_OK


def _reports_output(command, params, reports, depth):
    ok = all(r.holds for r in reports)
    record = OutputRecord(
        command,
        params,
        [r.to_dict() for r in reports],
        depth,
        C.HOLDS if ok else C.COUNTEREXAMPLE,
    )
    return record, _csv(["field", "value"], _report_rows(reports)), EXIT_OK if ok else EXIT_COUNTEREXAMPLE


def cmd_verify(args):
    try:
        claim = C.CongruenceClaim(args.r, args.A, args.B, args.M)
    except ValueError as exc:
        raise UsageError(str(exc))
    _require(args.nmax >= 0, "--nmax must be >= 0")
    report = C.verify_claim(claim, args.nmax)
    return _reports_output("verify", claim.to_dict() | {"nmax": args.nmax}, [report], args.nmax)


def cmd_theorem(args):
    _require(args.lambda_min <= args.lambda_max, "--lambda-min must not exceed --lambda-max")
    _require(args.nmax >= 0, "--nmax must be >= 0")
    reports = C.verify_theorem(args.id, args.lambda_min, args.lambda_max, args.nmax)
    params = {"id": args.id, "lambda_min": args.lambda_min, "lambda_max": args.lambda_max, "nmax": args.nmax}
    return _reports_output("theorem", params, reports, args.nmax)


def _parse_w(text):
    try:
        ws = [int(w) for w in text.split(",") if w.strip()]
    except ValueError:
        raise UsageError(f"--w must be a comma-separated list of primes, got {text!r}")
    _require(ws, "--w must name at least one prime")
    for w in ws:
        _require(w % 6 == 5 and C.is_prime(w), f"--w {w} is not a prime congruent to 5 mod 6")
    return ws


def cmd_identity(args):
    terms = args.terms if args.terms is not None else _default_terms()
    params = {"name": args.name, "terms": terms}
    if args.name == "dissection5":
        _require(terms >= 3, "--terms must be >= 3")
        reports = [C.check_identity_dissection5(terms)]
    elif args.name == "lemma-h5":
        _require(args.k is not None, "lemma-h5 needs --k")
        _require(1 <= args.k <= 4, "--k must be in 1..4")
        _require(terms >= 5, "--terms must be >= 5")
        params["k"] = args.k
        reports = [C.check_lemma_H5(args.k, terms)]
    elif args.name == "frobenius":
        _require(args.p is not None, "frobenius needs --p")
        _require(C.is_prime(args.p), f"--p {args.p} is not prime")
        _require(terms >= 1, "--terms must be >= 1")
        params["p"] = args.p
        reports = [C.check_frobenius(args.p, terms)]
    elif args.name == "jacobi":
        _require(terms >= 1, "--terms must be >= 1")
        reports = [C.check_jacobi(terms)]
    else:
        _require(args.w is not None, "ramanujan-pm4 needs --w")
        ws = _parse_w(args.w)
        _require(args.nmax >= 1, "--nmax must be >= 1")
        params.update(w=ws, nmax=args.nmax)
        del params["terms"]
        reports = C.check_ramanujan_pm4(ws, args.nmax)
        terms = args.nmax
    return _reports_output("identity", params, reports, terms)


def cmd_scan(args):
    _require(any(r != 0 for r in range(args.r_min, args.r_max + 1)), "--r-min..--r-max holds no nonzero r")
    _require(args.A >= 2, "--A must be >= 2")
    _require(args.modulus >= 2, "--modulus must be >= 2")
    _require(args.nmax >= 10, "--nmax must be >= 10")
    claims = C.scan(args.r_min, args.r_max, args.modulus, args.A, args.nmax)
    label = f"candidate to depth {args.nmax}"
    results = [c.to_dict() | {"label": label} for c in claims]
    params = {"r_min": args.r_min, "r_max": args.r_max, "modulus": args.modulus, "A": args.A, "nmax": args.nmax}
    record = OutputRecord("scan", params, results, args.nmax)
    rows = [(f"candidate[{i}]", f"{c} ({label})") for i, c in enumerate(claims)]
    return record, _csv(["field", "value"], rows), EXIT_OK


def cmd_oracle(args):
    _require(args.r != 0, "--r must be nonzero")
    _require(args.n >= 0, "--n must be >= 0")
    try:
        if args.r > 0:
            count = oracle.count_colour_partitions(args.n, args.r)
        else:
            count = oracle.count_signed_distinct(args.n, args.r)
    except oracle.OracleBoundError as exc:
        raise UsageError(str(exc))
    result = {"n": count.n, "r": count.r, "value": str(count.value)}
    if count.r < 0:
        result.update(even=str(count.even_count), odd=str(count.odd_count))
    record = OutputRecord("oracle", {"n": args.n, "r": args.r}, [result], args.n)
    return record, _csv(["n", "value"], [(count.n, count.value)]), EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="qpart", description="Exact q-series engine for p_r(n) congruences.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.set_defaults(func=func)
        return p

    p = add("expand", cmd_expand, "print p_r(0..terms-1)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--terms", type=int)
    p.add_argument("--mod", type=int)

    p = add("verify", cmd_verify, "check p_r(A n + B) = 0 mod M for n <= nmax")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--A", type=int, required=True)
    p.add_argument("--B", type=int, required=True)
    p.add_argument("--M", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)

    p = add("theorem", cmd_theorem, "verify one of the theorem families T1..T5")
    p.add_argument("--id", choices=sorted(C.THEOREMS), required=True)
    p.add_argument("--lambda-min", type=int, required=True)
    p.add_argument("--lambda-max", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)

    p = add("identity", cmd_identity, "check a q-series identity to a given order")
    p.add_argument("--name", choices=IDENTITIES, required=True)
    p.add_argument("--terms", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--w", help="comma-separated primes = 5 mod 6 (ramanujan-pm4)")
    p.add_argument("--nmax", type=int, default=50)

    p = add("scan", cmd_scan, "search for candidate congruences p_r(A n + B) = 0 mod M")
    p.add_argument("--r-min", type=int, required=True)
    p.add_argument("--r-max", type=int, required=True)
    p.add_argument("--modulus", type=int, required=True)
    p.add_argument("--A", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)

    p = add("oracle", cmd_oracle, "brute-force count of p_r(n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad usage and 0 after --help
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        record, csv_text, code = args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"qpart {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InexactDivisionError as exc:
        print(f"qpart {args.command}: internal error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(record.to_json() if args.format == "json" else csv_text)
    return code


if __name__ == "__main__":
    sys.exit(main())
