"""Command-line front end.

Subcommands: roots, order, kp, calibrate, verify {ringel, baumann, mackey,
reflection, evenness}, count {fibers, z}.  Output is deterministic; exit code
0 on success, 1 when a verification fails or a cap is exceeded, 2 on usage
errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .convex_order import adapted_order, build_order, pairing_sign_report
from .errors import CalibrationError, CapExceeded, VerificationError
from .fields import RATIONALS, galois_field
from .flag_fibers import (
    fiber_point_count,
    interpolate_fiber_polynomial,
    z_point_count,
)
from .geometry import baumann_check, calibrate, default_test_nus, ringel_check
from .kostant import (
    OrientationLedger,
    enumerate_kp,
    hasse_dot,
    mackey_dominance_check,
)
from .pbw import in_ker_locus, order_compat, verify_reflection
from .quivers import parse_quiver_file, sinks
from .reps import rep_of_kp
from .root_system import cartan_datum, positive_roots

DEFAULT_Q_LIST = (2, 3, 4, 5, 7, 8, 9, 11, 13)


class _UsageError(Exception):
    pass


def _load_quiver(path: str):
    return parse_quiver_file(Path(path).read_text())


def _load_ledger(path: str | None) -> OrientationLedger:
    if path is None:
        raise _UsageError("this command needs --ledger (run `calibrate` first)")
    return OrientationLedger.from_json(Path(path).read_text())


def _parse_nu(text: str, datum) -> tuple[int, ...]:
    try:
        nu = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise _UsageError(f"bad dimension vector {text!r}") from exc
    if len(nu) != datum.n or any(x < 0 for x in nu):
        raise _UsageError(f"dimension vector needs {datum.n} non-negative entries")
    return nu


def _nu_sweep(datum, max_total: int):
    import itertools

    for total in range(0, max_total + 1):
        for nu in itertools.product(range(total + 1), repeat=datum.n):
            if sum(nu) == total:
                yield nu


def _cmd_roots(args) -> int:
    datum = cartan_datum(args.type)
    for root in positive_roots(datum):
        print(" ".join(str(c) for c in root))
    return 0


def _cmd_order(args) -> int:
    datum = cartan_datum(args.type)
    if (args.word is None) == (args.adapted is None):
        raise _UsageError("give exactly one of WORD or --adapted QUIVERFILE")
    if args.adapted is not None:
        Q = _load_quiver(args.adapted)
        if Q.datum != datum:
            raise _UsageError("quiver file type does not match TYPE")
        order = adapted_order(Q)
    else:
        try:
            word = tuple(int(x) for x in args.word.split(","))
        except ValueError as exc:
            raise _UsageError(f"bad word {args.word!r}") from exc
        order = build_order(datum, word)
    print("word: " + " ".join(str(i) for i in order.word))
    print("beta:")
    for k, b in enumerate(order.beta):
        print(f"  {k + 1}\t" + " ".join(str(c) for c in b))
    print("gamma:")
    for k, g in enumerate(order.gamma):
        print(f"  {k + 1}\t" + " ".join(str(c) for c in g))
    print("C:")
    for row in order.pairings:
        print("\t".join(str(v) for v in row))
    report = pairing_sign_report(order)
    print(f"sign violations: {len(report.violations)}")
    return 0 if report.ok else 1


def _cmd_kp(args) -> int:
    Q = _load_quiver(args.quiver)
    datum = Q.datum
    nu = _parse_nu(args.nu, datum)
    order = adapted_order(Q)
    kps = enumerate_kp(datum, nu, order)
    for lam in kps:
        parts = ", ".join(
            "(" + " ".join(str(c) for c in b) + ")" for b in lam.parts()
        )
        print(" ".join(str(c) for c in lam.counts) + "\t" + parts)
    print(f"kpf: {len(kps)}")
    if args.hasse is not None:
        ledger = _load_ledger(args.ledger)
        dot = hasse_dot(datum, nu, order, ledger, cap=args.cap)
        Path(args.hasse).write_text(dot)
        print(f"hasse: wrote {args.hasse}")
    return 0


def _cmd_calibrate(args) -> int:
    Q = _load_quiver(args.quiver)
    datum = Q.datum
    order = adapted_order(Q)
    ledger = calibrate(datum, Q, order, default_test_nus(datum, args.nu_max))
    print(f"order_direction: {ledger.order_direction}")
    print(f"hom_formula_direction: {ledger.hom_formula_direction}")
    print(f"res_large_side: {ledger.res_large_side}")
    if args.out is not None:
        Path(args.out).write_text(ledger.to_json() + "\n")
        print(f"ledger: wrote {args.out}")
    return 0


def _cmd_verify(args) -> int:
    Q = _load_quiver(args.quiver)
    datum = Q.datum
    order = adapted_order(Q)
    failures = 0
    checks = 0

    def note(ok: bool, desc: str) -> None:
        nonlocal failures, checks
        checks += 1
        if not ok:
            failures += 1
        print(("ok" if ok else "FAIL") + f": {desc}")

    if args.check == "ringel":
        report = ringel_check(datum, Q, order)
        note(True, f"hom formula direction: {report.direction}")
    elif args.check == "baumann":
        ledger = _load_ledger(args.ledger)
        for nu in _nu_sweep(datum, args.nu_max):
            note(
                baumann_check(datum, Q, order, nu, ledger),
                f"partition order equals closure order at nu={nu}",
            )
    elif args.check == "mackey":
        ledger = _load_ledger(args.ledger)
        for nu in _nu_sweep(datum, args.nu_max):
            for m in enumerate_kp(datum, nu, order):
                report = mackey_dominance_check(m, ledger, cap=args.cap)
                note(
                    not report.violations,
                    f"achievable partitions dominate m={m.counts} at nu={nu}",
                )
    elif args.check == "reflection":
        ledger = _load_ledger(args.ledger)
        fields = (galois_field(2), galois_field(3), RATIONALS)
        for nu in _nu_sweep(datum, args.nu_max):
            for i in sinks(Q):
                for lam in enumerate_kp(datum, nu, order):
                    if not in_ker_locus(lam, i):
                        continue
                    for F in fields:
                        note(
                            verify_reflection(i, lam, F),
                            f"reflection at {i} matches on {lam.counts} over {F!r}",
                        )
                note(
                    order_compat(i, nu, order, ledger),
                    f"order compatible with reflection at {i}, nu={nu}",
                )
    elif args.check == "evenness":
        q_list = _parse_q_list(args.q_list)
        for nu in _nu_sweep(datum, args.nu_max):
            for lam in enumerate_kp(datum, nu, order):
                report = interpolate_fiber_polynomial(lam, q_list)
                note(
                    report.verdict == "consistent-with-even",
                    f"fiber counts of {lam.counts} interpolate ({report.verdict})",
                )
    print(f"{checks - failures}/{checks} checks passed")
    return 0 if failures == 0 else 1


def _parse_q_list(text: str | None):
    if text is None:
        return DEFAULT_Q_LIST
    try:
        qs = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise _UsageError(f"bad q list {text!r}") from exc
    for q in qs:
        galois_field(q)
    return qs


def _cmd_count(args) -> int:
    Q = _load_quiver(args.quiver)
    datum = Q.datum
    nu = _parse_nu(args.nu, datum)
    order = adapted_order(Q)
    qs = _parse_q_list(args.q)
    if args.what == "fibers":
        print("lambda\tq\tcount")
        for lam in enumerate_kp(datum, nu, order):
            for q in qs:
                M = rep_of_kp(lam, galois_field(q))
                print(
                    " ".join(str(c) for c in lam.counts)
                    + f"\t{q}\t{fiber_point_count(M)}"
                )
    else:
        print("nu\tq\tcount")
        for q in qs:
            print(
                " ".join(str(c) for c in nu) + f"\t{q}\t{z_point_count(datum, Q, nu, q)}"
            )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quiver-orders",
        description="Convex orders, Kostant partitions, quiver orbits, and point counts",
    )
    parser.add_argument(
        "--seed", type=int, default=None, help="accepted and ignored; output is deterministic"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", help="positive roots of a type")
    p.add_argument("type")
    p.set_defaults(func=_cmd_roots)

    p = sub.add_parser("order", help="convex order data of a reduced word of w0")
    p.add_argument("type")
    p.add_argument("word", nargs="?", default=None, help="comma-separated letters")
    p.add_argument("--adapted", metavar="QUIVERFILE", default=None)
    p.set_defaults(func=_cmd_order)

    p = sub.add_parser("kp", help="Kostant partitions of a dimension vector")
    p.add_argument("quiver")
    p.add_argument("nu", help="comma-separated dimension vector")
    p.add_argument("--hasse", metavar="OUT.dot", default=None)
    p.add_argument("--ledger", default=None)
    p.add_argument("--cap", type=int, default=200)
    p.set_defaults(func=_cmd_kp)

    p = sub.add_parser("calibrate", help="fix order/hom/restriction conventions")
    p.add_argument("quiver")
    p.add_argument("--out", default=None, help="write the ledger JSON here")
    p.add_argument("--nu-max", type=int, default=3)
    p.set_defaults(func=_cmd_calibrate)

    p = sub.add_parser("verify", help="run a verification sweep")
    p.add_argument(
        "check", choices=("ringel", "baumann", "mackey", "reflection", "evenness")
    )
    p.add_argument("quiver")
    p.add_argument("--ledger", default=None)
    p.add_argument("--nu-max", type=int, default=4)
    p.add_argument("--q-list", default=None, help="comma-separated prime powers")
    p.add_argument("--cap", type=int, default=1_000_000)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("count", help="point counts over finite fields")
    p.add_argument("what", choices=("fibers", "z"))
    p.add_argument("quiver")
    p.add_argument("nu")
    p.add_argument("--q", default=None, help="comma-separated prime powers")
    p.set_defaults(func=_cmd_count)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (FileNotFoundError, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (CapExceeded, CalibrationError, VerificationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
