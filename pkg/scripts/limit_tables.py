#!/usr/bin/env python3
"""Print the error-decay table of every registered limit case.

A quick way to eyeball convergence rates: each row is one path point with
its max error over the evaluation grid.
"""
import sys

from qaw.limits import diagram_commutativity, qshifted_limit_check, registered_cases, run_limit


def main() -> int:
    ok = True
    for cid, case in sorted(registered_cases().items()):
        rep = run_limit(case)
        ok &= rep.passed
        print(f"\n{cid}  (tolerance {rep.tolerance:.0e}, rate ~2^{rep.estimated_rate:.2f}/step)"
              if rep.estimated_rate else f"\n{cid}")
        for p, e in zip(rep.path, rep.errors):
            print(f"  {str(p):>24}  {e:.3e}")
        print(f"  -> {'PASS' if rep.passed else 'FAIL'}")

    print("\nq-shifted factorial limits (alpha = 0.7):")
    for n in range(9):
        rep = qshifted_limit_check(0.7, n)
        ok &= rep.passed
        print(f"  n={n}: final {rep.errors[-1]:.3e}  {'PASS' if rep.passed else 'FAIL'}")

    d = diagram_commutativity()
    print("\nlimit-diagram commutativity (both routes to the (-1)-Bessel target):")
    for eps, ea, eb, g in zip(
        d["eps_path"], d["route_polynomial_errors"], d["route_qbessel_errors"], d["route_gap"]
    ):
        print(f"  eps={eps:9.2e}  polynomial {ea:.2e}  q-Bessel {eb:.2e}  gap {g:.2e}")
    ok &= d["passed"]
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
