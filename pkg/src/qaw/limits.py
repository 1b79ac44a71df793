"""Empirical certification of the limit transitions between the special-function families.

Each registered case evaluates a source family along a parameter path
approaching the limit and measures the error against a fixed target; it
passes when the errors decrease monotonically and the final error is below
the case tolerance.

Parameters of the form +-exp(t) (the q -> -1 and q -> 1 paths) are kept in
that form (`SExp`) so every Pochhammer factor 1 -+ exp(t) is computed with
expm1, avoiding the catastrophic cancellation a literal evaluation would hit
for small path parameters.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .besselfam import bessel_norm, cas, minus1_bessel, q_bessel2_norm, q_bessel3_norm
from .errors import ParameterError
from .families import (
    jacobi_eval_recurrence,
    laguerre_classical,
    little_q_jacobi,
    minus1_jacobi,
    q_laguerre,
)
from .qseries import q_pochhammer, pochhammer

__all__ = [
    "SExp",
    "one_minus_sexp",
    "sexp_pochhammer",
    "phi_sexp",
    "LimitCase",
    "LimitReport",
    "run_limit",
    "registered_cases",
    "qshifted_limit_check",
    "little_q_jacobi_scaled",
    "diagram_commutativity",
]


# ---------------------------------------------------------------------------
# +-exp(t) arithmetic
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SExp:
    """A number sign * exp(t), kept unevaluated for cancellation-free products."""

    sign: int
    t: float

    def value(self) -> float:
        return self.sign * math.exp(self.t)

    def times_qk(self, q: "SExp", k: int) -> "SExp":
        return SExp(self.sign * (1 if k % 2 == 0 else q.sign), self.t + k * q.t)


def one_minus_sexp(sign: int, t: float) -> float:
    """1 - sign*exp(t); the sign=+1 branch uses expm1 (exact as t -> 0)."""
    if sign > 0:
        return -math.expm1(t)
    return 1.0 + math.exp(t)


def _one_minus(a, q: "SExp", k: int) -> float:
    """1 - a q^k where a is an SExp or a plain number (0 allowed)."""
    if isinstance(a, SExp):
        s = a.sign * (1 if k % 2 == 0 else q.sign)
        return one_minus_sexp(s, a.t + k * q.t)
    if a == 0:
        return 1.0
    qk = (1 if k % 2 == 0 else q.sign) * math.exp(k * q.t)
    return 1.0 - a * qk


def sexp_pochhammer(a, q: SExp, n: int) -> float:
    """(a; q)_n for a an SExp (or number) and q an SExp."""
    out = 1.0
    for j in range(n):
        out *= _one_minus(a, q, j)
    return out


def phi_sexp(
    num: Sequence,
    den: Sequence,
    q: SExp,
    z: float,
    kmax: int,
    tol: float = 1e-16,
) -> float:
    """Basic hypergeometric series with +-exp(t) parameters.

    Terminates exactly when a numerator parameter is q^-n (the factor
    1 - q^-n q^n evaluates to exactly 0.0), and otherwise stops once terms
    are negligible.  Term ratios are built factor by factor so nothing
    overflows even when |q| > 1 transiently on a path.
    """
    d = 1 + len(den) - len(num)
    total = 1.0
    term = 1.0
    for k in range(kmax):
        for a in num:
            term *= _one_minus(a, q, k)
        if term == 0.0:
            break
        for b in den:
            f = _one_minus(b, q, k)
            if f == 0.0:
                raise ParameterError("denominator Pochhammer vanished on the path")
            term /= f
        f = _one_minus(SExp(1, 0.0), q, k + 1)  # 1 - q^(k+1)
        if f == 0.0:
            raise ParameterError("(q;q)_k vanished on the path")
        term /= f
        if d:
            qkd = (1 if (k * d) % 2 == 0 else q.sign) * math.exp(k * d * q.t)
            term *= ((-1) ** d) * qkd
        term *= z
        total += term
        if abs(term) <= tol * (1.0 + abs(total)) and k >= 4:
            break
    return total


def _qn_minus_qj(q: SExp, n: int, j: int) -> float:
    """q^n - q^j without cancellation (signs equal -> expm1 form)."""
    sn = 1 if n % 2 == 0 else q.sign
    sj = 1 if j % 2 == 0 else q.sign
    if sn == sj:
        return sn * math.exp(j * q.t) * math.expm1((n - j) * q.t)
    return sn * math.exp(n * q.t) + (-sj) * math.exp(j * q.t)


def little_q_jacobi_scaled(n: int, u: float, a, b, q) -> float:
    """p_n(q^n u; a, b | q) in the product form that stays stable for large n.

    term_k = prod_{j<k} (q^n - q^j)(1 - a b q^(n+1+j)) (q u)^k / ((q;q)_k (aq;q)_k);
    every factor is O(1), and as n grows the terms go to the third q-Bessel
    series termwise.  Accepts plain floats or SExp parameters.
    """
    sexp_mode = isinstance(q, SExp)
    total = 1.0
    term = 1.0
    kmax = n + 1
    for k in range(kmax):
        if sexp_mode:
            ab_t = a.t + b.t
            ab_sign = a.sign * b.sign
            f1 = _qn_minus_qj(q, n, k)
            f2 = _one_minus(SExp(ab_sign, ab_t), q, n + 1 + k)
            den1 = _one_minus(SExp(1, 0.0), q, k + 1)
            den2 = _one_minus(a, q, k + 1)
            zfac = q.value() * u
        else:
            f1 = q ** n - q ** k
            f2 = 1.0 - a * b * q ** (n + 1 + k)
            den1 = 1.0 - q ** (k + 1)
            den2 = 1.0 - a * q ** (k + 1)
            zfac = q * u
        if den1 == 0.0 or den2 == 0.0:
            raise ParameterError("Pochhammer denominator vanished")
        term *= f1 * f2 * zfac / (den1 * den2)
        total += term
        if abs(term) <= 1e-17 * (1.0 + abs(total)) and k >= 4:
            break
    return total


# ---------------------------------------------------------------------------
# limit harness
# ---------------------------------------------------------------------------

@dataclass
class LimitCase:
    case_id: str
    path: list
    eval_points: list[float]
    source: Callable  # source(path_value, x) -> float
    target: Callable  # target(x) -> float
    tolerance: float
    description: str = ""
    params: dict = field(default_factory=dict)


@dataclass
class LimitReport:
    case_id: str
    params: dict
    path: list
    errors: list[float]
    estimated_rate: float | None
    passed: bool
    strictly_decreasing: bool
    tolerance: float

    def to_json_dict(self) -> dict:
        return {
            "case_id": self.case_id,
            "params": {k: str(v) for k, v in sorted(self.params.items())},
            "path": [str(p) for p in self.path],
            "errors": self.errors,
            "rate": self.estimated_rate,
            "passed": self.passed,
            "strictly_decreasing": self.strictly_decreasing,
            "tolerance": self.tolerance,
        }


def run_limit(case: LimitCase) -> LimitReport:
    """Evaluate the case along its path; passed = decreasing errors + final below tolerance."""
    if len(case.path) < 3:
        raise ParameterError("limit paths need at least 3 points")
    errors = []
    for p in case.path:
        err = max(abs(case.source(p, x) - case.target(x)) for x in case.eval_points)
        errors.append(float(err))
    weakly = all(errors[i + 1] <= errors[i] for i in range(len(errors) - 1))
    strictly = all(errors[i + 1] < errors[i] for i in range(len(errors) - 1))
    rate = None
    if errors[-1] > 0 and errors[0] > 0:
        # mean log-ratio of successive errors (per path step)
        ratios = [
            math.log(errors[i] / errors[i + 1])
            for i in range(len(errors) - 1)
            if errors[i + 1] > 0 and errors[i] > 0
        ]
        if ratios:
            rate = sum(ratios) / len(ratios) / math.log(2.0)
    passed = weakly and errors[-1] < case.tolerance
    return LimitReport(
        case_id=case.case_id,
        params=case.params,
        path=list(case.path),
        errors=errors,
        estimated_rate=rate,
        passed=passed,
        strictly_decreasing=strictly,
        tolerance=case.tolerance,
    )


def _eps_path(start: float = 0.2, count: int = 18) -> list[float]:
    return [start * 2.0 ** (-j) for j in range(count)]


def case_prop_a1(q=Fraction(1, 3), a=Fraction(1, 4), b=Fraction(1, 5)) -> LimitCase:
    """n -> infinity: rescaled little q-Jacobi to the third q-Bessel function."""
    qf, af, bf = float(q), float(a), float(b)

    def source(n, x):
        return little_q_jacobi_scaled(n, x, af, bf, qf)

    return LimitCase(
        case_id="prop_a1",
        path=[4, 8, 16, 24],
        eval_points=[0.2, 1.0, 3.0],
        source=source,
        target=lambda x: q_bessel3_norm(x, af, qf),
        tolerance=1e-5,
        description="rescaled little q-Jacobi -> third q-Bessel as n grows",
        params={"q": q, "a": a, "b": b},
    )


def _bessoula_source(alpha: float):
    def source(eps, x):
        aa = SExp(-1, eps * (2.0 * alpha + 1.0))
        qq = SExp(-1, eps)
        u = -2.0 * eps * x  # argument scaling that keeps the limit finite
        return phi_sexp([0], [aa.times_qk(qq, 1)], qq, qq.value() * u, 400)

    return source


def case_bessoula(alpha: float = 0.25) -> LimitCase:
    """q -> -1 limit of the third q-Bessel function to the (-1)-Bessel function.

    The source argument is rescaled by -2 eps; without that factor the
    unscaled limit diverges like 1/eps (see the elementary q-shifted-factorial
    limits, which contribute one eps per series order).
    """
    return LimitCase(
        case_id="bessoula",
        path=_eps_path(0.2, 18),
        eval_points=[0.3, 1.0, 2.0],
        source=_bessoula_source(alpha),
        target=lambda x: minus1_bessel(alpha, x),
        tolerance=1e-5,
        description="third q-Bessel -> (-1)-Bessel along q = -exp(eps)",
        params={"alpha": alpha},
    )


def case_bessoula_cas() -> LimitCase:
    """The alpha = -1/2 specialization, whose target is the cas function."""
    case = case_bessoula(-0.5)
    return LimitCase(
        case_id="bessoula_cas",
        path=case.path,
        eval_points=case.eval_points,
        source=case.source,
        target=cas,
        tolerance=1e-5,
        description="third q-Bessel -> cas at alpha = -1/2",
        params={"alpha": -0.5},
    )


def case_lqjacobi_to_minus1jacobi(
    n: int = 5, alpha=Fraction(1, 2), beta=Fraction(3, 2)
) -> LimitCase:
    """q -> -1: little q-Jacobi polynomials to little (-1)-Jacobi polynomials."""
    af, bf = float(alpha), float(beta)
    target_poly = minus1_jacobi(n, alpha, beta)

    def source(eps, x):
        qq = SExp(-1, eps)
        aa = SExp(-1, eps * af)
        bb = SExp(-1, eps * bf)
        num = [SExp(1 if n % 2 == 0 else qq.sign, -n * eps), SExp(
            aa.sign * bb.sign * (1 if (n + 1) % 2 == 0 else qq.sign),
            aa.t + bb.t + (n + 1) * eps,
        )]
        den = [aa.times_qk(qq, 1)]
        return phi_sexp(num, den, qq, qq.value() * x, n + 2)

    return LimitCase(
        case_id="lqjacobi_to_minus1jacobi",
        path=_eps_path(0.2, 32),
        eval_points=[-0.8, 0.3, 1.0],
        source=source,
        target=lambda x: float(target_poly(x)),
        tolerance=1e-8,
        description="little q-Jacobi -> little (-1)-Jacobi along q = -exp(eps)",
        params={"n": n, "alpha": alpha, "beta": beta},
    )


def case_jacobi_to_bessel(alpha: float = 0.5, beta: float = 0.25) -> LimitCase:
    """Mehler-Heine: scaled Jacobi polynomials to the normalized Bessel function."""

    def source(n, x):
        arg = 1.0 - x * x / (2.0 * n * n)
        return math.gamma(alpha + 1.0) / n ** alpha * jacobi_eval_recurrence(
            n, alpha, beta, arg
        )

    return LimitCase(
        case_id="jacobi_to_bessel",
        path=[4 ** j for j in range(1, 10)],
        eval_points=[0.4, 1.0, 2.0],
        source=source,
        target=lambda x: bessel_norm(alpha, x),
        tolerance=1e-5,
        description="Jacobi polynomials -> Bessel (n -> infinity, 1/n rate)",
        params={"alpha": alpha, "beta": beta},
    )


def case_lag2(n: int = 4, a=Fraction(1, 4), q=Fraction(1, 3)) -> LimitCase:
    """b -> infinity: little q-Jacobi to q-Laguerre, all arithmetic exact.

    The finite-n prefactor (aq;q)_n/(q;q)_n replaces the divergent infinite
    products, which do not reduce to the q-Laguerre normalization at x = 0.
    """
    target_poly = q_laguerre(n, q, a)
    pref = q_pochhammer(a * q, q, n) / q_pochhammer(q, q, n)
    xs = [Fraction(3, 10), Fraction(1), Fraction(2)]

    def source(b, x):
        p = little_q_jacobi(n, q, a, b)
        return float(pref * p(-x / (q * b)))

    return LimitCase(
        case_id="lag2",
        path=[Fraction(10) ** j for j in range(1, 12)],
        eval_points=xs,
        source=source,
        target=lambda x: float(target_poly(x)),
        tolerance=1e-8,
        description="little q-Jacobi -> q-Laguerre as b -> infinity",
        params={"n": n, "a": a, "q": q},
    )


def case_qlaguerre_to_qbessel2(a=Fraction(1, 4), q=Fraction(1, 3)) -> LimitCase:
    """n -> infinity: normalized q-Laguerre to the second q-Bessel function.

    The source is ((q;q)_n/(aq;q)_n) L_n, removing the prefactor that would
    otherwise converge to (aq;q)_inf/(q;q)_inf instead of 1.
    """
    af, qf = float(a), float(q)

    def source(n, x):
        norm = q_pochhammer(q, q, n) / q_pochhammer(a * q, q, n)
        return float(norm * q_laguerre(n, q, a)(Fraction(x)))

    return LimitCase(
        case_id="qlaguerre_to_qbessel2",
        path=[5, 10, 20],
        eval_points=[Fraction(3, 10), Fraction(1)],
        source=source,
        target=lambda x: q_bessel2_norm(float(x), af, qf),
        tolerance=1e-5,
        description="normalized q-Laguerre -> second q-Bessel as n grows",
        params={"a": a, "q": q},
    )


def case_qlaguerre_to_laguerre(n: int = 4, alpha=Fraction(1, 2)) -> LimitCase:
    """q -> 1 with a = q^alpha: q-Laguerre to the classical Laguerre polynomial.

    The argument carries the standard (1-q) scaling, without which the series
    coefficients diverge.
    """
    af = float(alpha)
    target_poly = laguerre_classical(n, alpha)

    def source(eps, x):
        qq = SExp(1, -eps)  # q = exp(-eps)
        aq = SExp(1, -(af + 1.0) * eps)  # a q = q^(alpha+1)
        pref = sexp_pochhammer(aq, qq, n) / sexp_pochhammer(SExp(1, 0.0).times_qk(qq, 1), qq, n)
        one_minus_q = one_minus_sexp(1, -eps)
        z = -math.exp(-(af + n + 1.0) * eps) * one_minus_q * x
        series = phi_sexp([SExp(1, n * eps)], [aq], qq, z, n + 2)
        return pref * series

    return LimitCase(
        case_id="qlaguerre_to_laguerre",
        path=_eps_path(0.2, 29),
        eval_points=[0.4, 1.0, 3.0],
        source=source,
        target=lambda x: float(target_poly(x)),
        tolerance=1e-8,
        description="q-Laguerre -> Laguerre along q = exp(-eps), a = q^alpha",
        params={"n": n, "alpha": alpha},
    )


def case_qbessel3_classical(alpha: float = 0.5) -> LimitCase:
    """q -> 1: third q-Bessel at argument (1-q)^2 x to the Bessel function at 2 sqrt(x)."""

    def source(eps, x):
        qq = SExp(1, -eps)
        aq = SExp(1, -(alpha + 1.0) * eps)
        one_minus_q = one_minus_sexp(1, -eps)
        z = qq.value() * one_minus_q * one_minus_q * x
        return phi_sexp([0], [aq], qq, z, 400)

    return LimitCase(
        case_id="qbessel3_classical",
        path=_eps_path(0.2, 18),
        eval_points=[0.2, 0.7, 1.5],
        source=source,
        target=lambda x: bessel_norm(alpha, 2.0 * math.sqrt(x)),
        tolerance=1e-5,
        description="third q-Bessel -> Bessel along q = exp(-eps), a = q^alpha",
        params={"alpha": alpha},
    )


def registered_cases() -> dict[str, LimitCase]:
    cases = [
        case_prop_a1(),
        case_bessoula(),
        case_bessoula_cas(),
        case_lqjacobi_to_minus1jacobi(),
        case_jacobi_to_bessel(),
        case_lag2(),
        case_qlaguerre_to_qbessel2(),
        case_qlaguerre_to_laguerre(),
        case_qbessel3_classical(),
    ]
    return {c.case_id: c for c in cases}


# ---------------------------------------------------------------------------
# q-shifted-factorial elementary limits and the diagram cross-check
# ---------------------------------------------------------------------------

def qshifted_limit_check(alpha: float, n: int, eps_path: Sequence[float] | None = None) -> LimitReport:
    """The two elementary limits of eps-scaled q-shifted factorials at q = -exp(eps).

    eps^-floor(n/2) (-e^(eps alpha); -e^eps)_n -> (-1)^floor(n/2) 2^n ((alpha+1)/2)_floor(n/2)
    eps^-floor((n+1)/2) (e^(eps alpha); -e^eps)_n -> (-1)^floor((n+1)/2) 2^n (alpha/2)_floor((n+1)/2)
    """
    if n > 12:
        raise ParameterError("q-shifted limit check supports n <= 12")
    if eps_path is None:
        eps_path = _eps_path(0.1, 26)
    h1 = n // 2
    h2 = (n + 1) // 2
    rhs1 = (-1.0) ** h1 * 2.0 ** n * float(pochhammer((alpha + 1.0) / 2.0, h1))
    rhs2 = (-1.0) ** h2 * 2.0 ** n * float(pochhammer(alpha / 2.0, h2))
    errors = []
    for eps in eps_path:
        qq = SExp(-1, eps)
        lhs1 = eps ** (-h1) * sexp_pochhammer(SExp(-1, eps * alpha), qq, n)
        lhs2 = eps ** (-h2) * sexp_pochhammer(SExp(1, eps * alpha), qq, n)
        errors.append(float(max(abs(lhs1 - rhs1), abs(lhs2 - rhs2))))
    weakly = all(errors[i + 1] <= errors[i] for i in range(len(errors) - 1))
    strictly = all(errors[i + 1] < errors[i] for i in range(len(errors) - 1))
    tol = 1e-6 * max(1.0, abs(rhs1), abs(rhs2))
    return LimitReport(
        case_id=f"qshifted_n{n}",
        params={"alpha": alpha, "n": n},
        path=list(eps_path),
        errors=errors,
        estimated_rate=None,
        passed=weakly and errors[-1] < tol,
        strictly_decreasing=strictly,
        tolerance=tol,
    )


def diagram_commutativity(alpha: float = 0.25, beta: float = 2.0, xs=(0.4, 1.0)) -> dict:
    """Both in-scope routes of the limit diagram against the (-1)-Bessel target.

    Route A follows the polynomial corner (little q-Jacobi at large n with the
    q^n rescaling, evaluated inside the unit disk at q = -exp(-eps)); route B
    is the third q-Bessel function on the same path.  Both must approach
    J_{alpha,-1} as eps shrinks, and each other.
    """
    eps_path = [0.1 * 2.0 ** (-j) for j in range(7)]
    err_a, err_b, gap = [], [], []
    for eps in eps_path:
        qq = SExp(-1, -eps)
        aa = SExp(-1, -(2.0 * alpha + 1.0) * eps)
        bb = SExp(-1, -beta * eps)
        n = int(math.ceil(12.0 / eps))
        worst_a = worst_b = worst_gap = 0.0
        for x in xs:
            u = 2.0 * eps * x  # -2 (-eps) x: same scaling as the bessoula case
            va = little_q_jacobi_scaled(n, u, aa, bb, qq)
            vb = phi_sexp([0], [aa.times_qk(qq, 1)], qq, qq.value() * u, 400)
            t = minus1_bessel(alpha, x)
            worst_a = max(worst_a, abs(va - t))
            worst_b = max(worst_b, abs(vb - t))
            worst_gap = max(worst_gap, abs(va - vb))
        err_a.append(worst_a)
        err_b.append(worst_b)
        gap.append(worst_gap)
    return {
        "eps_path": eps_path,
        "route_polynomial_errors": err_a,
        "route_qbessel_errors": err_b,
        "route_gap": gap,
        "passed": err_a[-1] < 1e-3 and err_b[-1] < 1e-3 and gap[-1] < 1e-4,
    }
