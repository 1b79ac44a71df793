"""Bessel-type functions: classical, Dunkl, (-1), and second/third Jackson q-Bessel.

Each function comes in two layers: an exact coefficient series (TruncSeries,
rational or complex-rational, used for termwise eigenequation checks) and a
numeric evaluator.  Numeric derivatives are always termwise series
derivatives, never finite differences.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import AccuracyError, ParameterError
from .numerics import ComplexRational, LaurentPoly
from .qseries import HyperSpec, phi

__all__ = [
    "TruncSeries",
    "bessel_norm_series",
    "bessel_norm",
    "bessel_norm_deriv",
    "dunkl_kernel_series",
    "dunkl_kernel",
    "minus1_bessel_series",
    "minus1_bessel",
    "cas",
    "q_bessel3_series",
    "q_bessel3_norm",
    "q_bessel2_series",
    "q_bessel2_norm",
    "jackson_q_bessel",
    "bessel_j",
    "bessel_j_deriv",
    "raising_lowering_check",
    "dunkl_eigen_residual",
    "minus1_eigen_residual",
    "bessel_ode_residual",
    "decomposition_residuals",
    "minus1_dunkl_relation_check",
]

SERIES_CUTOFF = 8.0
DEFAULT_K = 64
DEFAULT_TOL = 1e-12


@dataclass(frozen=True)
class TruncSeries:
    """Truncated power series sum_k coeffs[k] x^k with a coefficient-field tag."""

    coeffs: tuple
    field: str  # "exact" | "real" | "complex"

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def eval(self, x):
        acc = self.coeffs[-1] * (0 * x + 1) * 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_deriv(self, x):
        acc = 0 * x
        for k in range(len(self.coeffs) - 1, 0, -1):
            acc = acc * x + k * self.coeffs[k]
        return acc

    def eval_deriv2(self, x):
        acc = 0 * x
        for k in range(len(self.coeffs) - 1, 1, -1):
            acc = acc * x + k * (k - 1) * self.coeffs[k]
        return acc

    def to_laurent(self, scale=1) -> LaurentPoly:
        """LaurentPoly sum_k coeffs[k] scale^k x^k (f evaluated along scale*x)."""
        return LaurentPoly.from_dict(
            {k: c * scale ** k for k, c in enumerate(self.coeffs)}
        )


def _require_alpha(alpha) -> None:
    if not (float(alpha) > -1.0):
        raise ParameterError("Bessel order must satisfy alpha > -1")


def bessel_norm_series(alpha, K: int = DEFAULT_K) -> TruncSeries:
    """Normalized Bessel series: coefficient of x^(2m) is (-1/4)^m / ((alpha+1)_m m!)."""
    _require_alpha(alpha)
    exact = isinstance(alpha, (int, Fraction))
    one = Fraction(1) if exact else 1.0
    coeffs = [one * 0] * (K + 1)
    term = one
    m = 0
    while 2 * m <= K:
        coeffs[2 * m] = term
        term = term * (-1) / (4 * (alpha + 1 + m) * (m + 1))
        m += 1
    return TruncSeries(tuple(coeffs), "exact" if exact else "real")


def bessel_norm(alpha, x, tol: float = DEFAULT_TOL) -> float:
    """Normalized Bessel function value at real x (entire, even)."""
    _require_alpha(alpha)
    a, t = float(alpha), float(x)
    if abs(t) <= SERIES_CUTOFF:
        total = 1.0
        term = 1.0
        m = 0
        while True:
            term *= -t * t / (4.0 * (a + 1 + m) * (m + 1))
            total += term
            m += 1
            if abs(term) <= tol * (1.0 + abs(total)):
                return total
            if m > 400:
                raise AccuracyError("normalized Bessel series did not converge")
    # large argument: use the Bessel-J route (even in x)
    from scipy.special import gamma, jv

    t = abs(t)
    return float(gamma(a + 1.0) * (2.0 / t) ** a * jv(a, t))


def bessel_norm_deriv(alpha, x, tol: float = DEFAULT_TOL) -> float:
    """d/dx of the normalized Bessel function, by termwise differentiation."""
    _require_alpha(alpha)
    a, t = float(alpha), float(x)
    if abs(t) <= SERIES_CUTOFF:
        term = 1.0
        total = 0.0
        m = 0
        while True:
            term *= -1.0 / (4.0 * (a + 1 + m) * (m + 1))
            m += 1
            contrib = term * 2 * m * t ** (2 * m - 1)
            total += contrib
            if abs(term) * (2 * m) * max(abs(t), 1.0) ** (2 * m - 1) <= tol:
                return total
            if m > 400:
                raise AccuracyError("Bessel derivative series did not converge")
    # identity: J_norm'(x) = -x/(2(alpha+1)) * J_norm_{alpha+1}(x)
    return -t / (2.0 * (a + 1.0)) * bessel_norm(a + 1.0, t, tol)


def dunkl_kernel_series(alpha, K: int = DEFAULT_K) -> TruncSeries:
    """Nonsymmetric Bessel kernel: even part J_alpha, odd part i x/(2(alpha+1)) J_{alpha+1}."""
    _require_alpha(alpha)
    exact = isinstance(alpha, (int, Fraction))
    even = bessel_norm_series(alpha, K)
    odd = bessel_norm_series(alpha + 1, K)
    coeffs = []
    for k in range(K + 1):
        if k % 2 == 0:
            c = even.coeffs[k]
            coeffs.append(ComplexRational(c, Fraction(0)) if exact else complex(c))
        else:
            c = odd.coeffs[k - 1] / (2 * (alpha + 1))
            coeffs.append(
                ComplexRational(Fraction(0), c) if exact else complex(0.0, float(c))
            )
    return TruncSeries(tuple(coeffs), "exact" if exact else "complex")


def dunkl_kernel(alpha, x, tol: float = DEFAULT_TOL) -> complex:
    """E_alpha(x) = J_alpha(x) + i x/(2(alpha+1)) J_{alpha+1}(x)."""
    _require_alpha(alpha)
    a, t = float(alpha), float(x)
    return complex(
        bessel_norm(a, t, tol), t / (2.0 * (a + 1.0)) * bessel_norm(a + 1.0, t, tol)
    )


def minus1_bessel_series(alpha, K: int = DEFAULT_K) -> TruncSeries:
    """Real nonsymmetric Bessel series: J_alpha + x/(2(alpha+1)) J_{alpha+1}."""
    _require_alpha(alpha)
    exact = isinstance(alpha, (int, Fraction))
    even = bessel_norm_series(alpha, K)
    odd = bessel_norm_series(alpha + 1, K)
    coeffs = []
    for k in range(K + 1):
        if k % 2 == 0:
            coeffs.append(even.coeffs[k])
        else:
            coeffs.append(odd.coeffs[k - 1] / (2 * (alpha + 1)))
    return TruncSeries(tuple(coeffs), "exact" if exact else "real")


def minus1_bessel(alpha, x, tol: float = DEFAULT_TOL) -> float:
    _require_alpha(alpha)
    a, t = float(alpha), float(x)
    return bessel_norm(a, t, tol) + t / (2.0 * (a + 1.0)) * bessel_norm(a + 1.0, t, tol)


def cas(x) -> float:
    """Hartley kernel cos x + sin x."""
    return math.cos(x) + math.sin(x)


def q_bessel3_series(a, q, K: int = DEFAULT_K) -> TruncSeries:
    """Coefficients of the normalized third q-Bessel 1-phi-1(0; aq | q; qx)."""
    exact = isinstance(a, (int, Fraction)) and isinstance(q, (int, Fraction))
    one = Fraction(1) if exact else 1.0
    coeffs = [one]
    term = one
    qk = one
    for k in range(K):
        den = (1 - q * qk) * (1 - a * q * qk)
        if den == 0:
            raise ParameterError("(q;q)_k or (aq;q)_k vanished")
        term = term * (-1) * qk * q / den
        qk = qk * q
        coeffs.append(term)
    return TruncSeries(tuple(coeffs), "exact" if exact else "real")


def q_bessel3_norm(x, a, q, tol: float = DEFAULT_TOL) -> float:
    """Numeric normalized third q-Bessel function (|q| < 1)."""
    qf = float(q)
    if not abs(qf) < 1:
        raise ParameterError("q_bessel3_norm needs |q| < 1")
    return float(phi(HyperSpec((0.0,), (float(a) * qf,), qf, qf * float(x)), 300, tol))


def q_bessel2_series(a, q, K: int = DEFAULT_K) -> TruncSeries:
    """Coefficients of the second normalized q-Bessel 0-phi-1(-; qa | q; -qax)."""
    exact = isinstance(a, (int, Fraction)) and isinstance(q, (int, Fraction))
    one = Fraction(1) if exact else 1.0
    coeffs = [one]
    term = one
    qk = one
    for k in range(K):
        den = (1 - q * qk) * (1 - a * q * qk)
        if den == 0:
            raise ParameterError("(q;q)_k or (qa;q)_k vanished")
        # ratio carries ((-1) q^k)^2 = q^(2k) and the argument -qax
        term = term * qk * qk * (-1) * q * a / den
        qk = qk * q
        coeffs.append(term)
    return TruncSeries(tuple(coeffs), "exact" if exact else "real")


def q_bessel2_norm(x, a, q, tol: float = DEFAULT_TOL) -> float:
    qf = float(q)
    if not abs(qf) < 1:
        raise ParameterError("q_bessel2_norm needs |q| < 1")
    af = float(a)
    return float(phi(HyperSpec((), (qf * af,), qf, -qf * af * float(x)), 300, tol))


def _qpoch_ratio_inf(c: float, q: float, tol: float = 1e-15) -> float:
    """(q^c; q)_inf / (q; q)_inf as a product of O(1) factor ratios.

    Immune to the underflow of the individual products as q -> 1; each factor
    1 - q^(k+s) is computed with expm1.
    """
    lq = math.log(q)
    out = 1.0
    k = 0
    while True:
        num = -math.expm1((k + c) * lq)
        den = -math.expm1((k + 1.0) * lq)
        out *= num / den
        k += 1
        if q ** k / (1.0 - q) * 2.0 < tol:
            return out
        if k > 10 ** 6:
            raise AccuracyError("q-Pochhammer ratio did not converge")


def jackson_q_bessel(kind: int, nu, x, q, tol: float = DEFAULT_TOL) -> float:
    """Second or third Jackson q-Bessel function (x > 0, 0 < q < 1)."""
    nu, x, q = float(nu), float(x), float(q)
    if kind not in (2, 3):
        raise ParameterError("kind must be 2 or 3")
    if x <= 0:
        raise ParameterError("Jackson q-Bessel functions need x > 0")
    if not (0 < q < 1):
        raise ParameterError("Jackson q-Bessel functions need 0 < q < 1")
    prefactor = _qpoch_ratio_inf(nu + 1.0, q, tol)
    if kind == 3:
        series = phi(HyperSpec((0.0,), (q ** (nu + 1),), q, q * x * x / 4.0), 400, tol)
    else:
        series = phi(
            HyperSpec((), (q ** (nu + 1),), q, -(q ** (nu + 1)) * x * x / 4.0), 400, tol
        )
    return float(prefactor * (x / 2.0) ** nu * series)


def bessel_j(alpha, x, tol: float = DEFAULT_TOL) -> float:
    """Plain Bessel J via its power series (x > 0; series mode for moderate x)."""
    a, t = float(alpha), float(x)
    if abs(t) <= SERIES_CUTOFF:
        term = (t / 2.0) ** a / math.gamma(a + 1.0)
        total = term
        m = 0
        while True:
            term *= -t * t / (4.0 * (m + 1) * (a + m + 1))
            total += term
            m += 1
            if abs(term) <= tol * (1.0 + abs(total)):
                return total
            if m > 400:
                raise AccuracyError("Bessel J series did not converge")
    from scipy.special import jv

    return float(jv(a, t))


def bessel_j_deriv(alpha, x, tol: float = DEFAULT_TOL) -> float:
    """Termwise derivative of the Bessel J power series."""
    a, t = float(alpha), float(x)
    term = (t / 2.0) ** a / math.gamma(a + 1.0)
    total = term * a / t
    m = 0
    while True:
        term *= -t * t / (4.0 * (m + 1) * (a + m + 1))
        m += 1
        total += term * (2 * m + a) / t
        if abs(term * (2 * m + a) / t) <= tol * (1.0 + abs(total)):
            return total
        if m > 500:
            raise AccuracyError("Bessel J derivative series did not converge")


def raising_lowering_check(alpha, x_samples) -> float:
    """Max residual of the lowering/raising differentiation formulas for J."""
    _require_alpha(alpha)
    a = float(alpha)
    worst = 0.0
    for x in x_samples:
        t = float(x)
        low = bessel_j_deriv(a, t) - (a / t) * bessel_j(a, t) + bessel_j(a + 1, t)
        high = (
            bessel_j_deriv(a + 1, t)
            + ((a + 1) / t) * bessel_j(a + 1, t)
            - bessel_j(a, t)
        )
        worst = max(worst, abs(low), abs(high))
    return worst


def dunkl_eigen_residual(alpha, lam, x, K: int = DEFAULT_K) -> float:
    """|T_alpha E_alpha(lam .)(x) - i lam E_alpha(lam x)| via series differentiation."""
    _require_alpha(alpha)
    a, L, t = float(alpha), float(lam), float(x)
    s = dunkl_kernel_series(a, K)

    def f(u):
        return s.eval(L * u)

    def fprime(u):
        return L * s.eval_deriv(L * u)

    lhs = fprime(t) + (a + 0.5) * (f(t) - f(-t)) / t
    rhs = 1j * L * f(t)
    return abs(lhs - rhs)


def minus1_eigen_residual(alpha, lam, x, K: int = DEFAULT_K) -> float:
    """|Y_alpha J_{alpha,-1}(lam .)(x) - lam J_{alpha,-1}(lam x)|."""
    _require_alpha(alpha)
    a, L, t = float(alpha), float(lam), float(x)
    s = minus1_bessel_series(a, K)

    def f(u):
        return s.eval(L * u)

    lhs = L * s.eval_deriv(-L * t) + (a + 0.5) * (f(t) - f(-t)) / t
    rhs = L * f(t)
    return abs(lhs - rhs)


def bessel_ode_residual(alpha, lam, x, K: int = DEFAULT_K) -> float:
    """Residual of (d^2/dx^2 + (2 alpha + 1)/x d/dx + lam^2) J_alpha(lam x)."""
    _require_alpha(alpha)
    a, L, t = float(alpha), float(lam), float(x)
    s = bessel_norm_series(a, K)
    d2 = L * L * s.eval_deriv2(L * t)
    d1 = L * s.eval_deriv(L * t)
    return abs(d2 + (2 * a + 1) / t * d1 + L * L * s.eval(L * t))


def decomposition_residuals(alpha, lam, x, K: int = DEFAULT_K) -> tuple[float, float]:
    """Even/odd-part residuals of the (-1)-Bessel decomposition.

    even part of J_{alpha,-1}(lam x) vs J_alpha(lam x), and odd part vs
    -(1/lam) d/dx J_alpha(lam x).
    """
    _require_alpha(alpha)
    a, L, t = float(alpha), float(lam), float(x)
    s = minus1_bessel_series(a, K)
    even = 0.5 * (s.eval(L * t) + s.eval(-L * t))
    odd = 0.5 * (s.eval(L * t) - s.eval(-L * t))
    sj = bessel_norm_series(a, K)
    r_even = abs(even - sj.eval(L * t))
    r_odd = abs(odd - (-(1.0 / L) * L * sj.eval_deriv(L * t)))
    return r_even, r_odd


def minus1_dunkl_relation_check(alpha, lam, x_samples):
    """Fit J_{alpha,-1}(lam x) = c1 E_alpha(lam x) + c2 E_alpha(-lam x).

    Returns (fitted (c1, c2), max residual under the fit, max residual under
    the reference constants c1 = (1+i)/2, c2 = (1-i)/2).  The fit is reported
    rather than asserted because the reference constants reproduce the
    reflected function.
    """
    import numpy as np

    _require_alpha(alpha)
    a, L = float(alpha), float(lam)
    rows = []
    rhs = []
    for x in x_samples:
        t = float(x)
        rows.append([dunkl_kernel(a, L * t), dunkl_kernel(a, -L * t)])
        rhs.append(minus1_bessel(a, L * t))
    A = np.array(rows, dtype=complex)
    y = np.array(rhs, dtype=complex)
    sol, *_ = np.linalg.lstsq(A, y, rcond=None)
    c1, c2 = complex(sol[0]), complex(sol[1])
    fit_res = float(np.max(np.abs(A @ sol - y)))
    paper = np.array([0.5 * (1 + 1j), 0.5 * (1 - 1j)], dtype=complex)
    paper_res = float(np.max(np.abs(A @ paper - y)))
    return (c1, c2), fit_res, paper_res
