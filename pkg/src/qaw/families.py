"""Exact construction of the polynomial families and their verification data.

Coefficients are always exact (terminating hypergeometric sums over
Fractions); numeric evaluation goes through poly_eval.  Orthogonality sums
are numeric with a certified geometric tail bound.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParameterError
from .numerics import LaurentPoly, poly_eval
from .qseries import pochhammer, q_pochhammer, q_pochhammer_inf

__all__ = [
    "PolyFamilyInstance",
    "little_q_jacobi",
    "q_laguerre",
    "minus1_jacobi",
    "jacobi_classical",
    "laguerre_classical",
    "little_q_jacobi_eigenvalue",
    "minus1_jacobi_eigenvalue",
    "q_laguerre_eigenvalue",
    "orthogonality_sum",
    "orthogonality_rhs",
    "jacobi_eval_recurrence",
]


@dataclass(frozen=True)
class PolyFamilyInstance:
    family: str
    n: int
    params: dict
    coeffs: LaurentPoly

    def __call__(self, x):
        return poly_eval(self.coeffs, x)

    def to_json_dict(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "params": {k: str(v) for k, v in sorted(self.params.items())},
            "coeffs": [
                [d, c.numerator, c.denominator] for d, c in self.coeffs.items()
            ],
        }


def _frac(v) -> Fraction:
    if isinstance(v, (int, Fraction)):
        return Fraction(v)
    raise ParameterError(f"exact rational expected, got {v!r}")


def little_q_jacobi(n: int, q, a, b) -> PolyFamilyInstance:
    """p_n(x; a, b | q): terminating 2-phi-1 with argument qx, constant term 1."""
    q, a, b = _frac(q), _frac(a), _frac(b)
    if q in (0, 1, -1):
        raise ParameterError("q must avoid {0, 1, -1}")
    coeffs = {}
    term = Fraction(1)
    qk = Fraction(1)  # q^k
    qmn = q ** (-n)   # q^(-n) * q^k, updated per step
    abq = a * b * q ** (n + 1)
    for k in range(n + 1):
        coeffs[k] = term
        den = (1 - q * qk) * (1 - a * q * qk)
        if den == 0:
            raise ParameterError("Pochhammer denominator vanished in little q-Jacobi")
        term = term * (1 - qmn * qk) * (1 - abq * qk) / den * q
        qk *= q
    return PolyFamilyInstance(
        "little_q_jacobi", n, {"q": q, "a": a, "b": b}, LaurentPoly.from_dict(coeffs)
    )


def little_q_jacobi_eigenvalue(n: int, q, a, b) -> Fraction:
    q, a, b = _frac(q), _frac(a), _frac(b)
    return q ** (-n) * (1 - q ** n) * (1 - a * b * q ** (n + 1))


def q_laguerre(n: int, q, a) -> PolyFamilyInstance:
    """L_n(x, a; q) = ((aq;q)_n/(q;q)_n) 1-phi-1(q^-n; aq | q; -a q^(n+1) x)."""
    q, a = _frac(q), _frac(a)
    if q in (0, 1, -1):
        raise ParameterError("q must avoid {0, 1, -1}")
    den_n = q_pochhammer(q, q, n)
    num_n = q_pochhammer(a * q, q, n)
    if den_n == 0 or num_n == 0:
        raise ParameterError("(q;q)_n or (aq;q)_n vanished")
    prefactor = num_n / den_n
    coeffs = {}
    term = Fraction(1)
    qk = Fraction(1)
    qmn = q ** (-n)
    z = a * q ** (n + 1)  # series argument is -z x; the (-1)^k q^C(k,2) factor flips the sign back
    for k in range(n + 1):
        coeffs[k] = prefactor * term
        den = (1 - q * qk) * (1 - a * q * qk)
        if den == 0:
            raise ParameterError("Pochhammer denominator vanished in q-Laguerre")
        term = term * (1 - qmn * qk) / den * qk * z
        qk *= q
    return PolyFamilyInstance(
        "q_laguerre", n, {"q": q, "a": a}, LaurentPoly.from_dict(coeffs)
    )


def q_laguerre_eigenvalue(n: int, q, a) -> Fraction:
    q, a = _frac(q), _frac(a)
    return -a * (1 - q ** n)


def minus1_jacobi_eigenvalue(n: int, alpha, beta) -> Fraction:
    alpha, beta = _frac(alpha), _frac(beta)
    if n % 2 == 0:
        return Fraction(-n)
    return alpha + beta + n + 1


def _hyp2f1_square_arg(a: Fraction, b: Fraction, c: Fraction, terms: int) -> dict[int, Fraction]:
    """Coefficients (in x) of the terminating 2F1(a, b; c; x^2)."""
    coeffs = {}
    term = Fraction(1)
    for j in range(terms):
        coeffs[2 * j] = term
        den = (c + j) * (j + 1)
        if den == 0:
            raise ParameterError(f"zero Pochhammer denominator at c = {c}, j = {j}")
        term = term * (a + j) * (b + j) / den
    return coeffs


def minus1_jacobi(n: int, alpha, beta) -> PolyFamilyInstance:
    """Little (-1)-Jacobi polynomial from its even/odd hypergeometric pieces."""
    alpha, beta = _frac(alpha), _frac(beta)
    if alpha + 1 == 0:
        raise ParameterError("alpha = -1 gives a vanishing denominator")
    half = Fraction(1, 2)
    if n % 2 == 0:
        m = n // 2
        even = _hyp2f1_square_arg(
            Fraction(-m), (alpha + beta + n + 2) * half, (alpha + 1) * half, m + 1
        )
        odd = _hyp2f1_square_arg(
            Fraction(1 - m), (alpha + beta + n + 2) * half, (alpha + 3) * half, max(m, 1)
        )
        odd_scale = Fraction(n) / (alpha + 1)
    else:
        m = (n - 1) // 2
        even = _hyp2f1_square_arg(
            Fraction(-m), (alpha + beta + n + 1) * half, (alpha + 1) * half, m + 1
        )
        odd = _hyp2f1_square_arg(
            Fraction(-m), (alpha + beta + n + 3) * half, (alpha + 3) * half, m + 1
        )
        odd_scale = -(alpha + beta + n + 1) / (alpha + 1)
    coeffs: dict[int, Fraction] = dict(even)
    for d, c in odd.items():
        coeffs[d + 1] = coeffs.get(d + 1, Fraction(0)) + odd_scale * c
    return PolyFamilyInstance(
        "minus1_jacobi", n, {"alpha": alpha, "beta": beta}, LaurentPoly.from_dict(coeffs)
    )


def jacobi_classical(n: int, alpha, beta) -> PolyFamilyInstance:
    """P_n^(alpha,beta) via ((alpha+1)_n/n!) 2F1(-n, n+alpha+beta+1; alpha+1; (1-x)/2)."""
    alpha, beta = _frac(alpha), _frac(beta)
    pref = pochhammer(alpha + 1, n) / Fraction(math.factorial(n))
    coeffs: dict[int, Fraction] = {}
    term = pref
    for k in range(n + 1):
        # term is the coefficient of ((1-x)/2)^k; expand binomially
        for j in range(k + 1):
            c = term * Fraction(math.comb(k, j)) * Fraction((-1) ** j, 2 ** k)
            coeffs[j] = coeffs.get(j, Fraction(0)) + c
        den = (alpha + 1 + k) * (k + 1)
        if den == 0:
            raise ParameterError("zero denominator in Jacobi expansion")
        term = term * (Fraction(-n) + k) * (n + alpha + beta + 1 + k) / den
    return PolyFamilyInstance(
        "jacobi", n, {"alpha": alpha, "beta": beta}, LaurentPoly.from_dict(coeffs)
    )


def laguerre_classical(n: int, alpha) -> PolyFamilyInstance:
    """L_n^alpha = ((alpha+1)_n/n!) 1F1(-n; alpha+1; x)."""
    alpha = _frac(alpha)
    pref = pochhammer(alpha + 1, n) / Fraction(math.factorial(n))
    coeffs = {}
    term = pref
    for k in range(n + 1):
        coeffs[k] = term
        den = (alpha + 1 + k) * (k + 1)
        if den == 0:
            raise ParameterError("zero denominator in Laguerre expansion")
        term = term * (Fraction(-n) + k) / den
    return PolyFamilyInstance(
        "laguerre", n, {"alpha": alpha}, LaurentPoly.from_dict(coeffs)
    )


def orthogonality_rhs(n: int, q, a, b) -> Fraction:
    """Closed-form diagonal value of the little q-Jacobi orthogonality sum."""
    q, a, b = _frac(q), _frac(a), _frac(b)
    num = (
        (1 - a * b * q)
        * (a * q) ** n
        * q_pochhammer(q, q, n)
        * q_pochhammer(b * q, q, n)
    )
    den = (
        (1 - a * b * q ** (2 * n + 1))
        * q_pochhammer(a * q, q, n)
        * q_pochhammer(a * b * q, q, n)
    )
    return num / den


def orthogonality_sum(m: int, n: int, q, a, b, trunc_K: int = 200):
    """Little q-Jacobi orthogonality sum over the q-lattice, with tail bound.

    Returns (value, tail_bound): the prefactored sum over k < trunc_K and a
    rigorous bound on the dropped tail (the weight decays like (aq)^k).
    """
    qf, af, bf = float(q), float(a), float(b)
    if not (0 < qf < 1):
        raise ParameterError("orthogonality needs 0 < q < 1")
    if not (0 < af < 1 / qf) or not (bf < 1 / qf):
        raise ParameterError("orthogonality needs 0 < a < 1/q and b < 1/q")
    pm = little_q_jacobi(m, q, a, b)
    pn = little_q_jacobi(n, q, a, b)
    prefactor = q_pochhammer_inf(af * qf, qf) / q_pochhammer_inf(af * bf * qf * qf, qf)
    total = 0.0
    weight = 1.0  # (aq)^k (bq; q)_k / (q; q)_k
    qk = 1.0
    for _ in range(trunc_K):
        total += float(pm(qk)) * float(pn(qk)) * weight
        weight *= af * qf * (1.0 - bf * qf * qk) / (1.0 - qf * qk)
        qk *= qf
    # tail: |p(q^k)| <= sum of |coeffs|; (bq;q)_k/(q;q)_k bounded uniformly
    bound_m = sum(abs(float(c)) for _, c in pm.coeffs.items())
    bound_n = sum(abs(float(c)) for _, c in pn.coeffs.items())
    ratio_bound = math.exp(abs(bf) * qf / (1.0 - qf)) / q_pochhammer_inf(qf, qf)
    aq = af * qf
    tail = bound_m * bound_n * ratio_bound * aq ** trunc_K / (1.0 - aq)
    return prefactor * total, abs(prefactor) * tail


def jacobi_eval_recurrence(n: int, alpha: float, beta: float, x: float) -> float:
    """Float evaluation of P_n^(alpha,beta)(x) by the three-term recurrence.

    Exists for the large-n limit harness, where exact coefficients would be
    astronomically large.
    """
    if n == 0:
        return 1.0
    pkm1 = 1.0
    pk = (alpha + 1.0) + (alpha + beta + 2.0) * (x - 1.0) / 2.0
    for k in range(1, n):
        a1 = 2.0 * (k + 1.0) * (k + alpha + beta + 1.0) * (2.0 * k + alpha + beta)
        a2 = (2.0 * k + alpha + beta + 1.0) * (alpha * alpha - beta * beta)
        a3 = (
            (2.0 * k + alpha + beta)
            * (2.0 * k + alpha + beta + 1.0)
            * (2.0 * k + alpha + beta + 2.0)
        )
        a4 = 2.0 * (k + alpha) * (k + beta) * (2.0 * k + alpha + beta + 2.0)
        pkp1 = ((a2 + a3 * x) * pk - a4 * pkm1) / a1
        pkm1, pk = pk, pkp1
    return pk
