"""q-Pochhammer symbols, basic hypergeometric series and classical hypergeometric series.

All routines run in two modes selected by the argument types: exact mode
(int/Fraction inputs, exact Fraction output, terminating series only) and
numeric mode (floats/complex, tolerance-controlled truncation).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import AccuracyError, DivergenceError, ParameterError, UnsupportedModeError

__all__ = [
    "HyperSpec",
    "q_pochhammer",
    "q_pochhammer_inf",
    "phi",
    "classical_hyp",
    "pochhammer",
]

DEFAULT_TOL = 1e-14
MAX_TERMS = 20000


def _is_exact(*values) -> bool:
    return all(isinstance(v, (int, Fraction)) for v in values)


def pochhammer(a, n: int):
    """Rising factorial (a)_n = a (a+1) ... (a+n-1)."""
    out = a * 0 + 1
    for k in range(n):
        out *= a + k
    return out


def q_pochhammer(a, q, n):
    """(a; q)_n = prod_{k=0}^{n-1} (1 - a q^k); n may be math.inf in numeric mode.

    For n = inf the product is truncated once the remaining factors are
    provably within DEFAULT_TOL of 1 (requires |q| < 1).
    """
    if n == math.inf:
        if _is_exact(a, q):
            raise UnsupportedModeError("(a; q)_infinity has no exact rational value")
        return q_pochhammer_inf(a, q)
    n = int(n)
    if n < 0:
        raise ParameterError("q-Pochhammer needs n >= 0")
    out = a * 0 + q * 0 + 1
    qk = out
    for _ in range(n):
        out *= 1 - a * qk
        qk *= q
    return out


def q_pochhammer_inf(a, q, tol: float = DEFAULT_TOL):
    """Truncated infinite product with certified multiplicative tail bound.

    Stops at K with 2|a||q|^K/(1-|q|) < tol, which bounds |log tail|.
    """
    aq, qq = complex(a), complex(q)
    if abs(qq) >= 1:
        raise ParameterError("(a; q)_infinity requires |q| < 1")
    out = 1.0 if not (isinstance(a, complex) or isinstance(q, complex)) else 1.0 + 0j
    ak = a * 1.0
    k = 0
    while True:
        bound = 2.0 * abs(complex(ak)) / (1.0 - abs(qq))
        if bound < tol:
            return out
        out = out * (1 - ak)
        ak = ak * q
        k += 1
        if k > 10 ** 6:
            raise AccuracyError("infinite q-product did not reach tolerance")


@dataclass(frozen=True)
class HyperSpec:
    """Data of a basic hypergeometric series r_phi_s(a_1..a_r; b_1..b_s | q; z)."""

    numerator_params: tuple
    denominator_params: tuple
    q: object
    z: object

    def __init__(self, numerator_params: Sequence, denominator_params: Sequence, q, z):
        object.__setattr__(self, "numerator_params", tuple(numerator_params))
        object.__setattr__(self, "denominator_params", tuple(denominator_params))
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "z", z)

    @property
    def is_exact(self) -> bool:
        return _is_exact(
            self.q, self.z, *self.numerator_params, *self.denominator_params
        )

    def termination_index(self, trunc: int) -> int | None:
        """Smallest n with q^-n among the numerator parameters, if n <= trunc."""
        hits = []
        qk = self.q * 0 + 1
        for n in range(trunc + 1):
            # qk == q^n here; a numerator parameter equal to q^-n makes
            # (a; q)_k vanish for every k > n.
            for a in self.numerator_params:
                if a * qk == 1:
                    hits.append(n)
            qk = qk * self.q
        return min(hits) if hits else None


def phi(spec: HyperSpec, trunc: int, tol: float = DEFAULT_TOL):
    """Sum the basic hypergeometric series of `spec` through order `trunc`.

    The term carries the ((-1)^k q^C(k,2))^(1+s-r) balancing factor.  Exact
    mode (all-rational spec) requires a terminating series.  Numeric mode
    stops early once two consecutive partial sums agree to tol and raises
    DivergenceError when terms keep growing.
    """
    if trunc < 1:
        raise ParameterError("trunc must be a positive integer")
    exact = spec.is_exact
    if exact and spec.z != 0 and spec.termination_index(trunc) is None:
        raise UnsupportedModeError(
            "exact mode needs a numerator parameter q^-n with n <= trunc"
        )
    d = 1 + len(spec.denominator_params) - len(spec.numerator_params)
    q, z = spec.q, spec.z
    one = q * 0 + z * 0 + 1
    term = one
    total = term
    qk = one  # q^k
    growth_streak = 0
    prev_abs = None
    for k in range(trunc):
        for a in spec.numerator_params:
            term = term * (1 - a * qk)
        if term == 0:
            break  # terminated exactly; all later terms vanish
        for b in spec.denominator_params:
            factor = 1 - b * qk
            if factor == 0:
                raise ParameterError(
                    f"denominator parameter {b!r} hits q^-{k}: division by zero"
                )
            term = term / factor
        qk1 = qk * q
        factor = 1 - qk1
        if factor == 0:
            raise ParameterError("(q; q)_k vanished: |q| must not be 1")
        term = term / factor
        if d:
            term = term * ((-1) ** d) * qk ** d
        term = term * z
        qk = qk1
        total = total + term
        if not exact:
            t = abs(complex(term))
            s = abs(complex(total))
            if t <= tol * (1.0 + s):
                return total
            if prev_abs is not None and t > prev_abs:
                growth_streak += 1
                if growth_streak >= max(trunc // 2, 8):
                    raise DivergenceError(
                        f"basic hypergeometric terms grew for {growth_streak} consecutive k"
                    )
            else:
                growth_streak = 0
            prev_abs = t
    else:
        if not exact:
            raise AccuracyError(f"series did not stabilize within {trunc} terms")
    return total


def classical_hyp(p_params: Sequence, q_params: Sequence, z, trunc: int, tol: float = DEFAULT_TOL):
    """Generalized hypergeometric sum_k prod(a_i)_k / prod(b_j)_k * z^k / k!.

    Exact mode needs a nonpositive-integer numerator parameter (terminating).
    A denominator Pochhammer reaching zero before termination is an error.
    """
    if trunc < 1:
        raise ParameterError("trunc must be a positive integer")
    exact = _is_exact(z, *p_params, *q_params)
    if exact and z != 0:
        terminating = any(
            isinstance(a, (int, Fraction)) and a <= 0 and a == int(a) for a in p_params
        )
        if not terminating:
            raise UnsupportedModeError(
                "exact classical series needs a nonpositive integer numerator parameter"
            )
    term = z * 0 + 1
    total = term
    for k in range(trunc):
        for a in p_params:
            term = term * (a + k)
        if term == 0:
            break
        for b in q_params:
            factor = b + k
            if factor == 0:
                raise ParameterError(
                    f"denominator parameter {b!r} produced a zero Pochhammer factor"
                )
            term = term / factor
        term = term * z / (k + 1)
        total = total + term
        if not exact and abs(complex(term)) <= tol * (1.0 + abs(complex(total))):
            return total
    else:
        if not exact:
            raise AccuracyError(f"classical series did not stabilize within {trunc} terms")
    return total
