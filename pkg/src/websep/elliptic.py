"""Jacobi elliptic functions and the complete elliptic integral K.

The second argument of every function here is the *modulus* ``a`` (not the
parameter m = a**2), so the defining identities are::

    sn(u;a)**2 + cn(u;a)**2 = 1
    dn(u;a)**2 + a**2 * sn(u;a)**2 = 1

and the complementary modulus ``b`` satisfies a**2 + b**2 = 1. Everything is
evaluated with the arithmetic-geometric mean; sn/cn/dn use the descending
Landen back-recurrence on the amplitude (DLMF 22.20(ii)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, PoleError

__all__ = [
    "Modulus",
    "complete_K",
    "jacobi_sncndn",
    "jacobi_glyph",
    "GLYPH_NAMES",
    "POLE_TOL",
]

# |den| below this in a quotient glyph counts as hitting the pole
POLE_TOL = 1e-12

# successive AGM means must agree to this relative tolerance
_AGM_TOL = 1e-15

# a below this is treated as the circular degeneration sn=sin, cn=cos, dn=1
_SMALL_MODULUS = 1e-10

_MODULUS_SLACK = 5e-15  # ulp-scale slack on a**2 + b**2 = 1


@dataclass(frozen=True)
class Modulus:
    """A modulus/complementary-modulus pair with a**2 + b**2 = 1."""

    a: float
    b: float

    def __post_init__(self) -> None:
        if not (0.0 < self.a < 1.0 and 0.0 < self.b < 1.0):
            raise DomainError(f"modulus pair out of range: a={self.a}, b={self.b}")
        if abs(self.a**2 + self.b**2 - 1.0) > _MODULUS_SLACK:
            raise DomainError(
                f"a^2 + b^2 = {self.a**2 + self.b**2!r} violates the unit constraint"
            )

    @classmethod
    def from_a(cls, a: float) -> "Modulus":
        if not 0.0 < a < 1.0:
            raise DomainError(f"modulus must lie in (0, 1), got {a}")
        return cls(a, math.sqrt(1.0 - a * a))


def _agm(x: float, y: float) -> float:
    while abs(x - y) > _AGM_TOL * abs(x):
        x, y = 0.5 * (x + y), math.sqrt(x * y)
    return 0.5 * (x + y)


def complete_K(a: float) -> float:
    """Complete elliptic integral of the first kind, K(a) = pi / (2 agm(1, b))."""
    if not 0.0 <= a < 1.0:
        raise DomainError(f"complete_K needs 0 <= a < 1, got {a}")
    return math.pi / (2.0 * _agm(1.0, math.sqrt((1.0 - a) * (1.0 + a))))


def jacobi_sncndn(u: float, a: float) -> tuple[float, float, float]:
    """Evaluate (sn, cn, dn)(u; a) for real u and modulus 0 <= a < 1.

    Bulirsch's AGM ladder with descending Landen back-substitution; it stays
    accurate through the quarter periods where the bare amplitude recurrence
    degenerates to 0/0.
    """
    if not 0.0 <= a < 1.0:
        raise DomainError(f"modulus must satisfy 0 <= a < 1, got {a}")
    if a < _SMALL_MODULUS:
        return math.sin(u), math.cos(u), 1.0

    # reduce modulo the full period; the ladder multiplies u by the AGM scale,
    # which loses accuracy for very large arguments
    u = math.remainder(u, 4.0 * complete_K(a))

    emc = (1.0 - a) * (1.0 + a)  # complementary parameter b**2
    av, dn = 1.0, 1.0
    em: list[float] = []
    en: list[float] = []
    c = 0.0
    for _ in range(16):
        em.append(av)
        emc = math.sqrt(emc)
        en.append(emc)
        c = 0.5 * (av + emc)
        if abs(av - emc) <= _AGM_TOL * av:
            break
        emc *= av
        av = c

    u = c * u
    sn, cn = math.sin(u), math.cos(u)
    if sn != 0.0:
        av = cn / sn
        c *= av
        for bv, env in zip(reversed(em), reversed(en)):
            av *= c
            c *= dn
            dn = (env + av) / (bv + av)
            av = c / bv
        av = 1.0 / math.sqrt(c * c + 1.0)
        sn = av if sn >= 0.0 else -av
        cn = c * sn
    return sn, cn, dn


# quotient glyphs: numerator/denominator codes, 'n' meaning the constant 1
_GLYPH_PARTS = {
    "sn": ("s", "n"),
    "cn": ("c", "n"),
    "dn": ("d", "n"),
    "ns": ("n", "s"),
    "nc": ("n", "c"),
    "nd": ("n", "d"),
    "sc": ("s", "c"),
    "sac": ("s", "c"),  # the charts' spelling of sn/cn
    "sd": ("s", "d"),
    "cs": ("c", "s"),
    "cd": ("c", "d"),
    "ds": ("d", "s"),
    "dc": ("d", "c"),
}

GLYPH_NAMES = tuple(_GLYPH_PARTS)


def jacobi_glyph(name: str, u: float, a: float) -> float:
    """Evaluate one of the twelve Glaisher quotients at (u; a).

    ``sac`` is accepted as an alias for ``sc`` (= sn/cn). Raises
    :class:`PoleError` when the denominator is within ``POLE_TOL`` of zero,
    i.e. when u sits essentially on a pole of the quotient.
    """
    try:
        num_code, den_code = _GLYPH_PARTS[name]
    except KeyError:
        raise DomainError(f"unknown elliptic glyph {name!r}") from None
    sn, cn, dn = jacobi_sncndn(u, a)
    parts = {"s": sn, "c": cn, "d": dn, "n": 1.0}
    den = parts[den_code]
    if abs(den) < POLE_TOL:
        raise PoleError(f"{name}({u}; {a}) evaluated within {POLE_TOL} of a pole")
    return parts[num_code] / den
