"""
The quadratic extension GF(q^2) = GF(q)[eps]
+++++++++++++++++++++++++++++++++++++++++++++

An element ``c0 + eps*c1`` (``c0, c1`` in GF(q)) has the integer encoding
``c0 + q*c1``.  Its base-p digits are those of ``c0`` followed by those of
``c1``, so addition works digit-wise exactly as in the base field, and the
elements of GF(q) keep their own encodings inside GF(q^2).

* q odd: ``eps**2 = delta`` with ``delta`` a non-square of GF(q),
  so ``eps**q = -eps``.
* q even: ``eps**2 + eps + delta = 0`` with absolute trace ``tr(delta) = 1``,
  so ``eps**q = eps + 1``.

.. autosummary::

   ~QuadraticExtension
   ~TraceNorm
   ~choose_epsilon
   ~frobenius_q
   ~is_square
   ~make_extension
   ~trace_norm
"""

import functools
import logging
from collections import namedtuple

import numpy as np

from .finite_field import EvenCharacteristic
from .finite_field import FieldElement
from .finite_field import FiniteField
from .finite_field import PrimePowerField
from .finite_field import ReducibleModulus
from .finite_field import field_make
from .finite_field import prime_power

logger = logging.getLogger(__name__)

TraceNorm = namedtuple("TraceNorm", "trace norm absolute_trace")


class QuadraticExtension(FiniteField):
    """
    GF(q^2) as the tower GF(q)[eps] with ``eps**2 = s + t*eps``.

    Odd q uses ``(s, t) = (delta, 0)``, even q uses ``(s, t) = (delta, 1)``.
    """

    def __init__(self, base, delta):
        super().__init__(base.p, 2 * base.e)
        self.base = base
        self.q = base.order
        self.delta = delta
        self.odd = base.p != 2
        self._s = delta
        self._t = 0 if self.odd else 1
        self._setup_tables()

    @property
    def key(self):
        return ("GF2", self.base.key, self.delta)

    @property
    def epsilon(self):
        """Encoding of ``eps``."""
        return self.q

    def split(self, x):
        """``(c0, c1)`` with ``x = c0 + eps*c1``."""
        return x % self.q, x // self.q

    def join(self, c0, c1):
        return c0 + self.q * c1

    def vsplit(self, x):
        x = np.asarray(x, dtype=np.int64)
        return x % self.q, x // self.q

    def vjoin(self, c0, c1):
        return np.asarray(c0, dtype=np.int64) + self.q * np.asarray(c1, dtype=np.int64)

    def in_base(self, x):
        return x < self.q

    def _mul_slow(self, a, b):
        f = self.base
        a0, a1 = self.split(a)
        b0, b1 = self.split(b)
        hi = f.mul(a1, b1)
        c0 = f.add(f.mul(a0, b0), f.mul(self._s, hi))
        c1 = f.add(f.mul(a0, b1), f.mul(a1, b0))
        if self._t:
            c1 = f.add(c1, hi)
        return self.join(c0, c1)

    def frobenius(self, x):
        """``x**q`` from the basis decomposition."""
        f = self.base
        c0, c1 = self.split(x)
        if self.odd:
            return self.join(c0, f.neg(c1))
        return self.join(f.add(c0, c1), c1)

    def vfrobenius(self, x):
        f = self.base
        c0, c1 = self.vsplit(x)
        if self.odd:
            return self.vjoin(c0, f.vneg(c1))
        return self.vjoin(f.vadd(c0, c1), c1)

    def trace(self, x):
        """Relative trace ``x + x**q``, an element of GF(q)."""
        return self.add(x, self.frobenius(x))

    def norm(self, x):
        """Relative norm ``x**(q+1)``, an element of GF(q)."""
        return self.mul(x, self.frobenius(x))

    def vnorm(self, x):
        return self.vmul(x, self.vfrobenius(x))

    def absolute_trace(self, x):
        """Trace from GF(q^2) to GF(p)."""
        return self.base.absolute_trace(self.trace(x))

    def __repr__(self):
        return f"GF({self.q}^2, delta={self.delta}, base={self.base!r})"


def _least_delta(fq):
    for delta in fq.elements():
        if fq.p == 2:
            if fq.absolute_trace(delta) == 1:
                return delta
        elif delta and not fq.is_square(delta):
            return delta


@functools.lru_cache(maxsize=None)
def _make_extension(fq, delta):
    logger.debug("building GF(%d^2), delta=%d", fq.order, delta)
    return QuadraticExtension(fq, delta)


def choose_epsilon(fq, delta=None):
    """
    Pick ``delta`` and build GF(q^2) = GF(q)[eps].

    PARAMETERS

    fq
        *PrimePowerField* :
        the base field GF(q)
    delta
        *int* :
        (optional) override; must be a non-square (q odd) or have
        absolute trace 1 (q even).  Default: the least such element.

    RETURNS

    ``(extension, delta)``

    RAISES

    ReducibleModulus
        when the supplied ``delta`` makes the eps polynomial reducible.
    """
    if delta is None:
        delta = _least_delta(fq)
    elif not 0 <= delta < fq.order:
        raise ValueError(f"delta={delta} is not an element of GF({fq.order})")
    elif fq.p == 2 and fq.absolute_trace(delta) != 1:
        raise ReducibleModulus(f"eps^2+eps+{delta} is reducible: tr({delta}) = 0")
    elif fq.p != 2 and (delta == 0 or fq.is_square(delta)):
        raise ReducibleModulus(f"eps^2-{delta} is reducible: {delta} is a square in GF({fq.order})")
    return _make_extension(fq, delta), delta


def make_extension(q=None, p=None, e=None, delta=None, modulus=None):
    """Build GF(q^2) from ``q`` (or ``p``, ``e``), with optional overrides."""
    if q is not None:
        p, e = prime_power(q)
    fq = field_make(p, e, modulus)
    ext, _delta = choose_epsilon(fq, delta)
    return ext


def frobenius_q(x):
    """``x**q`` for a :class:`FieldElement` of GF(q^2)."""
    return FieldElement(x.field, x.field.frobenius(x.value))


def trace_norm(x):
    """
    Relative trace, relative norm and absolute trace of ``x``.

    For ``x`` in GF(q^2) the absolute trace goes to GF(p) from GF(q^2);
    for ``x`` in the base field GF(q) (viewed inside GF(q^2)) the relative
    trace is ``2x``, the norm ``x**2`` and the absolute trace that of GF(q).
    """
    field = x.field
    if isinstance(field, QuadraticExtension):
        v = x.value
        return TraceNorm(field.trace(v), field.norm(v), field.absolute_trace(v))
    if isinstance(field, PrimePowerField):
        v = x.value
        return TraceNorm(field.add(v, v), field.mul(v, v), field.absolute_trace(v))
    raise TypeError(f"unsupported field {field!r}")


def is_square(x):
    """Squareness in GF(q), q odd (see :meth:`PrimePowerField.is_square`)."""
    if x.field.p == 2:
        raise EvenCharacteristic("squareness test needs q odd")
    return x.field.is_square(x.value)


# -----------------------------------------------------------------------------
# :copyright: (c) 2024-2026, qhvar developers
#
# Distributed under the terms of the license in the file LICENSE.txt,
# distributed with this software.
# -----------------------------------------------------------------------------
