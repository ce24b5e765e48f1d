"""
Finite fields GF(p^e)
+++++++++++++++++++++++++++++++++++++++

Elements are stored as their canonical integer encoding: the coefficient
vector over GF(p), least significant coefficient first, read as a base-p
integer.  The same encoding orders the elements (``0 < 1 < ... < p^e - 1``).

Fields with at most ``TABLE_LIMIT`` elements carry numpy log/antilog tables;
larger fields fall back to polynomial arithmetic.

.. autosummary::

   ~FiniteField
   ~PrimePowerField
   ~FieldElement
   ~arith
   ~canonical_modulus
   ~field_make
   ~format_modulus
   ~parse_modulus
   ~prime_power
   ~DivisionByZero
   ~EvenCharacteristic
   ~FieldMismatch
   ~NotPrime
   ~ReducibleModulus
"""

import dataclasses
import functools
import logging

import numpy as np
import sympy

logger = logging.getLogger(__name__)

TABLE_LIMIT = 2**16
ADD_TABLE_LIMIT = 2**10


class NotPrime(ValueError):
    """
    The characteristic is not a prime (or a field size is not a prime power).

    .. index:: qhvar Exception; NotPrime
    """


class ReducibleModulus(ValueError):
    """
    A modulus polynomial is not irreducible over the prime field.

    .. index:: qhvar Exception; ReducibleModulus
    """


class FieldMismatch(TypeError):
    """
    Operands belong to different fields.

    .. index:: qhvar Exception; FieldMismatch
    """


class DivisionByZero(ZeroDivisionError):
    """
    Division by (or inversion of) the zero element.

    .. index:: qhvar Exception; DivisionByZero
    """


class EvenCharacteristic(ValueError):
    """
    Operation is defined only for fields of odd characteristic.

    .. index:: qhvar Exception; EvenCharacteristic
    """


def prime_power(q):
    """
    Split a field size into ``(p, e)`` with ``q = p**e``.

    RAISES

    NotPrime
        when ``q`` is not a prime power.
    """
    factors = sympy.factorint(int(q)) if q > 1 else {}
    if len(factors) != 1:
        raise NotPrime(f"{q} is not a prime power")
    ((p, e),) = factors.items()
    return int(p), int(e)


def parse_modulus(text):
    """Parse ``"1,1,0,1"`` (constant term first) into a list of ints."""
    try:
        return [int(c) for c in str(text).split(",")]
    except ValueError as exc:
        raise ValueError(f"cannot parse modulus {text!r}: {exc}") from exc


def format_modulus(coefficients):
    """Comma-separated coefficients, constant term first."""
    return ",".join(str(c) for c in coefficients)


def _digits(value, base, width):
    digits = []
    for _ in range(width):
        value, d = divmod(value, base)
        digits.append(d)
    return digits


def _undigits(digits, base):
    value = 0
    for d in reversed(digits):
        value = value * base + d
    return value


def _is_irreducible(p, coefficients):
    if len(coefficients) == 2:
        return True
    t = sympy.Symbol("t")
    poly = sympy.Poly(list(reversed(coefficients)), t, modulus=p)
    return poly.is_irreducible


def canonical_modulus(p, e):
    """
    Lexicographically least monic irreducible polynomial of degree ``e``.

    Candidates are ordered by the canonical encoding of their lower
    coefficients.  Returns the coefficient list, constant term first.
    """
    if e == 1:
        return [0, 1]
    for code in range(p**e):
        coefficients = _digits(code, p, e) + [1]
        if _is_irreducible(p, coefficients):
            return coefficients
    raise ReducibleModulus(f"no irreducible polynomial of degree {e} over GF({p})")  # unreachable


class FiniteField:
    """
    Table-driven arithmetic on canonical integer encodings.

    Subclasses supply ``_mul_slow()`` and a ``key`` identifying the field.
    Scalar methods take and return Python ints; the ``v*`` methods take
    and return numpy integer arrays.
    """

    def __init__(self, p, ndigits):
        self.p = p
        self.ndigits = ndigits
        self.order = p**ndigits
        self._exp = None
        self._log = None
        self._add_table = None
        self._neg = None
        self._generator = None

    # subclass hooks

    @property
    def key(self):
        raise NotImplementedError

    def _mul_slow(self, a, b):
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, FiniteField) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __len__(self):
        return self.order

    # construction

    def _setup_tables(self):
        if self.order <= ADD_TABLE_LIMIT and self.p != 2:
            digits = np.array([_digits(v, self.p, self.ndigits) for v in range(self.order)], dtype=np.int64)
            weights = self.p ** np.arange(self.ndigits, dtype=np.int64)
            summed = (digits[:, None, :] + digits[None, :, :]) % self.p
            self._add_table = (summed * weights).sum(axis=2)
            self._neg = ((-digits) % self.p * weights).sum(axis=1)
        if self.order > TABLE_LIMIT:
            logger.debug("GF(%d): %d elements, polynomial arithmetic", self.order, self.order)
            return
        m = self.order - 1
        g = self.generator
        exp = np.zeros(2 * m, dtype=np.int64)
        log = np.zeros(self.order, dtype=np.int64)
        x = 1
        for i in range(m):
            exp[i] = x
            log[x] = i
            x = self._mul_slow(x, g)
        exp[m:] = exp[:m]
        self._exp = exp
        self._log = log
        logger.debug("GF(%d): log/antilog tables built, generator %d", self.order, g)

    @property
    def generator(self):
        """Least primitive element in the canonical ordering."""
        if self._generator is None:
            m = self.order - 1
            if m == 1:
                self._generator = 1
                return 1
            primes = list(sympy.factorint(m))
            for g in range(2, self.order):
                if all(self._pow_slow(g, m // r) != 1 for r in primes):
                    self._generator = g
                    break
        return self._generator

    def _pow_slow(self, a, k):
        result, base = 1, a
        while k:
            if k & 1:
                result = self._mul_slow(result, base)
            base = self._mul_slow(base, base)
            k >>= 1
        return result

    @property
    def has_tables(self):
        return self._exp is not None

    def elements(self):
        """All elements in canonical order."""
        return range(self.order)

    def element(self, value):
        """Wrap an int encoding as a :class:`FieldElement`."""
        return FieldElement(self, int(value))

    def digits(self, a):
        """Coefficient vector over GF(p), least significant first."""
        return _digits(a, self.p, self.ndigits)

    # scalar arithmetic

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        if self._add_table is not None:
            return int(self._add_table[a, b])
        da, db = self.digits(a), self.digits(b)
        return _undigits([(x + y) % self.p for x, y in zip(da, db)], self.p)

    def neg(self, a):
        if self.p == 2:
            return a
        if self._neg is not None:
            return int(self._neg[a])
        return _undigits([(-x) % self.p for x in self.digits(a)], self.p)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return int(self._exp[self._log[a] + self._log[b]])
        return self._mul_slow(a, b)

    def inv(self, a):
        if a == 0:
            raise DivisionByZero(f"inverse of zero in GF({self.order})")
        if self._exp is not None:
            m = self.order - 1
            return int(self._exp[(m - self._log[a]) % m])
        return self._pow_slow(a, self.order - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def power(self, a, k):
        """``a**k`` for any integer ``k >= 0`` (``0**0 == 1``)."""
        if k < 0:
            return self.power(self.inv(a), -k)
        if k == 0:
            return 1
        if a == 0:
            return 0
        if self._exp is not None:
            m = self.order - 1
            return int(self._exp[(int(self._log[a]) * k) % m])
        return self._pow_slow(a, k % (self.order - 1) or (self.order - 1))

    def sum(self, values):
        total = 0
        for v in values:
            total = self.add(total, v)
        return total

    # vector arithmetic

    def vadd(self, a, b):
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return np.bitwise_xor(a, b)
        if self._add_table is not None:
            return self._add_table[a, b]
        total = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        weight = 1
        for _ in range(self.ndigits):
            total += ((a // weight % self.p + b // weight % self.p) % self.p) * weight
            weight *= self.p
        return total

    def vneg(self, a):
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a
        if self._neg is not None:
            return self._neg[a]
        total = np.zeros_like(a)
        weight = 1
        for _ in range(self.ndigits):
            total += ((-(a // weight % self.p)) % self.p) * weight
            weight *= self.p
        return total

    def vsub(self, a, b):
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b):
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        if self._exp is None:
            return np.frompyfunc(self.mul, 2, 1)(a, b).astype(np.int64)
        product = self._exp[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, product)

    def vpow(self, a, k):
        a = np.asarray(a, dtype=np.int64)
        if k == 0:
            return np.ones_like(a)
        if self._exp is None:
            return np.frompyfunc(lambda x: self.power(x, k), 1, 1)(a).astype(np.int64)
        m = self.order - 1
        reduced = k % m
        powered = self._exp[(self._log[a] * reduced) % m]
        return np.where(a == 0, 0, powered)

    def vsum(self, arrays):
        total = None
        for arr in arrays:
            total = arr if total is None else self.vadd(total, arr)
        return total

    def __repr__(self):
        return f"{self.__class__.__name__}(order={self.order})"


class PrimePowerField(FiniteField):
    """
    GF(p^e) = GF(p)[t]/(modulus).

    The ``FieldDescriptor`` of the package: prime ``p``, degree ``e``,
    monic irreducible ``modulus`` (coefficient list, constant term first).
    """

    def __init__(self, p, e, modulus):
        super().__init__(p, e)
        self.e = e
        self.modulus = list(modulus)
        self._setup_tables()

    @property
    def key(self):
        return ("GF", self.p, self.e, tuple(self.modulus))

    @property
    def q(self):
        return self.order

    def _mul_slow(self, a, b):
        p, e = self.p, self.e
        if e == 1:
            return (a * b) % p
        da, db = self.digits(a), self.digits(b)
        product = [0] * (2 * e - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    product[i + j] = (product[i + j] + x * y) % p
        # reduce with t^e = -(m_0 + m_1 t + ... + m_{e-1} t^{e-1})
        for k in range(2 * e - 2, e - 1, -1):
            c = product[k]
            if c:
                product[k] = 0
                for i in range(e):
                    product[k - e + i] = (product[k - e + i] - c * self.modulus[i]) % p
        return _undigits(product[:e], p)

    def absolute_trace(self, a):
        """Trace to the prime field: sum of ``a**(p**i)``, ``i < e``."""
        total, x = 0, a
        for _ in range(self.e):
            total = self.add(total, x)
            x = self.power(x, self.p)
        return total

    def is_square(self, a):
        """
        True iff ``a`` is a square (zero counts), decided by ``a**((q-1)/2)``.

        RAISES

        EvenCharacteristic
            for q even, where every element is a square.
        """
        if self.p == 2:
            raise EvenCharacteristic("squareness test needs q odd")
        return self.power(a, (self.order - 1) // 2) in (0, 1)

    def __repr__(self):
        return f"GF({self.p}^{self.e}, modulus={format_modulus(self.modulus)})"


@functools.lru_cache(maxsize=None)
def _make_field(p, e, modulus):
    logger.debug("building GF(%d^%d) modulus %s", p, e, modulus)
    return PrimePowerField(p, e, modulus)


def field_make(p, e=1, modulus=None):
    """
    Build GF(p^e) with a verified-irreducible modulus.

    PARAMETERS

    p
        *int* :
        prime characteristic
    e
        *int* :
        extension degree, ``e >= 1``
    modulus
        *[int]* or *str* :
        monic polynomial of degree ``e``, constant term first.
        Default: :func:`canonical_modulus`.

    RAISES

    NotPrime
        ``p`` is not prime
    ReducibleModulus
        the modulus factors over GF(p)
    """
    if not sympy.isprime(p):
        raise NotPrime(f"{p} is not prime")
    if e < 1:
        raise ValueError(f"degree must be >= 1, received {e}")
    if modulus is None:
        modulus = canonical_modulus(p, e)
    elif isinstance(modulus, str):
        modulus = parse_modulus(modulus)
    modulus = [int(c) for c in modulus]
    if len(modulus) != e + 1 or modulus[-1] != 1:
        raise ValueError(f"modulus {modulus} is not monic of degree {e}")
    if any(not 0 <= c < p for c in modulus):
        raise ValueError(f"modulus {modulus} has coefficients outside GF({p})")
    if not _is_irreducible(p, modulus):
        raise ReducibleModulus(f"{format_modulus(modulus)} is reducible over GF({p})")
    return _make_field(p, e, tuple(modulus))


@dataclasses.dataclass(frozen=True)
class FieldElement:
    """An element of a :class:`FiniteField`, with operators."""

    field: FiniteField
    value: int

    def _other(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.field != self.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
        return other.value

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._other(other)))

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._other(other)))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._other(other)))

    def __pow__(self, k):
        return FieldElement(self.field, self.field.power(self.value, int(k)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"FieldElement({self.value} in GF({self.field.order}))"


def arith(x, y, op):
    """
    Exact arithmetic on two :class:`FieldElement` objects.

    ``op`` is one of ``add sub mul div pow``; for ``pow``, ``y`` is a
    non-negative integer exponent.
    """
    if op == "pow":
        if int(y) < 0:
            raise ValueError("exponent must be non-negative")
        return x ** int(y)
    operations = {
        "add": FieldElement.__add__,
        "sub": FieldElement.__sub__,
        "mul": FieldElement.__mul__,
        "div": FieldElement.__truediv__,
    }
    if op not in operations:
        raise ValueError(f"unknown operation {op!r}")
    if not isinstance(y, FieldElement) or not isinstance(x, FieldElement):
        raise FieldMismatch("both operands must be field elements")
    return operations[op](x, y)


# -----------------------------------------------------------------------------
# :copyright: (c) 2024-2026, qhvar developers
#
# Distributed under the terms of the license in the file LICENSE.txt,
# distributed with this software.
# -----------------------------------------------------------------------------
