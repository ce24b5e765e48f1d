"""
Counting formulas for BM varieties
++++++++++++++++++++++++++++++++++

Closed-form numbers of projectively inequivalent BM objects over GF(p^n).
The automorphism group orders ``2q^3``, ``4eq^3`` and ``q^6(q-1)`` are
listed in the documentation only.

.. autosummary::

   ~bm_unital_count
   ~bm_variety_count
"""

from sympy import divisors
from sympy import totient

from .varieties import DomainError


def _odd_part(n):
    while n % 2 == 0:
        n //= 2
    return n


def bm_unital_count(p, n):
    """
    Number of inequivalent BM unitals in PG(2,p^(2n)).

    ``(1/2n) [n0 + sum_{k | n} phi(2n/k) p^k]`` with ``n0`` the odd part of
    ``n`` when ``p > 2`` and 0 otherwise.

    RAISES

    DomainError
        when ``q = p^n < 4``.
    """
    if p**n < 4:
        raise DomainError(f"q = {p}^{n} < 4")
    n0 = _odd_part(n) if p > 2 else 0
    total = n0 + sum(int(totient(2 * n // k)) * p**k for k in divisors(n))
    if total % (2 * n):
        raise ArithmeticError(f"count for (p={p}, n={n}) is not an integer: {total}/{2 * n}")
    return total // (2 * n)


def bm_variety_count(p, n):
    """
    Number of inequivalent BM quasi-Hermitian varieties of PG(3,p^(2n)), p odd.

    ``(1/n) sum_{k | n} phi(n/k) p^k - 2``.

    RAISES

    DomainError
        when ``p`` is 2.
    """
    if p == 2:
        raise DomainError("the variety count needs p odd")
    total = sum(int(totient(n // k)) * p**k for k in divisors(n))
    if total % n:
        raise ArithmeticError(f"count for (p={p}, n={n}) is not an integer: {total}/{n}")
    return total // n - 2


# -----------------------------------------------------------------------------
# :copyright: (c) 2024-2026, qhvar developers
#
# Distributed under the terms of the license in the file LICENSE.txt,
# distributed with this software.
# -----------------------------------------------------------------------------
