"""Exact arithmetic in GF(p), GF(q) and GF(q^2)."""

from .extension import QuadraticExtension
from .extension import TraceNorm
from .extension import choose_epsilon
from .extension import frobenius_q
from .extension import is_square
from .extension import make_extension
from .extension import trace_norm
from .finite_field import DivisionByZero
from .finite_field import EvenCharacteristic
from .finite_field import FieldElement
from .finite_field import FieldMismatch
from .finite_field import FiniteField
from .finite_field import NotPrime
from .finite_field import PrimePowerField
from .finite_field import ReducibleModulus
from .finite_field import arith
from .finite_field import canonical_modulus
from .finite_field import field_make
from .finite_field import format_modulus
from .finite_field import parse_modulus
from .finite_field import prime_power

FieldDescriptor = PrimePowerField
