"""
Finite fields F_q for odd prime powers q = p^e.

Elements are stored as integer codes: the element c_0 + c_1 t + ... + c_{e-1} t^{e-1}
has code sum(c_i * p^i). Codes order the field lexicographically on the coefficient
vector read from the highest degree down, so prime fields enumerate as 0, 1, ..., p-1.
All arithmetic goes through precomputed numpy tables, which the matrix kernels in
services.linalg index directly.
"""
import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

import numpy as np
import sympy

from utils.errors import FieldArithmeticError, FieldSpecError

logger = logging.getLogger(__name__)


class FieldSpec:
    """The field F_p[t]/(modulus) with its arithmetic tables."""

    def __init__(self, p: int, e: int = 1, modulus: Sequence[int] = ()):
        if not isinstance(p, int) or not sympy.isprime(p):
            raise FieldSpecError(f"characteristic {p} is not prime", spec=f"{p}^{e}")
        if p == 2:
            raise FieldSpecError("characteristic 2 is not supported", spec=f"{p}^{e}")
        if e < 1:
            raise FieldSpecError(f"extension degree must be >= 1, got {e}", spec=f"{p}^{e}")

        self.p = p
        self.e = e
        self.q = p ** e
        self.modulus: Tuple[int, ...] = tuple(int(c) % p for c in modulus) if e > 1 else ()
        if e > 1:
            self._check_modulus()

        self.add_table, self.sub_table, self.mul_table = self._build_tables()
        self.neg_table = self.sub_table[0].copy()
        self.inv_table = self._build_inverses()
        self.square_table = self._build_euler_squares()
        for table in (self.add_table, self.sub_table, self.mul_table,
                      self.neg_table, self.inv_table, self.square_table):
            table.flags.writeable = False
        logger.debug(f"Built tables for F_{self.q} (modulus={self.modulus or 'none'})")

    def _check_modulus(self):
        if len(self.modulus) != self.e + 1 or self.modulus[-1] != 1:
            raise FieldSpecError(
                f"modulus must be monic of degree {self.e} (constant term first)",
                spec=self.label, modulus=list(self.modulus)
            )
        x = sympy.Symbol('x')
        poly = sympy.Poly(list(reversed(self.modulus)), x, modulus=self.p)
        if not poly.is_irreducible:
            raise FieldSpecError(
                f"modulus {list(self.modulus)} is reducible over F_{self.p}",
                spec=self.label, modulus=list(self.modulus)
            )

    # Code <-> coefficients

    def coeffs(self, code: int) -> Tuple[int, ...]:
        """Coefficient vector (constant term first) of an element code."""
        digits = []
        for _ in range(self.e):
            code, digit = divmod(code, self.p)
            digits.append(digit)
        return tuple(digits)

    def code(self, coeffs: Sequence[int]) -> int:
        """Element code of a coefficient vector (constant term first)."""
        return sum((int(c) % self.p) * self.p ** i for i, c in enumerate(coeffs))

    def _poly_mul(self, a: Tuple[int, ...], b: Tuple[int, ...]) -> Tuple[int, ...]:
        p, e = self.p, self.e
        product = [0] * (2 * e - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    product[i + j] = (product[i + j] + ai * bj) % p
        # Reduce by the monic modulus from the top degree down
        for deg in range(len(product) - 1, e - 1, -1):
            lead = product[deg]
            if lead:
                for i, mi in enumerate(self.modulus):
                    product[deg - e + i] = (product[deg - e + i] - lead * mi) % p
        return tuple(product[:e])

    def _build_tables(self):
        q = self.q
        all_coeffs = [self.coeffs(c) for c in range(q)]
        add = np.empty((q, q), dtype=np.intp)
        sub = np.empty((q, q), dtype=np.intp)
        mul = np.empty((q, q), dtype=np.intp)
        for a in range(q):
            ca = all_coeffs[a]
            for b in range(q):
                cb = all_coeffs[b]
                add[a, b] = self.code([x + y for x, y in zip(ca, cb)])
                sub[a, b] = self.code([x - y for x, y in zip(ca, cb)])
                mul[a, b] = self.code(self._poly_mul(ca, cb)) if self.e > 1 else (a * b) % q
        return add, sub, mul

    def _build_inverses(self) -> np.ndarray:
        inv = np.zeros(self.q, dtype=np.intp)
        rows, cols = np.nonzero(self.mul_table == 1)
        inv[rows] = cols
        if len(rows) != self.q - 1:
            raise FieldSpecError("multiplicative group is incomplete", spec=self.label)
        return inv

    def _build_euler_squares(self) -> np.ndarray:
        """Square test by Euler's criterion a^((q-1)/2) == 1; zero counts as a square."""
        table = np.zeros(self.q, dtype=bool)
        table[0] = True
        half = (self.q - 1) // 2
        for a in range(1, self.q):
            table[a] = self.pow_code(a, half) == 1
        return table

    def pow_code(self, a: int, exponent: int) -> int:
        """Square-and-multiply exponentiation on codes."""
        if exponent < 0:
            if a == 0:
                raise FieldArithmeticError("division by zero")
            a, exponent = int(self.inv_table[a]), -exponent
        result, base = 1, a
        while exponent:
            if exponent & 1:
                result = int(self.mul_table[result, base])
            base = int(self.mul_table[base, base])
            exponent >>= 1
        return result

    # Elements

    def element(self, value: Union[int, Sequence[int], "FieldElement"]) -> "FieldElement":
        """Integers map into the prime subfield; sequences are coefficient vectors."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldArithmeticError("field mismatch")
            return value
        if isinstance(value, (int, np.integer)):
            return FieldElement(int(value) % self.p, self)
        return FieldElement(self.code(value), self)

    def from_code(self, code: int) -> "FieldElement":
        code = int(code)
        if not 0 <= code < self.q:
            raise FieldArithmeticError(f"code {code} outside F_{self.q}")
        return FieldElement(code, self)

    def to_codes(self, values) -> np.ndarray:
        """Vector or matrix of codes from ints (read as codes) or FieldElements."""
        array = np.asarray(
            [[self._as_code(v) for v in row] for row in values]
            if _is_nested(values) else [self._as_code(v) for v in values],
            dtype=np.intp,
        )
        return array

    def _as_code(self, value) -> int:
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldArithmeticError("field mismatch")
            return value.code
        code = int(value)
        if not 0 <= code < self.q:
            raise FieldArithmeticError(f"code {code} outside F_{self.q}")
        return code

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(0, self)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(1, self)

    @property
    def label(self) -> str:
        return str(self.p) if self.e == 1 else f"{self.p}^{self.e}"

    def format_code(self, code: int) -> str:
        if self.e == 1:
            return str(code)
        terms = []
        for i, c in enumerate(self.coeffs(code)):
            if c:
                mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
                terms.append(f"{c}{mono}" if (c != 1 or i == 0) else mono)
        return "+".join(terms) or "0"

    def __eq__(self, other) -> bool:
        return (isinstance(other, FieldSpec) and self.p == other.p
                and self.e == other.e and self.modulus == other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.e, self.modulus))

    def __repr__(self) -> str:
        return f"FieldSpec(F_{self.q}, modulus={list(self.modulus)})"


def _is_nested(values) -> bool:
    if isinstance(values, np.ndarray):
        return values.ndim == 2
    return len(values) > 0 and isinstance(values[0], (list, tuple, np.ndarray))


@dataclass(frozen=True)
class FieldElement:
    """An element of F_q, canonical by its code."""
    code: int
    field: FieldSpec

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldArithmeticError("field mismatch")
            return other
        if isinstance(other, (int, np.integer)):
            return self.field.element(other)
        return NotImplemented

    def _wrap(self, code) -> "FieldElement":
        return FieldElement(int(code), self.field)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._wrap(self.field.add_table[self.code, other.code])

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._wrap(self.field.sub_table[self.code, other.code])

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._wrap(self.field.sub_table[other.code, self.code])

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._wrap(self.field.mul_table[self.code, other.code])

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __neg__(self):
        return self._wrap(self.field.neg_table[self.code])

    def __pow__(self, exponent: int):
        return self._wrap(self.field.pow_code(self.code, exponent))

    def inverse(self) -> "FieldElement":
        if self.code == 0:
            raise FieldArithmeticError("division by zero")
        return self._wrap(self.field.inv_table[self.code])

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.code == other.code
        if isinstance(other, (int, np.integer)):
            return self.code == self.field.element(other).code
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.code, self.field))

    def __bool__(self) -> bool:
        return self.code != 0

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return self.field.coeffs(self.code)

    def __repr__(self) -> str:
        return self.field.format_code(self.code)


def is_square(a: FieldElement) -> bool:
    """True iff a = b^2 for some b (zero included; see is_zero)."""
    return bool(a.field.square_table[a.code])


def is_zero(a: FieldElement) -> bool:
    return a.code == 0


def enumerate_field(spec: FieldSpec) -> List[FieldElement]:
    """All q elements in code order, starting with 0."""
    return [FieldElement(code, spec) for code in range(spec.q)]


def find_nonsquare(spec: FieldSpec) -> FieldElement:
    """First nonsquare of F_q^x in code order."""
    for code in range(1, spec.q):
        if not spec.square_table[code]:
            return FieldElement(code, spec)
    raise FieldSpecError("no nonsquare found", spec=spec.label)
