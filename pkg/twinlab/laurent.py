"""
Laurent polynomials over F_q and 2x2 matrices of them.
"""
import itertools

from .errors import ValidationError


class LaurentPolynomial(object):
    """
    ``sum(coeffs[k] * t**(low + k))`` over a :class:`~twinlab.fields.
    FiniteField`.

    Leading and trailing zero coefficients are stripped on construction, so
    equal polynomials have equal ``(low, coeffs)``. The zero polynomial has
    ``coeffs == ()`` and ``low == 0``.
    """
    __slots__ = ('field', 'coeffs', 'low')

    def __init__(self, field, coeffs, low=0):
        coeffs = list(coeffs)
        start = 0
        while start < len(coeffs) and coeffs[start] == 0:
            start += 1
        end = len(coeffs)
        while end > start and coeffs[end - 1] == 0:
            end -= 1
        self.field = field
        self.coeffs = tuple(coeffs[start:end])
        self.low = low + start if self.coeffs else 0

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def constant(cls, field, c):
        return cls(field, (c,))

    @classmethod
    def monomial(cls, field, c, exponent):
        return cls(field, (c,), exponent)

    @classmethod
    def from_window(cls, field, coeffs, low):
        return cls(field, coeffs, low)

    def __eq__(self, other):
        return (
            isinstance(other, LaurentPolynomial) and
            self.low == other.low and
            self.coeffs == other.coeffs
        )

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.low, self.coeffs))

    def __repr__(self):
        return 'LaurentPolynomial({0})'.format(self)

    def __str__(self):
        if not self.coeffs:
            return '0'
        terms = []
        for e, c in self.terms():
            if e == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append('t' if e == 1 else 't^{0}'.format(e))
            else:
                terms.append('{0}*t'.format(c) if e == 1
                             else '{0}*t^{1}'.format(c, e))
        return ' + '.join(terms)

    def __bool__(self):
        return bool(self.coeffs)

    def is_zero(self):
        return not self.coeffs

    def is_monomial(self):
        return len(self.coeffs) == 1

    @property
    def valuation(self):
        """Lowest exponent; ``None`` for zero."""
        return self.low if self.coeffs else None

    @property
    def degree(self):
        """Highest exponent; ``None`` for zero."""
        return self.low + len(self.coeffs) - 1 if self.coeffs else None

    def coefficient(self, exponent):
        k = exponent - self.low
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def terms(self):
        return [(self.low + k, c) for k, c in enumerate(self.coeffs) if c]

    def exponents(self):
        return [e for e, _ in self.terms()]

    def _combine(self, other, op):
        if not self.coeffs:
            return LaurentPolynomial(
                self.field, [op(0, c) for c in other.coeffs], other.low)
        if not other.coeffs:
            return self
        low = min(self.low, other.low)
        high = max(self.degree, other.degree)
        return LaurentPolynomial(
            self.field,
            [op(self.coefficient(e), other.coefficient(e))
             for e in range(low, high + 1)],
            low,
        )

    def __add__(self, other):
        return self._combine(other, self.field.add)

    def __sub__(self, other):
        return self._combine(other, self.field.sub)

    def __neg__(self):
        return LaurentPolynomial(
            self.field, [self.field.neg(c) for c in self.coeffs], self.low)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not self.coeffs or not other.coeffs:
            return LaurentPolynomial.zero(self.field)
        field = self.field
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = field.add(out[i + j], field.mul(a, b))
        return LaurentPolynomial(field, out, self.low + other.low)

    def scale(self, c):
        return LaurentPolynomial(
            self.field, [self.field.mul(c, x) for x in self.coeffs],
            self.low)

    def shift(self, k):
        """Multiply by ``t**k``."""
        return LaurentPolynomial(self.field, self.coeffs, self.low + k)

    def exact_divide(self, other):
        """
        ``self / other`` when ``other`` divides ``self`` in F_q[t, t⁻¹],
        else ``None``.
        """
        if not other.coeffs:
            raise ZeroDivisionError('division by the zero polynomial')
        if not self.coeffs:
            return LaurentPolynomial.zero(self.field)
        field = self.field
        divisor = other.coeffs
        remainder = list(self.coeffs)
        lead_inv = field.inv(divisor[-1])
        size = len(remainder) - len(divisor) + 1
        if size < 1:
            return None
        quotient = [0] * size
        for k in range(size - 1, -1, -1):
            c = field.mul(remainder[k + len(divisor) - 1], lead_inv)
            quotient[k] = c
            if c:
                for j, d in enumerate(divisor):
                    remainder[k + j] = field.sub(
                        remainder[k + j], field.mul(c, d))
        if any(remainder):
            return None
        return LaurentPolynomial(field, quotient, self.low - other.low)

    def sort_key(self):
        if not self.coeffs:
            return (0,)
        return (1, self.degree, self.low, self.coeffs)


def window_polynomials(field, low, high):
    """Every polynomial supported on exponents ``low .. high``."""
    if high < low:
        return [LaurentPolynomial.zero(field)]
    return [
        LaurentPolynomial(field, coeffs, low)
        for coeffs in itertools.product(field.elements,
                                        repeat=high - low + 1)
    ]


class LaurentMatrix(object):
    """
    ``[[a, b], [c, d]]`` with Laurent polynomial entries.

    >>> from twinlab.fields import GF
    >>> F = GF(3)
    >>> t = LaurentPolynomial.monomial(F, 1, 1)
    >>> g = LaurentMatrix.upper(F, t)
    >>> (g * g.inverse()).is_identity()
    True
    """
    __slots__ = ('field', 'a', 'b', 'c', 'd')

    def __init__(self, field, a, b, c, d):
        self.field = field
        self.a, self.b, self.c, self.d = a, b, c, d

    @classmethod
    def identity(cls, field):
        one = LaurentPolynomial.constant(field, 1)
        zero = LaurentPolynomial.zero(field)
        return cls(field, one, zero, zero, one)

    @classmethod
    def diagonal(cls, field, x):
        """``diag(x, x⁻¹)`` for a field element or monomial ``x``."""
        if isinstance(x, int):
            x = LaurentPolynomial.constant(field, x)
        if not x.is_monomial():
            raise ValidationError('diagonal entry must be a monomial')
        c = x.coeffs[0]
        inverse = LaurentPolynomial.monomial(field, field.inv(c), -x.low)
        zero = LaurentPolynomial.zero(field)
        return cls(field, x, zero, zero, inverse)

    @classmethod
    def upper(cls, field, p):
        one = LaurentPolynomial.constant(field, 1)
        zero = LaurentPolynomial.zero(field)
        return cls(field, one, p, zero, one)

    @classmethod
    def lower(cls, field, p):
        one = LaurentPolynomial.constant(field, 1)
        zero = LaurentPolynomial.zero(field)
        return cls(field, one, zero, p, one)

    @property
    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def __eq__(self, other):
        return (
            isinstance(other, LaurentMatrix) and
            self.entries == other.entries
        )

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return 'LaurentMatrix([[{0}, {1}], [{2}, {3}]])'.format(
            *self.entries)

    def __mul__(self, other):
        return LaurentMatrix(
            self.field,
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def det(self):
        return self.a * self.d - self.b * self.c

    def inverse(self):
        """Inverse of a determinant-one matrix."""
        return LaurentMatrix(self.field, self.d, -self.b, -self.c, self.a)

    def conjugate_by(self, n):
        """``n⁻¹ g n``."""
        return n.inverse() * self * n

    def is_identity(self):
        return self == LaurentMatrix.identity(self.field)

    def is_monomial(self):
        a, b, c, d = self.entries
        diagonal = not b and not c and a.is_monomial() and d.is_monomial()
        anti = not a and not d and b.is_monomial() and c.is_monomial()
        return diagonal or anti

    def min_valuation(self):
        values = [e.valuation for e in self.entries if e]
        return min(values)

    def max_degree(self):
        return max(e.degree for e in self.entries if e)

    def exponent_bound(self):
        """Largest absolute exponent over all entries."""
        return max(max(abs(e.valuation), abs(e.degree))
                   for e in self.entries if e)

    def sort_key(self):
        profile = tuple(
            (e.valuation, e.degree) if e else (None, None)
            for e in self.entries
        )
        return (
            tuple((0, 0) if v is None else (1, v) for v, _ in profile),
            tuple((0, 0) if d is None else (1, d) for _, d in profile),
            tuple(e.sort_key() for e in self.entries),
        )

    def as_lists(self):
        return [[str(self.a), str(self.b)], [str(self.c), str(self.d)]]
