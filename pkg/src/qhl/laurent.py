"""Sparse Laurent polynomials over an exact scalar field.

``LaurentPoly`` is the one-variable ring K[t, t^-1]; ``MultiLaurentPoly`` is
K[z1^{+-1}, ..., zn^{+-1}].  Terms are finitely supported maps from exponent
(an int, or a length-n tuple of ints) to a nonzero scalar; no zero
coefficient is ever stored, so dict equality is structural ring equality.

Monomials are units, which is what makes exact division workable here:
``divexact`` shifts both operands to ordinary polynomials before doing long
division, and reports the remainder when the division is not exact.
"""

from __future__ import annotations

from .fields import FractionField, _scalar_is_simple


class InexactDivisionError(ArithmeticError):
    """Laurent division left a nonzero remainder (stored on the exception)."""

    def __init__(self, message, remainder):
        super().__init__(message)
        self.remainder = remainder


def _clean(terms):
    return {e: c for e, c in terms.items() if c}


class LaurentPoly:
    """Element of K[t, t^-1] with sparse integer-exponent support."""

    __slots__ = ("field", "terms")

    def __init__(self, field, terms=None):
        self.field = field
        self.terms = _clean(terms or {})

    @classmethod
    def zero(cls, field):
        return cls(field)

    @classmethod
    def one(cls, field):
        return cls(field, {0: field.one()})

    @classmethod
    def term(cls, field, exp, coeff=None):
        coeff = field.one() if coeff is None else field.coerce(coeff)
        return cls(field, {exp: coeff})

    # -- ring operations ------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.field != self.field:
                raise TypeError("mixed coefficient fields")
            return other
        return LaurentPoly(self.field, {0: self.field.coerce(other)})

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return LaurentPoly(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.field, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                p = c1 * c2
                out[e] = out[e] + p if e in out else p
        return LaurentPoly(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("Laurent power expects a nonnegative int")
        result = LaurentPoly.one(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, coeff):
        coeff = self.field.coerce(coeff)
        if not coeff:
            return LaurentPoly(self.field)
        return LaurentPoly(self.field, {e: coeff * c for e, c in self.terms.items()})

    def shift(self, offset):
        """Multiply by t^offset."""
        return LaurentPoly(self.field, {e + offset: c for e, c in self.terms.items()})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.field == other.field and self.terms == other.terms
        try:
            return self.terms == self._coerce(other).terms
        except TypeError:
            return NotImplemented

    def min_exp(self):
        return min(self.terms) if self.terms else None

    def max_exp(self):
        return max(self.terms) if self.terms else None

    def coeff(self, exp):
        return self.terms.get(exp, self.field.zero())

    # -- division ---------------------------------------------------------

    def _dense(self):
        """(valuation, coefficient list) with the valuation shifted to 0."""
        v = self.min_exp()
        top = self.max_exp()
        coeffs = [self.field.zero()] * (top - v + 1)
        for e, c in self.terms.items():
            coeffs[e - v] = c
        return v, coeffs

    def divexact(self, other):
        """Return c with other * c == self, or raise InexactDivisionError.

        Monomial factors of the divisor are units and are stripped first, so
        only the unit-normalized polynomial part constrains divisibility.
        """
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("Laurent division by zero")
        if not self:
            return LaurentPoly(self.field)
        va, ca = self._dense()
        vb, cb = other._dense()
        quo = []
        rem = list(ca)
        inv_lead = self.field.one() / cb[-1]
        for d in range(len(ca) - len(cb), -1, -1):
            c = rem[d + len(cb) - 1] * inv_lead
            quo.append(c)
            if c:
                for i, y in enumerate(cb):
                    rem[d + i] = rem[d + i] - c * y
        quo.reverse()
        if any(rem):
            remainder = LaurentPoly(
                self.field, {va + i: c for i, c in enumerate(rem) if c})
            raise InexactDivisionError(
                f"inexact Laurent division, remainder {remainder}", remainder)
        return LaurentPoly(
            self.field, {va - vb + i: c for i, c in enumerate(quo) if c})

    # -- specialization -----------------------------------------------------

    def specialize(self, value):
        """Evaluate the top coefficient variable at a base-field value.

        Coefficient-wise; a reduced denominator vanishing at the value raises
        PoleError.  The result lives over the base field of the tower.
        """
        if not isinstance(self.field, FractionField):
            raise TypeError("specialize needs rational-function coefficients")
        base = self.field.base
        out = {}
        for e, c in self.terms.items():
            val = c.eval_top(value)
            if val:
                out[e] = val
        return LaurentPoly(base, out)

    # -- display -------------------------------------------------------------

    def __str__(self):
        return format_terms(self.terms, lambda e: _var_power("t", e))

    def __repr__(self):
        return f"LaurentPoly({self})"


class MultiLaurentPoly:
    """Element of K[z1^{+-1}, ..., zn^{+-1}]; exponents are int tuples."""

    __slots__ = ("field", "arity", "terms")

    def __init__(self, field, arity, terms=None):
        self.field = field
        self.arity = arity
        cleaned = {}
        for e, c in (terms or {}).items():
            if len(e) != arity:
                raise ValueError(f"exponent {e} has wrong arity (expected {arity})")
            if c:
                cleaned[tuple(e)] = c
        self.terms = cleaned

    @classmethod
    def zero(cls, field, arity):
        return cls(field, arity)

    @classmethod
    def one(cls, field, arity):
        return cls(field, arity, {(0,) * arity: field.one()})

    @classmethod
    def term(cls, field, exp, coeff=None):
        coeff = field.one() if coeff is None else field.coerce(coeff)
        return cls(field, len(exp), {tuple(exp): coeff})

    def _coerce(self, other):
        if isinstance(other, MultiLaurentPoly):
            if other.field != self.field or other.arity != self.arity:
                raise TypeError("mixed rings")
            return other
        return MultiLaurentPoly(self.field, self.arity,
                                {(0,) * self.arity: self.field.coerce(other)})

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return MultiLaurentPoly(self.field, self.arity, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiLaurentPoly(self.field, self.arity,
                                {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                p = c1 * c2
                out[e] = out[e] + p if e in out else p
        return MultiLaurentPoly(self.field, self.arity, out)

    __rmul__ = __mul__

    def scale(self, coeff):
        coeff = self.field.coerce(coeff)
        if not coeff:
            return MultiLaurentPoly(self.field, self.arity)
        return MultiLaurentPoly(self.field, self.arity,
                                 {e: coeff * c for e, c in self.terms.items()})

    def shift(self, offset):
        """Multiply by the monomial z^offset."""
        offset = tuple(offset)
        return MultiLaurentPoly(
            self.field, self.arity,
            {tuple(a + b for a, b in zip(e, offset)): c
             for e, c in self.terms.items()})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, MultiLaurentPoly):
            return (self.field == other.field and self.arity == other.arity
                    and self.terms == other.terms)
        try:
            return self.terms == self._coerce(other).terms
        except TypeError:
            return NotImplemented

    def __str__(self):
        def fmt(exp):
            parts = [_var_power(f"z{i + 1}", e) for i, e in enumerate(exp) if e]
            return "*".join(parts)
        return format_terms(self.terms, fmt)

    def __repr__(self):
        return f"MultiLaurentPoly({self})"


def _var_power(var, exp):
    if exp == 0:
        return ""
    if exp == 1:
        return var
    return f"{var}^{exp}"


def format_terms(terms, fmt_exp):
    """Shared printer: sorted exponents, '-' folded into the separators."""
    if not terms:
        return "0"
    parts = []
    for exp in sorted(terms):
        c = terms[exp]
        mono = fmt_exp(exp)
        if not mono:
            text = str(c)
        elif c == 1:
            text = mono
        elif c == -1:
            text = f"-{mono}"
        elif _scalar_is_simple(c):
            text = f"{c}*{mono}"
        else:
            text = f"({c})*{mono}"
        parts.append(text)
    out = parts[0]
    for part in parts[1:]:
        if part.startswith("-"):
            out += " - " + part[1:]
        else:
            out += " + " + part
    return out
