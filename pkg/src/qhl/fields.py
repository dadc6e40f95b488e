"""Exact scalar arithmetic: the rationals and towers of rational-function fields.

Scalars live either in QQ (represented by ``fractions.Fraction``) or in an
iterated rational-function field such as QQ(q) or QQ(q)(eta).  An element of
K(x) is a quotient num/den of dense polynomials in x over K, kept in
canonical form:

  * gcd(num, den) = 1  (polynomial gcd over the coefficient field K),
  * den is monic,
  * zero is 0/1.

Canonical form makes equality structural: two scalars are equal exactly when
their normalized representations coincide, so every identity checked by this
package is an identity of the indeterminates, not of sampled values.

Dense polynomials are plain lists [a0, a1, ...] of K-elements with no
trailing zeros; [] is the zero polynomial.  All values are immutable by
convention: no function mutates its arguments.
"""

from __future__ import annotations

from fractions import Fraction


class PoleError(ZeroDivisionError):
    """Evaluation hit a zero denominator after reduction."""


# ---------------------------------------------------------------------------
# dense polynomial helpers (module-private, K = coefficient field handle)
# ---------------------------------------------------------------------------

def _trim(coeffs):
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] = out[i] + y
    return _trim(out)


def _pneg(a):
    return [-c for c in a]


def _psub(a, b):
    return _padd(a, _pneg(b))


def _pscale(c, a):
    if not c:
        return []
    return _trim([c * x for x in a])


def _pmul(K, a, b):
    if not a or not b:
        return []
    out = [K.zero() for _ in range(len(a) + len(b) - 1)]
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = out[i + j] + x * y
    return _trim(out)


def _pdivmod(K, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    quo = [K.zero() for _ in range(max(len(a) - len(b) + 1, 0))]
    inv_lead = K.one() / b[-1]
    while len(rem) >= len(b):
        c = rem[-1] * inv_lead
        d = len(rem) - len(b)
        if c:
            quo[d] = c
            for i, y in enumerate(b):
                rem[d + i] = rem[d + i] - c * y
        rem.pop()  # leading term is now zero by construction
    return _trim(quo), _trim(rem)


def _valuation(a):
    for i, c in enumerate(a):
        if c:
            return i
    return -1


def _is_monomial(a):
    return bool(a) and _valuation(a) == len(a) - 1


def _pmonic(K, a):
    if not a:
        return a
    lead = a[-1]
    if lead == K.one():
        return a
    inv = K.one() / lead
    return [c * inv for c in a]


def _pgcd(K, a, b):
    if not a:
        return _pmonic(K, list(b))
    if not b:
        return _pmonic(K, list(a))
    # monomials divide exactly up to their valuation; skip the Euclid loop
    if _is_monomial(a) or _is_monomial(b):
        v = min(_valuation(a), _valuation(b))
        return [K.zero()] * v + [K.one()]
    a, b = list(a), list(b)
    while b:
        a, b = b, _pdivmod(K, a, b)[1]
    return _pmonic(K, a)


def _peval(K, a, x):
    acc = K.zero()
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _scalar_is_simple(s):
    """True when str(s) needs no parentheses as a coefficient factor."""
    text = str(s)
    body = text[1:] if text.startswith("-") else text
    return not any(ch in body for ch in "+-*/ ")


def poly_string(coeffs, var):
    """Human-readable form of a dense polynomial, lowest degree first."""
    if not coeffs:
        return "0"
    parts = []
    for exp, c in enumerate(coeffs):
        if not c:
            continue
        if exp == 0:
            term = str(c)
        else:
            v = var if exp == 1 else f"{var}^{exp}"
            if c == 1:
                term = v
            elif c == -1:
                term = f"-{v}"
            elif _scalar_is_simple(c):
                term = f"{c}*{v}"
            else:
                term = f"({c})*{v}"
        parts.append(term)
    out = parts[0]
    for term in parts[1:]:
        if term.startswith("-"):
            out += " - " + term[1:]
        else:
            out += " + " + term
    return out


# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------

class RationalField:
    """The field QQ; its elements are ``fractions.Fraction`` values."""

    variables = ()

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return parse_scalar(self, x)
        raise TypeError(f"cannot coerce {x!r} into QQ")

    def contains(self, x):
        return isinstance(x, (Fraction, int))

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class FractionField:
    """The rational-function field base(var) over a base field."""

    def __init__(self, base, var):
        self.base = base
        self.var = var
        if var in base.variables:
            raise ValueError(f"variable {var!r} already used in the tower")
        self.variables = base.variables + (var,)
        self._one = RatFunc(self, [base.one()], [base.one()], normalized=True)
        self._zero = RatFunc(self, [], [base.one()], normalized=True)

    def zero(self):
        return self._zero

    def one(self):
        return self._one

    def gen(self):
        return RatFunc(self, [self.base.zero(), self.base.one()], [self.base.one()],
                       normalized=True)

    def gen_named(self, name):
        """The named generator of the tower, lifted into this field."""
        if name == self.var:
            return self.gen()
        if name not in self.base.variables:
            raise ValueError(f"no generator {name!r} in {self!r}")
        return self.coerce(self.base.gen_named(name))

    def contains(self, x):
        if isinstance(x, RatFunc) and x.field == self:
            return True
        return self.base.contains(x)

    def coerce(self, x):
        if isinstance(x, RatFunc):
            if x.field == self:
                return x
            if self.base.contains(x):
                return RatFunc(self, [self.base.coerce(x)], [self.base.one()],
                               normalized=True)
            raise TypeError(f"element of {x.field!r} does not embed in {self!r}")
        if isinstance(x, (int, Fraction)):
            c = self.base.coerce(x)
            return RatFunc(self, [c] if c else [], [self.base.one()], normalized=True)
        if isinstance(x, str):
            return parse_scalar(self, x)
        raise TypeError(f"cannot coerce {x!r} into {self!r}")

    def __eq__(self, other):
        return (isinstance(other, FractionField)
                and self.var == other.var and self.base == other.base)

    def __hash__(self):
        return hash(("FractionField",) + self.variables)

    def __repr__(self):
        return f"QQ({', '.join(self.variables)})"


def function_field(*variables, base=QQ):
    """Build the iterated rational-function field base(v1)(v2)..."""
    field = base
    for var in variables:
        field = FractionField(field, var)
    return field


class RatFunc:
    """An element of a FractionField, stored as a reduced quotient num/den."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field, num, den, normalized=False):
        K = field.base
        if not normalized:
            num = _trim(list(num))
            den = _trim(list(den))
            if not den:
                raise ZeroDivisionError(f"zero denominator in {field!r}")
            if not num:
                den = [K.one()]
            else:
                g = _pgcd(K, num, den)
                if len(g) > 1 or g[0] != K.one():
                    num = _pdivmod(K, num, g)[0]
                    den = _pdivmod(K, den, g)[0]
                lead = den[-1]
                if lead != K.one():
                    inv = K.one() / lead
                    num = [c * inv for c in num]
                    den = [c * inv for c in den]
        self.field = field
        self.num = tuple(num)
        self.den = tuple(den)

    # -- coercion helpers ---------------------------------------------------

    def _lift(self, other):
        try:
            return self.field.coerce(other)
        except TypeError:
            return None

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        K = self.field.base
        if self.den == other.den:
            return RatFunc(self.field, _padd(list(self.num), list(other.num)),
                           list(self.den))
        num = _padd(_pmul(K, list(self.num), list(other.den)),
                    _pmul(K, list(other.num), list(self.den)))
        den = _pmul(K, list(self.den), list(other.den))
        return RatFunc(self.field, num, den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(self.field, _pneg(list(self.num)), list(self.den),
                       normalized=True)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        K = self.field.base
        num = _pmul(K, list(self.num), list(other.num))
        den = _pmul(K, list(self.den), list(other.den))
        return RatFunc(self.field, num, den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError(f"division by zero in {self.field!r}")
        K = self.field.base
        num = _pmul(K, list(self.num), list(other.den))
        den = _pmul(K, list(self.den), list(other.num))
        return RatFunc(self.field, num, den)

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            if not self.num:
                raise ZeroDivisionError("negative power of zero")
            base = RatFunc(self.field, list(self.den), list(self.num))
            exponent = -exponent
        else:
            base = self
        result = self.field.one()
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- structure ----------------------------------------------------------

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) or (
                isinstance(other, RatFunc) and other.field != self.field):
            other = self._lift(other)
            if other is None:
                return NotImplemented
        if not isinstance(other, RatFunc):
            return NotImplemented
        return (self.field == other.field and self.num == other.num
                and self.den == other.den)

    def eval_top(self, value):
        """Evaluate the top variable at a base-field value.

        Raises PoleError when the reduced denominator vanishes there.
        """
        K = self.field.base
        value = K.coerce(value)
        den = _peval(K, self.den, value)
        if not den:
            raise PoleError(
                f"pole of {self} at {self.field.var} = {value}")
        return _peval(K, self.num, value) / den

    def __str__(self):
        num = poly_string(self.num, self.field.var)
        if len(self.den) == 1 and self.den[0] == self.field.base.one():
            return num
        den = poly_string(self.den, self.field.var)
        if " " in num:
            num = f"({num})"
        if " " in den:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"RatFunc({self})"


# ---------------------------------------------------------------------------
# parsing of scalar expressions ("1 - q^2", "(1-q^3)/(1-q)", "2/3", ...)
# ---------------------------------------------------------------------------

def _tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("num", int(text[i:j])))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j]))
            i = j
        elif ch in "+-*/^()":
            tokens.append((ch, ch))
            i += 1
        else:
            raise ValueError(f"unexpected character {ch!r} in scalar expression")
    return tokens


class _Parser:
    def __init__(self, field, tokens):
        self.field = field
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def take(self, kind=None):
        if self.pos >= len(self.tokens):
            raise ValueError("unexpected end of scalar expression")
        tok = self.tokens[self.pos]
        if kind is not None and tok[0] != kind:
            raise ValueError(f"expected {kind!r}, found {tok[1]!r}")
        self.pos += 1
        return tok

    def expr(self):
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek() in ("*", "/"):
            op = self.take()[0]
            rhs = self.unary()
            value = value * rhs if op == "*" else value / rhs
        return value

    def unary(self):
        if self.peek() == "-":
            self.take()
            return -self.unary()
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == "^":
            self.take()
            sign = 1
            if self.peek() == "-":
                self.take()
                sign = -1
            exp = sign * self.take("num")[1]
            return base ** exp
        return base

    def atom(self):
        kind, value = self.take()
        if kind == "num":
            return self.field.coerce(value)
        if kind == "name":
            if isinstance(self.field, RationalField):
                raise ValueError(f"unknown symbol {value!r} over QQ")
            if value not in self.field.variables:
                raise ValueError(
                    f"unknown symbol {value!r}; known: {self.field.variables}")
            return self.field.gen_named(value)
        if kind == "(":
            inner = self.expr()
            self.take(")")
            return inner
        raise ValueError(f"unexpected token {value!r}")


def parse_scalar(field, text):
    """Parse a scalar expression into an element of the given field."""
    parser = _Parser(field, _tokenize(text))
    value = parser.expr()
    if parser.pos != len(parser.tokens):
        raise ValueError(f"trailing input in scalar expression {text!r}")
    # ** on Fractions yields Fraction; on RatFunc yields RatFunc
    return field.coerce(value) if not isinstance(value, RatFunc) else value


def scalar_string(x):
    """Canonical printable form of a scalar (Fraction or RatFunc)."""
    return str(x)
