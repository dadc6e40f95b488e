"""Deformed Witt algebras carried by twisted derivations on Laurent rings.

Generators are d_n = -t^n * D (one variable) or d_k = -z^k * D (several
variables), and the bracket of two module elements a*D, b*D is

    < a*D, b*D > = (sigma(a) D(b) - sigma(b) D(a)) * D,

re-expressed in the d-basis by reading Laurent coefficients off against
-t^j * D.  That formula is the ground truth everywhere in this module: the
piecewise closed-form relations and the deformed Jacobi identities are
*verified against it* over finite index windows, never substituted for it.

Elements are finitely-supported coefficient vectors {index: scalar} as in
``qhl.vectors``.
"""

from __future__ import annotations

from .fields import function_field
from .laurent import LaurentPoly, MultiLaurentPoly
from .reports import CheckReport, cyclic3, parallel_map
from .sigma import (MultiSigmaDerivation, MultiSigmaEndo, SigmaDerivation,
                    SigmaEndo, twist_element, twist_element_multi)
from .vectors import vadd, vbilinear, vneg, vscale, vstr, vterm, vzero


class DeformedWittAlgebra:
    """The algebra on d_n = -t^n D for D built from sigma(t) = q t^s.

    The twist element is part of the structure (it enters the six-term Jacobi
    identity), so construction requires s >= 1.
    """

    def __init__(self, field=None, q=None, s=1, k=0, eta=None):
        if field is None:
            field = function_field("q")
        if q is None:
            q = field.gen_named("q")
        self.field = field
        self.s = s
        self.k = k
        sigma = SigmaEndo(field, q, s)
        self.derivation = SigmaDerivation(sigma, eta=eta, k=k)
        self.q = sigma.q
        self.eta = self.derivation.eta
        self.delta = twist_element(self.derivation)
        self._brackets = {}

    def gen(self, n):
        return vterm(n, self.field.one())

    def bracket_keys(self, n, m):
        """< d_n, d_m > computed from the defining product formula."""
        key = (n, m)
        if key not in self._brackets:
            field = self.field
            a = LaurentPoly.term(field, n, -field.one())
            b = LaurentPoly.term(field, m, -field.one())
            D = self.derivation
            sig = D.sigma
            r = sig.apply(a) * D.apply(b) - sig.apply(b) * D.apply(a)
            self._brackets[key] = {j: -c for j, c in r.terms.items()}
        return self._brackets[key]

    def sigma_image(self, x):
        """The twist of a module element: d_n goes to q^n d_{s n}."""
        sig = self.derivation.sigma
        out = {}
        for n, c in x.items():
            j = self.s * n
            coeff = c * sig.q_power(n)
            out[j] = out[j] + coeff if j in out else coeff
        return {j: c for j, c in out.items() if c}

    def delta_image(self, x):
        """Module scaling by the twist element: d_j picks up delta's shifts."""
        out = vzero()
        for e, de in self.delta.terms.items():
            out = vadd(out, {n + e: de * c for n, c in x.items()})
        return out

    def q_int(self, n):
        """The q-deformed integer {n} = (1 - q^n)/(1 - q), in expanded form."""
        total = self.field.zero()
        if n >= 0:
            for r in range(n):
                total = total + self.derivation.sigma.q_power(r)
        else:
            for r in range(n, 0):
                total = total - self.derivation.sigma.q_power(r)
        return total

    # -- closed forms (checked against bracket_keys, never trusted) --------

    def linear_closed_form(self, n, m):
        """s = 1 relation: eta ({n} - {m}) d_{n+m-k}."""
        if self.s != 1:
            raise ValueError("linear relations require s = 1")
        coeff = self.eta * (self.q_int(n) - self.q_int(m))
        return vterm(n + m - self.k, coeff)

    def nonlinear_closed_form(self, n, m):
        """Piecewise relations for general s >= 1, by the sign pattern of (n, m).

        The mixed case n < 0 <= m carries a leading minus: as printed without
        it the four cases contradict the skew-symmetry they are stated with,
        and the defining product formula fixes the sign (see the unit test
        exercising this case pair by pair).
        """
        s, k, q, eta = self.s, self.k, self.q, self.eta
        out = vzero()

        def accumulate(index, coeff):
            nonlocal out
            out = vadd(out, vterm(index, coeff))

        if n >= 0 and m >= 0:
            if n == m:
                return vzero()
            sign = eta if n > m else -eta
            for l in range(min(n, m), max(n, m)):
                accumulate(s * (n + m - 1) - (k - 1) - l * (s - 1),
                           sign * q ** (n + m - 1 - l))
        elif n >= 0 and m < 0:
            for l in range(-m):
                accumulate((m + l) * (s - 1) + n * s + m - k,
                           eta * q ** (n + m + l))
            for l in range(n):
                accumulate((s - 1) * l + n + m * s - k,
                           eta * q ** (m + l))
        elif n < 0 and m >= 0:
            for l1 in range(m):
                accumulate((s - 1) * l1 + m + n * s - k,
                           -eta * q ** (n + l1))
            for l2 in range(-n):
                accumulate((n + l2) * (s - 1) + n + m * s - k,
                           -eta * q ** (m + n + l2))
        else:
            if n == m:
                return vzero()
            sign = eta if n > m else -eta
            for l in range(min(-n, -m), max(-n, -m)):
                accumulate((m + n) * s + (s - 1) * l - k,
                           sign * q ** (n + m + l))
        return out


class MultiWittAlgebra:
    """The several-variable analogue on d_k = -z^k D, D = Q (id - sigma)/z^G."""

    def __init__(self, field, qs, rows, G=None, Q=None):
        sigma = MultiSigmaEndo(field, qs, rows)
        self.field = field
        self.arity = sigma.arity
        self.derivation = MultiSigmaDerivation(sigma, Q=Q, G=G)
        self.Q = self.derivation.Q
        self.G = self.derivation.G
        self.delta = twist_element_multi(self.derivation)
        self._brackets = {}

    def gen(self, exp):
        return vterm(tuple(exp), self.field.one())

    def bracket_keys(self, kv, lv):
        key = (tuple(kv), tuple(lv))
        if key not in self._brackets:
            field = self.field
            a = MultiLaurentPoly.term(field, key[0], -field.one())
            b = MultiLaurentPoly.term(field, key[1], -field.one())
            D = self.derivation
            sig = D.sigma
            r = sig.apply(a) * D.apply(b) - sig.apply(b) * D.apply(a)
            self._brackets[key] = {j: -c for j, c in r.terms.items()}
        return self._brackets[key]

    def sigma_image(self, x):
        sig = self.derivation.sigma
        out = {}
        for exp, c in x.items():
            j = sig.exp_image(exp)
            coeff = c * sig.q_power(exp)
            out[j] = out[j] + coeff if j in out else coeff
        return {j: c for j, c in out.items() if c}

    def delta_image(self, x):
        out = vzero()
        for e, de in self.delta.terms.items():
            out = vadd(out, {tuple(n + o for n, o in zip(exp, e)): de * c
                             for exp, c in x.items()})
        return out

    def displayed_form(self, kv, lv):
        """Q q^l d_{E(l)+k-G} - Q q^k d_{E(k)+l-G}, E the sigma exponent map."""
        sig = self.derivation.sigma
        kv, lv = tuple(kv), tuple(lv)
        first = tuple(a + b - g for a, b, g in zip(sig.exp_image(lv), kv, self.G))
        second = tuple(a + b - g for a, b, g in zip(sig.exp_image(kv), lv, self.G))
        out = vterm(first, self.Q * sig.q_power(lv))
        return vadd(out, vterm(second, -(self.Q * sig.q_power(kv))))


# ---------------------------------------------------------------------------
# brackets of vectors and Jacobi defects (shared by plain and mutated algebras)
# ---------------------------------------------------------------------------

def bracket(W, x, y):
    return vbilinear(W.bracket_keys, x, y)


def six_term_defect(W, x, y, z):
    """Cyclic sum of <sigma(x), <y,z>> + delta.<x, <y,z>>; zero iff Jacobi holds."""
    total = vzero()
    for a, b, c in cyclic3((x, y, z)):
        inner = bracket(W, b, c)
        total = vadd(total, bracket(W, W.sigma_image(a), inner))
        total = vadd(total, W.delta_image(bracket(W, a, inner)))
    return total


def three_term_defect(W, n, l, m):
    """(q^n + 1)<d_n, <d_l, d_m>> summed cyclically over (n, l, m); s = 1 only."""
    if W.s != 1:
        raise ValueError("the three-term identity is the s = 1 case")
    total = vzero()
    for a, b, c in cyclic3((n, l, m)):
        coeff = W.derivation.sigma.q_power(a) + W.field.one()
        inner = W.bracket_keys(b, c)
        total = vadd(total, vscale(coeff, bracket(W, W.gen(a), inner)))
    return total


class MutatedWittAlgebra:
    """A deformed Witt algebra with chosen structure constants perturbed.

    Used by the verification harness as a sensitivity probe: every mutation
    must be flagged by at least one checker.
    """

    def __init__(self, base, mutations):
        self.base = base
        self.field = base.field
        self.s = base.s
        self.k = base.k
        self.q = base.q
        self.eta = base.eta
        self.delta = base.delta
        self.derivation = base.derivation
        self.mutations = {tuple(k): dict(v) for k, v in mutations.items()}

    def gen(self, n):
        return self.base.gen(n)

    def bracket_keys(self, n, m):
        value = self.base.bracket_keys(n, m)
        extra = self.mutations.get((n, m))
        return vadd(value, extra) if extra else value

    def sigma_image(self, x):
        return self.base.sigma_image(x)

    def delta_image(self, x):
        return self.base.delta_image(x)

    def q_int(self, n):
        return self.base.q_int(n)

    def linear_closed_form(self, n, m):
        return self.base.linear_closed_form(n, m)

    def nonlinear_closed_form(self, n, m):
        return self.base.nonlinear_closed_form(n, m)


# ---------------------------------------------------------------------------
# window verifiers
# ---------------------------------------------------------------------------

def verify_linear_relations(W, window, jacobi_window=None):
    """s = 1: closed-form relations, skew-symmetry, three-term Jacobi."""
    if W.s != 1:
        raise ValueError("this suite requires s = 1")
    window = list(window)
    jacobi_window = list(jacobi_window) if jacobi_window is not None else window
    rep = CheckReport("linear-deformed-witt",
                      params={"s": W.s, "k": W.k, "eta": str(W.eta)},
                      window=window)

    for n in window:
        for m in window:
            direct = W.bracket_keys(n, m)
            rep.record((n, m), vstr(direct), vstr(W.linear_closed_form(n, m)),
                       note="closed form")
            rep.record((n, m), vstr(direct),
                       vstr(vneg(W.bracket_keys(m, n))), note="skew")

    def jacobi_item(t):
        return t, three_term_defect(W, *t)

    triples = [(n, l, m) for n in jacobi_window for l in jacobi_window
               for m in jacobi_window]
    for t, defect in parallel_map(jacobi_item, triples):
        rep.record(t, vstr(defect), "0", note="three-term Jacobi")
    return rep


def classical_limit_report(W, window, at=1):
    """Specialize the computed relations at a rational q and compare.

    At q = 1 with s = 1, k = 0 the relations collapse to (n - m) d_{n+m}.
    """
    if W.s != 1:
        raise ValueError("classical limit requires s = 1")
    rep = CheckReport("classical-limit", params={"q": str(at)}, window=list(window))
    for n in rep.window:
        for m in rep.window:
            direct = W.bracket_keys(n, m)
            lhs = {j: c.eval_top(at) for j, c in direct.items()}
            lhs = {j: c for j, c in lhs.items() if c}
            expected = W.linear_closed_form(n, m)
            rhs = {j: c.eval_top(at) for j, c in expected.items()}
            rhs = {j: c for j, c in rhs.items() if c}
            rep.record((n, m), vstr(lhs), vstr(rhs), note="specialized relation")
    return rep


def verify_nonlinear_relations(W, window, jacobi_window=None):
    """General s: piecewise closed forms, skew-symmetry, six-term Jacobi."""
    window = list(window)
    jacobi_window = list(jacobi_window) if jacobi_window is not None else window
    rep = CheckReport("nonlinear-deformed-witt",
                      params={"s": W.s, "k": W.k, "eta": str(W.eta)},
                      window=window)
    for n in window:
        for m in window:
            direct = W.bracket_keys(n, m)
            rep.record((n, m), vstr(direct), vstr(W.nonlinear_closed_form(n, m)),
                       note="closed form")
            rep.record((n, m), vstr(direct), vstr(vneg(W.bracket_keys(m, n))),
                       note="skew")

    def jacobi_item(t):
        n, m, l = t
        return t, six_term_defect(W, W.gen(n), W.gen(m), W.gen(l))

    triples = [(n, m, l) for n in jacobi_window for m in jacobi_window
               for l in jacobi_window]
    for t, defect in parallel_map(jacobi_item, triples):
        rep.record(t, vstr(defect), "0", note="six-term Jacobi")
    return rep


def verify_multivariable_relations(W, window, jacobi_window=None):
    """Several variables: displayed relation, skew-symmetry, six-term Jacobi."""
    window = [tuple(w) for w in window]
    jacobi_window = ([tuple(w) for w in jacobi_window]
                     if jacobi_window is not None else window)
    rep = CheckReport("multivariable-deformed-witt",
                      params={"arity": W.arity, "G": list(W.G), "Q": str(W.Q)},
                      window=window)
    for kv in window:
        for lv in window:
            direct = W.bracket_keys(kv, lv)
            rep.record((kv, lv), vstr(direct), vstr(W.displayed_form(kv, lv)),
                       note="displayed relation")
            rep.record((kv, lv), vstr(direct), vstr(vneg(W.bracket_keys(lv, kv))),
                       note="skew")

    def jacobi_item(t):
        kv, lv, hv = t
        return t, six_term_defect(W, W.gen(kv), W.gen(lv), W.gen(hv))

    triples = [(a, b, c) for a in jacobi_window for b in jacobi_window
               for c in jacobi_window]
    for t, defect in parallel_map(jacobi_item, triples):
        rep.record(t, vstr(defect), "0", note="six-term Jacobi")
    return rep


def structure_constants(W, window):
    """Exact bracket table over the window, rows ordered lexicographically."""
    window = list(window)
    return [(n, m, W.bracket_keys(n, m)) for n in window for m in window]
