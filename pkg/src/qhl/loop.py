"""Deformed loop algebras and their one-dimensional central extensions.

Given a quasi-hom-Lie algebra g, the loop algebra lives on keys (x, n) for a
base key x and an integer degree n, with

    <(x, n), (y, m)> = <x, y> at degree n + m,

and alpha, beta, omega all acting through the base algebra, degree-wise.

The central extension adds one key CENTER with bracket values

    <(x, n), (y, m)> += B(x, y) * eta * {n}_q * [n + m == k] * CENTER,

the residue factorization of the 2-cocycle through the degree-(-k) twisted
derivation t^n -> eta {n}_q t^{n-k} (this shape is specific to sigma(t) = q t).
Whether the cyclic cocycle condition actually holds is *measured*: the
residual report lists the triples where the weighted cyclic sum is nonzero,
because away from q = 1 it generally is.
"""

from __future__ import annotations

import itertools

from .core import QhlAlgebra, check_all_axioms
from .laurent import LaurentPoly
from .reports import CheckReport, Failure, cyclic3
from .sigma import SigmaDerivation, SigmaEndo
from .vectors import sbilinear, slinear, vadd, vscale, vstr, vterm, vzero

CENTER = "c"


def build_loop(base, name=None):
    """The loop algebra of a base algebra, on keys (base key, degree)."""
    field = base.field

    def bracket(u, v):
        (x, n), (y, m) = u, v
        return {(z, n + m): c for z, c in base.bracket(x, y).items()}

    def alpha(u):
        x, n = u
        return {(z, n): c for z, c in base.alpha(x).items()}

    def beta(u):
        x, n = u
        return {(z, n): c for z, c in base.beta(x).items()}

    def omega(u, v):
        return base.omega(u[0], v[0])

    def omega_domain(u, v):
        return base.omega_defined(u[0], v[0])

    grading = None
    if base._grading is not None:
        grading = lambda u: base.grade(u[0])

    return QhlAlgebra(field, bracket, alpha=alpha, beta=beta, omega=omega,
                      omega_domain=omega_domain, grading=grading,
                      name=name or f"loop({base.name})")


def loop_window(base_keys, degrees):
    return [(x, n) for x in base_keys for n in degrees]


def q_integer(field, q, n):
    """{n}_q as a field element: the geometric sum, n at q = 1."""
    q = field.coerce(q)
    total = field.zero()
    if n >= 0:
        for r in range(n):
            total = total + q ** r
    else:
        for r in range(n, 0):
            total = total - q ** r
    return total


class LoopCocycle:
    """g((x,n), (y,m)) = B(x, y) * eta * {n}_q * [n + m == k]."""

    def __init__(self, field, B, eta=1, k=0, q=None):
        self.field = field
        self.B = B if callable(B) else (lambda x, y, table=dict(B): table.get((x, y), field.zero()))
        self.eta = field.coerce(eta)
        self.k = k
        self.q = field.coerce(q) if q is not None else field.gen_named("q")
        self._qints = {}

    def q_int(self, n):
        if n not in self._qints:
            self._qints[n] = q_integer(self.field, self.q, n)
        return self._qints[n]

    def value(self, u, v):
        (x, n), (y, m) = u, v
        if n + m != self.k:
            return self.field.zero()
        return self.field.coerce(self.B(x, y)) * self.eta * self.q_int(n)

    def residue_oracle(self, n, m):
        """(D(t^n) * t^m) at degree zero, computed by actually applying D.

        Independent route for the factored values eta {n}_q [n+m == k].
        """
        sigma = SigmaEndo(self.field, self.q, 1)
        D = SigmaDerivation(sigma, eta=self.eta, k=self.k)
        image = D.apply(LaurentPoly.term(self.field, n)) * LaurentPoly.term(self.field, m)
        return image.coeff(0)


def build_central_loop(base, cocycle, name=None):
    """The loop algebra extended by one central key CENTER.

    omega is extended by the identity on the central line (scalar one on any
    pair touching CENTER); the bracket of CENTER with everything is zero.
    """
    loop = build_loop(base)
    field = base.field
    one = field.one()

    def bracket(u, v):
        if u == CENTER or v == CENTER:
            return vzero()
        out = dict(loop.bracket(u, v))
        c = cocycle.value(u, v)
        if c:
            out = vadd(out, vterm(CENTER, c))
        return out

    def alpha(u):
        if u == CENTER:
            return vterm(CENTER, one)
        return loop.alpha(u)

    def beta(u):
        if u == CENTER:
            return vterm(CENTER, one)
        return loop.beta(u)

    def omega(u, v):
        if u == CENTER or v == CENTER:
            return one
        return loop.omega(u, v)

    def omega_domain(u, v):
        if u == CENTER or v == CENTER:
            return True
        return loop.omega_defined(u, v)

    return QhlAlgebra(field, bracket, alpha=alpha, beta=beta, omega=omega,
                      omega_domain=omega_domain,
                      name=name or f"central-loop({base.name})")


def check_central_loop_structure(base, cocycle, base_keys, degrees):
    """Centrality, fixed central line, omega-symmetry, beta-twisting."""
    ext = build_central_loop(base, cocycle)
    keys = loop_window(base_keys, degrees)
    rep = CheckReport("central-loop-structure",
                      params={"k": cocycle.k, "eta": str(cocycle.eta),
                              "q": str(cocycle.q)},
                      window=keys)
    one = base.field.one()
    for u in keys:
        rep.record((CENTER, u), vstr(ext.bracket(CENTER, u)), "0",
                   note="center against the loop part")
        rep.record((u, CENTER), vstr(ext.bracket(u, CENTER)), "0",
                   note="loop part against the center")
    rep.record((CENTER,), vstr(ext.alpha(CENTER)), vstr(vterm(CENTER, one)),
               note="alpha fixes the center")
    rep.record((CENTER,), vstr(ext.beta(CENTER)), vstr(vterm(CENTER, one)),
               note="beta fixes the center")
    for u, v in itertools.product(keys + [CENTER], repeat=2):
        if not ext.omega_defined(u, v):
            continue
        rep.record((u, v), vstr(ext.bracket(u, v)),
                   vstr(vscale(ext.omega(u, v), ext.bracket(v, u))),
                   note="omega-symmetry")
    for u, v in itertools.product(keys, repeat=2):
        lhs = ext.vec_bracket(ext.alpha(u), ext.alpha(v))
        rhs = ext.vec_beta(ext.vec_alpha(ext.bracket(u, v)))
        rep.record((u, v), vstr(lhs), vstr(rhs), note="beta-twisting")
    return ext, rep


def check_loop_cocycle(base, cocycle, base_keys, degrees):
    """Residuals of the cyclic cocycle condition for the central loop.

    residual(x y z; n m l) = cyclic sum of
        eta {n}_q [n+m+l == k] B((alpha + id)(x), <y, z>),
    reported per triple; zero residuals mean the extension satisfies the
    qhl-Jacobi identity there.
    """
    base_keys, degrees = list(base_keys), list(degrees)
    rep = CheckReport("loop-cocycle-residuals",
                      params={"k": cocycle.k, "eta": str(cocycle.eta),
                              "q": str(cocycle.q),
                              "degrees": [degrees[0], degrees[-1]]},
                      window=base_keys)
    field = base.field
    one = field.one()
    zero = field.zero()
    nonzero = 0
    for x, y, z in itertools.product(base_keys, repeat=3):
        for n, m, l in itertools.product(degrees, repeat=3):
            total = zero
            for (xx, nn), (yy, mm), (zz, ll) in cyclic3(((x, n), (y, m), (z, l))):
                if nn + mm + ll != cocycle.k:
                    continue
                vec = vadd(vterm(xx, one), base.alpha(xx))
                inner = base.bracket(yy, zz)
                pairing = sbilinear(lambda p, r: field.coerce(cocycle.B(p, r)),
                                    vec, inner, zero)
                total = total + cocycle.eta * cocycle.q_int(nn) * pairing
            rep.checked += 1
            if total != zero:
                nonzero += 1
                rep.failures.append(Failure(((x, y, z), (n, m, l)),
                                            str(total), "0",
                                            note="nonzero cocycle residual"))
    rep.note(f"nonzero residuals: {nonzero} of {rep.checked} triples")
    rep.params["nonzero_residuals"] = nonzero
    return rep


def killing_form(alg, basis=None):
    """B(x, y) = trace(ad x . ad y) for a finite-dimensional Lie fixture.

    Demands an honest Lie algebra (alpha = beta = id, omega = -1, brackets
    closing on the basis); symmetry and invariance of the form are verified
    before it is returned.
    """
    basis = list(basis) if basis is not None else list(alg.basis)
    field = alg.field
    minus_one = -field.one()
    for x in basis:
        if alg.alpha(x) != vterm(x, field.one()) or alg.beta(x) != vterm(x, field.one()):
            raise ValueError("Killing form needs alpha = beta = id")
    for x, y in itertools.product(basis, repeat=2):
        if alg.omega(x, y) != minus_one:
            raise ValueError("Killing form needs omega = -1")
        if any(z not in basis for z in alg.bracket(x, y)):
            raise ValueError("bracket does not close on the given basis")
    axioms = check_all_axioms(alg, basis)
    if not axioms.ok:
        f = axioms.failures[0]
        raise ValueError(f"not a Lie algebra: {f.note} fails at {f.where}")

    index = {x: i for i, x in enumerate(basis)}
    n = len(basis)

    def ad_matrix(x):
        # cols[j][i] = coefficient of basis[i] in ad_x(basis[j])
        cols = []
        for y in basis:
            vec = alg.bracket(x, y)
            col = [field.zero()] * n
            for z, c in vec.items():
                col[index[z]] = c
            cols.append(col)
        return cols

    ads = {x: ad_matrix(x) for x in basis}

    def trace_product(mx, my):
        # trace(Mx My) = sum_{i,j} Mx[i][j] My[j][i], with M[i][j] = cols[j][i]
        total = field.zero()
        for jidx in range(n):
            col = my[jidx]
            for iidx in range(n):
                if col[iidx]:
                    total = total + mx[iidx][jidx] * col[iidx]
        return total

    table = {}
    for x in basis:
        for y in basis:
            table[(x, y)] = trace_product(ads[x], ads[y])

    # symmetry and invariance are structural facts about the trace form;
    # verify rather than assume
    for x, y in itertools.product(basis, repeat=2):
        if table[(x, y)] != table[(y, x)]:
            raise AssertionError("Killing form failed symmetry")
    B = lambda x, y: table[(x, y)]
    for x, y, z in itertools.product(basis, repeat=3):
        lhs = slinear(lambda w: B(w, z), alg.bracket(x, y), field.zero())
        rhs = slinear(lambda w: B(x, w), alg.bracket(y, z), field.zero())
        if lhs != rhs:
            raise AssertionError("Killing form failed invariance")
    return table
