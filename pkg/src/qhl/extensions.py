"""Central extensions of quasi-hom-Lie algebras.

The extension E of L by an abelian a lives on tagged keys ("l", x) and
("a", k).  The input data is

  * a bilinear, omega-alternating map g on L-basis pairs into a,
  * linear maps f, h on E determined by their L-parts F, H together with
    the required restrictions f(0, a) = alpha_a(a), h(0, a) = beta_a(a),

and the builder refuses data that fails the four admissibility conditions
(alternation and restrictions above, the twisted-homomorphism compatibility
between g, f, h, and the cyclic cocycle condition).

omega on E acts blockwise: the L-scalar on section pairs, the a-scalar on
injected pairs.  Mixed pairs take a caller-supplied scalar, defaulting to
the constant -1 (adequate whenever both omegas are the constant -1; graded
fixtures pass a shared grade-determined scalar instead).  Mixed pairs only
meet zero brackets in a central extension, so every axiom check is exact
regardless of that convention.
"""

from __future__ import annotations

import itertools

from .core import QhlAlgebra
from .reports import CheckReport, cyclic3
from .vectors import slinear, vadd, vapply, vbilinear, vneg, vscale, vstr, vsub, vterm, vzero


def lk(x):
    return ("l", x)


def ak(x):
    return ("a", x)


def section_part(vec):
    return {key[1]: c for key, c in vec.items() if key[0] == "l"}


def injected_part(vec):
    return {key[1]: c for key, c in vec.items() if key[0] == "a"}


def lift_l(vec):
    return {lk(x): c for x, c in vec.items()}


def lift_a(vec):
    return {ak(x): c for x, c in vec.items()}


class ExtensionData:
    """The (g, f, h) data defining a candidate central extension E = L + a.

    g: (L-key, L-key) -> a-vector.  F and H are the L-parts of f and h
    (defaulting to zero); their a-parts are forced to alpha_a and beta_a.
    """

    def __init__(self, L, a, g, F=None, H=None, omega_mixed=None, name=""):
        self.L = L
        self.a = a
        self.g = g
        self.F = F if F is not None else (lambda x: vzero())
        self.H = H if H is not None else (lambda x: vzero())
        self.omega_mixed = omega_mixed
        self.name = name

    def f(self, ekey):
        tag, key = ekey
        return dict(self.F(key)) if tag == "l" else self.a.alpha(key)

    def h(self, ekey):
        tag, key = ekey
        return dict(self.H(key)) if tag == "l" else self.a.beta(key)

    def f_vec(self, evec):
        return vapply(self.f, evec)

    def h_vec(self, evec):
        return vapply(self.h, evec)

    def g_vec(self, u, v):
        return vbilinear(self.g, u, v)


def check_extension_data(data, lwindow, awindow):
    """The admissibility conditions for building a central extension."""
    L, a = data.L, data.a
    lwindow, awindow = list(lwindow), list(awindow)
    rep = CheckReport("extension-data", params={"extension": data.name},
                      window=lwindow)

    for k1, k2 in itertools.product(awindow, repeat=2):
        rep.record((k1, k2), vstr(a.bracket(k1, k2)), "0",
                   note="abelian kernel")

    for x in awindow:
        rep.record((x,), vstr(data.f(ak(x))), vstr(a.alpha(x)),
                   note="f restricted to the kernel is alpha")
        rep.record((x,), vstr(data.h(ak(x))), vstr(a.beta(x)),
                   note="h restricted to the kernel is beta")

    for x, y in itertools.product(lwindow, repeat=2):
        if L.omega_defined(x, y):
            rep.record((x, y), vstr(data.g(x, y)),
                       vstr(vscale(L.omega(x, y), data.g(y, x))),
                       note="omega-alternating")

    for x, y in itertools.product(lwindow, repeat=2):
        lhs = data.g_vec(L.alpha(x), L.alpha(y))
        val = L.bracket(x, y)
        f_of = data.f_vec(vadd(lift_l(val), lift_a(data.g(x, y))))
        rhs = data.h_vec(vadd(lift_l(L.vec_alpha(val)), lift_a(f_of)))
        rep.record((x, y), vstr(lhs), vstr(rhs),
                   note="twisted-homomorphism compatibility of g, f, h")

    for triple in itertools.product(lwindow, repeat=3):
        rotations = cyclic3(triple)
        if not all(L.omega_defined(c, aa) for aa, _, c in rotations):
            continue
        total = vzero()
        for aa, bb, cc in rotations:
            inner = L.bracket(bb, cc)
            term = vadd(
                data.g_vec(L.alpha(aa), inner),
                data.h_vec(vadd(
                    lift_l(L.vec_bracket(vterm(aa, L.field.one()), inner)),
                    lift_a(data.g_vec(vterm(aa, L.field.one()), inner)))))
            total = vadd(total, vscale(L.omega(cc, aa), term))
        rep.record(triple, vstr(total), "0", note="cyclic cocycle condition")
    return rep


class ExtensionInadmissible(ValueError):
    def __init__(self, failure):
        super().__init__(f"extension data rejected: {failure.note} at "
                         f"{failure.where}: {failure.lhs} != {failure.rhs}")
        self.failure = failure


class BuiltExtension:
    """The direct-sum extension E with canonical section, injection, projection."""

    def __init__(self, data):
        self.data = data
        L, a = data.L, data.a
        field = L.field
        minus_one = -field.one()

        def bracket(u, v):
            if u[0] == "l" and v[0] == "l":
                x, y = u[1], v[1]
                out = lift_l(L.bracket(x, y))
                return vadd(out, lift_a(data.g(x, y)))
            return vzero()

        def alpha(u):
            if u[0] == "l":
                return vadd(lift_l(L.alpha(u[1])), lift_a(data.F(u[1])))
            return lift_a(a.alpha(u[1]))

        def beta(u):
            if u[0] == "l":
                return vadd(lift_l(L.beta(u[1])), lift_a(data.H(u[1])))
            return lift_a(a.beta(u[1]))

        def omega(u, v):
            if u[0] == "l" and v[0] == "l":
                return L.omega(u[1], v[1])
            if u[0] == "a" and v[0] == "a":
                return a.omega(u[1], v[1])
            if data.omega_mixed is not None:
                return data.omega_mixed(u, v)
            return minus_one

        def omega_domain(u, v):
            if u[0] == "l" and v[0] == "l":
                return L.omega_defined(u[1], v[1])
            if u[0] == "a" and v[0] == "a":
                return a.omega_defined(u[1], v[1])
            return True

        basis = None
        if L.basis is not None and a.basis is not None:
            basis = [lk(x) for x in L.basis] + [ak(x) for x in a.basis]

        grading = None
        if L._grading is not None and a._grading is not None:
            grading = lambda u: (L.grade(u[1]) if u[0] == "l" else a.grade(u[1]))

        self.algebra = QhlAlgebra(field, bracket, alpha=alpha, beta=beta,
                                  omega=omega, omega_domain=omega_domain,
                                  grading=grading, basis=basis,
                                  name=f"extension({data.name})")

    @property
    def L(self):
        return self.data.L

    @property
    def a(self):
        return self.data.a

    def section(self, x):
        return {lk(x): self.L.field.one()}

    def inject(self, x):
        return {ak(x): self.a.field.one()}

    def ekeys(self, lwindow, awindow):
        return [lk(x) for x in lwindow] + [ak(x) for x in awindow]


def build_extension(data, lwindow, awindow):
    """Check the data and assemble E; inadmissible data is refused."""
    report = check_extension_data(data, lwindow, awindow)
    if not report.ok:
        raise ExtensionInadmissible(report.failures[0])
    return BuiltExtension(data)


# ---------------------------------------------------------------------------
# extraction from a presented extension, and the necessary conditions
# ---------------------------------------------------------------------------

class ExtractedData:
    """(g, f, h) read off a presented extension through a chosen section."""

    def __init__(self, E_alg, L, a, section):
        self.E = E_alg
        self.L = L
        self.a = a
        self.section = section

    def s_vec(self, lvec):
        return vapply(self.section, lvec)

    def g(self, x, y):
        one = self.L.field.one()
        br = self.E.vec_bracket(self.section(x), self.section(y))
        diff = vsub(br, self.s_vec(self.L.bracket(x, y)))
        return injected_part(diff)

    def g_vec(self, u, v):
        return vbilinear(self.g, u, v)

    def f(self, ekey):
        image = self.E.alpha(ekey)
        lpart = section_part(vterm(ekey, self.L.field.one()))
        correction = self.s_vec(self.L.vec_alpha(lpart))
        return injected_part(vsub(image, correction))

    def h(self, ekey):
        image = self.E.beta(ekey)
        lpart = section_part(vterm(ekey, self.L.field.one()))
        correction = self.s_vec(self.L.vec_beta(lpart))
        return injected_part(vsub(image, correction))

    def f_vec(self, evec):
        return vapply(self.f, evec)

    def h_vec(self, evec):
        return vapply(self.h, evec)


def cyclic_condition_values(ex, triple):
    """The weighted cyclic sum of the extracted cocycle condition at a triple.

    The scalar weight is omega of L evaluated on the section arguments; in
    graded cases this is the grade-determined factor on (z, x).
    """
    L = ex.L
    total = vzero()
    for aa, bb, cc in cyclic3(triple):
        inner = L.bracket(bb, cc)
        term = vadd(
            ex.g_vec(L.alpha(aa), inner),
            ex.h_vec(vadd(
                ex.s_vec(L.vec_bracket(vterm(aa, L.field.one()), inner)),
                lift_a(ex.g_vec(vterm(aa, L.field.one()), inner)))))
        total = vadd(total, vscale(L.omega(cc, aa), term))
    return total


def check_necessary_conditions(E_alg, L, a, section, lwindow, awindow,
                               name="necessary-conditions"):
    """What any central extension must satisfy, via section-extracted data.

    Raises when the section does not split the projection; everything else is
    reported as data.
    """
    lwindow, awindow = list(lwindow), list(awindow)
    one = L.field.one()
    for x in lwindow:
        if section_part(section(x)) != {x: one}:
            raise ValueError(f"section does not split the projection at {x}")

    rep = CheckReport(name, window=lwindow)
    ex = ExtractedData(E_alg, L, a, section)

    # the section must intertwine the two omegas (checked on sampled pairs
    # with injected components mixed in)
    for x, y in itertools.product(lwindow, repeat=2):
        if not L.omega_defined(x, y):
            continue
        probes = [(section(x), section(y))]
        if awindow:
            k0 = awindow[0]
            probes.append((vadd(section(x), {ak(k0): one}),
                           vadd(section(y), {ak(k0): one})))
        for u, v in probes:
            w = ex.E.omega_on_vectors(u, v)
            rep.require(w is not None and w == L.omega(x, y), (x, y),
                        str(w), str(L.omega(x, y)),
                        note="section intertwines omega")

    for x in awindow:
        rep.record((x,), vstr(ex.f(ak(x))), vstr(a.alpha(x)),
                   note="f on the kernel is alpha")
        rep.record((x,), vstr(ex.h(ak(x))), vstr(a.beta(x)),
                   note="h on the kernel is beta")

    for x, y in itertools.product(lwindow, repeat=2):
        lhs = ex.g_vec(L.alpha(x), L.alpha(y))
        e_bracket = E_alg.vec_bracket(section(x), section(y))
        rhs = ex.h_vec(vadd(ex.s_vec(L.vec_alpha(L.bracket(x, y))),
                            lift_a(ex.f_vec(e_bracket))))
        rep.record((x, y), vstr(lhs), vstr(rhs),
                   note="compatibility of extracted g, f, h")

    for triple in itertools.product(lwindow, repeat=3):
        if not all(L.omega_defined(c, aa) for aa, _, c in cyclic3(triple)):
            continue
        rep.record(triple, vstr(cyclic_condition_values(ex, triple)), "0",
                   note="cyclic cocycle condition")
    return rep


# ---------------------------------------------------------------------------
# equivalence of extensions
# ---------------------------------------------------------------------------

def transform_cocycle(L, g, xi):
    """The cocycle of the shifted section: g'(x, y) = g(x, y) - xi(<x, y>)."""
    def g_prime(x, y):
        return vsub(g(x, y), vapply(xi, L.bracket(x, y)))
    return g_prime


def transformed_extension(E, xi, F=None, H=None, lwindow=None, awindow=None,
                          name=None):
    """Build the weakly equivalent extension carrying g - xi(<.,.>)."""
    data = E.data
    g_prime = transform_cocycle(data.L, data.g, xi)
    new = ExtensionData(data.L, data.a, g_prime,
                        F=F if F is not None else data.F,
                        H=H if H is not None else data.H,
                        omega_mixed=data.omega_mixed,
                        name=name or f"{data.name}-shifted")
    if lwindow is not None:
        return build_extension(new, lwindow, awindow)
    return BuiltExtension(new)


def equivalence_map(E, E2, xi):
    """phi(s(l) + i(a)) = s'(l) + i'(a - xi(l)) on tagged basis keys."""
    one = E.L.field.one()

    def phi(ekey):
        tag, key = ekey
        if tag == "a":
            return {ak(key): one}
        return vadd({lk(key): one}, lift_a(vneg(xi(key))))
    return phi


def check_equivalence(E, E2, xi, mode, lwindow, awindow):
    """Weak mode: phi respects brackets and the boundary maps; strong mode
    additionally demands the four intertwining conditions on xi, f, h."""
    if mode not in ("weak", "strong"):
        raise ValueError(f"unknown equivalence mode {mode!r}")
    lwindow, awindow = list(lwindow), list(awindow)
    rep = CheckReport(f"{mode}-equivalence", window=lwindow)
    L, a = E.L, E.a
    phi = equivalence_map(E, E2, xi)
    phi_inv = equivalence_map(E2, E, lambda x: vneg(xi(x)))

    def vec_phi(u):
        return vapply(phi, u)

    ekeys = E.ekeys(lwindow, awindow)
    for u in ekeys:
        rep.record((u,), vstr(vapply(phi_inv, phi(u))),
                   vstr(vterm(u, L.field.one())), note="phi is invertible")
    for u, v in itertools.product(ekeys, repeat=2):
        lhs = E2.algebra.vec_bracket(phi(u), phi(v))
        rhs = vec_phi(E.algebra.bracket(u, v))
        rep.record((u, v), vstr(lhs), vstr(rhs), note="phi respects brackets")

    if mode == "strong":
        exE = ExtractedData(E.algebra, L, a, E.section)
        exE2 = ExtractedData(E2.algebra, L, a, E2.section)
        for x in lwindow:
            rep.record((x,), vstr(a.vec_alpha(xi(x))),
                       vstr(vapply(xi, L.alpha(x))),
                       note="xi intertwines alpha")
            rep.record((x,), vstr(a.vec_beta(xi(x))),
                       vstr(vapply(xi, L.beta(x))),
                       note="xi intertwines beta")
            rep.record((x,), vstr(exE.f(lk(x))), vstr(exE2.f(lk(x))),
                       note="f agrees on the sections")
            rep.record((x,), vstr(exE.h(lk(x))), vstr(exE2.h(lk(x))),
                       note="h agrees on the sections")
    return rep


# ---------------------------------------------------------------------------
# independence of the extracted conditions from the section
# ---------------------------------------------------------------------------

def shifted_section(E, kmap):
    """The section x -> s(x) + i(k(x)) for a linear k: L -> a."""
    def section(x):
        return vadd(E.section(x), lift_a(kmap(x)))
    return section


def check_section_independence(E, kmaps, lwindow, awindow):
    """Shifting the section must not move the extracted invariants.

    For each supplied k the extracted cocycle shifts by -k(<.,.>), h shifts
    by -k(beta .), and the weighted cyclic condition values are unchanged
    triple by triple.
    """
    lwindow, awindow = list(lwindow), list(awindow)
    rep = CheckReport("section-independence", window=lwindow)
    L, a = E.L, E.a
    base = ExtractedData(E.algebra, L, a, E.section)
    for idx, kmap in enumerate(kmaps):
        moved = ExtractedData(E.algebra, L, a, shifted_section(E, kmap))
        for x, y in itertools.product(lwindow, repeat=2):
            expected = vsub(base.g(x, y), vapply(kmap, L.bracket(x, y)))
            rep.record((idx, x, y), vstr(moved.g(x, y)), vstr(expected),
                       note="cocycle shifts by the coboundary of k")
        for x in lwindow:
            expected = vsub(base.h(lk(x)), vapply(kmap, L.beta(x)))
            rep.record((idx, x), vstr(moved.h(lk(x))), vstr(expected),
                       note="h shifts by k after beta")
        for triple in itertools.product(lwindow, repeat=3):
            if not all(L.omega_defined(c, aa)
                       for aa, _, c in cyclic3(triple)):
                continue
            rep.record((idx,) + triple,
                       vstr(cyclic_condition_values(moved, triple)),
                       vstr(cyclic_condition_values(base, triple)),
                       note="cyclic condition value is section-independent")
    return rep


# ---------------------------------------------------------------------------
# specialized reductions of the cyclic condition
# ---------------------------------------------------------------------------

def homlie_reduction_check(E, lwindow):
    """With beta = id everywhere the extracted condition collapses to the
    cyclic sum of g((id + alpha)(x), <y, z>); compare the two term by term."""
    L = E.L
    lwindow = list(lwindow)
    rep = CheckReport("homlie-reduction", window=lwindow)
    ex = ExtractedData(E.algebra, L, E.a, E.section)
    one = L.field.one()
    for triple in itertools.product(lwindow, repeat=3):
        for aa, bb, cc in cyclic3(triple):
            inner = L.bracket(bb, cc)
            general = vadd(
                ex.g_vec(L.alpha(aa), inner),
                ex.h_vec(vadd(
                    ex.s_vec(L.vec_bracket(vterm(aa, one), inner)),
                    lift_a(ex.g_vec(vterm(aa, one), inner)))))
            general = vscale(L.omega(cc, aa), general)
            reduced = ex.g_vec(vadd(vterm(aa, one), L.alpha(aa)), inner)
            reduced = vscale(L.omega(cc, aa), reduced)
            rep.record((triple, (aa, bb, cc)), vstr(general), vstr(reduced),
                       note="term-by-term hom-Lie reduction")
    return rep


def color_reduction_check(E, eps, lwindow):
    """With alpha = beta = id and omega = -eps the extracted condition is
    -2 eps(grade z, grade x) g(x, <y, z>) per term; compare term by term.

    The vanishing of the cyclic sum is then exactly the classical color
    2-cocycle condition."""
    L = E.L
    lwindow = list(lwindow)
    rep = CheckReport("color-reduction", window=lwindow)
    ex = ExtractedData(E.algebra, L, E.a, E.section)
    one = L.field.one()
    two = one + one
    for triple in itertools.product(lwindow, repeat=3):
        for aa, bb, cc in cyclic3(triple):
            inner = L.bracket(bb, cc)
            general = vadd(
                ex.g_vec(L.alpha(aa), inner),
                ex.h_vec(vadd(
                    ex.s_vec(L.vec_bracket(vterm(aa, one), inner)),
                    lift_a(ex.g_vec(vterm(aa, one), inner)))))
            general = vscale(L.omega(cc, aa), general)
            factor = eps.value(L.grade(cc), L.grade(aa))
            reduced = vscale(-(two * factor), ex.g_vec(vterm(aa, one), inner))
            rep.record((triple, (aa, bb, cc)), vstr(general), vstr(reduced),
                       note="term-by-term color reduction")
    return rep
