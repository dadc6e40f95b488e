"""The quasi-hom-Lie data model and its axiom checkers.

An algebra here is *intensional*: the bracket, the twisting maps alpha and
beta, and the symmetry factor omega are callbacks on basis keys, extended
linearly.  Infinite-dimensional algebras (Witt-type, loop) are therefore
exact; a "window" of keys only bounds which identities get checked, never
the arithmetic itself.

omega is scalar-valued on pairs of basis keys (every instance exercised
here -- minus one, the super sign, minus a commutation factor -- is a scalar
on homogeneous pairs).  Operator-valued omega with a genuinely smaller
domain of definition is out of scope; the domain predicate is kept so
checkers can skip undefined pairs.

The three axioms, on basis keys x, y, z:

  beta-twisting      <alpha(x), alpha(y)> = beta(alpha(<x, y>))
  omega-symmetry     <x, y> = omega(x, y) <y, x>
  qhl-Jacobi         cyclic sum of omega(z, x) (<alpha(x), <y, z>>
                                                + beta(<x, <y, z>>)) = 0
"""

from __future__ import annotations

import itertools

from .reports import CheckReport, cyclic3, parallel_map
from .vectors import (slinear, vadd, vapply, vbilinear, vscale, vstr, vterm,
                      vzero)


class QhlAlgebra:
    """Basis-indexed algebra (bracket, alpha, beta, omega) with linear extension.

    bracket(k1, k2) returns a coefficient vector; alpha/beta map a key to a
    vector (None means the identity); omega(k1, k2) returns a scalar (None
    means the constant -1).  An optional grading maps keys to grade-group
    elements, and omega_domain restricts which pairs omega is defined on.
    """

    def __init__(self, field, bracket, alpha=None, beta=None, omega=None,
                 omega_domain=None, grading=None, basis=None, name=""):
        self.field = field
        self.name = name
        self._bracket = bracket
        self._alpha = alpha
        self._beta = beta
        minus_one = -field.one()
        self._omega = omega if omega is not None else (lambda x, y: minus_one)
        self._omega_domain = omega_domain
        self._grading = grading
        self.basis = list(basis) if basis is not None else None
        self._cache = {}

    # -- key level ----------------------------------------------------------

    def bracket(self, x, y):
        key = (x, y)
        if key not in self._cache:
            self._cache[key] = self._bracket(x, y)
        return self._cache[key]

    def alpha(self, key):
        if self._alpha is None:
            return vterm(key, self.field.one())
        return self._alpha(key)

    def beta(self, key):
        if self._beta is None:
            return vterm(key, self.field.one())
        return self._beta(key)

    def omega(self, x, y):
        return self._omega(x, y)

    def omega_defined(self, x, y):
        if self._omega_domain is None:
            return True
        return self._omega_domain(x, y)

    def grade(self, key):
        if self._grading is None:
            return None
        return self._grading(key)

    # -- linear extension -----------------------------------------------------

    def vec_bracket(self, u, v):
        return vbilinear(self.bracket, u, v)

    def vec_alpha(self, u):
        if self._alpha is None:
            return dict(u)
        return vapply(self.alpha, u)

    def vec_beta(self, u):
        if self._beta is None:
            return dict(u)
        return vapply(self.beta, u)

    def omega_on_vectors(self, u, v):
        """The scalar omega on two vectors, or None when ambiguous/undefined.

        Defined when every pair of support keys gives the same scalar --
        i.e. when both vectors are homogeneous for omega's purposes.
        """
        value = None
        for ku in u:
            for kv in v:
                if not self.omega_defined(ku, kv):
                    return None
                w = self.omega(ku, kv)
                if value is None:
                    value = w
                elif value != w:
                    return None
        return value

    def __repr__(self):
        return f"QhlAlgebra({self.name or 'anonymous'})"


# ---------------------------------------------------------------------------
# axiom checkers
# ---------------------------------------------------------------------------

def check_beta_twisting(alg, window):
    window = list(window)
    rep = CheckReport("beta-twisting", params={"algebra": alg.name}, window=window)
    for x, y in itertools.product(window, repeat=2):
        lhs = alg.vec_bracket(alg.alpha(x), alg.alpha(y))
        rhs = alg.vec_beta(alg.vec_alpha(alg.bracket(x, y)))
        rep.record((x, y), vstr(lhs), vstr(rhs))
    return rep


def check_omega_symmetry(alg, window):
    window = list(window)
    rep = CheckReport("omega-symmetry", params={"algebra": alg.name}, window=window)
    skipped = 0
    for x, y in itertools.product(window, repeat=2):
        if not alg.omega_defined(x, y):
            skipped += 1
            continue
        lhs = alg.bracket(x, y)
        rhs = vscale(alg.omega(x, y), alg.bracket(y, x))
        rep.record((x, y), vstr(lhs), vstr(rhs))
    if skipped:
        rep.note(f"skipped {skipped} pairs outside the omega domain")
    return rep


def check_qhl_jacobi(alg, window):
    window = list(window)
    rep = CheckReport("qhl-jacobi", params={"algebra": alg.name}, window=window)
    skipped = 0

    def item(triple):
        x, y, z = triple
        rotations = cyclic3((x, y, z))
        if not all(alg.omega_defined(c, a) for a, _, c in rotations):
            return triple, None
        total = vzero()
        for a, b, c in rotations:
            inner = alg.bracket(b, c)
            term = vadd(alg.vec_bracket(alg.alpha(a), inner),
                        alg.vec_beta(alg.vec_bracket(vterm(a, alg.field.one()),
                                                     inner)))
            total = vadd(total, vscale(alg.omega(c, a), term))
        return triple, total

    triples = list(itertools.product(window, repeat=3))
    for triple, total in parallel_map(item, triples):
        if total is None:
            skipped += 1
            continue
        rep.record(triple, vstr(total), "0")
    if skipped:
        rep.note(f"skipped {skipped} triples outside the omega domain")
    return rep


def check_all_axioms(alg, window):
    rep = CheckReport("qhl-axioms", params={"algebra": alg.name}, window=list(window))
    rep.merge(check_beta_twisting(alg, window))
    rep.merge(check_omega_symmetry(alg, window))
    rep.merge(check_qhl_jacobi(alg, window))
    return rep


def check_morphism(phi, source, target, mode, window):
    """Check a linear map on bases as a weak or strong morphism.

    phi maps a source key to a target vector.  Weak mode checks only the
    product condition M1; strong mode adds the alpha/beta intertwining M2 and
    M3.  Both modes also verify the omega-intertwining consequence of M1 on
    bracket values, where omega is defined on the image vectors.
    """
    if mode not in ("weak", "strong"):
        raise ValueError(f"unknown morphism mode {mode!r}")
    window = list(window)
    rep = CheckReport(f"{mode}-morphism", window=window)
    phi_map = phi if callable(phi) else (lambda k: phi[k])

    def vec_phi(u):
        return vapply(phi_map, u)

    skipped = 0
    for x, y in itertools.product(window, repeat=2):
        lhs = vec_phi(source.bracket(x, y))
        rhs = target.vec_bracket(phi_map(x), phi_map(y))
        rep.record((x, y), vstr(lhs), vstr(rhs), note="M1 product")

        if source.omega_defined(x, y):
            w_target = target.omega_on_vectors(phi_map(x), phi_map(y))
            if w_target is None:
                skipped += 1
            else:
                back = source.bracket(y, x)
                rep.record((x, y),
                           vstr(vscale(w_target, vec_phi(back))),
                           vstr(vec_phi(vscale(source.omega(x, y), back))),
                           note="omega intertwining on bracket values")
    if mode == "strong":
        for x in window:
            rep.record((x,), vstr(vec_phi(source.alpha(x))),
                       vstr(target.vec_alpha(phi_map(x))), note="M2 alpha")
            rep.record((x,), vstr(vec_phi(source.beta(x))),
                       vstr(target.vec_beta(phi_map(x))), note="M3 beta")
    if skipped:
        rep.note(f"omega undefined on {skipped} image pairs; those were skipped")
    return rep


# ---------------------------------------------------------------------------
# grade groups and commutation factors
# ---------------------------------------------------------------------------

class GradeGroup:
    """Finitely generated abelian group Z^r x Z/m_1 x ... x Z/m_t.

    Elements are integer tuples of length r + t, torsion coordinates reduced
    to canonical representatives in [0, m_i).
    """

    def __init__(self, free_rank=0, moduli=()):
        self.free_rank = free_rank
        self.moduli = tuple(moduli)
        if any(m <= 0 for m in self.moduli):
            raise ValueError("torsion moduli must be positive")

    @property
    def length(self):
        return self.free_rank + len(self.moduli)

    def element(self, coords):
        coords = tuple(coords)
        if len(coords) != self.length:
            raise ValueError(f"expected {self.length} coordinates")
        free = coords[:self.free_rank]
        tors = tuple(c % m for c, m in zip(coords[self.free_rank:], self.moduli))
        return free + tors

    def zero(self):
        return (0,) * self.length

    def add(self, a, b):
        return self.element(tuple(x + y for x, y in zip(a, b)))

    def neg(self, a):
        return self.element(tuple(-x for x in a))

    @property
    def is_finite(self):
        return self.free_rank == 0

    def elements(self):
        if not self.is_finite:
            raise ValueError("infinite grade group")
        return [self.element(c) for c in itertools.product(
            *[range(m) for m in self.moduli])] if self.moduli else [()]

    def sample(self, radius=2):
        """All elements when finite, else a box of representatives."""
        if self.is_finite:
            return self.elements()
        ranges = [range(-radius, radius + 1)] * self.free_rank + \
                 [range(m) for m in self.moduli]
        return [self.element(c) for c in itertools.product(*ranges)]

    def __repr__(self):
        parts = ["Z"] * self.free_rank + [f"Z/{m}" for m in self.moduli]
        return " x ".join(parts) if parts else "0"


class CommutationFactor:
    """A map eps: Gamma x Gamma -> scalars subject to the three axioms:

        eps(a, b) eps(b, a) = 1,
        eps(a + b, c) = eps(a, c) eps(b, c),
        eps(a, b + c) = eps(a, b) eps(a, c).
    """

    def __init__(self, group, field, fn):
        self.group = group
        self.field = field
        self._fn = fn

    def value(self, a, b):
        return self.field.coerce(self._fn(a, b))

    @classmethod
    def from_sign_matrix(cls, group, field, matrix):
        """eps(a, b) = (-1)^(a . M . b) for an integer matrix M."""
        def fn(a, b):
            total = sum(ai * mij * bj
                        for ai, row in zip(a, matrix)
                        for mij, bj in zip(row, b))
            return -1 if total % 2 else 1
        return cls(group, field, fn)

    def check_axioms(self, sample=None):
        sample = list(sample) if sample is not None else self.group.sample()
        rep = CheckReport("commutation-factor-axioms", window=sample)
        one = self.field.one()
        for a, b in itertools.product(sample, repeat=2):
            rep.record((a, b), self.value(a, b) * self.value(b, a), one,
                       note="inverse-symmetry")
        for a, b, c in itertools.product(sample, repeat=3):
            rep.record((a, b, c),
                       self.value(self.group.add(a, b), c),
                       self.value(a, c) * self.value(b, c),
                       note="left bimultiplicativity")
            rep.record((a, b, c),
                       self.value(a, self.group.add(b, c)),
                       self.value(a, b) * self.value(a, c),
                       note="right bimultiplicativity")
        return rep


def make_color_algebra(field, group, eps, constants, grading, name="color"):
    """Color algebra from a bracket table: alpha = beta = id, omega = -eps.

    The commutation factor must pass its axioms, and every structure constant
    must respect the grading (the bracket of grades g1, g2 lands in g1 + g2);
    violations name the offending pair.
    """
    axioms = eps.check_axioms()
    if not axioms.ok:
        f = axioms.failures[0]
        raise ValueError(f"commutation factor fails {f.note} at {f.where}")

    grading_map = dict(grading)
    for (x, y), value in constants.items():
        expected = group.add(grading_map[x], grading_map[y])
        for target in value:
            if grading_map[target] != expected:
                raise ValueError(
                    f"structure constant <{x},{y}> -> {target} violates the "
                    f"grading: grade {grading_map[target]} != {expected}")

    basis = sorted(grading_map)
    table = {pair: {k: field.coerce(c) for k, c in vec.items() if field.coerce(c)}
             for pair, vec in constants.items()}

    def bracket(x, y):
        return dict(table.get((x, y), {}))

    def omega(x, y):
        return -eps.value(grading_map[x], grading_map[y])

    return QhlAlgebra(field, bracket, omega=omega,
                      grading=lambda k: grading_map[k], basis=basis, name=name)


# ---------------------------------------------------------------------------
# mutation probes for checker sensitivity
# ---------------------------------------------------------------------------

def mutate_bracket(alg, pair, target, delta, symmetric=False):
    """Return a copy of alg with <pair> perturbed by delta at the target key.

    With symmetric=True the opposite orientation is perturbed consistently
    with omega, so the omega-symmetry check stays blind and the Jacobi or
    twisting checks must catch the change.
    """
    x, y = pair
    delta = alg.field.coerce(delta)
    patches = {(x, y): vterm(target, delta)}
    if symmetric and (x, y) != (y, x):
        patches[(y, x)] = vterm(target, alg.omega(y, x) * delta)

    def bracket(a, b):
        value = alg.bracket(a, b)
        patch = patches.get((a, b))
        return vadd(value, patch) if patch else dict(value)

    return QhlAlgebra(alg.field, bracket, alpha=alg._alpha, beta=alg._beta,
                      omega=alg._omega, omega_domain=alg._omega_domain,
                      grading=alg._grading, basis=alg.basis,
                      name=f"{alg.name}+mutation")


def random_mutation(alg, rng, window, symmetric=False):
    """Draw a perturbation of one existing (off-diagonal) structure constant."""
    window = list(window)
    candidates = [(x, y) for x in window for y in window
                  if x != y and alg.bracket(x, y)]
    if not candidates:
        raise ValueError("no nonzero off-diagonal constants to mutate")
    pair = rng.choice(candidates)
    value = alg.bracket(*pair)
    targets = sorted(value, key=str)
    target = rng.choice(targets)
    delta = alg.field.coerce(rng.choice([1, -1, 2, 3]))
    mutated = mutate_bracket(alg, pair, target, delta, symmetric=symmetric)
    kind = "symmetric" if symmetric else "one-sided"
    return mutated, f"{kind} mutation of <{pair[0]},{pair[1]}> at {target} by {delta}"
