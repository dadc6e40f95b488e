"""Stock algebras and extension data used by the verification suites and CLI.

Everything here is built through the public constructors, so the fixtures
double as usage examples: sl2 as a plain Lie algebra, the odd-Heisenberg
superalgebra and a Z2 x Z2 color algebra through the color machinery, the
deformed Witt algebras through their twisted-derivation adapter, and two
admissible central-extension data sets.
"""

from __future__ import annotations

from fractions import Fraction

from .core import CommutationFactor, GradeGroup, QhlAlgebra, make_color_algebra
from .extensions import ExtensionData
from .fields import QQ
from .vectors import vterm, vzero


def sl2(field=QQ):
    """Basis e, f, h with [h,e] = 2e, [h,f] = -2f, [e,f] = h."""
    one = field.one()
    two = one + one
    table = {
        ("h", "e"): {"e": two},
        ("e", "h"): {"e": -two},
        ("h", "f"): {"f": -two},
        ("f", "h"): {"f": two},
        ("e", "f"): {"h": one},
        ("f", "e"): {"h": -one},
    }

    def bracket(x, y):
        return dict(table.get((x, y), {}))

    return QhlAlgebra(field, bracket, basis=["e", "f", "h"], name="sl2")


def abelian_lie(field, names):
    """The abelian Lie algebra on the given basis names."""
    return QhlAlgebra(field, lambda x, y: vzero(), basis=list(names),
                      name=f"abelian({','.join(names)})")


def super_heisenberg(field=QQ):
    """Two odd generators x, y with symmetric product <x,y> = <y,x> = z."""
    group = GradeGroup(moduli=(2,))
    eps = CommutationFactor.from_sign_matrix(group, field, [[1]])
    one = field.one()
    constants = {("x", "y"): {"z": one}, ("y", "x"): {"z": one}}
    grading = {"x": group.element((1,)), "y": group.element((1,)),
               "z": group.element((0,))}
    alg = make_color_algebra(field, group, eps, constants, grading,
                             name="super-heisenberg")
    return alg, group, eps


def color_so3(field=QQ):
    """Z2 x Z2 color algebra: <a,b> = <b,a> = c and cyclic relabelings."""
    group = GradeGroup(moduli=(2, 2))
    eps = CommutationFactor.from_sign_matrix(group, field, [[0, 1], [1, 0]])
    one = field.one()
    constants = {
        ("a", "b"): {"c": one}, ("b", "a"): {"c": one},
        ("b", "c"): {"a": one}, ("c", "b"): {"a": one},
        ("c", "a"): {"b": one}, ("a", "c"): {"b": one},
    }
    grading = {"a": group.element((1, 0)), "b": group.element((0, 1)),
               "c": group.element((1, 1))}
    alg = make_color_algebra(field, group, eps, constants, grading,
                             name="color-so3")
    return alg, group, eps


def deformed_witt_qhl(W, name=None):
    """A deformed Witt algebra as a quasi-hom-Lie algebra.

    alpha is the sigma-twist d_n -> q^n d_{sn}, beta is module scaling by the
    twist element, omega = -1.  For s = 1, k = 0 the twist element is one and
    this is the hom-Lie presentation with alpha(d_n) = q^n d_n, beta = id.
    """
    def alpha(n):
        return W.sigma_image(vterm(n, W.field.one()))

    def beta(n):
        return W.delta_image(vterm(n, W.field.one()))

    return QhlAlgebra(W.field, W.bracket_keys, alpha=alpha, beta=beta,
                      name=name or f"deformed-witt(s={W.s},k={W.k})")


def scalar_kernel(field, name="z"):
    """The one-dimensional abelian algebra serving as an extension kernel."""
    return QhlAlgebra(field, lambda x, y: vzero(), basis=[name],
                      name=f"kernel({name})")


def heisenberg_extension_data(field=QQ):
    """Two-dimensional abelian L with g(x, y) = 1 = -g(y, x): the data whose
    extension is the three-dimensional Heisenberg algebra."""
    L = abelian_lie(field, ["x", "y"])
    kernel = scalar_kernel(field)
    one = field.one()

    def g(u, v):
        if (u, v) == ("x", "y"):
            return vterm("z", one)
        if (u, v) == ("y", "x"):
            return vterm("z", -one)
        return vzero()

    return ExtensionData(L, kernel, g, name="heisenberg")


def trivial_extension_data(L, field=None, name=None):
    """g = 0: the direct product of L with a one-dimensional kernel."""
    field = field or L.field
    kernel = scalar_kernel(field)
    return ExtensionData(L, kernel, lambda x, y: vzero(),
                         name=name or f"trivial({L.name})")


def coboundary_extension_data(L, xi, name=None):
    """g(x, y) = -xi(<x, y>): the coboundary data attached to xi: L -> kernel."""
    kernel = scalar_kernel(L.field)

    def g(x, y):
        return vneg(vapply(xi, L.bracket(x, y)))

    return ExtensionData(L, kernel, g, name=name or f"coboundary({L.name})")


def dual_basis_maps(L, kernel_key="z"):
    """The dual-basis generators of Hom(L, kernel) for a finite L."""
    field = L.field
    one = field.one()
    maps = {}
    for key in L.basis:
        maps[key] = (lambda x, k=key: vterm(kernel_key, one) if x == k else vzero())
    return maps


FIXTURE_BUILDERS = {
    "sl2": lambda field=QQ: sl2(field),
    "super": lambda field=QQ: super_heisenberg(field)[0],
    "color": lambda field=QQ: color_so3(field)[0],
}
