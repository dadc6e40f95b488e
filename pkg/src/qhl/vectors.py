"""Finitely-supported coefficient vectors over a basis.

A vector is a plain dict {basis_key: nonzero scalar}.  The empty dict is the
zero vector, so dict equality is linear-algebra equality.  Functions return
fresh dicts and never mutate their arguments; cached vectors can therefore be
shared freely.
"""

from __future__ import annotations

from .fields import _scalar_is_simple


def vzero():
    return {}

def vterm(key, coeff):
    return {key: coeff} if coeff else {}


def vadd(u, v):
    out = dict(u)
    for k, c in v.items():
        if k in out:
            s = out[k] + c
            if s:
                out[k] = s
            else:
                del out[k]
        else:
            out[k] = c
    return out


def vneg(u):
    return {k: -c for k, c in u.items()}


def vsub(u, v):
    return vadd(u, vneg(v))


def vscale(c, u):
    if not c:
        return {}
    return {k: c * x for k, x in u.items()}


def vapply(linmap, u):
    """Apply a key-level linear map (key -> vector) linearly to a vector."""
    out = {}
    for k, c in u.items():
        out = vadd(out, vscale(c, linmap(k)))
    return out


def vbilinear(f, u, v):
    """Extend a key-level bilinear map (key, key) -> vector to vectors."""
    out = {}
    for ku, cu in u.items():
        for kv, cv in v.items():
            out = vadd(out, vscale(cu * cv, f(ku, kv)))
    return out


def sbilinear(f, u, v, zero):
    """Extend a scalar-valued bilinear map over vectors."""
    total = zero
    for ku, cu in u.items():
        for kv, cv in v.items():
            total = total + cu * cv * f(ku, kv)
    return total


def slinear(f, u, zero):
    """Extend a scalar-valued linear map over a vector."""
    total = zero
    for k, c in u.items():
        total = total + c * f(k)
    return total


def fmt_key(key):
    if isinstance(key, int):
        return f"d{key}" if key >= 0 else f"d({key})"
    if isinstance(key, tuple) and key and all(isinstance(x, int) for x in key):
        return "d(" + ",".join(str(x) for x in key) + ")"
    if isinstance(key, tuple):
        return "(" + ",".join(fmt_key(x) for x in key) + ")"
    return str(key)


def vstr(u, fmt=fmt_key):
    if not u:
        return "0"
    parts = []
    for key in sorted(u, key=lambda k: (str(type(k)), str(k))):
        c = u[key]
        name = fmt(key)
        if c == 1:
            text = name
        elif c == -1:
            text = f"-{name}"
        elif _scalar_is_simple(c):
            text = f"{c}*{name}"
        else:
            text = f"({c})*{name}"
        parts.append(text)
    out = parts[0]
    for part in parts[1:]:
        out += (" - " + part[1:]) if part.startswith("-") else (" + " + part)
    return out
