"""Text formats: ring files, module files, facet files and TOML instance files.

Ring file::

    char 32003
    vars x:1 y:1 z:1
    ideal x*y, y^2 - x*z

Module file (ring directives may also appear inline instead of ``ring``)::

    ring ring.txt
    rows 0 -1
    matrix [x, y; y, z]
"""

from __future__ import annotations

import json
import os

try:
    import tomllib
except ImportError:  # 3.10
    import tomli as tomllib

from .algebra import DEFAULT_CHAR, AmbientRing, GradedMatrix, QuotientRing
from .errors import InputError
from .generators import SimplicialComplex
from .groebner import DEFAULT_MAX_DEGREE
from .resolution import PresentedModule


def _lines(text):
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            word, _, rest = line.partition(" ")
            yield word.lower(), rest.strip()


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _int(s, what):
    try:
        return int(s)
    except ValueError:
        raise InputError(f"{what} must be an integer, got {s!r}") from None


def _parse_vars(rest):
    names, weights = [], []
    for tok in rest.replace(",", " ").split():
        name, _, w = tok.partition(":")
        names.append(name)
        weights.append(_int(w, "weight") if w else 1)
    return names, weights


def ring_from_directives(directives, char=None):
    """Build a QuotientRing from (word, rest) pairs for char/vars/ideal."""
    p = DEFAULT_CHAR
    names = weights = None
    ideal = []
    for word, rest in directives:
        if word == "char":
            p = _int(rest, "char")
        elif word == "vars":
            names, weights = _parse_vars(rest)
        elif word == "ideal":
            ideal = [g.strip() for g in rest.split(",") if g.strip()]
    if names is None:
        raise InputError("ring description lacks a 'vars' line")
    if char is not None:
        p = char
    amb = AmbientRing(tuple(names), tuple(weights), p)
    return QuotientRing(amb, ideal)


def parse_ring(text, char=None):
    d = list(_lines(text))
    for word, _ in d:
        if word not in ("char", "vars", "ideal"):
            raise InputError(f"unknown ring directive {word!r}")
    return ring_from_directives(d, char)


def load_ring(path, char=None):
    return parse_ring(_read(path), char)


def parse_matrix(text):
    """``[a, b; c, d]`` -> list of rows of entry strings."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise InputError("matrix must be enclosed in brackets")
    body = s[1:-1].strip()
    if not body:
        return []
    rows = [[e.strip() for e in row.split(",")] for row in body.split(";")]
    if any(e == "" for row in rows for e in row):
        raise InputError("empty matrix entry")
    return rows


def parse_module(text, base_dir=".", char=None, max_degree=DEFAULT_MAX_DEGREE, ring=None):
    ring_lines = []
    rows = cols = matrix = None
    for word, rest in _lines(text):
        if word == "ring":
            path = rest if os.path.isabs(rest) else os.path.join(base_dir, rest)
            ring = load_ring(path, char)
        elif word in ("char", "vars", "ideal"):
            ring_lines.append((word, rest))
        elif word == "rows":
            rows = [_int(t, "row twist") for t in rest.split()]
        elif word == "cols":
            cols = [_int(t, "column twist") for t in rest.split()]
        elif word == "matrix":
            matrix = parse_matrix(rest)
        else:
            raise InputError(f"unknown module directive {word!r}")
    if ring_lines:
        ring = ring_from_directives(ring_lines, char)
    if ring is None:
        raise InputError("module file names no ring")
    matrix = matrix or []
    if rows is None:
        rows = [0] * len(matrix)
    if matrix and len(matrix) != len(rows):
        raise InputError("row twists do not match the number of matrix rows")
    if not matrix:
        f = GradedMatrix.zero(ring.ambient, rows, cols or [])
    else:
        f = GradedMatrix.from_rows(ring.ambient, matrix, rows, cols)
    return PresentedModule(ring, f, max_degree=max_degree)


def load_module(path, char=None, max_degree=DEFAULT_MAX_DEGREE):
    return parse_module(_read(path), os.path.dirname(path), char, max_degree)


def ring_to_text(R):
    amb = R.ambient
    out = [f"char {amb.char}", "vars " + " ".join(f"{n}:{w}" for n, w in zip(amb.names, amb.weights))]
    if R.ideal_gens:
        out.append("ideal " + ", ".join(str(g) for g in R.ideal_gens))
    return "\n".join(out) + "\n"


def module_to_text(M):
    """Self-contained module file (ring directives inline)."""
    f = M.presentation
    rows = f.rows()
    body = "; ".join(", ".join(str(x) for x in row) for row in rows)
    lines = [ring_to_text(M.ring).rstrip("\n"), "rows " + " ".join(str(t) for t in f.target)]
    if f.source:
        lines.append("cols " + " ".join(str(t) for t in f.source))
        lines.append(f"matrix [{body}]")
    return "\n".join(lines) + "\n"


def ring_to_json(R):
    amb = R.ambient
    return {
        "char": amb.char,
        "vars": list(amb.names),
        "weights": list(amb.weights),
        "ideal": [str(g) for g in R.ideal_gens],
    }


def module_to_json(M):
    out = {"ring": ring_to_json(M.ring)}
    out.update(M.to_json())
    return out


def module_from_json(obj, max_degree=DEFAULT_MAX_DEGREE):
    r = obj["ring"]
    amb = AmbientRing(tuple(r["vars"]), tuple(r["weights"]), r["char"])
    ring = QuotientRing(amb, r["ideal"])
    mat = obj["matrix"]
    if mat and mat[0]:
        f = GradedMatrix.from_rows(amb, mat, obj["rows"], obj["cols"])
    else:
        f = GradedMatrix.zero(amb, obj["rows"], obj["cols"])
    return PresentedModule(ring, f, max_degree=max_degree)


def dumps(obj):
    return json.dumps(obj, indent=2)


# --- facet files ---------------------------------------------------------------


def parse_facets(text):
    n = None
    facets = None
    for word, rest in _lines(text):
        if word == "sr":
            key, _, val = rest.partition("=")
            if key.strip() != "n":
                raise InputError("expected 'sr n=<count>'")
            n = _int(val.strip(), "vertex count")
        elif word == "facets":
            facets = [[_int(v, "vertex") for v in part.split()] for part in rest.split(";") if part.strip()]
        else:
            raise InputError(f"unknown facet directive {word!r}")
    if n is None or facets is None:
        raise InputError("facet file needs 'sr n=..' and 'facets ..' lines")
    return SimplicialComplex(n, facets)


def load_facets(path):
    return parse_facets(_read(path))


def facets_to_text(D):
    return f"sr n={D.n}\nfacets " + "; ".join(" ".join(map(str, sorted(F))) for F in D.facets) + "\n"


# --- instance files ------------------------------------------------------------


def parse_instance_text(text):
    """Instance files are TOML; values come back as strings."""
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as e:
        raise InputError(f"bad instance file: {e}") from None
    out = {}
    for key, val in data.items():
        if isinstance(val, list):
            val = ", ".join(str(v) for v in val)
        elif isinstance(val, dict):
            raise InputError(f"instance key {key!r}: tables are not supported")
        out[key] = str(val)
    return out


def load_instance(path, char=None, max_degree=None):
    """Returns (tag or None, Instance)."""
    from .verify import Instance

    data = parse_instance_text(_read(path))
    base = os.path.dirname(path)
    if max_degree is None:
        max_degree = _int(data.get("max_degree", DEFAULT_MAX_DEGREE), "max_degree")

    def mod(key):
        p = data[key]
        p = p if os.path.isabs(p) else os.path.join(base, p)
        return load_module(p, char, max_degree)

    if "module" not in data:
        raise InputError(f"{path}: instance needs a 'module' entry")
    M = mod("module")
    extras = {}
    for key in ("c1", "c2"):
        if key in data:
            extras[key] = [g.strip() for g in data[key].split(",") if g.strip()]
    for key in ("partner", "M2"):
        if key in data:
            extras["M" if key == "partner" else "M2"] = _rering(mod(key), M.ring)
    name = data.get("name") or os.path.splitext(os.path.basename(path))[0]
    return data.get("tag"), Instance(name, M, extras)


def _rering(N, ring):
    if N.ring != ring:
        raise InputError("partner modules must live over the instance ring")
    return PresentedModule(ring, N.presentation, max_degree=N.max_degree)
