"""JSON wire formats.

Rationals serialize as "p/q" (or "p"); points as arrays; the remaining
shapes follow the documented schemas.  Parsers track a path into the document
so malformed input reports the offending location.
"""

from __future__ import annotations

from fractions import Fraction

from .dca_classes import LNatSystem, ParamodularPair
from .errors import InputFormatError
from .exactgeom import EQ, LE, Halfspace, HPolyhedron, IntegralBox, VPolyhedron
from .lattice import GeneratedSet, LatticeSet, Window
from .rationals import format_rat


def _expect(cond: bool, path: str, msg: str) -> None:
    if not cond:
        raise InputFormatError(path, msg)


def parse_rat(value, path: str) -> Fraction:
    if isinstance(value, bool):
        raise InputFormatError(path, "expected a rational, got a boolean")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise InputFormatError(path, f"invalid rational {value!r}") from None
    raise InputFormatError(path, f"expected a rational, got {type(value).__name__}")


def parse_int(value, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputFormatError(path, f"expected an integer, got {value!r}")
    return value


def parse_point(value, path: str, dim: int | None = None):
    _expect(isinstance(value, list) and value, path, "expected a nonempty array of rationals")
    if dim is not None:
        _expect(len(value) == dim, path, f"expected {dim} coordinates, got {len(value)}")
    return tuple(parse_rat(v, f"{path}[{i}]") for i, v in enumerate(value))


def parse_int_point(value, path: str, dim: int | None = None):
    _expect(isinstance(value, list) and value, path, "expected a nonempty array of integers")
    if dim is not None:
        _expect(len(value) == dim, path, f"expected {dim} coordinates, got {len(value)}")
    return tuple(parse_int(v, f"{path}[{i}]") for i, v in enumerate(value))


def _get(data, key: str, path: str):
    _expect(isinstance(data, dict), path, "expected an object")
    _expect(key in data, path, f"missing key {key!r}")
    return data[key]


def _dim(data, path: str) -> int:
    dim = parse_int(_get(data, "dim", path), f"{path}.dim")
    _expect(dim >= 1, f"{path}.dim", "dimension must be >= 1")
    return dim


# --- H-rep ------------------------------------------------------------

def parse_hrep(data, path: str = "$") -> HPolyhedron:
    dim = _dim(data, path)
    rows_data = _get(data, "rows", path)
    _expect(isinstance(rows_data, list), f"{path}.rows", "expected an array")
    rows = []
    for i, rd in enumerate(rows_data):
        rp = f"{path}.rows[{i}]"
        a = parse_point(_get(rd, "a", rp), f"{rp}.a", dim)
        b = parse_rat(_get(rd, "b", rp), f"{rp}.b")
        rel = rd.get("rel", LE)
        _expect(rel in (LE, EQ), f"{rp}.rel", f"relation must be '<=' or '=', got {rel!r}")
        rows.append(Halfspace(a, b, rel))
    return HPolyhedron(dim, tuple(rows))


def dump_hrep(p: HPolyhedron) -> dict:
    return {
        "dim": p.dim,
        "rows": [
            {"a": [format_rat(c) for c in hs.normal], "b": format_rat(hs.offset), "rel": hs.rel}
            for hs in p.rows
        ],
    }


# --- V-rep ------------------------------------------------------------

def parse_vrep(data, path: str = "$") -> VPolyhedron:
    dim = _dim(data, path)
    verts = _get(data, "vertices", path)
    _expect(isinstance(verts, list), f"{path}.vertices", "expected an array")
    rays = data.get("rays", [])
    _expect(isinstance(rays, list), f"{path}.rays", "expected an array")
    return VPolyhedron(
        dim,
        tuple(parse_point(v, f"{path}.vertices[{i}]", dim) for i, v in enumerate(verts)),
        tuple(parse_point(r, f"{path}.rays[{i}]", dim) for i, r in enumerate(rays)),
    )


def dump_vrep(v: VPolyhedron) -> dict:
    return {
        "dim": v.dim,
        "vertices": [[format_rat(c) for c in vert] for vert in v.vertices],
        "rays": [[format_rat(c) for c in ray] for ray in v.rays],
    }


# --- lattice sets -----------------------------------------------------

def parse_lattice_set(data, path: str = "$") -> LatticeSet:
    dim = _dim(data, path)
    pts = _get(data, "points", path)
    _expect(isinstance(pts, list), f"{path}.points", "expected an array")
    return LatticeSet(
        dim, frozenset(parse_int_point(p, f"{path}.points[{i}]", dim) for i, p in enumerate(pts))
    )


def dump_lattice_set(s: LatticeSet) -> dict:
    return {"dim": s.dim, "points": [list(p) for p in s.sorted_points()]}


def parse_generated_set(data, path: str = "$") -> GeneratedSet:
    dim = _dim(data, path)
    base = _get(data, "base", path)
    _expect(isinstance(base, list), f"{path}.base", "expected an array")
    gens = data.get("generators", [])
    _expect(isinstance(gens, list), f"{path}.generators", "expected an array")
    return GeneratedSet(
        LatticeSet(dim, frozenset(parse_int_point(p, f"{path}.base[{i}]", dim) for i, p in enumerate(base))),
        tuple(parse_int_point(g, f"{path}.generators[{i}]", dim) for i, g in enumerate(gens)),
    )


def dump_generated_set(g: GeneratedSet) -> dict:
    return {
        "dim": g.dim,
        "base": [list(p) for p in g.base.sorted_points()],
        "generators": [list(v) for v in g.generators],
    }


def parse_window(data, path: str = "$") -> Window:
    lower = parse_int_point(_get(data, "l", path), f"{path}.l")
    upper = parse_int_point(_get(data, "u", path), f"{path}.u", len(lower))
    try:
        return IntegralBox(lower, upper)
    except ValueError as exc:
        raise InputFormatError(path, str(exc)) from None


def dump_window(w: Window) -> dict:
    return {"l": list(w.lower), "u": list(w.upper)}


# --- class representations (1-based indices on the wire) ---------------

def parse_lnat_system(data, path: str = "$") -> LNatSystem:
    dim = _dim(data, path)

    def bound_table(key: str) -> dict[int, int]:
        table = data.get(key, {})
        _expect(isinstance(table, dict), f"{path}.{key}", "expected an object")
        out = {}
        for k, v in table.items():
            kp = f"{path}.{key}[{k!r}]"
            try:
                idx = int(k)
            except ValueError:
                raise InputFormatError(kp, f"invalid index {k!r}") from None
            _expect(1 <= idx <= dim, kp, f"index {idx} out of range 1..{dim}")
            out[idx - 1] = parse_int(v, kp)
        return out

    edges = {}
    edges_data = data.get("edges", [])
    _expect(isinstance(edges_data, list), f"{path}.edges", "expected an array")
    for i, ed in enumerate(edges_data):
        ep = f"{path}.edges[{i}]"
        src = parse_int(_get(ed, "i", ep), f"{ep}.i")
        dst = parse_int(_get(ed, "j", ep), f"{ep}.j")
        val = parse_int(_get(ed, "d", ep), f"{ep}.d")
        _expect(1 <= src <= dim and 1 <= dst <= dim, ep, "edge index out of range")
        _expect(src != dst, ep, "edges must join distinct indices")
        edges[(src - 1, dst - 1)] = val
    try:
        return LNatSystem(dim, bound_table("lower"), bound_table("upper"), edges)
    except ValueError as exc:
        raise InputFormatError(path, str(exc)) from None


def dump_lnat_system(sys: LNatSystem) -> dict:
    return {
        "dim": sys.dim,
        "lower": {str(i + 1): v for i, v in sorted(sys.lower.items())},
        "upper": {str(j + 1): v for j, v in sorted(sys.upper.items())},
        "edges": [
            {"i": i + 1, "j": j + 1, "d": d} for (i, j), d in sorted(sys.edges.items())
        ],
    }


def parse_paramodular_pair(data, path: str = "$") -> ParamodularPair:
    dim = _dim(data, path)

    def table(key: str) -> dict[int, int]:
        tbl = data.get(key, {})
        _expect(isinstance(tbl, dict), f"{path}.{key}", "expected an object")
        out = {}
        for k, v in tbl.items():
            kp = f"{path}.{key}[{k!r}]"
            try:
                mask = int(k)
            except ValueError:
                raise InputFormatError(kp, f"invalid subset bitmask {k!r}") from None
            _expect(0 <= mask < (1 << dim), kp, f"bitmask {mask} out of range")
            out[mask] = parse_int(v, kp)
        return out

    return ParamodularPair(dim, table("rho"), table("mu"))


def dump_paramodular_pair(pair: ParamodularPair) -> dict:
    return {
        "dim": pair.dim,
        "rho": {str(m): v for m, v in sorted(pair.rho.items())},
        "mu": {str(m): v for m, v in sorted(pair.mu.items())},
    }


def parse_system_pair(data, path: str, kind: str):
    _expect(isinstance(data, dict), path, "expected an object")
    first = _get(data, "first", path)
    second = _get(data, "second", path)
    if kind == "lnat":
        return (
            parse_lnat_system(first, f"{path}.first"),
            parse_lnat_system(second, f"{path}.second"),
        )
    return (
        parse_paramodular_pair(first, f"{path}.first"),
        parse_paramodular_pair(second, f"{path}.second"),
    )
