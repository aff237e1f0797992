"""Weil-Deligne parameters as multisets of segments, and the maps out of them.

A segment (label, z, r) stands for (z . rho_label) (x) sp(r) and, through the
Langlands correspondence, for the segment of cuspidals z, |.|z, ..., |.|^{r-1}z.
The stored twist z is that of the first cuspidal, so |.| adds 1 to s.

    alpha: parameter -> point of the extended quotient (lengths give the
           component, twists give the coordinates)
    beta:  extended point -> cuspidal support (part size t expands z into
           z, |.|z, ..., |.|^{t-1}z)
    infinitesimal_character: parameter -> cuspidal support, straight from
           the segments.

beta(alpha(p)) == infinitesimal_character(p) is the commutative square the
check suite exercises; keep the two paths separate.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field, replace
from fractions import Fraction

from .arith import TwistCoord, canonicalize_mod_torsion, norm_power, twist_mul
from .errors import DimensionMismatchError, UnknownLabelError, ValidationError
from .spectrum import ComponentIndex, Inventory, shape_of


@dataclass(frozen=True)
class SegmentParam:
    label: str
    twist: TwistCoord
    length: int
    # filled in by validate_param; an unvalidated segment has dim None
    dim: int | None = field(default=None, compare=False)

    def sort_key(self):
        return (self.label, self.length, self.twist)

    @property
    def central_exponent(self) -> Fraction:
        """s + (r - 1)/2, the exponent of the unramified part psi."""
        return self.twist.s + Fraction(self.length - 1, 2)

    def to_json(self):
        return {"label": self.label, "twist": self.twist.to_json(), "length": self.length}

    @classmethod
    def from_json(cls, data, location=None):
        if not isinstance(data, dict) or not {"label", "length"} <= set(data):
            raise ValidationError(f"segment needs 'label' and 'length', got {data!r}", location)
        extra = set(data) - {"label", "twist", "length"}
        if extra:
            raise ValidationError(f"unexpected keys {sorted(extra)}", location)
        length = data["length"]
        if isinstance(length, bool) or not isinstance(length, int) or length < 1:
            raise ValidationError(f"length must be a positive integer, got {length!r}", location)
        twist = TwistCoord.from_json(data.get("twist", {}), f"{location}.twist" if location else "twist")
        return cls(str(data["label"]), twist, length)


@dataclass(frozen=True)
class WDParam:
    segments: tuple
    n: int

    def __post_init__(self):
        object.__setattr__(self, "segments", tuple(sorted(self.segments, key=SegmentParam.sort_key)))

    def to_json(self):
        return {"n": self.n, "segments": [seg.to_json() for seg in self.segments]}

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, dict) or "segments" not in data:
            raise ValidationError("parameter must be an object with 'segments'")
        if not isinstance(data["segments"], list):
            raise ValidationError("'segments' must be an array")
        segments = [SegmentParam.from_json(s, f"segments[{i}]") for i, s in enumerate(data["segments"])]
        n = data.get("n")
        if n is None:
            n = 0  # validate_param reports the mismatch
        if isinstance(n, bool) or not isinstance(n, int):
            raise ValidationError(f"'n' must be an integer, got {n!r}")
        return cls(tuple(segments), n)


@dataclass(frozen=True)
class ExtendedPoint:
    """A point of the extended quotient.

    coordinates: sorted ((label, t), (z_1, ..., z_n)) with the z's sorted,
    one tuple per factor Sym^n C^x of the component.
    """

    component: ComponentIndex
    coordinates: tuple
    dims: tuple = field(default=(), compare=False)

    def __post_init__(self):
        items = self.coordinates.items() if isinstance(self.coordinates, dict) else self.coordinates
        coords = tuple(sorted((tuple(key), tuple(sorted(zs))) for key, zs in items))
        object.__setattr__(self, "coordinates", coords)
        object.__setattr__(self, "dims", tuple(sorted(dict(self.dims).items())))
        expected = {(c, t): n for c, t, n in shape_of(self.component).factors}
        actual = {key: len(zs) for key, zs in coords}
        if expected != actual:
            raise ValidationError(f"coordinates {actual} do not match component shape {expected}")

    def to_json(self):
        return {
            "component": self.component.to_json(),
            "coordinates": [
                {"label": c, "part": t, "twists": [z.to_json() for z in zs]}
                for (c, t), zs in self.coordinates
            ],
        }

    @classmethod
    def from_json(cls, data, inv: Inventory) -> ExtendedPoint:
        """Inverse of to_json; twists are canonicalized against the inventory."""
        try:
            component = ComponentIndex(data["component"])
            coords = {}
            for i, entry in enumerate(data["coordinates"]):
                label = inv[entry["label"]]
                coords[(label.id, entry["part"])] = [
                    canonicalize_mod_torsion(TwistCoord.from_json(z, f"coordinates[{i}]"), label.torsion)
                    for z in entry["twists"]
                ]
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"malformed extended point: {exc!r}") from None
        return cls(component, coords, {c: inv[c].dim for c, _ in component.parts})


@dataclass(frozen=True)
class CuspidalPoint:
    """Conjugacy class of a cuspidal pair: Levi block sizes and twisted labels."""

    levi: tuple
    support: tuple

    def __post_init__(self):
        object.__setattr__(self, "levi", tuple(sorted(self.levi)))
        object.__setattr__(self, "support", tuple(sorted(self.support)))

    def to_json(self):
        return {
            "levi": list(self.levi),
            "support": [[c, z.to_json()] for c, z in self.support],
        }


def validate_param(p: WDParam, inv: Inventory, n: int | None = None) -> WDParam:
    """Check labels and total dimension, canonicalize twists mod torsion."""
    if n is None:
        n = p.n
    if not p.segments:
        raise ValidationError("parameter has no segments")
    checked = []
    for i, seg in enumerate(p.segments):
        if seg.label not in inv:
            raise UnknownLabelError(f"unknown label {seg.label!r}", f"segments[{i}]")
        label = inv[seg.label]
        checked.append(SegmentParam(
            seg.label, canonicalize_mod_torsion(seg.twist, label.torsion), seg.length, label.dim
        ))
    total = sum(seg.dim * seg.length for seg in checked)
    if total != n:
        raise DimensionMismatchError(n, total)
    return WDParam(tuple(checked), n)


def _dims(p: WDParam):
    return tuple(sorted({seg.label: seg.dim for seg in p.segments}.items()))


def alpha(p: WDParam) -> ExtendedPoint:
    lengths = defaultdict(list)
    coords = defaultdict(list)
    for seg in p.segments:
        lengths[seg.label].append(seg.length)
        coords[(seg.label, seg.length)].append(seg.twist)
    return ExtendedPoint(ComponentIndex(dict(lengths)), dict(coords), _dims(p))


def beta(x: ExtendedPoint) -> CuspidalPoint:
    dims = dict(x.dims)
    levi, support = [], []
    for (label, t), zs in x.coordinates:
        for z in zs:
            for i in range(t):
                support.append((label, twist_mul(z, norm_power(i))))
                levi.append(dims[label])
    return CuspidalPoint(tuple(levi), tuple(support))


def infinitesimal_character(p: WDParam) -> CuspidalPoint:
    levi, support = [], []
    for seg in p.segments:
        z = seg.twist
        for _ in range(seg.length):
            support.append((seg.label, z))
            levi.append(seg.dim)
            z = TwistCoord(z.s + 1, z.theta)
    return CuspidalPoint(tuple(levi), tuple(support))


def langlands_data(p: WDParam) -> list[SegmentParam]:
    """Segments in the order Delta_1, ..., Delta_m of the Langlands quotient.

    Non-increasing central exponent, ties broken by (label, length, angle).
    This puts |.|^{1/2}psi ahead of |.|^{-1/2}psi.
    """
    return sorted(
        p.segments,
        key=lambda seg: (-seg.central_exponent, seg.label, seg.length, seg.twist.theta),
    )


def param_equivalent(p: WDParam, q: WDParam) -> bool:
    return p.n == q.n and Counter(p.segments) == Counter(q.segments)


def with_segments(p: WDParam, segments) -> WDParam:
    return WDParam(tuple(segments), p.n)


def retwist(seg: SegmentParam, s) -> SegmentParam:
    return replace(seg, twist=TwistCoord(s, seg.twist.theta))


# -- the relation rho(w) N rho(w)^{-1} = ||w|| N in sp(r) ------------------
#
# Entries are Laurent polynomials in a formal x standing for ||w||, kept as
# {exponent: coefficient} dicts with zero coefficients dropped.

def _lp_add(a, b):
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, 0) + c
        if out[e] == 0:
            del out[e]
    return out


def _lp_mul(a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            out = _lp_add(out, {e1 + e2: c1 * c2})
    return out


def _mat_mul(A, B):
    size = len(A)
    out = [[{} for _ in range(size)] for _ in range(size)]
    for i in range(size):
        for j in range(size):
            acc = {}
            for k in range(size):
                acc = _lp_add(acc, _lp_mul(A[i][k], B[k][j]))
            out[i][j] = acc
    return out


def sp_matrices(r: int):
    """(rho(w), rho(w)^{-1}, N) for sp(r) in the basis e_0, ..., e_{r-1}.

    Column j is the image of e_j: rho(w) e_i = x^i e_i, N e_i = e_{i+1}.
    """
    rho = [[{i: 1} if i == j else {} for j in range(r)] for i in range(r)]
    rho_inv = [[{-i: 1} if i == j else {} for j in range(r)] for i in range(r)]
    nil = [[{0: 1} if i == j + 1 else {} for j in range(r)] for i in range(r)]
    return rho, rho_inv, nil


def sp_realization_check(r: int) -> bool:
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    rho, rho_inv, nil = sp_matrices(r)
    identity = [[{0: 1} if i == j else {} for j in range(r)] for i in range(r)]
    if _mat_mul(rho, rho_inv) != identity:
        return False
    lhs = _mat_mul(_mat_mul(rho, nil), rho_inv)
    x = [[{1: 1} if i == j else {} for j in range(r)] for i in range(r)]
    return lhs == _mat_mul(x, nil)
