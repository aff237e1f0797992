"""Cuspidal inventories, inertial classes, and component catalogs.

A homogeneous block (label c with multiplicity m) has torus D = (C^x)^m and
Weyl group S_m, so the ordinary quotient is Sym^m C^x.  The extended quotient
has one component per conjugacy class of S_m, i.e. per partition of m; a
partition with distinct part t repeated n times contributes Sym^n C^x (the
cyclic factors of the centralizer act trivially on the fixed torus).
Mixed blocks are products over labels.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import prod

from .errors import ValidationError
from .partitions import distinct_part_multiplicities, enumerate_partitions


@dataclass(frozen=True)
class CuspidalLabel:
    id: str
    dim: int = 1
    torsion: int = 1

    def __post_init__(self):
        if not isinstance(self.id, str) or not self.id:
            raise ValidationError(f"label id must be a non-empty string, got {self.id!r}")
        for name in ("dim", "torsion"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise ValidationError(f"label {self.id!r}: {name} must be a positive integer, got {value!r}")

    def to_json(self):
        return {"id": self.id, "dim": self.dim, "torsion": self.torsion}


class Inventory:
    """A finite, ordered set of supercuspidal orbits."""

    def __init__(self, labels):
        labels = tuple(labels)
        if not labels:
            raise ValidationError("inventory must contain at least one label")
        seen = set()
        for label in labels:
            if label.id in seen:
                raise ValidationError(f"duplicate label id {label.id!r}")
            seen.add(label.id)
        self.labels = labels
        self._by_id = {label.id: label for label in labels}

    def __getitem__(self, label_id) -> CuspidalLabel:
        return self._by_id[label_id]

    def __contains__(self, label_id):
        return label_id in self._by_id

    def __iter__(self):
        return iter(self.labels)

    def __len__(self):
        return len(self.labels)

    def __eq__(self, other):
        return isinstance(other, Inventory) and self.labels == other.labels

    def __hash__(self):
        return hash(self.labels)

    def __repr__(self):
        return f"Inventory({list(self.labels)!r})"

    def to_json(self):
        return [label.to_json() for label in self.labels]

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, list):
            raise ValidationError("inventory must be a JSON array of labels")
        labels = []
        for i, entry in enumerate(data):
            where = f"inventory[{i}]"
            if not isinstance(entry, dict) or "id" not in entry:
                raise ValidationError(f"expected an object with an 'id', got {entry!r}", where)
            extra = set(entry) - {"id", "dim", "torsion"}
            if extra:
                raise ValidationError(f"unexpected keys {sorted(extra)} in {entry!r}", where)
            try:
                labels.append(CuspidalLabel(entry["id"], entry.get("dim", 1), entry.get("torsion", 1)))
            except ValidationError as exc:
                raise ValidationError(f"{exc} in {entry!r}", where) from None
        return cls(labels)


@dataclass(frozen=True)
class InertialClass:
    """Cuspidal support up to unramified twist: label multiplicities, sorted by id."""

    entries: tuple
    n: int

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(sorted((c, int(m)) for c, m in self.entries)))

    @classmethod
    def build(cls, inv: Inventory, multiplicities) -> InertialClass:
        """From {label id: m}; drops zero multiplicities and computes n."""
        entries = [(c, m) for c, m in dict(multiplicities).items() if m]
        for c, m in entries:
            if c not in inv:
                raise ValidationError(f"unknown label {c!r}")
            if m < 0:
                raise ValidationError(f"negative multiplicity for {c!r}")
        if not entries:
            raise ValidationError("inertial class needs at least one label")
        return cls(tuple(entries), sum(inv[c].dim * m for c, m in entries))

    @property
    def labels(self):
        return tuple(c for c, _ in self.entries)

    def multiplicity(self, label_id):
        return dict(self.entries).get(label_id, 0)

    def to_json(self):
        return {"entries": [[c, m] for c, m in self.entries], "n": self.n}


@dataclass(frozen=True)
class ComponentIndex:
    """One partition per label; stored as sorted ((label id, parts), ...)."""

    parts: tuple

    def __post_init__(self):
        items = self.parts.items() if isinstance(self.parts, dict) else self.parts
        object.__setattr__(
            self, "parts", tuple(sorted((c, tuple(sorted(p, reverse=True))) for c, p in items))
        )

    @property
    def assignment(self) -> dict:
        return dict(self.parts)

    def to_json(self):
        return {c: list(p) for c, p in self.parts}


@dataclass(frozen=True)
class ComponentShape:
    """prod over factors of Sym^n C^x; a factor is (label id, part size t, n)."""

    factors: tuple

    @property
    def K(self):
        return len(self.factors)

    def to_json(self):
        return [[c, t, n] for c, t, n in self.factors]


@lru_cache(maxsize=4096)
def shape_of(index: ComponentIndex) -> ComponentShape:
    return ComponentShape(tuple(
        (c, t, n) for c, p in index.parts for t, n in distinct_part_multiplicities(p)
    ))


def enumerate_inertial_classes(inv: Inventory, n: int) -> list[InertialClass]:
    """Every way to fill GL(n) with cuspidals from the inventory.

    Multiplicity vectors (in inventory order) are listed lexicographically
    decreasing, so for {chi: 1, tau: 2} and n = 4 we get (4,0), (2,1), (0,2).
    """
    if n < 1:
        raise ValidationError(f"n must be >= 1, got {n}")
    labels = inv.labels
    out = []

    def fill(i, remaining, chosen):
        if i == len(labels):
            if remaining == 0:
                out.append(InertialClass.build(inv, dict(zip((l.id for l in labels), chosen))))
            return
        a = labels[i].dim
        for m in range(remaining // a, -1, -1):
            fill(i + 1, remaining - a * m, chosen + [m])

    fill(0, n, [])
    return out


def component_catalog(cls: InertialClass) -> list[tuple[ComponentIndex, ComponentShape]]:
    per_label = [[(c, p) for p in enumerate_partitions(m)] for c, m in cls.entries]
    catalog = []
    for combo in itertools.product(*per_label):
        index = ComponentIndex(combo)
        catalog.append((index, shape_of(index)))
    return catalog


def component_count(cls: InertialClass) -> int:
    return prod(len(enumerate_partitions(m)) for _, m in cls.entries)


def ordinary_quotient_shape(cls: InertialClass) -> list[tuple[str, int]]:
    return list(cls.entries)


def identity_component(cls: InertialClass) -> ComponentIndex:
    """The all-ones component, a copy of the ordinary quotient itself."""
    return ComponentIndex(tuple((c, (1,) * m) for c, m in cls.entries))
