"""Full per-space analysis, assembled from every module and cross-checked."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Optional

from .cones import InterpolationVerdict, effective_cone, interpolation_check
from .errors import InvariantViolation
from .moduli import (
    ModuliSpace,
    ResolutionData,
    canonical_class,
    companion_hilbert_points,
    dimension,
    exceptional_fiber_dimension,
    generic_resolution,
)
from .picard import Cone2, PicardClass, same_ray
from .stability import WallReport, largest_wall, nef_cone

# Order of keys in the JSON and text renderings; part of the output contract.
FIELDS = (
    "mu",
    "chi",
    "chi_normalized",
    "delta",
    "dimension",
    "picard_rank",
    "canonical",
    "resolution",
    "companion_hilbert_points",
    "interpolation",
    "effective",
    "nef",
    "largest_wall",
    "exceptional_fiber_dim",
    "iso_class_representative",
    "note",
)

RANK_TWO_NOTE = "Picard rank 2 data needs mu >= 3"
NOTES = {
    1: RANK_TWO_NOTE,
    2: "N(2, 0) ≅ N(2, 1) ≅ P⁵; " + RANK_TWO_NOTE,
}


@dataclass(frozen=True)
class AnalysisReport:
    mu: int
    chi: int
    chi_normalized: int
    delta: int
    dimension: int
    picard_rank: Optional[int]
    canonical: Optional[PicardClass]
    resolution: ResolutionData
    companion_hilbert_points: int
    interpolation: InterpolationVerdict
    effective: Cone2
    nef: Cone2
    largest_wall: Optional[WallReport]
    exceptional_fiber_dim: Optional[int]
    representative_chi: int
    note: Optional[str]

    def __post_init__(self):
        self.check()

    def check(self) -> None:
        """Re-assert the cross-module invariants; raises InvariantViolation."""
        if self.picard_rank is None:
            return
        if self.canonical.l1 != 0 or self.canonical.l0 >= 0:
            raise InvariantViolation("canonical class is not a negative multiple of L0")
        if not self.effective.contains(self.nef.ray_b):
            raise InvariantViolation(f"nef ray {self.nef.ray_b} is outside the effective cone")
        if not same_ray(self.effective.ray_a, self.nef.ray_a):
            raise InvariantViolation("nef and effective cones do not share the L0 edge")
        if self.exceptional_fiber_dim * 2 > self.mu:
            raise InvariantViolation("|eps| exceeds mu/2")

    def to_json(self) -> dict[str, Any]:
        na = {"status": "not_applicable"}
        data = {
            "mu": self.mu,
            "chi": self.chi,
            "chi_normalized": self.chi_normalized,
            "delta": self.delta,
            "dimension": self.dimension,
            "picard_rank": self.picard_rank if self.picard_rank is not None else "not_applicable",
            "canonical": self.canonical.to_json() if self.canonical else None,
            "resolution": self.resolution.to_json(),
            "companion_hilbert_points": self.companion_hilbert_points,
            "interpolation": self.interpolation.to_json(),
            "effective": self.effective.to_json(),
            "nef": self.nef.to_json(),
            "largest_wall": self.largest_wall.to_json() if self.largest_wall else na,
            "exceptional_fiber_dim": self.exceptional_fiber_dim,
            "iso_class_representative": {"mu": self.mu, "chi": self.representative_chi},
            "note": self.note,
        }
        return {k: data[k] for k in FIELDS}


def class_representative(space: ModuliSpace) -> ModuliSpace:
    """Normalized chi for mu >= 3; for mu <= 2 every chi is one class, represented by chi = 0."""
    return ModuliSpace(space.mu, 0) if space.mu <= 2 else space.normalized()


def analyze(mu: int, chi: int) -> AnalysisReport:
    """Everything except the echoed chi fields is computed on the class representative."""
    space = ModuliSpace(mu, chi)
    rep = class_representative(space)
    common = dict(
        mu=mu,
        chi=chi,
        chi_normalized=space.chi_normalized,
        representative_chi=rep.chi,
        delta=rep.delta,
        dimension=dimension(rep),
        resolution=generic_resolution(rep),
        companion_hilbert_points=companion_hilbert_points(rep),
        interpolation=interpolation_check(rep),
    )
    if mu < 3:
        return AnalysisReport(
            picard_rank=None,
            canonical=None,
            effective=Cone2.not_applicable(),
            nef=Cone2.not_applicable(),
            largest_wall=None,
            exceptional_fiber_dim=None,
            note=NOTES[mu],
            **common,
        )
    return AnalysisReport(
        picard_rank=2,
        canonical=canonical_class(rep),
        effective=effective_cone(rep),
        nef=nef_cone(rep),
        largest_wall=largest_wall(rep),
        exceptional_fiber_dim=exceptional_fiber_dimension(rep),
        note=None,
        **common,
    )


def dumps(data: Any) -> str:
    """Canonical compact JSON used for all machine output."""
    return json.dumps(data, ensure_ascii=False, separators=(",", ":"))


def to_text(data: dict[str, Any]) -> str:
    """One ``dotted.path: <json>`` line per leaf; lists stay as JSON values."""
    lines: list[str] = []

    def walk(prefix: str, value: Any) -> None:
        if isinstance(value, dict) and value:
            for k, v in value.items():
                walk(f"{prefix}.{k}" if prefix else k, v)
        else:
            lines.append(f"{prefix}: {dumps(value)}")

    walk("", data)
    return "\n".join(lines) + "\n"


def from_text(text: str) -> dict[str, Any]:
    out: dict[str, Any] = {}
    for line in text.splitlines():
        if not line.strip():
            continue
        path, _, raw = line.partition(": ")
        node = out
        keys = path.split(".")
        for k in keys[:-1]:
            node = node.setdefault(k, {})
        node[keys[-1]] = json.loads(raw)
    return out
