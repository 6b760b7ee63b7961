"""Run configuration and input loading shared by the command line and the pipelines."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields
from pathlib import Path

import numpy as np

from .algebra import DEFAULT_CLUSTER_TOL, HomogeneousPolynomial, fermat, parse_polynomial
from .geometry import ProjectivePoint
from .tracker import TrackerConfig

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    cluster_tol: float = DEFAULT_CLUSTER_TOL
    tracker_tol: float = 1e-11
    residual_tol: float = 1e-8
    px_samples: int = 200
    extra_slices: int = 2
    scan_grid: int = 3
    output_path: str | None = None

    def __post_init__(self):
        for name in ("cluster_tol", "tracker_tol", "residual_tol"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")
        for name in ("px_samples", "extra_slices", "scan_grid"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 bits")

    def tracker_config(self, **overrides) -> TrackerConfig:
        base = dict(seed=self.seed, cluster_tol=self.cluster_tol, corrector_tol=self.tracker_tol,
                    extra_slices=self.extra_slices)
        base.update(overrides)
        return TrackerConfig(**base)

    def to_dict(self) -> dict:
        return {"schemaVersion": SCHEMA_VERSION, **asdict(self)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "RunConfig":
        version = data.get("schemaVersion", SCHEMA_VERSION)
        if version != SCHEMA_VERSION:
            raise ValueError(f"unsupported config schema version {version}")
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known - {"schemaVersion"}
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        return cls(**{k: v for k, v in data.items() if k in known})

    @classmethod
    def from_json(cls, text: str) -> "RunConfig":
        return cls.from_dict(json.loads(text))

    @classmethod
    def load(cls, path: str | Path) -> "RunConfig":
        return cls.from_json(Path(path).read_text())


NAMED_SURFACES = {
    "fermat": lambda: fermat(3),
    "quadric": lambda: fermat(2),
}


def load_surface(source: str) -> HomogeneousPolynomial:
    """A surface from a JSON file, a text file, a name (``fermat``, ``quadric``) or inline text."""
    if source in NAMED_SURFACES:
        return NAMED_SURFACES[source]()
    path = Path(source)
    if path.exists():
        text = path.read_text()
        if path.suffix == ".json" or text.lstrip().startswith("{"):
            return HomogeneousPolynomial.from_dict(json.loads(text))
        return parse_polynomial(text.strip(), num_vars=4)
    return parse_polynomial(source, num_vars=4)


def parse_point(text: str) -> ProjectivePoint:
    """``0,0,0,1`` (reals) or entries like ``1+2j``."""
    parts = [p.strip() for p in text.replace(";", ",").split(",") if p.strip()]
    return ProjectivePoint(np.array([complex(p.replace("i", "j")) for p in parts]))


def parse_point_json(text: str) -> ProjectivePoint:
    data = json.loads(Path(text).read_text()) if Path(text).exists() else json.loads(text)
    return ProjectivePoint.from_json(data)
