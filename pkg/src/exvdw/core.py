"""Domain types and the run-configuration schema.

All quantities are in natural units (hbar = c = k_B = 1), measured in units of
a reference frequency chosen by the user: frequencies and widths in omega_ref,
distances in 1/omega_ref, energies in omega_ref.
"""

from __future__ import annotations

import enum
import json
import math
import warnings
from dataclasses import asdict, dataclass, replace

from .errors import (
    InvalidDensity,
    InvalidGeometry,
    NegativeWidth,
    NonPositiveDipole,
    NonPositiveFrequency,
    ParseError,
    SchemaError,
)

#: gamma/omega above which the omega >> gamma closed forms are flagged.
WIDE_LINE_RATIO = 0.5


class WideLineWarning(UserWarning):
    """The line is too broad for the narrow-line closed forms to be trusted."""


class AtomState(enum.Enum):
    GROUND = "g"
    EXCITED = "e"

    @property
    def sign(self):
        """+1 for the excited level, -1 for the ground level."""
        return 1 if self is AtomState.EXCITED else -1

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(value)
        except ValueError:
            raise SchemaError("", f"state must be 'g' or 'e', got {value!r}") from None


GROUND = AtomState.GROUND
EXCITED = AtomState.EXCITED


def _check_atom_fields(omega, gamma, d2):
    if not (math.isfinite(omega) and omega > 0):
        raise NonPositiveFrequency("omega", f"must be finite and > 0, got {omega!r}")
    if not (math.isfinite(gamma) and gamma >= 0):
        raise NegativeWidth("gamma", f"must be finite and >= 0, got {gamma!r}")
    if not (math.isfinite(d2) and d2 > 0):
        raise NonPositiveDipole("d2", f"must be finite and > 0, got {d2!r}")


@dataclass(frozen=True)
class TwoLevelAtom:
    """One atomic species reduced to its g <-> e transition.

    Parameters
    ----------
    omega : float
        Transition frequency.
    gamma : float
        Width of the excited level.
    d2 : float
        Squared transition dipole |d_eg|^2.
    """

    omega: float
    gamma: float = 0.0
    d2: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "omega", float(self.omega))
        object.__setattr__(self, "gamma", float(self.gamma))
        object.__setattr__(self, "d2", float(self.d2))
        _check_atom_fields(self.omega, self.gamma, self.d2)

    @property
    def narrow_line(self):
        return self.gamma / self.omega < WIDE_LINE_RATIO


def validate_atom(atom):
    """Return ``atom`` unchanged if all invariants hold, otherwise raise.

    Construction already validates, so this only matters for objects that
    were mutated behind the dataclass's back.  A broad line (gamma/omega at
    or above 0.5) is allowed but emits :class:`WideLineWarning`.
    """
    _check_atom_fields(atom.omega, atom.gamma, atom.d2)
    if not atom.narrow_line:
        warnings.warn(
            f"gamma/omega = {atom.gamma / atom.omega:.3g} >= {WIDE_LINE_RATIO}; "
            "narrow-line closed forms are unreliable",
            WideLineWarning,
            stacklevel=2,
        )
    return atom


@dataclass(frozen=True)
class PairConfiguration:
    atom_a: TwoLevelAtom
    state_a: AtomState
    atom_b: TwoLevelAtom
    state_b: AtomState

    def __post_init__(self):
        object.__setattr__(self, "state_a", AtomState.parse(self.state_a))
        object.__setattr__(self, "state_b", AtomState.parse(self.state_b))

    @property
    def label(self):
        return (self.state_a.value + self.state_b.value).upper()


@dataclass(frozen=True)
class MediumState:
    """A dilute gas of one species with given level populations."""

    species: TwoLevelAtom
    n_g: float
    n_e: float = 0.0

    def __post_init__(self):
        n_g, n_e = float(self.n_g), float(self.n_e)
        object.__setattr__(self, "n_g", n_g)
        object.__setattr__(self, "n_e", n_e)
        if not (math.isfinite(n_g) and n_g >= 0):
            raise InvalidDensity("n_g", f"must be >= 0, got {n_g!r}")
        if not (math.isfinite(n_e) and n_e >= 0):
            raise InvalidDensity("n_e", f"must be >= 0, got {n_e!r}")
        if n_g + n_e <= 0:
            raise InvalidDensity("n_g + n_e", "total density must be > 0")

    @property
    def n_total(self):
        return self.n_g + self.n_e

    @property
    def populations(self):
        """(state, density) pairs."""
        return ((GROUND, self.n_g), (EXCITED, self.n_e))


def check_positive(name, value):
    value = float(value)
    if not (math.isfinite(value) and value > 0):
        raise InvalidGeometry(name, f"must be > 0, got {value!r}")
    return value


# ---------------------------------------------------------------------------
# run configuration

PROBLEMS = ("pair", "surface", "media", "lifshitz")
OUTPUTS = ("csv", "json")
SCALES = ("lin", "log")

_ATOM_KEYS = {"omega", "gamma", "d2"}
_TOP_KEYS = {
    "problem", "atom_a", "atom_b", "state_a", "state_b",
    "medium_a", "medium_b", "geometry", "sweep", "output",
}
# keys each problem uses, beyond problem/geometry/sweep/output
_PROBLEM_KEYS = {
    "pair": {"atom_a", "atom_b", "state_a", "state_b"},
    "surface": {"atom_a", "atom_b", "state_a", "medium_b"},
    "media": {"atom_a", "atom_b", "medium_a", "medium_b"},
    "lifshitz": {"atom_a", "atom_b", "medium_a", "medium_b"},
}
_REQUIRED = {
    "pair": {"atom_a", "atom_b"},
    "surface": {"atom_a", "atom_b", "medium_b"},
    "media": {"atom_a", "atom_b", "medium_a", "medium_b"},
    "lifshitz": {"atom_a", "atom_b", "medium_a", "medium_b"},
}
SWEEP_AXES = {
    "pair": ("geometry", "omega_a", "omega_b", "omega_ratio", "gamma_b", "d2_a", "d2_b"),
    "surface": ("geometry", "omega_a", "omega_b", "omega_ratio", "gamma_b", "d2_a", "d2_b",
                "temperature"),
    "media": ("geometry", "omega_a", "omega_b", "omega_ratio", "gamma_b", "d2_a", "d2_b",
              "temperature"),
    "lifshitz": ("geometry", "omega_a", "omega_b", "omega_ratio", "gamma_b", "d2_a", "d2_b",
                 "temperature"),
}


@dataclass(frozen=True)
class MediumSpec:
    """Populations as given in a config: explicit densities or thermal."""

    n_g: float | None = None
    n_e: float | None = None
    n_total: float | None = None
    temperature: float | None = None

    @property
    def thermal(self):
        return self.temperature is not None

    def to_dict(self):
        if self.thermal:
            return {"n_total": self.n_total, "temperature": self.temperature}
        return {"n_g": self.n_g, "n_e": self.n_e}


@dataclass(frozen=True)
class SweepAxis:
    axis: str
    min: float
    max: float
    points: int
    scale: str = "lin"

    def values(self):
        """Sweep abscissae, ascending; endpoints and midpoints land exactly."""
        n = self.points - 1
        if self.scale == "log":
            lo, hi = math.log(self.min), math.log(self.max)
            vals = [math.exp((lo * (n - i) + hi * i) / n) for i in range(self.points)]
            vals[0], vals[-1] = self.min, self.max
            return vals
        return [(self.min * (n - i) + self.max * i) / n for i in range(self.points)]


@dataclass(frozen=True)
class RunConfig:
    problem: str
    atom_a: TwoLevelAtom
    atom_b: TwoLevelAtom
    geometry: float
    state_a: AtomState = GROUND
    state_b: AtomState = GROUND
    medium_a: MediumSpec | None = None
    medium_b: MediumSpec | None = None
    sweep: SweepAxis | None = None
    output: str = "csv"

    def with_axis_value(self, axis, value):
        """Copy of this config with one sweep parameter replaced."""
        if axis == "geometry":
            return replace(self, geometry=check_positive("geometry", value))
        if axis == "omega_a":
            return replace(self, atom_a=replace(self.atom_a, omega=value))
        if axis == "omega_b":
            return replace(self, atom_b=replace(self.atom_b, omega=value))
        if axis == "omega_ratio":
            return replace(self, atom_a=replace(self.atom_a, omega=value * self.atom_b.omega))
        if axis == "gamma_b":
            return replace(self, atom_b=replace(self.atom_b, gamma=value))
        if axis == "d2_a":
            return replace(self, atom_a=replace(self.atom_a, d2=value))
        if axis == "d2_b":
            return replace(self, atom_b=replace(self.atom_b, d2=value))
        if axis == "temperature":
            return replace(
                self,
                medium_a=_retemper(self.medium_a, value),
                medium_b=_retemper(self.medium_b, value),
            )
        raise SchemaError("sweep.axis", f"unknown axis {axis!r}")

    def to_dict(self):
        used = _PROBLEM_KEYS[self.problem]
        doc = {"problem": self.problem}
        for key in ("atom_a", "atom_b"):
            doc[key] = asdict(getattr(self, key))
        if "state_a" in used:
            doc["state_a"] = self.state_a.value
        if "state_b" in used:
            doc["state_b"] = self.state_b.value
        for key in ("medium_a", "medium_b"):
            if key in used:
                doc[key] = getattr(self, key).to_dict()
        doc["geometry"] = self.geometry
        if self.sweep is not None:
            doc["sweep"] = asdict(self.sweep)
        doc["output"] = self.output
        return doc


def _retemper(spec, temperature):
    if spec is None or not spec.thermal:
        return spec
    return replace(spec, temperature=check_positive("temperature", temperature))


def _number(obj, path, *, positive=False, nonneg=False):
    if isinstance(obj, bool) or not isinstance(obj, (int, float)):
        raise SchemaError(path, f"expected a number, got {obj!r}")
    value = float(obj)
    if not math.isfinite(value):
        raise SchemaError(path, "must be finite")
    if positive and value <= 0:
        raise SchemaError(path, "must be > 0")
    if nonneg and value < 0:
        raise SchemaError(path, "must be >= 0")
    return value


def _check_keys(obj, path, allowed, required=()):
    if not isinstance(obj, dict):
        raise SchemaError(path, f"expected an object, got {type(obj).__name__}")
    unknown = sorted(set(obj) - set(allowed))
    if unknown:
        prefix = f"{path}." if path else ""
        raise SchemaError(prefix + unknown[0], "unknown key")
    for key in required:
        if key not in obj:
            prefix = f"{path}." if path else ""
            raise SchemaError(prefix + key, "missing required key")


def _parse_atom(obj, path):
    _check_keys(obj, path, _ATOM_KEYS, required=("omega",))
    omega = _number(obj["omega"], f"{path}.omega", positive=True)
    gamma = _number(obj.get("gamma", 0.0), f"{path}.gamma", nonneg=True)
    d2 = _number(obj.get("d2", 1.0), f"{path}.d2", positive=True)
    return TwoLevelAtom(omega, gamma, d2)


def _parse_medium(obj, path):
    if not isinstance(obj, dict):
        raise SchemaError(path, "expected an object")
    if "temperature" in obj or "n_total" in obj:
        _check_keys(obj, path, {"n_total", "temperature"}, required=("n_total", "temperature"))
        return MediumSpec(
            n_total=_number(obj["n_total"], f"{path}.n_total", positive=True),
            temperature=_number(obj["temperature"], f"{path}.temperature", positive=True),
        )
    _check_keys(obj, path, {"n_g", "n_e"})
    n_g = _number(obj.get("n_g", 0.0), f"{path}.n_g", nonneg=True)
    n_e = _number(obj.get("n_e", 0.0), f"{path}.n_e", nonneg=True)
    if n_g + n_e <= 0:
        raise SchemaError(path, "n_g + n_e must be > 0")
    return MediumSpec(n_g=n_g, n_e=n_e)


def _parse_sweep(obj, problem):
    _check_keys(obj, "sweep", {"axis", "min", "max", "points", "scale"},
                required=("axis", "min", "max", "points"))
    axis = obj["axis"]
    if axis not in SWEEP_AXES[problem]:
        raise SchemaError("sweep.axis", f"{axis!r} is not a sweepable axis for {problem!r}")
    lo = _number(obj["min"], "sweep.min")
    hi = _number(obj["max"], "sweep.max")
    points = obj["points"]
    if isinstance(points, bool) or not isinstance(points, int) or points < 2:
        raise SchemaError("sweep.points", "must be an integer >= 2")
    scale = obj.get("scale", "lin")
    if scale not in SCALES:
        raise SchemaError("sweep.scale", f"must be one of {SCALES}")
    if not lo < hi:
        raise SchemaError("sweep", "min must be < max")
    if scale == "log" and lo <= 0:
        raise SchemaError("sweep.min", "log sweeps need min > 0")
    return SweepAxis(axis, lo, hi, points, scale)


def config_from_dict(doc):
    """Validate a decoded config document; see :func:`parse_config`."""
    _check_keys(doc, "", _TOP_KEYS, required=("problem", "geometry"))
    problem = doc["problem"]
    if problem not in PROBLEMS:
        raise SchemaError("problem", f"must be one of {PROBLEMS}, got {problem!r}")
    used = _PROBLEM_KEYS[problem]
    for key in sorted(set(doc) - used - {"problem", "geometry", "sweep", "output"}):
        raise SchemaError(key, f"not used by problem {problem!r}")
    for key in sorted(_REQUIRED[problem]):
        if key not in doc:
            raise SchemaError(key, "missing required key")

    geometry = doc["geometry"]
    if isinstance(geometry, bool) or not isinstance(geometry, (int, float)):
        raise SchemaError("geometry", "expected a number")
    if not (math.isfinite(geometry) and geometry > 0):
        raise SchemaError("geometry", "geometry must be > 0")

    output = doc.get("output", "csv")
    if output not in OUTPUTS:
        raise SchemaError("output", f"must be one of {OUTPUTS}")

    kwargs = {}
    for key in ("state_a", "state_b"):
        if key in doc:
            try:
                kwargs[key] = AtomState.parse(doc[key])
            except SchemaError as exc:
                raise SchemaError(key, str(exc)) from None
    for key in ("medium_a", "medium_b"):
        if key in doc:
            kwargs[key] = _parse_medium(doc[key], key)

    sweep = _parse_sweep(doc["sweep"], problem) if "sweep" in doc else None
    if sweep is not None and sweep.axis == "temperature":
        media = [kwargs.get(k) for k in ("medium_a", "medium_b")]
        if not any(m is not None and m.thermal for m in media):
            raise SchemaError("sweep.axis", "temperature sweep needs a thermal medium")

    try:
        return RunConfig(
            problem=problem,
            atom_a=_parse_atom(doc["atom_a"], "atom_a"),
            atom_b=_parse_atom(doc["atom_b"], "atom_b"),
            geometry=float(geometry),
            sweep=sweep,
            output=output,
            **kwargs,
        )
    except SchemaError:
        raise
    except ValueError as exc:
        raise SchemaError(getattr(exc, "field", ""), str(exc)) from None


def parse_config(text):
    """Parse and validate a JSON run configuration.

    Raises
    ------
    ParseError
        The text is not a JSON object.
    SchemaError
        A key is missing, unknown or out of range; ``exc.path`` names it.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("config must be a JSON object")
    return config_from_dict(doc)


def serialize_config(cfg):
    """JSON text with every default written out; parses back to ``cfg``."""
    return json.dumps(cfg.to_dict(), indent=2)
