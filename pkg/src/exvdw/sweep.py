"""Parameter sweeps over run configurations and the figure datasets."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

from . import __version__
from .core import EXCITED, MediumState, PairConfiguration, SweepAxis, TwoLevelAtom
from .errors import (
    ConfigError, NotApplicable, PoleOnAxis, QuadratureNonConvergent, SchemaError,
    UnknownFigure, ValidationError,
)
from .halfspace import (
    SurfaceProblem, ground_probe_lifshitz_analog, surface_flags, surface_potential_lifshitz,
    surface_potential_qed, surface_potential_spectral,
)
from .media import (
    SlabProblem, boltzmann_populations, media_force, media_force_lifshitz_quadrature,
    media_force_pairwise, media_force_thermal,
)
from .pair import pair_closed_nearzone, pair_quadrature_nearzone, pair_spectral_extrapolated

NONCONVERGENT = "nonconvergent"

#: value columns and accepted methods per problem (first method is the default)
COLUMNS = {
    "pair": ("shift", "half_width"),
    "surface": ("qed", "lifshitz"),
    "media": ("qed", "lifshitz"),
    "lifshitz": ("quadrature", "closed"),
}
METHODS = {
    "pair": ("closed", "quadrature", "spectral"),
    "surface": ("closed", "spectral"),
    "media": ("closed",),
    "lifshitz": ("quadrature",),
}

FIGURES = ("4a", "4b", "5", "6", "7", "7a", "7b")
FIGURE_NOTE_7 = (
    "largest |QED|/|Lifshitz| ratio on the sweep is about 2*omega_B/gamma_B; "
    "no larger factor is imposed"
)


@dataclass
class SweepResult:
    axis_name: str
    columns: tuple
    rows: list
    metadata: dict = field(default_factory=dict)

    @property
    def nonconvergent(self):
        return any(NONCONVERGENT in r[-1] for r in self.rows)


def _medium(spec, species):
    if spec.thermal:
        return boltzmann_populations(species, spec.n_total, spec.temperature)
    return MediumState(species, spec.n_g, spec.n_e)


def _pair_point(cfg, method):
    pc = PairConfiguration(cfg.atom_a, cfg.state_a, cfg.atom_b, cfg.state_b)
    if method == "closed":
        r = pair_closed_nearzone(pc, cfg.geometry)
    elif method == "quadrature":
        r = pair_quadrature_nearzone(pc, cfg.geometry)
    else:
        r = pair_spectral_extrapolated(pc, cfg.geometry)
    return (r.shift, r.half_width), r.flags


def _surface_point(cfg, method):
    medium = _medium(cfg.medium_b, cfg.atom_b)
    p = SurfaceProblem(cfg.atom_a, cfg.state_a, medium, cfg.geometry)
    qed = surface_potential_qed(p) if method == "closed" else surface_potential_spectral(p)
    lif = None
    if medium.n_e == 0:
        try:
            lif = (surface_potential_lifshitz(p) if cfg.state_a is EXCITED
                   else ground_probe_lifshitz_analog(p))
        except NotApplicable:
            pass
    return (qed, lif), surface_flags(p)


def _slab(cfg):
    return SlabProblem(_medium(cfg.medium_a, cfg.atom_a), _medium(cfg.medium_b, cfg.atom_b),
                       cfg.geometry)


def _media_point(cfg, method):
    p = _slab(cfg)
    try:
        f = media_force(p)
        return (f.qed, f.lifshitz), f.flags
    except NotApplicable:
        # wide lines: the narrow-line Lifshitz form is refused, use its integral
        return (media_force_pairwise(p), media_force_lifshitz_quadrature(p)), (
            "lifshitz-by-quadrature",)


def _lifshitz_point(cfg, method):
    p = _slab(cfg)
    quad = media_force_lifshitz_quadrature(p)
    try:
        closed = media_force(p).lifshitz
    except NotApplicable:
        closed = None
    return (quad, closed), ()


_POINT = {
    "pair": _pair_point,
    "surface": _surface_point,
    "media": _media_point,
    "lifshitz": _lifshitz_point,
}


def evaluate_point(cfg, method=None):
    """Value columns and flags for one configuration."""
    method = method or METHODS[cfg.problem][0]
    if method not in METHODS[cfg.problem]:
        raise ConfigError(
            f"method {method!r} not available for {cfg.problem!r}; "
            f"choose from {METHODS[cfg.problem]}")
    return _POINT[cfg.problem](cfg, method)


def run_config(cfg, method=None):
    """Evaluate ``cfg`` over its sweep (or at its single geometry value).

    Points where an undamped pole sits on the integration path are skipped
    and listed in ``metadata['skipped']``; points whose quadrature misses its
    tolerance are kept with NaN values and the ``nonconvergent`` flag.
    """
    method = method or METHODS[cfg.problem][0]
    if method not in METHODS[cfg.problem]:
        raise ConfigError(
            f"method {method!r} not available for {cfg.problem!r}; "
            f"choose from {METHODS[cfg.problem]}")
    sweep = cfg.sweep
    axis = sweep.axis if sweep else "geometry"
    values = sweep.values() if sweep else [cfg.geometry]
    rows, skipped = [], []
    for x in values:
        try:
            point = cfg.with_axis_value(axis, x)
        except ValidationError as exc:
            raise SchemaError(f"sweep.{axis}", f"value {x!r}: {exc}") from None
        try:
            vals, flags = evaluate_point(point, method)
        except PoleOnAxis as exc:
            skipped.append({"axis_value": x, "reason": f"pole on axis: {exc}"})
            continue
        except QuadratureNonConvergent:
            vals, flags = (math.nan,) * len(COLUMNS[cfg.problem]), (NONCONVERGENT,)
        rows.append((x, *vals, tuple(flags)))
    metadata = {
        "version": __version__,
        "config": cfg.to_dict(),
        "method": method,
        "columns": [axis, *COLUMNS[cfg.problem], "flags"],
        "skipped": skipped,
    }
    return SweepResult(axis, COLUMNS[cfg.problem], rows, metadata)


# ---------------------------------------------------------------------------
# figure datasets

_FIGURE_DEFAULTS = {
    "4a": {"temperature": 0.1},
    "4b": {"temperature": 0.08},
    "5": {"temperature": 0.3},
    "6": {"omega_ratio": 0.9},
}


def _figure_axis(which, overrides):
    if which == "6":
        axis = SweepAxis("temperature", 0.001, 1.0, 1001)
    else:
        axis = SweepAxis("omega_ratio", 0.5, 1.5, 1001)
    changes = {k: overrides[k] for k in ("min", "max", "points") if overrides.get(k) is not None}
    axis = replace(axis, **changes)
    if axis.points < 2:
        raise SchemaError("points", "need at least 2 points")
    if not 0 < axis.min < axis.max:
        raise SchemaError("min", "need 0 < min < max")
    return axis


def figure_dataset(which, overrides=None):
    """Dimensionless dataset behind one of the comparison figures.

    ``4a``, ``4b`` and ``5`` sweep ``omega_A/omega_B`` for two thermal gases
    at fixed ``T/omega_B``; ``6`` sweeps ``T/omega_B`` at fixed
    ``omega_A/omega_B``; ``7`` (also ``7a``/``7b``) sweeps
    ``omega_A/omega_B`` for an excited atom in front of a cold gas.  Values
    are divided by ``(pi/9) d2_A d2_B n_A n_B / L**3`` (``n / z0**3`` for the
    single atom) with ``omega_B = 1``, ``d2 = 1``, unit densities and unit
    distance.

    ``overrides`` may set ``gamma_ratio``, ``temperature`` (4a/4b/5),
    ``omega_ratio`` (6), ``min``, ``max`` and ``points``.
    """
    which = str(which)
    if which not in FIGURES:
        raise UnknownFigure(which)
    overrides = dict(overrides or {})
    gamma_ratio = overrides.get("gamma_ratio")
    gamma_ratio = 0.02 if gamma_ratio is None else float(gamma_ratio)
    if not gamma_ratio >= 0:
        raise SchemaError("gamma_ratio", "must be >= 0")
    params = dict(_FIGURE_DEFAULTS.get(which, {}))
    for key in params:
        if overrides.get(key) is not None:
            params[key] = float(overrides[key])
    axis = _figure_axis(which, overrides)
    species_b = TwoLevelAtom(1.0, gamma_ratio, 1.0)
    norm = math.pi / 9.0
    rows = []
    for x in axis.values():
        if which in ("7", "7a", "7b"):
            probe = TwoLevelAtom(x, 0.0, 1.0)
            p = SurfaceProblem(probe, EXCITED, MediumState(species_b, 1.0), 1.0)
            qed, lif = surface_potential_qed(p) / norm, surface_potential_lifshitz(p) / norm
            flags = surface_flags(p)
        else:
            if which == "6":
                ratio, T = params["omega_ratio"], x
            else:
                ratio, T = x, params["temperature"]
            f = media_force_thermal(TwoLevelAtom(ratio, 0.0, 1.0), species_b, 1.0, 1.0, T, 1.0)
            qed, lif, flags = f.qed / norm, f.lifshitz / norm, f.flags
        rows.append((x, qed, lif, tuple(flags)))
    metadata = {
        "version": __version__,
        "figure": which,
        "gamma_ratio": gamma_ratio,
        **params,
        "axis": {"name": axis.axis, "min": axis.min, "max": axis.max, "points": axis.points},
        "normalization": ("values divided by (pi/9)*d2_A*d2_B*n_A*n_B/L**3 "
                          "(single atom: n/z0**3), omega_B = 1"),
        "columns": [axis.axis, "qed", "lifshitz", "flags"],
        "skipped": [],
    }
    if which in ("7", "7a", "7b"):
        ratios = [abs(r[1]) / abs(r[2]) for r in rows]
        metadata["peak_ratio"] = max(ratios)
        metadata["note"] = FIGURE_NOTE_7
    return SweepResult(axis.axis, ("qed", "lifshitz"), rows, metadata)


__all__ = [
    "SweepResult", "COLUMNS", "METHODS", "FIGURES", "evaluate_point", "run_config",
    "figure_dataset",
]
