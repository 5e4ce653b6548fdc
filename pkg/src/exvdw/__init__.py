"""Van der Waals and Casimir interactions of excited two-level atoms and dilute gases."""

__version__ = "0.1.0"

from .core import (  # noqa: E402
    EXCITED, GROUND, AtomState, MediumState, PairConfiguration, RunConfig, TwoLevelAtom,
    parse_config, serialize_config, validate_atom,
)
from .halfspace import (  # noqa: E402
    SurfaceProblem, surface_potential_lifshitz, surface_potential_qed, surface_potential_spectral,
)
from .kernels import BACKEND  # noqa: E402
from .media import (  # noqa: E402
    ForcePair, SlabProblem, boltzmann_populations, media_force, media_force_lifshitz_quadrature,
    media_force_thermal, media_potential_per_area,
)
from .pair import (  # noqa: E402
    ShiftWidth, pair_closed_nearzone, pair_quadrature_nearzone, pair_spectral_extrapolated,
    pair_spectral_general,
)
from .response import COHERENT, CONVENTIONAL, permittivity, permittivity_imag_axis, polarizability  # noqa: E402,E501

__all__ = [
    "__version__", "BACKEND",
    "AtomState", "GROUND", "EXCITED", "TwoLevelAtom", "PairConfiguration", "MediumState",
    "RunConfig", "validate_atom", "parse_config", "serialize_config",
    "COHERENT", "CONVENTIONAL", "polarizability", "permittivity", "permittivity_imag_axis",
    "ShiftWidth", "pair_closed_nearzone", "pair_quadrature_nearzone", "pair_spectral_general",
    "pair_spectral_extrapolated",
    "SurfaceProblem", "surface_potential_qed", "surface_potential_spectral",
    "surface_potential_lifshitz",
    "SlabProblem", "ForcePair", "boltzmann_populations", "media_force", "media_force_thermal",
    "media_force_lifshitz_quadrature", "media_potential_per_area",
]
