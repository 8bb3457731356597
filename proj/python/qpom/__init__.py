"""Cavity-optomechanical quasiparticle toolkit for trapped 1D quasi-condensates.

The heavy lifting lives in the compiled extension ``_qpom``; this package
re-exports its public surface. Wheel builds place the extension inside the
package; in-tree builds expose it as a top-level module.
"""

try:
    from . import _qpom as _core
except ImportError:  # pragma: no cover - build-tree layout
    import _qpom as _core

_names = [
    "AtomicLine",
    "AtomSpecies",
    "DerivedScales",
    "Dispersion",
    "ExperimentConfig",
    "GaussianState",
    "GroundState",
    "MziResult",
    "TrapConfig",
    "airy",
    "apply_beam_splitter",
    "apply_displacement",
    "apply_free_phase",
    "apply_squeeze_single",
    "apply_squeeze_two",
    "cramer_rao",
    "derive_scales",
    "dispersion",
    "gamma_three_body",
    "load_config",
    "mzi_run",
    "paper_quantities",
    "qfi_displacement",
    "run_scenario",
    "solve_ground_state",
]

for _name in _names:
    globals()[_name] = getattr(_core, _name)

__all__ = list(_names)
