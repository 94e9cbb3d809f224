"""Exact log canonical thresholds, Monge-Ampere masses and inequality checks
for weighted-monomial and monomial-ideal singularity models.

Thin wrapper over the C++ core `_lctlab`. Exact rationals cross the boundary
as canonical "p/q" strings; model specifications are the same JSON documents
the `lctlab` CLI reads.
"""

try:
    from . import _lctlab as _core  # installed wheel: extension inside the package
except ImportError:
    import _lctlab as _core  # build tree: extension directory on sys.path

__version__ = _core.__version__

SchemaError = _core.SchemaError
ValidationError = _core.ValidationError

check = _core.check
contains = _core.contains
covolume = _core.covolume
covolume_mc = _core.covolume_mc
f_lemma21 = _core.f_lemma21
generic_restriction_estimate = _core.generic_restriction_estimate
integrability_check = _core.integrability_check
invariants = _core.invariants
jn_integral = _core.jn_integral
lct = _core.lct
lct_dual = _core.lct_dual
lct_estimate_decay = _core.lct_estimate_decay
lelong = _core.lelong
ma_mass = _core.ma_mass
minkowski_sum = _core.minkowski_sum
openness_gain = _core.openness_gain
polyhedron_vertices = _core.polyhedron_vertices
restrict_to = _core.restrict_to
slice_energy = _core.slice_energy
slice_limit_check = _core.slice_limit_check
sublevel_volume = _core.sublevel_volume
theorem_rhs = _core.theorem_rhs

__all__ = [
    "SchemaError",
    "ValidationError",
    "check",
    "contains",
    "covolume",
    "covolume_mc",
    "f_lemma21",
    "generic_restriction_estimate",
    "integrability_check",
    "invariants",
    "jn_integral",
    "lct",
    "lct_dual",
    "lct_estimate_decay",
    "lelong",
    "ma_mass",
    "minkowski_sum",
    "openness_gain",
    "polyhedron_vertices",
    "restrict_to",
    "slice_energy",
    "slice_limit_check",
    "sublevel_volume",
    "theorem_rhs",
]
