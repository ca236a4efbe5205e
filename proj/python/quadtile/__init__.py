"""Sphere tilings by congruent almost-equilateral (a3b) and a2bc quadrilaterals."""

try:
    from . import _quadtile as _impl  # installed wheel layout
except ImportError:  # development layout: module next to the build tree
    import _quadtile as _impl

_names = [
    "DomainError",
    "FlipPreconditionError",
    "IdentityViolated",
    "NotRealizable",
    "RangeError",
    "TilingParseError",
    "TilingVersionError",
    "apply_flip",
    "classify_nonrational",
    "classify_rational",
    "classify_rational_agd",
    "coolsaet_residual",
    "count_feasibility",
    "earth_map_edges",
    "enumerate_vertices",
    "eval_angle",
    "generate_earth_map",
    "generate_rearrangement",
    "myerson_self_check",
    "nonrational_avc_at",
    "realize_a2bc",
    "realize_a3b",
    "recalibrate",
    "render_svg",
    "solve_free_angle",
    "tables_csv",
    "tables_json",
    "verify_tiling",
]
for _name in _names:
    globals()[_name] = getattr(_impl, _name)

__all__ = list(_names)
