"""Balls, roundness, and sleekness in explicit metric spaces.

Thin wrapper over the compiled core: run checks against gallery spaces or
JSON definitions, replay stored reports, and render deterministic SVG
drawings.
"""

try:
    from ._core import (
        __version__,
        gallery_names,
        normalize_space,
        render_svg,
        replay,
        run_check,
    )
except ImportError:  # in-tree test runs, where _core sits next to the package
    from _core import (
        __version__,
        gallery_names,
        normalize_space,
        render_svg,
        replay,
        run_check,
    )

__all__ = [
    "__version__",
    "gallery_names",
    "normalize_space",
    "render_svg",
    "replay",
    "run_check",
]
