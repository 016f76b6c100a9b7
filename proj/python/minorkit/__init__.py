"""Ideals of 2-minors of 2xn matrices of linear forms.

Kronecker-Weierstrass normal forms with change-of-basis certificates,
height / cohomological dimension / arithmetical rank classification, and
explicit generator families checked by an exact Groebner oracle.
"""

try:
    from ._core import (
        MinorkitError,
        analyze_blocks,
        analyze_matrix,
        decompose,
        equal_radical,
        groebner_basis,
        ideal_height,
        ideal_member,
        radical_member,
        render_text,
        __version__,
    )
except ImportError:  # build-tree layout: the extension sits next to python/
    from _core import (
        MinorkitError,
        analyze_blocks,
        analyze_matrix,
        decompose,
        equal_radical,
        groebner_basis,
        ideal_height,
        ideal_member,
        radical_member,
        render_text,
        __version__,
    )

__all__ = [
    "MinorkitError",
    "analyze_blocks",
    "analyze_matrix",
    "decompose",
    "equal_radical",
    "groebner_basis",
    "ideal_height",
    "ideal_member",
    "radical_member",
    "render_text",
    "__version__",
]
