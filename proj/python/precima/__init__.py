"""Precision measures over accepting Petri nets, executable axiom checks,
and the bundled counterexample corpus.

The heavy lifting lives in the compiled extension; this package just
re-exports it so that both the installed wheel layout and an in-tree build
directory on PYTHONPATH work.
"""

try:
    from ._precima import *  # noqa: F401,F403
    from ._precima import corpus  # noqa: F401
except ImportError:  # in-tree: extension sits next to the build directory
    from _precima import *  # noqa: F401,F403
    from _precima import corpus  # noqa: F401

__all__ = [
    "Model",
    "Log",
    "corpus",
    "parse_net",
    "parse_log",
    "is_trace",
    "is_fitting",
    "alignment_cost",
    "flower",
    "measures",
    "measure",
    "check_axiom",
    "axiom_matrix_text",
    "reproduce_paper",
    "PrecimaError",
]
