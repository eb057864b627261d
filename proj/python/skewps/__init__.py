"""Skew power series rings R[[x; sigma, delta]] at finite precision.

Thin wrapper over the compiled extension: every operation takes and returns
plain Python literals (dicts, lists, ints) in the JSON grammar used by the
``skewps`` command-line tool.
"""

try:
    from ._skewps import *  # noqa: F401,F403
    from ._skewps import __doc__ as _ext_doc  # noqa: F401
except ImportError:  # development layout: extension on PYTHONPATH next to this package
    from _skewps import *  # noqa: F401,F403

__all__ = [
    "SkewpsError",
    "ParseError",
    "NotAUnit",
    "NotCompatible",
    "HypothesisViolated",
    "ReducedDegreeTooHigh",
    "UnknownSuite",
    "suite_names",
    "run_suite",
    "evaluate",
    "change_variable",
    "untwist",
    "iso_apply",
    "iso_unapply",
    "prepare",
    "ideal_poly",
]
