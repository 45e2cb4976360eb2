"""Python front end to the geomkit C++ library."""

import json

from ._core import (
    diameter,
    divisor_count,
    fair_cut,
    hcn_up_to,
    max_diameter_lens,
    min_width,
    polygon_metrics,
    rational_arith,
    run,
    solid_summary,
)

__all__ = [
    "diameter",
    "divisor_count",
    "fair_cut",
    "hcn_up_to",
    "max_diameter_lens",
    "min_width",
    "polygon_metrics",
    "rational_arith",
    "report",
    "run",
    "solid_summary",
]


def report(*args):
    """Run a CLI command and return (exit code, parsed report)."""
    code, out, err = run(list(args))
    if code == 2:
        raise ValueError(err.strip())
    return code, json.loads(out)
