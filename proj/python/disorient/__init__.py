"""Disorientability of simplicial complexes.

A complex is built from its maximal simplices, given as lists of vertex ids
covering 0..n-1. Top simplices carry their sorted-vertex orientation unless a
``reference`` list of +1/-1 signs (one per top simplex, canonical order) is
passed.
"""

import json

from ._core import (
    Complex,
    DocumentError,
    IterationCapExceeded,
    betti_numbers,
    boundary_matrix,
    brute_force_disorientable,
    check_disorientable,
    cycle_parity_verdict,
    fundamental_cycles,
    generate,
    generator_names,
    is_bipartite,
    is_bipartite_spectral,
    laplacian,
    make_disorientable,
    parse_document,
    spectrum,
    subdivide_edge,
    write_document,
)
from ._core import check_report as _check_report

__all__ = [
    "Complex",
    "DocumentError",
    "IterationCapExceeded",
    "betti_numbers",
    "boundary_matrix",
    "brute_force_disorientable",
    "check_disorientable",
    "check_report",
    "cycle_parity_verdict",
    "fundamental_cycles",
    "generate",
    "generator_names",
    "is_bipartite",
    "is_bipartite_spectral",
    "laplacian",
    "make_disorientable",
    "parse_document",
    "spectrum",
    "subdivide_edge",
    "write_document",
]


def check_report(document, certificate=False, oracle=False):
    """Report for a complex document, given as JSON text or an already parsed dict."""
    if not isinstance(document, str):
        document = json.dumps(document)
    return json.loads(_check_report(document, certificate, oracle))
