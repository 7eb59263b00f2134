"""Doubling, moment-angle complexes and toral-rank checks over exact rational homology."""

__version__ = "0.1.0"

from .complex_core import (  # noqa: E402
    SimplicialComplex,
    from_maximal_faces,
    join,
    link,
    restriction,
)
from .doubling import double  # noqa: E402
from .homology import BettiTable, betti, rank_exact, reduced_betti  # noqa: E402
from .cubical import betti_rzk, hrk_rzk  # noqa: E402
from .hochster import hochster_table, hrk_zk  # noqa: E402

__all__ = [
    "BettiTable",
    "SimplicialComplex",
    "betti",
    "betti_rzk",
    "double",
    "from_maximal_faces",
    "hochster_table",
    "hrk_rzk",
    "hrk_zk",
    "join",
    "link",
    "rank_exact",
    "reduced_betti",
    "restriction",
]
