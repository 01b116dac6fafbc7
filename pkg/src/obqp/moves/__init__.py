"""Moves between pointed open books: conjugation, Markov and Hopf stabilization."""

from obqp.moves.half_twist import HalfTwistTransport, transport_half_twist
from obqp.moves.hopf import HopfStabilization, hopf_curve, hopf_stabilize, stabilize_hopf
from obqp.moves.markov import (
    Destabilization,
    Stabilization,
    destabilize,
    markov_destabilize,
    markov_stabilize,
    stabilize,
)
from obqp.moves.script import (
    MoveRecord,
    apply_move,
    apply_records,
    conjugate_by,
    dump_moves,
    load_move_records,
    replay,
)

__all__ = [
    "Destabilization",
    "HalfTwistTransport",
    "HopfStabilization",
    "MoveRecord",
    "Stabilization",
    "apply_move",
    "apply_records",
    "conjugate_by",
    "destabilize",
    "dump_moves",
    "hopf_curve",
    "hopf_stabilize",
    "load_move_records",
    "markov_destabilize",
    "markov_stabilize",
    "replay",
    "stabilize",
    "stabilize_hopf",
    "transport_half_twist",
]
