"""Construct, compose, check and classify (2,3)-cordial oriented hypercubes."""

from .core import (
    Digraph,
    LabeledDigraph,
    LambdaTriple,
    OrientedHypercube,
    complement,
    hypercube_digraph,
    hypercube_from_digraph,
    induce_arc_labeling,
    is_23_cordial_pair,
    is_digon_free,
    is_friendly,
    lambda_triple,
    reverse,
)
from .construct import DoublingMode, base_cube, construct_cordial, double

__version__ = "0.1.0"
