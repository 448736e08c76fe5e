"""Line digraph combinatorics: construction, recognition, root reconstruction,
extremal generators and exhaustive verification of the maximum arc count."""

from .digraph import (
    Arc,
    Digraph,
    degrees,
    disjoint_union,
    from_arcs,
    is_connected,
    relabel,
    remove,
    strip_isolated,
    transpose,
    two_circuits,
)
from .enumeration import (
    Mode,
    VerificationReport,
    all_roots,
    connected_classes,
    enumerate_connected,
    verify_max,
)
from .extremal import StarSpec, check_arc_degree_bound, gen_max_line, gen_o, gen_star
from .io import emit, parse_edge_list
from .iso import KERNEL, CanonicalForm, are_isomorphic, canonical_form
from .line import LineDigraph, line_digraph, max_arcs, phi
from .recognition import (
    PatternKind,
    PatternWitness,
    RecognitionVerdict,
    find_bad_z,
    find_deviation,
    find_eight,
    find_shortcut,
    is_line_digraph,
    reconstruct_root,
)

__version__ = "0.1.0"
