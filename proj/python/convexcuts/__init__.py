"""Convex cut enumeration for bipartite and plane graphs."""

from ._core import (
    AlternatingError,
    EmbeddingError,
    Graph,
    GraphError,
    ParseError,
    PlaneEmbedding,
    ResourceLimitError,
    VerificationError,
    alternating_paths,
    bipartite_cuts,
    bruteforce_cuts,
    generate,
    generator_families,
    hamming_labels,
    is_convex_cut,
    parse_graph,
    partial_cube,
    plane_cuts,
    run_command,
    serialize_graph,
    well_arranged,
)

__all__ = [name for name in dir() if not name.startswith("_")]
