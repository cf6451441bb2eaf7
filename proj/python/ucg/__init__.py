"""Upper-critical (complete multipartite) graphs: construction, recognition,
transformations, counting and an exhaustive theorem checker."""

from ._core import (
    Graph,
    add_complete_vertex,
    add_copy,
    add_edge_with_conditions,
    chromatic_number,
    complement,
    construct,
    contains_clique,
    contract_edge,
    count_partitions,
    critical_sequence_search,
    delete_vertex,
    emit_table,
    enumerate_proper_partitions,
    enumerate_upper_critical,
    identify_vertices,
    is_connected,
    is_isomorphic,
    is_uniquely_colorable,
    is_upper_critical_def,
    join,
    partitions_of,
    recognize,
    saturate_from_coloring,
    theorems,
    verify_all,
    verify_theorem,
)

__all__ = [name for name in dir() if not name.startswith("_")]
