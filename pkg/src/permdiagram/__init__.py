"""Ranked permutation diagrams, the tail-pair statistics a_m and b_m, the
involution exchanging them, and Dyck-path tunnels."""

from .diagram import (Diagram, DiagramError, RankedSquare, build_diagram,
                      permutation_from_diagram, rank0_shape, stat_a_via_diagram)
from .dyck import (DyckPath, DyckPathError, PathFeatures, Tunnel, boundary_path,
                   enumerate_paths, parse_path, path_features, tunnels)
from .involution import (PartialData, ReconstructionError, Trace, arrange_dots,
                         decompose, phi, phi_avoider, reconstruct, simion_schmidt)
from .lab import (CountRow, CountTable, EnumerationLimitError,
                  count_exact_occurrences, distribution, distribution_table,
                  formula, prop9_forward, qualifying_tunnels, run_suite,
                  thomas_map, thomas_pairs)
from .perm import (PatternClass, Permutation, PermutationError, TailPair,
                   extreme_positions, identity, make_permutation, occurrences,
                   parse_permutation, reversal, stat, tail_pairs)

__version__ = "0.1.0"
