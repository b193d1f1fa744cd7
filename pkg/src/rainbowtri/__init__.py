"""Rainbow triangles in edge-colored graphs.

Library and CLI for analyzing rainbow triangles: degree/color queries,
extremal constructions and their recognizer, exact packing, exhaustive
canonical enumeration of colorings, randomized theorem verification, and
stochastic counterexample search.
"""

from .graph import (ColoredGraph, DegreeProfile, GraphBuilder, GraphError,
                    color_degree, colors_between, mono_degree,
                    neighbor_color_classes, validate)
from .triangles import (ProperCycle, Triangle, enumerate_triangles,
                        exists_rainbow_triangle, find_pc_cycle_le4,
                        rainbow_triangles_at)
from .packing import Packing, edge_disjoint_at_vertex, max_disjoint_packing
from .constructions import (Thm10Certificate, check_thm10_properties,
                            gen_biased_high_color_degree, gen_construction2,
                            gen_extremal_thm10, gen_pc_bipartite,
                            gen_random, gen_rainbow_complete, recognize_thm10)
from .bell import bell_number
from .enumeration import enumerate_canonical_colorings
from .theorems import THEOREMS, TheoremSpec, check_conclusion, check_hypothesis
from .verify import VerificationReport, verify_theorem
from .search import SearchConfig, SearchLog, search_counterexample
from .ecg import parse_ecg, write_ecg

__version__ = "0.1.0"

__all__ = [
    "ColoredGraph", "DegreeProfile", "GraphBuilder", "GraphError",
    "validate", "color_degree", "mono_degree", "neighbor_color_classes",
    "colors_between",
    "Triangle", "ProperCycle", "enumerate_triangles", "rainbow_triangles_at",
    "exists_rainbow_triangle", "find_pc_cycle_le4",
    "Packing", "max_disjoint_packing", "edge_disjoint_at_vertex",
    "Thm10Certificate", "gen_construction2", "gen_extremal_thm10",
    "recognize_thm10", "check_thm10_properties", "gen_pc_bipartite",
    "gen_rainbow_complete", "gen_random", "gen_biased_high_color_degree",
    "bell_number", "enumerate_canonical_colorings",
    "THEOREMS", "TheoremSpec", "check_hypothesis", "check_conclusion",
    "VerificationReport", "verify_theorem",
    "SearchConfig", "SearchLog", "search_counterexample",
    "parse_ecg", "write_ecg",
]
