"""Exact solver for mod/resc parsimony inference via minimum biclique edge covers."""

from .bigraph import (Biclique, BicliqueCover, BipartiteGraph, cover_to_matrices, covers,
                      from_biadjacency, is_biclique, matrices_to_cover, to_biadjacency)
from .boolmat import (BoolMatrix, ModRescPair, load_matrix, mat_otimes, parse_matrix,
                      trivial_solution, vec_otimes, verify_solution)
from .bridge import (CliqueCover, GeneralGraph, biclique_to_clique_cover,
                     clique_to_biclique_cover, saturate)
from .errors import BudgetExhausted, ContractError, InputError
from .kernel import KernelResult, ReductionEvent, RuleKind, Verdict, kernelize, lift
from .maximal import count_bound_check, maximal_bicliques
from .solve import (CoverSolution, SolverConfig, SolveStats, generate_planted, min_cover,
                    solve_branch, solve_modresc, solve_partition, solve_subsets)

__version__ = "0.1.0"
