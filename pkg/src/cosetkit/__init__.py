"""Cayley coset digraph connectivity toolkit."""

from .atoms import (AtomAnalysis, AtomCandidate, AtomTheoryReport,
                    base_atom_candidate, kappa_group_theoretic,
                    subgroup_atom_scan, verify_atom_theory)
from .coset import (CosetDigraph, CosetDigraphSpec, build, dedupe_generators,
                    generation_connectivity, labeled, transpose_spec,
                    verify_automorphism)
from .cp import (CPParams, cp_build, cp_degree_profile, cp_spec, gamma,
                 gamma_label, verify_neighbor_multiplier, verify_prefix_structure)
from .digraph import (AtomSet, CutCertificate, Digraph, atoms_bruteforce,
                      e_atoms_bruteforce, edge_connectivity, is_strongly_connected,
                      neighbor_set, out_edge_count, strongly_connected_components,
                      transpose, vertex_connectivity, vertex_connectivity_transitive)
from .errors import (CapExceeded, CompleteDigraphError, CrossCheckError,
                     GroupError, NotStronglyConnected, SpecError)
from .perms import (GroupContext, Permutation, SubgroupHandle,
                    canonical_coset_rep, compose, double_coset,
                    double_coset_index, enumerate_closure, inverse,
                    left_coset_reps, normalizes, parse_cycles, print_cycles,
                    subgroup_generated, trivial_subgroup)
from .theorems import (Hypothesis, HypothesisReport, check_decomposition,
                       check_hierarchical_gen, check_hierarchical_gen_c,
                       check_tower, hierarchical_order_search, is_minimal,
                       oracle_kappa, sub_instance, verify_edge_connectivity,
                       verify_hierarchical_cayley)

__version__ = "0.1.0"
