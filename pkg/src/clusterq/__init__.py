"""Cluster mutation, quiver Grassmannian point counts, and truncated
q-characters at desk scale."""

from .cluster import (ClusterCensus, ClusterError, Seed, enumerate_clusters,
                      f_polynomial, g_vector, principal_seed,
                      reconstruct_variable)
from .graphs import (Bipartite, Graph, OddCycleError, bipartition,
                     build_decorated, build_x_quiver, build_z_quiver,
                     builtin_graph, builtin_setting, frozen_id)
from .grassmann import (BudgetExceeded, CountingPolynomial,
                        NonPolynomialCount, PoincarePolynomial,
                        count_subreps, count_table, counting_polynomial,
                        euler_number, gaussian_binomial, poincare_from_count)
from .laurent import (InexactDivision, LaurentPoly, TropicalMonomial,
                      tropical_eval)
from .qchar import (char_f, char_x, char_x_prime, char_z, condition_c,
                    dim_m_bullet, e_v, e_w, is_l_dominant, kr_factor,
                    kr_factorization_holds, tau_minus, tensor_factorize,
                    truncated_character, v_variable, yvar)
from .quiver import (ExchangeMatrix, Quiver, QuiverError, Vertex, from_matrix,
                     mutate_matrix, mutate_quiver, to_matrix)
from .replab import (CanonicalDecompositionError, DimVector, FpRep, GradedDim,
                     GenericityError, RepError, canonical_decomposition,
                     decompose_indecomposables, direct_sum, dualize,
                     end_basis, euler_form, ext1_dim, ext1_dim_cokernel,
                     generic_ext, generic_hom, generic_rep, generic_self_ext,
                     hom_dim, is_real_schur, is_schur_root, kr_weight,
                     phi_dim, random_rep, reflect, sigma_dim, sigma_rep,
                     simple_w, simple_w_frozen, w_to_decorated_dims, zero_rep)
from .verify import (ModuleMatch, Report, match_module, run_all,
                     variable_profile, verify_common_cluster,
                     verify_hl_correspondence, verify_odd_vanishing,
                     verify_t_system)

__version__ = "0.1.0"
