"""Flat cohomology classes of mu_p and alpha_p torsors over the rational
and elliptic bases, their automorphism actions and reductions."""

from .classes import (A1, A1_STAR, ALPHA, BASE_KINDS, ELLIPTIC, MU, P1, BaseCurve, H1Descriptor,
                      StabilizerVerdict, TorsorClass, act_flip, act_on_class, enumerate_classes,
                      h1_description, normalize_base, normalize_group, parse_class,
                      stabilizer_is_infinite)
from .equations import TorsorEquation, class_function, equation_bipoly, torsor_equation
from .oracle import MAP_CAP, affine_maps, brute_force_stabilizer, is_pth_power
from .reduction import (PAIR_QUOTIENT, PairCase, ReductionResult, component_reduction,
                        elliptic_degree_verdict, multisection_torsion_bound, reduce_rank_one,
                        torsor_pair_classify)
