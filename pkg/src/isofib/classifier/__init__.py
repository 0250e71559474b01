"""Case decisions for isotrivial fibrations with infinite birational
automorphism group over the base."""

from .datum import (ACTION_KINDS, BASE_KINDS, ELLIPTIC_BASE, OTHER_BASE, P1_FROM_A1, P1_FROM_A1_STAR,
                    P1_TRIVIAL, EllipticFibre, FibrationDatum, HighGenusFibre, normalize_base_kind)
from .decide import (D_II_FIBRES, GENUS_ONE_CASES, HIGH_GENUS_CASES, ClassificationResult,
                     case_hypotheses, citation_for, classify, classify_genus_one, classify_high_genus,
                     kappa_from_base, relative_aut_verdict, result_from_json, validate_datum)
from .kodaira import NEG_INF, SYMBOLS, UNASSERTED, KodairaType, SingularFibre
