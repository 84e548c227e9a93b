"""Exact graded-ring kernel and verification CLI for annihilator certificates."""

from .ring import INFINITY, AmbientMismatch, ParseError, Polynomial, Ring
from .groebner import (BudgetExceeded, GroebnerBasis, MembershipCertificate,
                       StepBudget, buchberger, colon_ideal, ideal_member,
                       normal_form, ring_map_kernel)
from .linalg import PieceTooLarge, linear_membership
from .presentations import (AnnihilatorCertificate, GradedPresentation,
                            PresentationError, adjoin_root, load_presentation,
                            present_ring, quotient_member)

__version__ = "0.1.0"
