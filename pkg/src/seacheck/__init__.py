"""Verification tools for sequential effect algebras."""

from .analysis import (ClosureResult, NotCommutativeError, check_theorem1, closure_step,
                       commutant, generate_sub_sea, inconsistent_cases, is_sub_sea,
                       maximal_commutative_extension, uniqueness_search)
from .core import (Ambiguous, AuditReport, ElementError, FiniteModel, ModelError, ParseError,
                   SupplementError, Violation, audit_ea, leq, ominus, oplus, orthogonal,
                   orthosupplement)
from .models import (E0Element, HSElement, Left, Right, load_finite, make_boolean,
                     make_chain, make_e0, make_horizontal_sum, make_scale, parse_finite)
from .search import enumerate_products
from .sequential import (UniquenessCase, audit_derived, audit_sea, circ, commutes,
                         is_commutative_set, is_sharp, nat_multiple, sharp_via_meet)

__version__ = "0.1.0"
