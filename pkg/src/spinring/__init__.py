"""Presentations of log spin canonical rings of stacky curves.

Computes Hilbert functions and series, effective-monoid saturations,
generator/relation degree bounds, and (for genus 0 and 1) certified
presentations: generator degrees, pole orders, and initial ideals of
relations.
"""

from .bounds import (BoundsReport, degree_bounds, is_exceptional,
                     modular_form_bounds)
from .cone import (ConePrimitive, ReducedFractionError, USet,
                   best_lower_approximations, cone_primitives,
                   u_relation_sets)
from .divisor import (GENERIC, TRIVIAL, TWO_TORSION, LogParityError, PointId,
                      QDivisor, Signature, SpinParityError, deg_floor,
                      floor_divisor, general_point, parse_signature,
                      spin_divisor, stacky_point)
from .hilbert import (INFINITE, HilbertProfile, NonTerminatingNumerator,
                      RationalSeries, h0, hilbert_function, hilbert_series,
                      saturation)
from .order import (Block, GradedPLex, Grevlex, Monomial, Variable,
                    VariableTable, compare, degree, pole_order)
from .presentation import (AdmissibilityReport, GeneratorInfo,
                           HypothesisFailure, NotACatalogSignature,
                           NotAdmissible, PreconditionFailure, Presentation,
                           UnsupportedGenus, add_point_sat1, add_point_sat2,
                           add_point_sat3, base_case, check_admissible,
                           minimal_relation_degrees, present, raise_orders)
from .verify import (VerificationReport, generator_necessity,
                     standard_monomial_count, verify_presentation)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
