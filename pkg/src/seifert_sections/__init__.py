"""Global surfaces of section for Seifert fibered 3-manifolds."""
from .quotient import zd_quotient
from .seifert_core import (DeleteTrivial, ExceptionalPair, InsertTrivial, InvalidMove,
                           InvalidSeifertData, NormalForm, ParseError, Permute, SeifertData,
                           Twist, apply_move, apply_moves, euler_number, is_isomorphic,
                           normalize, parse_seifert)
from .sections import (Boundary, ClosedUndeterminedComponents, Connected, Interior,
                       IntegralityError, Obstruction, SectionReport, classify_one_section,
                       classify_positive_d_section, d_section_necessary, minimal_positive_d,
                       rh_quotient_chi)
from .sphere import (BranchProfile, Family, SphereFibration, TableRow, admissible_d,
                     rh_hopf_lift_genus, sphere_from_weights)
from .surgery import SurgeryDiagram, rolfsen_twist, surgery_presentation
from .wps import (CurveSpec, WeightedPlane, admissible_degrees, curve_section_correspondence,
                  degree_genus)

__version__ = "0.1.0"
