"""Exact symbolic tensor calculus for Weyl connections on homogeneous
Hermitian frames, with twistor-space pseudo-harmonicity checks.

The public surface re-exports the main entry points of each module; see the
README for the geometry conventions and the command line tool.
"""

from .polyalg import (PolynomialParseError, Ring, RingMismatchError, Scalar,
                      normalize_up_to_unit, normalized_system)
from .frame import (Bivector, Endo, FrameError, FrameSpec, SpecFormatError,
                    ThreeForm, TwoForm, builtin, d_oneform, d_twoform,
                    eval_on_bivector, load_spec, load_spec_file, sharp)
from .connection import (Connection, cov_deriv_endo, cov_deriv_oneform,
                         levi_civita, reconstruct_weyl_form,
                         second_cov_deriv_endo, weyl)
from .curvature import (Curvature, curvature, identity_suite, phi_tensor,
                        ricci, ricci_formula_check, star_ricci,
                        weyl_curvature_via_formula)
from .hermitian import (GateError, LeeData, fundamental_form, lck_check,
                        lee_form, nabla_j_checks, nijenhuis, require_gate)
from .twistor import (TwistorEval, VerticalBasis, VTraceData,
                      curvature_pairing_with_dj_check, dprime_eval, g_fiber,
                      h_trace, vertical_antisymmetry_check, fiber_pairing_check, v_trace,
                      vertical_basis, wedge_iso)
from .pseudoharmonic import (AssignmentVerdict, ConditionReport, condition_i,
                             condition_ii, conditions, dim4,
                             equivalence_check, verify_assignment)

__version__ = "0.1.0"
