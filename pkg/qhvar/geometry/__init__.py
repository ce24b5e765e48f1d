"""Projective spaces, varieties of PG(3,q^2) and their models in PG(6,q)."""

from .barlotti_cofman import DegenerateLine
from .barlotti_cofman import NotAtInfinity
from .barlotti_cofman import PointAtInfinity
from .barlotti_cofman import SpreadLine
from .barlotti_cofman import enum_spread
from .barlotti_cofman import incidence_oracle
from .barlotti_cofman import model_consistency
from .barlotti_cofman import psi
from .barlotti_cofman import psi_inverse
from .barlotti_cofman import spread_line
from .closed_forms import bm_unital_count
from .closed_forms import bm_variety_count
from .hypersurfaces import Hypersurface6
from .hypersurfaces import HypersurfaceTag
from .hypersurfaces import bprime
from .hypersurfaces import bprime_member
from .hypersurfaces import c3eps
from .hypersurfaces import c3eps_member
from .hypersurfaces import fbar
from .hypersurfaces import fbar_member
from .hypersurfaces import hermitian_cone
from .hypersurfaces import infinity_quadric
from .hypersurfaces import union_of_lines_check
from .projective import DimensionMismatch
from .projective import EqualPoints
from .projective import Hyperplane
from .projective import ProjPoint
from .projective import ZeroVector
from .projective import count_points
from .projective import enum_hyperplanes
from .projective import enum_points
from .projective import incident
from .projective import line_through
from .projective import normalize
from .quadrics import DegenerateQuadric
from .quadrics import QuadricMatrix
from .quadrics import base_matrix
from .quadrics import classify_quadric
from .varieties import BMParams
from .varieties import BTParams
from .varieties import DomainError
from .varieties import InvalidParams
from .varieties import NotHermitianMatrix
from .varieties import SingularMatrix
from .varieties import VarietySpec
from .varieties import VarietyTag
from .varieties import bab_member
from .varieties import bm_validate
from .varieties import bt_params
from .varieties import delta_eps
from .varieties import expected_histogram
from .varieties import expected_intersection_sizes
from .varieties import fcone_member
from .varieties import gamma_eps
from .varieties import heps_points
from .varieties import hermitian_member
from .varieties import least_valid_params
from .varieties import mab_points
from .varieties import tangent_hermitian_matrix
from .varieties import veps_member
