"""Pointwise algebra of curvature tensors: models, reaction terms, frame
optimization, subspace decompositions, and the reaction ODE."""

from .core import (ComplexStructure, CurvatureError, CurvatureTensor, FourFrame,
                   QuaternionTriple, bform, curvature_map, einstein_normalize,
                   einstein_residual, evaluate, holomorphic_sectional,
                   isotropic_curvature, kulkarni_nomizu, model_fubini_study,
                   model_kahler_form, model_quaternionic_projective, model_r0,
                   model_sj, model_sphere, orthogonal_bisectional,
                   project_to_curvature, qform, ricci, rotate_triple,
                   scalar_curvature, standard_complex_structure,
                   standard_quaternion_triple, weyl, zero_tensor)
from .flow import (ConeProbeReport, FlowConfig, FlowError, FlowTrace,
                   cone_preservation_probe, default_horizon, integrate_q_flow,
                   rk4_step, scalar_blowup_oracle)
from .frames import (BoundaryQReport, FirstOrderReport, FrameSearchResult,
                     OptimizerConfig, QKBoundReport, boundary_q_check,
                     max_holomorphic_sectional, maximizer_first_order_check,
                     min_isotropic, min_orthogonal_bisectional,
                     pinching_constant, qk_q_bound_check, sample_frames_min)
from .spaces import (CurvatureSubspace, QKDecomposition, constraint_violation,
                     curvature_space_basis, hyperkahler_subspace,
                     kahler_subspace, project_onto, qk_decompose, sample)
from .tensor_io import load_tensor, save_tensor, write_trace_csv
from .verify import CheckResult, VerificationReport, run_verification_suite

__version__ = "0.1.0"
