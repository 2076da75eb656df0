"""Solvers and cross-checks for three nonlinear heat-transfer ODE models."""
from .ansatz import AnsatzFit, WeightChoice, fit, residual_closed, residual_quadrature, u_app
from .errors import BracketError, ConvergenceError, DomainError, HeatfinError, SingularityError
from .models import ModelId, lie_claim_audit, model1_exact, model2_lie_claimed, model3_implicit_solve
from .numerics import Bracket, RootResult, find_brackets, find_root, integrate
from .oracle import SolutionProfile, rk4_model2, rk4_model3, rk4_shoot_model2
from .series import PowerSeries, ShootingResult, shoot_model1, shoot_model2

__version__ = "0.1.0"
