"""Zig-zag linear search on terrains where the robot's speed depends on where and how it moves."""

from .analysis import CrReport, FeasibilityTrace, TailwindParams, cr_estimate, feasibility_test
from .errors import (BracketError, InvalidGrid, InvalidParameter, InvalidRun, InvalidStrategy,
                     OutOfRange, SearchError, SimulationError, UnsupportedModel)
from .models import Frontier, MotionModel, Run, format_model, opt_time, parse_model, run_time, time_to_point
from .optimizer import OptResult, adversary_oracle, minimize_cr
from .simulator import SearchOutcome, Trajectory, ratio_curve, search_time
from .strategy import Strategy, format_strategy, parse_strategy, turning_points, validate

__version__ = "0.1.0"
