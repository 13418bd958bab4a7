from .series import TruncatedSeries, add, scale, mul, power, shift, compose, reciprocal, section, evaluate
from .bohr import CertifiedValue, bohr_value, sup_on_circle
from .schwarz import moebius_series, blaschke_schwarz, schur_series, random_schwarz, validate_schwarz
from .theorems import InequalityReport, CHECKS, replay
from .radius import Predicate, RadiusResult, validity_radius, sharpness_search
