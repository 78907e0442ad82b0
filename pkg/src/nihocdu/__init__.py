"""c-differential uniformity of power functions over GF(2^n), with a
structural solver for the Niho-type family x^(s(2^m-1)+1)."""
from .field import FieldError, FieldSpec, make_field, mod_inverse
from .cdiff import PowerFunc, SpectrumReport, c_derivative_count, cdu_general, count_a0, spectrum
from .niho import NihoParams, make_params, structural_count, theorem1_uniformity

__version__ = "0.1.0"
